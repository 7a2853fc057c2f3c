mod common;

use std::sync::Arc;

use common::corpus;
use decomp::builders::{bounded_words, free_decomposition, length_map, nerve, twisted_arrow, twisted_arrow_comparison};
use decomp::criteria::{check_culf, check_decomposition, check_lower_2segal, check_segal, check_upper_2segal};
use decomp::operators::{
    check_retract_identities, dec_bot, dec_top, map_decbot_to_sd, map_dectop_op_to_sd, sd, sd_level,
};
use decomp::SimplicialMap;

#[test]
fn path_space_criterion() {
    let mut mismatches = Vec::new();
    for i in corpus() {
        let (top, _) = dec_top(&i.x).unwrap();
        let (bot, _) = dec_bot(&i.x).unwrap();
        let upper = check_upper_2segal(&i.x).unwrap();
        let lower = check_lower_2segal(&i.x).unwrap();
        let top_segal = check_segal(&top).unwrap();
        let bot_segal = check_segal(&bot).unwrap();
        if upper.holds() != top_segal.holds() || lower.holds() != bot_segal.holds() {
            mismatches.push(i.name.clone());
        }
        let both = top_segal.holds() && bot_segal.holds();
        assert_eq!(check_decomposition(&i.x).unwrap().holds(), both, "{}", i.name);
    }
    assert_eq!(mismatches, Vec::<String>::new());
}

#[test]
fn edgewise_criterion_at_level_five() {
    let instances: Vec<_> = corpus().into_iter().filter(|i| i.x.level() >= 5).collect();
    assert!(!instances.is_empty());
    for i in instances {
        let z = sd(&i.x).unwrap();
        // compare at the depth the subdivision can see
        let depth = 2 * z.level() + 1;
        let x = i.x.truncate(depth).unwrap();
        assert_eq!(
            check_decomposition(&x).unwrap().holds(),
            check_segal(&z).unwrap().holds(),
            "{}",
            i.name
        );
    }
}

#[test]
fn sd_levels() {
    assert_eq!(sd_level(5), 2);
    assert_eq!(sd_level(1), 0);
    let x = nerve(&decomp::builders::FiniteCategory::arrow(), 5).unwrap();
    assert_eq!(sd(&x).unwrap().level(), 2);
}

#[test]
fn decalage_projections_are_culf_on_decomposition_spaces() {
    for i in corpus() {
        if !check_decomposition(&i.x).unwrap().holds() {
            continue;
        }
        let (_, top) = dec_top(&i.x).unwrap();
        let (_, bot) = dec_bot(&i.x).unwrap();
        assert!(check_culf(&top).unwrap().holds(), "{} (top)", i.name);
        assert!(check_culf(&bot).unwrap().holds(), "{} (bottom)", i.name);
    }
}

#[test]
fn length_maps_are_culf() {
    for (name, a) in common::complexes() {
        for l in [3, 4, 5] {
            let f = length_map(&a, l).unwrap();
            assert!(f.validate().holds(), "{name}");
            assert!(check_culf(&f).unwrap().holds(), "{name} L={l}");
        }
    }
}

#[test]
fn operator_outputs_validate() {
    for i in corpus() {
        let (top, p) = dec_top(&i.x).unwrap();
        let (bot, q) = dec_bot(&i.x).unwrap();
        assert!(top.validate().holds() && bot.validate().holds(), "{}", i.name);
        assert!(p.validate().holds() && q.validate().holds(), "{}", i.name);
        assert!(sd(&i.x).unwrap().validate().holds(), "{}", i.name);
    }
}

#[test]
fn decalage_duality_and_sd_self_duality() {
    for i in corpus() {
        let op = i.x.opposite();
        assert_eq!(dec_top(&i.x).unwrap().0.opposite(), dec_bot(&op).unwrap().0, "{}", i.name);
        assert_eq!(sd(&i.x).unwrap(), sd(&op).unwrap(), "{}", i.name);
    }
}

#[test]
fn comparison_maps_and_retracts() {
    for i in corpus() {
        let f = map_decbot_to_sd(&i.x).unwrap();
        let g = map_dectop_op_to_sd(&i.x).unwrap();
        assert!(f.validate().holds(), "{}", i.name);
        assert!(g.validate().holds(), "{}", i.name);
        assert_eq!(f.component(0), (0..i.x.cell_count(1)).collect::<Vec<_>>());
        if f.level() >= 1 {
            assert_eq!(f.component(1), i.x.degeneracy(2, 0));
        }
        assert!(check_retract_identities(&i.x, 3).unwrap().holds(), "{}", i.name);
    }
}

#[test]
fn twisted_arrow_identity() {
    for (name, c) in common::categories() {
        for l in [3, 5] {
            let iso = twisted_arrow_comparison(&c, l).unwrap();
            assert!(iso.is_isomorphism(), "{name} L={l}");
            let z = sd(&nerve(&c, l).unwrap()).unwrap();
            let tw = nerve(&twisted_arrow(&c).unwrap(), z.level()).unwrap();
            for n in 0..=z.level() {
                assert_eq!(z.cell_count(n), tw.cell_count(n), "{name} level {n}");
            }
        }
    }
}

#[test]
fn words_subdivision_is_segal() {
    let x = free_decomposition(&bounded_words(&["a", "b"], 2).unwrap(), 5).unwrap();
    assert!(check_segal(&sd(&x).unwrap()).unwrap().holds());
    assert!(check_segal(&dec_bot(&x).unwrap().0).unwrap().holds());
    assert!(!check_segal(&x).unwrap().holds());
}

#[test]
fn identity_is_culf() {
    let x = Arc::new(nerve(&decomp::builders::FiniteCategory::chain(2), 3).unwrap());
    assert!(check_culf(&SimplicialMap::identity(x)).unwrap().holds());
}
