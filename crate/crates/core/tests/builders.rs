mod common;

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use common::{compositions_by_total, example_graph};
use decomp::builders::{
    bounded_words, free_decomposition, from_partial_category, from_partial_monoid, graph_paths, length_map, nerve,
    twisted_arrow, DirectedGraph, FiniteCategory, OuterFaceComplex, PartialMonoid,
};
use decomp::criteria::{check_culf, check_decomposition, check_segal};
use decomp::delta::SimplexMap;
use decomp::{Error, SimplicialMap, TruncatedSSet};

fn strings(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

fn counts(x: &TruncatedSSet) -> Vec<usize> {
    (0..=x.level()).map(|n| x.cell_count(n)).collect()
}

#[test]
fn small_nerves() {
    assert_eq!(counts(&nerve(&FiniteCategory::terminal(), 3).unwrap()), vec![1; 4]);
    let arrow = nerve(&FiniteCategory::arrow(), 3).unwrap();
    assert_eq!(arrow.cell_count(1), 3);
    // chains in [1] of length n are monotone maps [n] -> [1]
    assert_eq!(counts(&arrow), vec![2, 3, 4, 5]);
    let chain = nerve(&FiniteCategory::chain(2), 3).unwrap();
    assert_eq!(counts(&chain), vec![3, 6, 10, 15]);
}

#[test]
fn twisted_arrow_objects() {
    assert_eq!(twisted_arrow(&FiniteCategory::terminal()).unwrap().objects().len(), 1);
    let arrow = FiniteCategory::arrow();
    let tw = twisted_arrow(&arrow).unwrap();
    let objects: BTreeSet<&String> = tw.objects().iter().collect();
    let arrows: BTreeSet<&String> = arrow.morphisms().iter().map(|m| &m.name).collect();
    assert_eq!(objects, arrows);
    assert_eq!(objects.len(), 3);
}

#[test]
fn partial_monoid_examples() {
    let trivial = PartialMonoid::new(strings(&["1"]), 0, &[]).unwrap();
    assert_eq!(counts(&from_partial_monoid(&trivial, 3).unwrap()), vec![1; 4]);

    let powers = from_partial_monoid(&PartialMonoid::truncated_powers(2), 3).unwrap();
    assert!(check_decomposition(&powers).unwrap().holds());
    assert!(!check_segal(&powers).unwrap().holds());

    // a total monoid gives exactly the nerve
    let group = PartialMonoid::new(strings(&["g0", "g1"]), 0, &[(1, 1, 0)]).unwrap();
    let c = FiniteCategory::cyclic_group(2);
    assert_eq!(from_partial_monoid(&group, 4).unwrap(), nerve(&c, 4).unwrap());
    assert!(check_segal(&nerve(&c, 4).unwrap()).unwrap().holds());
}

#[test]
fn partial_category_reductions() {
    for (name, m) in common::partial_monoids() {
        assert_eq!(
            from_partial_category(&m.to_partial_category(), 3).unwrap(),
            from_partial_monoid(&m, 3).unwrap(),
            "{name}"
        );
    }
    for (name, c) in common::categories() {
        assert_eq!(from_partial_category(&c.to_partial(), 3).unwrap(), nerve(&c, 3).unwrap(), "{name}");
    }
    let x = from_partial_category(&common::partial_category(), 4).unwrap();
    assert!(check_decomposition(&x).unwrap().holds());
    assert!(!check_segal(&x).unwrap().holds());
}

#[test]
fn partial_monoid_axioms_are_enforced() {
    let err = PartialMonoid::new(strings(&["1", "a", "b"]), 0, &[(1, 1, 2), (2, 1, 1)]).unwrap_err();
    assert!(matches!(err, Error::Precondition(_)), "{err}");
    let many: Vec<String> = (0..40).map(|k| format!("x{k}")).collect();
    assert!(matches!(PartialMonoid::new(many.clone(), 0, &[]), Err(Error::Precondition(_))));
    assert!(PartialMonoid::with_cap(many, 0, &[], 64).is_ok());
}

#[test]
fn terminal_complex_counts() {
    for bound in 0..=4 {
        let x = free_decomposition(&OuterFaceComplex::terminal(bound), 3).unwrap();
        assert_eq!(x.cell_count(0), 1);
        assert_eq!(x.cell_count(1), bound + 1);
        assert_eq!(x.cell_count(2), (bound + 1) * (bound + 2) / 2);
    }
}

#[test]
fn terminal_complex_is_truncated_natural_numbers() {
    // the partial monoid of powers of one letter, products defined up to the
    // bound, is the truncation of the nerve of (N, +)
    for bound in 0..=3 {
        let free = Arc::new(free_decomposition(&OuterFaceComplex::terminal(bound), 4).unwrap());
        let powers = Arc::new(from_partial_monoid(&PartialMonoid::truncated_powers(bound), 4).unwrap());
        let rename = |n: usize, cell: &str| {
            if n == 0 {
                return "*".to_string();
            }
            let inner = cell.trim_start_matches("*(").trim_end_matches(')');
            inner
                .split(',')
                .map(|l| match l.parse::<usize>().unwrap() {
                    0 => "1".to_string(),
                    k => "a".repeat(k),
                })
                .collect::<Vec<_>>()
                .join("|")
        };
        let iso = SimplicialMap::from_names(free, powers, rename).unwrap();
        assert!(iso.is_isomorphism(), "bound {bound}");
    }
}

#[test]
fn word_counts() {
    let x = free_decomposition(&bounded_words(&["a", "b"], 2).unwrap(), 3).unwrap();
    assert_eq!(x.cell_count(1), 7);
    assert_eq!(x.cell_count(2), 17);

    let empty = bounded_words(&[], 3).unwrap();
    assert_eq!(empty.grade(0).len(), 1);
    assert!((1..=3).all(|m| empty.grade(m).is_empty()));

    for letters in [vec!["a"], vec!["a", "b"], vec!["x", "y", "z"]] {
        let a = bounded_words(&letters, 3).unwrap();
        for m in 0..=3 {
            assert_eq!(a.grade(m).len(), letters.len().pow(m as u32));
        }
    }
}

#[test]
fn free_cardinality_law() {
    for (name, a) in common::complexes() {
        let x = free_decomposition(&a, 4).unwrap();
        for k in 0..=4 {
            let expected: usize = compositions_by_total(k, a.bound())
                .iter()
                .map(|(&total, &count)| count * a.grade(total).len())
                .sum();
            assert_eq!(x.cell_count(k), expected, "{name}, level {k}");
        }
    }
}

/// Paths of `m` edges, by brute force over all edge sequences.
fn path_oracle(g: &DirectedGraph, m: usize) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    let e = g.edges.len();
    let total = e.pow(m as u32);
    for code in 0..total {
        let mut seq = Vec::with_capacity(m);
        let mut c = code;
        for _ in 0..m {
            seq.push(c % e);
            c /= e;
        }
        if seq.windows(2).all(|w| g.edges[w[0]].target == g.edges[w[1]].source) {
            out.insert(seq);
        }
    }
    out
}

#[test]
fn example_graph_paths() {
    let g = example_graph();
    let a = graph_paths(&g, 3).unwrap();
    let grade2: BTreeSet<&str> = a.grade(2).iter().map(String::as_str).collect();
    assert_eq!(grade2, BTreeSet::from(["ab", "ac", "bd", "cd", "da", "de", "ea", "ee"]));
    assert!(grade2.contains("ac") && grade2.contains("ee"));
    assert!(!grade2.contains("bc") && !grade2.contains("eb"));
    assert_eq!(a.grade(0), &strings(&["u", "v", "w"])[..]);
    for m in 1..=3 {
        let names: BTreeSet<String> = path_oracle(&g, m)
            .into_iter()
            .map(|seq| seq.iter().map(|&k| g.edges[k].name.as_str()).collect::<String>())
            .collect();
        let built: BTreeSet<String> = a.grade(m).iter().cloned().collect();
        assert_eq!(built, names, "grade {m}");
    }
    for (k, e) in g.edges.iter().enumerate() {
        assert_eq!(a.grade(0)[a.d_bot(1)[k]], e.target);
        assert_eq!(a.grade(0)[a.d_top(1)[k]], e.source);
    }
}

#[test]
fn graph_without_edges() {
    let g = DirectedGraph::new(&["p", "q"], &[]);
    let a = graph_paths(&g, 2).unwrap();
    assert_eq!(a.grade(0).len(), 2);
    assert!(a.grade(1).is_empty() && a.grade(2).is_empty());
    let x = free_decomposition(&a, 3).unwrap();
    assert_eq!(counts(&x), vec![2, 2, 2, 2]);
}

#[test]
fn length_maps() {
    let t = OuterFaceComplex::terminal(2);
    let f = length_map(&t, 3).unwrap();
    assert!(f.is_isomorphism());
    assert!(f.components().iter().all(|c| c.iter().enumerate().all(|(i, &j)| i == j)));

    let f = length_map(&bounded_words(&["a"], 2).unwrap(), 3).unwrap();
    for (k, cell) in f.source().cells(1).iter().enumerate() {
        let word = cell.split('(').next().unwrap();
        let length = if word == "ε" { 0 } else { word.len() };
        assert_eq!(f.target().cells(1)[f.component(1)[k]], format!("*({length})"));
    }
    let paths = graph_paths(&example_graph(), 2).unwrap();
    assert!(check_culf(&length_map(&paths, 4).unwrap()).unwrap().holds());
}

/// The Segal condition on the part of the object the bound cannot see: every
/// chain of `n` composable edges whose lengths sum to at most the bound has
/// exactly one filler in `X_n`.
fn bounded_segal_failures(a: &OuterFaceComplex, level: usize) -> (usize, usize) {
    let f = length_map(a, level).unwrap();
    let x = f.source();
    let length: Vec<usize> = f.component(1)
        .iter()
        .map(|&t| f.target().cells(1)[t].trim_start_matches("*(").trim_end_matches(')').parse().unwrap())
        .collect();
    let (mut inside, mut outside) = (0, 0);
    for n in 2..=level {
        let spine: Vec<Vec<usize>> =
            (0..n).map(|i| x.induced_map(&SimplexMap::inert(1, n, i).unwrap()).unwrap()).collect();
        let mut fillers: HashMap<Vec<usize>, usize> = HashMap::new();
        for c in 0..x.cell_count(n) {
            *fillers.entry(spine.iter().map(|t| t[c]).collect()).or_default() += 1;
        }
        // enumerate composable chains of edges directly
        let mut chains: Vec<Vec<usize>> = (0..x.cell_count(1)).map(|e| vec![e]).collect();
        for _ in 1..n {
            chains = chains
                .into_iter()
                .flat_map(|ch| {
                    let last = *ch.last().unwrap();
                    (0..x.cell_count(1))
                        .filter(move |&e| x.face(1, 0)[last] == x.face(1, 1)[e])
                        .map(move |e| {
                            let mut next = ch.clone();
                            next.push(e);
                            next
                        })
                })
                .collect();
        }
        for ch in chains {
            let count = fillers.get(&ch).copied().unwrap_or(0);
            let total: usize = ch.iter().map(|&e| length[e]).sum();
            if total <= a.bound() {
                inside += usize::from(count != 1);
            } else {
                outside += usize::from(count != 1);
            }
        }
    }
    (inside, outside)
}

#[test]
fn free_monoid_and_free_category_are_segal_within_the_bound() {
    let words = bounded_words(&["a", "b"], 3).unwrap();
    let (inside, outside) = bounded_segal_failures(&words, 4);
    assert_eq!(inside, 0);
    assert!(outside > 0);
    assert!(!check_segal(&free_decomposition(&words, 4).unwrap()).unwrap().holds());

    let paths = graph_paths(&example_graph(), 3).unwrap();
    let (inside, outside) = bounded_segal_failures(&paths, 4);
    assert_eq!(inside, 0);
    assert!(outside > 0);
}

#[test]
fn builder_outputs_validate() {
    for i in common::corpus_at(&[3]) {
        assert!(i.x.validate().holds(), "{}", i.name);
    }
    for (name, c) in common::categories() {
        assert!(nerve(&twisted_arrow(&c).unwrap(), 3).unwrap().validate().holds(), "{name}");
    }
}
