//! Shared corpus and brute-force oracles for the integration tests.
#![allow(dead_code)]

pub mod exact;

use std::collections::{HashMap, HashSet};

use decomp::builders::{
    bounded_words, free_decomposition, ordered_complex, from_partial_category, from_partial_monoid, graph_paths, nerve,
    simplex_boundary, CategorySpec, DirectedGraph, FiniteCategory, OuterFaceComplex, PartialCategory,
    PartialMonoid,
};
use decomp::delta::SimplexMap;
use decomp::TruncatedSSet;

pub struct Instance {
    pub name: String,
    pub x: TruncatedSSet,
    /// Known answer for the decomposition property, where one is known a priori.
    pub expected_decomposition: Option<bool>,
}

fn s(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

fn triple(a: &str, b: &str, c: &str) -> [String; 3] {
    [a.to_string(), b.to_string(), c.to_string()]
}

/// Two parallel arrows `f, g : 0 -> 1`.
pub fn parallel_pair() -> FiniteCategory {
    FiniteCategory::from_spec(&CategorySpec {
        objects: s(&["0", "1"]),
        morphisms: vec![triple("f", "0", "1"), triple("g", "0", "1")],
        identities: None,
        composites: vec![],
    })
    .unwrap()
}

/// The commutative square `[1] x [1]`.
pub fn commutative_square() -> FiniteCategory {
    FiniteCategory::from_spec(&CategorySpec {
        objects: s(&["00", "01", "10", "11"]),
        morphisms: vec![
            triple("h0", "00", "10"),
            triple("v0", "00", "01"),
            triple("h1", "01", "11"),
            triple("v1", "10", "11"),
            triple("diag", "00", "11"),
        ],
        identities: None,
        composites: vec![triple("h0", "v1", "diag"), triple("v0", "h1", "diag")],
    })
    .unwrap()
}

/// One object with an idempotent `e`.
pub fn idempotent_monoid() -> FiniteCategory {
    FiniteCategory::from_monoid(&["1", "e"], 0, &[vec![0, 1], vec![1, 1]]).unwrap()
}

pub fn categories() -> Vec<(&'static str, FiniteCategory)> {
    vec![
        ("terminal category", FiniteCategory::terminal()),
        ("arrow category", FiniteCategory::arrow()),
        ("chain [2]", FiniteCategory::chain(2)),
        ("chain [3]", FiniteCategory::chain(3)),
        ("chain [4]", FiniteCategory::chain(4)),
        ("cyclic group of order 2", FiniteCategory::cyclic_group(2)),
        ("parallel pair", parallel_pair()),
        ("commutative square", commutative_square()),
        ("idempotent monoid", idempotent_monoid()),
    ]
}

pub fn partial_monoids() -> Vec<(&'static str, PartialMonoid)> {
    vec![
        ("trivial monoid", PartialMonoid::new(s(&["1"]), 0, &[]).unwrap()),
        ("powers of a up to 2", PartialMonoid::truncated_powers(2)),
        ("powers of a up to 4", PartialMonoid::truncated_powers(4)),
        (
            "cyclic group of order 2 as partial monoid",
            PartialMonoid::new(s(&["1", "g"]), 0, &[(1, 1, 0)]).unwrap(),
        ),
        ("two letters, no products", PartialMonoid::new(s(&["1", "a", "b"]), 0, &[]).unwrap()),
        (
            "two orthogonal idempotents",
            PartialMonoid::new(s(&["1", "e", "f"]), 0, &[(1, 1, 1), (2, 2, 2)]).unwrap(),
        ),
    ]
}

/// Objects `x, y`; `f : x -> y`, `e : y -> y` with `e e = e` and `e f` undefined.
pub fn partial_category() -> PartialCategory {
    PartialCategory::from_spec(&CategorySpec {
        objects: s(&["x", "y"]),
        morphisms: vec![triple("f", "x", "y"), triple("e", "y", "y")],
        identities: None,
        composites: vec![triple("e", "e", "e")],
    })
    .unwrap()
}

/// Vertices `u, v, w`; `a : w -> u`, `b, c : u -> v`, `d : v -> w`, `e : w -> w`.
pub fn example_graph() -> DirectedGraph {
    DirectedGraph::new(
        &["u", "v", "w"],
        &[("a", "w", "u"), ("b", "u", "v"), ("c", "u", "v"), ("d", "v", "w"), ("e", "w", "w")],
    )
}

pub fn acyclic_graph() -> DirectedGraph {
    DirectedGraph::new(&["x", "y", "z"], &[("p", "x", "y"), ("q", "y", "z"), ("r", "x", "z")])
}

pub fn complexes() -> Vec<(&'static str, OuterFaceComplex)> {
    vec![
        ("terminal complex M=2", OuterFaceComplex::terminal(2)),
        ("terminal complex M=3", OuterFaceComplex::terminal(3)),
        ("words {a,b} N=2", bounded_words(&["a", "b"], 2).unwrap()),
        ("words {a} N=3", bounded_words(&["a"], 3).unwrap()),
        ("words {a,b} N=1", bounded_words(&["a", "b"], 1).unwrap()),
        ("example graph paths M=2", graph_paths(&example_graph(), 2).unwrap()),
        ("acyclic graph paths M=2", graph_paths(&acyclic_graph(), 2).unwrap()),
    ]
}

/// The full corpus: every object at levels 3, 4 and 5.
pub fn corpus() -> Vec<Instance> {
    corpus_at(&[3, 4, 5])
}

pub fn corpus_at(levels: &[usize]) -> Vec<Instance> {
    let mut out = Vec::new();
    for &l in levels {
        for (name, c) in categories() {
            out.push(Instance { name: format!("nerve of {name}, L={l}"), x: nerve(&c, l).unwrap(), expected_decomposition: Some(true) });
        }
        for (name, m) in partial_monoids() {
            out.push(Instance {
                name: format!("{name}, L={l}"),
                x: from_partial_monoid(&m, l).unwrap(),
                expected_decomposition: Some(true),
            });
        }
        out.push(Instance {
            name: format!("partial category with undefined composite, L={l}"),
            x: from_partial_category(&partial_category(), l).unwrap(),
            expected_decomposition: Some(true),
        });
        for (name, a) in complexes() {
            out.push(Instance {
                name: format!("free decomposition on {name}, L={l}"),
                x: free_decomposition(&a, l).unwrap(),
                expected_decomposition: Some(true),
            });
        }
        out.push(Instance {
            name: format!("boundary of the 3-simplex, L={l}"),
            x: simplex_boundary(3, l).unwrap(),
            expected_decomposition: Some(false),
        });
        // fails only from level 4 on
        out.push(Instance {
            name: format!("boundary of the 4-simplex, L={l}"),
            x: simplex_boundary(4, l).unwrap(),
            expected_decomposition: Some(l < 4),
        });
        out.push(Instance {
            name: format!("triangles 012 and 023, L={l}"),
            x: ordered_complex(4, &[vec![0, 1, 2], vec![0, 2, 3]], l).unwrap(),
            expected_decomposition: Some(false),
        });
        out.push(Instance {
            name: format!("triangles 013 and 123, L={l}"),
            x: ordered_complex(4, &[vec![0, 1, 3], vec![1, 2, 3]], l).unwrap(),
            expected_decomposition: Some(false),
        });
    }
    out
}

/// All elements of `B x_D C`, by nested loops.
pub fn fiber_product(right: &[usize], bottom: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (b, &rb) in right.iter().enumerate() {
        for (c, &qc) in bottom.iter().enumerate() {
            if rb == qc {
                out.push((b, c));
            }
        }
    }
    out
}

/// Pullback by definition: the comparison map is injective and its image is
/// the whole fiber product.
pub fn is_pullback_oracle(top: &[usize], left: &[usize], right: &[usize], bottom: &[usize]) -> bool {
    let fp = fiber_product(right, bottom);
    let image: Vec<(usize, usize)> = top.iter().zip(left).map(|(&b, &c)| (b, c)).collect();
    let distinct: HashSet<&(usize, usize)> = image.iter().collect();
    distinct.len() == image.len() && image.len() == fp.len() && fp.iter().all(|p| distinct.contains(p))
}

/// Number of `k`-tuples of naturals summing to at most `bound`, grouped by sum.
pub fn compositions_by_total(k: usize, bound: usize) -> HashMap<usize, usize> {
    let mut counts = HashMap::new();
    fn go(k: usize, remaining: usize, total: usize, counts: &mut HashMap<usize, usize>) {
        if k == 0 {
            *counts.entry(total).or_default() += 1;
            return;
        }
        for l in 0..=remaining {
            go(k - 1, remaining - l, total + l, counts);
        }
    }
    go(k, bound, 0, &mut counts);
    counts
}

/// All weakly monotone value sequences `[n] -> [m]`, built without the library.
pub fn monotone_maps(n: usize, m: usize) -> Vec<SimplexMap> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n + 1);
    fn go(n: usize, m: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<SimplexMap>) {
        if cur.len() == n + 1 {
            out.push(SimplexMap::new(cur.clone(), m).unwrap());
            return;
        }
        for v in lo..=m {
            cur.push(v);
            go(n, m, v, cur, out);
            cur.pop();
        }
    }
    go(n, m, 0, &mut cur, &mut out);
    out
}

pub fn compose_values(g: &SimplexMap, f: &SimplexMap) -> SimplexMap {
    SimplexMap::new(f.values().iter().map(|&v| g.values()[v]).collect(), g.target_rank()).unwrap()
}
