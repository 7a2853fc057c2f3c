//! Outer face complexes and the free decomposition spaces they generate.
//!
//! An outer face complex is a graded set `A_0, ..., A_M` with two maps
//! `d_bot, d_top : A_m -> A_{m-1}` for `m >= 1` that commute with each other
//! for `m >= 2`. Its free decomposition space has as `k`-cells the pairs
//! `(a, (l_1, ..., l_k))` with `a` in `A_{l_1 + ... + l_k}`.

use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::delta::Composition;
use crate::error::{Error, Result};
use crate::sset::{SimplicialMap, TruncatedSSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OuterFaceComplex {
    /// Element names per grade.
    grades: Vec<Vec<String>>,
    /// `d_bot[m - 1]` is the table `A_m -> A_{m-1}`.
    d_bot: Vec<Vec<usize>>,
    d_top: Vec<Vec<usize>>,
}

impl OuterFaceComplex {
    pub fn new(grades: Vec<Vec<String>>, d_bot: Vec<Vec<usize>>, d_top: Vec<Vec<usize>>) -> Result<Self> {
        let c = Self { grades, d_bot, d_top };
        c.check()?;
        Ok(c)
    }

    /// Re-runs the structural checks, for values obtained by deserialization.
    pub fn check(&self) -> Result<()> {
        if self.grades.is_empty() {
            return Err(Error::Structural("grade 0 must be present".into()));
        }
        let m = self.grades.len() - 1;
        if self.d_bot.len() != m || self.d_top.len() != m {
            return Err(Error::Structural(format!("expected {m} tables for each outer face")));
        }
        for (g, names) in self.grades.iter().enumerate() {
            let mut seen = std::collections::HashSet::new();
            if let Some(dup) = names.iter().find(|n| !seen.insert(n.as_str())) {
                return Err(Error::Structural(format!("duplicate element {dup:?} in grade {g}")));
            }
        }
        for (which, tables) in [("d_bot", &self.d_bot), ("d_top", &self.d_top)] {
            for (k, table) in tables.iter().enumerate() {
                let g = k + 1;
                if table.len() != self.grades[g].len() || table.iter().any(|&v| v >= self.grades[g - 1].len()) {
                    return Err(Error::Structural(format!("{which} on grade {g} is malformed")));
                }
            }
        }
        for g in 2..=m {
            for a in 0..self.grades[g].len() {
                let bt = self.d_top[g - 2][self.d_bot[g - 1][a]];
                let tb = self.d_bot[g - 2][self.d_top[g - 1][a]];
                if bt != tb {
                    return Err(Error::Precondition(format!(
                        "outer faces do not commute on {:?} in grade {g}",
                        self.grades[g][a]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn bound(&self) -> usize {
        self.grades.len() - 1
    }

    pub fn grade(&self, m: usize) -> &[String] {
        &self.grades[m]
    }

    pub fn grades(&self) -> &[Vec<String>] {
        &self.grades
    }

    /// `d_bot : A_m -> A_{m-1}`.
    pub fn d_bot(&self, m: usize) -> &[usize] {
        &self.d_bot[m - 1]
    }

    /// `d_top : A_m -> A_{m-1}`.
    pub fn d_top(&self, m: usize) -> &[usize] {
        &self.d_top[m - 1]
    }

    /// One element in each grade `0..=bound`.
    pub fn terminal(bound: usize) -> Self {
        Self {
            grades: vec![vec!["*".into()]; bound + 1],
            d_bot: vec![vec![0]; bound],
            d_top: vec![vec![0]; bound],
        }
    }

    fn iterate(&self, top: bool, m: usize, steps: usize, mut a: usize) -> usize {
        for g in (m - steps + 1..=m).rev() {
            a = if top { self.d_top(g)[a] } else { self.d_bot(g)[a] };
        }
        a
    }
}

/// Words of length at most `bound` over `alphabet`, in length-then-lex order.
/// `d_bot` deletes the first letter, `d_top` the last.
pub fn bounded_words(alphabet: &[&str], bound: usize) -> Result<OuterFaceComplex> {
    let sep = if alphabet.iter().all(|a| a.chars().count() == 1) { "" } else { "." };
    let k = alphabet.len();
    let mut grades = Vec::with_capacity(bound + 1);
    let mut d_bot = Vec::with_capacity(bound);
    let mut d_top = Vec::with_capacity(bound);
    let mut words: Vec<Vec<usize>> = vec![vec![]];
    let render = |w: &[usize]| {
        if w.is_empty() {
            "ε".to_string()
        } else {
            w.iter().map(|&i| alphabet[i]).collect::<Vec<_>>().join(sep)
        }
    };
    grades.push(words.iter().map(|w| render(w)).collect());
    for m in 1..=bound {
        let next: Vec<Vec<usize>> = words
            .iter()
            .flat_map(|w| (0..k).map(move |c| [w.as_slice(), &[c]].concat()))
            .collect();
        // base-k rank of a word of length m - 1
        let rank = |w: &[usize]| w.iter().fold(0, |acc, &c| acc * k + c);
        d_bot.push(next.iter().map(|w| rank(&w[1..])).collect());
        d_top.push(next.iter().map(|w| rank(&w[..m - 1])).collect());
        grades.push(next.iter().map(|w| render(w)).collect());
        words = next;
    }
    OuterFaceComplex::new(grades, d_bot, d_top)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Edge {
    pub name: String,
    pub source: String,
    pub target: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DirectedGraph {
    pub vertices: Vec<String>,
    pub edges: Vec<Edge>,
}

impl DirectedGraph {
    pub fn new(vertices: &[&str], edges: &[(&str, &str, &str)]) -> Self {
        Self {
            vertices: vertices.iter().map(|v| v.to_string()).collect(),
            edges: edges
                .iter()
                .map(|(n, s, t)| Edge { name: n.to_string(), source: s.to_string(), target: t.to_string() })
                .collect(),
        }
    }
}

/// Paths of length at most `bound`: grade 0 holds the vertices, grade `m` the
/// paths of `m` edges in lexicographic edge order. `d_bot` drops the first edge
/// (on single edges: the target), `d_top` drops the last (the source).
pub fn graph_paths(graph: &DirectedGraph, bound: usize) -> Result<OuterFaceComplex> {
    let vertex: HashMap<&str, usize> = graph.vertices.iter().enumerate().map(|(k, v)| (v.as_str(), k)).collect();
    if vertex.len() != graph.vertices.len() {
        return Err(Error::Structural("duplicate vertex".into()));
    }
    let endpoint = |v: &str| vertex.get(v).copied().ok_or_else(|| Error::Structural(format!("unknown vertex {v:?}")));
    let edges = graph
        .edges
        .iter()
        .map(|e| Ok((endpoint(&e.source)?, endpoint(&e.target)?)))
        .collect::<Result<Vec<_>>>()?;
    let sep = if graph.edges.iter().all(|e| e.name.chars().count() == 1) { "" } else { "." };
    let render = |p: &[usize]| p.iter().map(|&e| graph.edges[e].name.as_str()).collect::<Vec<_>>().join(sep);

    let mut grades = vec![graph.vertices.clone()];
    let mut d_bot = Vec::with_capacity(bound);
    let mut d_top = Vec::with_capacity(bound);
    let mut paths: Vec<Vec<usize>> = Vec::new();
    let edges = &edges;
    for m in 1..=bound {
        let next: Vec<Vec<usize>> = if m == 1 {
            (0..edges.len()).map(|e| vec![e]).collect()
        } else {
            paths
                .iter()
                .flat_map(|p| {
                    let end = edges[*p.last().unwrap()].1;
                    (0..edges.len()).filter(move |&e| edges[e].0 == end).map(move |e| [p.as_slice(), &[e]].concat())
                })
                .collect()
        };
        if m == 1 {
            d_bot.push(edges.iter().map(|e| e.1).collect());
            d_top.push(edges.iter().map(|e| e.0).collect());
        } else {
            let index: HashMap<&[usize], usize> = paths.iter().enumerate().map(|(k, p)| (p.as_slice(), k)).collect();
            d_bot.push(next.iter().map(|p| index[&p[1..]]).collect());
            d_top.push(next.iter().map(|p| index[&p[..m - 1]]).collect());
        }
        let names: Vec<String> = next.iter().map(|p| render(p)).collect();
        grades.push(names);
        paths = next;
    }
    OuterFaceComplex::new(grades, d_bot, d_top)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct FreeCell {
    parts: Vec<usize>,
    element: usize,
}

fn free_cells(a: &OuterFaceComplex, level: usize) -> Vec<Vec<FreeCell>> {
    (0..=level)
        .map(|k| {
            Composition::bounded(k, a.bound())
                .into_iter()
                .flat_map(|c| {
                    let total = c.total();
                    (0..a.grade(total).len()).map(move |element| FreeCell { parts: c.parts.clone(), element })
                })
                .collect()
        })
        .collect()
}

fn free_name(a: &OuterFaceComplex, c: &FreeCell) -> String {
    let total: usize = c.parts.iter().sum();
    let parts: Vec<String> = c.parts.iter().map(|p| p.to_string()).collect();
    format!("{}({})", a.grade(total)[c.element], parts.join(","))
}

/// The free decomposition space on `a`, truncated at `level`.
///
/// Cells are ordered by composition (lexicographically) and then by element;
/// a cell is named `element(l_1,...,l_k)`. Inner faces merge adjacent parts,
/// `d_0` applies `d_bot` `l_1` times and drops the first part, `d_k` applies
/// `d_top` `l_k` times and drops the last, and `s_i` inserts a zero part.
pub fn free_decomposition(a: &OuterFaceComplex, level: usize) -> Result<TruncatedSSet> {
    TruncatedSSet::tabulate(
        free_cells(a, level),
        |_, c| free_name(a, c),
        |k, i, c| {
            let total: usize = c.parts.iter().sum();
            let mut parts = c.parts.clone();
            if i == 0 {
                let l = parts.remove(0);
                FreeCell { element: a.iterate(false, total, l, c.element), parts }
            } else if i == k {
                let l = parts.pop().unwrap();
                FreeCell { element: a.iterate(true, total, l, c.element), parts }
            } else {
                let merged = parts[i - 1] + parts[i];
                parts.splice(i - 1..=i, [merged]);
                FreeCell { element: c.element, parts }
            }
        },
        |_, i, c| {
            let mut parts = c.parts.clone();
            parts.insert(i, 0);
            FreeCell { element: c.element, parts }
        },
    )
}

/// The simplicial map from the free decomposition space on `a` to the one on
/// the terminal complex of the same bound, remembering only the lengths.
pub fn length_map(a: &OuterFaceComplex, level: usize) -> Result<SimplicialMap> {
    let source = Arc::new(free_decomposition(a, level)?);
    let terminal = OuterFaceComplex::terminal(a.bound());
    let target = Arc::new(free_decomposition(&terminal, level)?);
    let cells = free_cells(a, level);
    let components = (0..=level)
        .map(|k| {
            let position: HashMap<Vec<usize>, usize> = Composition::bounded(k, a.bound())
                .into_iter()
                .enumerate()
                .map(|(i, c)| (c.parts, i))
                .collect();
            cells[k].iter().map(|c| position[&c.parts]).collect()
        })
        .collect();
    SimplicialMap::new(source, target, components)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_counts() {
        let w = bounded_words(&["a", "b"], 2).unwrap();
        assert_eq!(w.grade(1), &["a", "b"]);
        assert_eq!(w.grade(2), &["aa", "ab", "ba", "bb"]);
        let x = free_decomposition(&w, 2).unwrap();
        assert_eq!(x.cell_count(1), 7);
        assert_eq!(x.cell_count(2), 17);
        assert!(x.validate().holds());
    }

    #[test]
    fn word_faces() {
        let w = bounded_words(&["a", "b"], 2).unwrap();
        let x = free_decomposition(&w, 2).unwrap();
        let ab = x.cell_index(2, "ab(1,1)").unwrap();
        let name = |n: usize, k: usize| x.cells(n)[k].clone();
        assert_eq!(name(1, x.face(2, 0)[ab]), "b(1)");
        assert_eq!(name(1, x.face(2, 1)[ab]), "ab(2)");
        assert_eq!(name(1, x.face(2, 2)[ab]), "a(1)");
    }

    #[test]
    fn empty_alphabet_has_only_the_empty_word() {
        let w = bounded_words(&[], 3).unwrap();
        assert_eq!(w.grade(0), &["ε"]);
        assert!((1..=3).all(|m| w.grade(m).is_empty()));
    }

    #[test]
    fn graph_without_edges() {
        let g = DirectedGraph::new(&["p", "q"], &[]);
        let a = graph_paths(&g, 2).unwrap();
        assert_eq!(a.grade(0), &["p", "q"]);
        assert!(a.grade(1).is_empty());
        assert!(a.grade(2).is_empty());
    }

    #[test]
    fn non_commuting_faces_rejected() {
        let grades = vec![vec!["x".into(), "y".into()], vec!["e".into()], vec!["t".into()]];
        let err = OuterFaceComplex::new(grades, vec![vec![0], vec![0]], vec![vec![1], vec![0]]).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }

    #[test]
    fn length_map_is_simplicial() {
        let w = bounded_words(&["a"], 3).unwrap();
        let f = length_map(&w, 3).unwrap();
        assert!(f.validate().holds());
        // one letter: the length map is an isomorphism
        assert!(f.is_isomorphism());
    }
}
