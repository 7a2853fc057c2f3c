//! Simplicial subsets of a standard simplex, given by ordered simplicial complexes.

use crate::delta::{codegeneracy, coface, enumerate_maps, SimplexMap};
use crate::error::{Error, Result};
use crate::sset::TruncatedSSet;

/// The simplicial set whose `n`-cells are monotone maps `[n] -> [vertices - 1]`
/// with image inside one of `facets`. Cells are named by their vertex sequence.
pub fn ordered_complex(vertices: usize, facets: &[Vec<usize>], level: usize) -> Result<TruncatedSSet> {
    if vertices == 0 {
        return Err(Error::InvalidArgument("a complex needs at least one vertex".into()));
    }
    if let Some(bad) = facets.iter().flatten().find(|&&v| v >= vertices) {
        return Err(Error::InvalidArgument(format!("facet vertex {bad} out of range")));
    }
    let top = vertices - 1;
    let inside = |f: &SimplexMap| facets.iter().any(|facet| f.values().iter().all(|v| facet.contains(v)));
    let cells: Vec<Vec<SimplexMap>> =
        (0..=level).map(|n| enumerate_maps(n, top).into_iter().filter(inside).collect()).collect();
    let sep = if vertices <= 10 { "" } else { "," };
    TruncatedSSet::tabulate(
        cells,
        |_, f| f.values().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(sep),
        |n, i, f| f.after(&coface(n, i).expect("in range")).expect("composable"),
        |n, i, f| f.after(&codegeneracy(n, i).expect("in range")).expect("composable"),
    )
}

/// The standard `dim`-simplex, truncated at `level`.
pub fn standard_simplex(dim: usize, level: usize) -> Result<TruncatedSSet> {
    ordered_complex(dim + 1, &[(0..=dim).collect()], level)
}

/// The boundary of the standard `dim`-simplex: every proper face, no interior.
pub fn simplex_boundary(dim: usize, level: usize) -> Result<TruncatedSSet> {
    if dim == 0 {
        return Err(Error::InvalidArgument("the 0-simplex has empty boundary".into()));
    }
    let facets: Vec<Vec<usize>> = (0..=dim).map(|skip| (0..=dim).filter(|&v| v != skip).collect()).collect();
    ordered_complex(dim + 1, &facets, level)
}
