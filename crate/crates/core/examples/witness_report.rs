//! Machine-readable reports: the direct checker under a square budget, and a
//! serialized failure witness.

use decomp::builders::simplex_boundary;
use decomp::criteria::{check_decomposition_direct, DirectOptions};
use decomp::io::{self, Document};

fn main() -> decomp::Result<()> {
    let x = simplex_boundary(4, 4)?;
    let full = check_decomposition_direct(&x, DirectOptions::default())?;
    print!("{}", io::to_string(&Document::Report(full)));

    let capped = check_decomposition_direct(&x, DirectOptions { rank_cap: Some(3), max_squares: Some(50) })?;
    print!("{}", io::to_string(&Document::Report(capped)));
    Ok(())
}
