//! Both décalages of a decomposition space are Segal, and their projections
//! are culf. For the boundary of the 3-simplex one décalage is not Segal.

use decomp::builders::{bounded_words, free_decomposition, simplex_boundary};
use decomp::criteria::{check_culf, check_decomposition, check_segal};
use decomp::operators::{dec_bot, dec_top};
use decomp::TruncatedSSet;

fn report(name: &str, x: &TruncatedSSet) -> decomp::Result<()> {
    let (top, top_projection) = dec_top(x)?;
    let (bottom, bottom_projection) = dec_bot(x)?;
    println!("{name}");
    println!("  decomposition space: {}", check_decomposition(x)?.holds());
    println!("  upper décalage Segal: {}", check_segal(&top)?.holds());
    println!("  lower décalage Segal: {}", check_segal(&bottom)?.holds());
    println!(
        "  projections culf: {} / {}",
        check_culf(&top_projection)?.holds(),
        check_culf(&bottom_projection)?.holds()
    );
    Ok(())
}

fn main() -> decomp::Result<()> {
    report("words over {a, b} up to length 2", &free_decomposition(&bounded_words(&["a", "b"], 2)?, 4)?)?;
    report("boundary of the 3-simplex", &simplex_boundary(3, 4)?)?;
    Ok(())
}
