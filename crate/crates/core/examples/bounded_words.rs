//! Words of bounded length: a decomposition space that is not Segal.

use decomp::builders::{bounded_words, free_decomposition};
use decomp::criteria::{check_decomposition, check_segal};

fn main() -> decomp::Result<()> {
    let words = bounded_words(&["a", "b"], 2)?;
    let x = free_decomposition(&words, 3)?;
    println!("|X_1| = {}, |X_2| = {}", x.cell_count(1), x.cell_count(2));
    println!("X_1 = {:?}", x.cells(1));
    print!("{}", check_segal(&x)?);
    print!("{}", check_decomposition(&x)?);
    Ok(())
}
