//! Edgewise subdivision: Segal exactly for decomposition spaces, and for a
//! nerve it is the nerve of the twisted arrow category.

use decomp::builders::{bounded_words, free_decomposition, nerve, simplex_boundary, twisted_arrow_comparison, FiniteCategory};
use decomp::criteria::{check_decomposition, check_segal};
use decomp::operators::sd;

fn main() -> decomp::Result<()> {
    let words = free_decomposition(&bounded_words(&["a"], 3)?, 5)?;
    let boundary = simplex_boundary(3, 5)?;
    for (name, x) in [("words over {a} up to length 3", &words), ("boundary of the 3-simplex", &boundary)] {
        let z = sd(x)?;
        println!(
            "{name}: decomposition {}, sd (level {}) Segal {}",
            check_decomposition(x)?.holds(),
            z.level(),
            check_segal(&z)?.holds()
        );
    }

    let c = FiniteCategory::chain(2);
    let iso = twisted_arrow_comparison(&c, 5)?;
    println!("sd(nerve [2]) -> nerve(tw [2]) is an isomorphism: {}", iso.is_isomorphism());
    let z = sd(&nerve(&c, 5)?)?;
    println!("twisted arrow objects: {:?}", z.cells(0));
    Ok(())
}
