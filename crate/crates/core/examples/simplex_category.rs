//! Active-inert factorization, pushouts and normal forms in the simplex category.

use decomp::delta::{active_inert_pushout, codegeneracy, coface, factor_active_inert, generator_decomposition, SimplexMap};

fn main() -> decomp::Result<()> {
    let f = SimplexMap::new(vec![1, 1, 3], 4)?;
    let (active, inert) = factor_active_inert(&f);
    println!("{f} = {inert} . {active}");

    let word: Vec<String> = generator_decomposition(&f).iter().map(|g| g.to_string()).collect();
    println!("normal form: {}", word.join(" . "));

    // collapse an edge, then push it out along the inclusion of the last edge of [2]
    let alpha = codegeneracy(0, 0)?;
    let iota = coface(2, 0)?;
    let (theta, phi) = active_inert_pushout(&alpha, &iota)?;
    println!("pushout of {alpha} along {iota}: inert {theta}, active {phi}");
    Ok(())
}
