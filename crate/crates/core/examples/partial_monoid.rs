//! A partial monoid whose products stop at a bound is 2-Segal but not Segal.

use decomp::builders::{from_partial_monoid, PartialMonoid};
use decomp::criteria::{check_lower_2segal, check_segal, check_upper_2segal};

fn main() -> decomp::Result<()> {
    let m = PartialMonoid::truncated_powers(2);
    println!("elements: {:?}", m.elements());
    let x = from_partial_monoid(&m, 4)?;
    println!("upper 2-Segal: {}", check_upper_2segal(&x)?.holds());
    println!("lower 2-Segal: {}", check_lower_2segal(&x)?.holds());
    print!("{}", check_segal(&x)?);

    // products that break associativity are rejected up front
    let bad = PartialMonoid::new(vec!["1".into(), "a".into(), "b".into()], 0, &[(1, 1, 2), (2, 1, 1)]);
    println!("non-associative table: {}", bad.unwrap_err());
    Ok(())
}
