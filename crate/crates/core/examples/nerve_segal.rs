//! Nerves of finite categories are Segal; the boundary of a 2-simplex is not.

use decomp::builders::{nerve, simplex_boundary, CategorySpec, FiniteCategory};
use decomp::criteria::{check_decomposition, check_segal};

fn main() -> decomp::Result<()> {
    let square = FiniteCategory::from_spec(&CategorySpec {
        objects: vec!["00".into(), "01".into(), "10".into(), "11".into()],
        morphisms: vec![
            ["h0".into(), "00".into(), "10".into()],
            ["v0".into(), "00".into(), "01".into()],
            ["h1".into(), "01".into(), "11".into()],
            ["v1".into(), "10".into(), "11".into()],
            ["diag".into(), "00".into(), "11".into()],
        ],
        identities: None,
        composites: vec![
            ["h0".into(), "v1".into(), "diag".into()],
            ["v0".into(), "h1".into(), "diag".into()],
        ],
    })?;
    let x = nerve(&square, 4)?;
    let counts: Vec<usize> = (0..=x.level()).map(|n| x.cell_count(n)).collect();
    println!("nerve of the commutative square, cells per level: {counts:?}");
    print!("{}", check_segal(&x)?);

    let hollow = simplex_boundary(2, 3)?;
    println!();
    print!("{}", check_segal(&hollow)?);
    print!("{}", check_decomposition(&hollow)?);
    Ok(())
}
