//! Paths in a directed graph, their free decomposition space, and its culf
//! length map.

use decomp::builders::{free_decomposition, graph_paths, length_map, DirectedGraph};
use decomp::criteria::{check_culf, check_decomposition};

fn main() -> decomp::Result<()> {
    let g = DirectedGraph::new(
        &["u", "v", "w"],
        &[("a", "w", "u"), ("b", "u", "v"), ("c", "u", "v"), ("d", "v", "w"), ("e", "w", "w")],
    );
    let a = graph_paths(&g, 2)?;
    for m in 0..=a.bound() {
        println!("A_{m} = {:?}", a.grade(m));
    }
    let x = free_decomposition(&a, 4)?;
    println!("decomposition space: {}", check_decomposition(&x)?.holds());
    print!("{}", check_culf(&length_map(&a, 4)?)?);
    Ok(())
}
