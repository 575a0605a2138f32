//! Lists every connected convex set of a small DAG, in emission order.
//!
//! Reads an edge list from the file named on the command line, or uses a
//! built-in five-vertex example.
//!
//!     cargo run --example cc_sets
//!     cargo run --example cc_sets -- graph.txt

use dagenum::sink::from_fn;
use dagenum::{acyclic_ordering, enumerate_cc, parse_digraph};
use std::ops::ControlFlow;

const EXAMPLE: &str = "\
# 0 -> 1 -> 2 -> 4 and 0 -> 3 -> 4
5 5
0 1
1 2
0 3
2 4
3 4
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => EXAMPLE.to_string(),
    };
    let d = parse_digraph(&text)?;
    println!("acyclic ordering: {:?}", acyclic_ordering(&d)?.order());

    let n = enumerate_cc(
        &d,
        from_fn(|s: &dagenum::VertexSet| {
            println!("{{{s}}}");
            ControlFlow::Continue(())
        }),
        None,
    )?;
    println!("{n} connected convex sets");
    Ok(())
}
