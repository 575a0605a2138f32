//! Streams sets lazily: a hard limit, and a sink that stops on its own
//! once it has seen a set three vertices short of the whole graph.
//!
//!     cargo run --release --example first_k -- 30

use std::ops::ControlFlow;

use dagenum::generators::gen_balanced_kpq;
use dagenum::sink::{from_fn, CollectSink};
use dagenum::{enumerate_cc, VertexSet};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).map_or(Ok(30), |s| s.parse())?;
    // about 2^n cc-sets in total, far too many to list
    let d = gen_balanced_kpq(n)?;

    let mut first = CollectSink::default();
    enumerate_cc(&d, &mut first, Some(5))?;
    for s in &first.sets {
        println!("{} vertices: {{{s}}}", s.len());
    }

    let mut seen = 0u64;
    let mut found = None;
    enumerate_cc(
        &d,
        from_fn(|s: &VertexSet| {
            seen += 1;
            if s.len() + 3 == n {
                found = Some(s.clone());
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        }),
        None,
    )?;
    println!(
        "first set of {} vertices after {seen} sets: {{{}}}",
        n - 3,
        found.expect("kpq has sets of every size")
    );
    Ok(())
}
