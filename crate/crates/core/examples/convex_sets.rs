//! Convex sets (not necessarily connected) of a DAG, compared with the
//! connected ones.
//!
//!     cargo run --example convex_sets

use dagenum::sink::CollectSink;
use dagenum::{enumerate_convex, generators, is_connected_set, is_convex};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // two sources feeding two sinks
    let d = generators::gen_kpq(2, 2)?;

    let mut all = CollectSink::default();
    enumerate_convex(&d, &mut all, true, None)?;

    for s in &all.sets {
        let tag = if s.is_empty() {
            "empty"
        } else if is_connected_set(&d, s) {
            "connected"
        } else {
            "disconnected"
        };
        assert!(s.is_empty() || is_convex(&d, s));
        println!("{{{s}}}\t{tag}");
    }
    println!(
        "{} convex sets including the empty set; count_convex = {}",
        all.sets.len(),
        dagenum::convex::count_convex(&d)?
    );
    Ok(())
}
