//! Counts cc-sets of the complete bipartite DAG K(ceil(n/2), floor(n/2)),
//! which attains the maximum over connected DAGs of order n, and times it.
//!
//!     cargo run --release --example extremal_counts -- 10 20

use std::time::Instant;

use dagenum::count_cc;
use dagenum::generators::{gen_balanced_kpq, gen_path, predict};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let lo: usize = args.first().map_or(Ok(4), |s| s.parse())?;
    let hi: usize = args.get(1).map_or(Ok(18), |s| s.parse())?;

    println!(
        "{:>3} {:>10} {:>10} {:>10} {:>10}",
        "n", "lower", "cc", "upper", "ns/set"
    );
    for n in lo..=hi {
        let bounds = predict(n)?;
        let d = gen_balanced_kpq(n)?;
        let start = Instant::now();
        let count = count_cc(&d)?;
        let ns = start.elapsed().as_nanos() as f64 / count as f64;
        assert_eq!(count, bounds.upper);
        assert_eq!(count_cc(&gen_path(n)?)?, bounds.lower);
        println!(
            "{n:>3} {:>10} {count:>10} {:>10} {ns:>10.1}",
            bounds.lower, bounds.upper
        );
    }
    Ok(())
}
