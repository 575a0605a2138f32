//! Cross-checks all three enumerators against exhaustive subset search on
//! a batch of seeded random instances.
//!
//!     cargo run --release --example verify_oracle -- 50

use dagenum::generators::{gen_random_connected_graph, gen_random_dag};
use dagenum::oracle::{brute_cc, brute_connected, brute_convex, SetFamily, DEFAULT_CAP};
use dagenum::sink::CollectSink;
use dagenum::{enumerate_cc, enumerate_connected, enumerate_convex};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let rounds: u64 = std::env::args().nth(1).map_or(Ok(30), |s| s.parse())?;
    for seed in 0..rounds {
        let n = 2 + (seed % 10) as usize;
        let d = gen_random_dag(n, 0.3, seed)?;

        let mut cc = CollectSink::default();
        enumerate_cc(&d, &mut cc, None)?;
        let mut convex = CollectSink::default();
        enumerate_convex(&d, &mut convex, false, None)?;
        let g = gen_random_connected_graph(n, 0.3, seed)?;
        let mut conn = CollectSink::default();
        enumerate_connected(&g, &mut conn, None);

        let checks = [
            (
                "cc",
                SetFamily::from_sets(&cc.sets),
                brute_cc(&d, DEFAULT_CAP)?,
            ),
            (
                "convex",
                SetFamily::from_sets(&convex.sets),
                brute_convex(&d, DEFAULT_CAP)?,
            ),
            (
                "connected",
                SetFamily::from_sets(&conn.sets),
                brute_connected(&g, DEFAULT_CAP)?,
            ),
        ];
        for (kind, got, want) in checks {
            if got != want {
                let (missing, extra) = got.diff(&want);
                eprintln!("seed {seed} {kind}: missing {missing:?}, extra {extra:?}");
                std::process::exit(1);
            }
        }
        println!(
            "seed {seed:>3} n={n:>2}: cc {:>4}  convex {:>5}  connected {:>5}",
            cc.sets.len(),
            convex.sets.len(),
            conn.sets.len()
        );
    }
    Ok(())
}
