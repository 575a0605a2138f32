//! Runs the outer loop on a thread pool. Per-vertex buffers are merged in
//! order, so the output is the single-threaded sequence.
//!
//!     cargo run --release --example parallel -- 20 4

use std::time::Instant;

use dagenum::cc::{count_cc_parallel, enumerate_cc_parallel};
use dagenum::generators::gen_balanced_kpq;
use dagenum::sink::CollectSink;
use dagenum::{count_cc, enumerate_cc};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: usize = args.first().map_or(Ok(20), |s| s.parse())?;
    let threads: usize = args.get(1).map_or(Ok(4), |s| s.parse())?;
    let d = gen_balanced_kpq(n)?;

    let t = Instant::now();
    let single = count_cc(&d)?;
    let t1 = t.elapsed();
    let t = Instant::now();
    let par = count_cc_parallel(&d, threads)?;
    let tp = t.elapsed();
    assert_eq!(single, par);
    println!("n={n}: {single} sets, 1 thread {t1:.2?}, {threads} threads {tp:.2?}");

    let small = gen_balanced_kpq(12)?;
    let mut seq = CollectSink::default();
    enumerate_cc(&small, &mut seq, None)?;
    assert_eq!(enumerate_cc_parallel(&small, threads, None)?, seq.sets);
    println!("merged order matches on n=12 ({} sets)", seq.sets.len());
    Ok(())
}
