//! Seeded instance generators; output is in the edge-list format and is the
//! same for the same arguments on every platform.
//!
//!     cargo run --example generators -- 8 0.3 42

use dagenum::generators::{gen_kpq, gen_path, gen_random_connected_graph, gen_random_dag, predict};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: usize = args.first().map_or(Ok(8), |s| s.parse())?;
    let density: f64 = args.get(1).map_or(Ok(0.3), |s| s.parse())?;
    let seed: u64 = args.get(2).map_or(Ok(42), |s| s.parse())?;

    println!("# random DAG");
    print!("{}", gen_random_dag(n, density, seed)?.to_edge_list());
    println!("# random connected graph");
    print!(
        "{}",
        gen_random_connected_graph(n, density, seed)?.to_edge_list()
    );
    println!("# path");
    print!("{}", gen_path(4)?.to_edge_list());
    println!("# K(2,3)");
    print!("{}", gen_kpq(2, 3)?.to_edge_list());

    let b = predict(n)?;
    println!(
        "# any connected DAG of order {n} has between {} and {} cc-sets",
        b.lower, b.upper
    );
    Ok(())
}
