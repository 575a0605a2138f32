//! Connected vertex sets of an undirected graph, and the bipartite
//! correspondence with cc-sets of the oriented graph.
//!
//!     cargo run --example connected_sets -- 6 0.4 11

use dagenum::generators::{
    gen_random_connected_bipartite, gen_random_connected_graph, orient_bipartite,
};
use dagenum::oracle::SetFamily;
use dagenum::sink::CollectSink;
use dagenum::{count_connected, enumerate_cc, enumerate_connected};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n = args.first().map_or(Ok(6), |s| s.parse())?;
    let density = args.get(1).map_or(Ok(0.4), |s| s.parse())?;
    let seed = args.get(2).map_or(Ok(11), |s| s.parse())?;

    let g = gen_random_connected_graph(n, density, seed)?;
    print!("{}", g.to_edge_list());
    let mut sink = CollectSink::default();
    enumerate_connected(&g, &mut sink, None);
    for s in &sink.sets {
        println!("{{{s}}}");
    }
    println!("{} connected sets", sink.sets.len());

    // orienting a bipartite graph side-to-side turns connected sets into cc-sets
    let (p, q) = (3, 4);
    let b = gen_random_connected_bipartite(p, q, 0.5, seed)?;
    let d = orient_bipartite(&b, p)?;
    let mut conn = CollectSink::default();
    enumerate_connected(&b, &mut conn, None);
    let mut cc = CollectSink::default();
    enumerate_cc(&d, &mut cc, None)?;
    assert_eq!(
        SetFamily::from_sets(&conn.sets),
        SetFamily::from_sets(&cc.sets)
    );
    println!(
        "bipartite {p}+{q}: {} connected sets, same family as the cc-sets of its orientation",
        count_connected(&b)
    );
    Ok(())
}
