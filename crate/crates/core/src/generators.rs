//! Instance families and closed-form cc-set counts.
//!
//! Random instances are driven by SplitMix64 (state initialised to the
//! seed; increment `0x9E3779B97F4A7C15`; output mix constants
//! `0xBF58476D1CE4E5B9` and `0x94D049BB133111EB`). Draws are derived from
//! the raw 64-bit stream as follows, so instances can be regenerated
//! bit-for-bit elsewhere:
//!
//! * a coin with probability `p` is `(x >> 11) as f64 * 2^-53 < p`;
//! * an index below `k` is `x % k`;
//! * a shuffle is Fisher–Yates from the back: for `i = len-1 .. 1`, swap
//!   `i` with `index below (i + 1)`.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::error::{Error, Result};
use crate::graph::{Digraph, UndirectedGraph};

/// Lower and upper bounds on the number of cc-sets of a connected DAG of
/// order `n`: `n(n+1)/2` (attained with a Hamiltonian path) and
/// `f(n) = 2^n + n + 1 - d_n` (attained by the balanced complete bipartite
/// orientation).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtremalPrediction {
    pub n: usize,
    pub lower: u64,
    pub upper: u64,
}

/// Largest order for which `2^n` still leaves room in a `u64`.
pub const MAX_PREDICT_ORDER: usize = 62;

pub fn predict(n: usize) -> Result<ExtremalPrediction> {
    if n == 0 || n > MAX_PREDICT_ORDER {
        return Err(Error::InvalidParameter(format!(
            "prediction needs 1 <= n <= {MAX_PREDICT_ORDER}, got {n}"
        )));
    }
    let nn = n as u64;
    let d_n = if n.is_multiple_of(2) {
        2 << (n / 2)
    } else {
        3 << ((n - 1) / 2)
    };
    Ok(ExtremalPrediction {
        n,
        lower: nn * (nn + 1) / 2,
        upper: (1u64 << n) + nn + 1 - d_n,
    })
}

/// Complete bipartite digraph: vertices `0..p` are sources, `p..p+q` sinks,
/// with every arc from the first part to the second.
pub fn gen_kpq(p: usize, q: usize) -> Result<Digraph> {
    if p == 0 || q == 0 {
        return Err(Error::InvalidParameter(format!(
            "kpq needs p, q >= 1, got {p}, {q}"
        )));
    }
    Digraph::from_arcs(p + q, (0..p).flat_map(|u| (p..p + q).map(move |v| (u, v))))
}

/// The balanced orientation `K_{⌈n/2⌉, ⌊n/2⌋}`.
pub fn gen_balanced_kpq(n: usize) -> Result<Digraph> {
    gen_kpq(n.div_ceil(2), n / 2)
}

/// Directed path `0 -> 1 -> .. -> n-1`.
pub fn gen_path(n: usize) -> Result<Digraph> {
    if n == 0 {
        return Err(Error::InvalidParameter("path needs n >= 1".into()));
    }
    Digraph::from_arcs(n, (1..n).map(|i| (i - 1, i)))
}

fn check_density(density: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::InvalidParameter(format!(
            "density {density} outside [0, 1]"
        )));
    }
    Ok(())
}

/// Seeded draws with the derivations documented at module level.
pub struct Draws(SplitMix64);

impl Draws {
    pub fn new(seed: u64) -> Self {
        Draws(SplitMix64::seed_from_u64(seed))
    }

    pub fn raw(&mut self) -> u64 {
        self.0.next_u64()
    }

    pub fn coin(&mut self, p: f64) -> bool {
        ((self.raw() >> 11) as f64) * (1.0 / (1u64 << 53) as f64) < p
    }

    pub fn below(&mut self, k: usize) -> usize {
        (self.raw() % k as u64) as usize
    }

    pub fn shuffle<T>(&mut self, xs: &mut [T]) {
        for i in (1..xs.len()).rev() {
            let j = self.below(i + 1);
            xs.swap(i, j);
        }
    }
}

/// Random DAG: a shuffled vertex order fixes the direction, and each pair
/// is joined (earlier to later) with probability `density`, pairs visited
/// in lexicographic order of their positions.
pub fn gen_random_dag(n: usize, density: f64, seed: u64) -> Result<Digraph> {
    check_density(density)?;
    let mut rng = Draws::new(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut perm);
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.coin(density) {
                arcs.push((perm[i], perm[j]));
            }
        }
    }
    Digraph::from_arcs(n, arcs)
}

/// Random connected graph: a random spanning tree (each vertex in shuffled
/// order attaches to a uniformly chosen earlier one), then every other pair
/// `u < v`, lexicographically, with probability `density`.
pub fn gen_random_connected_graph(n: usize, density: f64, seed: u64) -> Result<UndirectedGraph> {
    if n == 0 {
        return Err(Error::InvalidParameter("graph needs n >= 1".into()));
    }
    check_density(density)?;
    let mut rng = Draws::new(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut perm);
    let mut adj = vec![vec![false; n]; n];
    for k in 1..n {
        let parent = perm[rng.below(k)];
        adj[perm[k]][parent] = true;
        adj[parent][perm[k]] = true;
    }
    for (u, row) in adj.iter_mut().enumerate() {
        for cell in &mut row[u + 1..] {
            if !*cell && rng.coin(density) {
                *cell = true;
            }
        }
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    UndirectedGraph::from_edges(
        n,
        edges
            .filter(|&(u, v)| adj[u][v] || adj[v][u])
            .collect::<Vec<_>>(),
    )
}

/// Random connected bipartite graph with parts `0..p` and `p..p+q`.
///
/// Starts from the edge `{0, p}`; the remaining vertices, in shuffled order,
/// each attach to a uniformly chosen tree vertex of the other part. Every
/// other cross pair is then added with probability `density`.
pub fn gen_random_connected_bipartite(
    p: usize,
    q: usize,
    density: f64,
    seed: u64,
) -> Result<UndirectedGraph> {
    if p == 0 || q == 0 {
        return Err(Error::InvalidParameter(format!(
            "bipartite needs p, q >= 1, got {p}, {q}"
        )));
    }
    check_density(density)?;
    let n = p + q;
    let mut rng = Draws::new(seed);
    let mut rest: Vec<usize> = (1..p).chain(p + 1..n).collect();
    rng.shuffle(&mut rest);
    let (mut tree_p, mut tree_q) = (vec![0], vec![p]);
    let mut edges = vec![(0, p)];
    for v in rest {
        if v < p {
            let u = tree_q[rng.below(tree_q.len())];
            edges.push((v, u));
            tree_p.push(v);
        } else {
            let u = tree_p[rng.below(tree_p.len())];
            edges.push((u, v));
            tree_q.push(v);
        }
    }
    let tree: std::collections::HashSet<(usize, usize)> = edges.iter().copied().collect();
    for u in 0..p {
        for v in p..n {
            if !tree.contains(&(u, v)) && rng.coin(density) {
                edges.push((u, v));
            }
        }
    }
    UndirectedGraph::from_edges(n, edges)
}

/// Orients every edge of a bipartite graph from part `0..p` to part `p..`.
///
/// Fails if some edge has both ends in the same part.
pub fn orient_bipartite(g: &UndirectedGraph, p: usize) -> Result<Digraph> {
    let mut arcs = Vec::with_capacity(g.edge_count());
    for (u, v) in g.edges() {
        if (u < p) == (v < p) {
            return Err(Error::InvalidParameter(format!(
                "edge {u}-{v} inside one part"
            )));
        }
        arcs.push((u, v));
    }
    Digraph::from_arcs(g.order(), arcs)
}
