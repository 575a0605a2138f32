//! Digraph and undirected graph representations and the edge-list format.
//!
//! The edge-list format is UTF-8 text. Lines whose first non-blank character
//! is `#`, and blank lines, are ignored. The first significant line is
//! `n m`; exactly `m` lines `u v` follow, each naming an arc `u -> v` (or an
//! undirected edge `{u, v}`). Vertices are `0..n`. Parallel arcs are merged;
//! self-loops are rejected.

use std::fmt::Write as _;
use std::io::Read;

use crate::error::{Error, Result};

/// A simple directed graph on vertices `0..n`.
///
/// Adjacency lists are sorted ascending and free of duplicates, and
/// `v ∈ out_neighbors(u)` iff `u ∈ in_neighbors(v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
    m: usize,
}

impl Digraph {
    /// Builds a digraph from an arc list, dropping duplicate arcs.
    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut out_adj = vec![Vec::new(); n];
        for (u, v) in arcs {
            check_pair(n, u, v)?;
            out_adj[u].push(v);
        }
        Ok(Self::from_out_adj(out_adj))
    }

    fn from_out_adj(mut out_adj: Vec<Vec<usize>>) -> Self {
        let n = out_adj.len();
        let mut in_adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, outs) in out_adj.iter_mut().enumerate() {
            outs.sort_unstable();
            outs.dedup();
            m += outs.len();
            for &v in outs.iter() {
                in_adj[v].push(u);
            }
        }
        // in_adj[v] is filled in ascending u, so already sorted
        Digraph { out_adj, in_adj, m }
    }

    pub fn empty(n: usize) -> Self {
        Digraph {
            out_adj: vec![Vec::new(); n],
            in_adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.out_adj.len()
    }

    #[inline]
    pub fn arc_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out_adj[v]
    }

    #[inline]
    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_adj[v]
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out_adj[u].binary_search(&v).is_ok()
    }

    /// All arcs in `(u, v)` lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out_adj
            .iter()
            .enumerate()
            .flat_map(|(u, outs)| outs.iter().map(move |&v| (u, v)))
    }

    /// The digraph with vertex `v` renamed to `map[v]`.
    pub fn relabel(&self, map: &[usize]) -> Digraph {
        let mut out_adj = vec![Vec::new(); self.order()];
        for (u, v) in self.arcs() {
            out_adj[map[u]].push(map[v]);
        }
        Self::from_out_adj(out_adj)
    }

    /// The underlying undirected graph.
    pub fn underlying(&self) -> UndirectedGraph {
        UndirectedGraph::from_edges(self.order(), self.arcs())
            .expect("arcs of a valid digraph form a valid edge set")
    }

    /// Renders the digraph in the edge-list format.
    pub fn to_edge_list(&self) -> String {
        render_edge_list(self.order(), self.m, self.arcs())
    }
}

/// A simple undirected graph on vertices `0..n` with sorted, symmetric
/// adjacency.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UndirectedGraph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl UndirectedGraph {
    /// Builds a graph from an edge list; `{u, v}` and `{v, u}` are the same edge.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            check_pair(n, u, v)?;
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m2 = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            m2 += list.len();
        }
        Ok(UndirectedGraph { adj, m: m2 / 2 })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, ns)| {
            ns.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn to_edge_list(&self) -> String {
        render_edge_list(self.order(), self.m, self.edges())
    }
}

fn check_pair(n: usize, u: usize, v: usize) -> Result<()> {
    for w in [u, v] {
        if w >= n {
            return Err(Error::VertexOutOfRange { vertex: w, n });
        }
    }
    if u == v {
        return Err(Error::SelfLoop(u));
    }
    Ok(())
}

fn render_edge_list(n: usize, m: usize, pairs: impl Iterator<Item = (usize, usize)>) -> String {
    let mut s = format!("{n} {m}\n");
    for (u, v) in pairs {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

/// Header and pairs of an edge-list document, before graph validation.
struct RawEdgeList {
    n: usize,
    pairs: Vec<(usize, usize, usize)>, // (line, u, v)
}

fn parse_raw(text: &str) -> Result<RawEdgeList> {
    let mut significant = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = significant.next().ok_or(Error::Parse {
        line: text.lines().count().max(1),
        message: "missing \"n m\" header".into(),
    })?;
    let [n, m] = parse_two(hline, header)?;

    let mut pairs = Vec::with_capacity(m);
    for (line, body) in significant {
        if pairs.len() == m {
            return Err(Error::Parse {
                line,
                message: format!("more than the declared {m} edge lines"),
            });
        }
        let [u, v] = parse_two(line, body)?;
        pairs.push((line, u, v));
    }
    if pairs.len() < m {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            message: format!("expected {m} edge lines, found {}", pairs.len()),
        });
    }
    Ok(RawEdgeList { n, pairs })
}

fn parse_two(line: usize, body: &str) -> Result<[usize; 2]> {
    let mut fields = body.split_whitespace();
    let mut take = || -> Result<usize> {
        let tok = fields.next().ok_or_else(|| Error::Parse {
            line,
            message: format!("expected two integers, got {body:?}"),
        })?;
        tok.parse().map_err(|_| Error::Parse {
            line,
            message: format!("not a non-negative integer: {tok:?}"),
        })
    };
    let pair = [take()?, take()?];
    if fields.next().is_some() {
        return Err(Error::Parse {
            line,
            message: format!("expected two integers, got {body:?}"),
        });
    }
    Ok(pair)
}

fn validate_pairs(raw: &RawEdgeList) -> Result<()> {
    for &(line, u, v) in &raw.pairs {
        if let Err(e) = check_pair(raw.n, u, v) {
            return Err(Error::Parse {
                line,
                message: e.to_string(),
            });
        }
    }
    Ok(())
}

/// Parses a directed edge list.
pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let raw = parse_raw(text)?;
    validate_pairs(&raw)?;
    Digraph::from_arcs(raw.n, raw.pairs.iter().map(|&(_, u, v)| (u, v)))
}

/// Parses an undirected edge list.
pub fn parse_undirected(text: &str) -> Result<UndirectedGraph> {
    let raw = parse_raw(text)?;
    validate_pairs(&raw)?;
    UndirectedGraph::from_edges(raw.n, raw.pairs.iter().map(|&(_, u, v)| (u, v)))
}

/// Reads a whole stream as UTF-8 and parses it as a directed edge list.
pub fn read_digraph<R: Read>(mut reader: R) -> Result<Digraph> {
    parse_digraph(&read_text(&mut reader)?)
}

pub fn read_undirected<R: Read>(mut reader: R) -> Result<UndirectedGraph> {
    parse_undirected(&read_text(&mut reader)?)
}

fn read_text<R: Read>(reader: &mut R) -> Result<String> {
    let mut text = String::new();
    reader
        .read_to_string(&mut text)
        .map_err(|e| Error::Io(e.to_string()))?;
    Ok(text)
}
