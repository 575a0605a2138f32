//! Output-sensitive enumeration of vertex sets of graphs:
//!
//! * connected convex sets (cc-sets) of a DAG, in `O(n)` amortized time per set
//!   ([`cc`]);
//! * all convex sets of a DAG, in time linear in the total output size
//!   ([`convex`]);
//! * all connected sets of an undirected graph ([`connected`]).
//!
//! A set `X` of vertices of a DAG is *convex* when no directed path leaves
//! `X` and re-enters it, and *connected* when it induces a weakly connected
//! subgraph. All enumerators stream into a [`SetSink`] and stop as soon as
//! the sink asks them to.
//!
//! [`oracle`] holds brute-force counterparts for small graphs, and
//! [`generators`] builds the extremal and random instances used in tests
//! and benchmarks.

pub mod cc;
pub mod cli;
pub mod closure;
pub mod connected;
pub mod convex;
pub mod error;
pub mod generators;
pub mod graph;
pub mod oracle;
pub mod order;
pub mod set;
pub mod sink;

pub use cc::{count_cc, enumerate_cc, CcEnumerator};
pub use closure::{is_connected_set, is_convex, transitive_closure, ClosureDigraph};
pub use connected::{count_connected, enumerate_connected};
pub use convex::{count_convex, enumerate_convex};
pub use error::{Error, Result};
pub use graph::{parse_digraph, parse_undirected, Digraph, UndirectedGraph};
pub use order::{acyclic_ordering, AcyclicOrdering};
pub use set::VertexSet;
pub use sink::{CollectSink, CountSink, Limited, SetSink};
