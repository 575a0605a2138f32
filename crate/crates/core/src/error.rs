use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed edge-list input. `line` is 1-based.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// The digraph has a directed cycle; `witness` lists one, in arc order.
    #[error("digraph is not acyclic (cycle: {})", fmt_cycle(.witness))]
    Cyclic { witness: Vec<usize> },

    #[error("vertex {vertex} is out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("brute-force oracle refuses n = {n} (cap is {cap})")]
    OracleCap { n: usize, cap: usize },

    #[error("vertex {0} is not a free source or sink of the live subgraph")]
    NotPeelable(usize),

    #[error("{0}")]
    Io(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

fn fmt_cycle(witness: &[usize]) -> String {
    let mut s: Vec<String> = witness.iter().map(|v| v.to_string()).collect();
    if let Some(first) = witness.first() {
        s.push(first.to_string());
    }
    s.join(" -> ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
