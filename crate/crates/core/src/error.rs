use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("malformed graph6 record: {0}")]
    Graph6(String),

    #[error("malformed edge list: {0}")]
    EdgeList(String),

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("vertex {index} out of range for a graph on {n} vertices")]
    VertexOutOfRange { index: usize, n: usize },

    #[error("invalid graph family parameters: {0}")]
    InvalidFamily(String),

    #[error("graph has no edges")]
    NoEdges,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),

    #[error("graph is not regular")]
    NotRegular,

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("vertex {vertex} has degree {degree}, maximum degree is {max_degree}")]
    NotMaxDegree {
        vertex: usize,
        degree: usize,
        max_degree: usize,
    },

    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),

    #[error("matrix dimensions do not match: expected {expected} entries, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("alpha must lie in [0, 1], got {0}")]
    AlphaOutOfRange(f64),

    #[error("bound is undefined at alpha = 1/2")]
    AlphaHalf,

    #[error("the Sachs determinant expansion needs alpha in (0, 1]; at alpha = 0 the matrix is the Laplacian and det L(G) = 0")]
    AlphaZero,

    #[error("chromatic parameter must be at least 2, got {0}")]
    ChiTooSmall(usize),

    #[error("{what} limited to n <= {limit}, got n = {n}")]
    BudgetExceeded {
        what: &'static str,
        limit: usize,
        n: usize,
    },

    #[error("numeric check disagrees with structural classification: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
