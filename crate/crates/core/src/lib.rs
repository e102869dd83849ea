//! Spectral toolkit for the matrix family `B_α(G) = αA(G) + (1-α)L(G)` of a
//! simple graph `G`, for `α ∈ [0, 1]`.
//!
//! * [`graph`]: graphs, graph6 and edge-list I/O, generators, test corpora.
//! * [`linalg`]: dense symmetric eigenvalues, determinants, characteristic polynomials.
//! * [`balpha`]: the matrix family, its spectra and the semidefiniteness threshold β₀.
//! * [`bounds`]: eigenvalue bounds and the exact colouring / independence solvers behind them.
//! * [`sachs`]: determinant and characteristic polynomial as sums over subgraphs.

pub mod balpha;
pub mod bounds;
pub mod error;
pub mod graph;
pub mod linalg;
pub mod sachs;

pub use balpha::{AlphaValue, BetaO, DefinitenessClass};
pub use error::{Error, Result};
pub use graph::{Family, Graph};
pub use linalg::{CharPoly, Spectrum, SymMatrix, Tolerances};
