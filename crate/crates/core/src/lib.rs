//! Combinatorics of B-orbit closures of square-zero strictly upper-triangular
//! matrices.
//!
//! The adjoint orbits of the group of invertible upper-triangular matrices
//! acting on strictly upper-triangular matrices `u` with `u^2 = 0` are indexed
//! by involutions: each orbit contains exactly one 0/1 matrix whose ones sit at
//! the positions `(i_s, j_s)` of a partial matching on `{1, .., n}`.  This
//! crate implements the combinatorial calculus attached to that picture:
//!
//! * [`involution`] — the orbit labels: partial matchings written as products
//!   of disjoint two-cycles, their representative matrices, window
//!   projections, and the closed orbit-dimension formula;
//! * [`rank`] — window rank matrices, the characterization of which integer
//!   matrices arise that way, the entrywise closure order, and shape (Jordan
//!   type per window) matrices for general nilpotent matrices;
//! * [`poset`] — the cover moves that generate the closure order, the Hasse
//!   diagram, and a brute-force order oracle;
//! * [`poly`] / [`ideal`] — symbolic generators of the determinantal ideals
//!   that cut out orbit closures, and their evaluation at matrices;
//! * [`tableau`] — two-column standard Young tableaux labelling the orbital
//!   varieties inside the square-zero nilradical components;
//! * [`laurent`] / [`oracle`] / [`verify`] — independent verification: explicit
//!   one-parameter degenerations, exact rational linear algebra (rank,
//!   centralizer dimension), random orbit points, and named check suites.
//!
//! All arithmetic that needs exactness is done over arbitrary-precision
//! rationals; nothing in the crate uses floating point.

pub mod error;
pub mod rational;
pub mod involution;
pub mod rank;
pub mod poset;
pub mod poly;
pub mod ideal;
pub mod tableau;
pub mod laurent;
pub mod oracle;
pub mod verify;

pub use error::Error;
pub use involution::{Involution, NilpotentMatrix};
pub use rank::{OrderRelation, RankMatrix, ShapeMatrix};
pub use poset::{CoverKind, CoverMove, Guard, HasseDiagram};
pub use poly::SymPolynomial;
pub use ideal::GeneratorSet;
pub use tableau::TwoColumnTableau;
