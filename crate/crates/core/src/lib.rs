//! Exact arithmetic on finite abstract simplicial complexes.
//!
//! A complex here is a finite set of nonempty vertex sets closed under taking
//! nonempty subsets. Everything downstream of that definition is computed
//! exactly: Euler characteristics as signed element counts, connection
//! Laplacians and their integer Green matrix inverses, Levitt curvature and
//! Poincaré-Hopf indices as rationals, Betti numbers from exact ranks of
//! boundary blocks. There is no floating point anywhere in this crate.
//!
//! Module map:
//! - [`simplex`]: simplices, complexes, and the four local sets
//!   (star, core, unit ball, unit sphere) of the finite topology.
//! - [`generators`]: Whitney clique complexes, joins, suspensions,
//!   cross-polytopes, named skeletons, seeded random graphs.
//! - [`poly`] / [`valuations`]: f-vectors, f-functions, h-vectors,
//!   Dehn-Sommerville tests, the Barycentric refinement operator.
//! - [`homotopy`]: contractibility, manifold/sphere recognition,
//!   explicit Barycentric refinement.
//! - [`matrix`] / [`energy`]: big-integer matrices, determinants and ranks,
//!   Green and sphere-Green matrices, energy and sphere formulas.
//! - [`curvature`]: Gauss-Bonnet, Poincaré-Hopf, index expectation,
//!   center manifolds, discrete Sard level sets.
//! - [`hodge`]: exterior derivative, Hodge Laplacian, Betti numbers,
//!   Euler-Poincaré and McKean-Singer checks.

pub mod curvature;
pub mod energy;
pub mod generators;
pub mod hodge;
pub mod homotopy;
pub mod matrix;
pub mod poly;
pub mod simplex;
pub mod valuations;

mod error;

pub use error::Error;
pub use matrix::IntMatrix;
pub use poly::FPolynomial;
pub use simplex::{Simplex, SimplexSet, SimplicialComplex};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
