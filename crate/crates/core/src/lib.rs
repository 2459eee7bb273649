//! Exact-arithmetic toolkit for Cayley polytopes of polytope collections.
//!
//! Everything here is computed over arbitrary-precision rationals: convex
//! hulls and face lattices of V-polytopes, Minkowski sums, the Cayley
//! embedding of a collection of polytopes, the Cayley complex and its
//! relative counterpart with their f/h-vectors, and the graded quotient of
//! the Stanley–Reisner ring by the coordinate linear system together with
//! rank certificates for multiplication by powers of the vertex-sum element.
//!
//! The [`verify`] module packages the cross-checks (face-number
//! correspondence, the h-vector duality, the Schenzel tail values,
//! Lefschetz injectivity, h-monotonicity) into machine-readable reports and
//! a config-driven suite.
//!
//! ```
//! use caylex::complexes::{h_from_f, CayleyCombinatorics};
//! use caylex::linalg::rat;
//! use caylex::polytope::cayley::cayley_polytope;
//! use caylex::polytope::generators::{cyclic_polytope, perturb};
//! use caylex::polytope::PureCollection;
//!
//! // Two polygons, perturbed into general position.
//! let base = PureCollection::new(
//!     2,
//!     vec![cyclic_polytope(2, 5)?, cyclic_polytope(2, 6)?],
//! )?;
//! let collection = perturb(&base, &rat(1, 50), 42)?;
//!
//! // The mixed faces of the Cayley polytope, closed under subfaces.
//! let comb = CayleyCombinatorics::new(&cayley_polytope(&collection))?;
//! let t = comb.cayley_complex()?;
//! let h = h_from_f(&t.f_vector(), comb.h_dim())?;
//! assert_eq!(h.get(0), 1);
//!
//! // Face numbers of the Minkowski sum, read off the relative complex.
//! let predicted = comb.minkowski_f_prediction()?;
//! assert_eq!(predicted.get(0), 11); // a generic 5-gon + 6-gon sum
//! # Ok::<(), caylex::Error>(())
//! ```

pub mod complexes;
pub mod error;
pub mod facering;
pub mod io;
pub mod linalg;
pub mod polytope;
pub mod verify;

pub use complexes::{FVector, HVector, RelativeComplex, SimplicialComplex};
pub use error::Error;
pub use facering::{GradedQuotient, LefschetzCertificate};
pub use linalg::{QMatrix, Rational};
pub use polytope::{CayleyPolytope, FaceLattice, FacetDescription, Polytope, PureCollection};
pub use verify::{CheckReport, SuiteConfig};

/// Convenience alias used throughout: exact results or a domain error.
pub type Result<T> = std::result::Result<T, Error>;
