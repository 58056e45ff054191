//! Exact symbolic computation in Verma modules over the exotic conformal
//! Galilei algebra.
//!
//! The crate builds the eleven-generator algebra from its structure
//! constants, realizes highest-weight Verma modules through a bracket-driven
//! normal-ordering engine, locates all singular vectors by exact nullspace
//! computation over `ℚ` or `ℚ(θ, d, r)`, evaluates the contravariant
//! bilinear form, and constructs the quotient by the submodule a singular
//! vector generates. A singular vector exists precisely when `2d + 3` is a
//! positive integer `p`, where it is `(2θC - K₋F₊)^p` applied to the
//! highest-weight vector; the quotient then carries no further singular
//! vectors. Both facts are re-derived here from the commutation relations
//! alone and verified exactly, with machine-readable reports.
//!
//! All core algorithms are generic over the coefficient [`Field`]; the two
//! instantiations are plain rationals (specialized parameter points) and
//! rational functions in `(θ, d, r)` (fully symbolic runs). There is no
//! floating point anywhere.

pub mod algebra;
pub mod error;
pub mod field;
pub mod linalg;
pub mod pbw;
pub mod poly;
pub mod quotient;
pub mod ratfn;
pub mod shapovalov;
pub mod solver;
pub mod verify;
pub mod weight;

pub use algebra::{bracket, check_jacobi, omega, Generator, LieElement, TriangularPart};
pub use error::{Error, Result};
pub use field::{parse_rational, Field, Rational};
pub use pbw::{HighestWeight, ModuleElement, Monomial, UeaWord, VermaModule};
pub use poly::{Polynomial, Var};
pub use quotient::{classify, ClassificationVerdict};
pub use ratfn::{RationalFunction, SpecPoint};
pub use weight::{enumerate_basis, weight_of, WeightLabel};

/// Engine over fully symbolic parameters `(θ, d, r)`.
pub type SymbolicEngine = VermaModule<RationalFunction>;

/// Engine specialized to a rational parameter point.
pub type NumericEngine = VermaModule<Rational>;

/// Module element with symbolic coefficients.
pub type SymbolicElement = ModuleElement<RationalFunction>;

/// Module element with rational coefficients.
pub type NumericElement = ModuleElement<Rational>;
