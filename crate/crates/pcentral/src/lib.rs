//! Exact computational toolkit for Clifford algebras of p-central sets.
//!
//! Three capabilities, all over exact arithmetic (arbitrary-precision
//! rationals in Q(ρ), integers in Z\[ρ\], residues in Z/pZ):
//!
//! - **Structure**: the algebra presented by `x_k^p = α_k` and
//!   `x_i x_j = ρ^{C_{i,j}} x_j x_i` decomposes into a tensor product of
//!   p-cyclic symbol algebras and a commutative part. [`FpMatrix::reduce_alternating`]
//!   brings the commutation matrix to hyperbolic block form and
//!   [`clifford::decompose`] transports the generators along it, certifying
//!   every relation by element arithmetic.
//! - **Coherence at p = 3**: star products classify triples of 3-central
//!   elements, tournaments record the pairwise commutation directions, and
//!   [`tournament`] validates the structural rules, diminishes triangles
//!   away, and searches monomial classes for maximal coherent sets.
//! - **Cubic Diophantine solutions**: conjugation inside the degree-3 symbol
//!   algebra proves a polynomial identity over Z\[ρ\] which [`cubic`] turns
//!   into verified parametric solutions of `γY³ = γX₁³ + βX₂³ + γ²β²X₃³`.
//!
//! Every runnable capability has an example under `examples/`; the `pcentral`
//! binary exposes the same operations as batch subcommands with stable JSON
//! formats.

pub mod clifford;
pub mod cubic;
pub mod cyclo;
pub mod eisenstein;
pub mod error;
pub mod fp;
pub mod json;
pub mod linalg;
pub mod tournament;

pub use clifford::{
    change_generators, classify_triple, decompose, spans_p_central_space, star2, star3,
    CliffordElement, Decomposition, PCentralPresentation, TripleCase,
};
pub use cubic::{
    enumerate_solutions, gen_solution, gen_solution_raw, verify_core_identity, verify_solution,
    CubicSolution, SymbolAlgebraModel,
};
pub use cyclo::CycloNum;
pub use eisenstein::EisensteinInt;
pub use error::{Error, Result};
pub use fp::FpScalar;
pub use linalg::{AlternatingReduction, FpMatrix};
pub use tournament::{max_coherent_monomial_set, MonomialClass, Tournament};
