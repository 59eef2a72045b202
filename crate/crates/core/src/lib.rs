//! Lazy homology Hopf algebras over the rationals, in exact arithmetic.
//!
//! To a finite-dimensional Hopf algebra `H` (given by structure constants
//! over Q) this crate attaches two commutative Hopf algebras, the first and
//! second lazy homology of `H`, together with all the machinery needed to
//! compute them:
//!
//! - exact rational/integer linear algebra (RREF, Smith normal form,
//!   finitely presented abelian groups) in [`linalg`];
//! - Hopf algebras as structure-constant data, axiom verification, the
//!   convolution calculus, and laziness predicates in [`hopf`];
//! - the lazy quotient coalgebras and the first lazy homology in
//!   [`quotients`];
//! - presented commutative Hopf algebras (Laurent times polynomial shape),
//!   the free commutative Hopf algebra on a pointed coalgebra, Hopf kernels
//!   and quotients in [`presented`];
//! - the second-homology pipeline (d2, d3, Hopf-kernel quotient) in
//!   [`homology`];
//! - independent oracles (bar-resolution group homology, centers and
//!   abelianizations, fusion grading groups) in [`oracles`];
//! - JSON input/output and report assembly for the thin `lazyhom` binary in
//!   [`cli`].
//!
//! Every computation is exact; floating point appears nowhere. See the
//! `examples/` directory for runnable tours of each capability.

pub mod cli;
pub mod error;
pub mod groups;
pub mod homology;
pub mod hopf;
pub mod linalg;
pub mod oracles;
pub mod presented;
pub mod quotients;

pub use error::{Error, Result};
