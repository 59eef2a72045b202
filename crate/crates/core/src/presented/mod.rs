//! Symbolic commutative Hopf algebras of shape k[Λ] ⊗ k[Y₁..Yₙ]:
//! Takeuchi's free construction on pointed coalgebras, morphisms, Hopf
//! kernels, and descriptor-producing quotients.

mod algebra;
mod descriptor;
mod element;
mod free;
mod kernel;
mod morphism;

pub use algebra::PresentedCommHopf;
pub use descriptor::{
    character_group_descriptor, quotient_by_relations, CharacterReport, HomologyDescriptor,
};
pub use element::{Element, Monomial, TensorElt};
pub use free::{free_commutative_hopf, FreeCommHopf};
pub use kernel::{hopf_kernel, HopfKernel};
pub use morphism::PresentedMorphism;
