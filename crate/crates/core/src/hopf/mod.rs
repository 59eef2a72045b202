//! Finite-dimensional Hopf algebras as structure-constant data.
//!
//! Elements are dense coordinate vectors over the labeled basis; coproducts
//! and products are stored sparsely. All checks are exact tensor identities.

mod builders;
mod coalgebra;
mod functional;
mod hopf_algebra;
mod pointed;

pub use builders::{dual, function_algebra, group_algebra, sweedler_h4, tensor_square};
pub use coalgebra::FinDimCoalgebra;
pub use functional::{
    coboundary, conv_inverse, conv_unit, convolve, is_lazy, is_lazy2, is_left_2cocycle,
    is_normalized2, LinearFunctional,
};
pub use hopf_algebra::{hopf_morphism_witness, verify_hopf, AxiomCheck, AxiomReport, FinDimHopf};
pub use pointed::{pointed_profile, PointedCoalgebra};

use crate::linalg::Rational;
use num::Zero;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

/// Sparse element of a tensor square, keyed by basis index pairs.
pub type TensorVec = BTreeMap<(usize, usize), Rational>;

/// Accumulates `val` at `key`, keeping the map free of explicit zeros.
pub(crate) fn add_term<K: Ord>(map: &mut BTreeMap<K, Rational>, key: K, val: Rational) {
    if val.is_zero() {
        return;
    }
    match map.entry(key) {
        Entry::Occupied(mut e) => {
            *e.get_mut() += val;
            if e.get().is_zero() {
                e.remove();
            }
        }
        Entry::Vacant(e) => {
            e.insert(val);
        }
    }
}
