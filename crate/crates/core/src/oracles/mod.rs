//! Independent verification oracles: bar-resolution group homology,
//! group-theoretic helpers, and the universal abelian grading group of a
//! fusion ring.

mod bar;
mod fusion;

pub use bar::{bar_homology, group_abelianization, group_center, DEFAULT_GROUP_ORDER_BOUND};
pub use fusion::{fusion_grading, FusionRing};

pub use crate::groups::FiniteGroup;
