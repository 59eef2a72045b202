//! Fusion rings and the universal abelian grading group.

use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::linalg::{fp_abelian_group_labeled, FPAbelianGroup};
use num::BigInt;
use std::collections::BTreeMap;

/// Fusion multiplicities d^ν_{λμ} over a finite label set with unit label.
#[derive(Clone, Debug)]
pub struct FusionRing {
    labels: Vec<String>,
    unit: usize,
    mult: BTreeMap<(usize, usize, usize), u64>,
    dims: Option<Vec<u64>>,
}

impl FusionRing {
    pub fn new(
        labels: Vec<String>,
        unit_label: &str,
        mult: BTreeMap<(usize, usize, usize), u64>,
        dims: Option<Vec<u64>>,
    ) -> Result<Self> {
        let unit = labels
            .iter()
            .position(|l| l == unit_label)
            .ok_or_else(|| Error::Precondition(format!("unit label '{unit_label}' not found")))?;
        let n = labels.len();
        for (&(a, b, c), &m) in &mult {
            if a >= n || b >= n || c >= n {
                return Err(Error::Precondition(format!(
                    "fusion index out of range: ({a},{b},{c})"
                )));
            }
            let _ = m;
        }
        let ring = FusionRing {
            labels,
            unit,
            mult,
            dims,
        };
        ring.check_unit_law()?;
        Ok(ring)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn multiplicity(&self, a: usize, b: usize, c: usize) -> u64 {
        self.mult.get(&(a, b, c)).copied().unwrap_or(0)
    }

    fn check_unit_law(&self) -> Result<()> {
        let n = self.rank();
        for b in 0..n {
            for c in 0..n {
                let expected = u64::from(b == c);
                if self.multiplicity(self.unit, b, c) != expected
                    || self.multiplicity(b, self.unit, c) != expected
                {
                    return Err(Error::Precondition(format!(
                        "unit law fails at labels ({b},{c})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Associativity of the fusion product: Σ_s d^s_{ab} d^t_{sc} = Σ_s d^s_{bc} d^t_{as}.
    pub fn check_associativity(&self) -> Result<()> {
        let n = self.rank();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for t in 0..n {
                        let lhs: u64 = (0..n)
                            .map(|s| self.multiplicity(a, b, s) * self.multiplicity(s, c, t))
                            .sum();
                        let rhs: u64 = (0..n)
                            .map(|s| self.multiplicity(b, c, s) * self.multiplicity(a, s, t))
                            .sum();
                        if lhs != rhs {
                            return Err(Error::Precondition(format!(
                                "fusion associativity fails at ({a},{b},{c};{t})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Dimension consistency d_a d_b = Σ_c d^c_{ab} d_c, when dims are given.
    pub fn check_dims(&self) -> Result<()> {
        let Some(dims) = &self.dims else {
            return Ok(());
        };
        let n = self.rank();
        for a in 0..n {
            for b in 0..n {
                let rhs: u64 = (0..n).map(|c| self.multiplicity(a, b, c) * dims[c]).sum();
                if dims[a] * dims[b] != rhs {
                    return Err(Error::Precondition(format!(
                        "fusion dimensions inconsistent at ({a},{b})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// The pointed fusion ring of a finite group: labels are the elements
    /// and the product is group multiplication.
    pub fn pointed(g: &FiniteGroup) -> FusionRing {
        let n = g.order();
        let mut mult = BTreeMap::new();
        for a in 0..n {
            for b in 0..n {
                mult.insert((a, b, g.mul(a, b)), 1);
            }
        }
        FusionRing {
            labels: g.labels().to_vec(),
            unit: 0,
            mult,
            dims: Some(vec![1; n]),
        }
    }
}

/// The universal abelian grading group: the free abelian group on the
/// labels modulo λ + μ - ν whenever d^ν_{λμ} > 0.
pub fn fusion_grading(f: &FusionRing) -> FPAbelianGroup {
    let n = f.rank();
    let mut relations = Vec::new();
    for (&(a, b, c), &m) in &f.mult {
        if m > 0 {
            let mut v = vec![BigInt::from(0); n];
            v[a] += 1;
            v[b] += 1;
            v[c] -= 1;
            relations.push(v);
        }
    }
    fp_abelian_group_labeled(f.labels().to_vec(), &relations)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups;
    use crate::oracles::group_abelianization;

    fn rep_s3() -> FusionRing {
        // irreducibles 1, sgn, V with V⊗V = 1 + sgn + V
        let labels = vec!["1".into(), "sgn".into(), "V".into()];
        let mut mult = BTreeMap::new();
        for i in 0..3 {
            mult.insert((0, i, i), 1);
            mult.insert((i, 0, i), 1);
        }
        mult.insert((1, 1, 0), 1);
        mult.insert((1, 2, 2), 1);
        mult.insert((2, 1, 2), 1);
        mult.insert((2, 2, 0), 1);
        mult.insert((2, 2, 1), 1);
        mult.insert((2, 2, 2), 1);
        FusionRing::new(labels, "1", mult, Some(vec![1, 1, 2])).unwrap()
    }

    #[test]
    fn rep_s3_grading_trivial() {
        let f = rep_s3();
        f.check_associativity().unwrap();
        f.check_dims().unwrap();
        assert!(fusion_grading(&f).is_trivial());
    }

    #[test]
    fn pointed_fusion_gives_abelianization() {
        for g in [groups::s3(), groups::d4(), groups::q8(), groups::cyclic(6)] {
            let f = FusionRing::pointed(&g);
            f.check_associativity().unwrap();
            assert_eq!(
                fusion_grading(&f).invariant_factors_i64(),
                group_abelianization(&g).invariant_factors_i64(),
                "pointed grading != abelianization for {}",
                g.name()
            );
        }
    }

    #[test]
    fn grading_invariant_under_label_permutation_and_scaling() {
        let f = rep_s3();
        let base = fusion_grading(&f).invariant_factors_i64();
        // permute labels (swap sgn and V)
        let perm = [0usize, 2, 1];
        let mut mult = BTreeMap::new();
        for (&(a, b, c), &m) in &f.mult {
            mult.insert((perm[a], perm[b], perm[c]), m);
        }
        let g = FusionRing::new(
            vec!["1".into(), "V".into(), "sgn".into()],
            "1",
            mult,
            None,
        )
        .unwrap();
        assert_eq!(fusion_grading(&g).invariant_factors_i64(), base);
        // scale all multiplicities (only positivity matters)
        let mut mult = BTreeMap::new();
        for (&k, &m) in &f.mult {
            mult.insert(k, 7 * m);
        }
        let scaled = FusionRing {
            labels: f.labels.clone(),
            unit: f.unit,
            mult,
            dims: None,
        };
        assert_eq!(fusion_grading(&scaled).invariant_factors_i64(), base);
    }

    #[test]
    fn bad_unit_rejected() {
        let labels = vec!["1".into(), "a".into()];
        let mult = BTreeMap::new(); // unit law fails: 1⊗1 has no unit component
        assert!(FusionRing::new(labels, "1", mult, None).is_err());
    }
}
