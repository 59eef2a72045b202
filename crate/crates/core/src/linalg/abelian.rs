//! Finitely presented abelian groups normalized by Smith normal form.

use super::{smith_normal_form, ZMatrix, ZVector};
use num::{BigInt, One, Signed, Zero};

/// `Z^n / <relations>` in invariant-factor form.
///
/// `invariant_factors` lists the nontrivial factors d_1 | d_2 | ... with
/// d_i > 1, followed by one 0 per free rank. The witness data maps an
/// arbitrary exponent vector on the generators to a canonical normal form.
#[derive(Clone, Debug)]
pub struct FPAbelianGroup {
    labels: Vec<String>,
    invariant_factors: Vec<BigInt>,
    // normal-form witness: coordinates transform by u, then reduce mod moduli
    u: ZMatrix,
    moduli: ZVector,
}

impl FPAbelianGroup {
    pub fn num_gens(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn invariant_factors_i64(&self) -> Vec<i64> {
        self.invariant_factors
            .iter()
            .map(|d| i64::try_from(d).expect("invariant factor fits i64"))
            .collect()
    }

    pub fn free_rank(&self) -> usize {
        self.invariant_factors.iter().filter(|d| d.is_zero()).count()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    /// Group order; `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank() > 0 {
            return None;
        }
        Some(
            self.invariant_factors
                .iter()
                .fold(BigInt::one(), |acc, d| acc * d),
        )
    }

    /// Canonical normal form of a generator exponent vector.
    pub fn normal_form(&self, exponents: &[BigInt]) -> ZVector {
        assert_eq!(exponents.len(), self.num_gens(), "exponent length");
        let w = self.u.mul_vec(exponents);
        w.iter()
            .zip(&self.moduli)
            .map(|(x, m)| {
                if m.is_zero() {
                    x.clone()
                } else {
                    let r = x % m;
                    if r.is_negative() {
                        r + m
                    } else {
                        r
                    }
                }
            })
            .collect()
    }

    pub fn same_class(&self, a: &[BigInt], b: &[BigInt]) -> bool {
        self.normal_form(a) == self.normal_form(b)
    }

    pub fn is_identity(&self, a: &[BigInt]) -> bool {
        self.normal_form(a).iter().all(Zero::is_zero)
    }
}

impl std::fmt::Display for FPAbelianGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.invariant_factors.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .invariant_factors
            .iter()
            .map(|d| {
                if d.is_zero() {
                    "Z".to_string()
                } else {
                    format!("Z/{d}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

/// Quotient of the free abelian group on `num_gens` generators by the
/// given relation vectors.
pub fn fp_abelian_group(num_gens: usize, relations: &[ZVector]) -> FPAbelianGroup {
    fp_abelian_group_labeled(
        (0..num_gens).map(|i| format!("g{i}")).collect(),
        relations,
    )
}

pub fn fp_abelian_group_labeled(labels: Vec<String>, relations: &[ZVector]) -> FPAbelianGroup {
    let num_gens = labels.len();
    for r in relations {
        assert_eq!(r.len(), num_gens, "relation length");
    }
    let rel = if relations.is_empty() {
        ZMatrix::zero(num_gens, 1)
    } else {
        ZMatrix::from_cols(relations.to_vec())
    };
    let snf = smith_normal_form(&rel);
    let diag = snf.diagonal();
    let moduli: ZVector = (0..num_gens)
        .map(|i| diag.get(i).cloned().unwrap_or_else(BigInt::zero))
        .collect();
    let mut invariant_factors: Vec<BigInt> = moduli
        .iter()
        .filter(|d| !d.is_one() && !d.is_zero())
        .cloned()
        .collect();
    invariant_factors.extend(moduli.iter().filter(|d| d.is_zero()).cloned());
    FPAbelianGroup {
        labels,
        invariant_factors,
        u: snf.u,
        moduli,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zv(v: &[i64]) -> ZVector {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn klein_four() {
        let g = fp_abelian_group(2, &[zv(&[2, 0]), zv(&[0, 2])]);
        assert_eq!(g.invariant_factors_i64(), vec![2, 2]);
        assert_eq!(g.order(), Some(BigInt::from(4)));
    }

    #[test]
    fn free_of_rank_one() {
        let g = fp_abelian_group(1, &[]);
        assert_eq!(g.invariant_factors_i64(), vec![0]);
        assert_eq!(g.order(), None);
        assert!(!g.is_identity(&zv(&[3])));
    }

    #[test]
    fn identified_generators() {
        let g = fp_abelian_group(2, &[zv(&[1, -1])]);
        assert_eq!(g.invariant_factors_i64(), vec![0]);
        assert!(g.same_class(&zv(&[1, 0]), &zv(&[0, 1])));
        assert!(!g.is_identity(&zv(&[1, 0])));
    }

    #[test]
    fn square_relations_order_is_det() {
        // |det| = 12
        let g = fp_abelian_group(2, &[zv(&[2, 0]), zv(&[2, 6])]);
        assert_eq!(g.order(), Some(BigInt::from(12)));
    }

    #[test]
    fn normal_form_respects_relations() {
        let g = fp_abelian_group(2, &[zv(&[2, 0]), zv(&[0, 3])]);
        assert!(g.is_identity(&zv(&[2, 3])));
        assert!(g.same_class(&zv(&[1, 1]), &zv(&[3, 4])));
        assert!(!g.same_class(&zv(&[1, 0]), &zv(&[0, 1])));
        assert_eq!(g.order(), Some(BigInt::from(6)));
    }
}
