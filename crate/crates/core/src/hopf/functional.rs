//! The convolution calculus on linear functionals, and the laziness and
//! cocycle predicates it supports.
//!
//! A functional is a coordinate vector in the dual basis; all predicates
//! check the defining identities exactly on every basis element.

use super::{FinDimCoalgebra, FinDimHopf};
use crate::error::{Error, Result};
use crate::linalg::{qone, qzero, QMatrix, QVector, Rational};
use num::Zero;

/// Element of Hom(C, Q) in the dual basis of the coalgebra it is used with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearFunctional {
    pub coeffs: QVector,
}

impl LinearFunctional {
    pub fn new(coeffs: QVector) -> Self {
        LinearFunctional { coeffs }
    }

    pub fn apply(&self, v: &[Rational]) -> Rational {
        assert_eq!(v.len(), self.coeffs.len(), "functional domain");
        self.coeffs
            .iter()
            .zip(v)
            .map(|(a, b)| a * b)
            .fold(qzero(), |acc, x| acc + x)
    }
}

/// Unit of the convolution monoid: η∘ε.
pub fn conv_unit(c: &FinDimCoalgebra) -> LinearFunctional {
    LinearFunctional::new(c.counit().to_vec())
}

/// Convolution product (f*g)(x) = f(x₁) g(x₂).
pub fn convolve(
    c: &FinDimCoalgebra,
    f: &LinearFunctional,
    g: &LinearFunctional,
) -> LinearFunctional {
    assert_eq!(f.coeffs.len(), c.dim(), "functional domain");
    assert_eq!(g.coeffs.len(), c.dim(), "functional domain");
    let coeffs = (0..c.dim())
        .map(|i| {
            let mut acc = qzero();
            for (j, k, w) in c.comult_terms(i) {
                acc += w * &f.coeffs[*j] * &g.coeffs[*k];
            }
            acc
        })
        .collect();
    LinearFunctional::new(coeffs)
}

/// Convolution inverse: solves f*g = η∘ε exactly and verifies g*f = η∘ε.
pub fn conv_inverse(c: &FinDimCoalgebra, f: &LinearFunctional) -> Result<LinearFunctional> {
    assert_eq!(f.coeffs.len(), c.dim(), "functional domain");
    let n = c.dim();
    // (f*g)(e_i) = Σ_q [Σ_p Δ_i^{pq} f_p] g_q
    let a = QMatrix::from_fn(n, n, |i, q| {
        let mut acc = qzero();
        for (p, qq, w) in c.comult_terms(i) {
            if *qq == q {
                acc += w * &f.coeffs[*p];
            }
        }
        acc
    });
    let target: QVector = c.counit().to_vec();
    let g = a.solve(&target).ok_or(Error::NotConvInvertible)?;
    let g = LinearFunctional::new(g);
    if convolve(c, &g, f).coeffs != target || convolve(c, f, &g).coeffs != target {
        return Err(Error::NotConvInvertible);
    }
    Ok(g)
}

/// Laziness of μ ∈ Hom(H, Q): μ(x₁) ⊗ x₂ = μ(x₂) ⊗ x₁ for all x.
pub fn is_lazy(h: &FinDimHopf, mu: &LinearFunctional) -> bool {
    let n = h.dim();
    (0..n).all(|i| {
        let mut diff = vec![qzero(); n];
        for (p, q, w) in h.coalgebra().comult_terms(i) {
            diff[*q] += w * &mu.coeffs[*p];
            diff[*p] -= w * &mu.coeffs[*q];
        }
        diff.iter().all(Zero::is_zero)
    })
}

fn pair_index(n: usize, p: usize, q: usize) -> usize {
    p * n + q
}

/// Laziness of σ ∈ Hom(H⊗H, Q): σ(x₁⊗y₁) ⊗ x₂y₂ = σ(x₂⊗y₂) ⊗ x₁y₁.
pub fn is_lazy2(h: &FinDimHopf, sigma: &LinearFunctional) -> bool {
    let n = h.dim();
    assert_eq!(sigma.coeffs.len(), n * n, "functional domain H⊗H");
    for a in 0..n {
        for b in 0..n {
            let mut diff = vec![qzero(); n];
            for (p, q, w1) in h.coalgebra().comult_terms(a) {
                for (r, s, w2) in h.coalgebra().comult_terms(b) {
                    let w = w1 * w2;
                    let s_first = &sigma.coeffs[pair_index(n, *p, *r)];
                    let s_second = &sigma.coeffs[pair_index(n, *q, *s)];
                    for (u, c) in h.mult_terms(*q, *s) {
                        diff[*u] += &w * s_first * c;
                    }
                    for (u, c) in h.mult_terms(*p, *r) {
                        diff[*u] -= &w * s_second * c;
                    }
                }
            }
            if !diff.iter().all(Zero::is_zero) {
                return false;
            }
        }
    }
    true
}

/// Normalization σ(x⊗1) = ε(x) = σ(1⊗x).
pub fn is_normalized2(h: &FinDimHopf, sigma: &LinearFunctional) -> bool {
    let n = h.dim();
    (0..n).all(|i| {
        let mut left = qzero();
        let mut right = qzero();
        for (j, u) in h.unit().iter().enumerate() {
            left += u * &sigma.coeffs[pair_index(n, i, j)];
            right += u * &sigma.coeffs[pair_index(n, j, i)];
        }
        left == h.counit()[i] && right == h.counit()[i]
    })
}

/// Left 2-cocycle identity σ(x₁⊗y₁) σ(x₂y₂⊗z) = σ(y₁⊗z₁) σ(x⊗y₂z₂).
pub fn is_left_2cocycle(h: &FinDimHopf, sigma: &LinearFunctional) -> bool {
    let n = h.dim();
    assert_eq!(sigma.coeffs.len(), n * n, "functional domain H⊗H");
    for a in 0..n {
        for b in 0..n {
            for z in 0..n {
                let mut left = qzero();
                for (p, q, w1) in h.coalgebra().comult_terms(a) {
                    for (r, s, w2) in h.coalgebra().comult_terms(b) {
                        let w = w1 * w2 * &sigma.coeffs[pair_index(n, *p, *r)];
                        if w.is_zero() {
                            continue;
                        }
                        for (u, c) in h.mult_terms(*q, *s) {
                            left += &w * c * &sigma.coeffs[pair_index(n, *u, z)];
                        }
                    }
                }
                let mut right = qzero();
                for (p, q, w1) in h.coalgebra().comult_terms(b) {
                    for (r, s, w2) in h.coalgebra().comult_terms(z) {
                        let w = w1 * w2 * &sigma.coeffs[pair_index(n, *p, *r)];
                        if w.is_zero() {
                            continue;
                        }
                        for (u, c) in h.mult_terms(*q, *s) {
                            right += &w * c * &sigma.coeffs[pair_index(n, a, *u)];
                        }
                    }
                }
                if left != right {
                    return false;
                }
            }
        }
    }
    true
}

/// Coboundary ∂(μ)(x⊗y) = μ(x₁) μ(y₁) μ⁻¹(x₂y₂) for normalized invertible μ.
pub fn coboundary(h: &FinDimHopf, mu: &LinearFunctional) -> Result<LinearFunctional> {
    let mu_one = mu.apply(h.unit());
    if mu_one != qone() {
        return Err(Error::Precondition(format!(
            "coboundary needs μ(1) = 1, got {mu_one}"
        )));
    }
    let mu_inv = conv_inverse(h.coalgebra(), mu)?;
    let n = h.dim();
    let mut coeffs = vec![qzero(); n * n];
    for a in 0..n {
        for b in 0..n {
            let mut acc = qzero();
            for (p, q, w1) in h.coalgebra().comult_terms(a) {
                for (r, s, w2) in h.coalgebra().comult_terms(b) {
                    let w = w1 * w2 * &mu.coeffs[*p] * &mu.coeffs[*r];
                    if w.is_zero() {
                        continue;
                    }
                    for (u, c) in h.mult_terms(*q, *s) {
                        acc += &w * c * &mu_inv.coeffs[*u];
                    }
                }
            }
            coeffs[pair_index(n, a, b)] = acc;
        }
    }
    Ok(LinearFunctional::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups;
    use crate::hopf::{group_algebra, sweedler_h4};
    use crate::linalg::rat;

    #[test]
    fn convolution_unit_is_neutral() {
        let h = sweedler_h4();
        let c = h.coalgebra();
        let f = LinearFunctional::new(vec![rat(3), rat(-1), rat(2), rat(7)]);
        let e = conv_unit(c);
        assert_eq!(convolve(c, &f, &e), f);
        assert_eq!(convolve(c, &e, &f), f);
    }

    #[test]
    fn sign_character_on_c2_is_self_inverse() {
        let h = group_algebra(&groups::cyclic(2));
        let c = h.coalgebra();
        let f = LinearFunctional::new(vec![rat(1), rat(-1)]);
        let inv = conv_inverse(c, &f).unwrap();
        assert_eq!(inv, f);
        assert_eq!(convolve(c, &f, &f), conv_unit(c));
    }

    #[test]
    fn eps_plus_dual_x_inverse_on_sweedler() {
        // (ε + x*) ∗ (ε - x*) = η∘ε, expanded through Δ(x) = 1⊗x + x⊗g
        let h = sweedler_h4();
        let c = h.coalgebra();
        let mut plus = conv_unit(c);
        plus.coeffs[2] += rat(1);
        let mut minus = conv_unit(c);
        minus.coeffs[2] -= rat(1);
        assert_eq!(convolve(c, &plus, &minus), conv_unit(c));
        assert_eq!(conv_inverse(c, &plus).unwrap(), minus);
    }

    #[test]
    fn counit_is_lazy_and_trivial_coboundary() {
        let h = sweedler_h4();
        let eps = conv_unit(h.coalgebra());
        assert!(is_lazy(&h, &eps));
        let d = coboundary(&h, &eps).unwrap();
        // ∂(ε)(x⊗y) = ε(x)ε(y)
        let n = h.dim();
        for a in 0..n {
            for b in 0..n {
                assert_eq!(d.coeffs[a * n + b], &h.counit()[a] * &h.counit()[b]);
            }
        }
        assert!(is_lazy2(&h, &d));
        assert!(is_left_2cocycle(&h, &d));
        assert!(is_normalized2(&h, &d));
    }

    #[test]
    fn sweedler_character_chi_not_lazy() {
        // χ(1)=1, χ(g)=-1, χ(x)=χ(y)=0 fails laziness on x: x = -x
        let h = sweedler_h4();
        let chi = LinearFunctional::new(vec![rat(1), rat(-1), rat(0), rat(0)]);
        assert!(!is_lazy(&h, &chi));
    }

    #[test]
    fn grouplike_builders_make_everything_lazy() {
        // cocommutative H: the laziness identity degenerates
        let h = group_algebra(&groups::s3());
        let f = LinearFunctional::new((0..6).map(|i| rat(i + 1)).collect());
        assert!(is_lazy(&h, &f));
    }

    #[test]
    fn coboundary_of_lazy_mu_is_lazy_cocycle() {
        // on H4 the laziness identity pins μ(g) = μ(1) and μ(x) = μ(y) = 0,
        // so ε is the only normalized lazy functional; richer samples live on
        // the cocommutative group algebras, where every functional is lazy
        let h4 = sweedler_h4();
        let eps = conv_unit(h4.coalgebra());
        assert!(is_lazy(&h4, &eps));
        let d = coboundary(&h4, &eps).unwrap();
        assert!(is_lazy2(&h4, &d) && is_left_2cocycle(&h4, &d) && is_normalized2(&h4, &d));

        let h = group_algebra(&groups::s3());
        let samples = [
            vec![rat(1), rat(2), rat(1), rat(-1), rat(3), crate::linalg::ratio(1, 2)],
            vec![rat(1), rat(1), rat(-1), rat(1), rat(-1), rat(1)],
            vec![rat(1), crate::linalg::ratio(2, 3), rat(5), rat(1), rat(-2), rat(7)],
        ];
        for coeffs in samples {
            let mu = LinearFunctional::new(coeffs);
            assert!(is_lazy(&h, &mu));
            assert_eq!(mu.apply(h.unit()), rat(1));
            let d = coboundary(&h, &mu).unwrap();
            assert!(is_lazy2(&h, &d), "coboundary not lazy");
            assert!(is_left_2cocycle(&h, &d), "coboundary not a cocycle");
            assert!(is_normalized2(&h, &d), "coboundary not normalized");
        }
    }

    #[test]
    fn non_invertible_functional_rejected() {
        let h = sweedler_h4();
        let zero = LinearFunctional::new(vec![rat(0); 4]);
        assert!(conv_inverse(h.coalgebra(), &zero).is_err());
    }
}
