//! Pointed-structure analysis: grouplikes and (g,g)-skew-primitives.

use super::{add_term, FinDimCoalgebra, TensorVec};
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, qone, qzero, QMatrix, QVector, Rational};
use num::Zero;

/// A coalgebra together with a basis of grouplikes and (g,g)-skew-primitives.
///
/// The profile basis lists the grouplikes first, then the skew-primitives;
/// `to_profile` converts coalgebra coordinates into profile coordinates.
#[derive(Clone, Debug)]
pub struct PointedCoalgebra {
    coalgebra: FinDimCoalgebra,
    grouplikes: Vec<QVector>,
    skews: Vec<(QVector, usize)>,
    to_profile: QMatrix,
    from_profile: QMatrix,
}

impl PointedCoalgebra {
    pub fn coalgebra(&self) -> &FinDimCoalgebra {
        &self.coalgebra
    }

    pub fn num_grouplikes(&self) -> usize {
        self.grouplikes.len()
    }

    pub fn num_skews(&self) -> usize {
        self.skews.len()
    }

    pub fn grouplikes(&self) -> &[QVector] {
        &self.grouplikes
    }

    pub fn skews(&self) -> &[(QVector, usize)] {
        &self.skews
    }

    /// Grouplike index that the i-th skew-primitive sits over.
    pub fn skew_grouplike(&self, i: usize) -> usize {
        self.skews[i].1
    }

    pub fn to_profile(&self) -> &QMatrix {
        &self.to_profile
    }

    pub fn from_profile(&self) -> &QMatrix {
        &self.from_profile
    }

    /// Coordinates of `v` in the profile basis.
    pub fn profile_coords(&self, v: &[Rational]) -> QVector {
        self.to_profile.mul_vec(v)
    }
}

fn grouplike_equation_holds(c: &FinDimCoalgebra, v: &[Rational]) -> bool {
    let d = c.comult_vec(v);
    let mut vv = TensorVec::new();
    for (i, a) in v.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in v.iter().enumerate() {
            add_term(&mut vv, (i, j), a * b);
        }
    }
    d == vv
}

/// Kernel of v ↦ Δv - g ⊗ v - v ⊗ h as a matrix on coordinates.
fn skew_space(c: &FinDimCoalgebra, g: &[Rational], h: &[Rational]) -> Vec<QVector> {
    let n = c.dim();
    let mut m = QMatrix::zero(n * n, n);
    for col in 0..n {
        let mut e = vec![qzero(); n];
        e[col] = qone();
        for (j, k, w) in c.comult_terms(col) {
            m[(j * n + k, col)] = &m[(j * n + k, col)] + w;
        }
        for (p, gp) in g.iter().enumerate() {
            if !gp.is_zero() {
                m[(p * n + col, col)] = &m[(p * n + col, col)] - gp;
            }
        }
        for (q, hq) in h.iter().enumerate() {
            if !hq.is_zero() {
                m[(col * n + q, col)] = &m[(col * n + q, col)] - hq;
            }
        }
    }
    kernel_basis(&m)
}

/// Classifies a coalgebra as grouplikes plus (g,g)-skew-primitives.
///
/// Candidates are tested for the grouplike equation after ε-normalization;
/// the skew spaces are then found by exact linear solving. Fails with the
/// unspanned complement dimension when the pointed elements do not span —
/// this is the scoping boundary of the whole downstream pipeline.
pub fn pointed_profile(c: &FinDimCoalgebra, candidates: &[QVector]) -> Result<PointedCoalgebra> {
    let n = c.dim();
    let mut grouplikes: Vec<QVector> = Vec::new();
    for cand in candidates {
        assert_eq!(cand.len(), n, "candidate dimension");
        let e = c.counit_of(cand);
        if e.is_zero() {
            continue;
        }
        let v: QVector = cand.iter().map(|x| x / &e).collect();
        if grouplike_equation_holds(c, &v) && !grouplikes.contains(&v) {
            grouplikes.push(v);
        }
    }

    // accumulate a profile basis, rejecting dependent vectors
    let mut accepted: Vec<QVector> = Vec::new();
    let mut keep_grouplikes: Vec<QVector> = Vec::new();
    for g in &grouplikes {
        if independent_of(&accepted, g) {
            accepted.push(g.clone());
            keep_grouplikes.push(g.clone());
        }
    }
    let grouplikes = keep_grouplikes;

    let mut skews: Vec<(QVector, usize)> = Vec::new();
    // grouplike-spanned coalgebras need no skew solving at all
    if accepted.len() < n {
        for (gi, g) in grouplikes.iter().enumerate() {
            for v in skew_space(c, g, g) {
                debug_assert!(c.counit_of(&v).is_zero());
                if independent_of(&accepted, &v) {
                    accepted.push(v.clone());
                    skews.push((v, gi));
                }
            }
            if accepted.len() == n {
                break;
            }
        }
    }

    if accepted.len() < n {
        let mut mixed = Vec::new();
        for (i, g) in grouplikes.iter().enumerate() {
            for (j, h) in grouplikes.iter().enumerate() {
                if i != j {
                    let d = skew_space(c, g, h).len();
                    if d > 0 {
                        mixed.push(format!("({i},{j})-skew dim {d}"));
                    }
                }
            }
        }
        let detail = if mixed.is_empty() {
            String::new()
        } else {
            format!("; mixed skew-primitive pairs present: {}", mixed.join(", "))
        };
        return Err(Error::UnsupportedShape {
            complement_dim: n - accepted.len(),
            detail,
        });
    }

    let from_profile = QMatrix::from_fn(n, n, |i, j| accepted[j][i].clone());
    let to_profile = from_profile
        .inverse()
        .expect("profile basis matrix is invertible");
    Ok(PointedCoalgebra {
        coalgebra: c.clone(),
        grouplikes,
        skews,
        to_profile,
        from_profile,
    })
}

fn independent_of(accepted: &[QVector], v: &[Rational]) -> bool {
    if v.iter().all(Zero::is_zero) {
        return false;
    }
    if accepted.is_empty() {
        return true;
    }
    let mut rows: Vec<QVector> = accepted.to_vec();
    rows.push(v.to_vec());
    QMatrix::from_rows(rows).rank() == accepted.len() + 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups;
    use crate::hopf::{group_algebra, sweedler_h4};

    #[test]
    fn group_algebra_is_all_grouplike() {
        let h = group_algebra(&groups::s3());
        let candidates: Vec<QVector> = (0..6).map(|i| h.basis_vec(i)).collect();
        let p = pointed_profile(h.coalgebra(), &candidates).unwrap();
        assert_eq!(p.num_grouplikes(), 6);
        assert_eq!(p.num_skews(), 0);
    }

    #[test]
    fn sweedler_profile_two_grouplikes_two_skews() {
        // H4 itself: grouplikes 1, g; x and y are (1,g)/(g,1)-skew, so the
        // (g,g)-scan cannot span — the shape error reports complement 2
        let h = sweedler_h4();
        let candidates: Vec<QVector> = (0..4).map(|i| h.basis_vec(i)).collect();
        let err = pointed_profile(h.coalgebra(), &candidates).unwrap_err();
        match err {
            Error::UnsupportedShape { complement_dim, detail } => {
                assert_eq!(complement_dim, 2);
                assert!(detail.contains("mixed"), "detail: {detail}");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn primitive_next_to_single_grouplike() {
        // 2-dim coalgebra k[t]/(t^2) duality: Δu = u⊗u stand-in via
        // basis {g, v}: Δg = g⊗g, Δv = g⊗v + v⊗g
        let c = FinDimCoalgebra::new(
            vec!["g".into(), "v".into()],
            vec![
                vec![(0, 0, qone())],
                vec![(0, 1, qone()), (1, 0, qone())],
            ],
            vec![qone(), qzero()],
        )
        .unwrap();
        let candidates = vec![vec![qone(), qzero()]];
        let p = pointed_profile(&c, &candidates).unwrap();
        assert_eq!(p.num_grouplikes(), 1);
        assert_eq!(p.num_skews(), 1);
        assert_eq!(p.skew_grouplike(0), 0);
    }
}
