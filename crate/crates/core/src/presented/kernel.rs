//! Hopf kernels for the scoped morphism shape: purely Laurent target,
//! polynomial generators mapping to zero, Laurent generators mapping to
//! monomials.

use super::algebra::PresentedCommHopf;
use super::element::{Element, Monomial};
use super::morphism::PresentedMorphism;
use crate::error::{Error, Result};
use crate::linalg::{abelian_kernel, qone, QMatrix, Rational, ZMatrix};
use num::{BigInt, One};

/// HKer(f) = k[ker(Λ → Λ')] ⊗ k[X_h], with X_h = T^{-tag(h)} Y_h primitive.
#[derive(Clone, Debug)]
pub struct HopfKernel {
    pub algebra: PresentedCommHopf,
    /// Realizes the kernel generators inside the source of the morphism.
    pub inclusion: PresentedMorphism,
    /// Lattice basis of the Laurent kernel, in source exponent coordinates.
    pub kernel_basis: Vec<Vec<i64>>,
    // rational matrix with the kernel basis as columns, for coordinate solving
    coords_matrix: QMatrix,
}

impl HopfKernel {
    /// Rewrites a source element lying in the Hopf kernel into kernel
    /// coordinates; errors when the element is not expressible.
    pub fn rewrite(&self, e: &Element) -> Result<Element> {
        let src = &self.inclusion.target;
        let mut out = Element::zero();
        for (m, c) in &e.terms {
            // substitute Y_h = T^{tag} X_h: Laurent part gains Σ deg·tag
            let mut laurent: Vec<i64> = m.laurent.clone();
            for (h, &d) in m.poly.iter().enumerate() {
                if d > 0 {
                    for (i, t) in src.poly_tags[h].iter().enumerate() {
                        laurent[i] += t * i64::from(d);
                    }
                }
            }
            let target: Vec<Rational> = laurent
                .iter()
                .map(|&x| Rational::from_integer(BigInt::from(x)))
                .collect();
            let sol = self.coords_matrix.solve(&target).ok_or_else(|| {
                Error::RewriteFailure(format!(
                    "monomial {} lies outside the kernel lattice",
                    src.render(&Element::from_monomial(m.clone(), qone()))
                ))
            })?;
            let mut coords = Vec::with_capacity(sol.len());
            for x in &sol {
                if !x.denom().is_one() {
                    return Err(Error::RewriteFailure(format!(
                        "monomial {} has non-integral kernel coordinates",
                        src.render(&Element::from_monomial(m.clone(), qone()))
                    )));
                }
                let n = x.numer();
                let v = i64::try_from(n).map_err(|_| {
                    Error::RewriteFailure("kernel coordinate overflows i64".to_string())
                })?;
                coords.push(v);
            }
            let nm = Monomial {
                laurent: coords,
                poly: m.poly.clone(),
            };
            out.add_assign(&Element::from_monomial(nm, c.clone()));
        }
        // round trip through the inclusion certifies the rewrite
        let back = self.inclusion.apply(&out)?;
        if &back != e {
            return Err(Error::RewriteFailure(
                "rewrite does not round-trip through the inclusion".to_string(),
            ));
        }
        Ok(out)
    }
}

/// Computes the Hopf kernel of a scoped morphism.
///
/// Scope: the target has no polynomial generators, every source polynomial
/// generator maps to zero, and every source Laurent generator maps to a
/// coefficient-1 Laurent monomial. Every returned generator passes the
/// normality membership test f(a₁)⊗a₂ = 1⊗a exactly.
pub fn hopf_kernel(f: &PresentedMorphism) -> Result<HopfKernel> {
    if f.target.n_poly() != 0 {
        return Err(Error::OutOfScope {
            module: "presented-hopf",
            reason: "hopf_kernel target must be purely Laurent".to_string(),
        });
    }
    for (h, img) in f.poly_images.iter().enumerate() {
        if !img.is_zero() {
            return Err(Error::OutOfScope {
                module: "presented-hopf",
                reason: format!(
                    "polynomial generator {} must map to zero, got {}",
                    f.source.poly_labels[h],
                    f.target.render(img)
                ),
            });
        }
    }
    let mut columns: Vec<Vec<BigInt>> = Vec::new();
    for (i, img) in f.laurent_images.iter().enumerate() {
        let Some(mono) = f.target.as_grouplike(img) else {
            return Err(Error::OutOfScope {
                module: "presented-hopf",
                reason: format!(
                    "Laurent generator {} must map to a monomial, got {}",
                    f.source.laurent_labels[i],
                    f.target.render(img)
                ),
            });
        };
        columns.push(mono.iter().map(|&e| BigInt::from(e)).collect());
    }
    let map = if columns.is_empty() {
        ZMatrix::zero(f.target.n_laurent(), 0)
    } else {
        ZMatrix::from_cols(columns)
    };
    let kernel_vectors = abelian_kernel(&map);
    let mut kernel_basis = Vec::with_capacity(kernel_vectors.len());
    for v in &kernel_vectors {
        let mut row = Vec::with_capacity(v.len());
        for x in v {
            let val = i64::try_from(x).map_err(|_| Error::RewriteFailure(
                "kernel lattice entry overflows i64".to_string(),
            ))?;
            row.push(val);
        }
        kernel_basis.push(row);
    }

    let n_k = kernel_basis.len();
    let n_x = f.source.n_poly();
    let algebra = PresentedCommHopf::new(
        &format!("HKer({})", f.source.name),
        (0..n_k).map(|i| format!("K{i}")).collect(),
        (0..n_x).map(|h| format!("X{h}")).collect(),
        vec![vec![0; n_k]; n_x],
    );
    algebra.verify_axioms()?;

    let laurent_images: Vec<Element> = kernel_basis
        .iter()
        .map(|v| f.source.laurent_monomial(v))
        .collect();
    let poly_images: Vec<Element> = (0..n_x)
        .map(|h| {
            let tag: Vec<i64> = f.source.poly_tags[h].iter().map(|t| -t).collect();
            f.source.laurent_monomial(&tag).mul(&f.source.poly_gen(h))
        })
        .collect();
    let inclusion = PresentedMorphism::new(
        algebra.clone(),
        f.source.clone(),
        laurent_images,
        poly_images,
    );
    inclusion.verify()?;

    // normality membership for every kernel generator
    for i in 0..n_k {
        let a = inclusion.apply(&algebra.laurent_gen(i, 1))?;
        if !f.hker_membership(&a)? {
            return Err(Error::AxiomFailure(format!(
                "kernel Laurent generator {i} fails the membership test"
            )));
        }
    }
    for h in 0..n_x {
        let a = inclusion.apply(&algebra.poly_gen(h))?;
        if !f.hker_membership(&a)? {
            return Err(Error::AxiomFailure(format!(
                "kernel primitive generator {h} fails the membership test"
            )));
        }
    }

    let coords_matrix = QMatrix::from_fn(f.source.n_laurent(), n_k, |i, j| {
        Rational::from_integer(BigInt::from(kernel_basis[j][i]))
    });
    Ok(HopfKernel {
        algebra,
        inclusion,
        kernel_basis,
        coords_matrix,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counit_like_morphism_has_full_kernel() {
        // all T ↦ 1, Y ↦ 0: HKer = whole algebra re-expressed
        let src = PresentedCommHopf::new(
            "B",
            vec!["T0".into(), "T1".into()],
            vec!["Y".into()],
            vec![vec![1, 0]],
        );
        let tgt = PresentedCommHopf::new("k", vec![], vec![], vec![]);
        let f = PresentedMorphism::new(
            src.clone(),
            tgt.clone(),
            vec![tgt.one(), tgt.one()],
            vec![tgt.zero()],
        );
        let hk = hopf_kernel(&f).unwrap();
        assert_eq!(hk.algebra.n_laurent(), 2);
        assert_eq!(hk.algebra.n_poly(), 1);
    }

    #[test]
    fn c2_group_like_d2_kernel_has_rank_two() {
        // Λ = Z[G×G] (rank 4) → Z[G] (rank 2) with t(x⊗y) ↦ t(x)+t(y)-t(xy)
        // for G = Z/2 on elements {1, g}
        let src = PresentedCommHopf::new(
            "F2",
            vec!["(1,1)".into(), "(1,g)".into(), "(g,1)".into(), "(g,g)".into()],
            vec![],
            vec![],
        );
        let tgt = PresentedCommHopf::new("F1", vec!["t1".into(), "tg".into()], vec![], vec![]);
        let images = vec![
            tgt.laurent_monomial(&[1, 0]),  // t(1)+t(1)-t(1)
            tgt.laurent_monomial(&[1, 0]),  // t(1)+t(g)-t(g)
            tgt.laurent_monomial(&[1, 0]),  // t(g)+t(1)-t(g)
            tgt.laurent_monomial(&[-1, 2]), // t(g)+t(g)-t(1)
        ];
        let f = PresentedMorphism::new(src.clone(), tgt.clone(), images, vec![]);
        let hk = hopf_kernel(&f).unwrap();
        assert_eq!(hk.kernel_basis.len(), 2);
        // rewrite a kernel monomial and round-trip
        let v = &hk.kernel_basis[0];
        let m = src.laurent_monomial(v);
        let r = hk.rewrite(&m).unwrap();
        assert_eq!(hk.inclusion.apply(&r).unwrap(), m);
        // a non-member fails
        assert!(hk.rewrite(&src.laurent_monomial(&[1, 0, 0, 0])).is_err());
    }

    #[test]
    fn poly_target_rejected() {
        let src = PresentedCommHopf::new("A", vec![], vec![], vec![]);
        let tgt = PresentedCommHopf::new("B", vec!["T".into()], vec!["Y".into()], vec![vec![1]]);
        let f = PresentedMorphism::new(src, tgt, vec![], vec![]);
        assert!(matches!(
            hopf_kernel(&f),
            Err(Error::OutOfScope { .. })
        ));
    }
}
