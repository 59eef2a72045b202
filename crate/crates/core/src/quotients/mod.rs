//! Lazy quotient coalgebras and the first lazy homology.
//!
//! `lazy_quotient_c1` kills φ(x₁)x₂ - φ(x₂)x₁; `lazy_quotient_h2` does the
//! two-variable analogue on H⊗H. The first lazy homology is computed as the
//! abelianization of the Hopf quotient by the same spanning set, with every
//! structural identity re-verified instead of trusted.

use crate::error::{Error, Result};
use crate::hopf::{
    add_term, hopf_morphism_witness, tensor_square, FinDimCoalgebra, FinDimHopf, TensorVec,
};
use crate::linalg::{qone, qzero, quotient_space, QMatrix, QVector, Rational, Span};
use num::Zero;

/// A coalgebra quotient with its projection and the deterministic section
/// fixing representatives.
#[derive(Clone, Debug)]
pub struct QuotientCoalgebra {
    pub quotient: FinDimCoalgebra,
    pub projection: QMatrix,
    pub section: QMatrix,
    /// RREF basis of the killed subspace.
    pub killed: Vec<QVector>,
}

/// A Hopf algebra quotient; the projection is a verified Hopf morphism.
#[derive(Clone, Debug)]
pub struct QuotientHopf {
    pub quotient: FinDimHopf,
    pub projection: QMatrix,
    pub section: QMatrix,
}

impl QuotientCoalgebra {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn project(&self, v: &[Rational]) -> QVector {
        self.projection.mul_vec(v)
    }

    pub fn lift(&self, v: &[Rational]) -> QVector {
        self.section.mul_vec(v)
    }
}

impl QuotientHopf {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn project(&self, v: &[Rational]) -> QVector {
        self.projection.mul_vec(v)
    }
}

/// Spanning vectors φ_i(x₁)x₂ - φ_i(x₂)x₁ over every basis x and dual basis φ_i.
fn c1_spanning_set(c: &FinDimCoalgebra) -> Vec<QVector> {
    let n = c.dim();
    let mut out = Vec::new();
    for j in 0..n {
        for i in 0..n {
            let mut v = vec![qzero(); n];
            for (p, q, w) in c.comult_terms(j) {
                if *p == i {
                    v[*q] += w;
                }
                if *q == i {
                    v[*p] -= w;
                }
            }
            if !v.iter().all(Zero::is_zero) {
                out.push(v);
            }
        }
    }
    out
}

/// Installs the induced coalgebra structure on a quotient, verifying that
/// the killed subspace is a coideal and the projection a coalgebra morphism.
fn build_quotient_coalgebra(
    source: &FinDimCoalgebra,
    gens: &[QVector],
    label_prefix: &str,
) -> Result<QuotientCoalgebra> {
    let n = source.dim();
    let (projection, section) = quotient_space(n, gens);
    let q = projection.rows();

    let mut killed_span = Span::new(n);
    for g in gens {
        killed_span.insert(g);
    }
    let killed = killed_span.basis_vectors();

    // coideal verification: ε(W) = 0 and Δ(W) ⊆ W⊗C + C⊗W, the latter
    // being exactly the kernel of π⊗π
    for w in &killed {
        if !source.counit_of(w).is_zero() {
            return Err(Error::AxiomFailure(format!(
                "{label_prefix}: counit does not vanish on the killed subspace"
            )));
        }
        let dw = source.comult_vec(w);
        if !project_tensor(&projection, &dw).is_empty() {
            return Err(Error::AxiomFailure(format!(
                "{label_prefix}: killed subspace is not a coideal"
            )));
        }
    }

    // induced structure through the section
    let labels = (0..q).map(|a| format!("{label_prefix}{a}")).collect();
    let mut comult = Vec::with_capacity(q);
    for a in 0..q {
        let lift = section.mul_vec(&unit_vec(q, a));
        let d = source.comult_vec(&lift);
        let mut terms: TensorVec = TensorVec::new();
        for ((p, r), c) in d {
            let pp = projection.mul_vec(&unit_vec_dense(n, p));
            let rr = projection.mul_vec(&unit_vec_dense(n, r));
            for (x, cx) in pp.iter().enumerate() {
                if cx.is_zero() {
                    continue;
                }
                for (y, cy) in rr.iter().enumerate() {
                    add_term(&mut terms, (x, y), &c * cx * cy);
                }
            }
        }
        comult.push(terms.into_iter().map(|((x, y), c)| (x, y, c)).collect());
    }
    let counit: QVector = (0..q)
        .map(|a| source.counit_of(&section.mul_vec(&unit_vec(q, a))))
        .collect();
    let quotient = FinDimCoalgebra::new(labels, comult, counit)?;

    // projection must be a coalgebra morphism
    for i in 0..n {
        let e = unit_vec_dense(n, i);
        let pi = projection.mul_vec(&e);
        let lhs = project_tensor(&projection, &source.comult_vec(&e));
        if lhs != quotient.comult_vec(&pi) {
            return Err(Error::AxiomFailure(format!(
                "{label_prefix}: projection is not a coalgebra morphism at basis {i}"
            )));
        }
        if quotient.counit_of(&pi) != source.counit()[i] {
            return Err(Error::AxiomFailure(format!(
                "{label_prefix}: projection does not preserve the counit at basis {i}"
            )));
        }
    }
    let axioms = quotient.check_coalgebra_axioms();
    if let Some(bad) = axioms.iter().find(|c| !c.pass) {
        return Err(Error::AxiomFailure(format!(
            "{label_prefix}: quotient coalgebra fails {}",
            bad.axiom
        )));
    }

    Ok(QuotientCoalgebra {
        quotient,
        projection,
        section,
        killed,
    })
}

fn unit_vec(n: usize, i: usize) -> QVector {
    let mut v = vec![qzero(); n];
    v[i] = qone();
    v
}

fn unit_vec_dense(n: usize, i: usize) -> QVector {
    unit_vec(n, i)
}

/// Applies (π ⊗ π) to a sparse tensor over the source.
fn project_tensor(projection: &QMatrix, t: &TensorVec) -> TensorVec {
    let n = projection.cols();
    let mut out = TensorVec::new();
    for ((p, r), c) in t {
        let pp = projection.mul_vec(&unit_vec_dense(n, *p));
        let rr = projection.mul_vec(&unit_vec_dense(n, *r));
        for (x, cx) in pp.iter().enumerate() {
            if cx.is_zero() {
                continue;
            }
            for (y, cy) in rr.iter().enumerate() {
                add_term(&mut out, (x, y), c * cx * cy);
            }
        }
    }
    out
}

/// The lazy quotient C^[1]: quotient of C by span{φ(x₁)x₂ - φ(x₂)x₁}.
///
/// Strong cocommutativity `x̲₁ ⊗ x₂ = x̲₂ ⊗ x₁` is verified on every basis
/// element, and the quotient must come out cocommutative.
pub fn lazy_quotient_c1(c: &FinDimCoalgebra) -> Result<QuotientCoalgebra> {
    let gens = c1_spanning_set(c);
    let quot = build_quotient_coalgebra(c, &gens, "c")?;
    verify_strong_cocommutativity(c, &quot)?;
    if !quot.quotient.is_cocommutative() {
        return Err(Error::AxiomFailure(
            "lazy quotient C^[1] is not cocommutative".to_string(),
        ));
    }
    Ok(quot)
}

/// Checks x̲₁ ⊗ x₂ = x̲₂ ⊗ x₁ in Q ⊗ C for every basis x of the source.
pub fn verify_strong_cocommutativity(
    c: &FinDimCoalgebra,
    quot: &QuotientCoalgebra,
) -> Result<()> {
    let n = c.dim();
    for i in 0..n {
        let mut lhs = TensorVec::new();
        let mut rhs = TensorVec::new();
        for (p, q, w) in c.comult_terms(i) {
            let pp = quot.projection.mul_vec(&unit_vec_dense(n, *p));
            for (a, ca) in pp.iter().enumerate() {
                add_term(&mut lhs, (a, *q), w * ca);
            }
            let pq = quot.projection.mul_vec(&unit_vec_dense(n, *q));
            for (a, ca) in pq.iter().enumerate() {
                add_term(&mut rhs, (a, *p), w * ca);
            }
        }
        if lhs != rhs {
            return Err(Error::AxiomFailure(format!(
                "strong cocommutativity fails at basis {i}"
            )));
        }
    }
    Ok(())
}

/// Spanning vectors φ_i(x₂y₂) x₁⊗y₁ - φ_i(x₁y₁) x₂⊗y₂ over basis pairs.
fn h2_spanning_set(h: &FinDimHopf) -> Vec<QVector> {
    let n = h.dim();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for i in 0..n {
                let mut v = vec![qzero(); n * n];
                for (p, q, w1) in h.coalgebra().comult_terms(a) {
                    for (r, s, w2) in h.coalgebra().comult_terms(b) {
                        let w = w1 * w2;
                        for (u, c) in h.mult_terms(*q, *s) {
                            if *u == i {
                                v[p * n + r] = &v[p * n + r] + &w * c;
                            }
                        }
                        for (u, c) in h.mult_terms(*p, *r) {
                            if *u == i {
                                v[q * n + s] = &v[q * n + s] - &w * c;
                            }
                        }
                    }
                }
                if !v.iter().all(Zero::is_zero) {
                    out.push(v);
                }
            }
        }
    }
    out
}

/// The 2-lazy quotient H^[2]: quotient of H ⊗ H by the lazy spanning set,
/// with the lazy-cocommutativity identities verified on all basis pairs.
pub fn lazy_quotient_h2(h: &FinDimHopf) -> Result<QuotientCoalgebra> {
    let square = tensor_square(h);
    let gens = h2_spanning_set(h);
    let quot = build_quotient_coalgebra(square.coalgebra(), &gens, "h")?;
    verify_lazy_cocommutativity(h, &quot)?;
    Ok(quot)
}

/// Checks (x̃₁⊗y₁) ⊗ x₂y₂ = (x̃₂⊗y₂) ⊗ x₁y₁ in Q ⊗ H on all basis pairs.
pub fn verify_lazy_cocommutativity(h: &FinDimHopf, quot: &QuotientCoalgebra) -> Result<()> {
    let n = h.dim();
    for a in 0..n {
        for b in 0..n {
            let mut lhs = TensorVec::new();
            let mut rhs = TensorVec::new();
            for (p, q, w1) in h.coalgebra().comult_terms(a) {
                for (r, s, w2) in h.coalgebra().comult_terms(b) {
                    let w = w1 * w2;
                    let first = quot
                        .projection
                        .mul_vec(&unit_vec_dense(n * n, p * n + r));
                    let second = quot
                        .projection
                        .mul_vec(&unit_vec_dense(n * n, q * n + s));
                    for (u, c) in h.mult_terms(*q, *s) {
                        for (t, ct) in first.iter().enumerate() {
                            add_term(&mut lhs, (t, *u), &w * c * ct);
                        }
                    }
                    for (u, c) in h.mult_terms(*p, *r) {
                        for (t, ct) in second.iter().enumerate() {
                            add_term(&mut rhs, (t, *u), &w * c * ct);
                        }
                    }
                }
            }
            if lhs != rhs {
                return Err(Error::AxiomFailure(format!(
                    "lazy cocommutativity fails at basis pair ({a},{b})"
                )));
            }
        }
    }
    Ok(())
}

/// Saturates the span of `seed` under left and right multiplication by
/// basis elements until the dimension stabilizes.
fn ideal_closure(h: &FinDimHopf, seed: &[QVector]) -> Span {
    let n = h.dim();
    let mut span = Span::new(n);
    for v in seed {
        span.insert(v);
    }
    loop {
        let mut grew = false;
        let snapshot = span.basis_vectors();
        for w in &snapshot {
            for i in 0..n {
                let e = unit_vec_dense(n, i);
                if span.insert(&h.mul_vec(&e, w)) {
                    grew = true;
                }
                if span.insert(&h.mul_vec(w, &e)) {
                    grew = true;
                }
            }
        }
        if !grew {
            return span;
        }
    }
}

/// Quotient of H by the two-sided ideal generated by `seed`, with the full
/// Hopf structure installed and verified.
fn build_quotient_hopf(h: &FinDimHopf, seed: &[QVector], name: &str) -> Result<QuotientHopf> {
    let n = h.dim();
    let ideal = ideal_closure(h, seed);
    let basis = ideal.basis_vectors();

    // Hopf-ideal checks beyond the ideal property: ε(I)=0, S(I)⊆I, Δ(I)⊆I⊗H+H⊗I
    for w in &basis {
        if !h.coalgebra().counit_of(w).is_zero() {
            return Err(Error::AxiomFailure(format!(
                "{name}: counit does not vanish on the ideal"
            )));
        }
        if !ideal.contains(&h.antipode_vec(w)) {
            return Err(Error::AxiomFailure(format!(
                "{name}: ideal is not antipode-stable"
            )));
        }
    }
    let (projection, section) = quotient_space(n, &basis);
    // Δ(I) ⊆ I⊗H + H⊗I, i.e. (π⊗π)Δ kills the ideal
    for w in &basis {
        let dw = h.coalgebra().comult_vec(w);
        if !project_tensor(&projection, &dw).is_empty() {
            return Err(Error::AxiomFailure(format!(
                "{name}: ideal is not a coideal"
            )));
        }
    }
    let q = projection.rows();
    let lift = |a: usize| section.mul_vec(&unit_vec(q, a));

    let labels = (0..q).map(|a| format!("{name}{a}")).collect();
    let mut comult = Vec::with_capacity(q);
    for a in 0..q {
        let d = h.coalgebra().comult_vec(&lift(a));
        let t = project_tensor(&projection, &d);
        comult.push(t.into_iter().map(|((x, y), c)| (x, y, c)).collect());
    }
    let counit: QVector = (0..q).map(|a| h.coalgebra().counit_of(&lift(a))).collect();
    let coalg = FinDimCoalgebra::new(labels, comult, counit)?;

    let mult: Vec<Vec<Vec<(usize, Rational)>>> = (0..q)
        .map(|a| {
            (0..q)
                .map(|b| {
                    let prod = projection.mul_vec(&h.mul_vec(&lift(a), &lift(b)));
                    prod.into_iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .collect()
                })
                .collect()
        })
        .collect();
    let unit = projection.mul_vec(h.unit());
    let antipode = QMatrix::from_fn(q, q, |i, j| {
        projection.mul_vec(&h.antipode_vec(&lift(j)))[i].clone()
    });
    let quotient = FinDimHopf::from_parts(name, coalg, mult, unit, antipode)?;

    let report = quotient.verify();
    if !report.all_pass() {
        let bad = report.failures()[0].axiom;
        return Err(Error::AxiomFailure(format!(
            "{name}: quotient Hopf algebra fails {bad}"
        )));
    }
    if let Some(witness) = hopf_morphism_witness(h, &quotient, &projection) {
        return Err(Error::AxiomFailure(format!(
            "{name}: projection is not a Hopf morphism ({witness})"
        )));
    }
    Ok(QuotientHopf {
        quotient,
        projection,
        section,
    })
}

/// The Hopf quotient H^⟨1⟩ by the two-sided ideal generated by
/// φ(x₁)x₂ - φ(x₂)x₁; it is cocommutative.
pub fn hopf_quotient_h1angle(h: &FinDimHopf) -> Result<QuotientHopf> {
    let seed = c1_spanning_set(h.coalgebra());
    let quot = build_quotient_hopf(h, &seed, "q")?;
    if !quot.quotient.is_cocommutative() {
        return Err(Error::AxiomFailure(
            "H^<1> is not cocommutative".to_string(),
        ));
    }
    Ok(quot)
}

/// Quotient by the two-sided ideal generated by all commutators.
pub fn abelianization(h: &FinDimHopf) -> Result<QuotientHopf> {
    let n = h.dim();
    let mut seed = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let ei = unit_vec_dense(n, i);
            let ej = unit_vec_dense(n, j);
            let mut v = h.mul_vec(&ei, &ej);
            let w = h.mul_vec(&ej, &ei);
            for (x, y) in v.iter_mut().zip(&w) {
                *x = &*x - y;
            }
            if !v.iter().all(Zero::is_zero) {
                seed.push(v);
            }
        }
    }
    let quot = build_quotient_hopf(h, &seed, "a")?;
    if !quot.quotient.is_commutative() {
        return Err(Error::AxiomFailure(
            "abelianization is not commutative".to_string(),
        ));
    }
    Ok(quot)
}

/// First lazy homology via the Hopf-quotient route:
/// H₁(H) = (H^⟨1⟩)_ab, with the composite projection from H.
pub fn h1_lazy(h: &FinDimHopf) -> Result<QuotientHopf> {
    let step1 = hopf_quotient_h1angle(h)?;
    let step2 = abelianization(&step1.quotient)?;
    let projection = &step2.projection * &step1.projection;
    let section = &step1.section * &step2.section;
    if let Some(witness) = hopf_morphism_witness(h, &step2.quotient, &projection) {
        return Err(Error::AxiomFailure(format!(
            "h1 projection is not a Hopf morphism ({witness})"
        )));
    }
    Ok(QuotientHopf {
        quotient: step2.quotient,
        projection,
        section,
    })
}

/// Invariant factors of the group formed by the images of the source's
/// grouplike basis elements inside a quotient, provided those images span.
///
/// This turns a grouplike-spanned quotient (group algebras, the Sweedler
/// chain) into comparable abelian-group data.
pub fn grouplike_invariant_factors(
    source: &FinDimHopf,
    quot: &QuotientHopf,
) -> Result<crate::linalg::FPAbelianGroup> {
    let gl = source.grouplike_basis_indices();
    let n = source.dim();
    // images must span the quotient
    let mut span = Span::new(quot.dim());
    let mut images = Vec::new();
    for &g in &gl {
        let img = quot.project(&source.basis_vec(g));
        span.insert(&img);
        images.push(img);
    }
    if span.dim() != quot.dim() {
        return Err(Error::OutOfScope {
            module: "lazy-quotients",
            reason: format!(
                "quotient is not spanned by grouplike images ({} of {})",
                span.dim(),
                quot.dim()
            ),
        });
    }
    // abelian presentation: products of grouplikes must again be grouplike
    // basis elements of the source
    let mut relations: Vec<Vec<num::BigInt>> = Vec::new();
    let pos = |g: usize| gl.iter().position(|&x| x == g);
    for (ai, &a) in gl.iter().enumerate() {
        for (bi, &b) in gl.iter().enumerate() {
            let prod = source.mul_vec(&source.basis_vec(a), &source.basis_vec(b));
            let mut nonzero = prod.iter().enumerate().filter(|(_, c)| !c.is_zero());
            let (k, c) = nonzero.next().ok_or_else(|| Error::OutOfScope {
                module: "lazy-quotients",
                reason: "grouplike product vanished".to_string(),
            })?;
            if nonzero.next().is_some() || c != &qone() {
                return Err(Error::OutOfScope {
                    module: "lazy-quotients",
                    reason: "grouplikes are not closed under multiplication".to_string(),
                });
            }
            let ki = pos(k).ok_or_else(|| Error::OutOfScope {
                module: "lazy-quotients",
                reason: "product of grouplikes is not a grouplike basis element".to_string(),
            })?;
            let mut v = vec![num::BigInt::from(0); gl.len()];
            v[ai] += 1;
            v[bi] += 1;
            v[ki] -= 1;
            relations.push(v);
        }
    }
    // identified images
    for i in 0..gl.len() {
        for j in i + 1..gl.len() {
            if images[i] == images[j] {
                let mut v = vec![num::BigInt::from(0); gl.len()];
                v[i] += 1;
                v[j] -= 1;
                relations.push(v);
            }
        }
    }
    let _ = n;
    Ok(crate::linalg::fp_abelian_group(gl.len(), &relations))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups;
    use crate::hopf::{function_algebra, group_algebra, sweedler_h4};

    #[test]
    fn sweedler_c1_is_one_dimensional() {
        let h = sweedler_h4();
        let q = lazy_quotient_c1(h.coalgebra()).unwrap();
        assert_eq!(q.dim(), 1);
        // the class of 1 is grouplike: ε = 1 on it
        let one = q.project(h.unit());
        assert_eq!(q.quotient.counit_of(&one), qone());
        // classes: 1̲ = g̲, x̲ = y̲ = 0
        assert_eq!(q.project(&h.basis_vec(0)), q.project(&h.basis_vec(1)));
        assert!(q.project(&h.basis_vec(2)).iter().all(Zero::is_zero));
        assert!(q.project(&h.basis_vec(3)).iter().all(Zero::is_zero));
    }

    #[test]
    fn cocommutative_c1_is_isomorphism() {
        let h = group_algebra(&groups::s3());
        let q = lazy_quotient_c1(h.coalgebra()).unwrap();
        assert_eq!(q.dim(), 6);
        assert!(q.killed.is_empty());
    }

    #[test]
    fn function_algebra_s3_c1_has_dim_three() {
        let h = function_algebra(&groups::s3());
        let q = lazy_quotient_c1(h.coalgebra()).unwrap();
        assert_eq!(q.dim(), 3);
    }

    #[test]
    fn sweedler_h2_is_five_dimensional() {
        let h = sweedler_h4();
        let q = lazy_quotient_h2(&h).unwrap();
        assert_eq!(q.dim(), 5);
    }

    #[test]
    fn sweedler_h2_kills_and_identifies_expected_classes() {
        let h = sweedler_h4();
        let q = lazy_quotient_h2(&h).unwrap();
        let idx = |i: usize, j: usize| i * 4 + j;
        let class = |i: usize, j: usize| q.project(&unit_vec_dense(16, idx(i, j)));
        // zero classes: 1⊗x, g⊗x, x⊗1, x⊗g (and the y variants)
        for (i, j) in [(0, 2), (1, 2), (2, 0), (2, 1), (0, 3), (1, 3), (3, 0), (3, 1)] {
            assert!(class(i, j).iter().all(Zero::is_zero), "({i},{j}) not killed");
        }
        // g⊗1, 1⊗g, g⊗g all equal h0 = class of 1⊗1
        let h0 = class(0, 0);
        assert_eq!(class(1, 0), h0);
        assert_eq!(class(0, 1), h0);
        assert_eq!(class(1, 1), h0);
        // x⊗x, x⊗y, y⊗x, y⊗y stay independent alongside h0
        let mut span = Span::new(5);
        for v in [class(0, 0), class(2, 2), class(2, 3), class(3, 2), class(3, 3)] {
            assert!(span.insert(&v));
        }
    }

    #[test]
    fn cocommutative_h2_has_no_relations() {
        let h = group_algebra(&groups::cyclic(3));
        let q = lazy_quotient_h2(&h).unwrap();
        assert_eq!(q.dim(), 9);
        assert!(q.killed.is_empty());
    }

    #[test]
    fn h1angle_of_functions_s3_is_trivial() {
        let h = function_algebra(&groups::s3());
        let q = hopf_quotient_h1angle(&h).unwrap();
        assert_eq!(q.dim(), 1);
    }

    #[test]
    fn h1angle_of_functions_q8_is_functions_on_center() {
        let h = function_algebra(&groups::q8());
        let q = hopf_quotient_h1angle(&h).unwrap();
        assert_eq!(q.dim(), 2);
        // classes of e_z for central z are orthogonal idempotents summing to 1
        let z: Vec<usize> = (0..8)
            .filter(|&i| {
                let g = groups::q8();
                (0..8).all(|j| g.mul(i, j) == g.mul(j, i))
            })
            .collect();
        assert_eq!(z.len(), 2);
        let mut sum = vec![qzero(); 2];
        for &zi in &z {
            let img = q.project(&h.basis_vec(zi));
            assert!(!img.iter().all(Zero::is_zero));
            assert_eq!(q.quotient.mul_vec(&img, &img), img);
            for (s, c) in sum.iter_mut().zip(&img) {
                *s = &*s + c;
            }
        }
        assert_eq!(sum, q.project(h.unit()));
    }

    #[test]
    fn cocommutative_h1angle_is_identity() {
        let h = group_algebra(&groups::cyclic(4));
        let q = hopf_quotient_h1angle(&h).unwrap();
        assert_eq!(q.dim(), 4);
    }

    #[test]
    fn abelianization_examples() {
        // commutative input: identity quotient
        let h = function_algebra(&groups::s3());
        assert_eq!(abelianization(&h).unwrap().dim(), 6);
        // k[S3] -> k[Z/2]
        let h = group_algebra(&groups::s3());
        let q = abelianization(&h).unwrap();
        assert_eq!(q.dim(), 2);
        // sweedler: commutator closure forces dim 2
        let q = abelianization(&sweedler_h4()).unwrap();
        assert_eq!(q.dim(), 2);
        assert!(q.quotient.is_commutative());
    }

    #[test]
    fn h1_lazy_examples() {
        assert_eq!(h1_lazy(&sweedler_h4()).unwrap().dim(), 1);
        let q = h1_lazy(&group_algebra(&groups::s3())).unwrap();
        assert_eq!(q.dim(), 2);
        assert_eq!(q.quotient.grouplike_basis_indices().len(), 2);
        for (g, z) in [
            (groups::s3(), 1),
            (groups::d4(), 2),
            (groups::q8(), 2),
        ] {
            let q = h1_lazy(&function_algebra(&g)).unwrap();
            assert_eq!(q.dim(), z, "dim H1(k^{}) != |Z|", g.name());
        }
    }

    #[test]
    fn grouplike_factors_of_h1_quotients() {
        // k[S3] -> k[Z/2]
        let h = group_algebra(&groups::s3());
        let q = h1_lazy(&h).unwrap();
        let g = grouplike_invariant_factors(&h, &q).unwrap();
        assert_eq!(g.invariant_factors_i64(), vec![2]);
        // sweedler: trivial group
        let h = sweedler_h4();
        let q = h1_lazy(&h).unwrap();
        let g = grouplike_invariant_factors(&h, &q).unwrap();
        assert!(g.is_trivial());
        // abelian stays itself
        let h = group_algebra(&groups::cyclic(6));
        let q = h1_lazy(&h).unwrap();
        let g = grouplike_invariant_factors(&h, &q).unwrap();
        assert_eq!(g.invariant_factors_i64(), vec![6]);
    }

    #[test]
    fn functoriality_smoke_c4_to_c2() {
        // k[Z/4] -> k[Z/2] descends to the h1 quotients
        let c4 = group_algebra(&groups::cyclic(4));
        let c2 = group_algebra(&groups::cyclic(2));
        let map = QMatrix::from_fn(2, 4, |i, j| if j % 2 == i { qone() } else { qzero() });
        assert!(hopf_morphism_witness(&c4, &c2, &map).is_none());
        let q4 = h1_lazy(&c4).unwrap();
        let q2 = h1_lazy(&c2).unwrap();
        // the composite H -> H' -> H'^dagger kills the ideal of H
        let composite = &q2.projection * &map;
        let mut ideal = c1_spanning_set(c4.coalgebra());
        ideal.extend({
            let n = c4.dim();
            let mut comms = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    let mut v = c4.mul_vec(&c4.basis_vec(i), &c4.basis_vec(j));
                    let w = c4.mul_vec(&c4.basis_vec(j), &c4.basis_vec(i));
                    for (x, y) in v.iter_mut().zip(&w) {
                        *x = &*x - y;
                    }
                    comms.push(v);
                }
            }
            comms
        });
        for w in &ideal {
            assert!(composite.mul_vec(w).iter().all(Zero::is_zero));
        }
        assert_eq!(q4.dim(), 4);
        assert_eq!(q2.dim(), 2);
    }
}
