//! The second-lazy-homology pipeline: d₂ : F(H^[2]) → F(H^[1]), the d₃
//! evaluator, the ideal B₂ℓ(H), and H₂ℓ(H) = HKer(d₂)/B₂ℓ(H). Also
//! recomputes H₁ℓ as F(H^[1]) ⫽ Im(d₂) for the cross-check of the two
//! routes.

use crate::error::{Error, Result};
use crate::hopf::{pointed_profile, FinDimHopf, PointedCoalgebra};
use crate::linalg::{qone, qzero, QVector, Rational};
use crate::presented::{
    free_commutative_hopf, hopf_kernel, quotient_by_relations, Element, FreeCommHopf,
    HomologyDescriptor, HopfKernel, PresentedMorphism,
};
use crate::quotients::{lazy_quotient_c1, lazy_quotient_h2, QuotientCoalgebra};
use num::Zero;
use rayon::prelude::*;
use std::collections::{BTreeMap, BTreeSet};

/// Everything derived from a fixed H that the d₂/d₃ computations need.
/// Immutable once built; d₃ evaluation over triples may run concurrently.
pub struct LazyComplex {
    pub hopf: FinDimHopf,
    pub c1: QuotientCoalgebra,
    pub h2q: QuotientCoalgebra,
    pub profile1: PointedCoalgebra,
    pub profile2: PointedCoalgebra,
    pub f1: FreeCommHopf,
    pub f2: FreeCommHopf,
    pub d2: PresentedMorphism,
    /// Names of the invariant checks that ran during construction.
    pub transcript: Vec<String>,
    // t and t⁻¹ of the class of e_i ⊗ e_j in F(H^[2]), per tensor index
    t2_pair: Vec<Element>,
    t2_inv_pair: Vec<Element>,
}

/// Result of the full second-homology computation.
pub struct LazyH2Result {
    pub h2: HomologyDescriptor,
    pub hker: HopfKernel,
    /// d₃(x,y,z) in Hopf-kernel coordinates, per basis triple of H.
    pub d3_table: BTreeMap<(usize, usize, usize), Element>,
    pub transcript: Vec<String>,
}

/// Candidate grouplikes for a quotient of H: classes of the unit, of every
/// basis element, and of every product of two basis elements. Raw vectors
/// are deduplicated in source coordinates before projecting.
fn candidates_c1(h: &FinDimHopf, q: &QuotientCoalgebra) -> Vec<QVector> {
    let n = h.dim();
    let mut raw: BTreeSet<QVector> = BTreeSet::new();
    raw.insert(h.unit().to_vec());
    for i in 0..n {
        raw.insert(h.basis_vec(i));
        for j in 0..n {
            raw.insert(h.mul_vec(&h.basis_vec(i), &h.basis_vec(j)));
        }
    }
    let mut seen = BTreeSet::new();
    raw.into_iter()
        .map(|v| q.project(&v))
        .filter(|v| v.iter().any(|c| !c.is_zero()) && seen.insert(v.clone()))
        .collect()
}

/// Same for the quotient of H ⊗ H: classes of 1⊗1, of basis tensors, and of
/// products of basis tensors.
fn candidates_h2(h: &FinDimHopf, q: &QuotientCoalgebra) -> Vec<QVector> {
    let n = h.dim();
    let nn = n * n;
    let mut raw: BTreeSet<QVector> = BTreeSet::new();
    let mut unit = vec![qzero(); nn];
    for (i, a) in h.unit().iter().enumerate() {
        for (j, b) in h.unit().iter().enumerate() {
            unit[i * n + j] = a * b;
        }
    }
    raw.insert(unit);
    for t in 0..nn {
        let mut e = vec![qzero(); nn];
        e[t] = qone();
        raw.insert(e);
    }
    for a in 0..nn {
        let (i, j) = (a / n, a % n);
        for b in 0..nn {
            let (k, l) = (b / n, b % n);
            // (e_i ⊗ e_j)(e_k ⊗ e_l) = e_i e_k ⊗ e_j e_l
            let left = h.mul_vec(&h.basis_vec(i), &h.basis_vec(k));
            let right = h.mul_vec(&h.basis_vec(j), &h.basis_vec(l));
            let mut prod = vec![qzero(); nn];
            for (p, cp) in left.iter().enumerate() {
                if cp.is_zero() {
                    continue;
                }
                for (r, cr) in right.iter().enumerate() {
                    if !cr.is_zero() {
                        prod[p * n + r] = cp * cr;
                    }
                }
            }
            raw.insert(prod);
        }
    }
    let mut seen = BTreeSet::new();
    raw.into_iter()
        .map(|v| q.project(&v))
        .filter(|v| v.iter().any(|c| !c.is_zero()) && seen.insert(v.clone()))
        .collect()
}

/// Builds the whole d₂ context: lazy quotients, pointed profiles, free
/// commutative Hopf algebras, and the verified morphism d₂.
pub fn lazy_complex(h: &FinDimHopf) -> Result<LazyComplex> {
    let mut transcript = Vec::new();
    let c1 = lazy_quotient_c1(h.coalgebra())?;
    transcript.push("strong-cocommutativity on C^[1] (all basis classes)".to_string());
    let h2q = lazy_quotient_h2(h)?;
    transcript.push("lazy-cocommutativity on H^[2] (all basis pairs)".to_string());

    let profile1 = pointed_profile(&c1.quotient, &candidates_c1(h, &c1))?;
    let profile2 = pointed_profile(&h2q.quotient, &candidates_h2(h, &h2q))?;
    let f1 = free_commutative_hopf("F1", &profile1)?;
    let f2 = free_commutative_hopf("F2", &profile2)?;
    transcript.push("t*t⁻¹ = ε certified on every embedded basis element".to_string());

    let n = h.dim();
    // t₁ and t₁⁻¹ of the class of each basis element of H
    let t1: Vec<Element> = (0..n)
        .map(|i| f1.t_embed(&c1.project(&h.basis_vec(i))))
        .collect();
    // d₂'(e_i ⊗ e_j) = t(x₁) t(y₁) t⁻¹((x₂y₂)-class)
    let dprime: Vec<Element> = (0..n * n)
        .map(|idx| {
            let (i, j) = (idx / n, idx % n);
            let mut acc = Element::zero();
            for (p, qq, w1) in h.coalgebra().comult_terms(i) {
                for (r, s, w2) in h.coalgebra().comult_terms(j) {
                    let prod = h.mul_vec(&h.basis_vec(*qq), &h.basis_vec(*s));
                    let tinv = f1.t_inv_embed(&c1.project(&prod));
                    let term = t1[*p].mul(&t1[*r]).mul(&tinv);
                    acc.add_assign(&term.scaled(&(w1 * w2)));
                }
            }
            acc
        })
        .collect();

    // representative independence: d₂' must kill the h2 relation subspace
    for (wi, w) in h2q.killed.iter().enumerate() {
        let mut img = Element::zero();
        for (idx, c) in w.iter().enumerate() {
            if !c.is_zero() {
                img.add_assign(&dprime[idx].scaled(c));
            }
        }
        if !img.is_zero() {
            return Err(Error::RepresentativeDependence(format!(
                "d2 does not vanish on killed vector {wi}"
            )));
        }
    }
    transcript.push("d₂ representative independence on the killed subspace".to_string());

    // images of the F(H^[2]) generators through the deterministic section
    let image_of_profile_vec = |profile_vec: &[Rational]| -> Element {
        let lift = h2q.lift(profile_vec);
        let mut img = Element::zero();
        for (idx, c) in lift.iter().enumerate() {
            if !c.is_zero() {
                img.add_assign(&dprime[idx].scaled(c));
            }
        }
        img
    };
    let laurent_images: Vec<Element> = profile2
        .grouplikes()
        .iter()
        .map(|g| image_of_profile_vec(g))
        .collect();
    let poly_images: Vec<Element> = profile2
        .skews()
        .iter()
        .map(|(v, _)| image_of_profile_vec(v))
        .collect();
    let d2 = PresentedMorphism::new(
        f2.algebra.clone(),
        f1.algebra.clone(),
        laurent_images,
        poly_images,
    );
    d2.verify()?;
    transcript.push("d₂ verified as a Hopf algebra morphism on generators".to_string());

    // t₂ and t₂⁻¹ of the class of each basis tensor
    let t2_pair: Vec<Element> = (0..n * n)
        .map(|idx| {
            let mut e = vec![qzero(); n * n];
            e[idx] = qone();
            f2.t_embed(&h2q.project(&e))
        })
        .collect();
    let t2_inv_pair: Vec<Element> = (0..n * n)
        .map(|idx| {
            let mut e = vec![qzero(); n * n];
            e[idx] = qone();
            f2.t_inv_embed(&h2q.project(&e))
        })
        .collect();

    let ctx = LazyComplex {
        hopf: h.clone(),
        c1,
        h2q,
        profile1,
        profile2,
        f1,
        f2,
        d2,
        transcript,
        t2_pair,
        t2_inv_pair,
    };

    // laziness d₂(a₁) ⊗ a₂ = d₂(a₂) ⊗ a₁ on every generator t(class(e_i⊗e_j))
    for idx in 0..n * n {
        if !ctx.d2.laziness_holds(&ctx.t2_pair[idx])? {
            return Err(Error::AxiomFailure(format!(
                "d₂ laziness fails on generator for basis tensor {idx}"
            )));
        }
    }
    let mut ctx = ctx;
    ctx.transcript
        .push("d₂ laziness on all generators".to_string());
    Ok(ctx)
}

impl LazyComplex {
    fn dim(&self) -> usize {
        self.hopf.dim()
    }

    /// t of the class of e_i ⊗ e_j in F(H^[2]), indexed by i*dim + j.
    pub fn t2_pair(&self) -> &[Element] {
        &self.t2_pair
    }

    /// t⁻¹ of the class of e_i ⊗ e_j in F(H^[2]).
    pub fn t2_inv_pair(&self) -> &[Element] {
        &self.t2_inv_pair
    }

    /// ε(x y z) for basis indices, by multiplicativity of the counit.
    fn counit_product(&self, x: usize, y: usize, z: usize) -> Rational {
        let eps = self.hopf.counit();
        &eps[x] * &eps[y] * &eps[z]
    }

    /// t applied to the class of a vector of H ⊗ H.
    fn t2_of_vec(&self, v: &[Rational]) -> Element {
        let mut out = Element::zero();
        for (idx, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out.add_assign(&self.t2_pair[idx].scaled(c));
            }
        }
        out
    }

    fn t2_inv_of_vec(&self, v: &[Rational]) -> Element {
        let mut out = Element::zero();
        for (idx, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out.add_assign(&self.t2_inv_pair[idx].scaled(c));
            }
        }
        out
    }

    /// d₃(x,y,z) = t(ỹ₁⊗z₁) t(x̃₁⊗y₂z₂) t⁻¹(x̃₂y₃⊗z₃) t⁻¹(x̃₃⊗y₄) in F(H^[2]).
    pub fn d3_element(&self, x: usize, y: usize, z: usize) -> Element {
        let n = self.dim();
        let h = &self.hopf;
        let dx = h.coalgebra().iterated_comult(&h.basis_vec(x), 3);
        let dy = h.coalgebra().iterated_comult(&h.basis_vec(y), 4);
        let dz = h.coalgebra().iterated_comult(&h.basis_vec(z), 3);
        let mut acc = Element::zero();
        for (xk, xc) in &dx {
            for (yk, yc) in &dy {
                for (zk, zc) in &dz {
                    let scale = xc * yc * zc;
                    // f1 = t(y1 ⊗ z1)
                    let f1 = &self.t2_pair[yk[0] * n + zk[0]];
                    if f1.is_zero() {
                        continue;
                    }
                    // f2 = t(x1 ⊗ y2 z2)
                    let y2z2 = h.mul_vec(&h.basis_vec(yk[1]), &h.basis_vec(zk[1]));
                    let mut v2 = vec![qzero(); n * n];
                    for (u, c) in y2z2.iter().enumerate() {
                        if !c.is_zero() {
                            v2[xk[0] * n + u] = c.clone();
                        }
                    }
                    let f2 = self.t2_of_vec(&v2);
                    if f2.is_zero() {
                        continue;
                    }
                    // f3 = t⁻¹(x2 y3 ⊗ z3)
                    let x2y3 = h.mul_vec(&h.basis_vec(xk[1]), &h.basis_vec(yk[2]));
                    let mut v3 = vec![qzero(); n * n];
                    for (u, c) in x2y3.iter().enumerate() {
                        if !c.is_zero() {
                            v3[u * n + zk[2]] = c.clone();
                        }
                    }
                    let f3 = self.t2_inv_of_vec(&v3);
                    if f3.is_zero() {
                        continue;
                    }
                    // f4 = t⁻¹(x3 ⊗ y4)
                    let f4 = &self.t2_inv_pair[xk[2] * n + yk[3]];
                    if f4.is_zero() {
                        continue;
                    }
                    let term = f1.mul(&f2).mul(&f3).mul(f4);
                    acc.add_assign(&term.scaled(&scale));
                }
            }
        }
        acc
    }

    /// H₂ℓ(H) = HKer(d₂) / B₂ℓ(H), with every identity of the d₃ table
    /// verified along the way.
    pub fn h2(&self) -> Result<LazyH2Result> {
        self.h2_with(true)
    }

    /// Like [`LazyComplex::h2`]; `verify_triples = false` skips the per-triple
    /// d₂∘d₃ and membership verifications (the rewrite still certifies each
    /// relation by round-tripping through the inclusion).
    pub fn h2_with(&self, verify_triples: bool) -> Result<LazyH2Result> {
        let mut transcript = self.transcript.clone();
        let hker = hopf_kernel(&self.d2)?;
        transcript.push(format!(
            "HKer(d₂) computed: {} Laurent and {} primitive generators",
            hker.algebra.n_laurent(),
            hker.algebra.n_poly()
        ));

        let n = self.dim();
        let triples: Vec<(usize, usize, usize)> = (0..n)
            .flat_map(|x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))))
            .collect();
        let evaluated: Vec<Result<((usize, usize, usize), Element, Element)>> = triples
            .par_iter()
            .map(|&(x, y, z)| {
                let v = self.d3_element(x, y, z);
                if verify_triples {
                    // d₂(d₃(x,y,z)) = ε(xyz)·1 exactly
                    let image = self.d2.apply(&v)?;
                    let expected = self.f1.algebra.scalar(self.counit_product(x, y, z));
                    if image != expected {
                        return Err(Error::AxiomFailure(format!(
                            "d₂∘d₃ ≠ ε·1 at triple ({x},{y},{z})"
                        )));
                    }
                    // membership in the Hopf kernel
                    if !self.d2.hker_membership(&v)? {
                        return Err(Error::AxiomFailure(format!(
                            "d₃ value escapes HKer(d₂) at triple ({x},{y},{z})"
                        )));
                    }
                }
                // rewrite d₃ in kernel coordinates
                let rewritten = hker.rewrite(&v)?;
                Ok(((x, y, z), v, rewritten))
            })
            .collect();

        let mut d3_table = BTreeMap::new();
        let mut relations: BTreeSet<Element> = BTreeSet::new();
        for item in evaluated {
            let ((x, y, z), _value, rewritten) = item?;
            // relation d₃ - ε(xyz)·1 and its antipode image, in HKer coords
            let eps = self.counit_product(x, y, z);
            let mut rel = rewritten.clone();
            rel.sub_assign(&hker.algebra.scalar(eps.clone()));
            if !rel.is_zero() {
                relations.insert(rel.clone());
                let mut srel = hker.algebra.antipode(&rewritten);
                srel.sub_assign(&hker.algebra.scalar(eps));
                relations.insert(srel);
            }
            d3_table.insert((x, y, z), rewritten);
        }
        if verify_triples {
            transcript.push(format!(
                "d₂∘d₃ = ε·1 and HKer membership verified on all {} basis triples",
                d3_table.len()
            ));
        }

        let rel_vec: Vec<Element> = relations.into_iter().collect();
        let h2 = quotient_by_relations(&hker.algebra, &rel_vec)?;
        transcript.push(format!(
            "B₂ℓ quotient computed from {} distinct relations",
            rel_vec.len()
        ));
        Ok(LazyH2Result {
            h2,
            hker,
            d3_table,
            transcript,
        })
    }

    /// H₁ℓ via homology: F(H^[1]) ⫽ Im(d₂), as a descriptor.
    pub fn h1_descriptor(&self) -> Result<HomologyDescriptor> {
        let mut relations = Vec::new();
        for (i, img) in self.d2.laurent_images.iter().enumerate() {
            let gen = self.f2.algebra.laurent_gen(i, 1);
            let mut rel = img.clone();
            rel.sub_assign(&self.f1.algebra.scalar(self.f2.algebra.counit(&gen)));
            if !rel.is_zero() {
                relations.push(rel);
            }
        }
        for (h, img) in self.d2.poly_images.iter().enumerate() {
            let gen = self.f2.algebra.poly_gen(h);
            let mut rel = img.clone();
            rel.sub_assign(&self.f1.algebra.scalar(self.f2.algebra.counit(&gen)));
            if !rel.is_zero() {
                relations.push(rel);
            }
        }
        quotient_by_relations(&self.f1.algebra, &relations)
    }
}

/// One-call versions of the two pipeline outputs.
pub fn h2_lazy(h: &FinDimHopf) -> Result<LazyH2Result> {
    lazy_complex(h)?.h2()
}

pub fn h1_via_homology(h: &FinDimHopf) -> Result<HomologyDescriptor> {
    lazy_complex(h)?.h1_descriptor()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups;
    use crate::hopf::{function_algebra, group_algebra, sweedler_h4};
    use crate::linalg::rat;

    #[test]
    fn sweedler_d2_images() {
        let ctx = lazy_complex(&sweedler_h4()).unwrap();
        // F(H^[1]) = k[T,T⁻¹], F(H^[2]) = k[T,T⁻¹,Y1..Y4]
        assert_eq!(ctx.f1.algebra.n_laurent(), 1);
        assert_eq!(ctx.f1.algebra.n_poly(), 0);
        assert_eq!(ctx.f2.algebra.n_laurent(), 1);
        assert_eq!(ctx.f2.algebra.n_poly(), 4);
        // d₂(T) = t(1̲), d₂(Y_i) = 0
        assert_eq!(ctx.d2.laurent_images[0], ctx.f1.algebra.laurent_gen(0, 1));
        for img in &ctx.d2.poly_images {
            assert!(img.is_zero());
        }
    }

    #[test]
    fn group_algebra_d2_is_bar_differential() {
        // d₂(t(x⊗y)) = t(x) t(y) t(xy)⁻¹ as a Laurent monomial
        let g = groups::cyclic(3);
        let ctx = lazy_complex(&group_algebra(&g)).unwrap();
        assert_eq!(ctx.f2.algebra.n_laurent(), 9);
        for a in 0..9 {
            let img = &ctx.d2.laurent_images[a];
            let mono = ctx.f1.algebra.as_grouplike(img).expect("monomial image");
            // recover (x, y) from the profile ordering via the t2 embedding
            // and check exponents sum as e_x + e_y - e_{xy}
            let mut expected = vec![0i64; 3];
            // profile grouplikes are classes of basis tensors in candidate
            // order; match by comparing t2 of each basis tensor
            let mut found = false;
            for x in 0..3 {
                for y in 0..3 {
                    let t = &ctx.t2_pair[x * 3 + y];
                    if ctx.f2.algebra.as_grouplike(t)
                        == ctx
                            .f2
                            .algebra
                            .as_grouplike(&ctx.f2.algebra.laurent_gen(a, 1))
                    {
                        expected = vec![0i64; 3];
                        expected[x] += 1;
                        expected[y] += 1;
                        expected[g.mul(x, y)] -= 1;
                        found = true;
                    }
                }
            }
            assert!(found);
            // the t1 ordering also comes from candidates; compare through t1
            let mut lhs = ctx.f1.algebra.one();
            for (i, &e) in mono.iter().enumerate() {
                if e != 0 {
                    let m = ctx.f1.algebra.laurent_gen(i, e);
                    lhs = lhs.mul(&m);
                }
            }
            let mut rhs = ctx.f1.algebra.one();
            for (x, &e) in expected.iter().enumerate() {
                if e != 0 {
                    let base = ctx.f1.t_embed(&ctx.c1.project(&{
                        let mut v = vec![qzero(); 3];
                        v[x] = qone();
                        v
                    }));
                    let mono = ctx.f1.algebra.as_grouplike(&base).unwrap();
                    let powered: Vec<i64> = mono.iter().map(|t| t * e).collect();
                    rhs = rhs.mul(&ctx.f1.algebra.laurent_monomial(&powered));
                }
            }
            assert_eq!(lhs, rhs, "bar differential mismatch at generator {a}");
        }
    }

    #[test]
    fn sweedler_d3_matches_known_values() {
        let ctx = lazy_complex(&sweedler_h4()).unwrap();
        // a_i = T⁻¹ Y_i in F(H^[2]); identify the Y index of each basis
        // tensor class through t2
        let a_elem = |i: usize, j: usize| {
            // t(class(e_i ⊗ e_j)) should be a single poly generator
            ctx.t2_pair[i * 4 + j].clone()
        };
        let t_inv = ctx.t2_inv_pair[0].clone(); // t⁻¹(1⊗1) = T⁻¹
        let a1 = t_inv.mul(&a_elem(2, 2));
        let a2 = t_inv.mul(&a_elem(2, 3));
        let a3 = t_inv.mul(&a_elem(3, 2));
        let a4 = t_inv.mul(&a_elem(3, 3));
        //  d₃(x,x,g) = -a1 + a2 (basis order 1,g,x,y = 0,1,2,3)
        let mut expected = a1.scaled(&rat(-1));
        expected.add_assign(&a2);
        assert_eq!(ctx.d3_element(2, 2, 1), expected);
        // d₃(y,x,g) = -a3 + a4
        let mut expected = a3.scaled(&rat(-1));
        expected.add_assign(&a4);
        assert_eq!(ctx.d3_element(3, 2, 1), expected);
        // d₃(g,x,x) = a1 + a3
        let mut expected = a1.clone();
        expected.add_assign(&a3);
        assert_eq!(ctx.d3_element(1, 2, 2), expected);
        // d₃(x,x,x) = 0 and d₃(a,b,1) = ε(ab)·1
        assert!(ctx.d3_element(2, 2, 2).is_zero());
        assert_eq!(ctx.d3_element(0, 0, 0), ctx.f2.algebra.one());
        assert_eq!(ctx.d3_element(1, 1, 0), ctx.f2.algebra.one());
        assert!(ctx.d3_element(2, 1, 0).is_zero());
    }

    #[test]
    fn sweedler_h2_is_polynomial_on_one_primitive() {
        let result = h2_lazy(&sweedler_h4()).unwrap();
        assert!(result.h2.group_part.is_trivial());
        assert_eq!(result.h2.primitive_count, 4);
        assert_eq!(result.h2.free_primitives(), 1);
        assert_eq!(result.h2.render(), "k[X1]");
    }

    #[test]
    fn sweedler_h1_both_routes_trivial() {
        let ctx = lazy_complex(&sweedler_h4()).unwrap();
        let d = ctx.h1_descriptor().unwrap();
        assert!(d.is_trivial());
        let q = crate::quotients::h1_lazy(&sweedler_h4()).unwrap();
        assert_eq!(q.dim(), 1);
    }

    #[test]
    fn cyclic_h1_descriptor_is_group() {
        let d = h1_via_homology(&group_algebra(&groups::cyclic(4))).unwrap();
        assert_eq!(d.group_part.invariant_factors_i64(), vec![4]);
        assert_eq!(d.free_primitives(), 0);
    }

    #[test]
    fn s3_h1_descriptor_is_abelianization() {
        let d = h1_via_homology(&group_algebra(&groups::s3())).unwrap();
        assert_eq!(d.group_part.invariant_factors_i64(), vec![2]);
    }

    #[test]
    fn klein_four_h2_is_z2() {
        let g = groups::cyclic(2).direct_product(&groups::cyclic(2));
        let result = h2_lazy(&group_algebra(&g)).unwrap();
        assert_eq!(result.h2.group_part.invariant_factors_i64(), vec![2]);
        assert_eq!(result.h2.free_primitives(), 0);
    }

    #[test]
    fn cyclic_h2_trivial() {
        for n in [2, 3, 4] {
            let result = h2_lazy(&group_algebra(&groups::cyclic(n))).unwrap();
            assert!(
                result.h2.is_trivial(),
                "H2 of C{n} should be trivial, got {}",
                result.h2.render()
            );
        }
    }

    #[test]
    fn function_algebra_pipeline_is_out_of_scope() {
        // (k^G)^[1] over Q is not spanned by candidate grouplikes, so the
        // pipeline refuses loudly rather than guessing
        match lazy_complex(&function_algebra(&groups::s3())) {
            Err(Error::UnsupportedShape { .. }) => {}
            Err(other) => panic!("unexpected error {other:?}"),
            Ok(_) => panic!("expected unsupported-shape error"),
        }
    }
}
