//! Takeuchi's free commutative Hopf algebra F(C) for pointed coalgebras.

use super::algebra::PresentedCommHopf;
use super::element::{Element, TensorElt};
use crate::error::{Error, Result};
use crate::hopf::PointedCoalgebra;
use crate::linalg::{qone, Rational};
use num::Zero;

/// F(C) realized as k[Λ] ⊗ k[Y..] with the linear embeddings t and t⁻¹.
///
/// t sends the i-th grouplike to T_i and the j-th skew-primitive to Y_j;
/// t⁻¹ sends them to T_i⁻¹ and -T_{λ(j)}⁻² Y_j. The defining relation
/// t(x₁) t⁻¹(x₂) = ε(x)·1 is certified at construction for every basis x.
#[derive(Clone, Debug)]
pub struct FreeCommHopf {
    pub algebra: PresentedCommHopf,
    pub pointed: PointedCoalgebra,
    t_pos: Vec<Element>,
    t_neg: Vec<Element>,
}

impl FreeCommHopf {
    /// t(v) for a coalgebra coordinate vector v.
    pub fn t_embed(&self, v: &[Rational]) -> Element {
        linear_combination(&self.t_pos, v)
    }

    /// t⁻¹(v) for a coalgebra coordinate vector v.
    pub fn t_inv_embed(&self, v: &[Rational]) -> Element {
        linear_combination(&self.t_neg, v)
    }
}

fn linear_combination(images: &[Element], v: &[Rational]) -> Element {
    assert_eq!(images.len(), v.len(), "coalgebra coordinate length");
    let mut out = Element::zero();
    for (img, c) in images.iter().zip(v) {
        if !c.is_zero() {
            out.add_assign(&img.scaled(c));
        }
    }
    out
}

/// Builds F(C) from a pointed profile: one Laurent generator per grouplike,
/// one polynomial generator per skew-primitive.
pub fn free_commutative_hopf(name: &str, pointed: &PointedCoalgebra) -> Result<FreeCommHopf> {
    let n_l = pointed.num_grouplikes();
    let n_p = pointed.num_skews();
    let laurent_labels = (0..n_l).map(|i| format!("T{i}")).collect();
    let poly_labels = (0..n_p).map(|j| format!("Y{j}")).collect();
    let poly_tags = (0..n_p)
        .map(|j| {
            let mut tag = vec![0i64; n_l];
            tag[pointed.skew_grouplike(j)] = 1;
            tag
        })
        .collect();
    let algebra = PresentedCommHopf::new(name, laurent_labels, poly_labels, poly_tags);
    algebra.verify_axioms()?;

    // generator images in profile order: grouplikes then skews
    let gen_pos: Vec<Element> = (0..n_l)
        .map(|i| algebra.laurent_gen(i, 1))
        .chain((0..n_p).map(|j| algebra.poly_gen(j)))
        .collect();
    let gen_neg: Vec<Element> = (0..n_l)
        .map(|i| algebra.laurent_gen(i, -1))
        .chain((0..n_p).map(|j| {
            let g = pointed.skew_grouplike(j);
            algebra
                .laurent_gen(g, -2)
                .mul(&algebra.poly_gen(j))
                .scaled(&-qone())
        }))
        .collect();

    let dim = pointed.coalgebra().dim();
    let mut t_pos = Vec::with_capacity(dim);
    let mut t_neg = Vec::with_capacity(dim);
    for i in 0..dim {
        let mut e = vec![Rational::zero(); dim];
        e[i] = qone();
        let coords = pointed.profile_coords(&e);
        t_pos.push(linear_combination(&gen_pos, &coords));
        t_neg.push(linear_combination(&gen_neg, &coords));
    }

    let free = FreeCommHopf {
        algebra,
        pointed: pointed.clone(),
        t_pos,
        t_neg,
    };
    verify_t_relations(&free)?;
    Ok(free)
}

/// Certifies t(x₁)t⁻¹(x₂) = ε(x)·1 = t⁻¹(x₁)t(x₂) on every basis element,
/// and that t is a coalgebra morphism.
fn verify_t_relations(free: &FreeCommHopf) -> Result<()> {
    let c = free.pointed.coalgebra();
    let p = &free.algebra;
    for i in 0..c.dim() {
        let mut pos_neg = Element::zero();
        let mut neg_pos = Element::zero();
        let mut delta_t = TensorElt::zero();
        for (a, b, w) in c.comult_terms(i) {
            pos_neg.add_assign(&free.t_pos[*a].mul(&free.t_neg[*b]).scaled(w));
            neg_pos.add_assign(&free.t_neg[*a].mul(&free.t_pos[*b]).scaled(w));
            delta_t.add_product(vec![&free.t_pos[*a], &free.t_pos[*b]], w);
        }
        let expected = p.scalar(c.counit()[i].clone());
        if pos_neg != expected || neg_pos != expected {
            return Err(Error::AxiomFailure(format!(
                "t * t⁻¹ relation fails on basis {i} of {}",
                p.name
            )));
        }
        if p.comult(&free.t_pos[i]) != delta_t {
            return Err(Error::AxiomFailure(format!(
                "t is not a coalgebra morphism at basis {i} of {}",
                p.name
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups;
    use crate::hopf::{group_algebra, pointed_profile};
    use crate::linalg::rat;

    #[test]
    fn free_hopf_on_group_algebra_is_laurent() {
        let h = group_algebra(&groups::cyclic(3));
        let candidates: Vec<Vec<Rational>> = (0..3).map(|i| h.basis_vec(i)).collect();
        let p = pointed_profile(h.coalgebra(), &candidates).unwrap();
        let f = free_commutative_hopf("F", &p).unwrap();
        assert_eq!(f.algebra.n_laurent(), 3);
        assert_eq!(f.algebra.n_poly(), 0);
        // t(g) t⁻¹(g) = 1 directly
        let tg = f.t_embed(&h.basis_vec(1));
        let tginv = f.t_inv_embed(&h.basis_vec(1));
        assert_eq!(tg.mul(&tginv), f.algebra.one());
    }

    #[test]
    fn skew_primitive_t_inverse_formula() {
        // coalgebra {g, v} with Δv = g⊗v + v⊗g: t⁻¹(v) = -T⁻²Y, and the
        // ttbar relation certifies it: T·(-T⁻²Y) + Y·T⁻¹ = 0
        let c = crate::hopf::FinDimCoalgebra::new(
            vec!["g".into(), "v".into()],
            vec![
                vec![(0, 0, qone())],
                vec![(0, 1, qone()), (1, 0, qone())],
            ],
            vec![qone(), rat(0)],
        )
        .unwrap();
        let p = pointed_profile(&c, &[vec![qone(), rat(0)]]).unwrap();
        let f = free_commutative_hopf("F", &p).unwrap();
        assert_eq!(f.algebra.n_laurent(), 1);
        assert_eq!(f.algebra.n_poly(), 1);
        let tv = f.t_inv_embed(&[rat(0), rat(1)]);
        let expected = f
            .algebra
            .laurent_gen(0, -2)
            .mul(&f.algebra.poly_gen(0))
            .scaled(&rat(-1));
        assert_eq!(tv, expected);
    }
}
