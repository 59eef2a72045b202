//! The presentation k[Λ] ⊗ k[Y₁..Yₙ] and its Hopf structure.

use super::element::{Element, Monomial, TensorElt};
use crate::error::{Error, Result};
use crate::linalg::{qone, rat, Rational};
use num::Zero;

/// Commutative Hopf algebra with invertible grouplike generators T_g and
/// polynomial generators Y_h, each Y_h skew-primitive over the grouplike
/// monomial T^{tag(h)}:
///
/// Δ(T_g) = T_g ⊗ T_g, Δ(Y_h) = T^tag ⊗ Y_h + Y_h ⊗ T^tag,
/// ε(T_g) = 1, ε(Y_h) = 0, S(T_g) = T_g⁻¹, S(Y_h) = -T^{-2·tag} Y_h.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentedCommHopf {
    pub name: String,
    pub laurent_labels: Vec<String>,
    pub poly_labels: Vec<String>,
    /// Grouplike tag of each polynomial generator as a Laurent exponent vector.
    pub poly_tags: Vec<Vec<i64>>,
}

impl PresentedCommHopf {
    pub fn new(
        name: &str,
        laurent_labels: Vec<String>,
        poly_labels: Vec<String>,
        poly_tags: Vec<Vec<i64>>,
    ) -> Self {
        assert_eq!(poly_labels.len(), poly_tags.len());
        for tag in &poly_tags {
            assert_eq!(tag.len(), laurent_labels.len());
        }
        PresentedCommHopf {
            name: name.to_string(),
            laurent_labels,
            poly_labels,
            poly_tags,
        }
    }

    pub fn n_laurent(&self) -> usize {
        self.laurent_labels.len()
    }

    pub fn n_poly(&self) -> usize {
        self.poly_labels.len()
    }

    pub fn one(&self) -> Element {
        Element::from_monomial(Monomial::one(self.n_laurent(), self.n_poly()), qone())
    }

    pub fn zero(&self) -> Element {
        Element::zero()
    }

    pub fn scalar(&self, c: Rational) -> Element {
        Element::from_monomial(Monomial::one(self.n_laurent(), self.n_poly()), c)
    }

    pub fn laurent_gen(&self, i: usize, power: i64) -> Element {
        let mut m = Monomial::one(self.n_laurent(), self.n_poly());
        m.laurent[i] = power;
        Element::from_monomial(m, qone())
    }

    pub fn laurent_monomial(&self, exponents: &[i64]) -> Element {
        assert_eq!(exponents.len(), self.n_laurent());
        let m = Monomial {
            laurent: exponents.to_vec(),
            poly: vec![0; self.n_poly()],
        };
        Element::from_monomial(m, qone())
    }

    pub fn poly_gen(&self, i: usize) -> Element {
        let mut m = Monomial::one(self.n_laurent(), self.n_poly());
        m.poly[i] = 1;
        Element::from_monomial(m, qone())
    }

    pub fn render(&self, e: &Element) -> String {
        e.render(&self.laurent_labels, &self.poly_labels)
    }

    pub fn counit(&self, e: &Element) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &e.terms {
            if m.poly_degree() == 0 {
                acc += c;
            }
        }
        acc
    }

    pub fn antipode(&self, e: &Element) -> Element {
        let mut out = Element::zero();
        for (m, c) in &e.terms {
            let total: u32 = m.poly_degree();
            let mut laurent: Vec<i64> = m.laurent.iter().map(|x| -x).collect();
            for (h, &d) in m.poly.iter().enumerate() {
                if d > 0 {
                    for (i, t) in self.poly_tags[h].iter().enumerate() {
                        laurent[i] -= 2 * t * i64::from(d);
                    }
                }
            }
            let sign = if total % 2 == 0 { rat(1) } else { rat(-1) };
            let nm = Monomial {
                laurent,
                poly: m.poly.clone(),
            };
            out.add_assign(&Element::from_monomial(nm, c * &sign));
        }
        out
    }

    /// Coproduct of a monomial, as a 2-tensor.
    fn comult_monomial(&self, m: &Monomial) -> TensorElt {
        // Laurent part duplicates
        let mut left = Monomial::one(self.n_laurent(), self.n_poly());
        left.laurent = m.laurent.clone();
        let right = left.clone();
        let base = Element::from_monomial(left, qone());
        let base_r = Element::from_monomial(right, qone());
        let mut acc = TensorElt::from_legs(vec![&base, &base_r]);
        for (h, &d) in m.poly.iter().enumerate() {
            if d == 0 {
                continue;
            }
            // (T^tag ⊗ Y + Y ⊗ T^tag)^d via repeated multiplication
            let tag = self.tag_monomial(h);
            let y = self.poly_gen(h);
            let mut gen = TensorElt::from_legs(vec![&tag, &y]);
            gen.add_assign(&TensorElt::from_legs(vec![&y, &tag]));
            for _ in 0..d {
                acc = acc.mul(&gen);
            }
        }
        acc
    }

    fn tag_monomial(&self, h: usize) -> Element {
        self.laurent_monomial(&self.poly_tags[h])
    }

    pub fn comult(&self, e: &Element) -> TensorElt {
        let mut out = TensorElt::zero();
        for (m, c) in &e.terms {
            out.add_assign(&self.comult_monomial(m).scaled(c));
        }
        out
    }

    /// Iterated coproduct with the given number of legs (>= 1), expanding the
    /// last leg repeatedly.
    pub fn iterated_comult(&self, e: &Element, legs: usize) -> TensorElt {
        assert!(legs >= 1);
        let mut acc = TensorElt::zero();
        acc.add_product(vec![e], &qone());
        for _ in 1..legs {
            let mut next = TensorElt::zero();
            for (key, c) in &acc.terms {
                let last = Element::from_monomial(key.last().unwrap().clone(), qone());
                let expanded = self.comult(&last);
                for (pair, w) in &expanded.terms {
                    let mut nk = key.clone();
                    nk.pop();
                    nk.extend(pair.iter().cloned());
                    super::element::add_tensor_at(&mut next.terms, nk, c * w);
                }
            }
            acc = next;
        }
        acc
    }

    /// Grouplike elements of this presentation are exactly the coefficient-1
    /// Laurent monomials; returns the exponent vector.
    pub fn as_grouplike(&self, e: &Element) -> Option<Vec<i64>> {
        let m = e.as_unit_monomial()?;
        if m.poly_degree() == 0 {
            Some(m.laurent.clone())
        } else {
            None
        }
    }

    /// Hopf axioms checked exactly on every generator: coassociativity,
    /// counit, antipode, and S² = id.
    pub fn verify_axioms(&self) -> Result<()> {
        let gens: Vec<Element> = (0..self.n_laurent())
            .map(|i| self.laurent_gen(i, 1))
            .chain((0..self.n_poly()).map(|h| self.poly_gen(h)))
            .collect();
        for (gi, g) in gens.iter().enumerate() {
            let d = self.comult(g);
            // coassociativity
            let mut left = TensorElt::zero();
            let mut right = TensorElt::zero();
            for (key, c) in &d.terms {
                let a = Element::from_monomial(key[0].clone(), qone());
                let b = Element::from_monomial(key[1].clone(), qone());
                for (k2, c2) in &self.comult(&a).terms {
                    super::element::add_tensor_at(
                        &mut left.terms,
                        vec![k2[0].clone(), k2[1].clone(), key[1].clone()],
                        c * c2,
                    );
                }
                for (k2, c2) in &self.comult(&b).terms {
                    super::element::add_tensor_at(
                        &mut right.terms,
                        vec![key[0].clone(), k2[0].clone(), k2[1].clone()],
                        c * c2,
                    );
                }
            }
            if left != right {
                return Err(Error::AxiomFailure(format!(
                    "{}: coassociativity fails on generator {gi}",
                    self.name
                )));
            }
            // counit law
            let mut eps_id = Element::zero();
            let mut id_eps = Element::zero();
            for (key, c) in &d.terms {
                let a = Element::from_monomial(key[0].clone(), qone());
                let b = Element::from_monomial(key[1].clone(), qone());
                eps_id.add_assign(&b.scaled(&(c * self.counit(&a))));
                id_eps.add_assign(&a.scaled(&(c * self.counit(&b))));
            }
            if &eps_id != g || &id_eps != g {
                return Err(Error::AxiomFailure(format!(
                    "{}: counit law fails on generator {gi}",
                    self.name
                )));
            }
            // antipode identity m(S ⊗ id)Δ = ε·1 = m(id ⊗ S)Δ
            let mut s_id = Element::zero();
            let mut id_s = Element::zero();
            for (key, c) in &d.terms {
                let a = Element::from_monomial(key[0].clone(), qone());
                let b = Element::from_monomial(key[1].clone(), qone());
                s_id.add_assign(&self.antipode(&a).mul(&b).scaled(c));
                id_s.add_assign(&a.mul(&self.antipode(&b)).scaled(c));
            }
            let expected = self.scalar(self.counit(g));
            if s_id != expected || id_s != expected {
                return Err(Error::AxiomFailure(format!(
                    "{}: antipode axiom fails on generator {gi}",
                    self.name
                )));
            }
            // S² = id
            if self.antipode(&self.antipode(g)) != *g {
                return Err(Error::AxiomFailure(format!(
                    "{}: S² ≠ id on generator {gi}",
                    self.name
                )));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sweedler_b() -> PresentedCommHopf {
        // B = k[T, T⁻¹, Y1..Y4] with Δ(Y_i) = T ⊗ Y_i + Y_i ⊗ T
        PresentedCommHopf::new(
            "B",
            vec!["T".into()],
            (1..=4).map(|i| format!("Y{i}")).collect(),
            vec![vec![1]; 4],
        )
    }

    #[test]
    fn coproduct_of_laurent_power_is_grouplike() {
        let p = sweedler_b();
        let t2 = p.laurent_gen(0, 2);
        let d = p.comult(&t2);
        let expected = TensorElt::from_legs(vec![&t2, &t2]);
        assert_eq!(d, expected);
    }

    #[test]
    fn t_inverse_y_is_primitive() {
        // Δ(T⁻¹Y) = 1 ⊗ T⁻¹Y + T⁻¹Y ⊗ 1
        let p = sweedler_b();
        let x = p.laurent_gen(0, -1).mul(&p.poly_gen(0));
        let d = p.comult(&x);
        let one = p.one();
        let mut expected = TensorElt::from_legs(vec![&one, &x]);
        expected.add_assign(&TensorElt::from_legs(vec![&x, &one]));
        assert_eq!(d, expected);
    }

    #[test]
    fn antipode_of_primitive_is_negation() {
        // S(T⁻¹Y) = T·(-T⁻²Y) = -T⁻¹Y
        let p = sweedler_b();
        let x = p.laurent_gen(0, -1).mul(&p.poly_gen(0));
        assert_eq!(p.antipode(&x), x.scaled(&rat(-1)));
    }

    #[test]
    fn axioms_hold_on_generators() {
        sweedler_b().verify_axioms().unwrap();
        let laurent_only = PresentedCommHopf::new(
            "L",
            vec!["a".into(), "b".into()],
            vec![],
            vec![],
        );
        laurent_only.verify_axioms().unwrap();
    }

    #[test]
    fn counit_of_mixed_element() {
        let p = sweedler_b();
        let mut e = p.laurent_gen(0, 3); // ε = 1
        e.add_assign(&p.poly_gen(1).scaled(&rat(5))); // ε = 0
        e.add_assign(&p.scalar(rat(2)));
        assert_eq!(p.counit(&e), rat(3));
    }

    #[test]
    fn iterated_comult_of_primitive() {
        // Δ²(X) has three terms X⊗1⊗1 + 1⊗X⊗1 + 1⊗1⊗X
        let p = sweedler_b();
        let x = p.laurent_gen(0, -1).mul(&p.poly_gen(0));
        let d = p.iterated_comult(&x, 3);
        assert_eq!(d.terms.len(), 3);
        for (key, c) in &d.terms {
            assert_eq!(c, &qone());
            let ones = key.iter().filter(|m| m.is_one()).count();
            assert_eq!(ones, 2);
        }
    }
}
