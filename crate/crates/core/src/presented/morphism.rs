//! Morphisms between presented commutative Hopf algebras, given by images
//! of generators and verified on them.

use super::algebra::PresentedCommHopf;
use super::element::{add_tensor_at, Element, Monomial, TensorElt};
use crate::error::{Error, Result};
use crate::linalg::qone;

#[derive(Clone, Debug)]
pub struct PresentedMorphism {
    pub source: PresentedCommHopf,
    pub target: PresentedCommHopf,
    pub laurent_images: Vec<Element>,
    pub poly_images: Vec<Element>,
}

impl PresentedMorphism {
    pub fn new(
        source: PresentedCommHopf,
        target: PresentedCommHopf,
        laurent_images: Vec<Element>,
        poly_images: Vec<Element>,
    ) -> Self {
        assert_eq!(laurent_images.len(), source.n_laurent());
        assert_eq!(poly_images.len(), source.n_poly());
        PresentedMorphism {
            source,
            target,
            laurent_images,
            poly_images,
        }
    }

    /// Applies the morphism by monomial substitution. Laurent generators may
    /// occur with negative exponents, so their images must be invertible,
    /// i.e. coefficient-1 Laurent monomials of the target.
    pub fn apply(&self, e: &Element) -> Result<Element> {
        let mut out = Element::zero();
        for (m, c) in &e.terms {
            let mut acc = self.target.one();
            for (i, &exp) in m.laurent.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                let img = &self.laurent_images[i];
                let Some(mono) = self.target.as_grouplike(img) else {
                    return Err(Error::OutOfScope {
                        module: "presented",
                        reason: format!(
                            "image of {} is not a Laurent monomial: {}",
                            self.source.laurent_labels[i],
                            self.target.render(img)
                        ),
                    });
                };
                let powered: Vec<i64> = mono.iter().map(|t| t * exp).collect();
                acc = acc.mul(&self.target.laurent_monomial(&powered));
            }
            for (h, &deg) in m.poly.iter().enumerate() {
                if deg == 0 {
                    continue;
                }
                let img = self.poly_images[h].clone();
                if img.is_zero() {
                    acc = Element::zero();
                    break;
                }
                acc = acc.mul(&img.pow(deg, &self.target.one()));
            }
            out.add_assign(&acc.scaled(c));
        }
        Ok(out)
    }

    /// Applies the morphism to one leg of a tensor, leaving the others fixed.
    pub fn apply_leg(&self, t: &TensorElt, leg: usize) -> Result<TensorElt> {
        let mut out = TensorElt::zero();
        for (key, c) in &t.terms {
            let img = self.apply(&Element::from_monomial(key[leg].clone(), qone()))?;
            for (m, w) in &img.terms {
                let mut nk = key.clone();
                nk[leg] = m.clone();
                add_tensor_at(&mut out.terms, nk, c * w);
            }
        }
        Ok(out)
    }

    /// Verifies the Hopf-morphism identities on every generator: Δ∘f = (f⊗f)∘Δ,
    /// ε∘f = ε, S∘f = f∘S, and invertibility of Laurent images.
    pub fn verify(&self) -> Result<()> {
        for i in 0..self.source.n_laurent() {
            let img = &self.laurent_images[i];
            if self.target.as_grouplike(img).is_none() {
                return Err(Error::AxiomFailure(format!(
                    "image of Laurent generator {} is not grouplike: {}",
                    self.source.laurent_labels[i],
                    self.target.render(img)
                )));
            }
        }
        let gens: Vec<Element> = (0..self.source.n_laurent())
            .map(|i| self.source.laurent_gen(i, 1))
            .chain((0..self.source.n_poly()).map(|h| self.source.poly_gen(h)))
            .collect();
        for (gi, g) in gens.iter().enumerate() {
            let img = self.apply(g)?;
            // counit
            if self.target.counit(&img) != self.source.counit(g) {
                return Err(Error::AxiomFailure(format!(
                    "morphism does not preserve counit on generator {gi}"
                )));
            }
            // coproduct
            let lhs = self.target.comult(&img);
            let rhs = self.apply_leg(&self.apply_leg(&self.source.comult(g), 0)?, 1)?;
            if lhs != rhs {
                return Err(Error::AxiomFailure(format!(
                    "morphism does not commute with Δ on generator {gi}"
                )));
            }
            // antipode
            if self.apply(&self.source.antipode(g))? != self.target.antipode(&img) {
                return Err(Error::AxiomFailure(format!(
                    "morphism does not commute with S on generator {gi}"
                )));
            }
        }
        Ok(())
    }

    /// The Hopf-kernel membership test f(a₁) ⊗ a₂ = 1 ⊗ a, together with its
    /// mirror a₁ ⊗ f(a₂) = a ⊗ 1.
    pub fn hker_membership(&self, a: &Element) -> Result<bool> {
        let d = self.source.comult(a);
        let lhs = self.apply_leg(&d, 0)?;
        let mut expected = TensorElt::zero();
        for (m, c) in &a.terms {
            add_tensor_at(
                &mut expected.terms,
                vec![
                    Monomial::one(self.target.n_laurent(), self.target.n_poly()),
                    m.clone(),
                ],
                c.clone(),
            );
        }
        if lhs != expected {
            return Ok(false);
        }
        let rhs = self.apply_leg(&d, 1)?;
        let mut expected = TensorElt::zero();
        for (m, c) in &a.terms {
            add_tensor_at(
                &mut expected.terms,
                vec![
                    m.clone(),
                    Monomial::one(self.target.n_laurent(), self.target.n_poly()),
                ],
                c.clone(),
            );
        }
        Ok(rhs == expected)
    }

    /// Laziness identity f(a₁) ⊗ a₂ = f(a₂) ⊗ a₁ for a given source element.
    pub fn laziness_holds(&self, a: &Element) -> Result<bool> {
        let d = self.source.comult(a);
        let lhs = self.apply_leg(&d, 0)?;
        // flip then map the (new) first leg
        let mut flipped = TensorElt::zero();
        for (key, c) in &d.terms {
            add_tensor_at(&mut flipped.terms, vec![key[1].clone(), key[0].clone()], c.clone());
        }
        let rhs = self.apply_leg(&flipped, 0)?;
        Ok(lhs == rhs)
    }
}
