//! Sparse elements of presented commutative Hopf algebras and their tensors.

use crate::linalg::{qone, rational_string, Rational};
use num::{One, Zero};
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

/// Monomial T^laurent · Y^poly; Laurent exponents may be negative.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Monomial {
    pub laurent: Vec<i64>,
    pub poly: Vec<u32>,
}

impl Monomial {
    pub fn one(n_laurent: usize, n_poly: usize) -> Self {
        Monomial {
            laurent: vec![0; n_laurent],
            poly: vec![0; n_poly],
        }
    }

    pub fn is_one(&self) -> bool {
        self.laurent.iter().all(|&e| e == 0) && self.poly.iter().all(|&d| d == 0)
    }

    pub fn poly_degree(&self) -> u32 {
        self.poly.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            laurent: self
                .laurent
                .iter()
                .zip(&other.laurent)
                .map(|(a, b)| a + b)
                .collect(),
            poly: self.poly.iter().zip(&other.poly).map(|(a, b)| a + b).collect(),
        }
    }
}

/// Finitely supported Rational combination of monomials.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Default, Debug)]
pub struct Element {
    pub terms: BTreeMap<Monomial, Rational>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn from_monomial(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Element { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_assign(&mut self, other: &Element) {
        for (m, c) in &other.terms {
            add_at(&mut self.terms, m.clone(), c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &Element) {
        for (m, c) in &other.terms {
            add_at(&mut self.terms, m.clone(), -c.clone());
        }
    }

    pub fn scaled(&self, c: &Rational) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Element) -> Element {
        let mut out = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                add_at(&mut out, m1.mul(m2), c1 * c2);
            }
        }
        Element { terms: out }
    }

    /// n-th power; `one` supplies the ambient unit for n = 0.
    pub fn pow(&self, n: u32, one: &Element) -> Element {
        let mut acc = one.clone();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// The single monomial with coefficient 1, if that is the whole element.
    pub fn as_unit_monomial(&self) -> Option<&Monomial> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        if c.is_one() {
            Some(m)
        } else {
            None
        }
    }

    pub fn render(&self, laurent_labels: &[String], poly_labels: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (m, c) in &self.terms {
            let mut factors = Vec::new();
            for (i, &e) in m.laurent.iter().enumerate() {
                if e == 1 {
                    factors.push(laurent_labels[i].clone());
                } else if e != 0 {
                    factors.push(format!("{}^{}", laurent_labels[i], e));
                }
            }
            for (i, &d) in m.poly.iter().enumerate() {
                if d == 1 {
                    factors.push(poly_labels[i].clone());
                } else if d != 0 {
                    factors.push(format!("{}^{}", poly_labels[i], d));
                }
            }
            let mono = if factors.is_empty() {
                "1".to_string()
            } else {
                factors.join("·")
            };
            let coeff = rational_string(c);
            let part = if coeff == "1" && mono != "1" {
                mono
            } else if coeff == "-1" && mono != "1" {
                format!("-{mono}")
            } else if mono == "1" {
                coeff
            } else {
                format!("{coeff}·{mono}")
            };
            parts.push(part);
        }
        parts.join(" + ")
    }
}

pub(crate) fn add_at(map: &mut BTreeMap<Monomial, Rational>, m: Monomial, c: Rational) {
    if c.is_zero() {
        return;
    }
    match map.entry(m) {
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
        Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

/// Sparse tensor of fixed arity; legs may belong to different presented
/// algebras (each monomial key carries its own generator counts).
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct TensorElt {
    pub terms: BTreeMap<Vec<Monomial>, Rational>,
}

impl TensorElt {
    pub fn zero() -> Self {
        TensorElt::default()
    }

    pub fn from_legs(legs: Vec<&Element>) -> TensorElt {
        let mut out = TensorElt {
            terms: BTreeMap::new(),
        };
        out.add_product(legs, &qone());
        out
    }

    pub fn add_product(&mut self, legs: Vec<&Element>, scale: &Rational) {
        let mut acc: Vec<(Vec<Monomial>, Rational)> = vec![(Vec::new(), scale.clone())];
        for leg in legs {
            let mut next = Vec::new();
            for (key, c) in acc {
                for (m, x) in &leg.terms {
                    let mut k = key.clone();
                    k.push(m.clone());
                    next.push((k, &c * x));
                }
            }
            acc = next;
        }
        for (k, c) in acc {
            add_tensor_at(&mut self.terms, k, c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Componentwise product of tensors of equal arity.
    pub fn mul(&self, other: &TensorElt) -> TensorElt {
        let mut out = BTreeMap::new();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                debug_assert_eq!(k1.len(), k2.len());
                let k: Vec<Monomial> = k1.iter().zip(k2).map(|(a, b)| a.mul(b)).collect();
                add_tensor_at(&mut out, k, c1 * c2);
            }
        }
        TensorElt { terms: out }
    }

    pub fn add_assign(&mut self, other: &TensorElt) {
        for (k, c) in &other.terms {
            add_tensor_at(&mut self.terms, k.clone(), c.clone());
        }
    }

    pub fn scaled(&self, c: &Rational) -> TensorElt {
        if c.is_zero() {
            return TensorElt::zero();
        }
        TensorElt {
            terms: self
                .terms
                .iter()
                .map(|(k, x)| (k.clone(), x * c))
                .collect(),
        }
    }
}

pub(crate) fn add_tensor_at(
    map: &mut BTreeMap<Vec<Monomial>, Rational>,
    k: Vec<Monomial>,
    c: Rational,
) {
    if c.is_zero() {
        return;
    }
    match map.entry(k) {
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
        Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}
