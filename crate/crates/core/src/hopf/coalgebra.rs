//! Coalgebras with sparse coproduct tensors.

use super::{add_term, TensorVec};
use crate::error::{Error, Result};
use crate::linalg::{qzero, QVector, Rational};
use num::Zero;
use std::collections::BTreeMap;

/// A finite-dimensional coalgebra over Q on a labeled basis.
///
/// The coproduct is stored as sparse terms: `comult[i]` lists `(j, k, c)`
/// with `Δ e_i = Σ c · e_j ⊗ e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinDimCoalgebra {
    labels: Vec<String>,
    comult: Vec<Vec<(usize, usize, Rational)>>,
    counit: QVector,
}

impl FinDimCoalgebra {
    pub fn new(
        labels: Vec<String>,
        comult: Vec<Vec<(usize, usize, Rational)>>,
        counit: QVector,
    ) -> Result<Self> {
        let n = labels.len();
        if comult.len() != n {
            return Err(Error::DimensionMismatch {
                context: "comult tensor",
                expected: n,
                got: comult.len(),
            });
        }
        if counit.len() != n {
            return Err(Error::DimensionMismatch {
                context: "counit vector",
                expected: n,
                got: counit.len(),
            });
        }
        for terms in &comult {
            for &(j, k, _) in terms {
                if j >= n || k >= n {
                    return Err(Error::DimensionMismatch {
                        context: "comult term index",
                        expected: n,
                        got: j.max(k),
                    });
                }
            }
        }
        Ok(FinDimCoalgebra {
            labels,
            comult,
            counit,
        })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn comult_terms(&self, i: usize) -> &[(usize, usize, Rational)] {
        &self.comult[i]
    }

    pub fn counit(&self) -> &[Rational] {
        &self.counit
    }

    pub fn counit_of(&self, v: &[Rational]) -> Rational {
        v.iter()
            .zip(&self.counit)
            .map(|(a, b)| a * b)
            .fold(qzero(), |acc, x| acc + x)
    }

    /// Coproduct of a coordinate vector as a sparse tensor.
    pub fn comult_vec(&self, v: &[Rational]) -> TensorVec {
        let mut out = TensorVec::new();
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, k, w) in &self.comult[i] {
                add_term(&mut out, (*j, *k), c * w);
            }
        }
        out
    }

    /// Iterated coproduct with `legs` tensor factors (legs >= 1).
    pub fn iterated_comult(&self, v: &[Rational], legs: usize) -> BTreeMap<Vec<usize>, Rational> {
        assert!(legs >= 1);
        let mut out: BTreeMap<Vec<usize>, Rational> = BTreeMap::new();
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                add_term(&mut out, vec![i], c.clone());
            }
        }
        for _ in 1..legs {
            let mut next: BTreeMap<Vec<usize>, Rational> = BTreeMap::new();
            for (key, c) in &out {
                // expand the last leg
                let last = *key.last().unwrap();
                for (j, k, w) in &self.comult[last] {
                    let mut nk = key.clone();
                    *nk.last_mut().unwrap() = *j;
                    nk.push(*k);
                    add_term(&mut next, nk, c * w);
                }
            }
            out = next;
        }
        out
    }

    pub fn is_cocommutative(&self) -> bool {
        (0..self.dim()).all(|i| {
            let mut e = vec![qzero(); self.dim()];
            e[i] = Rational::from_integer(1.into());
            let d = self.comult_vec(&e);
            let flipped: TensorVec = d.iter().map(|(&(j, k), c)| ((k, j), c.clone())).collect();
            d == flipped
        })
    }

    /// Coassociativity and counit laws, checked exactly on every basis element.
    pub fn check_coalgebra_axioms(&self) -> Vec<super::AxiomCheck> {
        let n = self.dim();
        let mut coassoc = super::AxiomCheck::pass("coassociativity");
        'outer: for i in 0..n {
            // (Δ ⊗ id)Δ vs (id ⊗ Δ)Δ on e_i
            let mut left: BTreeMap<(usize, usize, usize), Rational> = BTreeMap::new();
            let mut right: BTreeMap<(usize, usize, usize), Rational> = BTreeMap::new();
            for (j, k, c) in &self.comult[i] {
                for (a, b, w) in &self.comult[*j] {
                    add_term(&mut left, (*a, *b, *k), c * w);
                }
                for (a, b, w) in &self.comult[*k] {
                    add_term(&mut right, (*j, *a, *b), c * w);
                }
            }
            if left != right {
                coassoc = super::AxiomCheck::fail("coassociativity", format!("basis {i}"));
                break 'outer;
            }
        }
        let mut counit = super::AxiomCheck::pass("counit");
        'outer2: for i in 0..n {
            let mut left = vec![qzero(); n];
            let mut right = vec![qzero(); n];
            for (j, k, c) in &self.comult[i] {
                left[*k] += c * &self.counit[*j];
                right[*j] += c * &self.counit[*k];
            }
            for t in 0..n {
                let expected = if t == i {
                    Rational::from_integer(1.into())
                } else {
                    qzero()
                };
                if left[t] != expected || right[t] != expected {
                    counit = super::AxiomCheck::fail("counit", format!("basis {i}"));
                    break 'outer2;
                }
            }
        }
        vec![coassoc, counit]
    }
}
