//! Incrementally maintained row-reduced subspace, for membership tests and
//! ideal-closure loops.

use super::{qzero, QVector, Rational};
use num::Zero;

/// A subspace of Q^cols kept in reduced row echelon form.
#[derive(Clone, Debug)]
pub struct Span {
    cols: usize,
    rows: Vec<QVector>,
    pivots: Vec<usize>,
}

impl Span {
    pub fn new(cols: usize) -> Self {
        Span {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[QVector] {
        &self.rows
    }

    /// Residue of `v` after reduction against the span.
    pub fn reduce(&self, v: &[Rational]) -> QVector {
        assert_eq!(v.len(), self.cols, "span dimension");
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !out[p].is_zero() {
                let f = out[p].clone();
                for j in p..self.cols {
                    if !row[j].is_zero() {
                        out[j] = &out[j] - &f * &row[j];
                    }
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let lead = r[p].clone();
        for x in r.iter_mut().skip(p) {
            if !x.is_zero() {
                *x = &*x / &lead;
            }
        }
        // back-substitute into existing rows
        for row in &mut self.rows {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for j in p..self.cols {
                    if !r[j].is_zero() {
                        row[j] = &row[j] - &f * &r[j];
                    }
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        true
    }

    /// The span as generators padded into a matrix-friendly form.
    pub fn basis_vectors(&self) -> Vec<QVector> {
        self.rows.clone()
    }

    pub fn zero_vec(&self) -> QVector {
        vec![qzero(); self.cols]
    }
}

#[cfg(test)]
mod tests {
    use super::super::rat;
    use super::*;

    #[test]
    fn span_membership_and_growth() {
        let mut s = Span::new(3);
        assert!(s.insert(&[rat(1), rat(2), rat(0)]));
        assert!(s.insert(&[rat(0), rat(1), rat(1)]));
        assert!(!s.insert(&[rat(1), rat(3), rat(1)])); // dependent
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&[rat(2), rat(5), rat(1)]));
        assert!(!s.contains(&[rat(0), rat(0), rat(1)]));
    }
}
