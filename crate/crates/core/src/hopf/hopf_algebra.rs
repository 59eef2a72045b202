//! Hopf algebras as structure constants, with a full axiom verifier.

use super::{add_term, FinDimCoalgebra, TensorVec};
use crate::error::{Error, Result};
use crate::linalg::{qone, qzero, QMatrix, QVector, Rational};
use num::Zero;

#[derive(Clone, Debug)]
pub struct AxiomCheck {
    pub axiom: &'static str,
    pub pass: bool,
    pub witness: Option<String>,
}

impl AxiomCheck {
    pub fn pass(axiom: &'static str) -> Self {
        AxiomCheck {
            axiom,
            pass: true,
            witness: None,
        }
    }

    pub fn fail(axiom: &'static str, witness: String) -> Self {
        AxiomCheck {
            axiom,
            pass: false,
            witness: Some(witness),
        }
    }
}

#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&AxiomCheck> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }
}

/// A finite-dimensional Hopf algebra over Q.
///
/// `mult[i][j]` lists `(k, c)` with `e_i e_j = Σ c · e_k`; the antipode
/// matrix column `j` holds the coordinates of `S(e_j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct FinDimHopf {
    name: String,
    coalgebra: FinDimCoalgebra,
    mult: Vec<Vec<Vec<(usize, Rational)>>>,
    unit: QVector,
    antipode: QMatrix,
}

impl FinDimHopf {
    pub fn from_parts(
        name: &str,
        coalgebra: FinDimCoalgebra,
        mult: Vec<Vec<Vec<(usize, Rational)>>>,
        unit: QVector,
        antipode: QMatrix,
    ) -> Result<Self> {
        let n = coalgebra.dim();
        if mult.len() != n || mult.iter().any(|row| row.len() != n) {
            return Err(Error::DimensionMismatch {
                context: "mult tensor",
                expected: n,
                got: mult.len(),
            });
        }
        for row in &mult {
            for terms in row {
                for &(k, _) in terms {
                    if k >= n {
                        return Err(Error::DimensionMismatch {
                            context: "mult term index",
                            expected: n,
                            got: k,
                        });
                    }
                }
            }
        }
        if unit.len() != n {
            return Err(Error::DimensionMismatch {
                context: "unit vector",
                expected: n,
                got: unit.len(),
            });
        }
        if antipode.rows() != n || antipode.cols() != n {
            return Err(Error::DimensionMismatch {
                context: "antipode matrix",
                expected: n,
                got: antipode.rows(),
            });
        }
        Ok(FinDimHopf {
            name: name.to_string(),
            coalgebra,
            mult,
            unit,
            antipode,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.coalgebra.dim()
    }

    pub fn labels(&self) -> &[String] {
        self.coalgebra.labels()
    }

    pub fn coalgebra(&self) -> &FinDimCoalgebra {
        &self.coalgebra
    }

    pub fn counit(&self) -> &[Rational] {
        self.coalgebra.counit()
    }

    pub fn unit(&self) -> &[Rational] {
        &self.unit
    }

    pub fn antipode(&self) -> &QMatrix {
        &self.antipode
    }

    pub fn mult_terms(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.mult[i][j]
    }

    pub fn basis_vec(&self, i: usize) -> QVector {
        let mut v = vec![qzero(); self.dim()];
        v[i] = qone();
        v
    }

    /// Product of two coordinate vectors.
    pub fn mul_vec(&self, a: &[Rational], b: &[Rational]) -> QVector {
        let mut out = vec![qzero(); self.dim()];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let f = ai * bj;
                for (k, c) in &self.mult[i][j] {
                    out[*k] += &f * c;
                }
            }
        }
        out
    }

    pub fn antipode_vec(&self, v: &[Rational]) -> QVector {
        self.antipode.mul_vec(v)
    }

    /// Verifies every Hopf axiom exactly, reporting a witness on failure.
    pub fn verify(&self) -> AxiomReport {
        let n = self.dim();
        let mut checks = Vec::new();

        // associativity
        let mut assoc = AxiomCheck::pass("associativity");
        'assoc: for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut left = std::collections::BTreeMap::new();
                    for (u, c) in &self.mult[i][j] {
                        for (v, w) in &self.mult[*u][k] {
                            add_term(&mut left, *v, c * w);
                        }
                    }
                    let mut right = std::collections::BTreeMap::new();
                    for (u, c) in &self.mult[j][k] {
                        for (v, w) in &self.mult[i][*u] {
                            add_term(&mut right, *v, c * w);
                        }
                    }
                    if left != right {
                        assoc =
                            AxiomCheck::fail("associativity", format!("basis triple ({i},{j},{k})"));
                        break 'assoc;
                    }
                }
            }
        }
        checks.push(assoc);

        // unit law
        let mut unit_law = AxiomCheck::pass("unit");
        for i in 0..n {
            let e = self.basis_vec(i);
            if self.mul_vec(&self.unit, &e) != e || self.mul_vec(&e, &self.unit) != e {
                unit_law = AxiomCheck::fail("unit", format!("basis {i}"));
                break;
            }
        }
        checks.push(unit_law);

        checks.extend(self.coalgebra.check_coalgebra_axioms());

        // bialgebra compatibility: Δ and ε are algebra morphisms
        let mut compat = AxiomCheck::pass("bialgebra-compat");
        let unit_tensor: TensorVec = {
            let mut t = TensorVec::new();
            for (i, a) in self.unit.iter().enumerate() {
                for (j, b) in self.unit.iter().enumerate() {
                    add_term(&mut t, (i, j), a * b);
                }
            }
            t
        };
        if self.coalgebra.comult_vec(&self.unit) != unit_tensor {
            compat = AxiomCheck::fail("bialgebra-compat", "Δ(1) ≠ 1⊗1".to_string());
        }
        if self.coalgebra.counit_of(&self.unit) != qone() {
            compat = AxiomCheck::fail("bialgebra-compat", "ε(1) ≠ 1".to_string());
        }
        if compat.pass {
            'compat: for i in 0..n {
                for j in 0..n {
                    // Δ(e_i e_j)
                    let mut prod = vec![qzero(); n];
                    for (k, c) in &self.mult[i][j] {
                        prod[*k] += c;
                    }
                    let left = self.coalgebra.comult_vec(&prod);
                    // Δ(e_i) Δ(e_j) in H ⊗ H
                    let mut right = TensorVec::new();
                    for (a, b, c) in self.coalgebra.comult_terms(i) {
                        for (p, q, w) in self.coalgebra.comult_terms(j) {
                            let m1 = &self.mult[*a][*p];
                            if m1.is_empty() {
                                continue;
                            }
                            let m2 = &self.mult[*b][*q];
                            if m2.is_empty() {
                                continue;
                            }
                            let f = c * w;
                            for (u, cu) in m1 {
                                for (v, cv) in m2 {
                                    add_term(&mut right, (*u, *v), &f * cu * cv);
                                }
                            }
                        }
                    }
                    if left != right {
                        compat = AxiomCheck::fail(
                            "bialgebra-compat",
                            format!("Δ multiplicativity at basis pair ({i},{j})"),
                        );
                        break 'compat;
                    }
                    let eps_prod = self.coalgebra.counit_of(&prod);
                    if eps_prod != &self.coalgebra.counit()[i] * &self.coalgebra.counit()[j] {
                        compat = AxiomCheck::fail(
                            "bialgebra-compat",
                            format!("ε multiplicativity at basis pair ({i},{j})"),
                        );
                        break 'compat;
                    }
                }
            }
        }
        checks.push(compat);

        // antipode axiom
        let mut antipode = AxiomCheck::pass("antipode");
        for i in 0..n {
            let mut left = vec![qzero(); n];
            let mut right = vec![qzero(); n];
            for (j, k, c) in self.coalgebra.comult_terms(i) {
                let sj = self.antipode_vec(&self.basis_vec(*j));
                let sk = self.antipode_vec(&self.basis_vec(*k));
                let l = self.mul_vec(&sj, &self.basis_vec(*k));
                let r = self.mul_vec(&self.basis_vec(*j), &sk);
                for t in 0..n {
                    left[t] += c * &l[t];
                    right[t] += c * &r[t];
                }
            }
            let expected: QVector = self
                .unit
                .iter()
                .map(|u| u * &self.coalgebra.counit()[i])
                .collect();
            if left != expected || right != expected {
                antipode = AxiomCheck::fail("antipode", format!("basis {i}"));
                break;
            }
        }
        checks.push(antipode);

        AxiomReport { checks }
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (i..n).all(|j| self.mult[i][j] == self.mult[j][i]))
    }

    pub fn is_cocommutative(&self) -> bool {
        self.coalgebra.is_cocommutative()
    }

    /// Basis indices `i` with Δe_i = e_i ⊗ e_i and ε(e_i) = 1.
    pub fn grouplike_basis_indices(&self) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| {
                self.coalgebra.counit()[i] == qone() && {
                    let d = self.coalgebra.comult_vec(&self.basis_vec(i));
                    d.len() == 1 && d.get(&(i, i)) == Some(&qone())
                }
            })
            .collect()
    }
}

/// Convenience wrapper matching the operation name used in reports.
pub fn verify_hopf(h: &FinDimHopf) -> AxiomReport {
    h.verify()
}

/// Checks that the linear map given by `map` (source coords -> target
/// coords) is a Hopf algebra morphism. Returns a witness on failure.
pub fn hopf_morphism_witness(
    source: &FinDimHopf,
    target: &FinDimHopf,
    map: &QMatrix,
) -> Option<String> {
    let n = source.dim();
    assert_eq!(map.cols(), n);
    assert_eq!(map.rows(), target.dim());
    if map.mul_vec(source.unit()) != target.unit() {
        return Some("unit not preserved".to_string());
    }
    for i in 0..n {
        let fi = map.mul_vec(&source.basis_vec(i));
        // counit
        if target.coalgebra().counit_of(&fi) != source.counit()[i] {
            return Some(format!("counit differs at basis {i}"));
        }
        // antipode
        if map.mul_vec(&source.antipode_vec(&source.basis_vec(i))) != target.antipode_vec(&fi) {
            return Some(format!("antipode differs at basis {i}"));
        }
        // comultiplication: (f ⊗ f)Δ_src = Δ_tgt ∘ f
        let mut lhs = TensorVec::new();
        for (j, k, c) in source.coalgebra().comult_terms(i) {
            let fj = map.mul_vec(&source.basis_vec(*j));
            let fk = map.mul_vec(&source.basis_vec(*k));
            for (a, x) in fj.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (b, y) in fk.iter().enumerate() {
                    add_term(&mut lhs, (a, b), c * x * y);
                }
            }
        }
        if lhs != target.coalgebra().comult_vec(&fi) {
            return Some(format!("comultiplication differs at basis {i}"));
        }
        // multiplication
        for j in 0..n {
            let mut prod = vec![qzero(); n];
            for (k, c) in source.mult_terms(i, j) {
                prod[*k] += c;
            }
            let fj = map.mul_vec(&source.basis_vec(j));
            if map.mul_vec(&prod) != target.mul_vec(&fi, &fj) {
                return Some(format!("multiplication differs at basis pair ({i},{j})"));
            }
        }
    }
    None
}
