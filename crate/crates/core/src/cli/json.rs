//! Wire formats: Hopf algebras and fusion rings as JSON with exact
//! rational-string entries.

use crate::error::{Error, Result};
use crate::hopf::{FinDimCoalgebra, FinDimHopf};
use crate::linalg::{parse_rational, rational_string, QMatrix, Rational};
use crate::oracles::FusionRing;
use num::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Hopf algebra as structure-constant tensors. All scalars are strings
/// "p" or "p/q"; `mult[i][j][k]` is the coefficient of e_k in e_i e_j,
/// `comult[i][j][k]` the coefficient of e_j ⊗ e_k in Δ e_i, and
/// `antipode[i][j]` the coefficient of e_i in S(e_j).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HopfJson {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Vec<String>,
    pub counit: Vec<String>,
    pub mult: Vec<Vec<Vec<String>>>,
    pub comult: Vec<Vec<Vec<String>>>,
    pub antipode: Vec<Vec<String>>,
}

impl HopfJson {
    pub fn to_hopf(&self) -> Result<FinDimHopf> {
        let n = self.dim;
        let check = |len: usize, what: &'static str| -> Result<()> {
            if len != n {
                return Err(Error::DimensionMismatch {
                    context: what,
                    expected: n,
                    got: len,
                });
            }
            Ok(())
        };
        check(self.basis.len(), "basis labels")?;
        check(self.unit.len(), "unit vector")?;
        check(self.counit.len(), "counit vector")?;
        check(self.mult.len(), "mult tensor")?;
        check(self.comult.len(), "comult tensor")?;
        check(self.antipode.len(), "antipode matrix")?;

        let parse_vec = |v: &[String]| -> Result<Vec<Rational>> {
            v.iter().map(|s| parse_rational(s)).collect()
        };
        let unit = parse_vec(&self.unit)?;
        let counit = parse_vec(&self.counit)?;

        let mut comult = Vec::with_capacity(n);
        for row in &self.comult {
            check(row.len(), "comult tensor row")?;
            let mut terms = Vec::new();
            for (j, inner) in row.iter().enumerate() {
                check(inner.len(), "comult tensor entry")?;
                for (k, s) in inner.iter().enumerate() {
                    let c = parse_rational(s)?;
                    if !c.is_zero() {
                        terms.push((j, k, c));
                    }
                }
            }
            comult.push(terms);
        }
        let coalg = FinDimCoalgebra::new(self.basis.clone(), comult, counit)?;

        let mut mult = Vec::with_capacity(n);
        for row in &self.mult {
            check(row.len(), "mult tensor row")?;
            let mut out_row = Vec::with_capacity(n);
            for inner in row {
                check(inner.len(), "mult tensor entry")?;
                let mut terms = Vec::new();
                for (k, s) in inner.iter().enumerate() {
                    let c = parse_rational(s)?;
                    if !c.is_zero() {
                        terms.push((k, c));
                    }
                }
                out_row.push(terms);
            }
            mult.push(out_row);
        }

        let mut antipode = QMatrix::zero(n, n);
        for (i, row) in self.antipode.iter().enumerate() {
            check(row.len(), "antipode row")?;
            for (j, s) in row.iter().enumerate() {
                antipode[(i, j)] = parse_rational(s)?;
            }
        }
        FinDimHopf::from_parts(&self.name, coalg, mult, unit, antipode)
    }

    pub fn from_hopf(h: &FinDimHopf) -> HopfJson {
        let n = h.dim();
        let rs = rational_string;
        let mut mult = vec![vec![vec!["0".to_string(); n]; n]; n];
        for i in 0..n {
            for j in 0..n {
                for (k, c) in h.mult_terms(i, j) {
                    mult[i][j][*k] = rs(c);
                }
            }
        }
        let mut comult = vec![vec![vec!["0".to_string(); n]; n]; n];
        for i in 0..n {
            for (j, k, c) in h.coalgebra().comult_terms(i) {
                comult[i][*j][*k] = rs(c);
            }
        }
        let antipode = (0..n)
            .map(|i| (0..n).map(|j| rs(&h.antipode()[(i, j)])).collect())
            .collect();
        HopfJson {
            name: h.name().to_string(),
            dim: n,
            basis: h.labels().to_vec(),
            unit: h.unit().iter().map(rs).collect(),
            counit: h.counit().iter().map(rs).collect(),
            mult,
            comult,
            antipode,
        }
    }
}

/// Fusion ring: sparse multiplicity list [λ, μ, ν, m].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FusionJson {
    pub labels: Vec<String>,
    pub unit: String,
    pub mult: Vec<(String, String, String, u64)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dims: Option<Vec<u64>>,
}

impl FusionJson {
    pub fn to_fusion(&self) -> Result<FusionRing> {
        let index = |l: &str| -> Result<usize> {
            self.labels
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| Error::Precondition(format!("unknown fusion label '{l}'")))
        };
        let mut mult = BTreeMap::new();
        for (a, b, c, m) in &self.mult {
            mult.insert((index(a)?, index(b)?, index(c)?), *m);
        }
        FusionRing::new(self.labels.clone(), &self.unit, mult, self.dims.clone())
    }
}
