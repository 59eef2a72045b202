//! Quotients of presented Hopf algebras by scoped relation shapes, and the
//! structural character-group report.

use super::algebra::PresentedCommHopf;
use super::element::Element;
use crate::error::{Error, Result};
use crate::linalg::{fp_abelian_group, FPAbelianGroup, QMatrix, Rational, ZVector};
use num::{BigInt, Integer, Zero};

/// Describes a Hopf algebra k[group_part] ⊗ k[X₁..X_m]/(linear relations).
#[derive(Clone, Debug)]
pub struct HomologyDescriptor {
    pub group_part: FPAbelianGroup,
    pub primitive_count: usize,
    pub primitive_relations: QMatrix,
}

impl HomologyDescriptor {
    pub fn free_primitives(&self) -> usize {
        self.primitive_count - self.primitive_relations.rank()
    }

    pub fn is_trivial(&self) -> bool {
        self.group_part.is_trivial() && self.free_primitives() == 0
    }

    /// Dimension over Q, finite only when there are no free primitives and
    /// the group part is finite.
    pub fn dimension(&self) -> Option<BigInt> {
        if self.free_primitives() > 0 {
            return None;
        }
        self.group_part.order()
    }

    /// Renders like "k", "k[Z/2 ⊕ Z]", or "k[Z/2] ⊗ k[X1]".
    pub fn render(&self) -> String {
        let free = self.free_primitives();
        let group = if self.group_part.is_trivial() {
            None
        } else {
            Some(format!("k[{}]", self.group_part))
        };
        let poly = if free > 0 {
            let vars: Vec<String> = (1..=free).map(|i| format!("X{i}")).collect();
            Some(format!("k[{}]", vars.join(",")))
        } else {
            None
        };
        match (group, poly) {
            (None, None) => "k".to_string(),
            (Some(g), None) => g,
            (None, Some(p)) => p,
            (Some(g), Some(p)) => format!("{g} ⊗ {p}"),
        }
    }
}

/// Quotients `p` by a Hopf ideal generated by scoped relations.
///
/// Each relation must normalize (after substituting Y_h = T^tag X_h and
/// stripping an invertible monomial factor) to either `monomial - 1` in the
/// Laurent part or a Q-linear combination of the primitives X_h. Anything
/// else is reported as an unsupported relation with its monomial support.
pub fn quotient_by_relations(
    p: &PresentedCommHopf,
    relations: &[Element],
) -> Result<HomologyDescriptor> {
    let mut monomial_relations: Vec<ZVector> = Vec::new();
    let mut linear_rows: Vec<Vec<Rational>> = Vec::new();

    for r in relations {
        // substitute Y = T^tag · X so primitives carry no Laurent weight
        let mut terms: Vec<(Vec<i64>, Vec<u32>, Rational)> = Vec::new();
        for (m, c) in &r.terms {
            let mut laurent = m.laurent.clone();
            for (h, &d) in m.poly.iter().enumerate() {
                if d > 0 {
                    for (i, t) in p.poly_tags[h].iter().enumerate() {
                        laurent[i] += t * i64::from(d);
                    }
                }
            }
            terms.push((laurent, m.poly.clone(), c.clone()));
        }
        if terms.is_empty() {
            continue;
        }
        let unsupported = |what: &str| {
            Err(Error::UnsupportedRelation(format!(
                "{what}: {} (monomial support {:?})",
                p.render(r),
                terms
                    .iter()
                    .map(|(l, d, _)| format!("T^{l:?} X^{d:?}"))
                    .collect::<Vec<_>>()
            )))
        };

        let pure_laurent = terms.iter().all(|(_, d, _)| d.iter().all(|&x| x == 0));
        if pure_laurent {
            match terms.as_slice() {
                [(w1, _, c1), (w2, _, c2)] if *c1 == -c2.clone() => {
                    let diff: ZVector = w1
                        .iter()
                        .zip(w2)
                        .map(|(a, b)| BigInt::from(a - b))
                        .collect();
                    monomial_relations.push(diff);
                }
                _ => return unsupported("not of the form monomial - monomial"),
            }
            continue;
        }

        // linear in the primitives: every term degree 1, common Laurent part
        let all_linear = terms
            .iter()
            .all(|(_, d, _)| d.iter().map(|&x| u32::from(x > 0)).sum::<u32>() == 1
                && d.iter().sum::<u32>() == 1);
        if !all_linear {
            return unsupported("mixes Laurent and higher-degree primitive terms");
        }
        let common = &terms[0].0;
        if terms.iter().any(|(l, _, _)| l != common) {
            return unsupported("primitive terms carry different monomial factors");
        }
        let mut row = vec![Rational::zero(); p.n_poly()];
        for (_, degs, c) in &terms {
            let h = degs.iter().position(|&d| d == 1).unwrap();
            row[h] = &row[h] + c;
        }
        linear_rows.push(row);
    }

    let group_part = fp_abelian_group(p.n_laurent(), &monomial_relations);
    let primitive_relations = if linear_rows.is_empty() {
        QMatrix::zero(0, p.n_poly())
    } else {
        QMatrix::from_rows(linear_rows)
    };
    Ok(HomologyDescriptor {
        group_part,
        primitive_count: p.n_poly(),
        primitive_relations,
    })
}

/// Structural description of Alg(k[A] ⊗ k[X..]/rel, Q): torsion characters
/// land in {±1}, the free part in Q^×, and each free primitive contributes
/// one affine parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterReport {
    /// Order of the rational character group of each torsion factor.
    pub torsion_character_orders: Vec<BigInt>,
    /// Rank of the free part, mapping into Q^×.
    pub free_rank: usize,
    /// Affine dimension: number of free primitive generators.
    pub affine_dim: usize,
}

impl CharacterReport {
    pub fn is_trivial(&self) -> bool {
        self.torsion_character_orders.iter().all(|o| o == &BigInt::from(1))
            && self.free_rank == 0
            && self.affine_dim == 0
    }

    pub fn render(&self) -> String {
        if self.is_trivial() {
            return "trivial (only ε)".to_string();
        }
        let mut parts = Vec::new();
        for o in &self.torsion_character_orders {
            if o > &BigInt::from(1) {
                parts.push(format!("Z/{o}"));
            }
        }
        for _ in 0..self.free_rank {
            parts.push("Q^×".to_string());
        }
        let group = if parts.is_empty() {
            "trivial group".to_string()
        } else {
            parts.join(" × ")
        };
        if self.affine_dim > 0 {
            format!("{group} with affine space Q^{}", self.affine_dim)
        } else {
            group
        }
    }
}

/// Character group of a descriptor over Q.
pub fn character_group_descriptor(d: &HomologyDescriptor) -> CharacterReport {
    let torsion_character_orders = d
        .group_part
        .invariant_factors()
        .iter()
        .filter(|f| !f.is_zero())
        .map(|f| f.gcd(&BigInt::from(2)))
        .collect();
    CharacterReport {
        torsion_character_orders,
        free_rank: d.group_part.free_rank(),
        affine_dim: d.free_primitives(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn poly4() -> PresentedCommHopf {
        PresentedCommHopf::new(
            "A",
            vec![],
            (1..=4).map(|i| format!("X{i}")).collect(),
            vec![vec![]; 4],
        )
    }

    #[test]
    fn sweedler_relations_leave_one_primitive() {
        // relations X2-X1, X3+X1, X4+X1 have rank 3: descriptor is k[X]
        let p = poly4();
        let rel = |signs: &[(usize, i64)]| {
            let mut e = Element::zero();
            for &(i, s) in signs {
                e.add_assign(&p.poly_gen(i).scaled(&rat(s)));
            }
            e
        };
        let d = quotient_by_relations(
            &p,
            &[
                rel(&[(1, 1), (0, -1)]),
                rel(&[(2, 1), (0, 1)]),
                rel(&[(3, 1), (0, 1)]),
            ],
        )
        .unwrap();
        assert!(d.group_part.is_trivial());
        assert_eq!(d.primitive_count, 4);
        assert_eq!(d.free_primitives(), 1);
        assert_eq!(d.render(), "k[X1]");
    }

    #[test]
    fn commutator_relation_on_free_rank_two() {
        // a b a⁻¹ b⁻¹ - 1 normalizes to the zero vector: group stays Z²
        let p = PresentedCommHopf::new("L", vec!["a".into(), "b".into()], vec![], vec![]);
        let mut r = p.laurent_monomial(&[0, 0]);
        r.sub_assign(&p.one());
        let d = quotient_by_relations(&p, &[r]).unwrap();
        assert_eq!(d.group_part.invariant_factors_i64(), vec![0, 0]);
    }

    #[test]
    fn torsion_from_square_relation() {
        let p = PresentedCommHopf::new("L", vec!["a".into()], vec![], vec![]);
        let mut r = p.laurent_monomial(&[2]);
        r.sub_assign(&p.one());
        let d = quotient_by_relations(&p, &[r]).unwrap();
        assert_eq!(d.group_part.invariant_factors_i64(), vec![2]);
        assert_eq!(d.free_primitives(), 0);
        assert_eq!(d.render(), "k[Z/2]");
        let chars = character_group_descriptor(&d);
        assert_eq!(chars.torsion_character_orders, vec![BigInt::from(2)]);
        assert!(!chars.is_trivial());
    }

    #[test]
    fn relation_invariance_under_sign_and_monomial_factor() {
        let p = PresentedCommHopf::new(
            "B",
            vec!["T".into()],
            vec!["Y0".into(), "Y1".into()],
            vec![vec![1], vec![1]],
        );
        // r = T⁻¹Y0 - T⁻¹Y1 and variants
        let base = {
            let mut e = p.laurent_gen(0, -1).mul(&p.poly_gen(0));
            e.sub_assign(&p.laurent_gen(0, -1).mul(&p.poly_gen(1)));
            e
        };
        let negated = base.scaled(&rat(-1));
        let shifted = base.mul(&p.laurent_gen(0, 5));
        let d1 = quotient_by_relations(&p, &[base]).unwrap();
        let d2 = quotient_by_relations(&p, &[negated]).unwrap();
        let d3 = quotient_by_relations(&p, &[shifted]).unwrap();
        for d in [&d2, &d3] {
            assert_eq!(
                d.group_part.invariant_factors(),
                d1.group_part.invariant_factors()
            );
            assert_eq!(d.free_primitives(), d1.free_primitives());
        }
    }

    #[test]
    fn unsupported_relation_reported_with_support() {
        let p = PresentedCommHopf::new(
            "B",
            vec!["T".into()],
            vec!["Y".into()],
            vec![vec![1]],
        );
        // T + Y is neither monomial-1 nor linear-with-common-factor
        let mut r = p.laurent_gen(0, 1);
        r.add_assign(&p.poly_gen(0));
        let err = quotient_by_relations(&p, &[r]).unwrap_err();
        match err {
            Error::UnsupportedRelation(msg) => {
                assert!(msg.contains("monomial support"), "{msg}")
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn character_descriptor_shapes() {
        // k[X]: one affine parameter
        let p = PresentedCommHopf::new("A", vec![], vec!["X".into()], vec![vec![]]);
        let d = quotient_by_relations(&p, &[]).unwrap();
        let c = character_group_descriptor(&d);
        assert_eq!(c.affine_dim, 1);
        // trivial algebra k: single character
        let k = PresentedCommHopf::new("k", vec![], vec![], vec![]);
        let d = quotient_by_relations(&k, &[]).unwrap();
        assert!(character_group_descriptor(&d).is_trivial());
    }
}
