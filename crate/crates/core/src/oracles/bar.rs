//! Group homology from the unnormalized bar complex, plus centers and
//! abelianizations straight from the Cayley table.

use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::linalg::{
    fp_abelian_group, fp_abelian_group_labeled, smith_normal_form, FPAbelianGroup, ZMatrix,
};
use num::{BigInt, One, Zero};

pub const DEFAULT_GROUP_ORDER_BOUND: usize = 8;

/// ∂₂ : Z[G²] → Z[G], (x,y) ↦ y - xy + x.
fn boundary_2(g: &FiniteGroup) -> ZMatrix {
    let n = g.order();
    let mut m = ZMatrix::zero(n, n * n);
    for x in 0..n {
        for y in 0..n {
            let col = x * n + y;
            m[(y, col)] += BigInt::one();
            m[(g.mul(x, y), col)] -= BigInt::one();
            m[(x, col)] += BigInt::one();
        }
    }
    m
}

/// ∂₃ : Z[G³] → Z[G²], (x,y,z) ↦ (y,z) - (xy,z) + (x,yz) - (x,y).
fn boundary_3(g: &FiniteGroup) -> ZMatrix {
    let n = g.order();
    let mut m = ZMatrix::zero(n * n, n * n * n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let col = (x * n + y) * n + z;
                m[(y * n + z, col)] += BigInt::one();
                m[(g.mul(x, y) * n + z, col)] -= BigInt::one();
                m[(x * n + g.mul(y, z), col)] += BigInt::one();
                m[(x * n + y, col)] -= BigInt::one();
            }
        }
    }
    m
}

/// H_n(G, Z) for n = 1, 2 via Smith normal form of the bar differentials.
///
/// For a complex of free abelian groups the torsion of ker ∂_n / im ∂_{n+1}
/// is read off the Smith form of ∂_{n+1}, and the free rank is
/// rank(ker ∂_n) - rank(∂_{n+1}).
pub fn bar_homology(g: &FiniteGroup, degree: usize, max_order: usize) -> Result<FPAbelianGroup> {
    if g.order() > max_order {
        return Err(Error::SizeBound {
            order: g.order(),
            bound: max_order,
        });
    }
    let n = g.order();
    match degree {
        1 => {
            // ∂₁ = 0, so H₁ = Z[G] / im ∂₂
            let d2 = boundary_2(g);
            let cols: Vec<Vec<BigInt>> = (0..d2.cols()).map(|j| d2.col(j)).collect();
            Ok(fp_abelian_group(n, &cols))
        }
        2 => {
            let d2 = boundary_2(g);
            let d3 = boundary_3(g);
            let snf2 = smith_normal_form(&d2);
            let snf3 = smith_normal_form(&d3);
            let rank2 = snf2.rank();
            let rank3 = snf3.rank();
            let free_rank = n * n - rank2 - rank3;
            let mut factors: Vec<BigInt> = snf3
                .diagonal()
                .into_iter()
                .filter(|d| !d.is_zero() && !d.is_one())
                .collect();
            factors.extend(std::iter::repeat_n(BigInt::zero(), free_rank));
            // re-present as an fp group so the caller gets a uniform type
            let k = factors.len();
            let relations: Vec<Vec<BigInt>> = factors
                .iter()
                .enumerate()
                .filter(|(_, d)| !d.is_zero())
                .map(|(i, d)| {
                    let mut v = vec![BigInt::zero(); k];
                    v[i] = d.clone();
                    v
                })
                .collect();
            Ok(fp_abelian_group(k, &relations))
        }
        other => Err(Error::Precondition(format!(
            "bar homology implemented for degrees 1 and 2, got {other}"
        ))),
    }
}

pub fn group_center(g: &FiniteGroup) -> FiniteGroup {
    g.center()
}

/// G_ab as an fp abelian group on the element labels, with relations
/// a + b - ab from the whole multiplication table.
pub fn group_abelianization(g: &FiniteGroup) -> FPAbelianGroup {
    let n = g.order();
    let mut relations = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let mut v = vec![BigInt::zero(); n];
            v[a] += BigInt::one();
            v[b] += BigInt::one();
            v[g.mul(a, b)] -= BigInt::one();
            relations.push(v);
        }
    }
    fp_abelian_group_labeled(g.labels().to_vec(), &relations)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups;

    fn h(g: &FiniteGroup, degree: usize) -> Vec<i64> {
        bar_homology(g, degree, DEFAULT_GROUP_ORDER_BOUND)
            .unwrap()
            .invariant_factors_i64()
    }

    #[test]
    fn cyclic_groups() {
        // H₁(Z/n) = Z/n, H₂(Z/n) = 0: the classical closed form
        for n in [2, 3, 4, 6] {
            let g = groups::cyclic(n);
            assert_eq!(h(&g, 1), vec![n as i64]);
            assert_eq!(h(&g, 2), Vec::<i64>::new());
        }
    }

    #[test]
    fn klein_four_schur_multiplier() {
        let g = groups::cyclic(2).direct_product(&groups::cyclic(2));
        assert_eq!(h(&g, 1), vec![2, 2]);
        assert_eq!(h(&g, 2), vec![2]);
    }

    #[test]
    fn s3_homology() {
        let g = groups::s3();
        assert_eq!(h(&g, 1), vec![2]);
        assert_eq!(h(&g, 2), Vec::<i64>::new());
    }

    #[test]
    fn degree_one_matches_abelianization() {
        for g in [
            groups::cyclic(6),
            groups::s3(),
            groups::d4(),
            groups::q8(),
            groups::cyclic(2).direct_product(&groups::cyclic(2)),
        ] {
            assert_eq!(
                h(&g, 1),
                group_abelianization(&g).invariant_factors_i64(),
                "H1 != G_ab for {}",
                g.name()
            );
        }
    }

    #[test]
    fn centers_and_abelianizations() {
        assert_eq!(group_center(&groups::s3()).order(), 1);
        assert_eq!(group_center(&groups::q8()).order(), 2);
        assert_eq!(group_center(&groups::d4()).order(), 2);
        assert_eq!(
            group_abelianization(&groups::q8()).invariant_factors_i64(),
            vec![2, 2]
        );
        assert_eq!(
            group_abelianization(&groups::s3()).invariant_factors_i64(),
            vec![2]
        );
    }

    #[test]
    fn size_bound_enforced() {
        let g = groups::q8();
        assert!(matches!(
            bar_homology(&g, 2, 4),
            Err(Error::SizeBound { order: 8, bound: 4 })
        ));
    }
}
