//! Standard Hopf algebra constructions: group algebras, function algebras,
//! the Sweedler algebra, duals, and tensor squares.

use super::{FinDimCoalgebra, FinDimHopf};
use crate::groups::FiniteGroup;
use crate::linalg::{qone, qzero, QMatrix};
use crate::linalg::rat;

/// Group algebra k[G]: basis G, Δg = g⊗g, ε(g) = 1, S(g) = g⁻¹.
pub fn group_algebra(g: &FiniteGroup) -> FinDimHopf {
    let n = g.order();
    let labels = g.labels().to_vec();
    let comult = (0..n).map(|i| vec![(i, i, qone())]).collect();
    let counit = vec![qone(); n];
    let coalg = FinDimCoalgebra::new(labels, comult, counit).expect("group coalgebra");
    let mult = (0..n)
        .map(|i| (0..n).map(|j| vec![(g.mul(i, j), qone())]).collect())
        .collect();
    let mut unit = vec![qzero(); n];
    unit[0] = qone();
    let mut antipode = QMatrix::zero(n, n);
    for j in 0..n {
        antipode[(g.inv(j), j)] = qone();
    }
    FinDimHopf::from_parts(&format!("k[{}]", g.name()), coalg, mult, unit, antipode)
        .expect("group algebra structure")
}

/// Function algebra k^G: basis e_g, e_g e_h = δ e_g, Δe_g = Σ_{ab=g} e_a⊗e_b.
pub fn function_algebra(g: &FiniteGroup) -> FinDimHopf {
    let n = g.order();
    let labels = g.labels().iter().map(|l| format!("e_{l}")).collect();
    let comult = (0..n)
        .map(|i| {
            let mut terms = Vec::new();
            for a in 0..n {
                for b in 0..n {
                    if g.mul(a, b) == i {
                        terms.push((a, b, qone()));
                    }
                }
            }
            terms
        })
        .collect();
    let counit = (0..n)
        .map(|i| if i == 0 { qone() } else { qzero() })
        .collect();
    let coalg = FinDimCoalgebra::new(labels, comult, counit).expect("function coalgebra");
    let mult = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { vec![(i, qone())] } else { vec![] })
                .collect()
        })
        .collect();
    let unit = vec![qone(); n];
    let mut antipode = QMatrix::zero(n, n);
    for j in 0..n {
        antipode[(g.inv(j), j)] = qone();
    }
    FinDimHopf::from_parts(&format!("k^{}", g.name()), coalg, mult, unit, antipode)
        .expect("function algebra structure")
}

/// The four-dimensional Sweedler algebra on the basis {1, g, x, y = xg}:
/// g² = 1, x² = 0, xg = -gx, Δg = g⊗g, Δx = 1⊗x + x⊗g, S(x) = -y.
pub fn sweedler_h4() -> FinDimHopf {
    let labels = vec!["1", "g", "x", "y"].into_iter().map(String::from).collect();
    let comult = vec![
        vec![(0, 0, qone())],
        vec![(1, 1, qone())],
        vec![(0, 2, qone()), (2, 1, qone())],
        vec![(1, 3, qone()), (3, 0, qone())],
    ];
    let counit = vec![qone(), qone(), qzero(), qzero()];
    let coalg = FinDimCoalgebra::new(labels, comult, counit).expect("sweedler coalgebra");
    // rows: left factor 1, g, x, y
    let one = |k: usize| vec![(k, qone())];
    let neg = |k: usize| vec![(k, rat(-1))];
    let zero = Vec::new;
    let mult = vec![
        vec![one(0), one(1), one(2), one(3)],
        vec![one(1), one(0), neg(3), neg(2)],
        vec![one(2), one(3), zero(), zero()],
        vec![one(3), one(2), zero(), zero()],
    ];
    let unit = vec![qone(), qzero(), qzero(), qzero()];
    let mut antipode = QMatrix::zero(4, 4);
    antipode[(0, 0)] = qone(); // S(1) = 1
    antipode[(1, 1)] = qone(); // S(g) = g
    antipode[(3, 2)] = rat(-1); // S(x) = -y
    antipode[(2, 3)] = qone(); // S(y) = x
    FinDimHopf::from_parts("H4", coalg, mult, unit, antipode).expect("sweedler structure")
}

/// Dual Hopf algebra on the dual basis: multiplication is the transposed
/// coproduct and vice versa.
pub fn dual(h: &FinDimHopf) -> FinDimHopf {
    let n = h.dim();
    let labels = h.labels().iter().map(|l| format!("{l}*")).collect();
    // Δ'(φ_k) = Σ_{i,j} m_{ij}^k φ_i ⊗ φ_j
    let mut comult = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            for (k, c) in h.mult_terms(i, j) {
                comult[*k].push((i, j, c.clone()));
            }
        }
    }
    // ε'(φ_k) = φ_k(1)
    let counit = h.unit().to_vec();
    let coalg = FinDimCoalgebra::new(labels, comult, counit).expect("dual coalgebra");
    // φ_i · φ_j = Σ_k Δ_k^{ij} φ_k
    let mult = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut terms = Vec::new();
                    for k in 0..n {
                        for (a, b, c) in h.coalgebra().comult_terms(k) {
                            if *a == i && *b == j {
                                terms.push((k, c.clone()));
                            }
                        }
                    }
                    terms
                })
                .collect()
        })
        .collect();
    let unit = h.counit().to_vec();
    let antipode = h.antipode().transpose();
    FinDimHopf::from_parts(&format!("({})*", h.name()), coalg, mult, unit, antipode)
        .expect("dual structure")
}

/// Tensor square H ⊗ H with componentwise product and the middle-flip
/// coproduct; basis pair (i, j) sits at index i*dim + j.
pub fn tensor_square(h: &FinDimHopf) -> FinDimHopf {
    let n = h.dim();
    let idx = |i: usize, j: usize| i * n + j;
    let labels = (0..n * n)
        .map(|k| format!("{}⊗{}", h.labels()[k / n], h.labels()[k % n]))
        .collect();
    let mut comult = vec![Vec::new(); n * n];
    for i in 0..n {
        for j in 0..n {
            let terms = &mut comult[idx(i, j)];
            for (a, b, c) in h.coalgebra().comult_terms(i) {
                for (p, q, w) in h.coalgebra().comult_terms(j) {
                    terms.push((idx(*a, *p), idx(*b, *q), c * w));
                }
            }
        }
    }
    let counit = (0..n * n)
        .map(|k| &h.counit()[k / n] * &h.counit()[k % n])
        .collect();
    let coalg = FinDimCoalgebra::new(labels, comult, counit).expect("tensor coalgebra");
    let mult = (0..n * n)
        .map(|k| {
            let (i, j) = (k / n, k % n);
            (0..n * n)
                .map(|l| {
                    let (p, q) = (l / n, l % n);
                    let mut terms = Vec::new();
                    for (u, cu) in h.mult_terms(i, p) {
                        for (v, cv) in h.mult_terms(j, q) {
                            terms.push((idx(*u, *v), cu * cv));
                        }
                    }
                    terms
                })
                .collect()
        })
        .collect();
    let mut unit = vec![qzero(); n * n];
    for (i, a) in h.unit().iter().enumerate() {
        for (j, b) in h.unit().iter().enumerate() {
            unit[idx(i, j)] = a * b;
        }
    }
    let antipode = QMatrix::from_fn(n * n, n * n, |r, c| {
        let (i, j) = (r / n, r % n);
        let (p, q) = (c / n, c % n);
        &h.antipode()[(i, p)] * &h.antipode()[(j, q)]
    });
    FinDimHopf::from_parts(&format!("{}⊗{}", h.name(), h.name()), coalg, mult, unit, antipode)
        .expect("tensor square structure")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups;
    use crate::linalg::{is_zero_vec, rat, Rational};

    #[test]
    fn sweedler_presentation() {
        let h = sweedler_h4();
        assert_eq!(h.dim(), 4);
        // S(x) = -y
        let sx = h.antipode_vec(&h.basis_vec(2));
        assert_eq!(sx, vec![rat(0), rat(0), rat(0), rat(-1)]);
        // x·x = 0, g·g = 1
        assert!(is_zero_vec(&h.mul_vec(&h.basis_vec(2), &h.basis_vec(2))));
        assert_eq!(h.mul_vec(&h.basis_vec(1), &h.basis_vec(1)), h.basis_vec(0));
        // xg = -gx
        let xg = h.mul_vec(&h.basis_vec(2), &h.basis_vec(1));
        let gx = h.mul_vec(&h.basis_vec(1), &h.basis_vec(2));
        assert_eq!(xg, gx.iter().map(|c| -c).collect::<Vec<_>>());
        assert!(h.verify().all_pass());
    }

    #[test]
    fn group_algebras_verify() {
        for g in [groups::cyclic(2), groups::s3(), groups::cyclic(2).direct_product(&groups::cyclic(2))] {
            let h = group_algebra(&g);
            assert!(h.verify().all_pass(), "k[{}] fails", g.name());
            assert!(h.is_cocommutative());
        }
    }

    #[test]
    fn function_algebra_s3_not_cocommutative() {
        let h = function_algebra(&groups::s3());
        assert!(h.verify().all_pass());
        assert!(h.is_commutative());
        assert!(!h.is_cocommutative());
    }

    #[test]
    fn dual_of_function_algebra_is_group_algebra_data() {
        let g = groups::s3();
        let d = dual(&function_algebra(&g));
        let k = group_algebra(&g);
        assert_eq!(d.dim(), k.dim());
        for i in 0..d.dim() {
            for j in 0..d.dim() {
                assert_eq!(d.mult_terms(i, j), k.mult_terms(i, j));
            }
            assert_eq!(
                d.coalgebra().comult_terms(i),
                k.coalgebra().comult_terms(i)
            );
        }
        assert_eq!(d.unit(), k.unit());
        assert_eq!(d.counit(), k.counit());
        assert_eq!(d.antipode(), k.antipode());
    }

    #[test]
    fn dual_is_involutive_on_sweedler() {
        let h = sweedler_h4();
        let dd = dual(&dual(&h));
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(dd.mult_terms(i, j), h.mult_terms(i, j));
            }
        }
        assert_eq!(dd.antipode(), h.antipode());
        assert!(dual(&h).verify().all_pass());
    }

    #[test]
    fn tensor_square_sweedler() {
        let t = tensor_square(&sweedler_h4());
        assert_eq!(t.dim(), 16);
        assert!(t.verify().all_pass());
    }

    #[test]
    fn corrupted_comult_fails() {
        // replace Δ(x) by 1 ⊗ x: coassociativity or compatibility must break
        let h = sweedler_h4();
        let mut comult: Vec<Vec<(usize, usize, Rational)>> = (0..4)
            .map(|i| h.coalgebra().comult_terms(i).to_vec())
            .collect();
        comult[2] = vec![(0, 2, qone())];
        let coalg =
            FinDimCoalgebra::new(h.labels().to_vec(), comult, h.counit().to_vec()).unwrap();
        let mult = (0..4)
            .map(|i| (0..4).map(|j| h.mult_terms(i, j).to_vec()).collect())
            .collect();
        let bad = FinDimHopf::from_parts(
            "H4-corrupt",
            coalg,
            mult,
            h.unit().to_vec(),
            h.antipode().clone(),
        )
        .unwrap();
        let report = bad.verify();
        assert!(!report.all_pass());
        assert!(report
            .failures()
            .iter()
            .all(|c| c.witness.is_some()));
    }
}
