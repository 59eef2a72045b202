//! Finite groups as validated Cayley tables, with the small builtin families
//! used throughout the crate.

use crate::error::{Error, Result};

/// A finite group given by its multiplication table.
///
/// `table[i][j]` is the index of the product `g_i * g_j`; index 0 is the
/// identity. Construction checks the group axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    pub fn new(name: &str, labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidGroup {
                reason: "table shape does not match label count",
                witness: vec![table.len(), n],
            });
        }
        for (i, row) in table.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::InvalidGroup {
                        reason: "entry out of range",
                        witness: vec![i, j, v],
                    });
                }
            }
        }
        for i in 0..n {
            if table[0][i] != i || table[i][0] != i {
                return Err(Error::InvalidGroup {
                    reason: "index 0 is not an identity",
                    witness: vec![i],
                });
            }
        }
        let mut inverse = vec![usize::MAX; n];
        for i in 0..n {
            match (0..n).find(|&j| table[i][j] == 0 && table[j][i] == 0) {
                Some(j) => inverse[i] = j,
                None => {
                    return Err(Error::InvalidGroup {
                        reason: "element has no two-sided inverse",
                        witness: vec![i],
                    })
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidGroup {
                            reason: "associativity fails",
                            witness: vec![a, b, c],
                        });
                    }
                }
            }
        }
        Ok(FiniteGroup {
            name: name.to_string(),
            labels,
            table,
            inverse,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Elements commuting with everything, as a subgroup.
    pub fn center(&self) -> FiniteGroup {
        let n = self.order();
        let members: Vec<usize> = (0..n)
            .filter(|&z| (0..n).all(|g| self.mul(z, g) == self.mul(g, z)))
            .collect();
        self.subgroup(&members, &format!("Z({})", self.name))
    }

    /// Subgroup on the given member indices (must be closed; identity first).
    fn subgroup(&self, members: &[usize], name: &str) -> FiniteGroup {
        let pos = |g: usize| -> usize {
            members
                .iter()
                .position(|&m| m == g)
                .expect("subset not closed under multiplication")
        };
        let labels = members.iter().map(|&m| self.labels[m].clone()).collect();
        let table = members
            .iter()
            .map(|&a| members.iter().map(|&b| pos(self.mul(a, b))).collect())
            .collect();
        FiniteGroup::new(name, labels, table).expect("subgroup table is a group")
    }

    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let (n, m) = (self.order(), other.order());
        let labels = (0..n * m)
            .map(|k| {
                let (a, b) = (k / m, k % m);
                format!("({},{})", self.labels[a], other.labels[b])
            })
            .collect();
        let table = (0..n * m)
            .map(|k| {
                let (a, b) = (k / m, k % m);
                (0..n * m)
                    .map(|l| {
                        let (c, d) = (l / m, l % m);
                        self.mul(a, c) * m + other.mul(b, d)
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::new(
            &format!("{}x{}", self.name, other.name),
            labels,
            table,
        )
        .expect("product of groups is a group")
    }
}

pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    let labels = (0..n).map(|i| format!("r{i}")).collect();
    let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    FiniteGroup::new(&format!("C{n}"), labels, table).expect("cyclic table is a group")
}

/// Symmetric group on three letters, elements as permutations of {0,1,2}.
pub fn s3() -> FiniteGroup {
    let perms: Vec<[usize; 3]> = vec![
        [0, 1, 2],
        [1, 2, 0],
        [2, 0, 1],
        [1, 0, 2],
        [0, 2, 1],
        [2, 1, 0],
    ];
    let labels = vec!["e", "r", "r2", "s", "sr", "sr2"]
        .into_iter()
        .map(str::to_string)
        .collect();
    let compose = |p: &[usize; 3], q: &[usize; 3]| [p[q[0]], p[q[1]], p[q[2]]];
    let table = perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| {
                    let pq = compose(p, q);
                    perms.iter().position(|r| *r == pq).unwrap()
                })
                .collect()
        })
        .collect();
    FiniteGroup::new("S3", labels, table).expect("S3 table is a group")
}

/// Dihedral group of order 8: r^4 = s^2 = 1, s r s = r^-1.
pub fn d4() -> FiniteGroup {
    // elements s^a r^b with a in {0,1}, b in {0..3}; index = 4a + b
    let labels = (0..8)
        .map(|k| {
            let (a, b) = (k / 4, k % 4);
            match (a, b) {
                (0, 0) => "e".to_string(),
                (0, b) => format!("r{b}"),
                (1, 0) => "s".to_string(),
                (1, b) => format!("sr{b}"),
                _ => unreachable!(),
            }
        })
        .collect();
    let mul = |k: usize, l: usize| -> usize {
        let (a1, b1) = (k / 4, k % 4);
        let (a2, b2) = (l / 4, l % 4);
        // (s^a1 r^b1)(s^a2 r^b2) = s^(a1+a2) r^(b2 + b1 * (-1)^a2)
        let a = (a1 + a2) % 2;
        let signed_b1 = if a2 == 1 { (4 - b1) % 4 } else { b1 };
        let b = (b2 + signed_b1) % 4;
        4 * a + b
    };
    let table = (0..8).map(|k| (0..8).map(|l| mul(k, l)).collect()).collect();
    FiniteGroup::new("D4", labels, table).expect("D4 table is a group")
}

/// Quaternion group {1, -1, i, -i, j, -j, k, -k}.
pub fn q8() -> FiniteGroup {
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    // encode q = sign * unit with units 1,i,j,k at indices 0..3; index = 2*unit + (sign<0)
    let unit_mul = |a: usize, b: usize| -> (usize, bool) {
        // returns (unit, negative)
        match (a, b) {
            (0, u) => (u, false),
            (u, 0) => (u, false),
            (1, 1) => (0, true),
            (2, 2) => (0, true),
            (3, 3) => (0, true),
            (1, 2) => (3, false),
            (2, 1) => (3, true),
            (2, 3) => (1, false),
            (3, 2) => (1, true),
            (3, 1) => (2, false),
            (1, 3) => (2, true),
            _ => unreachable!(),
        }
    };
    let mul = |k: usize, l: usize| -> usize {
        let (u1, s1) = (k / 2, k % 2 == 1);
        let (u2, s2) = (l / 2, l % 2 == 1);
        let (u, neg) = unit_mul(u1, u2);
        let s = (s1 ^ s2) ^ neg;
        2 * u + usize::from(s)
    };
    let table = (0..8).map(|k| (0..8).map(|l| mul(k, l)).collect()).collect();
    FiniteGroup::new("Q8", labels, table).expect("Q8 table is a group")
}

/// Resolves the builtin group names used by the command-line interface.
pub fn by_name(name: &str) -> Result<FiniteGroup> {
    match name {
        "C2" => Ok(cyclic(2)),
        "C3" => Ok(cyclic(3)),
        "C4" => Ok(cyclic(4)),
        "C6" => Ok(cyclic(6)),
        "C2xC2" => Ok(cyclic(2).direct_product(&cyclic(2))),
        "S3" => Ok(s3()),
        "D4" => Ok(d4()),
        "Q8" => Ok(q8()),
        other => Err(Error::UnknownBuiltin(format!("group:{other}"))),
    }
}

pub const BUILTIN_GROUP_NAMES: [&str; 8] = ["C2", "C3", "C4", "C6", "C2xC2", "S3", "D4", "Q8"];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builders_are_groups_of_expected_order() {
        for (g, n, abelian) in [
            (cyclic(2), 2, true),
            (cyclic(6), 6, true),
            (cyclic(2).direct_product(&cyclic(2)), 4, true),
            (s3(), 6, false),
            (d4(), 8, false),
            (q8(), 8, false),
        ] {
            assert_eq!(g.order(), n);
            assert_eq!(g.is_abelian(), abelian);
        }
    }

    #[test]
    fn centers() {
        assert_eq!(s3().center().order(), 1);
        assert_eq!(d4().center().order(), 2);
        assert_eq!(q8().center().order(), 2);
        assert_eq!(cyclic(6).center().order(), 6);
    }

    #[test]
    fn bad_tables_rejected() {
        // constant table: no inverses
        let t = vec![vec![0, 1], vec![1, 1]];
        assert!(FiniteGroup::new("bad", vec!["e".into(), "a".into()], t).is_err());
    }

    #[test]
    fn q8_relations() {
        let g = q8();
        let (i, j, k) = (2, 4, 6);
        assert_eq!(g.mul(i, i), 1); // i^2 = -1
        assert_eq!(g.mul(i, j), k); // ij = k
        assert_eq!(g.mul(j, i), 7); // ji = -k
    }
}
