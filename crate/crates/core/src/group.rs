//! Finite groups from Cayley tables: validation, subgroups, double cosets.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupError {
    NotAGroup {
        axiom: &'static str,
        witness: String,
    },
    NotASubgroup {
        reason: String,
    },
    UnknownElement {
        label: String,
    },
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::NotAGroup { axiom, witness } => {
                write!(f, "not a group: {axiom} fails ({witness})")
            }
            GroupError::NotASubgroup { reason } => write!(f, "not a subgroup: {reason}"),
            GroupError::UnknownElement { label } => write!(f, "unknown group element {label:?}"),
        }
    }
}

/// A finite group given by element labels and a Cayley table;
/// `table[i][j]` is the index of (element i)·(element j).
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FiniteGroup(order {}, labels {:?})",
            self.order(),
            self.labels
        )
    }
}

impl FiniteGroup {
    /// Validates closure, associativity, identity and inverses.
    pub fn from_table(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let n = labels.len();
        if n == 0 {
            return Err(GroupError::NotAGroup {
                axiom: "nonempty",
                witness: String::from("no elements"),
            });
        }
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(GroupError::NotAGroup {
                axiom: "closure",
                witness: format!("table is not {n}x{n}"),
            });
        }
        for (i, row) in table.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(GroupError::NotAGroup {
                        axiom: "closure",
                        witness: format!("table[{i}][{j}] = {v} out of range"),
                    });
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if table[table[i][j]][k] != table[i][table[j][k]] {
                        return Err(GroupError::NotAGroup {
                            axiom: "associativity",
                            witness: format!(
                                "({}·{})·{} ≠ {}·({}·{})",
                                labels[i], labels[j], labels[k], labels[i], labels[j], labels[k]
                            ),
                        });
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|i| table[e][i] == i && table[i][e] == i))
            .ok_or(GroupError::NotAGroup {
                axiom: "identity",
                witness: String::from("no two-sided identity"),
            })?;
        let mut inverse = vec![0usize; n];
        for i in 0..n {
            inverse[i] = (0..n)
                .find(|&j| table[i][j] == identity && table[j][i] == identity)
                .ok_or_else(|| GroupError::NotAGroup {
                    axiom: "inverses",
                    witness: format!("{} has no inverse", labels[i]),
                })?;
        }
        Ok(FiniteGroup {
            labels,
            table,
            identity,
            inverse,
        })
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inverse[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Checks that `subset` (indices) is closed under products and inverses
    /// and contains the identity.
    pub fn subgroup_check(&self, subset: &[usize]) -> Result<(), GroupError> {
        if subset.is_empty() {
            return Err(GroupError::NotASubgroup {
                reason: String::from("empty subset"),
            });
        }
        if subset.iter().any(|&i| i >= self.order()) {
            return Err(GroupError::NotASubgroup {
                reason: String::from("index out of range"),
            });
        }
        let member = |x: usize| subset.contains(&x);
        if !member(self.identity) {
            return Err(GroupError::NotASubgroup {
                reason: String::from("identity missing"),
            });
        }
        for &a in subset {
            if !member(self.inv(a)) {
                return Err(GroupError::NotASubgroup {
                    reason: format!("inverse of {} missing", self.labels[a]),
                });
            }
            for &b in subset {
                if !member(self.mul(a, b)) {
                    return Err(GroupError::NotASubgroup {
                        reason: format!(
                            "not closed: {}·{} outside",
                            self.labels[a], self.labels[b]
                        ),
                    });
                }
            }
        }
        Ok(())
    }

    /// Normality by conjugation: `g h g⁻¹ ∈ H` for all `g`, `h`.
    pub fn is_normal(&self, subgroup: &[usize]) -> bool {
        subgroup.iter().all(|&h| {
            (0..self.order()).all(|g| {
                let c = self.mul(self.mul(g, h), self.inv(g));
                subgroup.contains(&c)
            })
        })
    }

    /// Partition of the group into double cosets `HgH`, each sorted, in
    /// order of their least element.
    pub fn double_cosets(&self, subgroup: &[usize]) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut cosets = Vec::new();
        for g in 0..n {
            if seen[g] {
                continue;
            }
            let mut coset: Vec<usize> = Vec::new();
            for &h in subgroup {
                for &k in subgroup {
                    let x = self.mul(self.mul(h, g), k);
                    if !coset.contains(&x) {
                        coset.push(x);
                    }
                }
            }
            coset.sort_unstable();
            for &x in &coset {
                seen[x] = true;
            }
            cosets.push(coset);
        }
        cosets
    }

    /// Resolves subgroup members given as labels or numeric indices.
    pub fn resolve_members(&self, members: &[String]) -> Result<Vec<usize>, GroupError> {
        let mut out = Vec::with_capacity(members.len());
        for m in members {
            let idx = self
                .index_of(m)
                .or_else(|| m.parse::<usize>().ok().filter(|&i| i < self.order()))
                .ok_or_else(|| GroupError::UnknownElement { label: m.clone() })?;
            if !out.contains(&idx) {
                out.push(idx);
            }
        }
        Ok(out)
    }
}

/// The cyclic group of order `n` with labels `g0..g{n-1}`.
pub fn cyclic_group(n: usize) -> FiniteGroup {
    let labels = (0..n).map(|i| format!("g{i}")).collect();
    let table = (0..n)
        .map(|i| (0..n).map(|j| (i + j) % n).collect())
        .collect();
    FiniteGroup::from_table(labels, table).expect("cyclic table is a group")
}
