//! Finite groups given by Cayley tables.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::oracle::SimpleGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("invalid group order {order} (need at least {min})")]
    InvalidOrder { order: usize, min: usize },
    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("closure violated: table[{a}][{b}] = {value} is out of range")]
    Closure { a: usize, b: usize, value: usize },
    #[error("no two-sided identity element")]
    Identity,
    #[error("associativity violated for ({a}, {b}, {c})")]
    Associativity { a: usize, b: usize, c: usize },
    #[error("element {a} has no inverse")]
    Inverse { a: usize },
    #[error("group is abelian, its commuting graph has no vertices")]
    Abelian,
    #[error("label list has {got} entries for a group of order {order}")]
    Labels { got: usize, order: usize },
}

/// Order and abelian flag: everything the invariant formulas look at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupProfile {
    pub order: usize,
    pub abelian: bool,
}

impl GroupProfile {
    pub fn new(order: usize, abelian: bool) -> Result<Self, GroupError> {
        if order == 0 {
            return Err(GroupError::InvalidOrder { order, min: 1 });
        }
        if order == 1 && !abelian {
            // the trivial group is abelian; smallest non-abelian group has order 6
            return Err(GroupError::InvalidOrder { order, min: 6 });
        }
        Ok(GroupProfile { order, abelian })
    }

    pub fn trivial() -> Self {
        GroupProfile { order: 1, abelian: true }
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }
}

/// A validated finite group. Elements are `0..order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl FiniteGroup {
    /// Validates all four group axioms and reports the first violation found.
    pub fn from_table(rows: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::InvalidOrder { order: 0, min: 1 });
        }
        let mut table = Vec::with_capacity(n * n);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::NotSquare { row: r, len: row.len(), expected: n });
            }
            for (c, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(GroupError::Closure { a: r, b: c, value: v });
                }
                table.push(v);
            }
        }
        let at = |a: usize, b: usize| table[a * n + b];

        let identity = (0..n).find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x)).ok_or(GroupError::Identity)?;

        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(GroupError::Associativity { a, b, c });
                    }
                }
            }
        }

        let mut inverses = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n).find(|&b| at(a, b) == identity).ok_or(GroupError::Inverse { a })?;
            inverses.push(inv);
        }

        Ok(FiniteGroup { order: n, table, identity, inverses, labels: None })
    }

    pub fn cyclic(n: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::InvalidOrder { order: 0, min: 1 });
        }
        let rows = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::from_table(rows)
    }

    /// Dihedral group of order 2n. Element `f*n + k` is s^f r^k.
    pub fn dihedral(n: usize) -> Result<Self, GroupError> {
        if n < 3 {
            return Err(GroupError::InvalidOrder { order: n, min: 3 });
        }
        let m = 2 * n;
        let rows = (0..m)
            .map(|a| {
                let (f1, k1) = (a / n, a % n);
                (0..m)
                    .map(|b| {
                        let (f2, k2) = (b / n, b % n);
                        // r^k s = s r^-k
                        let k1 = if f2 == 1 { (n - k1) % n } else { k1 };
                        ((f1 + f2) % 2) * n + (k1 + k2) % n
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(rows)
    }

    /// Klein four-group as Z2 x Z2 with bitwise xor.
    pub fn klein_four() -> Self {
        let rows = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
        FiniteGroup::from_table(rows).expect("xor table is a group")
    }

    /// Quaternion group. Elements are ±1, ±i, ±j, ±k encoded as `2*u + s`
    /// with u in {1,i,j,k} and s the sign bit.
    pub fn quaternion() -> Self {
        // unit products: (sign, unit) for u*v, units ordered 1, i, j, k
        const UNIT: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        let rows = (0..8)
            .map(|a| {
                (0..8)
                    .map(|b| {
                        let (s, u) = UNIT[a / 2][b / 2];
                        2 * u + ((a % 2) ^ (b % 2) ^ s)
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(rows).expect("quaternion table is a group")
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GroupError> {
        if labels.len() != self.order {
            return Err(GroupError::Labels { got: labels.len(), order: self.order });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.commutes(a, b)))
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order).filter(|&x| (0..self.order).all(|y| self.commutes(x, y))).collect()
    }

    pub fn profile(&self) -> GroupProfile {
        GroupProfile { order: self.order, abelian: self.is_abelian() }
    }

    /// Graph on G \ Z(G) with edges between distinct commuting elements.
    pub fn commuting_graph(&self) -> Result<SimpleGraph<usize>, GroupError> {
        let center = self.center();
        if center.len() == self.order {
            return Err(GroupError::Abelian);
        }
        let verts: Vec<usize> = (0..self.order).filter(|x| !center.contains(x)).collect();
        Ok(SimpleGraph::from_relation(verts, |&a, &b| self.commutes(a, b)))
    }

    /// Graph on all of G with edges between distinct commuting elements.
    pub fn extended_commuting_graph(&self) -> SimpleGraph<usize> {
        SimpleGraph::from_relation((0..self.order).collect(), |&a, &b| self.commutes(a, b))
    }
}

pub fn make_cyclic(n: usize) -> Result<FiniteGroup, GroupError> {
    FiniteGroup::cyclic(n)
}

pub fn make_dihedral(n: usize) -> Result<FiniteGroup, GroupError> {
    FiniteGroup::dihedral(n)
}

pub fn make_from_table(rows: Vec<Vec<usize>>) -> Result<FiniteGroup, GroupError> {
    FiniteGroup::from_table(rows)
}

pub fn center(g: &FiniteGroup) -> Vec<usize> {
    g.center()
}

pub fn is_abelian(g: &FiniteGroup) -> bool {
    g.is_abelian()
}

pub fn commuting_graph_of_group(g: &FiniteGroup) -> Result<SimpleGraph<usize>, GroupError> {
    g.commuting_graph()
}
