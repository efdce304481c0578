//! Finite groups given by a validated Cayley table.
//!
//! Elements are plain indices `0..order`; index 0 is always the identity.
//! Inverses and element orders are cached at construction, so every
//! downstream consumer (graph builders, profiles) reads them in O(1).

mod families;
mod profile;
mod table_io;

pub use families::{build_family, FamilySpec, DEFAULT_ORDER_CAP, ORDER_CAP_ENV};
pub use profile::{profile, ClassEquation, GroupProfile};
pub use table_io::{parse_cayley_table, read_cayley_table, write_cayley_table};

use std::collections::BTreeSet;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("table is empty")]
    Empty,
    #[error("product {row}*{col} = {value} is outside 0..{order}")]
    NotClosed { row: usize, col: usize, value: usize, order: usize },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {element} has no unique two-sided inverse")]
    NoInverse { element: usize },
    #[error("associativity fails for ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("group order {order} exceeds the configured cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("cayley table parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

/// A finite group stored as its full multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    element_order: Vec<u64>,
    label: String,
}

impl FiniteGroup {
    /// Validates `raw` as a group table and normalizes the identity to index 0.
    ///
    /// Checks run in the order closure, identity, inverses, associativity; the
    /// error reports indices of `raw` as given.
    pub fn from_cayley_table(raw: &[Vec<usize>], label: impl Into<String>) -> Result<Self, GroupError> {
        let n = raw.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        for (row, r) in raw.iter().enumerate() {
            if r.len() != n {
                return Err(GroupError::NotSquare { row, len: r.len(), expected: n });
            }
            if let Some((col, &value)) = r.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(GroupError::NotClosed { row, col, value, order: n });
            }
        }

        let identity = (0..n)
            .find(|&e| (0..n).all(|j| raw[e][j] == j && raw[j][e] == j))
            .ok_or(GroupError::NoIdentity)?;

        let mut inverse_raw = vec![0; n];
        for i in 0..n {
            let mut found = None;
            for j in 0..n {
                if raw[i][j] == identity {
                    if found.is_some() || raw[j][i] != identity {
                        return Err(GroupError::NoInverse { element: i });
                    }
                    found = Some(j);
                }
            }
            inverse_raw[i] = found.ok_or(GroupError::NoInverse { element: i })?;
        }

        for a in 0..n {
            for b in 0..n {
                let ab = raw[a][b];
                for c in 0..n {
                    if raw[ab][c] != raw[a][raw[b][c]] {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }

        // Swap the identity into slot 0; the relabeling is an involution.
        let relabel = |x: usize| {
            if x == identity {
                0
            } else if x == 0 {
                identity
            } else {
                x
            }
        };
        let mut table = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = relabel(raw[relabel(i)][relabel(j)]);
            }
        }
        let inverse = (0..n).map(|i| relabel(inverse_raw[relabel(i)])).collect();
        Ok(Self::from_parts(n, table, inverse, label.into()))
    }

    /// Builds a group from a table already known to satisfy the group axioms
    /// with identity at 0. Used by the family constructors.
    pub(crate) fn from_trusted(order: usize, table: Vec<usize>, label: String) -> Self {
        debug_assert_eq!(table.len(), order * order);
        let mut inverse = vec![0; order];
        for i in 0..order {
            inverse[i] = (0..order)
                .find(|&j| table[i * order + j] == 0)
                .expect("trusted table has inverses");
        }
        let g = Self::from_parts(order, table, inverse, label);
        debug_assert!(g.is_associative());
        g
    }

    fn from_parts(order: usize, table: Vec<usize>, inverse: Vec<usize>, label: String) -> Self {
        let mut element_order = vec![1u64; order];
        for (i, slot) in element_order.iter_mut().enumerate() {
            let mut k = 1;
            let mut power = i;
            while power != 0 {
                power = table[power * order + i];
                k += 1;
            }
            *slot = k;
        }
        Self { order, table, inverse, element_order, label }
    }

    fn is_associative(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|c| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))))
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Product `x_a * x_b`. Panics on out-of-range indices.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.table.chunks(self.order)
    }

    fn check(&self, i: usize) -> Result<(), GroupError> {
        if i < self.order {
            Ok(())
        } else {
            Err(GroupError::IndexOutOfRange { index: i, order: self.order })
        }
    }

    pub fn element_order(&self, i: usize) -> Result<u64, GroupError> {
        self.check(i)?;
        Ok(self.element_order[i])
    }

    pub fn element_orders(&self) -> &[u64] {
        &self.element_order
    }

    pub fn inverse(&self, i: usize) -> Result<usize, GroupError> {
        self.check(i)?;
        Ok(self.inverse[i])
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inverse
    }

    #[inline]
    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn center(&self) -> BTreeSet<usize> {
        (0..self.order)
            .filter(|&i| (0..self.order).all(|j| self.commutes(i, j)))
            .collect()
    }

    pub fn centralizer(&self, i: usize) -> Result<BTreeSet<usize>, GroupError> {
        self.check(i)?;
        Ok((0..self.order).filter(|&j| self.commutes(i, j)).collect())
    }

    /// `x_g * x_a * x_g^-1`
    pub fn conjugate(&self, a: usize, g: usize) -> usize {
        self.mul(self.mul(g, a), self.inverse[g])
    }

    /// Conjugacy classes ordered by their smallest element.
    pub fn conjugacy_classes(&self) -> Vec<BTreeSet<usize>> {
        let mut seen = vec![false; self.order];
        let mut classes = Vec::new();
        for a in 0..self.order {
            if seen[a] {
                continue;
            }
            let class: BTreeSet<usize> = (0..self.order).map(|g| self.conjugate(a, g)).collect();
            for &x in &class {
                seen[x] = true;
            }
            classes.push(class);
        }
        classes
    }

    pub fn class_equation(&self) -> ClassEquation {
        profile::class_equation(self)
    }

    /// Cached element orders lcm'd together.
    pub fn exponent(&self) -> u64 {
        self.element_order.iter().fold(1, |acc, &o| lcm(acc, o))
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z_n_table(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
    }

    #[test]
    fn trivial_group() {
        let g = FiniteGroup::from_cayley_table(&[vec![0]], "trivial").unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.element_orders(), &[1]);
        assert_eq!(g.inverse(0).unwrap(), 0);
    }

    #[test]
    fn integers_mod_three() {
        let g = FiniteGroup::from_cayley_table(&z_n_table(3), "z3").unwrap();
        assert_eq!(g.element_orders(), &[1, 3, 3]);
        assert_eq!(g.inverse(1).unwrap(), 2);
    }

    #[test]
    fn rejects_non_associative_table() {
        // identity 0, inverse pair {1, 2}, but (1*1)*2 = 0 while 1*(1*2) = 1
        let raw = vec![vec![0, 1, 2], vec![1, 1, 0], vec![2, 0, 2]];
        let err = FiniteGroup::from_cayley_table(&raw, "bad").unwrap_err();
        assert_eq!(err, GroupError::NotAssociative { a: 1, b: 1, c: 2 });
    }

    #[test]
    fn rejects_non_associative_latin_square() {
        // A loop of order 5 that is not a group; found by triple enumeration.
        let raw = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let brute_force_fails = (0..5).any(|a| {
            (0..5).any(|b| (0..5).any(|c| raw[raw[a][b]][c] != raw[a][raw[b][c]]))
        });
        assert!(brute_force_fails);
        assert!(matches!(
            FiniteGroup::from_cayley_table(&raw, "loop"),
            Err(GroupError::NotAssociative { .. })
        ));
    }

    #[test]
    fn error_paths() {
        assert_eq!(FiniteGroup::from_cayley_table(&[], "e").unwrap_err(), GroupError::Empty);
        assert!(matches!(
            FiniteGroup::from_cayley_table(&[vec![0, 1], vec![1]], "r"),
            Err(GroupError::NotSquare { row: 1, .. })
        ));
        assert_eq!(
            FiniteGroup::from_cayley_table(&[vec![0, 1], vec![1, 2]], "c").unwrap_err(),
            GroupError::NotClosed { row: 1, col: 1, value: 2, order: 2 }
        );
        assert_eq!(
            FiniteGroup::from_cayley_table(&[vec![1, 1], vec![1, 1]], "i").unwrap_err(),
            GroupError::NoIdentity
        );
        // identity 0, but 1 and 2 both map 1 to the identity
        let raw = vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 0, 1]];
        assert_eq!(
            FiniteGroup::from_cayley_table(&raw, "inv").unwrap_err(),
            GroupError::NoInverse { element: 1 }
        );
    }

    #[test]
    fn identity_is_relocated_to_zero() {
        // Z3 with the identity stored at index 2: x*y = (x + y + 1) mod 3
        let raw: Vec<Vec<usize>> =
            (0..3).map(|i| (0..3).map(|j| (i + j + 1) % 3).collect()).collect();
        let g = FiniteGroup::from_cayley_table(&raw, "shifted").unwrap();
        assert_eq!(g.identity(), 0);
        for j in 0..3 {
            assert_eq!(g.mul(0, j), j);
            assert_eq!(g.mul(j, 0), j);
        }
        assert_eq!(g.element_orders(), &[1, 3, 3]);
    }

    #[test]
    fn index_out_of_range() {
        let g = FiniteGroup::from_cayley_table(&z_n_table(4), "z4").unwrap();
        assert_eq!(g.element_order(4).unwrap_err(), GroupError::IndexOutOfRange { index: 4, order: 4 });
        assert!(g.inverse(9).is_err());
        assert!(g.centralizer(4).is_err());
    }

    #[test]
    fn cyclic_six_orders() {
        let g = FiniteGroup::from_cayley_table(&z_n_table(6), "z6").unwrap();
        assert_eq!(g.element_order(3).unwrap(), 2);
        assert_eq!(g.element_order(2).unwrap(), 3);
        assert_eq!(g.exponent(), 6);
    }
}
