//! Exact subspaces of a coordinate space, kept in reduced row-echelon form.
//!
//! Columns are ordered ascending and each row's pivot is its smallest
//! column. Rows are fully reduced: a pivot column is zero in every other
//! row, so reducing a vector needs one subtraction per pivot it touches.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::multivector::Rational;

pub type SparseVec = BTreeMap<u64, Rational>;

type Row = Vec<(u64, Rational)>;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Subspace {
    rows: BTreeMap<u64, Row>,
}

fn axpy(v: &mut SparseVec, c: &Rational, row: &Row) {
    use std::collections::btree_map::Entry;
    for (col, x) in row {
        let delta = c * x;
        match v.entry(*col) {
            Entry::Vacant(e) => {
                e.insert(-delta);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() -= delta;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
}

impl Subspace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn pivots(&self) -> impl Iterator<Item = u64> + '_ {
        self.rows.keys().copied()
    }

    /// Rows in ascending pivot order.
    pub fn rows(&self) -> impl Iterator<Item = &[(u64, Rational)]> + '_ {
        self.rows.values().map(|r| r.as_slice())
    }

    /// Subtracts the projection onto this subspace along the pivot columns;
    /// the remainder is zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &mut SparseVec) {
        if self.rows.is_empty() {
            return;
        }
        let hits: Vec<(u64, Rational)> = v
            .iter()
            .filter(|(col, _)| self.rows.contains_key(col))
            .map(|(col, c)| (*col, c.clone()))
            .collect();
        for (col, c) in hits {
            axpy(v, &c, &self.rows[&col]);
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        let mut v = v.clone();
        self.reduce(&mut v);
        v.is_empty()
    }

    /// Adds `v` to the spanning set; returns whether the dimension grew.
    pub fn insert(&mut self, mut v: SparseVec) -> bool {
        self.reduce(&mut v);
        let Some((&pivot, lead)) = v.iter().next() else {
            return false;
        };
        let inv = Rational::one() / lead;
        let row: Row = v.into_iter().map(|(col, c)| (col, c * &inv)).collect();
        for other in self.rows.values_mut() {
            if let Ok(pos) = other.binary_search_by_key(&pivot, |(col, _)| *col) {
                let c = other[pos].1.clone();
                let mut merged: SparseVec = std::mem::take(other).into_iter().collect();
                axpy(&mut merged, &c, &row);
                *other = merged.into_iter().collect();
            }
        }
        self.rows.insert(pivot, row);
        true
    }

    pub fn span<I: IntoIterator<Item = SparseVec>>(vectors: I) -> Self {
        let mut s = Self::new();
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.dim() <= other.dim()
            && self
                .rows
                .values()
                .all(|r| other.contains(&r.iter().cloned().collect()))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for r in other.rows.values() {
            s.insert(r.iter().cloned().collect());
        }
        s
    }

    /// Intersection by the Zassenhaus double-echelon method over columns
    /// shifted by `offset`, which must exceed every column in use.
    pub fn intersect(&self, other: &Subspace, offset: u64) -> Subspace {
        let mut stacked = Subspace::new();
        for r in self.rows.values() {
            let mut v: SparseVec = r.iter().cloned().collect();
            v.extend(r.iter().map(|(col, c)| (col + offset, c.clone())));
            stacked.insert(v);
        }
        for r in other.rows.values() {
            stacked.insert(r.iter().cloned().collect());
        }
        Subspace::span(stacked.rows.range(offset..).map(|(_, row)| {
            row.iter()
                .map(|(col, c)| (col - offset, c.clone()))
                .collect::<SparseVec>()
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multivector::{integer, rational};

    fn v(entries: &[(u64, i64)]) -> SparseVec {
        entries.iter().map(|(c, x)| (*c, integer(*x))).collect()
    }

    #[test]
    fn reduced_echelon_form() {
        let s = Subspace::span([v(&[(1, 2), (2, 4)]), v(&[(0, 1), (1, 1)])]);
        assert_eq!(s.dim(), 2);
        let rows: Vec<_> = s.rows().map(|r| r.to_vec()).collect();
        assert_eq!(rows[0], vec![(0, integer(1)), (2, integer(-2))]);
        assert_eq!(rows[1], vec![(1, integer(1)), (2, integer(2))]);
        assert!(s.contains(&v(&[(0, 3), (1, 1), (2, -4)])));
        assert!(!s.contains(&v(&[(2, 1)])));
    }

    #[test]
    fn dependent_insert_is_rejected() {
        let mut s = Subspace::span([v(&[(0, 1), (3, 1)])]);
        assert!(!s.insert(v(&[(0, 2), (3, 2)])));
        assert!(s.insert(v(&[(3, 1)])));
        assert_eq!(s.dim(), 2);
    }

    #[test]
    fn intersection() {
        // span{x0, x1} ∩ span{x1 + x2, x0 + x1} = span{x0 + x1}
        let a = Subspace::span([v(&[(0, 1)]), v(&[(1, 1)])]);
        let b = Subspace::span([v(&[(1, 1), (2, 1)]), v(&[(0, 1), (1, 1)])]);
        let i = a.intersect(&b, 8);
        assert_eq!(i, Subspace::span([v(&[(0, 1), (1, 1)])]));
        assert_eq!(a.intersect(&a, 8), a);
        assert!(a.intersect(&Subspace::new(), 8).is_zero());
    }

    #[test]
    fn rational_pivot_normalisation() {
        let s = Subspace::span([[(0, rational(2, 3)), (5, rational(1, 3))]
            .into_iter()
            .collect()]);
        let row = s.rows().next().unwrap().to_vec();
        assert_eq!(row, vec![(0, integer(1)), (5, rational(1, 2))]);
    }
}
