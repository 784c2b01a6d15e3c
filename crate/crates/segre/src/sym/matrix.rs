//! Dense matrices over the rational-function field: multiplication,
//! Kronecker products, exact Gaussian elimination for inverse/rank/det.

use std::fmt;
use std::ops::Mul;
use std::sync::Arc;

use super::frac::{RationalFunction, SymError};
use super::vars::{same_table, VariableTable};

#[derive(Clone, Debug)]
pub struct SymbolicMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<RationalFunction>,
}

impl SymbolicMatrix {
    pub fn from_fn(
        table: &Arc<VariableTable>,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> RationalFunction,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let e = f(r, c);
                assert!(same_table(e.table(), table), "entry table mismatch");
                entries.push(e);
            }
        }
        SymbolicMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn zero(table: &Arc<VariableTable>, rows: usize, cols: usize) -> Self {
        Self::from_fn(table, rows, cols, |_, _| RationalFunction::zero(table))
    }

    pub fn identity(table: &Arc<VariableTable>, n: usize) -> Self {
        Self::from_fn(table, n, n, |r, c| {
            if r == c {
                RationalFunction::one(table)
            } else {
                RationalFunction::zero(table)
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        self.entries[0].table()
    }

    pub fn get(&self, r: usize, c: usize) -> &RationalFunction {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: RationalFunction) {
        self.entries[r * self.cols + c] = v;
    }

    /// Kronecker product with the first factor on the outer index:
    /// `(A (x) B)[(a,b),(c,d)] = A[a,c] * B[b,d]`.
    pub fn kronecker(&self, other: &SymbolicMatrix) -> SymbolicMatrix {
        let table = self.table().clone();
        SymbolicMatrix::from_fn(
            &table,
            self.rows * other.rows,
            self.cols * other.cols,
            |r, c| {
                let (a, b) = (r / other.rows, r % other.rows);
                let (x, y) = (c / other.cols, c % other.cols);
                self.get(a, x) * other.get(b, y)
            },
        )
    }

    pub fn eq_sym(&self, other: &SymbolicMatrix) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(a, b)| a.eq_sym(b))
    }

    /// First entry where two matrices differ, for failure reports.
    pub fn first_difference(&self, other: &SymbolicMatrix) -> Option<(usize, usize)> {
        if self.rows != other.rows || self.cols != other.cols {
            return Some((0, 0));
        }
        for r in 0..self.rows {
            for c in 0..self.cols {
                if !self.get(r, c).eq_sym(other.get(r, c)) {
                    return Some((r, c));
                }
            }
        }
        None
    }

    /// Reduce a copy by Gaussian elimination; returns (echelon matrix, rank,
    /// det-so-far over the pivoted square part, pivot permutation sign).
    fn eliminate(&self) -> (SymbolicMatrix, usize, RationalFunction) {
        let table = self.table().clone();
        let mut m = self.clone();
        let mut det = RationalFunction::one(&table);
        let mut rank = 0;
        for col in 0..m.cols {
            if rank == m.rows {
                break;
            }
            // Pivot: the nonzero entry with the fewest numerator terms.
            let pivot = (rank..m.rows)
                .filter(|&r| !m.get(r, col).is_zero())
                .min_by_key(|&r| m.get(r, col).numerator().num_terms());
            let Some(p) = pivot else {
                continue;
            };
            if p != rank {
                for c in 0..m.cols {
                    m.entries.swap(rank * m.cols + c, p * m.cols + c);
                }
                det = -&det;
            }
            let inv = m.get(rank, col).inverse().expect("nonzero pivot");
            det = &det * m.get(rank, col);
            for r in rank + 1..m.rows {
                if m.get(r, col).is_zero() {
                    continue;
                }
                let factor = &(m.get(r, col) * &inv);
                for c in col..m.cols {
                    let v = m.get(r, c) - &(factor * m.get(rank, c));
                    m.set(r, c, v);
                }
            }
            rank += 1;
        }
        (m, rank, det)
    }

    pub fn rank(&self) -> usize {
        self.eliminate().1
    }

    pub fn determinant(&self) -> RationalFunction {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let (_, rank, det) = self.eliminate();
        if rank < self.rows {
            RationalFunction::zero(self.table())
        } else {
            det
        }
    }

    pub fn inverse(&self) -> Result<SymbolicMatrix, SymError> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let table = self.table().clone();
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = SymbolicMatrix::identity(&table, n);
        for col in 0..n {
            let pivot = (col..n)
                .filter(|&r| !m.get(r, col).is_zero())
                .min_by_key(|&r| m.get(r, col).numerator().num_terms())
                .ok_or(SymError::SingularMatrix)?;
            if pivot != col {
                for c in 0..n {
                    m.entries.swap(col * n + c, pivot * n + c);
                    inv.entries.swap(col * n + c, pivot * n + c);
                }
            }
            let piv_inv = m.get(col, col).inverse()?;
            for c in 0..n {
                let v = m.get(col, c) * &piv_inv;
                m.set(col, c, v);
                let v = inv.get(col, c) * &piv_inv;
                inv.set(col, c, v);
            }
            for r in 0..n {
                if r == col || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in 0..n {
                    let v = m.get(r, c) - &(&factor * m.get(col, c));
                    m.set(r, c, v);
                    let v = inv.get(r, c) - &(&factor * inv.get(col, c));
                    inv.set(r, c, v);
                }
            }
        }
        Ok(inv)
    }

    /// Apply a scalar function entrywise.
    pub fn map(
        &self,
        mut f: impl FnMut(&RationalFunction) -> RationalFunction,
    ) -> SymbolicMatrix {
        SymbolicMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| f(e)).collect(),
        }
    }
}

impl Mul for &SymbolicMatrix {
    type Output = SymbolicMatrix;
    fn mul(self, rhs: &SymbolicMatrix) -> SymbolicMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in matrix product");
        let table = self.table().clone();
        SymbolicMatrix::from_fn(&table, self.rows, rhs.cols, |r, c| {
            let mut acc = RationalFunction::zero(&table);
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                let b = rhs.get(k, c);
                if b.is_zero() {
                    continue;
                }
                acc = &acc + &(a * b);
            }
            acc
        })
    }
}

impl fmt::Display for SymbolicMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|c| self.get(r, c).to_string())
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sym::poly::Polynomial;

    fn table() -> Arc<VariableTable> {
        VariableTable::new(&[("b", true), ("q", true), ("z1", true), ("z2", true)])
    }

    #[test]
    fn identity_inverse() {
        let t = table();
        let id = SymbolicMatrix::identity(&t, 9);
        let inv = id.inverse().unwrap();
        assert!(inv.eq_sym(&id));
    }

    #[test]
    fn symbolic_two_by_two_inverse() {
        let t = table();
        let z = RationalFunction::symbol(&t, "z1");
        let one = RationalFunction::one(&t);
        let m = SymbolicMatrix::from_fn(&t, 2, 2, |r, c| match (r, c) {
            (0, 0) => one.clone(),
            (0, 1) => z.clone(),
            (1, 1) => &one + &z,
            _ => RationalFunction::zero(&t),
        });
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).eq_sym(&SymbolicMatrix::identity(&t, 2)));
        assert!((&inv * &m).eq_sym(&SymbolicMatrix::identity(&t, 2)));
    }

    #[test]
    fn rank_of_rank_one_matrix() {
        let t = table();
        let z = RationalFunction::symbol(&t, "z1");
        let m = SymbolicMatrix::from_fn(&t, 3, 3, |r, c| {
            let p = Polynomial::monomial(&t, &[0, 0, (r + 1) as i32, 0], 1);
            let _ = c;
            let row = RationalFunction::from_poly(p);
            &row * &z.pow(c as i32).unwrap()
        });
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kronecker_shape_and_values() {
        let t = table();
        let a = SymbolicMatrix::identity(&t, 2);
        let z = RationalFunction::symbol(&t, "z1");
        let b = SymbolicMatrix::from_fn(&t, 2, 2, |r, c| {
            if r == c {
                z.clone()
            } else {
                RationalFunction::zero(&t)
            }
        });
        let k = a.kronecker(&b);
        assert_eq!(k.rows(), 4);
        assert!(k.get(0, 0).eq_sym(&z));
        assert!(k.get(3, 3).eq_sym(&z));
        assert!(k.get(0, 3).is_zero());
    }

    #[test]
    fn determinant_of_diagonal() {
        let t = table();
        let z = RationalFunction::symbol(&t, "z1");
        let m = SymbolicMatrix::from_fn(&t, 2, 2, |r, c| {
            if r == c {
                z.clone()
            } else {
                RationalFunction::zero(&t)
            }
        });
        assert!(m.determinant().eq_sym(&(&z * &z)));
    }
}
