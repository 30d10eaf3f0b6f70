//! Exact square integer matrices indexed by chain indices.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Row-major square matrix with overflow-checked arithmetic.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntMatrix {
    size: usize,
    entries: Vec<i128>,
}

impl IntMatrix {
    pub fn zeros(size: usize) -> Self {
        IntMatrix {
            size,
            entries: vec![0; size * size],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size);
        for i in 0..size {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i128>]) -> Result<Self> {
        let size = rows.len();
        let mut m = Self::zeros(size);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != size {
                return Err(Error::SizeMismatch {
                    expected: size,
                    got: row.len(),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i128 {
        self.entries[i * self.size + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i128) {
        self.entries[i * self.size + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<i128>> {
        self.entries.chunks(self.size.max(1)).take(self.size).map(<[i128]>::to_vec).collect()
    }

    fn check_size(&self, other: &IntMatrix) -> Result<()> {
        if self.size != other.size {
            return Err(Error::SizeMismatch {
                expected: self.size,
                got: other.size,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &IntMatrix) -> Result<IntMatrix> {
        self.zip(other, i128::checked_add)
    }

    pub fn sub(&self, other: &IntMatrix) -> Result<IntMatrix> {
        self.zip(other, i128::checked_sub)
    }

    fn zip(&self, other: &IntMatrix, op: fn(i128, i128) -> Option<i128>) -> Result<IntMatrix> {
        self.check_size(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| op(a, b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(IntMatrix {
            size: self.size,
            entries,
        })
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        self.check_size(other)?;
        let n = self.size;
        let mut out = IntMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let prod = a.checked_mul(other.get(k, j)).ok_or(Error::Overflow)?;
                    let cur = out.get(i, j).checked_add(prod).ok_or(Error::Overflow)?;
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    /// Largest `|self_ij - other_ij|`.
    pub fn max_abs_diff(&self, other: &IntMatrix) -> Result<u128> {
        self.check_size(other)?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| a.abs_diff(b))
            .max()
            .unwrap_or(0))
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<i128> {
        let n = self.size;
        if n == 0 {
            return Ok(1);
        }
        let mut a = self.rows();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if a[k][k] == 0 {
                match (k + 1..n).find(|&r| a[r][k] != 0) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return Ok(0),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = a[i][j]
                        .checked_mul(a[k][k])
                        .and_then(|x| x.checked_sub(a[i][k].checked_mul(a[k][j])?))
                        .ok_or(Error::Overflow)?;
                    a[i][j] = t / prev;
                }
            }
            prev = a[k][k];
        }
        Ok(sign * a[n - 1][n - 1])
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = IntMatrix::from_rows(&[vec![1, 2], vec![3, 4]]).unwrap();
        let i = IntMatrix::identity(2);
        assert_eq!(a.mul(&i).unwrap(), a);
        assert_eq!(a.mul(&a).unwrap().rows(), vec![vec![7, 10], vec![15, 22]]);
        assert_eq!(a.sub(&a).unwrap(), IntMatrix::zeros(2));
        assert_eq!(a.add(&i).unwrap().get(1, 1), 5);
        assert_eq!(a.max_abs_diff(&i).unwrap(), 3);
        assert!(a.add(&IntMatrix::zeros(3)).is_err());
    }

    #[test]
    fn determinants() {
        assert_eq!(IntMatrix::identity(4).determinant().unwrap(), 1);
        let j = IntMatrix::from_rows(&[vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(j.determinant().unwrap(), 0);
        let path = IntMatrix::from_rows(&[vec![1, 1, 1], vec![1, 1, 0], vec![1, 0, 1]]).unwrap();
        assert_eq!(path.determinant().unwrap(), -1);
        let m = IntMatrix::from_rows(&[vec![0, 2, 1], vec![3, 1, 0], vec![1, 1, 1]]).unwrap();
        assert_eq!(m.determinant().unwrap(), -4);
        assert_eq!(IntMatrix::zeros(0).determinant().unwrap(), 1);
    }

    #[test]
    fn overflow_is_reported() {
        let big = IntMatrix::from_rows(&[vec![i128::MAX]]).unwrap();
        assert_eq!(big.add(&big).unwrap_err(), Error::Overflow);
    }
}
