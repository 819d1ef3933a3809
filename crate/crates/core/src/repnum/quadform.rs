use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

/// An even, symmetric, positive-definite integer quadratic form
/// `Q(x) = sum_{p,q} a_pq x_p x_q`.
///
/// Because the diagonal is even, `Q(x)` is always even and the form represents
/// `N` when `Q(x) = 2N`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadForm {
    n: usize,
    entries: Vec<i64>,
}

impl QuadForm {
    /// Validates symmetry, even diagonal and positive definiteness (all leading
    /// principal minors strictly positive, computed exactly).
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyForm);
        }
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::NotSquare { row, len: r.len(), n });
            }
        }
        for p in 0..n {
            for q in p + 1..n {
                if rows[p][q] != rows[q][p] {
                    return Err(Error::NotSymmetric(p, q));
                }
            }
        }
        for (p, r) in rows.iter().enumerate() {
            if r[p] % 2 != 0 {
                return Err(Error::OddDiagonal { index: p, value: r[p] });
            }
        }
        let form = QuadForm {
            n,
            entries: rows.into_iter().flatten().collect(),
        };
        let minors = bareiss_leading_minors(&form.rows_big());
        if let Some((order, minor)) = minors
            .iter()
            .enumerate()
            .find(|(_, m)| !m.is_positive())
        {
            return Err(Error::NotPositiveDefinite {
                order: order + 1,
                minor: minor.to_string(),
            });
        }
        Ok(form)
    }

    /// The `n x n` form with 2 on the diagonal and 1 elsewhere; determinant `n + 1`.
    pub fn an(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyForm);
        }
        let rows = (0..n)
            .map(|p| (0..n).map(|q| if p == q { 2 } else { 1 }).collect())
            .collect();
        Self::new(rows)
    }

    /// `2 * Id(k)`, whose representation numbers are the sums-of-squares counts.
    pub fn twice_identity(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::EmptyForm);
        }
        let rows = (0..k)
            .map(|p| (0..k).map(|q| if p == q { 2 } else { 0 }).collect())
            .collect();
        Self::new(rows)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entry(&self, p: usize, q: usize) -> i64 {
        self.entries[p * self.n + q]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    fn rows_big(&self) -> Vec<Vec<BigInt>> {
        self.entries
            .chunks(self.n)
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    /// `x^T A x`, exactly.
    pub fn value(&self, x: &[i64]) -> i128 {
        debug_assert_eq!(x.len(), self.n);
        let mut total = 0i128;
        for p in 0..self.n {
            if x[p] == 0 {
                continue;
            }
            let mut row = 0i128;
            for q in 0..self.n {
                row += self.entry(p, q) as i128 * x[q] as i128;
            }
            total += x[p] as i128 * row;
        }
        total
    }

    pub fn leading_minors(&self) -> Vec<BigInt> {
        bareiss_leading_minors(&self.rows_big())
    }

    pub fn determinant(&self) -> BigInt {
        // positive definite, so Bareiss never meets a zero pivot
        self.leading_minors().pop().unwrap_or_else(BigInt::one)
    }

    /// Principal submatrix on the kept indices (in increasing order).
    ///
    /// Principal submatrices of an even positive-definite form are again even
    /// and positive definite, so no revalidation is needed.
    pub fn principal(&self, keep: &[usize]) -> QuadForm {
        let mut entries = Vec::with_capacity(keep.len() * keep.len());
        for &p in keep {
            for &q in keep {
                entries.push(self.entry(p, q));
            }
        }
        QuadForm {
            n: keep.len(),
            entries,
        }
    }

    /// Exact inverse matrix by Gauss-Jordan elimination over the rationals.
    pub fn inverse(&self) -> Vec<Vec<BigRational>> {
        let n = self.n;
        let mut m: Vec<Vec<BigRational>> = (0..n)
            .map(|p| {
                let mut row: Vec<BigRational> = (0..n)
                    .map(|q| BigRational::from_integer(self.entry(p, q).into()))
                    .collect();
                row.extend((0..n).map(|q| {
                    if p == q {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                }));
                row
            })
            .collect();
        for col in 0..n {
            // positive definite: the diagonal pivot is never zero
            let pivot = m[col][col].clone();
            for v in m[col].iter_mut() {
                *v = &*v / &pivot;
            }
            for r in 0..n {
                if r == col || m[r][col].is_zero() {
                    continue;
                }
                let factor = m[r][col].clone();
                for c in 0..2 * n {
                    let delta = &factor * &m[col][c];
                    m[r][c] -= delta;
                }
            }
        }
        m.into_iter().map(|row| row[n..].to_vec()).collect()
    }

    /// Parses the text format: a first line with `n`, then `n` lines of `n`
    /// whitespace-separated integers.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::Parse("empty form file".into()))?
            .parse()
            .map_err(|e| Error::Parse(format!("dimension: {e}")))?;
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("missing row {}", i + 1)))?;
            let row = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<i64>()
                        .map_err(|e| Error::Parse(format!("row {}: {tok:?}: {e}", i + 1)))
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        if lines.next().is_some() {
            return Err(Error::Parse("trailing data after last row".into()));
        }
        Self::new(rows)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for row in self.entries.chunks(self.n) {
            let cells: Vec<String> = row.iter().map(i64::to_string).collect();
            s.push_str(&cells.join(" "));
            s.push('\n');
        }
        s
    }

    /// Hex SHA-256 of the canonical text form; used as a cache key.
    pub fn fingerprint(&self) -> String {
        hex::encode(Sha256::digest(self.to_text().as_bytes()))
    }
}

impl fmt::Debug for QuadForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.entries.chunks(self.n)).finish()
    }
}

/// Fraction-free elimination without pivoting. The k-th pivot is the k-th
/// leading principal minor; stops early at the first nonpositive pivot.
fn bareiss_leading_minors(a: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = a.len();
    let mut m = a.to_vec();
    let mut prev = BigInt::one();
    let mut minors = Vec::with_capacity(n);
    for k in 0..n {
        let pivot = m[k][k].clone();
        minors.push(pivot.clone());
        if !pivot.is_positive() {
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &pivot - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = pivot;
    }
    minors
}
