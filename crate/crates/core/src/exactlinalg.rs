//! Exact sparse rational matrices.
//!
//! Ranks are computed by fraction-free (Bareiss) elimination over the
//! integers after clearing row denominators. Matrices whose entries are all
//! integers skip the rational step and run in `i128` until an intermediate
//! would overflow, at which point the elimination restarts over `BigInt`.
//! No floating point is used anywhere.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    n_rows: usize,
    n_cols: usize,
    entries: BTreeMap<(usize, usize), BigRational>,
}

/// Formats a rational as `p/q`, or `p` when the denominator is one.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl RationalMatrix {
    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        RationalMatrix {
            n_rows,
            n_cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    /// Builds from dense integer rows; all rows must have `n_cols` entries.
    pub fn from_int_rows(n_cols: usize, rows: &[Vec<i64>]) -> Self {
        let mut m = Self::zeros(rows.len(), n_cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n_cols, "ragged row {i}");
            for (j, &v) in row.iter().enumerate() {
                if v != 0 {
                    m.set(i, j, BigRational::from_integer(v.into()));
                }
            }
        }
        m
    }

    pub fn from_rational_rows(n_cols: usize, rows: &[Vec<BigRational>]) -> Self {
        let mut m = Self::zeros(rows.len(), n_cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n_cols, "ragged row {i}");
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> BigRational {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Stores `v` at `(i, j)`; storing zero removes the entry.
    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        assert!(i < self.n_rows && j < self.n_cols, "index ({i},{j}) out of range");
        if v.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &BigRational)> {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn transpose(&self) -> Self {
        RationalMatrix {
            n_rows: self.n_cols,
            n_cols: self.n_rows,
            entries: self
                .entries
                .iter()
                .map(|(&(i, j), v)| ((j, i), v.clone()))
                .collect(),
        }
    }

    pub fn multiply(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.n_cols != other.n_rows {
            return Err(Error::ShapeMismatch {
                left_rows: self.n_rows,
                left_cols: self.n_cols,
                right_rows: other.n_rows,
                right_cols: other.n_cols,
            });
        }
        let mut by_row: BTreeMap<usize, Vec<(usize, &BigRational)>> = BTreeMap::new();
        for (&(k, j), v) in &other.entries {
            by_row.entry(k).or_default().push((j, v));
        }
        let mut acc: BTreeMap<(usize, usize), BigRational> = BTreeMap::new();
        for (&(i, k), a) in &self.entries {
            if let Some(row) = by_row.get(&k) {
                for &(j, b) in row {
                    *acc.entry((i, j)).or_insert_with(BigRational::zero) += a * b;
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Ok(RationalMatrix {
            n_rows: self.n_rows,
            n_cols: other.n_cols,
            entries: acc,
        })
    }

    /// True when every entry is an integer.
    pub fn is_integral(&self) -> bool {
        self.entries.values().all(|v| v.denom().is_one())
    }

    pub fn rank(&self) -> usize {
        if self.entries.is_empty() {
            return 0;
        }
        if self.is_integral() {
            if let Some(small) = self.to_dense_i128() {
                if let Some(r) = bareiss_rank_i128(small) {
                    return r;
                }
            }
        }
        bareiss_rank_big(self.to_dense_cleared())
    }

    pub fn kernel_dim(&self) -> usize {
        self.n_cols - self.rank()
    }

    /// A basis of `{x : self · x = 0}`, from the reduced row echelon form.
    pub fn kernel_basis(&self) -> Vec<Vec<BigRational>> {
        let (rref, pivots) = self.rref();
        let free: Vec<usize> = (0..self.n_cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![BigRational::zero(); self.n_cols];
                v[f] = BigRational::one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = -rref[r][f].clone();
                }
                v
            })
            .collect()
    }

    /// A basis of the row space (nonzero rows of the reduced echelon form).
    pub fn row_space_basis(&self) -> Vec<Vec<BigRational>> {
        let (rref, pivots) = self.rref();
        rref.into_iter().take(pivots.len()).collect()
    }

    /// Reduced row echelon form (all rows, zero rows last) and the pivot
    /// column of each nonzero row.
    pub fn rref(&self) -> (Vec<Vec<BigRational>>, Vec<usize>) {
        let mut a = vec![vec![BigRational::zero(); self.n_cols]; self.n_rows];
        for (&(i, j), v) in &self.entries {
            a[i][j] = v.clone();
        }
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.n_cols {
            if r == self.n_rows {
                break;
            }
            let Some(p) = (r..self.n_rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            let inv = a[r][c].recip();
            for v in a[r].iter_mut() {
                *v *= &inv;
            }
            let pivot_row = a[r].clone();
            for (i, row) in a.iter_mut().enumerate() {
                if i != r && !row[c].is_zero() {
                    let f = row[c].clone();
                    for (x, y) in row.iter_mut().zip(&pivot_row) {
                        *x -= &f * y;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    fn to_dense_i128(&self) -> Option<Vec<Vec<i128>>> {
        let mut a = vec![vec![0i128; self.n_cols]; self.n_rows];
        for (&(i, j), v) in &self.entries {
            a[i][j] = v.numer().to_i128()?;
        }
        Some(a)
    }

    /// Dense integer copy with each row multiplied by the lcm of its denominators.
    fn to_dense_cleared(&self) -> Vec<Vec<BigInt>> {
        let mut a = vec![vec![BigInt::zero(); self.n_cols]; self.n_rows];
        let mut lcms = vec![BigInt::one(); self.n_rows];
        for (&(i, _), v) in &self.entries {
            lcms[i] = lcms[i].lcm(v.denom());
        }
        for (&(i, j), v) in &self.entries {
            a[i][j] = v.numer() * (&lcms[i] / v.denom());
        }
        a
    }

    /// Matrix Market style coordinate dump with `p/q` values.
    pub fn to_matrix_market(&self) -> String {
        let mut s = format!(
            "%%MatrixMarket matrix coordinate rational general\n{} {} {}\n",
            self.n_rows,
            self.n_cols,
            self.entries.len()
        );
        for (&(i, j), v) in &self.entries {
            s.push_str(&format!("{} {} {}\n", i + 1, j + 1, format_rational(v)));
        }
        s
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.n_rows, self.n_cols)?;
        for i in 0..self.n_rows {
            let row: Vec<String> = (0..self.n_cols).map(|j| format_rational(&self.get(i, j))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Fraction-free elimination in `i128`; `None` on overflow.
fn bareiss_rank_i128(mut a: Vec<Vec<i128>>) -> Option<usize> {
    let n_rows = a.len();
    let n_cols = a.first().map_or(0, Vec::len);
    let mut prev: i128 = 1;
    let mut r = 0;
    for c in 0..n_cols {
        if r == n_rows {
            break;
        }
        let Some(p) = (r..n_rows)
            .filter(|&i| a[i][c] != 0)
            .min_by_key(|&i| a[i][c].unsigned_abs())
        else {
            continue;
        };
        a.swap(r, p);
        let pivot = a[r][c];
        for i in r + 1..n_rows {
            let lead = a[i][c];
            for j in c + 1..n_cols {
                let x = pivot.checked_mul(a[i][j])?;
                let y = lead.checked_mul(a[r][j])?;
                a[i][j] = x.checked_sub(y)? / prev;
            }
            a[i][c] = 0;
        }
        prev = pivot;
        r += 1;
    }
    Some(r)
}

fn bareiss_rank_big(mut a: Vec<Vec<BigInt>>) -> usize {
    let n_rows = a.len();
    let n_cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..n_cols {
        if r == n_rows {
            break;
        }
        let Some(p) = (r..n_rows)
            .filter(|&i| !a[i][c].is_zero())
            .min_by(|&x, &y| a[x][c].abs().cmp(&a[y][c].abs()))
        else {
            continue;
        };
        a.swap(r, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = pivot_row[c].clone();
        for row in rest.iter_mut() {
            if row[c].is_zero() {
                // The update degenerates to a scaling by pivot / prev.
                for j in c + 1..n_cols {
                    if !row[j].is_zero() {
                        row[j] = &pivot * &row[j] / &prev;
                    }
                }
                continue;
            }
            let lead = row[c].clone();
            for j in c + 1..n_cols {
                row[j] = (&pivot * &row[j] - &lead * &pivot_row[j]) / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = pivot;
        r += 1;
    }
    r
}
