//! Dense complex matrices, index partitions and partial deleted row/column sums.
//!
//! Library APIs take 0-based indices. Files, CLI flags, reports and
//! `Display` output use 1-based indices; the conversions live at those
//! boundaries (see [`IndexPartition::from_one_based`]).

use std::fmt;
use std::ops::Index;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Dense square complex matrix, row-major, `n >= 2`, all entries finite.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix {
    n: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Builds a matrix from a row-major buffer of `n * n` entries.
    pub fn from_row_major(n: usize, entries: Vec<Complex64>) -> Result<Self> {
        if n < 2 {
            return Err(Error::DimensionTooSmall(n));
        }
        if entries.len() != n * n {
            return Err(Error::NotSquare {
                rows: entries.len() / n,
                cols: n,
            });
        }
        if let Some(k) = entries.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite {
                row: k / n + 1,
                col: k % n + 1,
            });
        }
        Ok(Self { n, entries })
    }

    pub fn from_rows<R: AsRef<[Complex64]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::NotSquare {
                    rows: n,
                    cols: row.len(),
                });
            }
            entries.extend_from_slice(row);
        }
        Self::from_row_major(n, entries)
    }

    /// Real matrix given as rows of `f64`.
    pub fn from_real_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let rows: Vec<Vec<Complex64>> = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| Complex64::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::from_diagonal(&vec![Complex64::new(1.0, 0.0); n])
    }

    pub fn from_diagonal(diag: &[Complex64]) -> Result<Self> {
        let n = diag.len();
        let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
        for (k, d) in diag.iter().enumerate() {
            entries[k * n + k] = *d;
        }
        Self::from_row_major(n, entries)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.n + col]
    }

    pub fn row(&self, row: usize) -> &[Complex64] {
        &self.entries[row * self.n..(row + 1) * self.n]
    }

    pub fn as_row_major(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn diagonal(&self) -> Vec<Complex64> {
        (0..self.n).map(|k| self.get(k, k)).collect()
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.n).map(|k| self.get(k, k)).sum()
    }

    /// Plain transpose (no conjugation).
    pub fn transpose(&self) -> Self {
        let n = self.n;
        let entries = (0..n * n).map(|k| self.get(k % n, k / n)).collect();
        Self { n, entries }
    }

    /// `c * A`. Fails if the product overflows.
    pub fn scaled(&self, c: Complex64) -> Result<Self> {
        Self::from_row_major(self.n, self.entries.iter().map(|z| z * c).collect())
    }

    /// `A + t I`.
    pub fn shifted(&self, t: Complex64) -> Result<Self> {
        let mut entries = self.entries.clone();
        for k in 0..self.n {
            entries[k * self.n + k] += t;
        }
        Self::from_row_major(self.n, entries)
    }

    /// `P A P^T` where row `k` of the result is row `perm[k]` of `A`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let n = self.n;
        if perm.len() != n {
            return Err(Error::InvalidArgument(format!(
                "permutation has length {}, expected {n}",
                perm.len()
            )));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n {
                return Err(Error::IndexOutOfRange { index: p + 1, n });
            }
            if std::mem::replace(&mut seen[p], true) {
                return Err(Error::RepeatedIndex(p + 1));
            }
        }
        let entries = (0..n * n).map(|k| self.get(perm[k / n], perm[k % n])).collect();
        Ok(Self { n, entries })
    }

    /// Frobenius norm.
    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < self.n {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i + 1,
                n: self.n,
            })
        }
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (row, col): (usize, usize)) -> &Complex64 {
        &self.entries[row * self.n + col]
    }
}

/// Neumaier-compensated sum of nonnegative magnitudes.
pub(crate) fn compensated_sum(values: impl IntoIterator<Item = f64>) -> f64 {
    let mut sum = 0.0_f64;
    let mut carry = 0.0_f64;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            carry += (sum - t) + v;
        } else {
            carry += (v - t) + sum;
        }
        sum = t;
    }
    sum + carry
}

/// `sum_{j in set, j != i} |a_ij|`. Zero when `set \ {i}` is empty.
///
/// `set` is taken as given; duplicate indices are counted twice.
pub fn partial_row_sum(a: &ComplexMatrix, i: usize, set: &[usize]) -> Result<f64> {
    a.check_index(i)?;
    for &j in set {
        a.check_index(j)?;
    }
    Ok(compensated_sum(
        set.iter().filter(|&&j| j != i).map(|&j| a.get(i, j).norm()),
    ))
}

/// `sum_{j in set, j != i} |a_ji|`.
pub fn partial_col_sum(a: &ComplexMatrix, i: usize, set: &[usize]) -> Result<f64> {
    a.check_index(i)?;
    for &j in set {
        a.check_index(j)?;
    }
    Ok(compensated_sum(
        set.iter().filter(|&&j| j != i).map(|&j| a.get(j, i).norm()),
    ))
}

/// Full deleted row sum `r_i(A)`.
pub fn deleted_row_sum(a: &ComplexMatrix, i: usize) -> Result<f64> {
    a.check_index(i)?;
    Ok(compensated_sum(
        (0..a.dim()).filter(|&j| j != i).map(|j| a.get(i, j).norm()),
    ))
}

/// Full deleted column sum `c_i(A)`.
pub fn deleted_col_sum(a: &ComplexMatrix, i: usize) -> Result<f64> {
    a.check_index(i)?;
    Ok(compensated_sum(
        (0..a.dim()).filter(|&j| j != i).map(|j| a.get(j, i).norm()),
    ))
}

/// Row sum of row `i` skipping columns `i` and `j`, i.e. `r_i(A) - |a_ij|`.
///
/// Summed directly over the remaining columns, so the result is never negative.
pub fn deleted_pair_row_sum(a: &ComplexMatrix, i: usize, j: usize) -> Result<f64> {
    a.check_index(i)?;
    a.check_index(j)?;
    if i == j {
        return Err(Error::InvalidArgument(format!(
            "pair row sum needs two distinct indices, got {} twice",
            i + 1
        )));
    }
    Ok(compensated_sum(
        (0..a.dim()).filter(|&k| k != i && k != j).map(|k| a.get(i, k).norm()),
    ))
}

/// Which half of a partition an index belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Alpha,
    Beta,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Alpha => "alpha",
            Side::Beta => "beta",
        }
    }
}

/// Ordered pair `(alpha, beta)` of disjoint nonempty index sets covering `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IndexPartition {
    alpha: Vec<usize>,
    beta: Vec<usize>,
    sides: Vec<Side>,
}

impl IndexPartition {
    /// Partition with the given 0-based `alpha`; `beta` is its complement.
    pub fn from_alpha(n: usize, alpha: impl IntoIterator<Item = usize>) -> Result<Self> {
        if n < 2 {
            return Err(Error::DimensionTooSmall(n));
        }
        let mut sides = vec![Side::Beta; n];
        let mut count = 0;
        for i in alpha {
            if i >= n {
                return Err(Error::IndexOutOfRange { index: i + 1, n });
            }
            if sides[i] == Side::Alpha {
                return Err(Error::RepeatedIndex(i + 1));
            }
            sides[i] = Side::Alpha;
            count += 1;
        }
        if count == 0 {
            return Err(Error::InvalidPartition("alpha is empty".into()));
        }
        if count == n {
            return Err(Error::InvalidPartition("beta is empty".into()));
        }
        Ok(Self::from_sides(sides))
    }

    /// Same as [`from_alpha`](Self::from_alpha) with 1-based indices.
    pub fn from_one_based(n: usize, alpha: &[usize]) -> Result<Self> {
        if let Some(&bad) = alpha.iter().find(|&&i| i == 0 || i > n) {
            return Err(Error::IndexOutOfRange { index: bad, n });
        }
        Self::from_alpha(n, alpha.iter().map(|&i| i - 1))
    }

    /// Explicit alpha and beta (0-based); they must be disjoint and cover `0..n`.
    pub fn new(n: usize, alpha: &[usize], beta: &[usize]) -> Result<Self> {
        let part = Self::from_alpha(n, alpha.iter().copied())?;
        let mut seen = vec![false; n];
        for &j in beta {
            if j >= n {
                return Err(Error::IndexOutOfRange { index: j + 1, n });
            }
            if part.sides[j] == Side::Alpha {
                return Err(Error::InvalidPartition(format!(
                    "index {} is in both alpha and beta",
                    j + 1
                )));
            }
            if std::mem::replace(&mut seen[j], true) {
                return Err(Error::RepeatedIndex(j + 1));
            }
        }
        if beta.len() != part.beta.len() {
            return Err(Error::InvalidPartition(
                "alpha and beta do not cover every index".into(),
            ));
        }
        Ok(part)
    }

    /// Bit `k` of `mask` set means index `k` is in alpha.
    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        if n > 63 {
            return Err(Error::InvalidArgument(format!(
                "bitmask partitions support n <= 63, got {n}"
            )));
        }
        Self::from_alpha(n, (0..n).filter(|k| mask >> k & 1 == 1))
    }

    fn from_sides(sides: Vec<Side>) -> Self {
        let alpha = (0..sides.len()).filter(|&k| sides[k] == Side::Alpha).collect();
        let beta = (0..sides.len()).filter(|&k| sides[k] == Side::Beta).collect();
        Self { alpha, beta, sides }
    }

    pub fn n(&self) -> usize {
        self.sides.len()
    }

    pub fn alpha(&self) -> &[usize] {
        &self.alpha
    }

    pub fn beta(&self) -> &[usize] {
        &self.beta
    }

    pub fn side(&self, i: usize) -> Side {
        self.sides[i]
    }

    /// The partition with alpha and beta exchanged.
    pub fn swapped(&self) -> Self {
        let sides = self
            .sides
            .iter()
            .map(|s| match s {
                Side::Alpha => Side::Beta,
                Side::Beta => Side::Alpha,
            })
            .collect();
        Self::from_sides(sides)
    }

    pub fn alpha_one_based(&self) -> Vec<usize> {
        self.alpha.iter().map(|i| i + 1).collect()
    }

    pub fn beta_one_based(&self) -> Vec<usize> {
        self.beta.iter().map(|i| i + 1).collect()
    }

    /// All `(i, j)` with `i` in alpha and `j` in beta, alpha-major.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.alpha
            .iter()
            .flat_map(move |&i| self.beta.iter().map(move |&j| (i, j)))
    }
}

impl fmt::Display for IndexPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: Vec<usize>| v.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",");
        write!(
            f,
            "alpha={{{}}} beta={{{}}}",
            join(self.alpha_one_based()),
            join(self.beta_one_based())
        )
    }
}

/// All `2^n - 2` ordered partitions, alpha running through the bitmasks
/// `1..2^n - 1` in increasing order.
pub fn enumerate_partitions(n: usize) -> Result<Partitions> {
    if n < 2 {
        return Err(Error::DimensionTooSmall(n));
    }
    if n > 63 {
        return Err(Error::InvalidArgument(format!(
            "cannot enumerate partitions of {n} indices"
        )));
    }
    Ok(Partitions {
        n,
        next: 1,
        end: (1u64 << n) - 1,
    })
}

/// Iterator returned by [`enumerate_partitions`].
#[derive(Clone, Debug)]
pub struct Partitions {
    n: usize,
    next: u64,
    end: u64,
}

impl Iterator for Partitions {
    type Item = IndexPartition;

    fn next(&mut self) -> Option<IndexPartition> {
        if self.next >= self.end {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        Some(IndexPartition::from_mask(self.n, mask).expect("mask strictly between 0 and 2^n - 1"))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Partitions {}

/// Every deleted sum for one matrix and one partition.
#[derive(Clone, Debug, PartialEq)]
pub struct SumProfile {
    pub row: Vec<f64>,
    pub col: Vec<f64>,
    pub row_alpha: Vec<f64>,
    pub row_beta: Vec<f64>,
    pub col_alpha: Vec<f64>,
    pub col_beta: Vec<f64>,
}

impl SumProfile {
    pub fn new(a: &ComplexMatrix, part: &IndexPartition) -> Result<Self> {
        if part.n() != a.dim() {
            return Err(Error::InvalidPartition(format!(
                "partition covers {} indices but the matrix has dimension {}",
                part.n(),
                a.dim()
            )));
        }
        let n = a.dim();
        let per_index = |f: &dyn Fn(usize) -> Result<f64>| (0..n).map(f).collect::<Result<Vec<_>>>();
        Ok(Self {
            row: per_index(&|i| deleted_row_sum(a, i))?,
            col: per_index(&|i| deleted_col_sum(a, i))?,
            row_alpha: per_index(&|i| partial_row_sum(a, i, part.alpha()))?,
            row_beta: per_index(&|i| partial_row_sum(a, i, part.beta()))?,
            col_alpha: per_index(&|i| partial_col_sum(a, i, part.alpha()))?,
            col_beta: per_index(&|i| partial_col_sum(a, i, part.beta()))?,
        })
    }
}
