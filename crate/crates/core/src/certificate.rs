//! Nonsingularity certificates from the alpha-beta exclusion conditions.
//!
//! For a partition `(alpha, beta)` the matrix is certified nonsingular when
//!
//! * (I)   `|a_ii| > r_i^alpha` for every `i` in alpha,
//! * (II)  `|a_jj| > r_j^beta` for every `j` in beta,
//! * (III) for every pair, `(|a_ii| - r_i^alpha)(|a_jj| - r_j^beta) > r_i^beta r_j^alpha`
//!   or `(|a_ii| + r_i^j)(|a_jj| + r_j^beta) < |a_ij| (2|a_ji| - r_j^alpha)`,
//! * (IV)  the same with the second alternative mirrored:
//!   `(|a_jj| + r_j^i)(|a_ii| + r_i^alpha) < |a_ji| (2|a_ij| - r_i^beta)`.
//!
//! This is exactly the statement that `0` lies outside the refined region `E`.
//! A missing certificate says nothing about singularity.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::Result;
use crate::matrix::{deleted_pair_row_sum, ComplexMatrix, IndexPartition, SumProfile};

/// Partition searches enumerate exhaustively up to this dimension.
pub const DEFAULT_EXHAUSTIVE_LIMIT: usize = 16;

/// Which alternative of a pair condition held.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Disjunct {
    /// The strict oval inequality.
    Oval,
    /// The exclusion-set inequality at the origin.
    Exclusion,
}

impl Disjunct {
    pub fn name(self) -> &'static str {
        match self {
            Disjunct::Oval => "oval",
            Disjunct::Exclusion => "exclusion",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairCertificate {
    pub i: usize,
    pub j: usize,
    pub oval_strict: bool,
    pub tilde_at_zero: bool,
    pub hat_at_zero: bool,
}

impl PairCertificate {
    pub fn condition_iii(&self) -> bool {
        self.oval_strict || self.tilde_at_zero
    }

    pub fn condition_iv(&self) -> bool {
        self.oval_strict || self.hat_at_zero
    }

    /// The alternative that carried (III); the oval wins ties.
    pub fn iii_by(&self) -> Option<Disjunct> {
        if self.oval_strict {
            Some(Disjunct::Oval)
        } else if self.tilde_at_zero {
            Some(Disjunct::Exclusion)
        } else {
            None
        }
    }

    pub fn iv_by(&self) -> Option<Disjunct> {
        if self.oval_strict {
            Some(Disjunct::Oval)
        } else if self.hat_at_zero {
            Some(Disjunct::Exclusion)
        } else {
            None
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub partition: IndexPartition,
    pub nonsingular: bool,
    /// Condition (I) per `i` in alpha.
    pub alpha_conditions: Vec<(usize, bool)>,
    /// Condition (II) per `j` in beta.
    pub beta_conditions: Vec<(usize, bool)>,
    pub pairs: Vec<PairCertificate>,
}

impl Certificate {
    /// First failing condition, for explanations.
    pub fn first_failure(&self) -> Option<String> {
        if let Some((i, _)) = self.alpha_conditions.iter().find(|c| !c.1) {
            return Some(format!("(I) fails at i={}", i + 1));
        }
        if let Some((j, _)) = self.beta_conditions.iter().find(|c| !c.1) {
            return Some(format!("(II) fails at j={}", j + 1));
        }
        self.pairs.iter().find_map(|p| {
            if !p.condition_iii() {
                Some(format!("(III) fails at (i,j)=({},{})", p.i + 1, p.j + 1))
            } else if !p.condition_iv() {
                Some(format!("(IV) fails at (i,j)=({},{})", p.i + 1, p.j + 1))
            } else {
                None
            }
        })
    }
}

/// Evaluates (I)-(IV) for one partition, strict inequalities as stated above.
pub fn corollary_certificate(a: &ComplexMatrix, part: &IndexPartition) -> Result<Certificate> {
    let sums = SumProfile::new(a, part)?;
    let diag: Vec<f64> = (0..a.dim()).map(|k| a.get(k, k).norm()).collect();

    let alpha_conditions: Vec<(usize, bool)> = part.alpha().iter().map(|&i| (i, diag[i] > sums.row_alpha[i])).collect();
    let beta_conditions: Vec<(usize, bool)> = part.beta().iter().map(|&j| (j, diag[j] > sums.row_beta[j])).collect();

    let mut pairs = Vec::new();
    for (i, j) in part.pairs() {
        let a_ij = a.get(i, j).norm();
        let a_ji = a.get(j, i).norm();
        let oval_strict =
            (diag[i] - sums.row_alpha[i]) * (diag[j] - sums.row_beta[j]) > sums.row_beta[i] * sums.row_alpha[j];
        let tilde_at_zero = (diag[i] + deleted_pair_row_sum(a, i, j)?) * (diag[j] + sums.row_beta[j])
            < a_ij * (2.0 * a_ji - sums.row_alpha[j]);
        let hat_at_zero = (diag[j] + deleted_pair_row_sum(a, j, i)?) * (diag[i] + sums.row_alpha[i])
            < a_ji * (2.0 * a_ij - sums.row_beta[i]);
        pairs.push(PairCertificate {
            i,
            j,
            oval_strict,
            tilde_at_zero,
            hat_at_zero,
        });
    }

    let nonsingular = alpha_conditions.iter().all(|c| c.1)
        && beta_conditions.iter().all(|c| c.1)
        && pairs.iter().all(|p| p.condition_iii() && p.condition_iv());
    Ok(Certificate {
        partition: part.clone(),
        nonsingular,
        alpha_conditions,
        beta_conditions,
        pairs,
    })
}

/// Result of searching partitions for a certificate.
#[derive(Clone, Debug, PartialEq)]
pub struct PartitionSearch {
    /// The first certifying partition in search order.
    pub certificate: Option<Certificate>,
    /// Partitions in the search order.
    pub candidates: usize,
    /// Whether every ordered partition was tried.
    pub exhaustive: bool,
}

pub fn certify_any_partition(a: &ComplexMatrix) -> PartitionSearch {
    certify_any_partition_with_limit(a, DEFAULT_EXHAUSTIVE_LIMIT)
}

/// Exhaustive search in enumeration order when `n <= limit`; otherwise the
/// `n - 1` greedy splits whose alpha is the `k` largest `|a_ii|`, `k = 1..n`.
pub fn certify_any_partition_with_limit(a: &ComplexMatrix, limit: usize) -> PartitionSearch {
    let n = a.dim();
    let candidates = search_order(a, limit);
    let count = candidates.len();
    let certificate = candidates
        .into_par_iter()
        .map(|p| corollary_certificate(a, &p).expect("partition matches matrix"))
        .find_first(|c| c.nonsingular);
    PartitionSearch {
        certificate,
        candidates: count,
        exhaustive: n <= limit.min(63),
    }
}

/// The partitions [`certify_any_partition_with_limit`] tries, in order.
pub fn search_order(a: &ComplexMatrix, limit: usize) -> Vec<IndexPartition> {
    let n = a.dim();
    if n <= limit.min(63) {
        return crate::matrix::enumerate_partitions(n).expect("n >= 2").collect();
    }
    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<Complex64> = a.diagonal();
    order.sort_by(|&x, &y| diag[y].norm().total_cmp(&diag[x].norm()));
    (1..n)
        .map(|k| IndexPartition::from_alpha(n, order[..k].iter().copied()).expect("proper split"))
        .collect()
}
