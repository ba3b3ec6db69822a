#![allow(dead_code)]

use num_complex::Complex64;
use rand::Rng;
use spectral_fence::{ComplexMatrix, IndexPartition};

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// The 4x4 real test matrix used throughout the docs and examples.
pub fn sample4() -> ComplexMatrix {
    ComplexMatrix::from_real_rows(&[
        [1.0, -0.01, 0.0, 7.0],
        [0.1, 0.9, -1.1, 0.3],
        [-0.11, 0.2, 0.9, 0.2],
        [2.0, 0.4, -0.1, 1.1],
    ])
    .unwrap()
}

/// Its eigenvalues to four decimals.
pub fn sample4_printed() -> [Complex64; 4] {
    [c(4.8161, 0.0), c(-2.6994, 0.0), c(0.8917, 0.4921), c(0.8917, -0.4921)]
}

/// Independent membership test for `E` with every inequality loosened by
/// `eta * s^2` (`s = max(1, |A|_F)`): closed ones grow, open exclusions shrink.
///
/// For n = 2 the region `E` away from the disks is exactly the curve
/// `|z - a11| |z - a22| = |a12| |a21|`, which holds the eigenvalues, so the
/// exact predicates decide computed eigenvalues by their last bit.
pub fn in_e_slack(a: &ComplexMatrix, part: &IndexPartition, z: Complex64, eta: f64) -> bool {
    let n = a.dim();
    let s = a.frobenius_norm().max(1.0);
    let (lin, quad) = (eta * s, eta * s * s);
    let abs = |i: usize, j: usize| a.get(i, j).norm();
    let sum_over = |i: usize, set: &[usize]| -> f64 { set.iter().filter(|&&k| k != i).map(|&k| abs(i, k)).sum() };
    let sum_except = |i: usize, j: usize| -> f64 { (0..n).filter(|&k| k != i && k != j).map(|k| abs(i, k)).sum() };
    let (alpha, beta) = (part.alpha(), part.beta());
    let d = |i: usize| (z - a.get(i, i)).norm();
    if alpha.iter().any(|&i| d(i) <= sum_over(i, alpha) + lin) || beta.iter().any(|&j| d(j) <= sum_over(j, beta) + lin)
    {
        return true;
    }
    for &i in alpha {
        for &j in beta {
            let (ria, rib, rja, rjb) = (
                sum_over(i, alpha),
                sum_over(i, beta),
                sum_over(j, alpha),
                sum_over(j, beta),
            );
            if (d(i) - ria) * (d(j) - rjb) > rib * rja + quad {
                continue;
            }
            let tilde = (d(i) + sum_except(i, j)) * (d(j) + rjb) < abs(i, j) * (2.0 * abs(j, i) - rja) - quad;
            let hat = (d(j) + sum_except(j, i)) * (d(i) + ria) < abs(j, i) * (2.0 * abs(i, j) - rib) - quad;
            if !(tilde && hat) {
                return true;
            }
        }
    }
    false
}

/// Slack used with [`in_e_slack`] for computed eigenvalues.
pub const EIGEN_ETA: f64 = 1e-9;

pub fn random_unit(rng: &mut impl Rng) -> Complex64 {
    spectral_fence::sample::unit_disk_point(rng)
}

/// Unit-disk matrix with each diagonal entry pushed out by up to `boost * n`.
pub fn boosted_matrix(rng: &mut impl Rng, n: usize, boost: f64) -> ComplexMatrix {
    let a = spectral_fence::sample::unit_disk_matrix(rng, n);
    let mut entries = a.as_row_major().to_vec();
    for i in 0..n {
        let d = random_unit(rng);
        let scale = boost * n as f64 * rng.random::<f64>();
        entries[i * n + i] += if d.norm() > 0.0 {
            d / d.norm() * scale
        } else {
            c(scale, 0.0)
        };
    }
    ComplexMatrix::from_row_major(n, entries).unwrap()
}

/// Random matrix with two equal rows.
pub fn singular_matrix(rng: &mut impl Rng, n: usize) -> ComplexMatrix {
    let a = boosted_matrix(rng, n, 1.0);
    let mut entries = a.as_row_major().to_vec();
    let (i, j) = (rng.random_range(0..n), rng.random_range(0..n - 1));
    let j = if j >= i { j + 1 } else { j };
    for k in 0..n {
        entries[j * n + k] = entries[i * n + k];
    }
    ComplexMatrix::from_row_major(n, entries).unwrap()
}
