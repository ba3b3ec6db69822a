//! Dense complex eigenvalues: Householder reduction to upper Hessenberg form,
//! then single-shift QR with Wilkinson shifts and deflation.
//!
//! Every eigenvalue is checked with a few steps of inverse iteration on the
//! original matrix; the resulting `||Av - lv|| / ||v||` is reported as its
//! residual.

use std::cmp::Ordering;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

pub const DEFAULT_TOL: f64 = 1e-10;
/// QR sweeps allowed per unit of dimension.
pub const SWEEPS_PER_DIM: usize = 60;

const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };
const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };

/// Eigenvalues with multiplicity, sorted by descending modulus, then
/// descending real part, then descending imaginary part.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    pub eigenvalues: Vec<Complex64>,
    pub residuals: Vec<f64>,
    /// QR sweeps spent.
    pub iterations: usize,
    /// The iteration deflated completely and every residual is within tolerance.
    pub converged: bool,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn sum(&self) -> Complex64 {
        self.eigenvalues.iter().sum()
    }

    pub fn product(&self) -> Complex64 {
        self.eigenvalues.iter().product()
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }
}

/// Deterministic ordering used for reported spectra.
pub fn spectral_order(a: &Complex64, b: &Complex64) -> Ordering {
    b.norm()
        .total_cmp(&a.norm())
        .then(b.re.total_cmp(&a.re))
        .then(b.im.total_cmp(&a.im))
}

/// All eigenvalues of `a` with the default sweep budget of `60 n`.
pub fn eigenvalues_default(a: &ComplexMatrix) -> Result<Spectrum> {
    eigenvalues(a, DEFAULT_TOL, SWEEPS_PER_DIM * a.dim())
}

/// All eigenvalues of `a`.
///
/// Running out of sweeps is not an error: the spectrum comes back with
/// `converged == false` and whatever the iteration had at that point.
pub fn eigenvalues(a: &ComplexMatrix, tol: f64, max_iter: usize) -> Result<Spectrum> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    let n = a.dim();
    let mut h = Dense::from_matrix(a);
    h.reduce_to_hessenberg();
    let (mut values, iterations, mut qr_ok) = hessenberg_qr(&mut h, max_iter);

    if !qr_ok && n <= 3 {
        values = closed_form_roots(a);
        qr_ok = true;
    }

    values.sort_by(spectral_order);
    let residuals: Vec<f64> = values.iter().map(|&l| residual(a, l)).collect();
    let converged = qr_ok && residuals.iter().all(|&r| r <= tol);
    Ok(Spectrum {
        eigenvalues: values,
        residuals,
        iterations,
        converged,
    })
}

/// Row-major scratch matrix.
#[derive(Clone)]
struct Dense {
    n: usize,
    data: Vec<Complex64>,
}

impl Dense {
    fn from_matrix(a: &ComplexMatrix) -> Self {
        Self {
            n: a.dim(),
            data: a.as_row_major().to_vec(),
        }
    }

    #[inline]
    fn at(&self, r: usize, c: usize) -> Complex64 {
        self.data[r * self.n + c]
    }

    #[inline]
    fn at_mut(&mut self, r: usize, c: usize) -> &mut Complex64 {
        &mut self.data[r * self.n + c]
    }

    fn frobenius(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Unitary similarity to upper Hessenberg form with Householder reflectors.
    fn reduce_to_hessenberg(&mut self) {
        let n = self.n;
        for k in 0..n.saturating_sub(2) {
            let x: Vec<Complex64> = (k + 1..n).map(|r| self.at(r, k)).collect();
            let norm = x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            let tail = x[1..].iter().map(|z| z.norm_sqr()).sum::<f64>();
            if norm == 0.0 || tail == 0.0 {
                continue;
            }
            let phase = if x[0].norm() == 0.0 { ONE } else { x[0] / x[0].norm() };
            let mut v = x;
            v[0] += phase * norm;
            let vnorm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            for z in &mut v {
                *z /= vnorm;
            }
            // H <- (I - 2 v v*) H
            for c in k..n {
                let dot: Complex64 = v
                    .iter()
                    .enumerate()
                    .map(|(t, vt)| vt.conj() * self.at(k + 1 + t, c))
                    .sum();
                for (t, vt) in v.iter().enumerate() {
                    *self.at_mut(k + 1 + t, c) -= 2.0 * vt * dot;
                }
            }
            // H <- H (I - 2 v v*)
            for r in 0..n {
                let dot: Complex64 = v.iter().enumerate().map(|(t, vt)| self.at(r, k + 1 + t) * vt).sum();
                for (t, vt) in v.iter().enumerate() {
                    *self.at_mut(r, k + 1 + t) -= 2.0 * dot * vt.conj();
                }
            }
            for r in k + 2..n {
                *self.at_mut(r, k) = ZERO;
            }
        }
    }
}

/// Plane rotation `[[c, s], [-conj(s), c]]` with real `c`.
#[derive(Clone, Copy)]
struct Givens {
    c: f64,
    s: Complex64,
}

impl Givens {
    /// Rotation mapping `(a, b)` to `(r, 0)`.
    fn zeroing(a: Complex64, b: Complex64) -> Self {
        let na = a.norm();
        let r = na.hypot(b.norm());
        if r == 0.0 {
            return Self { c: 1.0, s: ZERO };
        }
        if na == 0.0 {
            return Self { c: 0.0, s: ONE };
        }
        Self {
            c: na / r,
            s: (a / na) * b.conj() / r,
        }
    }
}

/// Eigenvalues of `[[a, b], [c, d]]`, the one nearer `d` first.
fn eig2(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> (Complex64, Complex64) {
    let mid = (a + d) * 0.5;
    let half = (a - d) * 0.5;
    let disc = (half * half + b * c).sqrt();
    let (l1, l2) = (mid + disc, mid - disc);
    if (l1 - d).norm() <= (l2 - d).norm() {
        (l1, l2)
    } else {
        (l2, l1)
    }
}

/// Shifted QR on an upper Hessenberg matrix. Returns eigenvalues, sweeps, success.
fn hessenberg_qr(h: &mut Dense, max_iter: usize) -> (Vec<Complex64>, usize, bool) {
    let n = h.n;
    let eps = f64::EPSILON;
    let floor = eps * h.frobenius().max(f64::MIN_POSITIVE);
    let mut values = vec![ZERO; n];
    let mut hi = n - 1;
    let mut sweeps = 0;
    let mut since_deflation = 0;
    let mut rotations: Vec<Givens> = Vec::with_capacity(n);

    loop {
        if hi == 0 {
            values[0] = h.at(0, 0);
            return (values, sweeps, true);
        }
        let mut lo = hi;
        while lo > 0 {
            let scale = h.at(lo - 1, lo - 1).norm() + h.at(lo, lo).norm();
            if h.at(lo, lo - 1).norm() <= (eps * scale).max(floor) {
                *h.at_mut(lo, lo - 1) = ZERO;
                break;
            }
            lo -= 1;
        }
        if lo == hi {
            values[hi] = h.at(hi, hi);
            hi -= 1;
            since_deflation = 0;
            continue;
        }
        if sweeps >= max_iter {
            // Report the diagonal of what is left.
            for (k, v) in values.iter_mut().enumerate().take(hi + 1) {
                *v = h.at(k, k);
            }
            return (values, sweeps, false);
        }
        sweeps += 1;
        since_deflation += 1;

        let shift = if since_deflation % 11 == 0 {
            h.at(hi, hi) + 0.75 * h.at(hi, hi - 1).norm()
        } else {
            eig2(h.at(hi - 1, hi - 1), h.at(hi - 1, hi), h.at(hi, hi - 1), h.at(hi, hi)).0
        };

        for k in lo..=hi {
            *h.at_mut(k, k) -= shift;
        }
        rotations.clear();
        for k in lo..hi {
            let g = Givens::zeroing(h.at(k, k), h.at(k + 1, k));
            for c in k..=hi {
                let x = h.at(k, c);
                let y = h.at(k + 1, c);
                *h.at_mut(k, c) = g.c * x + g.s * y;
                *h.at_mut(k + 1, c) = -g.s.conj() * x + g.c * y;
            }
            *h.at_mut(k + 1, k) = ZERO;
            rotations.push(g);
        }
        for (offset, g) in rotations.iter().enumerate() {
            let k = lo + offset;
            for r in lo..=(k + 1).min(hi) {
                let x = h.at(r, k);
                let y = h.at(r, k + 1);
                *h.at_mut(r, k) = x * g.c + y * g.s.conj();
                *h.at_mut(r, k + 1) = -x * g.s + y * g.c;
            }
        }
        for k in lo..=hi {
            *h.at_mut(k, k) += shift;
        }
    }
}

/// Characteristic-polynomial roots for `n <= 3`, polished by Newton steps.
pub(crate) fn closed_form_roots(a: &ComplexMatrix) -> Vec<Complex64> {
    let m = |r, c| a.get(r, c);
    match a.dim() {
        2 => {
            let (l1, l2) = eig2(m(0, 0), m(0, 1), m(1, 0), m(1, 1));
            vec![l1, l2]
        }
        3 => {
            // l^3 - t l^2 + s l - d
            let t = m(0, 0) + m(1, 1) + m(2, 2);
            let s = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) + m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0) + m(1, 1) * m(2, 2)
                - m(1, 2) * m(2, 1);
            let d = determinant(a);
            let p = s - t * t / 3.0;
            let q = -2.0 * t * t * t / 27.0 + t * s / 3.0 - d;
            let inner = (q * q / 4.0 + p * p * p / 27.0).sqrt();
            let mut u = (-q / 2.0 + inner).powf(1.0 / 3.0);
            if u.norm() < 1e-300 {
                u = (-q / 2.0 - inner).powf(1.0 / 3.0);
            }
            let omega = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
            let roots = (0..3).map(|k| {
                let uk = u * omega.powu(k);
                let vk = if uk.norm() == 0.0 { ZERO } else { -p / (3.0 * uk) };
                uk + vk + t / 3.0
            });
            let poly = |l: Complex64| ((l - t) * l + s) * l - d;
            let deriv = |l: Complex64| (3.0 * l - 2.0 * t) * l + s;
            roots
                .map(|mut l| {
                    for _ in 0..4 {
                        let dl = deriv(l);
                        if dl.norm() == 0.0 {
                            break;
                        }
                        let step = poly(l) / dl;
                        if !step.re.is_finite() || !step.im.is_finite() {
                            break;
                        }
                        l -= step;
                    }
                    l
                })
                .collect()
        }
        _ => unreachable!("closed form only for n <= 3"),
    }
}

/// LU factorization with partial pivoting, in place.
struct Lu {
    n: usize,
    data: Vec<Complex64>,
    perm: Vec<usize>,
    swaps: usize,
}

impl Lu {
    /// Factors `a - shift I`. Exactly zero pivots are replaced by `floor`
    /// when it is positive.
    fn factor(a: &ComplexMatrix, shift: Complex64, floor: f64) -> Self {
        let n = a.dim();
        let mut data = a.as_row_major().to_vec();
        for k in 0..n {
            data[k * n + k] -= shift;
        }
        let mut perm: Vec<usize> = (0..n).collect();
        let mut swaps = 0;
        for k in 0..n {
            let p = (k..n)
                .max_by(|&x, &y| data[x * n + k].norm().total_cmp(&data[y * n + k].norm()))
                .unwrap_or(k);
            if p != k {
                for c in 0..n {
                    data.swap(k * n + c, p * n + c);
                }
                perm.swap(k, p);
                swaps += 1;
            }
            let pivot = data[k * n + k];
            if pivot.norm() <= floor && floor > 0.0 {
                data[k * n + k] = Complex64::new(floor, 0.0);
            }
            let pivot = data[k * n + k];
            if pivot.norm() == 0.0 {
                continue;
            }
            for r in k + 1..n {
                let f = data[r * n + k] / pivot;
                data[r * n + k] = f;
                if f.norm() != 0.0 {
                    for c in k + 1..n {
                        let u = data[k * n + c];
                        data[r * n + c] -= f * u;
                    }
                }
            }
        }
        Self { n, data, perm, swaps }
    }

    fn solve(&self, rhs: &[Complex64]) -> Vec<Complex64> {
        let n = self.n;
        let mut x: Vec<Complex64> = self.perm.iter().map(|&p| rhs[p]).collect();
        for r in 0..n {
            for c in 0..r {
                let l = self.data[r * n + c];
                let t = l * x[c];
                x[r] -= t;
            }
        }
        for r in (0..n).rev() {
            for c in r + 1..n {
                let u = self.data[r * n + c];
                let t = u * x[c];
                x[r] -= t;
            }
            x[r] /= self.data[r * n + r];
        }
        x
    }
}

/// Determinant from a partially pivoted LU factorization.
pub fn determinant(a: &ComplexMatrix) -> Complex64 {
    let lu = Lu::factor(a, ZERO, 0.0);
    let n = lu.n;
    let prod: Complex64 = (0..n).map(|k| lu.data[k * n + k]).product();
    if lu.swaps % 2 == 1 {
        -prod
    } else {
        prod
    }
}

fn vec_norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// `||Av - lambda v|| / ||v||` after a few inverse-iteration steps on `A - lambda I`.
pub fn residual(a: &ComplexMatrix, lambda: Complex64) -> f64 {
    const STEPS: usize = 3;
    let n = a.dim();
    let scale = a.frobenius_norm().max(lambda.norm()).max(1.0);
    let lu = Lu::factor(a, lambda, f64::EPSILON * scale);

    let apply = |v: &[Complex64]| -> f64 {
        let r: Vec<Complex64> = (0..n)
            .map(|i| a.row(i).iter().zip(v).map(|(x, y)| x * y).sum::<Complex64>() - lambda * v[i])
            .collect();
        vec_norm(&r) / vec_norm(v)
    };

    let mut best = f64::INFINITY;
    // Two starting vectors so an unlucky orthogonal start cannot hide an eigenvector.
    let starts: [Box<dyn Fn(usize) -> Complex64>; 2] = [
        Box::new(|_| ONE),
        Box::new(|k| Complex64::new(1.0 / (k + 1) as f64, ((k * 7 + 3) % 5) as f64 / 5.0)),
    ];
    for start in &starts {
        let mut v: Vec<Complex64> = (0..n).map(start).collect();
        for _ in 0..STEPS {
            let w = lu.solve(&v);
            let norm = vec_norm(&w);
            if !norm.is_finite() || norm == 0.0 {
                break;
            }
            v = w.into_iter().map(|z| z / norm).collect();
            best = best.min(apply(&v));
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn sample4() -> ComplexMatrix {
        ComplexMatrix::from_real_rows(&[
            [1.0, -0.01, 0.0, 7.0],
            [0.1, 0.9, -1.1, 0.3],
            [-0.11, 0.2, 0.9, 0.2],
            [2.0, 0.4, -0.1, 1.1],
        ])
        .unwrap()
    }

    #[test]
    fn sample4_spectrum() {
        let s = eigenvalues_default(&sample4()).unwrap();
        assert!(s.converged);
        let expected = [c(4.8161, 0.0), c(-2.6994, 0.0), c(0.8917, 0.4921), c(0.8917, -0.4921)];
        for (got, want) in s.eigenvalues.iter().zip(&expected) {
            assert!((got - want).norm() <= 1e-3, "{got} vs {want}");
        }
        assert!((s.sum() - sample4().trace()).norm() <= 1e-8 * (1.0 + sample4().trace().norm()));
    }

    #[test]
    fn identity_and_triangular() {
        let s = eigenvalues_default(&ComplexMatrix::identity(3).unwrap()).unwrap();
        assert!(s.converged);
        assert!(s.eigenvalues.iter().all(|&l| l == ONE));
        assert!(s.residuals.iter().all(|&r| r == 0.0));

        let t = ComplexMatrix::from_rows(&[[c(3.0, 0.0), c(1.0, 1.0)], [ZERO, c(0.0, 5.0)]]).unwrap();
        let s = eigenvalues_default(&t).unwrap();
        assert_eq!(s.eigenvalues.len(), 2);
        assert!((s.eigenvalues[0] - c(0.0, 5.0)).norm() < 1e-14);
        assert!((s.eigenvalues[1] - c(3.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn rejects_bad_tolerance() {
        assert!(eigenvalues(&sample4(), 0.0, 10).is_err());
        assert!(eigenvalues(&sample4(), f64::NAN, 10).is_err());
    }

    #[test]
    fn zero_budget_is_not_an_error() {
        let s = eigenvalues(&sample4(), 1e-10, 0).unwrap();
        assert!(!s.converged);
        assert_eq!(s.eigenvalues.len(), 4);
    }

    #[test]
    fn small_closed_forms() {
        let a = ComplexMatrix::from_real_rows(&[[2.0, 1.0, 0.0], [1.0, 3.0, 1.0], [0.0, 1.0, 4.0]]).unwrap();
        let mut roots = closed_form_roots(&a);
        roots.sort_by(spectral_order);
        let s = eigenvalues_default(&a).unwrap();
        for (x, y) in roots.iter().zip(&s.eigenvalues) {
            assert!((x - y).norm() < 1e-10, "{x} vs {y}");
        }
        let b = ComplexMatrix::from_real_rows(&[[0.0, -1.0], [1.0, 0.0]]).unwrap();
        let mut r2 = closed_form_roots(&b);
        r2.sort_by(spectral_order);
        assert!((r2[0] - c(0.0, 1.0)).norm() < 1e-15);
    }

    #[test]
    fn determinant_cases() {
        assert_eq!(determinant(&ComplexMatrix::identity(4).unwrap()), ONE);
        let ones = ComplexMatrix::from_real_rows(&[[1.0, 1.0], [1.0, 1.0]]).unwrap();
        assert!(determinant(&ones).norm() < 1e-15);
        let swap = ComplexMatrix::from_real_rows(&[[0.0, 1.0], [1.0, 0.0]]).unwrap();
        assert_eq!(determinant(&swap), -ONE);
        let a = sample4();
        let d = determinant(&a);
        let p = eigenvalues_default(&a).unwrap().product();
        assert!((d - p).norm() <= 1e-6 * d.norm(), "{d} vs {p}");
    }

    #[test]
    fn residual_cases() {
        let d = ComplexMatrix::from_real_rows(&[[1.0, 0.0, 0.0], [0.0, 2.0, 0.0], [0.0, 0.0, 3.0]]).unwrap();
        assert!(residual(&d, c(2.0, 0.0)) <= 1e-15);
        let id = ComplexMatrix::identity(3).unwrap();
        assert!((residual(&id, c(10.0, 0.0)) - 9.0).abs() < 1e-12);
        assert!(residual(&sample4(), c(4.8161, 0.0)) <= 1e-3);
    }

    #[test]
    fn companion_with_repeated_roots() {
        // (x-1)^2 (x+2): defective double root at 1.
        let a = ComplexMatrix::from_real_rows(&[[0.0, 0.0, -2.0], [1.0, 0.0, 3.0], [0.0, 1.0, 0.0]]).unwrap();
        let s = eigenvalues_default(&a).unwrap();
        assert!((s.eigenvalues[0] - c(-2.0, 0.0)).norm() < 1e-10);
        assert!((s.eigenvalues[1] - ONE).norm() < 1e-6);
        assert!((s.eigenvalues[2] - ONE).norm() < 1e-6);
    }
}
