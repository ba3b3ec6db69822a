//! Random matrices and points for self-tests.

use num_complex::Complex64;
use rand::Rng;

use crate::matrix::ComplexMatrix;
use crate::raster::BoundingBox;

/// Uniform point in the closed unit disk.
pub fn unit_disk_point<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let r = rng.random::<f64>().sqrt();
    let theta = rng.random::<f64>() * std::f64::consts::TAU;
    Complex64::from_polar(r, theta)
}

/// `n x n` matrix with independent entries uniform in the unit disk.
pub fn unit_disk_matrix<R: Rng + ?Sized>(rng: &mut R, n: usize) -> ComplexMatrix {
    let entries = (0..n * n).map(|_| unit_disk_point(rng)).collect();
    ComplexMatrix::from_row_major(n, entries).expect("finite entries, n >= 2")
}

/// Uniform point in `bbox`.
pub fn box_point<R: Rng + ?Sized>(rng: &mut R, bbox: &BoundingBox) -> Complex64 {
    Complex64::new(
        bbox.re_min + rng.random::<f64>() * bbox.width(),
        bbox.im_min + rng.random::<f64>() * bbox.height(),
    )
}
