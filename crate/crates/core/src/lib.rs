//! Eigenvalue inclusion regions for complex matrices, refined by exclusion sets.
//!
//! Given a square complex matrix `A` and a split of its indices into two
//! nonempty sets `alpha` and `beta`, the crate builds the region `G` (disks
//! from partial row sums plus Cassini-type ovals for every cross pair) and
//! the smaller region `E`, which removes from each oval the points lying in
//! both of its exclusion sets. Every eigenvalue of `A` lies in `E`, and `E`
//! lies inside `G`.
//!
//! Around the regions sit a dense eigensolver used to check membership, a
//! rasterizer for area estimates and images, a nonsingularity test built on
//! `E` at the origin, and readers and writers for matrix files and reports.
//!
//! ```
//! use num_complex::Complex64;
//! use spectral_fence::{eigenvalues_default, ComplexMatrix, IndexPartition, Regions};
//!
//! let a = ComplexMatrix::from_real_rows(&[[4.0, 1.0, 0.0], [0.5, -2.0, 0.2], [0.1, 0.0, 1.0]]).unwrap();
//! let part = IndexPartition::from_alpha(3, [0]).unwrap();
//! let regions = Regions::new(&a, &part).unwrap();
//! for lambda in eigenvalues_default(&a).unwrap().eigenvalues {
//!     assert!(regions.in_e(lambda));
//! }
//! assert!(!regions.in_e(Complex64::new(2.5, 0.0)));
//! ```
//!
//! Library indices are 0-based. Files, partition strings and reports are
//! 1-based.

pub mod certificate;
pub mod cli;
pub mod eigen;
pub mod error;
pub mod io;
pub mod matrix;
pub mod numfmt;
pub mod raster;
pub mod regions;
pub mod sample;

pub use num_complex::Complex64;

pub use certificate::{certify_any_partition, corollary_certificate, Certificate, PartitionSearch};
pub use eigen::{determinant, eigenvalues, eigenvalues_default, residual, Spectrum};
pub use error::{Error, Result};
pub use matrix::{
    deleted_col_sum, deleted_pair_row_sum, deleted_row_sum, enumerate_partitions, partial_col_sum, partial_row_sum,
    ComplexMatrix, IndexPartition, Side,
};
pub use raster::{area, bounding_box, is_subset, rasterize, BoundingBox, GridSpec, RasterGrid};
pub use regions::{FaridVariant, MembershipReport, RegionKind, Regions};
