//! Sampling region predicates on a rectangular lattice of the complex plane.
//!
//! Each cell holds one membership bit, sampled at the cell center. Row 0 is
//! the top of the picture (largest imaginary part).

mod emit;

pub use emit::{emit, parse_pgm, write_svg, ImageFormat, Overlay, SvgLayer};

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matrix::{deleted_row_sum, ComplexMatrix};

pub const DEFAULT_RESOLUTION: usize = 800;
pub const DEFAULT_PAD: f64 = 0.05;

/// Axis-aligned rectangle in the complex plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundingBox {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
}

impl BoundingBox {
    pub fn new(re_min: f64, re_max: f64, im_min: f64, im_max: f64) -> Result<Self> {
        let ok = [re_min, re_max, im_min, im_max].iter().all(|v| v.is_finite()) && re_min < re_max && im_min < im_max;
        if !ok {
            return Err(Error::InvalidArgument(format!(
                "bad bounding box [{re_min}, {re_max}] x [{im_min}, {im_max}]"
            )));
        }
        Ok(Self {
            re_min,
            re_max,
            im_min,
            im_max,
        })
    }

    pub fn width(&self) -> f64 {
        self.re_max - self.re_min
    }

    pub fn height(&self) -> f64 {
        self.im_max - self.im_min
    }

    pub fn area(&self) -> f64 {
        self.width() * self.height()
    }

    pub fn contains(&self, z: Complex64) -> bool {
        (self.re_min..=self.re_max).contains(&z.re) && (self.im_min..=self.im_max).contains(&z.im)
    }
}

/// Smallest box holding every row Gershgorin disk, padded by `pad_fraction`
/// of its larger side on each edge.
///
/// When every disk collapses onto a horizontal or vertical line the box is
/// replaced by a square of side `max(1, spread)` around the midpoint of the
/// centers, and no padding is added.
pub fn bounding_box(a: &ComplexMatrix, pad_fraction: f64) -> Result<BoundingBox> {
    if !pad_fraction.is_finite() || pad_fraction < 0.0 {
        return Err(Error::InvalidArgument(format!(
            "pad fraction must be a nonnegative number, got {pad_fraction}"
        )));
    }
    let mut re_min = f64::INFINITY;
    let mut re_max = f64::NEG_INFINITY;
    let mut im_min = f64::INFINITY;
    let mut im_max = f64::NEG_INFINITY;
    for k in 0..a.dim() {
        let c = a.get(k, k);
        let r = deleted_row_sum(a, k)?;
        re_min = re_min.min(c.re - r);
        re_max = re_max.max(c.re + r);
        im_min = im_min.min(c.im - r);
        im_max = im_max.max(c.im + r);
    }
    let (w, h) = (re_max - re_min, im_max - im_min);
    if w <= 0.0 || h <= 0.0 {
        let side = w.max(h).max(1.0);
        let (cr, ci) = ((re_min + re_max) / 2.0, (im_min + im_max) / 2.0);
        return BoundingBox::new(cr - side / 2.0, cr + side / 2.0, ci - side / 2.0, ci + side / 2.0);
    }
    let pad = pad_fraction * w.max(h);
    BoundingBox::new(re_min - pad, re_max + pad, im_min - pad, im_max + pad)
}

/// Extent and resolution of a raster.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridSpec {
    pub bbox: BoundingBox,
    pub cols: usize,
    pub rows: usize,
}

impl GridSpec {
    pub fn new(bbox: BoundingBox, cols: usize, rows: usize) -> Result<Self> {
        if cols < 2 || rows < 2 {
            return Err(Error::InvalidArgument(format!(
                "raster needs at least 2x2 cells, got {cols}x{rows}"
            )));
        }
        Ok(Self { bbox, cols, rows })
    }

    pub fn square(bbox: BoundingBox, resolution: usize) -> Result<Self> {
        Self::new(bbox, resolution, resolution)
    }

    pub fn cell_width(&self) -> f64 {
        self.bbox.width() / self.cols as f64
    }

    pub fn cell_height(&self) -> f64 {
        self.bbox.height() / self.rows as f64
    }

    pub fn cell_area(&self) -> f64 {
        self.cell_width() * self.cell_height()
    }

    /// Center of cell `(col, row)`.
    pub fn cell_center(&self, col: usize, row: usize) -> Complex64 {
        Complex64::new(
            self.bbox.re_min + (col as f64 + 0.5) * self.cell_width(),
            self.bbox.im_max - (row as f64 + 0.5) * self.cell_height(),
        )
    }
}

/// One bit per cell, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct RasterGrid {
    spec: GridSpec,
    bits: Vec<u64>,
}

/// Area of a raster's member cells.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AreaEstimate {
    pub value: f64,
    pub cell_count: usize,
    pub resolution: (usize, usize),
}

/// Outcome of [`is_subset`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetCheck {
    pub holds: bool,
    /// Up to [`MAX_VIOLATIONS`] offending `(col, row)` cells, in row-major order.
    pub violations: Vec<(usize, usize)>,
    pub violation_count: usize,
}

pub const MAX_VIOLATIONS: usize = 100;

impl RasterGrid {
    pub fn empty(spec: GridSpec) -> Self {
        Self {
            bits: vec![0; (spec.cols * spec.rows).div_ceil(64)],
            spec,
        }
    }

    pub fn from_cells(spec: GridSpec, cells: impl IntoIterator<Item = bool>) -> Result<Self> {
        let mut grid = Self::empty(spec);
        let mut count = 0;
        for (k, member) in cells.into_iter().enumerate() {
            if k >= spec.cols * spec.rows {
                return Err(Error::InvalidRaster("too many cells".into()));
            }
            if member {
                grid.bits[k / 64] |= 1 << (k % 64);
            }
            count += 1;
        }
        if count != spec.cols * spec.rows {
            return Err(Error::InvalidRaster(format!(
                "expected {} cells, got {count}",
                spec.cols * spec.rows
            )));
        }
        Ok(grid)
    }

    pub fn spec(&self) -> &GridSpec {
        &self.spec
    }

    pub fn cols(&self) -> usize {
        self.spec.cols
    }

    pub fn rows(&self) -> usize {
        self.spec.rows
    }

    pub fn get(&self, col: usize, row: usize) -> bool {
        let k = row * self.spec.cols + col;
        self.bits[k / 64] >> (k % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Row-major membership of every cell.
    pub fn cells(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.spec.cols * self.spec.rows).map(move |k| self.bits[k / 64] >> (k % 64) & 1 == 1)
    }

    fn check_same_grid(&self, other: &RasterGrid) -> Result<()> {
        if self.spec != other.spec {
            return Err(Error::GridMismatch);
        }
        Ok(())
    }

    /// Cell-wise OR.
    pub fn union(&self, other: &RasterGrid) -> Result<RasterGrid> {
        self.check_same_grid(other)?;
        Ok(Self {
            spec: self.spec,
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a | b).collect(),
        })
    }

    /// Number of cells where the two rasters differ.
    pub fn symmetric_difference_count(&self, other: &RasterGrid) -> Result<usize> {
        self.check_same_grid(other)?;
        Ok(self
            .bits
            .iter()
            .zip(&other.bits)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum())
    }
}

/// Evaluates `predicate` at every cell center. Rows are evaluated in parallel.
pub fn rasterize<F>(predicate: F, spec: &GridSpec) -> RasterGrid
where
    F: Fn(Complex64) -> bool + Sync,
{
    let rows: Vec<Vec<bool>> = (0..spec.rows)
        .into_par_iter()
        .map(|row| {
            (0..spec.cols)
                .map(|col| predicate(spec.cell_center(col, row)))
                .collect()
        })
        .collect();
    RasterGrid::from_cells(*spec, rows.into_iter().flatten()).expect("one value per cell")
}

pub fn area(grid: &RasterGrid) -> AreaEstimate {
    let cell_count = grid.count();
    AreaEstimate {
        value: cell_count as f64 * grid.spec.cell_area(),
        cell_count,
        resolution: (grid.cols(), grid.rows()),
    }
}

/// Whether every member cell of `inner` is a member of `outer`.
pub fn is_subset(inner: &RasterGrid, outer: &RasterGrid) -> Result<SubsetCheck> {
    inner.check_same_grid(outer)?;
    let mut violations = Vec::new();
    let mut violation_count = 0;
    for (w, (a, b)) in inner.bits.iter().zip(&outer.bits).enumerate() {
        let mut bad = a & !b;
        violation_count += bad.count_ones() as usize;
        while bad != 0 && violations.len() < MAX_VIOLATIONS {
            let k = w * 64 + bad.trailing_zeros() as usize;
            violations.push((k % inner.spec.cols, k / inner.spec.cols));
            bad &= bad - 1;
        }
    }
    Ok(SubsetCheck {
        holds: violation_count == 0,
        violations,
        violation_count,
    })
}
