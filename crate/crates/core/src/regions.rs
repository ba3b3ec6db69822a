//! Membership predicates for the alpha-beta inclusion regions.
//!
//! [`Regions`] precomputes every disk, oval and exclusion-set constant for one
//! `(A, partition)` pair so that per-point evaluation is a handful of
//! distances and products. Disk and oval tests are closed (`<=`), the
//! exclusion sets are open (`<`). No tolerance is applied anywhere in here.
//!
//! Indices are 0-based.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{deleted_pair_row_sum, ComplexMatrix, IndexPartition, Side, SumProfile};

/// Closed disk `|z - center| <= radius`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Disk {
    pub center: Complex64,
    pub radius: f64,
    pub owner: usize,
    pub side: Side,
}

impl Disk {
    #[inline]
    pub fn contains(&self, z: Complex64) -> bool {
        (self.center - z).norm() <= self.radius
    }
}

/// Constants of the oval attached to `i` in alpha and `j` in beta.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OvalParams {
    pub i: usize,
    pub j: usize,
    pub center_i: Complex64,
    pub center_j: Complex64,
    /// `r_i^alpha`
    pub radius_i: f64,
    /// `r_j^beta`
    pub radius_j: f64,
    /// `r_i^beta`
    pub coupling_i: f64,
    /// `r_j^alpha`
    pub coupling_j: f64,
    /// `r_i^beta * r_j^alpha`
    pub bound: f64,
}

impl OvalParams {
    /// `(|a_ii - z| - r_i^alpha)(|a_jj - z| - r_j^beta)` from precomputed distances.
    #[inline]
    fn product(&self, dist_i: f64, dist_j: f64) -> f64 {
        (dist_i - self.radius_i) * (dist_j - self.radius_j)
    }

    /// The product inequality alone, with no disk clause.
    #[inline]
    pub fn inequality_holds(&self, z: Complex64) -> bool {
        self.product((self.center_i - z).norm(), (self.center_j - z).norm()) <= self.bound
    }
}

/// One open exclusion set `(|z - c1| + o1)(|z - c2| + o2) < bound`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExclusionSet {
    pub first_center: Complex64,
    pub first_offset: f64,
    pub second_center: Complex64,
    pub second_offset: f64,
    pub bound: f64,
    /// `bound <= first_offset * second_offset`: the left side can never drop below the bound.
    pub empty: bool,
}

impl ExclusionSet {
    fn new(
        first_center: Complex64,
        first_offset: f64,
        second_center: Complex64,
        second_offset: f64,
        bound: f64,
    ) -> Self {
        Self {
            first_center,
            first_offset,
            second_center,
            second_offset,
            bound,
            empty: bound <= first_offset * second_offset,
        }
    }

    #[inline]
    fn contains_with(&self, dist_first: f64, dist_second: f64) -> bool {
        !self.empty && (dist_first + self.first_offset) * (dist_second + self.second_offset) < self.bound
    }

    #[inline]
    pub fn contains(&self, z: Complex64) -> bool {
        self.contains_with((z - self.first_center).norm(), (z - self.second_center).norm())
    }
}

/// Both exclusion sets attached to `(i, j)`.
///
/// `tilde`: `(|z - a_ii| + r_i^j)(|z - a_jj| + r_j^beta) < |a_ij| (2|a_ji| - r_j^alpha)`,
/// `hat`: `(|z - a_jj| + r_j^i)(|z - a_ii| + r_i^alpha) < |a_ji| (2|a_ij| - r_i^beta)`,
/// where `r_i^j` is row `i` summed over every column except `i` and `j`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExclusionParams {
    pub i: usize,
    pub j: usize,
    pub tilde: ExclusionSet,
    pub hat: ExclusionSet,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PairRegion {
    pub oval: OvalParams,
    pub exclusion: ExclusionParams,
}

/// Which half of the Farid-type comparison region is used for the alpha disks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FaridVariant {
    /// Intersection of the alpha disks, as printed.
    Intersection,
    /// Union of the alpha disks.
    Union,
}

/// Named composite regions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RegionKind {
    /// The alpha-beta region built from disks and ovals.
    G,
    /// `G` with the per-pair exclusion sets removed.
    E,
    /// Classical row Gershgorin disks.
    Gershgorin,
    Farid,
    FaridUnion,
}

impl RegionKind {
    pub fn name(self) -> &'static str {
        match self {
            RegionKind::G => "G",
            RegionKind::E => "E",
            RegionKind::Gershgorin => "gershgorin",
            RegionKind::Farid => "farid",
            RegionKind::FaridUnion => "farid_union",
        }
    }
}

/// Per-pair flags inside a [`MembershipReport`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairFlags {
    pub i: usize,
    pub j: usize,
    pub oval_inequality: bool,
    pub in_g_ij: bool,
    pub in_e_tilde: bool,
    pub in_e_hat: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MembershipReport {
    pub point: Complex64,
    /// `(i, inside)` for every `i` in alpha.
    pub alpha_disks: Vec<(usize, bool)>,
    /// `(j, inside)` for every `j` in beta.
    pub beta_disks: Vec<(usize, bool)>,
    pub pairs: Vec<PairFlags>,
    pub in_g: bool,
    pub in_e: bool,
    pub in_gershgorin: bool,
    pub in_farid: bool,
    pub in_farid_union: bool,
}

const INLINE_DIM: usize = 32;

/// Precomputed region constants for one matrix and one partition.
#[derive(Clone, Debug)]
pub struct Regions {
    part: IndexPartition,
    centers: Vec<Complex64>,
    alpha_disks: Vec<Disk>,
    beta_disks: Vec<Disk>,
    gershgorin: Vec<Disk>,
    pairs: Vec<PairRegion>,
    /// Position of each index within its own side.
    position: Vec<usize>,
    /// `max(1, |A|_F)`, the unit for [`Regions::in_e_loose`].
    scale: f64,
}

impl Regions {
    pub fn new(a: &ComplexMatrix, part: &IndexPartition) -> Result<Self> {
        let sums = SumProfile::new(a, part)?;
        let centers = a.diagonal();
        let disk = |k: usize, radius: f64, side| Disk {
            center: centers[k],
            radius,
            owner: k,
            side,
        };
        let alpha_disks = part
            .alpha()
            .iter()
            .map(|&i| disk(i, sums.row_alpha[i], Side::Alpha))
            .collect();
        let beta_disks = part
            .beta()
            .iter()
            .map(|&j| disk(j, sums.row_beta[j], Side::Beta))
            .collect();
        let gershgorin = (0..a.dim()).map(|k| disk(k, sums.row[k], part.side(k))).collect();

        let mut pairs = Vec::with_capacity(part.alpha().len() * part.beta().len());
        for (i, j) in part.pairs() {
            let oval = OvalParams {
                i,
                j,
                center_i: centers[i],
                center_j: centers[j],
                radius_i: sums.row_alpha[i],
                radius_j: sums.row_beta[j],
                coupling_i: sums.row_beta[i],
                coupling_j: sums.row_alpha[j],
                bound: sums.row_beta[i] * sums.row_alpha[j],
            };
            let a_ij = a.get(i, j).norm();
            let a_ji = a.get(j, i).norm();
            let tilde = ExclusionSet::new(
                centers[i],
                deleted_pair_row_sum(a, i, j)?,
                centers[j],
                sums.row_beta[j],
                a_ij * (2.0 * a_ji - sums.row_alpha[j]),
            );
            let hat = ExclusionSet::new(
                centers[j],
                deleted_pair_row_sum(a, j, i)?,
                centers[i],
                sums.row_alpha[i],
                a_ji * (2.0 * a_ij - sums.row_beta[i]),
            );
            pairs.push(PairRegion {
                oval,
                exclusion: ExclusionParams { i, j, tilde, hat },
            });
        }

        let mut position = vec![0; a.dim()];
        for (k, &i) in part.alpha().iter().enumerate() {
            position[i] = k;
        }
        for (k, &j) in part.beta().iter().enumerate() {
            position[j] = k;
        }

        Ok(Self {
            part: part.clone(),
            centers,
            alpha_disks,
            beta_disks,
            gershgorin,
            pairs,
            position,
            scale: a.frobenius_norm().max(1.0),
        })
    }

    pub fn partition(&self) -> &IndexPartition {
        &self.part
    }

    pub fn alpha_disks(&self) -> &[Disk] {
        &self.alpha_disks
    }

    pub fn beta_disks(&self) -> &[Disk] {
        &self.beta_disks
    }

    pub fn gershgorin_disks(&self) -> &[Disk] {
        &self.gershgorin
    }

    pub fn pairs(&self) -> &[PairRegion] {
        &self.pairs
    }

    fn expect_side(&self, k: usize, side: Side) -> Result<()> {
        if k >= self.part.n() {
            return Err(Error::IndexOutOfRange {
                index: k + 1,
                n: self.part.n(),
            });
        }
        if self.part.side(k) != side {
            return Err(Error::WrongSide {
                index: k + 1,
                side: side.name(),
            });
        }
        Ok(())
    }

    /// Pair constants for `i` in alpha, `j` in beta.
    pub fn pair(&self, i: usize, j: usize) -> Result<&PairRegion> {
        self.expect_side(i, Side::Alpha)?;
        self.expect_side(j, Side::Beta)?;
        Ok(&self.pairs[self.position[i] * self.beta_disks.len() + self.position[j]])
    }

    pub fn in_alpha_disk(&self, i: usize, z: Complex64) -> Result<bool> {
        self.expect_side(i, Side::Alpha)?;
        Ok(self.alpha_disks[self.position[i]].contains(z))
    }

    pub fn in_beta_disk(&self, j: usize, z: Complex64) -> Result<bool> {
        self.expect_side(j, Side::Beta)?;
        Ok(self.beta_disks[self.position[j]].contains(z))
    }

    /// `z` outside disk `i` and disk `j`, and inside the oval product inequality.
    pub fn in_pair_oval(&self, i: usize, j: usize, z: Complex64) -> Result<bool> {
        let pair = self.pair(i, j)?;
        let disk_i = self.alpha_disks[self.position[i]];
        let disk_j = self.beta_disks[self.position[j]];
        Ok(!disk_i.contains(z) && !disk_j.contains(z) && pair.oval.inequality_holds(z))
    }

    /// The oval product inequality without the disk clause.
    pub fn in_v(&self, i: usize, j: usize, z: Complex64) -> Result<bool> {
        Ok(self.pair(i, j)?.oval.inequality_holds(z))
    }

    pub fn in_e_tilde(&self, i: usize, j: usize, z: Complex64) -> Result<bool> {
        Ok(self.pair(i, j)?.exclusion.tilde.contains(z))
    }

    pub fn in_e_hat(&self, i: usize, j: usize, z: Complex64) -> Result<bool> {
        Ok(self.pair(i, j)?.exclusion.hat.contains(z))
    }

    /// Runs `f` with `|a_kk - z|` for every `k`.
    #[inline]
    fn with_distances<T>(&self, z: Complex64, f: impl FnOnce(&[f64]) -> T) -> T {
        let n = self.centers.len();
        if n <= INLINE_DIM {
            let mut buf = [0.0; INLINE_DIM];
            for (d, c) in buf.iter_mut().zip(&self.centers) {
                *d = (c - z).norm();
            }
            f(&buf[..n])
        } else {
            let buf: Vec<f64> = self.centers.iter().map(|c| (c - z).norm()).collect();
            f(&buf)
        }
    }

    #[inline]
    fn in_any_disk(&self, dist: &[f64]) -> bool {
        self.alpha_disks
            .iter()
            .chain(&self.beta_disks)
            .any(|d| dist[d.owner] <= d.radius)
    }

    pub fn in_g(&self, z: Complex64) -> bool {
        self.with_distances(z, |dist| {
            self.in_any_disk(dist)
                || self
                    .pairs
                    .iter()
                    .any(|p| p.oval.product(dist[p.oval.i], dist[p.oval.j]) <= p.oval.bound)
        })
    }

    /// Disks first, then any oval whose point is not in both exclusion sets.
    pub fn in_e(&self, z: Complex64) -> bool {
        self.with_distances(z, |dist| {
            self.in_any_disk(dist)
                || self.pairs.iter().any(|p| {
                    let (i, j) = (p.oval.i, p.oval.j);
                    p.oval.product(dist[i], dist[j]) <= p.oval.bound
                        && !(p.exclusion.tilde.contains_with(dist[i], dist[j])
                            && p.exclusion.hat.contains_with(dist[j], dist[i]))
                })
        })
    }

    /// `E` with every inequality loosened by `eta * s` (disks) or `eta * s^2`
    /// (products), `s = max(1, |A|_F)`: closed tests grow, exclusions shrink.
    ///
    /// Not a region predicate. It exists to accept computed eigenvalues that
    /// sit on a boundary in exact arithmetic, such as both eigenvalues of a
    /// 2x2 matrix, whose `E` away from the disks is a single level curve.
    pub fn in_e_loose(&self, z: Complex64, eta: f64) -> bool {
        let (lin, quad) = (eta * self.scale, eta * self.scale * self.scale);
        self.with_distances(z, |dist| {
            self.alpha_disks
                .iter()
                .chain(&self.beta_disks)
                .any(|d| dist[d.owner] <= d.radius + lin)
                || self.pairs.iter().any(|p| {
                    let (i, j) = (p.oval.i, p.oval.j);
                    let (t, h) = (&p.exclusion.tilde, &p.exclusion.hat);
                    p.oval.product(dist[i], dist[j]) <= p.oval.bound + quad
                        && !((dist[i] + t.first_offset) * (dist[j] + t.second_offset) < t.bound - quad
                            && (dist[j] + h.first_offset) * (dist[i] + h.second_offset) < h.bound - quad)
                })
        })
    }

    pub fn in_farid(&self, z: Complex64, variant: FaridVariant) -> bool {
        self.with_distances(z, |dist| {
            let mut alpha = self.alpha_disks.iter().map(|d| dist[d.owner] <= d.radius);
            let disks = match variant {
                FaridVariant::Intersection => alpha.all(|x| x),
                FaridVariant::Union => alpha.any(|x| x),
            };
            disks
                || self
                    .pairs
                    .iter()
                    .any(|p| p.oval.product(dist[p.oval.i], dist[p.oval.j]) <= p.oval.bound)
        })
    }

    pub fn in_gershgorin(&self, z: Complex64) -> bool {
        self.gershgorin.iter().any(|d| d.contains(z))
    }

    pub fn contains(&self, kind: RegionKind, z: Complex64) -> bool {
        match kind {
            RegionKind::G => self.in_g(z),
            RegionKind::E => self.in_e(z),
            RegionKind::Gershgorin => self.in_gershgorin(z),
            RegionKind::Farid => self.in_farid(z, FaridVariant::Intersection),
            RegionKind::FaridUnion => self.in_farid(z, FaridVariant::Union),
        }
    }

    pub fn membership_report(&self, z: Complex64) -> MembershipReport {
        let alpha_disks: Vec<(usize, bool)> = self.alpha_disks.iter().map(|d| (d.owner, d.contains(z))).collect();
        let beta_disks: Vec<(usize, bool)> = self.beta_disks.iter().map(|d| (d.owner, d.contains(z))).collect();
        let pairs: Vec<PairFlags> = self
            .pairs
            .iter()
            .map(|p| {
                let (i, j) = (p.oval.i, p.oval.j);
                let oval_inequality = p.oval.inequality_holds(z);
                PairFlags {
                    i,
                    j,
                    oval_inequality,
                    in_g_ij: oval_inequality && !alpha_disks[self.position[i]].1 && !beta_disks[self.position[j]].1,
                    in_e_tilde: p.exclusion.tilde.contains(z),
                    in_e_hat: p.exclusion.hat.contains(z),
                }
            })
            .collect();
        let in_disks = alpha_disks.iter().chain(&beta_disks).any(|d| d.1);
        let in_g = in_disks || pairs.iter().any(|p| p.in_g_ij);
        let in_e = in_disks || pairs.iter().any(|p| p.in_g_ij && !(p.in_e_tilde && p.in_e_hat));
        let any_v = pairs.iter().any(|p| p.oval_inequality);
        MembershipReport {
            point: z,
            in_farid: alpha_disks.iter().all(|d| d.1) || any_v,
            in_farid_union: alpha_disks.iter().any(|d| d.1) || any_v,
            alpha_disks,
            beta_disks,
            pairs,
            in_g,
            in_e,
            in_gershgorin: self.in_gershgorin(z),
        }
    }
}

pub fn in_alpha_disk(a: &ComplexMatrix, part: &IndexPartition, i: usize, z: Complex64) -> Result<bool> {
    Regions::new(a, part)?.in_alpha_disk(i, z)
}

pub fn in_beta_disk(a: &ComplexMatrix, part: &IndexPartition, j: usize, z: Complex64) -> Result<bool> {
    Regions::new(a, part)?.in_beta_disk(j, z)
}

pub fn in_pair_oval(a: &ComplexMatrix, part: &IndexPartition, i: usize, j: usize, z: Complex64) -> Result<bool> {
    Regions::new(a, part)?.in_pair_oval(i, j, z)
}

pub fn in_v(a: &ComplexMatrix, part: &IndexPartition, i: usize, j: usize, z: Complex64) -> Result<bool> {
    Regions::new(a, part)?.in_v(i, j, z)
}

pub fn in_e_tilde(a: &ComplexMatrix, part: &IndexPartition, i: usize, j: usize, z: Complex64) -> Result<bool> {
    Regions::new(a, part)?.in_e_tilde(i, j, z)
}

pub fn in_e_hat(a: &ComplexMatrix, part: &IndexPartition, i: usize, j: usize, z: Complex64) -> Result<bool> {
    Regions::new(a, part)?.in_e_hat(i, j, z)
}

pub fn in_g_region(a: &ComplexMatrix, part: &IndexPartition, z: Complex64) -> Result<bool> {
    Ok(Regions::new(a, part)?.in_g(z))
}

pub fn in_e_region(a: &ComplexMatrix, part: &IndexPartition, z: Complex64) -> Result<bool> {
    Ok(Regions::new(a, part)?.in_e(z))
}

pub fn in_farid_region(a: &ComplexMatrix, part: &IndexPartition, z: Complex64, variant: FaridVariant) -> Result<bool> {
    Ok(Regions::new(a, part)?.in_farid(z, variant))
}

/// `z` lies in some classical row Gershgorin disk of `a`.
pub fn in_gershgorin(a: &ComplexMatrix, z: Complex64) -> bool {
    let n = a.dim();
    (0..n).any(|i| {
        let radius = crate::matrix::compensated_sum((0..n).filter(|&j| j != i).map(|j| a.get(i, j).norm()));
        (a.get(i, i) - z).norm() <= radius
    })
}

pub fn membership_report(a: &ComplexMatrix, part: &IndexPartition, z: Complex64) -> Result<MembershipReport> {
    Ok(Regions::new(a, part)?.membership_report(z))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample4() -> ComplexMatrix {
        ComplexMatrix::from_real_rows(&[
            [1.0, -0.01, 0.0, 7.0],
            [0.1, 0.9, -1.1, 0.3],
            [-0.11, 0.2, 0.9, 0.2],
            [2.0, 0.4, -0.1, 1.1],
        ])
        .unwrap()
    }

    fn part(alpha: &[usize]) -> IndexPartition {
        IndexPartition::from_one_based(4, alpha).unwrap()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    const EIGS: [(f64, f64); 4] = [(4.8161, 0.0), (-2.6994, 0.0), (0.8917, 0.4921), (0.8917, -0.4921)];

    #[test]
    fn alpha_disk_cases() {
        let a = sample4();
        let r = Regions::new(&a, &part(&[1, 3])).unwrap();
        assert!(r.in_alpha_disk(2, c(0.9, 0.0)).unwrap());
        assert!(matches!(r.in_alpha_disk(1, c(0.9, 0.0)), Err(Error::WrongSide { .. })));
        assert!(!r.in_beta_disk(1, c(4.8161, 0.0)).unwrap());

        let single = Regions::new(&a, &part(&[2])).unwrap();
        assert!(single.in_alpha_disk(1, c(0.9, 0.0)).unwrap());
        assert!(!single.in_alpha_disk(1, c(0.9 + 1e-12, 0.0)).unwrap());
    }

    #[test]
    fn beta_disk_cases() {
        let a = sample4();
        let fig2 = Regions::new(&a, &part(&[1, 4])).unwrap();
        assert!(fig2.in_beta_disk(1, c(0.8917, 0.4921)).unwrap());
        let fig1 = Regions::new(&a, &part(&[1, 3])).unwrap();
        assert!(!fig1.in_beta_disk(3, c(-2.6994, 0.0)).unwrap());
        assert!(fig1.in_beta_disk(3, c(1.1, 0.0)).unwrap());
        assert!(fig1.in_alpha_disk(3, c(0.0, 0.0)).is_err());
    }

    #[test]
    fn pair_oval_cases() {
        let a = sample4();
        let r = Regions::new(&a, &part(&[1, 2])).unwrap();
        let z = c(4.8161, 0.0);
        let hits: Vec<_> = [(0, 2), (0, 3), (1, 2), (1, 3)]
            .iter()
            .filter(|&&(i, j)| r.in_pair_oval(i, j, z).unwrap())
            .collect();
        assert!(!hits.is_empty());
        // Deep inside alpha disk 2 (radius 0.1 around 0.9).
        assert!(!r.in_pair_oval(1, 2, c(0.9, 0.0)).unwrap());
        assert!(r.in_pair_oval(2, 0, z).is_err());

        // Zero coupling: r_1^beta = 0 when row 1 has no beta mass.
        let d = ComplexMatrix::from_real_rows(&[[1.0, 0.0], [1.0, 3.0]]).unwrap();
        let rd = Regions::new(&d, &IndexPartition::from_alpha(2, [0]).unwrap()).unwrap();
        for k in 0..50 {
            let z = c(-3.0 + 0.17 * k as f64, 0.3 * (k % 7) as f64 - 1.0);
            assert!(!rd.in_pair_oval(0, 1, z).unwrap());
        }
    }

    #[test]
    fn v_form_cases() {
        let a = sample4();
        let r = Regions::new(&a, &part(&[1, 3])).unwrap();
        // 9 * 8.8 = 79.2 against 7.01 * 0.21.
        assert!(!r.in_v(0, 1, c(10.0, 0.0)).unwrap());
        // Inside alpha disk 3 (center 0.9, radius 0.11), outside beta disk 4.
        assert!(r.in_v(2, 3, c(0.9, 0.05)).unwrap());

        let z0 = ComplexMatrix::from_real_rows(&[[2.0, 0.0], [1.0, 5.0]]).unwrap();
        let rz = Regions::new(&z0, &IndexPartition::from_alpha(2, [0]).unwrap()).unwrap();
        assert!(rz.in_v(0, 1, c(2.0, 0.0)).unwrap());
    }

    #[test]
    fn exclusion_sets_with_nonpositive_bound_are_empty() {
        let a = sample4();
        let r = Regions::new(&a, &part(&[1, 4])).unwrap();
        for p in r.pairs() {
            assert!(p.exclusion.tilde.empty && p.exclusion.hat.empty);
        }
        // pair (1,3) has |a_13| = 0, so tilde's bound is zero
        let r12 = Regions::new(&a, &part(&[1, 2])).unwrap();
        let p13 = r12.pair(0, 2).unwrap();
        assert_eq!(p13.exclusion.tilde.bound, 0.0);
        assert!(!r12.in_e_tilde(0, 2, c(1.0, 0.0)).unwrap());
        assert!(!r12.in_e_hat(0, 2, c(1.0, 0.0)).unwrap());
    }

    #[test]
    fn sample4_eigenvalues_escape_one_exclusion_set() {
        let a = sample4();
        let r = Regions::new(&a, &part(&[1, 2])).unwrap();
        let z = c(4.8161, 0.0);
        for p in r.pairs() {
            let (i, j) = (p.oval.i, p.oval.j);
            assert!(!(r.in_e_tilde(i, j, z).unwrap() && r.in_e_hat(i, j, z).unwrap()));
        }
    }

    #[test]
    fn hat_is_tilde_of_transpose_with_sides_swapped() {
        let a = sample4();
        let p = part(&[1, 2]);
        let r = Regions::new(&a, &p).unwrap();
        // Symmetric matrix so the row sums of A and A^T agree.
        let sym = ComplexMatrix::from_real_rows(&[
            [1.0, 0.5, 0.2, 3.0],
            [0.5, 0.9, -1.1, 0.3],
            [0.2, -1.1, 0.9, 0.2],
            [3.0, 0.3, 0.2, 1.1],
        ])
        .unwrap();
        let rs = Regions::new(&sym, &p).unwrap();
        let rt = Regions::new(&sym.transpose(), &p.swapped()).unwrap();
        for k in 0..200 {
            let z = c(-3.0 + 0.05 * k as f64, 0.5 * ((k % 9) as f64 - 4.0));
            for (i, j) in p.pairs() {
                assert_eq!(rs.in_e_hat(i, j, z).unwrap(), rt.in_e_tilde(j, i, z).unwrap());
            }
        }
        assert!(r.in_e_hat(2, 0, c(0.0, 0.0)).is_err());
    }

    #[test]
    fn composite_regions_on_sample4_matrix() {
        let a = sample4();
        for p in crate::matrix::enumerate_partitions(4).unwrap() {
            let r = Regions::new(&a, &p).unwrap();
            for &(re, im) in &EIGS {
                assert!(r.in_g(c(re, im)), "{p} misses {re}+{im}i");
            }
            for k in 0..4 {
                assert!(r.in_g(a.get(k, k)));
            }
            let bound: f64 = (0..4)
                .map(|i| a.get(i, i).norm() + crate::matrix::deleted_row_sum(&a, i).unwrap())
                .fold(0.0, f64::max);
            assert!(!r.in_g(c(bound * 1.5, bound)));
            assert!(!r.in_e(c(-bound * 2.0, 0.0)));
        }
        let r = Regions::new(&a, &part(&[1, 2])).unwrap();
        for &(re, im) in &EIGS {
            assert!(r.in_e(c(re, im)));
        }
    }

    #[test]
    fn farid_cases() {
        let a = sample4();
        let r = Regions::new(&a, &part(&[1, 3])).unwrap();
        // alpha disks: |z-1| <= 0.01 and |z-0.9| <= 0.11 meet nowhere, so check V route:
        // inside beta disk 2 only.
        let z = c(0.9, 0.25);
        assert!(r.in_beta_disk(1, z).unwrap());
        assert!(!r.in_alpha_disk(0, z).unwrap() && !r.in_alpha_disk(2, z).unwrap());
        assert!(r.in_farid(z, FaridVariant::Intersection));

        let two = ComplexMatrix::from_real_rows(&[[0.0, 1.0, 0.5], [1.0, 0.0, 0.0], [0.0, 0.0, 9.0]]).unwrap();
        let r2 = Regions::new(&two, &IndexPartition::from_alpha(3, [0, 1]).unwrap()).unwrap();
        assert!(r2.in_farid(c(0.0, 0.0), FaridVariant::Intersection));
    }

    #[test]
    fn gershgorin_cases() {
        let a = sample4();
        assert!(in_gershgorin(&a, c(1.1, 0.0)));
        let d = ComplexMatrix::from_real_rows(&[[1.0, 0.0], [0.0, 2.0]]).unwrap();
        assert!(!in_gershgorin(&d, c(1.5, 0.0)));
        for &(re, im) in &EIGS {
            assert!(in_gershgorin(&a, c(re, im)));
        }
    }

    #[test]
    fn report_matches_predicates() {
        let a = sample4();
        let p = part(&[1, 2]);
        let r = Regions::new(&a, &p).unwrap();
        let rep = r.membership_report(c(0.8917, 0.4921));
        assert!(rep.in_e && rep.in_g);
        let far = r.membership_report(c(100.0, 100.0));
        assert!(!far.in_g && !far.in_e && !far.in_gershgorin && !far.in_farid && !far.in_farid_union);
        assert!(far
            .pairs
            .iter()
            .all(|f| !f.oval_inequality && !f.in_e_tilde && !f.in_e_hat));
        for k in 0..400 {
            let z = c(-7.0 + 0.035 * k as f64, 3.0 * ((k * 37 % 101) as f64 / 50.0 - 1.0));
            let rep = r.membership_report(z);
            assert_eq!(rep.in_g, r.in_g(z));
            assert_eq!(rep.in_e, r.in_e(z));
            assert_eq!(rep.in_farid, r.in_farid(z, FaridVariant::Intersection));
            assert_eq!(rep.in_farid_union, r.in_farid(z, FaridVariant::Union));
            assert!(!rep.in_e || rep.in_g);
            for f in &rep.pairs {
                assert_eq!(f.in_g_ij, r.in_pair_oval(f.i, f.j, z).unwrap());
            }
        }
    }

    #[test]
    fn free_functions_agree() {
        let a = sample4();
        let p = part(&[1, 3]);
        let z = c(0.5, 0.5);
        assert_eq!(in_g_region(&a, &p, z).unwrap(), Regions::new(&a, &p).unwrap().in_g(z));
        assert!(in_alpha_disk(&a, &p, 1, z).is_err());
        assert!(membership_report(&a, &IndexPartition::from_alpha(3, [0]).unwrap(), z).is_err());
    }
}
