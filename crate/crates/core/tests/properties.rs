mod common;

use common::*;
use num_complex::Complex64;
use proptest::prelude::*;
use spectral_fence::io::{parse_matrix, parse_matrix_market, write_dense_text, write_matrix_market, FormatHint};
use spectral_fence::raster::{emit, parse_pgm, ImageFormat, Overlay};
use spectral_fence::regions::in_gershgorin;
use spectral_fence::*;

fn entry() -> impl Strategy<Value = Complex64> {
    (-1.0f64..1.0, -1.0f64..1.0).prop_map(|(re, im)| Complex64::new(re, im))
}

fn matrix(max_n: usize) -> impl Strategy<Value = ComplexMatrix> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(entry(), n * n).prop_map(move |e| ComplexMatrix::from_row_major(n, e).unwrap())
    })
}

fn with_partition(max_n: usize) -> impl Strategy<Value = (ComplexMatrix, IndexPartition)> {
    matrix(max_n).prop_flat_map(|a| {
        let n = a.dim();
        (Just(a), 1u64..(1u64 << n) - 1).prop_map(move |(a, mask)| (a, IndexPartition::from_mask(n, mask).unwrap()))
    })
}

fn point() -> impl Strategy<Value = Complex64> {
    (-4.0f64..4.0, -4.0f64..4.0).prop_map(|(re, im)| Complex64::new(re, im))
}

fn nonzero_scale() -> impl Strategy<Value = Complex64> {
    (0.05f64..5.0, 0.0f64..std::f64::consts::TAU).prop_map(|(r, t)| Complex64::from_polar(r, t))
}

const KINDS: [RegionKind; 5] = [
    RegionKind::G,
    RegionKind::E,
    RegionKind::Gershgorin,
    RegionKind::Farid,
    RegionKind::FaridUnion,
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn partial_sums_add_up((a, p) in with_partition(8)) {
        for i in 0..a.dim() {
            let full = deleted_row_sum(&a, i).unwrap();
            let split = partial_row_sum(&a, i, p.alpha()).unwrap() + partial_row_sum(&a, i, p.beta()).unwrap();
            prop_assert!((full - split).abs() <= 1e-15 * full.max(f64::MIN_POSITIVE));
            let cols = deleted_col_sum(&a, i).unwrap();
            let split = partial_col_sum(&a, i, p.alpha()).unwrap() + partial_col_sum(&a, i, p.beta()).unwrap();
            prop_assert!((cols - split).abs() <= 1e-15 * cols.max(f64::MIN_POSITIVE));
        }
    }

    #[test]
    fn pair_sum_drops_one_entry(a in matrix(7)) {
        let all: Vec<usize> = (0..a.dim()).collect();
        for i in 0..a.dim() {
            for j in (0..a.dim()).filter(|&j| j != i) {
                let expect = partial_row_sum(&a, i, &all).unwrap() - a.get(i, j).norm();
                let got = deleted_pair_row_sum(&a, i, j).unwrap();
                prop_assert!((got - expect).abs() <= 1e-14 * expect.abs().max(1.0));
            }
        }
    }

    #[test]
    fn sums_ignore_phases((a, p) in with_partition(6), phases in proptest::collection::vec(0.0f64..std::f64::consts::TAU, 36)) {
        let n = a.dim();
        let rotated = ComplexMatrix::from_row_major(
            n,
            a.as_row_major().iter().zip(&phases).map(|(z, t)| z * Complex64::from_polar(1.0, *t)).collect(),
        )
        .unwrap();
        for i in 0..n {
            for set in [p.alpha(), p.beta()] {
                let x = partial_row_sum(&a, i, set).unwrap();
                let y = partial_row_sum(&rotated, i, set).unwrap();
                prop_assert!((x - y).abs() <= 1e-15 * x.max(1.0));
            }
        }
    }

    #[test]
    fn e_inside_g((a, p) in with_partition(6), zs in proptest::collection::vec(point(), 64)) {
        let r = Regions::new(&a, &p).unwrap();
        for z in zs {
            prop_assert!(!r.in_e(z) || r.in_g(z));
        }
    }

    #[test]
    fn loose_membership_matches_oracle((a, p) in with_partition(6), zs in proptest::collection::vec(point(), 64), eta in 1e-9f64..1e-2) {
        let r = Regions::new(&a, &p).unwrap();
        for z in zs {
            prop_assert!(!r.in_e(z) || r.in_e_loose(z, eta));
            prop_assert_eq!(r.in_e_loose(z, eta), in_e_slack(&a, &p, z, eta), "{}", z);
        }
    }

    #[test]
    fn spectrum_inside_every_region(a in matrix(6)) {
        let s = eigenvalues_default(&a).unwrap();
        prop_assert!(s.converged);
        for p in enumerate_partitions(a.dim()).unwrap() {
            for l in &s.eigenvalues {
                prop_assert!(in_e_slack(&a, &p, *l, EIGEN_ETA), "{} {}", p, l);
                prop_assert!(Regions::new(&a, &p).unwrap().in_e_loose(*l, EIGEN_ETA));
                prop_assert!(in_e_slack(&a.transpose(), &p, *l, EIGEN_ETA), "transpose {} {}", p, l);
            }
        }
        for l in &s.eigenvalues {
            prop_assert!(in_gershgorin(&a, *l));
        }
    }

    #[test]
    fn exact_predicates_keep_spectrum_for_n_above_two(a in matrix(6).prop_filter("n > 2", |a| a.dim() > 2)) {
        // Away from the 2x2 level-curve case the eigenvalues sit strictly inside.
        let s = eigenvalues_default(&a).unwrap();
        for p in enumerate_partitions(a.dim()).unwrap() {
            let r = Regions::new(&a, &p).unwrap();
            for l in &s.eigenvalues {
                prop_assert!(r.in_e(*l), "{} {}", p, l);
            }
        }
    }

    #[test]
    fn scale_equivariance((a, p) in with_partition(6), cs in nonzero_scale(), zs in proptest::collection::vec(point(), 32)) {
        let base = Regions::new(&a, &p).unwrap();
        let scaled = Regions::new(&a.scaled(cs).unwrap(), &p).unwrap();
        for z in zs {
            for kind in KINDS {
                prop_assert_eq!(base.contains(kind, z), scaled.contains(kind, cs * z), "{:?} at {}", kind, z);
            }
        }
    }

    #[test]
    fn shift_equivariance((a, p) in with_partition(6), t in point(), zs in proptest::collection::vec(point(), 32)) {
        let base = Regions::new(&a, &p).unwrap();
        let shifted = Regions::new(&a.shifted(t).unwrap(), &p).unwrap();
        for z in zs {
            for kind in KINDS {
                prop_assert_eq!(base.contains(kind, z), shifted.contains(kind, z + t), "{:?} at {}", kind, z);
            }
        }
    }

    #[test]
    fn empty_exclusion_sets_stay_empty((a, p) in with_partition(6), zs in proptest::collection::vec(point(), 64)) {
        let r = Regions::new(&a, &p).unwrap();
        for &i in p.alpha() {
            for &j in p.beta() {
                let rij = deleted_pair_row_sum(&a, i, j).unwrap();
                let rjb = partial_row_sum(&a, j, p.beta()).unwrap();
                let rja = partial_row_sum(&a, j, p.alpha()).unwrap();
                let bound = a.get(i, j).norm() * (2.0 * a.get(j, i).norm() - rja);
                if bound <= rij * rjb {
                    for z in &zs {
                        prop_assert!(!r.in_e_tilde(i, j, *z).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn certificate_is_zero_outside_e((a, p) in with_partition(5), boost in 0.0f64..6.0) {
        let n = a.dim();
        let mut e = a.as_row_major().to_vec();
        for i in 0..n {
            e[i * n + i] *= 1.0 + boost;
        }
        let a = ComplexMatrix::from_row_major(n, e).unwrap();
        let cert = corollary_certificate(&a, &p).unwrap();
        let zero = Complex64::new(0.0, 0.0);
        prop_assert_eq!(cert.nonsingular, !Regions::new(&a, &p).unwrap().in_e(zero));
        let scaled = corollary_certificate(&a.scaled(Complex64::new(-0.3, 2.0)).unwrap(), &p).unwrap();
        prop_assert_eq!(cert.nonsingular, scaled.nonsingular);
        if cert.nonsingular {
            prop_assert!(determinant(&a).norm() > 0.0);
            prop_assert!(eigenvalues_default(&a).unwrap().eigenvalues.iter().all(|l| l.norm() > 1e-8));
        }
    }

    #[test]
    fn dense_text_round_trip(a in matrix(6)) {
        let text = write_dense_text(&a);
        let doc = parse_matrix(text.as_bytes(), FormatHint::Auto).unwrap();
        prop_assert_eq!(&doc.matrix, &a);
        let mm = write_matrix_market(&a);
        prop_assert_eq!(&parse_matrix_market(&mm).unwrap(), &a);
    }

    #[test]
    fn union_raster_is_bitwise_or((a, p) in with_partition(5)) {
        let r = Regions::new(&a, &p).unwrap();
        let spec = GridSpec::square(bounding_box(&a, 0.05).unwrap(), 48).unwrap();
        let alpha = rasterize(|z| r.alpha_disks().iter().any(|d| d.contains(z)), &spec);
        let beta = rasterize(|z| r.beta_disks().iter().any(|d| d.contains(z)), &spec);
        let both = rasterize(|z| r.alpha_disks().iter().chain(r.beta_disks()).any(|d| d.contains(z)), &spec);
        prop_assert_eq!(alpha.union(&beta).unwrap(), both);
        let e = rasterize(|z| r.in_e(z), &spec);
        let g = rasterize(|z| r.in_g(z), &spec);
        prop_assert!(area(&e).value <= area(&g).value);
        prop_assert!(is_subset(&e, &g).unwrap().holds);
        let mut bytes = Vec::new();
        emit(&e, ImageFormat::Pgm, &Overlay::default(), &mut bytes).unwrap();
        prop_assert_eq!(parse_pgm(&bytes, spec.bbox).unwrap(), e);
    }

    #[test]
    fn partitions_are_distinct_and_valid(n in 2usize..=10) {
        let all: Vec<IndexPartition> = enumerate_partitions(n).unwrap().collect();
        prop_assert_eq!(all.len(), (1usize << n) - 2);
        let distinct: std::collections::HashSet<Vec<usize>> = all.iter().map(|p| p.alpha().to_vec()).collect();
        prop_assert_eq!(distinct.len(), all.len());
        for p in &all {
            prop_assert!(!p.alpha().is_empty() && !p.beta().is_empty());
            prop_assert_eq!(p.alpha().len() + p.beta().len(), n);
        }
    }
}

#[test]
fn disk_area_refines() {
    for (center, radius) in [(c(0.3, -0.2), 0.5), (c(-1.0, 1.0), 0.2)] {
        let bbox = BoundingBox::new(-2.0, 2.0, -2.0, 2.0).unwrap();
        let coarse = area(&rasterize(
            |z| (z - center).norm() <= radius,
            &GridSpec::square(bbox, 512).unwrap(),
        ))
        .value;
        let fine = area(&rasterize(
            |z| (z - center).norm() <= radius,
            &GridSpec::square(bbox, 1024).unwrap(),
        ))
        .value;
        assert!((coarse - fine).abs() / fine < 0.02, "{coarse} vs {fine}");
    }
}
