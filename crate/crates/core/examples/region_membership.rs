//! Which disks, ovals and exclusion sets a point falls in.
//!
//! cargo run --example region_membership [-- RE IM]

use spectral_fence::io::{format_complex, membership_json};
use spectral_fence::{eigenvalues_default, Complex64, ComplexMatrix, IndexPartition, RegionKind, Regions};

fn main() -> spectral_fence::Result<()> {
    let a = ComplexMatrix::from_real_rows(&[
        [1.0, -0.01, 0.0, 7.0],
        [0.1, 0.9, -1.1, 0.3],
        [-0.11, 0.2, 0.9, 0.2],
        [2.0, 0.4, -0.1, 1.1],
    ])?;
    let part = IndexPartition::from_one_based(4, &[1, 2])?;
    let regions = Regions::new(&a, &part)?;
    println!("{part}");

    for d in regions.alpha_disks().iter().chain(regions.beta_disks()) {
        println!(
            "  {} disk {}: |z - {}| <= {}",
            d.side.name(),
            d.owner + 1,
            format_complex(d.center),
            d.radius
        );
    }
    for p in regions.pairs() {
        let (t, h) = (&p.exclusion.tilde, &p.exclusion.hat);
        println!(
            "  pair ({},{}): oval bound {:.4}, tilde {}, hat {}",
            p.oval.i + 1,
            p.oval.j + 1,
            p.oval.bound,
            if t.empty {
                "empty".to_string()
            } else {
                format!("bound {:.4}", t.bound)
            },
            if h.empty {
                "empty".to_string()
            } else {
                format!("bound {:.4}", h.bound)
            },
        );
    }

    let args: Vec<f64> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let mut points = eigenvalues_default(&a)?.eigenvalues;
    if let [re, im] = args[..] {
        points.insert(0, Complex64::new(re, im));
    } else {
        points.push(Complex64::new(2.0, 0.0));
    }
    for z in points {
        let kinds: Vec<&str> = [RegionKind::G, RegionKind::E, RegionKind::Gershgorin]
            .into_iter()
            .filter(|k| regions.contains(*k, z))
            .map(RegionKind::name)
            .collect();
        println!("{:<42} in {:?}", format_complex(z), kinds);
    }

    let report = regions.membership_report(Complex64::new(2.0, 0.0));
    println!(
        "{}",
        serde_json::to_string_pretty(&membership_json(&report, &part)).unwrap()
    );
    Ok(())
}
