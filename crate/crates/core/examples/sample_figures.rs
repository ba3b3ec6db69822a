//! The 4x4 sample matrix: which beta disks hold eigenvalues, and when E
//! is smaller than G.
//!
//! cargo run --release --example sample_figures

use spectral_fence::io::format_complex;
use spectral_fence::{
    area, bounding_box, eigenvalues_default, rasterize, ComplexMatrix, GridSpec, IndexPartition, Regions,
};

fn main() -> spectral_fence::Result<()> {
    let a = ComplexMatrix::from_real_rows(&[
        [1.0, -0.01, 0.0, 7.0],
        [0.1, 0.9, -1.1, 0.3],
        [-0.11, 0.2, 0.9, 0.2],
        [2.0, 0.4, -0.1, 1.1],
    ])?;
    let spectrum = eigenvalues_default(&a)?.eigenvalues;
    println!(
        "eigenvalues: {}",
        spectrum
            .iter()
            .map(|l| format_complex(*l))
            .collect::<Vec<_>>()
            .join(", ")
    );
    let spec = GridSpec::square(bounding_box(&a, 0.05)?, 800)?;

    for alpha in [[1, 3], [1, 4], [1, 2]] {
        let part = IndexPartition::from_one_based(4, &alpha)?;
        let r = Regions::new(&a, &part)?;
        println!("\n{part}");
        for d in r.beta_disks() {
            let inside: Vec<String> = spectrum
                .iter()
                .filter(|l| d.contains(**l))
                .map(|l| format_complex(*l))
                .collect();
            println!(
                "  beta disk |z - {}| <= {}: holds [{}]",
                format_complex(d.center),
                d.radius,
                inside.join(", ")
            );
        }
        let g = rasterize(|z| r.in_g(z), &spec);
        let e = rasterize(|z| r.in_e(z), &spec);
        println!(
            "  area G {:.4}, area E {:.4}, rasters identical: {}",
            area(&g).value,
            area(&e).value,
            g == e
        );
        println!("  every eigenvalue in E: {}", spectrum.iter().all(|l| r.in_e(*l)));
    }
    Ok(())
}
