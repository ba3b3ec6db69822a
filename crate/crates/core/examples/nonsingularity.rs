//! Nonsingularity certificates and why they fail.
//!
//! cargo run --example nonsingularity

use spectral_fence::certificate::certify_any_partition;
use spectral_fence::{corollary_certificate, determinant, Complex64, ComplexMatrix, IndexPartition, Regions};

fn show(name: &str, a: &ComplexMatrix) -> spectral_fence::Result<()> {
    let search = certify_any_partition(a);
    match &search.certificate {
        Some(c) => {
            println!("{name}: nonsingular, certified by {}", c.partition);
            for p in &c.pairs {
                println!(
                    "  pair ({},{}): (III) by {:?}, (IV) by {:?}",
                    p.i + 1,
                    p.j + 1,
                    p.iii_by().map(|d| d.name()),
                    p.iv_by().map(|d| d.name())
                );
            }
        }
        None => {
            println!("{name}: no certificate among {} partitions", search.candidates);
            let part = IndexPartition::from_alpha(a.dim(), [0])?;
            let c = corollary_certificate(a, &part)?;
            println!("  {}: {}", part, c.first_failure().unwrap_or_default());
        }
    }
    // The certificate says exactly that the origin is outside E.
    if let Some(c) = &search.certificate {
        assert!(!Regions::new(a, &c.partition)?.in_e(Complex64::new(0.0, 0.0)));
    }
    println!("  |det| = {:.4e}", determinant(a).norm());
    Ok(())
}

fn main() -> spectral_fence::Result<()> {
    let dominant = ComplexMatrix::from_rows(&[
        [
            Complex64::new(4.0, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(0.5, 0.0),
        ],
        [
            Complex64::new(0.2, 0.0),
            Complex64::new(0.0, 3.0),
            Complex64::new(1.0, 0.0),
        ],
        [
            Complex64::new(1.0, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(-5.0, 0.0),
        ],
    ])?;
    show("diagonally dominant", &dominant)?;

    // Row 2 is not dominant; the partition split still certifies it.
    let split = ComplexMatrix::from_real_rows(&[[5.0, 1.0, 1.0], [0.5, 1.0, 1.5], [0.5, 0.2, 4.0]])?;
    show("not strictly dominant", &split)?;

    show("rank one", &ComplexMatrix::from_real_rows(&[[1.0, 1.0], [1.0, 1.0]])?)?;
    show(
        "4x4 sample",
        &ComplexMatrix::from_real_rows(&[
            [1.0, -0.01, 0.0, 7.0],
            [0.1, 0.9, -1.1, 0.3],
            [-0.11, 0.2, 0.9, 0.2],
            [2.0, 0.4, -0.1, 1.1],
        ])?,
    )
}
