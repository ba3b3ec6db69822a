//! Eigenvalues with residuals, trace and determinant cross-checks.
//!
//! cargo run --example eigen_spectrum [-- MATRIX_FILE]

use std::path::PathBuf;

use spectral_fence::io::{format_complex, parse_matrix, FormatHint};
use spectral_fence::{determinant, eigenvalues_default, residual};

fn main() -> spectral_fence::Result<()> {
    let path = std::env::args_os()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/sample4.txt")));
    let a = parse_matrix(&std::fs::read(&path)?, FormatHint::Auto)?.matrix;

    let s = eigenvalues_default(&a)?;
    println!(
        "{} eigenvalues, converged {} after {} sweeps",
        s.len(),
        s.converged,
        s.iterations
    );
    for (l, r) in s.eigenvalues.iter().zip(&s.residuals) {
        println!("  {:<44} residual {r:.1e}", format_complex(*l));
    }

    let trace = a.trace();
    let det = determinant(&a);
    println!("sum of eigenvalues     {}", format_complex(s.sum()));
    println!("trace                  {}", format_complex(trace));
    println!("product of eigenvalues {}", format_complex(s.product()));
    println!("determinant            {}", format_complex(det));

    // The residual of a rounded value is small but no longer at roundoff.
    let rounded = spectral_fence::Complex64::new((s.eigenvalues[0].re * 1e4).round() / 1e4, 0.0);
    println!("residual at {}: {:.2e}", format_complex(rounded), residual(&a, rounded));
    Ok(())
}
