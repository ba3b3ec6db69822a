//! Area of E for every partition of a matrix, smallest first.
//!
//! cargo run --release --example partition_search [-- MATRIX_FILE]

use std::path::PathBuf;

use rayon::prelude::*;
use spectral_fence::io::{parse_matrix, FormatHint};
use spectral_fence::{area, bounding_box, enumerate_partitions, rasterize, GridSpec, Regions};

fn main() -> spectral_fence::Result<()> {
    let path = std::env::args_os()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/sample4.txt")));
    let a = parse_matrix(&std::fs::read(&path)?, FormatHint::Auto)?.matrix;
    let spec = GridSpec::square(bounding_box(&a, 0.05)?, 400)?;

    let parts: Vec<_> = enumerate_partitions(a.dim())?.collect();
    let mut rows = parts
        .par_iter()
        .map(|p| {
            let r = Regions::new(&a, p)?;
            let e = area(&rasterize(|z| r.in_e(z), &spec)).value;
            let g = area(&rasterize(|z| r.in_g(z), &spec)).value;
            Ok((p.clone(), e, g))
        })
        .collect::<spectral_fence::Result<Vec<_>>>()?;
    rows.sort_by(|x, y| x.1.total_cmp(&y.1));

    let gershgorin = area(&rasterize(|z| spectral_fence::regions::in_gershgorin(&a, z), &spec)).value;
    println!("Gershgorin area {gershgorin:.4}");
    println!("{:<26} {:>10} {:>10} {:>7}", "partition", "E", "G", "E/G");
    for (p, e, g) in &rows {
        println!("{:<26} {e:>10.4} {g:>10.4} {:>7.3}", p.to_string(), e / g);
    }
    Ok(())
}
