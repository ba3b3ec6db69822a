//! Rasterize G and E and write PGM, CSV and an SVG overlay.
//!
//! cargo run --release --example raster_export [-- OUT_DIR [ALPHA]]

use std::fs::File;
use std::path::PathBuf;

use spectral_fence::io::parse_partition;
use spectral_fence::raster::{emit, write_svg, ImageFormat, Overlay, SvgLayer};
use spectral_fence::{area, bounding_box, eigenvalues_default, is_subset, rasterize, ComplexMatrix, GridSpec, Regions};

fn main() -> spectral_fence::Result<()> {
    let mut args = std::env::args().skip(1);
    let out = PathBuf::from(args.next().unwrap_or_else(|| "raster_out".into()));
    let alpha = args.next().unwrap_or_else(|| "1,2".into());
    std::fs::create_dir_all(&out)?;

    let a = ComplexMatrix::from_real_rows(&[
        [1.0, -0.01, 0.0, 7.0],
        [0.1, 0.9, -1.1, 0.3],
        [-0.11, 0.2, 0.9, 0.2],
        [2.0, 0.4, -0.1, 1.1],
    ])?;
    let part = parse_partition(&alpha, a.dim())?;
    let regions = Regions::new(&a, &part)?;
    let spec = GridSpec::square(bounding_box(&a, 0.05)?, 600)?;

    let g = rasterize(|z| regions.in_g(z), &spec);
    let e = rasterize(|z| regions.in_e(z), &spec);
    println!("{part}: area G {:.4}, area E {:.4}", area(&g).value, area(&e).value);
    println!("E inside G: {}", is_subset(&e, &g)?.holds);

    emit(
        &g,
        ImageFormat::Pgm,
        &Overlay::default(),
        &mut File::create(out.join("G.pgm"))?,
    )?;
    emit(
        &e,
        ImageFormat::Pgm,
        &Overlay::default(),
        &mut File::create(out.join("E.pgm"))?,
    )?;
    emit(
        &e,
        ImageFormat::Csv,
        &Overlay::default(),
        &mut File::create(out.join("E.csv"))?,
    )?;

    let overlay = Overlay {
        disks: regions
            .alpha_disks()
            .iter()
            .chain(regions.beta_disks())
            .copied()
            .collect(),
        markers: eigenvalues_default(&a)?.eigenvalues,
    };
    let layers = [
        SvgLayer {
            grid: &g,
            fill: "#aab7c4",
            label: "G",
        },
        SvgLayer {
            grid: &e,
            fill: "#1f4e79",
            label: "E",
        },
    ];
    let bytes = write_svg(&layers, &overlay, &mut File::create(out.join("overlay.svg"))?)?;
    println!("wrote {} ({bytes} bytes of SVG)", out.display());
    Ok(())
}
