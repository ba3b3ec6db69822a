//! The intersection and union readings of the Farid-type region against G.
//!
//! cargo run --release --example farid_comparison

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spectral_fence::{area, bounding_box, enumerate_partitions, rasterize, GridSpec, RegionKind, Regions};

fn main() -> spectral_fence::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for n in 3..=5 {
        let a = spectral_fence::sample::unit_disk_matrix(&mut rng, n);
        let spec = GridSpec::square(bounding_box(&a, 0.05)?, 256)?;
        println!("random {n}x{n}");
        for p in enumerate_partitions(n)?.take(4) {
            let r = Regions::new(&a, &p)?;
            let g = rasterize(|z| r.contains(RegionKind::G, z), &spec);
            let cells = |kind| rasterize(|z| r.contains(kind, z), &spec);
            let (inter, union) = (cells(RegionKind::Farid), cells(RegionKind::FaridUnion));
            println!(
                "  {:<22} G {:>7.4}  intersection {:>7.4} ({} cells differ)  union {:>7.4} ({} cells differ)",
                p.to_string(),
                area(&g).value,
                area(&inter).value,
                g.symmetric_difference_count(&inter)?,
                area(&union).value,
                g.symmetric_difference_count(&union)?
            );
        }
    }
    Ok(())
}
