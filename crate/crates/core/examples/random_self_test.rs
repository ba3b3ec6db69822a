//! Random matrices: every eigenvalue in E for every partition, E inside G.
//!
//! cargo run --release --example random_self_test [-- COUNT [SEED]]

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spectral_fence::cli::BOUNDARY_ETA;
use spectral_fence::sample::{box_point, unit_disk_matrix};
use spectral_fence::{bounding_box, eigenvalues_default, enumerate_partitions, Regions};

fn main() -> spectral_fence::Result<()> {
    let mut args = std::env::args().skip(1).filter_map(|s| s.parse::<u64>().ok());
    let count = args.next().unwrap_or(200) as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(args.next().unwrap_or(0));

    let (mut exact, mut boundary, mut missed, mut points) = (0, 0, 0, 0);
    for m in 0..count {
        let n = 2 + m % 5;
        let a = unit_disk_matrix(&mut rng, n);
        let spectrum = eigenvalues_default(&a)?;
        let bbox = bounding_box(&a, 0.05)?;
        for p in enumerate_partitions(n)? {
            let r = Regions::new(&a, &p)?;
            for l in &spectrum.eigenvalues {
                if r.in_e(*l) {
                    exact += 1;
                } else if r.in_e_loose(*l, BOUNDARY_ETA) {
                    boundary += 1;
                } else {
                    missed += 1;
                    println!("outside E: matrix {m}, {p}, eigenvalue {l}");
                }
            }
            for _ in 0..200 {
                let z = box_point(&mut rng, &bbox);
                points += 1;
                assert!(!r.in_e(z) || r.in_g(z));
            }
        }
    }
    println!(
        "{count} matrices: {exact} eigenvalues inside E, {boundary} on a boundary up to rounding, {missed} outside"
    );
    println!("{points} sampled points, E inside G at all of them");
    Ok(())
}
