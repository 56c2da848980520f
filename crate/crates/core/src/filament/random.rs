//! Seeded random filament representations.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Coord, Filament, FilamentRep, Point};
use crate::error::{Error, Result};

const ATTEMPTS: usize = 10_000;

/// `n` filaments with distinct endpoints on `0..4n` and up to `max_bends`
/// interior points each, resampled until the representation is valid and its
/// intersection graph connected.
pub fn random_rep(n: usize, max_bends: usize, seed: u64) -> Result<FilamentRep> {
    if n == 0 || max_bends == 0 {
        return Err(Error::domain("need at least one filament and one bend"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ATTEMPTS {
        let rep = sample(n, max_bends, &mut rng);
        if rep.is_valid() && rep.intersection_graph().is_ok_and(|g| g.is_connected()) {
            return Ok(rep);
        }
    }
    Err(Error::Generation(format!(
        "no valid connected representation with {n} filaments after {ATTEMPTS} attempts"
    )))
}

fn sample(n: usize, max_bends: usize, rng: &mut ChaCha8Rng) -> FilamentRep {
    // Endpoints: a random pairing of distinct slots, scaled so bends fit between.
    let scale = 64i64;
    let mut slots: Vec<i64> = (0..(4 * n) as i64).collect();
    slots.shuffle(rng);
    let filaments = (0..n)
        .map(|v| {
            let (mut a, mut b) = (slots[2 * v], slots[2 * v + 1]);
            if a > b {
                std::mem::swap(&mut a, &mut b);
            }
            let (a, b) = (a * scale, b * scale);
            let bends = rng.gen_range(1..=max_bends);
            let mut xs: Vec<i64> = (0..bends).map(|_| rng.gen_range(a + 1..b)).collect();
            xs.sort_unstable();
            xs.dedup();
            let mut points = vec![Point::new(Coord::int(a), Coord::int(0))];
            for x in xs {
                // Odd denominators keep bends off the shared integer grid.
                let y = Coord::ratio(rng.gen_range(1..=400), 7);
                points.push(Point::new(Coord::ratio(7 * x + rng.gen_range(-3..=3), 7), y));
            }
            points.push(Point::new(Coord::int(b), Coord::int(0)));
            Filament::new(v, points)
        })
        .collect();
    FilamentRep::new(filaments)
}
