//! Fixed workloads shared by the benchmarks.

use minksimplex::{sample, PolytopeBall, Rational, Simplex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// `n` random simplices in dimension `d` with random balls of up to
/// `facets` facets, reproducible from `seed`.
pub fn instances(seed: u64, d: usize, facets: usize, n: usize) -> Vec<(Simplex<Rational>, PolytopeBall)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let ball = if d == 2 {
                sample::symmetric_polygon(&mut rng, facets)
            } else {
                sample::symmetric_polytope(&mut rng, d, facets)
            };
            (sample::simplex(&mut rng, d, 4, 4), ball)
        })
        .collect()
}
