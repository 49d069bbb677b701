//! Seeded samples of a Klein bottle in R^5.
//!
//! The surface is the flat embedding in R^4
//!
//! ```text
//! ((R + r cos v) cos u, (R + r cos v) sin u, r sin v cos(u/2), r sin v sin(u/2))
//! ```
//!
//! with `u, v` uniform in `[0, 2π)`, padded with a zero fifth coordinate.

use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const MAJOR_RADIUS: f64 = 2.0;
pub const MINOR_RADIUS: f64 = 1.0;

pub fn klein_bottle(count: usize, seed: u64) -> Vec<Vec<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let u = rng.gen_range(0.0..TAU);
            let v = rng.gen_range(0.0..TAU);
            let ring = MAJOR_RADIUS + MINOR_RADIUS * v.cos();
            vec![
                ring * u.cos(),
                ring * u.sin(),
                MINOR_RADIUS * v.sin() * (u / 2.0).cos(),
                MINOR_RADIUS * v.sin() * (u / 2.0).sin(),
                0.0,
            ]
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_on_the_surface() {
        let a = klein_bottle(50, 7);
        assert_eq!(a, klein_bottle(50, 7));
        assert_ne!(a, klein_bottle(50, 8));
        for p in &a {
            assert_eq!(p.len(), 5);
            assert_eq!(p[4], 0.0);
            let ring = (p[0] * p[0] + p[1] * p[1]).sqrt();
            let tube = ((ring - MAJOR_RADIUS).powi(2) + p[2] * p[2] + p[3] * p[3]).sqrt();
            assert!((tube - MINOR_RADIUS).abs() < 1e-9);
        }
    }
}
