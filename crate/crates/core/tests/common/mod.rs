#![allow(dead_code)]

use mustafin_core::tropical::is_general_position;
use mustafin_core::{Configuration, TorusPoint};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn pt(c: &[i64]) -> TorusPoint {
    TorusPoint::new(c).unwrap()
}

pub fn cfg(points: &[&[i64]]) -> Configuration {
    let raw: Vec<Vec<i64>> = points.iter().map(|p| p.to_vec()).collect();
    Configuration::from_raw(points[0].len(), &raw).unwrap()
}

/// `n` distinct normalized points with coordinates 2..d drawn from `[lo, hi]`.
pub fn random_config(rng: &mut impl Rng, d: usize, n: usize, lo: i64, hi: i64) -> Configuration {
    loop {
        let raw: Vec<Vec<i64>> = (0..n)
            .map(|_| {
                let mut v = vec![0];
                v.extend((1..d).map(|_| rng.gen_range(lo..=hi)));
                v
            })
            .collect();
        if let Ok(config) = Configuration::from_raw(d, &raw) {
            return config;
        }
    }
}

/// Random configurations with `d ∈ {3, 4}`, `n ∈ {2, 3, 4}` and coordinates
/// in `[−6, 6]`, filtered by general position.
pub fn suite(seed: u64, count: usize, general: bool) -> Vec<Configuration> {
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let d = rng.gen_range(3..=4);
        let n = rng.gen_range(2..=4);
        let config = random_config(&mut rng, d, n, -6, 6);
        if is_general_position(&config) == general {
            out.push(config);
        }
    }
    out
}
