//! Shared oracles and generators for the integration suites.
//!
//! Each test binary uses a subset of these.
#![allow(dead_code)]

use moebius_forest::{ExtendedRational, GaussianRational, Matrix, Mode, Vertex};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Continued-fraction quotients of p/q by the Euclidean algorithm.
/// Independent of all library code.
pub fn cf_quotients(p: u64, q: u64) -> Vec<u64> {
    assert!(p > 0 && q > 0);
    let (mut a, mut b) = (p, q);
    let mut out = Vec::new();
    loop {
        out.push(a / b);
        let r = a % b;
        if r == 0 {
            return out;
        }
        a = b;
        b = r;
    }
}

/// The root-to-vertex word predicted by the continued fraction of p/q in
/// the boundary-mode Calkin-Wilf tree: alternating runs L^a0 R^a1 L^a2 …
/// read from the outermost end, with the final run shortened by one.
pub fn word_from_cf(cf: &[u64]) -> String {
    let mut out = String::new();
    for (i, &a) in cf.iter().enumerate() {
        let len = if i + 1 == cf.len() { a - 1 } else { a };
        let letter = if i % 2 == 0 { 'L' } else { 'R' };
        for _ in 0..len {
            out.push(letter);
        }
    }
    out
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_component(rng: &mut ChaCha8Rng, max: u64) -> BigRational {
    BigRational::new(
        BigInt::from(rng.random_range(1..=max)),
        BigInt::from(rng.random_range(1..=max)),
    )
}

/// A random interior vertex with component numerators and denominators
/// bounded by `max`.
pub fn random_interior_vertex(rng: &mut ChaCha8Rng, max: u64) -> Vertex {
    let z = GaussianRational::new(random_component(rng, max), random_component(rng, max));
    Vertex::interior(z).expect("positive components")
}

pub fn mat(a: u64, b: u64, c: u64, d: u64) -> Matrix {
    Matrix::new(a, b, c, d).unwrap()
}

pub fn rational(n: u64, d: u64) -> ExtendedRational {
    ExtendedRational::new(n, d).unwrap()
}

pub fn boundary_vertex(n: u64, d: u64) -> Vertex {
    Vertex::boundary(rational(n, d)).unwrap()
}

/// Five distinct left-right pairs used by the desk-scale root-finding
/// checks; the first is the Calkin-Wilf pair.
pub fn sample_pairs() -> Vec<(Matrix, Matrix)> {
    vec![
        (mat(1, 1, 0, 1), mat(1, 0, 1, 1)),
        (mat(2, 1, 1, 1), mat(1, 0, 1, 1)),
        (mat(1, 1, 0, 1), mat(1, 0, 2, 1)),
        (mat(3, 1, 2, 1), mat(1, 0, 1, 1)),
        (mat(2, 1, 1, 1), mat(2, 1, 3, 2)),
    ]
}

/// Keeps `Mode` and `Vertex` linked so suites can parse both kinds.
pub fn parse_vertex(s: &str, mode: Mode) -> Vertex {
    Vertex::parse(s, mode).unwrap()
}
