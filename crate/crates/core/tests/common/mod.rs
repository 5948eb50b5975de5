#![allow(dead_code)]

use clifford_ideals::multivector::{integer, rational};
use clifford_ideals::{BasisBlade, Multivector, Signature};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn sig(p: usize, q: usize, z: usize) -> Signature {
    Signature::new(p, q, z).unwrap()
}

/// Every `(p, q, z)` with `p + q + z <= n`.
pub fn signatures_up_to(n: usize) -> Vec<Signature> {
    let mut out = Vec::new();
    for total in 0..=n {
        for p in 0..=total {
            for q in 0..=total - p {
                out.push(sig(p, q, total - p - q));
            }
        }
    }
    out
}

pub fn blade(s: Signature, ix: &[usize]) -> Multivector {
    Multivector::blade(s, BasisBlade::from_indices(ix.iter().copied()).unwrap()).unwrap()
}

pub fn random_coefficient(rng: &mut ChaCha8Rng) -> clifford_ideals::Rational {
    let n = rng.gen_range(-4i64..=4);
    let n = if n == 0 { 1 } else { n };
    if rng.gen_bool(0.25) {
        rational(n, rng.gen_range(2..=3))
    } else {
        integer(n)
    }
}

/// Up to `max_terms` random blades with small rational coefficients.
pub fn random_mv(rng: &mut ChaCha8Rng, s: Signature, max_terms: usize) -> Multivector {
    let terms = rng.gen_range(0..=max_terms);
    Multivector::from_terms(
        s,
        (0..terms).map(|_| {
            let mask = rng.gen_range(0..s.dim() as u64) as u32;
            (BasisBlade::from_mask(mask), random_coefficient(rng))
        }),
    )
    .unwrap()
}

/// Random element of the subalgebra spanned by blades matching `keep`.
pub fn random_mv_where(
    rng: &mut ChaCha8Rng,
    s: Signature,
    max_terms: usize,
    keep: impl Fn(BasisBlade) -> bool,
) -> Multivector {
    let pool: Vec<BasisBlade> = s.blades().filter(|b| keep(*b)).collect();
    if pool.is_empty() {
        return Multivector::zero(s);
    }
    let terms = rng.gen_range(0..=max_terms);
    Multivector::from_terms(
        s,
        (0..terms).map(|_| (pool[rng.gen_range(0..pool.len())], random_coefficient(rng))),
    )
    .unwrap()
}

pub fn random_radical(rng: &mut ChaCha8Rng, s: Signature, max_terms: usize) -> Multivector {
    let null = s.null_mask();
    random_mv_where(rng, s, max_terms, |b| b.mask() & null != 0)
}

pub fn random_body(rng: &mut ChaCha8Rng, s: Signature, max_terms: usize) -> Multivector {
    let null = s.null_mask();
    random_mv_where(rng, s, max_terms, |b| b.mask() & null == 0)
}
