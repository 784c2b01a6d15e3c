//! Deterministic pseudo-random inputs for the identity suites. Not part of
//! the public API surface.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::classes::FixedPointClass;
use crate::sym::{Polynomial, RationalFunction, VariableTable};
use crate::weyl::ThetaShape;

/// SplitMix64 step.
pub fn next_u64(seed: &mut u64) -> u64 {
    *seed = seed.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = *seed;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

pub fn next_range(seed: &mut u64, lo: i64, hi: i64) -> i64 {
    let span = (hi - lo + 1) as u64;
    lo + (next_u64(seed) % span) as i64
}

/// A small random Laurent polynomial over the table (exponents respect the
/// per-symbol convention).
pub fn random_laurent(table: &Arc<VariableTable>, seed: &mut u64) -> Polynomial {
    let nterms = next_range(seed, 1, 3);
    let mut terms = Vec::new();
    for _ in 0..nterms {
        let mut exps = vec![0i32; table.len()];
        for (i, e) in exps.iter_mut().enumerate() {
            let lo = if table.laurent(i) { -2 } else { 0 };
            *e = next_range(seed, lo, 2) as i32;
        }
        let coeff = next_range(seed, -3, 3);
        terms.push((exps.into_boxed_slice(), BigInt::from(coeff)));
    }
    Polynomial::from_terms(table, terms)
}

/// A random class with Laurent-polynomial restrictions.
pub fn random_class(
    shape: &ThetaShape,
    table: &Arc<VariableTable>,
    seed: &mut u64,
) -> FixedPointClass {
    let mut class = FixedPointClass::zero(shape, table);
    let keys: Vec<_> = class.restrictions.keys().cloned().collect();
    for k in keys {
        class
            .restrictions
            .insert(k, RationalFunction::from_poly(random_laurent(table, seed)));
    }
    class
}

/// Random integer points avoiding zero (for evaluation cross-checks).
pub fn random_point(table: &Arc<VariableTable>, seed: &mut u64) -> Vec<i64> {
    (0..table.len())
        .map(|_| {
            let mut v = 0;
            while v == 0 || v == 1 || v == -1 {
                v = next_range(seed, -9, 9);
            }
            v
        })
        .collect()
}
