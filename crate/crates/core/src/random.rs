//! Seeded, splittable randomness.
//!
//! Every random object is a pure function of a 64-bit seed. Batch experiments
//! derive one independent seed per sample index from the ChaCha stream
//! counter, so results do not depend on evaluation order or thread count.

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{FieldSpec, Scalar};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Seed for the `index`-th child of `seed`.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut r = rng(seed);
    r.set_stream(index.wrapping_add(1));
    r.next_u64()
}

/// Uniform integer in `[-bound, bound]` over Q, uniform residue over `F_p`.
pub fn scalar(rng: &mut impl Rng, field: FieldSpec, bound: u64) -> Scalar {
    match field {
        FieldSpec::Rational => {
            let b = bound as i64;
            field.from_i64(rng.gen_range(-b..=b))
        }
        FieldSpec::Prime(m) => field.from_bigint(&rng.gen_range(0..m.get()).into()),
    }
}
