//! Seeded random inputs for the randomized test suites and `selftest`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bundle::BundleInput;
use crate::forms::{CohomologyClass, FormBlock, IntersectionForm};

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

/// The summands random forms are assembled from.
pub const BASIC_BLOCKS: [FormBlock; 4] =
    [FormBlock::PlusOne, FormBlock::MinusOne, FormBlock::Hyperbolic, FormBlock::E8];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A nonempty list of summands with total rank at most `max_rank`.
pub fn random_blocks<R: Rng>(rng: &mut R, max_rank: usize) -> Vec<FormBlock> {
    assert!(max_rank >= 1);
    let target = rng.gen_range(1..=8);
    let mut blocks = Vec::new();
    let mut rank = 0;
    for _ in 0..target {
        let fitting: Vec<FormBlock> = BASIC_BLOCKS.iter().copied().filter(|b| rank + b.rank() <= max_rank).collect();
        let Some(&block) = fitting.choose(rng) else { break };
        rank += block.rank();
        blocks.push(block);
    }
    if blocks.is_empty() {
        blocks.push(FormBlock::PlusOne);
    }
    blocks
}

pub fn random_form<R: Rng>(rng: &mut R, max_rank: usize) -> IntersectionForm {
    IntersectionForm::from_blocks(&random_blocks(rng, max_rank)).expect("block sums are unimodular")
}

/// A nonzero class with entries in `-bound..=bound`, divided by its divisibility.
pub fn random_primitive_class<R: Rng>(rng: &mut R, rank: usize, bound: i64) -> CohomologyClass {
    loop {
        let entries: Vec<i64> = (0..rank).map(|_| rng.gen_range(-bound..=bound)).collect();
        let c = CohomologyClass::from_i64(&entries);
        if !c.is_zero() {
            let m = c.divisibility();
            return c.div_exact(&m).expect("gcd divides");
        }
    }
}

/// A characteristic class: pairing with each basis vector has the parity of its square.
pub fn random_characteristic_class<R: Rng>(rng: &mut R, form: &IntersectionForm, bound: i64) -> CohomologyClass {
    let entries = (0..form.rank())
        .map(|i| {
            let parity = if form.entry(i, i).is_even() { 0 } else { 1 };
            BigInt::from(2 * rng.gen_range(-bound..=bound) + parity)
        })
        .collect();
    CohomologyClass::new(entries)
}

/// A product of `steps` random elementary matrices, so invertible over ℤ.
pub fn random_unimodular_matrix<R: Rng>(rng: &mut R, n: usize, steps: usize) -> Vec<Vec<BigInt>> {
    let mut u: Vec<Vec<BigInt>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect();
    if n < 2 {
        if n == 1 && rng.gen_bool(0.5) {
            u[0][0] = -BigInt::one();
        }
        return u;
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let factor = BigInt::from(rng.gen_range(-2..=2));
        // column operation: col_i += factor * col_j
        for row in u.iter_mut() {
            let add = &factor * &row[j];
            row[i] += add;
        }
        if rng.gen_bool(0.2) {
            for row in u.iter_mut() {
                row.swap(i, j);
            }
        }
    }
    u
}

/// A valid divisibility-2 bundle input; the Kirby–Siebenmann bit is forced for even
/// forms and random otherwise.
pub fn random_bundle_input<R: Rng>(rng: &mut R, max_rank: usize) -> BundleInput {
    let form = random_form(rng, max_rank);
    let ks = if form.is_even() { (form.signature() / 8).rem_euclid(2) as u8 } else { rng.gen_range(0..=1) };
    let tilde = random_primitive_class(rng, form.rank(), 4);
    BundleInput::new(form, ks, tilde.scale(&BigInt::from(2))).expect("consistent by construction")
}
