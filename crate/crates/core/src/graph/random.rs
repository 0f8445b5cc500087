//! Seeded G(n,p) sampling with an exact rational edge probability.

use super::{Graph, GraphError};
use num::{BigInt, BigRational, One, Signed, ToPrimitive};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha12Rng;

/// Draws one G(n,p) sample as a pure function of `(n, p, seed, sample_index)`.
///
/// Each of the C(n,2) potential edges is included independently with
/// probability exactly `p`: a 64-bit uniform draw is compared against
/// `floor(p * 2^64)`, so identical inputs give identical graphs on every
/// platform and thread schedule. Pairs are visited in lexicographic order,
/// one draw per pair.
pub fn random_gnp(
    n: usize,
    p: &BigRational,
    seed: u64,
    sample_index: u64,
) -> Result<Graph, GraphError> {
    if p.is_negative() || p > &BigRational::one() {
        return Err(GraphError::ProbabilityOutOfRange(p.to_string()));
    }
    let threshold: u128 = ((p.numer() * (BigInt::one() << 64u32)) / p.denom())
        .to_u128()
        .expect("p in [0,1] so the threshold fits 65 bits");

    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    rng.set_stream(sample_index);

    let mut g = Graph::edgeless(n)?;
    for u in 0..n {
        for v in (u + 1)..n {
            if (rng.next_u64() as u128) < threshold {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}
