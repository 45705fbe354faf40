//! Deterministic stream derivation for reproducible runs.
//!
//! Every randomized step in the pipeline draws from a ChaCha stream derived
//! from the run seed plus a stable label (advert id, scale index, run index).
//! Derivation is pure, so results do not depend on execution order and the
//! same seed reproduces the same output bit for bit on any platform.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

/// FNV-1a hash of a byte string. Stable across platforms and releases.
pub fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h = FNV_OFFSET;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(FNV_PRIME);
    }
    h
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn expand_seed(mut state: u64) -> [u8; 32] {
    let mut seed = [0u8; 32];
    for chunk in seed.chunks_exact_mut(8) {
        chunk.copy_from_slice(&splitmix64(&mut state).to_le_bytes());
    }
    seed
}

/// RNG for a numbered substream, e.g. `(scale index, run index)`.
pub fn stream_rng(seed: u64, labels: &[u64]) -> ChaCha8Rng {
    let mut h = fnv1a(&seed.to_le_bytes());
    for &label in labels {
        for &b in &label.to_le_bytes() {
            h ^= u64::from(b);
            h = h.wrapping_mul(FNV_PRIME);
        }
    }
    ChaCha8Rng::from_seed(expand_seed(h))
}

/// RNG keyed on a string identifier, e.g. an advert id.
pub fn keyed_rng(seed: u64, key: &str) -> ChaCha8Rng {
    let mut h = fnv1a(&seed.to_le_bytes());
    for &b in key.as_bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(FNV_PRIME);
    }
    ChaCha8Rng::from_seed(expand_seed(h))
}
