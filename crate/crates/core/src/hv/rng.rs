//! Labelled, reproducible random streams.
//!
//! Every stochastic operation draws from a [`RandomStream`]. A stream is
//! identified by the master seed and a text label; the pair is hashed with
//! FNV-1a and mixed through SplitMix64 into the 64-bit seed of a ChaCha8
//! generator. Forking appends `/<sub>` to the label, so per-trial streams
//! (`"gradient/trial/17"`) are independent of scheduling order.

use rand::RngCore;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const ALGORITHM: &str = "chacha8/splitmix64-fnv1a64";

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

fn fnv1a64(bytes: &[u8]) -> u64 {
    bytes.iter().fold(FNV_OFFSET, |h, &b| {
        (h ^ u64::from(b)).wrapping_mul(FNV_PRIME)
    })
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Mixes a master seed and a stream label into a generator seed.
pub fn mix_seed(seed: u64, label: &str) -> u64 {
    splitmix64(splitmix64(seed) ^ fnv1a64(label.as_bytes()))
}

/// A single-owner random stream derived from `(seed, label)`.
#[derive(Debug, Clone)]
pub struct RandomStream {
    seed: u64,
    label: String,
    rng: ChaCha8Rng,
}

impl RandomStream {
    pub fn new(seed: u64, label: impl Into<String>) -> Self {
        let label = label.into();
        let rng = ChaCha8Rng::seed_from_u64(mix_seed(seed, &label));
        Self { seed, label, rng }
    }

    /// A fresh stream labelled `<self.label>/<sub>` under the same seed.
    pub fn fork(&self, sub: impl std::fmt::Display) -> Self {
        Self::new(self.seed, format!("{}/{}", self.label, sub))
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn algorithm(&self) -> &'static str {
        ALGORITHM
    }
}

impl RngCore for RandomStream {
    fn next_u32(&mut self) -> u32 {
        self.rng.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    fn fill_bytes(&mut self, dst: &mut [u8]) {
        self.rng.fill_bytes(dst)
    }
}

/// Source of 64-bit words whose bits are independent Bernoulli(p).
///
/// `p` is held as a 64-bit binary fraction; a word is built by folding one
/// uniform word per fraction bit, least significant first (OR for a set bit,
/// AND for a clear bit). After the fold each output bit is 1 with probability
/// exactly `fraction / 2^64`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct BernoulliWords {
    kind: WordKind,
}

#[derive(Debug, Clone, Copy)]
enum WordKind {
    Zero,
    One,
    Fraction { bits: u64, lowest: u32 },
}

impl BernoulliWords {
    pub(crate) fn new(p: f64) -> Self {
        let kind = if p <= 0.0 {
            WordKind::Zero
        } else if p >= 1.0 {
            WordKind::One
        } else {
            // 2^64 * p < 2^64 and scaling by a power of two is exact.
            let bits = (p * 18_446_744_073_709_551_616.0) as u64;
            if bits == 0 {
                WordKind::Zero
            } else {
                WordKind::Fraction {
                    bits,
                    lowest: bits.trailing_zeros(),
                }
            }
        };
        Self { kind }
    }

    #[inline]
    pub(crate) fn draw(&self, rng: &mut impl RngCore) -> u64 {
        match self.kind {
            WordKind::Zero => 0,
            WordKind::One => u64::MAX,
            WordKind::Fraction { bits, lowest } => {
                let mut mask = 0u64;
                for b in lowest..64 {
                    let r = rng.next_u64();
                    mask = if bits >> b & 1 == 1 {
                        mask | r
                    } else {
                        mask & r
                    };
                }
                mask
            }
        }
    }
}
