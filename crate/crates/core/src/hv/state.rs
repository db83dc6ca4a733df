//! Bit-packed binary states.
//!
//! Bits live in 64-bit words, bit `i` at word `i / 64`, position `i % 64`
//! (little-endian within the word). Bits past `n_dims` in the last word are
//! always zero, so word-wise popcounts need no tail correction.

use std::fmt;
use std::str::FromStr;

use rand::seq::index;
use rand::RngCore;

use super::params::SpaceParams;
use super::rng::{BernoulliWords, RandomStream};
use crate::error::{check_unit, Error, Result};

pub(crate) const WORD_BITS: usize = 64;

#[inline]
pub(crate) fn words_for(n_dims: usize) -> usize {
    n_dims.div_ceil(WORD_BITS)
}

#[inline]
pub(crate) fn tail_mask(n_dims: usize) -> u64 {
    match n_dims % WORD_BITS {
        0 => u64::MAX,
        r => (1u64 << r) - 1,
    }
}

/// An immutable binary hypervector of `n_dims` bits.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct State {
    words: Box<[u64]>,
    n_dims: usize,
}

impl State {
    /// Builds a state from packed words, clearing any bits past `n_dims`.
    pub fn from_words(n_dims: usize, mut words: Vec<u64>) -> Result<Self> {
        if n_dims == 0 {
            return Err(Error::Empty("state"));
        }
        if words.len() != words_for(n_dims) {
            return Err(Error::DimensionMismatch {
                left: words.len() * WORD_BITS,
                right: n_dims,
            });
        }
        if let Some(last) = words.last_mut() {
            *last &= tail_mask(n_dims);
        }
        Ok(Self {
            words: words.into_boxed_slice(),
            n_dims,
        })
    }

    pub(crate) fn from_words_unchecked(n_dims: usize, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), words_for(n_dims));
        debug_assert_eq!(words.last().map(|w| w & !tail_mask(n_dims)), Some(0));
        Self {
            words: words.into_boxed_slice(),
            n_dims,
        }
    }

    pub fn zeros(n_dims: usize) -> Self {
        assert!(n_dims > 0, "state must have at least one bit");
        Self::from_words_unchecked(n_dims, vec![0; words_for(n_dims)])
    }

    pub fn ones(n_dims: usize) -> Self {
        assert!(n_dims > 0, "state must have at least one bit");
        let mut words = vec![u64::MAX; words_for(n_dims)];
        *words.last_mut().unwrap() = tail_mask(n_dims);
        Self::from_words_unchecked(n_dims, words)
    }

    pub fn from_bits(bits: &[bool]) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::Empty("state"));
        }
        let mut words = vec![0u64; words_for(bits.len())];
        for (i, _) in bits.iter().enumerate().filter(|(_, &b)| b) {
            words[i / WORD_BITS] |= 1 << (i % WORD_BITS);
        }
        Ok(Self::from_words_unchecked(bits.len(), words))
    }

    /// Each bit independently 1 with probability `q`. Any `q` in `[0,1]` is
    /// accepted, so the all-zero and all-one limits are reachable.
    pub fn random(n_dims: usize, q: f64, rng: &mut impl RngCore) -> Result<Self> {
        check_unit("q", q)?;
        if n_dims == 0 {
            return Err(Error::Empty("state"));
        }
        let gen = BernoulliWords::new(q);
        let mut words: Vec<u64> = (0..words_for(n_dims)).map(|_| gen.draw(rng)).collect();
        *words.last_mut().unwrap() &= tail_mask(n_dims);
        Ok(Self::from_words_unchecked(n_dims, words))
    }

    #[inline]
    pub fn n_dims(&self) -> usize {
        self.n_dims
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.n_dims, "bit {i} out of range {}", self.n_dims);
        self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    /// Population count `|x|`.
    #[inline]
    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn complement(&self) -> Self {
        let mut words: Vec<u64> = self.words.iter().map(|w| !w).collect();
        *words.last_mut().unwrap() &= tail_mask(self.n_dims);
        Self::from_words_unchecked(self.n_dims, words)
    }

    pub fn iter_bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.n_dims).map(move |i| self.get(i))
    }

    pub(crate) fn check_dims(&self, other: &State) -> Result<()> {
        if self.n_dims == other.n_dims {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.n_dims,
                right: other.n_dims,
            })
        }
    }

    /// Word-wise combination of two equally sized states. `f` must map zero
    /// tails to zero tails, or the result is re-masked.
    pub(crate) fn zip_words(
        &self,
        other: &State,
        mut f: impl FnMut(u64, u64) -> u64,
    ) -> Result<Self> {
        self.check_dims(other)?;
        let mut words: Vec<u64> = self
            .words
            .iter()
            .zip(other.words.iter())
            .map(|(&a, &b)| f(a, b))
            .collect();
        *words.last_mut().unwrap() &= tail_mask(self.n_dims);
        Ok(Self::from_words_unchecked(self.n_dims, words))
    }
}

impl fmt::Debug for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n_dims <= 128 {
            write!(f, "State({self})")
        } else {
            write!(
                f,
                "State(n_dims={}, ones={})",
                self.n_dims,
                self.count_ones()
            )
        }
    }
}

/// Bit `0` first.
impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter_bits() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for State {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::BitString(format!(
                    "unexpected character {other:?} in {s:?}"
                ))),
            })
            .collect::<Result<Vec<bool>>>()?;
        if bits.is_empty() {
            return Err(Error::BitString("empty bit string".into()));
        }
        Self::from_bits(&bits)
    }
}

/// A fresh q-state for the space described by `params`.
pub fn random_state(params: &SpaceParams, stream: &mut RandomStream) -> Result<State> {
    params.validate()?;
    State::random(params.n_dims, params.q, stream)
}

/// How [`similar_state`] perturbs its input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SimilarityMode {
    /// Invert each bit independently with probability `delta`.
    Flip,
    /// Toggle exactly `round(delta * N / 2)` ones and as many zeros.
    Swap,
}

/// A state at (expected or exact) Hamming distance `delta` from `x`.
pub fn similar_state(
    x: &State,
    delta: f64,
    mode: SimilarityMode,
    stream: &mut RandomStream,
) -> Result<State> {
    check_unit("delta", delta)?;
    match mode {
        SimilarityMode::Flip => {
            let gen = BernoulliWords::new(delta);
            let mut words: Vec<u64> = x.words().iter().map(|&w| w ^ gen.draw(stream)).collect();
            *words.last_mut().unwrap() &= tail_mask(x.n_dims());
            Ok(State::from_words_unchecked(x.n_dims(), words))
        }
        SimilarityMode::Swap => {
            let n = x.n_dims();
            let swaps = (delta * n as f64 / 2.0).round() as usize;
            let ones_count = x.count_ones();
            let bound = ones_count.min(n - ones_count);
            if swaps > bound {
                return Err(Error::InfeasibleSwap {
                    requested: swaps,
                    bound,
                });
            }
            let (ones, zeros): (Vec<usize>, Vec<usize>) = (0..n).partition(|&i| x.get(i));
            let mut words = x.words().to_vec();
            let picked_ones = index::sample(stream, ones.len(), swaps);
            let picked_zeros = index::sample(stream, zeros.len(), swaps);
            for i in picked_ones
                .iter()
                .map(|j| ones[j])
                .chain(picked_zeros.iter().map(|j| zeros[j]))
            {
                words[i / WORD_BITS] ^= 1 << (i % WORD_BITS);
            }
            Ok(State::from_words_unchecked(n, words))
        }
    }
}
