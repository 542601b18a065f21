use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use statrs::distribution::{ChiSquared, ContinuousCDF};

use crate::error::{Error, Result};
use crate::keying::KeyMaterial;
use crate::rc4::Rc4State;
use crate::vrc4::{vrc4_encrypt, SplitIndex};

/// 128-bit trial keys.
pub const DEFAULT_TRIAL_KEY_LEN: usize = 16;

const CHUNK: u64 = 1 << 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HistogramSource {
    /// RC4 keystream byte at the given position.
    Rc4Keystream,
    /// VRC4 body byte at the given position, all-zero plaintext.
    Vrc4Body,
}

impl HistogramSource {
    pub fn name(self) -> &'static str {
        match self {
            HistogramSource::Rc4Keystream => "rc4-keystream",
            HistogramSource::Vrc4Body => "vrc4-body",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TrialKeys {
    /// A fresh pseudo-random key of this many bytes per trial.
    Random { len: usize },
    /// The same key for every trial.
    Fixed(KeyMaterial),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HistogramConfig {
    pub source: HistogramSource,
    pub position: usize,
    pub trials: u64,
    pub keys: TrialKeys,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct HistogramReport {
    pub source: HistogramSource,
    pub position: usize,
    pub trials: u64,
    pub key_len: usize,
    pub seed: u64,
    pub counts: [u64; 256],
    pub chi_square: f64,
    /// Upper-tail probability of `chi_square` under 255 degrees of freedom.
    pub p_value: f64,
}

impl HistogramReport {
    pub fn frequency(&self, value: u8) -> f64 {
        self.counts[value as usize] as f64 / self.trials as f64
    }

    /// The most frequent value and its frequency.
    pub fn peak(&self) -> (u8, f64) {
        let (v, _) = self
            .counts
            .iter()
            .enumerate()
            .max_by_key(|&(v, c)| (*c, std::cmp::Reverse(v)))
            .unwrap();
        (v as u8, self.frequency(v as u8))
    }

    /// True when uniformity is not rejected at significance `alpha`.
    pub fn passes_uniformity(&self, alpha: f64) -> bool {
        self.p_value >= alpha
    }
}

/// Pearson statistic of `counts` against a uniform expectation.
pub fn chi_square_uniform(counts: &[u64]) -> f64 {
    let total: u64 = counts.iter().sum();
    if total == 0 || counts.is_empty() {
        return 0.0;
    }
    let expected = total as f64 / counts.len() as f64;
    counts
        .iter()
        .map(|&c| {
            let d = c as f64 - expected;
            d * d / expected
        })
        .sum()
}

pub fn chi_square_upper_p(statistic: f64, degrees_of_freedom: f64) -> f64 {
    ChiSquared::new(degrees_of_freedom)
        .expect("positive degrees of freedom")
        .sf(statistic)
}

fn words_per_trial(key_len: usize) -> u64 {
    // key words plus one word for the split index
    key_len.div_ceil(4) as u64 + 1
}

fn tally_chunk(cfg: &HistogramConfig, key_len: usize, chunk: u64) -> [u64; 256] {
    let mut counts = [0u64; 256];
    let start = chunk * CHUNK;
    let end = (start + CHUNK).min(cfg.trials);
    let words = words_per_trial(key_len);

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_word_pos(start as u128 * words as u128);

    let mut key_buf = vec![0u8; key_len.div_ceil(4) * 4];
    let mut plain = vec![0u8; cfg.position + 1];

    for _ in start..end {
        for w in key_buf.chunks_exact_mut(4) {
            w.copy_from_slice(&rng.next_u32().to_le_bytes());
        }
        let split = SplitIndex::new(rng.next_u32() as u8);
        let random_key;
        let key = match &cfg.keys {
            TrialKeys::Fixed(k) => k,
            TrialKeys::Random { len } => {
                random_key = KeyMaterial::new(&key_buf[..*len]).expect("validated key length");
                &random_key
            }
        };
        let byte = match cfg.source {
            HistogramSource::Rc4Keystream => {
                let mut state = Rc4State::new(key);
                for _ in 0..cfg.position {
                    state.next_byte();
                }
                state.next_byte()
            }
            HistogramSource::Vrc4Body => {
                plain.fill(0);
                vrc4_encrypt(&plain, key, split).body[cfg.position]
            }
        };
        counts[byte as usize] += 1;
    }
    counts
}

fn merge(mut a: [u64; 256], b: [u64; 256]) -> [u64; 256] {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

/// Tallies one byte position over many keys.
///
/// Trial `n` draws its key and split index from a fixed offset of the seeded
/// ChaCha8 stream, so the result does not depend on how trials are scheduled.
pub fn run_histogram(cfg: &HistogramConfig, execution: Execution) -> Result<HistogramReport> {
    if cfg.trials == 0 {
        return Err(Error::NoTrials);
    }
    let key_len = match &cfg.keys {
        TrialKeys::Random { len } => {
            if !(1..=256).contains(len) {
                return Err(Error::KeyLength(*len));
            }
            *len
        }
        TrialKeys::Fixed(k) => k.len(),
    };
    let chunks = cfg.trials.div_ceil(CHUNK);
    let counts = match execution {
        Execution::Sequential => (0..chunks).map(|c| tally_chunk(cfg, key_len, c)).fold([0u64; 256], merge),
        Execution::Parallel => (0..chunks)
            .into_par_iter()
            .map(|c| tally_chunk(cfg, key_len, c))
            .reduce(|| [0u64; 256], merge),
    };
    let chi_square = chi_square_uniform(&counts);
    Ok(HistogramReport {
        source: cfg.source,
        position: cfg.position,
        trials: cfg.trials,
        key_len,
        seed: cfg.seed,
        counts,
        chi_square,
        p_value: chi_square_upper_p(chi_square, 255.0),
    })
}

pub fn keystream_histogram(position: usize, trials: u64, key_len: usize, seed: u64) -> Result<HistogramReport> {
    run_histogram(
        &HistogramConfig {
            source: HistogramSource::Rc4Keystream,
            position,
            trials,
            keys: TrialKeys::Random { len: key_len },
            seed,
        },
        Execution::Parallel,
    )
}

pub fn vrc4_body_histogram(position: usize, trials: u64, key_len: usize, seed: u64) -> Result<HistogramReport> {
    run_histogram(
        &HistogramConfig {
            source: HistogramSource::Vrc4Body,
            position,
            trials,
            keys: TrialKeys::Random { len: key_len },
            seed,
        },
        Execution::Parallel,
    )
}
