use std::hint::black_box;
use std::time::Instant;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cipher::{open, seal};
use crate::container::Algorithm;
use crate::error::{Error, Result};
use crate::keying::KeyMaterial;
use crate::vrc4::SplitIndex;

pub const MIN_REPS: usize = 5;

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub cipher: Algorithm,
    pub payload_bytes: usize,
    pub reps: usize,
    /// Median of the per-repetition encrypt+decrypt wall time.
    pub median_seconds: f64,
    pub throughput_mib_s: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ThroughputComparison {
    pub rc4: BenchReport,
    pub vrc4: BenchReport,
}

impl ThroughputComparison {
    /// VRC4 median time over RC4 median time.
    pub fn ratio(&self) -> f64 {
        if self.rc4.median_seconds == 0.0 {
            return 0.0;
        }
        self.vrc4.median_seconds / self.rc4.median_seconds
    }
}

fn median(samples: &mut [f64]) -> f64 {
    samples.sort_by(f64::total_cmp);
    let n = samples.len();
    if n % 2 == 1 {
        samples[n / 2]
    } else {
        (samples[n / 2 - 1] + samples[n / 2]) / 2.0
    }
}

fn workload(cipher: Algorithm, payload_bytes: usize, seed: u64) -> (KeyMaterial, Vec<u8>, SplitIndex) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match cipher {
        Algorithm::VigenereAlpha => {
            let letters = |rng: &mut ChaCha8Rng, n: usize| -> Vec<u8> {
                (0..n).map(|_| b'A' + rng.random_range(0..26u8)).collect()
            };
            let key = KeyMaterial::new(letters(&mut rng, 16)).unwrap();
            let payload = letters(&mut rng, payload_bytes);
            (key, payload, SplitIndex::new(0))
        }
        Algorithm::Rc4 | Algorithm::Vrc4 => {
            let mut key = [0u8; 16];
            rng.fill_bytes(&mut key);
            let mut payload = vec![0u8; payload_bytes];
            rng.fill_bytes(&mut payload);
            let split = SplitIndex::new(rng.random());
            (KeyMaterial::new(key.to_vec()).unwrap(), payload, split)
        }
    }
}

/// Times `reps` sealed encrypt+decrypt round trips of a seeded random payload.
pub fn measure_throughput(cipher: Algorithm, payload_bytes: usize, reps: usize, seed: u64) -> Result<BenchReport> {
    if reps < MIN_REPS {
        return Err(Error::TooFewReps(reps));
    }
    let (key, payload, split) = workload(cipher, payload_bytes, seed);

    // warm-up, also checks the round trip once
    let frame = seal(cipher, &key, &payload, Some(split))?;
    let (_, back) = open(&frame, &key)?;
    assert_eq!(back, payload, "{cipher} round trip failed during benchmark warm-up");

    let mut samples = Vec::with_capacity(reps);
    for _ in 0..reps {
        let start = Instant::now();
        let frame = seal(cipher, &key, black_box(&payload), Some(split))?;
        let plain = open(black_box(&frame), &key)?;
        black_box(&plain);
        samples.push(start.elapsed().as_secs_f64());
    }
    let median_seconds = median(&mut samples);
    let throughput_mib_s = if payload_bytes == 0 || median_seconds <= 0.0 {
        0.0
    } else {
        payload_bytes as f64 / (1024.0 * 1024.0) / median_seconds
    };
    Ok(BenchReport { cipher, payload_bytes, reps, median_seconds, throughput_mib_s })
}

pub fn compare_throughput(payload_bytes: usize, reps: usize, seed: u64) -> Result<ThroughputComparison> {
    Ok(ThroughputComparison {
        rc4: measure_throughput(Algorithm::Rc4, payload_bytes, reps, seed)?,
        vrc4: measure_throughput(Algorithm::Vrc4, payload_bytes, reps, seed)?,
    })
}
