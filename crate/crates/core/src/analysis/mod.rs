//! Empirical measurements: keystream statistics, toy brute force and throughput.

mod bench;
mod brute;
mod histogram;
mod report;

pub use bench::{MIN_REPS, compare_throughput, measure_throughput, BenchReport, ThroughputComparison};
pub use brute::{brute_force_known_plaintext, BruteForceReport, KEYSPACE_NOTE};
pub use histogram::{
    chi_square_uniform, chi_square_upper_p, keystream_histogram, run_histogram, vrc4_body_histogram, Execution,
    HistogramConfig, HistogramReport, HistogramSource, TrialKeys, DEFAULT_TRIAL_KEY_LEN,
};
pub use report::{parse_record, Report};
