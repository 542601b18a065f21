use cipherlab::analysis::{
    brute_force_known_plaintext, keystream_histogram, measure_throughput, run_histogram, Execution, HistogramConfig,
    HistogramSource, TrialKeys,
};
use cipherlab::rc4::rc4;
use cipherlab::vrc4::encrypt_to_bytes;
use cipherlab::{Algorithm, KeyMaterial, SplitIndex};

#[test]
fn same_seed_same_counts() {
    let a = keystream_histogram(5, 50_000, 16, 11).unwrap();
    let b = keystream_histogram(5, 50_000, 16, 11).unwrap();
    let c = keystream_histogram(5, 50_000, 16, 12).unwrap();
    assert_eq!(a.counts, b.counts);
    assert_ne!(a.counts, c.counts);
    assert_eq!(a.counts.iter().sum::<u64>(), 50_000);
}

#[test]
fn zero_key_histograms_coincide() {
    let zero = KeyMaterial::new(vec![0u8; 16]).unwrap();
    let cfg = |source| HistogramConfig { source, position: 1, trials: 3000, keys: TrialKeys::Fixed(zero.clone()), seed: 4 };
    let r = run_histogram(&cfg(HistogramSource::Rc4Keystream), Execution::Parallel).unwrap();
    let v = run_histogram(&cfg(HistogramSource::Vrc4Body), Execution::Parallel).unwrap();
    assert_eq!(r.counts, v.counts);
    assert_eq!(r.counts.iter().filter(|&&c| c > 0).count(), 1);
}

#[test]
fn brute_force_both_ciphers_same_key() {
    let key = KeyMaterial::new(vec![0x00, 0x2A]).unwrap();
    let plain = b"known plaintext: attack at dawn";
    let r = brute_force_known_plaintext(Algorithm::Rc4, &rc4(&key, plain), plain, 16).unwrap();
    let v = brute_force_known_plaintext(Algorithm::Vrc4, &encrypt_to_bytes(plain, &key, SplitIndex::new(77)), plain, 16)
        .unwrap();
    assert_eq!(r.recovered.as_deref(), Some(&[0x00, 0x2A][..]));
    assert_eq!(v.recovered, r.recovered);
    assert_eq!(v.trials_tested, r.trials_tested);
}

#[test]
fn brute_force_exhausts_when_key_is_longer() {
    let key = KeyMaterial::new(vec![1, 2, 3]).unwrap();
    let plain = b"0123456789";
    let r = brute_force_known_plaintext(Algorithm::Vrc4, &encrypt_to_bytes(plain, &key, SplitIndex::new(1)), plain, 16)
        .unwrap();
    assert_eq!(r.recovered, None);
    assert_eq!(r.trials_tested, 1 << 16);
}

#[test]
fn benchmark_medians_are_stable() {
    // same cipher and seed twice; medians should agree within 25%
    for algo in [Algorithm::Rc4, Algorithm::Vrc4] {
        let a = measure_throughput(algo, 1 << 20, 9, 1).unwrap();
        let b = measure_throughput(algo, 1 << 20, 9, 1).unwrap();
        let ratio = a.median_seconds / b.median_seconds;
        assert!((0.75..=1.25).contains(&ratio), "{algo}: {} vs {}", a.median_seconds, b.median_seconds);
    }
}

#[test]
fn periodic_keys_are_equivalent_to_shorter_ones() {
    // [9, 9, 9] and [9, 9] expand to the same schedule vector
    let key = KeyMaterial::new(vec![9, 9, 9]).unwrap();
    let plain = b"0123456789";
    let r = brute_force_known_plaintext(Algorithm::Rc4, &rc4(&key, plain), plain, 16).unwrap();
    assert_eq!(r.recovered.as_deref(), Some(&[9, 9][..]));
}
