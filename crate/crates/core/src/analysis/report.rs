//! Plain-text report output.
//!
//! Every report renders as a small human table and as a single
//! `key=value key=value ...` record line. Values never contain spaces or `=`.

use std::collections::BTreeMap;
use std::fmt::Write;

use super::{BenchReport, BruteForceReport, HistogramReport};

pub trait Report {
    fn kind(&self) -> &'static str;
    fn fields(&self) -> Vec<(&'static str, String)>;

    fn to_record(&self) -> String {
        let mut line = format!("kind={}", self.kind());
        for (k, v) in self.fields() {
            write!(line, " {k}={v}").unwrap();
        }
        line
    }

    fn to_table(&self) -> String {
        let fields = self.fields();
        let width = fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = format!("== {} ==\n", self.kind());
        for (k, v) in fields {
            // the raw tallies are only useful in the record form
            if k == "counts" {
                continue;
            }
            writeln!(out, "  {k:<width$}  {v}").unwrap();
        }
        out
    }
}

/// Splits a record line back into its fields.
pub fn parse_record(line: &str) -> Result<BTreeMap<String, String>, String> {
    line.split_whitespace()
        .map(|tok| {
            tok.split_once('=')
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .ok_or_else(|| format!("field `{tok}` has no `=`"))
        })
        .collect()
}

impl Report for HistogramReport {
    fn kind(&self) -> &'static str {
        "histogram"
    }

    fn fields(&self) -> Vec<(&'static str, String)> {
        let (peak, peak_freq) = self.peak();
        let counts = self.counts.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        vec![
            ("source", self.source.name().to_string()),
            ("position", self.position.to_string()),
            ("trials", self.trials.to_string()),
            ("key_len", self.key_len.to_string()),
            ("seed", self.seed.to_string()),
            ("chi_square", format!("{:.4}", self.chi_square)),
            ("p_value", format!("{:.6}", self.p_value)),
            ("freq_zero_x256", format!("{:.4}", self.frequency(0) * 256.0)),
            ("peak_value", peak.to_string()),
            ("peak_freq_x256", format!("{:.4}", peak_freq * 256.0)),
            ("counts", counts),
        ]
    }
}

impl Report for BruteForceReport {
    fn kind(&self) -> &'static str {
        "brute-force"
    }

    fn fields(&self) -> Vec<(&'static str, String)> {
        vec![
            ("cipher", self.cipher.name().to_string()),
            ("keyspace_bits", self.keyspace_bits.to_string()),
            ("recovered", self.recovered.as_deref().map(hex::encode).unwrap_or_else(|| "none".into())),
            ("trials_tested", self.trials_tested.to_string()),
            ("elapsed_s", format!("{:.6}", self.elapsed.as_secs_f64())),
        ]
    }
}

impl Report for BenchReport {
    fn kind(&self) -> &'static str {
        "bench"
    }

    fn fields(&self) -> Vec<(&'static str, String)> {
        vec![
            ("cipher", self.cipher.name().to_string()),
            ("payload_bytes", self.payload_bytes.to_string()),
            ("reps", self.reps.to_string()),
            ("median_s", format!("{:.9}", self.median_seconds)),
            ("throughput_mib_s", format!("{:.3}", self.throughput_mib_s)),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::keystream_histogram;
    use crate::container::Algorithm;
    use std::time::Duration;

    #[test]
    fn histogram_record_round_trips_counts() {
        let r = keystream_histogram(1, 1000, 16, 5).unwrap();
        let rec = parse_record(&r.to_record()).unwrap();
        assert_eq!(rec["kind"], "histogram");
        assert_eq!(rec["trials"], "1000");
        let counts: Vec<u64> = rec["counts"].split(',').map(|c| c.parse().unwrap()).collect();
        assert_eq!(counts, r.counts.to_vec());
        assert!(!r.to_table().contains("counts"));
    }

    #[test]
    fn brute_record() {
        let r = BruteForceReport {
            cipher: Algorithm::Vrc4,
            keyspace_bits: 16,
            recovered: Some(vec![0, 0x2a]),
            trials_tested: 43,
            elapsed: Duration::from_millis(2),
        };
        let rec = parse_record(&r.to_record()).unwrap();
        assert_eq!(rec["recovered"], "002a");
        assert_eq!(rec["cipher"], "vrc4");
        assert!(r.to_table().contains("trials_tested"));
    }

    #[test]
    fn malformed_record() {
        assert!(parse_record("kind=x oops").is_err());
    }
}
