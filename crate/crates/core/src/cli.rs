//! The `cipherlab` command-line tool.
//!
//! Exit codes: see [`exit`]. Output files are written to a temporary file in
//! the destination directory and renamed into place only on success.

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analysis::{
    brute_force_known_plaintext, compare_throughput, keystream_histogram, measure_throughput, vrc4_body_histogram,
    Report, DEFAULT_TRIAL_KEY_LEN, KEYSPACE_NOTE,
};
use crate::cipher;
use crate::container::Algorithm;
use crate::error::Error;
use crate::keying::KeyMaterial;
use crate::rc4::rc4;
use crate::vectors::{self, KnownAnswer};
use crate::vrc4::{self, SplitIndex};

pub mod exit {
    pub const OK: i32 = 0;
    /// A known-answer vector did not reproduce.
    pub const VECTOR_MISMATCH: i32 = 1;
    pub const MISSING_FILE: i32 = 2;
    /// Invalid key, or any other invalid argument or parameter range.
    pub const INVALID_KEY: i32 = 3;
    /// Vigenère input outside A-Z.
    pub const INVALID_INPUT: i32 = 4;
    pub const MALFORMED_FRAME: i32 = 5;
    /// Any other I/O failure (unwritable output and so on).
    pub const IO: i32 = 6;
}

#[derive(Debug, Parser)]
#[command(name = "cipherlab", version, about = "RC4 / Vigenère / VRC4 cipher laboratory")]
struct Cli {
    /// More diagnostics on stderr.
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Encrypt a file into a VRC4 container frame.
    Encrypt(EncryptArgs),
    /// Decrypt a container frame.
    Decrypt(DecryptArgs),
    /// Recompute the built-in known-answer vectors.
    Vectors,
    /// Keystream statistics and toy brute force.
    Analyze(AnalyzeArgs),
    /// Encrypt+decrypt throughput of RC4 and VRC4.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
#[group(id = "key_source", multiple = false)]
struct KeyArgs {
    /// Passphrase, used verbatim as its UTF-8 bytes.
    #[arg(long)]
    key: Option<String>,
    /// Key as a hex string.
    #[arg(long)]
    key_hex: Option<String>,
    /// Read the raw key bytes from a file.
    #[arg(long)]
    key_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct EncryptArgs {
    #[command(flatten)]
    key: KeyArgs,
    #[arg(long, value_enum, default_value = "vrc4")]
    algo: AlgoArg,
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    out: PathBuf,
    /// Fix the VRC4 split index instead of drawing it at random (testing only).
    #[arg(long)]
    j: Option<u32>,
}

#[derive(Debug, Args)]
struct DecryptArgs {
    #[command(flatten)]
    key: KeyArgs,
    /// Must match the algorithm recorded in the frame when given.
    #[arg(long, value_enum)]
    algo: Option<AlgoArg>,
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TestKind {
    SecondByte,
    Uniformity,
    Brute,
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    #[arg(long, value_enum)]
    test: TestKind,
    #[arg(long, default_value_t = 1 << 21)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Keystream position for `uniformity` (default 200).
    #[arg(long)]
    position: Option<usize>,
    /// Keyspace size for `brute`.
    #[arg(long, default_value_t = 16)]
    bits: u32,
    #[command(flatten)]
    key: KeyArgs,
    /// Known plaintext for `brute`.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Write machine-readable records here.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long, default_value_t = 1 << 20)]
    size: usize,
    #[arg(long, default_value_t = 9)]
    reps: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Benchmark a single algorithm instead of the RC4/VRC4 pair.
    #[arg(long, value_enum)]
    algo: Option<AlgoArg>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlgoArg {
    Rc4,
    Vrc4,
    Vigenere,
}

impl From<AlgoArg> for Algorithm {
    fn from(a: AlgoArg) -> Self {
        match a {
            AlgoArg::Rc4 => Algorithm::Rc4,
            AlgoArg::Vrc4 => Algorithm::Vrc4,
            AlgoArg::Vigenere => Algorithm::VigenereAlpha,
        }
    }
}

/// A failure carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

type CmdResult = Result<(), Failure>;

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::KeyLength(_) | Error::InvalidHexKey(_) | Error::InvalidAlphaKey { .. } => exit::INVALID_KEY,
        Error::InvalidLetter { .. } => exit::INVALID_INPUT,
        Error::Frame(_) | Error::MissingSplitByte => exit::MALFORMED_FRAME,
        _ => exit::INVALID_KEY,
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let message = match &err {
            Error::Frame(f) => format!("malformed frame: {f}"),
            other => other.to_string(),
        };
        Failure::new(exit_code_for(&err), message)
    }
}

fn read_file(path: &Path) -> Result<Vec<u8>, Failure> {
    std::fs::read(path).map_err(|e| {
        let code = if e.kind() == io::ErrorKind::NotFound { exit::MISSING_FILE } else { exit::IO };
        Failure::new(code, format!("cannot read {}: {e}", path.display()))
    })
}

/// Writes through a temporary sibling file renamed into place.
fn write_atomic(path: &Path, data: &[u8]) -> CmdResult {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let io_fail = |e: io::Error| {
        let code = if e.kind() == io::ErrorKind::NotFound { exit::MISSING_FILE } else { exit::IO };
        Failure::new(code, format!("cannot write {}: {e}", path.display()))
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io_fail)?;
    tmp.write_all(data).map_err(io_fail)?;
    tmp.persist(path).map_err(|e| io_fail(e.error))?;
    Ok(())
}

fn load_key(args: &KeyArgs) -> Result<Option<KeyMaterial>, Failure> {
    let key = if let Some(text) = &args.key {
        KeyMaterial::new(text.as_bytes())?
    } else if let Some(h) = &args.key_hex {
        KeyMaterial::from_hex(h)?
    } else if let Some(path) = &args.key_file {
        KeyMaterial::new(read_file(path)?)?
    } else {
        return Ok(None);
    };
    Ok(Some(key))
}

fn require_key(args: &KeyArgs) -> Result<KeyMaterial, Failure> {
    load_key(args)?.ok_or_else(|| Failure::new(exit::INVALID_KEY, "a key is required: --key, --key-hex or --key-file"))
}

struct Ctx<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    verbose: u8,
}

macro_rules! say {
    ($w:expr, $($arg:tt)*) => {
        let _ = writeln!($w, $($arg)*);
    };
}

fn cmd_encrypt(ctx: &mut Ctx<'_>, args: &EncryptArgs) -> CmdResult {
    let algo = Algorithm::from(args.algo);
    let split = match args.j {
        Some(_) if algo != Algorithm::Vrc4 => {
            return Err(Failure::new(exit::INVALID_KEY, "--j is only valid with --algo vrc4"));
        }
        Some(j) => Some(SplitIndex::try_from(j)?),
        None => None,
    };
    let key = require_key(&args.key)?;
    let plain = read_file(&args.input)?;
    let split = split.unwrap_or_else(SplitIndex::random);
    let frame = cipher::seal(algo, &key, &plain, Some(split))?;
    write_atomic(&args.out, &frame)?;
    if ctx.verbose > 0 {
        let j = if algo == Algorithm::Vrc4 { format!(" j={}", split.get()) } else { String::new() };
        say!(ctx.err, "encrypted {} bytes with {algo}{j}", plain.len());
    }
    Ok(())
}

fn cmd_decrypt(ctx: &mut Ctx<'_>, args: &DecryptArgs) -> CmdResult {
    let key = require_key(&args.key)?;
    let frame = read_file(&args.input)?;
    let (algo, payload) = crate::container::read_frame(&frame).map_err(Error::from)?;
    if let Some(flag) = args.algo {
        let flag = Algorithm::from(flag);
        if flag != algo {
            return Err(Failure::new(
                exit::MALFORMED_FRAME,
                format!("algorithm mismatch: frame holds {algo}, --algo says {flag}"),
            ));
        }
    }
    let plain = cipher::decrypt(algo, &key, payload)?;
    write_atomic(&args.out, &plain)?;
    if ctx.verbose > 0 {
        say!(ctx.err, "decrypted {} bytes with {algo}", plain.len());
    }
    Ok(())
}

/// Prints and checks `vectors`, returning the process exit code.
pub fn run_vectors(vectors: &[KnownAnswer], out: &mut dyn Write) -> i32 {
    let mut failed = Vec::new();
    for o in vectors::check_all(vectors) {
        let status = if o.passed { "OK" } else { "FAIL" };
        say!(out, "{status:<4}  {:<28}  {}", o.name, o.detail);
        if !o.passed {
            failed.push(o.name);
        }
    }
    if failed.is_empty() {
        exit::OK
    } else {
        say!(out, "vector mismatch: {}", failed.join(", "));
        exit::VECTOR_MISMATCH
    }
}

fn check_trials(trials: u64) -> CmdResult {
    if trials == 0 {
        return Err(Failure::new(exit::INVALID_KEY, "--trials must be at least 1"));
    }
    Ok(())
}

fn emit_records(ctx: &mut Ctx<'_>, path: Option<&Path>, reports: &[&dyn Report]) -> CmdResult {
    for r in reports {
        let _ = write!(ctx.out, "{}", r.to_table());
    }
    if let Some(path) = path {
        let mut text = String::new();
        for r in reports {
            text.push_str(&r.to_record());
            text.push('\n');
        }
        write_atomic(path, text.as_bytes())?;
    }
    Ok(())
}

const BRUTE_DEFAULT_PLAIN: &[u8] = b"known plaintext: attack at dawn";

fn cmd_analyze(ctx: &mut Ctx<'_>, args: &AnalyzeArgs) -> CmdResult {
    match args.test {
        TestKind::SecondByte | TestKind::Uniformity => {
            check_trials(args.trials)?;
            let position = match args.test {
                TestKind::SecondByte => 1,
                _ => args.position.unwrap_or(200),
            };
            let rc4_hist = keystream_histogram(position, args.trials, DEFAULT_TRIAL_KEY_LEN, args.seed)?;
            let vrc4_hist = vrc4_body_histogram(position, args.trials, DEFAULT_TRIAL_KEY_LEN, args.seed)?;
            emit_records(ctx, args.out.as_deref(), &[&rc4_hist, &vrc4_hist])?;
            for h in [&rc4_hist, &vrc4_hist] {
                say!(
                    ctx.out,
                    "{} byte {}: P(0) = {:.3}/256, chi-square {:.2} (p = {:.4}, {} at 1%)",
                    h.source.name(),
                    position,
                    h.frequency(0) * 256.0,
                    h.chi_square,
                    h.p_value,
                    if h.passes_uniformity(0.01) { "uniform" } else { "non-uniform" }
                );
            }
        }
        TestKind::Brute => {
            if !matches!(args.bits, 8 | 16 | 24) {
                return Err(Error::Keyspace(args.bits).into());
            }
            let key_len = (args.bits / 8) as usize;
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            let key = match load_key(&args.key)? {
                Some(k) if k.len() != key_len => {
                    return Err(Failure::new(
                        exit::INVALID_KEY,
                        format!("planted key must be {key_len} bytes for a {}-bit search", args.bits),
                    ));
                }
                Some(k) => k,
                None => {
                    let mut bytes = vec![0u8; key_len];
                    rng.fill_bytes(&mut bytes);
                    KeyMaterial::new(bytes)?
                }
            };
            let plain = match &args.input {
                Some(p) => read_file(p)?,
                None => BRUTE_DEFAULT_PLAIN.to_vec(),
            };
            let split = SplitIndex::new((rng.next_u32() & 0xFF) as u8);
            let rc4_report = brute_force_known_plaintext(Algorithm::Rc4, &rc4(&key, &plain), &plain, args.bits)?;
            let vrc4_report = brute_force_known_plaintext(
                Algorithm::Vrc4,
                &vrc4::encrypt_to_bytes(&plain, &key, split),
                &plain,
                args.bits,
            )?;
            say!(ctx.out, "planted key {} (j = {})", hex::encode(key.as_bytes()), split.get());
            emit_records(ctx, args.out.as_deref(), &[&rc4_report, &vrc4_report])?;
            for r in [&rc4_report, &vrc4_report] {
                say!(
                    ctx.out,
                    "{}: recovered key {}",
                    r.cipher,
                    r.recovered.as_deref().map(hex::encode).unwrap_or_else(|| "none".into())
                );
            }
            let rc4_s = rc4_report.elapsed.as_secs_f64();
            if rc4_s > 0.0 {
                say!(ctx.out, "elapsed ratio vrc4/rc4 = {:.3}", vrc4_report.elapsed.as_secs_f64() / rc4_s);
            }
            say!(ctx.out, "{KEYSPACE_NOTE}");
        }
    }
    Ok(())
}

fn cmd_bench(ctx: &mut Ctx<'_>, args: &BenchArgs) -> CmdResult {
    if args.reps < crate::analysis::MIN_REPS {
        return Err(Error::TooFewReps(args.reps).into());
    }
    // never benchmark a broken cipher
    let mut sink = Vec::new();
    if run_vectors(&vectors::builtin(), &mut sink) != exit::OK {
        let _ = ctx.out.write_all(&sink);
        return Err(Failure::new(exit::VECTOR_MISMATCH, "known-answer self-test failed; not benchmarking"));
    }
    match args.algo {
        Some(a) => {
            let r = measure_throughput(a.into(), args.size, args.reps, args.seed)?;
            emit_records(ctx, args.out.as_deref(), &[&r])?;
        }
        None => {
            let cmp = compare_throughput(args.size, args.reps, args.seed)?;
            emit_records(ctx, args.out.as_deref(), &[&cmp.rc4, &cmp.vrc4])?;
            say!(ctx.out, "ratio vrc4/rc4 median time = {:.3}", cmp.ratio());
        }
    }
    Ok(())
}

/// Runs the tool on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    exit::OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    exit::INVALID_KEY
                }
            };
        }
    };
    let mut ctx = Ctx { out, err, verbose: cli.verbose };
    let result = match &cli.command {
        Command::Encrypt(a) => cmd_encrypt(&mut ctx, a),
        Command::Decrypt(a) => cmd_decrypt(&mut ctx, a),
        Command::Vectors => match run_vectors(&vectors::builtin(), ctx.out) {
            exit::OK => Ok(()),
            code => Err(Failure::new(code, "known-answer self-test failed")),
        },
        Command::Analyze(a) => cmd_analyze(&mut ctx, a),
        Command::Bench(a) => cmd_bench(&mut ctx, a),
    };
    match result {
        Ok(()) => exit::OK,
        Err(f) => {
            say!(ctx.err, "error: {}", f.message);
            f.code
        }
    }
}
