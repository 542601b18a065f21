use thiserror::Error;

use crate::container::FrameError;

/// Errors produced by the cipher layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("key must be between 1 and 256 bytes, got {0}")]
    KeyLength(usize),
    #[error("key is not valid hex: {0}")]
    InvalidHexKey(String),
    #[error("vigenere key must not be empty")]
    EmptySegmentKey,
    #[error("invalid letter 0x{byte:02x} at offset {offset}: only uppercase A-Z is accepted")]
    InvalidLetter { offset: usize, byte: u8 },
    #[error("invalid vigenere key letter 0x{byte:02x} at offset {offset}: only uppercase A-Z is accepted")]
    InvalidAlphaKey { offset: usize, byte: u8 },
    #[error("malformed VRC4 ciphertext: missing trailing split byte")]
    MissingSplitByte,
    #[error("split index {0} is out of range 0..=255")]
    SplitOutOfRange(u32),
    #[error(transparent)]
    Frame(#[from] FrameError),
    #[error("keyspace of {0} bits is not supported (use 8, 16 or 24)")]
    Keyspace(u32),
    #[error("ciphertext length {ciphertext} does not fit known plaintext length {plaintext}")]
    LengthMismatch { ciphertext: usize, plaintext: usize },
    #[error("benchmark needs at least 5 repetitions, got {0}")]
    TooFewReps(usize),
    #[error("analysis needs at least one trial")]
    NoTrials,
}

pub type Result<T> = std::result::Result<T, Error>;
