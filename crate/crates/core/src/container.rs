//! Self-describing ciphertext frame.
//!
//! ```text
//! offset  size  field
//! 0       4     magic "VRC4" (56 52 43 34)
//! 4       1     version (01)
//! 5       1     algorithm (01 RC4, 02 VRC4, 03 Vigenère A-Z)
//! 6       8     payload length, big-endian u64
//! 14      n     payload
//! ```

use thiserror::Error;

pub const MAGIC: [u8; 4] = *b"VRC4";
pub const VERSION: u8 = 0x01;
pub const HEADER_LEN: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Rc4,
    Vrc4,
    VigenereAlpha,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Rc4, Algorithm::Vrc4, Algorithm::VigenereAlpha];

    pub fn id(self) -> u8 {
        match self {
            Algorithm::Rc4 => 0x01,
            Algorithm::Vrc4 => 0x02,
            Algorithm::VigenereAlpha => 0x03,
        }
    }

    pub fn from_id(id: u8) -> Result<Self, FrameError> {
        match id {
            0x01 => Ok(Algorithm::Rc4),
            0x02 => Ok(Algorithm::Vrc4),
            0x03 => Ok(Algorithm::VigenereAlpha),
            other => Err(FrameError::UnknownAlgorithm(other)),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Rc4 => "rc4",
            Algorithm::Vrc4 => "vrc4",
            Algorithm::VigenereAlpha => "vigenere",
        }
    }
}

impl std::fmt::Display for Algorithm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown algorithm `{s}` (expected rc4, vrc4 or vigenere)"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrameError {
    #[error("truncated header: {0} bytes, need at least 14")]
    TruncatedHeader(usize),
    #[error("bad magic {0:02x?}")]
    BadMagic([u8; 4]),
    #[error("unsupported version {0}")]
    UnsupportedVersion(u8),
    #[error("unknown algorithm id 0x{0:02x}")]
    UnknownAlgorithm(u8),
    #[error("truncated payload: header declares {declared} bytes, {available} present")]
    TruncatedPayload { declared: u64, available: usize },
    #[error("trailing data: header declares {declared} bytes, {available} present")]
    TrailingData { declared: u64, available: usize },
}

pub fn write_frame(algo: Algorithm, payload: &[u8]) -> Vec<u8> {
    let mut out = Vec::with_capacity(HEADER_LEN + payload.len());
    out.extend_from_slice(&MAGIC);
    out.push(VERSION);
    out.push(algo.id());
    out.extend_from_slice(&(payload.len() as u64).to_be_bytes());
    out.extend_from_slice(payload);
    out
}

/// Like [`write_frame`] but takes a raw id, rejecting unregistered ones.
pub fn write_frame_id(algo_id: u8, payload: &[u8]) -> Result<Vec<u8>, FrameError> {
    Ok(write_frame(Algorithm::from_id(algo_id)?, payload))
}

/// Validates a frame and borrows its payload.
pub fn read_frame(data: &[u8]) -> Result<(Algorithm, &[u8]), FrameError> {
    if data.len() < HEADER_LEN {
        return Err(FrameError::TruncatedHeader(data.len()));
    }
    let magic: [u8; 4] = data[..4].try_into().unwrap();
    if magic != MAGIC {
        return Err(FrameError::BadMagic(magic));
    }
    if data[4] != VERSION {
        return Err(FrameError::UnsupportedVersion(data[4]));
    }
    let algo = Algorithm::from_id(data[5])?;
    let declared = u64::from_be_bytes(data[6..14].try_into().unwrap());
    let payload = &data[HEADER_LEN..];
    match (payload.len() as u64).cmp(&declared) {
        std::cmp::Ordering::Less => Err(FrameError::TruncatedPayload { declared, available: payload.len() }),
        std::cmp::Ordering::Greater => Err(FrameError::TrailingData { declared, available: payload.len() }),
        std::cmp::Ordering::Equal => Ok((algo, payload)),
    }
}
