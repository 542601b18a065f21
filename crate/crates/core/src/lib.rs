//! RC4, Vigenère and the composite VRC4 cipher.
//!
//! * [`keying`]: key validation and the 256-byte expanded key.
//! * [`rc4`]: key scheduling and keystream generation.
//! * [`vigenere`]: the classical A-Z cipher and its byte-alphabet form.
//! * [`vrc4`]: RC4 followed by a split two-segment Vigenère layer.
//! * [`container`]: the `VRC4` file frame.
//! * [`cipher`]: framed encrypt/decrypt for every algorithm.
//! * [`analysis`]: keystream histograms, toy brute force, throughput.
//! * [`cli`]: the `cipherlab` command-line tool.
//! * [`vectors`]: built-in known-answer vectors.
//!
//! None of these ciphers are fit to protect real data.

pub mod analysis;
pub mod cipher;
pub mod cli;
pub mod container;
mod error;
pub mod keying;
pub mod rc4;
pub mod vectors;
pub mod vigenere;
pub mod vrc4;

pub use container::{Algorithm, FrameError};
pub use error::{Error, Result};
pub use keying::{expand_key, ExpandedKey, KeyMaterial};
pub use rc4::{key_schedule, Rc4State};
pub use vigenere::{AlphaText, ByteSegmentKey};
pub use vrc4::{SplitIndex, Vrc4Ciphertext};
