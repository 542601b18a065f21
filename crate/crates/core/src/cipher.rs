//! One entry point per direction for every registered algorithm, with framing.
//!
//! The command-line tool and the throughput benchmark both go through
//! [`seal`] and [`open`].

use crate::container::{self, Algorithm};
use crate::error::{Error, Result};
use crate::keying::KeyMaterial;
use crate::rc4::rc4;
use crate::vigenere::{alpha_decrypt, alpha_encrypt, AlphaText};
use crate::vrc4::{self, SplitIndex};

fn alpha_key(key: &KeyMaterial) -> Result<AlphaText> {
    AlphaText::new(key.as_bytes()).map_err(|e| match e {
        Error::InvalidLetter { offset, byte } => Error::InvalidAlphaKey { offset, byte },
        other => other,
    })
}

/// Encrypts `plain` with `algo`, returning the bare ciphertext.
///
/// `split` is only used by VRC4; when absent a fresh random index is drawn.
pub fn encrypt(algo: Algorithm, key: &KeyMaterial, plain: &[u8], split: Option<SplitIndex>) -> Result<Vec<u8>> {
    match algo {
        Algorithm::Rc4 => Ok(rc4(key, plain)),
        Algorithm::Vrc4 => Ok(vrc4::encrypt_to_bytes(plain, key, split.unwrap_or_else(SplitIndex::random))),
        Algorithm::VigenereAlpha => {
            let key = alpha_key(key)?;
            let plain = AlphaText::new(plain)?;
            Ok(alpha_encrypt(&plain, &key)?.into_bytes())
        }
    }
}

pub fn decrypt(algo: Algorithm, key: &KeyMaterial, cipher: &[u8]) -> Result<Vec<u8>> {
    match algo {
        Algorithm::Rc4 => Ok(rc4(key, cipher)),
        Algorithm::Vrc4 => vrc4::vrc4_decrypt(cipher, key),
        Algorithm::VigenereAlpha => {
            let key = alpha_key(key)?;
            let cipher = AlphaText::new(cipher)?;
            Ok(alpha_decrypt(&cipher, &key)?.into_bytes())
        }
    }
}

/// Encrypts and wraps the result in a container frame.
pub fn seal(algo: Algorithm, key: &KeyMaterial, plain: &[u8], split: Option<SplitIndex>) -> Result<Vec<u8>> {
    Ok(container::write_frame(algo, &encrypt(algo, key, plain, split)?))
}

/// Reads the algorithm from the frame header and decrypts the payload.
pub fn open(frame: &[u8], key: &KeyMaterial) -> Result<(Algorithm, Vec<u8>)> {
    let (algo, payload) = container::read_frame(frame)?;
    Ok((algo, decrypt(algo, key, payload)?))
}
