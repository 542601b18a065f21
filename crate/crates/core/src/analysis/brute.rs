use std::time::{Duration, Instant};

use crate::cipher;
use crate::container::Algorithm;
use crate::error::{Error, Result};
use crate::keying::KeyMaterial;

pub const KEYSPACE_NOTE: &str = "VRC4 appends its split index J in the clear, so a known-plaintext search \
enumerates exactly the same keys as for RC4: the keyspace is unchanged";

#[derive(Debug, Clone, PartialEq)]
pub struct BruteForceReport {
    pub cipher: Algorithm,
    pub keyspace_bits: u32,
    pub recovered: Option<Vec<u8>>,
    pub trials_tested: u64,
    pub elapsed: Duration,
}

fn expected_cipher_len(cipher: Algorithm, plain_len: usize) -> usize {
    match cipher {
        Algorithm::Vrc4 => plain_len + 1,
        Algorithm::Rc4 | Algorithm::VigenereAlpha => plain_len,
    }
}

/// Tries every `keyspace_bits / 8`-byte key in lexicographic order and stops
/// at the first one that decrypts `ciphertext` to `known_plain`.
pub fn brute_force_known_plaintext(
    cipher: Algorithm,
    ciphertext: &[u8],
    known_plain: &[u8],
    keyspace_bits: u32,
) -> Result<BruteForceReport> {
    if !matches!(keyspace_bits, 8 | 16 | 24) {
        return Err(Error::Keyspace(keyspace_bits));
    }
    if ciphertext.len() != expected_cipher_len(cipher, known_plain.len()) {
        return Err(Error::LengthMismatch { ciphertext: ciphertext.len(), plaintext: known_plain.len() });
    }
    let key_len = (keyspace_bits / 8) as usize;
    let space = 1u64 << keyspace_bits;

    let start = Instant::now();
    let mut recovered = None;
    let mut tested = 0;
    for candidate in 0..space {
        tested += 1;
        let bytes = candidate.to_be_bytes();
        let key = KeyMaterial::new(&bytes[8 - key_len..]).expect("1..=3 byte key");
        if cipher::decrypt(cipher, &key, ciphertext).is_ok_and(|p| p == known_plain) {
            recovered = Some(key.as_bytes().to_vec());
            break;
        }
    }
    Ok(BruteForceReport {
        cipher,
        keyspace_bits,
        recovered,
        trials_tested: tested,
        elapsed: start.elapsed(),
    })
}
