//! Vigenère substitution over the 26-letter alphabet and over bytes.
//!
//! The alphabetic form is the classical tabula recta. The byte form uses the
//! same shifted-row construction with 256 symbols, which is what the VRC4
//! layer needs because its input is arbitrary RC4 ciphertext.

use crate::error::{Error, Result};

/// Uppercase ASCII letters `A`..=`Z` only.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlphaText(Vec<u8>);

impl AlphaText {
    /// Validates `bytes`; the error names the first offending offset.
    pub fn new(bytes: impl Into<Vec<u8>>) -> Result<Self> {
        let bytes = bytes.into();
        if let Some((offset, &byte)) = bytes.iter().enumerate().find(|(_, b)| !b.is_ascii_uppercase()) {
            return Err(Error::InvalidLetter { offset, byte });
        }
        Ok(AlphaText(bytes))
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        // validated ASCII
        std::str::from_utf8(&self.0).expect("AlphaText is ASCII")
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.0
    }
}

impl std::str::FromStr for AlphaText {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AlphaText::new(s.as_bytes())
    }
}

impl std::fmt::Display for AlphaText {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

fn shift_letters(text: &AlphaText, key: &AlphaText, sign: i8) -> Result<AlphaText> {
    if key.is_empty() {
        return Err(Error::EmptySegmentKey);
    }
    let out = text
        .0
        .iter()
        .zip(key.0.iter().cycle())
        .map(|(&c, &k)| {
            let shifted = (c - b'A') as i16 + sign as i16 * (k - b'A') as i16;
            b'A' + shifted.rem_euclid(26) as u8
        })
        .collect();
    Ok(AlphaText(out))
}

pub fn alpha_encrypt(plain: &AlphaText, key: &AlphaText) -> Result<AlphaText> {
    shift_letters(plain, key, 1)
}

pub fn alpha_decrypt(cipher: &AlphaText, key: &AlphaText) -> Result<AlphaText> {
    shift_letters(cipher, key, -1)
}

/// A non-empty byte key for one Vigenère segment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ByteSegmentKey<'a>(&'a [u8]);

impl<'a> ByteSegmentKey<'a> {
    pub fn new(bytes: &'a [u8]) -> Result<Self> {
        if bytes.is_empty() {
            return Err(Error::EmptySegmentKey);
        }
        Ok(ByteSegmentKey(bytes))
    }

    pub fn as_bytes(&self) -> &'a [u8] {
        self.0
    }
}

pub fn byte_encrypt_in_place(data: &mut [u8], key: ByteSegmentKey<'_>) {
    for chunk in data.chunks_mut(key.0.len()) {
        for (d, k) in chunk.iter_mut().zip(key.0) {
            *d = d.wrapping_add(*k);
        }
    }
}

pub fn byte_decrypt_in_place(data: &mut [u8], key: ByteSegmentKey<'_>) {
    for chunk in data.chunks_mut(key.0.len()) {
        for (d, k) in chunk.iter_mut().zip(key.0) {
            *d = d.wrapping_sub(*k);
        }
    }
}

/// `out[n] = data[n] + key[n mod keylen]` (mod 256).
pub fn byte_encrypt(data: &[u8], key: &[u8]) -> Result<Vec<u8>> {
    let key = ByteSegmentKey::new(key)?;
    let mut out = data.to_vec();
    byte_encrypt_in_place(&mut out, key);
    Ok(out)
}

/// `out[n] = data[n] - key[n mod keylen]` (mod 256).
pub fn byte_decrypt(data: &[u8], key: &[u8]) -> Result<Vec<u8>> {
    let key = ByteSegmentKey::new(key)?;
    let mut out = data.to_vec();
    byte_decrypt_in_place(&mut out, key);
    Ok(out)
}
