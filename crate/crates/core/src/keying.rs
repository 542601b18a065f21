//! Key material validation and expansion to the 256-byte schedule vector.

use crate::error::{Error, Result};

pub const MIN_KEY_LEN: usize = 1;
pub const MAX_KEY_LEN: usize = 256;

/// A user key of 1 to 256 raw bytes.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KeyMaterial(Vec<u8>);

impl KeyMaterial {
    pub fn new(bytes: impl Into<Vec<u8>>) -> Result<Self> {
        let bytes = bytes.into();
        if !(MIN_KEY_LEN..=MAX_KEY_LEN).contains(&bytes.len()) {
            return Err(Error::KeyLength(bytes.len()));
        }
        Ok(KeyMaterial(bytes))
    }

    /// Parses a hex string such as `4b6579`. Whitespace is not accepted.
    pub fn from_hex(text: &str) -> Result<Self> {
        let bytes = hex::decode(text.trim()).map_err(|e| Error::InvalidHexKey(e.to_string()))?;
        Self::new(bytes)
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn expand(&self) -> ExpandedKey {
        expand_key(self)
    }
}

// Keys are secret; never print them by accident.
impl std::fmt::Debug for KeyMaterial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "KeyMaterial({} bytes)", self.0.len())
    }
}

impl TryFrom<&[u8]> for KeyMaterial {
    type Error = Error;

    fn try_from(bytes: &[u8]) -> Result<Self> {
        Self::new(bytes)
    }
}

impl TryFrom<&str> for KeyMaterial {
    type Error = Error;

    fn try_from(text: &str) -> Result<Self> {
        Self::new(text.as_bytes())
    }
}

/// The key repeated cyclically to exactly 256 bytes.
#[derive(Clone, PartialEq, Eq)]
pub struct ExpandedKey([u8; 256]);

impl ExpandedKey {
    pub fn as_bytes(&self) -> &[u8; 256] {
        &self.0
    }

    pub fn is_all_zero(&self) -> bool {
        self.0.iter().all(|&b| b == 0)
    }
}

impl std::fmt::Debug for ExpandedKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("ExpandedKey(..)")
    }
}

/// `t[i] = key[i mod keylen]` for every `i` in `0..256`.
pub fn expand_key(key: &KeyMaterial) -> ExpandedKey {
    let mut t = [0u8; 256];
    for (dst, src) in t.iter_mut().zip(key.as_bytes().iter().cycle()) {
        *dst = *src;
    }
    ExpandedKey(t)
}
