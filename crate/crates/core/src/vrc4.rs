//! VRC4: RC4 followed by a two-segment byte Vigenère layer.
//!
//! Encryption runs RC4 over the plaintext, splits the result after index `J`,
//! and shifts each segment with its own slice of the expanded key `T`:
//!
//! * segment A covers indices `0..=J` and is keyed with `T[0..=J]`;
//! * segment B covers `J+1..` and is keyed with `T[J+1..]`, or all of `T`
//!   when `J = 255` leaves that slice empty.
//!
//! Both slices repeat cyclically when the segment is longer. The serialized
//! ciphertext is `C1 ‖ C2 ‖ J`, one byte longer than the plaintext. `J` travels
//! in the clear, so it adds nothing to the search space of the key.

use std::ops::Range;

use crate::error::{Error, Result};
use crate::keying::{ExpandedKey, KeyMaterial};
use crate::vigenere::{byte_decrypt_in_place, byte_encrypt_in_place, ByteSegmentKey};

/// Where the RC4 output is split, `0..=255`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SplitIndex(u8);

impl SplitIndex {
    pub const fn new(j: u8) -> Self {
        SplitIndex(j)
    }

    pub fn get(self) -> u8 {
        self.0
    }

    /// Draws a split index from the thread-local CSPRNG.
    pub fn random() -> Self {
        SplitIndex(rand::random())
    }
}

impl From<u8> for SplitIndex {
    fn from(j: u8) -> Self {
        SplitIndex(j)
    }
}

impl TryFrom<u32> for SplitIndex {
    type Error = Error;

    fn try_from(j: u32) -> Result<Self> {
        u8::try_from(j).map(SplitIndex).map_err(|_| Error::SplitOutOfRange(j))
    }
}

/// Body (`C1 ‖ C2`) plus the split index that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vrc4Ciphertext {
    pub body: Vec<u8>,
    pub split: SplitIndex,
}

impl Vrc4Ciphertext {
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.body.len() + 1);
        out.extend_from_slice(&self.body);
        out.push(self.split.0);
        out
    }

    pub fn into_bytes(mut self) -> Vec<u8> {
        self.body.push(self.split.0);
        self.body
    }

    pub fn from_bytes(data: &[u8]) -> Result<Self> {
        let (&j, body) = data.split_last().ok_or(Error::MissingSplitByte)?;
        Ok(Vrc4Ciphertext { body: body.to_vec(), split: SplitIndex(j) })
    }
}

/// Index ranges of segment A and segment B for a message of `len` bytes.
pub fn segment_ranges(len: usize, split: SplitIndex) -> (Range<usize>, Range<usize>) {
    let boundary = (split.0 as usize + 1).min(len);
    (0..boundary, boundary..len)
}

/// Key slices of `t` for segment A and segment B.
pub fn segment_keys(t: &ExpandedKey, split: SplitIndex) -> (ByteSegmentKey<'_>, ByteSegmentKey<'_>) {
    let t = t.as_bytes();
    let j = split.0 as usize;
    let a = &t[..=j];
    let b = if j == 255 { &t[..] } else { &t[j + 1..] };
    (
        ByteSegmentKey::new(a).expect("non-empty"),
        ByteSegmentKey::new(b).expect("non-empty"),
    )
}

fn vigenere_layer(buf: &mut [u8], t: &ExpandedKey, split: SplitIndex, decrypt: bool) {
    let (ra, rb) = segment_ranges(buf.len(), split);
    let (ka, kb) = segment_keys(t, split);
    let apply = if decrypt { byte_decrypt_in_place } else { byte_encrypt_in_place };
    apply(&mut buf[ra], ka);
    apply(&mut buf[rb], kb);
}

pub fn vrc4_encrypt(plain: &[u8], key: &KeyMaterial, split: SplitIndex) -> Vrc4Ciphertext {
    let mut body = Vec::with_capacity(plain.len() + 1);
    body.extend_from_slice(plain);
    encrypt_in_place(&mut body, key, split);
    Vrc4Ciphertext { body, split }
}

/// Serialized `C1 ‖ C2 ‖ J`.
pub fn encrypt_to_bytes(plain: &[u8], key: &KeyMaterial, split: SplitIndex) -> Vec<u8> {
    vrc4_encrypt(plain, key, split).into_bytes()
}

fn encrypt_in_place(buf: &mut [u8], key: &KeyMaterial, split: SplitIndex) {
    let t = key.expand();
    crate::rc4::key_schedule(&t).apply_in_place(buf);
    vigenere_layer(buf, &t, split, false);
}

pub fn decrypt_ciphertext(cipher: &Vrc4Ciphertext, key: &KeyMaterial) -> Vec<u8> {
    let mut out = cipher.body.clone();
    let t = key.expand();
    vigenere_layer(&mut out, &t, cipher.split, true);
    crate::rc4::key_schedule(&t).apply_in_place(&mut out);
    out
}

/// Decrypts serialized `C1 ‖ C2 ‖ J`. A wrong key is not detectable and
/// yields garbage of the right length.
pub fn vrc4_decrypt(data: &[u8], key: &KeyMaterial) -> Result<Vec<u8>> {
    let (&j, body) = data.split_last().ok_or(Error::MissingSplitByte)?;
    let mut out = body.to_vec();
    let t = key.expand();
    vigenere_layer(&mut out, &t, SplitIndex(j), true);
    crate::rc4::key_schedule(&t).apply_in_place(&mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rc4::rc4;

    fn key(s: &str) -> KeyMaterial {
        KeyMaterial::try_from(s).unwrap()
    }

    #[test]
    fn empty_plaintext_is_just_j() {
        assert_eq!(encrypt_to_bytes(b"", &key("anything"), SplitIndex(7)), [0x07]);
        assert_eq!(vrc4_decrypt(&[0x07], &key("anything")).unwrap(), b"");
    }

    #[test]
    fn empty_ciphertext_is_malformed() {
        assert_eq!(vrc4_decrypt(&[], &key("k")), Err(Error::MissingSplitByte));
        assert_eq!(Vrc4Ciphertext::from_bytes(&[]), Err(Error::MissingSplitByte));
    }

    #[test]
    fn known_vector() {
        let c = encrypt_to_bytes(b"Plaintext", &key("Key"), SplitIndex(4));
        assert_eq!(c, [0x06, 0x58, 0x8F, 0x33, 0x3E, 0xB9, 0xFA, 0x6F, 0x4C, 0x04]);
        assert_eq!(vrc4_decrypt(&c, &key("Key")).unwrap(), b"Plaintext");
    }

    #[test]
    fn zero_key_reduces_to_rc4() {
        let k = KeyMaterial::new(vec![0u8]).unwrap();
        let plain = b"zero shift layer".to_vec();
        for j in [0u8, 3, 15, 255] {
            let c = vrc4_encrypt(&plain, &k, SplitIndex(j));
            assert_eq!(c.body, rc4(&k, &plain));
        }
    }

    #[test]
    fn segments_cover_every_index_once() {
        for j in 0..=255u8 {
            for len in [0usize, 1, j as usize, j as usize + 1, j as usize + 2, 256, 257, 1000] {
                let (a, b) = segment_ranges(len, SplitIndex(j));
                assert_eq!(a.start, 0);
                assert_eq!(a.end, b.start);
                assert_eq!(b.end, len);
                assert!(a.len() <= j as usize + 1);
            }
        }
    }

    #[test]
    fn last_split_uses_full_key_for_tail() {
        let k = key("Secret");
        let t = k.expand();
        let (a, b) = segment_keys(&t, SplitIndex(255));
        assert_eq!(a.as_bytes().len(), 256);
        assert_eq!(b.as_bytes(), &t.as_bytes()[..]);
        let plain = vec![0u8; 300];
        let c = encrypt_to_bytes(&plain, &k, SplitIndex(255));
        assert_eq!(c.len(), 301);
        assert_eq!(
            &c[250..],
            hex::decode(
                "5534506e376b9b538cbe991b4800a2e914f0a540aa543b9bd91cd59911d5f7e1e79a758171950d1a03fc78e37f35b47c0c20ff"
            )
            .unwrap()
        );
        assert_eq!(vrc4_decrypt(&c, &k).unwrap(), plain);
    }

    #[test]
    fn struct_and_bytes_agree() {
        let k = key("Secret");
        let c = vrc4_encrypt(b"Attack at dawn", &k, SplitIndex(200));
        let bytes = c.to_bytes();
        assert_eq!(bytes, hex::decode("980582d6c437ae9d98c4b9bfee5ac8").unwrap());
        assert_eq!(Vrc4Ciphertext::from_bytes(&bytes).unwrap(), c);
        assert_eq!(decrypt_ciphertext(&c, &k), b"Attack at dawn");
    }

    #[test]
    fn split_index_range() {
        assert_eq!(SplitIndex::try_from(255u32).unwrap().get(), 255);
        assert_eq!(SplitIndex::try_from(256u32), Err(Error::SplitOutOfRange(256)));
    }
}
