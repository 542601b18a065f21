//! Reference transcriptions used only to check the library.
//!
//! Deliberately naive: `usize` arithmetic with explicit `% 256`, fresh vectors,
//! no shared code with `cipherlab`.

#![allow(clippy::manual_swap, clippy::needless_range_loop)]

/// Initialization, initial permutation, then `n` bytes of stream generation.
pub fn rc4_keystream(key: &[u8], n: usize) -> Vec<u8> {
    let keylen = key.len();
    let mut s = vec![0usize; 256];
    let mut t = vec![0usize; 256];
    for i in 0..256 {
        s[i] = i;
        t[i] = key[i % keylen] as usize;
    }
    let mut j = 0usize;
    for i in 0..256 {
        j = (j + s[i] + t[i]) % 256;
        let tmp = s[i];
        s[i] = s[j];
        s[j] = tmp;
    }
    let mut out = Vec::new();
    let mut i = 0usize;
    let mut j = 0usize;
    while out.len() < n {
        i = (i + 1) % 256;
        j = (j + s[i]) % 256;
        let tmp = s[i];
        s[i] = s[j];
        s[j] = tmp;
        let idx = (s[i] + s[j]) % 256;
        out.push(s[idx] as u8);
    }
    out
}

pub fn rc4_encrypt(key: &[u8], plain: &[u8]) -> Vec<u8> {
    let ks = rc4_keystream(key, plain.len());
    let mut out = Vec::new();
    for n in 0..plain.len() {
        out.push(plain[n] ^ ks[n]);
    }
    out
}

pub fn byte_vigenere(data: &[u8], key: &[u8]) -> Vec<u8> {
    let mut out = Vec::new();
    for n in 0..data.len() {
        out.push(((data[n] as usize + key[n % key.len()] as usize) % 256) as u8);
    }
    out
}

pub fn expanded(key: &[u8]) -> Vec<u8> {
    (0..256).map(|i| key[i % key.len()]).collect()
}

/// RC4, split after index `j`, shift each segment by its slice of T, append J.
pub fn vrc4_encrypt(plain: &[u8], key: &[u8], j: u8) -> Vec<u8> {
    let c = rc4_encrypt(key, plain);
    let t = expanded(key);
    let j = j as usize;
    let cut = if c.len() < j + 1 { c.len() } else { j + 1 };
    let key_a = t[0..j + 1].to_vec();
    let key_b = if j == 255 { t.clone() } else { t[j + 1..256].to_vec() };
    let mut out = byte_vigenere(&c[..cut], &key_a);
    out.extend(byte_vigenere(&c[cut..], &key_b));
    out.push(j as u8);
    out
}
