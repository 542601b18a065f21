//! Built-in known-answer vectors, checked in both directions.

use crate::cipher;
use crate::container::Algorithm;
use crate::keying::KeyMaterial;
use crate::vrc4::SplitIndex;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnownAnswer {
    pub name: &'static str,
    pub algo: Algorithm,
    pub key: Vec<u8>,
    pub plain: Vec<u8>,
    pub cipher: Vec<u8>,
    /// VRC4 only.
    pub split: Option<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn ka(name: &'static str, algo: Algorithm, key: &[u8], plain: &[u8], cipher: &[u8], split: Option<u8>) -> KnownAnswer {
    KnownAnswer { name, algo, key: key.to_vec(), plain: plain.to_vec(), cipher: cipher.to_vec(), split }
}

pub fn builtin() -> Vec<KnownAnswer> {
    vec![
        ka("vigenere ATTACKATDAWN/LEMON", Algorithm::VigenereAlpha, b"LEMON", b"ATTACKATDAWN", b"LXFOPVEFRNHR", None),
        ka(
            "rc4 Key/Plaintext",
            Algorithm::Rc4,
            b"Key",
            b"Plaintext",
            &[0xBB, 0xF3, 0x16, 0xE8, 0xD9, 0x40, 0xAF, 0x0A, 0xD3],
            None,
        ),
        ka("rc4 Wiki/pedia", Algorithm::Rc4, b"Wiki", b"pedia", &[0x10, 0x21, 0xBF, 0x04, 0x20], None),
        ka(
            "rc4 Secret/Attack at dawn",
            Algorithm::Rc4,
            b"Secret",
            b"Attack at dawn",
            &[0x45, 0xA0, 0x1F, 0x64, 0x5F, 0xC3, 0x5B, 0x38, 0x35, 0x52, 0x54, 0x4B, 0x9B, 0xF5],
            None,
        ),
        ka(
            "vrc4 Key/Plaintext/J=4",
            Algorithm::Vrc4,
            b"Key",
            b"Plaintext",
            &[0x06, 0x58, 0x8F, 0x33, 0x3E, 0xB9, 0xFA, 0x6F, 0x4C, 0x04],
            Some(4),
        ),
    ]
}

fn show(algo: Algorithm, bytes: &[u8]) -> String {
    match algo {
        Algorithm::VigenereAlpha => String::from_utf8_lossy(bytes).into_owned(),
        _ => hex::encode_upper(bytes),
    }
}

pub fn check(v: &KnownAnswer) -> VectorOutcome {
    let fail = |detail: String| VectorOutcome { name: v.name, passed: false, detail };
    let key = match KeyMaterial::new(v.key.clone()) {
        Ok(k) => k,
        Err(e) => return fail(e.to_string()),
    };
    let enc = match cipher::encrypt(v.algo, &key, &v.plain, v.split.map(SplitIndex::new)) {
        Ok(c) => c,
        Err(e) => return fail(format!("encrypt failed: {e}")),
    };
    if enc != v.cipher {
        return fail(format!("encrypt gave {}, expected {}", show(v.algo, &enc), show(v.algo, &v.cipher)));
    }
    let dec = match cipher::decrypt(v.algo, &key, &v.cipher) {
        Ok(p) => p,
        Err(e) => return fail(format!("decrypt failed: {e}")),
    };
    if dec != v.plain {
        return fail(format!("decrypt gave {}, expected {}", show(v.algo, &dec), show(v.algo, &v.plain)));
    }
    VectorOutcome {
        name: v.name,
        passed: true,
        detail: format!("{} <-> {}", show(v.algo, &v.plain), show(v.algo, &v.cipher)),
    }
}

pub fn check_all(vectors: &[KnownAnswer]) -> Vec<VectorOutcome> {
    vectors.iter().map(check).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_vectors_pass() {
        for o in check_all(&builtin()) {
            assert!(o.passed, "{}: {}", o.name, o.detail);
        }
    }

    #[test]
    fn corrupted_vector_fails() {
        let mut v = builtin().remove(1);
        v.cipher[0] ^= 1;
        let o = check(&v);
        assert!(!o.passed);
        assert!(o.detail.contains("expected"));
    }
}
