//! RC4 key scheduling and keystream generation.
//!
//! This is plain RC4: the keystream starts at the first generated byte with no
//! prefix discarded. The early-byte biases that follow from this are measured by
//! [`crate::analysis`].

use crate::keying::{ExpandedKey, KeyMaterial};

/// The RC4 permutation `s` together with the generator indices.
#[derive(Clone, PartialEq, Eq)]
pub struct Rc4State {
    s: [u8; 256],
    i: u8,
    j: u8,
}

impl Rc4State {
    /// The identity permutation, i.e. the state before the key is mixed in.
    pub fn identity() -> Self {
        let mut s = [0u8; 256];
        for (n, v) in s.iter_mut().enumerate() {
            *v = n as u8;
        }
        Rc4State { s, i: 0, j: 0 }
    }

    /// Schedules a fresh state from a user key.
    pub fn new(key: &KeyMaterial) -> Self {
        key_schedule(&key.expand())
    }

    pub fn permutation(&self) -> &[u8; 256] {
        &self.s
    }

    pub fn indices(&self) -> (u8, u8) {
        (self.i, self.j)
    }

    #[inline]
    pub fn next_byte(&mut self) -> u8 {
        self.i = self.i.wrapping_add(1);
        let si = self.s[self.i as usize];
        self.j = self.j.wrapping_add(si);
        let sj = self.s[self.j as usize];
        self.s[self.i as usize] = sj;
        self.s[self.j as usize] = si;
        self.s[si.wrapping_add(sj) as usize]
    }

    pub fn fill_keystream(&mut self, out: &mut [u8]) {
        for b in out {
            *b = self.next_byte();
        }
    }

    /// XORs the keystream into `data` in place.
    pub fn apply_in_place(&mut self, data: &mut [u8]) {
        for b in data {
            *b ^= self.next_byte();
        }
    }

    pub fn apply_keystream(&mut self, data: &[u8]) -> Vec<u8> {
        let mut out = data.to_vec();
        self.apply_in_place(&mut out);
        out
    }
}

impl std::fmt::Debug for Rc4State {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Rc4State")
            .field("i", &self.i)
            .field("j", &self.j)
            .finish_non_exhaustive()
    }
}

/// Runs the 256-swap key-mixing loop over the identity permutation.
pub fn key_schedule(t: &ExpandedKey) -> Rc4State {
    let mut state = Rc4State::identity();
    let t = t.as_bytes();
    let mut j = 0u8;
    for (i, &ti) in t.iter().enumerate() {
        j = j.wrapping_add(state.s[i]).wrapping_add(ti);
        state.s.swap(i, j as usize);
    }
    state
}

pub fn next_keystream_byte(state: &mut Rc4State) -> u8 {
    state.next_byte()
}

pub fn apply_keystream(state: &mut Rc4State, data: &[u8]) -> Vec<u8> {
    state.apply_keystream(data)
}

/// Encrypts (or decrypts) `data` under a freshly scheduled state.
pub fn rc4(key: &KeyMaterial, data: &[u8]) -> Vec<u8> {
    Rc4State::new(key).apply_keystream(data)
}
