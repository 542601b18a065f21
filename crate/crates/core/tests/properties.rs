mod common;

use cipherlab::container::{read_frame, write_frame, Algorithm};
use cipherlab::rc4::rc4;
use cipherlab::vigenere::{alpha_decrypt, alpha_encrypt, byte_decrypt, byte_encrypt, AlphaText};
use cipherlab::vrc4::{encrypt_to_bytes, vrc4_decrypt, vrc4_encrypt};
use cipherlab::{KeyMaterial, Rc4State, SplitIndex};
use proptest::prelude::*;

use common::oracle;

fn key_bytes() -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(any::<u8>(), 1..=256)
}

fn letters(min: usize, max: usize) -> impl Strategy<Value = String> {
    prop::collection::vec(b'A'..=b'Z', min..max).prop_map(|v| String::from_utf8(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn rc4_matches_oracle(key in key_bytes(), data in prop::collection::vec(any::<u8>(), 0..600)) {
        let k = KeyMaterial::new(key.clone()).unwrap();
        prop_assert_eq!(rc4(&k, &data), oracle::rc4_encrypt(&key, &data));
    }

    #[test]
    fn vrc4_matches_oracle(key in key_bytes(), data in prop::collection::vec(any::<u8>(), 0..600), j in any::<u8>()) {
        let k = KeyMaterial::new(key.clone()).unwrap();
        prop_assert_eq!(encrypt_to_bytes(&data, &k, SplitIndex::new(j)), oracle::vrc4_encrypt(&data, &key, j));
    }

    #[test]
    fn vrc4_round_trip_and_length_law(key in key_bytes(), data in prop::collection::vec(any::<u8>(), 0..1200), j in any::<u8>()) {
        let k = KeyMaterial::new(key).unwrap();
        let c = encrypt_to_bytes(&data, &k, SplitIndex::new(j));
        prop_assert_eq!(c.len(), data.len() + 1);
        prop_assert_eq!(*c.last().unwrap(), j);
        prop_assert_eq!(vrc4_decrypt(&c, &k).unwrap(), data);
    }

    #[test]
    fn byte_vigenere_round_trip(data in prop::collection::vec(any::<u8>(), 0..512), key in prop::collection::vec(any::<u8>(), 1..64)) {
        let c = byte_encrypt(&data, &key).unwrap();
        prop_assert_eq!(&c, &oracle::byte_vigenere(&data, &key));
        prop_assert_eq!(byte_decrypt(&c, &key).unwrap(), data);
    }

    #[test]
    fn alpha_vigenere_round_trip(plain in letters(0, 200), key in letters(1, 20)) {
        let p: AlphaText = plain.parse().unwrap();
        let k: AlphaText = key.parse().unwrap();
        let c = alpha_encrypt(&p, &k).unwrap();
        prop_assert_eq!(c.len(), p.len());
        prop_assert_eq!(alpha_decrypt(&c, &k).unwrap(), p);
    }

    #[test]
    fn frame_round_trip(id in 1u8..=3, payload in prop::collection::vec(any::<u8>(), 0..2048)) {
        let algo = Algorithm::from_id(id).unwrap();
        let f = write_frame(algo, &payload);
        prop_assert_eq!(f.len(), 14 + payload.len());
        prop_assert_eq!(read_frame(&f).unwrap(), (algo, &payload[..]));
    }

    #[test]
    fn frame_reader_never_panics(data in prop::collection::vec(any::<u8>(), 0..64)) {
        let _ = read_frame(&data);
    }

    #[test]
    fn state_stays_a_permutation(key in key_bytes(), steps in 0usize..5000) {
        let mut s = Rc4State::new(&KeyMaterial::new(key).unwrap());
        for _ in 0..steps {
            s.next_byte();
        }
        let mut p = s.permutation().to_vec();
        p.sort_unstable();
        prop_assert!(p.iter().enumerate().all(|(i, &v)| i == v as usize));
    }
}

#[test]
fn identical_keys_give_identical_streams() {
    let k = KeyMaterial::try_from("determinism").unwrap();
    let mut a = Rc4State::new(&k);
    let mut b = Rc4State::new(&k);
    let (mut x, mut y) = (vec![0u8; 4096], vec![0u8; 4096]);
    a.fill_keystream(&mut x);
    b.fill_keystream(&mut y);
    assert_eq!(x, y);
}

#[test]
fn zero_key_vrc4_body_is_rc4_for_long_messages() {
    let k = KeyMaterial::new(vec![0u8; 3]).unwrap();
    let plain: Vec<u8> = (0..3000u32).map(|i| (i * 31) as u8).collect();
    for j in [0u8, 1, 128, 254, 255] {
        assert_eq!(vrc4_encrypt(&plain, &k, SplitIndex::new(j)).body, rc4(&k, &plain));
    }
}
