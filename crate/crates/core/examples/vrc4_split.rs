// VRC4 step by step: RC4, split at J, two Vigenère segments, append J.
//
//     cargo run --example vrc4_split -- 4

use cipherlab::rc4::rc4;
use cipherlab::vrc4::{segment_keys, segment_ranges, vrc4_decrypt, vrc4_encrypt};
use cipherlab::{KeyMaterial, SplitIndex};

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02X}")).collect::<Vec<_>>().join(" ")
}

pub fn run(j: u8) -> cipherlab::Result<Vec<u8>> {
    let key = KeyMaterial::try_from("Key")?;
    let plain = b"Plaintext";
    let split = SplitIndex::new(j);

    let crc4 = rc4(&key, plain);
    let (ra, rb) = segment_ranges(plain.len(), split);
    let t = key.expand();
    let (ka, kb) = segment_keys(&t, split);
    println!("RC4 output      : {}", hex(&crc4));
    println!("segment A {ra:?} keyed with T[0..={j}] ({} bytes)", ka.as_bytes().len());
    println!("segment B {rb:?} keyed with {} bytes of T", kb.as_bytes().len());

    let c = vrc4_encrypt(plain, &key, split);
    println!("C1 || C2        : {}", hex(&c.body));
    let wire = c.into_bytes();
    println!("C1 || C2 || J   : {}", hex(&wire));

    let back = vrc4_decrypt(&wire, &key)?;
    println!("decrypted       : {}", String::from_utf8_lossy(&back));
    Ok(wire)
}

fn main() -> cipherlab::Result<()> {
    // without an argument J is drawn at random, as the CLI does
    let j = match std::env::args().nth(1) {
        Some(s) => s.parse().expect("J must be 0..=255"),
        None => SplitIndex::random().get(),
    };
    run(j)?;
    Ok(())
}
