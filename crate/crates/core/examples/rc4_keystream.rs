// RC4 key scheduling and keystream generation.
//
//     cargo run --example rc4_keystream -- Key Plaintext

use cipherlab::{KeyMaterial, Rc4State};

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02X}")).collect::<Vec<_>>().join(" ")
}

pub fn run(key: &str, plain: &str) -> cipherlab::Result<Vec<u8>> {
    let key = KeyMaterial::try_from(key)?;

    let mut state = Rc4State::new(&key);
    let mut keystream = vec![0u8; plain.len()];
    state.fill_keystream(&mut keystream);
    println!("keystream : {}", hex(&keystream));

    let cipher = Rc4State::new(&key).apply_keystream(plain.as_bytes());
    println!("ciphertext: {}", hex(&cipher));

    // the same operation decrypts
    let back = Rc4State::new(&key).apply_keystream(&cipher);
    println!("decrypted : {}", String::from_utf8_lossy(&back));
    Ok(cipher)
}

fn main() -> cipherlab::Result<()> {
    let mut args = std::env::args().skip(1);
    let key = args.next().unwrap_or_else(|| "Key".into());
    let plain = args.next().unwrap_or_else(|| "Plaintext".into());
    run(&key, &plain)?;
    Ok(())
}
