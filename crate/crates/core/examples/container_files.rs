// Sealing files in the `VRC4` container and opening them again.

use cipherlab::cipher::{open, seal};
use cipherlab::container::{read_frame, HEADER_LEN};
use cipherlab::{Algorithm, KeyMaterial};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let dir = tempfile::tempdir()?;
    let key = KeyMaterial::from_hex("000102030405060708090a0b0c0d0e0f")?;
    let message = b"a message that will travel inside a frame".to_vec();

    for algo in [Algorithm::Rc4, Algorithm::Vrc4] {
        let path = dir.path().join(format!("message.{algo}"));
        std::fs::write(&path, seal(algo, &key, &message, None)?)?;

        let frame = std::fs::read(&path)?;
        let (stored, payload) = read_frame(&frame)?;
        println!("{}: header {:02X?}, algo {stored}, {} payload bytes", path.display(), &frame[..HEADER_LEN], payload.len());

        let (_, plain) = open(&frame, &key)?;
        assert_eq!(plain, message);
    }

    let mut tampered = seal(Algorithm::Vrc4, &key, &message, None)?;
    tampered[0] = b'X';
    match open(&tampered, &key) {
        Err(e) => println!("tampered frame: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
