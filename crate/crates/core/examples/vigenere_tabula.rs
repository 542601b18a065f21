// Classical Vigenère over A-Z and the byte-alphabet form used inside VRC4.

use cipherlab::vigenere::{alpha_decrypt, alpha_encrypt, byte_decrypt, byte_encrypt, AlphaText};

pub fn run() -> cipherlab::Result<()> {
    // the first few rows of the tabula recta
    for row in 0..5u8 {
        let line: String = (0..26u8).map(|c| (b'A' + (row + c) % 26) as char).collect();
        println!("{} | {line}", (b'A' + row) as char);
    }

    let plain: AlphaText = "ATTACKATDAWN".parse()?;
    let key: AlphaText = "LEMON".parse()?;
    let cipher = alpha_encrypt(&plain, &key)?;
    println!("{plain} + {key} -> {cipher}");
    println!("{cipher} - {key} -> {}", alpha_decrypt(&cipher, &key)?);

    let data = [0x10, 0x20, 0x30, 0xFF];
    let shifted = byte_encrypt(&data, &[0x01, 0x02])?;
    println!("bytes {data:02X?} + [01 02] -> {shifted:02X?}");
    assert_eq!(byte_decrypt(&shifted, &[0x01, 0x02])?, data);

    if let Err(e) = "attack".parse::<AlphaText>() {
        println!("lowercase input is rejected: {e}");
    }
    Ok(())
}

fn main() -> cipherlab::Result<()> {
    run()
}
