// Known-plaintext search over a 16-bit keyspace for RC4 and VRC4.

use cipherlab::analysis::{brute_force_known_plaintext, Report, KEYSPACE_NOTE};
use cipherlab::rc4::rc4;
use cipherlab::vrc4::encrypt_to_bytes;
use cipherlab::{Algorithm, KeyMaterial, SplitIndex};

pub fn run(planted: [u8; 2]) -> cipherlab::Result<()> {
    let key = KeyMaterial::new(planted.to_vec())?;
    let plain = b"GET / HTTP/1.1\r\n";

    let rc4_report = brute_force_known_plaintext(Algorithm::Rc4, &rc4(&key, plain), plain, 16)?;
    let vrc4_report =
        brute_force_known_plaintext(Algorithm::Vrc4, &encrypt_to_bytes(plain, &key, SplitIndex::random()), plain, 16)?;

    for r in [&rc4_report, &vrc4_report] {
        print!("{}", r.to_table());
        assert_eq!(r.recovered.as_deref(), Some(&planted[..]));
    }
    println!("{KEYSPACE_NOTE}");
    Ok(())
}

fn main() -> cipherlab::Result<()> {
    run([0xBE, 0xEF])
}
