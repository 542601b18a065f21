// The RC4 second-byte bias, and what the VRC4 body looks like at the same spot.
//
//     cargo run --release --example second_byte_bias -- 2097152

use cipherlab::analysis::{keystream_histogram, vrc4_body_histogram, Report};

pub fn run(trials: u64) -> cipherlab::Result<()> {
    let rc4 = keystream_histogram(1, trials, 16, 1)?;
    let vrc4 = vrc4_body_histogram(1, trials, 16, 1)?;
    let far = keystream_histogram(200, trials, 16, 2)?;

    for r in [&rc4, &vrc4, &far] {
        print!("{}", r.to_table());
    }
    println!("RC4 byte 1  : P(0) = {:.3}/256", rc4.frequency(0) * 256.0);
    println!("VRC4 byte 1 : P(0) = {:.3}/256", vrc4.frequency(0) * 256.0);
    println!("RC4 byte 200: chi-square {:.1}, p = {:.3}", far.chi_square, far.p_value);
    Ok(())
}

fn main() -> cipherlab::Result<()> {
    let trials = std::env::args().nth(1).map(|s| s.parse().expect("trials")).unwrap_or(1 << 20);
    run(trials)
}
