// Encrypt+decrypt throughput of RC4 against VRC4.
//
//     cargo run --release --example throughput -- 1048576 9

use cipherlab::analysis::{compare_throughput, Report};

pub fn run(size: usize, reps: usize) -> cipherlab::Result<f64> {
    let cmp = compare_throughput(size, reps, 0)?;
    print!("{}{}", cmp.rc4.to_table(), cmp.vrc4.to_table());
    println!("VRC4 / RC4 median time: {:.3}", cmp.ratio());
    Ok(cmp.ratio())
}

fn main() -> cipherlab::Result<()> {
    let mut args = std::env::args().skip(1);
    let size = args.next().map(|s| s.parse().expect("size")).unwrap_or(1 << 20);
    let reps = args.next().map(|s| s.parse().expect("reps")).unwrap_or(9);
    run(size, reps)?;
    Ok(())
}
