macro_rules! example {
    ($name:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(rc4_keystream, "rc4_keystream.rs");
example!(vigenere_tabula, "vigenere_tabula.rs");
example!(vrc4_split, "vrc4_split.rs");
example!(container_files, "container_files.rs");
example!(second_byte_bias, "second_byte_bias.rs");
example!(brute_force, "brute_force.rs");
example!(throughput, "throughput.rs");

#[test]
fn rc4_example() {
    assert_eq!(rc4_keystream::run("Key", "Plaintext").unwrap(), [0xBB, 0xF3, 0x16, 0xE8, 0xD9, 0x40, 0xAF, 0x0A, 0xD3]);
}

#[test]
fn vigenere_example() {
    vigenere_tabula::run().unwrap();
}

#[test]
fn vrc4_example() {
    assert_eq!(vrc4_split::run(4).unwrap(), [0x06, 0x58, 0x8F, 0x33, 0x3E, 0xB9, 0xFA, 0x6F, 0x4C, 0x04]);
}

#[test]
fn container_example() {
    container_files::run().unwrap();
}

#[test]
fn bias_example() {
    second_byte_bias::run(10_000).unwrap();
}

#[test]
fn brute_force_example() {
    brute_force::run([0x01, 0x02]).unwrap();
}

#[test]
fn throughput_example() {
    assert!(throughput::run(1 << 16, 5).unwrap() > 0.0);
}
