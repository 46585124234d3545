//! Axiom checks: accepted models, a rejected one with its witness, and the
//! three generator families.
//!
//! cargo run --example validate_models

use gnc::model::{generate_with_family, GncModel};
use gnc::ratlinalg::rat;

fn main() {
    let xyz = GncModel::from_one_based(3, &[&[1, 2], &[2, 3], &[1, 3]], &[]).unwrap();
    println!("xyz = 0: facets {:?}, core {}", xyz.facets(), xyz.core());

    let plane = GncModel::from_one_based(2, &[&[1, 2]], &[(1, rat(1, 1)), (2, rat(1, 1))]).unwrap();
    println!(
        "(A^2, H1 + H2): core {}, reduced core {}",
        plane.core(),
        plane.reduced_core()
    );

    match GncModel::from_one_based(4, &[&[1, 2], &[2, 3], &[3, 4]], &[]) {
        Ok(_) => println!("path of three edges unexpectedly accepted"),
        Err(e) => println!(
            "path of three edges rejected: {e}\n  witness {}",
            e.witness()
        ),
    }

    match GncModel::from_one_based(3, &[&[1, 2], &[2, 3]], &[(1, rat(1, 2))]) {
        Ok(_) => println!("off-core boundary unexpectedly accepted"),
        Err(e) => println!("off-core boundary rejected: {e}"),
    }

    for (seed, ambient, size, count) in [(0, 5, 3, 4), (1, 5, 3, 4), (2, 5, 4, 3)] {
        let (m, family) = generate_with_family(seed, ambient, size, count).unwrap();
        println!("seed {seed}: {family:?} {}", m.digest());
    }
}
