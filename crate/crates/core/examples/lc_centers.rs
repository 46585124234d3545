//! lc centers, the LCS locus, Sing, and the residue chain of a model.
//!
//! cargo run --example lc_centers

use gnc::model::GncModel;
use gnc::ratlinalg::rat;

fn show(name: &str, m: &GncModel) {
    println!("{name}");
    println!("  lc centers: {:?}", m.lc_centers());
    for (k, y) in m.lcs_chain().iter().enumerate() {
        println!("  chain[{k}]: {}", y.digest());
    }
    match m.sing() {
        Some(s) => println!("  Sing: {:?}", s.facets()),
        None => println!("  Sing: empty"),
    }
}

fn main() {
    show(
        "xyz = 0",
        &GncModel::from_one_based(3, &[&[1, 2], &[2, 3], &[1, 3]], &[]).unwrap(),
    );
    show(
        "(A^2, H1 + H2)",
        &GncModel::from_one_based(2, &[&[1, 2]], &[(1, rat(1, 1)), (2, rat(1, 1))]).unwrap(),
    );
    // a klt coefficient on the cone axis keeps 4 in every center
    show(
        "cone over the triangle, b4 = 1/2",
        &GncModel::from_one_based(4, &[&[1, 2, 4], &[2, 3, 4], &[1, 3, 4]], &[(4, rat(1, 2))])
            .unwrap(),
    );
}
