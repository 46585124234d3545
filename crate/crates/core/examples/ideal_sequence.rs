//! Hilbert functions of unions of lc centers and the restriction sequence
//! to the LCS locus.
//!
//! cargo run --example ideal_sequence

use gnc::ideals::{
    check_ideal_sequence, hilbert_function, intersect_with_lcs, normalization_preimage, CenterUnion,
};
use gnc::model::GncModel;
use gnc::Face;

fn main() {
    let m = GncModel::from_one_based(3, &[&[1, 2], &[2, 3], &[1, 3]], &[]).unwrap();
    let plane: Face = [0, 1].into_iter().collect();
    let z = CenterUnion::new(&m, [plane]).unwrap();
    let y = m.lcs().unwrap();
    println!("Z = {:?}, Y = {:?}", z.faces(), y.facets());
    println!("Z meet Y = {:?}", intersect_with_lcs(&m, &z).faces());
    for d in 0..=4 {
        println!(
            "  d = {d}: h_X {} h_Z {} h_Y {}",
            hilbert_function(m.facets(), d),
            hilbert_function(z.faces(), d),
            hilbert_function(y.facets(), d)
        );
    }
    println!(
        "sequence exact through degree 4: {:?}",
        check_ideal_sequence(&m, &z, 4)
    );
    for (f, u) in normalization_preimage(&m, &z) {
        println!("  preimage on {f}: {:?}", u.faces());
    }
}
