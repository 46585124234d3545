//! Levels of the resolution by normalization and the adjunction degree on
//! each component.
//!
//! cargo run --example simplicial_resolution

use gnc::model::GncModel;
use gnc::ratlinalg::rat;
use gnc::simplicial::{
    apply_simplicial_map, check_simplicial_identities, level_components, log_canonical_degree,
    OrderMap, TupleMode,
};

fn main() {
    let m = GncModel::from_one_based(4, &[&[1, 2, 4], &[2, 3, 4], &[1, 3, 4]], &[(4, rat(1, 3))])
        .unwrap();
    println!("l = {}", log_canonical_degree(&m));
    for n in 0..=2 {
        println!("level {n}:");
        for c in level_components(&m, n, TupleMode::StrictOrdered) {
            println!(
                "  tuple {:?} G = {} boundary {} degree {}",
                c.tuple,
                c.intersection,
                c.induced_boundary
                    .iter()
                    .map(|(i, b)| format!("{b}*H{}", i + 1))
                    .collect::<Vec<_>>()
                    .join(" + "),
                c.projective_degree()
            );
        }
    }
    // face map d_0: X_2 -> X_1 drops the first facet of the tuple
    let delta = OrderMap::coface(2, 0);
    println!(
        "d_0 (F1, F2, F3) = {:?}",
        apply_simplicial_map(&["F1", "F2", "F3"], &delta).unwrap()
    );
    let sigma = OrderMap::codegeneracy(1, 0);
    println!(
        "s_0 (F1, F2) = {:?}",
        apply_simplicial_map(&["F1", "F2"], &sigma).unwrap()
    );
    println!(
        "identities through level 3: {}",
        check_simplicial_identities(&m, 3)
    );
}
