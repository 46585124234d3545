//! h^q(O(d)) of projective realizations, the per-pattern closed form, and
//! the Euler characteristic.
//!
//! cargo run --example cohomology

use gnc::cohomology::{
    alternating_sum, euler_characteristic, multidegree_cohomology, pattern_closed_form,
    sheaf_cohomology, Multidegree, ProjectiveModel,
};
use gnc::model::GncModel;
use gnc::Face;

fn main() {
    let triangle = ProjectiveModel::new(
        &GncModel::from_one_based(3, &[&[1, 2], &[2, 3], &[1, 3]], &[]).unwrap(),
    );
    for d in -2..=4 {
        let h = sheaf_cohomology(&triangle, d);
        println!(
            "triangle O({d}): h = {h:?}, chi = {} = {}",
            alternating_sum(&h),
            euler_characteristic(&triangle, d)
        );
    }

    let cone = ProjectiveModel::new(
        &GncModel::from_one_based(4, &[&[1, 2, 4], &[2, 3, 4], &[1, 3, 4]], &[]).unwrap(),
    );
    println!("cone O(1): {:?}", sheaf_cohomology(&cone, 1));
    println!("cone O(-1): {:?}", sheaf_cohomology(&cone, -1));

    let a = Multidegree::new(vec![0, 0, 0, -1]);
    let g: Face = [3].into_iter().collect();
    println!(
        "multidegree {:?}: Cech {:?}, closed form {:?}",
        a.entries(),
        multidegree_cohomology(&cone, &a),
        pattern_closed_form(&cone, g, Face::EMPTY)
    );
}
