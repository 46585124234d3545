//! Vanishing of higher cohomology above the twist degree.
//!
//! cargo run --example vanishing

use gnc::cohomology::{check_vanishing, sheaf_cohomology, ProjectiveModel};
use gnc::model::GncModel;
use gnc::ratlinalg::rat;

fn main() {
    // b4 = 0: l = -1 and d = 0 needs the link of the apex to be contractible
    let facets: &[&[usize]] = &[&[1, 2, 4], &[2, 3, 4], &[1, 3, 4]];
    for b4 in [rat(0, 1), rat(1, 2), rat(1, 1)] {
        let pm =
            ProjectiveModel::new(&GncModel::from_one_based(4, facets, &[(4, b4.clone())]).unwrap());
        let report = check_vanishing(&pm, -3, 3);
        println!(
            "b4 = {b4}: l = {}, all pass {}",
            report.twist, report.all_pass
        );
        for d in -3..=3 {
            println!("  h(O({d})) = {:?}", sheaf_cohomology(&pm, d));
        }
    }
}
