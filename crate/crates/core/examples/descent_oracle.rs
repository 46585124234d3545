//! The descent complex over facet tuples, compared with the Cech engine.
//!
//! cargo run --example descent_oracle

use gnc::cohomology::{sheaf_cohomology, ProjectiveModel};
use gnc::descent::{descent_cohomology, descent_complex};
use gnc::model::generate_random_model;

fn main() {
    for seed in 0..6 {
        let m = generate_random_model(seed, 5, 3, 4).unwrap();
        let pm = ProjectiveModel::new(&m);
        println!("seed {seed}: facets {:?}", m.facets());
        for d in 0..=3 {
            let c = descent_complex(&pm, d).unwrap();
            let dims: Vec<usize> = c.degrees().map(|q| c.dim(q)).collect();
            let oracle = descent_cohomology(&pm, d).unwrap();
            let engine = sheaf_cohomology(&pm, d);
            println!("  d = {d}: cochains {dims:?}, oracle {oracle:?}, engine {engine:?}");
        }
    }
}
