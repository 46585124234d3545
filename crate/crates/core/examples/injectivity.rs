//! Multiplication maps on cohomology and the hypotheses that predict
//! injectivity.
//!
//! cargo run --example injectivity

use gnc::cohomology::{
    classify_hypotheses, generic_verdict, multiplication_verdict, GenericForm, InvariantDivisor,
    Multiplier, ProjectiveModel,
};
use gnc::model::GncModel;
use gnc::ratlinalg::rat;

fn main() {
    // triangle, d = 0, generic linear form: H^1(O) -> H^1(O(1)) = 0
    let triangle = ProjectiveModel::new(
        &GncModel::from_one_based(3, &[&[1, 2], &[2, 3], &[1, 3]], &[]).unwrap(),
    );
    let form = GenericForm::new(&triangle, 1, 7).unwrap();
    println!("triangle, d = 0, generic e = 1");
    println!(
        "  hypotheses {:?}",
        classify_hypotheses(&triangle, 0, &Multiplier::Generic(form))
    );
    for v in generic_verdict(&triangle, 0, 1, 7, &[0, 1]).unwrap() {
        println!("  {v:?}");
    }

    // P^2 with B = H1 + H2: l = -1, divisors on H1 or H2 fall under EV at d = -1
    let plane = ProjectiveModel::new(
        &GncModel::from_one_based(3, &[&[1, 2, 3]], &[(1, rat(1, 1)), (2, rat(1, 1))]).unwrap(),
    );
    println!("plane with boundary, l = {}", plane.twist());
    for (d, c) in [
        (-1, vec![1, 0, 0]),
        (-1, vec![1, 2, 0]),
        (-1, vec![0, 0, 1]),
        (0, vec![0, 0, 1]),
    ] {
        let mult = Multiplier::Divisor(InvariantDivisor::new(c.clone(), 3).unwrap());
        let hyp = classify_hypotheses(&plane, d, &mult);
        let v = multiplication_verdict(&plane, d, &mult, &[0, 1, 2]).unwrap();
        let injective: Vec<bool> = v.iter().map(|x| x.injective).collect();
        println!("  d = {d}, c = {c:?}: {hyp:?}, injective {injective:?}");
    }
}
