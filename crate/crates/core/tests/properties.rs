use std::collections::{BTreeSet, HashMap};

use num_traits::{One, Zero};
use proptest::prelude::*;

use gnc::cohomology::{
    alternating_sum, classify_hypotheses, contributing_multidegrees, euler_characteristic,
    multidegree_cohomology, multidegree_complex, multiplication_verdict, pattern_closed_form,
    sheaf_cohomology, InvariantDivisor, Multidegree, Multiplier, ProjectiveModel,
};
use gnc::descent::{descent_cohomology, descent_complex};
use gnc::ideals::{check_ideal_sequence, hilbert_function, CenterUnion};
use gnc::model::{generate_random_model, GncModel};
use gnc::ratlinalg::{
    binomial_poly, check_chain_map, induced_cohomology_map, CochainComplex, RatMatrix, Rational,
};
use gnc::simplicial::{level_components, log_canonical_degree, TupleMode};
use gnc::suite::corpus_parameters;
use gnc::Face;

fn model_from(seed: u64) -> GncModel {
    let (n, p, c) = corpus_parameters(seed);
    generate_random_model(seed, n, p, c).unwrap()
}

fn models() -> impl Strategy<Value = GncModel> {
    (0u64..50_000).prop_map(model_from)
}

fn int_matrix(max_dim: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_dim, 1..=max_dim)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-3i64..=3, c), r))
}

/// `S ↦ S` into the target basis: multiplication by a monomial on Čech cochains.
fn monomial_chain_map(src: &CochainComplex<Face>, dst: &CochainComplex<Face>) -> Vec<RatMatrix> {
    src.degrees()
        .map(|p| {
            let sb = src.basis(p).unwrap();
            let tb = dst.basis(p).unwrap();
            let index: HashMap<Face, usize> = tb.iter().enumerate().map(|(k, s)| (*s, k)).collect();
            let mut m = RatMatrix::zeros(tb.len(), sb.len());
            for (c, s) in sb.iter().enumerate() {
                if let Some(&r) = index.get(s) {
                    m.set(r, c, Rational::one());
                }
            }
            m
        })
        .collect()
}

fn connected(facets: &[Face]) -> bool {
    let mut seen = vec![false; facets.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(k) = stack.pop() {
        for j in 0..facets.len() {
            if !seen[j] && !facets[k].is_disjoint(facets[j]) {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_agrees_across_pivot_orders(rows in int_matrix(7)) {
        let m = RatMatrix::from_i64_rows(&rows);
        let r = m.rank();
        prop_assert_eq!(r, m.rank_fraction_free());
        prop_assert_eq!(r, m.transpose().rank());
        let kernel = m.rref().kernel_basis();
        prop_assert_eq!(kernel.len() + r, m.cols());
        for v in kernel {
            prop_assert!(m.mul_vec(&v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn built_complexes_square_to_zero(m in models(), d in 0i64..=3) {
        let pm = ProjectiveModel::new(&m);
        prop_assert!(descent_complex(&pm, d).unwrap().check_d_squared().is_ok());
        for a in contributing_multidegrees(&pm, d).into_iter().take(20) {
            prop_assert!(multidegree_complex(&pm, &a).complex.check_d_squared().is_ok());
        }
    }

    #[test]
    fn induced_maps_compose(seed in 0u64..50_000, i in 0usize..7, j in 0usize..7, d in -3i64..=1) {
        let m = model_from(seed);
        let pm = ProjectiveModel::new(&m);
        let n = m.ambient();
        let (i, j) = (i % n, j % n);
        let sources = contributing_multidegrees(&pm, d);
        prop_assume!(!sources.is_empty());
        let a = &sources[seed as usize % sources.len()];
        let mut ei = vec![0; n];
        ei[i] = 1;
        let mut ej = vec![0; n];
        ej[j] = 1;
        let b = a.shifted(&ei);
        let c = b.shifted(&ej);
        let ca = multidegree_complex(&pm, a).complex;
        let cb = multidegree_complex(&pm, &b).complex;
        let cc = multidegree_complex(&pm, &c).complex;
        let f = monomial_chain_map(&ca, &cb);
        let g = monomial_chain_map(&cb, &cc);
        let gf = monomial_chain_map(&ca, &cc);
        prop_assert!(check_chain_map(&ca, &cb, &f).is_ok());
        prop_assert!(check_chain_map(&cb, &cc, &g).is_ok());
        for q in ca.degrees() {
            let hf = induced_cohomology_map(&ca, &cb, &f, q).unwrap();
            let hg = induced_cohomology_map(&cb, &cc, &g, q).unwrap();
            let hgf = induced_cohomology_map(&ca, &cc, &gf, q).unwrap();
            prop_assert_eq!(hg.mul(&hf).unwrap(), hgf);
        }
    }

    #[test]
    fn facets_are_equidimensional(m in models()) {
        let k = m.facets()[0].len();
        prop_assert!(m.facets().iter().all(|f| f.len() == k));
    }

    #[test]
    fn zero_boundary_centers_are_facet_intersections(m in models()) {
        let m0 = m.without_boundary();
        prop_assert_eq!(m0.lc_centers_b0_intersections().unwrap(), m0.lc_centers());
    }

    #[test]
    fn centers_decompose_through_lcs(m in models()) {
        let mut expected: BTreeSet<Face> = m.facets().iter().copied().collect();
        if let Some(y) = m.lcs() {
            expected.extend(y.lc_centers());
        }
        prop_assert_eq!(m.lc_centers(), expected);
    }

    #[test]
    fn lcs_is_valid_with_reduced_core(m in models()) {
        if let Some(y) = m.lcs() {
            let raw: Vec<Vec<usize>> = y.facets().iter().map(|f| f.to_vec()).collect();
            prop_assert_eq!(GncModel::validate(y.ambient(), &raw, y.boundary().as_map()), Ok(y.clone()));
            prop_assert_eq!(y.core(), m.reduced_core());
        }
    }

    #[test]
    fn sing_ignores_boundary(m in models()) {
        prop_assert_eq!(m.sing(), m.without_boundary().sing());
    }

    #[test]
    fn lcs_chain_is_short(m in models()) {
        prop_assert!(m.lcs_chain().len() <= m.facets()[0].len() + 2);
    }

    #[test]
    fn level_degrees_are_constant(m in models(), n in 0usize..=2) {
        let ell = log_canonical_degree(&m).0;
        let sigma = m.core();
        for c in level_components(&m, n, TupleMode::AllTuples) {
            let g = c.intersection;
            if g.is_empty() {
                continue;
            }
            let b: Rational = sigma.intersection(g).iter().map(|i| m.boundary().get(i)).sum();
            let deg = Rational::from_integer((g.difference(sigma).len() as i64 - g.len() as i64).into()) + b;
            prop_assert_eq!(&deg, &ell);
            prop_assert_eq!(c.projective_degree(), deg);
            for (i, coeff) in &c.induced_boundary {
                prop_assert!(*coeff > Rational::zero() && *coeff <= Rational::one());
                if !sigma.contains(*i) {
                    prop_assert!(coeff.is_one());
                }
            }
        }
    }

    #[test]
    fn strict_level_zero_is_normalization(m in models()) {
        let level: Vec<(Face, Vec<(usize, Rational)>)> = level_components(&m, 0, TupleMode::StrictOrdered)
            .into_iter()
            .map(|c| (c.intersection, c.induced_boundary.into_iter().collect()))
            .collect();
        let norm: Vec<(Face, Vec<(usize, Rational)>)> = m
            .normalization_components()
            .into_iter()
            .map(|c| (c.facet, c.boundary.iter().map(|(i, b)| (i, b.clone())).collect()))
            .collect();
        prop_assert_eq!(level, norm);
    }

    #[test]
    fn mixed_sign_multidegrees_are_acyclic(m in models(), raw in prop::collection::vec(-2i64..=2, 7)) {
        let pm = ProjectiveModel::new(&m);
        let a = Multidegree::new(raw[..m.ambient()].to_vec());
        let h = multidegree_cohomology(&pm, &a);
        if !a.neg().is_empty() && !a.pos().is_empty() {
            prop_assert!(h.iter().all(|&x| x == 0));
        }
        prop_assert_eq!(h, pattern_closed_form(&pm, a.neg(), a.pos()));
    }

    #[test]
    fn closed_form_matches_cech(m in models(), d in -4i64..=4, pick in 0usize..1000) {
        let pm = ProjectiveModel::new(&m);
        let sources = contributing_multidegrees(&pm, d);
        prop_assume!(!sources.is_empty());
        let a = &sources[pick % sources.len()];
        prop_assert_eq!(multidegree_cohomology(&pm, a), pattern_closed_form(&pm, a.neg(), a.pos()));
    }

    #[test]
    fn euler_characteristic_is_alternating_sum(m in models(), d in -6i64..=6) {
        let pm = ProjectiveModel::new(&m);
        prop_assert_eq!(alternating_sum(&sheaf_cohomology(&pm, d)), euler_characteristic(&pm, d));
    }

    #[test]
    fn descent_matches_engine(m in models(), d in 0i64..=3) {
        let pm = ProjectiveModel::new(&m);
        prop_assert_eq!(descent_cohomology(&pm, d).unwrap(), sheaf_cohomology(&pm, d));
    }

    #[test]
    fn descent_level_zero_dimension(m in models(), d in 0i64..=4) {
        let pm = ProjectiveModel::new(&m);
        let c = descent_complex(&pm, d).unwrap();
        let expected: i64 = pm
            .facets()
            .iter()
            .map(|f| {
                let k = f.len() as i64;
                i64::try_from(binomial_poly(d + k - 1, k - 1)).unwrap()
            })
            .sum();
        prop_assert_eq!(c.dim(0) as i64, expected);
    }

    #[test]
    fn hypotheses_are_sound(m in models(), raw in prop::collection::vec(0i64..=2, 7), shift in 0i64..=2) {
        let pm = ProjectiveModel::new(&m);
        let n = m.ambient();
        let c = raw[..n].to_vec();
        prop_assume!(c.iter().any(|&x| x > 0));
        let mult = Multiplier::Divisor(InvariantDivisor::new(c, n).unwrap());
        let ell = pm.twist().0;
        let d = ell.ceil().to_integer().try_into().unwrap_or(0i64) + shift;
        let hyp = classify_hypotheses(&pm, d, &mult);
        let qs: Vec<usize> = (0..pm.degree_count()).collect();
        let verdicts = multiplication_verdict(&pm, d, &mult, &qs).unwrap();
        if hyp.ev || hyp.tk {
            prop_assert!(verdicts.iter().all(|v| v.injective));
        }
        if hyp.kv {
            prop_assert!(sheaf_cohomology(&pm, d)[1..].iter().all(|&h| h == 0));
        }
    }

    #[test]
    fn divisor_blocks_are_independent(m in models(), raw in prop::collection::vec(0i64..=2, 7), d in -3i64..=3) {
        let pm = ProjectiveModel::new(&m);
        let c = &raw[..m.ambient()];
        let targets: BTreeSet<Multidegree> =
            contributing_multidegrees(&pm, d).iter().map(|a| a.shifted(c)).collect();
        prop_assert_eq!(targets.len(), contributing_multidegrees(&pm, d).len());
    }

    #[test]
    fn hilbert_function_is_global_sections(m in models(), d in 0u64..=4) {
        let pm = ProjectiveModel::new(&m);
        let h0 = sheaf_cohomology(&pm, d as i64)[0] as u64;
        if d >= 1 || connected(m.facets()) {
            prop_assert_eq!(hilbert_function(m.facets(), d), h0);
        }
    }

    #[test]
    fn ideal_sequence_holds(m in models(), picks in prop::collection::vec(0usize..1000, 1..=3)) {
        prop_assume!(m.lcs().is_some());
        let centers: Vec<Face> = m.lc_centers().into_iter().collect();
        let z = CenterUnion::new(&m, picks.iter().map(|k| centers[k % centers.len()])).unwrap();
        prop_assert_eq!(check_ideal_sequence(&m, &z, 4), Ok(true));
    }
}
