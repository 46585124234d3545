//! Verification battery run by `gnc report` and the acceptance tests.
//!
//! Each check is a plain function of one model so it can be reused on the
//! seeded corpus, on a single model file, or from a test.

use std::collections::BTreeSet;

use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cohomology::{
    alternating_sum, check_vanishing, classify_hypotheses, euler_characteristic, generic_verdict,
    multiplication_verdict, sheaf_cohomology, GenericForm, Hypotheses, InvariantDivisor,
    Multiplier, ProjectiveModel, QVerdict,
};
use crate::descent::descent_cohomology;
use crate::face::Face;
use crate::ideals::{check_ideal_sequence, CenterUnion};
use crate::model::{generate_random_model, GncModel};
use crate::simplicial::{
    check_lc_center_surjectivity, check_level_adjunction, check_simplicial_identities,
};

pub const CORPUS_SIZE: usize = 200;
pub const MAX_LEVEL: usize = 3;
pub const ORACLE_TWISTS: std::ops::RangeInclusive<i64> = 0..=5;
pub const EULER_TWISTS: std::ops::RangeInclusive<i64> = -5..=5;
pub const VANISHING_SPAN: i64 = 4;
pub const INJECTIVITY_SPAN: i64 = 2;
pub const GENERIC_DEGREES: [i64; 2] = [1, 2];
pub const MAX_UNION: usize = 3;
pub const IDEAL_DMAX: u64 = 4;

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub seed: u64,
    pub ambient: usize,
    pub facet_size: usize,
    pub facet_count: usize,
    pub model: GncModel,
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, j| acc * (n - j) / (j + 1))
}

/// Generator parameters for one corpus seed. Seeds `≡ 2 (mod 3)` get
/// `facet_size = ambient − 1` so the normal-crossings family applies.
pub fn corpus_parameters(seed: u64) -> (usize, usize, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    if seed % 3 == 2 {
        let ambient = rng.gen_range(2..=5);
        let count = rng.gen_range(1..=ambient);
        return (ambient, ambient - 1, count);
    }
    let ambient = rng.gen_range(2..=7);
    let size = rng.gen_range(1..=ambient.min(4));
    let size = if seed % 3 == 1 && size == ambient {
        size - 1
    } else {
        size
    };
    let count = rng.gen_range(1..=binom(ambient, size).min(5));
    (ambient, size, count)
}

/// `size` models from seeds `base, base+1, …`.
pub fn corpus(base: u64, size: usize) -> Vec<CorpusEntry> {
    (0..size as u64)
        .map(|k| {
            let seed = base.wrapping_add(k);
            let (ambient, facet_size, facet_count) = corpus_parameters(seed);
            let model = generate_random_model(seed, ambient, facet_size, facet_count)
                .expect("corpus parameters are feasible");
            CorpusEntry {
                seed,
                ambient,
                facet_size,
                facet_count,
                model,
            }
        })
        .collect()
}

/// Every LCS step is again a valid model, strictly smaller, and the chain ends.
pub fn check_lcs_chain(model: &GncModel) -> bool {
    let chain = model.lcs_chain();
    chain.windows(2).all(|w| {
        let (x, y) = (&w[0], &w[1]);
        let raw: Vec<Vec<usize>> = y.facets().iter().map(|f| f.to_vec()).collect();
        GncModel::validate(y.ambient(), &raw, y.boundary().as_map()).as_ref() == Ok(y)
            && y.facets()
                .iter()
                .all(|t| x.facets().iter().any(|f| t.is_subset(*f) && t != f))
    }) && chain.last().is_some_and(|m| m.lcs().is_none())
}

/// `lc_centers = facets ∪ lc_centers(LCS)`, and with `B = 0` the centers are
/// exactly the intersections of facet families.
pub fn check_lc_decomposition(model: &GncModel) -> bool {
    let mut expected: BTreeSet<Face> = model.facets().iter().copied().collect();
    if let Some(y) = model.lcs() {
        expected.extend(y.lc_centers());
    }
    let decomposes = model.lc_centers() == expected;
    let oracle = match model.lc_centers_b0_intersections() {
        Ok(inter) => inter == model.lc_centers(),
        Err(_) => true,
    };
    decomposes && oracle && model.check_lcs_normalization_compat()
}

/// Adjunction and the simplicial identities on levels up to `n_max`, and lc
/// centers of components mapping onto lc centers of the model. The last
/// check needs every strict level, since `m` facets can first meet in an lc
/// center at level `m − 1`.
pub fn check_resolution(model: &GncModel, n_max: usize) -> bool {
    (0..=n_max).all(|n| check_level_adjunction(model, n))
        && check_simplicial_identities(model, n_max)
        && check_lc_center_surjectivity(model, model.facets().len() - 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub d: i64,
    pub engine: Vec<usize>,
    pub oracle: Vec<usize>,
}

/// Fine-graded engine against the descent oracle.
pub fn oracle_mismatches(
    pm: &ProjectiveModel,
    twists: impl IntoIterator<Item = i64>,
) -> Vec<Mismatch> {
    twists
        .into_iter()
        .filter_map(|d| {
            let engine = sheaf_cohomology(pm, d);
            let oracle = descent_cohomology(pm, d).expect("nonnegative twist");
            (engine != oracle).then_some(Mismatch { d, engine, oracle })
        })
        .collect()
}

/// Twists where `Σ(−1)^q h^q` differs from the inclusion–exclusion count.
pub fn euler_failures(pm: &ProjectiveModel, twists: impl IntoIterator<Item = i64>) -> Vec<i64> {
    twists
        .into_iter()
        .filter(|&d| alternating_sum(&sheaf_cohomology(pm, d)) != euler_characteristic(pm, d))
        .collect()
}

fn floor_ceil(pm: &ProjectiveModel) -> (i64, i64) {
    let ell = pm.twist().0;
    let floor = ell.numer().div_floor(ell.denom());
    let ceil = ell.numer().div_ceil(ell.denom());
    (
        floor.to_i64().expect("small twist"),
        ceil.to_i64().expect("small twist"),
    )
}

/// Integer twists `ℓ < d ≤ ℓ + 4`.
pub fn vanishing_range(pm: &ProjectiveModel) -> (i64, i64) {
    let (floor, _) = floor_ceil(pm);
    (floor + 1, floor + VANISHING_SPAN)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InjectivityInstance {
    pub d: i64,
    pub multiplier: String,
    pub hypotheses: Hypotheses,
    pub verdicts: Vec<QVerdict>,
    /// False only when a hypothesis holds and some `q` is not injective.
    pub sound: bool,
}

impl InjectivityInstance {
    pub fn covered(&self) -> bool {
        self.hypotheses.ev || self.hypotheses.tk
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct InjectivityAudit {
    pub instances: usize,
    pub covered: usize,
    /// Covered `q ≥ 1` verdicts with a nonzero source group.
    pub substantive: usize,
    /// Covered `q ≥ 1` verdicts with a zero source group.
    pub vacuous: usize,
    pub failures: Vec<InjectivityInstance>,
    pub seed_disagreements: Vec<String>,
}

impl InjectivityAudit {
    fn record(&mut self, inst: InjectivityInstance) {
        self.instances += 1;
        if inst.covered() {
            self.covered += 1;
            for v in inst.verdicts.iter().filter(|v| v.q >= 1) {
                if v.vacuous {
                    self.vacuous += 1;
                } else {
                    self.substantive += 1;
                }
            }
        }
        if !inst.sound {
            self.failures.push(inst);
        }
    }

    pub fn merge(&mut self, other: InjectivityAudit) {
        self.instances += other.instances;
        self.covered += other.covered;
        self.substantive += other.substantive;
        self.vacuous += other.vacuous;
        self.failures.extend(other.failures);
        self.seed_disagreements.extend(other.seed_disagreements);
    }

    pub fn pass(&self) -> bool {
        self.failures.is_empty() && self.seed_disagreements.is_empty()
    }
}

/// Divisors probed: indicators of core subsets of size ≤ 2, twice each
/// boundary index, and each non-core vertex.
fn probe_divisors(model: &GncModel) -> Vec<Vec<i64>> {
    let n = model.ambient();
    let core = model.core();
    let mut out: Vec<Vec<i64>> = Vec::new();
    for s in core.subsets().filter(|s| (1..=2).contains(&s.len())) {
        out.push((0..n).map(|i| s.contains(i) as i64).collect());
    }
    for i in model.boundary().support().iter() {
        out.push((0..n).map(|j| if j == i { 2 } else { 0 }).collect());
    }
    for i in Face::full(n).difference(core).iter() {
        out.push((0..n).map(|j| (j == i) as i64).collect());
    }
    out
}

fn instance(
    pm: &ProjectiveModel,
    d: i64,
    mult: &Multiplier,
    label: String,
    verdicts: Vec<QVerdict>,
) -> InjectivityInstance {
    let hypotheses = classify_hypotheses(pm, d, mult);
    let covered = hypotheses.ev || hypotheses.tk;
    InjectivityInstance {
        d,
        multiplier: label,
        hypotheses,
        sound: !covered || verdicts.iter().all(|v| v.injective),
        verdicts,
    }
}

/// Multiplication maps for `d ∈ [⌈ℓ⌉, ⌈ℓ⌉+2]` by probe divisors and generic
/// forms of degree 1 and 2.
pub fn injectivity_audit(pm: &ProjectiveModel, seed: u64) -> InjectivityAudit {
    let n = pm.vertex_count();
    let qs: Vec<usize> = (0..pm.degree_count()).collect();
    let (_, ceil) = floor_ceil(pm);
    let mut audit = InjectivityAudit::default();
    for d in ceil..=ceil + INJECTIVITY_SPAN {
        for c in probe_divisors(pm.base()) {
            let label = format!(
                "divisor {}",
                c.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            );
            let mult = Multiplier::Divisor(InvariantDivisor::new(c, n).expect("probe divisor"));
            let verdicts = multiplication_verdict(pm, d, &mult, &qs).expect("shapes agree");
            audit.record(instance(pm, d, &mult, label, verdicts));
        }
        for e in GENERIC_DEGREES {
            let label = format!("generic degree {e} seed {seed}");
            match generic_verdict(pm, d, e, seed, &qs) {
                Ok(verdicts) => {
                    let form = GenericForm::new(pm, e, seed).expect("positive degree");
                    audit.record(instance(pm, d, &Multiplier::Generic(form), label, verdicts));
                }
                Err(err) => audit
                    .seed_disagreements
                    .push(format!("d={d} {label}: {err}")),
            }
        }
    }
    audit
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IdealAudit {
    /// LCS is empty, so the sequence is not defined.
    pub skipped: bool,
    pub unions: usize,
    pub failures: Vec<Vec<Vec<usize>>>,
}

/// The restriction sequence for every union of at most `max_union` lc centers.
pub fn ideal_audit(model: &GncModel, max_union: usize, d_max: u64) -> IdealAudit {
    if model.lcs().is_none() {
        return IdealAudit {
            skipped: true,
            ..IdealAudit::default()
        };
    }
    let centers: Vec<Face> = model.lc_centers().into_iter().collect();
    let mut audit = IdealAudit::default();
    let mut chosen = Vec::new();
    fn rec(
        model: &GncModel,
        centers: &[Face],
        start: usize,
        left: usize,
        d_max: u64,
        chosen: &mut Vec<Face>,
        audit: &mut IdealAudit,
    ) {
        if !chosen.is_empty() {
            let z =
                CenterUnion::new(model, chosen.iter().copied()).expect("members are lc centers");
            audit.unions += 1;
            if check_ideal_sequence(model, &z, d_max) != Ok(true) {
                audit
                    .failures
                    .push(chosen.iter().map(|f| f.to_one_based()).collect());
            }
        }
        if left == 0 {
            return;
        }
        for k in start..centers.len() {
            chosen.push(centers[k]);
            rec(model, centers, k + 1, left - 1, d_max, chosen, audit);
            chosen.pop();
        }
    }
    rec(
        model,
        &centers,
        0,
        max_union,
        d_max,
        &mut chosen,
        &mut audit,
    );
    audit
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub pass: bool,
    pub detail: Value,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModelReport {
    pub model: Value,
    pub twist: String,
    pub checks: Vec<CheckOutcome>,
    pub pass: bool,
    #[serde(skip)]
    pub injectivity: InjectivityAudit,
    #[serde(skip)]
    pub ideals: IdealAudit,
}

/// The full battery on one model.
pub fn model_report(model: &GncModel, seed: u64) -> ModelReport {
    let pm = ProjectiveModel::new(model);
    let mut checks = Vec::new();

    let chain = model.lcs_chain();
    checks.push(CheckOutcome {
        name: "lcs_chain",
        pass: check_lcs_chain(model),
        detail: json!({ "length": chain.len() }),
    });
    checks.push(CheckOutcome {
        name: "lc_decomposition",
        pass: check_lc_decomposition(model),
        detail: json!({ "centers": model.lc_centers().len() }),
    });
    checks.push(CheckOutcome {
        name: "resolution",
        pass: check_resolution(model, MAX_LEVEL),
        detail: json!({ "max_level": MAX_LEVEL }),
    });

    let mismatches = oracle_mismatches(&pm, ORACLE_TWISTS);
    checks.push(CheckOutcome {
        name: "descent_oracle",
        pass: mismatches.is_empty(),
        detail: json!({ "mismatches": mismatches }),
    });
    let euler = euler_failures(&pm, EULER_TWISTS);
    checks.push(CheckOutcome {
        name: "euler",
        pass: euler.is_empty(),
        detail: json!({ "failures": euler }),
    });

    let (from, to) = vanishing_range(&pm);
    let vanishing = check_vanishing(&pm, from, to);
    let failing: Vec<_> = vanishing.entries.iter().filter(|e| !e.pass).collect();
    checks.push(CheckOutcome {
        name: "vanishing",
        pass: vanishing.all_pass,
        detail: json!({ "from": from, "to": to, "failures": failing }),
    });

    let inj = injectivity_audit(&pm, seed);
    checks.push(CheckOutcome {
        name: "injectivity",
        pass: inj.pass(),
        detail: serde_json::to_value(&inj).expect("serializable"),
    });

    let ideals = ideal_audit(model, MAX_UNION, IDEAL_DMAX);
    checks.push(CheckOutcome {
        name: "ideal_sequence",
        pass: ideals.failures.is_empty(),
        detail: serde_json::to_value(&ideals).expect("serializable"),
    });

    ModelReport {
        model: model.digest(),
        twist: pm.twist().to_string(),
        pass: checks.iter().all(|c| c.pass),
        checks,
        injectivity: inj,
        ideals,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusReport {
    pub seed: u64,
    pub size: usize,
    pub models: Vec<CorpusRow>,
    pub failing_models: Vec<u64>,
    pub summary: Value,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusRow {
    pub seed: u64,
    pub facets: Vec<Vec<usize>>,
    pub twist: String,
    pub failed: Vec<&'static str>,
}

/// [`model_report`] over the corpus, keeping only failing models in detail.
pub fn corpus_report(base: u64, size: usize) -> CorpusReport {
    let mut failing_models = Vec::new();
    let mut models = Vec::new();
    let mut passes = std::collections::BTreeMap::<&'static str, usize>::new();
    let mut injectivity = InjectivityAudit::default();
    let mut unions = 0usize;
    let mut skipped = 0usize;
    for entry in corpus(base, size) {
        let report = model_report(&entry.model, entry.seed);
        for c in &report.checks {
            *passes.entry(c.name).or_insert(0) += c.pass as usize;
        }
        unions += report.ideals.unions;
        skipped += report.ideals.skipped as usize;
        injectivity.merge(report.injectivity);
        if !report.pass {
            failing_models.push(entry.seed);
        }
        models.push(CorpusRow {
            seed: entry.seed,
            facets: entry
                .model
                .facets()
                .iter()
                .map(|f| f.to_one_based())
                .collect(),
            twist: report.twist.clone(),
            failed: report
                .checks
                .iter()
                .filter(|c| !c.pass)
                .map(|c| c.name)
                .collect(),
        });
    }
    CorpusReport {
        seed: base,
        size,
        pass: failing_models.is_empty(),
        models,
        summary: json!({
            "passes": passes,
            "injectivity": {
                "instances": injectivity.instances,
                "covered": injectivity.covered,
                "substantive": injectivity.substantive,
                "vacuous": injectivity.vacuous,
            },
            "ideal_unions": unions,
            "ideal_skipped": skipped,
        }),
        failing_models,
    }
}
