//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

use std::process::Command;
use std::time::{Duration, Instant};

use gnc::cohomology::{
    check_vanishing, classify_hypotheses, generic_verdict, sheaf_cohomology, GenericForm,
    Multiplier, ProjectiveModel,
};
use gnc::descent::descent_cohomology;
use gnc::model::{generate_with_family, Axiom, Family, GncModel, ValidationError};
use gnc::ratlinalg::rat;
use gnc::simplicial::{check_level_adjunction, check_simplicial_identities};
use gnc::suite::{
    check_lc_decomposition, corpus, euler_failures, ideal_audit, injectivity_audit,
    oracle_mismatches, vanishing_range, CorpusEntry, InjectivityAudit, CORPUS_SIZE, EULER_TWISTS,
    IDEAL_DMAX, MAX_LEVEL, MAX_UNION, ORACLE_TWISTS,
};
use gnc::Face;

fn face(ix: &[usize]) -> Face {
    ix.iter().map(|i| i - 1).collect()
}

fn faces(list: &[&[usize]]) -> Vec<Face> {
    list.iter().map(|f| face(f)).collect()
}

fn xyz() -> GncModel {
    GncModel::from_one_based(3, &[&[1, 2], &[2, 3], &[1, 3]], &[]).unwrap()
}

fn plane_pair() -> GncModel {
    GncModel::from_one_based(2, &[&[1, 2]], &[(1, rat(1, 1)), (2, rat(1, 1))]).unwrap()
}

fn cone(b4: i64, den: i64) -> GncModel {
    GncModel::from_one_based(
        4,
        &[&[1, 2, 4], &[2, 3, 4], &[1, 3, 4]],
        &[(4, rat(b4, den))],
    )
    .unwrap()
}

struct Outcome {
    pass: bool,
    note: String,
}

fn outcome(pass: bool, note: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        note: note.into(),
    }
}

fn axiom_gate() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    ok &= xyz().core().is_empty();
    ok &= plane_pair().reduced_core().is_empty();
    let mut families = (0, 0);
    for seed in 0..60u64 {
        for (ambient, size, count) in [(5, 4, 3), (6, 3, 6), (4, 3, 2), (6, 5, 4)] {
            let (m, family) = generate_with_family(seed, ambient, size, count).unwrap();
            let raw: Vec<Vec<usize>> = m.facets().iter().map(|f| f.to_vec()).collect();
            ok &= GncModel::validate(ambient, &raw, m.boundary().as_map()).as_ref() == Ok(&m);
            match family {
                Family::NormalCrossings => families.0 += 1,
                Family::Cardinality => families.1 += 1,
                Family::General => {}
            }
        }
    }
    ok &= families.0 > 0 && families.1 > 0;
    notes.push(format!(
        "{} NC and {} cardinality models accepted",
        families.0, families.1
    ));
    let facets = vec![vec![0, 1], vec![1, 2], vec![2, 3]];
    match GncModel::validate(4, &facets, &Default::default()) {
        Err(e @ ValidationError::MissingIntersection { .. }) => {
            ok &= e.axiom() == Axiom::B && e.replays_on(4, &facets, &Default::default());
            notes.push(format!("path rejected: {}", e.witness()));
        }
        other => {
            ok = false;
            notes.push(format!("path not rejected by axiom b: {other:?}"));
        }
    }
    outcome(ok, notes.join("; "))
}

fn lcs_chain_regression() -> Outcome {
    let chain: Vec<Vec<Face>> = xyz()
        .lcs_chain()
        .iter()
        .map(|m| m.facets().to_vec())
        .collect();
    let expected = vec![
        faces(&[&[1, 2], &[1, 3], &[2, 3]]),
        faces(&[&[1], &[2], &[3]]),
        vec![Face::EMPTY],
    ];
    let a = chain == expected;
    let chain: Vec<Vec<Face>> = plane_pair()
        .lcs_chain()
        .iter()
        .map(|m| m.facets().to_vec())
        .collect();
    let expected = vec![faces(&[&[1, 2]]), faces(&[&[1], &[2]]), vec![Face::EMPTY]];
    let b = chain == expected;
    outcome(a && b, format!("xyz {a}, (A^2, H1+H2) {b}"))
}

fn lc_decomposition(corpus: &[CorpusEntry]) -> Outcome {
    let bad: Vec<u64> = corpus
        .iter()
        .filter(|e| !check_lc_decomposition(&e.model))
        .map(|e| e.seed)
        .collect();
    let b0 = corpus
        .iter()
        .filter(|e| e.model.boundary().is_empty())
        .count();
    outcome(
        bad.is_empty(),
        format!(
            "{} models ({b0} with B = 0), failing seeds {bad:?}",
            corpus.len()
        ),
    )
}

fn adjunction(corpus: &[CorpusEntry]) -> Outcome {
    let bad: Vec<u64> = corpus
        .iter()
        .filter(|e| {
            !((0..=MAX_LEVEL).all(|n| check_level_adjunction(&e.model, n))
                && check_simplicial_identities(&e.model, MAX_LEVEL))
        })
        .map(|e| e.seed)
        .collect();
    outcome(
        bad.is_empty(),
        format!("levels 0..={MAX_LEVEL}, failing seeds {bad:?}"),
    )
}

fn oracle_equivalence(corpus: &[CorpusEntry]) -> Outcome {
    let mut mismatches = Vec::new();
    let mut euler = Vec::new();
    for e in corpus {
        let pm = ProjectiveModel::new(&e.model);
        if !oracle_mismatches(&pm, ORACLE_TWISTS).is_empty() {
            mismatches.push(e.seed);
        }
        if !euler_failures(&pm, EULER_TWISTS).is_empty() {
            euler.push(e.seed);
        }
    }
    outcome(
        mismatches.is_empty() && euler.is_empty(),
        format!("oracle mismatches {mismatches:?}, Euler failures {euler:?}"),
    )
}

fn named_values() -> Outcome {
    let tri = ProjectiveModel::new(&xyz());
    let mut ok = sheaf_cohomology(&tri, 0)[..2] == [1, 1];
    for d in 1..=4 {
        ok &= sheaf_cohomology(&tri, d)[0] == 3 * d as usize;
        ok &= descent_cohomology(&tri, d).unwrap()[0] == 3 * d as usize;
    }
    let c = ProjectiveModel::new(&cone(1, 2));
    ok &= sheaf_cohomology(&c, 1)[0] == 4;
    ok &= sheaf_cohomology(&c, -1)[2] == 1;
    let plane = ProjectiveModel::new(&GncModel::from_one_based(3, &[&[1, 2, 3]], &[]).unwrap());
    ok &= sheaf_cohomology(&plane, -3)[2] == 1;
    outcome(ok, "triangle, cone and plane values")
}

fn vanishing(corpus: &[CorpusEntry]) -> Outcome {
    let mut bad = Vec::new();
    let mut entries = 0;
    for e in corpus {
        let pm = ProjectiveModel::new(&e.model);
        let (from, to) = vanishing_range(&pm);
        let report = check_vanishing(&pm, from, to);
        entries += report.entries.len();
        if !report.all_pass {
            bad.push(e.seed);
        }
    }
    let c = ProjectiveModel::new(&cone(0, 1));
    let contractible = c.twist().as_integer() == Some(-1) && sheaf_cohomology(&c, 0)[1..] == [0, 0];
    outcome(
        bad.is_empty() && contractible,
        format!(
            "{entries} (d, q) entries, failing seeds {bad:?}, cone b4 = 0 at d = 0: {contractible}"
        ),
    )
}

fn injectivity(corpus: &[CorpusEntry]) -> Outcome {
    let mut total = InjectivityAudit::default();
    for e in corpus {
        total.merge(injectivity_audit(&ProjectiveModel::new(&e.model), e.seed));
    }
    let tri = ProjectiveModel::new(&xyz());
    let form = GenericForm::new(&tri, 1, 0).unwrap();
    let hyp = classify_hypotheses(&tri, 0, &Multiplier::Generic(form));
    let control = generic_verdict(&tri, 0, 1, 0, &[1]).unwrap();
    let control_ok = !hyp.ev && !hyp.tk && !hyp.kv && !control[0].injective && !control[0].vacuous;
    outcome(
        total.pass() && control_ok,
        format!(
            "{} instances, {} under EV/TK, q>=1: {} substantive {} vacuous, failures {}, negative control {control_ok}",
            total.instances,
            total.covered,
            total.substantive,
            total.vacuous,
            total.failures.len() + total.seed_disagreements.len()
        ),
    )
}

fn ideal_sequence(corpus: &[CorpusEntry]) -> Outcome {
    let mut unions = 0;
    let mut skipped = 0;
    let mut bad = Vec::new();
    for e in corpus {
        let audit = ideal_audit(&e.model, MAX_UNION, IDEAL_DMAX);
        unions += audit.unions;
        skipped += audit.skipped as usize;
        if !audit.failures.is_empty() {
            bad.push(e.seed);
        }
    }
    outcome(
        bad.is_empty(),
        format!("{unions} unions, {skipped} models with empty LCS, failing seeds {bad:?}"),
    )
}

fn determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_gnc"))
            .arg("report")
            .env("GNC_SEED", "0")
            .output()
            .expect("gnc binary runs")
    };
    let (a, b) = (run(), run());
    let same = a.stdout == b.stdout && a.status.code() == b.status.code();
    outcome(
        same && a.status.success(),
        format!(
            "{} bytes, exit {:?}, identical {same}",
            a.stdout.len(),
            a.status.code()
        ),
    )
}

type Check<'a> = Box<dyn Fn() -> Outcome + 'a>;

fn main() {
    let start = Instant::now();
    let corpus = corpus(0, CORPUS_SIZE);
    let setup = start.elapsed();
    let criteria: Vec<(&str, Duration, Check)> = vec![
        ("axiom gate", Duration::from_secs(1), Box::new(axiom_gate)),
        (
            "lcs chain regression",
            Duration::from_secs(1),
            Box::new(lcs_chain_regression),
        ),
        (
            "lc-center decomposition",
            Duration::from_secs(30),
            Box::new(|| lc_decomposition(&corpus)),
        ),
        (
            "adjunction degrees",
            Duration::from_secs(60),
            Box::new(|| adjunction(&corpus)),
        ),
        (
            "cohomology oracle equivalence",
            Duration::from_secs(300),
            Box::new(|| oracle_equivalence(&corpus)),
        ),
        ("named values", Duration::MAX, Box::new(named_values)),
        (
            "vanishing soundness",
            Duration::MAX,
            Box::new(|| vanishing(&corpus)),
        ),
        (
            "injectivity soundness",
            Duration::MAX,
            Box::new(|| injectivity(&corpus)),
        ),
        (
            "ideal sequence",
            Duration::MAX,
            Box::new(|| ideal_sequence(&corpus)),
        ),
        ("determinism", Duration::MAX, Box::new(determinism)),
    ];
    println!("corpus of {} models built in {:.2?}", corpus.len(), setup);
    let mut failed = 0;
    for (k, (name, bound, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let o = check();
        let elapsed = t.elapsed();
        let in_time = elapsed <= *bound;
        let pass = o.pass && in_time;
        failed += !pass as usize;
        let limit = if *bound == Duration::MAX {
            String::new()
        } else {
            format!(" (limit {bound:?})")
        };
        println!(
            "{} {:>2} {name}: {} [{elapsed:.2?}{limit}]",
            if pass { "PASS" } else { "FAIL" },
            k + 1,
            o.note
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
