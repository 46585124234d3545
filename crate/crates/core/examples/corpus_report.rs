//! The verification battery over a slice of the seeded corpus.
//!
//! cargo run --release --example corpus_report -- [count] [seed]

use gnc::suite::{corpus, model_report};

fn main() {
    let mut args = std::env::args().skip(1);
    let count: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(20);
    let base: u64 = args.next().and_then(|a| a.parse().ok()).unwrap_or(0);
    for entry in corpus(base, count) {
        let report = model_report(&entry.model, entry.seed);
        let failed: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.name)
            .collect();
        println!(
            "seed {:>4} N={} |F|={} facets={} l={:>5} {}",
            entry.seed,
            entry.ambient,
            entry.facet_size,
            entry.model.facets().len(),
            report.twist,
            if failed.is_empty() {
                "pass".to_string()
            } else {
                format!("FAIL {failed:?}")
            }
        );
    }
}
