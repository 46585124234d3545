//! Cohomology of `O(d)`, `d ≥ 0`, from the normalization cover.
//!
//! Each component `P_G` of a level of the resolution has no higher cohomology
//! in nonnegative twist, so `H^q(X, O(d))` is the cohomology of the complex
//! of global sections
//!
//! ```text
//! ⊕_{F_0} H^0(P_{F_0}, O(d)) → ⊕_{F_0<F_1} H^0(P_{F_0∩F_1}, O(d)) → …
//! ```
//!
//! with alternating restriction maps. This is independent of the fine-graded
//! Čech engine in [`crate::cohomology`] and serves as its oracle.

use std::collections::HashMap;

use thiserror::Error;

use crate::cohomology::ProjectiveModel;
use crate::face::Face;
use crate::ratlinalg::{rat_int, CochainComplex, RatMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DescentError {
    #[error("descent oracle only covers nonnegative twists, got {0}")]
    NegativeTwist(i64),
}

/// Basis element: a strictly increasing facet tuple and a degree-`d`
/// monomial supported on the tuple's intersection.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DescentLabel {
    pub tuple: Vec<usize>,
    pub monomial: Vec<i64>,
}

pub type DescentComplex = CochainComplex<DescentLabel>;

/// Exponent vectors `m ≥ 0` on `[n]` with `Σm = d` and support in `g`.
pub fn monomials(n: usize, g: Face, d: i64) -> Vec<Vec<i64>> {
    fn rec(vars: &[usize], k: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if k + 1 == vars.len() {
            cur[vars[k]] = left;
            out.push(cur.clone());
            cur[vars[k]] = 0;
            return;
        }
        for c in (0..=left).rev() {
            cur[vars[k]] = c;
            rec(vars, k + 1, left - c, cur, out);
        }
        cur[vars[k]] = 0;
    }
    let vars = g.to_vec();
    if vars.is_empty() {
        return if d == 0 { vec![vec![0; n]] } else { vec![] };
    }
    let mut out = Vec::new();
    rec(&vars, 0, d, &mut vec![0; n], &mut out);
    out
}

/// Strictly increasing tuples with nonempty intersection, grouped by length.
fn nerve(facets: &[Face]) -> Vec<Vec<(Vec<usize>, Face)>> {
    let mut levels: Vec<Vec<(Vec<usize>, Face)>> = vec![facets
        .iter()
        .enumerate()
        .map(|(k, f)| (vec![k], *f))
        .collect()];
    loop {
        let last = levels.last().expect("level 0 present");
        let next: Vec<(Vec<usize>, Face)> = last
            .iter()
            .flat_map(|(t, g)| {
                let start = t.last().copied().unwrap_or(0) + 1;
                (start..facets.len()).filter_map(move |k| {
                    let h = g.intersection(facets[k]);
                    (!h.is_empty()).then(|| {
                        let mut t = t.clone();
                        t.push(k);
                        (t, h)
                    })
                })
            })
            .collect();
        if next.is_empty() {
            break;
        }
        levels.push(next);
    }
    levels
}

pub fn descent_complex(pm: &ProjectiveModel, d: i64) -> Result<DescentComplex, DescentError> {
    if d < 0 {
        return Err(DescentError::NegativeTwist(d));
    }
    let n = pm.vertex_count();
    if pm.facets().is_empty() {
        return Ok(CochainComplex::new(0, vec![vec![]], vec![]).expect("trivial complex"));
    }
    let spaces: Vec<Vec<DescentLabel>> = nerve(pm.facets())
        .into_iter()
        .map(|level| {
            level
                .into_iter()
                .flat_map(|(tuple, g)| {
                    monomials(n, g, d)
                        .into_iter()
                        .map(move |monomial| DescentLabel {
                            tuple: tuple.clone(),
                            monomial,
                        })
                })
                .collect()
        })
        .collect();
    let differentials = spaces
        .windows(2)
        .map(|w| restriction_matrix(&w[0], &w[1]))
        .collect();
    Ok(CochainComplex::new(0, spaces, differentials)
        .expect("alternating restrictions square to zero"))
}

/// `(δc)_{F_0..F_{p+1}} = Σ_j (−1)^j c_{F_0..F̂_j..F_{p+1}}|`, restricted
/// monomial by monomial.
fn restriction_matrix(src: &[DescentLabel], dst: &[DescentLabel]) -> RatMatrix {
    let index: HashMap<&DescentLabel, usize> =
        src.iter().enumerate().map(|(k, l)| (l, k)).collect();
    let mut m = RatMatrix::zeros(dst.len(), src.len());
    for (r, label) in dst.iter().enumerate() {
        for j in 0..label.tuple.len() {
            let mut face = label.tuple.clone();
            face.remove(j);
            let key = DescentLabel {
                tuple: face,
                monomial: label.monomial.clone(),
            };
            let c = index[&key];
            m.set(r, c, rat_int(if j % 2 == 0 { 1 } else { -1 }));
        }
    }
    m
}

/// `h^q` of the descent complex, padded with zeros to `dim + 1` entries.
pub fn descent_cohomology(pm: &ProjectiveModel, d: i64) -> Result<Vec<usize>, DescentError> {
    let c = descent_complex(pm, d)?;
    let mut dims = c.cohomology_dims();
    if dims.len() < pm.degree_count() {
        dims.resize(pm.degree_count(), 0);
    }
    while dims.len() > pm.degree_count() && dims.last() == Some(&0) {
        dims.pop();
    }
    Ok(dims)
}
