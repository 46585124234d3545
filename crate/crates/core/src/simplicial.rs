//! Levels of the simplicial resolution induced by normalization.
//!
//! Level `n` is the disjoint union of `A_{F_0∩…∩F_n}` over facet tuples. Each
//! component carries the boundary `Σ_{i∈G∖σ} A_{G∖i} + Σ_{i∈σ} b_i A_{G∖i}`,
//! so conductor indices get coefficient 1 and core indices keep `b_i`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::face::Face;
use crate::model::{Boundary, GncModel};
use crate::ratlinalg::{rat_int, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TupleMode {
    /// Every `(n+1)`-tuple of facets, repetitions allowed.
    AllTuples,
    /// Strictly increasing tuples in the sorted facet order.
    StrictOrdered,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelComponent {
    /// Positions in [`GncModel::facets`].
    pub tuple: Vec<usize>,
    pub intersection: Face,
    pub induced_boundary: BTreeMap<usize, Rational>,
}

impl LevelComponent {
    /// Degree of `K + B_n` on `P_G`: `−|G| + Σ coefficients`.
    pub fn projective_degree(&self) -> Rational {
        let total = self
            .induced_boundary
            .values()
            .fold(Rational::zero(), |acc, b| acc + b);
        total - rat_int(self.intersection.len() as i64)
    }
}

fn induced_boundary(model: &GncModel, g: Face) -> BTreeMap<usize, Rational> {
    let core = model.core();
    let b: &Boundary = model.boundary();
    g.iter()
        .filter_map(|i| {
            let c = if core.contains(i) {
                b.get(i)
            } else {
                Rational::one()
            };
            (!c.is_zero()).then_some((i, c))
        })
        .collect()
}

fn component(model: &GncModel, tuple: Vec<usize>) -> LevelComponent {
    let facets = model.facets();
    let g = tuple
        .iter()
        .map(|&k| facets[k])
        .reduce(Face::intersection)
        .expect("tuples are nonempty");
    LevelComponent {
        induced_boundary: induced_boundary(model, g),
        intersection: g,
        tuple,
    }
}

/// All tuples of length `len` over `0..m`, in lexicographic order.
fn all_tuples(m: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..m).map(move |k| {
                    let mut t = t.clone();
                    t.push(k);
                    t
                })
            })
            .collect();
    }
    out
}

fn strict_tuples(m: usize, len: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, m: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for k in start..m {
            cur.push(k);
            rec(k + 1, m, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, m, len, &mut Vec::new(), &mut out);
    out
}

pub fn level_components(model: &GncModel, n: usize, mode: TupleMode) -> Vec<LevelComponent> {
    let m = model.facets().len();
    let tuples = match mode {
        TupleMode::AllTuples => all_tuples(m, n + 1),
        TupleMode::StrictOrdered => strict_tuples(m, n + 1),
    };
    tuples.into_iter().map(|t| component(model, t)).collect()
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SimplicialError {
    #[error("map value {value} outside [0, {max}]")]
    OutOfRange { value: usize, max: usize },
    #[error("map is not order preserving")]
    NotMonotone,
}

/// An order-preserving map `Δ_n → Δ_m`, stored as its values on `0..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderMap {
    values: Vec<usize>,
    target: usize,
}

impl OrderMap {
    pub fn new(values: Vec<usize>, target: usize) -> Result<Self, SimplicialError> {
        if let Some(&v) = values.iter().find(|&&v| v > target) {
            return Err(SimplicialError::OutOfRange {
                value: v,
                max: target,
            });
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(SimplicialError::NotMonotone);
        }
        Ok(OrderMap { values, target })
    }

    /// Coface `δ_i: Δ_{n−1} → Δ_n`, skipping `i`.
    pub fn coface(n: usize, i: usize) -> Self {
        assert!(i <= n && n >= 1);
        let values = (0..=n).filter(|&k| k != i).collect();
        OrderMap { values, target: n }
    }

    /// Codegeneracy `σ_i: Δ_{n+1} → Δ_n`, hitting `i` twice.
    pub fn codegeneracy(n: usize, i: usize) -> Self {
        assert!(i <= n);
        let values = (0..=n + 1)
            .map(|k| if k <= i { k } else { k - 1 })
            .collect();
        OrderMap { values, target: n }
    }

    pub fn identity(n: usize) -> Self {
        OrderMap {
            values: (0..=n).collect(),
            target: n,
        }
    }

    pub fn source(&self) -> usize {
        self.values.len() - 1
    }

    pub fn target(&self) -> usize {
        self.target
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &OrderMap) -> OrderMap {
        assert_eq!(other.target, self.source());
        OrderMap {
            values: other.values.iter().map(|&k| self.values[k]).collect(),
            target: self.target,
        }
    }
}

impl fmt::Display for OrderMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}→[{}]", self.values, self.target)
    }
}

/// The structure map `X_m → X_n` induced by `φ: Δ_n → Δ_m` on a level-`m`
/// tuple: `(F_{φ(0)}, …, F_{φ(n)})`.
pub fn apply_simplicial_map<T: Clone>(
    tuple: &[T],
    map: &OrderMap,
) -> Result<Vec<T>, SimplicialError> {
    if tuple.len() != map.target + 1 {
        return Err(SimplicialError::OutOfRange {
            value: map.target,
            max: tuple.len().saturating_sub(1),
        });
    }
    Ok(map.values.iter().map(|&k| tuple[k].clone()).collect())
}

/// Face/degeneracy identities up to level `n_max`, their action on every
/// facet tuple, and the containment `G_source ⊆ G_target` for every
/// structure map.
pub fn check_simplicial_identities(model: &GncModel, n_max: usize) -> bool {
    let facets = model.facets();
    let meet = |t: &[usize]| {
        t.iter()
            .map(|&k| facets[k])
            .reduce(Face::intersection)
            .expect("tuples are nonempty")
    };
    let apply = |t: &[usize], m: &OrderMap| apply_simplicial_map(t, m).expect("sized");
    for level in 0..=n_max {
        if !map_identities_hold(level) {
            return false;
        }
        let maps = generators_into(level);
        for t in all_tuples(facets.len(), level + 1) {
            let g = meet(&t);
            for m in &maps {
                if !g.is_subset(meet(&apply(&t, m))) {
                    return false;
                }
            }
            // deleting either copy of a repeated entry returns the tuple
            for i in 0..=level {
                let doubled = apply(&t, &OrderMap::codegeneracy(level, i));
                if apply(&doubled, &OrderMap::coface(level + 1, i)) != t
                    || apply(&doubled, &OrderMap::coface(level + 1, i + 1)) != t
                {
                    return false;
                }
            }
        }
    }
    true
}

/// Cofaces and codegeneracies with target `Δ_level`.
fn generators_into(level: usize) -> Vec<OrderMap> {
    let mut maps: Vec<OrderMap> = (0..=level)
        .map(|i| OrderMap::codegeneracy(level, i))
        .collect();
    if level >= 1 {
        maps.extend((0..=level).map(|i| OrderMap::coface(level, i)));
    }
    maps
}

/// The cosimplicial identities among maps into `Δ_n`.
fn map_identities_hold(n: usize) -> bool {
    let coface = OrderMap::coface;
    let codeg = OrderMap::codegeneracy;
    // δ_j δ_i = δ_i δ_{j−1} for i < j
    if n >= 2 {
        for j in 0..=n {
            for i in 0..j {
                if coface(n, j).compose(&coface(n - 1, i))
                    != coface(n, i).compose(&coface(n - 1, j - 1))
                {
                    return false;
                }
            }
        }
    }
    // σ_j σ_i = σ_i σ_{j+1} for i ≤ j
    for j in 0..=n {
        for i in 0..=j {
            if codeg(n, j).compose(&codeg(n + 1, i)) != codeg(n, i).compose(&codeg(n + 1, j + 1)) {
                return false;
            }
        }
    }
    // σ_j δ_i
    for j in 0..=n {
        for i in 0..=n + 1 {
            let lhs = codeg(n, j).compose(&coface(n + 1, i));
            let ok = if i < j {
                lhs == coface(n, i).compose(&codeg(n - 1, j - 1))
            } else if i == j || i == j + 1 {
                lhs == OrderMap::identity(n)
            } else {
                lhs == coface(n, i - 1).compose(&codeg(n - 1, j))
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Degree of the log pluricanonical twist: `ℓ = −Σ_{i∈σ}(1 − b_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwistDegree(pub Rational);

impl TwistDegree {
    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn as_integer(&self) -> Option<i64> {
        use num_traits::ToPrimitive;
        self.0
            .is_integer()
            .then(|| self.0.to_integer().to_i64())
            .flatten()
    }
}

impl fmt::Display for TwistDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn log_canonical_degree(model: &GncModel) -> TwistDegree {
    let psi_total = model.psi().into_iter().fold(Rational::zero(), |a, b| a + b);
    TwistDegree(-psi_total)
}

/// Every level-`n` component with `G ≠ ∅` has `deg(K + B_n)|_{P_G} = ℓ`.
pub fn check_level_adjunction(model: &GncModel, n: usize) -> bool {
    let ell = log_canonical_degree(model).0;
    level_components(model, n, TupleMode::AllTuples)
        .iter()
        .filter(|c| !c.intersection.is_empty())
        .all(|c| c.projective_degree() == ell)
}

/// (i) every lc center is realized by level components up to `n_max`: as an
/// intersection face when `B = 0`, and as an lc center of some component in
/// general; (ii) every lc center of a component is an lc center of `(X, B)`.
pub fn check_lc_center_surjectivity(model: &GncModel, n_max: usize) -> bool {
    let sp = model.reduced_core();
    let mut realized = std::collections::BTreeSet::new();
    let mut components = Vec::new();
    for n in 0..=n_max {
        for c in level_components(model, n, TupleMode::StrictOrdered) {
            realized.insert(c.intersection);
            components.push(c.intersection);
        }
    }
    let centers = model.lc_centers();
    let covered = centers.iter().all(|&gamma| {
        if model.boundary().is_empty() {
            realized.contains(&gamma)
        } else {
            components.iter().any(|&g| gamma.is_subset(g))
        }
    });
    // σ′ ⊆ γ ⊆ G is exactly the set of lc centers of the component (A_G, B_G)
    let images_are_centers = components.iter().all(|&g| {
        !sp.is_subset(g)
            || g.difference(sp)
                .subsets()
                .all(|s| model.is_lc_center(s.union(sp)))
    });
    covered && images_are_centers
}
