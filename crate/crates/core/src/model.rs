//! GNC local models: a facet complex on `[N]` with a rational boundary on its core.
//!
//! A model `X = ∪_F A_F ⊂ A^N` is stored through its facets. Faces are index
//! sets tested against the facets on demand; the face lattice is never
//! materialized.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use thiserror::Error;

use crate::face::{maximal_faces, Face, MAX_AMBIENT};
use crate::ratlinalg::{rat, Rational};

/// Which defining condition a rejected model violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    A,
    B,
    C,
    Incomparability,
    Emptiness,
    /// Malformed input: indices outside `[N]` or an unusable ambient size.
    Format,
}

impl Axiom {
    pub fn as_str(self) -> &'static str {
        match self {
            Axiom::A => "a",
            Axiom::B => "b",
            Axiom::C => "c",
            Axiom::Incomparability => "incomparability",
            Axiom::Emptiness => "emptiness",
            Axiom::Format => "format",
        }
    }
}

/// Rejection of a candidate model, carrying a witness that can be replayed.
///
/// Indices in witnesses are 0-based; `Display` prints them 1-based.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ValidationError {
    #[error("ambient dimension {0} outside 1..={MAX_AMBIENT}")]
    Ambient(usize),
    #[error("no facets given")]
    NoFacets,
    #[error("index {} outside [1, {ambient}]", .index.wrapping_add(1))]
    IndexOutOfRange { index: usize, ambient: usize },
    #[error("facet {small} is contained in facet {large}")]
    Incomparable { small: Face, large: Face },
    #[error("axiom a: no chain of codimension-one steps from {from} to {to} through facets containing {meet}")]
    NoChain { from: Face, to: Face, meet: Face },
    #[error("axiom b: codimension-one face {tau} of {facet} contains the core but is not an intersection of facets")]
    MissingIntersection { tau: Face, facet: Face },
    #[error("axiom c: boundary index {} is not in the core {core}", .index.wrapping_add(1))]
    BoundaryOffCore { index: usize, core: Face },
    #[error("axiom c: boundary coefficient {value} at index {} is outside [0,1]", .index.wrapping_add(1))]
    CoefficientRange { index: usize, value: Rational },
}

impl ValidationError {
    pub fn axiom(&self) -> Axiom {
        match self {
            ValidationError::Ambient(_) | ValidationError::IndexOutOfRange { .. } => Axiom::Format,
            ValidationError::NoFacets => Axiom::Emptiness,
            ValidationError::Incomparable { .. } => Axiom::Incomparability,
            ValidationError::NoChain { .. } => Axiom::A,
            ValidationError::MissingIntersection { .. } => Axiom::B,
            ValidationError::BoundaryOffCore { .. } | ValidationError::CoefficientRange { .. } => {
                Axiom::C
            }
        }
    }

    /// Witness as JSON with 1-based indices.
    pub fn witness(&self) -> serde_json::Value {
        match self {
            ValidationError::Ambient(n) => json!({ "ambient": n }),
            ValidationError::NoFacets => json!({}),
            ValidationError::IndexOutOfRange { index, ambient } => {
                json!({ "index": index.wrapping_add(1), "ambient": ambient })
            }
            ValidationError::Incomparable { small, large } => {
                json!({ "contained": small.to_one_based(), "container": large.to_one_based() })
            }
            ValidationError::NoChain { from, to, meet } => json!({
                "from": from.to_one_based(),
                "to": to.to_one_based(),
                "intersection": meet.to_one_based(),
            }),
            ValidationError::MissingIntersection { tau, facet } => json!({
                "tau": tau.to_one_based(),
                "facet": facet.to_one_based(),
            }),
            ValidationError::BoundaryOffCore { index, core } => {
                json!({ "index": index.wrapping_add(1), "core": core.to_one_based() })
            }
            ValidationError::CoefficientRange { index, value } => {
                json!({ "index": index.wrapping_add(1), "value": value.to_string() })
            }
        }
    }

    /// Re-checks the witness against raw input (0-based); true when the
    /// recorded failure is reproduced.
    pub fn replays_on(
        &self,
        ambient: usize,
        facets: &[Vec<usize>],
        boundary: &BTreeMap<usize, Rational>,
    ) -> bool {
        let faces: Vec<Face> = facets
            .iter()
            .filter(|f| f.iter().all(|&i| i < ambient.min(MAX_AMBIENT)))
            .map(|f| f.iter().copied().collect())
            .collect();
        let core = faces
            .iter()
            .copied()
            .reduce(Face::intersection)
            .unwrap_or(Face::EMPTY);
        match self {
            ValidationError::Ambient(n) => *n == ambient && (ambient == 0 || ambient > MAX_AMBIENT),
            ValidationError::NoFacets => facets.is_empty(),
            ValidationError::IndexOutOfRange { index, .. } => {
                *index >= ambient
                    && (facets.iter().flatten().any(|i| i == index) || boundary.contains_key(index))
            }
            ValidationError::Incomparable { small, large } => {
                small != large
                    && small.is_subset(*large)
                    && faces.contains(small)
                    && faces.contains(large)
            }
            ValidationError::NoChain { from, to, .. } => {
                faces.contains(from) && faces.contains(to) && !chain_exists(&faces, *from, *to)
            }
            ValidationError::MissingIntersection { tau, facet } => {
                faces.contains(facet)
                    && tau.is_subset(*facet)
                    && tau.len() + 1 == facet.len()
                    && core.is_subset(*tau)
                    && !faces.iter().any(|g| g.intersection(*facet) == *tau)
            }
            ValidationError::BoundaryOffCore { index, .. } => {
                boundary.contains_key(index) && !core.contains(*index)
            }
            ValidationError::CoefficientRange { index, .. } => boundary
                .get(index)
                .is_some_and(|b| b.is_negative() || *b > Rational::one()),
        }
    }
}

fn chain_exists(facets: &[Face], from: Face, to: Face) -> bool {
    let meet = from.intersection(to);
    let allowed: Vec<Face> = facets
        .iter()
        .copied()
        .filter(|g| meet.is_subset(*g))
        .collect();
    let mut seen = BTreeSet::from([from]);
    let mut queue = VecDeque::from([from]);
    while let Some(g) = queue.pop_front() {
        if g == to {
            return true;
        }
        for &h in &allowed {
            let common = g.intersection(h).len();
            if !seen.contains(&h) && common + 1 == g.len() && common + 1 == h.len() {
                seen.insert(h);
                queue.push_back(h);
            }
        }
    }
    false
}

/// Facets on `[N]`, sorted, pairwise incomparable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FacetComplex {
    ambient: usize,
    facets: Vec<Face>,
}

impl FacetComplex {
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    /// Common cardinality of the facets.
    pub fn facet_size(&self) -> usize {
        self.facets[0].len()
    }

    /// Union of all facets.
    pub fn support(&self) -> Face {
        self.facets.iter().copied().fold(Face::EMPTY, Face::union)
    }

    pub fn is_face(&self, gamma: Face) -> bool {
        self.facets.iter().any(|f| gamma.is_subset(*f))
    }
}

/// Boundary coefficients, nonzero entries only.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Boundary(BTreeMap<usize, Rational>);

impl Boundary {
    pub fn get(&self, i: usize) -> Rational {
        self.0.get(&i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.0.iter().map(|(i, b)| (*i, b))
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `{i : b_i > 0}`.
    pub fn support(&self) -> Face {
        self.0.keys().copied().collect()
    }

    pub fn as_map(&self) -> &BTreeMap<usize, Rational> {
        &self.0
    }
}

/// A validated GNC local model.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GncModel {
    complex: FacetComplex,
    boundary: Boundary,
    core: Face,
    reduced_core: Face,
}

impl GncModel {
    /// Validates a candidate with 0-based indices. Duplicate facets are merged
    /// and zero coefficients dropped; indices keep their positions in `[N]`.
    pub fn validate(
        ambient: usize,
        facets: &[Vec<usize>],
        boundary: &BTreeMap<usize, Rational>,
    ) -> Result<GncModel, ValidationError> {
        if ambient == 0 || ambient > MAX_AMBIENT {
            return Err(ValidationError::Ambient(ambient));
        }
        if facets.is_empty() {
            return Err(ValidationError::NoFacets);
        }
        for &i in facets.iter().flatten().chain(boundary.keys()) {
            if i >= ambient {
                return Err(ValidationError::IndexOutOfRange { index: i, ambient });
            }
        }
        let mut faces: Vec<Face> = facets.iter().map(|f| f.iter().copied().collect()).collect();
        faces.sort();
        faces.dedup();

        for &small in &faces {
            if let Some(&large) = faces.iter().find(|&&g| g != small && small.is_subset(g)) {
                return Err(ValidationError::Incomparable { small, large });
            }
        }

        for (k, &f) in faces.iter().enumerate() {
            for &g in &faces[k + 1..] {
                if !chain_exists(&faces, f, g) {
                    return Err(ValidationError::NoChain {
                        from: f,
                        to: g,
                        meet: f.intersection(g),
                    });
                }
            }
        }
        debug_assert!(faces.iter().all(|f| f.len() == faces[0].len()));

        let core = faces
            .iter()
            .copied()
            .reduce(Face::intersection)
            .expect("nonempty");
        for &f in &faces {
            for j in f.difference(core).iter() {
                let tau = f.remove(j);
                if !faces.iter().any(|g| g.intersection(f) == tau) {
                    return Err(ValidationError::MissingIntersection { tau, facet: f });
                }
            }
        }

        let mut coeffs = BTreeMap::new();
        for (&i, b) in boundary {
            if !core.contains(i) {
                return Err(ValidationError::BoundaryOffCore { index: i, core });
            }
            if b.is_negative() || *b > Rational::one() {
                return Err(ValidationError::CoefficientRange {
                    index: i,
                    value: b.clone(),
                });
            }
            if !b.is_zero() {
                coeffs.insert(i, b.clone());
            }
        }
        Ok(Self::assemble(ambient, faces, Boundary(coeffs)))
    }

    /// Convenience constructor with 1-based indices, as written in files.
    pub fn from_one_based(
        ambient: usize,
        facets: &[&[usize]],
        boundary: &[(usize, Rational)],
    ) -> Result<GncModel, ValidationError> {
        let shift = |i: usize| i.checked_sub(1).unwrap_or(usize::MAX);
        let facets: Vec<Vec<usize>> = facets
            .iter()
            .map(|f| f.iter().map(|&i| shift(i)).collect())
            .collect();
        let boundary: BTreeMap<usize, Rational> = boundary
            .iter()
            .map(|(i, b)| (shift(*i), b.clone()))
            .collect();
        Self::validate(ambient, &facets, &boundary)
    }

    fn assemble(ambient: usize, facets: Vec<Face>, boundary: Boundary) -> GncModel {
        let core = facets
            .iter()
            .copied()
            .reduce(Face::intersection)
            .unwrap_or(Face::EMPTY);
        let reduced_core = core
            .iter()
            .filter(|&i| boundary.get(i) < Rational::one())
            .collect();
        GncModel {
            complex: FacetComplex { ambient, facets },
            boundary,
            core,
            reduced_core,
        }
    }

    pub fn ambient(&self) -> usize {
        self.complex.ambient
    }

    pub fn complex(&self) -> &FacetComplex {
        &self.complex
    }

    pub fn facets(&self) -> &[Face] {
        &self.complex.facets
    }

    pub fn boundary(&self) -> &Boundary {
        &self.boundary
    }

    /// σ, the intersection of all facets.
    pub fn core(&self) -> Face {
        self.core
    }

    /// σ′ = {i ∈ σ : b_i < 1}.
    pub fn reduced_core(&self) -> Face {
        self.reduced_core
    }

    /// Log discrepancy function: `1 − b_i` on the core, zero elsewhere.
    pub fn psi(&self) -> Vec<Rational> {
        (0..self.ambient())
            .map(|i| {
                if self.core.contains(i) {
                    Rational::one() - self.boundary.get(i)
                } else {
                    Rational::zero()
                }
            })
            .collect()
    }

    pub fn is_face(&self, gamma: Face) -> bool {
        self.complex.is_face(gamma)
    }

    /// The same complex with `B = 0`.
    pub fn without_boundary(&self) -> GncModel {
        Self::assemble(self.ambient(), self.facets().to_vec(), Boundary::default())
    }

    /// Replaces the boundary, re-checking axiom c.
    pub fn with_boundary(
        &self,
        boundary: &BTreeMap<usize, Rational>,
    ) -> Result<GncModel, ValidationError> {
        let facets: Vec<Vec<usize>> = self.facets().iter().map(|f| f.to_vec()).collect();
        Self::validate(self.ambient(), &facets, boundary)
    }

    /// Drops ambient indices that occur in no facet. Returns the renumbered
    /// model and, for each new index, the old index it came from.
    pub fn compact(&self) -> (GncModel, Vec<usize>) {
        let used: Vec<usize> = self.complex.support().to_vec();
        let new_of = |old: usize| used.iter().position(|&u| u == old).expect("used index");
        let facets = self
            .facets()
            .iter()
            .map(|f| f.iter().map(new_of).collect())
            .collect::<Vec<Face>>();
        let boundary = Boundary(
            self.boundary
                .iter()
                .map(|(i, b)| (new_of(i), b.clone()))
                .collect(),
        );
        let mut facets = facets;
        facets.sort();
        (Self::assemble(used.len().max(1), facets, boundary), used)
    }

    /// Faces γ with σ′ ⊆ γ ⊆ F for some facet F.
    pub fn lc_centers(&self) -> BTreeSet<Face> {
        let sp = self.reduced_core;
        self.facets()
            .iter()
            .flat_map(|f| f.difference(sp).subsets().map(move |s| s.union(sp)))
            .collect()
    }

    pub fn is_lc_center(&self, gamma: Face) -> bool {
        self.reduced_core.is_subset(gamma) && self.is_face(gamma)
    }

    /// All intersections of nonempty facet families. Only defined for `B = 0`,
    /// where it must coincide with [`GncModel::lc_centers`].
    pub fn lc_centers_b0_intersections(&self) -> Result<BTreeSet<Face>, ModelError> {
        if !self.boundary.is_empty() {
            return Err(ModelError::NonzeroBoundary);
        }
        let mut out: BTreeSet<Face> = self.facets().iter().copied().collect();
        let mut frontier: Vec<Face> = out.iter().copied().collect();
        while let Some(g) = frontier.pop() {
            for &f in self.facets() {
                let h = g.intersection(f);
                if out.insert(h) {
                    frontier.push(h);
                }
            }
        }
        Ok(out)
    }

    /// The LCS locus with boundary `(B − B^{=1})|_Y`, or `None` when there is
    /// no lc center of positive codimension.
    pub fn lcs(&self) -> Option<GncModel> {
        let sp = self.reduced_core;
        let taus = maximal_faces(
            self.facets()
                .iter()
                .flat_map(|&f| f.difference(sp).iter().map(move |j| f.remove(j))),
        );
        if taus.is_empty() {
            return None;
        }
        let boundary = Boundary(
            self.boundary
                .iter()
                .filter(|(i, _)| sp.contains(*i))
                .map(|(i, b)| (i, b.clone()))
                .collect(),
        );
        Some(Self::assemble(self.ambient(), taus, boundary))
    }

    /// `Sing X`, which equals `LCS(X, 0)`.
    pub fn sing(&self) -> Option<GncModel> {
        self.without_boundary().lcs()
    }

    /// `[X, LCS(X), LCS(LCS(X)), ...]` until the locus is empty.
    pub fn lcs_chain(&self) -> Vec<GncModel> {
        let mut chain = vec![self.clone()];
        while let Some(next) = chain.last().and_then(GncModel::lcs) {
            chain.push(next);
        }
        chain
    }

    /// One entry per facet: the component `A_F` with conductor plus boundary.
    pub fn normalization_components(&self) -> Vec<NormalizationComponent> {
        self.facets()
            .iter()
            .map(|&f| {
                let mut coeffs = BTreeMap::new();
                for i in f.iter() {
                    if self.core.contains(i) {
                        let b = self.boundary.get(i);
                        if !b.is_zero() {
                            coeffs.insert(i, b);
                        }
                    } else {
                        coeffs.insert(i, Rational::one());
                    }
                }
                NormalizationComponent {
                    facet: f,
                    boundary: Boundary(coeffs),
                }
            })
            .collect()
    }

    /// For every facet F, the LCS of the normalization component over F has
    /// the same maximal faces as `LCS(X) ∩ A_F`.
    pub fn check_lcs_normalization_compat(&self) -> bool {
        let lcs_facets = self.lcs().map(|y| y.facets().to_vec()).unwrap_or_default();
        self.normalization_components().iter().all(|comp| {
            let f = comp.facet;
            let upstairs = comp
                .as_model(self.ambient())
                .lcs()
                .map(|y| y.facets().to_vec())
                .unwrap_or_default();
            let downstairs = maximal_faces(lcs_facets.iter().map(|t| t.intersection(f)));
            let downstairs = if lcs_facets.is_empty() {
                vec![]
            } else {
                downstairs
            };
            upstairs == downstairs
        })
    }

    /// Sorted 1-based facets and string coefficients, for reports.
    pub fn digest(&self) -> serde_json::Value {
        let facets: Vec<Vec<usize>> = self.facets().iter().map(|f| f.to_one_based()).collect();
        let boundary: BTreeMap<String, String> = self
            .boundary
            .iter()
            .map(|(i, b)| ((i + 1).to_string(), b.to_string()))
            .collect();
        json!({
            "ambient": self.ambient(),
            "facets": facets,
            "boundary": boundary,
            "core": self.core.to_one_based(),
            "reduced_core": self.reduced_core.to_one_based(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizationComponent {
    pub facet: Face,
    pub boundary: Boundary,
}

impl NormalizationComponent {
    /// The component as a single-facet model in ambient `[N]`.
    pub fn as_model(&self, ambient: usize) -> GncModel {
        GncModel::validate(ambient, &[self.facet.to_vec()], self.boundary.as_map())
            .expect("a single facet with coefficients on it is a GNC local model")
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ModelError {
    #[error("operation requires zero boundary")]
    NonzeroBoundary,
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum GenerateError {
    #[error("infeasible generator parameters: {0}")]
    Infeasible(String),
}

/// Generator family, chosen by `seed % 3` when applicable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Repaired random complexes.
    General,
    /// All `p`-subsets containing a random core.
    Cardinality,
    /// Coordinate hyperplane unions `{[N]∖i : i ∈ I}`.
    NormalCrossings,
}

const COEFFICIENTS: [(i64, i64); 5] = [(0, 1), (1, 3), (1, 2), (2, 3), (1, 1)];

fn random_boundary(rng: &mut ChaCha8Rng, core: Face) -> BTreeMap<usize, Rational> {
    core.iter()
        .map(|i| {
            let (n, d) = COEFFICIENTS[rng.gen_range(0..COEFFICIENTS.len())];
            (i, rat(n, d))
        })
        .collect()
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, j| acc * (n - j) / (j + 1))
}

/// Deterministic random GNC local model.
///
/// `seed % 3` picks the family: 0 general, 1 cardinality-`p`, 2 normal
/// crossings. A family that cannot produce `facet_size` facets in
/// `ambient` falls back to the general family. `facet_count` caps the
/// cardinality family (through the core size) and seeds the general one.
pub fn generate_random_model(
    seed: u64,
    ambient: usize,
    facet_size: usize,
    facet_count: usize,
) -> Result<GncModel, GenerateError> {
    let (model, _) = generate_with_family(seed, ambient, facet_size, facet_count)?;
    Ok(model)
}

/// As [`generate_random_model`], also reporting the family used.
pub fn generate_with_family(
    seed: u64,
    ambient: usize,
    facet_size: usize,
    facet_count: usize,
) -> Result<(GncModel, Family), GenerateError> {
    if ambient == 0 || ambient > MAX_AMBIENT {
        return Err(GenerateError::Infeasible(format!("ambient {ambient}")));
    }
    if facet_size > ambient {
        return Err(GenerateError::Infeasible(format!(
            "facet size {facet_size} exceeds ambient {ambient}"
        )));
    }
    if facet_count == 0 {
        return Err(GenerateError::Infeasible("facet count 0".into()));
    }
    if facet_count > binom(ambient, facet_size) {
        return Err(GenerateError::Infeasible(format!(
            "{facet_count} facets of size {facet_size} do not fit in ambient {ambient}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let family = match seed % 3 {
        1 if facet_size < ambient && facet_size >= 1 => Family::Cardinality,
        2 if facet_size + 1 == ambient => Family::NormalCrossings,
        _ => Family::General,
    };
    let model = match family {
        Family::Cardinality => cardinality_family(&mut rng, ambient, facet_size, facet_count),
        Family::NormalCrossings => normal_crossings(&mut rng, ambient, facet_count),
        Family::General => general_family(&mut rng, ambient, facet_size, facet_count),
    };
    Ok((model, family))
}

fn cardinality_family(rng: &mut ChaCha8Rng, n: usize, p: usize, cap: usize) -> GncModel {
    // core sizes, possibly 0, whose facet count C(n−s, p−s) stays within the cap
    let sizes: Vec<usize> = (0..=p).filter(|&s| binom(n - s, p - s) <= cap).collect();
    let s = *sizes.choose(rng).unwrap_or(&p);
    let mut all: Vec<usize> = (0..n).collect();
    all.shuffle(rng);
    let core: Face = all[..s].iter().copied().collect();
    let rest: Face = Face::full(n).difference(core);
    let facets: Vec<Vec<usize>> = rest
        .subsets()
        .filter(|t| t.len() == p - s)
        .map(|t| t.union(core).to_vec())
        .collect();
    let boundary = random_boundary(rng, core);
    GncModel::validate(n, &facets, &boundary).expect("cardinality family is GNC")
}

fn normal_crossings(rng: &mut ChaCha8Rng, n: usize, count: usize) -> GncModel {
    let mut all: Vec<usize> = (0..n).collect();
    all.shuffle(rng);
    let k = count.clamp(1, n);
    let i_set: Face = all[..k].iter().copied().collect();
    let facets: Vec<Vec<usize>> = i_set
        .iter()
        .map(|i| Face::full(n).remove(i).to_vec())
        .collect();
    let core = Face::full(n).difference(i_set);
    let boundary = random_boundary(rng, core);
    GncModel::validate(n, &facets, &boundary).expect("normal crossings model is GNC")
}

fn random_subset(rng: &mut ChaCha8Rng, n: usize, size: usize) -> Face {
    let mut all: Vec<usize> = (0..n).collect();
    all.shuffle(rng);
    all[..size].iter().copied().collect()
}

fn general_family(rng: &mut ChaCha8Rng, n: usize, p: usize, count: usize) -> GncModel {
    // repaired facet sets may grow; give up on a draw past this size
    let limit = (2 * count).max(count + 4);
    for _ in 0..32 {
        let mut facets: BTreeSet<Face> = BTreeSet::new();
        while facets.len() < count {
            facets.insert(random_subset(rng, n, p));
        }
        if let Some(facets) = repair(rng, n, facets, limit) {
            let list: Vec<Vec<usize>> = facets.iter().map(|f| f.to_vec()).collect();
            let core = facets.iter().copied().reduce(Face::intersection).unwrap();
            let boundary = random_boundary(rng, core);
            return GncModel::validate(n, &list, &boundary).expect("repaired complex is GNC");
        }
    }
    // fall back to a single facet
    let f = random_subset(rng, n, p);
    let boundary = random_boundary(rng, f);
    GncModel::validate(n, &[f.to_vec()], &boundary).expect("single facet is GNC")
}

/// Adds facets until axioms a and b hold. Each step adds at least one new
/// facet of the same size, so the loop terminates.
fn repair(
    rng: &mut ChaCha8Rng,
    n: usize,
    mut facets: BTreeSet<Face>,
    limit: usize,
) -> Option<BTreeSet<Face>> {
    loop {
        if facets.len() > limit {
            return None;
        }
        let list: Vec<Vec<usize>> = facets.iter().map(|f| f.to_vec()).collect();
        match GncModel::validate(n, &list, &BTreeMap::new()) {
            Ok(_) => return Some(facets),
            Err(ValidationError::NoChain { from, to, .. }) => {
                // walk from `from` towards `to`, one swap at a time
                let mut cur = from;
                let mut out: Vec<usize> = from.difference(to).to_vec();
                let mut inn: Vec<usize> = to.difference(from).to_vec();
                out.shuffle(rng);
                inn.shuffle(rng);
                for (x, y) in out.into_iter().zip(inn) {
                    cur = cur.remove(x).insert(y);
                    facets.insert(cur);
                }
            }
            Err(ValidationError::MissingIntersection { tau, facet }) => {
                let outside: Vec<usize> = Face::full(n).difference(facet).to_vec();
                let j = *outside.choose(rng)?;
                facets.insert(tau.insert(j));
            }
            Err(_) => return None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn face(ix: &[usize]) -> Face {
        ix.iter().map(|i| i - 1).collect()
    }

    fn faces(list: &[&[usize]]) -> BTreeSet<Face> {
        list.iter().map(|f| face(f)).collect()
    }

    fn xyz() -> GncModel {
        GncModel::from_one_based(3, &[&[1, 2], &[2, 3], &[1, 3]], &[]).unwrap()
    }

    fn a2() -> GncModel {
        GncModel::from_one_based(2, &[&[1, 2]], &[(1, rat(1, 1)), (2, rat(1, 1))]).unwrap()
    }

    fn cone(b4: Rational) -> GncModel {
        GncModel::from_one_based(4, &[&[1, 2, 4], &[2, 3, 4], &[1, 3, 4]], &[(4, b4)]).unwrap()
    }

    #[test]
    fn xyz_is_valid_with_empty_core() {
        let m = xyz();
        assert_eq!(m.core(), Face::EMPTY);
        assert_eq!(m.facets().len(), 3);
    }

    #[test]
    fn path_of_lines_fails_axiom_b() {
        let err = GncModel::from_one_based(
            4,
            &[&[1, 2], &[2, 3], &[3, 4]],
            &[(1, rat(1, 1)), (4, rat(1, 1))],
        )
        .unwrap_err();
        assert_eq!(err.axiom(), Axiom::B);
        assert_eq!(
            err,
            ValidationError::MissingIntersection {
                tau: face(&[1]),
                facet: face(&[1, 2])
            }
        );
        let raw = vec![vec![0, 1], vec![1, 2], vec![2, 3]];
        let b = BTreeMap::from([(0, rat(1, 1)), (3, rat(1, 1))]);
        assert!(err.replays_on(4, &raw, &b));
    }

    #[test]
    fn log_smooth_plane() {
        let m = a2();
        assert_eq!(m.core(), face(&[1, 2]));
        assert_eq!(m.reduced_core(), Face::EMPTY);
    }

    #[test]
    fn other_failures_carry_their_axiom() {
        let e = GncModel::from_one_based(3, &[&[1, 2], &[1]], &[]).unwrap_err();
        assert_eq!(e.axiom(), Axiom::Incomparability);
        let e = GncModel::from_one_based(3, &[&[1, 2], &[3]], &[]).unwrap_err();
        assert_eq!(e.axiom(), Axiom::A);
        let e = GncModel::from_one_based(3, &[&[1, 4]], &[]).unwrap_err();
        assert_eq!(e.axiom(), Axiom::Format);
        let e = GncModel::from_one_based(3, &[], &[]).unwrap_err();
        assert_eq!(e.axiom(), Axiom::Emptiness);
        let e = GncModel::from_one_based(3, &[&[1, 2], &[2, 3], &[1, 3]], &[(1, rat(1, 2))])
            .unwrap_err();
        assert_eq!(e.axiom(), Axiom::C);
        let e = GncModel::from_one_based(2, &[&[1, 2]], &[(1, rat(3, 2))]).unwrap_err();
        assert_eq!(e.axiom(), Axiom::C);
        let e = GncModel::from_one_based(2, &[&[1, 2]], &[(1, rat(-1, 2))]).unwrap_err();
        assert!(matches!(e, ValidationError::CoefficientRange { .. }));
    }

    #[test]
    fn two_disjoint_planes_fail_axiom_a() {
        // A_{12} ∪ A_{34} meet in a point: codimension two, no chain
        let e = GncModel::from_one_based(4, &[&[1, 2], &[3, 4]], &[]).unwrap_err();
        assert_eq!(e.axiom(), Axiom::A);
        assert!(e.replays_on(4, &[vec![0, 1], vec![2, 3]], &BTreeMap::new()));
    }

    #[test]
    fn is_face_examples() {
        let m = xyz();
        assert!(m.is_face(face(&[1, 2])));
        assert!(!m.is_face(face(&[1, 2, 3])));
        assert!(m.is_face(Face::EMPTY));
    }

    #[test]
    fn lc_centers_examples() {
        assert_eq!(a2().lc_centers(), faces(&[&[1, 2], &[1], &[2], &[]]));
        assert_eq!(xyz().lc_centers().len(), 7);
        let c = cone(rat(1, 2));
        assert_eq!(
            c.lc_centers(),
            faces(&[
                &[1, 2, 4],
                &[2, 3, 4],
                &[1, 3, 4],
                &[1, 4],
                &[2, 4],
                &[3, 4],
                &[4]
            ])
        );
    }

    #[test]
    fn b0_intersections_match() {
        let m = xyz();
        assert_eq!(m.lc_centers_b0_intersections().unwrap(), m.lc_centers());
        let single = GncModel::from_one_based(3, &[&[1, 2, 3]], &[]).unwrap();
        assert_eq!(
            single.lc_centers_b0_intersections().unwrap(),
            faces(&[&[1, 2, 3]])
        );
        assert_eq!(
            a2().lc_centers_b0_intersections(),
            Err(ModelError::NonzeroBoundary)
        );
    }

    #[test]
    fn lcs_examples() {
        let y = a2().lcs().unwrap();
        assert_eq!(y.facets(), &[face(&[1]), face(&[2])]);
        assert!(y.boundary().is_empty());
        let y = xyz().lcs().unwrap();
        assert_eq!(y.facets(), &[face(&[1]), face(&[2]), face(&[3])]);
        let smooth = GncModel::from_one_based(2, &[&[1, 2]], &[(1, rat(1, 2))]).unwrap();
        assert!(smooth.lcs().is_none());
    }

    #[test]
    fn lcs_can_leave_unused_indices() {
        let m = GncModel::from_one_based(2, &[&[1, 2]], &[(1, rat(1, 1)), (2, rat(1, 2))]).unwrap();
        let y = m.lcs().unwrap();
        assert_eq!(y.facets(), &[face(&[2])]);
        assert_eq!(y.core(), face(&[2]));
        let (c, map) = y.compact();
        assert_eq!(c.ambient(), 1);
        assert_eq!(map, vec![1]);
        assert_eq!(c.boundary().get(0), rat(1, 2));
    }

    #[test]
    fn sing_examples() {
        assert_eq!(
            xyz().sing().unwrap().facets(),
            &[face(&[1]), face(&[2]), face(&[3])]
        );
        let axes = GncModel::from_one_based(3, &[&[1], &[2], &[3]], &[]).unwrap();
        assert_eq!(axes.sing().unwrap().facets(), &[Face::EMPTY]);
        let single = GncModel::from_one_based(3, &[&[1, 2, 3]], &[]).unwrap();
        assert!(single.sing().is_none());
    }

    #[test]
    fn lcs_chains() {
        let chain: Vec<Vec<Face>> = xyz()
            .lcs_chain()
            .iter()
            .map(|m| m.facets().to_vec())
            .collect();
        assert_eq!(
            chain,
            vec![
                vec![face(&[1, 2]), face(&[1, 3]), face(&[2, 3])],
                vec![face(&[1]), face(&[2]), face(&[3])],
                vec![Face::EMPTY],
            ]
        );
        let chain: Vec<Vec<Face>> = a2()
            .lcs_chain()
            .iter()
            .map(|m| m.facets().to_vec())
            .collect();
        assert_eq!(
            chain,
            vec![
                vec![face(&[1, 2])],
                vec![face(&[1]), face(&[2])],
                vec![Face::EMPTY]
            ]
        );
        let smooth = GncModel::from_one_based(2, &[&[1, 2]], &[(1, rat(1, 3))]).unwrap();
        assert_eq!(smooth.lcs_chain().len(), 1);
    }

    #[test]
    fn normalization_examples() {
        let comps = xyz().normalization_components();
        let c12 = comps.iter().find(|c| c.facet == face(&[1, 2])).unwrap();
        assert_eq!(c12.boundary.get(0), rat(1, 1));
        assert_eq!(c12.boundary.get(1), rat(1, 1));
        let comps = cone(rat(1, 2)).normalization_components();
        let c = comps.iter().find(|c| c.facet == face(&[1, 2, 4])).unwrap();
        assert_eq!(c.boundary.get(0), rat(1, 1));
        assert_eq!(c.boundary.get(1), rat(1, 1));
        assert_eq!(c.boundary.get(3), rat(1, 2));
        assert_eq!(c.boundary.get(2), rat(0, 1));
        let single = GncModel::from_one_based(2, &[&[1, 2]], &[(1, rat(1, 3))]).unwrap();
        assert_eq!(
            single.normalization_components()[0].boundary,
            *single.boundary()
        );
    }

    #[test]
    fn compat_examples() {
        assert!(xyz().check_lcs_normalization_compat());
        assert!(a2().check_lcs_normalization_compat());
        assert!(cone(rat(1, 2)).check_lcs_normalization_compat());
    }

    #[test]
    fn psi_supported_on_core() {
        let p = cone(rat(1, 2)).psi();
        assert_eq!(p, vec![rat(0, 1), rat(0, 1), rat(0, 1), rat(1, 2)]);
    }

    #[test]
    fn generator_regressions() {
        let (m, fam) = generate_with_family(1, 4, 3, 4).unwrap();
        assert_eq!(fam, Family::Cardinality);
        assert!(!m.core().is_empty());
        let (m, fam) = generate_with_family(2, 4, 3, 2).unwrap();
        assert_eq!(fam, Family::NormalCrossings);
        assert!(m.facets().iter().all(|f| f.len() == 3));
        let core = m.core();
        let i_set = Face::full(4).difference(core);
        assert_eq!(m.facets().len(), i_set.len());
        for i in i_set.iter() {
            assert!(m.facets().contains(&Face::full(4).remove(i)));
        }
        assert_eq!(
            generate_random_model(7, 5, 3, 3).unwrap(),
            generate_random_model(7, 5, 3, 3).unwrap()
        );
    }

    #[test]
    fn generator_rejects_infeasible() {
        assert!(generate_random_model(0, 3, 4, 1).is_err());
        assert!(generate_random_model(0, 3, 2, 4).is_err());
        assert!(generate_random_model(0, 0, 0, 1).is_err());
        assert!(generate_random_model(0, 3, 2, 0).is_err());
    }
}
