//! Hilbert functions of unions of lc centers and the restriction sequence
//! `0 → I_{Z∪Y⊂X} → I_{Z⊂X} → I_{Z∩Y⊂Y} → 0` with `Y = LCS(X, B)`.
//!
//! A union of coordinate subspaces has coordinate ring spanned by the
//! monomials supported on one of its faces, so every ideal here is handled
//! through monomial counts only.

use std::collections::{BTreeSet, HashSet};

use thiserror::Error;

use crate::face::{maximal_faces, Face};
use crate::model::GncModel;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealError {
    #[error("face {0} is not an lc center")]
    NotLcCenter(Face),
    #[error("the LCS locus is empty")]
    EmptyLcs,
}

/// A union of lc centers, recorded by the faces of its members.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CenterUnion {
    faces: BTreeSet<Face>,
}

impl CenterUnion {
    pub fn new(
        model: &GncModel,
        faces: impl IntoIterator<Item = Face>,
    ) -> Result<Self, IdealError> {
        let faces: BTreeSet<Face> = faces.into_iter().collect();
        if let Some(&bad) = faces.iter().find(|&&g| !model.is_lc_center(g)) {
            return Err(IdealError::NotLcCenter(bad));
        }
        Ok(CenterUnion { faces })
    }

    pub fn faces(&self) -> &BTreeSet<Face> {
        &self.faces
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }
}

fn down_closure<'a>(faces: impl IntoIterator<Item = &'a Face>) -> HashSet<Face> {
    faces.into_iter().flat_map(|f| f.subsets()).collect()
}

fn monomials_with_support(size: usize, d: u64) -> u64 {
    match (size, d) {
        (0, 0) => 1,
        (0, _) | (_, 0) => 0,
        (k, d) => {
            let (n, k) = (d - 1, k as u64 - 1);
            if k > n {
                0
            } else {
                (0..k).fold(1u64, |acc, j| acc * (n - j) / (j + 1))
            }
        }
    }
}

/// Number of degree-`d` monomials supported on some member face.
pub fn hilbert_function<'a>(faces: impl IntoIterator<Item = &'a Face>, d: u64) -> u64 {
    down_closure(faces)
        .into_iter()
        .map(|t| monomials_with_support(t.len(), d))
        .sum()
}

/// `Z ∩ Y` as the maximal faces `γ ∩ τ`, `γ ∈ Z`, `τ` a facet of `LCS(X, B)`.
/// Each is an lc center of `(Y, B_Y)`; empty when the LCS locus is.
pub fn intersect_with_lcs(model: &GncModel, z: &CenterUnion) -> CenterUnion {
    let Some(y) = model.lcs() else {
        return CenterUnion::default();
    };
    let faces = maximal_faces(
        z.faces
            .iter()
            .flat_map(|g| y.facets().iter().map(move |t| g.intersection(*t))),
    );
    CenterUnion::new(&y, faces).expect("Z ∩ Y is a union of lc centers of (Y, B_Y)")
}

/// `π^{-1}(Z)` on each normalization component `A_F`: the maximal faces
/// `γ ∩ F`, each an lc center of `(A_F, conductor + B)`.
pub fn normalization_preimage(model: &GncModel, z: &CenterUnion) -> Vec<(Face, CenterUnion)> {
    model
        .normalization_components()
        .into_iter()
        .map(|comp| {
            let f = comp.facet;
            let local = comp.as_model(model.ambient());
            let faces = maximal_faces(z.faces.iter().map(|g| g.intersection(f)));
            let union = CenterUnion::new(&local, faces)
                .expect("preimage of a union of lc centers is a union of lc centers");
            (f, union)
        })
        .collect()
}

/// Degreewise exactness for `0 ≤ d ≤ d_max`:
/// `h_Z(d) + h_Y(d) = h_{Z∪Y}(d) + h_{Z∩Y}(d)`.
pub fn check_ideal_sequence(
    model: &GncModel,
    z: &CenterUnion,
    d_max: u64,
) -> Result<bool, IdealError> {
    let y = model.lcs().ok_or(IdealError::EmptyLcs)?;
    let meet = intersect_with_lcs(model, z);
    let join: BTreeSet<Face> = z.faces.iter().chain(y.facets()).copied().collect();
    Ok((0..=d_max).all(|d| {
        hilbert_function(&z.faces, d) + hilbert_function(y.facets(), d)
            == hilbert_function(&join, d) + hilbert_function(&meet.faces, d)
    }))
}
