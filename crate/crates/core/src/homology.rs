//! Reduced simplicial homology over exact fields, and the classifiers built
//! on link homology: Cohen–Macaulay (Reisner), Gorenstein* (Stanley),
//! homology manifolds.
//!
//! Convention: `H̃_{−1}({∅}) = k`, and `H̃_{−1}(K) = 0` for every complex
//! with at least one vertex. Over a field, reduced cohomology and reduced
//! homology have equal dimensions.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::field::Coefficients;
use crate::linalg::rank_integer;

/// Dimensions of `H̃_d(K; k)` for `d = −1, …, dim K`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyProfile {
    pub dims: BTreeMap<isize, usize>,
}

impl HomologyProfile {
    pub fn dim(&self, degree: isize) -> usize {
        self.dims.get(&degree).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn is_acyclic(&self) -> bool {
        self.total() == 0
    }

    /// True iff the homology is that of `S^d`: one copy of `k` in degree `d`.
    pub fn is_sphere_like(&self, d: isize) -> bool {
        self.dim(d) == 1 && self.total() == 1
    }

    /// `(degree, dim)` pairs with nonzero dimension.
    pub fn nonzero(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.dims
            .iter()
            .filter(|(_, &d)| d > 0)
            .map(|(&k, &d)| (k, d))
    }
}

/// Oriented boundary `∂_d : C_d → C_{d−1}` with rows indexed by the
/// `d`-faces and columns by the `(d−1)`-faces, both in the given order.
pub fn boundary_matrix(source: &[Face], target: &[Face]) -> Vec<Vec<i64>> {
    let index: HashMap<Face, usize> = target.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    source
        .iter()
        .map(|s| {
            let mut row = vec![0i64; target.len()];
            for (k, v) in s.vertices().enumerate() {
                let col = index[&s.without(v)];
                row[col] = if k % 2 == 0 { 1 } else { -1 };
            }
            row
        })
        .collect()
}

/// Reduced homology dimensions of `K` over the given field. Ghost vertices
/// contribute nothing.
pub fn reduced_homology(k: &SimplicialComplex, coeffs: Coefficients) -> Result<HomologyProfile> {
    coeffs.validate()?;
    let n = k.n();
    let mut by_size: Vec<Vec<Face>> = vec![Vec::new(); n + 1];
    for f in k.faces() {
        by_size[f.len()].push(f);
    }
    // rank[s] = rank of ∂ from faces of size s to faces of size s − 1, s ≥ 1
    let mut rank = vec![0usize; n + 2];
    for s in 1..=n {
        rank[s] = rank_integer(&boundary_matrix(&by_size[s], &by_size[s - 1]), coeffs);
    }
    let dims = (0..=n)
        .map(|s| {
            let d = s as isize - 1;
            (d, by_size[s].len() - rank[s] - rank[s + 1])
        })
        .collect();
    Ok(HomologyProfile { dims })
}

/// Same dimensions as [`reduced_homology`]; over a field the two agree.
pub fn reduced_cohomology(k: &SimplicialComplex, coeffs: Coefficients) -> Result<HomologyProfile> {
    reduced_homology(k, coeffs)
}

fn link_profiles(
    k: &SimplicialComplex,
    coeffs: Coefficients,
    include_empty: bool,
) -> Result<Vec<(SimplicialComplex, HomologyProfile)>> {
    coeffs.validate()?;
    k.faces()
        .into_par_iter()
        .filter(|f| include_empty || !f.is_empty())
        .map(|f| {
            let link = k.link(f)?;
            let profile = reduced_homology(&link, coeffs)?;
            Ok((link, profile))
        })
        .collect()
}

/// Reisner's criterion: for every face `σ` (including `∅`),
/// `H̃_i(link σ) = 0` for all `i < dim link σ`.
pub fn is_cohen_macaulay(k: &SimplicialComplex, coeffs: Coefficients) -> Result<bool> {
    Ok(link_profiles(k, coeffs, true)?
        .iter()
        .all(|(link, p)| p.nonzero().all(|(d, _)| d >= link.dim())))
}

/// Stanley's criterion: every link (including `link ∅ = K`) has the
/// homology of a sphere of its own dimension.
pub fn is_gorenstein_star(k: &SimplicialComplex, coeffs: Coefficients) -> Result<bool> {
    Ok(link_profiles(k, coeffs, true)?
        .iter()
        .all(|(link, p)| p.is_sphere_like(link.dim())))
}

/// The link of every nonempty face `σ` has the homology of
/// `S^{dim K − |σ|}`. Requires a pure complex.
pub fn is_homology_manifold(k: &SimplicialComplex, coeffs: Coefficients) -> Result<bool> {
    if !k.is_pure() {
        return Err(Error::NotPure);
    }
    let d = k.dim();
    let faces = k.faces();
    let profiles = link_profiles(k, coeffs, false)?;
    Ok(faces
        .iter()
        .filter(|f| !f.is_empty())
        .zip(&profiles)
        .all(|(f, (_, p))| p.is_sphere_like(d - f.len() as isize)))
}

/// A homology manifold whose own homology is that of `S^{dim K}`.
pub fn is_homology_sphere(k: &SimplicialComplex, coeffs: Coefficients) -> Result<bool> {
    Ok(is_homology_manifold(k, coeffs)? && reduced_homology(k, coeffs)?.is_sphere_like(k.dim()))
}
