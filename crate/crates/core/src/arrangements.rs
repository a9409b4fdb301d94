//! Coordinate subspace arrangements and the cohomology of their complements.
//!
//! `U(K) = ℂ^m ∖ ⋃_{ω∉K} {z_i = 0 for i ∈ ω}` retracts onto `Z_K`, so its
//! cohomology comes from the Betti table. The Goresky–MacPherson formula
//! gives the same numbers from the dual complex.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{Face, SimplicialComplex};
use crate::error::Result;
use crate::face_ring::hochster_betti;
use crate::field::Coefficients;
use crate::homology::{reduced_cohomology, reduced_homology};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArrangementDescription {
    pub m: usize,
    /// Minimal non-faces `ω`; each names the subspace `{z_i = 0, i ∈ ω}`.
    pub subspaces: Vec<Face>,
    /// True when there are no subspaces and `U(K) = ℂ^m`.
    pub complement_is_whole_space: bool,
}

pub fn arrangement_of(k: &SimplicialComplex) -> ArrangementDescription {
    let subspaces = k.missing_faces();
    ArrangementDescription {
        m: k.m(),
        complement_is_whole_space: subspaces.is_empty(),
        subspaces,
    }
}

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.len() > 1 && v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// `dim H^p(U(K)) = Σ_{2j−i=p} β^{−i,2j}(k[K])`, indexed by `p`.
pub fn complement_cohomology(k: &SimplicialComplex, coeffs: Coefficients) -> Result<Vec<u64>> {
    Ok(trim(hochster_betti(k, coeffs)?.total_degree_vector()))
}

/// `H̃^i(U(K)) = ⊕_{σ∈K̂} H̃_{2m−2|σ|−i−2}(link_{K̂} σ)`, with `H^0` added
/// back to give unreduced dimensions indexed by degree.
pub fn goresky_macpherson(k: &SimplicialComplex, coeffs: Coefficients) -> Result<Vec<u64>> {
    let dual = k.dual_complex()?;
    let m = k.m() as isize;
    let parts: Vec<Vec<(usize, u64)>> = dual
        .faces()
        .par_iter()
        .map(|&sigma| {
            let link = dual.link(sigma)?;
            let profile = reduced_homology(&link, coeffs)?;
            Ok(profile
                .nonzero()
                .map(|(d, dim)| {
                    (
                        (2 * m - 2 * sigma.len() as isize - d - 2) as usize,
                        dim as u64,
                    )
                })
                .collect())
        })
        .collect::<Result<_>>()?;
    let mut out = vec![0u64; 2 * k.m() + 1];
    out[0] = 1;
    for (i, d) in parts.into_iter().flatten() {
        out[i] += d;
    }
    Ok(trim(out))
}

/// For every `σ ∈ K̂`: `dim H̃^i(K_{[m]∖σ}) = dim H̃_{m−3−i−|σ|}(link_{K̂} σ)`
/// in every degree where either side is nonzero.
pub fn alexander_duality_check(k: &SimplicialComplex, coeffs: Coefficients) -> Result<bool> {
    let dual = k.dual_complex()?;
    let m = k.m() as isize;
    let full = Face::full(k.m());
    let results: Vec<bool> = dual
        .faces()
        .par_iter()
        .map(|&sigma| {
            let left = reduced_cohomology(&k.full_subcomplex(full.difference(sigma)), coeffs)?;
            let right = reduced_homology(&dual.link(sigma)?, coeffs)?;
            let shift = m - 3 - sigma.len() as isize;
            let degrees: BTreeSet<isize> = left
                .nonzero()
                .map(|(i, _)| i)
                .chain(right.nonzero().map(|(d, _)| shift - d))
                .collect();
            Ok(degrees
                .into_iter()
                .all(|i| left.dim(i) == right.dim(shift - i)))
        })
        .collect::<Result<_>>()?;
    Ok(results.into_iter().all(|b| b))
}
