//! The moment-angle complex `Z_K ⊂ (D²)^m` through its bigraded cell
//! structure.
//!
//! A cell is a triple of disjoint faces `(D, T, ONE)` covering `[m]`, with
//! `D ∈ K`: coordinate `k` runs over the open disc, the boundary circle or
//! the base point. Its bidegree is `(−|T|, 2|T| + 2|D|)`. The cellular
//! cochains split over `ω = D ∪ T`.

use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::face_ring::BigradedBettiTable;
use crate::field::{binomial, Coefficients};
use crate::fvectors::FHVectors;
use crate::homology;
use crate::linalg::rank_integer;
use crate::poly::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BigradedCell {
    pub d: Face,
    pub t: Face,
    pub one: Face,
}

impl BigradedCell {
    /// `(q, p)` for bidegree `(−q, 2p)`.
    pub fn bidegree(&self) -> (usize, usize) {
        (self.t.len(), self.t.len() + self.d.len())
    }
}

/// Every cell of `Z_K`, ordered by `ω = D ∪ T` and then by `T`.
pub fn cells(k: &SimplicialComplex) -> Vec<BigradedCell> {
    let full = Face::full(k.m());
    let mut out = Vec::new();
    for omega in full.subsets() {
        for t in omega.subsets() {
            let d = omega.difference(t);
            if k.contains(d) {
                out.push(BigradedCell {
                    d,
                    t,
                    one: full.difference(omega),
                });
            }
        }
    }
    out
}

/// `dim C^{−q,2p}(Z_K) = f_{p−q−1} · C(m − p + q, q)`.
pub fn cell_count(k: &SimplicialComplex, q: usize, p: usize) -> BigInt {
    if q > p || p > k.m() {
        return BigInt::from(0);
    }
    let s = p - q;
    let faces = if s == 0 {
        BigInt::from(1)
    } else if k.is_void() {
        BigInt::from(0)
    } else {
        k.f_vector()
            .expect("nonvoid")
            .get(s - 1)
            .map_or(BigInt::from(0), |&x| BigInt::from(x))
    };
    faces * binomial((k.m() - p + q) as i64, q as i64)
}

/// `dim H^{−i,2ω}(Z_K)` for `i = 0, …, |ω|` from the cellular cochains
/// supported on `ω`: the coboundary sends `T ↦ Σ_{k∈T} ± (T ∖ k)` with
/// sign `(−1)^{#{t∈T : t<k}}`, keeping only terms with `ω ∖ (T ∖ k) ∈ K`.
pub fn omega_cohomology(k: &SimplicialComplex, omega: Face, coeffs: Coefficients) -> Vec<usize> {
    let w = omega.len();
    let mut by_size: Vec<Vec<Face>> = vec![Vec::new(); w + 1];
    for t in omega.subsets() {
        if k.contains(omega.difference(t)) {
            by_size[t.len()].push(t);
        }
    }
    let index: Vec<HashMap<Face, usize>> = by_size
        .iter()
        .map(|v| v.iter().enumerate().map(|(i, t)| (*t, i)).collect())
        .collect();
    let rank = |q: usize| -> usize {
        if q == 0 || q > w || by_size[q].is_empty() || by_size[q - 1].is_empty() {
            return 0;
        }
        let rows: Vec<Vec<i64>> = by_size[q]
            .iter()
            .map(|t| {
                let mut row = vec![0i64; by_size[q - 1].len()];
                for kk in t.vertices() {
                    if let Some(&c) = index[q - 1].get(&t.without(kk)) {
                        row[c] = if t.count_below(kk) % 2 == 0 { 1 } else { -1 };
                    }
                }
                row
            })
            .collect();
        rank_integer(&rows, coeffs)
    };
    let ranks: Vec<usize> = (0..=w + 1).map(rank).collect();
    (0..=w)
        .map(|q| by_size[q].len() - ranks[q] - ranks[q + 1])
        .collect()
}

/// `b^{−i,2j}(Z_K) = Σ_{|ω|=j} dim H^{−i,2ω}`.
pub fn zk_bigraded_betti(
    k: &SimplicialComplex,
    coeffs: Coefficients,
) -> Result<BigradedBettiTable> {
    coeffs.validate()?;
    let omegas: Vec<Face> = Face::full(k.m()).subsets().collect();
    let parts: Vec<(usize, Vec<usize>)> = omegas
        .par_iter()
        .map(|&w| (w.len(), omega_cohomology(k, w, coeffs)))
        .collect();
    let mut table = BigradedBettiTable::new(k.m(), k.n());
    for (j, dims) in parts {
        for (i, d) in dims.into_iter().enumerate() {
            table.add(i, j, d as u64);
        }
    }
    Ok(table)
}

/// Ordinary Betti numbers `b^0, …, b^{2m}` of `Z_K`.
pub fn zk_betti_numbers(k: &SimplicialComplex, coeffs: Coefficients) -> Result<Vec<u64>> {
    Ok(zk_bigraded_betti(k, coeffs)?.total_degree_vector())
}

/// `χ(Z_K; t) = Σ_{q,p} (−1)^q dim C^{−q,2p} t^{2p}`, checked against
/// `(1 − t²)^{m−n} h(t²)`.
pub fn chi_polynomial(k: &SimplicialComplex) -> Result<Poly> {
    let m = k.m();
    let from_cells = Poly::new(
        (0..=m)
            .map(|p| {
                (0..=p)
                    .map(|q| {
                        if q % 2 == 0 {
                            cell_count(k, q, p)
                        } else {
                            -cell_count(k, q, p)
                        }
                    })
                    .sum()
            })
            .collect(),
    );
    let closed = chi_closed_form(k);
    if from_cells != closed {
        return Err(Error::CrossCheck(format!(
            "cell count gives {from_cells}, closed form gives {closed}"
        )));
    }
    Ok(closed)
}

fn chi_closed_form(k: &SimplicialComplex) -> Poly {
    let fh = FHVectors::of(k);
    &Poly::one_minus_s_pow(k.m() - fh.n) * &Poly::new(fh.h)
}

/// `(χ(Z_K, T^m; t), χ(Z_K ∖ T^m; t))`.
pub fn chi_pair_polynomials(k: &SimplicialComplex) -> (Poly, Poly) {
    let m = k.m();
    let fh = FHVectors::of(k);
    let chi = chi_closed_form(k);
    let torus = Poly::one_minus_s_pow(m);
    let pair = &chi - &torus;
    let h_top = fh.h[fh.n].clone();
    let correction = torus.scale(&if fh.n % 2 == 1 { h_top } else { -h_top });
    let complement = &chi + &correction;
    (pair, complement)
}

/// Outcome of [`relative_pd_check`] once the manifold gate has passed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelativeDuality {
    pub pair: Poly,
    pub complement: Poly,
    pub reflected_pair: Poly,
    pub holds: bool,
}

/// `χ(Z_K ∖ T^m; t) = (−1)^{m−n} t^{2m} χ(Z_K, T^m; 1/t)`, for homology
/// manifolds only.
pub fn relative_pd_check(k: &SimplicialComplex, coeffs: Coefficients) -> Result<RelativeDuality> {
    let manifold = match homology::is_homology_manifold(k, coeffs) {
        Ok(b) => b,
        Err(Error::NotPure) => false,
        Err(e) => return Err(e),
    };
    if !manifold {
        return Err(Error::Precondition(format!(
            "not a homology manifold over {coeffs}"
        )));
    }
    let (pair, complement) = chi_pair_polynomials(k);
    let mut reflected_pair = pair.reflect(k.m());
    if (k.m() - k.n()) % 2 == 1 {
        reflected_pair = -&reflected_pair;
    }
    let holds = reflected_pair == complement;
    Ok(RelativeDuality {
        pair,
        complement,
        reflected_pair,
        holds,
    })
}

/// Symmetry `b^{−q,2p} = b^{−(m−n)+q,2(m−p)}` of the `Z_K` table; requires
/// a Gorenstein* complex.
pub fn pd_symmetry_check(k: &SimplicialComplex, coeffs: Coefficients) -> Result<bool> {
    if !homology::is_gorenstein_star(k, coeffs)? {
        return Err(Error::Precondition(format!(
            "not Gorenstein* over {coeffs}"
        )));
    }
    Ok(zk_bigraded_betti(k, coeffs)?.is_symmetric())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomotopyInfo {
    pub neighbourliness: usize,
    /// `π_i(Z_K) = 0` for `i ≤ connectivity`.
    pub connectivity: usize,
    pub first_nontrivial_degree: usize,
    /// Number of missing faces with `q + 1` vertices.
    pub first_nontrivial_rank: usize,
}

pub fn homotopy_info(k: &SimplicialComplex) -> Result<HomotopyInfo> {
    if k.is_full_simplex() {
        return Err(Error::Precondition(
            "K is the full simplex, so Z_K is contractible".into(),
        ));
    }
    let q = k.neighbourliness();
    let rank = k
        .missing_faces()
        .iter()
        .filter(|f| f.len() == q + 1)
        .count();
    Ok(HomotopyInfo {
        neighbourliness: q,
        connectivity: 2 * q,
        first_nontrivial_degree: 2 * q + 1,
        first_nontrivial_rank: rank,
    })
}
