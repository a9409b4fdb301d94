//! The Stanley–Reisner ring `k[K] = k[v_1, …, v_m] / I_K` with `deg v_i = 2`.

pub mod betti;
pub mod koszul;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::complex::{map_face, Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::field::{binomial, Coefficients};
use crate::fvectors::{is_m_vector, FHVectors};
use crate::homology;
use crate::linalg::rank_field;
use crate::poly::Poly;

pub use betti::{hochster_betti, hochster_betti_with, BigradedBettiTable, HochsterOptions};
pub use koszul::{
    koszul_betti, poincare_algebra_check, tor_product, CohomologyClass, KoszulCohomology,
    KoszulElement, KoszulMonomial, PoincareReport,
};

/// Generators of `I_K`: one square-free monomial per missing face.
pub fn ideal_generators(k: &SimplicialComplex) -> Vec<Face> {
    k.missing_faces()
}

/// `numerator / (1 − t²)^denom_exponent`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertSeries {
    pub numerator: Poly,
    pub denom_exponent: usize,
}

impl HilbertSeries {
    /// Coefficient of `t^{2d}` in the power series expansion.
    pub fn coefficient(&self, d: usize) -> BigInt {
        let e = self.denom_exponent as i64;
        (0..=d)
            .map(|i| {
                let c = self.numerator.coeff(i);
                if e == 0 {
                    if i == d {
                        c
                    } else {
                        BigInt::zero()
                    }
                } else {
                    c * binomial((d - i) as i64 + e - 1, e - 1)
                }
            })
            .sum()
    }
}

/// `F(k[K]; t) = h(t²) / (1 − t²)^n`.
pub fn hilbert_series(k: &SimplicialComplex) -> HilbertSeries {
    let fh = FHVectors::of(k);
    HilbertSeries {
        numerator: Poly::new(fh.h),
        denom_exponent: fh.n,
    }
}

/// Number of monomials of degree `2d` whose support is a face:
/// `Σ_k f_{k−1} C(d−1, k−1)`.
pub fn graded_dimension(k: &SimplicialComplex, d: usize) -> BigInt {
    if d == 0 {
        return BigInt::from(1);
    }
    if k.is_void() {
        return BigInt::zero();
    }
    let f = k.f_vector().expect("nonvoid");
    (1..=f.len())
        .map(|s| BigInt::from(f[s - 1]) * binomial(d as i64 - 1, s as i64 - 1))
        .sum()
}

/// Whether `θ_i = Σ_j λ_{ij} v_j` (rows of `theta`) is an lsop: on every
/// facet `σ` the columns of `σ` have rank `|σ|`.
pub fn lsop_check_field(
    k: &SimplicialComplex,
    theta: &[Vec<BigInt>],
    coeffs: Coefficients,
) -> Result<bool> {
    coeffs.validate()?;
    if theta.len() != k.n() {
        return Err(Error::LengthMismatch {
            expected: k.n(),
            actual: theta.len(),
        });
    }
    if let Some(row) = theta.iter().find(|r| r.len() != k.m()) {
        return Err(Error::LengthMismatch {
            expected: k.m(),
            actual: row.len(),
        });
    }
    Ok(k.facets().iter().all(|sigma| {
        let cols: Vec<_> = sigma
            .vertices()
            .map(|v| {
                theta
                    .iter()
                    .map(|row| coeffs.from_bigint(&row[v - 1]))
                    .collect()
            })
            .collect();
        rank_field(&cols) == sigma.len()
    }))
}

/// Both sides of `(1 − t²)^m F(k[K]; t) = Σ (−1)^i β^{−i,2j} t^{2j}`.
pub fn resolution_euler_sides(k: &SimplicialComplex, coeffs: Coefficients) -> Result<(Poly, Poly)> {
    let series = hilbert_series(k);
    let lhs = &Poly::one_minus_s_pow(k.m() - series.denom_exponent) * &series.numerator;
    let rhs = hochster_betti(k, coeffs)?.euler_polynomial();
    Ok((lhs, rhs))
}

pub fn euler_resolution_identity(k: &SimplicialComplex, coeffs: Coefficients) -> Result<bool> {
    let (lhs, rhs) = resolution_euler_sides(k, coeffs)?;
    Ok(lhs == rhs)
}

/// The ring map `k[K_2] → k[K_1]` induced by a simplicial map `K_1 → K_2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InducedRingMap {
    /// `images[j−1]` lists the `i` with `φ(i) = j` and `{i} ∈ K_1`;
    /// the image of `w_j` is their sum.
    pub images: Vec<Vec<usize>>,
}

/// Builds `w_j ↦ Σ_{φ(i)=j} v_i` and checks that every generator of
/// `I_{K_2}` maps into `I_{K_1}`.
pub fn induced_ring_map(
    source: &SimplicialComplex,
    target: &SimplicialComplex,
    phi: &[usize],
) -> Result<InducedRingMap> {
    if !source.is_simplicial_map(target, phi)? {
        return Err(Error::NotSimplicialMap(format!("{phi:?}")));
    }
    let images: Vec<Vec<usize>> = (1..=target.m())
        .map(|j| {
            (1..=source.m())
                .filter(|&i| phi[i - 1] == j && source.contains(Face::singleton(i)))
                .collect()
        })
        .collect();
    for tau in target.missing_faces() {
        if let Some(bad) = surviving_monomial(source, &images, tau) {
            return Err(Error::CrossCheck(format!(
                "image of the generator {tau} contains v_{bad} outside I_K"
            )));
        }
    }
    debug_assert!(source
        .faces()
        .iter()
        .all(|f| target.contains(map_face(*f, phi))));
    Ok(InducedRingMap { images })
}

/// Expands `Π_{j∈τ} Σ_{i∈images[j]} v_i` and returns the support of a
/// monomial that is not killed by `I_{K_1}`, if any.
fn surviving_monomial(
    source: &SimplicialComplex,
    images: &[Vec<usize>],
    tau: Face,
) -> Option<Face> {
    let choices: Vec<&Vec<usize>> = tau.vertices().map(|j| &images[j - 1]).collect();
    fn rec(source: &SimplicialComplex, choices: &[&Vec<usize>], acc: Face) -> Option<Face> {
        match choices.split_first() {
            None => source.contains(acc).then_some(acc),
            Some((first, rest)) => first.iter().find_map(|&i| rec(source, rest, acc.with(i))),
        }
    }
    rec(source, &choices, Face::EMPTY)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GorensteinVerdict {
    pub cohen_macaulay: bool,
    pub gorenstein: bool,
    pub gorenstein_star: bool,
}

/// Gorenstein means Cohen–Macaulay with `β^{−(m−n)} = 1`; Gorenstein*
/// additionally excludes cones. Cohen–Macaulayness is read off the table
/// as `β^{−i} = 0` for `i > m − n`.
pub fn is_gorenstein(k: &SimplicialComplex, coeffs: Coefficients) -> Result<GorensteinVerdict> {
    let table = hochster_betti(k, coeffs)?;
    let top = k.m() - k.n();
    let cohen_macaulay = table.max_i() <= top && table.row_sum(top) != 0;
    let gorenstein = cohen_macaulay && table.row_sum(top) == 1;
    Ok(GorensteinVerdict {
        cohen_macaulay,
        gorenstein,
        gorenstein_star: gorenstein && !k.is_cone(),
    })
}

/// The h-vector of a Cohen–Macaulay complex is an M-vector.
pub fn stanley_m_vector_check(k: &SimplicialComplex, coeffs: Coefficients) -> Result<bool> {
    if !homology::is_cohen_macaulay(k, coeffs)? {
        return Err(Error::Precondition(
            "complex is not Cohen-Macaulay over the given field".into(),
        ));
    }
    Ok(is_m_vector(&FHVectors::of(k).h))
}
