//! Face-count combinatorics: f-, h- and g-vectors, Macaulay pseudo-powers,
//! Dehn–Sommerville relations and the upper/lower bound inequalities.
//!
//! All quantities are arbitrary-precision integers. h-vectors of
//! non-spheres may be negative (the 7-vertex torus has `h_3 = −1`).

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::field::{binomial, sign, Coefficients, FieldScalar};
use crate::linalg;

pub fn to_big(v: &[u64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn to_big_i64(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// f-, h- and g-vectors of a complex of Krull dimension `n = dim + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FHVectors {
    pub n: usize,
    pub f: Vec<BigInt>,
    pub h: Vec<BigInt>,
    pub g: Vec<BigInt>,
}

impl FHVectors {
    pub fn from_f(f: &[BigInt]) -> Self {
        let n = f.len();
        let h = h_from_f(f, n).expect("length matches");
        let g = g_vector(&h);
        FHVectors {
            n,
            f: f.to_vec(),
            h,
            g,
        }
    }

    /// For `{∅}` this is `n = 0`, `f = ()`, `h = (1)`.
    pub fn of(k: &SimplicialComplex) -> Self {
        let f = if k.is_void() {
            Vec::new()
        } else {
            to_big(&k.f_vector().expect("nonvoid"))
        };
        Self::from_f(&f)
    }
}

/// h-vector from the f-vector via
/// `Σ h_i t^{n−i} = Σ_k f_{k−1} (t − 1)^{n−k}` with `f_{−1} = 1`.
pub fn h_from_f(f: &[BigInt], n: usize) -> Result<Vec<BigInt>> {
    if f.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            actual: f.len(),
        });
    }
    let fk = |k: usize| {
        if k == 0 {
            BigInt::one()
        } else {
            f[k - 1].clone()
        }
    };
    let n = n as i64;
    Ok((0..=n)
        .map(|i| {
            (0..=i)
                .map(|k| sign(i - k) * binomial(n - k, i - k) * fk(k as usize))
                .sum()
        })
        .collect())
}

/// Inverse of [`h_from_f`].
pub fn f_from_h(h: &[BigInt]) -> Result<Vec<BigInt>> {
    if h.is_empty() {
        return Err(Error::LengthMismatch {
            expected: 1,
            actual: 0,
        });
    }
    let n = h.len() as i64 - 1;
    Ok((1..=n)
        .map(|k| {
            (0..=k)
                .map(|i| binomial(n - i, k - i) * &h[i as usize])
                .sum()
        })
        .collect())
}

/// `g_0 = 1`, `g_i = h_i − h_{i−1}` for `1 ≤ i ≤ ⌊n/2⌋`.
pub fn g_vector(h: &[BigInt]) -> Vec<BigInt> {
    let n = h.len().saturating_sub(1);
    let mut g = vec![BigInt::one()];
    for i in 1..=n / 2 {
        g.push(&h[i] - &h[i - 1]);
    }
    g
}

/// Binomial `i`-expansion `a = C(a_i, i) + C(a_{i−1}, i−1) + … + C(a_j, j)`
/// with `a_i > a_{i−1} > … > a_j ≥ j ≥ 1`, as pairs `(a_k, k)`.
/// Empty for `a = 0`.
pub fn binomial_expansion(a: &BigInt, i: u32) -> Vec<(u64, u32)> {
    assert!(i >= 1, "binomial expansion needs i ≥ 1");
    let mut rest = a.clone();
    let mut out = Vec::new();
    let mut k = i;
    while rest.is_positive() && k >= 1 {
        // largest x with C(x, k) ≤ rest
        let mut x = k as u64;
        while binomial(x as i64 + 1, k as i64) <= rest {
            x += 1;
        }
        rest -= binomial(x as i64, k as i64);
        out.push((x, k));
        k -= 1;
    }
    debug_assert!(rest.is_zero());
    out
}

/// Macaulay pseudo-power `a^⟨i⟩ = Σ C(a_k + 1, k + 1)` over the binomial
/// `i`-expansion of `a`; `0^⟨i⟩ = 0`.
pub fn pseudo_power(a: &BigInt, i: u32) -> BigInt {
    binomial_expansion(a, i)
        .into_iter()
        .map(|(ak, k)| binomial(ak as i64 + 1, k as i64 + 1))
        .sum()
}

/// True iff `k_0 = 1`, all entries are nonnegative and
/// `k_{i+1} ≤ k_i^⟨i⟩` for every `i ≥ 1`.
pub fn is_m_vector(k: &[BigInt]) -> bool {
    if k.is_empty() {
        return true;
    }
    if !k[0].is_one() || k.iter().any(|x| x.is_negative()) {
        return false;
    }
    (1..k.len().saturating_sub(1)).all(|i| k[i + 1] <= pseudo_power(&k[i], i as u32))
}

/// The three conditions of the g-theorem, evaluated independently. They are
/// necessary for polytopality; passing them certifies nothing more.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GTheoremVerdict {
    pub ds_holds: bool,
    pub g_nonnegative: bool,
    pub g_is_m_vector: bool,
}

impl GTheoremVerdict {
    pub fn passes(&self) -> bool {
        self.ds_holds && self.g_nonnegative && self.g_is_m_vector
    }
}

pub fn g_theorem_check(f: &[BigInt], n: usize) -> Result<GTheoremVerdict> {
    let h = h_from_f(f, n)?;
    let g = g_vector(&h);
    Ok(GTheoremVerdict {
        ds_holds: is_palindromic(&h),
        g_nonnegative: g.iter().skip(1).all(|x| !x.is_negative()),
        g_is_m_vector: is_m_vector(&g),
    })
}

pub fn is_palindromic(h: &[BigInt]) -> bool {
    h.iter().eq(h.iter().rev())
}

/// `f_{k−1} = Σ_{j=k}^{n} (−1)^{n−j} C(j, k) f_{j−1}` for `k = 0, …, n`.
pub fn ds_f_form_check(f: &[BigInt], n: usize) -> Result<bool> {
    if f.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            actual: f.len(),
        });
    }
    let fk = |k: usize| {
        if k == 0 {
            BigInt::one()
        } else {
            f[k - 1].clone()
        }
    };
    let n = n as i64;
    Ok((0..=n).all(|k| {
        let rhs: BigInt = (k..=n)
            .map(|j| sign(n - j) * binomial(j, k) * fk(j as usize))
            .sum();
        rhs == fk(k as usize)
    }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub holds: bool,
    /// Bound minus value (upper bound) or value minus bound (lower bound),
    /// one entry per checked index.
    pub slack: Vec<BigInt>,
}

impl BoundReport {
    pub fn equality(&self) -> bool {
        self.slack.iter().all(Zero::is_zero)
    }
}

/// Upper bound `h_i ≤ C(m − n + i − 1, i)` for `0 ≤ i ≤ ⌊n/2⌋`.
pub fn ubt_check(f: &[BigInt], n: usize, m: usize) -> Result<BoundReport> {
    if f.first() != Some(&BigInt::from(m)) {
        return Err(Error::InvalidArgument(format!(
            "upper bound check needs f_0 = m = {m}"
        )));
    }
    let h = h_from_f(f, n)?;
    let slack: Vec<BigInt> = (0..=n / 2)
        .map(|i| binomial(m as i64 - n as i64 + i as i64 - 1, i as i64) - &h[i])
        .collect();
    Ok(BoundReport {
        holds: slack.iter().all(|s| !s.is_negative()),
        slack,
    })
}

/// Lower bounds `f_i ≥ C(n, i) f_0 − C(n+1, i+1) i` for `1 ≤ i ≤ n − 2`
/// and `f_{n−1} ≥ (n − 1) f_0 − (n + 1)(n − 2)`; needs `n ≥ 3`.
pub fn lbt_check(f: &[BigInt], n: usize) -> Result<BoundReport> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "lower bound check needs n ≥ 3, got {n}"
        )));
    }
    if f.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            actual: f.len(),
        });
    }
    let (n, f0) = (n as i64, &f[0]);
    let mut slack: Vec<BigInt> = (1..=n - 2)
        .map(|i| &f[i as usize] - (binomial(n, i) * f0 - binomial(n + 1, i + 1) * BigInt::from(i)))
        .collect();
    slack.push(&f[n as usize - 1] - (BigInt::from(n - 1) * f0 - BigInt::from((n + 1) * (n - 2))));
    Ok(BoundReport {
        holds: slack.iter().all(|s| !s.is_negative()),
        slack,
    })
}

/// f-vector of the cyclic polytope `C^n(m)`: `f_i = C(m, i+1)` for
/// `i < ⌊n/2⌋`, the rest solved exactly from the f-form Dehn–Sommerville
/// system.
pub fn cyclic_f_vector(n: usize, m: usize) -> Result<Vec<BigInt>> {
    if n == 0 || m <= n {
        return Err(Error::InvalidArgument(format!(
            "C^{n}({m}) needs m > n ≥ 1"
        )));
    }
    let known = n / 2;
    let unknowns = n - known;
    let q = Coefficients::Rationals;
    let (ni, mi) = (n as i64, m as i64);
    // f_{j−1} for j = 0..=n, either a known value or the unknown x_{j−1−known}
    let known_f = |j: i64| -> Option<BigInt> {
        if j == 0 {
            Some(BigInt::one())
        } else if (j - 1) < known as i64 {
            Some(binomial(mi, j))
        } else {
            None
        }
    };
    let mut columns: Vec<Vec<FieldScalar>> = vec![Vec::new(); unknowns];
    let mut rhs: Vec<FieldScalar> = Vec::new();
    for k in 0..=ni {
        // f_{k−1} − Σ_{j≥k} (−1)^{n−j} C(j,k) f_{j−1} = 0
        let mut coeff = vec![BigInt::zero(); unknowns];
        let mut constant = BigInt::zero();
        let mut add = |j: i64, c: BigInt| match known_f(j) {
            Some(v) => constant -= c * v,
            None => coeff[(j - 1) as usize - known] += c,
        };
        add(k, BigInt::one());
        for j in k..=ni {
            add(j, -(sign(ni - j) * binomial(j, k)));
        }
        for (col, c) in columns.iter_mut().zip(&coeff) {
            col.push(q.from_bigint(c));
        }
        rhs.push(q.from_bigint(&constant));
    }
    let rank = linalg::rank_field(&transpose(&columns));
    if rank != unknowns {
        return Err(Error::CrossCheck(format!(
            "Dehn–Sommerville system for C^{n}({m}) is underdetermined"
        )));
    }
    let sol = linalg::solve_in_span(&columns, &rhs, q).ok_or_else(|| {
        Error::CrossCheck(format!(
            "Dehn–Sommerville system for C^{n}({m}) is inconsistent"
        ))
    })?;
    let mut f: Vec<BigInt> = (0..known).map(|i| binomial(mi, i as i64 + 1)).collect();
    for x in sol {
        let FieldScalar::Rational(r) = x else {
            unreachable!()
        };
        if !r.is_integer() {
            return Err(Error::CrossCheck(format!(
                "non-integral face count {r} for C^{n}({m})"
            )));
        }
        f.push(r.to_integer());
    }
    Ok(f)
}

fn transpose(cols: &[Vec<FieldScalar>]) -> Vec<Vec<FieldScalar>> {
    if cols.is_empty() {
        return Vec::new();
    }
    (0..cols[0].len())
        .map(|r| cols.iter().map(|c| c[r].clone()).collect())
        .collect()
}

/// Euler characteristic of `S^{n−1}`: `1 + (−1)^{n−1}`.
pub fn sphere_euler_characteristic(n: usize) -> i64 {
    1 + sign(n as i64 - 1)
}

/// `h_{n−i} − h_i = (−1)^i (χ − χ(S^{n−1})) C(n, i)` for `i = 0, …, n`.
pub fn generalized_ds_check(f: &[BigInt], n: usize, chi: i64) -> Result<bool> {
    let h = h_from_f(f, n)?;
    let defect = BigInt::from(chi - sphere_euler_characteristic(n));
    let ni = n as i64;
    Ok((0..=ni)
        .all(|i| &h[(ni - i) as usize] - &h[i as usize] == sign(i) * &defect * binomial(ni, i)))
}

/// Renders `(a,b,c)`.
pub fn format_vector(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}
