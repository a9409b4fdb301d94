//! Exact linear algebra over ℤ, ℚ and `𝔽_p`.
//!
//! Ranks over ℚ use fraction-free (Bareiss) elimination on integer
//! matrices, first in `i128` and, on overflow, again in arbitrary precision.
//! Everything that needs actual vectors (kernels, solving) works over
//! [`FieldScalar`].

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::field::{Coefficients, FieldScalar};

/// Rank of an integer matrix over the given field.
pub fn rank_integer(rows: &[Vec<i64>], coeffs: Coefficients) -> usize {
    if rows.is_empty() || rows[0].is_empty() {
        return 0;
    }
    match coeffs {
        Coefficients::Rationals => match bareiss_rank_i128(rows) {
            Some(r) => r,
            None => bareiss_rank_big(rows),
        },
        Coefficients::PrimeField(p) => rank_mod_p(rows, p),
    }
}

fn bareiss_rank_i128(rows: &[Vec<i64>]) -> Option<usize> {
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let (nrows, ncols) = (a.len(), a[0].len());
    let mut prev: i128 = 1;
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&i| a[i][col] != 0) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][col];
        for i in rank + 1..nrows {
            let factor = a[i][col];
            for j in col + 1..ncols {
                let lhs = pivot.checked_mul(a[i][j])?;
                let rhs = factor.checked_mul(a[rank][j])?;
                a[i][j] = lhs.checked_sub(rhs)? / prev;
            }
            a[i][col] = 0;
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

fn bareiss_rank_big(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    bareiss_echelon(&mut a).0
}

/// Fraction-free row echelon reduction in place. Returns the rank and the
/// last pivot, which for a square nonsingular matrix is `± det`.
fn bareiss_echelon(a: &mut [Vec<BigInt>]) -> (usize, BigInt, bool) {
    let nrows = a.len();
    let ncols = if nrows == 0 { 0 } else { a[0].len() };
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut odd_swaps = false;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        if p != rank {
            a.swap(rank, p);
            odd_swaps = !odd_swaps;
        }
        let pivot = a[rank][col].clone();
        for i in rank + 1..nrows {
            let factor = a[i][col].clone();
            for j in col + 1..ncols {
                let v = (&pivot * &a[i][j] - &factor * &a[rank][j]) / &prev;
                a[i][j] = v;
            }
            a[i][col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    (rank, prev, odd_swaps)
}

/// Exact determinant of a square integer matrix.
pub fn determinant(matrix: &[Vec<BigInt>]) -> BigInt {
    let n = matrix.len();
    if n == 0 {
        return BigInt::one();
    }
    assert!(
        matrix.iter().all(|r| r.len() == n),
        "determinant of a non-square matrix"
    );
    let mut a = matrix.to_vec();
    let (rank, last, odd) = bareiss_echelon(&mut a);
    if rank < n {
        BigInt::zero()
    } else if odd {
        -last
    } else {
        last
    }
}

fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    let pi = p as i64;
    let mut a: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(pi) as u64).collect())
        .collect();
    let (nrows, ncols) = (a.len(), a[0].len());
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(piv) = (rank..nrows).find(|&i| a[i][col] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = inv_mod(a[rank][col], p);
        for j in col..ncols {
            a[rank][j] = a[rank][j] * inv % p;
        }
        for i in rank + 1..nrows {
            let f = a[i][col];
            if f == 0 {
                continue;
            }
            for j in col..ncols {
                a[i][j] = (a[i][j] + p * p - f * a[rank][j]) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn inv_mod(x: u64, p: u64) -> u64 {
    let (mut base, mut exp, mut acc) = (x % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Converts an integer matrix into field scalars.
pub fn to_field(rows: &[Vec<i64>], coeffs: Coefficients) -> Vec<Vec<FieldScalar>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| coeffs.from_i64(x)).collect())
        .collect()
}

/// Reduced row echelon form. Returns the pivot columns.
pub fn rref(a: &mut [Vec<FieldScalar>]) -> Vec<usize> {
    let nrows = a.len();
    let ncols = if nrows == 0 { 0 } else { a[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][col].inv();
        for j in col..ncols {
            a[r][j] = &a[r][j] * &inv;
        }
        for i in 0..nrows {
            if i == r || a[i][col].is_zero() {
                continue;
            }
            let f = a[i][col].clone();
            for j in col..ncols {
                let t = &f * &a[r][j];
                a[i][j] = &a[i][j] - &t;
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

pub fn rank_field(rows: &[Vec<FieldScalar>]) -> usize {
    let mut a = rows.to_vec();
    rref(&mut a).len()
}

/// Basis of `{x : Σ_s x_s images[s] = 0}`, where each image is a vector of
/// length `target_dim`. The basis is the standard one read off the reduced
/// echelon form: one vector per free column, in increasing column order.
pub fn kernel_of_images(
    images: &[Vec<FieldScalar>],
    target_dim: usize,
    coeffs: Coefficients,
) -> Vec<Vec<FieldScalar>> {
    let src = images.len();
    if src == 0 {
        return Vec::new();
    }
    let mut m: Vec<Vec<FieldScalar>> = (0..target_dim)
        .map(|t| images.iter().map(|img| img[t].clone()).collect())
        .collect();
    let pivots = rref(&mut m);
    let mut basis = Vec::new();
    for free in (0..src).filter(|c| !pivots.contains(c)) {
        let mut v = vec![coeffs.zero(); src];
        v[free] = coeffs.one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[row][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Solves `Σ_k c_k generators[k] = target`; returns one solution (free
/// variables set to zero) or `None` when `target` is outside the span.
pub fn solve_in_span(
    generators: &[Vec<FieldScalar>],
    target: &[FieldScalar],
    coeffs: Coefficients,
) -> Option<Vec<FieldScalar>> {
    let dim = target.len();
    let g = generators.len();
    let mut m: Vec<Vec<FieldScalar>> = (0..dim)
        .map(|t| {
            let mut row: Vec<FieldScalar> = generators.iter().map(|v| v[t].clone()).collect();
            row.push(target[t].clone());
            row
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.last() == Some(&g) {
        return None;
    }
    let mut sol = vec![coeffs.zero(); g];
    for (row, &pc) in pivots.iter().enumerate() {
        sol[pc] = m[row][g].clone();
    }
    Some(sol)
}
