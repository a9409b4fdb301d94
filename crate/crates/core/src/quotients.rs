//! Characteristic matrices and the quotient rings `k[K]/(θ_1, …, θ_n)`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::face_ring::lsop_check_field;
use crate::field::Coefficients;
use crate::linalg::{determinant, rank_field, rank_integer};

/// An `n × m` integer matrix; row `i` is `θ_i = Σ_j λ_{ij} v_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharMatrix {
    pub rows: Vec<Vec<BigInt>>,
}

impl CharMatrix {
    pub fn new(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        if let Some(first) = rows.first() {
            if let Some(bad) = rows.iter().find(|r| r.len() != first.len()) {
                return Err(Error::LengthMismatch {
                    expected: first.len(),
                    actual: bad.len(),
                });
            }
        }
        Ok(CharMatrix { rows })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn m(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    /// Parses `{"rows": [[…], …]}` or the inline form `1,0,-1;0,1,-1`.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.starts_with('{') {
            let raw: RowsJson = serde_json::from_str(t).map_err(|e| Error::Parse(e.to_string()))?;
            let rows = raw
                .rows
                .iter()
                .map(|r| r.iter().map(entry_from_json).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            return Self::new(rows);
        }
        let rows = t
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|x| {
                        x.trim()
                            .parse::<BigInt>()
                            .map_err(|_| Error::Parse(format!("bad matrix entry `{}`", x.trim())))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows)
    }

    /// `{"rows": …}` with entries as JSON integers, or decimal strings
    /// beyond the `i64` range.
    pub fn to_json(&self) -> String {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| {
                        x.to_i64()
                            .map_or_else(|| Value::String(x.to_string()), Value::from)
                    })
                    .collect()
            })
            .collect();
        serde_json::to_string(&RowsJson { rows }).expect("matrix serializes")
    }

    fn minor(&self, sigma: Face) -> Vec<Vec<BigInt>> {
        self.rows
            .iter()
            .map(|r| sigma.vertices().map(|v| r[v - 1].clone()).collect())
            .collect()
    }
}

#[derive(Serialize, Deserialize)]
struct RowsJson {
    rows: Vec<Vec<Value>>,
}

fn entry_from_json(v: &Value) -> Result<BigInt> {
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        other => return Err(Error::Parse(format!("bad matrix entry `{other}`"))),
    };
    text.parse()
        .map_err(|_| Error::Parse(format!("bad matrix entry `{text}`")))
}

impl FromStr for CharMatrix {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for CharMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "{}", rows.join(";"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharMatrixReport {
    /// Every facet minor is `±1`. Equivalently `Θ` is an lsop over `ℤ`
    /// and the subtorus `T_Λ` acts freely on `Z_K`.
    pub unimodular: bool,
    /// Facets whose minor is not `±1`, with the determinant.
    pub failing_facets: Vec<(Face, BigInt)>,
}

fn check_shape(k: &SimplicialComplex, lambda: &CharMatrix) -> Result<()> {
    if lambda.n() != k.n() {
        return Err(Error::LengthMismatch {
            expected: k.n(),
            actual: lambda.n(),
        });
    }
    if lambda.m() != k.m() {
        return Err(Error::LengthMismatch {
            expected: k.m(),
            actual: lambda.m(),
        });
    }
    Ok(())
}

pub fn char_matrix_check(k: &SimplicialComplex, lambda: &CharMatrix) -> Result<CharMatrixReport> {
    if !k.is_pure() {
        return Err(Error::NotPure);
    }
    check_shape(k, lambda)?;
    let failing_facets: Vec<(Face, BigInt)> = k
        .facets()
        .iter()
        .map(|&sigma| (sigma, determinant(&lambda.minor(sigma))))
        .filter(|(_, d)| !d.abs().is_one())
        .collect();
    Ok(CharMatrixReport {
        unimodular: failing_facets.is_empty(),
        failing_facets,
    })
}

/// Exponent vectors of degree `d` whose support is a face, in sorted order.
fn face_monomials(k: &SimplicialComplex, d: usize) -> Vec<Vec<u32>> {
    fn rec(
        k: &SimplicialComplex,
        pos: usize,
        left: u32,
        supp: Face,
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if !k.contains(supp) {
            return;
        }
        if pos == cur.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for e in 0..=left {
            cur[pos] = e;
            let s = if e > 0 { supp.with(pos + 1) } else { supp };
            rec(k, pos + 1, left - e, s, cur, out);
        }
        cur[pos] = 0;
    }
    let mut out = Vec::new();
    rec(k, 0, d as u32, Face::EMPTY, &mut vec![0; k.m()], &mut out);
    out
}

/// `dim (k[K]/(Θ))_{2i}` for `i = 0, …, n`.
pub fn quotient_graded_dims(
    k: &SimplicialComplex,
    lambda: &CharMatrix,
    coeffs: Coefficients,
) -> Result<Vec<usize>> {
    check_shape(k, lambda)?;
    if !lsop_check_field(k, &lambda.rows, coeffs)? {
        return Err(Error::Precondition(format!(
            "the rows of the matrix are not an lsop over {coeffs}"
        )));
    }
    let small: Option<Vec<Vec<i64>>> = lambda
        .rows
        .iter()
        .map(|r| r.iter().map(ToPrimitive::to_i64).collect())
        .collect();
    let mut prev = face_monomials(k, 0);
    let mut dims = vec![1];
    for i in 1..=k.n() {
        let cur = face_monomials(k, i);
        let index: HashMap<&Vec<u32>, usize> =
            cur.iter().enumerate().map(|(c, a)| (a, c)).collect();
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        for mono in &prev {
            for theta in &lambda.rows {
                let mut row = vec![BigInt::from(0); cur.len()];
                for (j, lam) in theta.iter().enumerate() {
                    let mut a = mono.clone();
                    a[j] += 1;
                    if let Some(&c) = index.get(&a) {
                        row[c] += lam;
                    }
                }
                rows.push(row);
            }
        }
        let rank = if rows.is_empty() || cur.is_empty() {
            0
        } else if small.is_some() {
            let ints: Vec<Vec<i64>> = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|x| x.to_i64().expect("sums of small entries fit"))
                        .collect()
                })
                .collect();
            rank_integer(&ints, coeffs)
        } else {
            let field: Vec<Vec<_>> = rows
                .iter()
                .map(|r| r.iter().map(|x| coeffs.from_bigint(x)).collect())
                .collect();
            rank_field(&field)
        };
        dims.push(cur.len() - rank);
        prev = cur;
    }
    Ok(dims)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OddVanishing {
    /// `dim (k[K]/(Θ))_{2i}`.
    pub even_dims: Vec<usize>,
    /// All generators have degree 2, so odd degrees are zero.
    pub odd_dims_vanish: bool,
}

pub fn odd_vanishing_report(
    k: &SimplicialComplex,
    lambda: &CharMatrix,
    coeffs: Coefficients,
) -> Result<OddVanishing> {
    Ok(OddVanishing {
        even_dims: quotient_graded_dims(k, lambda, coeffs)?,
        odd_dims_vanish: true,
    })
}
