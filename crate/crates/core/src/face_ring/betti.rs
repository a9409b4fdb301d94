//! Bigraded Betti tables and Hochster's formula.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::field::Coefficients;
use crate::homology::reduced_cohomology;
use crate::poly::Poly;

/// `β^{−i,2j}` indexed by `(i, j)`; only nonzero entries are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigradedBettiTable {
    pub m: usize,
    pub n: usize,
    entries: BTreeMap<(usize, usize), u64>,
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    i: usize,
    j2: usize,
    beta: u64,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    m: usize,
    n: usize,
    entries: Vec<EntryJson>,
}

impl BigradedBettiTable {
    pub fn new(m: usize, n: usize) -> Self {
        BigradedBettiTable {
            m,
            n,
            entries: BTreeMap::new(),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, i: usize, j: usize, value: u64) {
        if value > 0 {
            *self.entries.entry((i, j)).or_insert(0) += value;
        }
    }

    /// Nonzero entries `((i, j), β^{−i,2j})` in increasing `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// `β^{−i} = Σ_j β^{−i,2j}`.
    pub fn row_sum(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|((a, _), _)| *a == i)
            .map(|(_, v)| v)
            .sum()
    }

    /// Largest `i` with a nonzero entry.
    pub fn max_i(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Totals `Σ_{2j−i=k} β^{−i,2j}` for `k = 0, …, 2m`.
    pub fn total_degree_vector(&self) -> Vec<u64> {
        let mut out = vec![0u64; 2 * self.m + 1];
        for (&(i, j), &b) in &self.entries {
            out[2 * j - i] += b;
        }
        out
    }

    /// `Σ (−1)^i β^{−i,2j} t^{2j}`.
    pub fn euler_polynomial(&self) -> Poly {
        let mut c = vec![0i64; self.m + 1];
        for (&(i, j), &b) in &self.entries {
            c[j] += if i % 2 == 0 { b as i64 } else { -(b as i64) };
        }
        Poly::from_i64(&c)
    }

    /// Symmetry `β^{−i,2j} = β^{−(m−n)+i, 2(m−j)}` over the whole table.
    pub fn is_symmetric(&self) -> bool {
        let top = self.m - self.n;
        self.entries
            .iter()
            .all(|(&(i, j), &b)| i <= top && j <= self.m && self.get(top - i, self.m - j) == b)
    }

    pub fn to_json(&self) -> String {
        let t = TableJson {
            m: self.m,
            n: self.n,
            entries: self
                .entries()
                .map(|((i, j), beta)| EntryJson { i, j2: 2 * j, beta })
                .collect(),
        };
        serde_json::to_string(&t).expect("table serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let t: TableJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let mut out = Self::new(t.m, t.n);
        for e in t.entries {
            if e.j2 % 2 != 0 {
                return Err(Error::Parse(format!("odd internal degree {}", e.j2)));
            }
            out.add(e.i, e.j2 / 2, e.beta);
        }
        Ok(out)
    }

    /// Grid with rows `−i` and columns `2j`; zeros print as `.`.
    pub fn to_text(&self) -> String {
        let width = self
            .entries
            .values()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1)
            .max(2 * self.m.to_string().len())
            .max(2)
            + 1;
        let mut s = format!("{:>5}", "");
        for j in 0..=self.m {
            write!(s, "{:>width$}", 2 * j).unwrap();
        }
        s.push('\n');
        for i in 0..=self.max_i() {
            write!(
                s,
                "{:>5}",
                if i == 0 {
                    "0".to_string()
                } else {
                    format!("-{i}")
                }
            )
            .unwrap();
            for j in 0..=self.m {
                match self.get(i, j) {
                    0 => write!(s, "{:>width$}", ".").unwrap(),
                    b => write!(s, "{:>width$}", b).unwrap(),
                }
            }
            s.push('\n');
        }
        s
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct HochsterOptions {
    /// Compute every `ω` even when `K_ω` is a simplex (and hence acyclic).
    pub include_faces: bool,
}

/// `β^{−i,2j} = Σ_{|ω|=j} dim H̃^{j−i−1}(K_ω)`.
pub fn hochster_betti(k: &SimplicialComplex, coeffs: Coefficients) -> Result<BigradedBettiTable> {
    hochster_betti_with(k, coeffs, HochsterOptions::default())
}

pub fn hochster_betti_with(
    k: &SimplicialComplex,
    coeffs: Coefficients,
    opts: HochsterOptions,
) -> Result<BigradedBettiTable> {
    coeffs.validate()?;
    let m = k.m();
    let omegas: Vec<Face> = Face::full(m)
        .subsets()
        .filter(|w| w.is_empty() || opts.include_faces || !k.contains(*w))
        .collect();
    let parts: Vec<Vec<(usize, usize, u64)>> = omegas
        .par_iter()
        .map(|&w| {
            let j = w.len();
            let profile = reduced_cohomology(&k.full_subcomplex(w), coeffs)?;
            Ok(profile
                .nonzero()
                .map(|(d, dim)| ((j as isize - 1 - d) as usize, j, dim as u64))
                .collect())
        })
        .collect::<Result<_>>()?;
    let mut table = BigradedBettiTable::new(m, k.n());
    for (i, j, b) in parts.into_iter().flatten() {
        table.add(i, j, b);
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Coefficients = Coefficients::Rationals;

    #[test]
    fn square_table() {
        let t = hochster_betti(&SimplicialComplex::square(), Q).unwrap();
        let e: Vec<_> = t.entries().collect();
        assert_eq!(e, vec![((0, 0), 1), ((1, 2), 2), ((2, 4), 1)]);
        assert_eq!(t.euler_polynomial(), Poly::from_i64(&[1, 0, -2, 0, 1]));
        assert!(t.is_symmetric());
        let back = BigradedBettiTable::from_json(&t.to_json()).unwrap();
        assert_eq!(back, t);
        assert!(t.to_json().contains("\"j2\":4"));
    }

    #[test]
    fn skipping_faces_changes_nothing() {
        for k in [
            SimplicialComplex::figure1(),
            SimplicialComplex::polygon(5).unwrap(),
        ] {
            let a = hochster_betti(&k, Q).unwrap();
            let b = hochster_betti_with(
                &k,
                Q,
                HochsterOptions {
                    include_faces: true,
                },
            )
            .unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn pentagon_totals() {
        let t = hochster_betti(&SimplicialComplex::polygon(5).unwrap(), Q).unwrap();
        assert_eq!(
            t.total_degree_vector(),
            vec![1, 0, 0, 5, 5, 0, 0, 1, 0, 0, 0]
        );
    }

    #[test]
    fn simplex_is_free() {
        let t = hochster_betti(&SimplicialComplex::simplex(4).unwrap(), Q).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![((0, 0), 1)]);
    }

    #[test]
    fn ghost_vertex_is_a_generator() {
        let k = SimplicialComplex::from_vertex_lists(3, &[[1, 2]]).unwrap();
        let t = hochster_betti(&k, Q).unwrap();
        assert_eq!(
            t.entries().collect::<Vec<_>>(),
            vec![((0, 0), 1), ((1, 1), 1)]
        );
    }

    #[test]
    fn text_grid() {
        let t = hochster_betti(&SimplicialComplex::square(), Q).unwrap();
        let text = t.to_text();
        assert_eq!(text.lines().count(), 4);
        assert!(text.lines().nth(2).unwrap().trim_start().starts_with("-1"));
    }
}
