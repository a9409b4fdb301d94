//! The Koszul dga `Λ[u_1, …, u_m] ⊗ k[K]` with `du_i = v_i`, and its
//! cohomology `Tor_{k[v]}(k[K], k)` as an algebra.
//!
//! The differential preserves the multidegree `α ∈ ℕ^m` of a monomial
//! `v^a u_τ` (namely `α = a + 1_τ`), so the complex splits into finite
//! blocks. Each block is handled with exact linear algebra. Only blocks with
//! `|α| ≤ m` carry the Betti table; products landing above that are checked
//! to be coboundaries rather than assumed so.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::face_ring::betti::BigradedBettiTable;
use crate::field::{Coefficients, FieldScalar};
use crate::linalg::{kernel_of_images, rank_integer, solve_in_span};

/// `v^a u_τ`, with `a` stored as an exponent vector of length `m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KoszulMonomial {
    pub v: Vec<u32>,
    pub u: Face,
}

impl KoszulMonomial {
    pub fn v_support(&self) -> Face {
        self.v
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(Face::EMPTY, |acc, (k, _)| acc.with(k + 1))
    }

    /// `(i, j)` for bidegree `(−i, 2j)`.
    pub fn bidegree(&self) -> (usize, usize) {
        let i = self.u.len();
        (i, i + self.v.iter().map(|&e| e as usize).sum::<usize>())
    }

    pub fn multidegree(&self) -> Vec<u32> {
        let mut a = self.v.clone();
        for l in self.u.vertices() {
            a[l - 1] += 1;
        }
        a
    }
}

impl fmt::Display for KoszulMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for (k, &e) in self.v.iter().enumerate() {
            match e {
                0 => {}
                1 => write!(f, "v{}", k + 1)?,
                _ => write!(f, "v{}^{}", k + 1, e)?,
            }
            any |= e > 0;
        }
        for l in self.u.vertices() {
            write!(f, "u{l}")?;
            any = true;
        }
        if !any {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// A finite linear combination of Koszul monomials. Terms whose
/// `v`-support is not a face of `K` are dropped by [`KoszulElement::reduce`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulElement {
    m: usize,
    coeffs: Coefficients,
    terms: BTreeMap<KoszulMonomial, FieldScalar>,
}

impl KoszulElement {
    pub fn zero(m: usize, coeffs: Coefficients) -> Self {
        KoszulElement {
            m,
            coeffs,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(m: usize, coeffs: Coefficients) -> Self {
        Self::monomial(m, coeffs, &[], &[], 1)
    }

    /// `c · Π v_l · Π u_t`; repeated entries in `v` raise powers, the `u`
    /// factors are multiplied in the given order.
    pub fn monomial(m: usize, coeffs: Coefficients, v: &[usize], u: &[usize], c: i64) -> Self {
        let mut exps = vec![0u32; m];
        for &l in v {
            exps[l - 1] += 1;
        }
        let mut face = Face::EMPTY;
        let mut sign = 1i64;
        for &t in u {
            if face.contains(t) {
                return Self::zero(m, coeffs);
            }
            // moving u_t left past the larger u's already present
            if (face.len() - face.count_below(t)) % 2 == 1 {
                sign = -sign;
            }
            face = face.with(t);
        }
        let mut out = Self::zero(m, coeffs);
        out.add_term(
            KoszulMonomial { v: exps, u: face },
            coeffs.from_i64(sign * c),
        );
        out
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&KoszulMonomial, &FieldScalar)> {
        self.terms.iter()
    }

    /// The common bidegree `(i, j)` of all terms, if there is one.
    pub fn bidegree(&self) -> Option<(usize, usize)> {
        let mut it = self.terms.keys().map(KoszulMonomial::bidegree);
        let first = it.next()?;
        it.all(|b| b == first).then_some(first)
    }

    fn add_term(&mut self, mono: KoszulMonomial, c: FieldScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&mono) {
            Some(old) => {
                let s = &old + &c;
                if !s.is_zero() {
                    self.terms.insert(mono, s);
                }
            }
            None => {
                self.terms.insert(mono, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (mono, c) in &other.terms {
            out.add_term(mono.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &FieldScalar) -> Self {
        let mut out = Self::zero(self.m, self.coeffs);
        for (mono, x) in &self.terms {
            out.add_term(mono.clone(), x * c);
        }
        out
    }

    /// Applies the Stanley–Reisner relations of `K`.
    pub fn reduce(&self, k: &SimplicialComplex) -> Self {
        let mut out = self.clone();
        out.terms.retain(|mono, _| k.contains(mono.v_support()));
        out
    }

    /// Product in `Λ[u] ⊗ k[K]`: `v`'s are central, `u`'s anticommute.
    pub fn mul(&self, other: &Self, k: &SimplicialComplex) -> Self {
        let mut out = Self::zero(self.m, self.coeffs);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if !a.u.is_disjoint(b.u) {
                    continue;
                }
                let v: Vec<u32> = a.v.iter().zip(&b.v).map(|(p, q)| p + q).collect();
                let inversions: usize =
                    b.u.vertices().map(|t| a.u.len() - a.u.count_below(t)).sum();
                let mut c = x * y;
                if inversions % 2 == 1 {
                    c = -c;
                }
                out.add_term(
                    KoszulMonomial {
                        v,
                        u: a.u.union(b.u),
                    },
                    c,
                );
            }
        }
        out.reduce(k)
    }

    /// `d(v^a u_τ) = Σ_{l∈τ} (−1)^{#{t∈τ : t<l}} v^{a+e_l} u_{τ∖l}`, reduced modulo `I_K`.
    pub fn differential(&self, k: &SimplicialComplex) -> Self {
        let mut out = Self::zero(self.m, self.coeffs);
        for (mono, c) in &self.terms {
            for l in mono.u.vertices() {
                let mut v = mono.v.clone();
                v[l - 1] += 1;
                let s = if mono.u.count_below(l) % 2 == 0 {
                    c.clone()
                } else {
                    -c.clone()
                };
                out.add_term(
                    KoszulMonomial {
                        v,
                        u: mono.u.without(l),
                    },
                    s,
                );
            }
        }
        out.reduce(k)
    }
}

impl fmt::Display for KoszulElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let minus_one = -self.coeffs.one();
        for (idx, (mono, c)) in self.terms.iter().enumerate() {
            let (neg, abs) = match c {
                FieldScalar::Rational(r)
                    if r < &num_rational::BigRational::from_integer(0.into()) =>
                {
                    (true, FieldScalar::Rational(-r.clone()))
                }
                _ if *c == minus_one && !c.is_one() => (true, self.coeffs.one()),
                _ => (false, c.clone()),
            };
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if abs.is_one() {
                write!(f, "{mono}")?;
            } else if mono.u.is_empty() && mono.v.iter().all(|&e| e == 0) {
                write!(f, "{abs}")?;
            } else {
                write!(f, "{abs}{mono}")?;
            }
        }
        Ok(())
    }
}

/// One multidegree block: the basis `τ` of each homological degree.
struct Block {
    alpha: Vec<u32>,
    basis: Vec<Vec<Face>>,
    index: Vec<HashMap<Face, usize>>,
}

impl Block {
    fn new(k: &SimplicialComplex, alpha: &[u32]) -> Self {
        let support = alpha
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(Face::EMPTY, |acc, (l, _)| acc.with(l + 1));
        let high = alpha
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 1)
            .fold(Face::EMPTY, |acc, (l, _)| acc.with(l + 1));
        let mut basis = vec![Vec::new(); support.len() + 1];
        if k.contains(high) {
            for tau in support.subsets() {
                if k.contains(high.union(support.difference(tau))) {
                    basis[tau.len()].push(tau);
                }
            }
        }
        for b in &mut basis {
            b.sort();
        }
        let index = basis
            .iter()
            .map(|b| b.iter().enumerate().map(|(i, t)| (*t, i)).collect())
            .collect();
        Block {
            alpha: alpha.to_vec(),
            basis,
            index,
        }
    }

    fn dim(&self, i: usize) -> usize {
        self.basis.get(i).map_or(0, Vec::len)
    }

    /// Rows: images of the degree-`i` basis in degree `i − 1` coordinates.
    fn differential(&self, i: usize) -> Vec<Vec<i64>> {
        if i == 0 || self.dim(i) == 0 {
            return Vec::new();
        }
        let target = self.dim(i - 1);
        self.basis[i]
            .iter()
            .map(|tau| {
                let mut row = vec![0i64; target];
                for l in tau.vertices() {
                    if let Some(&c) = self.index[i - 1].get(&tau.without(l)) {
                        row[c] = if tau.count_below(l) % 2 == 0 { 1 } else { -1 };
                    }
                }
                row
            })
            .collect()
    }

    fn rank(&self, i: usize, coeffs: Coefficients) -> usize {
        let d = self.differential(i);
        if d.is_empty() || d[0].is_empty() {
            0
        } else {
            rank_integer(&d, coeffs)
        }
    }

    /// `dim H^{−i}` of the block for each `i`.
    fn cohomology_dims(&self, coeffs: Coefficients) -> Vec<usize> {
        let top = self.basis.len();
        let ranks: Vec<usize> = (0..=top).map(|i| self.rank(i, coeffs)).collect();
        (0..top)
            .map(|i| self.dim(i) - ranks[i] - ranks[i + 1])
            .collect()
    }

    fn field_rows(&self, i: usize, coeffs: Coefficients) -> Vec<Vec<FieldScalar>> {
        self.differential(i)
            .iter()
            .map(|r| r.iter().map(|&x| coeffs.from_i64(x)).collect())
            .collect()
    }

    /// Cocycles in degree `i` that are independent modulo coboundaries.
    fn representatives(&self, i: usize, coeffs: Coefficients) -> Vec<Vec<FieldScalar>> {
        let n = self.dim(i);
        if n == 0 {
            return Vec::new();
        }
        let cocycles = if i == 0 {
            (0..n)
                .map(|c| {
                    (0..n)
                        .map(|r| if r == c { coeffs.one() } else { coeffs.zero() })
                        .collect()
                })
                .collect()
        } else {
            kernel_of_images(&self.field_rows(i, coeffs), self.dim(i - 1), coeffs)
        };
        let mut span = self.field_rows(i + 1, coeffs);
        let mut reps = Vec::new();
        for z in cocycles {
            if span.is_empty() || solve_in_span(&span, &z, coeffs).is_none() {
                span.push(z.clone());
                reps.push(z);
            }
        }
        reps
    }

    fn element(&self, i: usize, coords: &[FieldScalar], coeffs: Coefficients) -> KoszulElement {
        let m = self.alpha.len();
        let mut out = KoszulElement::zero(m, coeffs);
        for (tau, c) in self.basis[i].iter().zip(coords) {
            let mut v = self.alpha.clone();
            for l in tau.vertices() {
                v[l - 1] -= 1;
            }
            out.add_term(KoszulMonomial { v, u: *tau }, c.clone());
        }
        out
    }
}

/// All exponent vectors in `ℕ^m` of total degree at most `m`.
fn multidegrees(m: usize) -> Vec<Vec<u32>> {
    fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos == cur.len() {
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur[pos] = e;
            rec(pos + 1, left - e, cur, out);
        }
        cur[pos] = 0;
    }
    let mut out = Vec::new();
    rec(0, m as u32, &mut vec![0; m], &mut out);
    out.sort();
    out
}

fn block_total(alpha: &[u32]) -> usize {
    alpha.iter().map(|&e| e as usize).sum()
}

/// Bigraded Betti numbers from the cohomology of the Koszul complex.
pub fn koszul_betti(k: &SimplicialComplex, coeffs: Coefficients) -> Result<BigradedBettiTable> {
    coeffs.validate()?;
    let parts: Vec<(usize, Vec<usize>)> = multidegrees(k.m())
        .par_iter()
        .map(|alpha| {
            (
                block_total(alpha),
                Block::new(k, alpha).cohomology_dims(coeffs),
            )
        })
        .collect();
    let mut table = BigradedBettiTable::new(k.m(), k.n());
    for (j, dims) in parts {
        for (i, d) in dims.into_iter().enumerate() {
            table.add(i, j, d as u64);
        }
    }
    Ok(table)
}

/// A cohomology class as coordinates in the chosen basis of `H^{−i,2j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyClass {
    pub i: usize,
    pub j: usize,
    pub coords: Vec<FieldScalar>,
}

impl CohomologyClass {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(FieldScalar::is_zero)
    }

    /// Total degree `2j − i`.
    pub fn degree(&self) -> usize {
        2 * self.j - self.i
    }
}

struct BlockReps {
    offset: usize,
    reps: Vec<Vec<FieldScalar>>,
}

/// The Tor-algebra with an explicit cocycle basis in every bidegree.
///
/// Basis classes of `H^{−i,2j}` are ordered by multidegree, then by the
/// order in which the block produced them.
pub struct KoszulCohomology {
    complex: SimplicialComplex,
    coeffs: Coefficients,
    table: BigradedBettiTable,
    basis: BTreeMap<(usize, usize), Vec<KoszulElement>>,
    reps: HashMap<(Vec<u32>, usize), BlockReps>,
}

impl KoszulCohomology {
    pub fn compute(k: &SimplicialComplex, coeffs: Coefficients) -> Result<Self> {
        coeffs.validate()?;
        type Found = (Vec<u32>, usize, Vec<Vec<FieldScalar>>, Vec<KoszulElement>);
        let found: Vec<Found> = multidegrees(k.m())
            .par_iter()
            .flat_map_iter(|alpha| {
                let block = Block::new(k, alpha);
                let dims = block.cohomology_dims(coeffs);
                let mut out = Vec::new();
                for (i, d) in dims.into_iter().enumerate() {
                    if d == 0 {
                        continue;
                    }
                    let reps = block.representatives(i, coeffs);
                    let elems = reps.iter().map(|r| block.element(i, r, coeffs)).collect();
                    out.push((alpha.clone(), i, reps, elems));
                }
                out
            })
            .collect();
        let mut table = BigradedBettiTable::new(k.m(), k.n());
        let mut basis: BTreeMap<(usize, usize), Vec<KoszulElement>> = BTreeMap::new();
        let mut reps = HashMap::new();
        for (alpha, i, r, elems) in found {
            let j = block_total(&alpha);
            table.add(i, j, r.len() as u64);
            let slot = basis.entry((i, j)).or_default();
            reps.insert(
                (alpha, i),
                BlockReps {
                    offset: slot.len(),
                    reps: r,
                },
            );
            slot.extend(elems);
        }
        Ok(KoszulCohomology {
            complex: k.clone(),
            coeffs,
            table,
            basis,
            reps,
        })
    }

    pub fn table(&self) -> &BigradedBettiTable {
        &self.table
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn coefficients(&self) -> Coefficients {
        self.coeffs
    }

    /// Representative cocycles of the basis of `H^{−i,2j}`.
    pub fn basis(&self, i: usize, j: usize) -> &[KoszulElement] {
        self.basis.get(&(i, j)).map_or(&[], Vec::as_slice)
    }

    pub fn dim(&self, i: usize, j: usize) -> usize {
        self.basis(i, j).len()
    }

    /// The `index`-th basis class of `H^{−i,2j}`.
    pub fn basis_class(&self, i: usize, j: usize, index: usize) -> CohomologyClass {
        let mut coords = vec![self.coeffs.zero(); self.dim(i, j)];
        coords[index] = self.coeffs.one();
        CohomologyClass { i, j, coords }
    }

    /// A cocycle representing the class.
    pub fn representative(&self, class: &CohomologyClass) -> KoszulElement {
        self.basis(class.i, class.j).iter().zip(&class.coords).fold(
            KoszulElement::zero(self.complex.m(), self.coeffs),
            |acc, (e, c)| acc.add(&e.scale(c)),
        )
    }

    /// Expresses a cocycle of bidegree `(−i, 2j)` in the chosen basis.
    pub fn class_of(&self, x: &KoszulElement, i: usize, j: usize) -> Result<CohomologyClass> {
        let k = &self.complex;
        let x = x.reduce(k);
        if x.terms().any(|(mono, _)| mono.bidegree() != (i, j)) {
            return Err(Error::InvalidArgument(format!(
                "element is not of bidegree (-{i},{})",
                2 * j
            )));
        }
        if !x.differential(k).is_zero() {
            return Err(Error::CrossCheck(format!("{x} is not a cocycle")));
        }
        let mut by_alpha: BTreeMap<Vec<u32>, Vec<(Face, FieldScalar)>> = BTreeMap::new();
        for (mono, c) in x.terms() {
            by_alpha
                .entry(mono.multidegree())
                .or_default()
                .push((mono.u, c.clone()));
        }
        let mut coords = vec![self.coeffs.zero(); self.dim(i, j)];
        for (alpha, comps) in by_alpha {
            let block = Block::new(k, &alpha);
            let mut target = vec![self.coeffs.zero(); block.dim(i)];
            for (tau, c) in comps {
                target[block.index[i][&tau]] = c;
            }
            let stored = self.reps.get(&(alpha.clone(), i));
            let mut gens: Vec<Vec<FieldScalar>> =
                stored.map(|s| s.reps.clone()).unwrap_or_default();
            let nreps = gens.len();
            gens.extend(block.field_rows(i + 1, self.coeffs));
            let sol = if gens.is_empty() {
                target.iter().all(FieldScalar::is_zero).then(Vec::new)
            } else {
                solve_in_span(&gens, &target, self.coeffs)
            };
            let sol = sol.ok_or_else(|| {
                Error::CrossCheck(format!(
                    "cocycle component in multidegree {alpha:?} is not in the computed span"
                ))
            })?;
            if let Some(s) = stored {
                for (r, c) in sol.into_iter().take(nreps).enumerate() {
                    coords[s.offset + r] = c;
                }
            }
        }
        Ok(CohomologyClass { i, j, coords })
    }

    /// Product of two classes via their representatives.
    pub fn product(&self, a: &CohomologyClass, b: &CohomologyClass) -> Result<CohomologyClass> {
        let x = self
            .representative(a)
            .mul(&self.representative(b), &self.complex);
        self.class_of(&x, a.i + b.i, a.j + b.j)
    }
}

/// Product of two classes of `K`'s Tor-algebra.
pub fn tor_product(
    tor: &KoszulCohomology,
    a: &CohomologyClass,
    b: &CohomologyClass,
) -> Result<CohomologyClass> {
    tor.product(a, b)
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct PoincareReport {
    pub table_symmetric: bool,
    pub top_is_one_dimensional: bool,
    pub pairing_nondegenerate: bool,
}

impl PoincareReport {
    pub fn holds(&self) -> bool {
        self.table_symmetric && self.top_is_one_dimensional && self.pairing_nondegenerate
    }
}

/// Tests whether the Tor-algebra is a Poincaré algebra: symmetric table and
/// a perfect pairing into `H^{−(m−n),2m}`.
pub fn poincare_algebra_check(
    k: &SimplicialComplex,
    coeffs: Coefficients,
) -> Result<PoincareReport> {
    let tor = KoszulCohomology::compute(k, coeffs)?;
    poincare_report(&tor)
}

pub fn poincare_report(tor: &KoszulCohomology) -> Result<PoincareReport> {
    let k = tor.complex();
    let (m, top) = (k.m(), k.m() - k.n());
    let table_symmetric = tor.table().is_symmetric();
    let top_is_one_dimensional = tor.dim(top, m) == 1;
    let mut pairing_nondegenerate = table_symmetric && top_is_one_dimensional;
    if pairing_nondegenerate {
        for ((i, j), _) in tor.table().entries() {
            let (di, dj) = (top - i, m - j);
            let n = tor.dim(i, j);
            let mut matrix = Vec::with_capacity(n);
            for a in 0..n {
                let ca = tor.basis_class(i, j, a);
                let row = (0..tor.dim(di, dj))
                    .map(|b| Ok(tor.product(&ca, &tor.basis_class(di, dj, b))?.coords[0].clone()))
                    .collect::<Result<Vec<_>>>()?;
                matrix.push(row);
            }
            if crate::linalg::rank_field(&matrix) != n {
                pairing_nondegenerate = false;
                break;
            }
        }
    }
    Ok(PoincareReport {
        table_symmetric,
        top_is_one_dimensional,
        pairing_nondegenerate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::face_ring::betti::hochster_betti;

    const Q: Coefficients = Coefficients::Rationals;
    const F2: Coefficients = Coefficients::PrimeField(2);

    fn pentagon() -> SimplicialComplex {
        SimplicialComplex::polygon(5).unwrap()
    }

    #[test]
    fn multidegree_count() {
        // C(2m, m) exponent vectors of total degree ≤ m
        assert_eq!(multidegrees(3).len(), 20);
        assert_eq!(multidegrees(5).len(), 252);
    }

    #[test]
    fn d_squared_is_zero() {
        let k = pentagon();
        let x = KoszulElement::monomial(5, Q, &[1], &[2, 3, 4], 1).add(&KoszulElement::monomial(
            5,
            Q,
            &[],
            &[1, 3, 5],
            3,
        ));
        assert!(x.differential(&k).differential(&k).is_zero());
    }

    #[test]
    fn leibniz_rule() {
        let k = SimplicialComplex::simplex(4).unwrap();
        let a = KoszulElement::monomial(4, Q, &[1], &[2], 1);
        let b = KoszulElement::monomial(4, Q, &[], &[3, 4], 1);
        let lhs = a.mul(&b, &k).differential(&k);
        let rhs = a
            .differential(&k)
            .mul(&b, &k)
            .add(&a.mul(&b.differential(&k), &k).scale(&Q.from_i64(-1)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn monomial_signs() {
        let k = SimplicialComplex::simplex(3).unwrap();
        let a = KoszulElement::monomial(3, Q, &[], &[2, 1], 1);
        assert_eq!(a, KoszulElement::monomial(3, Q, &[], &[1, 2], -1));
        let b = KoszulElement::monomial(3, Q, &[], &[2], 1)
            .mul(&KoszulElement::monomial(3, Q, &[], &[1], 1), &k);
        assert_eq!(b, a);
        assert_eq!(a.to_string(), "-u1u2");
    }

    #[test]
    fn tables_agree_with_hochster() {
        for k in [
            pentagon(),
            SimplicialComplex::figure1(),
            SimplicialComplex::points(3).unwrap(),
        ] {
            for c in [Q, F2] {
                assert_eq!(koszul_betti(&k, c).unwrap(), hochster_betti(&k, c).unwrap());
                assert_eq!(
                    KoszulCohomology::compute(&k, c).unwrap().table(),
                    &hochster_betti(&k, c).unwrap()
                );
            }
        }
    }

    #[test]
    fn simplex_boundary_generators() {
        let k = SimplicialComplex::simplex_boundary(4).unwrap();
        let tor = KoszulCohomology::compute(&k, Q).unwrap();
        let e: Vec<_> = tor.table().entries().collect();
        assert_eq!(e, vec![((0, 0), 1), ((1, 4), 1)]);
        let x = KoszulElement::monomial(4, Q, &[1, 2, 3], &[4], 1);
        let class = tor.class_of(&x, 1, 4).unwrap();
        assert!(!class.is_zero());
    }

    #[test]
    fn pentagon_products() {
        let k = pentagon();
        let tor = KoszulCohomology::compute(&k, Q).unwrap();
        let idx = |x: usize| (x - 1) % 5 + 1;
        for i in 1..=5 {
            let a = tor
                .class_of(&KoszulElement::monomial(5, Q, &[i], &[idx(i + 2)], 1), 1, 2)
                .unwrap();
            assert!(!a.is_zero());
            for j in 1..=5 {
                let x = KoszulElement::monomial(5, Q, &[j], &[idx(j + 2), idx(j + 3)], 1);
                let b = tor.class_of(&x, 2, 3).unwrap();
                assert!(!b.is_zero());
                let mut all = vec![i, idx(i + 2), j, idx(j + 2), idx(j + 3)];
                all.sort();
                all.dedup();
                assert_eq!(
                    !tor.product(&a, &b).unwrap().is_zero(),
                    all.len() == 5,
                    "{i} {j}"
                );
            }
        }
    }

    #[test]
    fn non_cocycle_is_rejected() {
        let tor = KoszulCohomology::compute(&pentagon(), Q).unwrap();
        let x = KoszulElement::monomial(5, Q, &[], &[1], 1);
        assert!(matches!(tor.class_of(&x, 1, 1), Err(Error::CrossCheck(_))));
    }

    #[test]
    fn unit_and_graded_commutativity() {
        let tor = KoszulCohomology::compute(&pentagon(), Q).unwrap();
        let one = tor.basis_class(0, 0, 0);
        let classes: Vec<CohomologyClass> = tor
            .table()
            .entries()
            .flat_map(|((i, j), d)| (0..d as usize).map(move |x| (i, j, x)))
            .map(|(i, j, x)| tor.basis_class(i, j, x))
            .collect();
        for a in &classes {
            assert_eq!(&tor.product(&one, a).unwrap(), a);
            for b in &classes {
                let ab = tor.product(a, b).unwrap();
                let ba = tor.product(b, a).unwrap();
                let sign = if (a.degree() * b.degree()) % 2 == 1 {
                    -Q.one()
                } else {
                    Q.one()
                };
                let ba: Vec<_> = ba.coords.iter().map(|c| c * &sign).collect();
                assert_eq!(ab.coords, ba);
            }
        }
    }

    #[test]
    fn poincare_examples() {
        assert!(poincare_algebra_check(&pentagon(), Q).unwrap().holds());
        assert!(
            poincare_algebra_check(&SimplicialComplex::simplex_boundary(2).unwrap(), Q)
                .unwrap()
                .holds()
        );
        assert!(poincare_algebra_check(&SimplicialComplex::square(), F2)
            .unwrap()
            .holds());
        assert!(
            !poincare_algebra_check(&SimplicialComplex::points(3).unwrap(), Q)
                .unwrap()
                .holds()
        );
        assert!(!poincare_algebra_check(&SimplicialComplex::figure1(), Q)
            .unwrap()
            .holds());
    }
}
