//! Finite simplicial complexes on a fixed vertex set `[m]`.
//!
//! A complex is stored as its antichain of facets; every other face is
//! derived on demand. Vertices of `[m]` that lie in no facet ("ghost"
//! vertices) are legal, which keeps full subcomplexes, links and dual
//! complexes on the same ambient vertex set as the complex they came from.
//!
//! The complex `{∅}`, with no vertices at all, has dimension −1. It is what
//! an empty facet list produces and it is the full subcomplex on the empty
//! set.

mod face;
mod generators;
pub mod io;

use std::collections::{BTreeSet, HashSet};

pub use face::{Face, Subsets, Vertices, MAX_VERTICES};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SimplicialComplex {
    m: usize,
    facets: Vec<Face>,
}

impl SimplicialComplex {
    /// Canonical complex generated by `faces`: duplicates and faces contained
    /// in other faces are dropped, facets are sorted lexicographically.
    pub fn from_facets(m: usize, faces: impl IntoIterator<Item = Face>) -> Result<Self> {
        check_vertex_count(m)?;
        let full = Face::full(m);
        let mut faces: Vec<Face> = faces.into_iter().collect();
        for f in &faces {
            if !f.is_subset(full) {
                let vertex = f.difference(full).max_vertex().unwrap_or(0);
                return Err(Error::VertexOutOfRange { vertex, m });
            }
        }
        // larger faces first, so that every face is compared with all its possible cofaces
        faces.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
        faces.dedup();
        let mut facets: Vec<Face> = Vec::new();
        for f in faces {
            if !facets.iter().any(|g| f.is_subset(*g)) {
                facets.push(f);
            }
        }
        if facets.is_empty() {
            facets.push(Face::EMPTY);
        }
        facets.sort();
        Ok(SimplicialComplex { m, facets })
    }

    /// Same as [`from_facets`](Self::from_facets), from 1-based vertex lists.
    pub fn from_vertex_lists<V: AsRef<[usize]>>(m: usize, faces: &[V]) -> Result<Self> {
        check_vertex_count(m)?;
        let mut out = Vec::with_capacity(faces.len());
        for f in faces {
            for &v in f.as_ref() {
                if v == 0 || v > m {
                    return Err(Error::VertexOutOfRange { vertex: v, m });
                }
            }
            out.push(Face::new(f.as_ref())?);
        }
        Self::from_facets(m, out)
    }

    /// The complex whose faces are the subsets of `[m]` containing none of
    /// the given non-faces.
    pub fn from_missing_faces(m: usize, missing: &[Face]) -> Result<Self> {
        check_vertex_count(m)?;
        let full = Face::full(m);
        let mut faces = Vec::new();
        for s in full.subsets() {
            if missing.iter().all(|mf| !mf.is_subset(s)) {
                faces.push(s);
            }
        }
        Self::from_facets(m, faces)
    }

    /// The full simplex `Δ^{m−1}` on `[m]`.
    pub fn simplex(m: usize) -> Result<Self> {
        check_vertex_count(m)?;
        Self::from_facets(m, [Face::full(m)])
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    /// Maximal face size, i.e. `dim + 1` (the Krull dimension of the face ring).
    pub fn n(&self) -> usize {
        self.facets.iter().map(|f| f.len()).max().unwrap_or(0)
    }

    pub fn dim(&self) -> isize {
        self.n() as isize - 1
    }

    pub fn is_pure(&self) -> bool {
        let n = self.n();
        self.facets.iter().all(|f| f.len() == n)
    }

    /// True for `{∅}`.
    pub fn is_void(&self) -> bool {
        self.facets == [Face::EMPTY]
    }

    pub fn is_full_simplex(&self) -> bool {
        self.facets == [Face::full(self.m)]
    }

    /// Vertices that actually occur in some facet.
    pub fn vertex_set(&self) -> Face {
        self.facets.iter().fold(Face::EMPTY, |acc, f| acc.union(*f))
    }

    pub fn contains(&self, face: Face) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    /// All faces including `∅`, sorted by size and then lexicographically.
    pub fn faces(&self) -> Vec<Face> {
        let mut seen = HashSet::new();
        for f in &self.facets {
            seen.extend(f.subsets());
        }
        let mut faces: Vec<Face> = seen.into_iter().collect();
        faces.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        faces
    }

    /// Faces with `d + 1` vertices in lexicographic order; `d = −1` gives `[∅]`.
    pub fn faces_of_dim(&self, d: isize) -> Vec<Face> {
        if d < -1 {
            return Vec::new();
        }
        let k = (d + 1) as usize;
        self.faces().into_iter().filter(|f| f.len() == k).collect()
    }

    /// `(f_0, …, f_{n−1})`. Fails on `{∅}`.
    pub fn f_vector(&self) -> Result<Vec<u64>> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        let mut f = vec![0u64; self.n()];
        for face in self.faces() {
            if !face.is_empty() {
                f[face.len() - 1] += 1;
            }
        }
        Ok(f)
    }

    /// `f_0 − f_1 + f_2 − …` (0 for `{∅}`).
    pub fn euler_characteristic(&self) -> i64 {
        self.faces()
            .into_iter()
            .filter(|f| !f.is_empty())
            .map(|f| if f.len() % 2 == 1 { 1 } else { -1 })
            .sum()
    }

    fn require_face(&self, sigma: Face) -> Result<()> {
        if self.contains(sigma) {
            Ok(())
        } else {
            Err(Error::FaceNotInComplex(sigma.to_string()))
        }
    }

    /// `link σ = {τ : σ ∪ τ ∈ K, σ ∩ τ = ∅}` on the same vertex set.
    pub fn link(&self, sigma: Face) -> Result<Self> {
        self.require_face(sigma)?;
        let facets = self
            .facets
            .iter()
            .filter(|f| sigma.is_subset(**f))
            .map(|f| f.difference(sigma));
        Self::from_facets(self.m, facets)
    }

    /// `star σ = {τ : σ ∪ τ ∈ K}` on the same vertex set.
    pub fn star(&self, sigma: Face) -> Result<Self> {
        self.require_face(sigma)?;
        let facets = self.facets.iter().filter(|f| sigma.is_subset(**f)).copied();
        Self::from_facets(self.m, facets)
    }

    /// Minimal non-faces, in lexicographic order. These generate the
    /// Stanley–Reisner ideal.
    pub fn missing_faces(&self) -> Vec<Face> {
        let mut out = BTreeSet::new();
        for tau in self.faces() {
            for v in 1..=self.m {
                if tau.contains(v) {
                    continue;
                }
                let sigma = tau.with(v);
                if !self.contains(sigma)
                    && sigma.vertices().all(|w| self.contains(sigma.without(w)))
                {
                    out.insert(sigma);
                }
            }
        }
        out.into_iter().collect()
    }

    /// True iff every missing face has exactly two vertices.
    pub fn is_flag(&self) -> bool {
        self.missing_faces().iter().all(|f| f.len() == 2)
    }

    /// Largest `q ≤ m` such that every `q`-subset of `[m]` is a face.
    pub fn neighbourliness(&self) -> usize {
        self.missing_faces()
            .iter()
            .map(|f| f.len() - 1)
            .min()
            .unwrap_or(self.m)
    }

    /// `K̂ = {ω ⊂ [m] : [m] ∖ ω ∉ K}`, whose facets are the complements of
    /// the missing faces of `K`. Undefined for the full simplex.
    pub fn dual_complex(&self) -> Result<Self> {
        if self.is_full_simplex() {
            return Err(Error::FullSimplex(self.m));
        }
        let full = Face::full(self.m);
        let facets = self.missing_faces().into_iter().map(|f| full.difference(f));
        Self::from_facets(self.m, facets)
    }

    /// `K_ω = {σ ∈ K : σ ⊂ ω}`.
    pub fn full_subcomplex(&self, omega: Face) -> Self {
        let facets = self.facets.iter().map(|f| f.intersection(omega));
        Self::from_facets(self.m, facets).expect("restriction stays in range")
    }

    /// Cone with apex `m + 1`.
    pub fn cone(&self) -> Result<Self> {
        let m = self.m + 1;
        check_vertex_count(m)?;
        let apex = Face::singleton(m);
        Self::from_facets(m, self.facets.iter().map(|f| f.union(apex)))
    }

    /// True iff some vertex lies in every facet.
    pub fn is_cone(&self) -> bool {
        let common = self
            .facets
            .iter()
            .fold(Face::full(self.m), |acc, f| acc.intersection(*f));
        !common.is_empty()
    }

    /// Checks that `phi` (with `phi[i−1]` the image of vertex `i`, 1-based)
    /// sends every face of `self` onto a face of `target`.
    pub fn is_simplicial_map(&self, target: &SimplicialComplex, phi: &[usize]) -> Result<bool> {
        if phi.len() != self.m {
            return Err(Error::LengthMismatch {
                expected: self.m,
                actual: phi.len(),
            });
        }
        if let Some(&bad) = phi.iter().find(|&&w| w == 0 || w > target.m) {
            return Err(Error::VertexOutOfRange {
                vertex: bad,
                m: target.m,
            });
        }
        Ok(self
            .facets
            .iter()
            .all(|f| target.contains(map_face(*f, phi))))
    }

    /// The complex with vertex `i` renamed to `perm[i−1]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.m {
            return Err(Error::LengthMismatch {
                expected: self.m,
                actual: perm.len(),
            });
        }
        let image: BTreeSet<usize> = perm.iter().copied().collect();
        if image.len() != self.m || image.iter().any(|&v| v == 0 || v > self.m) {
            return Err(Error::InvalidArgument(
                "relabelling is not a permutation of [m]".into(),
            ));
        }
        Self::from_facets(self.m, self.facets.iter().map(|f| map_face(*f, perm)))
    }
}

pub(crate) fn map_face(face: Face, phi: &[usize]) -> Face {
    face.vertices()
        .fold(Face::EMPTY, |acc, v| acc.with(phi[v - 1]))
}

fn check_vertex_count(m: usize) -> Result<()> {
    if m == 0 {
        Err(Error::NoVertices)
    } else if m > MAX_VERTICES {
        Err(Error::TooManyVertices {
            m,
            max: MAX_VERTICES,
        })
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(m: usize, faces: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_vertex_lists(m, faces).unwrap()
    }

    fn faces(list: &[&[usize]]) -> Vec<Face> {
        list.iter().map(|v| Face::new(v).unwrap()).collect()
    }

    #[test]
    fn canonical_form() {
        assert_eq!(
            cx(3, &[&[1, 2], &[2, 3], &[1, 2]]).facets(),
            faces(&[&[1, 2], &[2, 3]])
        );
        assert_eq!(cx(3, &[&[1], &[1, 2]]).facets(), faces(&[&[1, 2]]));
        let void = cx(3, &[]);
        assert!(void.is_void());
        assert_eq!(void.dim(), -1);
        assert_eq!(
            SimplicialComplex::from_vertex_lists(3, &[vec![1, 4]]),
            Err(Error::VertexOutOfRange { vertex: 4, m: 3 })
        );
        assert_eq!(
            SimplicialComplex::from_vertex_lists::<Vec<usize>>(0, &[]),
            Err(Error::NoVertices)
        );
    }

    #[test]
    fn figure_one_ideal() {
        let k = SimplicialComplex::figure1();
        assert_eq!(k.dim(), 2);
        assert_eq!(
            k.missing_faces(),
            faces(&[&[1, 2, 3], &[1, 5], &[2, 4, 5], &[3, 4]])
        );
        assert!(!k.is_flag());
        assert_eq!(k.faces_of_dim(2).len() as u64, k.f_vector().unwrap()[2]);
    }

    #[test]
    fn faces_of_triangle_boundary() {
        let k = SimplicialComplex::simplex_boundary(3).unwrap();
        assert_eq!(k.faces_of_dim(1), faces(&[&[1, 2], &[1, 3], &[2, 3]]));
        assert!(k.faces_of_dim(2).is_empty());
        assert_eq!(k.faces_of_dim(-1), vec![Face::EMPTY]);
    }

    #[test]
    fn missing_faces_of_standard_families() {
        let b = SimplicialComplex::simplex_boundary(5).unwrap();
        assert_eq!(b.missing_faces(), vec![Face::full(5)]);
        let p = SimplicialComplex::points(4).unwrap();
        assert_eq!(p.missing_faces().len(), 6);
        assert!(p.missing_faces().iter().all(|f| f.len() == 2));
        assert!(SimplicialComplex::polygon(4).unwrap().is_flag());
        // a ghost vertex is a missing face of size one
        let g = cx(3, &[&[1, 2]]);
        assert_eq!(g.missing_faces(), faces(&[&[3]]));
        assert_eq!(g.neighbourliness(), 0);
    }

    #[test]
    fn link_and_star() {
        let k = SimplicialComplex::simplex_boundary(3).unwrap();
        let v1 = Face::singleton(1);
        assert_eq!(k.link(v1).unwrap().facets(), faces(&[&[2], &[3]]));
        assert_eq!(k.link(Face::EMPTY).unwrap(), k);
        assert!(k.star(v1).unwrap().is_cone());
        assert!(k.link(Face::full(3)).is_err());
    }

    #[test]
    fn neighbourliness_values() {
        assert_eq!(SimplicialComplex::polygon(4).unwrap().neighbourliness(), 1);
        assert_eq!(
            SimplicialComplex::simplex_boundary(6)
                .unwrap()
                .neighbourliness(),
            5
        );
        assert_eq!(SimplicialComplex::torus7().neighbourliness(), 2);
        assert!(
            SimplicialComplex::cyclic_boundary(4, 8)
                .unwrap()
                .neighbourliness()
                >= 2
        );
    }

    #[test]
    fn dual_complex_cases() {
        let b = SimplicialComplex::simplex_boundary(4).unwrap();
        assert!(b.dual_complex().unwrap().is_void());
        assert_eq!(
            SimplicialComplex::simplex(3).unwrap().dual_complex(),
            Err(Error::FullSimplex(3))
        );
        // m points: the dual consists of all (m−2)-subsets, checked by brute force
        let m = 5;
        let p = SimplicialComplex::points(m).unwrap();
        let d = p.dual_complex().unwrap();
        for s in Face::full(m).subsets() {
            let expected = !p.contains(Face::full(m).difference(s));
            assert_eq!(d.contains(s), expected, "{s}");
        }
        assert!(d.facets().iter().all(|f| f.len() == m - 2));
    }

    #[test]
    fn full_subcomplexes() {
        let pent = SimplicialComplex::polygon(5).unwrap();
        let path = pent.full_subcomplex(Face::new(&[1, 2, 3]).unwrap());
        assert_eq!(path.facets(), faces(&[&[1, 2], &[2, 3]]));
        assert!(pent.full_subcomplex(Face::EMPTY).is_void());
        let sigma = Face::new(&[1, 2]).unwrap();
        assert_eq!(pent.full_subcomplex(sigma).facets(), vec![sigma]);
    }

    #[test]
    fn cones() {
        let b = SimplicialComplex::simplex_boundary(3).unwrap();
        assert!(!b.is_cone());
        let c = b.cone().unwrap();
        assert!(c.is_cone());
        assert_eq!(c.m(), 4);
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(
            SimplicialComplex::simplex_boundary(3)
                .unwrap()
                .euler_characteristic(),
            0
        );
        assert_eq!(SimplicialComplex::torus7().euler_characteristic(), 0);
        assert_eq!(
            SimplicialComplex::simplex(5)
                .unwrap()
                .euler_characteristic(),
            1
        );
    }

    #[test]
    fn simplicial_maps() {
        let pent = SimplicialComplex::polygon(5).unwrap();
        let sq = SimplicialComplex::polygon(4).unwrap();
        assert!(pent.is_simplicial_map(&pent, &[1, 2, 3, 4, 5]).unwrap());
        assert!(pent.is_simplicial_map(&sq, &[2, 2, 2, 2, 2]).unwrap());
        // collapse vertices 4 and 5 onto 4: edges 34, 44, 41 all land on faces
        let phi = [1, 2, 3, 4, 4];
        let brute = pent.faces().iter().all(|f| sq.contains(map_face(*f, &phi)));
        assert_eq!(pent.is_simplicial_map(&sq, &phi).unwrap(), brute);
        assert!(brute);
        assert!(!pent.is_simplicial_map(&sq, &[1, 3, 2, 4, 4]).unwrap());
    }

    #[test]
    fn rebuild_from_missing_faces() {
        for k in [
            SimplicialComplex::figure1(),
            SimplicialComplex::torus7(),
            SimplicialComplex::points(4).unwrap(),
        ] {
            let again = SimplicialComplex::from_missing_faces(k.m(), &k.missing_faces()).unwrap();
            assert_eq!(again, k);
        }
    }
}
