//! Standard example complexes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Face, SimplicialComplex};
use crate::error::{Error, Result};

impl SimplicialComplex {
    /// `∂Δ^{m−1}` on `[m]`, the boundary of the full simplex.
    pub fn simplex_boundary(m: usize) -> Result<Self> {
        let full = Self::simplex(m)?.facets()[0];
        Self::from_facets(m, full.vertices().map(|v| full.without(v)))
    }

    /// Boundary of the `m`-gon, `m ≥ 3`, with vertices in cyclic order.
    pub fn polygon(m: usize) -> Result<Self> {
        if m < 3 {
            return Err(Error::InvalidArgument(format!(
                "a polygon needs at least 3 vertices, got {m}"
            )));
        }
        Self::from_vertex_lists(m, &(1..=m).map(|i| vec![i, i % m + 1]).collect::<Vec<_>>())
    }

    /// The boundary of a square, i.e. `polygon(4)`.
    pub fn square() -> Self {
        Self::polygon(4).expect("valid")
    }

    /// `m` disjoint points.
    pub fn points(m: usize) -> Result<Self> {
        Self::from_vertex_lists(m, &(1..=m).map(|i| vec![i]).collect::<Vec<_>>())
    }

    /// The 2-dimensional complex on five vertices whose Stanley–Reisner
    /// ideal is `(v1v5, v3v4, v1v2v3, v2v4v5)`.
    pub fn figure1() -> Self {
        Self::from_vertex_lists(5, &[vec![1, 2, 4], vec![2, 3, 5], vec![1, 3], vec![4, 5]])
            .expect("valid")
    }

    /// Minimal (Möbius) 7-vertex triangulation of the torus: triangles
    /// `{i, i+1, i+3}` and `{i, i+2, i+3}` with indices mod 7.
    pub fn torus7() -> Self {
        let v = |i: usize| i % 7 + 1;
        let facets: Vec<Vec<usize>> = (0..7)
            .flat_map(|i| {
                [
                    vec![v(i), v(i + 1), v(i + 3)],
                    vec![v(i), v(i + 2), v(i + 3)],
                ]
            })
            .collect();
        Self::from_vertex_lists(7, &facets).expect("valid")
    }

    /// The 3×3 grid triangulation of the torus with 9 vertices and 18 triangles.
    pub fn torus9() -> Self {
        let v = |a: usize, b: usize| 3 * (a % 3) + (b % 3) + 1;
        let mut facets = Vec::new();
        for a in 0..3 {
            for b in 0..3 {
                facets.push(vec![v(a, b), v(a + 1, b), v(a + 1, b + 1)]);
                facets.push(vec![v(a, b), v(a, b + 1), v(a + 1, b + 1)]);
            }
        }
        Self::from_vertex_lists(9, &facets).expect("valid")
    }

    /// Boundary complex of the cyclic polytope `C^n(m)`.
    ///
    /// An `n`-subset `S ⊂ [m]` is a facet iff any two vertices outside `S`
    /// are separated by an even number of elements of `S` (Gale's evenness
    /// condition).
    pub fn cyclic_boundary(n: usize, m: usize) -> Result<Self> {
        if n == 0 || m <= n {
            return Err(Error::InvalidArgument(format!(
                "cyclic polytope C^{n}({m}) needs m > n ≥ 1"
            )));
        }
        let full = Self::simplex(m)?.facets()[0];
        let facets = full
            .subsets()
            .filter(|s| s.len() == n && gale_evenness(*s, m));
        Self::from_facets(m, facets)
    }

    /// Stacked sphere: `∂Δ^n` followed by `k` stellar subdivisions of facets
    /// chosen by a ChaCha8 generator seeded with `seed`.
    ///
    /// Subdividing facet `σ` removes it and adds `(σ ∖ {i}) ∪ {w}` for every
    /// `i ∈ σ`, where `w` is the next unused vertex.
    pub fn stacked_sphere(n: usize, k: usize, seed: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!(
                "stacked spheres need n ≥ 2, got {n}"
            )));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut facets: Vec<Face> = Self::simplex_boundary(n + 1)?.facets().to_vec();
        for step in 0..k {
            let w = n + 2 + step;
            let idx = rng.gen_range(0..facets.len());
            let sigma = facets.remove(idx);
            for i in sigma.vertices() {
                facets.push(sigma.without(i).with(w));
            }
            facets.sort();
        }
        Self::from_facets(n + 1 + k, facets)
    }
}

fn gale_evenness(s: Face, m: usize) -> bool {
    let outside: Vec<usize> = (1..=m).filter(|v| !s.contains(*v)).collect();
    outside
        .windows(2)
        .all(|w| (s.count_below(w[1]) - s.count_below(w[0])) % 2 == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_face_counts() {
        assert_eq!(
            SimplicialComplex::torus7().f_vector().unwrap(),
            vec![7, 21, 14]
        );
        assert_eq!(
            SimplicialComplex::torus9().f_vector().unwrap(),
            vec![9, 27, 18]
        );
    }

    #[test]
    fn cyclic_small_cases() {
        for n in 1..6 {
            assert_eq!(
                SimplicialComplex::cyclic_boundary(n, n + 1).unwrap(),
                SimplicialComplex::simplex_boundary(n + 1).unwrap()
            );
        }
        let c = SimplicialComplex::cyclic_boundary(4, 8).unwrap();
        assert!(c.is_pure());
        assert_eq!(c.dim(), 3);
        assert!(SimplicialComplex::cyclic_boundary(3, 3).is_err());
    }

    #[test]
    fn cyclic_is_neighbourly() {
        for n in 2..6 {
            for m in n + 1..10 {
                let c = SimplicialComplex::cyclic_boundary(n, m).unwrap();
                assert!(c.neighbourliness() >= n / 2, "C^{n}({m})");
                // pseudomanifold: every ridge lies in exactly two facets
                for ridge in c.faces_of_dim(n as isize - 2) {
                    let cofaces = c.facets().iter().filter(|f| ridge.is_subset(**f)).count();
                    assert_eq!(cofaces, 2, "C^{n}({m}) ridge {ridge}");
                }
            }
        }
    }

    #[test]
    fn stacked_spheres() {
        assert_eq!(
            SimplicialComplex::stacked_sphere(3, 0, 9).unwrap(),
            SimplicialComplex::simplex_boundary(4).unwrap()
        );
        let a = SimplicialComplex::stacked_sphere(3, 2, 1).unwrap();
        let b = SimplicialComplex::stacked_sphere(3, 2, 2).unwrap();
        assert_eq!(a.m(), 6);
        assert_eq!(a.f_vector().unwrap(), b.f_vector().unwrap());
        assert_eq!(a, SimplicialComplex::stacked_sphere(3, 2, 1).unwrap());
    }
}
