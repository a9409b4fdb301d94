//! End-to-end acceptance criteria over the example corpus, over ℚ and 𝔽₂.
//! Prints one PASS/FAIL line per criterion and fails if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use facering::arrangements::{complement_cohomology, goresky_macpherson};
use facering::face_ring::{
    euler_resolution_identity, hochster_betti, poincare_algebra_check, CohomologyClass,
    KoszulCohomology, KoszulElement,
};
use facering::fvectors::{
    cyclic_f_vector, generalized_ds_check, is_m_vector, is_palindromic, lbt_check, pseudo_power,
    to_big, ubt_check, FHVectors,
};
use facering::homology::{is_cohen_macaulay, is_gorenstein_star};
use facering::moment_angle::{
    cell_count, cells, chi_polynomial, zk_betti_numbers, zk_bigraded_betti,
};
use facering::poly::Poly;
use facering::quotients::{char_matrix_check, quotient_graded_dims, CharMatrix};
use facering::{Coefficients, SimplicialComplex};
use num_bigint::BigInt;

const Q: Coefficients = Coefficients::Rationals;
const F2: Coefficients = Coefficients::PrimeField(2);
const FIELDS: [Coefficients; 2] = [Q, F2];

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn corpus() -> Vec<(String, SimplicialComplex)> {
    let mut out = vec![
        ("square".to_string(), SimplicialComplex::square()),
        ("pentagon".into(), SimplicialComplex::polygon(5).unwrap()),
        ("hexagon".into(), SimplicialComplex::polygon(6).unwrap()),
        ("figure1".into(), SimplicialComplex::figure1()),
        ("torus7".into(), SimplicialComplex::torus7()),
    ];
    for n in 1..=5 {
        out.push((
            format!("boundary of simplex {n}"),
            SimplicialComplex::simplex_boundary(n + 1).unwrap(),
        ));
    }
    for n in 3..=4 {
        for m in n + 2..=8 {
            out.push((
                format!("cyclic({n},{m})"),
                SimplicialComplex::cyclic_boundary(n, m).unwrap(),
            ));
        }
    }
    for k in 1..=4 {
        out.push((
            format!("stacked(3,{k})"),
            SimplicialComplex::stacked_sphere(3, k, 2024 + k as u64).unwrap(),
        ));
    }
    for m in 2..=5 {
        out.push((
            format!("points({m})"),
            SimplicialComplex::points(m).unwrap(),
        ));
    }
    out
}

fn is_sphere(name: &str) -> bool {
    !(name.starts_with("figure1")
        || name.starts_with("torus")
        || name.starts_with("points(") && name != "points(2)")
}

fn criterion_1(corpus: &[(String, SimplicialComplex)]) -> Check {
    for (name, k) in corpus {
        for c in FIELDS {
            let h = hochster_betti(k, c).map_err(|e| e.to_string())?;
            let kz = KoszulCohomology::compute(k, c).map_err(|e| e.to_string())?;
            let z = zk_bigraded_betti(k, c).map_err(|e| e.to_string())?;
            ensure(&h == kz.table(), || {
                format!("{name} over {c}: hochster != koszul")
            })?;
            ensure(h == z, || format!("{name} over {c}: hochster != cells"))?;
        }
    }
    Ok(())
}

fn criterion_2() -> Check {
    for c in FIELDS {
        let t = hochster_betti(&SimplicialComplex::square(), c).map_err(|e| e.to_string())?;
        let entries: Vec<_> = t.entries().collect();
        ensure(
            entries == vec![((0, 0), 1), ((1, 2), 2), ((2, 4), 1)],
            || format!("square table {entries:?}"),
        )?;
    }
    Ok(())
}

fn criterion_3() -> Check {
    let k = SimplicialComplex::polygon(5).unwrap();
    for c in FIELDS {
        let v = zk_betti_numbers(&k, c).map_err(|e| e.to_string())?;
        ensure(
            v[..8] == [1, 0, 0, 5, 5, 0, 0, 1] && v[8..].iter().all(|&x| x == 0),
            || format!("betti {v:?}"),
        )?;
        let tor = KoszulCohomology::compute(&k, c).map_err(|e| e.to_string())?;
        let idx = |x: usize| (x - 1) % 5 + 1;
        let class = |x: KoszulElement, i, j| -> Result<CohomologyClass, String> {
            tor.class_of(&x, i, j).map_err(|e| e.to_string())
        };
        for i in 1..=5 {
            let a = class(KoszulElement::monomial(5, c, &[i], &[idx(i + 2)], 1), 1, 2)?;
            for j in 1..=5 {
                let b = class(
                    KoszulElement::monomial(5, c, &[j], &[idx(j + 2), idx(j + 3)], 1),
                    2,
                    3,
                )?;
                let p = tor.product(&a, &b).map_err(|e| e.to_string())?;
                let mut all = vec![i, idx(i + 2), j, idx(j + 2), idx(j + 3)];
                all.sort();
                all.dedup();
                ensure(!p.is_zero() == (all.len() == 5), || {
                    format!("product i={i} j={j} over {c}")
                })?;
            }
        }
        ensure(
            poincare_algebra_check(&k, c)
                .map_err(|e| e.to_string())?
                .holds(),
            || "poincare".into(),
        )?;
    }
    Ok(())
}

fn criterion_4() -> Check {
    for c in FIELDS {
        let v = zk_betti_numbers(&SimplicialComplex::square(), c).map_err(|e| e.to_string())?;
        ensure(v == [1, 0, 0, 2, 0, 0, 1, 0, 0], || format!("square {v:?}"))?;
        for m in 2..=5 {
            let v = zk_betti_numbers(&SimplicialComplex::simplex_boundary(m).unwrap(), c)
                .map_err(|e| e.to_string())?;
            let expected: Vec<u64> = (0..=2 * m)
                .map(|d| (d == 0 || d == 2 * m - 1) as u64)
                .collect();
            ensure(v == expected, || format!("boundary m={m}: {v:?}"))?;
        }
    }
    Ok(())
}

fn criterion_5(corpus: &[(String, SimplicialComplex)]) -> Check {
    for (name, k) in corpus {
        let chi = chi_polynomial(k).map_err(|e| format!("{name}: {e}"))?;
        let mut counted = vec![0i64; k.m() + 1];
        for cell in cells(k) {
            let (q, p) = cell.bidegree();
            counted[p] += if q % 2 == 0 { 1 } else { -1 };
        }
        ensure(Poly::from_i64(&counted) == chi, || {
            format!("{name}: enumerated cells disagree")
        })?;
        for p in 0..=k.m() {
            for q in 0..=p {
                let n = cells(k).iter().filter(|c| c.bidegree() == (q, p)).count();
                ensure(cell_count(k, q, p) == BigInt::from(n), || {
                    format!("{name}: cell count ({q},{p})")
                })?;
            }
        }
    }
    Ok(())
}

fn criterion_6(corpus: &[(String, SimplicialComplex)]) -> Check {
    for (k, expected) in [
        (SimplicialComplex::torus7(), [1, 4, 10, -1]),
        (SimplicialComplex::torus9(), [1, 6, 12, -1]),
    ] {
        let fh = FHVectors::of(&k);
        ensure(
            fh.h == expected
                .iter()
                .map(|&x| BigInt::from(x))
                .collect::<Vec<_>>(),
            || format!("h = {:?}", fh.h),
        )?;
        ensure(&fh.h[3] - &fh.h[0] == BigInt::from(-2), || "h3 - h0".into())?;
        ensure(&fh.h[2] - &fh.h[1] == BigInt::from(6), || "h2 - h1".into())?;
        ensure(
            generalized_ds_check(&fh.f, 3, k.euler_characteristic()).unwrap(),
            || "generalized DS".into(),
        )?;
    }
    for (name, k) in corpus.iter().filter(|(n, _)| is_sphere(n)) {
        ensure(is_palindromic(&FHVectors::of(k).h), || {
            format!("{name}: h not palindromic")
        })?;
    }
    Ok(())
}

fn criterion_7(corpus: &[(String, SimplicialComplex)]) -> Check {
    for m in 3..=5usize {
        let dims = complement_cohomology(&SimplicialComplex::points(m).unwrap(), Q)
            .map_err(|e| e.to_string())?;
        ensure(dims[1] == 0 && dims[2] == 0, || {
            format!("points({m}): H1/H2 nonzero")
        })?;
        for k in 2..=m {
            let expected = facering::field::binomial(m as i64, k as i64) * (k as i64 - 1);
            ensure(BigInt::from(dims[k + 1]) == expected, || {
                format!("points({m}) H^{}", k + 1)
            })?;
        }
    }
    let p3 = complement_cohomology(&SimplicialComplex::points(3).unwrap(), Q)
        .map_err(|e| e.to_string())?;
    ensure(p3[3] == 3 && p3[4] == 2, || format!("points(3) {p3:?}"))?;
    for (name, k) in corpus {
        for c in FIELDS {
            let a = complement_cohomology(k, c).map_err(|e| e.to_string())?;
            let b = goresky_macpherson(k, c).map_err(|e| e.to_string())?;
            ensure(a == b, || format!("{name} over {c}: {a:?} vs {b:?}"))?;
        }
    }
    Ok(())
}

fn criterion_8(corpus: &[(String, SimplicialComplex)]) -> Check {
    ensure(
        pseudo_power(&BigInt::from(28), 4) == BigInt::from(40),
        || "28^<4>".into(),
    )?;
    for a in 0..=50i64 {
        ensure(
            pseudo_power(&BigInt::from(a), 1) == facering::field::binomial(a + 1, 2),
            || format!("{a}^<1>"),
        )?;
    }
    for (name, k) in corpus {
        for c in FIELDS {
            if is_cohen_macaulay(k, c).map_err(|e| e.to_string())? {
                ensure(is_m_vector(&FHVectors::of(k).h), || {
                    format!("{name}: h not an M-vector")
                })?;
            }
        }
    }
    Ok(())
}

fn criterion_9() -> Check {
    for n in 1..=5 {
        for m in n + 1..=9 {
            let k = SimplicialComplex::cyclic_boundary(n, m).map_err(|e| e.to_string())?;
            let f = to_big(&k.f_vector().map_err(|e| e.to_string())?);
            ensure(
                f == cyclic_f_vector(n, m).map_err(|e| e.to_string())?,
                || format!("C^{n}({m}) f = {f:?}"),
            )?;
            if n >= 2 {
                let u = ubt_check(&f, n, m).map_err(|e| e.to_string())?;
                ensure(u.holds && u.equality(), || {
                    format!("C^{n}({m}) UBT slack {:?}", u.slack)
                })?;
            }
        }
    }
    for n in 3..=5 {
        for k in 0..=4 {
            let s = SimplicialComplex::stacked_sphere(n, k, 7 * k as u64 + n as u64)
                .map_err(|e| e.to_string())?;
            let l = lbt_check(&to_big(&s.f_vector().unwrap()), n).map_err(|e| e.to_string())?;
            ensure(l.holds && l.equality(), || {
                format!("stacked({n},{k}) LBT slack {:?}", l.slack)
            })?;
        }
    }
    Ok(())
}

fn criterion_10(corpus: &[(String, SimplicialComplex)]) -> Check {
    for (name, k) in corpus {
        for c in FIELDS {
            let t = hochster_betti(k, c).map_err(|e| e.to_string())?;
            let top = k.m() - k.n();
            let vanishing = (top + 1..=k.m()).all(|i| t.row_sum(i) == 0);
            let cm = is_cohen_macaulay(k, c).map_err(|e| e.to_string())?;
            ensure(cm == vanishing, || {
                format!("{name} over {c}: Reisner {cm}, Betti {vanishing}")
            })?;
            if cm {
                ensure(t.row_sum(top) != 0, || format!("{name}: β^(-(m-n)) = 0"))?;
            }
            if is_gorenstein_star(k, c).map_err(|e| e.to_string())? {
                ensure(t.is_symmetric(), || {
                    format!("{name} over {c}: table not symmetric")
                })?;
            }
        }
    }
    Ok(())
}

fn criterion_11() -> Check {
    let cases = [
        (
            SimplicialComplex::simplex_boundary(3).unwrap(),
            "1,0,-1;0,1,-1",
            vec![1, 1, 1],
        ),
        (
            SimplicialComplex::square(),
            "1,0,-1,0;0,1,0,-1",
            vec![1, 2, 1],
        ),
    ];
    for (k, matrix, h) in cases {
        let l = CharMatrix::parse(matrix).map_err(|e| e.to_string())?;
        ensure(
            char_matrix_check(&k, &l)
                .map_err(|e| e.to_string())?
                .unimodular,
            || format!("{matrix} minors"),
        )?;
        for c in FIELDS {
            let dims = quotient_graded_dims(&k, &l, c).map_err(|e| e.to_string())?;
            ensure(dims == h, || format!("{matrix} over {c}: {dims:?}"))?;
        }
        let fh: Vec<usize> = FHVectors::of(&k)
            .h
            .iter()
            .map(|x| x.try_into().unwrap())
            .collect();
        ensure(fh == h, || "h-vector".into())?;
    }
    Ok(())
}

fn criterion_12(corpus: &[(String, SimplicialComplex)]) -> Check {
    for (name, k) in corpus {
        for c in FIELDS {
            ensure(
                euler_resolution_identity(k, c).map_err(|e| e.to_string())?,
                || format!("{name} over {c}"),
            )?;
        }
    }
    Ok(())
}

fn main() {
    let corpus = corpus();
    let criteria: Vec<(&str, Box<dyn Fn() -> Check + '_>)> = vec![
        (
            "triple-route Betti agreement",
            Box::new(|| criterion_1(&corpus)),
        ),
        ("square boundary Betti table", Box::new(criterion_2)),
        (
            "pentagon Betti vector, products and Poincare duality",
            Box::new(criterion_3),
        ),
        (
            "square and simplex-boundary moment-angle Betti vectors",
            Box::new(criterion_4),
        ),
        (
            "chi identity from cell counts",
            Box::new(|| criterion_5(&corpus)),
        ),
        (
            "generalized Dehn-Sommerville",
            Box::new(|| criterion_6(&corpus)),
        ),
        ("arrangement complements", Box::new(|| criterion_7(&corpus))),
        ("M-vector machinery", Box::new(|| criterion_8(&corpus))),
        ("cyclic and stacked extremality", Box::new(criterion_9)),
        (
            "Reisner and Betti consistency",
            Box::new(|| criterion_10(&corpus)),
        ),
        (
            "characteristic matrices and quotients",
            Box::new(criterion_11),
        ),
        (
            "resolution Euler identity",
            Box::new(|| criterion_12(&corpus)),
        ),
    ];
    let mut failures = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS {:>2}. {name} ({secs:.2}s)", n + 1),
            Err(msg) => {
                failures += 1;
                println!("FAIL {:>2}. {name} ({secs:.2}s): {msg}", n + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
