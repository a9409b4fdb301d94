//! `frl`: invariants of simplicial complexes from the command line.
//!
//! Exit codes: 0 success, 2 parse or usage error, 3 mathematical
//! precondition failure, 4 internal cross-check failure.

mod source;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use facering::arrangements::{
    alexander_duality_check, arrangement_of, complement_cohomology, goresky_macpherson,
};
use facering::complex::io;
use facering::face_ring::{
    self, hochster_betti, is_gorenstein, koszul_betti, poincare_algebra_check, BigradedBettiTable,
};
use facering::fvectors::{
    format_vector, g_theorem_check, generalized_ds_check, is_palindromic, lbt_check,
    sphere_euler_characteristic, ubt_check, FHVectors,
};
use facering::homology::{
    is_cohen_macaulay, is_gorenstein_star, is_homology_manifold, is_homology_sphere,
    reduced_homology,
};
use facering::moment_angle::{
    chi_pair_polynomials, chi_polynomial, relative_pd_check, zk_bigraded_betti,
};
use facering::quotients::{char_matrix_check, quotient_graded_dims, CharMatrix};
use facering::{Coefficients, Error, SimplicialComplex};
use num_bigint::BigInt;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "frl",
    version,
    about = "Exact invariants of simplicial complexes, face rings and moment-angle complexes"
)]
struct Cli {
    /// Coefficient field: q, f2, f3, f5, ...
    #[arg(long, global = true, default_value = "q")]
    coeff: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Route {
    Hochster,
    Koszul,
    Cells,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Basic combinatorial data
    Info { source: String },
    /// f-, h- and g-vectors
    Fvector { source: String },
    /// g-theorem conditions and upper/lower bound checks
    Gcheck { source: String },
    /// Reduced simplicial homology
    Homology { source: String },
    /// Cohen-Macaulay, Gorenstein* and manifold tests via link homology
    Cm { source: String },
    /// Gorenstein tests via the Betti table
    Gorenstein {
        source: String,
        /// Also test the Poincare duality of the Tor-algebra
        #[arg(long)]
        poincare: bool,
    },
    /// Bigraded Betti numbers
    Betti {
        source: String,
        #[arg(long, value_enum, default_value_t = Route::Hochster)]
        route: Route,
    },
    /// Hilbert series of the face ring
    Hilbert {
        source: String,
        /// Number of graded dimensions to list
        #[arg(long, default_value_t = 6)]
        terms: usize,
    },
    /// Euler characteristic polynomials of the moment-angle complex
    Chi { source: String },
    /// Generalized Dehn-Sommerville relations
    Ds { source: String },
    /// Cohomology of the coordinate arrangement complement from the Betti table
    Complement { source: String },
    /// Complement cohomology by the Goresky-MacPherson formula
    Gm { source: String },
    /// Alexander duality between full subcomplexes and dual links
    Alexander { source: String },
    /// Characteristic matrix test and quotient ring dimensions
    Quotient {
        source: String,
        /// Matrix as `1,0,-1;0,1,-1`, a JSON object {"rows": ...}, or a file holding either
        #[arg(long)]
        matrix: String,
    },
    /// Write a complex to a file
    Generate {
        source: String,
        #[arg(long, short)]
        output: PathBuf,
        /// Write the terse text format instead of JSON
        #[arg(long)]
        text: bool,
    },
}

struct Report {
    text: String,
    json: Value,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) => 2,
        Error::CrossCheck(_) => 4,
        _ => 3,
    }
}

fn big(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

fn bigs(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(big).collect())
}

fn faces_text(faces: &[facering::Face]) -> String {
    faces
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn dims_text(dims: &[u64]) -> String {
    let parts: Vec<String> = dims
        .iter()
        .enumerate()
        .filter(|(_, &d)| d > 0)
        .map(|(p, d)| format!("H^{p}={d}"))
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" ")
    }
}

fn table_json(t: &BigradedBettiTable) -> Value {
    serde_json::from_str(&t.to_json()).expect("table json is valid")
}

fn configure_threads() {
    if let Some(n) = std::env::var("FRL_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
    {
        if n > 0 {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global();
        }
    }
}

fn read_matrix(input: &str) -> facering::Result<CharMatrix> {
    let path = std::path::Path::new(input);
    if path.is_file() {
        let text =
            std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{input}: {e}")))?;
        CharMatrix::parse(&text)
    } else {
        CharMatrix::parse(input)
    }
}

fn run(cli: &Cli) -> facering::Result<Report> {
    let c: Coefficients = cli.coeff.parse()?;
    let load = |s: &str| source::resolve(s);
    match &cli.command {
        Command::Info { source } => info(&load(source)?),
        Command::Fvector { source } => fvector(&load(source)?),
        Command::Gcheck { source } => gcheck(&load(source)?),
        Command::Homology { source } => homology(&load(source)?, c),
        Command::Cm { source } => cm(&load(source)?, c),
        Command::Gorenstein { source, poincare } => gorenstein(&load(source)?, c, *poincare),
        Command::Betti { source, route } => betti(&load(source)?, c, *route),
        Command::Hilbert { source, terms } => hilbert(&load(source)?, *terms),
        Command::Chi { source } => chi(&load(source)?, c),
        Command::Ds { source } => ds(&load(source)?),
        Command::Complement { source } => {
            let k = load(source)?;
            let dims = complement_cohomology(&k, c)?;
            let arr = arrangement_of(&k);
            let mut text = format!(
                "subspaces: {}\n",
                if arr.subspaces.is_empty() {
                    "none".into()
                } else {
                    faces_text(&arr.subspaces)
                }
            );
            writeln!(text, "H*(U(K)): {}", dims_text(&dims)).unwrap();
            Ok(Report {
                text,
                json: json!({ "subspaces": arr.subspaces, "dims": dims }),
            })
        }
        Command::Gm { source } => {
            let dims = goresky_macpherson(&load(source)?, c)?;
            Ok(Report {
                text: format!("H*(U(K)): {}\n", dims_text(&dims)),
                json: json!({ "dims": dims }),
            })
        }
        Command::Alexander { source } => {
            let holds = alexander_duality_check(&load(source)?, c)?;
            Ok(Report {
                text: format!("alexander duality: {}\n", verdict(holds)),
                json: json!({ "holds": holds }),
            })
        }
        Command::Quotient { source, matrix } => quotient(&load(source)?, &read_matrix(matrix)?, c),
        Command::Generate {
            source,
            output,
            text,
        } => {
            let k = load(source)?;
            let body = if *text {
                io::to_text(&k)
            } else {
                io::to_json(&k) + "\n"
            };
            std::fs::write(output, body)
                .map_err(|e| Error::InvalidArgument(format!("{}: {e}", output.display())))?;
            Ok(Report {
                text: format!("wrote {}\n", output.display()),
                json: json!({ "written": output.display().to_string() }),
            })
        }
    }
}

fn verdict(b: bool) -> &'static str {
    if b {
        "holds"
    } else {
        "fails"
    }
}

fn info(k: &SimplicialComplex) -> facering::Result<Report> {
    let fh = FHVectors::of(k);
    let missing = k.missing_faces();
    let mut t = String::new();
    writeln!(t, "m: {}", k.m()).unwrap();
    writeln!(t, "dim: {} (n = {})", k.dim(), k.n()).unwrap();
    writeln!(t, "facets: {}", faces_text(k.facets())).unwrap();
    writeln!(t, "f-vector: {}", format_vector(&fh.f)).unwrap();
    writeln!(t, "pure: {}", k.is_pure()).unwrap();
    writeln!(t, "flag: {}", k.is_flag()).unwrap();
    writeln!(t, "cone: {}", k.is_cone()).unwrap();
    writeln!(t, "neighbourliness: {}", k.neighbourliness()).unwrap();
    writeln!(t, "missing faces: {}", faces_text(&missing)).unwrap();
    Ok(Report {
        text: t,
        json: json!({
            "m": k.m(), "dim": k.dim(), "n": k.n(), "facets": k.facets(), "f": bigs(&fh.f),
            "pure": k.is_pure(), "flag": k.is_flag(), "cone": k.is_cone(),
            "neighbourliness": k.neighbourliness(), "missing_faces": missing,
        }),
    })
}

fn fvector(k: &SimplicialComplex) -> facering::Result<Report> {
    let fh = FHVectors::of(k);
    Ok(Report {
        text: format!(
            "f = {}\nh = {}\ng = {}\n",
            format_vector(&fh.f),
            format_vector(&fh.h),
            format_vector(&fh.g)
        ),
        json: json!({ "n": fh.n, "f": bigs(&fh.f), "h": bigs(&fh.h), "g": bigs(&fh.g) }),
    })
}

fn gcheck(k: &SimplicialComplex) -> facering::Result<Report> {
    let fh = FHVectors::of(k);
    let g = g_theorem_check(&fh.f, fh.n)?;
    let mut t = format!(
        "h = {}\nDehn-Sommerville: {}\ng nonnegative: {}\ng is an M-vector: {}\ng-theorem conditions: {}\n",
        format_vector(&fh.h),
        verdict(g.ds_holds),
        g.g_nonnegative,
        g.g_is_m_vector,
        verdict(g.passes())
    );
    let mut j = json!({ "h": bigs(&fh.h), "ds_holds": g.ds_holds, "g_nonnegative": g.g_nonnegative,
        "g_is_m_vector": g.g_is_m_vector, "passes": g.passes() });
    if fh.f.first() == Some(&BigInt::from(k.m())) {
        let u = ubt_check(&fh.f, fh.n, k.m())?;
        writeln!(
            t,
            "upper bound: {} (equality: {})",
            verdict(u.holds),
            u.equality()
        )
        .unwrap();
        j["upper_bound"] =
            json!({ "holds": u.holds, "equality": u.equality(), "slack": bigs(&u.slack) });
    }
    if fh.n >= 3 {
        let l = lbt_check(&fh.f, fh.n)?;
        writeln!(
            t,
            "lower bound: {} (equality: {})",
            verdict(l.holds),
            l.equality()
        )
        .unwrap();
        j["lower_bound"] =
            json!({ "holds": l.holds, "equality": l.equality(), "slack": bigs(&l.slack) });
    }
    Ok(Report { text: t, json: j })
}

fn homology(k: &SimplicialComplex, c: Coefficients) -> facering::Result<Report> {
    let p = reduced_homology(k, c)?;
    let mut t = String::new();
    let mut dims = serde_json::Map::new();
    for d in -1..=k.dim() {
        writeln!(t, "H~_{d}({c}) = {}", p.dim(d)).unwrap();
        dims.insert(d.to_string(), json!(p.dim(d)));
    }
    Ok(Report {
        text: t,
        json: json!({ "coefficients": c.to_string(), "reduced_homology": dims }),
    })
}

fn cm(k: &SimplicialComplex, c: Coefficients) -> facering::Result<Report> {
    let cmv = is_cohen_macaulay(k, c)?;
    let gs = is_gorenstein_star(k, c)?;
    let (manifold, sphere) = match is_homology_manifold(k, c) {
        Ok(b) => (Some(b), Some(is_homology_sphere(k, c)?)),
        Err(Error::NotPure) => (None, None),
        Err(e) => return Err(e),
    };
    let show = |b: Option<bool>| b.map_or("n/a (not pure)".to_string(), |b| b.to_string());
    Ok(Report {
        text: format!(
            "coefficients: {c}\ncohen-macaulay: {cmv}\ngorenstein*: {gs}\nhomology manifold: {}\nhomology sphere: {}\n",
            show(manifold),
            show(sphere)
        ),
        json: json!({ "coefficients": c.to_string(), "cohen_macaulay": cmv, "gorenstein_star": gs,
            "homology_manifold": manifold, "homology_sphere": sphere }),
    })
}

fn gorenstein(k: &SimplicialComplex, c: Coefficients, poincare: bool) -> facering::Result<Report> {
    let g = is_gorenstein(k, c)?;
    let mut t = format!(
        "cohen-macaulay: {}\ngorenstein: {}\ngorenstein*: {}\n",
        g.cohen_macaulay, g.gorenstein, g.gorenstein_star
    );
    let mut j = json!({ "cohen_macaulay": g.cohen_macaulay, "gorenstein": g.gorenstein, "gorenstein_star": g.gorenstein_star });
    if poincare {
        let p = poincare_algebra_check(k, c)?;
        writeln!(
            t,
            "poincare algebra: {} (symmetric table: {}, one-dimensional top: {}, perfect pairing: {})",
            verdict(p.holds()),
            p.table_symmetric,
            p.top_is_one_dimensional,
            p.pairing_nondegenerate
        )
        .unwrap();
        j["poincare"] = json!({ "holds": p.holds(), "table_symmetric": p.table_symmetric,
            "top_is_one_dimensional": p.top_is_one_dimensional, "pairing_nondegenerate": p.pairing_nondegenerate });
    }
    Ok(Report { text: t, json: j })
}

fn betti(k: &SimplicialComplex, c: Coefficients, route: Route) -> facering::Result<Report> {
    let mut tables: Vec<(&str, BigradedBettiTable)> = Vec::new();
    if matches!(route, Route::Hochster | Route::All) {
        tables.push(("hochster", hochster_betti(k, c)?));
    }
    if matches!(route, Route::Koszul | Route::All) {
        tables.push(("koszul", koszul_betti(k, c)?));
    }
    if matches!(route, Route::Cells | Route::All) {
        tables.push(("cells", zk_bigraded_betti(k, c)?));
    }
    let (first_name, first) = &tables[0];
    if let Some((name, _)) = tables.iter().find(|(_, t)| t != first) {
        return Err(Error::CrossCheck(format!(
            "routes {first_name} and {name} disagree"
        )));
    }
    let names: Vec<&str> = tables.iter().map(|(n, _)| *n).collect();
    let vector = first.total_degree_vector();
    let mut t = format!(
        "bigraded Betti numbers over {c} (rows -i, columns 2j)\n{}",
        first.to_text()
    );
    writeln!(
        t,
        "Z_K Betti numbers: {}",
        vector
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(",")
    )
    .unwrap();
    if names.len() > 1 {
        writeln!(t, "routes agree: {}", names.join(", ")).unwrap();
    }
    Ok(Report {
        text: t,
        json: json!({ "coefficients": c.to_string(), "routes": names, "table": table_json(first), "zk_betti": vector }),
    })
}

fn hilbert(k: &SimplicialComplex, terms: usize) -> facering::Result<Report> {
    let s = face_ring::hilbert_series(k);
    let dims: Vec<BigInt> = (0..terms)
        .map(|d| face_ring::graded_dimension(k, d))
        .collect();
    let gens = face_ring::ideal_generators(k);
    Ok(Report {
        text: format!(
            "F(t) = ({}) / (1 - t^2)^{}\ndim k[K]_(2d), d = 0..{}: {}\nI_K generators: {}\n",
            s.numerator,
            s.denom_exponent,
            terms.saturating_sub(1),
            format_vector(&dims),
            if gens.is_empty() {
                "none".into()
            } else {
                faces_text(&gens)
            }
        ),
        json: json!({ "numerator": bigs(s.numerator.coeffs()), "denom_exponent": s.denom_exponent,
            "graded_dims": bigs(&dims), "ideal_generators": gens }),
    })
}

fn chi(k: &SimplicialComplex, c: Coefficients) -> facering::Result<Report> {
    let chi = chi_polynomial(k)?;
    let (pair, comp) = chi_pair_polynomials(k);
    let mut t =
        format!("chi(Z_K; t) = {chi}\nchi(Z_K, T; t) = {pair}\nchi(Z_K \\ T; t) = {comp}\n");
    let mut j = json!({ "chi": bigs(chi.coeffs()), "chi_pair": bigs(pair.coeffs()), "chi_complement": bigs(comp.coeffs()) });
    match relative_pd_check(k, c) {
        Ok(r) => {
            writeln!(t, "relative duality: {}", verdict(r.holds)).unwrap();
            j["relative_duality"] = json!(r.holds);
        }
        Err(Error::Precondition(msg)) => {
            writeln!(t, "relative duality: not applicable ({msg})").unwrap();
            j["relative_duality"] = Value::Null;
        }
        Err(e) => return Err(e),
    }
    Ok(Report { text: t, json: j })
}

fn ds(k: &SimplicialComplex) -> facering::Result<Report> {
    let fh = FHVectors::of(k);
    let n = fh.n;
    let euler = k.euler_characteristic();
    let defect = euler - sphere_euler_characteristic(n);
    let mut t = format!(
        "h = {}\neuler characteristic: {euler}\n",
        format_vector(&fh.h)
    );
    let mut relations = Vec::new();
    for i in 0..=n / 2 {
        let lhs = &fh.h[n - i] - &fh.h[i];
        let sign = if i % 2 == 0 { 1 } else { -1 };
        let rhs = BigInt::from(sign * defect) * facering::field::binomial(n as i64, i as i64);
        writeln!(
            t,
            "h{} - h{} = {} (expected {}) {}",
            n - i,
            i,
            lhs,
            rhs,
            if lhs == rhs { "ok" } else { "FAIL" }
        )
        .unwrap();
        relations.push(json!({ "i": i, "difference": big(&lhs), "expected": big(&rhs) }));
    }
    let holds = generalized_ds_check(&fh.f, n, euler)?;
    writeln!(t, "generalized Dehn-Sommerville: {}", verdict(holds)).unwrap();
    writeln!(t, "palindromic h: {}", is_palindromic(&fh.h)).unwrap();
    Ok(Report {
        text: t,
        json: json!({ "h": bigs(&fh.h), "euler_characteristic": euler, "relations": relations,
            "holds": holds, "palindromic": is_palindromic(&fh.h) }),
    })
}

fn quotient(
    k: &SimplicialComplex,
    lambda: &CharMatrix,
    c: Coefficients,
) -> facering::Result<Report> {
    let mut t = String::new();
    let mut j = json!({ "matrix": lambda.to_string() });
    if k.is_pure() {
        let r = char_matrix_check(k, lambda)?;
        writeln!(
            t,
            "characteristic matrix (all facet minors ±1): {}",
            r.unimodular
        )
        .unwrap();
        for (f, d) in &r.failing_facets {
            writeln!(t, "  facet {f}: minor {d}").unwrap();
        }
        j["unimodular"] = json!(r.unimodular);
        j["failing_facets"] = Value::Array(
            r.failing_facets
                .iter()
                .map(|(f, d)| json!({ "facet": f, "det": big(d) }))
                .collect(),
        );
    }
    let dims = quotient_graded_dims(k, lambda, c)?;
    let h = FHVectors::of(k).h;
    let matches_h =
        dims.len() == h.len() && dims.iter().zip(&h).all(|(d, x)| BigInt::from(*d) == *x);
    writeln!(
        t,
        "dim (k[K]/Theta)_(2i): ({})",
        dims.iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(",")
    )
    .unwrap();
    writeln!(t, "odd degrees: 0").unwrap();
    writeln!(t, "h = {} (equal: {matches_h})", format_vector(&h)).unwrap();
    j["dims"] = json!(dims);
    j["h"] = bigs(&h);
    j["equals_h"] = json!(matches_h);
    Ok(Report { text: t, json: j })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    match run(&cli) {
        Ok(r) => {
            match cli.format {
                Format::Text => print!("{}", r.text),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&r.json).expect("json output")
                ),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
