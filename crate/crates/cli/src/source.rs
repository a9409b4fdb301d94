use std::path::Path;

use facering::complex::io;
use facering::{Error, Result, SimplicialComplex};

pub const BUILTINS: &str =
    "square, pentagon, hexagon, figure1, torus7, torus9, simplex:M, boundary:M, \
polygon:M, points:M, cyclic:N:M, stacked:N:K:SEED";

fn arg(parts: &[&str], i: usize, input: &str) -> Result<usize> {
    parts
        .get(i)
        .ok_or_else(|| Error::Parse(format!("`{input}` is missing an argument")))?
        .parse()
        .map_err(|_| {
            Error::Parse(format!(
                "`{input}`: `{}` is not a nonnegative integer",
                parts[i]
            ))
        })
}

fn builtin(input: &str) -> Option<Result<SimplicialComplex>> {
    let parts: Vec<&str> = input.split(':').collect();
    let want = |count: usize| -> Result<()> {
        if parts.len() == count + 1 {
            Ok(())
        } else {
            Err(Error::Parse(format!(
                "`{}` takes {count} argument(s)",
                parts[0]
            )))
        }
    };
    let k = match parts[0] {
        "square" => want(0).map(|_| SimplicialComplex::square()),
        "pentagon" => want(0).and_then(|_| SimplicialComplex::polygon(5)),
        "hexagon" => want(0).and_then(|_| SimplicialComplex::polygon(6)),
        "figure1" => want(0).map(|_| SimplicialComplex::figure1()),
        "torus7" => want(0).map(|_| SimplicialComplex::torus7()),
        "torus9" => want(0).map(|_| SimplicialComplex::torus9()),
        "simplex" => want(1).and_then(|_| SimplicialComplex::simplex(arg(&parts, 1, input)?)),
        "boundary" => {
            want(1).and_then(|_| SimplicialComplex::simplex_boundary(arg(&parts, 1, input)?))
        }
        "polygon" => want(1).and_then(|_| SimplicialComplex::polygon(arg(&parts, 1, input)?)),
        "points" => want(1).and_then(|_| SimplicialComplex::points(arg(&parts, 1, input)?)),
        "cyclic" => want(2).and_then(|_| {
            SimplicialComplex::cyclic_boundary(arg(&parts, 1, input)?, arg(&parts, 2, input)?)
        }),
        "stacked" => want(3).and_then(|_| {
            SimplicialComplex::stacked_sphere(
                arg(&parts, 1, input)?,
                arg(&parts, 2, input)?,
                arg(&parts, 3, input)? as u64,
            )
        }),
        _ => return None,
    };
    Some(k)
}

/// Resolves a builtin name or reads a JSON / text complex file.
pub fn resolve(input: &str) -> Result<SimplicialComplex> {
    if let Some(k) = builtin(input) {
        return k;
    }
    let path = Path::new(input);
    if !path.exists() {
        return Err(Error::Parse(format!(
            "`{input}` is neither a builtin ({BUILTINS}) nor a file"
        )));
    }
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{input}: {e}")))?;
    io::parse_auto(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_resolve() {
        assert_eq!(
            resolve("simplex:3").unwrap(),
            SimplicialComplex::simplex(3).unwrap()
        );
        assert_eq!(
            resolve("cyclic:4:7").unwrap().f_vector().unwrap(),
            vec![7, 21, 28, 14]
        );
        assert_eq!(resolve("pentagon").unwrap().m(), 5);
        assert!(matches!(resolve("cyclic:4"), Err(Error::Parse(_))));
        assert!(matches!(resolve("points:x"), Err(Error::Parse(_))));
        assert!(matches!(resolve("no-such-thing"), Err(Error::Parse(_))));
        assert!(matches!(
            resolve("cyclic:4:3"),
            Err(Error::InvalidArgument(_))
        ));
    }
}
