//! Exact coefficient fields: the rationals and prime fields.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The coefficient field used by every homological computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Coefficients {
    Rationals,
    PrimeField(u64),
}

impl Coefficients {
    /// Builds `𝔽_p`, rejecting composite moduli.
    pub fn prime(p: u64) -> Result<Self> {
        let c = Coefficients::PrimeField(p);
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            Coefficients::Rationals => Ok(()),
            Coefficients::PrimeField(p) if is_prime(p) && p < (1 << 31) => Ok(()),
            Coefficients::PrimeField(p) => Err(Error::NotPrime(p)),
        }
    }

    pub fn zero(&self) -> FieldScalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> FieldScalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, x: i64) -> FieldScalar {
        match *self {
            Coefficients::Rationals => FieldScalar::Rational(BigRational::from_integer(x.into())),
            Coefficients::PrimeField(p) => FieldScalar::Modular {
                value: x.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(&self, x: &BigInt) -> FieldScalar {
        match *self {
            Coefficients::Rationals => FieldScalar::Rational(BigRational::from_integer(x.clone())),
            Coefficients::PrimeField(p) => {
                let r = ((x % BigInt::from(p)) + BigInt::from(p)) % BigInt::from(p);
                let value = r.to_string().parse::<u64>().expect("residue fits in u64");
                FieldScalar::Modular { value, modulus: p }
            }
        }
    }

    /// Field characteristic (0 for ℚ).
    pub fn characteristic(&self) -> u64 {
        match *self {
            Coefficients::Rationals => 0,
            Coefficients::PrimeField(p) => p,
        }
    }
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficients::Rationals => write!(f, "Q"),
            Coefficients::PrimeField(p) => write!(f, "F{p}"),
        }
    }
}

impl FromStr for Coefficients {
    type Err = Error;

    /// Accepts `q`, `Q`, `rationals`, or `f<p>` / `F<p>` / `p<p>` for a prime `p`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") || t.eq_ignore_ascii_case("rationals") {
            return Ok(Coefficients::Rationals);
        }
        let digits = t
            .strip_prefix(['f', 'F', 'p', 'P'])
            .ok_or_else(|| Error::Parse(format!("unknown coefficient field `{s}`")))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::Parse(format!("unknown coefficient field `{s}`")))?;
        Coefficients::prime(p)
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of ℚ or of `𝔽_p`.
///
/// Mixing elements of different fields is a logic error and panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldScalar {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

impl FieldScalar {
    pub fn is_zero(&self) -> bool {
        match self {
            FieldScalar::Rational(r) => r.is_zero(),
            FieldScalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldScalar::Rational(r) => r.is_one(),
            FieldScalar::Modular { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> FieldScalar {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            FieldScalar::Rational(r) => FieldScalar::Rational(r.recip()),
            FieldScalar::Modular { value, modulus } => FieldScalar::Modular {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        }
    }

    pub fn coefficients(&self) -> Coefficients {
        match self {
            FieldScalar::Rational(_) => Coefficients::Rationals,
            FieldScalar::Modular { modulus, .. } => Coefficients::PrimeField(*modulus),
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1u64;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldScalar::Rational(r) => write!(f, "{r}"),
            FieldScalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $rat:expr, $modop:expr) => {
        impl $tr for FieldScalar {
            type Output = FieldScalar;
            fn $method(self, rhs: FieldScalar) -> FieldScalar {
                (&self).$method(&rhs)
            }
        }

        impl<'a> $tr<&'a FieldScalar> for &'a FieldScalar {
            type Output = FieldScalar;
            fn $method(self, rhs: &'a FieldScalar) -> FieldScalar {
                match (self, rhs) {
                    (FieldScalar::Rational(a), FieldScalar::Rational(b)) => {
                        FieldScalar::Rational($rat(a, b))
                    }
                    (
                        FieldScalar::Modular {
                            value: a,
                            modulus: p,
                        },
                        FieldScalar::Modular {
                            value: b,
                            modulus: q,
                        },
                    ) if p == q => FieldScalar::Modular {
                        value: $modop(*a, *b, *p),
                        modulus: *p,
                    },
                    _ => panic!("field mismatch: {self:?} vs {rhs:?}"),
                }
            }
        }
    };
}

binop!(
    Add,
    add,
    |a: &BigRational, b: &BigRational| a + b,
    |a: u64, b: u64, p: u64| (a + b) % p
);
binop!(
    Sub,
    sub,
    |a: &BigRational, b: &BigRational| a - b,
    |a: u64, b: u64, p: u64| (a + p - b) % p
);
binop!(
    Mul,
    mul,
    |a: &BigRational, b: &BigRational| a * b,
    |a: u64, b: u64, p: u64| a * b % p
);

impl Neg for FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        match self {
            FieldScalar::Rational(r) => FieldScalar::Rational(-r),
            FieldScalar::Modular { value, modulus } => FieldScalar::Modular {
                value: (modulus - value) % modulus,
                modulus,
            },
        }
    }
}

/// Exact binomial coefficient with `C(n, k) = 0` outside `0 ≤ k ≤ n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Sign helper: `(-1)^e`.
pub fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}
