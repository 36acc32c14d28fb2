//! Exact ground-field arithmetic for k = Q and k = GF(p).
//!
//! Rationals are arbitrary-precision and kept in lowest terms with a
//! positive denominator; prime-field values are residues in `[0, p)`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Description of the ground field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    /// GF(p) for a prime modulus p.
    PrimeField(u64),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).map_or(false, |sq| sq <= n) {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldSpec {
    /// GF(p); rejects composite or trivial moduli.
    pub fn prime_field(p: u64) -> Result<FieldSpec> {
        if is_prime(p) {
            Ok(FieldSpec::PrimeField(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    /// 0 for the rationals, p for GF(p).
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "F{}", p),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    Rat(BigRational),
    Mod(u64),
}

/// An element of the ground field, always in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    field: FieldSpec,
    repr: Repr,
}

fn mod_mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mod_mul(acc, base, p);
        }
        base = mod_mul(base, base, p);
        exp >>= 1;
    }
    acc
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn zero(field: FieldSpec) -> Scalar {
        Scalar::from_integer(field, 0)
    }

    pub fn one(field: FieldSpec) -> Scalar {
        Scalar::from_integer(field, 1)
    }

    pub fn from_integer(field: FieldSpec, n: i64) -> Scalar {
        match field {
            FieldSpec::Rationals => Scalar {
                field,
                repr: Repr::Rat(BigRational::from_integer(BigInt::from(n))),
            },
            FieldSpec::PrimeField(p) => {
                let r = n.rem_euclid(p as i64) as u64;
                Scalar {
                    field,
                    repr: Repr::Mod(r % p),
                }
            }
        }
    }

    pub fn from_bigint(field: FieldSpec, n: BigInt) -> Scalar {
        match field {
            FieldSpec::Rationals => Scalar {
                field,
                repr: Repr::Rat(BigRational::from_integer(n)),
            },
            FieldSpec::PrimeField(p) => {
                let m = BigInt::from(p);
                let r = ((n % &m) + &m) % &m;
                Scalar {
                    field,
                    repr: Repr::Mod(r.to_u64().expect("residue fits u64")),
                }
            }
        }
    }

    /// a/b interpreted in the field; in GF(p) this is a * b^{-1}.
    pub fn from_ratio(field: FieldSpec, num: BigInt, den: BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match field {
            FieldSpec::Rationals => Ok(Scalar {
                field,
                repr: Repr::Rat(BigRational::new(num, den)),
            }),
            FieldSpec::PrimeField(_) => {
                let a = Scalar::from_bigint(field, num);
                let b = Scalar::from_bigint(field, den);
                a.div(&b)
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Rat(r) => r.is_zero(),
            Repr::Mod(r) => *r == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Rat(r) => r.is_one(),
            Repr::Mod(r) => *r == 1,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.repr {
            Repr::Rat(r) => Some(r),
            Repr::Mod(_) => None,
        }
    }

    pub fn as_residue(&self) -> Option<u64> {
        match &self.repr {
            Repr::Rat(_) => None,
            Repr::Mod(r) => Some(*r),
        }
    }

    fn check_field(&self, other: &Scalar) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar> {
        self.check_field(other)?;
        let repr = match (&self.repr, &other.repr) {
            (Repr::Rat(a), Repr::Rat(b)) => Repr::Rat(a + b),
            (Repr::Mod(a), Repr::Mod(b)) => {
                let p = self.field.characteristic();
                Repr::Mod(((*a as u128 + *b as u128) % p as u128) as u64)
            }
            _ => unreachable!("field spec and repr agree"),
        };
        Ok(Scalar {
            field: self.field,
            repr,
        })
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        let repr = match &self.repr {
            Repr::Rat(a) => Repr::Rat(-a),
            Repr::Mod(a) => {
                let p = self.field.characteristic();
                Repr::Mod(if *a == 0 { 0 } else { p - a })
            }
        };
        Scalar {
            field: self.field,
            repr,
        }
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check_field(other)?;
        let repr = match (&self.repr, &other.repr) {
            (Repr::Rat(a), Repr::Rat(b)) => Repr::Rat(a * b),
            (Repr::Mod(a), Repr::Mod(b)) => {
                Repr::Mod(mod_mul(*a, *b, self.field.characteristic()))
            }
            _ => unreachable!("field spec and repr agree"),
        };
        Ok(Scalar {
            field: self.field,
            repr,
        })
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let repr = match &self.repr {
            Repr::Rat(a) => Repr::Rat(a.recip()),
            Repr::Mod(a) => {
                let p = self.field.characteristic();
                // Fermat: a^(p-2) mod p
                Repr::Mod(mod_pow(*a, p - 2, p))
            }
        };
        Ok(Scalar {
            field: self.field,
            repr,
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        self.check_field(other)?;
        self.mul(&other.inv()?)
    }

    /// Parses `n`, `-n` or `a/b` in the given field.
    pub fn parse(field: FieldSpec, src: &str) -> Result<Scalar> {
        let s = src.trim();
        let err = || Error::SyntaxError {
            pos: 0,
            msg: format!("invalid scalar literal `{}`", src),
        };
        if let Some((a, b)) = s.split_once('/') {
            let num: BigInt = a.trim().parse().map_err(|_| err())?;
            let den: BigInt = b.trim().parse().map_err(|_| err())?;
            Scalar::from_ratio(field, num, den)
        } else {
            let n: BigInt = s.parse().map_err(|_| err())?;
            Ok(Scalar::from_bigint(field, n))
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Repr::Mod(r) => write!(f, "{}", r),
        }
    }
}

/// True iff the rational value is negative; GF(p) residues are never
/// considered negative.
pub fn is_negative(s: &Scalar) -> bool {
    match s.as_rational() {
        Some(r) => r.is_negative(),
        None => false,
    }
}

pub fn nat_to_scalar(field: FieldSpec, n: &BigUint) -> Scalar {
    Scalar::from_bigint(field, BigInt::from(n.clone()))
}
