//! Univariate polynomials k[y] and rational functions k(y).
//!
//! Polynomials are dense in ascending powers with no trailing zero
//! coefficient; the zero polynomial has an empty coefficient list.
//! Rational functions are kept reduced with a monic denominator.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

/// Degree with the distinguished value deg(0) = -infinity, which sorts
/// below all finite degrees and absorbs under addition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInf,
    Finite(usize),
}

impl Degree {
    pub fn finite(&self) -> Option<usize> {
        match self {
            Degree::NegInf => None,
            Degree::Finite(n) => Some(*n),
        }
    }
}

impl std::ops::Add for Degree {
    type Output = Degree;
    fn add(self, rhs: Degree) -> Degree {
        match (self, rhs) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::NegInf,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInf => write!(f, "-inf"),
            Degree::Finite(n) => write!(f, "{}", n),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: FieldSpec,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn zero(field: FieldSpec) -> Poly {
        Poly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: FieldSpec) -> Poly {
        Poly::constant(Scalar::one(field))
    }

    pub fn constant(c: Scalar) -> Poly {
        let field = c.field();
        Poly {
            field,
            coeffs: if c.is_zero() { vec![] } else { vec![c] },
        }
    }

    /// The generator y.
    pub fn gen(field: FieldSpec) -> Poly {
        Poly::monomial(Scalar::one(field), 1)
    }

    /// c * y^n.
    pub fn monomial(c: Scalar, n: usize) -> Poly {
        let field = c.field();
        if c.is_zero() {
            return Poly::zero(field);
        }
        let mut coeffs = vec![Scalar::zero(field); n];
        coeffs.push(c);
        Poly { field, coeffs }
    }

    pub fn from_coeffs(field: FieldSpec, coeffs: Vec<Scalar>) -> Result<Poly> {
        if coeffs.iter().any(|c| c.field() != field) {
            return Err(Error::FieldMismatch);
        }
        let mut p = Poly { field, coeffs };
        p.trim();
        Ok(p)
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Coefficient of y^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.field))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Degree {
        if self.coeffs.is_empty() {
            Degree::NegInf
        } else {
            Degree::Finite(self.coeffs.len() - 1)
        }
    }

    pub fn leading_coeff(&self) -> Result<Scalar> {
        self.coeffs.last().cloned().ok_or(Error::ZeroPolynomial)
    }

    fn check_field(&self, other: &Poly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i).add(&other.coeff(i))?);
        }
        let mut p = Poly {
            field: self.field,
            coeffs,
        };
        p.trim();
        Ok(p)
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            field: self.field,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(self.field));
        }
        let mut coeffs =
            vec![Scalar::zero(self.field); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b)?)?;
            }
        }
        let mut p = Poly {
            field: self.field,
            coeffs,
        };
        p.trim();
        Ok(p)
    }

    pub fn scale(&self, c: &Scalar) -> Result<Poly> {
        self.mul(&Poly::constant(c.clone()))
    }

    /// Euclidean division: self = q*g + r with deg r < deg g.
    pub fn divrem(&self, g: &Poly) -> Result<(Poly, Poly)> {
        self.check_field(g)?;
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.field);
        let g_deg = g.coeffs.len() - 1;
        let g_lead_inv = g.leading_coeff()?.inv()?;
        while !rem.is_zero() && rem.coeffs.len() - 1 >= g_deg {
            let shift = rem.coeffs.len() - 1 - g_deg;
            let c = rem.leading_coeff()?.mul(&g_lead_inv)?;
            let term = Poly::monomial(c, shift);
            quot = quot.add(&term)?;
            rem = rem.sub(&term.mul(g)?)?;
        }
        Ok((quot, rem))
    }

    /// Monic greatest common divisor; gcd(0, f) = monic(f).
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b)?;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Divides out the leading coefficient.
    pub fn monic(&self) -> Result<Poly> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        let inv = self.leading_coeff()?.inv()?;
        self.scale(&inv)
    }

    /// f(p(y)), Horner evaluation in k[y].
    pub fn compose(&self, p: &Poly) -> Result<Poly> {
        self.check_field(p)?;
        let mut acc = Poly::zero(self.field);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(p)?.add(&Poly::constant(c.clone()))?;
        }
        Ok(acc)
    }

    pub fn pow(&self, e: usize) -> Result<Poly> {
        let mut acc = Poly::one(self.field);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }
}

/// The functional equation f(y)*g(p(y)) = f(p(y))*g(y), checked exactly.
pub fn check_functional_eq(f: &Poly, g: &Poly, p: &Poly) -> Result<bool> {
    let lhs = f.mul(&g.compose(p)?)?;
    let rhs = f.compose(p)?.mul(g)?;
    Ok(lhs == rhs)
}

/// Element of k(y): num/den with den nonzero, monic, and coprime to num.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<RatFunc> {
        num.check_field(&den)?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc {
                den: Poly::one(num.field()),
                num,
            });
        }
        let g = num.gcd(&den)?;
        let (num, _) = num.divrem(&g)?;
        let (den, _) = den.divrem(&g)?;
        let lead_inv = den.leading_coeff()?.inv()?;
        Ok(RatFunc {
            num: num.scale(&lead_inv)?,
            den: den.scale(&lead_inv)?,
        })
    }

    pub fn from_poly(p: Poly) -> RatFunc {
        RatFunc {
            den: Poly::one(p.field()),
            num: p,
        }
    }

    pub fn zero(field: FieldSpec) -> RatFunc {
        RatFunc::from_poly(Poly::zero(field))
    }

    pub fn one(field: FieldSpec) -> RatFunc {
        RatFunc::from_poly(Poly::one(field))
    }

    pub fn field(&self) -> FieldSpec {
        self.num.field()
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Some(p) iff the denominator is 1.
    pub fn as_poly(&self) -> Option<&Poly> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn add(&self, other: &RatFunc) -> Result<RatFunc> {
        let num = self
            .num
            .mul(&other.den)?
            .add(&other.num.mul(&self.den)?)?;
        RatFunc::new(num, self.den.mul(&other.den)?)
    }

    pub fn sub(&self, other: &RatFunc) -> Result<RatFunc> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RatFunc) -> Result<RatFunc> {
        RatFunc::new(self.num.mul(&other.num)?, self.den.mul(&other.den)?)
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        self.mul(&other.inv()?)
    }

    pub fn scale(&self, c: &Scalar) -> Result<RatFunc> {
        RatFunc::new(self.num.scale(c)?, self.den.clone())
    }
}
