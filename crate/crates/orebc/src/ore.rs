//! The skew polynomial ring S = R[x;sigma,delta] over R = k[y] or k(y).
//!
//! Elements are stored in canonical left-coefficient form: a dense list of
//! coefficients in ascending powers of x with no trailing zero, so the
//! coefficient list is the unique representation with respect to the left
//! R-module basis 1, x, x^2, ...
//!
//! Multiplication rewrites x*r = sigma(r)*x + delta(r); sigma is determined
//! by its image sigma(y) = p(y) and fixes k pointwise, delta is the unique
//! sigma-derivation with the given delta(y) that kills k.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{Degree, Poly, RatFunc};
use crate::scalar::{FieldSpec, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoeffRing {
    PolyRing,
    RationalFunctions,
}

/// A coefficient of the Ore ring: an element of k[y] or of k(y),
/// matching the algebra's coefficient ring.
#[derive(Debug, Clone, PartialEq)]
pub enum Coef {
    Poly(Poly),
    Rat(RatFunc),
}

impl Coef {
    pub fn is_zero(&self) -> bool {
        match self {
            Coef::Poly(p) => p.is_zero(),
            Coef::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coef::Poly(p) => p.is_one(),
            Coef::Rat(r) => r.as_poly().map_or(false, |p| p.is_one()),
        }
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            Coef::Poly(p) => p.field(),
            Coef::Rat(r) => r.field(),
        }
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        match self {
            Coef::Poly(p) => Some(p),
            Coef::Rat(r) => r.as_poly(),
        }
    }

    pub fn add(&self, other: &Coef) -> Result<Coef> {
        match (self, other) {
            (Coef::Poly(a), Coef::Poly(b)) => Ok(Coef::Poly(a.add(b)?)),
            (Coef::Rat(a), Coef::Rat(b)) => Ok(Coef::Rat(a.add(b)?)),
            _ => Err(Error::AlgebraMismatch),
        }
    }

    pub fn sub(&self, other: &Coef) -> Result<Coef> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Coef {
        match self {
            Coef::Poly(p) => Coef::Poly(p.neg()),
            Coef::Rat(r) => Coef::Rat(r.neg()),
        }
    }

    pub fn mul(&self, other: &Coef) -> Result<Coef> {
        match (self, other) {
            (Coef::Poly(a), Coef::Poly(b)) => Ok(Coef::Poly(a.mul(b)?)),
            (Coef::Rat(a), Coef::Rat(b)) => Ok(Coef::Rat(a.mul(b)?)),
            _ => Err(Error::AlgebraMismatch),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Result<Coef> {
        match self {
            Coef::Poly(p) => Ok(Coef::Poly(p.scale(c)?)),
            Coef::Rat(r) => Ok(Coef::Rat(r.scale(c)?)),
        }
    }

    pub fn inv(&self) -> Result<Coef> {
        match self {
            Coef::Poly(_) => Err(Error::DivisionByZero),
            Coef::Rat(r) => Ok(Coef::Rat(r.inv()?)),
        }
    }

    /// True iff self = alpha * other for some alpha in k.
    pub fn k_proportional(&self, other: &Coef) -> Result<bool> {
        let (a, b) = match (self, other) {
            (Coef::Poly(a), Coef::Poly(b)) => (a.clone(), b.clone()),
            (Coef::Rat(u), Coef::Rat(v)) => {
                // u = alpha v  <=>  u.num * v.den = alpha * v.num * u.den
                (u.num().mul(v.den())?, v.num().mul(u.den())?)
            }
            _ => return Err(Error::AlgebraMismatch),
        };
        if a.is_zero() && b.is_zero() {
            return Ok(true);
        }
        if a.is_zero() || b.is_zero() {
            return Ok(false);
        }
        let lhs = a.scale(&b.leading_coeff()?)?;
        let rhs = b.scale(&a.leading_coeff()?)?;
        Ok(lhs == rhs)
    }
}

/// Description of the ambient Ore ring: the ground field, the coefficient
/// ring, and sigma/delta via their images of y.
#[derive(Debug, Clone, PartialEq)]
pub struct OreAlgebra {
    field: FieldSpec,
    coeff_ring: CoeffRing,
    sigma_y: Poly,
    delta_y: Poly,
}

impl OreAlgebra {
    pub fn new(
        field: FieldSpec,
        coeff_ring: CoeffRing,
        sigma_y: Poly,
        delta_y: Poly,
    ) -> Result<OreAlgebra> {
        if sigma_y.field() != field || delta_y.field() != field {
            return Err(Error::FieldMismatch);
        }
        // sigma must be injective on R, so sigma(y) cannot be constant
        if sigma_y.degree() < Degree::Finite(1) {
            return Err(Error::InvalidAlgebra(
                "sigma(y) must have degree at least 1".into(),
            ));
        }
        Ok(OreAlgebra {
            field,
            coeff_ring,
            sigma_y,
            delta_y,
        })
    }

    /// The Weyl algebra k[y][x; id, d/dy]: sigma(y) = y, delta(y) = 1.
    pub fn weyl(field: FieldSpec, coeff_ring: CoeffRing) -> OreAlgebra {
        OreAlgebra::new(field, coeff_ring, Poly::gen(field), Poly::one(field))
            .expect("weyl preset is valid")
    }

    /// The q-Weyl algebra: sigma(y) = q*y, delta(y) = 1.
    pub fn q_weyl(field: FieldSpec, coeff_ring: CoeffRing, q: &Scalar) -> Result<OreAlgebra> {
        if q.field() != field {
            return Err(Error::FieldMismatch);
        }
        if q.is_zero() {
            return Err(Error::InvalidAlgebra("q must be nonzero".into()));
        }
        OreAlgebra::new(
            field,
            coeff_ring,
            Poly::monomial(q.clone(), 1),
            Poly::one(field),
        )
    }

    /// sigma(y) = p(y) with a configurable delta(y).
    pub fn power(
        field: FieldSpec,
        coeff_ring: CoeffRing,
        p: Poly,
        delta_y: Poly,
    ) -> Result<OreAlgebra> {
        OreAlgebra::new(field, coeff_ring, p, delta_y)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn coeff_ring(&self) -> CoeffRing {
        self.coeff_ring
    }

    pub fn sigma_y(&self) -> &Poly {
        &self.sigma_y
    }

    pub fn delta_y(&self) -> &Poly {
        &self.delta_y
    }

    pub fn coef_zero(&self) -> Coef {
        self.coef_from_poly(Poly::zero(self.field))
    }

    pub fn coef_one(&self) -> Coef {
        self.coef_from_poly(Poly::one(self.field))
    }

    pub fn coef_y(&self) -> Coef {
        self.coef_from_poly(Poly::gen(self.field))
    }

    pub fn coef_scalar(&self, c: &Scalar) -> Coef {
        self.coef_from_poly(Poly::constant(c.clone()))
    }

    pub fn coef_from_poly(&self, p: Poly) -> Coef {
        match self.coeff_ring {
            CoeffRing::PolyRing => Coef::Poly(p),
            CoeffRing::RationalFunctions => Coef::Rat(RatFunc::from_poly(p)),
        }
    }

    /// sigma(r): composition of every polynomial with sigma(y).
    pub fn apply_sigma(&self, r: &Coef) -> Result<Coef> {
        match r {
            Coef::Poly(p) => Ok(Coef::Poly(p.compose(&self.sigma_y)?)),
            Coef::Rat(f) => {
                let num = f.num().compose(&self.sigma_y)?;
                let den = f.den().compose(&self.sigma_y)?;
                Ok(Coef::Rat(RatFunc::new(num, den)?))
            }
        }
    }

    pub fn apply_sigma_pow(&self, r: &Coef, n: usize) -> Result<Coef> {
        let mut acc = r.clone();
        for _ in 0..n {
            acc = self.apply_sigma(&acc)?;
        }
        Ok(acc)
    }

    fn delta_poly(&self, p: &Poly) -> Result<Poly> {
        // delta(y^{j+1}) = sigma(y)*delta(y^j) + delta(y)*y^j
        let mut acc = Poly::zero(self.field);
        let mut delta_power = Poly::zero(self.field); // delta(y^0)
        for (j, c) in p.coeffs().iter().enumerate() {
            if j > 0 {
                let yj1 = Poly::monomial(Scalar::one(self.field), j - 1);
                delta_power = self
                    .sigma_y
                    .mul(&delta_power)?
                    .add(&self.delta_y.mul(&yj1)?)?;
            }
            if !c.is_zero() {
                acc = acc.add(&delta_power.scale(c)?)?;
            }
        }
        Ok(acc)
    }

    /// delta(r), extended to k(y) by the twisted quotient rule
    /// delta(f/g) = (delta(f) - sigma(f/g)*delta(g)) / g.
    pub fn apply_delta(&self, r: &Coef) -> Result<Coef> {
        match r {
            Coef::Poly(p) => Ok(Coef::Poly(self.delta_poly(p)?)),
            Coef::Rat(f) => {
                let dnum = RatFunc::from_poly(self.delta_poly(f.num())?);
                let dden = RatFunc::from_poly(self.delta_poly(f.den())?);
                let sigma_f = match self.apply_sigma(r)? {
                    Coef::Rat(s) => s,
                    Coef::Poly(_) => unreachable!(),
                };
                let num = dnum.sub(&sigma_f.mul(&dden)?)?;
                Ok(Coef::Rat(num.div(&RatFunc::from_poly(f.den().clone()))?))
            }
        }
    }

    /// r is a constant iff sigma(r) = r and delta(r) = 0.
    pub fn is_constant_coeff(&self, r: &Coef) -> Result<bool> {
        Ok(self.apply_sigma(r)? == *r && self.apply_delta(r)?.is_zero())
    }
}

/// Element of R[x;sigma,delta] in canonical left-coefficient form.
#[derive(Debug, Clone, PartialEq)]
pub struct OreElem {
    algebra: OreAlgebra,
    coeffs: Vec<Coef>,
}

impl OreElem {
    pub fn zero(algebra: &OreAlgebra) -> OreElem {
        OreElem {
            algebra: algebra.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(algebra: &OreAlgebra) -> OreElem {
        OreElem::from_coef(algebra, algebra.coef_one())
    }

    pub fn gen_x(algebra: &OreAlgebra) -> OreElem {
        OreElem::from_coeffs(algebra, vec![algebra.coef_zero(), algebra.coef_one()])
    }

    pub fn gen_y(algebra: &OreAlgebra) -> OreElem {
        OreElem::from_coef(algebra, algebra.coef_y())
    }

    pub fn from_coef(algebra: &OreAlgebra, c: Coef) -> OreElem {
        OreElem::from_coeffs(algebra, vec![c])
    }

    pub fn from_scalar(algebra: &OreAlgebra, c: &Scalar) -> OreElem {
        OreElem::from_coef(algebra, algebra.coef_scalar(c))
    }

    /// c * x^n as a monomial.
    pub fn monomial(algebra: &OreAlgebra, c: Coef, n: usize) -> OreElem {
        if c.is_zero() {
            return OreElem::zero(algebra);
        }
        let mut coeffs = vec![algebra.coef_zero(); n];
        coeffs.push(c);
        OreElem {
            algebra: algebra.clone(),
            coeffs,
        }
    }

    pub fn from_coeffs(algebra: &OreAlgebra, coeffs: Vec<Coef>) -> OreElem {
        let mut e = OreElem {
            algebra: algebra.clone(),
            coeffs,
        };
        e.trim();
        e
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn algebra(&self) -> &OreAlgebra {
        &self.algebra
    }

    pub fn coeffs(&self) -> &[Coef] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Coef {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.algebra.coef_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Degree {
        if self.coeffs.is_empty() {
            Degree::NegInf
        } else {
            Degree::Finite(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Result<Coef> {
        self.coeffs.last().cloned().ok_or(Error::ZeroElement)
    }

    fn check_algebra(&self, other: &OreElem) -> Result<()> {
        if self.algebra == other.algebra {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn add(&self, other: &OreElem) -> Result<OreElem> {
        self.check_algebra(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i).add(&other.coeff(i))?);
        }
        Ok(OreElem::from_coeffs(&self.algebra, coeffs))
    }

    pub fn sub(&self, other: &OreElem) -> Result<OreElem> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> OreElem {
        OreElem {
            algebra: self.algebra.clone(),
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    /// Left-scale by a coefficient: r * P.
    pub fn scale_left(&self, r: &Coef) -> Result<OreElem> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            coeffs.push(r.mul(c)?);
        }
        Ok(OreElem::from_coeffs(&self.algebra, coeffs))
    }

    /// x * self, one application of the rewriting rule.
    fn premul_x(&self) -> Result<OreElem> {
        let alg = &self.algebra;
        let mut coeffs = vec![alg.coef_zero(); self.coeffs.len() + 1];
        for (j, b) in self.coeffs.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            coeffs[j + 1] = coeffs[j + 1].add(&alg.apply_sigma(b)?)?;
            coeffs[j] = coeffs[j].add(&alg.apply_delta(b)?)?;
        }
        Ok(OreElem::from_coeffs(alg, coeffs))
    }

    pub fn mul(&self, other: &OreElem) -> Result<OreElem> {
        self.check_algebra(other)?;
        let mut acc = OreElem::zero(&self.algebra);
        // x^i * Q is built incrementally and shared across terms
        let mut xi_q = other.clone();
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                xi_q = xi_q.premul_x()?;
            }
            if !a.is_zero() {
                acc = acc.add(&xi_q.scale_left(a)?)?;
            }
        }
        Ok(acc)
    }

    pub fn pow(&self, e: usize) -> Result<OreElem> {
        let mut acc = OreElem::one(&self.algebra);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// PQ - QP.
    pub fn commutator(&self, other: &OreElem) -> Result<OreElem> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn commutes_with(&self, other: &OreElem) -> Result<bool> {
        Ok(self.commutator(other)?.is_zero())
    }

    /// True iff the element commutes with both generators x and y, which
    /// suffices since x, y generate S over k and k is fixed pointwise.
    pub fn is_central(&self) -> Result<bool> {
        let x = OreElem::gen_x(&self.algebra);
        let y = OreElem::gen_y(&self.algebra);
        Ok(self.commutes_with(&x)? && self.commutes_with(&y)?)
    }

    /// Largest y-degree among the (polynomial) coefficients.
    pub fn coeff_y_degree(&self) -> Degree {
        let mut d = Degree::NegInf;
        for c in &self.coeffs {
            let cd = match c {
                Coef::Poly(p) => p.degree(),
                Coef::Rat(r) => r.num().degree(),
            };
            if cd > d {
                d = cd;
            }
        }
        d
    }
}

impl fmt::Display for CoeffRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffRing::PolyRing => write!(f, "poly"),
            CoeffRing::RationalFunctions => write!(f, "ratfunc"),
        }
    }
}
