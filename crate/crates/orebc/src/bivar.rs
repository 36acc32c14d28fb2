//! Commutative bivariate polynomials f(s,t) with coefficients in k or in
//! k[y], evaluated at commuting pairs of Ore elements.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ore::{OreElem};
use crate::poly::{Poly};
use crate::scalar::{FieldSpec, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoeffMode {
    /// Coefficients in the ground field k.
    Scalars,
    /// Coefficients in k[y].
    PolyCoeffs,
}

/// f(s,t) as a term map (s-power, t-power) -> coefficient. Coefficients
/// are stored as polynomials in y; in `Scalars` mode they are constant.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct BivarPoly {
    field: FieldSpec,
    mode: CoeffMode,
    terms: BTreeMap<(usize, usize), Poly>,
}

impl BivarPoly {
    pub fn zero(field: FieldSpec, mode: CoeffMode) -> BivarPoly {
        BivarPoly {
            field,
            mode,
            terms: BTreeMap::new(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn mode(&self) -> CoeffMode {
        self.mode
    }

    pub fn terms(&self) -> &BTreeMap<(usize, usize), Poly> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds c * s^a * t^b.
    pub fn add_term(&mut self, a: usize, b: usize, c: Poly) -> Result<()> {
        if c.field() != self.field {
            return Err(Error::FieldMismatch);
        }
        if self.mode == CoeffMode::Scalars && !c.is_constant() {
            return Err(Error::InvalidConfig(
                "scalar-mode bivariate polynomial with a nonconstant coefficient".into(),
            ));
        }
        let entry = match self.terms.remove(&(a, b)) {
            Some(old) => old.add(&c)?,
            None => c,
        };
        if !entry.is_zero() {
            self.terms.insert((a, b), entry);
        }
        Ok(())
    }

    pub fn scalar_term(field: FieldSpec, a: usize, b: usize, c: Scalar) -> Result<BivarPoly> {
        let mut f = BivarPoly::zero(field, CoeffMode::Scalars);
        f.add_term(a, b, Poly::constant(c))?;
        Ok(f)
    }

    pub fn add(&self, other: &BivarPoly) -> Result<BivarPoly> {
        let mut out = self.promote_to(other.mode)?;
        for ((a, b), c) in &other.terms {
            out.add_term(*a, *b, c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &BivarPoly) -> Result<BivarPoly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> BivarPoly {
        BivarPoly {
            field: self.field,
            mode: self.mode,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (*k, c.neg()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &BivarPoly) -> Result<BivarPoly> {
        let mode = if self.mode == CoeffMode::PolyCoeffs || other.mode == CoeffMode::PolyCoeffs {
            CoeffMode::PolyCoeffs
        } else {
            CoeffMode::Scalars
        };
        let mut out = BivarPoly::zero(self.field, mode);
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &other.terms {
                out.add_term(a1 + a2, b1 + b2, c1.mul(c2)?)?;
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: usize) -> Result<BivarPoly> {
        let mut acc = BivarPoly::zero(self.field, self.mode);
        acc.add_term(0, 0, Poly::one(self.field))?;
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    fn promote_to(&self, other_mode: CoeffMode) -> Result<BivarPoly> {
        let mode = if self.mode == CoeffMode::PolyCoeffs || other_mode == CoeffMode::PolyCoeffs {
            CoeffMode::PolyCoeffs
        } else {
            CoeffMode::Scalars
        };
        Ok(BivarPoly {
            field: self.field,
            mode,
            terms: self.terms.clone(),
        })
    }

    /// Switches to scalar mode when every coefficient is constant.
    pub fn collapse_mode(&self) -> BivarPoly {
        if self.mode == CoeffMode::PolyCoeffs && self.terms.values().all(|c| c.is_constant()) {
            BivarPoly {
                field: self.field,
                mode: CoeffMode::Scalars,
                terms: self.terms.clone(),
            }
        } else {
            self.clone()
        }
    }

    pub fn s_degree(&self) -> Option<usize> {
        self.terms.keys().map(|(a, _)| *a).max()
    }

    pub fn t_degree(&self) -> Option<usize> {
        self.terms.keys().map(|(_, b)| *b).max()
    }

    /// Leading term under graded lexicographic order (total degree first,
    /// then s-power).
    pub fn leading_term(&self) -> Option<((usize, usize), &Poly)> {
        self.terms
            .iter()
            .max_by_key(|((a, b), _)| (a + b, *a))
            .map(|(k, c)| (*k, c))
    }

    /// Canonical representative: scalar mode gets a unit leading
    /// coefficient, poly mode is made primitive with a monic leading
    /// polynomial.
    pub fn normalize(&self) -> Result<BivarPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        match self.mode {
            CoeffMode::Scalars => {
                let (_, lead) = self.leading_term().expect("nonzero");
                let inv = lead.leading_coeff()?.inv()?;
                let mut out = BivarPoly::zero(self.field, self.mode);
                for ((a, b), c) in &self.terms {
                    out.add_term(*a, *b, c.scale(&inv)?)?;
                }
                Ok(out)
            }
            CoeffMode::PolyCoeffs => {
                let mut content: Option<Poly> = None;
                for c in self.terms.values() {
                    content = Some(match content {
                        None => c.clone(),
                        Some(g) => g.gcd(c)?,
                    });
                }
                let content = content.expect("nonzero");
                let mut out = BivarPoly::zero(self.field, self.mode);
                for ((a, b), c) in &self.terms {
                    let (qq, r) = c.divrem(&content)?;
                    debug_assert!(r.is_zero());
                    out.add_term(*a, *b, qq)?;
                }
                let (_, lead) = out.leading_term().ok_or(Error::ZeroPolynomial)?;
                let inv = lead.leading_coeff()?.inv()?;
                let mut monic = BivarPoly::zero(self.field, self.mode);
                for ((a, b), c) in &out.terms {
                    monic.add_term(*a, *b, c.scale(&inv)?)?;
                }
                Ok(monic)
            }
        }
    }

    /// f(P,Q) with coefficients applied on the left: sum of r * P^a * Q^b.
    /// Requires P and Q to commute, which makes the value well-defined.
    pub fn eval(&self, p: &OreElem, q: &OreElem) -> Result<OreElem> {
        if p.algebra() != q.algebra() {
            return Err(Error::AlgebraMismatch);
        }
        if p.algebra().field() != self.field {
            return Err(Error::FieldMismatch);
        }
        if !p.commutes_with(q)? {
            return Err(Error::NotCommuting);
        }
        let alg = p.algebra().clone();
        let max_a = self.s_degree().unwrap_or(0);
        let max_b = self.t_degree().unwrap_or(0);
        let mut p_pows = Vec::with_capacity(max_a + 1);
        p_pows.push(OreElem::one(&alg));
        for _ in 0..max_a {
            p_pows.push(p_pows.last().unwrap().mul(p)?);
        }
        let mut q_pows = Vec::with_capacity(max_b + 1);
        q_pows.push(OreElem::one(&alg));
        for _ in 0..max_b {
            q_pows.push(q_pows.last().unwrap().mul(q)?);
        }
        let mut acc = OreElem::zero(&alg);
        for ((a, b), c) in &self.terms {
            let term = p_pows[*a]
                .mul(&q_pows[*b])?
                .scale_left(&alg.coef_from_poly(c.clone()))?;
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }
}
