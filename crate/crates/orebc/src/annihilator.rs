//! Burchnall-Chaundy search: find a nonzero f(s,t), over k or over k[y],
//! with f(P,Q) = 0 for a commuting pair (P,Q).
//!
//! The search builds the matrix whose columns are the canonical-basis
//! expansions of y^c P^a Q^b and returns the first kernel vector. A
//! NotFound outcome only means the bounds were exhausted; it is not a
//! proof of algebraic independence.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::bivar::{BivarPoly, CoeffMode};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::ore::{Coef, CoeffRing, OreElem};
use crate::poly::Poly;
use crate::scalar::{FieldSpec, Scalar};

/// Degree bounds of a search: s-power, t-power and coefficient y-degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub max_s: usize,
    pub max_t: usize,
    pub max_y: usize,
}

/// Result of a scheduled search, reporting the bounds actually used.
#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub found: Option<BivarPoly>,
    pub bounds: Bounds,
}

fn lcm_poly(a: &Poly, b: &Poly) -> Result<Poly> {
    if a.is_zero() || b.is_zero() {
        return Ok(Poly::zero(a.field()));
    }
    let g = a.gcd(b)?;
    let (q, _) = a.divrem(&g)?;
    q.mul(b)?.monic()
}

/// Clears denominators: returns the polynomial coefficient lists of each
/// element after multiplying every element by the least common denominator.
/// Scaling all columns by the same nonzero factor preserves the kernel.
fn polynomial_columns(elems: &[OreElem]) -> Result<Vec<Vec<Poly>>> {
    let ring = match elems.first() {
        Some(e) => e.algebra().coeff_ring(),
        None => return Ok(Vec::new()),
    };
    match ring {
        CoeffRing::PolyRing => Ok(elems
            .iter()
            .map(|e| {
                e.coeffs()
                    .iter()
                    .map(|c| match c {
                        Coef::Poly(p) => p.clone(),
                        Coef::Rat(_) => unreachable!(),
                    })
                    .collect()
            })
            .collect()),
        CoeffRing::RationalFunctions => {
            let field = elems[0].algebra().field();
            let mut common = Poly::one(field);
            for e in elems {
                for c in e.coeffs() {
                    if let Coef::Rat(r) = c {
                        common = lcm_poly(&common, r.den())?;
                    }
                }
            }
            let mut out = Vec::with_capacity(elems.len());
            for e in elems {
                let mut coeffs = Vec::with_capacity(e.coeffs().len());
                for c in e.coeffs() {
                    let Coef::Rat(r) = c else { unreachable!() };
                    if r.is_zero() {
                        coeffs.push(Poly::zero(field));
                    } else {
                        let (cofactor, rem) = common.divrem(r.den())?;
                        debug_assert!(rem.is_zero());
                        coeffs.push(r.num().mul(&cofactor)?);
                    }
                }
                out.push(coeffs);
            }
            Ok(out)
        }
    }
}

fn make_primitive_scalar(f: &BivarPoly) -> Result<BivarPoly> {
    if f.field() != FieldSpec::Rationals {
        return Ok(f.clone());
    }
    let mut den_lcm = BigInt::one();
    let mut num_gcd = BigInt::zero();
    for c in f.terms().values() {
        let r = c
            .leading_coeff()?
            .as_rational()
            .expect("rational field")
            .clone();
        den_lcm = den_lcm.lcm(r.denom());
        num_gcd = num_gcd.gcd(r.numer());
    }
    if num_gcd.is_zero() {
        return Ok(f.clone());
    }
    // den_lcm and num_gcd are positive, so scaling preserves the sign of
    // the kernel normalization (first stored coefficient positive)
    let factor = Scalar::from_ratio(f.field(), den_lcm, num_gcd)?;
    let mut out = BivarPoly::zero(f.field(), f.mode());
    for ((a, b), c) in f.terms() {
        out.add_term(*a, *b, c.scale(&factor)?)?;
    }
    Ok(out)
}

fn make_primitive_poly(f: &BivarPoly) -> Result<BivarPoly> {
    let mut content: Option<Poly> = None;
    for c in f.terms().values() {
        content = Some(match content {
            None => c.clone(),
            Some(g) => g.gcd(c)?,
        });
    }
    let Some(content) = content else {
        return Ok(f.clone());
    };
    let mut out = BivarPoly::zero(f.field(), f.mode());
    for ((a, b), c) in f.terms() {
        let (q, r) = c.divrem(&content)?;
        debug_assert!(r.is_zero());
        out.add_term(*a, *b, q)?;
    }
    Ok(out)
}

/// Kernel search for an annihilating polynomial within fixed bounds.
/// Columns are ordered by (y-power, s-power, t-power) lexicographically
/// and the first normalized kernel vector is returned, made primitive.
pub fn annihilate(
    p: &OreElem,
    q: &OreElem,
    mode: CoeffMode,
    max_s: usize,
    max_t: usize,
    max_y: usize,
) -> Result<Option<BivarPoly>> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroElement);
    }
    if p.algebra() != q.algebra() {
        return Err(Error::AlgebraMismatch);
    }
    if !p.commutes_with(q)? {
        return Err(Error::NotCommuting);
    }
    let alg = p.algebra().clone();
    let field = alg.field();
    let max_y = match mode {
        CoeffMode::Scalars => 0,
        CoeffMode::PolyCoeffs => max_y,
    };

    let mut p_pows = vec![OreElem::one(&alg)];
    for _ in 0..max_s {
        p_pows.push(p_pows.last().unwrap().mul(p)?);
    }
    let mut q_pows = vec![OreElem::one(&alg)];
    for _ in 0..max_t {
        q_pows.push(q_pows.last().unwrap().mul(q)?);
    }

    let mut keys = Vec::new();
    let mut columns = Vec::new();
    for c in 0..=max_y {
        let yc = alg.coef_from_poly(Poly::monomial(Scalar::one(field), c));
        for a in 0..=max_s {
            for b in 0..=max_t {
                let pq = p_pows[a].mul(&q_pows[b])?;
                columns.push(pq.scale_left(&yc)?);
                keys.push((c, a, b));
            }
        }
    }

    let poly_cols = polynomial_columns(&columns)?;

    // rows indexed by (y-power, x-power) of the canonical basis
    let mut row_keys = Vec::new();
    for col in &poly_cols {
        for (xp, cp) in col.iter().enumerate() {
            for (yp, s) in cp.coeffs().iter().enumerate() {
                if !s.is_zero() {
                    row_keys.push((yp, xp));
                }
            }
        }
    }
    row_keys.sort_unstable();
    row_keys.dedup();
    let row_index: BTreeMap<(usize, usize), usize> = row_keys
        .iter()
        .enumerate()
        .map(|(i, &k)| (k, i))
        .collect();

    let mut m = Matrix::zero(field, row_keys.len(), poly_cols.len());
    for (j, col) in poly_cols.iter().enumerate() {
        for (xp, cp) in col.iter().enumerate() {
            for (yp, s) in cp.coeffs().iter().enumerate() {
                if !s.is_zero() {
                    m.set(row_index[&(yp, xp)], j, s.clone());
                }
            }
        }
    }

    let kernel = m.kernel_basis()?;
    let Some(v) = kernel.first() else {
        return Ok(None);
    };

    let mut f = BivarPoly::zero(field, mode);
    for (j, &(c, a, b)) in keys.iter().enumerate() {
        if !v[j].is_zero() {
            f.add_term(a, b, Poly::monomial(v[j].clone(), c))?;
        }
    }
    debug_assert!(!f.is_zero());
    let f = match mode {
        CoeffMode::Scalars => make_primitive_scalar(&f)?,
        CoeffMode::PolyCoeffs => make_primitive_poly(&f)?,
    };
    Ok(Some(f))
}

/// True iff f(P,Q) = 0. The commutation hypothesis is checked eagerly.
pub fn verify(f: &BivarPoly, p: &OreElem, q: &OreElem) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(f.eval(p, q)?.is_zero())
}

/// Doubling bound schedule starting from (deg Q, deg P), capped. The cap
/// can be raised via the CLI's OREBC_MAX_CAP environment variable.
pub const DEFAULT_BOUND_CAP: usize = 16;

pub fn annihilate_scheduled(
    p: &OreElem,
    q: &OreElem,
    mode: CoeffMode,
    cap: usize,
) -> Result<SearchOutcome> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroElement);
    }
    let deg_p = p.degree().finite().unwrap_or(0);
    let deg_q = q.degree().finite().unwrap_or(0);
    let mut s = deg_q.max(1).min(cap);
    let mut t = deg_p.max(1).min(cap);
    let mut y = match mode {
        CoeffMode::Scalars => 0,
        CoeffMode::PolyCoeffs => {
            let py = p.coeff_y_degree().finite().unwrap_or(0);
            let qy = q.coeff_y_degree().finite().unwrap_or(0);
            py.max(qy).max(1).min(cap)
        }
    };
    loop {
        if let Some(f) = annihilate(p, q, mode, s, t, y)? {
            return Ok(SearchOutcome {
                found: Some(f),
                bounds: Bounds {
                    max_s: s,
                    max_t: t,
                    max_y: y,
                },
            });
        }
        let at_cap = s >= cap && t >= cap && (mode == CoeffMode::Scalars || y >= cap);
        if at_cap {
            return Ok(SearchOutcome {
                found: None,
                bounds: Bounds {
                    max_s: s,
                    max_t: t,
                    max_y: y,
                },
            });
        }
        s = (s * 2).min(cap);
        t = (t * 2).min(cap);
        if mode == CoeffMode::PolyCoeffs {
            y = (y * 2).min(cap);
        }
    }
}
