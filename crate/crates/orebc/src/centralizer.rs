//! Truncated k-bases of the centralizer C_S(a) and its residue-class
//! module basis over F[a].
//!
//! The k-basis is the kernel of the linear map e -> [e, a] on the span of
//! the monomials y^c x^d within the degree bounds, expressed over the
//! ground field. The module basis picks, for each residue class of the
//! x-degree mod deg(a), the minimal-degree representative, starting from
//! p_0 = 1.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::ore::{Coef, CoeffRing, OreAlgebra, OreElem};
use crate::poly::{Degree, Poly};
use crate::scalar::Scalar;

/// Residue-class module basis data for C_S(a), truncated at the given
/// degree bounds.
#[derive(Debug, Clone)]
pub struct CentralizerBasis {
    pub element_a: OreElem,
    pub degree_bound_x: usize,
    pub degree_bound_y: usize,
    pub k_basis: Vec<OreElem>,
    /// residue i mod deg(a) -> minimal-degree representative p_i
    pub residue_classes: BTreeMap<usize, OreElem>,
}

impl CentralizerBasis {
    pub fn rank(&self) -> usize {
        self.residue_classes.len()
    }
}

/// Heuristic y-degree bound: the commutator of elements within the x-degree
/// bound has y-degree covered by (bx + deg a) * max(deg p, deg delta(y), 1).
pub fn default_y_bound(a: &OreElem, bx: usize) -> usize {
    let alg = a.algebra();
    let n = a.degree().finite().unwrap_or(0);
    let dp = alg.sigma_y().degree().finite().unwrap_or(0);
    let dd = alg.delta_y().degree().finite().unwrap_or(0);
    (bx + n) * dp.max(dd).max(1)
}

fn monomial_elem(alg: &OreAlgebra, c: usize, d: usize) -> OreElem {
    OreElem::monomial(
        alg,
        alg.coef_from_poly(Poly::monomial(Scalar::one(alg.field()), c)),
        d,
    )
}

fn poly_of(coef: &Coef) -> &Poly {
    match coef {
        Coef::Poly(p) => p,
        Coef::Rat(_) => unreachable!("poly coefficient ring checked"),
    }
}

/// k-basis of { e : deg_x e <= bx, coefficient y-degrees <= by, ea = ae }.
pub fn centralizer_kbasis(a: &OreElem, bx: usize, by: usize) -> Result<Vec<OreElem>> {
    if a.is_zero() {
        return Err(Error::ZeroElement);
    }
    let alg = a.algebra();
    if alg.coeff_ring() != CoeffRing::PolyRing {
        return Err(Error::InvalidAlgebra(
            "centralizer bases require the polynomial coefficient ring".into(),
        ));
    }
    // columns in ascending (x-power, y-power) order
    let mut monomials = Vec::with_capacity((bx + 1) * (by + 1));
    for d in 0..=bx {
        for c in 0..=by {
            monomials.push((c, d));
        }
    }
    let mut columns = Vec::with_capacity(monomials.len());
    for &(c, d) in &monomials {
        columns.push(monomial_elem(alg, c, d).commutator(a)?);
    }
    // row index set: every (x-power, y-power) appearing in some commutator
    let mut row_keys = Vec::new();
    for col in &columns {
        for (xp, coef) in col.coeffs().iter().enumerate() {
            for (yp, s) in poly_of(coef).coeffs().iter().enumerate() {
                if !s.is_zero() {
                    row_keys.push((xp, yp));
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

    let field = alg.field();
    let mut m = Matrix::zero(field, row_keys.len(), columns.len());
    for (j, col) in columns.iter().enumerate() {
        for (xp, coef) in col.coeffs().iter().enumerate() {
            for (yp, s) in poly_of(coef).coeffs().iter().enumerate() {
                if !s.is_zero() {
                    m.set(row_index[&(xp, yp)], j, s.clone());
                }
            }
        }
    }

    let mut basis = Vec::new();
    for v in m.kernel_basis()? {
        let mut e = OreElem::zero(alg);
        for (j, &(c, d)) in monomials.iter().enumerate() {
            if !v[j].is_zero() {
                let term = monomial_elem(alg, c, d)
                    .scale_left(&alg.coef_scalar(&v[j]))?;
                e = e.add(&term)?;
            }
        }
        basis.push(e);
    }
    Ok(basis)
}

/// True iff every pair of equal-x-degree elements has k-proportional
/// leading coefficients. All elements must commute with `a`.
pub fn leading_proportionality(a: &OreElem, elems: &[OreElem]) -> Result<bool> {
    let mut by_degree: BTreeMap<usize, Vec<&OreElem>> = BTreeMap::new();
    for e in elems {
        if !e.commutes_with(a)? {
            return Err(Error::NotInCentralizer);
        }
        if let Some(d) = e.degree().finite() {
            by_degree.entry(d).or_default().push(e);
        }
    }
    for group in by_degree.values() {
        let first = group[0].leading()?;
        for e in &group[1..] {
            if !e.leading()?.k_proportional(&first)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn scalar_ratio(b: &Coef, c: &Coef) -> Result<Scalar> {
    // b = alpha * c with alpha in k, both nonzero and k-proportional
    let bp = poly_of(b);
    let cp = poly_of(c);
    bp.leading_coeff()?.div(&cp.leading_coeff()?)
}

/// Computes residue-class representatives for C_S(a) as an F[a]-module,
/// following the constructive reduction e -> e - alpha a^q p_i.
///
/// When deg(sigma(y)) > 1 the leading-coefficient proportionality
/// hypothesis is a theorem and any violation is reported as an error;
/// otherwise reduction stops quietly where it does not apply.
pub fn module_basis(a: &OreElem, bx: usize, by: Option<usize>) -> Result<CentralizerBasis> {
    if a.is_zero() {
        return Err(Error::ZeroElement);
    }
    let n = match a.degree() {
        Degree::Finite(n) if n >= 1 => n,
        _ => return Err(Error::NotPositiveDegree),
    };
    let by = by.unwrap_or_else(|| default_y_bound(a, bx));
    let k_basis = centralizer_kbasis(a, bx, by)?;
    let alg = a.algebra();
    let strict = alg.sigma_y().degree() > Degree::Finite(1);

    let mut classes: BTreeMap<usize, OreElem> = BTreeMap::new();
    classes.insert(0, OreElem::one(alg));

    let mut sorted: Vec<&OreElem> = k_basis.iter().collect();
    sorted.sort_by_key(|e| e.degree());

    for e in sorted {
        let mut r = (*e).clone();
        loop {
            let Some(j) = r.degree().finite() else {
                break;
            };
            let i = j % n;
            match classes.get(&i) {
                None => {
                    classes.insert(i, r);
                    break;
                }
                Some(p_i) => {
                    let m = p_i.degree().finite().expect("representatives are nonzero");
                    if m > j {
                        break;
                    }
                    let qexp = (j - m) / n;
                    let aq = a.pow(qexp)?.mul(p_i)?;
                    let lr = r.leading()?;
                    let la = aq.leading()?;
                    if !lr.k_proportional(&la)? {
                        if strict {
                            return Err(Error::HypothesisViolated);
                        }
                        break;
                    }
                    let alpha = scalar_ratio(&lr, &la)?;
                    r = r.sub(&aq.scale_left(&alg.coef_scalar(&alpha))?)?;
                }
            }
        }
    }

    Ok(CentralizerBasis {
        element_a: a.clone(),
        degree_bound_x: bx,
        degree_bound_y: by,
        k_basis,
        residue_classes: classes,
    })
}
