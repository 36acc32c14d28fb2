//! Canonical text rendering: parenthesized coefficients in descending
//! x-powers for Ore elements, graded-lex term order for bivariate
//! polynomials, and `--json` machine output.

use serde_json::json;

use crate::bivar::{BivarPoly, CoeffMode};
use crate::ore::{Coef, OreElem};
use crate::poly::{Poly, RatFunc};
use crate::scalar::{is_negative, Scalar};

fn power_str(var: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{}^{}", var, e),
    }
}

/// `3/2*y^2 - y + 1` style; sign splitting only applies over the
/// rationals, prime-field residues are always joined with `+`.
pub fn render_poly(p: &Poly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for i in (0..p.coeffs().len()).rev() {
        let c = p.coeff(i);
        if c.is_zero() {
            continue;
        }
        let (mag, neg) = if is_negative(&c) {
            (c.neg(), true)
        } else {
            (c, false)
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let pow = power_str("y", i);
        if pow.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&pow);
        } else {
            out.push_str(&format!("{}*{}", mag, pow));
        }
    }
    out
}

pub fn render_ratfunc(r: &RatFunc) -> String {
    match r.as_poly() {
        Some(p) => render_poly(p),
        None => format!("({})/({})", render_poly(r.num()), render_poly(r.den())),
    }
}

pub fn render_coef(c: &Coef) -> String {
    match c {
        Coef::Poly(p) => render_poly(p),
        Coef::Rat(r) => render_ratfunc(r),
    }
}

/// `(y^2 + 1)*x^3 + (2)*x + (1/2)`; the zero element renders as `(0)`.
pub fn render_ore(e: &OreElem) -> String {
    if e.is_zero() {
        return "(0)".into();
    }
    let mut parts = Vec::new();
    for i in (0..e.coeffs().len()).rev() {
        let c = e.coeff(i);
        if c.is_zero() {
            continue;
        }
        let pow = power_str("x", i);
        if pow.is_empty() {
            parts.push(format!("({})", render_coef(&c)));
        } else {
            parts.push(format!("({})*{}", render_coef(&c), pow));
        }
    }
    parts.join(" + ")
}

fn st_str(a: usize, b: usize) -> String {
    let s = power_str("s", a);
    let t = power_str("t", b);
    match (s.is_empty(), t.is_empty()) {
        (true, true) => String::new(),
        (false, true) => s,
        (true, false) => t,
        (false, false) => format!("{}*{}", s, t),
    }
}

/// Terms in descending graded-lex order: `s^3 - t^2`, `(y^2)*t - (y^4)`.
pub fn render_bivar(f: &BivarPoly) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut keys: Vec<(usize, usize)> = f.terms().keys().cloned().collect();
    keys.sort_by_key(|&(a, b)| (a + b, a));
    keys.reverse();
    let mut out = String::new();
    for (a, b) in keys {
        let c = &f.terms()[&(a, b)];
        let vars = st_str(a, b);
        match f.mode() {
            CoeffMode::Scalars => {
                let s = c.coeff(0);
                let (mag, neg) = if is_negative(&s) {
                    (s.neg(), true)
                } else {
                    (s, false)
                };
                if out.is_empty() {
                    if neg {
                        out.push('-');
                    }
                } else if neg {
                    out.push_str(" - ");
                } else {
                    out.push_str(" + ");
                }
                if vars.is_empty() {
                    out.push_str(&mag.to_string());
                } else if mag.is_one() {
                    out.push_str(&vars);
                } else {
                    out.push_str(&format!("{}*{}", mag, vars));
                }
            }
            CoeffMode::PolyCoeffs => {
                let lead_neg = c
                    .leading_coeff()
                    .map(|l| is_negative(&l))
                    .unwrap_or(false);
                let shown = if lead_neg { c.neg() } else { c.clone() };
                if out.is_empty() {
                    if lead_neg {
                        out.push('-');
                    }
                } else if lead_neg {
                    out.push_str(" - ");
                } else {
                    out.push_str(" + ");
                }
                if vars.is_empty() {
                    out.push_str(&format!("({})", render_poly(&shown)));
                } else if shown.is_one() {
                    out.push_str(&vars);
                } else {
                    out.push_str(&format!("({})*{}", render_poly(&shown), vars));
                }
            }
        }
    }
    out
}

/// Machine-readable element dump: decimal-free coefficient strings per
/// x-power, the degree (null for the zero element) and the algebra.
pub fn json_ore(e: &OreElem) -> serde_json::Value {
    let alg = e.algebra();
    let coeffs: Vec<Vec<String>> = e
        .coeffs()
        .iter()
        .map(|c| match c {
            Coef::Poly(p) => {
                if p.is_zero() {
                    vec!["0".to_string()]
                } else {
                    p.coeffs().iter().map(Scalar::to_string).collect()
                }
            }
            Coef::Rat(r) => vec![render_ratfunc(r)],
        })
        .collect();
    json!({
        "coeffs": coeffs,
        "degree": e.degree().finite(),
        "algebra": {
            "field": alg.field().to_string(),
            "coeff_ring": alg.coeff_ring().to_string(),
            "sigma": render_poly(alg.sigma_y()),
            "delta": render_poly(alg.delta_y()),
        },
    })
}
