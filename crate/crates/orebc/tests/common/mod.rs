//! Shared helpers for the integration suites: a deterministic RNG, random
//! element generators, and a brute-force rewrite oracle that multiplies
//! Ore elements without going through the library's product code.

#![allow(dead_code)]

use orebc::ore::{Coef, CoeffRing, OreAlgebra, OreElem};
use orebc::poly::Poly;
use orebc::scalar::{FieldSpec, Scalar};

/// Deterministic xorshift generator so test runs are reproducible.
pub struct Xs {
    state: u64,
}

impl Xs {
    pub fn new(seed: u64) -> Xs {
        Xs {
            state: seed | 1,
        }
    }

    pub fn next(&mut self) -> u64 {
        self.state ^= self.state << 13;
        self.state ^= self.state >> 7;
        self.state ^= self.state << 17;
        self.state
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }

    pub fn small_int(&mut self, bound: i64) -> i64 {
        (self.next() % (2 * bound as u64 + 1)) as i64 - bound
    }

    pub fn scalar(&mut self, field: FieldSpec) -> Scalar {
        match field {
            FieldSpec::Rationals => Scalar::from_integer(field, self.small_int(5)),
            FieldSpec::PrimeField(p) => Scalar::from_integer(field, self.below(p) as i64),
        }
    }

    pub fn nonzero_scalar(&mut self, field: FieldSpec) -> Scalar {
        loop {
            let s = self.scalar(field);
            if !s.is_zero() {
                return s;
            }
        }
    }

    pub fn poly(&mut self, field: FieldSpec, max_deg: usize) -> Poly {
        let deg = self.below(max_deg as u64 + 1) as usize;
        let coeffs = (0..=deg).map(|_| self.scalar(field)).collect();
        Poly::from_coeffs(field, coeffs).unwrap()
    }

    pub fn nonzero_poly(&mut self, field: FieldSpec, max_deg: usize) -> Poly {
        loop {
            let p = self.poly(field, max_deg);
            if !p.is_zero() {
                return p;
            }
        }
    }

    pub fn elem(&mut self, alg: &OreAlgebra, max_dx: usize, max_dy: usize) -> OreElem {
        let dx = self.below(max_dx as u64 + 1) as usize;
        let coeffs = (0..=dx)
            .map(|_| alg.coef_from_poly(self.poly(alg.field(), max_dy)))
            .collect();
        OreElem::from_coeffs(alg, coeffs)
    }

    pub fn nonzero_elem(&mut self, alg: &OreAlgebra, max_dx: usize, max_dy: usize) -> OreElem {
        loop {
            let e = self.elem(alg, max_dx, max_dy);
            if !e.is_zero() {
                return e;
            }
        }
    }
}

/// The standard algebras the randomized suites sweep over.
pub fn presets(ring: CoeffRing) -> Vec<(String, OreAlgebra)> {
    let q = FieldSpec::Rationals;
    let two = Scalar::from_integer(q, 2);
    let minus_one = Scalar::from_integer(q, -1);
    let y_sq = Poly::monomial(Scalar::one(q), 2);
    let mut out = vec![
        ("weyl".to_string(), OreAlgebra::weyl(q, ring)),
        (
            "qweyl(2)".to_string(),
            OreAlgebra::q_weyl(q, ring, &two).unwrap(),
        ),
        (
            "qweyl(-1)".to_string(),
            OreAlgebra::q_weyl(q, ring, &minus_one).unwrap(),
        ),
    ];
    for (tag, d) in [
        ("0", Poly::zero(q)),
        ("1", Poly::one(q)),
        ("y", Poly::gen(q)),
    ] {
        out.push((
            format!("power(y^2), delta={}", tag),
            OreAlgebra::power(q, ring, y_sq.clone(), d).unwrap(),
        ));
    }
    out
}

/// g(W) for a scalar polynomial g, by Horner.
pub fn apply_scalar_poly(g: &Poly, w: &OreElem) -> OreElem {
    let alg = w.algebra();
    let mut out = OreElem::zero(alg);
    for c in g.coeffs().iter().rev() {
        out = out.mul(w).unwrap();
        out = out.add(&OreElem::from_scalar(alg, c)).unwrap();
    }
    out
}

// The oracle works on raw coefficient grids: grid[d][c] is the scalar on
// y^c x^d. All polynomial arithmetic below is spelled out on Vec<Scalar>
// so nothing is borrowed from the library's Poly or OreElem code.

pub type Pv = Vec<Scalar>;
pub type Grid = Vec<Pv>;

fn pv_trim(mut v: Pv) -> Pv {
    while v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
    v
}

pub fn pv_add(a: &Pv, b: &Pv) -> Pv {
    let field = a
        .first()
        .or(b.first())
        .map(|s| s.field())
        .unwrap_or(FieldSpec::Rationals);
    let n = a.len().max(b.len());
    let zero = Scalar::zero(field);
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).unwrap_or(&zero);
        let y = b.get(i).unwrap_or(&zero);
        out.push(x.add(y).unwrap());
    }
    pv_trim(out)
}

pub fn pv_mul(a: &Pv, b: &Pv) -> Pv {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let field = a[0].field();
    let mut out = vec![Scalar::zero(field); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&x.mul(y).unwrap()).unwrap();
        }
    }
    pv_trim(out)
}

pub fn pv_pow(a: &Pv, e: usize) -> Pv {
    let mut out = match a.first() {
        Some(s) => vec![Scalar::one(s.field())],
        None => {
            if e == 0 {
                panic!("0^0 in oracle");
            }
            return Vec::new();
        }
    };
    for _ in 0..e {
        out = pv_mul(&out, a);
    }
    out
}

/// Substitution r(sigma(y)) by Horner evaluation.
pub fn pv_sigma(r: &Pv, sigma: &Pv) -> Pv {
    let mut out: Pv = Vec::new();
    for c in r.iter().rev() {
        out = pv_mul(&out, sigma);
        out = pv_add(&out, &vec![c.clone()]);
    }
    out
}

/// delta(y^j) expanded as sum_{i<j} sigma(y)^i * delta(y) * y^(j-1-i),
/// then extended additively to all of r.
pub fn pv_delta(r: &Pv, sigma: &Pv, delta: &Pv) -> Pv {
    let mut out: Pv = Vec::new();
    for (j, c) in r.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut dj: Pv = Vec::new();
        for i in 0..j {
            let mut term = pv_pow(sigma, i);
            term = pv_mul(&term, delta);
            let mut ypow = vec![Scalar::zero(c.field()); j - 1 - i];
            ypow.push(Scalar::one(c.field()));
            term = pv_mul(&term, &ypow);
            dj = pv_add(&dj, &term);
        }
        out = pv_add(&out, &pv_mul(&vec![c.clone()], &dj));
    }
    out
}

fn grid_trim(mut g: Grid) -> Grid {
    while g.last().map(|p| p.is_empty()).unwrap_or(false) {
        g.pop();
    }
    g
}

pub fn grid_add(a: &Grid, b: &Grid) -> Grid {
    let n = a.len().max(b.len());
    let empty: Pv = Vec::new();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        out.push(pv_add(a.get(i).unwrap_or(&empty), b.get(i).unwrap_or(&empty)));
    }
    grid_trim(out)
}

pub fn grid_neg(a: &Grid) -> Grid {
    a.iter()
        .map(|p| p.iter().map(|c| c.neg()).collect())
        .collect()
}

pub fn grid_sub(a: &Grid, b: &Grid) -> Grid {
    grid_add(a, &grid_neg(b))
}

/// One application of the rewrite rule: x * (sum r_d x^d) =
/// sum sigma(r_d) x^(d+1) + sum delta(r_d) x^d.
fn grid_premul_x(g: &Grid, sigma: &Pv, delta: &Pv) -> Grid {
    let mut out: Grid = vec![Vec::new(); g.len() + 1];
    for (d, r) in g.iter().enumerate() {
        out[d + 1] = pv_add(&out[d + 1], &pv_sigma(r, sigma));
        out[d] = pv_add(&out[d], &pv_delta(r, sigma, delta));
    }
    grid_trim(out)
}

/// Brute-force product: pushes x across coefficients one power at a time.
pub fn oracle_mul(a: &Grid, b: &Grid, sigma: &Pv, delta: &Pv) -> Grid {
    let mut out: Grid = Vec::new();
    let mut xd_b = b.clone();
    for (d, r) in a.iter().enumerate() {
        if d > 0 {
            xd_b = grid_premul_x(&xd_b, sigma, delta);
        }
        if r.is_empty() {
            continue;
        }
        let shifted: Grid = xd_b.iter().map(|p| pv_mul(r, p)).collect();
        out = grid_add(&out, &shifted);
    }
    out
}

pub fn to_pv(p: &Poly) -> Pv {
    p.coeffs().to_vec()
}

pub fn to_grid(e: &OreElem) -> Grid {
    let g = e
        .coeffs()
        .iter()
        .map(|c| match c {
            Coef::Poly(p) => to_pv(p),
            Coef::Rat(_) => panic!("oracle handles polynomial coefficients only"),
        })
        .collect();
    grid_trim(g)
}

pub fn oracle_mul_elems(a: &OreElem, b: &OreElem) -> Grid {
    let alg = a.algebra();
    oracle_mul(
        &to_grid(a),
        &to_grid(b),
        &to_pv(alg.sigma_y()),
        &to_pv(alg.delta_y()),
    )
}

/// Row rank by plain Gaussian elimination; kept separate from the
/// library's matrix code on purpose.
pub fn brute_rank(mut rows: Vec<Vec<Scalar>>) -> usize {
    let cols = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    let mut rank = 0;
    for c in 0..cols {
        let pivot = (rank..rows.len())
            .find(|&r| rows[r].get(c).map(|v| !v.is_zero()).unwrap_or(false));
        let Some(p) = pivot else { continue };
        rows.swap(rank, p);
        let inv = rows[rank][c].inv().unwrap();
        for r in 0..rows.len() {
            if r == rank || rows[r].get(c).map(|v| v.is_zero()).unwrap_or(true) {
                continue;
            }
            let factor = rows[r][c].mul(&inv).unwrap();
            for j in c..rows[r].len().min(rows[rank].len()) {
                let delta = factor.mul(&rows[rank][j]).unwrap();
                rows[r][j] = rows[r][j].sub(&delta).unwrap();
            }
        }
        rank += 1;
    }
    rank
}

/// Dimension of the truncated centralizer of `a`, built coefficient by
/// coefficient from the equation e*a = a*e using the oracle product.
pub fn brute_centralizer_dim(a: &OreElem, bx: usize, by: usize) -> usize {
    let alg = a.algebra();
    let field = alg.field();
    let sigma = to_pv(alg.sigma_y());
    let delta = to_pv(alg.delta_y());
    let a_grid = to_grid(a);

    let mut commutator_grids = Vec::new();
    for d in 0..=bx {
        for c in 0..=by {
            let mut mono: Grid = vec![Vec::new(); d + 1];
            let mut pv = vec![Scalar::zero(field); c];
            pv.push(Scalar::one(field));
            mono[d] = pv;
            let g = grid_sub(
                &oracle_mul(&mono, &a_grid, &sigma, &delta),
                &oracle_mul(&a_grid, &mono, &sigma, &delta),
            );
            commutator_grids.push(g);
        }
    }

    let max_d = commutator_grids.iter().map(Vec::len).max().unwrap_or(0);
    let max_c = commutator_grids
        .iter()
        .flat_map(|g| g.iter().map(Vec::len))
        .max()
        .unwrap_or(0);
    let mut rows = Vec::new();
    for d in 0..max_d {
        for c in 0..max_c {
            let row: Vec<Scalar> = commutator_grids
                .iter()
                .map(|g| {
                    g.get(d)
                        .and_then(|p| p.get(c))
                        .cloned()
                        .unwrap_or_else(|| Scalar::zero(field))
                })
                .collect();
            rows.push(row);
        }
    }
    let unknowns = commutator_grids.len();
    unknowns - brute_rank(rows)
}
