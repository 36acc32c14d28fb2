//! End-to-end checks, one test per criterion, each reporting a pass line.

mod common;

use common::{apply_scalar_poly, brute_centralizer_dim, oracle_mul_elems, presets, to_grid, Xs};
use orebc::annihilator::{annihilate, verify};
use orebc::bivar::CoeffMode;
use orebc::centralizer::{centralizer_kbasis, default_y_bound, leading_proportionality, module_basis};
use orebc::cli::run;
use orebc::ore::{Coef, CoeffRing, OreAlgebra, OreElem};
use orebc::parse::{eval_bivar_expr, eval_expr, parse_expr};
use orebc::poly::{check_functional_eq, Poly, RatFunc};
use orebc::scalar::{FieldSpec, Scalar};

fn q() -> FieldSpec {
    FieldSpec::Rationals
}

fn elem(src: &str, alg: &OreAlgebra) -> OreElem {
    eval_expr(&parse_expr(src).unwrap(), alg).unwrap()
}

#[test]
fn a01_heisenberg_relation() {
    let w = OreAlgebra::weyl(q(), CoeffRing::PolyRing);
    let x = OreElem::gen_x(&w);
    let y = OreElem::gen_y(&w);
    assert_eq!(x.commutator(&y).unwrap(), OreElem::one(&w));

    let x2 = x.pow(2).unwrap();
    let lib = x2.mul(&y).unwrap().sub(&y.mul(&x2).unwrap()).unwrap();
    assert_eq!(lib, elem("2*x", &w));
    let oracle = common::grid_sub(&oracle_mul_elems(&x2, &y), &oracle_mul_elems(&y, &x2));
    assert_eq!(oracle, to_grid(&elem("2*x", &w)));
    println!("[PASS] 01 Heisenberg relation: [x,y] = 1 and x^2 y - y x^2 = 2x");
}

#[test]
fn a02_sigma_leibniz() {
    let mut rng = Xs::new(211);
    for (name, alg) in presets(CoeffRing::PolyRing) {
        for _ in 0..500 {
            let r = alg.coef_from_poly(rng.poly(q(), 5));
            let s = alg.coef_from_poly(rng.poly(q(), 5));
            let left = alg.apply_delta(&r.mul(&s).unwrap()).unwrap();
            let right = alg
                .apply_sigma(&r)
                .unwrap()
                .mul(&alg.apply_delta(&s).unwrap())
                .unwrap()
                .add(&alg.apply_delta(&r).unwrap().mul(&s).unwrap())
                .unwrap();
            assert_eq!(left, right, "Leibniz failed in {}", name);
        }
    }
    println!("[PASS] 02 sigma-Leibniz rule holds on 500 random pairs per preset");
}

#[test]
fn a03_degree_formula() {
    let mut rng = Xs::new(223);
    for (name, alg) in presets(CoeffRing::PolyRing) {
        for _ in 0..500 {
            let a = rng.nonzero_elem(&alg, 3, 2);
            let b = rng.nonzero_elem(&alg, 3, 2);
            let da = a.degree().finite().unwrap();
            let db = b.degree().finite().unwrap();
            assert_eq!(
                a.mul(&b).unwrap().degree().finite().unwrap(),
                da + db,
                "degree formula failed in {}",
                name
            );
        }
    }
    println!("[PASS] 03 deg(PQ) = deg P + deg Q on 500 random pairs per preset");
}

#[test]
fn a04_leading_coefficient_equation() {
    let mut rng = Xs::new(227);
    let mut checked = 0;
    let algebras = presets(CoeffRing::PolyRing);
    while checked < 100 {
        for (name, alg) in &algebras {
            let w = loop {
                let w = rng.nonzero_elem(alg, 2, 1);
                if w.degree().finite().unwrap() >= 1 {
                    break w;
                }
            };
            let g = rng.nonzero_poly(q(), 2);
            let h = rng.nonzero_poly(q(), 2);
            let p = apply_scalar_poly(&g, &w);
            let qq = apply_scalar_poly(&h, &w);
            if p.is_zero() || qq.is_zero() {
                continue;
            }
            assert!(p.commutes_with(&qq).unwrap());
            let n = p.degree().finite().unwrap();
            let m = qq.degree().finite().unwrap();
            let a_n = p.leading().unwrap();
            let b_m = qq.leading().unwrap();
            let left = a_n.mul(&alg.apply_sigma_pow(&b_m, n).unwrap()).unwrap();
            let right = b_m.mul(&alg.apply_sigma_pow(&a_n, m).unwrap()).unwrap();
            assert_eq!(left, right, "leading equation failed in {}", name);
            checked += 1;
        }
    }
    println!(
        "[PASS] 04 a_n sigma^n(b_m) = b_m sigma^m(a_n) on {} commuting pairs",
        checked
    );
}

#[test]
fn a05_root_of_unity_dichotomy() {
    let minus_one = Scalar::from_integer(q(), -1);
    let alg = OreAlgebra::q_weyl(q(), CoeffRing::PolyRing, &minus_one).unwrap();
    let x2 = elem("x^2", &alg);
    let y2 = elem("y^2", &alg);
    assert!(x2.commutes_with(&y2).unwrap());

    let scalar_search = annihilate(&x2, &y2, CoeffMode::Scalars, 4, 4, 0).unwrap();
    assert!(scalar_search.is_none());

    let f = annihilate(&x2, &y2, CoeffMode::PolyCoeffs, 1, 1, 2)
        .unwrap()
        .expect("polynomial-coefficient annihilator exists");
    assert!(verify(&f, &x2, &y2).unwrap());
    let want = eval_bivar_expr(&parse_expr("t - y^2").unwrap(), q()).unwrap();
    assert_eq!(f.normalize().unwrap(), want);
    println!("[PASS] 05 q = -1: no scalar annihilator of (x^2, y^2), over R it is t - y^2");
}

#[test]
fn a06_annihilator_soundness_and_shape() {
    let w = OreAlgebra::weyl(q(), CoeffRing::PolyRing);
    let p = elem("x^2", &w);
    let qq = elem("x^3", &w);
    let f = annihilate(&p, &qq, CoeffMode::Scalars, 3, 2, 0)
        .unwrap()
        .expect("annihilator of (x^2, x^3) exists");
    assert!(verify(&f, &p, &qq).unwrap());
    let want = eval_bivar_expr(&parse_expr("s^3 - t^2").unwrap(), q()).unwrap();
    assert_eq!(f.normalize().unwrap(), want);

    let mut rng = Xs::new(229);
    let y_sq = Poly::monomial(Scalar::one(q()), 2);
    let deltas = [Poly::zero(q()), Poly::one(q()), Poly::gen(q())];
    let mut found = 0;
    while found < 20 {
        let d = deltas[rng.below(3) as usize].clone();
        let alg = OreAlgebra::power(q(), CoeffRing::PolyRing, y_sq.clone(), d).unwrap();
        let w = loop {
            let w = rng.nonzero_elem(&alg, 1, 1);
            if w.degree().finite().unwrap() >= 1 {
                break w;
            }
        };
        let g = loop {
            let g = rng.poly(q(), 2);
            if g.degree().finite().unwrap_or(0) >= 1 {
                break g;
            }
        };
        let h = loop {
            let h = rng.poly(q(), 2);
            if h.degree().finite().unwrap_or(0) >= 1 {
                break h;
            }
        };
        let p = apply_scalar_poly(&g, &w);
        let qq = apply_scalar_poly(&h, &w);
        let max_s = h.degree().finite().unwrap();
        let max_t = g.degree().finite().unwrap();
        let f = annihilate(&p, &qq, CoeffMode::Scalars, max_s, max_t, 0)
            .unwrap()
            .expect("pairs built from a common element are annihilated");
        assert!(verify(&f, &p, &qq).unwrap());
        found += 1;
    }
    println!("[PASS] 06 annihilate(x^2, x^3) = s^3 - t^2; 20 random (g(W), h(W)) pairs sound");
}

#[test]
fn a07_centralizer_rank_bound() {
    let w = OreAlgebra::weyl(q(), CoeffRing::PolyRing);
    let qm = OreAlgebra::q_weyl(
        q(),
        CoeffRing::PolyRing,
        &Scalar::from_integer(q(), -1),
    )
    .unwrap();
    let pw = OreAlgebra::power(
        q(),
        CoeffRing::PolyRing,
        Poly::monomial(Scalar::one(q()), 2),
        Poly::one(q()),
    )
    .unwrap();
    let cases = [
        elem("x", &w),
        elem("x^2", &w),
        elem("y*x^2", &w),
        elem("x^2", &qm),
        elem("x", &pw),
    ];
    for a in &cases {
        let n = a.degree().finite().unwrap();
        let mb = module_basis(a, 3 * n, None).unwrap();
        assert!(mb.rank() <= n, "rank {} exceeds degree {}", mb.rank(), n);
        for p in mb.residue_classes.values() {
            assert!(p.commutes_with(a).unwrap());
        }
    }
    println!("[PASS] 07 residue-class count <= deg a on all five sample elements");
}

#[test]
fn a08_leading_proportionality() {
    for deg_p in [2usize, 3] {
        let alg = OreAlgebra::power(
            q(),
            CoeffRing::PolyRing,
            Poly::monomial(Scalar::one(q()), deg_p),
            Poly::one(q()),
        )
        .unwrap();
        for a_src in ["x", "x^2"] {
            let a = elem(a_src, &alg);
            let by = default_y_bound(&a, 3);
            let basis = centralizer_kbasis(&a, 3, by).unwrap();
            assert!(
                leading_proportionality(&a, &basis).unwrap(),
                "proportionality failed for {} with deg p = {}",
                a_src,
                deg_p
            );
        }
    }

    let mut rng = Xs::new(233);
    for _ in 0..100 {
        let g = rng.nonzero_poly(q(), 4);
        let alpha = rng.nonzero_scalar(q());
        let p = loop {
            let p = rng.poly(q(), 3);
            if p.degree().finite().unwrap_or(0) > 1 {
                break p;
            }
        };
        assert!(check_functional_eq(&g.scale(&alpha).unwrap(), &g, &p).unwrap());
    }
    println!("[PASS] 08 equal-degree centralizer elements have k-proportional leadings");
}

#[test]
fn a09_centralizer_matches_brute_force() {
    let mut rng = Xs::new(239);
    for (name, alg) in presets(CoeffRing::PolyRing) {
        let mut samples = vec![OreElem::gen_x(&alg), elem("x + y", &alg)];
        samples.push(rng.nonzero_elem(&alg, 2, 1));
        for a in &samples {
            for b in 1..=3usize {
                let lib = centralizer_kbasis(a, b, b).unwrap().len();
                let brute = brute_centralizer_dim(a, b, b);
                assert_eq!(lib, brute, "dimension mismatch in {} at bound {}", name, b);
            }
        }
    }
    println!("[PASS] 09 centralizer dimensions match the independent brute-force solver");
}

#[test]
fn a10_quotient_rule() {
    let alg = OreAlgebra::weyl(q(), CoeffRing::RationalFunctions);
    let inv_y = Coef::Rat(RatFunc::new(Poly::one(q()), Poly::gen(q())).unwrap());
    let want = Coef::Rat(
        RatFunc::new(
            Poly::constant(Scalar::from_integer(q(), -1)),
            Poly::monomial(Scalar::one(q()), 2),
        )
        .unwrap(),
    );
    assert_eq!(alg.apply_delta(&inv_y).unwrap(), want);

    let mut rng = Xs::new(241);
    for _ in 0..100 {
        let u = Coef::Rat(
            RatFunc::new(rng.nonzero_poly(q(), 3), rng.nonzero_poly(q(), 3)).unwrap(),
        );
        let u_inv = u.inv().unwrap();
        let left = alg.apply_delta(&u_inv).unwrap();
        let right = u_inv
            .neg()
            .mul(&alg.apply_delta(&u).unwrap())
            .unwrap()
            .mul(&u_inv)
            .unwrap();
        assert_eq!(left, right);
    }
    println!("[PASS] 10 delta(u^-1) = -u^-1 delta(u) u^-1 over k(y), incl. delta(1/y) = -1/y^2");
}

#[test]
fn a11_cli_golden_output() {
    let cases: [(&[&str], &str); 3] = [
        (
            &["orebc", "--preset", "weyl", "commutator", "x", "y"],
            "(1)\n",
        ),
        (
            &[
                "orebc", "--preset", "qweyl", "--q=-1", "annihilate", "x^2", "y^2", "--coeffs",
                "scalars", "--max-s", "4", "--max-t", "4",
            ],
            "NOT FOUND (bounds s\u{2264}4 t\u{2264}4 y\u{2264}0)\n",
        ),
        (
            &[
                "orebc", "--preset", "weyl", "verify", "s^3 - t^2", "x^2", "x^3",
            ],
            "true\n",
        ),
    ];
    for (argv, want) in cases {
        let out = run(argv.iter().copied());
        assert_eq!(out.code, 0, "argv {:?} stderr {}", argv, out.stderr);
        assert_eq!(out.stdout, want, "argv {:?}", argv);
        assert!(out.stderr.is_empty());
    }

    // JSON output reconstructs the exact element
    let w = OreAlgebra::weyl(q(), CoeffRing::PolyRing);
    let e = elem("(y^2 + 1)*x^3 + 2*x + 1/2", &w);
    let v = orebc::render::json_ore(&e);
    let coeffs = v["coeffs"].as_array().unwrap();
    let rebuilt = OreElem::from_coeffs(
        &w,
        coeffs
            .iter()
            .map(|c| {
                let scalars = c
                    .as_array()
                    .unwrap()
                    .iter()
                    .map(|s| Scalar::parse(q(), s.as_str().unwrap()).unwrap())
                    .collect();
                w.coef_from_poly(Poly::from_coeffs(q(), scalars).unwrap())
            })
            .collect(),
    );
    assert_eq!(rebuilt, e);
    println!("[PASS] 11 CLI golden outputs byte-identical; JSON round-trips");
}
