use proptest::prelude::*;

use cherednik::group::{elements, GroupElem, GroupSpec};
use cherednik::jack::{linear_extension_key, order_lt, Composition, Weight};
use cherednik::pbw::{check_pbw, rca_forms};
use cherednik::poly::Poly;
use cherednik::reptheory::{series_div, tpoly_mul};
use cherednik::scalar::{cyc, CycScalar, MPoly, Params, RatFunc, Rational};

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// `Σ a_k ζ^k` with small integer coefficients.
fn cyc_elem(r: u32) -> impl Strategy<Value = CycScalar> {
    prop::collection::vec(-4i64..=4, r as usize).prop_map(move |cs| {
        cs.iter()
            .enumerate()
            .fold(CycScalar::zero(r), |a, (k, &c)| &a + &cyc(r, k as i64).scale(&rat(c, 1)))
    })
}

fn field_triple() -> impl Strategy<Value = (CycScalar, CycScalar, CycScalar)> {
    (1u32..=8).prop_flat_map(|r| (cyc_elem(r), cyc_elem(r), cyc_elem(r)))
}

/// Small polynomial in `k` and `c0` over Q.
fn mpoly() -> impl Strategy<Value = MPoly> {
    prop::collection::vec(((0u16..3, 0u16..3), -3i64..=3), 1..4).prop_map(|ts| {
        let mut p = MPoly::zero(1);
        for ((a, b), c) in ts {
            let mut m = vec![a, b];
            while m.last() == Some(&0) {
                m.pop();
            }
            p = p.add(&MPoly::from_terms(1, [(m, CycScalar::from_int(1, c))]));
        }
        p
    })
}

fn nonzero_mpoly() -> impl Strategy<Value = MPoly> {
    mpoly().prop_filter("nonzero", |p| !p.is_zero())
}

fn composition(n: usize, max: u32) -> impl Strategy<Value = Composition> {
    prop::collection::vec(0..=max, n).prop_map(Composition::new)
}

fn same_size_pair(n: usize, d: u32) -> impl Strategy<Value = (Composition, Composition, Composition)> {
    let all = cherednik::jack::compositions(n, d);
    let k = all.len();
    (0..k, 0..k, 0..k).prop_map(move |(a, b, c)| (all[a].clone(), all[b].clone(), all[c].clone()))
}

fn group_pair(r: u32, p: u32, n: usize) -> impl Strategy<Value = (GroupElem, GroupElem)> {
    let els = elements(&GroupSpec::new(r, p, n).unwrap());
    let k = els.len();
    (0..k, 0..k).prop_map(move |(a, b)| (els[a].clone(), els[b].clone()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cyclotomic_field_laws((a, b, c) in field_triple()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if let Some(inv) = a.inverse() {
            prop_assert!((&a * &inv).is_one());
        } else {
            prop_assert!(a.is_zero());
        }
    }

    #[test]
    fn complex_embedding_is_multiplicative((a, b, _) in field_triple()) {
        let (x, y) = (a.to_complex(), b.to_complex());
        let (p, q) = (&a * &b).to_complex();
        prop_assert!((p - (x.0 * y.0 - x.1 * y.1)).abs() < 1e-8);
        prop_assert!((q - (x.0 * y.1 + x.1 * y.0)).abs() < 1e-8);
    }

    #[test]
    fn roots_of_unity(r in 1u32..=12, k in -30i64..30, l in -30i64..30) {
        prop_assert_eq!(&cyc(r, k) * &cyc(r, l), cyc(r, k + l));
        prop_assert!(cyc(r, k * r as i64).is_one());
    }

    #[test]
    fn ratfunc_is_canonical(p in mpoly(), q in nonzero_mpoly(), s in nonzero_mpoly()) {
        let a = RatFunc::new(p.mul(&s), q.mul(&s));
        let b = RatFunc::new(p.clone(), q.clone());
        prop_assert_eq!(&a, &b);
        if !b.is_zero() {
            prop_assert!(b.den().is_monic());
        }
    }

    #[test]
    fn ratfunc_arithmetic(p in mpoly(), q in nonzero_mpoly(), s in mpoly(), t in nonzero_mpoly()) {
        let a = RatFunc::new(p.clone(), q.clone());
        let b = RatFunc::new(s.clone(), t.clone());
        let sum = RatFunc::new(p.mul(&t).add(&s.mul(&q)), q.mul(&t));
        prop_assert_eq!(a.add(&b), sum);
        if let Some(d) = a.mul(&b).div(&b) {
            prop_assert_eq!(d, a);
        } else {
            prop_assert!(b.is_zero());
        }
    }

    #[test]
    fn polynomial_action_is_an_action((g, h) in group_pair(3, 1, 3), mu in composition(3, 3)) {
        let ps = Params::generic(GroupSpec::new(3, 1, 3).unwrap());
        let f = Poly::monomial(mu.entries().to_vec(), ps.one()).add(&Poly::constant(3, ps.kappa()));
        prop_assert_eq!(f.act(&g.compose(&h)), f.act(&h).act(&g));
        prop_assert_eq!(f.act(&g).act(&g.inverse()), f);
    }

    #[test]
    fn coordinate_action_preserves_pairing((g, _) in group_pair(4, 2, 2), x in prop::collection::vec(-3i64..=3, 2), y in prop::collection::vec(-3i64..=3, 2)) {
        let xv: Vec<CycScalar> = x.iter().map(|&v| CycScalar::from_int(4, v)).collect();
        let yv: Vec<CycScalar> = y.iter().map(|&v| &CycScalar::from_int(4, v) * &cyc(4, 1)).collect();
        let before = cherednik::group::pairing(&xv, &yv);
        let after = cherednik::group::pairing(&g.act_x(&xv), &g.act_y(&yv));
        prop_assert_eq!(before, after);
    }

    #[test]
    fn order_is_strict_and_extended((a, b, c) in same_size_pair(3, 4)) {
        prop_assert!(!order_lt(&a, &a));
        prop_assert!(!(order_lt(&a, &b) && order_lt(&b, &a)));
        if order_lt(&a, &b) && order_lt(&b, &c) {
            prop_assert!(order_lt(&a, &c));
        }
        if order_lt(&a, &b) {
            prop_assert!(linear_extension_key(&a) < linear_extension_key(&b));
        }
    }

    #[test]
    fn phi_and_psi_are_inverse(mu in composition(4, 5)) {
        prop_assert_eq!(mu.phi().psi(), Some(mu.clone()));
        if let Some(nu) = mu.psi() {
            prop_assert_eq!(nu.phi(), mu);
        }
    }

    #[test]
    fn weight_swap_away_from_ties(mu in composition(3, 4), i in 0usize..2) {
        let ps = Params::generic(GroupSpec::new(3, 1, 3).unwrap());
        let e = mu.entries();
        prop_assume!(e[i] != e[i + 1]);
        prop_assert_eq!(Weight::of(&mu.swap(i), &ps), Weight::of(&mu, &ps).swap(i));
    }

    #[test]
    fn poly_json_roundtrip(terms in prop::collection::vec((composition(2, 4), -5i64..=5, 0usize..3), 0..6)) {
        let ps = Params::generic(GroupSpec::new(3, 1, 2).unwrap());
        let mut f = Poly::zero(2);
        for (mu, c, which) in terms {
            let coeff = match which {
                0 => ps.int(c),
                1 => &ps.c0() * &ps.int(c),
                _ => &ps.cyc(1) + &ps.d(1).scale_int(c),
            };
            f.add_term(mu.entries().to_vec(), coeff);
        }
        let back = Poly::from_json(&ps, &f.to_json()).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn series_division_inverts_multiplication(num in prop::collection::vec(-3i64..=3, 1..5), den_tail in prop::collection::vec(-3i64..=3, 0..4)) {
        let r = 2;
        let to = |v: &[i64]| v.iter().map(|&c| CycScalar::from_int(r, c)).collect::<Vec<_>>();
        let mut den = vec![CycScalar::one(r)];
        den.extend(to(&den_tail));
        let n = to(&num);
        let trunc = 8;
        let q = series_div(&n, &den, r, trunc);
        let back = tpoly_mul(&q, &den, r);
        for d in 0..=trunc {
            let want = n.get(d).cloned().unwrap_or_else(|| CycScalar::zero(r));
            let got = back.get(d).cloned().unwrap_or_else(|| CycScalar::zero(r));
            prop_assert_eq!(got, want);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn pbw_is_conjugation_invariant((v, _) in group_pair(3, 1, 2)) {
        let sp = GroupSpec::new(3, 1, 2).unwrap();
        let fam = rca_forms(&Params::generic(sp));
        prop_assert!(check_pbw(&fam.conjugate(&v), &sp).passed());
    }
}
