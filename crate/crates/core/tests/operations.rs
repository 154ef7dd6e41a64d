//! Worked examples through the public API.

use cherednik::group::{reflections, GroupSpec};
use cherednik::intertwine::sigma_raw;
use cherednik::jack::{jack_by_solve, Composition};
use cherednik::pbw::{check_pbw, rca_forms};
use cherednik::poly::PolyRep;
use cherednik::reptheory::{
    catalan_series, coxeter_number, exponents, on_hyperplane, radical_membership, HyperplaneId, ParamPoint,
};
use cherednik::scalar::{CycScalar, Params, Rational};

fn spec(r: u32, p: u32, n: usize) -> GroupSpec {
    GroupSpec::new(r, p, n).unwrap()
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

#[test]
fn coxeter_numbers() {
    assert_eq!(coxeter_number(&spec(2, 1, 2)).unwrap(), 4);
    assert_eq!(coxeter_number(&spec(3, 3, 3)).unwrap(), 6);
    assert_eq!(coxeter_number(&spec(4, 2, 2)).unwrap(), 6);
}

#[test]
fn reflection_counts() {
    // n(n-1)/2 * r transposition type plus n (r/p - 1) diagonal.
    for (r, p, n) in [(2, 1, 2), (3, 1, 3), (4, 2, 2), (3, 3, 3)] {
        let expect = n * (n - 1) / 2 * r as usize + n * (r / p - 1) as usize;
        assert_eq!(reflections(&spec(r, p, n)).len(), expect);
    }
}

#[test]
fn pbw_for_b2() {
    let sp = spec(2, 1, 2);
    assert!(check_pbw(&rca_forms(&Params::generic(sp)), &sp).passed());
}

#[test]
fn gordon_point_of_b2_lies_on_h51() {
    // r = 2: d_j = (-1)^j c_1, so d_0 = 5/4, d_{-5} = d_1 = -5/4 and
    // d_0 - d_{-5} + 2 c_0 = 5/2 + 5/2 = 5.
    let sp = spec(2, 1, 2);
    let pt = ParamPoint::gordon(&sp).unwrap();
    assert_eq!(pt.c0, rat(5, 4));
    assert_eq!(pt.d(0), CycScalar::from_rational(2, rat(5, 4)));
    assert_eq!(pt.d(-5), CycScalar::from_rational(2, rat(-5, 4)));
    assert!(on_hyperplane(&sp, &pt, &HyperplaneId::Hjk { j: 5, k: 1 }).unwrap());
    assert!(!on_hyperplane(&sp, &pt, &HyperplaneId::Hjk { j: 3, k: 1 }).unwrap());
}

#[test]
fn radical_generators() {
    assert!(radical_membership(&Composition::new(vec![0, 5]), 5));
    assert!(!radical_membership(&Composition::new(vec![4, 4]), 5));
}

#[test]
fn exponent_examples() {
    assert_eq!(exponents(&spec(2, 1, 2), 5).unwrap(), vec![1, 3]);
    assert_eq!(exponents(&spec(2, 2, 2), 3).unwrap(), vec![1, 1]);
}

#[test]
fn catalan_b2_by_hand() {
    // (1 + t^2 + t^4)(1 + t^4)
    let c = catalan_series(&spec(2, 1, 2), 8).unwrap();
    assert_eq!(c.coeffs, ["1", "0", "1", "0", "2", "0", "1", "0", "1"]);
    assert_eq!(c.value_at_one, "6");
}

#[test]
fn sigma_squares_to_one_off_the_diagonal() {
    // μ_i ≢ μ_{i+1} mod r: π_i kills f_μ, so σ_i acts as t_{s_i} and squares to 1.
    let sp = spec(3, 1, 2);
    let rep = PolyRep::new(Params::generic(sp));
    for mu in [vec![1, 0], vec![2, 0], vec![0, 2], vec![2, 1]] {
        let mu = Composition::new(mu);
        let f = jack_by_solve(&rep, &mu).unwrap();
        let g = jack_by_solve(&rep, &mu.swap(0)).unwrap();
        let once = sigma_raw(&rep, 0, &f.poly, &f.weight).unwrap();
        assert_eq!(once, g.poly, "{mu}");
        let twice = sigma_raw(&rep, 0, &once, &g.weight).unwrap();
        assert_eq!(twice, f.poly, "{mu}");
    }
}
