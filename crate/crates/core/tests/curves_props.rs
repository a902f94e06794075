use num_integer::Integer;
use num_traits::Zero;
use proptest::prelude::*;

use tamecurve::curves::{
    decide_equivalence, et_step_to_auto, implicitize, zl_screen, EquivDecision, ParamCurve, ZlVerdict,
};
use tamecurve::et::{apply_et, EtStep};
use tamecurve::poly::rat::{frac, int};
use tamecurve::poly::{BiPoly, Rat, UniPoly};
use tamecurve::tame::TameAuto;

fn uni(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec((-4i64..=4).prop_map(int), 1..=max_deg + 1).prop_map(UniPoly::new)
}

fn curve(max_deg: usize) -> impl Strategy<Value = ParamCurve> {
    (uni(max_deg), uni(max_deg)).prop_filter_map("nonconstant", |(u, v)| ParamCurve::new(u, v).ok())
}

fn nonzero_rat() -> impl Strategy<Value = Rat> {
    (-3i64..=3, 1i64..=2).prop_filter_map("nonzero", |(n, d)| (n != 0).then(|| frac(n, d)))
}

fn step() -> impl Strategy<Value = EtStep> {
    let small = || (-2i64..=2).prop_map(int);
    prop_oneof![
        nonzero_rat().prop_map(|mu| EtStep::AddPower1 { mu, k: 2 }),
        nonzero_rat().prop_map(|mu| EtStep::AddPower2 { mu, k: 2 }),
        (small(), small(), small(), small())
            .prop_filter("invertible", |(a1, a2, b1, b2)| !(a1 * b2 - a2 * b1).is_zero())
            .prop_map(|(a1, a2, b1, b2)| EtStep::Linear { a1, a2, b1, b2 }),
    ]
}

fn coprime_exponents() -> impl Strategy<Value = (u32, u32)> {
    (2u32..=5, 2u32..=5).prop_filter("coprime", |(k, l)| k.gcd(l) == 1)
}

fn cusp(k: u32, l: u32) -> BiPoly {
    BiPoly::from_terms([((k, 0), int(1)), ((0, l), int(-1))])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn implicit_equation_vanishes_on_the_curve(c in curve(5)) {
        let r = implicitize(&c).unwrap();
        prop_assert!(c.pull_back(&r.p).is_zero());
        prop_assert!(r.mult >= 1);
    }

    #[test]
    fn steps_correspond_to_automorphisms(c in curve(3), s in step()) {
        let moved = apply_et(&c.pair(), &s).unwrap();
        let Ok(moved) = ParamCurve::new(moved.u, moved.v) else { return Ok(()) };
        let before = implicitize(&c).unwrap();
        let after = implicitize(&moved).unwrap();
        let image = TameAuto::single(et_step_to_auto(&s)).apply(&before.p);
        prop_assert_eq!(after.p, image.normalized());
        prop_assert_eq!(after.mult, before.mult);
    }

    #[test]
    fn zl_accepts_its_own_models((k, l) in coprime_exponents()) {
        prop_assert_eq!(zl_screen(&cusp(k, l)).unwrap(), ZlVerdict::Candidate { k, l });
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn perturbed_cusps_stay_equivalent((k, l) in coprime_exponents(), steps in prop::collection::vec(step(), 1..=2)) {
        let start = ParamCurve::new(UniPoly::monomial(int(1), l as usize), UniPoly::monomial(int(1), k as usize)).unwrap();
        let pair = steps.iter().fold(start.pair(), |p, s| apply_et(&p, s).unwrap());
        let Ok(perturbed) = ParamCurve::new(pair.u, pair.v) else { return Ok(()) };
        let p = implicitize(&perturbed).unwrap().p;
        let target = cusp(k, l);
        let d = decide_equivalence(&p, &target).unwrap();
        match d {
            EquivDecision::Equivalent { witness, scale } => prop_assert_eq!(witness.apply(&p), target.scale(&scale)),
            other => prop_assert!(false, "{} vs {}: {:?}", p, target, other),
        }
    }

    #[test]
    fn decisions_are_symmetric((k, l) in coprime_exponents(), s in step(), t in step(), other in 0usize..3) {
        let base = cusp(k, l);
        let moved = |st: &EtStep, p: &BiPoly| TameAuto::single(et_step_to_auto(st)).apply(p);
        let p = moved(&s, &base);
        let q = match other {
            0 => moved(&t, &base),
            1 => moved(&t, &cusp(l, k)),
            _ => moved(&t, &cusp(k + 1, l + 2)),
        };
        let forward = decide_equivalence(&p, &q).unwrap();
        let backward = decide_equivalence(&q, &p).unwrap();
        prop_assert_eq!(forward.verdict(), backward.verdict());
        for (d, a, b) in [(&forward, &p, &q), (&backward, &q, &p)] {
            if let EquivDecision::Equivalent { witness, scale } = d {
                prop_assert_eq!(witness.apply(a), b.scale(scale));
            }
        }
    }
}

#[test]
fn witnesses_beyond_small_coefficients() {
    let cases = [
        ("1/243*(x + y)^5 - 1/36*(x - 2*y)^2", "x^5 - 1/4*x^4 + x^2*y - y^2"),
        // The scalings need -4 and 6, found on the curves a^5 = -1024 b^4
        // and 4 a^4 = -3 b^3.
        ("(x - 2*y)^5 + 1024*y^4", "x^5 - y^4"),
        ("4*(x + y)^4 + 3*(y - 2*x)^3", "x^4 - y^3"),
    ];
    for (p, q) in cases {
        let p = tamecurve::syntax::parse_bipoly(p).unwrap();
        let q = tamecurve::syntax::parse_bipoly(q).unwrap();
        for (a, b) in [(&p, &q), (&q, &p)] {
            let EquivDecision::Equivalent { witness, scale } = decide_equivalence(a, b).unwrap() else {
                panic!("expected a witness for {a} vs {b}");
            };
            assert_eq!(witness.apply(a), b.scale(&scale));
        }
    }
}
