use num_traits::{One, Zero};
use proptest::prelude::*;

use tamecurve::poly::rat::{frac, int};
use tamecurve::poly::{BiPoly, Rat, UniPoly};
use tamecurve::tame::{
    apply_auto, canonicalize, decompose, degree_irreducible, Affine, AutoStep, CanonStatus, TameAuto,
};

fn small_rat() -> impl Strategy<Value = Rat> {
    (-3i64..=3, 1i64..=2).prop_map(|(n, d)| frac(n, d))
}

fn nonzero_rat() -> impl Strategy<Value = Rat> {
    small_rat().prop_filter("nonzero", |r| !r.is_zero())
}

fn affine() -> impl Strategy<Value = Affine> {
    prop::array::uniform6(small_rat())
        .prop_map(Affine::new)
        .prop_filter("invertible", |a| !a.det().is_zero())
}

fn elementary(max_k: usize) -> impl Strategy<Value = AutoStep> {
    (prop::collection::vec(small_rat(), 2..=max_k), nonzero_rat(), any::<bool>()).prop_map(|(mut cs, lead, along_x)| {
        cs.push(lead);
        let f = UniPoly::new(cs);
        if along_x {
            AutoStep::ElemX(f)
        } else {
            AutoStep::ElemY(f)
        }
    })
}

/// Affine, then up to `n` elementary steps each followed by an affine one.
fn auto(n: usize, max_k: usize) -> impl Strategy<Value = TameAuto> {
    (affine(), prop::collection::vec((elementary(max_k), affine()), 0..=n)).prop_map(|(a, rest)| {
        let mut steps = vec![AutoStep::Affine(a)];
        for (e, a) in rest {
            steps.push(e);
            steps.push(AutoStep::Affine(a));
        }
        TameAuto::new(steps)
    })
}

/// `a x^n + b y^m` plus random terms strictly inside the triangle.
fn triangular(max: u32) -> impl Strategy<Value = BiPoly> {
    (1..=max, 1..=max, nonzero_rat(), nonzero_rat(), prop::collection::vec(((0..=max, 0..=max), small_rat()), 0..6))
        .prop_map(|(n, m, a, b, rest)| {
            let inside = rest.into_iter().filter(|((i, j), _)| i * m + j * n < m * n);
            BiPoly::from_terms(inside.chain([((n, 0), a), ((0, m), b)]))
        })
}

fn coprime_shape() -> impl Strategy<Value = BiPoly> {
    triangular(7).prop_filter("neither degree divides the other", |p| degree_irreducible(p))
}

/// The pairs `(mu, d)` with `deg(big - mu * small^d) < deg(big)`, found by
/// trying every exponent with `deg(small^d) <= deg(big) + deg(small)` and
/// the coefficient that cancels the leading monomial of `big`.
fn all_degree_drops(big: &BiPoly, small: &BiPoly) -> Vec<(Rat, u32)> {
    let db = big.total_degree().unwrap();
    let ds = small.total_degree().unwrap().max(1);
    let ((i, j), c) = big.leading_term().unwrap();
    let mut out = Vec::new();
    for d in 1..=db / ds + 1 {
        let power = small.pow(d);
        let cp = power.coeff(i, j);
        if cp.is_zero() {
            continue;
        }
        let mu = c / &cp;
        if (big - &power.scale(&mu)).total_degree().map_or(true, |e| e < db) {
            out.push((mu, d));
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn triangular_form_survives_non_divisible_steps(p in triangular(6), k in 1u32..=4, mu in nonzero_rat(), along_x in any::<bool>()) {
        let t = p.triangular_profile().unwrap();
        let (light, heavy) = if along_x { (t.n, t.m) } else { (t.m, t.n) };
        prop_assume!(k * light != heavy);
        let f = UniPoly::monomial(mu, k as usize);
        let step = if along_x { AutoStep::ElemX(f) } else { AutoStep::ElemY(f) };
        let image = step.apply(&p);
        let (n, m) = if along_x { (t.n, t.m.max(k * t.n)) } else { (t.n.max(k * t.m), t.m) };
        let profile = image.triangular_profile();
        prop_assert!(profile.is_some(), "{} lost triangular form", image);
        let profile = profile.unwrap();
        prop_assert_eq!((profile.n, profile.m), (n, m));
        for ((i, j), _) in image.terms() {
            prop_assert!(i * m + j * n <= m * n);
        }
    }

    #[test]
    fn decomposition_round_trip(alpha in auto(3, 3)) {
        let (g1, g2) = alpha.images();
        let beta = decompose(&g1, &g2);
        prop_assert!(beta.is_some());
        prop_assert!(beta.unwrap().same_map(&alpha));
    }

    #[test]
    fn images_agree_with_stepwise_application(alpha in auto(2, 3)) {
        let (g1, g2) = alpha.images();
        prop_assert_eq!(alpha.apply(&BiPoly::x()), g1);
        prop_assert_eq!(alpha.apply(&BiPoly::y()), g2);
        prop_assert!(alpha.then(&alpha.invert()).same_map(&TameAuto::identity()));
    }

    #[test]
    fn degree_drops_are_unique(alpha in auto(3, 3)) {
        let (mut g1, mut g2) = alpha.images();
        loop {
            let (d1, d2) = (g1.total_degree().unwrap(), g2.total_degree().unwrap());
            if d1 <= 1 && d2 <= 1 {
                break;
            }
            let first = d1 >= d2;
            let (big, small) = if first { (&g1, &g2) } else { (&g2, &g1) };
            let drops = all_degree_drops(big, small);
            prop_assert_eq!(drops.len(), 1, "drops {:?} for {} against {}", drops, big, small);
            let (mu, d) = drops[0].clone();
            let reduced = big - &small.pow(d).scale(&mu);
            if first { g1 = reduced } else { g2 = reduced }
        }
    }

    #[test]
    fn coprime_shapes_never_lose_degree(p in coprime_shape(), alpha in auto(2, 2)) {
        let image = apply_auto(&alpha, &p);
        prop_assert!(image.total_degree() >= p.total_degree());
    }

    #[test]
    fn canonicalization_is_consistent_and_idempotent(p in triangular(5), alpha in auto(1, 2)) {
        let q = apply_auto(&alpha, &p);
        let c = canonicalize(&q);
        prop_assert_eq!(c.auto.apply(&q), c.poly.clone());
        prop_assert!(c.poly.total_degree() <= q.total_degree());
        if c.status == CanonStatus::Canonical {
            let again = canonicalize(&c.poly);
            prop_assert_eq!(again.poly, c.poly);
            prop_assert!(again.auto.steps.is_empty());
            prop_assert_eq!(again.status, CanonStatus::Canonical);
        }
    }
}

#[test]
fn inverse_affine_is_exact() {
    let a = Affine::new([int(2), int(1), int(3), int(1), int(1), frac(-1, 2)]);
    let both = TameAuto::new(vec![AutoStep::Affine(a.clone()), AutoStep::Affine(a.inverse())]);
    assert!(both.same_map(&TameAuto::identity()));
    assert!(Affine::identity().det().is_one());
}
