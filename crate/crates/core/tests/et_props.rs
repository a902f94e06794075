use num_traits::Zero;
use proptest::prelude::*;

use tamecurve::et::{apply_et, find_reducing_et, peak_reduce, sequence_reducible_oracle, EtStep, PolyPair};
use tamecurve::poly::rat::{frac, int};
use tamecurve::poly::{Rat, UniPoly};

fn uni(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec((-3i64..=3).prop_map(int), 0..=max_deg + 1).prop_map(UniPoly::new)
}

fn pair() -> impl Strategy<Value = PolyPair> {
    (uni(6), uni(6)).prop_map(|(u, v)| PolyPair::new(u, v))
}

fn nonzero_rat() -> impl Strategy<Value = Rat> {
    (-4i64..=4, 1i64..=3).prop_filter_map("nonzero", |(n, d)| (n != 0).then(|| frac(n, d)))
}

fn step() -> impl Strategy<Value = EtStep> {
    let small = || (-3i64..=3, 1i64..=2).prop_map(|(n, d)| frac(n, d));
    prop_oneof![
        (nonzero_rat(), 2u32..=3).prop_map(|(mu, k)| EtStep::AddPower1 { mu, k }),
        (nonzero_rat(), 2u32..=3).prop_map(|(mu, k)| EtStep::AddPower2 { mu, k }),
        (small(), small(), small(), small())
            .prop_filter("invertible", |(a1, a2, b1, b2)| !(a1 * b2 - a2 * b1).is_zero())
            .prop_map(|(a1, a2, b1, b2)| EtStep::Linear { a1, a2, b1, b2 }),
    ]
}

proptest! {
    #[test]
    fn every_step_is_invertible(p in pair(), s in step()) {
        let there = apply_et(&p, &s).unwrap();
        prop_assert_eq!(apply_et(&there, &s.inverse()).unwrap(), p);
    }

    #[test]
    fn peak_reduction_reaches_a_fixed_point(p in pair()) {
        let (reduced, trace) = peak_reduce(&p);
        prop_assert!(find_reducing_et(&reduced).is_none());
        prop_assert!(peak_reduce(&reduced).1.steps.is_empty());
        // Replaying the trace reproduces the output.
        let replay = trace.steps.iter().fold(p.clone(), |acc, s| apply_et(&acc, s).unwrap());
        prop_assert_eq!(replay, reduced);
    }

    #[test]
    fn peak_reduction_strictly_decreases(p in pair()) {
        let (_, trace) = peak_reduce(&p);
        let mut current = p.clone();
        let mut last_max = p.max_degree();
        for (s, recorded) in trace.steps.iter().zip(&trace.degree_profile) {
            let next = apply_et(&current, s).unwrap();
            prop_assert!(next.measure() < current.measure());
            prop_assert_eq!(next.max_degree(), *recorded);
            prop_assert!(*recorded <= last_max);
            last_max = *recorded;
            current = next;
        }
    }

    #[test]
    fn single_step_suffices_when_two_do(p in pair()) {
        let oracle = sequence_reducible_oracle(&p, 2).unwrap();
        prop_assert_eq!(oracle, find_reducing_et(&p).is_some());
    }

    #[test]
    fn reducible_images_are_found(p in pair(), s in step()) {
        // Undoing a step that raised the degree is itself a reducing step,
        // so the image is reducible by a single step.
        let image = apply_et(&p, &s).unwrap();
        if p.measure() < image.measure() {
            prop_assert!(find_reducing_et(&image).is_some());
        }
    }
}
