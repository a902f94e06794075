use num_traits::Zero;
use proptest::prelude::*;

use tamecurve::groebner::{
    buchberger_with_budget, is_consistent_with_budget, normal_form, s_polynomial, IdealBasis, MonOrder,
};
use tamecurve::poly::rat::{frac, int};
use tamecurve::poly::{MultiPoly, Rat};

const BUDGET: usize = 5_000;

fn names(n: usize) -> Vec<String> {
    ["u", "v", "w"][..n].iter().map(|s| s.to_string()).collect()
}

fn small_rat() -> impl Strategy<Value = Rat> {
    (-3i64..=3, 1i64..=2).prop_map(|(n, d)| frac(n, d))
}

fn poly(arity: usize) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0u32..=2, arity), small_rat()), 1..=3)
        .prop_map(move |terms| MultiPoly::from_terms(&names(arity), terms))
}

fn system() -> impl Strategy<Value = (usize, Vec<MultiPoly>)> {
    (2usize..=3).prop_flat_map(|n| (Just(n), prop::collection::vec(poly(n), 1..=3)))
}

fn order(arity: usize, lex: bool) -> MonOrder {
    if lex {
        MonOrder::lex(arity)
    } else {
        MonOrder::grlex(arity)
    }
}

fn grid(arity: usize) -> Vec<Vec<Rat>> {
    let values: Vec<Rat> = (-2..=2).map(int).collect();
    let mut points = vec![Vec::new()];
    for _ in 0..arity {
        points = points
            .into_iter()
            .flat_map(|p| values.iter().map(move |v| [p.clone(), vec![v.clone()]].concat()))
            .collect();
    }
    points
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn every_s_polynomial_reduces_to_zero((n, gens) in system(), lex in any::<bool>()) {
        let basis = IdealBasis::new(gens, order(n, lex));
        let Ok(gb) = buchberger_with_budget(&basis, BUDGET) else { return Ok(()) };
        for (i, f) in gb.generators.iter().enumerate() {
            prop_assert_eq!(f.terms().max_by(|a, b| gb.order.cmp(a.0, b.0)).map(|t| t.1.clone()), Some(int(1)));
            for g in &gb.generators[i + 1..] {
                prop_assert!(normal_form(&s_polynomial(f, g, &gb.order), &gb).is_zero());
            }
        }
    }

    #[test]
    fn combinations_of_generators_are_members(
        (n, gens) in system(),
        cofactors in prop::collection::vec(poly(3), 3),
        lex in any::<bool>(),
    ) {
        let basis = IdealBasis::new(gens.clone(), order(n, lex));
        let Ok(gb) = buchberger_with_budget(&basis, BUDGET) else { return Ok(()) };
        let vars = names(n);
        let mut combo = MultiPoly::zero(&vars);
        for (g, h) in gens.iter().zip(&cofactors) {
            // Drop the cofactor's surplus variables.
            let h = MultiPoly::from_terms(&vars, h.terms().filter(|(e, _)| e[n..].iter().all(|&x| x == 0)).map(|(e, c)| (e[..n].to_vec(), c.clone())));
            combo = &combo + &(&h * g);
        }
        prop_assert!(normal_form(&combo, &gb).is_zero());
        for g in &gens {
            prop_assert!(normal_form(g, &gb).is_zero());
        }
    }

    #[test]
    fn planted_solutions_are_consistent(
        (n, gens) in system(),
        point in prop::collection::vec(small_rat(), 3),
    ) {
        // Shift each generator so that it vanishes at the planted point.
        let vars = names(n);
        let planted: Vec<MultiPoly> = gens
            .iter()
            .map(|g| g - &MultiPoly::constant(&vars, g.eval(&point[..n])))
            .collect();
        if let Ok(consistent) = is_consistent_with_budget(&planted, BUDGET) {
            prop_assert!(consistent);
        }
    }

    #[test]
    fn grid_solutions_imply_consistency((n, gens) in system()) {
        let on_grid = grid(n).iter().any(|p| gens.iter().all(|g| g.eval(p).is_zero()));
        if let Ok(consistent) = is_consistent_with_budget(&gens, BUDGET) {
            prop_assert!(!on_grid || consistent);
        }
    }
}
