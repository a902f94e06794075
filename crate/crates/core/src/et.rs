//! Elementary transformations of pairs of univariate polynomials and the
//! peak-reduction normalizer.
//!
//! The three moves are
//!
//! * `AddPower1(mu, k)`: `(u, v) -> (u + mu*v^k, v)`, `mu != 0`, `k >= 2`;
//! * `AddPower2(mu, k)`: `(u, v) -> (u, v + mu*u^k)`;
//! * `Linear(a1, a2, b1, b2)`: `(u, v) -> (a1*u + a2*v, b1*u + b2*v)` with a
//!   nonzero determinant.
//!
//! A step *reduces* a pair when it lowers the maximum degree, or when it
//! keeps the maximum but lowers the number of components attaining it. The
//! second case is the convention under which `(u, v) -> (u - c*v, v)` counts
//! as reducing when `u` and `v` have proportional leading terms.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::rat::{self, Rat};
use crate::poly::UniPoly;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum EtStep {
    AddPower1 { mu: Rat, k: u32 },
    AddPower2 { mu: Rat, k: u32 },
    Linear { a1: Rat, a2: Rat, b1: Rat, b2: Rat },
}

impl EtStep {
    pub fn validate(&self) -> Result<()> {
        match self {
            EtStep::AddPower1 { mu, k } | EtStep::AddPower2 { mu, k } => {
                if mu.is_zero() {
                    return Err(Error::InvalidStep("mu must be nonzero".into()));
                }
                if *k < 2 {
                    return Err(Error::InvalidStep("k must be at least 2".into()));
                }
                Ok(())
            }
            EtStep::Linear { a1, a2, b1, b2 } => {
                if (a1 * b2 - a2 * b1).is_zero() {
                    Err(Error::DegenerateLinear)
                } else {
                    Ok(())
                }
            }
        }
    }

    pub fn inverse(&self) -> EtStep {
        match self {
            EtStep::AddPower1 { mu, k } => EtStep::AddPower1 { mu: -mu, k: *k },
            EtStep::AddPower2 { mu, k } => EtStep::AddPower2 { mu: -mu, k: *k },
            EtStep::Linear { a1, a2, b1, b2 } => {
                let det = a1 * b2 - a2 * b1;
                EtStep::Linear {
                    a1: b2 / &det,
                    a2: -a2 / &det,
                    b1: -b1 / &det,
                    b2: a1 / &det,
                }
            }
        }
    }

    pub fn identity() -> EtStep {
        EtStep::Linear {
            a1: Rat::one(),
            a2: Rat::zero(),
            b1: Rat::zero(),
            b2: Rat::one(),
        }
    }
}

/// A pair `(u(t), v(t))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyPair {
    pub u: UniPoly,
    pub v: UniPoly,
}

impl PolyPair {
    pub fn new(u: UniPoly, v: UniPoly) -> Self {
        Self { u, v }
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.u.degree().max(self.v.degree())
    }

    pub fn measure(&self) -> DegreeMeasure {
        let max = self.max_degree();
        let at_max = usize::from(self.u.degree() == max) + usize::from(self.v.degree() == max);
        DegreeMeasure { max, at_max }
    }
}

/// Ordered lexicographically: maximum degree first, then how many of the
/// two components attain it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct DegreeMeasure {
    pub max: Option<usize>,
    pub at_max: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<EtStep>,
    /// Maximum degree of the pair after each step.
    pub degree_profile: Vec<Option<usize>>,
}

pub fn apply_et(pair: &PolyPair, step: &EtStep) -> Result<PolyPair> {
    step.validate()?;
    Ok(apply_unchecked(pair, step))
}

fn apply_unchecked(pair: &PolyPair, step: &EtStep) -> PolyPair {
    let PolyPair { u, v } = pair;
    match step {
        EtStep::AddPower1 { mu, k } => PolyPair::new(u + &v.pow(*k).scale(mu), v.clone()),
        EtStep::AddPower2 { mu, k } => PolyPair::new(u.clone(), v + &u.pow(*k).scale(mu)),
        EtStep::Linear { a1, a2, b1, b2 } => PolyPair::new(
            &u.scale(a1) + &v.scale(a2),
            &u.scale(b1) + &v.scale(b2),
        ),
    }
}

/// A single ET that reduces the pair, if one exists.
///
/// An `AddPower` step can only lower the degree of its target by cancelling
/// the leading term, so its exponent is the degree ratio and its
/// coefficient the leading-coefficient ratio. A linear step can never lower
/// the maximum degree; it reduces only under the equal-degree convention.
/// `AddPower` steps are preferred over linear ones.
pub fn find_reducing_et(pair: &PolyPair) -> Option<EtStep> {
    let (du, dv) = (pair.u.degree(), pair.v.degree());
    let cancel = |target: &UniPoly, src: &UniPoly, k: u32| -> Rat {
        let lt = target.leading_coeff().unwrap();
        let ls = src.leading_coeff().unwrap();
        -(lt / num_traits::pow(ls.clone(), k as usize))
    };
    match (du, dv) {
        (Some(a), Some(b)) if a > b && b >= 1 && a % b == 0 => {
            let k = (a / b) as u32;
            Some(EtStep::AddPower1 { mu: cancel(&pair.u, &pair.v, k), k })
        }
        (Some(a), Some(b)) if b > a && a >= 1 && b % a == 0 => {
            let k = (b / a) as u32;
            Some(EtStep::AddPower2 { mu: cancel(&pair.v, &pair.u, k), k })
        }
        (Some(0), Some(0)) => Some(EtStep::AddPower1 { mu: cancel(&pair.u, &pair.v, 2), k: 2 }),
        (Some(a), Some(b)) if a == b => {
            let c = pair.u.leading_coeff().unwrap() / pair.v.leading_coeff().unwrap();
            Some(EtStep::Linear {
                a1: Rat::one(),
                a2: -c,
                b1: Rat::zero(),
                b2: Rat::one(),
            })
        }
        _ => None,
    }
}

/// Applies reducing steps until none exists.
pub fn peak_reduce(pair: &PolyPair) -> (PolyPair, ReductionTrace) {
    let mut current = pair.clone();
    let mut trace = ReductionTrace::default();
    while let Some(step) = find_reducing_et(&current) {
        let next = apply_unchecked(&current, &step);
        debug_assert!(next.measure() < current.measure());
        trace.degree_profile.push(next.max_degree());
        trace.steps.push(step);
        current = next;
    }
    (current, trace)
}

/// Maximum depth accepted by [`sequence_reducible_oracle`].
pub const ORACLE_MAX_DEPTH: usize = 3;

/// Brute-force search: does some sequence of at most `depth` ETs bring the
/// pair to a strictly smaller [`DegreeMeasure`]?
///
/// Steps are drawn from a finite candidate set built from the pair at hand:
/// `AddPower` steps with `2 <= k <= max(2, D)` (`D` the input's maximum
/// degree) and coefficients in `{1, -1, 2}` plus the ratio cancelling the
/// leading terms, and linear steps from a fixed menu of shears, swaps and
/// scalings including the leading-coefficient shears.
pub fn sequence_reducible_oracle(pair: &PolyPair, depth: usize) -> Result<bool> {
    if depth > ORACLE_MAX_DEPTH {
        return Err(Error::SearchBudgetExceeded(depth));
    }
    let goal = pair.measure();
    let kmax = pair.max_degree().unwrap_or(0).max(2) as u32;
    Ok(search(pair, depth, goal, kmax))
}

fn search(pair: &PolyPair, depth: usize, goal: DegreeMeasure, kmax: u32) -> bool {
    if depth == 0 {
        return false;
    }
    for step in candidates(pair, kmax) {
        if depth == 1 {
            if let Some(m) = predicted_measure(pair, &step) {
                if m < goal {
                    return true;
                }
                continue;
            }
        }
        let next = apply_unchecked(pair, &step);
        if next.measure() < goal || search(&next, depth - 1, goal, kmax) {
            return true;
        }
    }
    false
}

/// The measure after an `AddPower` step when it is determined by degrees
/// alone (no possible cancellation); `None` means "compute it".
fn predicted_measure(pair: &PolyPair, step: &EtStep) -> Option<DegreeMeasure> {
    let (target, src, k, first) = match step {
        EtStep::AddPower1 { k, .. } => (&pair.u, &pair.v, *k, true),
        EtStep::AddPower2 { k, .. } => (&pair.v, &pair.u, *k, false),
        EtStep::Linear { .. } => return None,
    };
    let added = src.degree().map(|d| d * k as usize);
    if added == target.degree() {
        return None;
    }
    let new_target = added.max(target.degree());
    let (du, dv) = if first {
        (new_target, src.degree())
    } else {
        (src.degree(), new_target)
    };
    let max = du.max(dv);
    Some(DegreeMeasure {
        max,
        at_max: usize::from(du == max) + usize::from(dv == max),
    })
}

fn candidates(pair: &PolyPair, kmax: u32) -> Vec<EtStep> {
    let mut out = Vec::new();
    let generic = [rat::int(1), rat::int(-1), rat::int(2)];
    for k in 2..=kmax {
        for (target, src, first) in [(&pair.u, &pair.v, true), (&pair.v, &pair.u, false)] {
            let mut mus: Vec<Rat> = generic.to_vec();
            if let (Some(lt), Some(ls)) = (target.leading_coeff(), src.leading_coeff()) {
                mus.push(-(lt / num_traits::pow(ls.clone(), k as usize)));
            }
            mus.sort();
            mus.dedup();
            for mu in mus {
                out.push(if first {
                    EtStep::AddPower1 { mu, k }
                } else {
                    EtStep::AddPower2 { mu, k }
                });
            }
        }
    }
    let (one, zero) = (Rat::one(), Rat::zero());
    let mut shears: Vec<Rat> = vec![rat::int(1), rat::int(-1), rat::int(2), rat::int(-2)];
    if let (Some(lu), Some(lv)) = (pair.u.leading_coeff(), pair.v.leading_coeff()) {
        for r in [lu / lv, lv / lu] {
            shears.push(r.clone());
            shears.push(-r);
        }
    }
    shears.sort();
    shears.dedup();
    for c in shears {
        out.push(EtStep::Linear { a1: one.clone(), a2: c.clone(), b1: zero.clone(), b2: one.clone() });
        out.push(EtStep::Linear { a1: one.clone(), a2: zero.clone(), b1: c, b2: one.clone() });
    }
    out.push(EtStep::Linear { a1: zero.clone(), a2: one.clone(), b1: one.clone(), b2: zero.clone() });
    out.push(EtStep::Linear { a1: one.clone(), a2: one.clone(), b1: one.clone(), b2: -one.clone() });
    out.push(EtStep::Linear { a1: rat::int(2), a2: zero.clone(), b1: zero, b2: one });
    out
}
