//! Buchberger's algorithm over the rationals.
//!
//! Polynomials are converted to a term list sorted by the chosen monomial
//! order; reduction and S-polynomials work on that list and results are
//! converted back to [`MultiPoly`].

use std::cmp::Ordering;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{MultiPoly, Rat};

/// Monomial order on exponent vectors. The ranking lists variable indices
/// from most to least significant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonOrder {
    Lex(Vec<usize>),
    GrLex(Vec<usize>),
}

impl MonOrder {
    /// Lex with `x0 > x1 > ...`.
    pub fn lex(arity: usize) -> Self {
        MonOrder::Lex((0..arity).collect())
    }

    /// GrLex with `x0 > x1 > ...`.
    pub fn grlex(arity: usize) -> Self {
        MonOrder::GrLex((0..arity).collect())
    }

    pub fn ranking(&self) -> &[usize] {
        match self {
            MonOrder::Lex(r) | MonOrder::GrLex(r) => r,
        }
    }

    fn is_permutation_of(&self, arity: usize) -> bool {
        let mut seen = vec![false; arity];
        let r = self.ranking();
        r.len() == arity && r.iter().all(|&i| i < arity && !std::mem::replace(&mut seen[i], true))
    }

    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        let lex = || {
            self.ranking()
                .iter()
                .map(|&i| a[i].cmp(&b[i]))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        };
        match self {
            MonOrder::Lex(_) => lex(),
            MonOrder::GrLex(_) => {
                let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
                da.cmp(&db).then_with(lex)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealBasis {
    pub generators: Vec<MultiPoly>,
    pub order: MonOrder,
}

impl IdealBasis {
    /// Drops zero generators.
    pub fn new(generators: Vec<MultiPoly>, order: MonOrder) -> Self {
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Self { generators, order }
    }

    /// True iff the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(|g| g.as_constant().is_some_and(|c| !c.is_zero()))
    }
}

type Mono = Vec<u32>;

/// Terms in strictly decreasing order.
#[derive(Clone, Debug)]
struct Sorted {
    terms: Vec<(Mono, Rat)>,
}

impl Sorted {
    fn from_multi(p: &MultiPoly, order: &MonOrder) -> Self {
        let mut terms: Vec<(Mono, Rat)> = p.terms().map(|(e, c)| (e.clone(), c.clone())).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Sorted { terms }
    }

    fn to_multi(&self, vars: &[String]) -> MultiPoly {
        MultiPoly::from_terms(vars, self.terms.iter().cloned())
    }

    fn lead(&self) -> Option<&(Mono, Rat)> {
        self.terms.first()
    }

    fn monic(mut self) -> Self {
        if let Some((_, lc)) = self.terms.first() {
            let inv = lc.recip();
            for (_, c) in &mut self.terms {
                *c *= &inv;
            }
        }
        self
    }

    /// `self - c * mono * g`.
    fn sub_scaled(&self, c: &Rat, mono: &[u32], g: &Sorted, order: &MonOrder) -> Sorted {
        let shifted = g.terms.iter().map(|(e, gc)| (mul_mono(e, mono), c * gc));
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().cloned().peekable();
        let mut b = shifted.peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some(y)) => order.cmp(&x.0, &y.0),
            };
            match ord {
                Ordering::Greater => out.push(a.next().unwrap()),
                Ordering::Less => {
                    let (e, c) = b.next().unwrap();
                    out.push((e, -c));
                }
                Ordering::Equal => {
                    let (e, ca) = a.next().unwrap();
                    let (_, cb) = b.next().unwrap();
                    let c = ca - cb;
                    if !c.is_zero() {
                        out.push((e, c));
                    }
                }
            }
        }
        Sorted { terms: out }
    }
}

fn mul_mono(a: &[u32], b: &[u32]) -> Mono {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn quotient(b: &[u32], a: &[u32]) -> Mono {
    b.iter().zip(a).map(|(x, y)| x - y).collect()
}

fn lcm(a: &[u32], b: &[u32]) -> Mono {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

/// Counts reduction steps against a budget.
struct Meter {
    used: usize,
    budget: usize,
}

impl Meter {
    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.budget {
            Err(Error::BudgetExhausted(self.budget))
        } else {
            Ok(())
        }
    }
}

fn reduce_full(f: &Sorted, gens: &[Sorted], order: &MonOrder, meter: &mut Meter) -> Result<Sorted> {
    let mut p = f.clone();
    let mut rem = Vec::new();
    while let Some((lm, lc)) = p.lead().cloned() {
        let divisor = gens
            .iter()
            .find(|g| g.lead().is_some_and(|(gm, _)| divides(gm, &lm)));
        match divisor {
            Some(g) => {
                meter.tick()?;
                let (gm, gc) = g.lead().unwrap();
                p = p.sub_scaled(&(&lc / gc), &quotient(&lm, gm), g, order);
            }
            None => {
                rem.push(p.terms.remove(0));
            }
        }
    }
    Ok(Sorted { terms: rem })
}

fn s_poly(f: &Sorted, g: &Sorted, order: &MonOrder) -> Sorted {
    let (fm, fc) = f.lead().unwrap();
    let (gm, gc) = g.lead().unwrap();
    let l = lcm(fm, gm);
    let a = Sorted { terms: Vec::new() }.sub_scaled(&-fc.recip(), &quotient(&l, fm), f, order);
    a.sub_scaled(&gc.recip(), &quotient(&l, gm), g, order)
}

/// Remainder of `f` on division by the generators, tried in order; every
/// term of the result is reduced, not just the leading one.
pub fn normal_form(f: &MultiPoly, basis: &IdealBasis) -> MultiPoly {
    let gens: Vec<Sorted> = basis.generators.iter().map(|g| Sorted::from_multi(g, &basis.order)).collect();
    let mut meter = Meter { used: 0, budget: usize::MAX };
    let r = reduce_full(&Sorted::from_multi(f, &basis.order), &gens, &basis.order, &mut meter)
        .expect("unbounded budget");
    r.to_multi(f.vars())
}

/// S-polynomial of two nonzero polynomials.
pub fn s_polynomial(f: &MultiPoly, g: &MultiPoly, order: &MonOrder) -> MultiPoly {
    s_poly(&Sorted::from_multi(f, order), &Sorted::from_multi(g, order), order).to_multi(f.vars())
}

/// Default step budget for [`buchberger`].
pub const DEFAULT_BUDGET: usize = 200_000;

/// Reduced Gröbner basis with monic generators.
pub fn buchberger(basis: &IdealBasis) -> IdealBasis {
    buchberger_with_budget(basis, usize::MAX).expect("unbounded budget")
}

/// As [`buchberger`], failing with `BudgetExhausted` after `budget`
/// reduction steps.
pub fn buchberger_with_budget(basis: &IdealBasis, budget: usize) -> Result<IdealBasis> {
    let order = &basis.order;
    let Some(vars) = basis.generators.first().map(|g| g.vars().to_vec()) else {
        return Ok(IdealBasis::new(Vec::new(), order.clone()));
    };
    assert!(order.is_permutation_of(vars.len()), "ranking must permute the variables");
    let mut meter = Meter { used: 0, budget };
    let unit = || IdealBasis::new(vec![MultiPoly::constant(&vars, Rat::one())], order.clone());

    let mut gens: Vec<Sorted> = Vec::new();
    for g in &basis.generators {
        let r = reduce_full(&Sorted::from_multi(g, order), &gens, order, &mut meter)?;
        if !r.terms.is_empty() {
            gens.push(r.monic());
        }
    }
    if gens.iter().any(|g| is_const(g)) {
        return Ok(unit());
    }

    let mut pairs: Vec<(usize, usize)> = (0..gens.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut done = std::collections::HashSet::new();
    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let la = pair_lcm(&gens, pairs[a]);
                let lb = pair_lcm(&gens, pairs[b]);
                order.cmp(&la, &lb)
            })
            .unwrap();
        let (i, j) = pairs.swap_remove(best);
        done.insert((i, j));
        let (mi, mj) = (&gens[i].lead().unwrap().0, &gens[j].lead().unwrap().0);
        if coprime(mi, mj) {
            continue;
        }
        let l = lcm(mi, mj);
        let chain = (0..gens.len()).any(|k| {
            k != i
                && k != j
                && divides(&gens[k].lead().unwrap().0, &l)
                && done.contains(&ordered(i, k))
                && done.contains(&ordered(j, k))
        });
        if chain {
            continue;
        }
        meter.tick()?;
        let s = s_poly(&gens[i], &gens[j], order);
        let r = reduce_full(&s, &gens, order, &mut meter)?;
        if r.terms.is_empty() {
            continue;
        }
        if is_const(&r) {
            return Ok(unit());
        }
        let n = gens.len();
        gens.push(r.monic());
        pairs.extend((0..n).map(|i| (i, n)));
    }

    Ok(IdealBasis::new(
        interreduce(gens, order, &mut meter)?.iter().map(|g| g.to_multi(&vars)).collect(),
        order.clone(),
    ))
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

fn pair_lcm(gens: &[Sorted], (i, j): (usize, usize)) -> Mono {
    lcm(&gens[i].lead().unwrap().0, &gens[j].lead().unwrap().0)
}

fn is_const(g: &Sorted) -> bool {
    g.lead().is_some_and(|(m, _)| m.iter().all(|&e| e == 0))
}

/// Minimal basis, then each generator fully reduced by the others.
fn interreduce(mut gens: Vec<Sorted>, order: &MonOrder, meter: &mut Meter) -> Result<Vec<Sorted>> {
    gens.sort_by(|a, b| order.cmp(&a.lead().unwrap().0, &b.lead().unwrap().0));
    let mut minimal: Vec<Sorted> = Vec::new();
    for g in gens {
        let lm = &g.lead().unwrap().0;
        if !minimal.iter().any(|h| divides(&h.lead().unwrap().0, lm)) {
            minimal.push(g);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for idx in 0..minimal.len() {
        let others: Vec<Sorted> = minimal
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != idx)
            .map(|(_, g)| g.clone())
            .collect();
        out.push(reduce_full(&minimal[idx], &others, order, meter)?.monic());
    }
    Ok(out)
}

/// Weak Nullstellensatz test: the system has a common zero over the
/// algebraic closure iff its reduced basis is not `{1}`.
pub fn is_consistent_over_closure(generators: &[MultiPoly]) -> bool {
    is_consistent_with_budget(generators, usize::MAX).expect("unbounded budget")
}

pub fn is_consistent_with_budget(generators: &[MultiPoly], budget: usize) -> Result<bool> {
    let arity = generators.first().map_or(0, MultiPoly::arity);
    let basis = IdealBasis::new(generators.to_vec(), MonOrder::grlex(arity));
    Ok(!buchberger_with_budget(&basis, budget)?.is_unit())
}
