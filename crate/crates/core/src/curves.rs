//! Parametrized plane curves, the equivalence decision, the coordinate test
//! and Zaidenberg–Lin screening.
//!
//! A curve `x = u(t), y = v(t)` is implicitized by the resultant
//! `Res_t(u(t) - x, v(t) - y)`, which equals `p^mult` up to a constant where
//! `p` is the minimal polynomial and `mult` the degree of `Q(t)` over
//! `Q(u, v)`. Elementary transformations of the pair correspond to
//! elementary automorphisms applied to `p`, which is what
//! [`normalize_curve`] tracks.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::et::{peak_reduce, EtStep, PolyPair, ReductionTrace};
use crate::groebner;
use crate::poly::rat::{frac, int};
use crate::poly::{resultant_t, BiPoly, MultiPoly, Rat, TPoly, UniPoly};
use crate::tame::{canonicalize, Affine, AutoStep, CanonStatus, Canonicalization, TameAuto};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParamCurve {
    pub u: UniPoly,
    pub v: UniPoly,
}

impl ParamCurve {
    pub fn new(u: UniPoly, v: UniPoly) -> Result<Self> {
        if u.is_constant() && v.is_constant() {
            return Err(Error::DegenerateCurve);
        }
        Ok(Self { u, v })
    }

    pub fn pair(&self) -> PolyPair {
        PolyPair::new(self.u.clone(), self.v.clone())
    }

    /// `p(u(t), v(t))`.
    pub fn pull_back(&self, p: &BiPoly) -> UniPoly {
        p.eval_uni(&self.u, &self.v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImplicitResult {
    /// Normalized minimal polynomial.
    pub p: BiPoly,
    pub mult: u32,
}

pub fn implicitize(c: &ParamCurve) -> Result<ImplicitResult> {
    let (du, dv) = (c.u.degree(), c.v.degree());
    match (du, dv) {
        (None | Some(0), None | Some(0)) => Err(Error::DegenerateCurve),
        (None | Some(0), Some(d)) => Ok(ImplicitResult {
            p: (&BiPoly::x() - &BiPoly::constant(c.u.coeff(0))).normalized(),
            mult: d as u32,
        }),
        (Some(d), None | Some(0)) => Ok(ImplicitResult {
            p: (&BiPoly::y() - &BiPoly::constant(c.v.coeff(0))).normalized(),
            mult: d as u32,
        }),
        _ => {
            let r = resultant_t(&TPoly::minus_x(&c.u), &TPoly::minus_y(&c.v))?;
            let (p, mult) = r.perfect_power_root()?;
            Ok(ImplicitResult { p, mult })
        }
    }
}

/// The automorphism taking the minimal polynomial of a curve to that of its
/// image under `step`.
pub fn et_step_to_auto(step: &EtStep) -> AutoStep {
    match step {
        EtStep::AddPower1 { mu, k } => AutoStep::ElemX(UniPoly::monomial(-mu, *k as usize)),
        EtStep::AddPower2 { mu, k } => AutoStep::ElemY(UniPoly::monomial(-mu, *k as usize)),
        EtStep::Linear { a1, a2, b1, b2 } => {
            AutoStep::Affine(Affine::linear(a1.clone(), a2.clone(), b1.clone(), b2.clone()).inverse())
        }
    }
}

/// Peak-reduces the parametrization and returns the automorphism `alpha`
/// with `alpha(implicitize(c).p) = implicitize(reduced).p` up to a constant.
pub fn normalize_curve(c: &ParamCurve) -> (ParamCurve, ReductionTrace, TameAuto) {
    let (pair, trace) = peak_reduce(&c.pair());
    let auto = TameAuto::new(trace.steps.iter().map(et_step_to_auto).collect());
    (ParamCurve { u: pair.u, v: pair.v }, trace, auto)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EquivDecision {
    /// `witness.apply(p) == scale * q`.
    Equivalent { witness: TameAuto, scale: Rat },
    Inequivalent { reason: String },
    Unknown { reason: String },
}

impl EquivDecision {
    pub fn verdict(&self) -> &'static str {
        match self {
            EquivDecision::Equivalent { .. } => "equivalent",
            EquivDecision::Inequivalent { .. } => "inequivalent",
            EquivDecision::Unknown { .. } => "unknown",
        }
    }

    pub fn is_equivalent(&self) -> bool {
        matches!(self, EquivDecision::Equivalent { .. })
    }
}

/// Limits for [`decide_equivalence_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EquivOptions {
    /// Gröbner reduction-step budget per residual system.
    pub budget: usize,
    /// Node cap of the rational witness search per residual system.
    pub search_nodes: usize,
}

impl Default for EquivOptions {
    fn default() -> Self {
        Self {
            budget: groebner::DEFAULT_BUDGET,
            search_nodes: 4_000,
        }
    }
}

pub fn decide_equivalence(p: &BiPoly, q: &BiPoly) -> Result<EquivDecision> {
    decide_equivalence_with(p, q, &EquivOptions::default())
}

/// Decides whether some automorphism takes `p` to a constant multiple of
/// `q`.
///
/// Both inputs are canonicalized. Canonical forms of different maximal
/// degree are inequivalent. Otherwise the map between the canonical forms
/// is sought as an affine map combined with one elementary map that keeps
/// the degree; its coefficients solve a polynomial system. A rational
/// solution gives a verified witness, an inconsistent system (over the
/// algebraic closure) proves inequivalence.
pub fn decide_equivalence_with(p: &BiPoly, q: &BiPoly, opts: &EquivOptions) -> Result<EquivDecision> {
    if p.is_constant() || q.is_constant() {
        return Err(Error::ConstantInput);
    }
    if let Some(scale) = proportional(p, q) {
        return Ok(EquivDecision::Equivalent {
            witness: TameAuto::identity(),
            scale,
        });
    }
    let cp = canonicalize(p);
    let cq = canonicalize(q);
    for c in [&cp, &cq] {
        if let CanonStatus::FieldObstruction(root) = &c.status {
            return Ok(EquivDecision::Unknown {
                reason: format!("reduction of {} needs {root}", if std::ptr::eq(c, &cp) { "p" } else { "q" }),
            });
        }
    }
    if cp.poly.normalized() == cq.poly.normalized() {
        return Ok(finish(p, q, &cp, &cq, TameAuto::identity()));
    }

    use CanonStatus::*;
    let (dp, dq) = (degree(&cp.poly), degree(&cq.poly));
    match (&cp.status, &cq.status) {
        (LinearPoly, LinearPoly) => {
            let mid = to_x(&cp.poly).then(&to_x(&cq.poly).invert());
            Ok(finish(p, q, &cp, &cq, mid))
        }
        (LinearPoly, Canonical) | (Canonical, LinearPoly) => Ok(EquivDecision::Inequivalent {
            reason: "one polynomial is a coordinate, the other has a canonical form of degree at least 2".into(),
        }),
        (Canonical, Canonical) => {
            let (fp, fq) = (cp.profile().unwrap(), cq.profile().unwrap());
            if fp.max_degree() != fq.max_degree() {
                return Ok(EquivDecision::Inequivalent {
                    reason: format!(
                        "canonical profiles ({}, {}) and ({}, {}) have different maximal degrees",
                        fp.n,
                        fp.m,
                        fq.n,
                        fq.m
                    ),
                });
            }
            let families = vec![
                vec![Part::Elem(elem_shape(fp.n, fp.m)), Part::Affine],
                vec![Part::Affine, Part::Elem(elem_shape(fq.n, fq.m))],
            ];
            residual_decision(p, q, &cp, &cq, families, true, opts)
        }
        (Canonical, NonTriangular) | (NonTriangular, Canonical) if dp != dq => {
            let (lo, hi) = if cp.status == Canonical { (dp, dq) } else { (dq, dp) };
            if hi < lo {
                Ok(EquivDecision::Inequivalent {
                    reason: format!(
                        "a degree-irreducible form of degree {lo} cannot reach degree {hi}"
                    ),
                })
            } else {
                Ok(EquivDecision::Unknown {
                    reason: "reduction left the triangular family".into(),
                })
            }
        }
        _ if dp == dq => residual_decision(p, q, &cp, &cq, vec![vec![Part::Affine]], false, opts),
        _ => Ok(EquivDecision::Unknown {
            reason: format!("canonical forms are {} and {}", cp.status, cq.status),
        }),
    }
}

fn degree(p: &BiPoly) -> u32 {
    p.total_degree().unwrap_or(0)
}

fn proportional(p: &BiPoly, q: &BiPoly) -> Option<Rat> {
    let ((e, cp), (f, cq)) = (p.leading_term()?, q.leading_term()?);
    if e != f {
        return None;
    }
    let scale = cp / cq;
    (p == &q.scale(&scale)).then_some(scale)
}

/// An affine map taking the degree-one polynomial `p` to `x`.
fn to_x(p: &BiPoly) -> TameAuto {
    let (a, b, c) = (p.coeff(1, 0), p.coeff(0, 1), p.coeff(0, 0));
    let affine = if !a.is_zero() {
        Affine::new([a.recip(), -&b / &a, -&c / &a, Rat::zero(), Rat::one(), Rat::zero()])
    } else {
        Affine::new([Rat::zero(), Rat::one(), Rat::zero(), b.recip(), Rat::zero(), -&c / &b])
    };
    TameAuto::single(AutoStep::Affine(affine))
}

/// Assembles `alpha_p, mid, alpha_q^-1` and checks it exactly.
fn finish(p: &BiPoly, q: &BiPoly, cp: &Canonicalization, cq: &Canonicalization, mid: TameAuto) -> EquivDecision {
    let witness = cp.auto.then(&mid).then(&cq.auto.invert());
    match proportional(&witness.apply(p), q) {
        Some(scale) => EquivDecision::Equivalent { witness, scale },
        None => EquivDecision::Unknown {
            reason: "candidate witness failed exact verification".into(),
        },
    }
}

/// Orientation and maximal degree of an elementary map that keeps the
/// degree of a canonical form with profile `(n, m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct ElemShape {
    along_x: bool,
    max_deg: u32,
}

fn elem_shape(n: u32, m: u32) -> ElemShape {
    if n < m {
        ElemShape { along_x: true, max_deg: m / n }
    } else {
        ElemShape { along_x: false, max_deg: n / m }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Part {
    Affine,
    Elem(ElemShape),
}

/// Polynomial system whose rational solutions are the maps of a fixed
/// shape taking `p` to `c*q`.
struct Residual {
    parts: Vec<Part>,
    /// Index of the first `f` coefficient (degree 2) per elementary part.
    elem_offset: usize,
    equations: Vec<MultiPoly>,
}

const AFFINE_NAMES: [&str; 6] = ["a1", "a2", "a3", "b1", "b2", "b3"];

impl Residual {
    fn build(p: &BiPoly, q: &BiPoly, parts: Vec<Part>) -> Residual {
        let f_degs: Vec<u32> = parts
            .iter()
            .filter_map(|part| match part {
                Part::Elem(s) => Some(s.max_deg),
                Part::Affine => None,
            })
            .flat_map(|d| 2..=d)
            .collect();
        let mut unknowns: Vec<String> = AFFINE_NAMES.iter().map(|s| s.to_string()).collect();
        let elem_offset = unknowns.len();
        unknowns.extend(f_degs.iter().map(|d| format!("f{d}")));
        unknowns.extend(["c".to_string(), "z".to_string()]);
        let nu = unknowns.len();
        let (ic, iz) = (nu - 2, nu - 1);

        let mut all = unknowns.clone();
        all.extend(["x".to_string(), "y".to_string()]);
        let (ix, iy) = (nu, nu + 1);
        let var = |i: usize| MultiPoly::var(&all, i);
        let lin = |k: usize| &(&(&var(k) * &var(ix)) + &(&var(k + 1) * &var(iy))) + &var(k + 2);

        // Images of x and y under the composite map, built from the last
        // part backwards as in `TameAuto::images`.
        let (mut gx, mut gy) = (var(ix), var(iy));
        for part in parts.iter().rev() {
            let (sx, sy) = match part {
                Part::Affine => (lin(0), lin(3)),
                Part::Elem(s) => {
                    let (main, other) = if s.along_x { (ix, iy) } else { (iy, ix) };
                    let mut img = var(main);
                    for (k, d) in (2..=s.max_deg).enumerate() {
                        img = &img + &(&var(elem_offset + k) * &var(other).pow(d));
                    }
                    if s.along_x {
                        (img, var(iy))
                    } else {
                        (var(ix), img)
                    }
                }
            };
            (gx, gy) = (subst_xy(&sx, ix, iy, &gx, &gy), subst_xy(&sy, ix, iy, &gx, &gy));
        }

        let lifted_p = lift(p, &all, ix, iy);
        let lifted_q = lift(q, &all, ix, iy);
        let diff = &subst_xy(&lifted_p, ix, iy, &gx, &gy) - &(&var(ic) * &lifted_q);

        let mut grouped: BTreeMap<(u32, u32), Vec<(Vec<u32>, Rat)>> = BTreeMap::new();
        for (e, c) in diff.terms() {
            grouped
                .entry((e[ix], e[iy]))
                .or_default()
                .push((e[..nu].to_vec(), c.clone()));
        }
        let mut equations: Vec<MultiPoly> = grouped
            .into_values()
            .map(|terms| MultiPoly::from_terms(&unknowns, terms))
            .collect();
        let u = |i: usize| MultiPoly::var(&unknowns, i);
        let det = &(&u(0) * &u(4)) - &(&u(1) * &u(3));
        equations.push(&(&(&u(iz) * &u(ic)) * &det) - &MultiPoly::constant(&unknowns, Rat::one()));
        Residual {
            parts,
            elem_offset,
            equations,
        }
    }

    fn auto_from(&self, values: &[Rat]) -> TameAuto {
        let affine = Affine::new(std::array::from_fn(|i| values[i].clone()));
        let mut steps = Vec::new();
        let mut offset = self.elem_offset;
        for part in &self.parts {
            match part {
                Part::Affine => steps.push(AutoStep::Affine(affine.clone())),
                Part::Elem(s) => {
                    let mut coeffs = vec![Rat::zero(); 2];
                    for _ in 2..=s.max_deg {
                        coeffs.push(values[offset].clone());
                        offset += 1;
                    }
                    let f = UniPoly::new(coeffs);
                    if !f.is_zero() {
                        steps.push(if s.along_x { AutoStep::ElemX(f) } else { AutoStep::ElemY(f) });
                    }
                }
            }
        }
        TameAuto::new(steps)
    }
}

fn lift(p: &BiPoly, vars: &[String], ix: usize, iy: usize) -> MultiPoly {
    MultiPoly::from_terms(
        vars,
        p.terms().map(|(&(i, j), c)| {
            let mut e = vec![0; vars.len()];
            e[ix] = i;
            e[iy] = j;
            (e, c.clone())
        }),
    )
}

/// `r` with the variables `ix`, `iy` replaced simultaneously by `gx`, `gy`.
fn subst_xy(r: &MultiPoly, ix: usize, iy: usize, gx: &MultiPoly, gy: &MultiPoly) -> MultiPoly {
    let vars = r.vars();
    let mut grouped: BTreeMap<(u32, u32), MultiPoly> = BTreeMap::new();
    for (e, c) in r.terms() {
        let mut rest = e.clone();
        let key = (rest[ix], rest[iy]);
        rest[ix] = 0;
        rest[iy] = 0;
        let entry = grouped.entry(key).or_insert_with(|| MultiPoly::zero(vars));
        *entry = &*entry + &MultiPoly::from_terms(vars, [(rest, c.clone())]);
    }
    let mut px = vec![MultiPoly::constant(vars, Rat::one())];
    let mut py = px.clone();
    let mut out = MultiPoly::zero(vars);
    for ((i, j), coeff) in grouped {
        while px.len() <= i as usize {
            let next = px.last().unwrap() * gx;
            px.push(next);
        }
        while py.len() <= j as usize {
            let next = py.last().unwrap() * gy;
            py.push(next);
        }
        out = &out + &(&coeff * &(&px[i as usize] * &py[j as usize]));
    }
    out
}

fn residual_decision(
    p: &BiPoly,
    q: &BiPoly,
    cp: &Canonicalization,
    cq: &Canonicalization,
    mut families: Vec<Vec<Part>>,
    complete: bool,
    opts: &EquivOptions,
) -> Result<EquivDecision> {
    families.dedup();
    let (pp, qq) = (&cp.poly, &cq.poly);
    let mut all_inconsistent = true;
    let mut budget_hit = false;
    for parts in families {
        let forward = Residual::build(pp, qq, parts.clone());
        if let Some(values) = find_rational_point(&forward.equations, opts.search_nodes) {
            let mid = forward.auto_from(&values);
            if let d @ EquivDecision::Equivalent { .. } = finish(p, q, cp, cq, mid) {
                return Ok(d);
            }
        }
        // A map from q back to p is just as good once inverted.
        let reversed: Vec<Part> = parts.iter().rev().copied().collect();
        let backward = Residual::build(qq, pp, reversed);
        if let Some(values) = find_rational_point(&backward.equations, opts.search_nodes) {
            let mid = backward.auto_from(&values).invert();
            if let d @ EquivDecision::Equivalent { .. } = finish(p, q, cp, cq, mid) {
                return Ok(d);
            }
        }
        match groebner::is_consistent_with_budget(&forward.equations, opts.budget) {
            Ok(true) => all_inconsistent = false,
            Ok(false) => {}
            Err(Error::BudgetExhausted(_)) => {
                all_inconsistent = false;
                budget_hit = true;
            }
            Err(e) => return Err(e),
        }
    }
    Ok(if budget_hit {
        EquivDecision::Unknown {
            reason: format!("Gröbner budget of {} steps exhausted", opts.budget),
        }
    } else if !all_inconsistent {
        EquivDecision::Unknown {
            reason: "equivalent over the algebraic closure, no rational witness found".into(),
        }
    } else if complete {
        EquivDecision::Inequivalent {
            reason: "residual systems are inconsistent over the algebraic closure".into(),
        }
    } else {
        EquivDecision::Unknown {
            reason: "no affine map relates the reduced forms".into(),
        }
    })
}

const BRANCH_VALUES: [(i64, i64); 8] = [(0, 1), (1, 1), (-1, 1), (2, 1), (-2, 1), (1, 2), (-1, 2), (3, 1)];

/// Searches for a rational zero of the system by eliminating variables that
/// occur linearly with a constant coefficient, forcing variables of
/// single-variable monomials to zero, taking rational roots of univariate
/// equations, and otherwise branching on small values.
pub fn find_rational_point(equations: &[MultiPoly], max_nodes: usize) -> Option<Vec<Rat>> {
    let arity = equations.first()?.arity();
    let mut search = Search { nodes: 0, max_nodes };
    let bindings = search.run(equations.to_vec(), Vec::new())?;
    let mut values = vec![Rat::zero(); arity];
    for (v, expr) in bindings.iter().rev() {
        values[*v] = expr.eval(&values);
    }
    equations.iter().all(|e| e.eval(&values).is_zero()).then_some(values)
}

struct Search {
    nodes: usize,
    max_nodes: usize,
}

type Bindings = Vec<(usize, MultiPoly)>;

impl Search {
    fn run(&mut self, mut eqs: Vec<MultiPoly>, mut bound: Bindings) -> Option<Bindings> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return None;
        }
        loop {
            eqs.retain(|e| !e.is_zero());
            if eqs.iter().any(|e| e.as_constant().is_some()) {
                return None;
            }
            if eqs.is_empty() {
                break;
            }
            let Some((v, value)) = forced_binding(&eqs) else { break };
            eqs = eqs.iter().map(|e| e.substitute(v, &value)).collect();
            bound.push((v, value));
        }
        if eqs.is_empty() {
            return Some(bound);
        }
        for (v, value) in branch_choice(&eqs) {
            let vars = eqs[0].vars().to_vec();
            let value = MultiPoly::constant(&vars, value);
            let next: Vec<MultiPoly> = eqs.iter().map(|e| e.substitute(v, &value)).collect();
            let mut b = bound.clone();
            b.push((v, value));
            if let Some(found) = self.run(next, b) {
                return Some(found);
            }
            if self.nodes > self.max_nodes {
                return None;
            }
        }
        None
    }
}

/// A variable whose value is determined by a single equation.
fn forced_binding(eqs: &[MultiPoly]) -> Option<(usize, MultiPoly)> {
    let vars = eqs[0].vars().to_vec();
    for e in eqs {
        if e.num_terms() == 1 {
            let support = e.support();
            if support.len() == 1 {
                return Some((support[0], MultiPoly::zero(&vars)));
            }
        }
    }
    let mut best: Option<(usize, usize, MultiPoly)> = None;
    for e in eqs {
        for v in e.support() {
            if e.degree_in(v) != 1 {
                continue;
            }
            let (coeff, rest) = split_linear(e, v);
            let Some(k) = coeff.as_constant() else { continue };
            let size = e.num_terms();
            if best.as_ref().map_or(true, |b| size < b.0) {
                best = Some((size, v, rest.scale(&-k.recip())));
            }
        }
    }
    best.map(|(_, v, value)| (v, value))
}

/// `e = coeff * x_v + rest` for `e` of degree one in `x_v`.
fn split_linear(e: &MultiPoly, v: usize) -> (MultiPoly, MultiPoly) {
    let vars = e.vars();
    let (mut coeff, mut rest) = (Vec::new(), Vec::new());
    for (m, c) in e.terms() {
        if m[v] == 1 {
            let mut m = m.clone();
            m[v] = 0;
            coeff.push((m, c.clone()));
        } else {
            rest.push((m.clone(), c.clone()));
        }
    }
    (MultiPoly::from_terms(vars, coeff), MultiPoly::from_terms(vars, rest))
}

/// Alternatives `x_v = value` to try in turn.
fn branch_choice(eqs: &[MultiPoly]) -> Vec<(usize, Rat)> {
    for e in eqs {
        let support = e.support();
        if support.len() == 1 {
            let v = support[0];
            let mut coeffs = vec![Rat::zero(); e.degree_in(v) as usize + 1];
            for (m, c) in e.terms() {
                coeffs[m[v] as usize] += c;
            }
            let roots = UniPoly::new(coeffs).rational_roots().unwrap_or_default();
            return roots.into_iter().rev().map(|r| (v, r)).collect();
        }
    }
    // A monomial equation forces one of its variables to vanish.
    if let Some(e) = eqs.iter().find(|e| e.num_terms() == 1) {
        return e.support().into_iter().map(|v| (v, Rat::zero())).collect();
    }
    if let Some(branches) = eqs.iter().find_map(binomial_branches) {
        return branches;
    }
    let arity = eqs[0].arity();
    let mut counts = vec![0usize; arity];
    for e in eqs {
        for v in e.support() {
            counts[v] += 1;
        }
    }
    let Some(v) = (0..arity).max_by_key(|&v| (counts[v], std::cmp::Reverse(v))) else {
        return Vec::new();
    };
    // The variables of the smallest equation come next: fixing one of them
    // may leave a univariate equation with a rational root.
    let mut vars = vec![v];
    if let Some(e) = eqs.iter().min_by_key(|e| (e.support().len(), e.num_terms())) {
        vars.extend(e.support().into_iter().filter(|&w| w != v));
    }
    vars.iter()
        .flat_map(|&w| BRANCH_VALUES.iter().map(move |&(n, d)| (w, frac(n, d))))
        .collect()
}

/// Points on `c1 u^p + c2 v^q = 0`: the origin, then points away from the
/// axes, smallest first.
///
/// With `g = gcd(p, q)`, each rational root `w` of `z^g = -c2/c1` gives the
/// curve `u^(p/g) = w v^(q/g)`, parametrized by `u = w^a t^(q/g)`,
/// `v = w^b t^(p/g)` where `a (p/g) - b (q/g) = 1`. Each branch fixes one of
/// the two variables; the other then follows from a univariate equation.
fn binomial_branches(e: &MultiPoly) -> Option<Vec<(usize, Rat)>> {
    let terms: Vec<(&Vec<u32>, &Rat)> = e.terms().collect();
    let [(m1, c1), (m2, c2)] = terms[..] else { return None };
    let pure = |m: &Vec<u32>| {
        let nz: Vec<usize> = (0..m.len()).filter(|&i| m[i] > 0).collect();
        (nz.len() == 1).then(|| (nz[0], m[nz[0]]))
    };
    let ((u, p), (v, q)) = (pure(m1)?, pure(m2)?);
    if u == v {
        return None;
    }
    let g = p.gcd(&q);
    let (p, q) = (i64::from(p / g), i64::from(q / g));
    let a = (0..q).find(|a| (a * p) % q == 1 % q)?;
    let b = (a * p - 1) / q;
    let mut radicand = vec![Rat::zero(); g as usize + 1];
    radicand[0] = c2 / c1;
    radicand[g as usize] = Rat::one();
    let roots = UniPoly::new(radicand).rational_roots().unwrap_or_default();
    let power = |r: &Rat, e: i64| {
        let base = if e < 0 { r.recip() } else { r.clone() };
        num_traits::pow(base, e.unsigned_abs() as usize)
    };
    let height = |r: &Rat| num_traits::Signed::abs(r.numer()) + r.denom();
    let mut points: Vec<(Rat, Rat)> = Vec::new();
    for w in &roots {
        // Shifting (a, b) by (q, p) rescales t; a few shifts cover small points.
        for k in -2..=2 {
            let (wa, wb) = (power(w, a + k * q), power(w, b + k * p));
            for n in -6i64..=6 {
                for d in 1i64..=6 {
                    if n != 0 && n.gcd(&d) == 1 {
                        let t = frac(n, d);
                        points.push((&wa * power(&t, q), &wb * power(&t, p)));
                    }
                }
            }
        }
    }
    points.sort_by_key(|(x, y)| (height(x).max(height(y)), height(x) + height(y)));
    points.dedup();
    let mut branches = vec![(u, Rat::zero())];
    for (x, y) in points.into_iter().take(24) {
        for branch in [(u, x), (v, y)] {
            if !branches.contains(&branch) {
                branches.push(branch);
            }
        }
    }
    Some(branches)
}

/// Outcome of the coordinate test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoordinateVerdict {
    /// `witness.apply(p) == x`.
    Coordinate { witness: TameAuto },
    NotCoordinate { degree: u32 },
    Unknown { reason: String },
}

/// A polynomial is a coordinate iff its canonical form is linear.
pub fn is_coordinate(p: &BiPoly) -> Result<CoordinateVerdict> {
    if p.is_constant() {
        return Err(Error::ConstantInput);
    }
    let c = canonicalize(p);
    Ok(match &c.status {
        CanonStatus::LinearPoly => {
            let fix = to_x(&c.poly);
            let witness = if fix.same_map(&TameAuto::identity()) { c.auto.clone() } else { c.auto.then(&fix) };
            CoordinateVerdict::Coordinate { witness }
        }
        CanonStatus::Canonical => CoordinateVerdict::NotCoordinate { degree: degree(&c.poly) },
        status => CoordinateVerdict::Unknown {
            reason: format!("reduction stopped: {status}"),
        },
    })
}

/// Outcome of the necessary conditions for an irreducible simply connected
/// zero fiber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZlVerdict {
    /// Passes every clause; the only possible model is `x^k - y^l`.
    Candidate { k: u32, l: u32 },
    Reject { reasons: Vec<String> },
    /// The reduction needs a root outside the rationals.
    Undetermined { reason: String },
}

/// Screens `p` with the necessary conditions on a polynomial whose zero
/// fiber is irreducible and simply connected: the model `x^k - y^l` has
/// `gcd(k, l) = 1`, `max(k, l) <= deg p`, one of `k`, `l` divides `deg p`,
/// and the Newton polygon is a triangle whose leading part is a proper power
/// whenever one side divides the other.
pub fn zl_screen(p: &BiPoly) -> Result<ZlVerdict> {
    if p.is_constant() {
        return Err(Error::ConstantInput);
    }
    let deg = degree(p);
    if deg == 1 {
        return Ok(ZlVerdict::Candidate { k: 1, l: 1 });
    }
    let reject = |r: String| Ok(ZlVerdict::Reject { reasons: vec![r] });
    let Some(profile) = p.triangular_profile() else {
        return reject("(c) the Newton polygon is not a triangle".into());
    };
    if !profile.is_coprime_shape() {
        let leading = BiPoly::from_terms(p.edge_terms(&profile));
        let (_, mult) = leading.perfect_power_root()?;
        if mult < 2 {
            return reject(format!(
                "(c) {} | {} but the leading part is not a proper power",
                profile.n.min(profile.m),
                profile.n.max(profile.m)
            ));
        }
    }
    let c = canonicalize(p);
    let (k, l) = match &c.status {
        CanonStatus::Canonical => {
            let f = c.profile().unwrap();
            (f.n, f.m)
        }
        CanonStatus::LinearPoly => return Ok(ZlVerdict::Candidate { k: 1, l: 1 }),
        CanonStatus::NonTriangular => {
            return reject("(c) a reduction step left the triangular family".into());
        }
        CanonStatus::FieldObstruction(root) => {
            return Ok(ZlVerdict::Undetermined {
                reason: format!("reduction needs {root}"),
            })
        }
    };
    let mut reasons = Vec::new();
    let g = k.gcd(&l);
    if g != 1 {
        reasons.push(format!("(c) gcd({k}, {l}) = {g} != 1"));
    }
    if k.max(l) > deg {
        reasons.push(format!("(a) max({k}, {l}) > deg p = {deg}"));
    }
    if deg % k != 0 && deg % l != 0 {
        reasons.push(format!("(b) neither {k} nor {l} divides deg p = {deg}"));
    }
    Ok(if reasons.is_empty() {
        ZlVerdict::Candidate { k, l }
    } else {
        ZlVerdict::Reject { reasons }
    })
}

/// `x^k - y^l`.
pub fn zl_model(k: u32, l: u32) -> BiPoly {
    BiPoly::from_terms([((k, 0), int(1)), ((0, l), int(-1))])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[((u32, u32), i64)]) -> BiPoly {
        BiPoly::from_int_terms(terms)
    }

    fn curve(u: &[i64], v: &[i64]) -> ParamCurve {
        ParamCurve::new(UniPoly::from_ints(u), UniPoly::from_ints(v)).unwrap()
    }

    #[test]
    fn implicitize_examples() {
        let r = implicitize(&curve(&[0, 0, 1], &[0, 0, 0, 1])).unwrap();
        assert_eq!(r.p, p(&[((3, 0), 1), ((0, 2), -1)]));
        assert_eq!(r.mult, 1);
        let r = implicitize(&curve(&[0, 1], &[0, 0, 1])).unwrap();
        assert_eq!((r.p, r.mult), (p(&[((2, 0), 1), ((0, 1), -1)]), 1));
        let r = implicitize(&curve(&[0, 0, 1], &[0, 0, 1])).unwrap();
        assert_eq!((r.p, r.mult), (p(&[((1, 0), 1), ((0, 1), -1)]), 2));
        let r = implicitize(&curve(&[3], &[0, 1, 1])).unwrap();
        assert_eq!((r.p, r.mult), (p(&[((1, 0), 1), ((0, 0), -3)]), 2));
        assert_eq!(
            ParamCurve::new(UniPoly::from_ints(&[1]), UniPoly::from_ints(&[2])),
            Err(Error::DegenerateCurve)
        );
    }

    #[test]
    fn et_to_auto_examples() {
        assert_eq!(
            et_step_to_auto(&EtStep::AddPower1 { mu: int(1), k: 2 }),
            AutoStep::ElemX(UniPoly::from_ints(&[0, 0, -1]))
        );
        assert_eq!(
            et_step_to_auto(&EtStep::AddPower2 { mu: int(3), k: 2 }),
            AutoStep::ElemY(UniPoly::from_ints(&[0, 0, -3]))
        );
        assert_eq!(et_step_to_auto(&EtStep::identity()), AutoStep::Affine(Affine::identity()));
    }

    #[test]
    fn normalize_examples() {
        let (c, trace, auto) = normalize_curve(&curve(&[0, 0, 1, 1], &[0, 0, 0, 1]));
        assert_eq!(c, curve(&[0, 0, 1], &[0, 0, 0, 1]));
        assert_eq!(trace.steps.len(), 1);
        assert!(matches!(auto.steps[..], [AutoStep::Affine(_)]));

        let (c, trace, _) = normalize_curve(&curve(&[0, 1, 0, 0, 0, 0, 1], &[0, 0, 0, 1]));
        assert_eq!(c.pair(), PolyPair::new(UniPoly::t(), UniPoly::zero()));
        assert_eq!(trace.steps.len(), 2);

        let start = curve(&[0, 0, 1, 1], &[0, 0, 0, 1]);
        let (end, _, auto) = normalize_curve(&start);
        let lhs = auto.apply(&implicitize(&start).unwrap().p).normalized();
        assert_eq!(lhs, implicitize(&end).unwrap().p);
    }

    #[test]
    fn equivalence_examples() {
        let a = p(&[((2, 0), 1), ((0, 3), -1)]);
        let b = &(&BiPoly::x() + &BiPoly::y()).pow(2) - &p(&[((0, 3), 1)]);
        let d = decide_equivalence(&a, &b).unwrap();
        let EquivDecision::Equivalent { witness, scale } = &d else { panic!("{d:?}") };
        assert_eq!(witness.apply(&a), b.scale(scale));

        let c = p(&[((2, 0), 1), ((0, 5), -1)]);
        assert!(matches!(decide_equivalence(&a, &c).unwrap(), EquivDecision::Inequivalent { .. }));

        let d = decide_equivalence(&a, &a).unwrap();
        assert_eq!(d, EquivDecision::Equivalent { witness: TameAuto::identity(), scale: int(1) });
        assert_eq!(decide_equivalence(&a, &BiPoly::one()), Err(Error::ConstantInput));
    }

    #[test]
    fn equivalence_with_swap_and_scaling() {
        let a = p(&[((2, 0), 1), ((0, 3), -1)]);
        let b = p(&[((3, 0), 2), ((0, 2), -1)]);
        let d = decide_equivalence(&a, &b).unwrap();
        let EquivDecision::Equivalent { witness, scale } = &d else { panic!("{d:?}") };
        assert_eq!(witness.apply(&a), b.scale(scale));
    }

    #[test]
    fn same_degree_inequivalent() {
        // Both canonical of degree 5, but with different profiles.
        let a = p(&[((2, 0), 1), ((0, 5), -1)]);
        let b = p(&[((3, 0), 1), ((0, 5), -1)]);
        assert!(matches!(decide_equivalence(&a, &b).unwrap(), EquivDecision::Inequivalent { .. }));
    }

    #[test]
    fn coordinate_examples() {
        let c = is_coordinate(&p(&[((1, 0), 1), ((0, 3), 1)])).unwrap();
        let CoordinateVerdict::Coordinate { witness } = c else { panic!() };
        assert_eq!(witness.apply(&p(&[((1, 0), 1), ((0, 3), 1)])), BiPoly::x());
        assert_eq!(
            is_coordinate(&p(&[((2, 0), 1), ((0, 3), -1)])).unwrap(),
            CoordinateVerdict::NotCoordinate { degree: 3 }
        );
        assert!(matches!(is_coordinate(&BiPoly::x()).unwrap(), CoordinateVerdict::Coordinate { .. }));
    }

    #[test]
    fn zl_examples() {
        assert_eq!(zl_screen(&p(&[((2, 0), 1), ((0, 3), -1)])).unwrap(), ZlVerdict::Candidate { k: 2, l: 3 });
        let ZlVerdict::Reject { reasons } = zl_screen(&p(&[((4, 0), 1), ((0, 6), -1)])).unwrap() else { panic!() };
        assert!(reasons[0].contains("gcd(4, 6) = 2"));
        assert!(matches!(
            zl_screen(&p(&[((3, 0), 1), ((0, 2), 1), ((2, 1), 1)])).unwrap(),
            ZlVerdict::Reject { .. }
        ));
        // (x + y^2)^2 - y^3 reduces to x^2 - y^3.
        let q = &(&BiPoly::x() + &p(&[((0, 2), 1)])).pow(2) - &p(&[((0, 3), 1)]);
        assert_eq!(zl_screen(&q).unwrap(), ZlVerdict::Candidate { k: 2, l: 3 });
    }
}
