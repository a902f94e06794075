//! Tame automorphisms of the polynomial plane: application, composition,
//! inversion, elementary decomposition, triangular degree reduction and
//! canonical forms.
//!
//! A [`TameAuto`] is a list of steps applied left to right to a polynomial:
//! applying `[s1, s2]` to `p` substitutes `s1` into `p` and then `s2` into the
//! result. Its images of `x` and `y` therefore describe the automorphism as
//! an endomorphism of `Q[x, y]`.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{BiPoly, Rat, TriangularForm, UniPoly};

/// `x -> a1*x + a2*y + a3`, `y -> b1*x + b2*y + b3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Affine {
    pub a1: Rat,
    pub a2: Rat,
    pub a3: Rat,
    pub b1: Rat,
    pub b2: Rat,
    pub b3: Rat,
}

impl Affine {
    pub fn new(coeffs: [Rat; 6]) -> Self {
        let [a1, a2, a3, b1, b2, b3] = coeffs;
        Self { a1, a2, a3, b1, b2, b3 }
    }

    pub fn identity() -> Self {
        Self::linear(Rat::one(), Rat::zero(), Rat::zero(), Rat::one())
    }

    pub fn swap() -> Self {
        Self::linear(Rat::zero(), Rat::one(), Rat::one(), Rat::zero())
    }

    pub fn linear(a1: Rat, a2: Rat, b1: Rat, b2: Rat) -> Self {
        Self::new([a1, a2, Rat::zero(), b1, b2, Rat::zero()])
    }

    /// `x -> x + mu*y`.
    pub fn shear_x(mu: Rat) -> Self {
        Self::linear(Rat::one(), mu, Rat::zero(), Rat::one())
    }

    /// `y -> y + mu*x`.
    pub fn shear_y(mu: Rat) -> Self {
        Self::linear(Rat::one(), Rat::zero(), mu, Rat::one())
    }

    pub fn det(&self) -> Rat {
        &self.a1 * &self.b2 - &self.a2 * &self.b1
    }

    pub fn coeffs(&self) -> [&Rat; 6] {
        [&self.a1, &self.a2, &self.a3, &self.b1, &self.b2, &self.b3]
    }

    pub fn inverse(&self) -> Affine {
        let det = self.det();
        let (a1, a2) = (&self.b2 / &det, -&self.a2 / &det);
        let (b1, b2) = (-&self.b1 / &det, &self.a1 / &det);
        let a3 = -(&a1 * &self.a3 + &a2 * &self.b3);
        let b3 = -(&b1 * &self.a3 + &b2 * &self.b3);
        Affine { a1, a2, a3, b1, b2, b3 }
    }

    fn images(&self) -> (BiPoly, BiPoly) {
        let lin = |c1: &Rat, c2: &Rat, c3: &Rat| {
            BiPoly::from_terms([((1, 0), c1.clone()), ((0, 1), c2.clone()), ((0, 0), c3.clone())])
        };
        (lin(&self.a1, &self.a2, &self.a3), lin(&self.b1, &self.b2, &self.b3))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AutoStep {
    /// `x -> x + f(y)`, `y -> y`.
    ElemX(UniPoly),
    /// `x -> x`, `y -> y + f(x)`.
    ElemY(UniPoly),
    Affine(Affine),
}

impl AutoStep {
    pub fn validate(&self) -> Result<()> {
        match self {
            AutoStep::Affine(a) if a.det().is_zero() => Err(Error::DegenerateLinear),
            _ => Ok(()),
        }
    }

    /// Images of `x` and `y`.
    pub fn images(&self) -> (BiPoly, BiPoly) {
        match self {
            AutoStep::ElemX(f) => (&BiPoly::x() + &BiPoly::from_uni_y(f), BiPoly::y()),
            AutoStep::ElemY(f) => (BiPoly::x(), &BiPoly::y() + &BiPoly::from_uni_x(f)),
            AutoStep::Affine(a) => a.images(),
        }
    }

    pub fn apply(&self, p: &BiPoly) -> BiPoly {
        let (sx, sy) = self.images();
        match self {
            // The substitution has a fast path for `sy = y`.
            AutoStep::ElemY(_) => p.swap_xy().substitute(&sy.swap_xy(), &BiPoly::y()).swap_xy(),
            _ => p.substitute(&sx, &sy),
        }
    }

    pub fn inverse(&self) -> AutoStep {
        match self {
            AutoStep::ElemX(f) => AutoStep::ElemX(-f),
            AutoStep::ElemY(f) => AutoStep::ElemY(-f),
            AutoStep::Affine(a) => AutoStep::Affine(a.inverse()),
        }
    }
}

impl fmt::Display for AutoStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AutoStep::ElemX(g) => write!(f, "x -> x + ({})", g.fmt_with("y")),
            AutoStep::ElemY(g) => write!(f, "y -> y + ({})", g.fmt_with("x")),
            AutoStep::Affine(a) => {
                let (sx, sy) = a.images();
                write!(f, "x -> {sx}, y -> {sy}")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TameAuto {
    pub steps: Vec<AutoStep>,
}

impl TameAuto {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn new(steps: Vec<AutoStep>) -> Self {
        Self { steps }
    }

    pub fn single(step: AutoStep) -> Self {
        Self { steps: vec![step] }
    }

    pub fn validate(&self) -> Result<()> {
        self.steps.iter().try_for_each(AutoStep::validate)
    }

    pub fn apply(&self, p: &BiPoly) -> BiPoly {
        self.steps.iter().fold(p.clone(), |acc, s| s.apply(&acc))
    }

    /// Images of `x` and `y` under the represented endomorphism.
    pub fn images(&self) -> (BiPoly, BiPoly) {
        // Composed from the last step backwards, so only the small step
        // images are ever substituted into.
        self.steps.iter().rev().fold((BiPoly::x(), BiPoly::y()), |(gx, gy), step| {
            let (sx, sy) = step.images();
            (sx.substitute(&gx, &gy), sy.substitute(&gx, &gy))
        })
    }

    /// Total degree of the map (largest degree of the two images).
    pub fn degree(&self) -> u32 {
        let (gx, gy) = self.images();
        gx.total_degree().max(gy.total_degree()).unwrap_or(0)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &TameAuto) -> TameAuto {
        let mut steps = self.steps.clone();
        steps.extend(other.steps.iter().cloned());
        TameAuto { steps }
    }

    pub fn invert(&self) -> TameAuto {
        TameAuto {
            steps: self.steps.iter().rev().map(AutoStep::inverse).collect(),
        }
    }

    pub fn same_map(&self, other: &TameAuto) -> bool {
        self.images() == other.images()
    }
}

/// `compose(a, b)` applies `a` first, then `b`.
pub fn compose(alpha: &TameAuto, beta: &TameAuto) -> TameAuto {
    alpha.then(beta)
}

pub fn invert(alpha: &TameAuto) -> TameAuto {
    alpha.invert()
}

pub fn apply_auto(alpha: &TameAuto, p: &BiPoly) -> BiPoly {
    alpha.apply(p)
}

/// Writes the endomorphism `x -> g1, y -> g2` as a product of elementary and
/// affine steps, or returns `None` when it is not an automorphism.
///
/// While the pair is not affine the component of larger degree must drop
/// by subtracting `mu * other^d`, where `mu` and `d` are read off the leading
/// forms; each such move is recorded as the next step.
pub fn decompose(g1: &BiPoly, g2: &BiPoly) -> Option<TameAuto> {
    let (mut g1, mut g2) = (g1.clone(), g2.clone());
    let mut steps = Vec::new();
    loop {
        let (d1, d2) = (g1.total_degree()?, g2.total_degree()?);
        if d1 <= 1 && d2 <= 1 {
            let affine = Affine::new([
                g1.coeff(1, 0),
                g1.coeff(0, 1),
                g1.coeff(0, 0),
                g2.coeff(1, 0),
                g2.coeff(0, 1),
                g2.coeff(0, 0),
            ]);
            if affine.det().is_zero() {
                return None;
            }
            if affine != Affine::identity() {
                steps.push(AutoStep::Affine(affine));
            }
            return Some(TameAuto { steps });
        }
        let first_is_larger = d1 >= d2;
        let (big, small) = if first_is_larger { (&g1, &g2) } else { (&g2, &g1) };
        let (db, ds) = (big.total_degree()?, small.total_degree()?);
        let (mu, d) = degree_drop(big, small, db, ds)?;
        let reduced = big - &small.pow(d).scale(&mu);
        let step = match (first_is_larger, d) {
            (true, 1) => AutoStep::Affine(Affine::shear_x(mu)),
            (false, 1) => AutoStep::Affine(Affine::shear_y(mu)),
            (true, _) => AutoStep::ElemX(UniPoly::monomial(mu, d as usize)),
            (false, _) => AutoStep::ElemY(UniPoly::monomial(mu, d as usize)),
        };
        steps.push(step);
        if first_is_larger {
            g1 = reduced;
        } else {
            g2 = reduced;
        }
    }
}

/// The pair `(mu, d)` with `deg(big - mu*small^d) < deg(big)`, if any.
pub(crate) fn degree_drop(big: &BiPoly, small: &BiPoly, db: u32, ds: u32) -> Option<(Rat, u32)> {
    if ds == 0 || db % ds != 0 {
        return None;
    }
    let d = db / ds;
    let lf_big = big.leading_form();
    let lf_pow = small.leading_form().pow(d);
    let ((i, j), c_big) = lf_big.leading_term()?;
    let c_pow = lf_pow.coeff(i, j);
    if c_pow.is_zero() {
        return None;
    }
    let mu = c_big / c_pow;
    (lf_big == lf_pow.scale(&mu)).then_some((mu, d))
}

/// A root the reduction needs that is not rational.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RequiredRoot {
    /// `radicand^(1/index)`.
    Radical { index: u32, radicand: Rat },
    /// A root of the given polynomial in `mu`, none of which is rational.
    RootOf(UniPoly),
}

impl fmt::Display for RequiredRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RequiredRoot::Radical { index, radicand } => {
                let r = crate::poly::rat::fmt_rat(radicand);
                let r = if radicand.is_integer() && *radicand >= Rat::zero() {
                    r
                } else {
                    format!("({r})")
                };
                match index {
                    2 => write!(f, "√{r}"),
                    3 => write!(f, "∛{r}"),
                    _ => write!(f, "{r}^(1/{index})"),
                }
            }
            RequiredRoot::RootOf(p) => write!(f, "a root of {}", p.fmt_with("mu")),
        }
    }
}

/// Outcome of one triangular reduction attempt.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TriangularStep {
    /// The step removes the pure-power term of the heavier variable.
    Reduced { poly: BiPoly, step: AutoStep },
    /// Neither of `n`, `m` divides the other.
    Irreducible,
    Obstructed(RequiredRoot),
}

/// One reduction of a triangular polynomial `a x^n + b y^m + ...`.
///
/// If `m = k*n`, the step `x -> x + mu*y^k` maps the edge terms
/// `x^i y^(k(n-i))` onto multiples of `y^m` with total coefficient
/// `E(mu) = sum c_i mu^i`; a rational root of `E` cancels `y^m` and, for
/// `k >= 2`, lowers the total degree. Without mixed edge terms `E` is
/// `a*mu^n + b`. The case `n = k*m` is symmetric. For `k = 1` the step is
/// affine and removes the pure term while keeping the degree.
///
/// When `E` has several rational roots the largest is used.
pub fn reduce_triangular_once(p: &BiPoly) -> Result<TriangularStep> {
    let profile = p.triangular_profile().ok_or(Error::NotTriangularInput)?;
    let edge = p.edge_terms(&profile);
    let mut obstruction = None;
    for along_x in [true, false] {
        let (light, heavy) = if along_x { (profile.n, profile.m) } else { (profile.m, profile.n) };
        if heavy % light != 0 {
            continue;
        }
        let k = heavy / light;
        let mut coeffs = vec![Rat::zero(); light as usize + 1];
        for ((i, j), c) in &edge {
            let e = if along_x { *i } else { *j };
            coeffs[e as usize] += c;
        }
        let edge_poly = UniPoly::new(coeffs);
        let root = edge_poly.rational_roots().and_then(|r| r.last().cloned());
        let Some(mu) = root else {
            obstruction.get_or_insert_with(|| required_root(&edge_poly));
            continue;
        };
        let step = match (along_x, k) {
            (true, 1) => AutoStep::Affine(Affine::shear_x(mu)),
            (false, 1) => AutoStep::Affine(Affine::shear_y(mu)),
            (true, _) => AutoStep::ElemX(UniPoly::monomial(mu, k as usize)),
            (false, _) => AutoStep::ElemY(UniPoly::monomial(mu, k as usize)),
        };
        return Ok(TriangularStep::Reduced { poly: step.apply(p), step });
    }
    Ok(match obstruction {
        Some(o) => TriangularStep::Obstructed(o),
        None => TriangularStep::Irreducible,
    })
}

fn required_root(edge_poly: &UniPoly) -> RequiredRoot {
    let deg = edge_poly.degree().unwrap_or(0);
    let nonzero = edge_poly.coeffs().iter().filter(|c| !c.is_zero()).count();
    if nonzero == 2 && !edge_poly.coeff(0).is_zero() {
        RequiredRoot::Radical {
            index: deg as u32,
            radicand: -edge_poly.coeff(0) / edge_poly.coeff(deg),
        }
    } else {
        RequiredRoot::RootOf(edge_poly.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CanonStatus {
    /// Triangular with neither of `n`, `m` dividing the other.
    Canonical,
    /// Total degree at most one.
    LinearPoly,
    /// The current polynomial is not of triangular form.
    NonTriangular,
    FieldObstruction(RequiredRoot),
}

impl fmt::Display for CanonStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CanonStatus::Canonical => f.write_str("canonical"),
            CanonStatus::LinearPoly => f.write_str("linear"),
            CanonStatus::NonTriangular => f.write_str("non-triangular"),
            CanonStatus::FieldObstruction(r) => write!(f, "field obstruction (needs {r})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Canonicalization {
    pub poly: BiPoly,
    /// Satisfies `auto.apply(input) == poly`.
    pub auto: TameAuto,
    pub status: CanonStatus,
    /// Total degree after each step of `auto`.
    pub degrees: Vec<u32>,
}

impl Canonicalization {
    pub fn profile(&self) -> Option<TriangularForm> {
        match self.status {
            CanonStatus::Canonical => self.poly.triangular_profile(),
            _ => None,
        }
    }
}

/// Greedy triangular reduction until the polynomial is canonical, linear,
/// leaves the triangular family, or needs an irrational root.
pub fn canonicalize(p: &BiPoly) -> Canonicalization {
    let mut poly = p.clone();
    let mut steps = Vec::new();
    let mut degrees = Vec::new();
    let status = loop {
        let Some(profile) = poly.triangular_profile() else {
            break if poly.total_degree().unwrap_or(0) <= 1 {
                CanonStatus::LinearPoly
            } else {
                CanonStatus::NonTriangular
            };
        };
        if profile.is_coprime_shape() {
            break CanonStatus::Canonical;
        }
        match reduce_triangular_once(&poly).expect("profile checked") {
            TriangularStep::Reduced { poly: next, step } => {
                degrees.push(next.total_degree().unwrap_or(0));
                steps.push(step);
                poly = next;
            }
            TriangularStep::Obstructed(root) => break CanonStatus::FieldObstruction(root),
            TriangularStep::Irreducible => unreachable!("divisibility checked"),
        }
    };
    Canonicalization {
        poly,
        auto: TameAuto { steps },
        status,
        degrees,
    }
}

/// True iff `p` is triangular with neither of `n`, `m` dividing the other;
/// no automorphism lowers the degree of such a polynomial.
pub fn degree_irreducible(p: &BiPoly) -> bool {
    p.triangular_profile().is_some_and(|f| f.is_coprime_shape())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InequivalenceVerdict {
    /// Canonical profiles `(n, m)` of both inputs, with different maxima.
    Inequivalent { p_profile: (u32, u32), q_profile: (u32, u32) },
    Inconclusive(String),
}

/// One-directional inequivalence test: canonical forms of both inputs with
/// coprime triangular shapes and different maximal degrees cannot be related
/// by an automorphism.
pub fn inequivalent_by_theorem_1_1(p: &BiPoly, q: &BiPoly) -> InequivalenceVerdict {
    let cp = canonicalize(p);
    let cq = canonicalize(q);
    for c in [&cp, &cq] {
        if let CanonStatus::FieldObstruction(r) = &c.status {
            return InequivalenceVerdict::Inconclusive(format!("reduction needs {r}"));
        }
    }
    match (cp.profile(), cq.profile()) {
        (Some(fp), Some(fq)) if fp.max_degree() != fq.max_degree() => InequivalenceVerdict::Inequivalent {
            p_profile: (fp.n, fp.m),
            q_profile: (fq.n, fq.m),
        },
        (Some(fp), Some(fq)) => InequivalenceVerdict::Inconclusive(format!(
            "canonical profiles ({}, {}) and ({}, {}) share the maximal degree {}",
            fp.n,
            fp.m,
            fq.n,
            fq.m,
            fp.max_degree()
        )),
        _ => InequivalenceVerdict::Inconclusive(format!(
            "canonical forms are not both coprime triangular ({} / {})",
            cp.status, cq.status
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat::int;

    fn p(terms: &[((u32, u32), i64)]) -> BiPoly {
        BiPoly::from_int_terms(terms)
    }

    #[test]
    fn apply_examples() {
        let f = p(&[((2, 0), 1), ((0, 4), -1)]);
        let a = TameAuto::single(AutoStep::ElemX(UniPoly::from_ints(&[0, 0, 1])));
        assert_eq!(a.apply(&f), p(&[((2, 0), 1), ((1, 2), 2)]));
        assert_eq!(TameAuto::identity().apply(&f), f);
        let swap = TameAuto::single(AutoStep::Affine(Affine::swap()));
        assert_eq!(swap.apply(&p(&[((2, 0), 1), ((0, 3), -1)])), p(&[((0, 2), 1), ((3, 0), -1)]));
    }

    #[test]
    fn elem_y_matches_generic_substitution() {
        let f = p(&[((2, 1), 3), ((0, 3), -1), ((1, 0), 2)]);
        let s = AutoStep::ElemY(UniPoly::from_ints(&[1, 0, 2]));
        let (sx, sy) = s.images();
        assert_eq!(s.apply(&f), f.substitute(&sx, &sy));
    }

    #[test]
    fn inverses() {
        let e = AutoStep::ElemX(UniPoly::from_ints(&[0, 0, 1]));
        assert_eq!(e.inverse(), AutoStep::ElemX(UniPoly::from_ints(&[0, 0, -1])));
        let s = AutoStep::Affine(Affine::new([int(0), int(1), int(0), int(1), int(0), int(0)]));
        assert_eq!(s.inverse(), s);
        let a = TameAuto::new(vec![
            e,
            AutoStep::Affine(Affine::new([int(2), int(1), int(3), int(1), int(1), int(-1)])),
            AutoStep::ElemY(UniPoly::from_ints(&[1, 1, 0, 1])),
        ]);
        let id = a.then(&a.invert());
        assert_eq!(id.images(), (BiPoly::x(), BiPoly::y()));
    }

    #[test]
    fn decompose_examples() {
        let g1 = p(&[((1, 0), 1), ((0, 2), 1)]);
        let d = decompose(&g1, &BiPoly::y()).unwrap();
        assert_eq!(d.steps[0], AutoStep::ElemX(UniPoly::from_ints(&[0, 0, 1])));
        assert_eq!(d.images(), (g1, BiPoly::y()));

        let d = decompose(&BiPoly::y(), &BiPoly::x()).unwrap();
        assert_eq!(d.steps, vec![AutoStep::Affine(Affine::swap())]);

        assert_eq!(decompose(&p(&[((2, 0), 1)]), &BiPoly::y()), None);
    }

    #[test]
    fn reduce_examples() {
        let f = p(&[((2, 0), 1), ((0, 4), -1), ((0, 1), 1)]);
        let TriangularStep::Reduced { poly, step } = reduce_triangular_once(&f).unwrap() else {
            panic!("expected a reduction");
        };
        assert_eq!(poly, p(&[((2, 0), 1), ((1, 2), 2), ((0, 1), 1)]));
        assert_eq!(step, AutoStep::ElemX(UniPoly::from_ints(&[0, 0, 1])));
        assert_eq!(poly.total_degree(), Some(3));

        assert_eq!(
            reduce_triangular_once(&p(&[((2, 0), 1), ((0, 3), -1)])).unwrap(),
            TriangularStep::Irreducible
        );
        let obstructed = reduce_triangular_once(&p(&[((2, 0), 1), ((0, 2), -2)])).unwrap();
        let TriangularStep::Obstructed(root) = obstructed else { panic!() };
        assert_eq!(root, RequiredRoot::Radical { index: 2, radicand: int(2) });
        assert_eq!(root.to_string(), "√2");
        assert_eq!(
            reduce_triangular_once(&p(&[((2, 0), 1), ((1, 5), 1)])),
            Err(Error::NotTriangularInput)
        );
    }

    #[test]
    fn mixed_edge_terms_use_the_edge_polynomial() {
        // x + (y + x^3)^2: edge polynomial (1 + mu)^2.
        let f = &BiPoly::x() + &p(&[((0, 1), 1), ((3, 0), 1)]).pow(2);
        let TriangularStep::Reduced { poly, step } = reduce_triangular_once(&f).unwrap() else { panic!() };
        assert_eq!(step, AutoStep::ElemY(UniPoly::monomial(int(-1), 3)));
        assert_eq!(poly, p(&[((1, 0), 1), ((0, 2), 1)]));
    }

    #[test]
    fn canonicalize_examples() {
        let c = canonicalize(&p(&[((1, 0), 1), ((0, 3), 1), ((0, 1), 1)]));
        assert_eq!(c.poly, BiPoly::x());
        assert_eq!(c.status, CanonStatus::LinearPoly);
        assert_eq!(c.auto.steps.len(), 2);

        let cusp = p(&[((2, 0), 1), ((0, 3), -1)]);
        let c = canonicalize(&cusp);
        assert_eq!((c.poly.clone(), c.auto.steps.len(), c.status), (cusp, 0, CanonStatus::Canonical));

        let c = canonicalize(&p(&[((2, 0), 1), ((0, 4), -1)]));
        assert_eq!(c.poly, p(&[((2, 0), 1), ((1, 2), 2)]));
        assert_eq!(c.auto.steps, vec![AutoStep::ElemX(UniPoly::from_ints(&[0, 0, 1]))]);
        assert_eq!(c.status, CanonStatus::NonTriangular);
    }

    #[test]
    fn degree_irreducible_examples() {
        assert!(degree_irreducible(&p(&[((2, 0), 1), ((0, 3), -1), ((1, 1), 1)])));
        assert!(!degree_irreducible(&p(&[((2, 0), 1), ((0, 4), -1)])));
        assert!(!degree_irreducible(&p(&[((1, 0), 1), ((0, 2), 1)])));
    }

    #[test]
    fn theorem_examples() {
        let f1 = p(&[((0, 1), 1), ((7, 0), -1), ((0, 6), 1)]);
        let f2 = &BiPoly::y() - &p(&[((7, 0), 1), ((0, 3), -1)]).pow(2);
        assert_eq!(
            inequivalent_by_theorem_1_1(&f1, &f2),
            InequivalenceVerdict::Inequivalent { p_profile: (7, 6), q_profile: (14, 6) }
        );
        let a = p(&[((2, 0), 1), ((0, 3), -1)]);
        let b = p(&[((3, 0), 1), ((0, 2), -1)]);
        assert!(matches!(inequivalent_by_theorem_1_1(&a, &b), InequivalenceVerdict::Inconclusive(_)));
        assert!(matches!(inequivalent_by_theorem_1_1(&a, &a), InequivalenceVerdict::Inconclusive(_)));
    }
}
