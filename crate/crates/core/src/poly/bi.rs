use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rat::{self, Rat};
use super::uni::UniPoly;
use crate::error::{Error, Result};

/// Sparse bivariate polynomial in `x`, `y` over the rationals.
///
/// Terms are keyed by the exponent pair `(i, j)` of `x^i y^j`. Zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rat>,
}

/// Profile of a polynomial `a x^n + b y^m + sum c_ij x^i y^j` whose terms all
/// satisfy `i*m + j*n <= m*n`: the Newton polygon is the triangle with
/// vertices `(0,0)`, `(n,0)`, `(0,m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangularForm {
    /// Degree of the pure-`x` term.
    pub n: u32,
    /// Degree of the pure-`y` term.
    pub m: u32,
    /// Coefficient of `x^n`.
    pub a: Rat,
    /// Coefficient of `y^m`.
    pub b: Rat,
}

impl TriangularForm {
    /// True when neither of `n`, `m` divides the other.
    pub fn is_coprime_shape(&self) -> bool {
        self.m % self.n != 0 && self.n % self.m != 0
    }

    pub fn max_degree(&self) -> u32 {
        self.n.max(self.m)
    }
}

/// Graded-lex key with `x > y`.
fn grlex_key(&(i, j): &(u32, u32)) -> (u32, u32) {
    (i + j, i)
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `c * x^i * y^j`.
    pub fn monomial(c: Rat, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        Self { terms }
    }

    pub fn x() -> Self {
        Self::monomial(Rat::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(Rat::one(), 0, 1)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), Rat)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_int_terms(terms: &[((u32, u32), i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(e, c)| (e, rat::int(c))))
    }

    /// `u(x)` as a bivariate polynomial.
    pub fn from_uni_x(u: &UniPoly) -> Self {
        Self::from_terms(
            u.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| ((i as u32, 0), c.clone())),
        )
    }

    /// `v(y)` as a bivariate polynomial.
    pub fn from_uni_y(v: &UniPoly) -> Self {
        Self::from_terms(
            v.coeffs()
                .iter()
                .enumerate()
                .map(|(j, c)| ((0, j as u32), c.clone())),
        )
    }

    pub(crate) fn add_term(&mut self, e: (u32, u32), c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Integer numerators over the least common denominator.
    fn integer_form(&self) -> (Vec<((u32, u32), BigInt)>, BigInt) {
        let den = self.terms.values().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let nums = self.terms.iter().map(|(e, c)| (*e, c.numer() * (&den / c.denom()))).collect();
        (nums, den)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&(u32, u32), &Rat)> + '_ {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rat {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&(i, j)| i == 0 && j == 0)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    /// Leading term under graded-lex order with `x > y`.
    pub fn leading_term(&self) -> Option<((u32, u32), &Rat)> {
        self.terms
            .iter()
            .max_by_key(|(e, _)| grlex_key(e))
            .map(|(e, c)| (*e, c))
    }

    /// Top-degree homogeneous component.
    pub fn leading_form(&self) -> BiPoly {
        match self.total_degree() {
            None => BiPoly::zero(),
            Some(d) => Self {
                terms: self
                    .terms
                    .iter()
                    .filter(|(&(i, j), _)| i + j == d)
                    .map(|(e, c)| (*e, c.clone()))
                    .collect(),
            },
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn swap_xy(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect(),
        }
    }

    pub fn eval(&self, x: &Rat, y: &Rat) -> Rat {
        self.terms.iter().fold(Rat::zero(), |acc, (&(i, j), c)| {
            acc + c * num_traits::pow(x.clone(), i as usize) * num_traits::pow(y.clone(), j as usize)
        })
    }

    /// `p(u(t), v(t))`.
    pub fn eval_uni(&self, u: &UniPoly, v: &UniPoly) -> UniPoly {
        let dy = self.degree_y().unwrap_or(0);
        let mut v_pows = vec![UniPoly::one()];
        for _ in 0..dy {
            let next = v_pows.last().unwrap() * v;
            v_pows.push(next);
        }
        let mut acc = UniPoly::zero();
        for row in self.by_x_degree().iter().rev() {
            acc = &acc * u;
            for (j, c) in row {
                acc = &acc + &v_pows[*j as usize].scale(c);
            }
        }
        acc
    }

    /// Groups terms by x-exponent: entry `i` lists `(j, c)` for `x^i y^j`.
    fn by_x_degree(&self) -> Vec<Vec<(u32, Rat)>> {
        let n = self.degree_x().map_or(0, |d| d as usize + 1);
        let mut out = vec![Vec::new(); n];
        for (&(i, j), c) in &self.terms {
            out[i as usize].push((j, c.clone()));
        }
        out
    }

    fn is_var_y(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 1)).is_some_and(One::is_one)
    }

    /// Replaces `x` by `sx` and `y` by `sy` and expands.
    pub fn substitute(&self, sx: &BiPoly, sy: &BiPoly) -> BiPoly {
        let by_x = self.by_x_degree();
        let y_is_y = sy.is_var_y();
        // Powers of sy shared by all x-rows.
        let max_j = self.degree_y().unwrap_or(0);
        let sy_pows: Vec<BiPoly> = if y_is_y {
            Vec::new()
        } else {
            let mut v = vec![BiPoly::one()];
            for _ in 0..max_j {
                let next = v.last().unwrap() * sy;
                v.push(next);
            }
            v
        };
        let mut acc = BiPoly::zero();
        for row in by_x.iter().rev() {
            acc = &acc * sx;
            for (j, c) in row {
                if y_is_y {
                    acc.add_term((0, *j), c.clone());
                } else {
                    acc = &acc + &sy_pows[*j as usize].scale(c);
                }
            }
        }
        acc
    }

    /// The face polynomials `(p(0,t), p(t,0))`.
    pub fn face_polynomials(&self) -> (UniPoly, UniPoly) {
        let dy = self.degree_y().unwrap_or(0) as usize;
        let dx = self.degree_x().unwrap_or(0) as usize;
        let mut on_y = vec![Rat::zero(); dy + 1];
        let mut on_x = vec![Rat::zero(); dx + 1];
        for (&(i, j), c) in &self.terms {
            if i == 0 {
                on_y[j as usize] = c.clone();
            }
            if j == 0 {
                on_x[i as usize] = c.clone();
            }
        }
        (UniPoly::new(on_y), UniPoly::new(on_x))
    }

    /// Triangular Newton-form profile, or `None` when a pure `x` or pure `y`
    /// term is missing or some term lies above the edge `i*m + j*n = m*n`.
    /// Boundary terms with `i = 0` or `j = 0` are admitted.
    pub fn triangular_profile(&self) -> Option<TriangularForm> {
        let n = self.terms.keys().filter(|&&(i, j)| j == 0 && i > 0).map(|&(i, _)| i).max()?;
        let m = self.terms.keys().filter(|&&(i, j)| i == 0 && j > 0).map(|&(_, j)| j).max()?;
        let (n64, m64) = (u64::from(n), u64::from(m));
        let ok = self
            .terms
            .keys()
            .all(|&(i, j)| u64::from(i) * m64 + u64::from(j) * n64 <= m64 * n64);
        ok.then(|| TriangularForm {
            n,
            m,
            a: self.coeff(n, 0),
            b: self.coeff(0, m),
        })
    }

    /// Terms on the upper edge `i*m + j*n = m*n` of the profile's triangle.
    pub fn edge_terms(&self, profile: &TriangularForm) -> Vec<((u32, u32), Rat)> {
        let (n, m) = (u64::from(profile.n), u64::from(profile.m));
        self.terms
            .iter()
            .filter(|(&(i, j), _)| u64::from(i) * m + u64::from(j) * n == m * n)
            .map(|(e, c)| (*e, c.clone()))
            .collect()
    }

    /// Scales to a primitive integer polynomial whose graded-lex leading
    /// coefficient is positive.
    pub fn normalized(&self) -> BiPoly {
        let Some((_, lc)) = self.leading_term() else {
            return BiPoly::zero();
        };
        let mut c = rat::content(self.terms.values());
        if lc.is_negative() {
            c = -c;
        }
        self.scale(&c.recip())
    }

    /// Exact quotient `f / g`, or `Ok(None)` when `g` does not divide `f`.
    pub fn exact_divide(&self, g: &BiPoly) -> Result<Option<BiPoly>> {
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Some(BiPoly::zero()));
        }
        // Lex order with the variable in which g has larger degree as the
        // main variable; the key maps an exponent to its order position.
        let y_main = g.degree_y() > g.degree_x();
        let key = |(i, j): (u32, u32)| if y_main { (j, i) } else { (i, j) };
        let unkey = key;
        let mut rem: BTreeMap<(u32, u32), Rat> =
            self.terms.iter().map(|(e, c)| (key(*e), c.clone())).collect();
        let g_terms: Vec<((u32, u32), Rat)> = g.terms.iter().map(|(e, c)| (key(*e), c.clone())).collect();
        let &(g_lead, ref g_lc) = g_terms.iter().max_by_key(|(e, _)| *e).unwrap();
        let g_lc_inv = g_lc.recip();
        let mut quot = BiPoly::zero();
        while let Some((lead, c)) = rem.pop_last() {
            if lead.0 < g_lead.0 || lead.1 < g_lead.1 {
                return Ok(None);
            }
            let shift = (lead.0 - g_lead.0, lead.1 - g_lead.1);
            let q = &c * &g_lc_inv;
            for (e, gc) in &g_terms {
                if *e == g_lead {
                    continue;
                }
                let k = (e.0 + shift.0, e.1 + shift.1);
                let delta = -(&q * gc);
                use std::collections::btree_map::Entry;
                match rem.entry(k) {
                    Entry::Vacant(v) => {
                        v.insert(delta);
                    }
                    Entry::Occupied(mut o) => {
                        *o.get_mut() += delta;
                        if o.get().is_zero() {
                            o.remove();
                        }
                    }
                }
            }
            quot.add_term(unkey(shift), q);
        }
        Ok(Some(quot))
    }

    pub fn divides(&self, f: &BiPoly) -> Result<bool> {
        Ok(f.exact_divide(self)?.is_some())
    }

    /// Writes `p = c * r^mult` with `mult` maximal; returns the normalized
    /// `r` and `mult`.
    pub fn perfect_power_root(&self) -> Result<(BiPoly, u32)> {
        let deg = self.total_degree().ok_or(Error::ConstantInput)?;
        if deg == 0 {
            return Err(Error::ConstantInput);
        }
        let mut es: Vec<u32> = (2..=deg).filter(|e| deg % e == 0).collect();
        es.reverse();
        for e in es {
            if let Some(r) = self.nth_root(e) {
                return Ok((r.normalized(), e));
            }
        }
        Ok((self.normalized(), 1))
    }

    /// `r` with `self = c * r^e` for some constant `c`, if one exists.
    /// Terms of `r` are recovered from the top down in graded-lex order.
    fn nth_root(&self, e: u32) -> Option<BiPoly> {
        let ((li, lj), lc) = self.leading_term()?;
        if li % e != 0 || lj % e != 0 {
            return None;
        }
        // Cheap necessary condition on the graded-lex trailing term.
        let (ti, tj) = *self.terms.keys().min_by_key(|e| grlex_key(e)).unwrap();
        if ti % e != 0 || tj % e != 0 {
            return None;
        }
        let target = self.scale(&lc.recip());
        let lead = (li / e, lj / e);
        let mut root = BiPoly::monomial(Rat::one(), lead.0, lead.1);
        let er = rat::int(i64::from(e));
        // e * lead^(e-1), the factor multiplying each new term.
        let base = ((e - 1) * lead.0, (e - 1) * lead.1);
        let mut last = lead;
        loop {
            let diff = &target - &root.pow(e);
            let Some(((di, dj), dc)) = diff.leading_term() else {
                return Some(root);
            };
            if di < base.0 || dj < base.1 {
                return None;
            }
            let next = (di - base.0, dj - base.1);
            if grlex_key(&next) >= grlex_key(&last) {
                return None;
            }
            root.add_term(next, dc / &er);
            last = next;
        }
    }

    pub fn derivative_x(&self) -> BiPoly {
        BiPoly::from_terms(
            self.terms
                .iter()
                .filter(|(&(i, _), _)| i > 0)
                .map(|(&(i, j), c)| ((i - 1, j), c * rat::int(i64::from(i)))),
        )
    }

    pub fn derivative_y(&self) -> BiPoly {
        self.swap_xy().derivative_x().swap_xy()
    }

    /// True when every term is a pure power of `x` or of `y` (or constant).
    pub fn is_axis_sum(&self) -> bool {
        self.terms.keys().all(|&(i, j)| i == 0 || j == 0)
    }

    /// Degrees of the pure-`x` and pure-`y` parts (0 when absent).
    pub fn axis_degrees(&self) -> (u32, u32) {
        let dx = self.terms.keys().filter(|e| e.1 == 0).map(|e| e.0).max().unwrap_or(0);
        let dy = self.terms.keys().filter(|e| e.0 == 0).map(|e| e.1).max().unwrap_or(0);
        (dx, dy)
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by_key(|(e, _)| std::cmp::Reverse(grlex_key(e)));
        let mut out = String::new();
        for (&(i, j), c) in ordered {
            let mut parts = Vec::new();
            match i {
                0 => {}
                1 => parts.push("x".to_string()),
                _ => parts.push(format!("x^{i}")),
            }
            match j {
                0 => {}
                1 => parts.push("y".to_string()),
                _ => parts.push(format!("y^{j}")),
            }
            super::push_term(&mut out, c, &parts.join("*"));
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let (mut big, small) = if self.terms.len() >= rhs.terms.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        for (e, c) in &small.terms {
            big.add_term(*e, c.clone());
        }
        big
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let (a, da) = self.integer_form();
        let (b, db) = rhs.integer_form();
        let mut acc: HashMap<(u32, u32), BigInt> = HashMap::with_capacity(a.len() + b.len());
        for ((i1, j1), ca) in &a {
            for ((i2, j2), cb) in &b {
                match acc.entry((i1 + i2, j1 + j2)) {
                    Entry::Occupied(mut o) => *o.get_mut() += ca * cb,
                    Entry::Vacant(v) => {
                        v.insert(ca * cb);
                    }
                }
            }
        }
        let den = da * db;
        BiPoly {
            terms: acc
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (e, Rat::new(c, den.clone())))
                .collect(),
        }
    }
}

super::forward_owned_ops!(BiPoly);
