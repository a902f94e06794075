//! Families of plane curves that are isomorphic as abstract curves but
//! pairwise inequivalent as embeddings.
//!
//! For distinct primes `p0, p1, ..., pk` with `p0 > p1*...*pk` the family is
//!
//! ```text
//! f_j = y - (x^p0 - y^(pj*...*pk))^(p1*...*p(j-1)),   j = 1..k.
//! ```
//!
//! Adjacent members have isomorphic coordinate rings, witnessed by explicit
//! substitutions checked through exact division. Their canonical degrees
//! differ, so no automorphism relates them.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::poly::rat::int;
use crate::poly::BiPoly;
use crate::tame::{inequivalent_by_theorem_1_1, InequivalenceVerdict};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub k: usize,
    /// `[p0, p1, ..., pk]`.
    pub primes: Vec<u32>,
}

impl FamilySpec {
    pub fn new(k: usize, primes: Vec<u32>) -> Result<Self> {
        let spec = Self { k, primes };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidFamilySpec(msg));
        if self.k < 2 {
            return bad(format!("k = {} must be at least 2", self.k));
        }
        if self.primes.len() != self.k + 1 {
            return bad(format!("expected {} primes, got {}", self.k + 1, self.primes.len()));
        }
        if let Some(p) = self.primes.iter().find(|&&p| !is_prime(p)) {
            return bad(format!("{p} is not prime"));
        }
        for (i, p) in self.primes.iter().enumerate() {
            if self.primes[..i].contains(p) {
                return bad(format!("{p} appears twice"));
            }
        }
        let tail: u64 = self.primes[1..].iter().map(|&p| u64::from(p)).product();
        if u64::from(self.primes[0]) <= tail {
            return bad(format!("p0 = {} must exceed p1*...*pk = {tail}", self.primes[0]));
        }
        Ok(())
    }

    /// `p_j * ... * p_k` (1 for `j > k`).
    pub fn tail_product(&self, j: usize) -> u32 {
        self.primes[j.min(self.k + 1)..].iter().product()
    }

    /// `p_1 * ... * p_(j-1)` (1 for `j = 1`).
    pub fn head_product(&self, j: usize) -> u32 {
        self.primes[1..j].iter().product()
    }

    /// Total degree of `f_j`.
    pub fn degree(&self, j: usize) -> u32 {
        self.primes[0] * self.head_product(j)
    }
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// `x^p0 - y^e`.
fn binomial(p0: u32, e: u32) -> BiPoly {
    BiPoly::from_terms([((p0, 0), int(1)), ((0, e), int(-1))])
}

/// `f_j` for `j = 1..=k`.
pub fn family_member(spec: &FamilySpec, j: usize) -> Result<BiPoly> {
    spec.validate()?;
    if j == 0 || j > spec.k {
        return Err(Error::BadIndex { index: j, bound: spec.k });
    }
    let inner = binomial(spec.primes[0], spec.tail_product(j)).pow(spec.head_product(j));
    Ok(&BiPoly::y() - &inner)
}

/// `[f_1, ..., f_k]`.
pub fn family(spec: &FamilySpec) -> Result<Vec<BiPoly>> {
    (1..=spec.k).map(|j| family_member(spec, j)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairReport {
    /// 1-based member indices.
    pub i: usize,
    pub j: usize,
    pub profile_i: (u32, u32),
    pub profile_j: (u32, u32),
}

/// Pairwise inequivalence of the members, one entry per pair.
pub fn verify_family_inequivalent(fs: &[BiPoly]) -> Result<Vec<PairReport>> {
    let mut out = Vec::new();
    for i in 0..fs.len() {
        for j in i + 1..fs.len() {
            match inequivalent_by_theorem_1_1(&fs[i], &fs[j]) {
                InequivalenceVerdict::Inequivalent { p_profile, q_profile } => out.push(PairReport {
                    i: i + 1,
                    j: j + 1,
                    profile_i: p_profile,
                    profile_j: q_profile,
                }),
                InequivalenceVerdict::Inconclusive(why) => {
                    return Err(Error::VerificationFailed(format!("f{} vs f{}: {why}", i + 1, j + 1)))
                }
            }
        }
    }
    Ok(out)
}

/// Substitutions between the coordinate rings of two curves: `forward`
/// gives the images of `x`, `y` in the ring of the second curve, `backward`
/// those in the ring of the first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoWitness {
    pub forward: (BiPoly, BiPoly),
    pub backward: (BiPoly, BiPoly),
}

impl IsoWitness {
    pub fn identity() -> Self {
        Self {
            forward: (BiPoly::x(), BiPoly::y()),
            backward: (BiPoly::x(), BiPoly::y()),
        }
    }

    /// `self` between `f` and `g`, then `next` between `g` and `h`.
    pub fn chain(&self, next: &IsoWitness) -> IsoWitness {
        let (fx, fy) = &next.forward;
        let (bx, by) = &self.backward;
        IsoWitness {
            forward: (
                self.forward.0.substitute(fx, fy),
                self.forward.1.substitute(fx, fy),
            ),
            backward: (next.backward.0.substitute(bx, by), next.backward.1.substitute(bx, by)),
        }
    }
}

/// The isomorphism between the rings of `f_j` and `f_(j+1)`:
/// `y -> (x^p0 - y^(p(j+1)*...*pk))^(p1*...*p(j-1))` one way and
/// `y -> y^pj` the other, with `x` fixed.
pub fn tietze_witness(spec: &FamilySpec, j: usize) -> Result<IsoWitness> {
    spec.validate()?;
    if j == 0 || j >= spec.k {
        return Err(Error::BadIndex { index: j, bound: spec.k - 1 });
    }
    let fy = binomial(spec.primes[0], spec.tail_product(j + 1)).pow(spec.head_product(j));
    let by = BiPoly::monomial(int(1), 0, spec.primes[j]);
    Ok(IsoWitness {
        forward: (BiPoly::x(), fy),
        backward: (BiPoly::x(), by),
    })
}

/// Checks that the witness induces mutually inverse homomorphisms between
/// `Q[x, y]/(f)` and `Q[x, y]/(g)`: both maps respect the relations and
/// both composites fix `x` and `y` modulo the respective ideal.
pub fn verify_isomorphism(f: &BiPoly, g: &BiPoly, w: &IsoWitness) -> Result<bool> {
    let (fx, fy) = &w.forward;
    let (bx, by) = &w.backward;
    let (x, y) = (BiPoly::x(), BiPoly::y());
    let checks: [(&BiPoly, BiPoly); 6] = [
        (g, f.substitute(fx, fy)),
        (f, g.substitute(bx, by)),
        (f, &fx.substitute(bx, by) - &x),
        (f, &fy.substitute(bx, by) - &y),
        (g, &bx.substitute(fx, fy) - &x),
        (g, &by.substitute(fx, fy) - &y),
    ];
    for (d, target) in &checks {
        if !d.divides(target)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AxisSumVerdict {
    Irreducible,
    Inconclusive,
}

/// `u(x) + v(y)` with nonconstant `u`, `v` of coprime degrees is
/// irreducible.
pub fn irreducible_by_axis_sum(p: &BiPoly) -> AxisSumVerdict {
    let (du, dv) = p.axis_degrees();
    if p.is_axis_sum() && du > 0 && dv > 0 && du.gcd(&dv) == 1 {
        AxisSumVerdict::Irreducible
    } else {
        AxisSumVerdict::Inconclusive
    }
}
