//! Rational helpers on top of `num_rational::BigRational`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator.
pub type Rat = BigRational;

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// The exact `n`-th root of `r`, if it is rational. For even `n` the
/// nonnegative root is returned.
pub fn nth_root_exact(r: &Rat, n: u32) -> Option<Rat> {
    assert!(n >= 1, "root index must be positive");
    if r.is_zero() {
        return Some(Rat::zero());
    }
    if r.is_negative() && n % 2 == 0 {
        return None;
    }
    let num = r.numer().abs();
    let den = r.denom().clone();
    let a = num.nth_root(n);
    if a.pow(n) != num {
        return None;
    }
    let b = den.nth_root(n);
    if b.pow(n) != den {
        return None;
    }
    let root = Rat::new(a, b);
    Some(if r.is_negative() { -root } else { root })
}

/// Renders a rational as `a` or `a/b`.
pub fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `a` or `a/b` (optionally signed).
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(Rat::from_integer),
        Some((n, d)) => {
            let n = n.trim().parse::<BigInt>().ok()?;
            let d = d.trim().parse::<BigInt>().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rat::new(n, d))
            }
        }
    }
}

/// gcd of numerators and lcm of denominators, i.e. the positive rational
/// `c` such that `coeffs / c` is a primitive integer vector.
pub(crate) fn content<'a>(coeffs: impl IntoIterator<Item = &'a Rat>) -> Rat {
    let mut g = BigInt::zero();
    let mut l = BigInt::one();
    for c in coeffs {
        g = g.gcd(c.numer());
        l = l.lcm(c.denom());
    }
    if g.is_zero() {
        Rat::one()
    } else {
        Rat::new(g, l)
    }
}

/// Positive divisors of `n` found by trial division, or `None` when `n` is
/// too large to factor by trial division up to `10^6`.
pub(crate) fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let mut n = n.abs();
    if n.is_zero() {
        return None;
    }
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut p = BigInt::from(2u32);
    let limit = BigInt::from(1_000_000u32);
    while &p * &p <= n && p <= limit {
        let mut e = 0;
        while (&n % &p).is_zero() {
            n /= &p;
            e += 1;
        }
        if e > 0 {
            factors.push((p.clone(), e));
        }
        p += 1;
    }
    if n > BigInt::one() {
        // Cofactor has no prime factor up to the limit; it is prime only if
        // it is below limit^2.
        if n > &limit * &limit {
            return None;
        }
        factors.push((n, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    Some(divs)
}
