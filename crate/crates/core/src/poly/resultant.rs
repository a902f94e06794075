use num_traits::One;

use super::bi::BiPoly;
use super::uni::UniPoly;
use crate::error::{Error, Result};

/// Polynomial in `t` whose coefficients lie in `Q[x, y]`; entry `i` is the
/// coefficient of `t^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TPoly(pub Vec<BiPoly>);

impl TPoly {
    /// `u(t) - x`.
    pub fn minus_x(u: &UniPoly) -> Self {
        Self::lift(u, BiPoly::x())
    }

    /// `v(t) - y`.
    pub fn minus_y(v: &UniPoly) -> Self {
        Self::lift(v, BiPoly::y())
    }

    fn lift(u: &UniPoly, var: BiPoly) -> Self {
        let mut coeffs: Vec<BiPoly> = u.coeffs().iter().map(|c| BiPoly::constant(c.clone())).collect();
        if coeffs.is_empty() {
            coeffs.push(BiPoly::zero());
        }
        coeffs[0] = &coeffs[0] - &var;
        Self(coeffs).trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.0.last().is_some_and(BiPoly::is_zero) {
            self.0.pop();
        }
        self
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }
}

/// Resultant with respect to `t`, equal to the determinant of the Sylvester
/// matrix (coefficients listed from the highest power of `t`). Computed by
/// fraction-free Bareiss elimination over `Q[x, y]`.
pub fn resultant_t(f: &TPoly, g: &TPoly) -> Result<BiPoly> {
    let f = f.clone().trimmed();
    let g = g.clone().trimmed();
    let (a, b) = match (f.degree(), g.degree()) {
        (Some(a), Some(b)) if a > 0 && b > 0 => (a, b),
        _ => return Err(Error::InvalidResultantInput),
    };
    let n = a + b;
    let mut m = vec![vec![BiPoly::zero(); n]; n];
    for r in 0..b {
        for (k, c) in f.0.iter().rev().enumerate() {
            m[r][r + k] = c.clone();
        }
    }
    for r in 0..a {
        for (k, c) in g.0.iter().rev().enumerate() {
            m[b + r][r + k] = c.clone();
        }
    }
    Ok(bareiss_det(m))
}

fn bareiss_det(mut m: Vec<Vec<BiPoly>>) -> BiPoly {
    let n = m.len();
    let mut negate = false;
    let mut prev = BiPoly::one();
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BiPoly::zero();
            };
            m.swap(k, r);
            negate = !negate;
        }
        let prev_const = prev.is_constant().then(|| prev.coeff(0, 0).recip());
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = match &prev_const {
                    Some(inv) if inv.is_one() => num,
                    Some(inv) => num.scale(inv),
                    None => num
                        .exact_divide(&prev)
                        .expect("nonzero pivot")
                        .expect("Bareiss division is exact"),
                };
            }
            m[i][k] = BiPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Determinant by cofactor expansion; test oracle for small matrices.
#[cfg(test)]
pub(crate) fn cofactor_det(m: &[Vec<BiPoly>]) -> BiPoly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = BiPoly::zero();
    for (c, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<BiPoly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, e)| e.clone()).collect())
            .collect();
        let term = entry * &cofactor_det(&minor);
        acc = if c % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat::int;

    fn t_minus(u: &[i64], var: BiPoly) -> TPoly {
        TPoly::lift(&UniPoly::from_ints(u), var)
    }

    fn sylvester(f: &TPoly, g: &TPoly) -> Vec<Vec<BiPoly>> {
        let (a, b) = (f.degree().unwrap(), g.degree().unwrap());
        let n = a + b;
        let mut m = vec![vec![BiPoly::zero(); n]; n];
        for r in 0..b {
            for (k, c) in f.0.iter().rev().enumerate() {
                m[r][r + k] = c.clone();
            }
        }
        for r in 0..a {
            for (k, c) in g.0.iter().rev().enumerate() {
                m[b + r][r + k] = c.clone();
            }
        }
        m
    }

    #[test]
    fn linear_resultant_is_evaluation() {
        let r = resultant_t(&t_minus(&[0, 1], BiPoly::x()), &t_minus(&[0, 1], BiPoly::y())).unwrap();
        assert_eq!(r, BiPoly::from_int_terms(&[((1, 0), 1), ((0, 1), -1)]));
    }

    #[test]
    fn cusp_matches_cofactor_oracle() {
        let f = t_minus(&[0, 0, 1], BiPoly::x());
        let g = t_minus(&[0, 0, 0, 1], BiPoly::y());
        let oracle = cofactor_det(&sylvester(&f, &g));
        assert_eq!(oracle, BiPoly::from_int_terms(&[((0, 2), 1), ((3, 0), -1)]));
        assert_eq!(resultant_t(&f, &g).unwrap(), oracle);
    }

    #[test]
    fn square_of_line() {
        let f = t_minus(&[0, 0, 1], BiPoly::x());
        let g = t_minus(&[0, 0, 1], BiPoly::y());
        let line = BiPoly::from_int_terms(&[((1, 0), 1), ((0, 1), -1)]);
        assert_eq!(resultant_t(&f, &g).unwrap(), line.pow(2));
    }

    #[test]
    fn degree_zero_rejected() {
        let c = TPoly(vec![BiPoly::constant(int(2))]);
        let g = t_minus(&[0, 1], BiPoly::y());
        assert_eq!(resultant_t(&c, &g), Err(Error::InvalidResultantInput));
    }

    #[test]
    fn pivoting_keeps_sign() {
        // Leading coefficients vanish in the first column only after a swap.
        let f = t_minus(&[1, 0, 1], BiPoly::x());
        let g = t_minus(&[2, 1, 0, 1], BiPoly::y());
        let oracle = cofactor_det(&sylvester(&f, &g));
        assert_eq!(resultant_t(&f, &g).unwrap(), oracle);
    }
}
