//! Dense univariate polynomials over `Z` in the variable `s`.
//!
//! Coefficients are stored in ascending degree order. The representation is
//! canonical: the zero polynomial has no coefficients, otherwise the last
//! coefficient is nonzero.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// `c * s^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lead(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Multiplicity of `s` as a factor (`s`-adic order). Zero for the zero polynomial.
    pub fn order(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    pub fn is_monomial(&self) -> bool {
        !self.is_zero() && self.order() == self.degree()
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Divide by `s^k`; the caller guarantees `k <= order()`.
    pub fn shift_down(&self, k: usize) -> Poly {
        if k == 0 || self.is_zero() {
            return self.clone();
        }
        debug_assert!(k <= self.order());
        Poly { coeffs: self.coeffs[k..].to_vec() }
    }

    pub fn shift_up(&self, k: usize) -> Poly {
        if k == 0 || self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, o) in coeffs.iter_mut().zip(short.coeffs.iter()) {
            *c += o;
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = other.coeffs.get(i);
            coeffs.push(match (a, b) {
                (Some(a), Some(b)) => a - b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => -b,
                (None, None) => unreachable!(),
            });
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if other.coeffs.len() == 1 {
            return self.scale(&other.coeffs[0]);
        }
        if self.coeffs.len() == 1 {
            return other.scale(&self.coeffs[0]);
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        Poly { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Exact division of every coefficient by `c`.
    pub fn div_scalar(&self, c: &BigInt) -> Poly {
        if c.is_one() {
            return self.clone();
        }
        Poly { coeffs: self.coeffs.iter().map(|x| x / c).collect() }
    }

    /// Non-negative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            if c.is_zero() {
                continue;
            }
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = self.content();
        if self.lead().is_some_and(|l| l.is_negative()) {
            c = -c;
        }
        self.div_scalar(&c)
    }

    /// Pseudo-remainder of `self` by `d` (`d` nonzero).
    pub fn pseudo_rem(&self, d: &Poly) -> Poly {
        assert!(!d.is_zero(), "pseudo-remainder by zero polynomial");
        let dd = d.degree();
        let lc = d.lead().unwrap().clone();
        let mut r = self.coeffs.clone();
        while r.len() > dd && !r.is_empty() {
            let top = r.len() - 1;
            let t = r[top].clone();
            if t.is_zero() {
                r.pop();
                continue;
            }
            for c in r.iter_mut() {
                *c *= &lc;
            }
            let shift = top - dd;
            for (i, dc) in d.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    r[shift + i] -= &t * dc;
                }
            }
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        Poly::from_coeffs(r)
    }

    /// Exact quotient `self / d` in `Z[s]`. Panics if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Poly {
        assert!(!d.is_zero(), "division by zero polynomial");
        if d.is_one() {
            return self.clone();
        }
        if self.is_zero() {
            return Poly::zero();
        }
        if d.coeffs.len() == 1 {
            return self.div_scalar(&d.coeffs[0]);
        }
        let dd = d.degree();
        let lc = d.lead().unwrap();
        let mut r = self.coeffs.clone();
        assert!(r.len() > dd, "inexact polynomial division");
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let top = k + dd;
            if r[top].is_zero() {
                continue;
            }
            let (quot, rem) = r[top].div_rem(lc);
            assert!(rem.is_zero(), "inexact polynomial division");
            for (i, dc) in d.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    r[k + i] -= &quot * dc;
                }
            }
            q[k] = quot;
        }
        assert!(r.iter().all(|c| c.is_zero()), "inexact polynomial division");
        Poly::from_coeffs(q)
    }

    /// Primitive gcd with positive leading coefficient (`gcd(0, 0) = 0`).
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() {
            return b.primitive();
        }
        if b.is_zero() {
            return a.primitive();
        }
        let k = a.order().min(b.order());
        let a0 = a.shift_down(a.order());
        let b0 = b.shift_down(b.order());
        let core = if a0.is_constant() || b0.is_constant() {
            Poly::one()
        } else {
            let (mut x, mut y) = if a0.degree() >= b0.degree() {
                (a0.primitive(), b0.primitive())
            } else {
                (b0.primitive(), a0.primitive())
            };
            if x == y {
                x
            } else {
                loop {
                    let r = x.pseudo_rem(&y);
                    if r.is_zero() {
                        break y;
                    }
                    if r.is_constant() {
                        break Poly::one();
                    }
                    x = y;
                    y = r.primitive();
                }
            }
        };
        core.shift_up(k)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// True when every nonzero coefficient sits at an even degree.
    pub fn is_even(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| i % 2 == 0 || c.is_zero())
    }

    /// Render with variable `var`; exponents are divided by `step`
    /// (`step = 2` prints an even polynomial in `s` as a polynomial in `q`).
    pub fn render(&self, var: &str, step: usize) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let e = i / step;
            let neg = c.is_negative();
            let abs = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            let body = match (e, abs.is_one()) {
                (0, _) => abs.to_string(),
                (1, true) => var.to_string(),
                (1, false) => format!("{abs}*{var}"),
                (_, true) => format!("{var}^{e}"),
                (_, false) => format!("{abs}*{var}^{e}"),
            };
            out.push_str(&body);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64s(c)
    }

    #[test]
    fn gcd_of_cyclotomic_like_factors() {
        // (1 - s^4) and (1 - s^8) share (1 - s^4)
        let a = p(&[1, 0, 0, 0, -1]);
        let b = p(&[1, 0, 0, 0, 0, 0, 0, 0, -1]);
        let g = Poly::gcd(&a, &b);
        assert_eq!(g, p(&[-1, 0, 0, 0, 1]));
        assert_eq!(b.div_exact(&g), p(&[-1, 0, 0, 0, -1]));
    }

    #[test]
    fn gcd_with_monomial_factors() {
        let a = p(&[0, 0, 2, 2]); // 2 s^2 (1 + s)
        let b = p(&[0, 3, 3]); // 3 s (1 + s)
        assert_eq!(Poly::gcd(&a, &b), p(&[0, 1, 1]));
    }

    #[test]
    fn pseudo_remainder_vanishes_on_multiples() {
        let a = p(&[1, 2, 1]);
        let b = p(&[1, 1]);
        assert!(a.pseudo_rem(&b).is_zero());
        assert_eq!(a.div_exact(&b), b);
    }

    #[test]
    fn render_in_q() {
        let x = p(&[1, 0, 0, 0, -1]);
        assert_eq!(x.render("q", 2), "-q^2+1");
        assert_eq!(p(&[0, 3]).render("s", 1), "3*s");
    }
}
