//! Exact arithmetic in `K = Q(s)`, the field of rational functions in `s`,
//! with the deformation parameter `q = s²`.
//!
//! A [`ScalarK`] is stored as `numerator / denominator` with integer
//! coefficients. Canonical form: the two polynomials are coprime, the
//! denominator has positive leading coefficient, and the integer content of
//! numerator and denominator taken together is 1. Zero is `0/1`. Equality and
//! hashing are structural on this canonical form.

mod poly;

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::expr::{self, Interp, ParseError};
use crate::field::{Field, Rational};

pub use poly::Poly;

static DEGREE_CAP: AtomicUsize = AtomicUsize::new(512);

/// Current bound on the `s`-degree of any numerator or denominator.
pub fn degree_cap() -> usize {
    DEGREE_CAP.load(AtomicOrdering::Relaxed)
}

/// Change the degree bound (default 512). Affects all subsequent operations.
pub fn set_degree_cap(cap: usize) {
    DEGREE_CAP.store(cap, AtomicOrdering::Relaxed);
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero in K")]
    DivisionByZero,
    #[error("intermediate polynomial of degree {degree} exceeds the degree cap {cap}")]
    DegreeCap { degree: usize, cap: usize },
    #[error("pole at s = {0}")]
    Pole(String),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ScalarK {
    num: Poly,
    den: Poly,
}

impl ScalarK {
    /// Build `num / den` in canonical form.
    pub fn from_polys(num: Poly, den: Poly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(ScalarK::zero());
        }
        let cap = degree_cap();
        let degree = num.degree().max(den.degree());
        if degree > cap {
            return Err(ScalarError::DegreeCap { degree, cap });
        }
        let (mut num, mut den) = if den.is_constant() {
            (num, den)
        } else {
            let g = Poly::gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g), den.div_exact(&g))
            }
        };
        let content = num.content().gcd(&den.content());
        if !content.is_one() {
            num = num.div_scalar(&content);
            den = den.div_scalar(&content);
        }
        if den.lead().is_some_and(|l| l.is_negative()) {
            num = num.neg();
            den = den.neg();
        }
        Ok(ScalarK { num, den })
    }

    fn from_polys_or_panic(num: Poly, den: Poly) -> Self {
        match ScalarK::from_polys(num, den) {
            Ok(x) => x,
            Err(e) => panic!("ScalarK arithmetic failed: {e}"),
        }
    }

    pub fn from_int(n: i64) -> Self {
        ScalarK::from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        if n.is_zero() {
            return ScalarK::zero();
        }
        ScalarK { num: Poly::constant(n), den: Poly::one() }
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        ScalarK::from_polys_or_panic(
            Poly::constant(BigInt::from(n)),
            Poly::constant(BigInt::from(d)),
        )
    }

    /// `s^k` for any integer `k`.
    pub fn s_pow(k: i64) -> Self {
        if k >= 0 {
            ScalarK { num: Poly::monomial(BigInt::one(), k as usize), den: Poly::one() }
        } else {
            ScalarK { num: Poly::one(), den: Poly::monomial(BigInt::one(), (-k) as usize) }
        }
    }

    /// `q^k = s^(2k)`.
    pub fn q_pow(k: i64) -> Self {
        ScalarK::s_pow(2 * k)
    }

    pub fn s() -> Self {
        ScalarK::s_pow(1)
    }

    pub fn q() -> Self {
        ScalarK::q_pow(1)
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// The value as a rational number when it does not depend on `s`.
    pub fn as_rational(&self) -> Option<Rational> {
        if !self.is_constant() {
            return None;
        }
        let n = self.num.coeffs().first().cloned().unwrap_or_default();
        let d = self.den.coeffs()[0].clone();
        Some(BigRational::new(n, d))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.den == other.den {
            return ScalarK::from_polys(self.num.add(&other.num), self.den.clone());
        }
        if other.den.is_one() {
            return ScalarK::from_polys(self.num.add(&other.num.mul(&self.den)), self.den.clone());
        }
        if self.den.is_one() {
            return ScalarK::from_polys(other.num.add(&self.num.mul(&other.den)), other.den.clone());
        }
        let g = Poly::gcd(&self.den, &other.den);
        if g.is_one() {
            let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            ScalarK::from_polys(num, self.den.mul(&other.den))
        } else {
            let d1 = self.den.div_exact(&g);
            let d2 = other.den.div_exact(&g);
            let num = self.num.mul(&d2).add(&other.num.mul(&d1));
            ScalarK::from_polys(num, d1.mul(&other.den))
        }
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, ScalarError> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, ScalarError> {
        if self.is_zero() || other.is_zero() {
            return Ok(ScalarK::zero());
        }
        if self.den.is_one() && other.den.is_one() {
            let num = self.num.mul(&other.num);
            let cap = degree_cap();
            if num.degree() > cap {
                return Err(ScalarError::DegreeCap { degree: num.degree(), cap });
            }
            return Ok(ScalarK { num, den: Poly::one() });
        }
        // cross-cancel before multiplying to keep the gcd work small
        let g1 = Poly::gcd(&self.num, &other.den);
        let g2 = Poly::gcd(&other.num, &self.den);
        let n1 = self.num.div_exact(&g1);
        let d2 = other.den.div_exact(&g1);
        let n2 = other.num.div_exact(&g2);
        let d1 = self.den.div_exact(&g2);
        ScalarK::from_coprime(n1.mul(&n2), d1.mul(&d2))
    }

    /// Like [`ScalarK::from_polys`] for a pair already known to be coprime
    /// over `Q[s]`; only the integer content and sign are normalized.
    fn from_coprime(mut num: Poly, mut den: Poly) -> Result<Self, ScalarError> {
        let cap = degree_cap();
        let degree = num.degree().max(den.degree());
        if degree > cap {
            return Err(ScalarError::DegreeCap { degree, cap });
        }
        let content = num.content().gcd(&den.content());
        if !content.is_one() {
            num = num.div_scalar(&content);
            den = den.div_scalar(&content);
        }
        if den.lead().is_some_and(|l| l.is_negative()) {
            num = num.neg();
            den = den.neg();
        }
        Ok(ScalarK { num, den })
    }

    pub fn checked_inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.lead().is_some_and(|l| l.is_negative()) {
            num = num.neg();
            den = den.neg();
        }
        Ok(ScalarK { num, den })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ScalarError> {
        self.checked_mul(&other.checked_inv()?)
    }

    fn neg_ref(&self) -> Self {
        ScalarK { num: self.num.neg(), den: self.den.clone() }
    }

    /// Exact value at `s = s0`.
    pub fn eval_at(&self, s0: &Rational) -> Result<Rational, ScalarError> {
        let d = self.den.eval(s0);
        if d.is_zero() {
            return Err(ScalarError::Pole(s0.to_string()));
        }
        Ok(self.num.eval(s0) / d)
    }

    /// Largest `s`-degree of numerator and denominator.
    pub fn degree(&self) -> usize {
        self.num.degree().max(self.den.degree())
    }

    /// Canonical text form: polynomials in `q` when every exponent in `s` is
    /// even, otherwise in `s`.
    pub fn to_text(&self) -> String {
        let even = self.num.is_even() && self.den.is_even();
        let (var, step) = if even { ("q", 2) } else { ("s", 1) };
        let n = self.num.render(var, step);
        if self.den.is_one() {
            return n;
        }
        let d = self.den.render(var, step);
        let wrap_n = self.num.term_count() > 1;
        let wrap_d = self.den.term_count() > 1 || (!self.den.is_monomial() || {
            let lc = self.den.lead().unwrap();
            !lc.is_one() && self.den.degree() > 0
        });
        let n = if wrap_n { format!("({n})") } else { n };
        let d = if wrap_d { format!("({d})") } else { d };
        format!("{n}/{d}")
    }
}

struct ScalarInterp;

impl Interp for ScalarInterp {
    type Value = ScalarK;

    fn int(&self, n: &BigInt) -> Result<ScalarK, String> {
        Ok(ScalarK::from_bigint(n.clone()))
    }

    fn var(&self, name: &str) -> Result<ScalarK, String> {
        match name {
            "q" => Ok(ScalarK::q()),
            "s" => Ok(ScalarK::s()),
            _ => Err(format!("unknown scalar symbol {name:?} (expected q or s)")),
        }
    }

    fn add(&self, a: ScalarK, b: ScalarK) -> Result<ScalarK, String> {
        a.checked_add(&b).map_err(|e| e.to_string())
    }

    fn neg(&self, a: ScalarK) -> Result<ScalarK, String> {
        Ok(-a)
    }

    fn mul(&self, a: ScalarK, b: ScalarK) -> Result<ScalarK, String> {
        a.checked_mul(&b).map_err(|e| e.to_string())
    }

    fn div(&self, a: ScalarK, b: ScalarK) -> Result<ScalarK, String> {
        a.checked_div(&b).map_err(|e| e.to_string())
    }

    fn pow(&self, a: ScalarK, e: i64) -> Result<ScalarK, String> {
        if a.is_zero() && e < 0 {
            return Err(ScalarError::DivisionByZero.to_string());
        }
        Ok(a.powi(e))
    }
}

impl ScalarK {
    /// Parse an expression in `q` and `s`, e.g. `"q^-2"`, `"(1-q^2)/(1+q^4)"`, `"3/2"`.
    pub fn parse(text: &str) -> Result<ScalarK, ParseError> {
        expr::parse(text)?.eval(&ScalarInterp)
    }
}

impl fmt::Display for ScalarK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for ScalarK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ScalarK({})", self.to_text())
    }
}

impl Zero for ScalarK {
    fn zero() -> Self {
        ScalarK { num: Poly::zero(), den: Poly::one() }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for ScalarK {
    fn one() -> Self {
        ScalarK { num: Poly::one(), den: Poly::one() }
    }
}

impl Add for ScalarK {
    type Output = ScalarK;
    fn add(self, rhs: ScalarK) -> ScalarK {
        unwrap_arith(self.checked_add(&rhs))
    }
}

impl Sub for ScalarK {
    type Output = ScalarK;
    fn sub(self, rhs: ScalarK) -> ScalarK {
        unwrap_arith(self.checked_sub(&rhs))
    }
}

impl Mul for ScalarK {
    type Output = ScalarK;
    fn mul(self, rhs: ScalarK) -> ScalarK {
        unwrap_arith(self.checked_mul(&rhs))
    }
}

impl Div for ScalarK {
    type Output = ScalarK;
    fn div(self, rhs: ScalarK) -> ScalarK {
        unwrap_arith(self.checked_div(&rhs))
    }
}

impl Neg for ScalarK {
    type Output = ScalarK;
    fn neg(self) -> ScalarK {
        ScalarK { num: self.num.neg(), den: self.den }
    }
}

impl<'a> AddAssign<&'a ScalarK> for ScalarK {
    fn add_assign(&mut self, rhs: &'a ScalarK) {
        *self = unwrap_arith(self.checked_add(rhs));
    }
}

impl<'a> SubAssign<&'a ScalarK> for ScalarK {
    fn sub_assign(&mut self, rhs: &'a ScalarK) {
        *self = unwrap_arith(self.checked_sub(rhs));
    }
}

impl<'a> MulAssign<&'a ScalarK> for ScalarK {
    fn mul_assign(&mut self, rhs: &'a ScalarK) {
        *self = unwrap_arith(self.checked_mul(rhs));
    }
}

fn unwrap_arith(r: Result<ScalarK, ScalarError>) -> ScalarK {
    match r {
        Ok(x) => x,
        Err(e) => panic!("ScalarK arithmetic failed: {e}"),
    }
}

impl Field for ScalarK {
    fn inverse(&self) -> Option<Self> {
        self.checked_inv().ok()
    }

    fn from_i64(n: i64) -> Self {
        ScalarK::from_int(n)
    }

    fn from_rational(r: &Rational) -> Self {
        ScalarK::from_polys_or_panic(
            Poly::constant(r.numer().clone()),
            Poly::constant(r.denom().clone()),
        )
    }

    fn cost(&self) -> usize {
        let terms = self.num.term_count() + self.den.term_count();
        8 * self.degree() + terms
    }

    fn powi(&self, e: i64) -> Self {
        if self.num.is_monomial() && self.den.is_monomial() {
            // monomials in s raise without any gcd work
            let (base, e) = if e < 0 { (self.checked_inv().expect("negative power of zero"), -e) } else { (self.clone(), e) };
            let e = e as u32;
            let cn = base.num.lead().unwrap().pow(e);
            let cd = base.den.lead().unwrap().pow(e);
            let kn = base.num.order() * e as usize;
            let kd = base.den.order() * e as usize;
            let k = kn.min(kd);
            return ScalarK::from_polys_or_panic(
                Poly::monomial(cn, kn - k),
                Poly::monomial(cd, kd - k),
            );
        }
        if e < 0 {
            return self.inverse().expect("negative power of zero").powi(-e);
        }
        let mut acc = ScalarK::one();
        for _ in 0..e {
            acc *= self;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(k: i64) -> ScalarK {
        ScalarK::q_pow(k)
    }

    fn k(n: i64) -> ScalarK {
        ScalarK::from_int(n)
    }

    #[test]
    fn identity_addition() {
        assert_eq!(k(1) + ScalarK::zero(), k(1));
    }

    #[test]
    fn q_inverse_square_minus_q_square() {
        let x = q(-2) + (-q(2));
        assert_eq!(x.numerator(), &Poly::from_i64s(&[1, 0, 0, 0, 0, 0, 0, 0, -1]));
        assert_eq!(x.denominator(), &Poly::from_i64s(&[0, 0, 0, 0, 1]));
        assert_eq!(x.to_text(), "(-q^4+1)/q^2");
    }

    #[test]
    fn reduces_common_factors() {
        let num = k(1) - q(2);
        let den = k(1) - q(4);
        let x = num / den + ScalarK::zero();
        assert_eq!(x, (k(1) + q(2)).inverse().unwrap());
        assert_eq!(x.denominator(), &Poly::from_i64s(&[1, 0, 0, 0, 1]));
    }

    #[test]
    fn mul_inverse_pair() {
        assert_eq!(q(1) * q(-1), k(1));
        assert_eq!(
            (k(1) - q(2)).inverse().unwrap().denominator(),
            &Poly::from_i64s(&[1, 0, 0, 0, -1]).neg()
        );
    }

    #[test]
    fn cross_multiplied_equality() {
        let a = (k(1) - q(2)) / (k(1) - q(6));
        let b = k(1) / (k(1) + q(2) + q(4));
        assert_eq!(a, b);
    }

    #[test]
    fn inverse_of_zero_is_an_error() {
        assert_eq!(ScalarK::zero().checked_inv(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn evaluation_points() {
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(q(1).eval_at(&half).unwrap(), BigRational::new(1.into(), 4.into()));
        let x = (k(1) + q(2)).inverse().unwrap();
        assert_eq!(x.eval_at(&half).unwrap(), BigRational::new(16.into(), 17.into()));
        let pole = (k(1) - q(2)).inverse().unwrap();
        assert!(matches!(pole.eval_at(&BigRational::one()), Err(ScalarError::Pole(_))));
    }

    #[test]
    fn joint_content_is_one() {
        let x = ScalarK::from_polys(Poly::from_i64s(&[2, 4]), Poly::from_i64s(&[6, 0, 2])).unwrap();
        assert_eq!(x.numerator(), &Poly::from_i64s(&[1, 2]));
        assert_eq!(x.denominator(), &Poly::from_i64s(&[3, 0, 1]));
        let h = ScalarK::from_ratio(4, -6);
        assert_eq!(h.numerator(), &Poly::from_i64s(&[-2]));
        assert_eq!(h.denominator(), &Poly::from_i64s(&[3]));
    }

    #[test]
    fn degree_cap_rejects_swell() {
        let big = ScalarK::s_pow(400);
        assert!(matches!(big.checked_mul(&big), Err(ScalarError::DegreeCap { .. })));
    }

    #[test]
    fn parses_expressions() {
        assert_eq!(ScalarK::parse("q^-2").unwrap(), q(-2));
        assert_eq!(ScalarK::parse("(1-q^2)/(1-q^4)").unwrap(), (k(1) + q(2)).inverse().unwrap());
        assert_eq!(ScalarK::parse("3/2").unwrap(), ScalarK::from_ratio(3, 2));
        assert_eq!(ScalarK::parse("s^2").unwrap(), q(1));
        assert!(ScalarK::parse("1/(q-q)").is_err());
        assert!(ScalarK::parse("A").is_err());
    }

    #[test]
    fn odd_powers_render_in_s() {
        assert_eq!(ScalarK::s_pow(-1).to_text(), "1/s");
        assert_eq!((ScalarK::s() + k(1)).to_text(), "s+1");
        assert_eq!(q(3).to_text(), "q^3");
        assert_eq!(ScalarK::from_ratio(1, 2).to_text(), "1/2");
        assert_eq!((k(1) / (k(2) * q(1))).to_text(), "1/(2*q)");
    }
}
