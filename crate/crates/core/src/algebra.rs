//! The Podleś sphere algebra `A(c,d)`.
//!
//! Generated by `A`, `B`, `B*` subject to
//!
//! ```text
//! BA = q²AB,   AB* = q²B*A,
//! B*B = cd + (c−d)A − A²,   BB* = cd + q²(c−d)A − q⁴A².
//! ```
//!
//! The monomials `B^j A^k` and `B*^j A^k` form a basis. Two independent
//! multiplication routes are provided: [`Podles::normal_form`] rewrites a
//! word letter by letter, and [`Podles::mul`] uses the closed form
//! `(B^(j)A^k)(B^(m)A^l) = q^(−2km) · B^(j)B^(m) · A^(k+l)` together with a
//! memoized expansion of `B^(j)B^(m)` as `B^(j+m)·p(A)`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::expr::{self, Interp, ParseError};
use crate::field::{Field, Rational};
use crate::lincomb::LinComb;
use crate::scalar::{ScalarError, ScalarK};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("parameters must satisfy c + d != 0")]
    DegenerateParams,
    #[error("the automorphism A -> -A exists only when c = d")]
    SignRequiresEqualParams,
    #[error("automorphism parameter lambda must be nonzero")]
    ZeroLambda,
    #[error("sign must be +1 or -1, got {0}")]
    BadSign(i32),
    #[error("operation needs the standard sphere (c, d) = (1, 0)")]
    NotStandardSphere,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// `(c, d)` together with `s` and `q = s²` in the coefficient field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Params<K> {
    pub s: K,
    pub q: K,
    pub c: K,
    pub d: K,
}

impl<K: Field> Params<K> {
    pub fn with_s(s: K, c: K, d: K) -> Result<Self, AlgebraError> {
        if (c.clone() + d.clone()).is_zero() {
            return Err(AlgebraError::DegenerateParams);
        }
        let q = s.mul_ref(&s);
        Ok(Params { s, q, c, d })
    }

    pub fn cd(&self) -> K {
        self.c.mul_ref(&self.d)
    }

    pub fn c_minus_d(&self) -> K {
        self.c.sub_ref(&self.d)
    }

    pub fn is_standard(&self) -> bool {
        self.c.is_one() && self.d.is_zero()
    }

    /// `(rc, rd)`: the algebras for these parameters are isomorphic, see [`rescale`].
    pub fn rescaled(&self, r: &K) -> Result<Self, AlgebraError> {
        Params::with_s(self.s.clone(), self.c.mul_ref(r), self.d.mul_ref(r))
    }
}

impl Params<ScalarK> {
    pub fn new(c: ScalarK, d: ScalarK) -> Result<Self, AlgebraError> {
        Params::with_s(ScalarK::s(), c, d)
    }

    pub fn from_ints(c: i64, d: i64) -> Result<Self, AlgebraError> {
        Params::new(ScalarK::from_int(c), ScalarK::from_int(d))
    }

    pub fn standard() -> Self {
        Params::from_ints(1, 0).expect("standard parameters are valid")
    }

    /// Substitute `s = s0`.
    pub fn specialize(&self, s0: &Rational) -> Result<Params<Rational>, AlgebraError> {
        Params::with_s(s0.clone(), self.c.eval_at(s0)?, self.d.eval_at(s0)?)
    }
}

/// `B^b A^a` for `b ≥ 0`, `B*^(−b) A^a` for `b < 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PodlesMonomial {
    pub b: i32,
    pub a: u32,
}

impl PodlesMonomial {
    pub const ONE: PodlesMonomial = PodlesMonomial { b: 0, a: 0 };

    pub fn new(b: i32, a: u32) -> Self {
        PodlesMonomial { b, a }
    }

    pub fn a_pow(a: u32) -> Self {
        PodlesMonomial { b: 0, a }
    }

    pub fn weight(&self) -> i32 {
        self.b
    }

    pub fn degree(&self) -> u32 {
        self.b.unsigned_abs() + self.a
    }

    pub fn is_one(&self) -> bool {
        self.b == 0 && self.a == 0
    }
}

/// Ordered by degree, then `b`, then `a`.
impl Ord for PodlesMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.b.cmp(&other.b))
            .then(self.a.cmp(&other.a))
    }
}

impl PartialOrd for PodlesMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PodlesMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut parts = Vec::new();
        let j = self.b.unsigned_abs();
        if j > 0 {
            let g = if self.b > 0 { "B" } else { "B*" };
            parts.push(if j == 1 { g.to_string() } else { format!("{g}^{j}") });
        }
        if self.a > 0 {
            parts.push(if self.a == 1 { "A".to_string() } else { format!("A^{}", self.a) });
        }
        f.write_str(&parts.join(" "))
    }
}

pub type Element<K> = LinComb<K, PodlesMonomial>;

/// Weight of an element: the common `b` of its support, `None` when mixed.
/// The zero element has weight 0.
pub fn weight<K: Field>(x: &Element<K>) -> Option<i32> {
    let mut it = x.keys();
    let Some(first) = it.next() else { return Some(0) };
    let w = first.b;
    if it.all(|m| m.b == w) {
        Some(w)
    } else {
        None
    }
}

/// Largest monomial degree in the support (0 for the zero element).
pub fn degree<K: Field>(x: &Element<K>) -> u32 {
    x.keys().map(|m| m.degree()).max().unwrap_or(0)
}

/// The isomorphism `A(rc, rd) → A(c, d)` sending `A ↦ rA`, `B ↦ rB`,
/// `B* ↦ rB*`, on an element written in the PBW basis of `A(rc, rd)`.
pub fn rescale<K: Field>(x: &Element<K>, r: &K) -> Element<K> {
    x.scale_by(|m| r.powi(m.degree() as i64))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    A,
    B,
    BStar,
}

impl Gen {
    fn monomial(self) -> PodlesMonomial {
        match self {
            Gen::A => PodlesMonomial::new(0, 1),
            Gen::B => PodlesMonomial::new(1, 0),
            Gen::BStar => PodlesMonomial::new(-1, 0),
        }
    }
}

/// Polynomial in `A` with ascending coefficients, representing `B^(b)·p(A)`.
type APoly<K> = Arc<Vec<K>>;

pub struct Podles<K: Field> {
    params: Params<K>,
    q_powers: RwLock<HashMap<i64, K>>,
    bb_cache: RwLock<HashMap<(i32, i32), APoly<K>>>,
}

impl<K: Field> fmt::Debug for Podles<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Podles").field("params", &self.params).finish()
    }
}

impl<K: Field> Clone for Podles<K> {
    fn clone(&self) -> Self {
        Podles::new(self.params.clone())
    }
}

impl<K: Field> Podles<K> {
    pub fn new(params: Params<K>) -> Self {
        Podles {
            params,
            q_powers: RwLock::new(HashMap::new()),
            bb_cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn params(&self) -> &Params<K> {
        &self.params
    }

    /// `q^k`, memoized.
    pub fn q_pow(&self, k: i64) -> K {
        if k == 0 {
            return K::one();
        }
        if let Some(v) = self.q_powers.read().unwrap().get(&k) {
            return v.clone();
        }
        let v = self.params.q.powi(k);
        self.q_powers.write().unwrap().insert(k, v.clone());
        v
    }

    pub fn one(&self) -> Element<K> {
        Element::basis(PodlesMonomial::ONE)
    }

    pub fn scalar(&self, k: K) -> Element<K> {
        Element::term(PodlesMonomial::ONE, k)
    }

    pub fn gen(&self, g: Gen) -> Element<K> {
        Element::basis(g.monomial())
    }

    pub fn a(&self) -> Element<K> {
        self.gen(Gen::A)
    }

    pub fn b(&self) -> Element<K> {
        self.gen(Gen::B)
    }

    pub fn b_star(&self) -> Element<K> {
        self.gen(Gen::BStar)
    }

    pub fn monomial(&self, b: i32, a: u32) -> Element<K> {
        Element::basis(PodlesMonomial::new(b, a))
    }

    /// `B*B = cd + (c−d)A − A²` as coefficients in `A`.
    fn p0(&self) -> [K; 3] {
        let p = &self.params;
        [p.cd(), p.c_minus_d(), -K::one()]
    }

    /// `BB* = cd + q²(c−d)A − q⁴A²`.
    fn q0(&self) -> [K; 3] {
        let p = &self.params;
        [p.cd(), self.q_pow(2).mul_ref(&p.c_minus_d()), -self.q_pow(4)]
    }

    /// `p(t·A)` for a quadratic `p`.
    fn substitute(p: [K; 3], t: &K) -> [K; 3] {
        let [p0, p1, p2] = p;
        let t2 = t.mul_ref(t);
        [p0, p1.mul_ref(t), p2.mul_ref(&t2)]
    }

    fn poly_mul(x: &[K], y: &[K]) -> Vec<K> {
        let mut out = vec![K::zero(); x.len() + y.len() - 1];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &a.mul_ref(b);
                }
            }
        }
        while out.len() > 1 && out.last().is_some_and(|c| c.is_zero()) {
            out.pop();
        }
        out
    }

    /// `B^(j) B^(m) = B^(j+m) · p(A)`; returns `p`.
    fn bb(&self, j: i32, m: i32) -> APoly<K> {
        if j == 0 || m == 0 || (j > 0) == (m > 0) {
            return Arc::new(vec![K::one()]);
        }
        if let Some(v) = self.bb_cache.read().unwrap().get(&(j, m)) {
            return v.clone();
        }
        let v = if j > 0 {
            // B^j B*^r = B^(j-1) B*^(r-1) · (BB*)(q^(2(r-1)) A)
            let r = -m;
            let prev = self.bb(j - 1, m + 1);
            let f = Self::substitute(self.q0(), &self.q_pow(2 * (r as i64 - 1)));
            Self::poly_mul(&prev, &f)
        } else {
            // B*^r B^m = B*^(r-1) B^(m-1) · (B*B)(q^(-2(m-1)) A)
            let prev = self.bb(j + 1, m - 1);
            let f = Self::substitute(self.p0(), &self.q_pow(-2 * (m as i64 - 1)));
            Self::poly_mul(&prev, &f)
        };
        let v = Arc::new(v);
        self.bb_cache.write().unwrap().insert((j, m), v.clone());
        v
    }

    /// Product of two basis monomials as a list of terms.
    pub fn mul_mono(&self, x: PodlesMonomial, y: PodlesMonomial) -> Vec<(PodlesMonomial, K)> {
        let b = x.b + y.b;
        let shift = x.a + y.a;
        let qf = self.q_pow(-2 * x.a as i64 * y.b as i64);
        let p = self.bb(x.b, y.b);
        p.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (PodlesMonomial::new(b, shift + i as u32), c.mul_ref(&qf)))
            .collect()
    }

    pub fn mul(&self, x: &Element<K>, y: &Element<K>) -> Element<K> {
        let mut out = Element::zero();
        for (mx, kx) in x {
            for (my, ky) in y {
                let k = kx.mul_ref(ky);
                for (m, c) in self.mul_mono(*mx, *my) {
                    out.add_term(m, c.mul_ref(&k));
                }
            }
        }
        out
    }

    /// Left-to-right product of several elements.
    pub fn product(&self, xs: &[&Element<K>]) -> Element<K> {
        let mut acc = self.one();
        for x in xs {
            acc = self.mul(&acc, x);
        }
        acc
    }

    pub fn pow(&self, x: &Element<K>, n: u32) -> Element<K> {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.mul(&acc, x);
        }
        acc
    }

    /// Normal form of a word by letter rewriting.
    ///
    /// Rules, applied at the leftmost out-of-order adjacent pair:
    /// `AB → q⁻²BA`, `AB* → q²B*A`, `B*B → cd + (c−d)A − A²`,
    /// `BB* → cd + q²(c−d)A − q⁴A²`.
    pub fn normal_form(&self, word: &[Gen]) -> Element<K> {
        let p0 = self.p0();
        let q0 = self.q0();
        let mut pending: Vec<(Vec<Gen>, K)> = vec![(word.to_vec(), K::one())];
        let mut done: LinComb<K, Vec<Gen>> = LinComb::zero();
        while let Some((w, k)) = pending.pop() {
            let hit = w.windows(2).position(|p| {
                matches!(
                    (p[0], p[1]),
                    (Gen::A, Gen::B) | (Gen::A, Gen::BStar) | (Gen::BStar, Gen::B) | (Gen::B, Gen::BStar)
                )
            });
            let Some(i) = hit else {
                done.add_term(w, k);
                continue;
            };
            let splice = |mid: &[Gen]| {
                let mut v = w[..i].to_vec();
                v.extend_from_slice(mid);
                v.extend_from_slice(&w[i + 2..]);
                v
            };
            match (w[i], w[i + 1]) {
                (Gen::A, Gen::B) => pending.push((splice(&[Gen::B, Gen::A]), k.mul_ref(&self.q_pow(-2)))),
                (Gen::A, Gen::BStar) => {
                    pending.push((splice(&[Gen::BStar, Gen::A]), k.mul_ref(&self.q_pow(2))))
                }
                (pair_l, _) => {
                    let p = if pair_l == Gen::BStar { &p0 } else { &q0 };
                    pending.push((splice(&[]), k.mul_ref(&p[0])));
                    pending.push((splice(&[Gen::A]), k.mul_ref(&p[1])));
                    pending.push((splice(&[Gen::A, Gen::A]), k.mul_ref(&p[2])));
                }
            }
        }
        let mut out = Element::zero();
        for (w, k) in &done {
            let b: i32 = w
                .iter()
                .map(|g| match g {
                    Gen::B => 1,
                    Gen::BStar => -1,
                    Gen::A => 0,
                })
                .sum();
            let a = w.iter().filter(|g| **g == Gen::A).count() as u32;
            out.add_term(PodlesMonomial::new(b, a), k.clone());
        }
        out
    }

    /// Parse an element such as `"B*B - q^2 A + 1"`.
    pub fn parse(&self, text: &str) -> Result<Element<K>, ParseError> {
        expr::parse(text)?.eval(&ElementInterp { alg: self })
    }
}

struct ElementInterp<'a, K: Field> {
    alg: &'a Podles<K>,
}

impl<K: Field> Interp for ElementInterp<'_, K> {
    type Value = Element<K>;

    fn int(&self, n: &num_bigint::BigInt) -> Result<Element<K>, String> {
        Ok(self.alg.scalar(K::from_rational(&Rational::from_integer(n.clone()))))
    }

    fn var(&self, name: &str) -> Result<Element<K>, String> {
        let p = self.alg.params();
        match name {
            "A" => Ok(self.alg.a()),
            "B" => Ok(self.alg.b()),
            "B*" => Ok(self.alg.b_star()),
            "q" => Ok(self.alg.scalar(p.q.clone())),
            "s" => Ok(self.alg.scalar(p.s.clone())),
            _ => Err(format!("unknown symbol {name:?} in an element of A(c,d)")),
        }
    }

    fn add(&self, a: Element<K>, b: Element<K>) -> Result<Element<K>, String> {
        Ok(a.add(&b))
    }

    fn neg(&self, a: Element<K>) -> Result<Element<K>, String> {
        Ok(a.neg())
    }

    fn mul(&self, a: Element<K>, b: Element<K>) -> Result<Element<K>, String> {
        Ok(self.alg.mul(&a, &b))
    }

    fn div(&self, a: Element<K>, b: Element<K>) -> Result<Element<K>, String> {
        let k = scalar_value(&b).ok_or("division by a non-scalar element")?;
        let inv = k.inverse().ok_or("division by zero")?;
        Ok(a.scale(&inv))
    }

    fn pow(&self, a: Element<K>, e: i64) -> Result<Element<K>, String> {
        if e >= 0 {
            return Ok(self.alg.pow(&a, e as u32));
        }
        let k = scalar_value(&a).ok_or("negative power of a non-scalar element")?;
        let inv = k.inverse().ok_or("division by zero")?;
        Ok(self.alg.scalar(inv.powi(-e)))
    }
}

/// The scalar `k` if `x = k·1`.
pub fn scalar_value<K: Field>(x: &Element<K>) -> Option<K> {
    if x.is_zero() {
        return Some(K::zero());
    }
    if x.len() == 1 {
        if let Some(k) = x.get(&PodlesMonomial::ONE) {
            return Some(k.clone());
        }
    }
    None
}

/// A diagonal automorphism: `B ↦ λB`, `B* ↦ λ⁻¹B*`, `A ↦ μA` with `μ = ±1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Automorphism<K> {
    lambda: K,
    lambda_inv: K,
    sign: i8,
}

impl<K: Field> Automorphism<K> {
    pub fn new(params: &Params<K>, lambda: K, sign: i32) -> Result<Self, AlgebraError> {
        if sign != 1 && sign != -1 {
            return Err(AlgebraError::BadSign(sign));
        }
        if sign == -1 && params.c != params.d {
            return Err(AlgebraError::SignRequiresEqualParams);
        }
        let lambda_inv = lambda.inverse().ok_or(AlgebraError::ZeroLambda)?;
        Ok(Automorphism { lambda, lambda_inv, sign: sign as i8 })
    }

    pub fn identity() -> Self {
        Automorphism { lambda: K::one(), lambda_inv: K::one(), sign: 1 }
    }

    /// `σ_mod`: `B ↦ q⁻²B`, `B* ↦ q²B*`.
    pub fn modular(params: &Params<K>) -> Self {
        let lambda = params.q.powi(-2);
        Automorphism::new(params, lambda, 1).expect("q is nonzero")
    }

    pub fn lambda(&self) -> &K {
        &self.lambda
    }

    pub fn sign(&self) -> i32 {
        self.sign as i32
    }

    pub fn is_identity(&self) -> bool {
        self.sign == 1 && self.lambda.is_one()
    }

    pub fn inverse(&self) -> Self {
        Automorphism { lambda: self.lambda_inv.clone(), lambda_inv: self.lambda.clone(), sign: self.sign }
    }

    pub fn compose(&self, other: &Self) -> Self {
        Automorphism {
            lambda: self.lambda.mul_ref(&other.lambda),
            lambda_inv: self.lambda_inv.mul_ref(&other.lambda_inv),
            sign: self.sign * other.sign,
        }
    }

    /// Eigenvalue `λ^b μ^a` on a basis monomial.
    pub fn eigenvalue(&self, m: &PodlesMonomial) -> K {
        let base = if m.b >= 0 {
            self.lambda.powi(m.b as i64)
        } else {
            self.lambda_inv.powi(-m.b as i64)
        };
        if self.sign == -1 && m.a % 2 == 1 {
            -base
        } else {
            base
        }
    }

    /// `λ^w μ^p` for total weight `w` and `A`-parity `p`.
    pub fn block_eigenvalue(&self, weight: i32, parity: u32) -> K {
        self.eigenvalue(&PodlesMonomial::new(weight, parity % 2))
    }

    pub fn apply(&self, x: &Element<K>) -> Element<K> {
        if self.is_identity() {
            return x.clone();
        }
        x.scale_by(|m| self.eigenvalue(m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};

    type K = ScalarK;

    fn alg(c: i64, d: i64) -> Podles<K> {
        Podles::new(Params::from_ints(c, d).unwrap())
    }

    fn q(k: i64) -> K {
        K::q_pow(k)
    }

    #[test]
    fn relation_b_star_b() {
        let x = alg(2, 1);
        let got = x.normal_form(&[Gen::BStar, Gen::B]);
        assert_eq!(got, x.parse("2 + A - A^2").unwrap());
        assert_eq!(got, x.mul(&x.b_star(), &x.b()));
    }

    #[test]
    fn relation_b_b_star() {
        let x = alg(2, 1);
        let got = x.normal_form(&[Gen::B, Gen::BStar]);
        let want = Element::from_terms([
            (PodlesMonomial::ONE, K::from_int(2)),
            (PodlesMonomial::a_pow(1), q(2)),
            (PodlesMonomial::a_pow(2), -q(4)),
        ]);
        assert_eq!(got, want);
        assert_eq!(got, x.mul(&x.b(), &x.b_star()));
    }

    #[test]
    fn a_before_b_rewrites() {
        let x = alg(1, 0);
        let got = x.normal_form(&[Gen::A, Gen::B]);
        assert_eq!(got, Element::term(PodlesMonomial::new(1, 1), q(-2)));
    }

    #[test]
    fn unit_and_distribution() {
        let x = alg(1, 1);
        let ba = x.monomial(1, 1);
        assert_eq!(x.mul(&x.one(), &ba), ba);
        // B*·BA = cd·A + (c−d)A² − A³
        let got = x.mul(&x.b_star(), &ba);
        assert_eq!(got, x.parse("A - A^3").unwrap());
        assert_ne!(x.mul(&x.b(), &x.b_star()), x.mul(&x.b_star(), &x.b()));
    }

    #[test]
    fn modular_automorphism_values() {
        let x = alg(1, 0);
        let sm = Automorphism::modular(x.params());
        assert_eq!(sm.apply(&x.b()), x.b().scale(&q(-2)));
        assert_eq!(sm.apply(&x.b_star()), x.b_star().scale(&q(2)));
        assert_eq!(sm.apply(&x.monomial(2, 1)), x.monomial(2, 1).scale(&q(-4)));
        let s = Automorphism::new(x.params(), q(3), 1).unwrap();
        assert_eq!(s.apply(&x.monomial(0, 5)), x.monomial(0, 5));
    }

    #[test]
    fn sign_needs_equal_params() {
        let p = Params::from_ints(1, 0).unwrap();
        assert_eq!(
            Automorphism::new(&p, K::one(), -1),
            Err(AlgebraError::SignRequiresEqualParams)
        );
        let p = Params::from_ints(1, 1).unwrap();
        assert!(Automorphism::new(&p, K::from_int(2), -1).is_ok());
        assert_eq!(Automorphism::new(&p, K::zero(), 1), Err(AlgebraError::ZeroLambda));
        assert_eq!(Params::from_ints(1, -1), Err(AlgebraError::DegenerateParams));
    }

    #[test]
    fn weights_and_degrees() {
        let x = alg(1, 0);
        assert_eq!(weight(&x.monomial(2, 3)), Some(2));
        assert_eq!(weight(&x.mul(&x.b_star(), &x.b())), Some(0));
        assert_eq!(weight(&x.a().add(&x.b())), None);
        assert_eq!(degree(&x.monomial(-1, 2)), 3);
    }

    #[test]
    fn monomial_text() {
        assert_eq!(PodlesMonomial::new(2, 3).to_string(), "B^2 A^3");
        assert_eq!(PodlesMonomial::new(-1, 1).to_string(), "B* A");
        assert_eq!(PodlesMonomial::ONE.to_string(), "1");
    }

    #[test]
    fn rescaling_is_multiplicative() {
        let r = K::from_int(3);
        let small = Podles::new(Params::from_ints(2, 1).unwrap());
        let big = Podles::new(small.params().rescaled(&r).unwrap());
        let x = big.parse("B*^2 A + A").unwrap();
        let y = big.parse("B^3 - A^2").unwrap();
        let lhs = rescale(&big.mul(&x, &y), &r);
        let rhs = small.mul(&rescale(&x, &r), &rescale(&y, &r));
        assert_eq!(lhs, rhs);
    }
}
