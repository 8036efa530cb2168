//! Hochschild and cyclic chains on `A(c,d)`: the boundaries `b'` and `b_σ`,
//! the twisted cyclic operator `λ_σ`, Connes' `B`, and the named chains and
//! functionals used to probe homology classes.
//!
//! Conventions, for a chain `(a_0, …, a_n)`:
//!
//! ```text
//! b'(a_0,…,a_n)  = Σ_{j<n} (−1)^j (a_0,…,a_j a_{j+1},…,a_n)
//! b_σ            = b' + (−1)^n (σ(a_n) a_0, a_1, …, a_{n−1})
//! λ_σ(a_0,…,a_n) = (−1)^n (σ(a_n), a_0, …, a_{n−1})
//! B              = (id − λ_σ) ∘ s ∘ N,   s(x) = (1, x),  N = Σ_{i≤n} λ_σ^i
//! ```

use std::fmt;

use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{AlgebraError, Automorphism, Element, Params, Podles, PodlesMonomial};
use crate::field::Field;
use crate::lincomb::LinComb;
use crate::quantumgroup::{Suq, SuqElement, UqGen};

pub type Tuple = Vec<PodlesMonomial>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("expected a chain of degree {expected}, got {found}")]
    WrongDegree { expected: usize, found: usize },
    #[error("element is not an eigenvector of the automorphism")]
    NotEigenvector,
    #[error("Connes B in degree {0} disagrees with the explicit low-degree formula")]
    ConventionMismatch(usize),
    #[error("chain has a tuple with automorphism eigenvalue != 1")]
    NotInvariant,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

pub fn tuple_weight(t: &[PodlesMonomial]) -> i32 {
    t.iter().map(|m| m.b).sum()
}

pub fn tuple_degree(t: &[PodlesMonomial]) -> u32 {
    t.iter().map(|m| m.degree()).sum()
}

/// Total `A`-exponent parity of a tuple.
pub fn tuple_parity(t: &[PodlesMonomial]) -> u32 {
    t.iter().map(|m| m.a).sum::<u32>() % 2
}

pub fn tuple_eigenvalue<K: Field>(sigma: &Automorphism<K>, t: &[PodlesMonomial]) -> K {
    sigma.block_eigenvalue(tuple_weight(t), tuple_parity(t))
}

/// An element of `A^⊗(n+1)`, stored on tuples of PBW monomials.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorChain<K: Field> {
    n: usize,
    terms: LinComb<K, Tuple>,
}

impl<K: Field> TensorChain<K> {
    pub fn zero(n: usize) -> Self {
        TensorChain { n, terms: LinComb::zero() }
    }

    pub fn from_tuple(t: Tuple, k: K) -> Self {
        assert!(!t.is_empty(), "a chain tuple has at least one entry");
        TensorChain { n: t.len() - 1, terms: LinComb::term(t, k) }
    }

    pub fn from_terms<I: IntoIterator<Item = (Tuple, K)>>(n: usize, it: I) -> Self {
        let mut out = TensorChain::zero(n);
        for (t, k) in it {
            out.add_term(t, k);
        }
        out
    }

    /// `x_0 ⊗ … ⊗ x_n` expanded over the monomial basis.
    pub fn from_elements(xs: &[Element<K>]) -> Self {
        assert!(!xs.is_empty());
        let mut acc: Vec<(Tuple, K)> = vec![(Vec::new(), K::one())];
        for x in xs {
            let mut next = Vec::with_capacity(acc.len() * x.len());
            for (t, k) in &acc {
                for (m, c) in x {
                    let mut u = t.clone();
                    u.push(*m);
                    next.push((u, k.mul_ref(c)));
                }
            }
            acc = next;
        }
        TensorChain::from_terms(xs.len() - 1, acc)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &LinComb<K, Tuple> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, t: &[PodlesMonomial]) -> K {
        self.terms.coeff(&t.to_vec())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Tuple, &K)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, t: Tuple, k: K) {
        assert_eq!(t.len(), self.n + 1, "tuple length does not match chain degree");
        self.terms.add_term(t, k);
    }

    pub fn add_scaled(&mut self, other: &Self, k: &K) {
        assert_eq!(self.n, other.n);
        self.terms.add_scaled(&other.terms, k);
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        TensorChain { n: self.n, terms: self.terms.add(&other.terms) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        TensorChain { n: self.n, terms: self.terms.sub(&other.terms) }
    }

    pub fn scale(&self, k: &K) -> Self {
        TensorChain { n: self.n, terms: self.terms.scale(k) }
    }

    pub fn filter<F: Fn(&Tuple) -> bool>(&self, keep: F) -> Self {
        TensorChain { n: self.n, terms: self.terms.filter(keep) }
    }

    /// Largest total degree of a supported tuple.
    pub fn max_tuple_degree(&self) -> u32 {
        self.terms.keys().map(|t| tuple_degree(t)).max().unwrap_or(0)
    }

    /// Reports format: a list of `[coefficient, [monomial, …]]`.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(t, k)| {
                    let ms: Vec<String> = t.iter().map(|m| m.to_string()).collect();
                    json!([k.to_string(), ms])
                })
                .collect(),
        )
    }
}

impl<K: Field> fmt::Display for TensorChain<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_zero() {
            return f.write_str("0");
        }
        for (i, (t, k)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let ms: Vec<String> = t.iter().map(|m| m.to_string()).collect();
            if k.is_one() {
                write!(f, "({})", ms.join(", "))?;
            } else {
                write!(f, "({k})*({})", ms.join(", "))?;
            }
        }
        Ok(())
    }
}

impl<K: Field> fmt::Debug for TensorChain<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorChain[{}]({})", self.n, self)
    }
}

fn splice(t: &[PodlesMonomial], j: usize, m: PodlesMonomial) -> Tuple {
    let mut u = Vec::with_capacity(t.len() - 1);
    u.extend_from_slice(&t[..j]);
    u.push(m);
    u.extend_from_slice(&t[j + 2..]);
    u
}

/// `b'` on a single tuple, appended to `out`.
pub fn b_prime_tuple_into<K: Field>(alg: &Podles<K>, t: &[PodlesMonomial], k: &K, out: &mut LinComb<K, Tuple>) {
    let n = t.len() - 1;
    for j in 0..n {
        let kj = if j % 2 == 0 { k.clone() } else { -k.clone() };
        for (m, c) in alg.mul_mono(t[j], t[j + 1]) {
            out.add_term(splice(t, j, m), c.mul_ref(&kj));
        }
    }
}

/// `b_σ` on a single tuple, appended to `out`.
pub fn b_sigma_tuple_into<K: Field>(
    alg: &Podles<K>,
    sigma: &Automorphism<K>,
    t: &[PodlesMonomial],
    k: &K,
    out: &mut LinComb<K, Tuple>,
) {
    b_prime_tuple_into(alg, t, k, out);
    let n = t.len() - 1;
    let mut kw = sigma.eigenvalue(&t[n]).mul_ref(k);
    if n % 2 == 1 {
        kw = -kw;
    }
    for (m, c) in alg.mul_mono(t[n], t[0]) {
        let mut u = Vec::with_capacity(n);
        u.push(m);
        u.extend_from_slice(&t[1..n]);
        out.add_term(u, c.mul_ref(&kw));
    }
}

pub fn b_prime<K: Field>(alg: &Podles<K>, x: &TensorChain<K>) -> TensorChain<K> {
    assert!(x.n >= 1, "b' needs degree at least 1");
    let mut out = LinComb::zero();
    for (t, k) in x.iter() {
        b_prime_tuple_into(alg, t, k, &mut out);
    }
    TensorChain { n: x.n - 1, terms: out }
}

pub fn b_sigma<K: Field>(alg: &Podles<K>, sigma: &Automorphism<K>, x: &TensorChain<K>) -> TensorChain<K> {
    assert!(x.n >= 1, "b_sigma needs degree at least 1");
    let mut out = LinComb::zero();
    for (t, k) in x.iter() {
        b_sigma_tuple_into(alg, sigma, t, k, &mut out);
    }
    TensorChain { n: x.n - 1, terms: out }
}

/// `λ_σ`.
pub fn cyclic_op<K: Field>(sigma: &Automorphism<K>, x: &TensorChain<K>) -> TensorChain<K> {
    let n = x.n;
    let mut out = TensorChain::zero(n);
    for (t, k) in x.iter() {
        let mut c = sigma.eigenvalue(&t[n]).mul_ref(k);
        if n % 2 == 1 {
            c = -c;
        }
        let mut u = Vec::with_capacity(n + 1);
        u.push(t[n]);
        u.extend_from_slice(&t[..n]);
        out.add_term(u, c);
    }
    out
}

/// `σ^⊗(n+1)`.
pub fn twist<K: Field>(sigma: &Automorphism<K>, x: &TensorChain<K>) -> TensorChain<K> {
    TensorChain { n: x.n, terms: x.terms.scale_by(|t| tuple_eigenvalue(sigma, t)) }
}

/// A chain all of whose tuples have `σ`-eigenvalue 1; these represent
/// `A^⊗(n+1)/(id − λ_σ^(n+1))` faithfully.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CyclicClass<K: Field> {
    chain: TensorChain<K>,
}

impl<K: Field> CyclicClass<K> {
    pub fn new(sigma: &Automorphism<K>, chain: TensorChain<K>) -> Result<Self, ChainError> {
        if chain.iter().all(|(t, _)| tuple_eigenvalue(sigma, t).is_one()) {
            Ok(CyclicClass { chain })
        } else {
            Err(ChainError::NotInvariant)
        }
    }

    pub fn chain(&self) -> &TensorChain<K> {
        &self.chain
    }

    pub fn into_chain(self) -> TensorChain<K> {
        self.chain
    }

    pub fn degree(&self) -> usize {
        self.chain.n
    }
}

/// Drop every tuple whose eigenvalue differs from 1. Such a tuple `t` with
/// eigenvalue `ε` equals `(1 − ε)⁻¹ (id − λ_σ^(n+1)) t`, so it is zero in the
/// quotient.
pub fn project_sigma<K: Field>(sigma: &Automorphism<K>, x: &TensorChain<K>) -> CyclicClass<K> {
    if sigma.is_identity() {
        return CyclicClass { chain: x.clone() };
    }
    CyclicClass { chain: x.filter(|t| tuple_eigenvalue(sigma, t).is_one()) }
}

/// `B = (id − λ_σ) s N` on raw chains.
pub fn connes_b_chain<K: Field>(sigma: &Automorphism<K>, x: &TensorChain<K>) -> TensorChain<K> {
    let n = x.n;
    let mut norm = x.clone();
    let mut power = x.clone();
    for _ in 0..n {
        power = cyclic_op(sigma, &power);
        norm = norm.add(&power);
    }
    let mut lifted = TensorChain::zero(n + 1);
    for (t, k) in norm.iter() {
        let mut u = Vec::with_capacity(n + 2);
        u.push(PodlesMonomial::ONE);
        u.extend_from_slice(t);
        lifted.add_term(u, k.clone());
    }
    lifted.sub(&cyclic_op(sigma, &lifted))
}

fn explicit_b_low<K: Field>(sigma: &Automorphism<K>, x: &TensorChain<K>) -> Option<TensorChain<K>> {
    let one = PodlesMonomial::ONE;
    match x.n {
        0 => {
            let mut out = TensorChain::zero(1);
            for (t, k) in x.iter() {
                out.add_term(vec![one, t[0]], k.clone());
                out.add_term(vec![t[0], one], sigma.eigenvalue(&t[0]).mul_ref(k));
            }
            Some(out)
        }
        1 => {
            let mut out = TensorChain::zero(2);
            for (t, k) in x.iter() {
                let (a0, a1) = (t[0], t[1]);
                let e1 = sigma.eigenvalue(&a1).mul_ref(k);
                out.add_term(vec![one, a0, a1], k.clone());
                out.add_term(vec![a1, one, a0], -e1.clone());
                out.add_term(vec![one, a1, a0], -e1);
                out.add_term(vec![a0, one, a1], k.clone());
            }
            Some(out)
        }
        _ => None,
    }
}

/// Connes' `B` on classes. In degrees 0 and 1 the general formula is
/// compared against the explicit `B₀`, `B₁` expressions and a mismatch is an
/// error.
pub fn connes_b<K: Field>(sigma: &Automorphism<K>, x: &CyclicClass<K>) -> Result<CyclicClass<K>, ChainError> {
    let general = connes_b_chain(sigma, &x.chain);
    if let Some(explicit) = explicit_b_low(sigma, &x.chain) {
        if explicit != general {
            return Err(ChainError::ConventionMismatch(x.chain.n));
        }
    }
    CyclicClass::new(sigma, general)
}

/// Checks, for `σ(t) = αt`,
/// `b(Σ_j α^j (t^j, t^(m−j), t) − (t^(m+1), 1, 1)) = (Σ_j α^j)(t^m, t) − (1, t^(m+1))`
/// in `C^σ_1`.
pub fn first_homology_relation_check<K: Field>(
    alg: &Podles<K>,
    sigma: &Automorphism<K>,
    t: &Element<K>,
    m: u32,
) -> Result<bool, ChainError> {
    let alpha = eigenvalue_of(sigma, t)?;
    let one = alg.one();
    let powers: Vec<Element<K>> = (0..=m + 1).map(|j| alg.pow(t, j)).collect();
    let mut lhs_in = TensorChain::from_elements(&[powers[m as usize + 1].clone(), one.clone(), one.clone()]).scale(&-K::one());
    let mut alpha_sum = K::zero();
    for j in 0..=m as usize {
        let aj = alpha.powi(j as i64);
        let piece = TensorChain::from_elements(&[powers[j].clone(), powers[m as usize - j].clone(), t.clone()]);
        lhs_in.add_scaled(&piece, &aj);
        alpha_sum += &aj;
    }
    let lhs = b_sigma(alg, sigma, &lhs_in);
    let mut rhs = TensorChain::from_elements(&[powers[m as usize].clone(), t.clone()]).scale(&alpha_sum);
    rhs.add_scaled(&TensorChain::from_elements(&[one, powers[m as usize + 1].clone()]), &-K::one());
    Ok(project_sigma(sigma, &lhs) == project_sigma(sigma, &rhs))
}

/// The scalar `α` with `σ(t) = αt`.
pub fn eigenvalue_of<K: Field>(sigma: &Automorphism<K>, t: &Element<K>) -> Result<K, ChainError> {
    let (m0, _) = t.iter().next().ok_or(ChainError::NotEigenvector)?;
    let alpha = sigma.eigenvalue(m0);
    if t.keys().all(|m| sigma.eigenvalue(m) == alpha) {
        Ok(alpha)
    } else {
        Err(ChainError::NotEigenvector)
    }
}

/// Linear functionals on `A(c,d)`, given on the PBW basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Functional0<K: Field> {
    /// Explicit values on finitely many monomials.
    Values(LinComb<K, PodlesMonomial>),
    /// The invariant functional `h`, `h(Aⁿ) = f(0)/f(n) · (c^(n+1) − (−d)^(n+1))/(c+d)`
    /// with `f(n) = q⁻² − q^(2n)`, zero off the powers of `A`.
    Haar,
    /// `τ₀` for `λ = q^(−(2b+2))`.
    Tau0 { b: u32 },
    /// `τ_(b+1)`: the delta function at `A^(b+1)`.
    TauTop { b: u32 },
    /// `h_A` on the standard sphere: `h_A(1) = 0`, `h_A(A^(r+1)) = (1 − q⁴)/(1 − q^(2r+4))`.
    HaarA,
    /// For `σ_λ` with `λ ∉ q^(−2ℕ)`: the coordinate of `[Aⁿ]` on `[1]`
    /// (`at_one`) or on `[A]` in `[Aⁿ] = ρ₁(n)[1] + ρ_A(n)[A]`, from
    /// `x_n = f(n)[Aⁿ] = (c+d)⁻¹(α cⁿ + β(−d)ⁿ)`, `f(n) = λ⁻¹ − q^(2n)`.
    Coord { lambda: K, at_one: bool },
}

impl<K: Field> Functional0<K> {
    pub fn name(&self) -> String {
        match self {
            Functional0::Values(_) => "values".into(),
            Functional0::Haar => "h".into(),
            Functional0::Tau0 { b } => format!("tau0[b={b}]"),
            Functional0::TauTop { b } => format!("tau{}", b + 1),
            Functional0::HaarA => "h_A".into(),
            Functional0::Coord { at_one: true, .. } => "rho1".into(),
            Functional0::Coord { at_one: false, .. } => "rhoA".into(),
        }
    }

    pub fn eval_mono(&self, p: &Params<K>, m: &PodlesMonomial) -> K {
        if let Functional0::Values(v) = self {
            return v.coeff(m);
        }
        if m.b != 0 {
            return K::zero();
        }
        let n = m.a as i64;
        let q = &p.q;
        match self {
            Functional0::Values(_) => unreachable!(),
            Functional0::Haar => {
                let f = |k: i64| q.powi(-2) - q.powi(2 * k);
                let cpd = p.c.add_ref(&p.d);
                let top = p.c.powi(n + 1) - (-p.d.clone()).powi(n + 1);
                f(0).div_ref(&f(n)).mul_ref(&top.div_ref(&cpd))
            }
            Functional0::Tau0 { b } => {
                let b = *b as i64;
                if p.cd().is_zero() {
                    return if n == 0 { K::one() } else { K::zero() };
                }
                if n == b + 1 {
                    return K::zero();
                }
                let f = q.powi(2 * b + 2) - q.powi(2 * n);
                g_coeff(p, n - b - 1).div_ref(&f)
            }
            Functional0::TauTop { b } => {
                if n == *b as i64 + 1 {
                    K::one()
                } else {
                    K::zero()
                }
            }
            Functional0::HaarA => {
                if n == 0 {
                    K::zero()
                } else {
                    let r = n - 1;
                    (K::one() - q.powi(4)).div_ref(&(K::one() - q.powi(2 * r + 4)))
                }
            }
            Functional0::Coord { lambda, at_one } => {
                let f = |k: i64| lambda.inverse().expect("nonzero lambda") - q.powi(2 * k);
                let cpd = p.c.add_ref(&p.d);
                let md = -p.d.clone();
                let top = if *at_one {
                    f(0).mul_ref(&(p.d.mul_ref(&p.c.powi(n)) + p.c.mul_ref(&md.powi(n))))
                } else {
                    f(1).mul_ref(&(p.c.powi(n) - md.powi(n)))
                };
                top.div_ref(&cpd.mul_ref(&f(n)))
            }
        }
    }

    pub fn eval(&self, p: &Params<K>, x: &Element<K>) -> K {
        x.pair(|m| self.eval_mono(p, m))
    }
}

/// `g(t) = (c+d)⁻¹ cd [c^t − (−d)^t]`; needs `cd ≠ 0` when `t < 0`.
pub fn g_coeff<K: Field>(p: &Params<K>, t: i64) -> K {
    let cpd = p.c.add_ref(&p.d);
    let diff = p.c.powi(t) - (-p.d.clone()).powi(t);
    p.cd().mul_ref(&diff).div_ref(&cpd)
}

/// The product `a_0 a_1 ⋯ a_n` of a chain.
pub fn s_image<K: Field>(alg: &Podles<K>, x: &TensorChain<K>) -> Element<K> {
    let mut out = Element::zero();
    for (t, k) in x.iter() {
        let mut acc = alg.one();
        for m in t {
            acc = alg.mul(&acc, &Element::basis(*m));
        }
        out.add_scaled(&acc, k);
    }
    out
}

/// The periodicity pairing `Sφ(a_0, a_1, a_2) = φ(a_0 a_1 a_2)`.
pub fn s_pair<K: Field>(alg: &Podles<K>, phi: &Functional0<K>, x: &TensorChain<K>) -> Result<K, ChainError> {
    if x.n != 2 {
        return Err(ChainError::WrongDegree { expected: 2, found: x.n });
    }
    Ok(phi.eval(alg.params(), &s_image(alg, x)))
}

fn chain3<K: Field>(terms: &[(K, [&Element<K>; 3])]) -> TensorChain<K> {
    let mut out = TensorChain::zero(2);
    for (k, xs) in terms {
        let piece = TensorChain::from_elements(&[xs[0].clone(), xs[1].clone(), xs[2].clone()]);
        out.add_scaled(&piece, k);
    }
    out
}

/// `η = (B*,A,B) + q²(B,B*,A) + q²(A,B,B*) − q⁻²(B*,B,A) − q⁻²(A,B*,B) − (B,A,B*) + (q⁶ − q⁻²)(A,A,A)`.
pub fn make_eta<K: Field>(alg: &Podles<K>) -> TensorChain<K> {
    let (a, b, bs) = (alg.a(), alg.b(), alg.b_star());
    let q = |k| alg.q_pow(k);
    let one = K::one();
    chain3(
        &[
            (one.clone(), [&bs, &a, &b]),
            (q(2), [&b, &bs, &a]),
            (q(2), [&a, &b, &bs]),
            (-q(-2), [&bs, &b, &a]),
            (-q(-2), [&a, &bs, &b]),
            (-one, [&b, &a, &bs]),
            (q(6) - q(-2), [&a, &a, &a]),
        ],
    )
}

/// The twisted 2-cycle `ω₂` for `λ = q^(−(2b+2))`:
///
/// ```text
/// 2[(A^(b+1),B,B*) − (A^(b+1),B*,B) + 2(A^b B,B*,A) − 2q⁻²(A^b B,A,B*)]
///   + 2(q⁴−1)(A^(b+1),A,A) + (1−q⁻²)cd(c−d)(A^b,1,1)
///   + (c−d)[(A^b,B*,B) − q⁻²(A^b,B,B*) + (1−q²)(A^b,A,A)]
/// ```
pub fn make_omega2<K: Field>(alg: &Podles<K>, b: u32) -> TensorChain<K> {
    let p = alg.params();
    let (a, bb, bs, one) = (alg.a(), alg.b(), alg.b_star(), alg.one());
    let ab = alg.pow(&a, b);
    let ab1 = alg.pow(&a, b + 1);
    let abb = alg.mul(&ab, &bb);
    let q = |k| alg.q_pow(k);
    let k = |n: i64| K::from_i64(n);
    let cmd = p.c_minus_d();
    chain3(
        &[
            (k(2), [&ab1, &bb, &bs]),
            (k(-2), [&ab1, &bs, &bb]),
            (k(4), [&abb, &bs, &a]),
            (k(-4).mul_ref(&q(-2)), [&abb, &a, &bs]),
            (k(2).mul_ref(&(q(4) - K::one())), [&ab1, &a, &a]),
            ((K::one() - q(-2)).mul_ref(&p.cd()).mul_ref(&cmd), [&ab, &one, &one]),
            (cmd.clone(), [&ab, &bs, &bb]),
            (-cmd.mul_ref(&q(-2)), [&ab, &bb, &bs]),
            (cmd.mul_ref(&(K::one() - q(2))), [&ab, &a, &a]),
        ],
    )
}

/// The twisted cyclic 2-cocycle
/// `τ(a_0,a_1,a_2) = h(a_0 [(a_1◁F)(a_2◁E) − q²(a_1◁E)(a_2◁F)])` on the
/// standard sphere, computed inside `A(SU_q(2))`.
pub struct TauCocycle<'a, K: Field> {
    alg: &'a Podles<K>,
    suq: &'a Suq<K>,
    cache: std::sync::RwLock<std::collections::HashMap<PodlesMonomial, std::sync::Arc<[SuqElement<K>; 3]>>>,
}

impl<'a, K: Field> TauCocycle<'a, K> {
    pub fn new(alg: &'a Podles<K>, suq: &'a Suq<K>) -> Result<Self, ChainError> {
        if !alg.params().is_standard() || alg.params().s != *suq.s() {
            return Err(AlgebraError::NotStandardSphere.into());
        }
        Ok(TauCocycle { alg, suq, cache: Default::default() })
    }

    /// The automorphism `σ = σ_(q²)` the cocycle is twisted by.
    pub fn sigma(&self) -> Automorphism<K> {
        Automorphism::new(self.alg.params(), self.alg.q_pow(2), 1).expect("q^2 is nonzero")
    }

    /// `(x, x◁E, x◁F)` inside `A(SU_q(2))`.
    fn images(&self, m: &PodlesMonomial) -> Result<std::sync::Arc<[SuqElement<K>; 3]>, ChainError> {
        if let Some(v) = self.cache.read().unwrap().get(m) {
            return Ok(v.clone());
        }
        let x = self.suq.embed_sphere(self.alg, &Element::basis(*m))?;
        let e = self.suq.act_right(UqGen::E, &x);
        let f = self.suq.act_right(UqGen::F, &x);
        let v = std::sync::Arc::new([x, e, f]);
        self.cache.write().unwrap().insert(*m, v.clone());
        Ok(v)
    }

    pub fn eval_tuple(&self, t: &[PodlesMonomial]) -> Result<K, ChainError> {
        if t.len() != 3 {
            return Err(ChainError::WrongDegree { expected: 2, found: t.len().saturating_sub(1) });
        }
        let i0 = self.images(&t[0])?;
        let i1 = self.images(&t[1])?;
        let i2 = self.images(&t[2])?;
        let s = self.suq;
        let fe = s.mul(&i1[2], &i2[1]);
        let ef = s.mul(&i1[1], &i2[2]);
        let mut inner = fe;
        inner.add_scaled(&ef, &-s.q_pow(2));
        Ok(s.haar(&s.mul(&i0[0], &inner)))
    }

    pub fn eval(&self, x: &TensorChain<K>) -> Result<K, ChainError> {
        if x.n != 2 {
            return Err(ChainError::WrongDegree { expected: 2, found: x.n });
        }
        let mut acc = K::zero();
        for (t, k) in x.iter() {
            acc += &self.eval_tuple(t)?.mul_ref(k);
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ScalarK;
    use num_traits::One;

    type K = ScalarK;

    fn q(k: i64) -> K {
        K::q_pow(k)
    }

    fn mono(b: i32, a: u32) -> PodlesMonomial {
        PodlesMonomial::new(b, a)
    }

    #[test]
    fn eta_values() {
        let alg = Podles::new(Params::standard());
        let suq = Suq::generic();
        let tau = TauCocycle::new(&alg, &suq).unwrap();
        let eta = make_eta(&alg);
        assert_eq!(tau.eval(&eta).unwrap(), -K::one());
        let c = q(4) - q(-2);
        let a = alg.a();
        assert_eq!(s_image(&alg, &eta), alg.mul(&a, &a).scale(&c));
        let aa = TensorChain::from_elements(&[a.clone(), a]);
        assert_eq!(b_sigma(&alg, &tau.sigma(), &eta), aa.scale(&c));
    }

    #[test]
    fn b_prime_low_degree() {
        let alg = Podles::new(Params::from_ints(2, 1).unwrap());
        let x = TensorChain::from_tuple(vec![mono(0, 0), mono(0, 1), mono(0, 0)], K::one());
        let got = b_prime(&alg, &x);
        let mut want = TensorChain::zero(1);
        want.add_term(vec![mono(0, 1), mono(0, 0)], K::one());
        want.add_term(vec![mono(0, 0), mono(0, 1)], -K::one());
        assert_eq!(got, want);
        let y = TensorChain::from_tuple(vec![mono(0, 0), mono(0, 0)], K::one());
        assert_eq!(b_prime(&alg, &y), TensorChain::from_tuple(vec![mono(0, 0)], K::one()));
    }
}
