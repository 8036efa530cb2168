//! The free bimodule resolution `M_4 → M_3 → M_2 → M_1 → M_0 → A` of
//! `A(c,d)` with ranks 1, 3, 4, 4, 4, after applying `σA ⊗_{A^e} −`.
//!
//! A coefficient vector `(a_1, …, a_r)` at level `n` stands for
//! `Σ a_i ⊗ m_i`, and `A` is a right `A^e`-module through
//! `a·(x ⊗ y°) = σ(y) a x`. The differentials are available twice: as the
//! component formulas of the induced complex ([`Resolution::d`]) and
//! through the `A^e`-level matrices ([`Resolution::d_bimodule`]).
//!
//! Basis order per level:
//!
//! ```text
//! M_1: e_A, e_B*, e_B
//! M_2: e_A∧e_B*, e_A∧e_B, θ_S, θ_T
//! M_3: e_A∧θ_S, e_A∧θ_T, e_B*∧θ_S, e_B∧θ_T
//! M_4: e_A∧e_B*∧θ_S, e_A∧e_B∧θ_T, θ_S², θ_T²
//! ```

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{Automorphism, Element, Podles, PodlesMonomial};
use crate::chains::{b_prime, b_sigma, TensorChain};
use crate::field::Field;

pub const RANKS: [usize; 5] = [1, 3, 4, 4, 4];

pub const LABELS: [&[&str]; 5] = [
    &["1"],
    &["e_A", "e_B*", "e_B"],
    &["e_A^e_B*", "e_A^e_B", "thS", "thT"],
    &["e_A^thS", "e_A^thT", "e_B*^thS", "e_B^thT"],
    &["e_A^e_B*^thS", "e_A^e_B^thT", "thS2", "thT2"],
];

/// Weight carried by each basis element.
pub const WEIGHT_OFFSETS: [&[i32]; 5] = [&[0], &[0, -1, 1], &[-1, 1, 0, 0], &[0, 0, -1, 1], &[-1, 1, 0, 0]];

/// `A`-parity carried by each basis element (relevant when `c = d`).
pub const PARITY_OFFSETS: [&[u32]; 5] = [&[0], &[1, 0, 0], &[1, 1, 0, 0], &[1, 1, 0, 0], &[1, 1, 0, 0]];

/// Filtration degree carried by the basis elements of a level.
pub fn degree_offset(level: usize) -> u32 {
    level as u32
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResolutionError {
    #[error("level {0} is outside 0..=4")]
    BadLevel(usize),
    #[error("vector at level {level} has {found} coordinates, expected {expected}")]
    BadRank { level: usize, expected: usize, found: usize },
    #[error("comparison maps exist only up to level 2")]
    NoComparisonMap,
    #[error("vector is not in the kernel of d_{0}")]
    NotACycle(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleVector<K: Field> {
    pub level: usize,
    pub coords: Vec<Element<K>>,
}

impl<K: Field> ModuleVector<K> {
    pub fn zero(level: usize) -> Self {
        ModuleVector { level, coords: vec![Element::zero(); RANKS[level]] }
    }

    pub fn new(level: usize, coords: Vec<Element<K>>) -> Result<Self, ResolutionError> {
        if level > 4 {
            return Err(ResolutionError::BadLevel(level));
        }
        if coords.len() != RANKS[level] {
            return Err(ResolutionError::BadRank { level, expected: RANKS[level], found: coords.len() });
        }
        Ok(ModuleVector { level, coords })
    }

    /// `x` in slot `i`, zero elsewhere.
    pub fn unit(level: usize, i: usize, x: Element<K>) -> Self {
        let mut v = ModuleVector::zero(level);
        v.coords[i] = x;
        v
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add_scaled(&mut self, other: &Self, k: &K) {
        for (a, b) in self.coords.iter_mut().zip(&other.coords) {
            a.add_scaled(b, k);
        }
    }
}

/// One `A^e`-level matrix entry: `coef · (x ⊗ y°) ⊗ m_target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AeTerm<K> {
    pub target: usize,
    pub x: PodlesMonomial,
    pub y: PodlesMonomial,
    pub coef: K,
}

#[derive(Debug, Clone, Serialize)]
pub struct Triplet {
    pub row: usize,
    pub col: usize,
    pub value: String,
}

pub struct Resolution<'a, K: Field> {
    alg: &'a Podles<K>,
    sigma: Automorphism<K>,
}

const ONE: PodlesMonomial = PodlesMonomial::ONE;
const MA: PodlesMonomial = PodlesMonomial { b: 0, a: 1 };
const MB: PodlesMonomial = PodlesMonomial { b: 1, a: 0 };
const MBS: PodlesMonomial = PodlesMonomial { b: -1, a: 0 };

impl<'a, K: Field> Resolution<'a, K> {
    pub fn new(alg: &'a Podles<K>, sigma: Automorphism<K>) -> Self {
        Resolution { alg, sigma }
    }

    pub fn alg(&self) -> &Podles<K> {
        self.alg
    }

    pub fn sigma(&self) -> &Automorphism<K> {
        &self.sigma
    }

    fn q(&self, k: i64) -> K {
        self.alg.q_pow(k)
    }

    /// The twisted right action `a·(x ⊗ y°) = σ(y) a x`.
    pub fn act(&self, a: &Element<K>, x: &Element<K>, y: &Element<K>) -> Element<K> {
        let left = self.sigma.apply(y);
        self.alg.mul(&self.alg.mul(&left, a), x)
    }

    /// `A^e`-level matrix of `d_level`: entry `i` lists the image of the
    /// `i`-th basis element.
    pub fn ae_data(&self, level: usize) -> Result<Vec<Vec<AeTerm<K>>>, ResolutionError> {
        let p = self.alg.params();
        let cmd = p.c_minus_d();
        let q = |k| self.q(k);
        let one = K::one();
        let t = |target, x, y, coef: K| AeTerm { target, x, y, coef };
        let data = match level {
            1 => vec![
                vec![t(0, MA, ONE, one.clone()), t(0, ONE, MA, -one.clone())],
                vec![t(0, MBS, ONE, one.clone()), t(0, ONE, MBS, -one.clone())],
                vec![t(0, MB, ONE, one.clone()), t(0, ONE, MB, -one.clone())],
            ],
            2 => vec![
                vec![
                    t(1, MA, ONE, one.clone()),
                    t(1, ONE, MA, -q(2)),
                    t(0, MBS, ONE, -q(2)),
                    t(0, ONE, MBS, one.clone()),
                ],
                vec![
                    t(2, MA, ONE, q(2)),
                    t(2, ONE, MA, -one.clone()),
                    t(0, MB, ONE, -one.clone()),
                    t(0, ONE, MB, q(2)),
                ],
                vec![
                    t(1, MB, ONE, -q(-1)),
                    t(2, ONE, MBS, -q(-1)),
                    t(0, MA, ONE, -q(3)),
                    t(0, ONE, MA, -q(3)),
                    t(0, ONE, ONE, q(1).mul_ref(&cmd)),
                ],
                vec![
                    t(1, ONE, MB, -q(-1)),
                    t(2, MBS, ONE, -q(-1)),
                    t(0, MA, ONE, -q(-1)),
                    t(0, ONE, MA, -q(-1)),
                    t(0, ONE, ONE, q(-1).mul_ref(&cmd)),
                ],
            ],
            3 => vec![
                vec![
                    t(2, MA, ONE, one.clone()),
                    t(2, ONE, MA, -one.clone()),
                    t(0, MB, ONE, q(-3)),
                    t(1, ONE, MBS, q(-3)),
                ],
                vec![
                    t(3, MA, ONE, one.clone()),
                    t(3, ONE, MA, -one.clone()),
                    t(0, ONE, MB, q(-1)),
                    t(1, MBS, ONE, q(-1)),
                ],
                vec![
                    t(2, MBS, ONE, one.clone()),
                    t(3, ONE, MBS, -one.clone()),
                    t(0, MA, ONE, -q(-1)),
                    t(0, ONE, MA, -q(1)),
                    t(0, ONE, ONE, q(-1).mul_ref(&cmd)),
                ],
                vec![
                    t(3, MB, ONE, one.clone()),
                    t(2, ONE, MB, -one.clone()),
                    t(1, MA, ONE, -q(1)),
                    t(1, ONE, MA, -q(-1)),
                    t(1, ONE, ONE, q(-1).mul_ref(&cmd)),
                ],
            ],
            4 => vec![
                vec![
                    t(2, MA, ONE, one.clone()),
                    t(2, ONE, MA, -q(2)),
                    t(0, MBS, ONE, -q(2)),
                    t(1, ONE, MBS, one.clone()),
                ],
                vec![
                    t(3, MA, ONE, q(2)),
                    t(3, ONE, MA, -one.clone()),
                    t(1, MB, ONE, -one.clone()),
                    t(0, ONE, MB, q(2)),
                ],
                vec![
                    t(2, MB, ONE, -q(-1)),
                    t(3, ONE, MBS, -q(-1)),
                    t(0, MA, ONE, -q(3)),
                    t(0, ONE, MA, -q(3)),
                    t(0, ONE, ONE, q(1).mul_ref(&cmd)),
                ],
                vec![
                    t(2, ONE, MB, -q(-1)),
                    t(3, MBS, ONE, -q(-1)),
                    t(1, MA, ONE, -q(-1)),
                    t(1, ONE, MA, -q(-1)),
                    t(1, ONE, ONE, q(-1).mul_ref(&cmd)),
                ],
            ],
            _ => return Err(ResolutionError::BadLevel(level)),
        };
        Ok(data)
    }

    fn check(&self, v: &ModuleVector<K>, level: usize) -> Result<(), ResolutionError> {
        if v.level != level || level == 0 || level > 4 {
            return Err(ResolutionError::BadLevel(v.level));
        }
        if v.coords.len() != RANKS[level] {
            return Err(ResolutionError::BadRank { level, expected: RANKS[level], found: v.coords.len() });
        }
        Ok(())
    }

    /// Induced differential computed from the `A^e`-level matrices.
    pub fn d_bimodule(&self, v: &ModuleVector<K>) -> Result<ModuleVector<K>, ResolutionError> {
        self.check(v, v.level)?;
        let data = self.ae_data(v.level)?;
        let mut out = ModuleVector::zero(v.level - 1);
        for (a, terms) in v.coords.iter().zip(&data) {
            if a.is_zero() {
                continue;
            }
            for t in terms {
                let img = self.act(a, &Element::basis(t.x), &Element::basis(t.y));
                out.coords[t.target].add_scaled(&img, &t.coef);
            }
        }
        Ok(out)
    }

    /// Induced differential `d_n`, written out component by component.
    pub fn d(&self, v: &ModuleVector<K>) -> Result<ModuleVector<K>, ResolutionError> {
        self.check(v, v.level)?;
        match v.level {
            1 => Ok(self.d1(v)),
            2 => Ok(self.d2(v)),
            3 => Ok(self.d3(v)),
            _ => Ok(self.d4(v)),
        }
    }

    fn mu(&self) -> K {
        K::from_i64(self.sigma.sign() as i64)
    }

    fn lam(&self) -> K {
        self.sigma.lambda().clone()
    }

    fn lam_inv(&self) -> K {
        self.sigma.inverse().lambda().clone()
    }

    fn r(&self, a: &Element<K>, x: &Element<K>) -> Element<K> {
        self.alg.mul(a, x)
    }

    fn l(&self, x: &Element<K>, a: &Element<K>) -> Element<K> {
        self.alg.mul(x, a)
    }

    /// `(a_1A − μAa_1) + (a_2B* − λ⁻¹B*a_2) + (a_3B − λBa_3)`.
    fn d1(&self, v: &ModuleVector<K>) -> ModuleVector<K> {
        let (a, b, bs) = (self.alg.a(), self.alg.b(), self.alg.b_star());
        let c = &v.coords;
        let mut x = self.r(&c[0], &a);
        x.add_scaled(&self.l(&a, &c[0]), &-self.mu());
        x.add_scaled(&self.r(&c[1], &bs), &K::one());
        x.add_scaled(&self.l(&bs, &c[1]), &-self.lam_inv());
        x.add_scaled(&self.r(&c[2], &b), &K::one());
        x.add_scaled(&self.l(&b, &c[2]), &-self.lam());
        ModuleVector { level: 0, coords: vec![x] }
    }

    fn d2(&self, v: &ModuleVector<K>) -> ModuleVector<K> {
        let (a, b, bs) = (self.alg.a(), self.alg.b(), self.alg.b_star());
        let q = |k| self.q(k);
        let mu = self.mu();
        let dmc = -self.alg.params().c_minus_d();
        let c = &v.coords;
        let (b1, b2, b3, b4) = (&c[0], &c[1], &c[2], &c[3]);
        let one = K::one();
        // e_A
        let mut ea = self.l(&bs, b1).scale(&self.lam_inv());
        ea.add_scaled(&self.r(b1, &bs), &-q(2));
        ea.add_scaled(&self.l(&b, b2), &q(2).mul_ref(&self.lam()));
        ea.add_scaled(&self.r(b2, &b), &-one.clone());
        let mut inner3 = self.r(b3, &a);
        inner3.add_scaled(&self.l(&a, b3), &mu);
        let mut t3 = inner3.scale(&q(2));
        t3.add_scaled(b3, &dmc);
        ea.add_scaled(&t3, &-q(1));
        let mut t4 = self.r(b4, &a);
        t4.add_scaled(&self.l(&a, b4), &mu);
        t4.add_scaled(b4, &dmc);
        ea.add_scaled(&t4, &-q(-1));
        // e_B*
        let mut ebs = self.r(b1, &a);
        ebs.add_scaled(&self.l(&a, b1), &-q(2).mul_ref(&mu));
        let mut t = self.r(b3, &b);
        t.add_scaled(&self.l(&b, b4), &self.lam());
        ebs.add_scaled(&t, &-q(-1));
        // e_B
        let mut eb = self.r(b2, &a).scale(&q(2));
        eb.add_scaled(&self.l(&a, b2), &-mu);
        let mut t = self.l(&bs, b3).scale(&self.lam_inv());
        t.add_scaled(&self.r(b4, &bs), &one);
        eb.add_scaled(&t, &-q(-1));
        ModuleVector { level: 1, coords: vec![ea, ebs, eb] }
    }

    fn d3(&self, v: &ModuleVector<K>) -> ModuleVector<K> {
        let (a, b, bs) = (self.alg.a(), self.alg.b(), self.alg.b_star());
        let q = |k| self.q(k);
        let mu = self.mu();
        let cmd = self.alg.params().c_minus_d();
        let one = K::one();
        let c = &v.coords;
        let (a1, a2, a3, a4) = (&c[0], &c[1], &c[2], &c[3]);
        // e_A∧e_B*
        let mut w1 = self.r(a1, &b).scale(&q(-3));
        w1.add_scaled(&self.l(&b, a2), &q(-1).mul_ref(&self.lam()));
        let mut t = self.r(a3, &a);
        t.add_scaled(&self.l(&a, a3), &q(2).mul_ref(&mu));
        t.add_scaled(a3, &-cmd.clone());
        w1.add_scaled(&t, &-q(-1));
        // e_A∧e_B
        let mut w2 = self.l(&bs, a1).scale(&q(-3).mul_ref(&self.lam_inv()));
        w2.add_scaled(&self.r(a2, &bs), &q(-1));
        let mut t = self.r(a4, &a).scale(&q(2));
        t.add_scaled(&self.l(&a, a4), &mu);
        t.add_scaled(a4, &-cmd);
        w2.add_scaled(&t, &-q(-1));
        // θ_S
        let mut ts = self.r(a1, &a);
        ts.add_scaled(&self.l(&a, a1), &-mu.clone());
        ts.add_scaled(&self.r(a3, &bs), &one);
        ts.add_scaled(&self.l(&b, a4), &-self.lam());
        // θ_T
        let mut tt = self.r(a2, &a);
        tt.add_scaled(&self.l(&a, a2), &-mu);
        tt.add_scaled(&self.l(&bs, a3), &-self.lam_inv());
        tt.add_scaled(&self.r(a4, &b), &one);
        ModuleVector { level: 2, coords: vec![w1, w2, ts, tt] }
    }

    fn d4(&self, v: &ModuleVector<K>) -> ModuleVector<K> {
        let (a, b, bs) = (self.alg.a(), self.alg.b(), self.alg.b_star());
        let q = |k| self.q(k);
        let mu = self.mu();
        let cmd = self.alg.params().c_minus_d();
        let one = K::one();
        let c = &v.coords;
        let (b1, b2, b3, b4) = (&c[0], &c[1], &c[2], &c[3]);
        // e_A∧θ_S
        let mut u1 = self.r(b1, &bs).scale(&-q(2));
        u1.add_scaled(&self.l(&b, b2), &q(2).mul_ref(&self.lam()));
        let mut t = self.r(b3, &a).scale(&q(2));
        t.add_scaled(&self.l(&a, b3), &mu.mul_ref(&q(2)));
        t.add_scaled(b3, &-cmd.clone());
        u1.add_scaled(&t, &-q(1));
        // e_A∧θ_T
        let mut u2 = self.l(&bs, b1).scale(&self.lam_inv());
        u2.add_scaled(&self.r(b2, &b), &-one.clone());
        let mut t = self.r(b4, &a);
        t.add_scaled(&self.l(&a, b4), &mu);
        t.add_scaled(b4, &-cmd);
        u2.add_scaled(&t, &-q(-1));
        // e_B*∧θ_S
        let mut u3 = self.r(b1, &a);
        u3.add_scaled(&self.l(&a, b1), &-q(2).mul_ref(&mu));
        u3.add_scaled(&self.r(b3, &b), &-q(-1));
        u3.add_scaled(&self.l(&b, b4), &-q(-1).mul_ref(&self.lam()));
        // e_B∧θ_T
        let mut u4 = self.r(b2, &a).scale(&q(2));
        u4.add_scaled(&self.l(&a, b2), &-mu);
        u4.add_scaled(&self.l(&bs, b3), &-q(-1).mul_ref(&self.lam_inv()));
        u4.add_scaled(&self.r(b4, &bs), &-q(-1));
        ModuleVector { level: 3, coords: vec![u1, u2, u3, u4] }
    }

    /// `f_level(m_i)` as an element of the bar resolution `A^⊗(level+2)`.
    pub fn f_basis(&self, level: usize, i: usize) -> Result<TensorChain<K>, ResolutionError> {
        let p = self.alg.params();
        let q = |k| self.q(k);
        let one = K::one();
        let tup = |xs: &[PodlesMonomial], k: K| TensorChain::from_tuple(xs.to_vec(), k);
        let sum = |parts: Vec<TensorChain<K>>| {
            let mut acc = TensorChain::zero(parts[0].degree());
            for x in &parts {
                acc.add_scaled(x, &K::one());
            }
            acc
        };
        match (level, i) {
            (0, 0) => Ok(tup(&[ONE, ONE], one)),
            (1, 0) => Ok(tup(&[ONE, MA, ONE], one)),
            (1, 1) => Ok(tup(&[ONE, MBS, ONE], one)),
            (1, 2) => Ok(tup(&[ONE, MB, ONE], one)),
            (2, 0) => Ok(sum(vec![tup(&[ONE, MA, MBS, ONE], one), tup(&[ONE, MBS, MA, ONE], -q(2))])),
            (2, 1) => Ok(sum(vec![tup(&[ONE, MA, MB, ONE], q(2)), tup(&[ONE, MB, MA, ONE], -one)])),
            (2, 2) => Ok(sum(vec![
                tup(&[ONE, MB, MBS, ONE], -q(-1)),
                tup(&[ONE, MA, MA, ONE], -q(3)),
                tup(&[ONE, ONE, ONE, ONE], -q(-1).mul_ref(&p.cd())),
            ])),
            (2, 3) => Ok(sum(vec![
                tup(&[ONE, MBS, MB, ONE], -q(-1)),
                tup(&[ONE, MA, MA, ONE], -q(-1)),
                tup(&[ONE, ONE, ONE, ONE], -q(-1).mul_ref(&p.cd())),
            ])),
            (l, _) if l > 2 => Err(ResolutionError::NoComparisonMap),
            (l, _) => Err(ResolutionError::BadRank { level: l, expected: RANKS[l], found: i + 1 }),
        }
    }

    /// `(x ⊗ y°)(a_0, …, a_n) = (x a_0, a_1, …, a_n y)` on the bar resolution.
    pub fn ae_act_bar(&self, x: &Element<K>, y: &Element<K>, chain: &TensorChain<K>) -> TensorChain<K> {
        let n = chain.degree();
        let mut out = TensorChain::zero(n);
        for (t, k) in chain.iter() {
            let first = self.alg.mul(x, &Element::basis(t[0]));
            let last_src = if n == 0 { first.clone() } else { Element::basis(t[n]) };
            let last = self.alg.mul(&last_src, y);
            if n == 0 {
                for (m, c) in &last {
                    out.add_term(vec![*m], c.mul_ref(k));
                }
                continue;
            }
            for (m0, c0) in &first {
                for (mn, cn) in &last {
                    let mut u = t.clone();
                    u[0] = *m0;
                    u[n] = *mn;
                    out.add_term(u, c0.mul_ref(cn).mul_ref(k));
                }
            }
        }
        out
    }

    /// `b'∘f_level − f_(level−1)∘d_level` on the `i`-th basis element; zero
    /// when the comparison maps form a chain map.
    pub fn chain_map_defect(&self, level: usize, i: usize) -> Result<TensorChain<K>, ResolutionError> {
        if level == 0 || level > 2 {
            return Err(ResolutionError::NoComparisonMap);
        }
        let lhs = b_prime(self.alg, &self.f_basis(level, i)?);
        let mut rhs = TensorChain::zero(level);
        for t in &self.ae_data(level)?[i] {
            let img = self.f_basis(level - 1, t.target)?;
            let moved = self.ae_act_bar(&Element::basis(t.x), &Element::basis(t.y), &img);
            rhs.add_scaled(&moved, &t.coef);
        }
        Ok(lhs.sub(&rhs))
    }

    /// The Hochschild chain `Σ_i (σ(x_(n+1)) a_i x_0, x_1, …, x_n)` obtained
    /// from `Σ a_i ⊗ m_i` through `f_n`; requires `v ∈ ker d_n`.
    pub fn to_bar_cycle(&self, v: &ModuleVector<K>) -> Result<TensorChain<K>, ResolutionError> {
        let n = v.level;
        if n > 2 {
            return Err(ResolutionError::NoComparisonMap);
        }
        if n > 0 && !self.d(v)?.is_zero() {
            return Err(ResolutionError::NotACycle(n));
        }
        let mut out = TensorChain::zero(n);
        for (i, a) in v.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (t, k) in self.f_basis(n, i)?.iter() {
                let head = self.act(a, &Element::basis(t[0]), &Element::basis(t[n + 1]));
                for (m, c) in &head {
                    let mut u = Vec::with_capacity(n + 1);
                    u.push(*m);
                    u.extend_from_slice(&t[1..=n]);
                    out.add_term(u, c.mul_ref(k));
                }
            }
        }
        debug_assert!(n == 0 || b_sigma(self.alg, &self.sigma, &out).is_zero());
        Ok(out)
    }

    /// The comparison map back from the bar complex in degrees 0 and 1:
    /// `(a_0)` goes to `a_0 ⊗ m_0`, and `(a_0, w_1⋯w_k)` for a PBW word in
    /// the generators goes to `Σ_i σ(w_(i+1)⋯w_k) a_0 w_1⋯w_(i−1) ⊗ e_(w_i)`.
    pub fn from_bar(&self, chain: &TensorChain<K>) -> Result<ModuleVector<K>, ResolutionError> {
        let n = chain.degree();
        if n > 1 {
            return Err(ResolutionError::NoComparisonMap);
        }
        let mut out = ModuleVector::zero(n);
        for (t, k) in chain.iter() {
            let a0 = Element::basis(t[0]);
            if n == 0 {
                out.coords[0].add_scaled(&a0, k);
                continue;
            }
            let m = t[1];
            let mut word = vec![if m.b >= 0 { MB } else { MBS }; m.b.unsigned_abs() as usize];
            word.extend(std::iter::repeat_n(MA, m.a as usize));
            for i in 0..word.len() {
                let slot = match word[i] {
                    MA => 0,
                    MBS => 1,
                    _ => 2,
                };
                let prefix = word[..i].iter().fold(self.alg.one(), |acc, g| self.alg.mul(&acc, &Element::basis(*g)));
                let suffix = word[i + 1..].iter().fold(self.alg.one(), |acc, g| self.alg.mul(&acc, &Element::basis(*g)));
                let piece = self.act(&a0, &prefix, &suffix);
                out.coords[slot].add_scaled(&piece, k);
            }
        }
        Ok(out)
    }

    /// Coordinates of weight `weight` (and parity `parity` when given) with
    /// filtration degree at most `max_degree`, as `(slot, monomial)` pairs in
    /// a fixed order: by slot, then by monomial degree.
    pub fn block_basis(
        &self,
        level: usize,
        weight: i32,
        parity: Option<u32>,
        max_degree: u32,
    ) -> Vec<(usize, PodlesMonomial)> {
        let mut out = Vec::new();
        let off = degree_offset(level);
        if max_degree < off {
            return out;
        }
        let room = max_degree - off;
        for i in 0..RANKS[level] {
            let b = weight - WEIGHT_OFFSETS[level][i];
            let lo = b.unsigned_abs();
            if lo > room {
                continue;
            }
            for a in 0..=(room - lo) {
                if let Some(p) = parity {
                    if (a + PARITY_OFFSETS[level][i]) % 2 != p % 2 {
                        continue;
                    }
                }
                out.push((i, PodlesMonomial::new(b, a)));
            }
        }
        out
    }

    /// Filtration degree of a coordinate.
    pub fn coord_degree(level: usize, m: &PodlesMonomial) -> u32 {
        m.degree() + degree_offset(level)
    }

    /// Sparse triplets of `d_level` from the block of the given weight with
    /// filtration degree `≤ max_degree` into the block of level − 1.
    pub fn export_triplets(&self, level: usize, weight: i32, parity: Option<u32>, max_degree: u32) -> Result<(Vec<String>, Vec<String>, Vec<Triplet>), ResolutionError> {
        if level == 0 || level > 4 {
            return Err(ResolutionError::BadLevel(level));
        }
        let cols = self.block_basis(level, weight, parity, max_degree);
        let rows = self.block_basis(level - 1, weight, parity, max_degree);
        let row_index: std::collections::HashMap<(usize, PodlesMonomial), usize> =
            rows.iter().enumerate().map(|(i, r)| (*r, i)).collect();
        let mut trips = Vec::new();
        for (j, (slot, m)) in cols.iter().enumerate() {
            let v = ModuleVector::unit(level, *slot, Element::basis(*m));
            let img = self.d(&v)?;
            for (s, x) in img.coords.iter().enumerate() {
                for (mm, k) in x {
                    if let Some(&i) = row_index.get(&(s, *mm)) {
                        trips.push(Triplet { row: i, col: j, value: k.to_string() });
                    }
                }
            }
        }
        let label = |level: usize, (s, m): &(usize, PodlesMonomial)| format!("{}*{}", m, LABELS[level][*s]);
        Ok((
            rows.iter().map(|r| label(level - 1, r)).collect(),
            cols.iter().map(|c| label(level, c)).collect(),
            trips,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Params;
    use crate::scalar::ScalarK;

    type K = ScalarK;

    #[test]
    fn compositions_vanish_on_basis() {
        for (c, d) in [(1, 0), (1, 1), (2, 1)] {
            let alg = Podles::new(Params::from_ints(c, d).unwrap());
            for sign in [1, -1] {
                if sign == -1 && c != d {
                    continue;
                }
                let sigma = Automorphism::new(alg.params(), K::q_pow(-4), sign).unwrap();
                let res = Resolution::new(&alg, sigma);
                for level in 2..=4 {
                    for i in 0..RANKS[level] {
                        let v = ModuleVector::unit(level, i, alg.one());
                        let dd = res.d(&res.d(&v).unwrap()).unwrap();
                        assert!(dd.is_zero(), "level {level} slot {i} (c,d)=({c},{d}) sign {sign}: {:?}", dd);
                    }
                }
            }
        }
    }

    #[test]
    fn display_and_bimodule_routes_agree() {
        let alg = Podles::new(Params::from_ints(2, 1).unwrap());
        let sigma = Automorphism::new(alg.params(), K::q_pow(3), 1).unwrap();
        let res = Resolution::new(&alg, sigma);
        for level in 1..=4 {
            for i in 0..RANKS[level] {
                for m in [PodlesMonomial::new(0, 0), PodlesMonomial::new(1, 2), PodlesMonomial::new(-2, 1)] {
                    let v = ModuleVector::unit(level, i, Element::basis(m));
                    assert_eq!(res.d(&v).unwrap(), res.d_bimodule(&v).unwrap(), "level {level} slot {i}");
                }
            }
        }
    }

    #[test]
    fn chain_map_on_basis() {
        let alg = Podles::new(Params::from_ints(2, 1).unwrap());
        let res = Resolution::new(&alg, Automorphism::identity());
        for level in 1..=2 {
            for i in 0..RANKS[level] {
                let defect = res.chain_map_defect(level, i).unwrap();
                assert!(defect.is_zero(), "level {level} slot {i}: {defect}");
            }
        }
    }
}
