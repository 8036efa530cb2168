//! Quantum `SU(2)`: the algebra `A(SU_q(2))`, its coproduct, the pairing with
//! `U_q(su(2))`, the induced left/right actions, the Haar state, and the
//! embedding of the standard sphere `A(1,0)` via `A = c*c`, `B = ac`,
//! `B* = c*a*`.
//!
//! Relations: `a*a + c*c = 1`, `aa* + q²c*c = 1`, `c*c = cc*`, `ac = qca`,
//! `ac* = qc*a`, hence also `c*a* = qa*c*` and `ca* = qa*c`. The monomials
//! `a^k c^m c*^n` and `a*^k c^m c*^n` form a basis.
//!
//! The pairing constants for `E` and `F` are read from a versioned fixtures
//! file; see [`PairingTable`].

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraError, Element, Podles};
use crate::expr::{self, Interp, ParseError};
use crate::field::{Field, Rational};
use crate::lincomb::LinComb;
use crate::scalar::ScalarK;

const PAIRING_FIXTURE: &str = include_str!("../fixtures/pairing.json");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum UqGen {
    E,
    F,
    K,
    KInv,
}

impl UqGen {
    pub const ALL: [UqGen; 4] = [UqGen::E, UqGen::F, UqGen::K, UqGen::KInv];

    pub fn name(self) -> &'static str {
        match self {
            UqGen::E => "E",
            UqGen::F => "F",
            UqGen::K => "K",
            UqGen::KInv => "K^-1",
        }
    }

    pub fn from_name(name: &str) -> Option<UqGen> {
        UqGen::ALL.into_iter().find(|g| g.name() == name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SuGen {
    A,
    AStar,
    C,
    CStar,
}

impl SuGen {
    pub const ALL: [SuGen; 4] = [SuGen::A, SuGen::AStar, SuGen::C, SuGen::CStar];

    pub fn name(self) -> &'static str {
        match self {
            SuGen::A => "a",
            SuGen::AStar => "a*",
            SuGen::C => "c",
            SuGen::CStar => "c*",
        }
    }

    pub fn monomial(self) -> SuqMonomial {
        match self {
            SuGen::A => SuqMonomial::new(1, 0, 0),
            SuGen::AStar => SuqMonomial::new(-1, 0, 0),
            SuGen::C => SuqMonomial::new(0, 1, 0),
            SuGen::CStar => SuqMonomial::new(0, 0, 1),
        }
    }
}

/// `a^a c^c c*^cs` for `a ≥ 0`, `a*^(−a) c^c c*^cs` for `a < 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SuqMonomial {
    pub a: i32,
    pub c: u32,
    pub cs: u32,
}

impl SuqMonomial {
    pub const ONE: SuqMonomial = SuqMonomial { a: 0, c: 0, cs: 0 };

    pub fn new(a: i32, c: u32, cs: u32) -> Self {
        SuqMonomial { a, c, cs }
    }

    pub fn degree(&self) -> u32 {
        self.a.unsigned_abs() + self.c + self.cs
    }

    /// First letter of the PBW word and the remaining monomial.
    fn split_first(&self) -> Option<(SuGen, SuqMonomial)> {
        if self.a > 0 {
            Some((SuGen::A, SuqMonomial { a: self.a - 1, ..*self }))
        } else if self.a < 0 {
            Some((SuGen::AStar, SuqMonomial { a: self.a + 1, ..*self }))
        } else if self.c > 0 {
            Some((SuGen::C, SuqMonomial { c: self.c - 1, ..*self }))
        } else if self.cs > 0 {
            Some((SuGen::CStar, SuqMonomial { cs: self.cs - 1, ..*self }))
        } else {
            None
        }
    }

    pub fn word(&self) -> Vec<SuGen> {
        let mut out = Vec::new();
        let mut m = *self;
        while let Some((g, rest)) = m.split_first() {
            out.push(g);
            m = rest;
        }
        out
    }
}

impl fmt::Display for SuqMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == SuqMonomial::ONE {
            return f.write_str("1");
        }
        let mut parts = Vec::new();
        let mut push = |g: &str, e: u32| {
            if e == 1 {
                parts.push(g.to_string());
            } else if e > 1 {
                parts.push(format!("{g}^{e}"));
            }
        };
        if self.a >= 0 {
            push("a", self.a as u32);
        } else {
            push("a*", self.a.unsigned_abs());
        }
        push("c", self.c);
        push("c*", self.cs);
        f.write_str(&parts.join(" "))
    }
}

pub type SuqElement<K> = LinComb<K, SuqMonomial>;
pub type SuqTensor<K> = LinComb<K, (SuqMonomial, SuqMonomial)>;

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("malformed pairing fixture: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad value in pairing fixture: {0}")]
    Value(String),
}

#[derive(Debug, Deserialize)]
struct PairingFile {
    version: String,
    coproduct: HashMap<String, Vec<(String, String, String)>>,
    counit: HashMap<String, String>,
    pairing: HashMap<String, HashMap<String, String>>,
}

/// Pairing values `<f, g>` for `f ∈ {E, F, K, K⁻¹}` and `g ∈ {a, a*, c, c*}`,
/// together with the coproducts of the `U_q(su(2))` generators used to extend
/// the pairing to products.
#[derive(Debug, Clone)]
pub struct PairingTable<K> {
    pub version: String,
    coproduct: HashMap<UqGen, Vec<(K, UqGen, UqGen)>>,
    counit: HashMap<UqGen, K>,
    values: HashMap<(UqGen, SuGen), K>,
}

impl<K: Field> PairingTable<K> {
    /// The frozen table from the fixtures file, evaluated at the given `s`.
    pub fn load(s: &K) -> Result<Self, FixtureError> {
        PairingTable::from_json(PAIRING_FIXTURE, s)
    }

    pub fn from_json(text: &str, s: &K) -> Result<Self, FixtureError> {
        let file: PairingFile = serde_json::from_str(text)?;
        let scalar = |t: &str| expr::eval_scalar(t, s).map_err(|e| FixtureError::Value(format!("{t:?}: {e}")));
        let gen = |t: &str| UqGen::from_name(t).ok_or_else(|| FixtureError::Value(format!("unknown generator {t:?}")));
        let mut coproduct = HashMap::new();
        for (f, terms) in &file.coproduct {
            let mut v = Vec::new();
            for (k, f1, f2) in terms {
                v.push((scalar(k)?, gen(f1)?, gen(f2)?));
            }
            coproduct.insert(gen(f)?, v);
        }
        let mut counit = HashMap::new();
        for (f, k) in &file.counit {
            counit.insert(gen(f)?, scalar(k)?);
        }
        let mut values = HashMap::new();
        for (f, row) in &file.pairing {
            let f = gen(f)?;
            for (g, k) in row {
                let g = SuGen::ALL
                    .into_iter()
                    .find(|x| x.name() == g)
                    .ok_or_else(|| FixtureError::Value(format!("unknown generator {g:?}")))?;
                values.insert((f, g), scalar(k)?);
            }
        }
        for f in UqGen::ALL {
            if !coproduct.contains_key(&f) || !counit.contains_key(&f) {
                return Err(FixtureError::Value(format!("missing entries for {}", f.name())));
            }
            for g in SuGen::ALL {
                if !values.contains_key(&(f, g)) {
                    return Err(FixtureError::Value(format!("missing <{}, {}>", f.name(), g.name())));
                }
            }
        }
        Ok(PairingTable { version: file.version, coproduct, counit, values })
    }

    pub fn value(&self, f: UqGen, g: SuGen) -> &K {
        &self.values[&(f, g)]
    }

    pub fn counit(&self, f: UqGen) -> &K {
        &self.counit[&f]
    }

    pub fn coproduct(&self, f: UqGen) -> &[(K, UqGen, UqGen)] {
        &self.coproduct[&f]
    }
}

/// Version string of the bundled pairing fixtures.
pub fn fixtures_version() -> String {
    let file: PairingFile = serde_json::from_str(PAIRING_FIXTURE).expect("bundled fixture parses");
    file.version
}

type NPoly<K> = Arc<Vec<K>>;

pub struct Suq<K: Field> {
    s: K,
    q: K,
    table: PairingTable<K>,
    q_powers: RwLock<HashMap<i64, K>>,
    aa_cache: RwLock<HashMap<(i32, i32), NPoly<K>>>,
    delta_cache: RwLock<HashMap<SuqMonomial, Arc<SuqTensor<K>>>>,
    pair_cache: RwLock<HashMap<(UqGen, SuqMonomial), K>>,
}

impl<K: Field> fmt::Debug for Suq<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Suq").field("s", &self.s).field("pairing", &self.table.version).finish()
    }
}

impl Suq<ScalarK> {
    pub fn generic() -> Self {
        Suq::new(ScalarK::s()).expect("bundled fixture is valid")
    }
}

impl<K: Field> Suq<K> {
    pub fn new(s: K) -> Result<Self, FixtureError> {
        let table = PairingTable::load(&s)?;
        Ok(Suq::with_table(s, table))
    }

    pub fn with_table(s: K, table: PairingTable<K>) -> Self {
        let q = s.mul_ref(&s);
        Suq {
            s,
            q,
            table,
            q_powers: RwLock::new(HashMap::new()),
            aa_cache: RwLock::new(HashMap::new()),
            delta_cache: RwLock::new(HashMap::new()),
            pair_cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn s(&self) -> &K {
        &self.s
    }

    pub fn q(&self) -> &K {
        &self.q
    }

    pub fn table(&self) -> &PairingTable<K> {
        &self.table
    }

    pub fn q_pow(&self, k: i64) -> K {
        if k == 0 {
            return K::one();
        }
        if let Some(v) = self.q_powers.read().unwrap().get(&k) {
            return v.clone();
        }
        let v = self.q.powi(k);
        self.q_powers.write().unwrap().insert(k, v.clone());
        v
    }

    pub fn one(&self) -> SuqElement<K> {
        SuqElement::basis(SuqMonomial::ONE)
    }

    pub fn gen(&self, g: SuGen) -> SuqElement<K> {
        SuqElement::basis(g.monomial())
    }

    /// `a^(k) a^(l) = a^(k+l) · p(N)` with `N = cc*`; returns `p`.
    fn aa(&self, k: i32, l: i32) -> NPoly<K> {
        if k == 0 || l == 0 || (k > 0) == (l > 0) {
            return Arc::new(vec![K::one()]);
        }
        if let Some(v) = self.aa_cache.read().unwrap().get(&(k, l)) {
            return v.clone();
        }
        let (prev, t) = if k > 0 {
            // a^k a*^r = a^(k-1) a*^(r-1) (1 - q^(2r) N)
            let r = -l as i64;
            (self.aa(k - 1, l + 1), self.q_pow(2 * r))
        } else {
            // a*^r a^l = a*^(r-1) a^(l-1) (1 - q^(-2(l-1)) N)
            (self.aa(k + 1, l - 1), self.q_pow(-2 * (l as i64 - 1)))
        };
        let mut v = vec![K::zero(); prev.len() + 1];
        for (i, c) in prev.iter().enumerate() {
            v[i] += c;
            v[i + 1] -= &c.mul_ref(&t);
        }
        let v = Arc::new(v);
        self.aa_cache.write().unwrap().insert((k, l), v.clone());
        v
    }

    pub fn mul_mono(&self, x: SuqMonomial, y: SuqMonomial) -> Vec<(SuqMonomial, K)> {
        // c^m c*^n a^(l) = q^(-(m+n) l) a^(l) c^m c*^n
        let qf = self.q_pow(-((x.c + x.cs) as i64) * y.a as i64);
        let p = self.aa(x.a, y.a);
        let a = x.a + y.a;
        p.iter()
            .enumerate()
            .filter(|(_, k)| !k.is_zero())
            .map(|(i, k)| {
                let i = i as u32;
                (SuqMonomial::new(a, x.c + y.c + i, x.cs + y.cs + i), k.mul_ref(&qf))
            })
            .collect()
    }

    pub fn mul(&self, x: &SuqElement<K>, y: &SuqElement<K>) -> SuqElement<K> {
        let mut out = SuqElement::zero();
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

    pub fn normal_form(&self, word: &[SuGen]) -> SuqElement<K> {
        let mut acc = self.one();
        for g in word {
            acc = self.mul(&acc, &self.gen(*g));
        }
        acc
    }

    pub fn parse(&self, text: &str) -> Result<SuqElement<K>, ParseError> {
        expr::parse(text)?.eval(&SuqInterp { g: self })
    }

    pub fn mul_tensor(&self, x: &SuqTensor<K>, y: &SuqTensor<K>) -> SuqTensor<K> {
        let mut out = SuqTensor::zero();
        for ((x1, x2), kx) in x {
            for ((y1, y2), ky) in y {
                let k = kx.mul_ref(ky);
                let left = self.mul_mono(*x1, *y1);
                let right = self.mul_mono(*x2, *y2);
                for (l, kl) in &left {
                    let klk = kl.mul_ref(&k);
                    for (r, kr) in &right {
                        out.add_term((*l, *r), klk.mul_ref(kr));
                    }
                }
            }
        }
        out
    }

    fn delta_gen(&self, g: SuGen) -> SuqTensor<K> {
        let m = |g: SuGen| g.monomial();
        let mq = -self.q.clone();
        match g {
            SuGen::A => SuqTensor::from_terms([
                ((m(SuGen::A), m(SuGen::A)), K::one()),
                ((m(SuGen::CStar), m(SuGen::C)), mq),
            ]),
            SuGen::C => SuqTensor::from_terms([
                ((m(SuGen::C), m(SuGen::A)), K::one()),
                ((m(SuGen::AStar), m(SuGen::C)), K::one()),
            ]),
            SuGen::AStar => SuqTensor::from_terms([
                ((m(SuGen::AStar), m(SuGen::AStar)), K::one()),
                ((m(SuGen::C), m(SuGen::CStar)), mq),
            ]),
            SuGen::CStar => SuqTensor::from_terms([
                ((m(SuGen::CStar), m(SuGen::AStar)), K::one()),
                ((m(SuGen::A), m(SuGen::CStar)), K::one()),
            ]),
        }
    }

    /// `Δ` on a basis monomial, from `Δu_ij = Σ_k u_ik ⊗ u_kj` for
    /// `u = [[a, −qc*], [c, a*]]`.
    pub fn coproduct_mono(&self, m: SuqMonomial) -> Arc<SuqTensor<K>> {
        if let Some(v) = self.delta_cache.read().unwrap().get(&m) {
            return v.clone();
        }
        let v = match m.split_first() {
            None => SuqTensor::basis((SuqMonomial::ONE, SuqMonomial::ONE)),
            Some((g, rest)) => self.mul_tensor(&self.delta_gen(g), &self.coproduct_mono(rest)),
        };
        let v = Arc::new(v);
        self.delta_cache.write().unwrap().insert(m, v.clone());
        v
    }

    pub fn coproduct(&self, x: &SuqElement<K>) -> SuqTensor<K> {
        let mut out = SuqTensor::zero();
        for (m, k) in x {
            out.add_scaled(&self.coproduct_mono(*m), k);
        }
        out
    }

    pub fn counit_mono(&self, m: &SuqMonomial) -> K {
        if m.c == 0 && m.cs == 0 {
            K::one()
        } else {
            K::zero()
        }
    }

    pub fn counit(&self, x: &SuqElement<K>) -> K {
        x.pair(|m| self.counit_mono(m))
    }

    /// `<f, g₁g₂⋯gₙ>` for an arbitrary (not necessarily reduced) word,
    /// expanded through the coproduct of `f`.
    pub fn pair_letters(&self, f: UqGen, word: &[SuGen]) -> K {
        match word.split_first() {
            None => self.table.counit(f).clone(),
            Some((g, rest)) => {
                let mut acc = K::zero();
                for (k, f1, f2) in self.table.coproduct(f) {
                    let v = self.table.value(*f1, *g);
                    if v.is_zero() {
                        continue;
                    }
                    let tail = self.pair_letters(*f2, rest);
                    acc += &k.mul_ref(v).mul_ref(&tail);
                }
                acc
            }
        }
    }

    /// `<f, m>` on a basis monomial, memoized.
    pub fn pair_mono(&self, f: UqGen, m: SuqMonomial) -> K {
        if let Some(v) = self.pair_cache.read().unwrap().get(&(f, m)) {
            return v.clone();
        }
        let v = match m.split_first() {
            None => self.table.counit(f).clone(),
            Some((g, rest)) => {
                let mut acc = K::zero();
                for (k, f1, f2) in self.table.coproduct(f) {
                    let v = self.table.value(*f1, g);
                    if v.is_zero() {
                        continue;
                    }
                    acc += &k.mul_ref(v).mul_ref(&self.pair_mono(*f2, rest));
                }
                acc
            }
        };
        self.pair_cache.write().unwrap().insert((f, m), v.clone());
        v
    }

    pub fn pair(&self, f: UqGen, x: &SuqElement<K>) -> K {
        x.pair(|m| self.pair_mono(f, *m))
    }

    /// `<f₁f₂⋯fₙ, x> = Σ <f₁, x₍₁₎><f₂⋯fₙ, x₍₂₎>`.
    pub fn pair_product(&self, fs: &[UqGen], x: &SuqElement<K>) -> K {
        match fs {
            [] => self.counit(x),
            [f] => self.pair(*f, x),
            [f, rest @ ..] => {
                let mut acc = K::zero();
                for (m, k) in x {
                    let d = self.coproduct_mono(*m);
                    for ((m1, m2), kd) in d.iter() {
                        let v = self.pair_mono(*f, *m1);
                        if v.is_zero() {
                            continue;
                        }
                        let tail = self.pair_product(rest, &SuqElement::basis(*m2));
                        acc += &v.mul_ref(&tail).mul_ref(kd).mul_ref(k);
                    }
                }
                acc
            }
        }
    }

    /// Right action `x ◁ f = Σ <f, x₍₁₎> x₍₂₎`.
    pub fn act_right(&self, f: UqGen, x: &SuqElement<K>) -> SuqElement<K> {
        let mut out = SuqElement::zero();
        for (m, k) in x {
            for ((m1, m2), kd) in self.coproduct_mono(*m).iter() {
                let v = self.pair_mono(f, *m1);
                if !v.is_zero() {
                    out.add_term(*m2, v.mul_ref(kd).mul_ref(k));
                }
            }
        }
        out
    }

    /// Left action `f ▷ x = Σ <f, x₍₂₎> x₍₁₎`.
    pub fn act_left(&self, f: UqGen, x: &SuqElement<K>) -> SuqElement<K> {
        let mut out = SuqElement::zero();
        for (m, k) in x {
            for ((m1, m2), kd) in self.coproduct_mono(*m).iter() {
                let v = self.pair_mono(f, *m2);
                if !v.is_zero() {
                    out.add_term(*m1, v.mul_ref(kd).mul_ref(k));
                }
            }
        }
        out
    }

    /// Haar state: `h(a^(k) c^m c*^n) = 0` unless `k = 0` and `m = n`, and
    /// `h((cc*)^m) = (1 − q²)/(1 − q^(2m+2))`.
    pub fn haar_mono(&self, m: &SuqMonomial) -> K {
        if m.a != 0 || m.c != m.cs {
            return K::zero();
        }
        let num = K::one() - self.q_pow(1).mul_ref(&self.q_pow(1));
        let den = K::one() - self.q_pow(2 * m.c as i64 + 2);
        num.div_ref(&den)
    }

    pub fn haar(&self, x: &SuqElement<K>) -> K {
        x.pair(|m| self.haar_mono(m))
    }

    /// The algebra map `A(1,0) → A(SU_q(2))`, `A ↦ c*c`, `B ↦ ac`, `B* ↦ c*a*`.
    pub fn embed_sphere(&self, alg: &Podles<K>, x: &Element<K>) -> Result<SuqElement<K>, AlgebraError> {
        if !alg.params().is_standard() || alg.params().s != self.s {
            return Err(AlgebraError::NotStandardSphere);
        }
        let big_a = self.mul(&self.gen(SuGen::CStar), &self.gen(SuGen::C));
        let big_b = self.mul(&self.gen(SuGen::A), &self.gen(SuGen::C));
        let big_bs = self.mul(&self.gen(SuGen::CStar), &self.gen(SuGen::AStar));
        let mut out = SuqElement::zero();
        for (m, k) in x {
            let base = if m.b >= 0 { &big_b } else { &big_bs };
            let mut img = self.one();
            for _ in 0..m.b.unsigned_abs() {
                img = self.mul(&img, base);
            }
            for _ in 0..m.a {
                img = self.mul(&img, &big_a);
            }
            out.add_scaled(&img, k);
        }
        Ok(out)
    }

    /// `x ↦ x ◁ E` on the standard sphere.
    pub fn deriv_e(&self, alg: &Podles<K>, x: &Element<K>) -> Result<SuqElement<K>, AlgebraError> {
        Ok(self.act_right(UqGen::E, &self.embed_sphere(alg, x)?))
    }

    /// `x ↦ x ◁ F` on the standard sphere.
    pub fn deriv_f(&self, alg: &Podles<K>, x: &Element<K>) -> Result<SuqElement<K>, AlgebraError> {
        Ok(self.act_right(UqGen::F, &self.embed_sphere(alg, x)?))
    }
}

struct SuqInterp<'a, K: Field> {
    g: &'a Suq<K>,
}

impl<K: Field> Interp for SuqInterp<'_, K> {
    type Value = SuqElement<K>;

    fn int(&self, n: &num_bigint::BigInt) -> Result<SuqElement<K>, String> {
        Ok(self.g.one().scale(&K::from_rational(&Rational::from_integer(n.clone()))))
    }

    fn var(&self, name: &str) -> Result<SuqElement<K>, String> {
        match name {
            "a" => Ok(self.g.gen(SuGen::A)),
            "a*" => Ok(self.g.gen(SuGen::AStar)),
            "c" => Ok(self.g.gen(SuGen::C)),
            "c*" => Ok(self.g.gen(SuGen::CStar)),
            "q" => Ok(self.g.one().scale(&self.g.q)),
            "s" => Ok(self.g.one().scale(&self.g.s)),
            _ => Err(format!("unknown symbol {name:?} in an element of A(SU_q(2))")),
        }
    }

    fn add(&self, a: SuqElement<K>, b: SuqElement<K>) -> Result<SuqElement<K>, String> {
        Ok(a.add(&b))
    }

    fn neg(&self, a: SuqElement<K>) -> Result<SuqElement<K>, String> {
        Ok(a.neg())
    }

    fn mul(&self, a: SuqElement<K>, b: SuqElement<K>) -> Result<SuqElement<K>, String> {
        Ok(self.g.mul(&a, &b))
    }

    fn div(&self, a: SuqElement<K>, b: SuqElement<K>) -> Result<SuqElement<K>, String> {
        if b.len() != 1 || b.get(&SuqMonomial::ONE).is_none() {
            return Err("division by a non-scalar element".to_string());
        }
        let inv = b.get(&SuqMonomial::ONE).unwrap().inverse().ok_or("division by zero")?;
        Ok(a.scale(&inv))
    }

    fn pow(&self, a: SuqElement<K>, e: i64) -> Result<SuqElement<K>, String> {
        if e < 0 {
            return Err("negative powers are not defined here".to_string());
        }
        let mut acc = self.g.one();
        for _ in 0..e {
            acc = self.g.mul(&acc, &a);
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Params;
    use num_traits::{One, Zero};

    type K = ScalarK;

    fn q(k: i64) -> K {
        K::q_pow(k)
    }

    #[test]
    fn defining_relations() {
        let g = Suq::generic();
        use SuGen::*;
        assert_eq!(g.normal_form(&[AStar, A]), g.parse("1 - c*c").unwrap());
        assert_eq!(g.normal_form(&[A, AStar]), g.one().sub(&g.normal_form(&[CStar, C]).scale(&q(2))));
        assert_eq!(g.normal_form(&[C, A]), g.normal_form(&[A, C]).scale(&q(-1)));
        assert_eq!(g.normal_form(&[A, CStar]), g.normal_form(&[CStar, A]).scale(&q(1)));
        assert_eq!(g.normal_form(&[C, CStar]), g.normal_form(&[CStar, C]));
    }

    #[test]
    fn k_row_matches_the_fundamental_values() {
        let g = Suq::generic();
        let s = K::s();
        let si = s.inverse().unwrap();
        assert_eq!(g.act_right(UqGen::K, &g.gen(SuGen::A)), g.gen(SuGen::A).scale(&si));
        assert_eq!(g.act_right(UqGen::K, &g.gen(SuGen::C)), g.gen(SuGen::C).scale(&s));
        assert_eq!(g.act_right(UqGen::K, &g.gen(SuGen::AStar)), g.gen(SuGen::AStar).scale(&s));
        assert_eq!(g.act_right(UqGen::K, &g.gen(SuGen::CStar)), g.gen(SuGen::CStar).scale(&si));
    }

    #[test]
    fn haar_restriction_values() {
        let g = Suq::generic();
        let alg = Podles::new(Params::standard());
        assert!(g.haar(&g.one()).is_one());
        let a = g.embed_sphere(&alg, &alg.a()).unwrap();
        assert_eq!(g.haar(&a), (K::one() - q(2)) / (K::one() - q(4)));
        let ba2 = g.embed_sphere(&alg, &alg.monomial(1, 2)).unwrap();
        assert!(g.haar(&ba2).is_zero());
    }

    #[test]
    fn embedding_needs_standard_params() {
        let g = Suq::generic();
        let alg = Podles::new(Params::from_ints(1, 1).unwrap());
        assert!(g.embed_sphere(&alg, &alg.a()).is_err());
    }

    #[test]
    fn unit_is_grouplike() {
        let g = Suq::generic();
        assert_eq!(g.coproduct(&g.one()), SuqTensor::basis((SuqMonomial::ONE, SuqMonomial::ONE)));
        let dc = g.coproduct(&g.gen(SuGen::C));
        assert_eq!(dc.len(), 2);
    }
}
