//! Closed-form predictions for `HH_n^σ(A(c,d))`, the dual 0-cocycles that
//! separate the `HH₀` basis, and explicit boundary witnesses.

use serde::Serialize;

use crate::algebra::{Automorphism, Element, Params, Podles, PodlesMonomial};
use crate::chains::{make_omega2, Functional0, TensorChain};
use crate::field::Field;
use crate::resolution::ModuleVector;

use super::HomologyError;

/// Largest `k` tried when recognising `λ = q^(−2k)`.
pub const MAX_NEG_POWER: u32 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LambdaKind {
    One,
    /// `λ = q^(−2k)`, `k ≥ 1`.
    NegPower(u32),
    Generic,
}

pub fn lambda_kind<K: Field>(p: &Params<K>, sigma: &Automorphism<K>) -> LambdaKind {
    let lam = sigma.lambda();
    if lam.is_one() {
        return LambdaKind::One;
    }
    let q_inv2 = p.q.powi(-2);
    let mut pw = q_inv2.clone();
    for k in 1..=MAX_NEG_POWER {
        if &pw == lam {
            return LambdaKind::NegPower(k);
        }
        pw *= &q_inv2;
    }
    LambdaKind::Generic
}

fn chain0<K: Field>(m: PodlesMonomial) -> TensorChain<K> {
    TensorChain::from_tuple(vec![m], K::one())
}

fn chain1<K: Field>(x: PodlesMonomial, y: PodlesMonomial) -> TensorChain<K> {
    TensorChain::from_tuple(vec![x, y], K::one())
}

fn a_pow(k: u32) -> PodlesMonomial {
    PodlesMonomial::a_pow(k)
}

fn label1(x: PodlesMonomial, y: PodlesMonomial) -> String {
    format!("({x}, {y})")
}

/// `(B^(|w|−1), B)` or `(B*^(|w|−1), B*)`.
fn b_power_pair<K: Field>(w: i32) -> (String, TensorChain<K>) {
    let step = if w > 0 { 1 } else { -1 };
    let x = PodlesMonomial::new(w - step, 0);
    let y = PodlesMonomial::new(step, 0);
    (label1(x, y), chain1(x, y))
}

/// Generators predicted by the classification for degree `n` in the
/// eigenvalue-1 block of weight `weight`; the block dimension is their
/// number. Blocks other than weight 0 are empty unless `λ = 1`.
pub fn predicted_generators<K: Field>(
    alg: &Podles<K>,
    sigma: &Automorphism<K>,
    n: usize,
    weight: i32,
) -> Vec<(String, TensorChain<K>)> {
    let p = alg.params();
    let kind = lambda_kind(p, sigma);
    let twisted = sigma.sign() == -1;
    if weight != 0 && kind != LambdaKind::One {
        return Vec::new();
    }
    let one = PodlesMonomial::ONE;
    let a = a_pow(1);
    let c_eq_d = p.c == p.d;
    let cd_zero = p.cd().is_zero();
    let mono0 = |m: PodlesMonomial| (m.to_string(), chain0::<K>(m));
    let pair = |x: u32| (label1(a_pow(x), a), chain1::<K>(a_pow(x), a));
    match n {
        0 => match (kind, twisted) {
            (LambdaKind::One, _) if weight != 0 => vec![mono0(PodlesMonomial::new(weight, 0))],
            (LambdaKind::One, false) => vec![mono0(one), mono0(a)],
            (_, true) => vec![mono0(one)],
            (LambdaKind::NegPower(k), false) => {
                let b = k - 1;
                if c_eq_d && b % 2 == 1 {
                    vec![mono0(a), mono0(a_pow(b + 1))]
                } else {
                    vec![mono0(one), mono0(a_pow(b + 1))]
                }
            }
            (LambdaKind::Generic, false) => vec![mono0(one), mono0(a)],
        },
        1 => match (kind, twisted) {
            (LambdaKind::One, _) if weight != 0 => vec![b_power_pair(weight)],
            (LambdaKind::One, false) => vec![pair(0)],
            (_, true) => Vec::new(),
            (LambdaKind::Generic, false) | (LambdaKind::NegPower(1), false) => vec![pair(0)],
            (LambdaKind::NegPower(k), false) => {
                if cd_zero {
                    vec![pair(k - 1)]
                } else if c_eq_d {
                    if k % 2 == 0 {
                        vec![pair(0), pair(k - 1)]
                    } else {
                        vec![pair(k.div_ceil(2))]
                    }
                } else if k == 2 {
                    vec![pair(1)]
                } else {
                    vec![pair(0), pair(k - 1)]
                }
            }
        },
        2 => match (kind, twisted) {
            (LambdaKind::NegPower(k), false) => vec![(format!("omega2[b={}]", k - 1), make_omega2(alg, k - 1))],
            _ => Vec::new(),
        },
        _ => Vec::new(),
    }
}

/// Predicted block dimension.
pub fn predicted_dim<K: Field>(alg: &Podles<K>, sigma: &Automorphism<K>, n: usize, weight: i32) -> usize {
    predicted_generators(alg, sigma, n, weight).len()
}

/// Predicted `HH₀` basis with dual twisted 0-cocycles where they are known
/// in closed form.
pub struct Hh0ClosedForm<K: Field> {
    pub kind: LambdaKind,
    pub basis: Vec<(String, Element<K>)>,
    pub certificates: Vec<Functional0<K>>,
}

impl<K: Field> Hh0ClosedForm<K> {
    /// `φ_i(x_j)` for certificates `φ_i` and basis elements `x_j`.
    pub fn pairing_matrix(&self, p: &Params<K>) -> Vec<Vec<K>> {
        self.certificates
            .iter()
            .map(|phi| self.basis.iter().map(|(_, x)| phi.eval(p, x)).collect())
            .collect()
    }
}

/// The predicted `HH₀` basis; for `λ = 1` the weights `−max_weight..=max_weight`.
pub fn hh0_closed_form<K: Field>(alg: &Podles<K>, sigma: &Automorphism<K>, max_weight: u32) -> Hh0ClosedForm<K> {
    let p = alg.params();
    let kind = lambda_kind(p, sigma);
    let weights: Vec<i32> = if kind == LambdaKind::One {
        let m = max_weight as i32;
        (-m..=m).collect()
    } else {
        vec![0]
    };
    let mut basis = Vec::new();
    for w in weights {
        for (label, ch) in predicted_generators(alg, sigma, 0, w) {
            let (t, _) = ch.iter().next().expect("single tuple");
            basis.push((label, Element::basis(t[0])));
        }
    }
    let certificates = match (kind, sigma.sign()) {
        (LambdaKind::Generic, 1) => vec![
            Functional0::Coord { lambda: sigma.lambda().clone(), at_one: true },
            Functional0::Coord { lambda: sigma.lambda().clone(), at_one: false },
        ],
        (LambdaKind::NegPower(k), 1) => vec![Functional0::Tau0 { b: k - 1 }, Functional0::TauTop { b: k - 1 }],
        _ => Vec::new(),
    };
    Hh0ClosedForm { kind, basis, certificates }
}

/// Largest defect `φ(xy) − φ(σ(y)x)` over monomial pairs of total weight 0
/// and degree `≤ max_degree`; zero exactly when `φ` is a twisted trace on
/// that range. Returns the first failing pair.
pub fn twisted_trace_defect<K: Field>(
    alg: &Podles<K>,
    sigma: &Automorphism<K>,
    phi: &Functional0<K>,
    max_degree: u32,
) -> Option<(PodlesMonomial, PodlesMonomial, K)> {
    let p = alg.params();
    let d = max_degree as i32;
    for bx in -d..=d {
        for ax in 0..=(max_degree - bx.unsigned_abs()) {
            let x = PodlesMonomial::new(bx, ax);
            let room = max_degree - x.degree();
            let by = -bx;
            if by.unsigned_abs() > room {
                continue;
            }
            for ay in 0..=(room - by.unsigned_abs()) {
                let y = PodlesMonomial::new(by, ay);
                let xy = alg.mul(&Element::basis(x), &Element::basis(y));
                let yx = alg.mul(&Element::basis(y), &Element::basis(x)).scale(&sigma.eigenvalue(&y));
                let defect = phi.eval(p, &xy) - phi.eval(p, &yx);
                if !defect.is_zero() {
                    return Some((x, y, defect));
                }
            }
        }
    }
    None
}

/// The 1-chain `y = −λ⁻¹(B*, BAⁿ)` and the 0-chain
/// `z = f(n+2)A^(n+2) + (d−c)f(n+1)A^(n+1) − cd f(n)Aⁿ`, `f(k) = λ⁻¹ − q^(2k)`,
/// which satisfy `b_σ(y) = z`.
pub fn recurrence_witness<K: Field>(
    alg: &Podles<K>,
    sigma: &Automorphism<K>,
    n: u32,
) -> Result<(TensorChain<K>, Element<K>), HomologyError> {
    if sigma.sign() != 1 {
        return Err(HomologyError::Unsupported("the recurrence is stated for sigma_lambda".into()));
    }
    let p = alg.params();
    let lam_inv = sigma.lambda().inverse().expect("nonzero lambda");
    let y = TensorChain::from_tuple(vec![PodlesMonomial::new(-1, 0), PodlesMonomial::new(1, n)], -lam_inv.clone());
    let f = |k: u32| lam_inv.clone() - p.q.powi(2 * k as i64);
    let mut z = Element::zero();
    z.add_term(a_pow(n + 2), f(n + 2));
    z.add_term(a_pow(n + 1), (p.d.clone() - p.c.clone()).mul_ref(&f(n + 1)));
    z.add_term(a_pow(n), -p.cd().mul_ref(&f(n)));
    Ok((y, z))
}

/// The level-4 vector `(b₁, b₂, b₃, b₄)` with
///
/// ```text
/// b₁ = 4α₁BA^j,  b₂ = 4q^(2j)(α₁λ⁻¹ − γ)B*A^j,  γ = 4(c+d)⁻²,
/// b₃ = λγq^(2j+1)A^j[2q²A − (c−d)],  b₄ = −γqA^j[2A − (c−d)],
/// ```
/// whose image under `d₄` is a multiple of `(−λq^(2j+2)A^j, A^j, 0, 0)`.
pub fn hh3_witness<K: Field>(alg: &Podles<K>, sigma: &Automorphism<K>, j: u32, alpha1: &K) -> ModuleVector<K> {
    let p = alg.params();
    let q = |k: i64| p.q.powi(k);
    let lam = sigma.lambda().clone();
    let lam_inv = lam.inverse().expect("nonzero lambda");
    let cpd = p.c.add_ref(&p.d);
    let gamma = K::from_i64(4).div_ref(&cpd.mul_ref(&cpd));
    let cmd = p.c_minus_d();
    let four = K::from_i64(4);
    let two = K::from_i64(2);
    let aj = a_pow(j);
    let aj1 = a_pow(j + 1);
    let b1 = Element::term(PodlesMonomial::new(1, j), four.mul_ref(alpha1));
    let b2 = Element::term(
        PodlesMonomial::new(-1, j),
        four.mul_ref(&q(2 * j as i64)).mul_ref(&(alpha1.mul_ref(&lam_inv) - gamma.clone())),
    );
    let k3 = lam.mul_ref(&gamma).mul_ref(&q(2 * j as i64 + 1));
    let mut b3 = Element::zero();
    b3.add_term(aj1, k3.mul_ref(&two).mul_ref(&q(2)));
    b3.add_term(aj, -k3.mul_ref(&cmd));
    let k4 = -gamma.mul_ref(&q(1));
    let mut b4 = Element::zero();
    b4.add_term(aj1, k4.mul_ref(&two));
    b4.add_term(aj, -k4.mul_ref(&cmd));
    ModuleVector { level: 4, coords: vec![b1, b2, b3, b4] }
}

/// `(−λq^(2j+2)A^j, A^j, 0, 0)` at level 3.
pub fn hh3_cycle<K: Field>(alg: &Podles<K>, sigma: &Automorphism<K>, j: u32) -> ModuleVector<K> {
    let p = alg.params();
    let aj = a_pow(j);
    let k1 = -sigma.lambda().mul_ref(&p.q.powi(2 * j as i64 + 2));
    ModuleVector {
        level: 3,
        coords: vec![Element::term(aj, k1), Element::basis(aj), Element::zero(), Element::zero()],
    }
}
