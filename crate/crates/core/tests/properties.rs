use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use podles::algebra::{degree, weight};
use podles::chains::{b_prime, b_sigma, cyclic_op, tuple_weight, Functional0, TensorChain};
use podles::homology::{hh_resolution, TruncationWindow};
use podles::linalg::{PivotStrategy, SparseMatrix};
use podles::resolution::{ModuleVector, Resolution, RANKS};
use podles::{Automorphism, Element, Field, Gen, Params, Podles, PodlesMonomial, Rational, ScalarK};

type K = ScalarK;

fn q(k: i64) -> K {
    K::q_pow(k)
}

fn poly() -> impl Strategy<Value = K> {
    prop::collection::vec((-5i64..=5, -4i64..=4), 1..4)
        .prop_map(|ts| ts.into_iter().fold(K::zero(), |acc, (c, e)| acc + K::from_int(c) * K::s_pow(e)))
}

fn scalar() -> impl Strategy<Value = K> {
    (poly(), poly()).prop_map(|(a, b)| if b.is_zero() { a } else { a / b })
}

fn nonzero() -> impl Strategy<Value = K> {
    scalar().prop_filter("nonzero", |x| !x.is_zero())
}

fn mono(max: i32) -> impl Strategy<Value = PodlesMonomial> {
    (-max..=max, 0u32..=max as u32).prop_map(|(b, a)| PodlesMonomial::new(b, a))
}

fn element() -> impl Strategy<Value = Element<K>> {
    prop::collection::vec((mono(2), -3i64..=3, -2i64..=2), 1..4).prop_map(|ts| {
        let mut x = Element::zero();
        for (m, c, e) in ts {
            x.add_term(m, K::from_int(c) * q(e));
        }
        x
    })
}

fn chain(n: usize) -> impl Strategy<Value = TensorChain<K>> {
    prop::collection::vec((prop::collection::vec(mono(2), n + 1), 1i64..=4), 1..4).prop_map(move |ts| {
        let mut c = TensorChain::zero(n);
        for (t, k) in ts {
            c.add_term(t, K::from_int(k));
        }
        c
    })
}

fn params() -> impl Strategy<Value = (i64, i64)> {
    prop::sample::select(vec![(1, 0), (1, 1), (2, 1), (3, -1), (0, 2)])
}

fn sigma_for(alg: &Podles<K>, k: i64, sign: i32) -> Automorphism<K> {
    let p = alg.params();
    let sign = if p.c == p.d { sign } else { 1 };
    Automorphism::new(p, q(k), sign).unwrap()
}

fn word() -> impl Strategy<Value = Vec<Gen>> {
    prop::collection::vec(prop::sample::select(vec![Gen::A, Gen::B, Gen::BStar]), 0..=8)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar(), n in nonzero()) {
        prop_assert_eq!((a.clone() + b.clone()) * c.clone(), a.clone() * c.clone() + b.clone() * c.clone());
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert_eq!(a.clone() - a.clone(), K::zero());
        prop_assert!((n.clone() * n.inverse().unwrap()).is_one());
        // two routes to the same value compare equal
        prop_assert_eq!((a.clone() * n.clone()) / n.clone(), a.clone());
        prop_assert_eq!(a.clone() / n.clone() + b.clone() / n.clone(), (a + b) / n);
    }

    #[test]
    fn evaluation_is_a_ring_map(a in scalar(), b in scalar(), num in 2i64..9, den in 1i64..5) {
        let s0 = Rational::new(BigInt::from(num), BigInt::from(den));
        if let (Ok(x), Ok(y)) = (a.eval_at(&s0), b.eval_at(&s0)) {
            prop_assert_eq!((a.clone() + b.clone()).eval_at(&s0).unwrap(), x.clone() + y.clone());
            prop_assert_eq!((a * b).eval_at(&s0).unwrap(), x * y);
        }
    }

    #[test]
    fn bracketings_agree(p in params(), w in word(), i in 0usize..=8, j in 0usize..=8) {
        let alg = Podles::new(Params::from_ints(p.0, p.1).unwrap());
        let (i, j) = (i.min(w.len()), j.min(w.len()));
        let (i, j) = (i.min(j), i.max(j));
        let (u, v, x) = (alg.normal_form(&w[..i]), alg.normal_form(&w[i..j]), alg.normal_form(&w[j..]));
        let left = alg.mul(&alg.mul(&u, &v), &x);
        prop_assert_eq!(&left, &alg.mul(&u, &alg.mul(&v, &x)));
        prop_assert_eq!(&left, &alg.normal_form(&w));
    }

    #[test]
    fn degree_and_weight(p in params(), m in mono(3), n in mono(3)) {
        let alg = Podles::new(Params::from_ints(p.0, p.1).unwrap());
        let (x, y) = (Element::basis(m), Element::basis(n));
        let xy = alg.mul(&x, &y);
        prop_assert!(degree(&xy) <= m.degree() + n.degree());
        if !xy.is_zero() {
            prop_assert_eq!(weight(&xy), Some(m.b + n.b));
        }
    }

    #[test]
    fn automorphisms_are_algebra_maps(p in params(), k in -6i64..6, l in -6i64..6, sign in prop::sample::select(vec![1, -1]), x in element(), y in element()) {
        let alg = Podles::new(Params::from_ints(p.0, p.1).unwrap());
        let s = sigma_for(&alg, k, sign);
        prop_assert_eq!(s.apply(&alg.mul(&x, &y)), alg.mul(&s.apply(&x), &s.apply(&y)));
        let t = sigma_for(&alg, l, 1);
        let composed = s.compose(&t);
        prop_assert_eq!(composed.apply(&x), s.apply(&t.apply(&x)));
        prop_assert_eq!(composed.lambda(), &q(k + l));
    }

    #[test]
    fn b_squares_to_zero(p in params(), k in -6i64..6, sign in prop::sample::select(vec![1, -1]), n in 2usize..=4, seed in chain(4)) {
        let alg = Podles::new(Params::from_ints(p.0, p.1).unwrap());
        let s = sigma_for(&alg, k, sign);
        let x = TensorChain::from_terms(n, seed.iter().map(|(t, c)| (t[..=n].to_vec(), c.clone())));
        prop_assert!(b_sigma(&alg, &s, &b_sigma(&alg, &s, &x)).is_zero());
        // total weight is preserved term by term
        for (t, _) in b_sigma(&alg, &s, &x).iter() {
            prop_assert!(x.iter().any(|(u, _)| tuple_weight(u) == tuple_weight(t)));
        }
        let y = b_prime(&alg, &x);
        prop_assert_eq!(b_sigma(&alg, &s, &x.sub(&cyclic_op(&s, &x))), y.sub(&cyclic_op(&s, &y)));
    }

    #[test]
    fn twisted_traces(p in params(), b in 0u32..3, m in mono(3), n in mono(3)) {
        let alg = Podles::new(Params::from_ints(p.0, p.1).unwrap());
        let pp = alg.params();
        let (x, y) = (Element::basis(m), Element::basis(n));
        let s = Automorphism::new(pp, q(-(2 * b as i64 + 2)), 1).unwrap();
        let mut phis = vec![Functional0::TauTop { b }];
        if b == 0 {
            phis.push(Functional0::Tau0 { b: 0 });
        }
        for phi in phis {
            prop_assert_eq!(phi.eval(pp, &alg.mul(&x, &y)), phi.eval(pp, &alg.mul(&s.apply(&y), &x)), "{}", phi.name());
        }
        let smod = Automorphism::modular(pp);
        let h = Functional0::Haar;
        prop_assert_eq!(h.eval(pp, &alg.mul(&x, &y)), h.eval(pp, &alg.mul(&y, &smod.apply(&x))));
    }

    #[test]
    fn resolution_differentials_compose_to_zero(p in params(), k in -6i64..6, level in 2usize..=4, slot in 0usize..4, x in element()) {
        let alg = Podles::new(Params::from_ints(p.0, p.1).unwrap());
        let s = sigma_for(&alg, k, 1);
        let res = Resolution::new(&alg, s);
        let v = ModuleVector::unit(level, slot % RANKS[level], x);
        let dv = res.d(&v).unwrap();
        prop_assert!(res.d(&dv).unwrap().is_zero());
        prop_assert_eq!(dv, res.d_bimodule(&v).unwrap());
    }

    #[test]
    fn pivot_strategies_agree(rows in 1usize..6, cols in 1usize..6, entries in prop::collection::vec((0usize..6, 0usize..6, scalar()), 0..18)) {
        let mut m = SparseMatrix::zeros(rows, cols);
        for (i, j, v) in entries {
            m.set(i % rows, j % cols, v);
        }
        prop_assert_eq!(m.rank_with(PivotStrategy::LeadingRow), m.rank_with(PivotStrategy::Markowitz));
    }
}

#[test]
fn sign_flip_needs_equal_parameters() {
    let p = Params::from_ints(2, 1).unwrap();
    assert!(Automorphism::new(&p, q(2), -1).is_err());
    let p = Params::from_ints(1, 1).unwrap();
    assert!(Automorphism::new(&p, q(2), -1).is_ok());
}

#[test]
fn reports_are_deterministic() {
    let alg = Podles::new(Params::from_ints(2, 1).unwrap());
    let s = Automorphism::new(alg.params(), q(-4), 1).unwrap();
    let w = TruncationWindow::new(5, 2).unwrap();
    let run = || serde_json::to_string(&hh_resolution(&alg, &s, 1, &w).unwrap().1).unwrap();
    assert_eq!(run(), run());
}
