//! Values recomputed by routes that do not go through the sphere's PBW
//! rewriting: products are taken in SU_q(2) through the embedding
//! A = c*c, B = ac, B* = c*a*, and sums are expanded by hand.

use num_traits::{One, Zero};
use podles::chains::{b_sigma, make_eta, s_pair, Functional0, TauCocycle, TensorChain};
use podles::lincomb::LinComb;
use podles::quantumgroup::{SuGen, Suq, SuqElement, SuqMonomial};
use podles::{Field, Params, Podles, ScalarK};

type K = ScalarK;

fn q(k: i64) -> K {
    K::q_pow(k)
}

#[derive(Clone, Copy)]
enum G {
    A,
    B,
    Bs,
}

struct Oracle {
    g: Suq<K>,
}

impl Oracle {
    fn gen(&self, x: G) -> SuqElement<K> {
        let g = &self.g;
        match x {
            G::A => g.mul(&g.gen(SuGen::CStar), &g.gen(SuGen::C)),
            G::B => g.mul(&g.gen(SuGen::A), &g.gen(SuGen::C)),
            G::Bs => g.mul(&g.gen(SuGen::CStar), &g.gen(SuGen::AStar)),
        }
    }

    fn weight(x: G) -> i64 {
        match x {
            G::A => 0,
            G::B => 1,
            G::Bs => -1,
        }
    }

    fn tensor(&self, x: &SuqElement<K>, y: &SuqElement<K>) -> LinComb<K, (SuqMonomial, SuqMonomial)> {
        let mut out = LinComb::zero();
        for (m, k) in x.iter() {
            for (n, l) in y.iter() {
                out.add_term((*m, *n), k.mul_ref(l));
            }
        }
        out
    }

    /// `b(x0, x1, x2) = (x0x1, x2) − (x0, x1x2) + (σ(x2)x0, x1)` with `σ(B) = λB`.
    fn b(&self, terms: &[(K, [G; 3])], lambda: &K) -> LinComb<K, (SuqMonomial, SuqMonomial)> {
        let g = &self.g;
        let mut out = LinComb::zero();
        for (k, [x0, x1, x2]) in terms {
            let (e0, e1, e2) = (self.gen(*x0), self.gen(*x1), self.gen(*x2));
            let twist = lambda.powi(Self::weight(*x2));
            out.add_scaled(&self.tensor(&g.mul(&e0, &e1), &e2), k);
            out.add_scaled(&self.tensor(&e0, &g.mul(&e1, &e2)), &-k.clone());
            out.add_scaled(&self.tensor(&g.mul(&e2, &e0), &e1), &k.mul_ref(&twist));
        }
        out
    }
}

fn eta_terms() -> Vec<(K, [G; 3])> {
    use G::*;
    vec![
        (K::one(), [Bs, A, B]),
        (q(2), [B, Bs, A]),
        (q(2), [A, B, Bs]),
        (-q(-2), [Bs, B, A]),
        (-q(-2), [A, Bs, B]),
        (-K::one(), [B, A, Bs]),
        (q(6) - q(-2), [A, A, A]),
    ]
}

#[test]
fn eta_matches_its_definition() {
    let alg = Podles::new(Params::standard());
    let mut want = TensorChain::zero(2);
    let el = |x: G| match x {
        G::A => alg.a(),
        G::B => alg.b(),
        G::Bs => alg.b_star(),
    };
    for (k, [x0, x1, x2]) in eta_terms() {
        want.add_scaled(&TensorChain::from_elements(&[el(x0), el(x1), el(x2)]), &k);
    }
    assert_eq!(make_eta(&alg), want);
}

#[test]
fn boundary_of_eta_through_suq() {
    let alg = Podles::new(Params::standard());
    let oracle = Oracle { g: Suq::generic() };
    let tau = TauCocycle::new(&alg, &oracle.g).unwrap();
    let sigma = tau.sigma();
    assert_eq!(sigma.lambda(), &q(2));
    assert_eq!(sigma.sign(), 1);

    let by_hand = oracle.b(&eta_terms(), &q(2));
    let a = oracle.gen(G::A);
    let aa = oracle.tensor(&a, &a);
    // the coefficient is q^4 − q^-2, once
    assert_eq!(by_hand, aa.scale(&(q(4) - q(-2))));

    let lib = b_sigma(&alg, &sigma, &make_eta(&alg));
    let mut pushed = LinComb::zero();
    for (t, k) in lib.iter() {
        let x = oracle.g.embed_sphere(&alg, &podles::Element::basis(t[0])).unwrap();
        let y = oracle.g.embed_sphere(&alg, &podles::Element::basis(t[1])).unwrap();
        pushed.add_scaled(&oracle.tensor(&x, &y), k);
    }
    assert_eq!(pushed, by_hand);
}

#[test]
fn eta_pairings_through_suq() {
    let alg = Podles::new(Params::standard());
    let g = Suq::generic();
    let eta = make_eta(&alg);
    // S η computed as products in SU_q(2)
    let oracle = Oracle { g: Suq::generic() };
    let mut prod = SuqElement::zero();
    for (k, [x0, x1, x2]) in eta_terms() {
        let e = g.mul(&g.mul(&oracle.gen(x0), &oracle.gen(x1)), &oracle.gen(x2));
        prod.add_scaled(&e, &k);
    }
    let a = oracle.gen(G::A);
    assert_eq!(prod, g.mul(&a, &a).scale(&(q(4) - q(-2))));
    // h_A(A^2) = (1 − q^4)/(1 − q^6), so S h_A(η) = q^2 − q^-2
    assert_eq!(s_pair(&alg, &Functional0::HaarA, &eta).unwrap(), q(2) - q(-2));
    let h_a2 = (K::one() - q(4)) / (K::one() - q(6));
    assert_eq!((q(4) - q(-2)) * h_a2, q(2) - q(-2));
    assert!(s_pair(&alg, &Functional0::Tau0 { b: 0 }, &eta).unwrap().is_zero());
}

#[test]
fn haar_on_b_products() {
    let alg = Podles::new(Params::standard());
    let g = Suq::generic();
    let p = alg.params();
    let bbs = alg.mul(&alg.b(), &alg.b_star());
    let bsb = alg.mul(&alg.b_star(), &alg.b());
    let want = q(2) / ((K::one() + q(2)) * (K::one() + q(2) + q(4)));
    let h = Functional0::Haar;
    assert_eq!(h.eval(p, &bbs), want);
    assert_eq!(h.eval(p, &bbs), q(-2) * h.eval(p, &bsb));
    assert_eq!(g.haar(&g.embed_sphere(&alg, &bbs).unwrap()), want);
}

#[test]
fn haar_on_powers_of_a() {
    let alg = Podles::new(Params::standard());
    let g = Suq::generic();
    let p = alg.params();
    for r in 0..7u32 {
        let want = (K::one() - q(2)) / (K::one() - q(2 * r as i64 + 2));
        let x = alg.pow(&alg.a(), r);
        assert_eq!(Functional0::Haar.eval(p, &x), want, "r = {r}");
        assert_eq!(g.haar(&g.embed_sphere(&alg, &x).unwrap()), want, "r = {r}");
        if r > 0 {
            let ha = (K::one() - q(4)) / (K::one() - q(2 * r as i64 + 2));
            assert_eq!(Functional0::HaarA.eval(p, &x), ha, "r = {r}");
        }
    }
}
