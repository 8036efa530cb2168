//! Explicit chains behind the computed homology: preimages, comparison maps
//! and the β witness, each re-checked by direct evaluation.

use num_traits::{One, Zero};
use podles::chains::{b_sigma, cyclic_op, make_eta, s_pair, Functional0, TauCocycle, TensorChain};
use podles::homology::cyclic::beta_search_solution;
use podles::homology::{bar_preimage, hh_resolution, BarComplex, TruncationWindow};
use podles::quantumgroup::Suq;
use podles::resolution::Resolution;
use podles::{Automorphism, Field, Params, Podles, ScalarK};

type K = ScalarK;

fn q(k: i64) -> K {
    K::q_pow(k)
}

fn one_a(alg: &Podles<K>) -> TensorChain<K> {
    TensorChain::from_elements(&[alg.one(), alg.a()])
}

#[test]
fn one_a_is_a_boundary() {
    for ((c, d), k, deg) in [((1, 0), 4, 3), ((1, 0), 0, 4), ((1, 1), -8, 4), ((2, 1), 2, 4)] {
        let alg = Podles::new(Params::from_ints(c, d).unwrap());
        let sigma = Automorphism::new(alg.params(), q(k), 1).unwrap();
        let x = bar_preimage(&alg, &sigma, &one_a(&alg), deg).unwrap().unwrap_or_else(|| panic!("({c},{d}) q^{k}: no preimage"));
        assert_eq!(x.degree(), 2);
        assert!(x.max_tuple_degree() <= deg);
        // b(x) − (1, A) is a sum of degenerate tuples
        let rest = b_sigma(&alg, &sigma, &x).sub(&one_a(&alg));
        assert!(BarComplex::normalize(&rest).is_zero(), "({c},{d}) q^{k}");
        assert!(rest.iter().all(|(t, _)| t[1..].iter().any(|m| m.is_one())));
    }
}

#[test]
fn one_a_survives_at_q_minus_two() {
    let alg = Podles::new(Params::standard());
    let sigma = Automorphism::new(alg.params(), q(-2), 1).unwrap();
    assert!(bar_preimage(&alg, &sigma, &one_a(&alg), 4).unwrap().is_none());
    let w = TruncationWindow::new(6, 3).unwrap().with_weights(vec![0]);
    let (h, rep) = hh_resolution(&alg, &sigma, 1, &w).unwrap();
    assert!(rep.stable);
    assert_eq!(h.dim(), 1);
    let res = Resolution::new(&alg, sigma.clone());
    let v = res.from_bar(&one_a(&alg)).unwrap();
    let class = h.module_class(&sigma, &v).unwrap().unwrap();
    assert!(class.iter().any(|k| !k.is_zero()));
}

#[test]
fn comparison_maps_commute_with_differentials() {
    for (c, d) in [(1, 0), (1, 1), (2, 1)] {
        let alg = Podles::new(Params::from_ints(c, d).unwrap());
        for sigma in [Automorphism::identity(), Automorphism::new(alg.params(), q(-4), 1).unwrap(), Automorphism::new(alg.params(), K::s_pow(3), 1).unwrap()] {
            let res = Resolution::new(&alg, sigma.clone());
            // bar → resolution in degree 1
            for (x, y) in [(alg.b(), alg.a()), (alg.a(), alg.b_star()), (alg.monomial(1, 1), alg.b_star())] {
                let ch = TensorChain::from_elements(&[x, y]);
                let lhs = res.d(&res.from_bar(&ch).unwrap()).unwrap();
                let rhs = res.from_bar(&b_sigma(&alg, &sigma, &ch)).unwrap();
                assert_eq!(lhs, rhs, "({c},{d})");
            }
        }
        // resolution → bar → resolution is the identity on HH_1
        for sigma in [Automorphism::identity(), Automorphism::new(alg.params(), q(-2), 1).unwrap(), Automorphism::new(alg.params(), q(-6), 1).unwrap()] {
            let res = Resolution::new(&alg, sigma.clone());
            let w = TruncationWindow::new(5, 2).unwrap().with_weights(vec![-1, 0, 1]);
            let (h, _) = hh_resolution(&alg, &sigma, 1, &w).unwrap();
            let reps = h.bar_representatives(&alg, &sigma).unwrap();
            assert_eq!(reps.len(), h.dim());
            for (i, r) in reps.iter().enumerate() {
                assert!(b_sigma(&alg, &sigma, r).is_zero());
                let class = h.module_class(&sigma, &res.from_bar(r).unwrap()).unwrap().unwrap();
                let unit: Vec<K> = (0..h.dim()).map(|j| if i == j { K::one() } else { K::zero() }).collect();
                assert_eq!(class, unit, "({c},{d}) generator {i}");
            }
        }
    }
}

#[test]
fn beta_from_eta_and_from_search() {
    let alg = Podles::new(Params::standard());
    let suq = Suq::generic();
    let tau = TauCocycle::new(&alg, &suq).unwrap();
    let sigma = tau.sigma();
    let eta = make_eta(&alg);
    // η is a cycle of C^λ: b(η) = (1 − λ)y with y = ½(q^4 − q^-2)(A, A)
    let y = TensorChain::from_elements(&[alg.a(), alg.a()]).scale(&((q(4) - q(-2)) / K::from_int(2)));
    assert_eq!(b_sigma(&alg, &sigma, &eta), y.sub(&cyclic_op(&sigma, &y)));
    let sh = s_pair(&alg, &Functional0::HaarA, &eta).unwrap();
    assert!(s_pair(&alg, &Functional0::Tau0 { b: 0 }, &eta).unwrap().is_zero());
    let from_eta = tau.eval(&eta).unwrap().div_ref(&sh);
    assert_eq!(from_eta, (q(-2) - q(2)).inverse().unwrap());

    let (report, sol) = beta_search_solution(&alg, &suq, 3).unwrap();
    let sol = sol.expect("a witness of degree <= 3");
    assert!(report.found.is_some());
    let a = &sol.chain;
    assert_eq!(b_sigma(&alg, &sigma, a), sol.correction.sub(&cyclic_op(&sigma, &sol.correction)));
    assert!(s_pair(&alg, &Functional0::HaarA, a).unwrap().is_one());
    assert!(s_pair(&alg, &Functional0::Tau0 { b: 0 }, a).unwrap().is_zero());
    assert_eq!(tau.eval(a).unwrap(), sol.beta);
    assert_eq!(sol.beta, from_eta);
}

#[test]
fn beta_search_without_room() {
    let alg = Podles::new(Params::standard());
    let (report, sol) = beta_search_solution(&alg, &Suq::generic(), 2).unwrap();
    assert!(sol.is_none());
    assert!(report.found.is_none());
}

#[test]
fn tau_lambda_kills_the_unit() {
    // 1 = [b(B*, B) − ½(λq^4 − 1) b(A, A)] / (cd(1 − λ)) for c = d
    let alg = Podles::new(Params::from_ints(1, 1).unwrap());
    for lam in [q(2), q(-4), K::from_int(2)] {
        let sigma = Automorphism::new(alg.params(), lam.clone(), -1).unwrap();
        let bb = b_sigma(&alg, &sigma, &TensorChain::from_elements(&[alg.b_star(), alg.b()]));
        let aa = b_sigma(&alg, &sigma, &TensorChain::from_elements(&[alg.a(), alg.a()]));
        let half = (lam.mul_ref(&q(4)) - K::one()) / K::from_int(2);
        let got = bb.sub(&aa.scale(&half)).scale(&(K::one() - lam).inverse().unwrap());
        assert_eq!(got, TensorChain::from_elements(&[alg.one()]));
    }
}

