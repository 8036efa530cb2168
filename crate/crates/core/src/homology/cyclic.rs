//! Connes' operator on Hochschild classes, the second page of the `(b, B)`
//! spectral sequence, and the search for a cyclic 2-cycle pairing with `τ`.
//!
//! The first page of the bicomplex is `HH_m` in every column, with the induced
//! maps `B̄_m : HH_m → HH_(m+1)` as differentials. Column 0 receives `B̄` but
//! has no outgoing map, so
//!
//! ```text
//! HC_n = HH_n / im B̄_(n−1)  ⊕  ⊕_(p≥1) ker B̄_(n−2p) / im B̄_(n−2p−1).
//! ```
//!
//! `HH_m` for `m ≥ 4` is taken to be zero; `HH_3` is computed and must vanish.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{hh_bar, hh_resolution, CaseInfo, EngineKind, Homology, HomologyError, HomologyReport, TruncationWindow};
use crate::algebra::{Automorphism, Podles, PodlesMonomial};
use crate::chains::{
    b_sigma, b_sigma_tuple_into, connes_b_chain, cyclic_op, s_pair, tuple_weight, Functional0, TauCocycle, TensorChain, Tuple,
};
use crate::field::Field;
use crate::linalg::{Echelon, SparseMatrix, SparseVec};
use crate::lincomb::LinComb;
use crate::quantumgroup::Suq;
use crate::resolution::Resolution;

/// Class of a Hochschild cycle in a computed homology, as coordinates on its
/// representatives. On the resolution side only degrees 0 and 1 have a
/// comparison map from the bar complex.
pub fn class_of_chain<K: Field>(
    alg: &Podles<K>,
    sigma: &Automorphism<K>,
    hh: &Homology<K>,
    chain: &TensorChain<K>,
) -> Result<Vec<K>, HomologyError> {
    if chain.degree() != hh.n {
        return Err(HomologyError::BadDegree(chain.degree()));
    }
    if chain.degree() > 0 && !b_sigma(alg, sigma, chain).is_zero() {
        return Err(HomologyError::NotACycle);
    }
    if hh.dim() == 0 {
        return Ok(Vec::new());
    }
    match (hh.engine, hh.n) {
        (EngineKind::Bar, _) => hh.bar_class(sigma, chain)?.ok_or(HomologyError::NotACycle),
        (EngineKind::Resolution, 0 | 1) => {
            let res = Resolution::new(alg, sigma.clone());
            let v = res.from_bar(chain)?;
            hh.module_class(sigma, &v)?.ok_or(HomologyError::NotACycle)
        }
        _ => Err(HomologyError::Unsupported(format!("classes of {}-chains on the resolution side", hh.n))),
    }
}

/// The matrix of `B̄ : HH_m → HH_(m+1)`: column `j` holds the class of
/// `B(r_j)` for the `j`-th representative of `src`.
pub fn induced_b<K: Field>(
    alg: &Podles<K>,
    sigma: &Automorphism<K>,
    src: &Homology<K>,
    dst: &Homology<K>,
) -> Result<SparseMatrix<K>, HomologyError> {
    if dst.n != src.n + 1 {
        return Err(HomologyError::BadDegree(dst.n));
    }
    let mut m = SparseMatrix::new(dst.dim());
    for r in src.bar_representatives(alg, sigma)? {
        let col = if dst.dim() == 0 {
            SparseVec::new()
        } else {
            let image = connes_b_chain(sigma, &r);
            class_of_chain(alg, sigma, dst, &image)?
                .into_iter()
                .enumerate()
                .filter(|(_, k)| !k.is_zero())
                .collect()
        };
        m.push_col(col).expect("coordinates index the target classes");
    }
    Ok(m)
}

/// One summand `S^p[x]` of `HC_n`: `x` a class of `HH_m`, `n = m + 2p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HcTerm {
    pub p: usize,
    pub m: usize,
    pub class: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HcReport {
    pub case: CaseInfo,
    pub engine: EngineKind,
    pub window: TruncationWindow,
    /// `dim HH_m`, `m = 0..=3`.
    pub hh: Vec<usize>,
    /// `rank B̄_m`, `m = 0..=2`.
    pub b_ranks: Vec<usize>,
    /// `dim HC_n`, `n = 0..=n_max`.
    pub hc: Vec<usize>,
    pub generators: Vec<Vec<HcTerm>>,
    pub stable: bool,
}

/// Second-page pieces for one `m`: column 0 is `HH_m / im B̄_(m−1)`, columns
/// `p ≥ 1` are `ker B̄_m / im B̄_(m−1)`. Vectors are coordinates on `HH_m`.
struct Page<K: Field> {
    col0: Vec<SparseVec<K>>,
    higher: Vec<SparseVec<K>>,
}

fn second_page<K: Field>(dim: usize, incoming: Option<&SparseMatrix<K>>, outgoing: Option<&SparseMatrix<K>>) -> Page<K> {
    let mut image = Echelon::new(false);
    if let Some(m) = incoming {
        for c in m.cols() {
            image.insert(c.clone(), None);
        }
    }
    let units: Vec<SparseVec<K>> = (0..dim).map(|i| SparseVec::from([(i, K::one())])).collect();
    let kernel = match outgoing {
        Some(m) => m.kernel_basis(),
        None => units.clone(),
    };
    Page { col0: complement(&image, units), higher: complement(&image, kernel) }
}

/// Greedy choice from `candidates` of a basis modulo `span`.
fn complement<K: Field>(span: &Echelon<K>, candidates: Vec<SparseVec<K>>) -> Vec<SparseVec<K>> {
    let mut probe = span.clone();
    let mut out = Vec::new();
    for v in candidates {
        let r = probe.rank();
        probe.insert(v.clone(), None);
        if probe.rank() > r {
            out.push(v);
        }
    }
    out
}

fn combo_string<K: Field>(v: &SparseVec<K>, names: &[String]) -> String {
    let parts: Vec<String> = v
        .iter()
        .map(|(i, k)| if k.is_one() { format!("[{}]", names[*i]) } else { format!("({k})*[{}]", names[*i]) })
        .collect();
    parts.join(" + ")
}

/// `HC_n^σ` for `n ≤ n_max` from the second page of the `(b, B)` spectral
/// sequence on a truncation window.
pub fn hc_dims<K: Field>(
    alg: &Podles<K>,
    sigma: &Automorphism<K>,
    window: &TruncationWindow,
    n_max: usize,
    engine: EngineKind,
) -> Result<HcReport, HomologyError> {
    let mut hhs = Vec::with_capacity(4);
    let mut reports: Vec<HomologyReport> = Vec::with_capacity(4);
    for m in 0..=3 {
        let (h, r) = match engine {
            EngineKind::Bar => hh_bar(alg, sigma, m, window)?,
            EngineKind::Resolution => hh_resolution(alg, sigma, m, window)?,
        };
        hhs.push(h);
        reports.push(r);
    }
    if hhs[3].dim() != 0 {
        return Err(HomologyError::Unsupported("HH_3 is nonzero on this window".into()));
    }
    let mut bmaps: Vec<SparseMatrix<K>> = Vec::with_capacity(3);
    for m in 0..3 {
        // B̄_m B̄_(m−1) = 0, so B̄_m vanishes once B̄_(m−1) is onto
        let onto = m > 0 && bmaps[m - 1].rank() == hhs[m].dim();
        if onto {
            bmaps.push(SparseMatrix::zeros(hhs[m + 1].dim(), hhs[m].dim()));
        } else {
            bmaps.push(induced_b(alg, sigma, &hhs[m], &hhs[m + 1])?);
        }
    }
    let names: Vec<Vec<String>> = hhs
        .iter()
        .map(|h| Ok(h.bar_representatives(alg, sigma)?.iter().map(|c| c.to_string()).collect()))
        .collect::<Result<_, HomologyError>>()?;
    let pages: Vec<Page<K>> = (0..=3)
        .map(|m| second_page(hhs[m].dim(), m.checked_sub(1).map(|i| &bmaps[i]), bmaps.get(m)))
        .collect();

    let mut hc = Vec::new();
    let mut generators = Vec::new();
    for n in 0..=n_max {
        let mut terms = Vec::new();
        for p in 0..=n / 2 {
            let m = n - 2 * p;
            if m > 3 {
                continue;
            }
            let piece = if p == 0 { &pages[m].col0 } else { &pages[m].higher };
            terms.extend(piece.iter().map(|v| HcTerm { p, m, class: combo_string(v, &names[m]) }));
        }
        hc.push(terms.len());
        generators.push(terms);
    }
    Ok(HcReport {
        case: CaseInfo::of(alg, sigma),
        engine,
        window: window.clone(),
        hh: hhs.iter().map(|h| h.dim()).collect(),
        b_ranks: bmaps.iter().map(|m| m.rank()).collect(),
        hc,
        generators,
        stable: reports.iter().all(|r| r.stable),
    })
}

/// Tuples of `len` PBW monomials with total weight `weight` and total degree
/// `≤ max_degree`, units allowed in every slot.
pub fn full_tuples(len: usize, weight: i32, max_degree: u32) -> Vec<Tuple> {
    fn go(len: usize, weight: i32, room: u32, cur: &mut Vec<PodlesMonomial>, out: &mut Vec<Tuple>) {
        if cur.len() + 1 == len {
            if weight.unsigned_abs() <= room {
                for a in 0..=(room - weight.unsigned_abs()) {
                    cur.push(PodlesMonomial::new(weight, a));
                    out.push(cur.clone());
                    cur.pop();
                }
            }
            return;
        }
        let r = room as i32;
        for b in -r..=r {
            for a in 0..=(room - b.unsigned_abs()) {
                let m = PodlesMonomial::new(b, a);
                let rest = room - m.degree();
                if (weight - b).unsigned_abs() > rest {
                    continue;
                }
                cur.push(m);
                go(len, weight - b, rest, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    if len > 0 {
        go(len, weight, max_degree, &mut Vec::with_capacity(len), &mut out);
    }
    out
}

/// A verified solution of the β search.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BetaWitness {
    /// `β = τ(a)`.
    pub beta: String,
    /// The cyclic 2-cycle `a`.
    pub chain: Value,
    /// `y` with `b_σ(a) = (1 − λ_σ)y`.
    pub correction: Value,
    pub terms: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BetaReport {
    #[serde(rename = "N")]
    pub max_degree: u32,
    pub unknowns: usize,
    pub equations: usize,
    pub found: Option<BetaWitness>,
    pub message: String,
}

/// Search the weight-0 chains of degree `≤ N` on the standard sphere for `a`
/// in Connes' complex `C^λ = C / (1 − λ_σ)`, `σ = σ_(q²)`, with
///
/// ```text
/// b_σ(a) = (1 − λ_σ) y,   Sh_A(a) = 1,   Sτ₀(a) = 0,
/// ```
///
/// i.e. a cyclic 2-cycle with `[Sa] = [A]` in `HC_0`. Then `[τ] = β[Sh_A]`
/// gives `β = τ(a)`. Every solution is re-checked by direct evaluation
/// before it is reported.
pub fn beta_search<K: Field>(alg: &Podles<K>, suq: &Suq<K>, max_degree: u32) -> Result<BetaReport, HomologyError> {
    Ok(beta_search_solution(alg, suq, max_degree)?.0)
}

/// The chains behind a [`BetaWitness`].
#[derive(Debug, Clone)]
pub struct BetaSolution<K: Field> {
    pub chain: TensorChain<K>,
    pub correction: TensorChain<K>,
    pub beta: K,
}

/// [`beta_search`] together with the solution in typed form.
pub fn beta_search_solution<K: Field>(
    alg: &Podles<K>,
    suq: &Suq<K>,
    max_degree: u32,
) -> Result<(BetaReport, Option<BetaSolution<K>>), HomologyError> {
    let tau = TauCocycle::new(alg, suq)?;
    let sigma = tau.sigma();
    let h_a = Functional0::HaarA;
    let tau0 = Functional0::Tau0 { b: 0 };
    let c2 = full_tuples(3, 0, max_degree);
    let c1 = full_tuples(2, 0, max_degree);
    let row: std::collections::HashMap<&Tuple, usize> = c1.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let (r_tau0, r_ha) = (c1.len(), c1.len() + 1);
    let mut m = SparseMatrix::new(c1.len() + 2);
    for t in &c2 {
        let mut out = LinComb::zero();
        b_sigma_tuple_into(alg, &sigma, t, &K::one(), &mut out);
        let mut col: SparseVec<K> = out
            .into_terms()
            .into_iter()
            .map(|(u, k)| (row[&u], k))
            .collect();
        let single = TensorChain::from_tuple(t.clone(), K::one());
        for (r, phi) in [(r_tau0, &tau0), (r_ha, &h_a)] {
            let v = s_pair(alg, phi, &single)?;
            if !v.is_zero() {
                col.insert(r, v);
            }
        }
        m.push_col(col).expect("rows index C_1");
    }
    for u in &c1 {
        let single = TensorChain::from_tuple(u.clone(), K::one());
        let y = single.sub(&cyclic_op(&sigma, &single));
        let col: SparseVec<K> = y.iter().map(|(v, k)| (row[v], -k.clone())).collect();
        m.push_col(col).expect("rows index C_1");
    }
    let rhs = SparseVec::from([(r_ha, K::one())]);
    let unknowns = m.ncols();
    let equations = m.nrows();
    let Some(x) = m.in_image(&rhs).map_err(|e| HomologyError::Unsupported(e.to_string()))? else {
        let report = BetaReport {
            max_degree,
            unknowns,
            equations,
            found: None,
            message: format!("not found within N = {max_degree}"),
        };
        return Ok((report, None));
    };
    let mut a = TensorChain::zero(2);
    let mut y = TensorChain::zero(1);
    for (j, k) in &x {
        if *j < c2.len() {
            a.add_term(c2[*j].clone(), k.clone());
        } else {
            y.add_term(c1[*j - c2.len()].clone(), k.clone());
        }
    }
    let lhs = b_sigma(alg, &sigma, &a);
    let rhs_chain = y.sub(&cyclic_op(&sigma, &y));
    let ok = lhs == rhs_chain && s_pair(alg, &h_a, &a)?.is_one() && s_pair(alg, &tau0, &a)?.is_zero();
    if !ok {
        return Err(HomologyError::Unsupported("beta_search solution failed re-verification".into()));
    }
    debug_assert!(a.iter().all(|(t, _)| tuple_weight(t) == 0));
    let beta = tau.eval(&a)?;
    let report = BetaReport {
        max_degree,
        unknowns,
        equations,
        found: Some(BetaWitness { beta: beta.to_string(), chain: a.to_json(), correction: y.to_json(), terms: a.len() }),
        message: format!("found beta = {beta}"),
    };
    Ok((report, Some(BetaSolution { chain: a, correction: y, beta })))
}
