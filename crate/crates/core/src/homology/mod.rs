//! Truncated twisted Hochschild homology of `A(c,d)`.
//!
//! Two engines compute `HH_n^σ` on a window: the normalized bar complex
//! `(C_n^σ, b_σ)` and the complex `σA ⊗_{A^e} M_•` of the free resolution.
//! Both split into blocks of fixed weight (and `A`-parity when `σ = τ_λ`);
//! only blocks on which `σ` acts as the identity contribute.
//!
//! On a window `(N, M)` the block homology is
//! `ker(d_n on F_N) / (F_N ∩ d_(n+1)(F_(N+M)))`, where `F_D` is the span of
//! basis elements of filtration degree `≤ D`. Basis elements are ordered by
//! degree, so `F_D` is an initial segment and the subspace `F_N ∩ im` is read
//! off the echelon pivots.

pub mod cyclic;
pub mod predict;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{Automorphism, Element, Podles, PodlesMonomial};
use crate::chains::{b_sigma_tuple_into, tuple_degree, tuple_eigenvalue, tuple_parity, tuple_weight, ChainError, TensorChain, Tuple};
use crate::field::Field;
use crate::lincomb::LinComb;
use crate::linalg::{axpy, Echelon, PivotStrategy, SparseMatrix, SparseVec};
use crate::quantumgroup::fixtures_version;
use crate::resolution::{ModuleVector, Resolution, ResolutionError, LABELS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("window needs N >= 1")]
    BadWindow,
    #[error("homological degree {0} is outside 0..=3")]
    BadDegree(usize),
    #[error("boundary of {0} leaves the filtration window")]
    FiltrationEscape(String),
    #[error("chain has a term outside the computed window: {0}")]
    OutsideWindow(String),
    #[error("chain is not a cycle modulo the window")]
    NotACycle,
    #[error("{0}")]
    Unsupported(String),
    #[error(transparent)]
    Resolution(#[from] ResolutionError),
    #[error(transparent)]
    Chain(#[from] ChainError),
}

/// Degree bound `N`, margin `M` and an optional explicit weight set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncationWindow {
    #[serde(rename = "N")]
    pub max_degree: u32,
    #[serde(rename = "M")]
    pub margin: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub weights: Option<Vec<i32>>,
}

impl TruncationWindow {
    pub fn new(max_degree: u32, margin: u32) -> Result<Self, HomologyError> {
        if max_degree == 0 {
            return Err(HomologyError::BadWindow);
        }
        Ok(TruncationWindow { max_degree, margin, weights: None })
    }

    pub fn with_weights(mut self, weights: Vec<i32>) -> Self {
        self.weights = Some(weights);
        self
    }

    /// `N + M`.
    pub fn top(&self) -> u32 {
        self.max_degree + self.margin
    }

    /// The enlarged window `(N+1, M+2)` used to test stability.
    pub fn probe(&self) -> Self {
        TruncationWindow { max_degree: self.max_degree + 1, margin: self.margin + 2, weights: self.weights.clone() }
    }

    /// Candidate weights before eigenvalue filtering; `−N..=N` by default.
    pub fn weight_set(&self) -> Vec<i32> {
        match &self.weights {
            Some(w) => w.clone(),
            None => {
                let n = self.max_degree as i32;
                (-n..=n).collect()
            }
        }
    }
}

/// A weight block, refined by total `A`-parity when `σ` flips `A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Block {
    pub weight: i32,
    pub parity: Option<u32>,
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.parity {
            Some(p) => write!(f, "w={} p={}", self.weight, p),
            None => write!(f, "w={}", self.weight),
        }
    }
}

/// The blocks among `weights` on which `σ` has eigenvalue 1.
pub fn eigen_blocks<K: Field>(sigma: &Automorphism<K>, weights: &[i32]) -> Vec<Block> {
    let mut out = Vec::new();
    for &w in weights {
        if sigma.sign() == -1 {
            for p in 0..2 {
                if sigma.block_eigenvalue(w, p).is_one() {
                    out.push(Block { weight: w, parity: Some(p) });
                }
            }
        } else if sigma.block_eigenvalue(w, 0).is_one() {
            out.push(Block { weight: w, parity: None });
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EngineKind {
    Bar,
    Resolution,
}

impl fmt::Display for EngineKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EngineKind::Bar => "bar",
            EngineKind::Resolution => "resolution",
        })
    }
}

/// A basis element of either complex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Bar(Tuple),
    Module { level: usize, slot: usize, mono: PodlesMonomial },
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Bar(t) => {
                let ms: Vec<String> = t.iter().map(|m| m.to_string()).collect();
                write!(f, "({})", ms.join(", "))
            }
            Label::Module { level, slot, mono } => write!(f, "{}*{}", mono, LABELS[*level][*slot]),
        }
    }
}

/// A complex split into blocks, with a filtration degree on basis elements.
pub trait BlockComplex<K: Field>: Sync {
    fn kind(&self) -> EngineKind;

    /// Basis of degree `n` in `block` up to filtration degree `max_degree`,
    /// with degrees, in any order.
    fn basis(&self, n: usize, block: Block, max_degree: u32) -> Vec<(Label, u32)>;

    /// The differential on one basis element of degree `n ≥ 1`.
    fn boundary(&self, n: usize, label: &Label) -> Result<Vec<(Label, K)>, HomologyError>;
}

/// The normalized bar complex: tuples whose entries `1..n` differ from 1.
pub struct BarComplex<'a, K: Field> {
    pub alg: &'a Podles<K>,
    pub sigma: Automorphism<K>,
}

impl<'a, K: Field> BarComplex<'a, K> {
    pub fn new(alg: &'a Podles<K>, sigma: Automorphism<K>) -> Self {
        BarComplex { alg, sigma }
    }

    /// Normalized tuples of length `n+1` in `block` with total degree `≤ max_degree`.
    pub fn tuples(n: usize, block: Block, max_degree: u32) -> Vec<Tuple> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n + 1);
        fill(n, block, max_degree, block.weight, 0, &mut cur, &mut out);
        out
    }

    /// Drop degenerate tuples.
    pub fn normalize(chain: &TensorChain<K>) -> TensorChain<K> {
        chain.filter(|t| !is_degenerate(t))
    }
}

fn is_degenerate(t: &[PodlesMonomial]) -> bool {
    t.len() > 1 && t[1..].iter().any(|m| m.is_one())
}

fn fill(
    n: usize,
    block: Block,
    room: u32,
    weight_left: i32,
    parity: u32,
    cur: &mut Vec<PodlesMonomial>,
    out: &mut Vec<Tuple>,
) {
    let slot = cur.len();
    let needs_letter = slot >= 1;
    if slot == n {
        let b = weight_left;
        let lo = b.unsigned_abs();
        if lo > room {
            return;
        }
        for a in 0..=(room - lo) {
            let m = PodlesMonomial::new(b, a);
            if needs_letter && m.is_one() {
                continue;
            }
            if let Some(p) = block.parity {
                if (parity + a) % 2 != p {
                    continue;
                }
            }
            cur.push(m);
            out.push(cur.clone());
            cur.pop();
        }
        return;
    }
    let r = room as i32;
    for b in -r..=r {
        let lo = b.unsigned_abs();
        for a in 0..=(room - lo) {
            let m = PodlesMonomial::new(b, a);
            if needs_letter && m.is_one() {
                continue;
            }
            let rest = room - m.degree();
            // later slots are letters of degree ≥ 1 and must absorb the weight
            if rest < (weight_left - b).unsigned_abs().max((n - slot) as u32) {
                continue;
            }
            cur.push(m);
            fill(n, block, rest, weight_left - b, (parity + a) % 2, cur, out);
            cur.pop();
        }
    }
}

impl<K: Field> BlockComplex<K> for BarComplex<'_, K> {
    fn kind(&self) -> EngineKind {
        EngineKind::Bar
    }

    fn basis(&self, n: usize, block: Block, max_degree: u32) -> Vec<(Label, u32)> {
        Self::tuples(n, block, max_degree)
            .into_iter()
            .map(|t| {
                let d = tuple_degree(&t);
                (Label::Bar(t), d)
            })
            .collect()
    }

    fn boundary(&self, n: usize, label: &Label) -> Result<Vec<(Label, K)>, HomologyError> {
        let Label::Bar(t) = label else {
            return Err(HomologyError::Unsupported("bar complex needs tuple labels".into()));
        };
        debug_assert_eq!(t.len(), n + 1);
        let mut out = LinComb::zero();
        b_sigma_tuple_into(self.alg, &self.sigma, t, &K::one(), &mut out);
        Ok(out
            .into_terms()
            .into_iter()
            .filter(|(u, _)| !is_degenerate(u))
            .map(|(u, k)| (Label::Bar(u), k))
            .collect())
    }
}

/// `σA ⊗_{A^e} M_•`, levels 0 to 4.
pub struct ResolutionComplex<'a, K: Field> {
    pub res: Resolution<'a, K>,
}

impl<'a, K: Field> ResolutionComplex<'a, K> {
    pub fn new(alg: &'a Podles<K>, sigma: Automorphism<K>) -> Self {
        ResolutionComplex { res: Resolution::new(alg, sigma) }
    }
}

impl<K: Field> BlockComplex<K> for ResolutionComplex<'_, K> {
    fn kind(&self) -> EngineKind {
        EngineKind::Resolution
    }

    fn basis(&self, n: usize, block: Block, max_degree: u32) -> Vec<(Label, u32)> {
        if n > 4 {
            return Vec::new();
        }
        self.res
            .block_basis(n, block.weight, block.parity, max_degree)
            .into_iter()
            .map(|(slot, mono)| (Label::Module { level: n, slot, mono }, Resolution::<K>::coord_degree(n, &mono)))
            .collect()
    }

    fn boundary(&self, n: usize, label: &Label) -> Result<Vec<(Label, K)>, HomologyError> {
        let Label::Module { level, slot, mono } = label else {
            return Err(HomologyError::Unsupported("resolution complex needs module labels".into()));
        };
        debug_assert_eq!(*level, n);
        let img = self.res.d(&ModuleVector::unit(n, *slot, Element::basis(*mono)))?;
        let mut out = Vec::new();
        for (s, x) in img.coords.iter().enumerate() {
            for (m, k) in x {
                out.push((Label::Module { level: n - 1, slot: s, mono: *m }, k.clone()));
            }
        }
        Ok(out)
    }
}

/// Homology of one block on one window.
pub struct BlockHomology<K: Field> {
    pub block: Block,
    pub n: usize,
    /// Degree-`n` basis up to `N + M`, ordered by (degree, label).
    pub basis: Vec<Label>,
    pub degrees: Vec<u32>,
    index: HashMap<Label, usize>,
    /// Number of basis elements of degree `≤ N`.
    pub inside: usize,
    pub dim_cycles: usize,
    pub dim_boundaries: usize,
    /// `d_n` on `F_N` (absent for `n = 0`).
    d_in: Option<SparseMatrix<K>>,
    /// `d_(n+1)` on `F_(N+M)`.
    d_up: SparseMatrix<K>,
    reps: OnceLock<Representatives<K>>,
}

struct Representatives<K: Field> {
    image: Echelon<K>,
    reps: Vec<SparseVec<K>>,
    classes: Echelon<K>,
}

impl<K: Field> BlockHomology<K> {
    pub fn dim(&self) -> usize {
        self.dim_cycles - self.dim_boundaries
    }

    pub fn index_of(&self, label: &Label) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// `d_(n+1)` on the window, columns in the order of the degree-`n+1`
    /// basis sorted by (degree, label).
    pub fn incoming(&self) -> &SparseMatrix<K> {
        &self.d_up
    }

    /// Coordinates of a linear combination of labels; labels outside the
    /// window are an error.
    pub fn vector<'b, I: IntoIterator<Item = (&'b Label, &'b K)>>(&self, terms: I) -> Result<SparseVec<K>, HomologyError> {
        let mut v = SparseVec::new();
        for (l, k) in terms {
            let i = self.index_of(l).ok_or_else(|| HomologyError::OutsideWindow(l.to_string()))?;
            axpy(&mut v, &SparseVec::from([(i, K::one())]), k);
        }
        Ok(v)
    }

    /// Cycles representing a basis of the block homology, chosen greedily
    /// by least leading basis element.
    fn representatives(&self) -> &Representatives<K> {
        self.reps.get_or_init(|| {
            let cycles: Vec<SparseVec<K>> = match &self.d_in {
                None => (0..self.inside).map(|j| SparseVec::from([(j, K::one())])).collect(),
                Some(d) => d.kernel_basis(),
            };
            let mut image = Echelon::new(false);
            for c in self.d_up.cols() {
                image.insert(c.clone(), None);
            }
            let mut probe = image.clone();
            let mut reps = Vec::new();
            for z in cycles {
                let r = probe.rank();
                probe.insert(z.clone(), None);
                if probe.rank() > r {
                    reps.push(z);
                }
            }
            let mut classes = Echelon::new(true);
            for v in image.basis() {
                classes.insert(v.clone(), Some(SparseVec::new()));
            }
            for (i, r) in reps.iter().enumerate() {
                classes.insert(r.clone(), Some(SparseVec::from([(i, K::one())])));
            }
            Representatives { image, reps, classes }
        })
    }

    pub fn reps(&self) -> &[SparseVec<K>] {
        let r = &self.representatives().reps;
        debug_assert_eq!(r.len(), self.dim());
        r
    }

    /// Degree of a representative's leading basis element.
    pub fn rep_degree(&self, i: usize) -> u32 {
        let (&lead, _) = self.reps()[i].iter().next_back().expect("nonzero representative");
        self.degrees[lead]
    }

    /// A representative as labelled terms.
    pub fn rep_terms(&self, i: usize) -> Vec<(Label, K)> {
        self.reps()[i].iter().map(|(j, k)| (self.basis[*j].clone(), k.clone())).collect()
    }

    pub fn rep_string(&self, i: usize) -> String {
        let parts: Vec<String> = self
            .rep_terms(i)
            .iter()
            .rev()
            .map(|(l, k)| if k.is_one() { l.to_string() } else { format!("({k})*{l}") })
            .collect();
        parts.join(" + ")
    }

    /// Number of classes whose least representative has each degree `0..=N`.
    pub fn profile(&self, max_degree: u32) -> Vec<usize> {
        let mut out = vec![0; max_degree as usize + 1];
        for i in 0..self.dim() {
            out[self.rep_degree(i) as usize] += 1;
        }
        out
    }

    /// Coordinates of a cycle's class in the representative basis; `None`
    /// when the vector is not in `span(reps) + im`.
    pub fn class_coords(&self, v: &SparseVec<K>) -> Option<Vec<K>> {
        let combo = self.representatives().classes.express(v)?;
        Some((0..self.dim()).map(|i| combo.get(&i).cloned().unwrap_or_else(K::zero)).collect())
    }

    /// Whether `v` is a boundary of the window.
    pub fn is_boundary(&self, v: &SparseVec<K>) -> bool {
        self.representatives().image.contains(v)
    }
}

fn sorted_basis(mut b: Vec<(Label, u32)>) -> (Vec<Label>, Vec<u32>) {
    b.sort_by(|x, y| x.1.cmp(&y.1).then_with(|| x.0.cmp(&y.0)));
    b.into_iter().unzip()
}

fn matrix<K: Field, C: BlockComplex<K>>(
    cx: &C,
    n: usize,
    labels: &[Label],
    rows: &HashMap<Label, usize>,
) -> Result<SparseMatrix<K>, HomologyError> {
    let cols: Vec<SparseVec<K>> = labels
        .par_iter()
        .map(|l| {
            let mut v = SparseVec::new();
            for (t, k) in cx.boundary(n, l)? {
                let i = *rows.get(&t).ok_or_else(|| HomologyError::FiltrationEscape(l.to_string()))?;
                axpy(&mut v, &SparseVec::from([(i, K::one())]), &k);
            }
            Ok(v)
        })
        .collect::<Result<_, HomologyError>>()?;
    let mut m = SparseMatrix::new(rows.len());
    for c in cols {
        m.push_col(c).expect("rows come from the index");
    }
    Ok(m)
}

/// Rows `≥ from` of `m`, renumbered from 0.
fn rows_from<K: Field>(m: &SparseMatrix<K>, from: usize) -> SparseMatrix<K> {
    let mut out = SparseMatrix::new(m.nrows() - from);
    for c in m.cols() {
        let v: SparseVec<K> = c.range(from..).map(|(i, k)| (i - from, k.clone())).collect();
        out.push_col(v).expect("in range");
    }
    out
}

/// Homology of `cx` in degree `n` on one block.
///
/// `dim(F_N ∩ im) = rank D − rank(D mod F_N)` for the incoming matrix `D`,
/// so only ranks are needed for the dimensions.
pub fn block_homology<K: Field, C: BlockComplex<K>>(
    cx: &C,
    n: usize,
    block: Block,
    window: &TruncationWindow,
) -> Result<BlockHomology<K>, HomologyError> {
    let top = window.top();
    let (basis, degrees) = sorted_basis(cx.basis(n, block, top));
    let index: HashMap<Label, usize> = basis.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
    let inside = degrees.iter().take_while(|d| **d <= window.max_degree).count();

    let (d_in, dim_cycles) = if n == 0 {
        (None, inside)
    } else {
        let (lower, _) = sorted_basis(cx.basis(n - 1, block, window.max_degree));
        let lower_index: HashMap<Label, usize> = lower.into_iter().enumerate().map(|(i, l)| (l, i)).collect();
        let d = matrix(cx, n, &basis[..inside], &lower_index)?;
        let r = d.rank_with(PivotStrategy::Markowitz);
        (Some(d), inside - r)
    };

    let (upper, _) = sorted_basis(cx.basis(n + 1, block, top));
    let d_up = matrix(cx, n + 1, &upper, &index)?;
    let (r_all, r_out) = rayon::join(
        || d_up.rank_with(PivotStrategy::Markowitz),
        || rows_from(&d_up, inside).rank_with(PivotStrategy::Markowitz),
    );
    Ok(BlockHomology {
        block,
        n,
        basis,
        degrees,
        index,
        inside,
        dim_cycles,
        dim_boundaries: r_all - r_out,
        d_in,
        d_up,
        reps: OnceLock::new(),
    })
}

/// Homology in one degree over all eigenvalue-1 blocks of a window.
pub struct Homology<K: Field> {
    pub engine: EngineKind,
    pub n: usize,
    pub window: TruncationWindow,
    pub blocks: Vec<BlockHomology<K>>,
}

impl<K: Field> Homology<K> {
    pub fn compute<C: BlockComplex<K>>(
        cx: &C,
        sigma: &Automorphism<K>,
        n: usize,
        window: &TruncationWindow,
    ) -> Result<Self, HomologyError> {
        if n > 3 {
            return Err(HomologyError::BadDegree(n));
        }
        let blocks = eigen_blocks(sigma, &window.weight_set());
        let blocks = blocks
            .par_iter()
            .map(|b| block_homology(cx, n, *b, window))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Homology { engine: cx.kind(), n, window: window.clone(), blocks })
    }

    pub fn dim(&self) -> usize {
        self.blocks.iter().map(|b| b.dim()).sum()
    }

    pub fn dims(&self) -> BTreeMap<Block, usize> {
        self.blocks.iter().map(|b| (b.block, b.dim())).collect()
    }

    pub fn block(&self, block: Block) -> Option<&BlockHomology<K>> {
        self.blocks.iter().find(|b| b.block == block)
    }

    /// Per-degree class counts summed over blocks.
    pub fn profile(&self) -> Vec<usize> {
        let mut out = vec![0; self.window.max_degree as usize + 1];
        for b in &self.blocks {
            for (i, c) in b.profile(self.window.max_degree).into_iter().enumerate() {
                out[i] += c;
            }
        }
        out
    }

    /// Class of a labelled chain, block by block (blocks in order, each
    /// contributing its coordinates). Terms in blocks outside the window are
    /// an error; `None` when some block part is not a cycle.
    pub fn class_of_terms(&self, terms: &[(Label, K)], block_of: impl Fn(&Label) -> Block) -> Result<Option<Vec<K>>, HomologyError> {
        let mut parts: BTreeMap<Block, Vec<(&Label, &K)>> = BTreeMap::new();
        for (l, k) in terms {
            parts.entry(block_of(l)).or_default().push((l, k));
        }
        for b in parts.keys() {
            if self.block(*b).is_none() {
                return Err(HomologyError::OutsideWindow(format!("block {b}")));
            }
        }
        let mut out = Vec::new();
        for bh in &self.blocks {
            let v = match parts.get(&bh.block) {
                Some(ts) => bh.vector(ts.iter().copied())?,
                None => SparseVec::new(),
            };
            match bh.class_coords(&v) {
                Some(c) => out.extend(c),
                None => return Ok(None),
            }
        }
        Ok(Some(out))
    }
}

fn parity_block<K: Field>(sigma: &Automorphism<K>, weight: i32, parity: u32) -> Block {
    Block { weight, parity: (sigma.sign() == -1).then_some(parity % 2) }
}

/// A normalized `(n+1)`-chain `x` of degree `≤ max_degree` with
/// `b_σ(x) = chain` modulo degenerate tuples, if one exists. The chain must
/// lie in a single block.
pub fn bar_preimage<K: Field>(
    alg: &Podles<K>,
    sigma: &Automorphism<K>,
    chain: &TensorChain<K>,
    max_degree: u32,
) -> Result<Option<TensorChain<K>>, HomologyError> {
    let n = chain.degree();
    let target = BarComplex::normalize(chain);
    let Some((t0, _)) = target.iter().next() else {
        return Ok(Some(TensorChain::zero(n + 1)));
    };
    let block = parity_block(sigma, tuple_weight(t0), tuple_parity(t0));
    let cx = BarComplex::new(alg, sigma.clone());
    let mut rows: HashMap<Label, usize> = HashMap::new();
    for (l, _) in cx.basis(n, block, max_degree) {
        let i = rows.len();
        rows.insert(l, i);
    }
    let mut v = SparseVec::new();
    for (t, k) in target.iter() {
        let i = rows.get(&Label::Bar(t.clone())).ok_or_else(|| HomologyError::OutsideWindow(format!("{t:?}")))?;
        v.insert(*i, k.clone());
    }
    let upper: Vec<Label> = cx.basis(n + 1, block, max_degree).into_iter().map(|(l, _)| l).collect();
    let d = matrix(&cx, n + 1, &upper, &rows)?;
    let x = d.in_image(&v).map_err(|e| HomologyError::Unsupported(e.to_string()))?;
    Ok(x.map(|x| {
        let mut out = TensorChain::zero(n + 1);
        for (j, k) in x {
            if let Label::Bar(t) = &upper[j] {
                out.add_term(t.clone(), k);
            }
        }
        out
    }))
}

impl<K: Field> Homology<K> {
    /// Class of a bar chain in a bar-engine result. Degenerate tuples and
    /// tuples on which `σ` is not the identity are zero in the normalized
    /// complex `C^σ` and are dropped first.
    pub fn bar_class(&self, sigma: &Automorphism<K>, chain: &TensorChain<K>) -> Result<Option<Vec<K>>, HomologyError> {
        if self.engine != EngineKind::Bar {
            return Err(HomologyError::Unsupported("bar_class needs the bar engine".into()));
        }
        let terms: Vec<(Label, K)> = chain
            .iter()
            .filter(|(t, _)| !is_degenerate(t) && tuple_eigenvalue(sigma, t).is_one())
            .map(|(t, k)| (Label::Bar(t.clone()), k.clone()))
            .collect();
        self.class_of_terms(&terms, |l| match l {
            Label::Bar(t) => parity_block(sigma, tuple_weight(t), tuple_parity(t)),
            _ => unreachable!(),
        })
    }

    /// Class of a module vector in a resolution-engine result.
    pub fn module_class(&self, sigma: &Automorphism<K>, v: &ModuleVector<K>) -> Result<Option<Vec<K>>, HomologyError> {
        if self.engine != EngineKind::Resolution {
            return Err(HomologyError::Unsupported("module_class needs the resolution engine".into()));
        }
        let level = v.level;
        let mut terms = Vec::new();
        for (slot, x) in v.coords.iter().enumerate() {
            for (m, k) in x {
                terms.push((Label::Module { level, slot, mono: *m }, k.clone()));
            }
        }
        self.class_of_terms(&terms, |l| match l {
            Label::Module { level, slot, mono } => parity_block(
                sigma,
                mono.b + crate::resolution::WEIGHT_OFFSETS[*level][*slot],
                mono.a + crate::resolution::PARITY_OFFSETS[*level][*slot],
            ),
            _ => unreachable!(),
        })
    }

    /// Representatives as bar chains (bar engine) or module vectors pushed
    /// through the comparison map (resolution engine, `n ≤ 2`).
    pub fn bar_representatives(&self, alg: &Podles<K>, sigma: &Automorphism<K>) -> Result<Vec<TensorChain<K>>, HomologyError> {
        let res = Resolution::new(alg, sigma.clone());
        let mut out = Vec::new();
        for bh in &self.blocks {
            for i in 0..bh.dim() {
                let terms = bh.rep_terms(i);
                match self.engine {
                    EngineKind::Bar => {
                        let mut c = TensorChain::zero(self.n);
                        for (l, k) in terms {
                            if let Label::Bar(t) = l {
                                c.add_term(t, k);
                            }
                        }
                        out.push(c);
                    }
                    EngineKind::Resolution => {
                        let mut v = ModuleVector::zero(self.n);
                        for (l, k) in terms {
                            if let Label::Module { slot, mono, .. } = l {
                                v.coords[slot].add_term(mono, k);
                            }
                        }
                        out.push(res.to_bar_cycle(&v)?);
                    }
                }
            }
        }
        Ok(out)
    }
}

/// `{c, d, lambda, sign}` as printed values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseInfo {
    pub c: String,
    pub d: String,
    pub lambda: String,
    pub sign: i32,
}

impl CaseInfo {
    pub fn of<K: Field>(alg: &Podles<K>, sigma: &Automorphism<K>) -> Self {
        let p = alg.params();
        CaseInfo { c: p.c.to_string(), d: p.d.to_string(), lambda: sigma.lambda().to_string(), sign: sigma.sign() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockReport {
    pub weight: i32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub parity: Option<u32>,
    pub dim_cycles: usize,
    pub dim_boundaries: usize,
    pub dim: usize,
    pub stable: bool,
    pub generators: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dims {
    pub total: usize,
    /// Classes counted by the degree of their least representative.
    pub profile: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub probe_total: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyReport {
    pub case: CaseInfo,
    pub n: usize,
    pub engine: EngineKind,
    pub window: TruncationWindow,
    pub dims: Dims,
    pub blocks: Vec<BlockReport>,
    pub generators: Vec<String>,
    pub stable: bool,
    pub fixtures_version: String,
}

impl HomologyReport {
    /// Report for `main`, with stability judged against `probe` on the
    /// blocks of `main`.
    pub fn assemble<K: Field>(alg: &Podles<K>, sigma: &Automorphism<K>, main: &Homology<K>, probe: Option<&Homology<K>>) -> Self {
        let mut blocks = Vec::new();
        let mut generators = Vec::new();
        let mut stable = probe.is_some();
        for bh in &main.blocks {
            let gens: Vec<String> = (0..bh.dim()).map(|i| bh.rep_string(i)).collect();
            let ok = probe.and_then(|p| p.block(bh.block)).is_some_and(|pb| pb.dim() == bh.dim());
            stable &= ok;
            generators.extend(gens.iter().map(|g| format!("[{}] {}", bh.block, g)));
            blocks.push(BlockReport {
                weight: bh.block.weight,
                parity: bh.block.parity,
                dim_cycles: bh.dim_cycles,
                dim_boundaries: bh.dim_boundaries,
                dim: bh.dim(),
                stable: ok,
                generators: gens,
            });
        }
        HomologyReport {
            case: CaseInfo::of(alg, sigma),
            n: main.n,
            engine: main.engine,
            window: main.window.clone(),
            dims: Dims { total: main.dim(), profile: main.profile(), probe_total: probe.map(|p| p.dim()) },
            blocks,
            generators,
            stable,
            fixtures_version: fixtures_version(),
        }
    }
}

/// Bar-engine homology and its report, probed at `(N+1, M+2)`.
pub fn hh_bar<K: Field>(
    alg: &Podles<K>,
    sigma: &Automorphism<K>,
    n: usize,
    window: &TruncationWindow,
) -> Result<(Homology<K>, HomologyReport), HomologyError> {
    let cx = BarComplex::new(alg, sigma.clone());
    let main = Homology::compute(&cx, sigma, n, window)?;
    let probe = Homology::compute(&cx, sigma, n, &pin_weights(window))?;
    let report = HomologyReport::assemble(alg, sigma, &main, Some(&probe));
    Ok((main, report))
}

/// Resolution-engine homology and its report, probed at `(N+1, M+2)`.
pub fn hh_resolution<K: Field>(
    alg: &Podles<K>,
    sigma: &Automorphism<K>,
    n: usize,
    window: &TruncationWindow,
) -> Result<(Homology<K>, HomologyReport), HomologyError> {
    let cx = ResolutionComplex::new(alg, sigma.clone());
    let main = Homology::compute(&cx, sigma, n, window)?;
    let probe = Homology::compute(&cx, sigma, n, &pin_weights(window))?;
    let report = HomologyReport::assemble(alg, sigma, &main, Some(&probe));
    Ok((main, report))
}

/// The probe window on the weights of `window`.
fn pin_weights(window: &TruncationWindow) -> TruncationWindow {
    let mut p = window.probe();
    p.weights = Some(window.weight_set());
    p
}
