//! Exact sparse linear algebra over a [`Field`]: rank, kernels, image
//! membership with witnesses, and quotient dimensions.
//!
//! Matrices are stored by columns. The main elimination routine,
//! [`Echelon`], keeps a basis in echelon form with respect to the row order
//! (pivot = largest row index present), which is what the truncated
//! homology computations need: if the rows outside a subspace are given the
//! largest indices, the basis vectors whose pivot lies inside the subspace
//! span the intersection of the column space with it.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use rand::Rng;
use thiserror::Error;

use crate::field::{Field, Rational};
use crate::scalar::{ScalarError, ScalarK};

pub type SparseVec<K> = BTreeMap<usize, K>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("a column of the incoming map leaves the cycle space (truncation window too small?)")]
    NotContained,
    #[error("exact rank {exact} disagrees with specialised ranks {shadow:?}")]
    ShadowMismatch { exact: usize, shadow: Vec<usize> },
    #[error("malformed triplet text: {0}")]
    Parse(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PivotStrategy {
    /// Pivot on the largest row present; column order decides the rest.
    LeadingRow,
    /// Sparse elimination preferring short columns and cheap pivots.
    Markowitz,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix<K: Field> {
    rows: usize,
    cols: Vec<SparseVec<K>>,
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
}

impl<K: Field> SparseMatrix<K> {
    pub fn new(rows: usize) -> Self {
        SparseMatrix { rows, cols: Vec::new(), row_labels: Vec::new(), col_labels: Vec::new() }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols: vec![SparseVec::new(); cols], row_labels: Vec::new(), col_labels: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = SparseMatrix::new(n);
        for i in 0..n {
            m.push_col(SparseVec::from([(i, K::one())])).unwrap();
        }
        m
    }

    pub fn from_dense(rows: &[Vec<K>]) -> Self {
        let nr = rows.len();
        let nc = rows.first().map_or(0, |r| r.len());
        let mut m = SparseMatrix::zeros(nr, nc);
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    pub fn col(&self, j: usize) -> &SparseVec<K> {
        &self.cols[j]
    }

    pub fn cols(&self) -> &[SparseVec<K>] {
        &self.cols
    }

    pub fn push_col(&mut self, mut v: SparseVec<K>) -> Result<(), LinalgError> {
        v.retain(|_, k| !k.is_zero());
        if let Some((&r, _)) = v.iter().next_back() {
            if r >= self.rows {
                return Err(LinalgError::DimensionMismatch { expected: self.rows, found: r + 1 });
            }
        }
        self.cols.push(v);
        Ok(())
    }

    pub fn get(&self, i: usize, j: usize) -> K {
        self.cols[j].get(&i).cloned().unwrap_or_else(K::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, v: K) {
        if v.is_zero() {
            self.cols[j].remove(&i);
        } else {
            self.cols[j].insert(i, v);
        }
    }

    /// Reorder rows: row `i` moves to `perm[i]`.
    pub fn permute_rows(&self, perm: &[usize]) -> Self {
        let cols = self.cols.iter().map(|c| c.iter().map(|(i, v)| (perm[*i], v.clone())).collect()).collect();
        SparseMatrix { rows: self.rows, cols, row_labels: Vec::new(), col_labels: self.col_labels.clone() }
    }

    pub fn map_entries<L: Field, F: Fn(&K) -> Result<L, LinalgError>>(&self, f: F) -> Result<SparseMatrix<L>, LinalgError> {
        let mut out = SparseMatrix::new(self.rows);
        for c in &self.cols {
            let mut v = SparseVec::new();
            for (i, k) in c {
                v.insert(*i, f(k)?);
            }
            out.push_col(v)?;
        }
        out.row_labels = self.row_labels.clone();
        out.col_labels = self.col_labels.clone();
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        self.rank_with(PivotStrategy::LeadingRow)
    }

    pub fn rank_with(&self, strategy: PivotStrategy) -> usize {
        match strategy {
            PivotStrategy::LeadingRow => {
                let mut e = Echelon::new(false);
                for c in &self.cols {
                    e.insert(c.clone(), None);
                }
                e.rank()
            }
            PivotStrategy::Markowitz => markowitz_rank(self),
        }
    }

    /// A basis of `{x : Mx = 0}`.
    pub fn kernel_basis(&self) -> Vec<SparseVec<K>> {
        let mut e = Echelon::new(true);
        let mut out = Vec::new();
        for (j, c) in self.cols.iter().enumerate() {
            if let Some(combo) = e.insert(c.clone(), Some(SparseVec::from([(j, K::one())]))) {
                out.push(combo);
            }
        }
        out
    }

    /// `Some(x)` with `Mx = v` when `v` is in the column space.
    pub fn in_image(&self, v: &SparseVec<K>) -> Result<Option<SparseVec<K>>, LinalgError> {
        if let Some((&r, _)) = v.iter().next_back() {
            if r >= self.rows {
                return Err(LinalgError::DimensionMismatch { expected: self.rows, found: r + 1 });
            }
        }
        let mut e = Echelon::new(true);
        for (j, c) in self.cols.iter().enumerate() {
            e.insert(c.clone(), Some(SparseVec::from([(j, K::one())])));
        }
        let (rest, combo) = e.reduce(v.clone(), Some(SparseVec::new()));
        Ok(if rest.is_empty() { combo } else { None })
    }

    pub fn mul_vec(&self, x: &SparseVec<K>) -> SparseVec<K> {
        let mut out = SparseVec::new();
        for (j, k) in x {
            axpy(&mut out, &self.cols[*j], k);
        }
        out
    }

    /// `row col value` lines, values in canonical text form.
    pub fn to_triplet_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {}", self.rows, self.cols.len());
        for (j, c) in self.cols.iter().enumerate() {
            for (i, v) in c {
                let _ = writeln!(s, "{i} {j} {v}");
            }
        }
        s
    }
}

impl SparseMatrix<ScalarK> {
    pub fn from_triplet_text(text: &str) -> Result<Self, LinalgError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let head = lines.next().ok_or_else(|| LinalgError::Parse("empty input".into()))?;
        let dims: Vec<usize> = head
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| LinalgError::Parse(head.to_string())))
            .collect::<Result<_, _>>()?;
        if dims.len() != 2 {
            return Err(LinalgError::Parse(head.to_string()));
        }
        let mut m = SparseMatrix::zeros(dims[0], dims[1]);
        for line in lines {
            let mut it = line.splitn(3, ' ');
            let (i, j, v) = match (it.next(), it.next(), it.next()) {
                (Some(i), Some(j), Some(v)) => (i, j, v),
                _ => return Err(LinalgError::Parse(line.to_string())),
            };
            let i: usize = i.parse().map_err(|_| LinalgError::Parse(line.to_string()))?;
            let j: usize = j.parse().map_err(|_| LinalgError::Parse(line.to_string()))?;
            if i >= dims[0] || j >= dims[1] {
                return Err(LinalgError::Parse(line.to_string()));
            }
            let v = ScalarK::parse(v).map_err(|e| LinalgError::Parse(e.to_string()))?;
            m.set(i, j, v);
        }
        Ok(m)
    }

    /// Substitute `s = s0` in every entry.
    pub fn specialize(&self, s0: &Rational) -> Result<SparseMatrix<Rational>, LinalgError> {
        self.map_entries(|k| Ok(k.eval_at(s0)?))
    }

    /// Confirm `exact` (the rank over `Q(s)`) at two random rational points.
    /// A disagreeing point is replaced by a third; persistent disagreement is
    /// an error.
    pub fn confirm_rank<R: Rng>(&self, exact: usize, rng: &mut R) -> Result<Vec<usize>, LinalgError> {
        let mut seen = Vec::new();
        let mut agree = 0;
        let mut attempts = 0;
        while agree < 2 {
            attempts += 1;
            let s0 = Rational::new(rng.gen_range(2..200).into(), rng.gen_range(2..200).into());
            let r = match self.specialize(&s0) {
                Ok(m) => m.rank(),
                Err(LinalgError::Scalar(ScalarError::Pole(_))) => continue,
                Err(e) => return Err(e),
            };
            seen.push(r);
            if r == exact {
                agree += 1;
            } else if attempts >= 3 || r > exact {
                return Err(LinalgError::ShadowMismatch { exact, shadow: seen });
            }
        }
        Ok(seen)
    }
}

/// `dst += k · src`.
pub fn axpy<K: Field>(dst: &mut SparseVec<K>, src: &SparseVec<K>, k: &K) {
    if k.is_zero() {
        return;
    }
    for (i, v) in src {
        let add = v.mul_ref(k);
        match dst.entry(*i) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(add);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &add;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
}

/// Incremental echelon basis; see the module documentation.
#[derive(Debug, Clone)]
pub struct Echelon<K: Field> {
    pivots: BTreeMap<usize, usize>,
    basis: Vec<SparseVec<K>>,
    combos: Option<Vec<SparseVec<K>>>,
}

impl<K: Field> Echelon<K> {
    /// With `track`, every basis vector remembers its expression in the
    /// inserted vectors.
    pub fn new(track: bool) -> Self {
        Echelon { pivots: BTreeMap::new(), basis: Vec::new(), combos: track.then(Vec::new) }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVec<K>] {
        &self.basis
    }

    /// Pivot rows, ascending.
    pub fn pivot_rows(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Number of basis vectors whose pivot row is `< bound`.
    pub fn pivots_below(&self, bound: usize) -> usize {
        self.pivots.range(..bound).count()
    }

    /// Leading-term reduction of `v`; returns the remainder and, when
    /// tracking, the combination subtracted (negated remainder bookkeeping is
    /// folded in: `v = Σ combo_i · inserted_i + remainder` for tracked runs).
    pub fn reduce(&self, mut v: SparseVec<K>, mut combo: Option<SparseVec<K>>) -> (SparseVec<K>, Option<SparseVec<K>>) {
        while let Some((&r, _)) = v.iter().next_back() {
            let Some(&idx) = self.pivots.get(&r) else { break };
            let c = v[&r].clone();
            axpy(&mut v, &self.basis[idx], &-c.clone());
            if let (Some(cb), Some(cs)) = (combo.as_mut(), self.combos.as_ref()) {
                axpy(cb, &cs[idx], &c);
            }
        }
        (v, combo)
    }

    /// Insert `v` (tracked as `combo`). Returns the relation found when `v`
    /// reduces to zero: a combination of inserted vectors summing to zero.
    pub fn insert(&mut self, v: SparseVec<K>, combo: Option<SparseVec<K>>) -> Option<SparseVec<K>> {
        let start = if self.combos.is_some() { Some(SparseVec::new()) } else { None };
        let (mut rest, used) = self.reduce(v, start);
        if rest.is_empty() {
            return match (combo, used) {
                (Some(mut own), Some(used)) => {
                    axpy(&mut own, &used, &-K::one());
                    Some(own)
                }
                _ => None,
            };
        }
        let (&r, lead) = rest.iter().next_back().unwrap();
        let inv = lead.inverse().expect("nonzero pivot");
        for x in rest.values_mut() {
            *x *= &inv;
        }
        if let Some(cs) = self.combos.as_mut() {
            let mut own = combo.unwrap_or_default();
            if let Some(used) = used {
                axpy(&mut own, &used, &-K::one());
            }
            for x in own.values_mut() {
                *x *= &inv;
            }
            cs.push(own);
        }
        self.pivots.insert(r, self.basis.len());
        self.basis.push(rest);
        None
    }

    /// Whether `v` lies in the span.
    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v.clone(), None).0.is_empty()
    }

    /// Expression of `v` in the inserted vectors, when `v` is in the span.
    pub fn express(&self, v: &SparseVec<K>) -> Option<SparseVec<K>> {
        let (rest, combo) = self.reduce(v.clone(), Some(SparseVec::new()));
        if rest.is_empty() {
            combo
        } else {
            None
        }
    }
}

/// Sparse elimination on the columns: repeatedly take the shortest live
/// column, pivot on its cheapest entry (ties: the row shared with the fewest
/// other columns), and clear that row from every other column.
fn markowitz_rank<K: Field>(m: &SparseMatrix<K>) -> usize {
    let mut cols: Vec<SparseVec<K>> = m.cols.clone();
    let mut occ: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m.rows];
    let mut queue: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (j, c) in cols.iter().enumerate() {
        for i in c.keys() {
            occ[*i].insert(j);
        }
        if !c.is_empty() {
            queue.insert((c.len(), j));
        }
    }
    let mut rank = 0;
    while let Some((_, j)) = queue.pop_first() {
        let col = std::mem::take(&mut cols[j]);
        for i in col.keys() {
            occ[*i].remove(&j);
        }
        let (&r, p) = col
            .iter()
            .min_by_key(|(i, v)| (v.cost(), occ[**i].len()))
            .expect("queued columns are nonzero");
        let inv = p.inverse().expect("nonzero pivot");
        rank += 1;
        let others: Vec<usize> = occ[r].iter().copied().collect();
        for k in others {
            let target = &mut cols[k];
            queue.remove(&(target.len(), k));
            let f = -target[&r].mul_ref(&inv);
            for (i, v) in &col {
                let add = v.mul_ref(&f);
                match target.entry(*i) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(add);
                        occ[*i].insert(k);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += &add;
                        if e.get().is_zero() {
                            e.remove();
                            occ[*i].remove(&k);
                        }
                    }
                }
            }
            if !target.is_empty() {
                queue.insert((target.len(), k));
            }
        }
    }
    rank
}

/// `dim Z − rank` of the image of `incoming` expressed in the basis `z` of a
/// subspace containing it.
pub fn quotient_dim<K: Field>(incoming: &SparseMatrix<K>, z: &[SparseVec<K>]) -> Result<usize, LinalgError> {
    let mut ez = Echelon::new(true);
    for (i, v) in z.iter().enumerate() {
        ez.insert(v.clone(), Some(SparseVec::from([(i, K::one())])));
    }
    let mut coords = Echelon::new(false);
    for c in incoming.cols() {
        let x = ez.express(c).ok_or(LinalgError::NotContained)?;
        coords.insert(x, None);
    }
    Ok(ez.rank() - coords.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use num_traits::One;

    type K = ScalarK;

    fn k(n: i64) -> K {
        K::from_int(n)
    }

    #[test]
    fn identity_rank() {
        assert_eq!(SparseMatrix::<K>::identity(3).rank(), 3);
        assert_eq!(SparseMatrix::<K>::identity(3).rank_with(PivotStrategy::Markowitz), 3);
    }

    #[test]
    fn kernel_of_row() {
        let m = SparseMatrix::from_dense(&[vec![K::one() - K::q_pow(2), k(0)]]);
        let ker = m.kernel_basis();
        assert_eq!(ker, vec![SparseVec::from([(1, k(1))])]);
    }

    #[test]
    fn witnesses_solve() {
        let m = SparseMatrix::from_dense(&[vec![k(1), K::q(), k(0)], vec![k(2), k(0), K::s()], vec![k(3), K::q(), K::s()]]);
        let v = SparseVec::from([(0, k(5)), (1, K::s()), (2, k(5) + K::s())]);
        let x = m.in_image(&v).unwrap().unwrap();
        assert_eq!(m.mul_vec(&x), v);
        let w = SparseVec::from([(0, k(1))]);
        assert!(m.in_image(&w).unwrap().is_none());
        for z in m.kernel_basis() {
            assert!(m.mul_vec(&z).is_empty());
        }
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn quotient_dims() {
        let z = vec![SparseVec::from([(0, k(1))]), SparseVec::from([(1, k(1))])];
        let b = SparseMatrix::from_dense(&[vec![k(1)], vec![k(0)]]);
        assert_eq!(quotient_dim(&b, &z).unwrap(), 1);
        let full = SparseMatrix::<K>::identity(2);
        assert_eq!(quotient_dim(&full, &z).unwrap(), 0);
        let outside = SparseMatrix::from_dense(&[vec![k(0)], vec![k(0)], vec![k(1)]]);
        assert_eq!(quotient_dim(&outside, &z), Err(LinalgError::NotContained));
    }

    #[test]
    fn triplets_round_trip() {
        let m = SparseMatrix::from_dense(&[vec![K::q_pow(-2), k(0)], vec![k(0), (K::one() + K::s()) / K::q()]]);
        let text = m.to_triplet_text();
        assert_eq!(SparseMatrix::from_triplet_text(&text).unwrap(), m);
    }

    #[test]
    fn shadow_agrees() {
        let m = SparseMatrix::from_dense(&[vec![K::q(), k(1)], vec![K::q_pow(2), K::q()]]);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        assert_eq!(m.rank(), 1);
        assert!(m.confirm_rank(1, &mut rng).is_ok());
    }
}
