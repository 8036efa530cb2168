//! Finite linear combinations `Σ k_t · t` with coefficients in a [`Field`].
//!
//! Backed by a `BTreeMap`, so iteration order (and hence every printed or
//! serialized form) is deterministic. Zero coefficients are never stored.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;

use crate::field::Field;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K, T: Ord> {
    terms: BTreeMap<T, K>,
}

impl<K: Field, T: Ord + Clone> Default for LinComb<K, T> {
    fn default() -> Self {
        LinComb::zero()
    }
}

impl<K: Field, T: Ord + Clone> LinComb<K, T> {
    pub fn zero() -> Self {
        LinComb { terms: BTreeMap::new() }
    }

    pub fn basis(t: T) -> Self {
        LinComb::term(t, K::one())
    }

    pub fn term(t: T, k: K) -> Self {
        let mut out = LinComb::zero();
        out.add_term(t, k);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (T, K)>>(it: I) -> Self {
        let mut out = LinComb::zero();
        for (t, k) in it {
            out.add_term(t, k);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, T, K> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, T, K> {
        self.terms.keys()
    }

    pub fn coeff(&self, t: &T) -> K {
        self.terms.get(t).cloned().unwrap_or_else(K::zero)
    }

    pub fn get(&self, t: &T) -> Option<&K> {
        self.terms.get(t)
    }

    pub fn add_term(&mut self, t: T, k: K) {
        if k.is_zero() {
            return;
        }
        match self.terms.entry(t) {
            btree_map::Entry::Vacant(e) => {
                e.insert(k);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &k;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_term_ref(&mut self, t: &T, k: &K) {
        if k.is_zero() {
            return;
        }
        if let Some(v) = self.terms.get_mut(t) {
            *v += k;
            if v.is_zero() {
                self.terms.remove(t);
            }
        } else {
            self.terms.insert(t.clone(), k.clone());
        }
    }

    /// `self += k · other`.
    pub fn add_scaled(&mut self, other: &Self, k: &K) {
        if k.is_zero() {
            return;
        }
        let unit = k.is_one();
        for (t, v) in &other.terms {
            if unit {
                self.add_term_ref(t, v);
            } else {
                self.add_term_ref(t, &v.mul_ref(k));
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &K::one());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-K::one());
        out
    }

    pub fn neg(&self) -> Self {
        LinComb { terms: self.terms.iter().map(|(t, k)| (t.clone(), -k.clone())).collect() }
    }

    pub fn scale(&self, k: &K) -> Self {
        if k.is_zero() {
            return LinComb::zero();
        }
        LinComb { terms: self.terms.iter().map(|(t, v)| (t.clone(), v.mul_ref(k))).collect() }
    }

    /// Rescale every term by a factor depending on its key.
    pub fn scale_by<F: Fn(&T) -> K>(&self, f: F) -> Self {
        LinComb::from_terms(self.terms.iter().map(|(t, v)| (t.clone(), v.mul_ref(&f(t)))))
    }

    /// Keep only the terms satisfying `keep`.
    pub fn filter<F: Fn(&T) -> bool>(&self, keep: F) -> Self {
        LinComb {
            terms: self
                .terms
                .iter()
                .filter(|(t, _)| keep(t))
                .map(|(t, k)| (t.clone(), k.clone()))
                .collect(),
        }
    }

    /// Linear extension of a map on basis elements.
    pub fn map_linear<U: Ord + Clone, F: FnMut(&T) -> LinComb<K, U>>(&self, mut f: F) -> LinComb<K, U> {
        let mut out = LinComb::zero();
        for (t, k) in &self.terms {
            out.add_scaled(&f(t), k);
        }
        out
    }

    /// Apply a linear functional given on basis elements.
    pub fn pair<F: FnMut(&T) -> K>(&self, mut f: F) -> K {
        let mut acc = K::zero();
        for (t, k) in &self.terms {
            let v = f(t);
            if !v.is_zero() {
                acc += &v.mul_ref(k);
            }
        }
        acc
    }

    pub fn into_terms(self) -> BTreeMap<T, K> {
        self.terms
    }

    /// Largest key, if any.
    pub fn last_key(&self) -> Option<&T> {
        self.terms.keys().next_back()
    }
}

impl<K: Field, T: Ord + Clone> FromIterator<(T, K)> for LinComb<K, T> {
    fn from_iter<I: IntoIterator<Item = (T, K)>>(iter: I) -> Self {
        LinComb::from_terms(iter)
    }
}

impl<'a, K, T: Ord> IntoIterator for &'a LinComb<K, T> {
    type Item = (&'a T, &'a K);
    type IntoIter = btree_map::Iter<'a, T, K>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Field, T: Ord + Clone + fmt::Display> fmt::Display for LinComb<K, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (t, k)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if k.is_one() {
                write!(f, "{t}")?;
            } else {
                write!(f, "({k})*{t}")?;
            }
        }
        Ok(())
    }
}

impl<K: Field, T: Ord + Clone + fmt::Debug> fmt::Debug for LinComb<K, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn r(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    #[test]
    fn cancellation_removes_terms() {
        let mut x: LinComb<Rational, u32> = LinComb::term(1, r(2));
        x.add_term(1, r(-2));
        assert!(x.is_zero());
        x.add_term(3, r(0));
        assert!(x.is_zero());
    }

    #[test]
    fn linear_maps_and_pairings() {
        let x: LinComb<Rational, u32> = LinComb::from_terms([(1, r(2)), (2, r(3))]);
        let y = x.map_linear(|t| LinComb::term(t * 10, r(*t as i64)));
        assert_eq!(y.coeff(&10), r(2));
        assert_eq!(y.coeff(&20), r(6));
        assert_eq!(x.pair(|t| r(*t as i64)), r(8));
    }
}
