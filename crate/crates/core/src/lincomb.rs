//! Finitely supported linear combinations with field coefficients.

use std::collections::btree_map::{self, BTreeMap};

use crate::coeff::{FieldElem, Monomial};

/// `Σ c_k k` with no zero coefficients stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, FieldElem>,
}

impl<K: Ord + Clone> Default for LinComb<K> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(k: K) -> Self {
        let mut t = BTreeMap::new();
        t.insert(k, FieldElem::one());
        LinComb { terms: t }
    }

    pub fn term(k: K, c: FieldElem) -> Self {
        let mut out = Self::zero();
        out.add_term(k, c);
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

    pub fn iter(&self) -> btree_map::Iter<'_, K, FieldElem> {
        self.terms.iter()
    }

    pub fn coeff(&self, k: &K) -> FieldElem {
        self.terms.get(k).cloned().unwrap_or_else(FieldElem::zero)
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, k: K, c: FieldElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &FieldElem) {
        if c.is_zero() {
            return;
        }
        for (k, x) in &other.terms {
            self.add_term(k.clone(), x.mul(c));
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (k, x) in &other.terms {
            self.add_term(k.clone(), x.clone());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &FieldElem::from_int(-1));
        out
    }

    pub fn scale(&self, c: &FieldElem) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(k, x)| (k.clone(), x.mul(c))).collect(),
        }
    }

    pub fn scale_monomial(&self, m: &Monomial) -> Self {
        LinComb {
            terms: self
                .terms
                .iter()
                .map(|(k, x)| (k.clone(), x.scale_monomial(m)))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        LinComb {
            terms: self.terms.iter().map(|(k, x)| (k.clone(), x.neg())).collect(),
        }
    }

    /// Applies `f` to every key, merging collisions.
    pub fn map_keys<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> L) -> LinComb<L> {
        let mut out = LinComb::zero();
        for (k, x) in &self.terms {
            out.add_term(f(k), x.clone());
        }
        out
    }

    /// Applies a linear map given on basis elements.
    pub fn map_linear<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<L>) -> LinComb<L> {
        let mut out = LinComb::zero();
        for (k, x) in &self.terms {
            out.add_scaled(&f(k), x);
        }
        out
    }

    pub fn map_coeffs(&self, mut f: impl FnMut(&FieldElem) -> FieldElem) -> Self {
        let mut out = Self::zero();
        for (k, x) in &self.terms {
            out.add_term(k.clone(), f(x));
        }
        out
    }
}

impl<K: Ord + Clone> FromIterator<(K, FieldElem)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, FieldElem)>>(it: I) -> Self {
        let mut out = LinComb::zero();
        for (k, c) in it {
            out.add_term(k, c);
        }
        out
    }
}

impl<'a, K: Ord> IntoIterator for &'a LinComb<K> {
    type Item = (&'a K, &'a FieldElem);
    type IntoIter = btree_map::Iter<'a, K, FieldElem>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}
