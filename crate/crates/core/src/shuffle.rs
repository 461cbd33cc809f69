//! Words, the free algebra and the quantum shuffle product.

use std::collections::HashMap;

use crate::coeff::qnum::{qbinom, qfact};
use crate::coeff::{FieldElem, Monomial, ParamMatrix};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;

/// A word over the index set, letters 0-based.
pub type Word = Vec<u8>;

/// Element of the free algebra on words.
pub type ShuffleElem = LinComb<Word>;

/// Letter counts of a word.
pub fn degree(w: &[u8], rank: usize) -> Vec<i64> {
    let mut d = vec![0; rank];
    for &c in w {
        d[c as usize] += 1;
    }
    d
}

pub fn word(letters: &[u8]) -> ShuffleElem {
    ShuffleElem::basis(letters.to_vec())
}

pub fn unit() -> ShuffleElem {
    ShuffleElem::basis(Vec::new())
}

/// All words with the given letter counts, in lexicographic order.
pub fn words_of_degree(beta: &[i64]) -> Vec<Word> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    let mut left = beta.to_vec();
    fn go(left: &mut [i64], cur: &mut Word, out: &mut Vec<Word>) {
        if left.iter().all(|&x| x == 0) {
            out.push(cur.clone());
            return;
        }
        for i in 0..left.len() {
            if left[i] > 0 {
                left[i] -= 1;
                cur.push(i as u8);
                go(left, cur, out);
                cur.pop();
                left[i] += 1;
            }
        }
    }
    go(&mut left, &mut cur, &mut out);
    out
}

/// Concatenation product.
pub fn concat(x: &ShuffleElem, y: &ShuffleElem) -> ShuffleElem {
    let mut out = ShuffleElem::zero();
    for (a, ca) in x {
        for (b, cb) in y {
            let mut w = a.clone();
            w.extend_from_slice(b);
            out.add_term(w, ca.mul(cb));
        }
    }
    out
}

/// Evaluates shuffle products, caching word-pair results for the lifetime
/// of the value.
pub struct Shuffler<'a> {
    p: &'a ParamMatrix,
    cache: HashMap<(Word, Word), ShuffleElem>,
}

impl<'a> Shuffler<'a> {
    pub fn new(p: &'a ParamMatrix) -> Self {
        Shuffler { p, cache: HashMap::new() }
    }

    /// `q_{α_i, |b|}` as a monomial.
    fn q_letter_word(&self, i: u8, b: &[u8]) -> Monomial {
        b.iter()
            .fold(Monomial::one(), |m, &j| m.mul(self.p.q(i as usize, j as usize)))
    }

    /// `x w_i ⋆ y w_j = (x w_i ⋆ y) w_j + q_{α_i, |y w_j|} (x ⋆ y w_j) w_i`.
    pub fn words(&mut self, a: &[u8], b: &[u8]) -> ShuffleElem {
        if a.is_empty() {
            return ShuffleElem::basis(b.to_vec());
        }
        if b.is_empty() {
            return ShuffleElem::basis(a.to_vec());
        }
        let key = (a.to_vec(), b.to_vec());
        if let Some(r) = self.cache.get(&key) {
            return r.clone();
        }
        let (x, i) = (&a[..a.len() - 1], a[a.len() - 1]);
        let (y, j) = (&b[..b.len() - 1], b[b.len() - 1]);
        let left = self.words(a, y).map_keys(|w| append(w, j));
        let q = self.q_letter_word(i, b);
        let right = self.words(x, b).map_keys(|w| append(w, i));
        let mut out = left;
        out.add_assign(&right.scale_monomial(&q));
        self.cache.insert(key, out.clone());
        out
    }

    pub fn mul(&mut self, x: &ShuffleElem, y: &ShuffleElem) -> ShuffleElem {
        let mut out = ShuffleElem::zero();
        for (a, ca) in x {
            for (b, cb) in y {
                let s = self.words(a, b);
                out.add_scaled(&s, &ca.mul(cb));
            }
        }
        out
    }

    /// `w_i^{⋆m}`.
    pub fn power(&mut self, i: u8, m: u32) -> ShuffleElem {
        let wi = word(&[i]);
        (0..m).fold(unit(), |acc, _| self.mul(&acc, &wi))
    }
}

fn append(w: &[u8], c: u8) -> Word {
    let mut v = w.to_vec();
    v.push(c);
    v
}

pub fn shuffle(p: &ParamMatrix, x: &ShuffleElem, y: &ShuffleElem) -> ShuffleElem {
    Shuffler::new(p).mul(x, y)
}

pub fn shuffle_power(p: &ParamMatrix, i: u8, m: u32) -> ShuffleElem {
    Shuffler::new(p).power(i, m)
}

/// `D_i`: strips a trailing letter `i`, kills other words.
pub fn delete_last(i: u8, x: &ShuffleElem) -> ShuffleElem {
    let mut out = ShuffleElem::zero();
    for (w, c) in x {
        if w.last() == Some(&i) {
            out.add_term(w[..w.len() - 1].to_vec(), c.clone());
        }
    }
    out
}

/// Strips a leading letter `i`, kills other words.
pub fn delete_first(i: u8, x: &ShuffleElem) -> ShuffleElem {
    let mut out = ShuffleElem::zero();
    for (w, c) in x {
        if w.first() == Some(&i) {
            out.add_term(w[1..].to_vec(), c.clone());
        }
    }
    out
}

fn check_pair(p: &ParamMatrix, i: u8, j: u8) -> Result<()> {
    let n = p.rank();
    if i == j {
        return Err(Error::Domain("Serre elements need i != j".into()));
    }
    if i as usize >= n || j as usize >= n {
        return Err(Error::Domain(format!("index out of range for rank {n}")));
    }
    Ok(())
}

/// Coefficients `(-1)^k [N,k]_{q_ii} q_ii^{k(k-1)/2} q_ij^k`, `N = 1 - a_ij`,
/// of the Serre sums.
pub fn serre_coefficients(p: &ParamMatrix, i: usize, j: usize) -> Vec<FieldElem> {
    let nn = (1 - p.datum().a[i][j]) as u32;
    let qii = p.q_elem(i, i);
    (0..=nn)
        .map(|k| {
            let k64 = k as i64;
            let m = p.q(i, i).powi(k64 * (k64 - 1) / 2).mul(&p.q(i, j).powi(k64));
            let c = qbinom(nn, k, &qii).expect("k <= N").scale_monomial(&m);
            if k % 2 == 1 {
                c.neg()
            } else {
                c
            }
        })
        .collect()
}

/// `Σ_k c_k w_i^{⋆(N-k)} ⋆ w_j ⋆ w_i^{⋆k}`; vanishes identically.
pub fn serre_shuffle(p: &ParamMatrix, i: u8, j: u8) -> Result<ShuffleElem> {
    check_pair(p, i, j)?;
    let coeffs = serre_coefficients(p, i as usize, j as usize);
    let nn = coeffs.len() as u32 - 1;
    let mut sh = Shuffler::new(p);
    let wj = word(&[j]);
    let mut out = ShuffleElem::zero();
    for (k, c) in coeffs.iter().enumerate() {
        let left = sh.power(i, nn - k as u32);
        let right = sh.power(i, k as u32);
        let lw = sh.mul(&left, &wj);
        let t = sh.mul(&lw, &right);
        out.add_scaled(&t, c);
    }
    Ok(out)
}

/// Closed form of `w_i^{⋆m} ⋆ w_j ⋆ w_i^{⋆l}` as a double sum over words
/// `w_i^a w_j w_i^b`, no shuffle recursion involved.
pub fn mixed_power_closed_form(p: &ParamMatrix, i: u8, j: u8, m: u32, l: u32) -> Result<ShuffleElem> {
    check_pair(p, i, j)?;
    let (iu, ju) = (i as usize, j as usize);
    let qii = p.q_elem(iu, iu);
    let mut out = ShuffleElem::zero();
    for k in 0..=m {
        for t in 0..=l {
            let mono = p
                .q(iu, ju)
                .powi(k as i64)
                .mul(&p.q(ju, iu).powi((l - t) as i64))
                .mul(&p.q(iu, iu).powi((k * (l - t)) as i64));
            let c = qbinom(m, k, &qii)?
                .mul(&qbinom(l, t, &qii)?)
                .mul(&qfact(m - k + l - t, &qii))
                .mul(&qfact(k + t, &qii))
                .scale_monomial(&mono);
            let mut w = vec![i; (m - k + l - t) as usize];
            w.push(j);
            w.extend(std::iter::repeat(i).take((k + t) as usize));
            out.add_term(w, c);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::CartanDatum;

    fn params(t: &str) -> ParamMatrix {
        ParamMatrix::generic(&CartanDatum::standard(t).unwrap())
    }

    #[test]
    fn two_letters() {
        let p = params("A2");
        let s = shuffle(&p, &word(&[0]), &word(&[1]));
        let mut expect = word(&[0, 1]);
        expect.add_term(vec![1, 0], p.q_elem(0, 1));
        assert_eq!(s, expect);
        let s = shuffle(&p, &word(&[0]), &word(&[0]));
        assert_eq!(s, word(&[0, 0]).scale(&FieldElem::one().add(&p.q_elem(0, 0))));
        assert_eq!(shuffle(&p, &unit(), &s), s);
    }

    #[test]
    fn powers_are_factorials() {
        let p = params("B2");
        for m in 0..=3u32 {
            let expect = word(&vec![1u8; m as usize]).scale(&qfact(m, &p.q_elem(1, 1)));
            assert_eq!(shuffle_power(&p, 1, m), expect);
        }
    }

    #[test]
    fn delete_operators() {
        let x = word(&[1, 0]);
        assert_eq!(delete_last(0, &x), word(&[1]));
        assert!(delete_last(0, &word(&[0, 1])).is_zero());
        assert_eq!(delete_first(0, &word(&[0, 1])), word(&[1]));
        assert!(delete_first(0, &x).is_zero());
        assert_eq!(delete_first(0, &word(&[0])), unit());
    }

    #[test]
    fn words_enumerated() {
        assert_eq!(words_of_degree(&[2, 1]), vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
        assert_eq!(words_of_degree(&[0, 0]), vec![Vec::<u8>::new()]);
    }

    #[test]
    fn serre_rejects_equal_indices() {
        let p = params("A2");
        assert!(serre_shuffle(&p, 0, 0).is_err());
    }
}
