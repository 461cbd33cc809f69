//! Simple highest-weight modules as quotients of the free Verma module by
//! the radical of the contravariant form.

use std::collections::{BTreeMap, HashMap};

use super::{r5_constant, WeightModule};
use crate::coeff::monomial::Rat;
use crate::coeff::{FieldElem, ParamMatrix};
use crate::error::{Error, Result};
use crate::linalg::FMatrix;
use crate::shuffle::{degree, words_of_degree, Word};

struct FormEval<'a> {
    p: &'a ParamMatrix,
    lambda: Vec<Rat>,
    kappa: Vec<FieldElem>,
    memo: HashMap<(Word, Word), FieldElem>,
}

impl<'a> FormEval<'a> {
    fn new(p: &'a ParamMatrix, lambda: &[Rat]) -> Self {
        let kappa = (0..p.rank()).map(|i| r5_constant(p, i)).collect();
        FormEval { p, lambda: lambda.to_vec(), kappa, memo: HashMap::new() }
    }

    /// `e_i f_K v_λ` as a combination of `f_{K'} v_λ`.
    fn e_apply(&self, i: usize, k: &[u8]) -> Vec<(Word, FieldElem)> {
        let n = self.p.rank();
        let alpha = self.p.datum().simple_root(i);
        let mut out = Vec::new();
        for pos in 0..k.len() {
            if k[pos] as usize != i {
                continue;
            }
            let below = degree(&k[pos + 1..], n);
            let mu: Vec<Rat> = self.lambda.iter().zip(&below).map(|(l, &b)| l - Rat::from_integer(b)).collect();
            let w = FieldElem::monomial(self.p.q_pair(&alpha, &mu));
            let wp = FieldElem::monomial(self.p.q_pair(&mu, &alpha).inv());
            let c = self.kappa[i].mul(&w.sub(&wp));
            if c.is_zero() {
                continue;
            }
            let mut rest = k[..pos].to_vec();
            rest.extend_from_slice(&k[pos + 1..]);
            out.push((rest, c));
        }
        out
    }

    /// `(f_J v_λ, f_K v_λ)`: the `v_λ`-coefficient of `Ψ(f_J) f_K v_λ`.
    fn form(&mut self, j: &[u8], k: &[u8]) -> FieldElem {
        if j.len() != k.len() {
            return FieldElem::zero();
        }
        if j.is_empty() {
            return FieldElem::one();
        }
        let key = (j.to_vec(), k.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut acc = FieldElem::zero();
        for (rest, c) in self.e_apply(j[0] as usize, k) {
            let v = self.form(&j[1..], &rest);
            if !v.is_zero() {
                acc = acc.add(&c.mul(&v));
            }
        }
        self.memo.insert(key, acc.clone());
        acc
    }

    fn matrix(&mut self, rows: &[Word], cols: &[Word]) -> FMatrix {
        let mut m = FMatrix::zeros(rows.len(), cols.len());
        for (r, a) in rows.iter().enumerate() {
            for (c, b) in cols.iter().enumerate() {
                m.set(r, c, self.form(a, b));
            }
        }
        m
    }
}

/// The contravariant form on all f-words of degree `beta`, for highest
/// weight `lambda` given in root coordinates.
pub fn contravariant_form(p: &ParamMatrix, lambda: &[Rat], beta: &[i64]) -> (Vec<Word>, FMatrix) {
    let words = words_of_degree(beta);
    let m = FormEval::new(p, lambda).matrix(&words, &words);
    (words, m)
}

struct Component {
    rows: Vec<Word>,
    basis: Vec<Word>,
    inv: FMatrix,
    offset: usize,
}

/// `L(λ)` for `λ` in fundamental-weight coordinates, built degree by degree
/// up to height `depth`.
pub fn highest_weight_module(p: &ParamMatrix, lambda: &[i64], depth: usize) -> Result<WeightModule> {
    let datum = p.datum();
    let n = p.rank();
    if lambda.len() != n {
        return Err(Error::Domain(format!("weight has {} coordinates, rank is {n}", lambda.len())));
    }
    let lroot = datum.weight_to_root(&lambda.iter().map(|&x| Rat::from_integer(x)).collect::<Vec<_>>())?;
    let mut ev = FormEval::new(p, &lroot);
    if let Some(i) = lambda.iter().position(|&x| x < 0) {
        let alive = (1..=depth).all(|m| {
            let w = vec![i as u8; m];
            !ev.form(&w, &w).is_zero()
        });
        return Err(Error::Domain(if alive {
            format!("λ is not dominant: f_{} is not nilpotent on v_λ up to depth {depth}", i + 1)
        } else {
            format!("λ is not dominant at index {}", i + 1)
        }));
    }
    let mut comps: BTreeMap<Vec<i64>, Component> = BTreeMap::new();
    let zero = vec![0i64; n];
    comps.insert(
        zero.clone(),
        Component { rows: vec![vec![]], basis: vec![vec![]], inv: FMatrix::identity(1), offset: 0 },
    );
    let mut order: Vec<Vec<i64>> = vec![zero];
    let mut level: Vec<Vec<i64>> = order.clone();
    let mut total = 1;
    let mut h = 0;
    while !level.is_empty() {
        h += 1;
        let mut cands: Vec<Vec<i64>> = Vec::new();
        for b in &level {
            for i in 0..n {
                let mut c = b.clone();
                c[i] += 1;
                if !cands.contains(&c) {
                    cands.push(c);
                }
            }
        }
        cands.sort();
        let mut next = Vec::new();
        for beta in cands {
            let words = words_of_degree(&beta);
            let s = ev.matrix(&words, &words);
            let cols = s.pivot_columns();
            if cols.is_empty() {
                continue;
            }
            if h > depth {
                return Err(Error::Domain(format!(
                    "depth {depth} does not cover the weight string (nonzero component at height {h})"
                )));
            }
            let rows = s.transpose().pivot_columns();
            let inv = s
                .select(&rows, &cols)
                .inverse()
                .ok_or_else(|| Error::Internal("contravariant minor is singular".into()))?;
            let comp = Component {
                rows: rows.iter().map(|&r| words[r].clone()).collect(),
                basis: cols.iter().map(|&c| words[c].clone()).collect(),
                inv,
                offset: total,
            };
            total += comp.basis.len();
            comps.insert(beta.clone(), comp);
            order.push(beta.clone());
            next.push(beta);
        }
        level = next;
    }

    let coords = |ev: &mut FormEval<'_>, comp: &Component, x: &[u8]| -> Vec<FieldElem> {
        let rhs: Vec<FieldElem> = comp.rows.iter().map(|r| ev.form(r, x)).collect();
        comp.inv.apply(&rhs)
    };
    let mut e = vec![FMatrix::zeros(total, total); n];
    let mut f = vec![FMatrix::zeros(total, total); n];
    let mut weights = vec![Vec::new(); total];
    for beta in &order {
        let comp = &comps[beta];
        for (k, w) in comp.basis.iter().enumerate() {
            let col = comp.offset + k;
            weights[col] = lroot.iter().zip(beta).map(|(l, &b)| l - Rat::from_integer(b)).collect();
            for i in 0..n {
                let mut up = beta.clone();
                up[i] += 1;
                if let Some(target) = comps.get(&up) {
                    let mut word = vec![i as u8];
                    word.extend_from_slice(w);
                    for (r, c) in coords(&mut ev, target, &word).into_iter().enumerate() {
                        f[i].set(target.offset + r, col, c);
                    }
                }
                if beta[i] == 0 {
                    continue;
                }
                let mut down = beta.clone();
                down[i] -= 1;
                if let Some(target) = comps.get(&down) {
                    let mut acc = vec![FieldElem::zero(); target.basis.len()];
                    for (rest, c) in ev.e_apply(i, w) {
                        for (slot, v) in coords(&mut ev, target, &rest).into_iter().enumerate() {
                            acc[slot] = acc[slot].add(&v.mul(&c));
                        }
                    }
                    for (r, c) in acc.into_iter().enumerate() {
                        e[i].set(target.offset + r, col, c);
                    }
                }
            }
        }
    }
    Ok(WeightModule { params: p.clone(), weights, e, f, highest: Some(lambda.to_vec()) })
}
