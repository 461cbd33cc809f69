//! The embedding `Γ` of the positive half into the shuffle algebra.

use super::{partial_right_free, FreeElem};
use crate::coeff::ParamMatrix;
use crate::shuffle::{degree, words_of_degree, word, ShuffleElem, Shuffler};

/// `Γ(e_{i1}⋯e_{ik}) = w_{i1} ⋆ ⋯ ⋆ w_{ik}`, extended linearly.
pub fn gamma_embed(p: &ParamMatrix, x: &FreeElem) -> ShuffleElem {
    let mut sh = Shuffler::new(p);
    let mut out = ShuffleElem::zero();
    for (w, c) in x {
        let mut acc = crate::shuffle::unit();
        for &l in w {
            acc = sh.mul(&acc, &word(&[l]));
        }
        out.add_scaled(&acc, c);
    }
    out
}

/// `Γ(x) = Σ_w ∂̂_w(x) w` with `∂̂_{w[i1..ik]} = ∂̂_{i1} ⋯ ∂̂_{ik}`, computed
/// from the skew derivations alone.
pub fn gamma_by_derivations(p: &ParamMatrix, x: &FreeElem) -> ShuffleElem {
    let n = p.rank();
    let mut degs: Vec<Vec<i64>> = x.keys().map(|w| degree(w, n)).collect();
    degs.sort();
    degs.dedup();
    let mut out = ShuffleElem::zero();
    for beta in degs {
        let part: FreeElem = x
            .iter()
            .filter(|(w, _)| degree(w, n) == beta)
            .map(|(w, c)| (w.clone(), c.clone()))
            .collect();
        for w in words_of_degree(&beta) {
            let mut y = part.clone();
            for &l in w.iter().rev() {
                y = partial_right_free(p, l as usize, &y);
                if y.is_zero() {
                    break;
                }
            }
            out.add_term(w, y.coeff(&Vec::new()));
        }
    }
    out
}
