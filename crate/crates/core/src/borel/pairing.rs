//! The skew Hopf pairing between the Borel halves, Gram blocks and dual bases.

use std::collections::HashMap;

use super::{generator_pairing, partial_left_free, BorelElem, FreeElem, Side, Toral};
use crate::check::Outcome;
use crate::coeff::{FieldElem, ParamMatrix};
use crate::error::{Error, Result};
use crate::linalg::FMatrix;
use crate::shuffle::{degree, words_of_degree, Word};

pub const DEFAULT_HEIGHT_BOUND: u32 = 6;

/// All pairings `<f_J, e_K>` between words of one degree.
#[derive(Clone, Debug, PartialEq)]
pub struct GramBlock {
    pub beta: Toral,
    /// f-words, indexing rows.
    pub rows: Vec<Word>,
    /// e-words, indexing columns.
    pub cols: Vec<Word>,
    pub matrix: FMatrix,
    pub rank: usize,
}

/// A word basis `u_k = e_{K_k}` of the degree-β component and the dual
/// family `v_k` in the negative half, `<v_k, u_l> = δ_kl`.
#[derive(Clone, Debug, PartialEq)]
pub struct DualBases {
    pub beta: Toral,
    pub basis: Vec<Word>,
    pub dual: Vec<FreeElem>,
}

impl DualBases {
    /// `Θ_β = Σ_k v_k ⊗ u_k`.
    pub fn theta(&self) -> Vec<(FreeElem, Word)> {
        self.dual.iter().cloned().zip(self.basis.iter().cloned()).collect()
    }
}

/// Evaluates the pairing with memoization; Gram blocks and dual bases are
/// computed once per degree.
pub struct PairingEngine<'a> {
    p: &'a ParamMatrix,
    c: Vec<FieldElem>,
    bound: u32,
    memo: HashMap<(Word, Word), FieldElem>,
    grams: HashMap<Toral, GramBlock>,
    duals: HashMap<Toral, DualBases>,
}

fn same_degree(a: &[u8], b: &[u8]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    x.sort_unstable();
    y.sort_unstable();
    x == y
}

fn concat_free(x: &FreeElem, y: &FreeElem) -> FreeElem {
    crate::shuffle::concat(x, y)
}

impl<'a> PairingEngine<'a> {
    pub fn new(p: &'a ParamMatrix) -> Self {
        PairingEngine::with_bound(p, DEFAULT_HEIGHT_BOUND)
    }

    pub fn with_bound(p: &'a ParamMatrix, bound: u32) -> Self {
        let c = (0..p.rank()).map(|i| generator_pairing(p, i)).collect();
        PairingEngine {
            p,
            c,
            bound,
            memo: HashMap::new(),
            grams: HashMap::new(),
            duals: HashMap::new(),
        }
    }

    pub fn params(&self) -> &'a ParamMatrix {
        self.p
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    /// `<f_J, e_K>` by peeling `f_{j1}` from the left:
    /// `<f_i y, x> = (q_ii/(1−q_ii)) <y, _i∂̂ x>`.
    pub fn words(&mut self, fj: &[u8], ek: &[u8]) -> FieldElem {
        if !same_degree(fj, ek) {
            return FieldElem::zero();
        }
        if fj.is_empty() {
            return FieldElem::one();
        }
        let key = (fj.to_vec(), ek.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let i = fj[0] as usize;
        let d = partial_left_free(self.p, i, &FreeElem::basis(ek.to_vec()));
        let mut acc = FieldElem::zero();
        for (w, c) in &d {
            let v = self.words(&fj[1..], w);
            acc = acc.add(&c.mul(&v));
        }
        let out = acc.mul(&self.c[i]);
        self.memo.insert(key, out.clone());
        out
    }

    /// `<f_J, e_K>` by peeling `f_{jk}` from the right:
    /// `<y f_i, x> = (q_ii/(1−q_ii)) <y, ∂̂_i x>`. Not memoized.
    pub fn words_right(&self, fj: &[u8], ek: &[u8]) -> FieldElem {
        if !same_degree(fj, ek) {
            return FieldElem::zero();
        }
        if fj.is_empty() {
            return FieldElem::one();
        }
        let i = fj[fj.len() - 1] as usize;
        let d = super::partial_right_free(self.p, i, &FreeElem::basis(ek.to_vec()));
        let mut acc = FieldElem::zero();
        for (w, c) in &d {
            acc = acc.add(&c.mul(&self.words_right(&fj[..fj.len() - 1], w)));
        }
        acc.mul(&self.c[i])
    }

    /// Bilinear extension to word combinations (f-side first).
    pub fn pair_free(&mut self, y: &FreeElem, x: &FreeElem) -> FieldElem {
        let mut acc = FieldElem::zero();
        for (fj, cy) in y {
            for (ek, cx) in x {
                let v = self.words(fj, ek);
                if !v.is_zero() {
                    acc = acc.add(&cy.mul(cx).mul(&v));
                }
            }
        }
        acc
    }

    /// `<f_J ω'_μ, e_K ω_ν> = q_{νμ} <f_J, e_K>`.
    pub fn pair(&mut self, y: &BorelElem, x: &BorelElem) -> Result<FieldElem> {
        if y.side() != Side::Neg || x.side() != Side::Pos {
            return Err(Error::Domain("pairing takes a negative then a positive element".into()));
        }
        let mut acc = FieldElem::zero();
        for ((fj, mu), cy) in y.terms() {
            for ((ek, nu), cx) in x.terms() {
                let v = self.words(fj, ek);
                if !v.is_zero() {
                    let m = self.p.q_pair_int(nu, mu);
                    acc = acc.add(&cy.mul(cx).mul(&v).scale_monomial(&m));
                }
            }
        }
        Ok(acc)
    }

    fn check_degree(&self, beta: &[i64]) -> Result<()> {
        if beta.len() != self.p.rank() || beta.iter().any(|&b| b < 0) {
            return Err(Error::Domain(format!("{beta:?} is not in the positive root cone")));
        }
        let h: i64 = beta.iter().sum();
        if h > self.bound as i64 {
            return Err(Error::Domain(format!(
                "degree height {h} exceeds the configured bound {}",
                self.bound
            )));
        }
        Ok(())
    }

    pub fn gram(&mut self, beta: &[i64]) -> Result<GramBlock> {
        self.check_degree(beta)?;
        if let Some(g) = self.grams.get(beta) {
            return Ok(g.clone());
        }
        let words = words_of_degree(beta);
        let mut m = FMatrix::zeros(words.len(), words.len());
        for (r, fj) in words.iter().enumerate() {
            for (c, ek) in words.iter().enumerate() {
                m.set(r, c, self.words(fj, ek));
            }
        }
        let rank = m.rank();
        let g = GramBlock { beta: beta.to_vec(), rows: words.clone(), cols: words, matrix: m, rank };
        self.grams.insert(beta.to_vec(), g.clone());
        Ok(g)
    }

    /// Dual bases on the lexicographically first independent rows and
    /// columns of the Gram block.
    pub fn dual_bases(&mut self, beta: &[i64]) -> Result<DualBases> {
        if let Some(d) = self.duals.get(beta) {
            return Ok(d.clone());
        }
        let g = self.gram(beta)?;
        let cols = g.matrix.pivot_columns();
        let rows = g.matrix.transpose().pivot_columns();
        let block = g.matrix.select(&rows, &cols);
        let inv = block
            .inverse()
            .ok_or_else(|| Error::Internal(format!("selected Gram minor at {beta:?} is singular")))?;
        let basis: Vec<Word> = cols.iter().map(|&c| g.cols[c].clone()).collect();
        let dual = (0..cols.len())
            .map(|k| {
                let mut v = FreeElem::zero();
                for (m, &r) in rows.iter().enumerate() {
                    v.add_term(g.rows[r].clone(), inv.get(k, m).clone());
                }
                v
            })
            .collect();
        let d = DualBases { beta: beta.to_vec(), basis, dual };
        self.duals.insert(beta.to_vec(), d.clone());
        Ok(d)
    }

    /// `x = Σ_k <v_k, x> u_k` modulo the radical, i.e. tested against every
    /// f-word, for every e-word `x`; and the mirror statement for f-words.
    pub fn check_reconstruction(&mut self, beta: &[i64]) -> Result<Outcome> {
        let d = self.dual_bases(beta)?;
        let words = words_of_degree(beta);
        for k in &words {
            let coords: Vec<FieldElem> =
                d.dual.iter().map(|v| self.pair_free(v, &FreeElem::basis(k.clone()))).collect();
            for j in &words {
                let lhs = self.words(j, k);
                let mut rhs = FieldElem::zero();
                for (c, u) in coords.iter().zip(&d.basis) {
                    rhs = rhs.add(&c.mul(&self.words(j, u)));
                }
                if lhs != rhs {
                    return Ok(Outcome::fail(format!("e-word {k:?} against f-word {j:?}")));
                }
            }
        }
        for j in &words {
            let coords: Vec<FieldElem> = d.basis.iter().map(|u| self.words(j, u)).collect();
            for k in &words {
                let lhs = self.words(j, k);
                let mut rhs = FieldElem::zero();
                for (c, v) in coords.iter().zip(&d.dual) {
                    rhs = rhs.add(&c.mul(&self.pair_free(v, &FreeElem::basis(k.clone()))));
                }
                if lhs != rhs {
                    return Ok(Outcome::fail(format!("f-word {j:?} against e-word {k:?}")));
                }
            }
        }
        Ok(Outcome::pass())
    }

    /// Coproducts of all words of degree β agree with their dual-basis
    /// expansions, on both halves.
    pub fn check_lemma61(&mut self, beta: &[i64]) -> Result<Outcome> {
        self.check_degree(beta)?;
        let n = self.p.rank();
        let gammas = sub_degrees(beta);
        let mut duals = HashMap::new();
        for g in &gammas {
            duals.insert(g.clone(), self.dual_bases(g)?);
        }
        let diff = |g: &Toral| -> Toral { beta.iter().zip(g).map(|(a, b)| a - b).collect() };
        for w in words_of_degree(beta) {
            // positive half
            let dx = BorelElem::word(Side::Pos, n, &w).coproduct(self.p);
            let mut lhs: HashMap<(Toral, usize, usize), FieldElem> = HashMap::new();
            for (((a, mu), (b, nu)), c) in dx.terms() {
                let gam = degree(b, n);
                if nu.iter().any(|&x| x != 0) || *mu != gam {
                    return Ok(Outcome::fail(format!("Δ(e{w:?}) has an off-shape term")));
                }
                let (left, right) = (&duals[&diff(&gam)], &duals[&gam]);
                for (i, vi) in left.dual.iter().enumerate() {
                    let pa = self.pair_free(vi, &FreeElem::basis(a.clone()));
                    if pa.is_zero() {
                        continue;
                    }
                    for (j, vj) in right.dual.iter().enumerate() {
                        let pb = self.pair_free(vj, &FreeElem::basis(b.clone()));
                        let e = lhs.entry((gam.clone(), i, j)).or_insert_with(FieldElem::zero);
                        *e = e.add(&c.mul(&pa).mul(&pb));
                    }
                }
            }
            for gam in &gammas {
                let (left, right) = (&duals[&diff(gam)], &duals[gam]);
                for (i, vi) in left.dual.iter().enumerate() {
                    for (j, vj) in right.dual.iter().enumerate() {
                        let rhs = self.pair_free(&concat_free(vi, vj), &FreeElem::basis(w.clone()));
                        let l = lhs.get(&(gam.clone(), i, j)).cloned().unwrap_or_else(FieldElem::zero);
                        if l != rhs {
                            return Ok(Outcome::fail(format!(
                                "Δ(e{w:?}) at γ={gam:?}, ({i},{j}): {l} vs {rhs}"
                            )));
                        }
                    }
                }
            }
            // negative half
            let dy = BorelElem::word(Side::Neg, n, &w).coproduct(self.p);
            let mut lhs: HashMap<(Toral, usize, usize), FieldElem> = HashMap::new();
            for (((a, mu), (b, nu)), c) in dy.terms() {
                let gam = degree(a, n);
                if mu.iter().any(|&x| x != 0) || *nu != gam {
                    return Ok(Outcome::fail(format!("Δ(f{w:?}) has an off-shape term")));
                }
                let (left, right) = (&duals[&diff(&gam)], &duals[&gam]);
                for (i, ui) in left.basis.iter().enumerate() {
                    let pb = self.words(b, ui);
                    if pb.is_zero() {
                        continue;
                    }
                    for (j, uj) in right.basis.iter().enumerate() {
                        let pa = self.words(a, uj);
                        let e = lhs.entry((gam.clone(), i, j)).or_insert_with(FieldElem::zero);
                        *e = e.add(&c.mul(&pa).mul(&pb));
                    }
                }
            }
            for gam in &gammas {
                let (left, right) = (&duals[&diff(gam)], &duals[gam]);
                for (i, ui) in left.basis.iter().enumerate() {
                    for (j, uj) in right.basis.iter().enumerate() {
                        let mut uu = ui.clone();
                        uu.extend_from_slice(uj);
                        let rhs = self.words(&w, &uu);
                        let l = lhs.get(&(gam.clone(), i, j)).cloned().unwrap_or_else(FieldElem::zero);
                        if l != rhs {
                            return Ok(Outcome::fail(format!(
                                "Δ(f{w:?}) at γ={gam:?}, ({i},{j}): {l} vs {rhs}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(Outcome::pass())
    }
}

/// All `γ` with `0 ≤ γ ≤ β` componentwise.
pub(crate) fn sub_degrees(beta: &[i64]) -> Vec<Toral> {
    let mut out = vec![Vec::new()];
    for &b in beta {
        out = out
            .into_iter()
            .flat_map(|v: Toral| {
                (0..=b).map(move |k| {
                    let mut w = v.clone();
                    w.push(k);
                    w
                })
            })
            .collect();
    }
    out
}

/// `(x, y) = <Φ(x), y>` where `Φ` maps `e_J ↦ f_J` and applies `τ` to
/// coefficients.
pub fn sesq_form(engine: &mut PairingEngine<'_>, x: &FreeElem, y: &FreeElem) -> FieldElem {
    let p = engine.params();
    let phi = x.map_coeffs(|c| p.tau(c));
    engine.pair_free(&phi, y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::CartanDatum;

    fn params(t: &str) -> ParamMatrix {
        ParamMatrix::generic(&CartanDatum::standard(t).unwrap())
    }

    #[test]
    fn base_values() {
        let p = params("A2");
        let mut e = PairingEngine::new(&p);
        let c0 = generator_pairing(&p, 0);
        let c1 = generator_pairing(&p, 1);
        assert_eq!(e.words(&[0], &[0]), c0);
        assert!(e.words(&[0], &[1]).is_zero());
        assert!(e.words(&[0], &[0, 1]).is_zero());
        assert_eq!(e.words(&[0, 1], &[0, 1]), c0.mul(&c1));
        assert_eq!(e.words(&[], &[]), FieldElem::one());
    }

    #[test]
    fn gram_examples() {
        let p = params("A2");
        let mut e = PairingEngine::new(&p);
        let g = e.gram(&[1, 0]).unwrap();
        assert_eq!(g.rank, 1);
        assert_eq!(*g.matrix.get(0, 0), generator_pairing(&p, 0));
        assert_eq!(e.gram(&[1, 1]).unwrap().rank, 2);
        let g = e.gram(&[2, 1]).unwrap();
        assert_eq!((g.rows.len(), g.rank), (3, 2));
        assert!(e.gram(&[4, 3]).is_err());
    }

    #[test]
    fn dual_of_generator() {
        let p = params("B2");
        let mut e = PairingEngine::new(&p);
        let d = e.dual_bases(&[0, 1]).unwrap();
        assert_eq!(d.basis, vec![vec![1u8]]);
        let q = p.q_elem(1, 1);
        let expect = FieldElem::one().sub(&q).checked_div(&q).unwrap();
        assert_eq!(d.dual[0], FreeElem::term(vec![1], expect));
        let d0 = e.dual_bases(&[0, 0]).unwrap();
        assert_eq!(d0.theta(), vec![(FreeElem::basis(vec![]), vec![])]);
    }

    #[test]
    fn sub_degree_enumeration() {
        assert_eq!(sub_degrees(&[1, 2]).len(), 6);
        assert_eq!(sub_degrees(&[0, 0]), vec![vec![0, 0]]);
    }
}
