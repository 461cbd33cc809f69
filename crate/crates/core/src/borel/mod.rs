//! The free Borel halves in normal form `word · ω_μ` (resp. `word · ω'_μ`),
//! their coproducts, Serre elements and skew derivations.

mod gamma;
mod pairing;

pub use gamma::{gamma_by_derivations, gamma_embed};
pub use pairing::{sesq_form, DualBases, GramBlock, PairingEngine, DEFAULT_HEIGHT_BOUND};

use std::fmt;

use crate::check::Outcome;
use crate::coeff::{FieldElem, Monomial, ParamMatrix};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::shuffle::{degree, serre_coefficients, Word};

/// Which Borel half: `e_i, ω_i` or `f_i, ω'_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Pos,
    Neg,
}

/// Toral exponent vector in root coordinates.
pub type Toral = Vec<i64>;
pub type BorelKey = (Word, Toral);

/// Linear combination of words in the generators (no toral part).
pub type FreeElem = LinComb<Word>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorelElem {
    side: Side,
    rank: usize,
    terms: LinComb<BorelKey>,
}

/// Element of the tensor square of one Borel half.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor2 {
    side: Side,
    rank: usize,
    terms: LinComb<(BorelKey, BorelKey)>,
}

fn add_vec(a: &[i64], b: &[i64]) -> Toral {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// `(w1 ω_μ)(w2 ω_ν) = q_{μ,|w2|} w1 w2 ω_{μ+ν}`, and on the negative side
/// `(w1 ω'_μ)(w2 ω'_ν) = q_{|w2|,μ} w1 w2 ω'_{μ+ν}`.
fn mul_keys(p: &ParamMatrix, side: Side, a: &BorelKey, b: &BorelKey) -> (BorelKey, Monomial) {
    let n = p.rank();
    let d2 = degree(&b.0, n);
    let m = if a.1.iter().all(|&x| x == 0) || b.0.is_empty() {
        Monomial::one()
    } else {
        match side {
            Side::Pos => p.q_pair_int(&a.1, &d2),
            Side::Neg => p.q_pair_int(&d2, &a.1),
        }
    };
    let mut w = a.0.clone();
    w.extend_from_slice(&b.0);
    ((w, add_vec(&a.1, &b.1)), m)
}

impl BorelElem {
    pub fn zero(side: Side, rank: usize) -> Self {
        BorelElem { side, rank, terms: LinComb::zero() }
    }

    pub fn one(side: Side, rank: usize) -> Self {
        BorelElem::toral(side, vec![0; rank])
    }

    /// `e_i` or `f_i`.
    pub fn gen(side: Side, rank: usize, i: usize) -> Self {
        BorelElem::word(side, rank, &[i as u8])
    }

    pub fn word(side: Side, rank: usize, w: &[u8]) -> Self {
        BorelElem { side, rank, terms: LinComb::basis((w.to_vec(), vec![0; rank])) }
    }

    /// `ω_μ` or `ω'_μ`.
    pub fn toral(side: Side, mu: Toral) -> Self {
        let rank = mu.len();
        BorelElem { side, rank, terms: LinComb::basis((Vec::new(), mu)) }
    }

    pub fn from_terms(side: Side, rank: usize, terms: LinComb<BorelKey>) -> Self {
        BorelElem { side, rank, terms }
    }

    pub fn from_free(side: Side, rank: usize, x: &FreeElem) -> Self {
        let terms = x.map_keys(|w| (w.clone(), vec![0; rank]));
        BorelElem { side, rank, terms }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> &LinComb<BorelKey> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    /// The word part, if every toral exponent vanishes.
    pub fn to_free(&self) -> Result<FreeElem> {
        let mut out = FreeElem::zero();
        for ((w, mu), c) in &self.terms {
            if mu.iter().any(|&x| x != 0) {
                return Err(Error::Domain("element has a nonzero toral part".into()));
            }
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    fn same_shape(&self, o: &Self) -> Result<()> {
        if self.side != o.side {
            return Err(Error::Domain("cannot combine elements of opposite Borel halves".into()));
        }
        if self.rank != o.rank {
            return Err(Error::Domain("rank mismatch".into()));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.same_shape(o)?;
        Ok(BorelElem { side: self.side, rank: self.rank, terms: self.terms.add(&o.terms) })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.same_shape(o)?;
        Ok(BorelElem { side: self.side, rank: self.rank, terms: self.terms.sub(&o.terms) })
    }

    pub fn scale(&self, c: &FieldElem) -> Self {
        BorelElem { side: self.side, rank: self.rank, terms: self.terms.scale(c) }
    }

    pub fn mul(&self, p: &ParamMatrix, o: &Self) -> Result<Self> {
        self.same_shape(o)?;
        let mut out = LinComb::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                let (k, m) = mul_keys(p, self.side, a, b);
                out.add_term(k, ca.mul(cb).scale_monomial(&m));
            }
        }
        Ok(BorelElem { side: self.side, rank: self.rank, terms: out })
    }

    /// `ε`: kills words, sends torals to 1.
    pub fn counit(&self) -> FieldElem {
        let mut acc = FieldElem::zero();
        for ((w, _), c) in &self.terms {
            if w.is_empty() {
                acc = acc.add(c);
            }
        }
        acc
    }

    pub fn coproduct(&self, p: &ParamMatrix) -> Tensor2 {
        let mut out = Tensor2::zero(self.side, self.rank);
        for ((w, mu), c) in &self.terms {
            let mut acc = Tensor2::toral(self.side, vec![0; self.rank]);
            for &l in w {
                acc = acc.mul(p, &Tensor2::of_gen(self.side, self.rank, l as usize));
            }
            acc = acc.mul(p, &Tensor2::toral(self.side, mu.clone()));
            out.terms.add_scaled(&acc.terms, c);
        }
        out
    }
}

impl Tensor2 {
    pub fn zero(side: Side, rank: usize) -> Self {
        Tensor2 { side, rank, terms: LinComb::zero() }
    }

    fn toral(side: Side, mu: Toral) -> Self {
        let rank = mu.len();
        let k = (Vec::new(), mu);
        Tensor2 { side, rank, terms: LinComb::basis((k.clone(), k)) }
    }

    /// `Δ(e_i) = e_i⊗1 + ω_i⊗e_i`, `Δ(f_i) = 1⊗f_i + f_i⊗ω'_i`.
    fn of_gen(side: Side, rank: usize, i: usize) -> Self {
        let zero = vec![0; rank];
        let mut ai = zero.clone();
        ai[i] = 1;
        let letter = vec![i as u8];
        let one: BorelKey = (Vec::new(), zero.clone());
        let g: BorelKey = (letter, zero);
        let mut t = LinComb::zero();
        match side {
            Side::Pos => {
                t.add_term((g.clone(), one), FieldElem::one());
                t.add_term(((Vec::new(), ai), g), FieldElem::one());
            }
            Side::Neg => {
                t.add_term((one, g.clone()), FieldElem::one());
                t.add_term((g, (Vec::new(), ai)), FieldElem::one());
            }
        }
        Tensor2 { side, rank, terms: t }
    }

    pub fn from_pair(a: &BorelElem, b: &BorelElem) -> Result<Self> {
        a.same_shape(b)?;
        let mut t = LinComb::zero();
        for (ka, ca) in &a.terms {
            for (kb, cb) in &b.terms {
                t.add_term((ka.clone(), kb.clone()), ca.mul(cb));
            }
        }
        Ok(Tensor2 { side: a.side, rank: a.rank, terms: t })
    }

    pub fn terms(&self) -> &LinComb<(BorelKey, BorelKey)> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        Tensor2 { side: self.side, rank: self.rank, terms: self.terms.add(&o.terms) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Tensor2 { side: self.side, rank: self.rank, terms: self.terms.sub(&o.terms) }
    }

    /// Componentwise product.
    pub fn mul(&self, p: &ParamMatrix, o: &Self) -> Self {
        let mut out = LinComb::zero();
        for ((a1, a2), ca) in &self.terms {
            for ((b1, b2), cb) in &o.terms {
                let (k1, m1) = mul_keys(p, self.side, a1, b1);
                let (k2, m2) = mul_keys(p, self.side, a2, b2);
                out.add_term((k1, k2), ca.mul(cb).scale_monomial(&m1.mul(&m2)));
            }
        }
        Tensor2 { side: self.side, rank: self.rank, terms: out }
    }

    /// `(ε⊗id)` and `(id⊗ε)`.
    pub fn counit_left(&self) -> BorelElem {
        let mut t = LinComb::zero();
        for ((a, b), c) in &self.terms {
            if a.0.is_empty() {
                t.add_term(b.clone(), c.clone());
            }
        }
        BorelElem { side: self.side, rank: self.rank, terms: t }
    }

    pub fn counit_right(&self) -> BorelElem {
        let mut t = LinComb::zero();
        for ((a, b), c) in &self.terms {
            if b.0.is_empty() {
                t.add_term(a.clone(), c.clone());
            }
        }
        BorelElem { side: self.side, rank: self.rank, terms: t }
    }
}

fn fmt_key(f: &mut fmt::Formatter<'_>, side: Side, k: &BorelKey) -> fmt::Result {
    let (g, w) = match side {
        Side::Pos => ('e', "ω"),
        Side::Neg => ('f', "ω'"),
    };
    let mut first = true;
    for &l in &k.0 {
        if !first {
            write!(f, "·")?;
        }
        write!(f, "{g}{}", l + 1)?;
        first = false;
    }
    if k.1.iter().any(|&x| x != 0) {
        if !first {
            write!(f, "·")?;
        }
        write!(f, "{w}{:?}", k.1)?;
        first = false;
    }
    if first {
        write!(f, "1")?;
    }
    Ok(())
}

impl fmt::Display for BorelElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_zero() {
            return write!(f, "0");
        }
        for (n, (k, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})·")?;
            fmt_key(f, self.side, k)?;
        }
        Ok(())
    }
}

impl fmt::Display for Tensor2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_zero() {
            return write!(f, "0");
        }
        for (n, ((a, b), c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})·")?;
            fmt_key(f, self.side, a)?;
            write!(f, " ⊗ ")?;
            fmt_key(f, self.side, b)?;
        }
        Ok(())
    }
}

/// `u_ij^+ = Σ_k c_k e_i^{N-k} e_j e_i^k` and
/// `u_ij^- = Σ_k c_k f_i^k f_j f_i^{N-k}`.
pub fn serre_element(p: &ParamMatrix, i: usize, j: usize, side: Side) -> Result<BorelElem> {
    let n = p.rank();
    if i == j || i >= n || j >= n {
        return Err(Error::Domain(format!("Serre element needs distinct indices below {n}")));
    }
    let coeffs = serre_coefficients(p, i, j);
    let nn = coeffs.len() - 1;
    let mut t = LinComb::zero();
    for (k, c) in coeffs.into_iter().enumerate() {
        let (a, b) = match side {
            Side::Pos => (nn - k, k),
            Side::Neg => (k, nn - k),
        };
        let mut w = vec![i as u8; a];
        w.push(j as u8);
        w.extend(std::iter::repeat(i as u8).take(b));
        t.add_term((w, vec![0; n]), c);
    }
    Ok(BorelElem { side, rank: n, terms: t })
}

/// Residual `Δ(u) − (expected)` for the Serre element on one side, where
/// the expected coproduct is `u⊗1 + ω_i^N ω_j⊗u` resp. `u⊗ω'^N_i ω'_j + 1⊗u`.
pub fn lemma16_residual(p: &ParamMatrix, i: usize, j: usize, side: Side) -> Result<Tensor2> {
    let n = p.rank();
    let u = serre_element(p, i, j, side)?;
    let mut g = vec![0; n];
    g[i] = 1 - p.datum().a[i][j];
    g[j] = 1;
    let one = BorelElem::one(side, n);
    let tor = BorelElem::toral(side, g);
    let expect = match side {
        Side::Pos => Tensor2::from_pair(&u, &one)?.add(&Tensor2::from_pair(&tor, &u)?),
        Side::Neg => Tensor2::from_pair(&u, &tor)?.add(&Tensor2::from_pair(&one, &u)?),
    };
    Ok(u.coproduct(p).sub(&expect))
}

/// Both sides of the Serre coproduct identity.
pub fn check_lemma16(p: &ParamMatrix, i: usize, j: usize) -> Result<Outcome> {
    let mut out = Outcome::pass();
    for side in [Side::Pos, Side::Neg] {
        let r = lemma16_residual(p, i, j, side)?;
        if !r.is_zero() {
            out = out.and(Outcome::fail(format!("{side:?}: residual {r}")));
        }
    }
    Ok(out)
}

/// `∂̂_i` on words: `Σ_{p: w_p = i} Π_{r>p} q_{i,w_r} · (w without p)`.
pub fn partial_right_free(p: &ParamMatrix, i: usize, x: &FreeElem) -> FreeElem {
    let mut out = FreeElem::zero();
    for (w, c) in x {
        let mut m = Monomial::one();
        for pos in (0..w.len()).rev() {
            if w[pos] as usize == i {
                let mut v = w.clone();
                v.remove(pos);
                out.add_term(v, c.scale_monomial(&m));
            }
            m = m.mul(p.q(i, w[pos] as usize));
        }
    }
    out
}

/// `_i∂̂` on words: `Σ_{p: w_p = i} Π_{r<p} q_{w_r,i} · (w without p)`.
pub fn partial_left_free(p: &ParamMatrix, i: usize, x: &FreeElem) -> FreeElem {
    let mut out = FreeElem::zero();
    for (w, c) in x {
        let mut m = Monomial::one();
        for pos in 0..w.len() {
            if w[pos] as usize == i {
                let mut v = w.clone();
                v.remove(pos);
                out.add_term(v, c.scale_monomial(&m));
            }
            m = m.mul(p.q(w[pos] as usize, i));
        }
    }
    out
}

fn positive_free(x: &BorelElem) -> Result<FreeElem> {
    if x.side != Side::Pos {
        return Err(Error::Domain("skew derivations act on the positive half".into()));
    }
    x.to_free()
}

pub fn partial_right(p: &ParamMatrix, i: usize, x: &BorelElem) -> Result<BorelElem> {
    let f = positive_free(x)?;
    Ok(BorelElem::from_free(Side::Pos, x.rank, &partial_right_free(p, i, &f)))
}

pub fn partial_left(p: &ParamMatrix, i: usize, x: &BorelElem) -> Result<BorelElem> {
    let f = positive_free(x)?;
    Ok(BorelElem::from_free(Side::Pos, x.rank, &partial_left_free(p, i, &f)))
}

/// `q_ii / (1 − q_ii)`, the value of `<f_i, e_i>`.
pub fn generator_pairing(p: &ParamMatrix, i: usize) -> FieldElem {
    let q = p.q_elem(i, i);
    q.checked_div(&FieldElem::one().sub(&q)).expect("q_ii is not 1")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::CartanDatum;

    fn params(t: &str) -> ParamMatrix {
        ParamMatrix::generic(&CartanDatum::standard(t).unwrap())
    }

    #[test]
    fn commutation_step() {
        let p = params("A2");
        let a = BorelElem::word(Side::Pos, 2, &[0]).mul(&p, &BorelElem::toral(Side::Pos, vec![1, 0])).unwrap();
        let b = BorelElem::gen(Side::Pos, 2, 1);
        let prod = a.mul(&p, &b).unwrap();
        let expect = BorelElem::from_terms(
            Side::Pos,
            2,
            LinComb::term((vec![0, 1], vec![1, 0]), p.q_elem(0, 1)),
        );
        assert_eq!(prod, expect);
        let neg = BorelElem::gen(Side::Neg, 2, 0);
        assert!(a.mul(&p, &neg).is_err());
    }

    #[test]
    fn coproduct_of_square() {
        let p = params("B2");
        let e = BorelElem::gen(Side::Pos, 2, 0);
        let d = e.mul(&p, &e).unwrap().coproduct(&p);
        let mut t = LinComb::zero();
        t.add_term(((vec![0, 0], vec![0, 0]), (vec![], vec![0, 0])), FieldElem::one());
        t.add_term(
            ((vec![0], vec![1, 0]), (vec![0], vec![0, 0])),
            FieldElem::one().add(&p.q_elem(0, 0)),
        );
        t.add_term(((vec![], vec![2, 0]), (vec![0, 0], vec![0, 0])), FieldElem::one());
        assert_eq!(d.terms(), &t);
        let one = BorelElem::one(Side::Pos, 2);
        assert_eq!(one.coproduct(&p), Tensor2::from_pair(&one, &one).unwrap());
    }

    #[test]
    fn derivation_examples() {
        let p = params("A2");
        let eij = FreeElem::basis(vec![0, 1]);
        assert_eq!(partial_right_free(&p, 1, &eij), FreeElem::basis(vec![0]));
        assert_eq!(partial_right_free(&p, 0, &eij), FreeElem::term(vec![1], p.q_elem(0, 1)));
        assert_eq!(partial_left_free(&p, 0, &eij), FreeElem::basis(vec![1]));
        assert_eq!(partial_left_free(&p, 1, &eij), FreeElem::term(vec![0], p.q_elem(0, 1)));
        assert!(partial_right_free(&p, 0, &FreeElem::basis(vec![])).is_zero());
        let toral = BorelElem::toral(Side::Pos, vec![1, 0]);
        assert!(partial_right(&p, 0, &toral).is_err());
    }

    #[test]
    fn serre_shapes() {
        let p = params("A1xA1");
        let u = serre_element(&p, 0, 1, Side::Pos).unwrap();
        let mut t = LinComb::zero();
        t.add_term((vec![0, 1], vec![0, 0]), FieldElem::one());
        t.add_term((vec![1, 0], vec![0, 0]), p.q_elem(0, 1).neg());
        assert_eq!(u.terms(), &t);
        assert!(serre_element(&p, 1, 1, Side::Pos).is_err());
        let p = params("G2");
        let up = serre_element(&p, 1, 0, Side::Pos).unwrap();
        let un = serre_element(&p, 1, 0, Side::Neg).unwrap();
        let rev = up.terms().map_keys(|(w, m)| (w.iter().rev().copied().collect(), m.clone()));
        assert_eq!(un.terms(), &rev);
    }
}
