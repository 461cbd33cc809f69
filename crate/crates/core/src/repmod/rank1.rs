//! Modules over the rank-one subalgebra `U_i` generated by `e_i, f_i, ω_i^{±1}, ω'_i^{±1}`.

use super::{lemma33_operators, mat_diff, r5_constant};
use crate::check::Outcome;
use crate::coeff::qnum::qint;
use crate::coeff::{FieldElem, ParamMatrix};
use crate::error::{Error, Result};
use crate::linalg::FMatrix;

/// The simple `(m+1)`-dimensional `U_i`-module on `v_0, …, v_m`.
#[derive(Clone, Debug)]
pub struct Rank1Module {
    pub i: usize,
    pub m: u32,
    pub phi: FieldElem,
    pub qii: FieldElem,
    pub e: FMatrix,
    pub f: FMatrix,
    pub omega: FMatrix,
    pub omega_prime: FMatrix,
    /// `e_i v_j = c_j v_{j-1}`, index `j = 0..=m`.
    pub e_scalars: Vec<FieldElem>,
}

/// `ω_i v_j = φ q_ii^{-j} v_j`, `ω'_i v_j = φ q_ii^{j-m} v_j`, `f_i v_j = v_{j+1}`,
/// and `e_i v_j = c_j v_{j-1}` with `c_j` solved from the commutator relation.
pub fn rank1_simple(p: &ParamMatrix, i: usize, phi: &FieldElem, m: u32) -> Result<Rank1Module> {
    if i >= p.rank() {
        return Err(Error::Domain(format!("index {} out of range", i + 1)));
    }
    if phi.is_zero() {
        return Err(Error::Domain("φ_i must be nonzero".into()));
    }
    let qii = p.q_elem(i, i);
    let qinv = qii.inv().expect("nonzero");
    let dim = m as usize + 1;
    let w: Vec<FieldElem> = (0..dim).map(|j| phi.mul(&qinv.powi(j as i64))).collect();
    let wp: Vec<FieldElem> = (0..dim).map(|j| phi.mul(&qii.powi(j as i64 - m as i64))).collect();
    // [e,f] v_j = (c_{j+1} − c_j) v_j = κ(ω − ω') v_j, c_0 = 0
    let kappa = r5_constant(p, i);
    let mut c = vec![FieldElem::zero()];
    for j in 0..m as usize {
        let next = c[j].add(&kappa.mul(&w[j].sub(&wp[j])));
        c.push(next);
    }
    let e = FMatrix::from_fn(dim, dim, |r, col| if col >= 1 && r == col - 1 { c[col].clone() } else { FieldElem::zero() });
    let f = FMatrix::from_fn(dim, dim, |r, col| if r == col + 1 { FieldElem::one() } else { FieldElem::zero() });
    Ok(Rank1Module {
        i,
        m,
        phi: phi.clone(),
        qii,
        e,
        f,
        omega: FMatrix::diagonal(w),
        omega_prime: FMatrix::diagonal(wp),
        e_scalars: c,
    })
}

impl Rank1Module {
    pub fn dim(&self) -> usize {
        self.m as usize + 1
    }

    /// The closed form `φ q_ii^{1-m} (m-j+1)_{q_ii} (j)_{q_ii}`.
    pub fn printed_scalar(&self, j: u32) -> FieldElem {
        let m = self.m;
        if j == 0 || j > m {
            return FieldElem::zero();
        }
        self.phi
            .mul(&self.qii.powi(1 - m as i64))
            .mul(&qint(m - j + 1, &self.qii))
            .mul(&qint(j, &self.qii))
    }

    /// Compares the solved scalars with [`Rank1Module::printed_scalar`].
    pub fn printed_formula_check(&self) -> Outcome {
        for j in 1..=self.m {
            let got = &self.e_scalars[j as usize];
            let printed = self.printed_scalar(j);
            if *got != printed {
                return Outcome::fail(format!("j={j}: solved {got}, closed form {printed}"));
            }
        }
        Outcome::pass()
    }

    /// All `U_i` relations, plus the vanishing `e v_0 = 0`, `f v_m = 0`.
    pub fn relations_check(&self) -> Outcome {
        let q = &self.qii;
        let qi = q.inv().expect("nonzero");
        let (w, wp) = (&self.omega, &self.omega_prime);
        let wi = w.inverse().expect("invertible");
        let wpi = wp.inverse().expect("invertible");
        let id = FMatrix::identity(self.dim());
        let kappa = q.checked_div(&q.sub(&FieldElem::one())).expect("q_ii is not 1");
        let checks = [
            ("ω ω'", w.mul(wp), wp.mul(w)),
            ("ω e ω^-1", w.mul(&self.e).mul(&wi), self.e.scale(q)),
            ("ω' e ω'^-1", wp.mul(&self.e).mul(&wpi), self.e.scale(&qi)),
            ("ω f ω^-1", w.mul(&self.f).mul(&wi), self.f.scale(&qi)),
            ("ω' f ω'^-1", wp.mul(&self.f).mul(&wpi), self.f.scale(q)),
            ("[e,f]", self.e.mul(&self.f).sub(&self.f.mul(&self.e)), w.sub(wp).scale(&kappa)),
            ("ω ω^-1", w.mul(&wi), id),
        ];
        for (name, a, b) in checks {
            if let Some(d) = mat_diff(name, &a, &b) {
                return Outcome::fail(d);
            }
        }
        if self.e_scalars.len() != self.dim() {
            return Outcome::fail("scalar sequence has the wrong length");
        }
        Outcome::pass()
    }

    pub fn lemma33_check(&self, max_m: u32) -> Outcome {
        Outcome::from_witness(lemma33_operators(&self.qii, &self.e, &self.f, &self.omega, &self.omega_prime, max_m))
    }
}

/// Outcome of the simplicity test on a Verma module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Simplicity {
    /// `v_j` is a singular vector; the maximal submodule is spanned by `v_{≥j}`.
    Reducible { first: u32 },
    SimpleUpTo(u32),
}

/// `M(φ)` with basis `v_j = f_i^j ⊗ v_φ`, evaluated lazily.
#[derive(Clone, Debug)]
pub struct VermaRank1 {
    pub phi: FieldElem,
    pub phi_prime: FieldElem,
    pub qii: FieldElem,
    kappa: FieldElem,
}

pub fn verma_rank1(p: &ParamMatrix, i: usize, phi: &FieldElem, phi_prime: &FieldElem) -> Result<VermaRank1> {
    if i >= p.rank() {
        return Err(Error::Domain(format!("index {} out of range", i + 1)));
    }
    Ok(VermaRank1 {
        phi: phi.clone(),
        phi_prime: phi_prime.clone(),
        qii: p.q_elem(i, i),
        kappa: r5_constant(p, i),
    })
}

impl VermaRank1 {
    /// `e_i v_j = κ((j)_{q^{-1}} φ − (j)_q φ') v_{j-1}`.
    pub fn e_scalar(&self, j: u32) -> FieldElem {
        let qinv = self.qii.inv().expect("nonzero");
        self.phi
            .mul(&qint(j, &qinv))
            .sub(&self.phi_prime.mul(&qint(j, &self.qii)))
            .mul(&self.kappa)
    }

    pub fn omega_value(&self, j: u32) -> FieldElem {
        self.phi.mul(&self.qii.inv().expect("nonzero").powi(j as i64))
    }

    pub fn omega_prime_value(&self, j: u32) -> FieldElem {
        self.phi_prime.mul(&self.qii.powi(j as i64))
    }

    /// First `j ≥ 1` whose `e`-scalar vanishes, searching up to `depth`.
    pub fn simplicity(&self, depth: u32) -> Simplicity {
        (1..=depth)
            .find(|&j| self.e_scalar(j).is_zero())
            .map_or(Simplicity::SimpleUpTo(depth), |first| Simplicity::Reducible { first })
    }

    /// Matrices of `e, f, ω, ω'` on `v_0, …, v_{n-1}`; `f v_{n-1}` is cut off.
    pub fn truncated(&self, n: usize) -> (FMatrix, FMatrix, FMatrix, FMatrix) {
        let e = FMatrix::from_fn(n, n, |r, c| if c >= 1 && r == c - 1 { self.e_scalar(c as u32) } else { FieldElem::zero() });
        let f = FMatrix::from_fn(n, n, |r, c| if r == c + 1 { FieldElem::one() } else { FieldElem::zero() });
        let w = FMatrix::diagonal((0..n as u32).map(|j| self.omega_value(j)).collect());
        let wp = FMatrix::diagonal((0..n as u32).map(|j| self.omega_prime_value(j)).collect());
        (e, f, w, wp)
    }

    /// The `e f^m` identity on `v_0`, where truncation cannot interfere.
    pub fn lemma33_check(&self, max_m: u32) -> Outcome {
        let n = max_m as usize + 2;
        let (e, f, w, wp) = self.truncated(n);
        let qinv = self.qii.inv().expect("nonzero");
        let mut fp = FMatrix::identity(n);
        for m in 1..=max_m {
            let fm1 = fp.clone();
            fp = fp.mul(&f);
            let lhs = e.mul(&fp).sub(&fp.mul(&e)).column(0);
            let rhs = fm1
                .mul(&w.scale(&qint(m, &qinv)).sub(&wp.scale(&qint(m, &self.qii))))
                .scale(&self.kappa)
                .column(0);
            if lhs != rhs {
                return Outcome::fail(format!("e f^{m} v_0 differs"));
            }
        }
        Outcome::pass()
    }
}
