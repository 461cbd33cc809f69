//! Finite-dimensional weight modules: rank-one modules, highest-weight
//! modules, the Casimir and Ξ operators, the braiding and decompositions.

mod highest;
mod operators;
mod rank1;

pub use highest::{contravariant_form, highest_weight_module};
pub use operators::{
    braiding, braiding_intertwines, casimir, casimir_commutation_check, casimir_xi_central_check, decompose, g_value, lemma48_check, qybe_check, theta, xi_operator, Backend,
    Constituent, QybeReport,
};
pub use rank1::{rank1_simple, verma_rank1, Rank1Module, Simplicity, VermaRank1};

use serde::Serialize;

use crate::check::Outcome;
use crate::coeff::monomial::Rat;
use crate::coeff::qnum::qint;
use crate::coeff::{FieldElem, ParamMatrix};
use crate::linalg::FMatrix;
use crate::shuffle::serre_coefficients;

/// `q_ii/(q_ii − 1)`.
pub(crate) fn r5_constant(p: &ParamMatrix, i: usize) -> FieldElem {
    let qii = p.q_elem(i, i);
    qii.checked_div(&qii.sub(&FieldElem::one())).expect("q_ii is not 1")
}

/// Where two matrices first differ, as a witness string.
pub(crate) fn mat_diff(label: &str, a: &FMatrix, b: &FMatrix) -> Option<String> {
    a.first_difference(b).map(|(r, c)| {
        if r == usize::MAX {
            format!("{label}: shape mismatch")
        } else {
            format!("{label}: entry ({r},{c}) is {} vs {}", a.get(r, c), b.get(r, c))
        }
    })
}

/// A finite-dimensional module with a weight basis. Weights are stored in
/// root coordinates; `ω_i` and `ω'_i` act diagonally through them.
#[derive(Clone, Debug)]
pub struct WeightModule {
    pub params: ParamMatrix,
    pub weights: Vec<Vec<Rat>>,
    pub e: Vec<FMatrix>,
    pub f: Vec<FMatrix>,
    /// Highest weight in fundamental-weight coordinates, if known.
    pub highest: Option<Vec<i64>>,
}

#[derive(Serialize)]
struct ModuleJson {
    label: String,
    highest: Option<Vec<i64>>,
    dim: usize,
    weights: Vec<Vec<String>>,
    e: Vec<Vec<Vec<String>>>,
    f: Vec<Vec<Vec<String>>>,
    omega: Vec<Vec<String>>,
    omega_prime: Vec<Vec<String>>,
}

impl WeightModule {
    /// The one-dimensional module of weight 0.
    pub fn trivial(p: &ParamMatrix) -> Self {
        let n = p.rank();
        WeightModule {
            params: p.clone(),
            weights: vec![vec![Rat::from_integer(0); n]],
            e: vec![FMatrix::zeros(1, 1); n],
            f: vec![FMatrix::zeros(1, 1); n],
            highest: Some(vec![0; n]),
        }
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn rank(&self) -> usize {
        self.params.rank()
    }

    /// Eigenvalue `q_{α_i λ}` of `ω_i` on basis vector `k`.
    pub fn omega_value(&self, i: usize, k: usize) -> FieldElem {
        let a = self.params.datum().simple_root(i);
        FieldElem::monomial(self.params.q_pair(&a, &self.weights[k]))
    }

    /// Eigenvalue `q_{λ α_i}^{-1}` of `ω'_i` on basis vector `k`.
    pub fn omega_prime_value(&self, i: usize, k: usize) -> FieldElem {
        let a = self.params.datum().simple_root(i);
        FieldElem::monomial(self.params.q_pair(&self.weights[k], &a).inv())
    }

    /// `ω_i^s`.
    pub fn omega(&self, i: usize, s: i64) -> FMatrix {
        FMatrix::diagonal((0..self.dim()).map(|k| self.omega_value(i, k).powi(s)).collect())
    }

    /// `ω'_i^s`.
    pub fn omega_prime(&self, i: usize, s: i64) -> FMatrix {
        FMatrix::diagonal((0..self.dim()).map(|k| self.omega_prime_value(i, k).powi(s)).collect())
    }

    /// `λ(h_i)` for the weight of basis vector `k`.
    pub fn weight_value(&self, k: usize, i: usize) -> Rat {
        self.params.datum().root_to_weight(&self.weights[k])[i]
    }

    /// Action of `e_{w1} ⋯ e_{wk}` (or the f-word) as a matrix.
    pub fn word_action(&self, word: &[u8], positive: bool) -> FMatrix {
        let gens = if positive { &self.e } else { &self.f };
        word.iter()
            .fold(FMatrix::identity(self.dim()), |acc, &l| acc.mul(&gens[l as usize]))
    }

    /// `M ⊗ M'` with `Δ(e_i) = e_i⊗1 + ω_i⊗e_i`, `Δ(f_i) = 1⊗f_i + f_i⊗ω'_i`.
    pub fn tensor(&self, o: &WeightModule) -> WeightModule {
        let n = self.rank();
        let (i1, i2) = (FMatrix::identity(self.dim()), FMatrix::identity(o.dim()));
        let e = (0..n)
            .map(|i| self.e[i].kron(&i2).add(&self.omega(i, 1).kron(&o.e[i])))
            .collect();
        let f = (0..n)
            .map(|i| i1.kron(&o.f[i]).add(&self.f[i].kron(&o.omega_prime(i, 1))))
            .collect();
        let mut weights = Vec::new();
        for a in &self.weights {
            for b in &o.weights {
                weights.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        WeightModule { params: self.params.clone(), weights, e, f, highest: None }
    }

    /// Difference between the top and bottom heights of the weights.
    pub fn spread(&self) -> usize {
        let hts: Vec<Rat> = self.weights.iter().map(|w| w.iter().sum()).collect();
        let max = hts.iter().max().cloned().unwrap_or_default();
        let min = hts.iter().min().cloned().unwrap_or_default();
        (max - min).to_integer() as usize
    }

    /// Every defining relation as a matrix identity, one outcome per family.
    pub fn relations_check(&self) -> Vec<(String, Outcome)> {
        let n = self.rank();
        let p = &self.params;
        let mut w = vec![None::<String>; 7];
        for i in 0..n {
            let (wi, wii) = (self.omega(i, 1), self.omega(i, -1));
            let (wp, wpi) = (self.omega_prime(i, 1), self.omega_prime(i, -1));
            let id = FMatrix::identity(self.dim());
            if w[0].is_none() {
                w[0] = mat_diff(&format!("ω_{0}ω_{0}^-1", i + 1), &wi.mul(&wii), &id)
                    .or_else(|| mat_diff(&format!("ω'_{0}ω'_{0}^-1", i + 1), &wp.mul(&wpi), &id));
            }
            for j in 0..n {
                let (wj, wpj) = (self.omega(j, 1), self.omega_prime(j, 1));
                if w[0].is_none() {
                    w[0] = mat_diff("ω ω' commute", &wi.mul(&wpj), &wpj.mul(&wi));
                }
                if w[1].is_none() {
                    w[1] = mat_diff("ω ω commute", &wi.mul(&wj), &wj.mul(&wi))
                        .or_else(|| mat_diff("ω' ω' commute", &wp.mul(&wpj), &wpj.mul(&wp)));
                }
                let (qij, qji) = (p.q_elem(i, j), p.q_elem(j, i));
                if w[2].is_none() {
                    let lbl = format!("ω_{} e_{}", i + 1, j + 1);
                    w[2] = mat_diff(&lbl, &wi.mul(&self.e[j]).mul(&wii), &self.e[j].scale(&qij)).or_else(|| {
                        let inv = qji.inv().expect("monomial");
                        mat_diff(&lbl, &wp.mul(&self.e[j]).mul(&wpi), &self.e[j].scale(&inv))
                    });
                }
                if w[3].is_none() {
                    let lbl = format!("ω_{} f_{}", i + 1, j + 1);
                    let inv = qij.inv().expect("monomial");
                    w[3] = mat_diff(&lbl, &wi.mul(&self.f[j]).mul(&wii), &self.f[j].scale(&inv))
                        .or_else(|| mat_diff(&lbl, &wp.mul(&self.f[j]).mul(&wpi), &self.f[j].scale(&qji)));
                }
                if w[4].is_none() {
                    let lhs = self.e[i].mul(&self.f[j]).sub(&self.f[j].mul(&self.e[i]));
                    let rhs = if i == j {
                        wi.sub(&wp).scale(&r5_constant(p, i))
                    } else {
                        FMatrix::zeros(self.dim(), self.dim())
                    };
                    w[4] = mat_diff(&format!("[e_{}, f_{}]", i + 1, j + 1), &lhs, &rhs);
                }
                if i != j {
                    for (slot, positive) in [(5, true), (6, false)] {
                        if w[slot].is_none() {
                            let s = self.serre_matrix(i, j, positive);
                            w[slot] = mat_diff(&format!("Serre ({},{})", i + 1, j + 1), &s, &FMatrix::zeros(self.dim(), self.dim()));
                        }
                    }
                }
            }
        }
        w.into_iter()
            .enumerate()
            .map(|(k, w)| (format!("R{}", k + 1), Outcome::from_witness(w)))
            .collect()
    }

    fn serre_matrix(&self, i: usize, j: usize, positive: bool) -> FMatrix {
        let coeffs = serre_coefficients(&self.params, i, j);
        let nn = coeffs.len() - 1;
        let g = if positive { &self.e } else { &self.f };
        let pow = |m: usize| (0..m).fold(FMatrix::identity(self.dim()), |acc, _| acc.mul(&g[i]));
        let mut out = FMatrix::zeros(self.dim(), self.dim());
        for (k, c) in coeffs.iter().enumerate() {
            let t = if positive {
                pow(nn - k).mul(&g[j]).mul(&pow(k))
            } else {
                pow(k).mul(&g[j]).mul(&pow(nn - k))
            };
            out = out.add(&t.scale(c));
        }
        out
    }

    /// Both commutation identities for `e_i f_i^m` and `e_i^m f_i`, as
    /// operators, for `1 ≤ m ≤ max_m`.
    pub fn lemma33_check(&self, max_m: u32) -> Outcome {
        for i in 0..self.rank() {
            let check = lemma33_operators(
                &self.params.q_elem(i, i),
                &self.e[i],
                &self.f[i],
                &self.omega(i, 1),
                &self.omega_prime(i, 1),
                max_m,
            );
            if let Some(w) = check {
                return Outcome::fail(format!("i={}: {w}", i + 1));
            }
        }
        Outcome::pass()
    }

    /// Smallest `N` with `f_i^N v_k = 0`, up to `limit`.
    pub fn nilpotency_index(&self, i: usize, k: usize, limit: usize) -> Option<usize> {
        let mut v = vec![FieldElem::zero(); self.dim()];
        v[k] = FieldElem::one();
        for n in 0..=limit {
            if v.iter().all(|x| x.is_zero()) {
                return Some(n);
            }
            v = self.f[i].apply(&v);
        }
        None
    }

    /// Specialization-friendly canonical JSON.
    pub fn to_json(&self) -> serde_json::Value {
        let n = self.rank();
        let j = ModuleJson {
            label: self.params.datum().label.clone(),
            highest: self.highest.clone(),
            dim: self.dim(),
            weights: self.weights.iter().map(|w| w.iter().map(|r| r.to_string()).collect()).collect(),
            e: self.e.iter().map(|m| m.to_strings()).collect(),
            f: self.f.iter().map(|m| m.to_strings()).collect(),
            omega: (0..n).map(|i| (0..self.dim()).map(|k| self.omega_value(i, k).to_string()).collect()).collect(),
            omega_prime: (0..n)
                .map(|i| (0..self.dim()).map(|k| self.omega_prime_value(i, k).to_string()).collect())
                .collect(),
        };
        serde_json::to_value(j).expect("serializable")
    }
}

/// Checks `e f^m = f^m e + c f^{m-1}((m)_{q^{-1}} ω − (m)_q ω')` and
/// `e^m f = f e^m + c e^{m-1}((m)_q ω − (m)_{q^{-1}} ω')` with `q = q_ii`.
pub(crate) fn lemma33_operators(
    qii: &FieldElem,
    e: &FMatrix,
    f: &FMatrix,
    w: &FMatrix,
    wp: &FMatrix,
    max_m: u32,
) -> Option<String> {
    let c = qii.checked_div(&qii.sub(&FieldElem::one())).expect("q_ii is not 1");
    let qinv = qii.inv().expect("nonzero");
    let dim = e.rows();
    let mut fp = FMatrix::identity(dim);
    let mut ep = FMatrix::identity(dim);
    for m in 1..=max_m {
        let (fm1, em1) = (fp.clone(), ep.clone());
        fp = fp.mul(f);
        ep = ep.mul(e);
        let lhs = e.mul(&fp).sub(&fp.mul(e));
        let rhs = fm1.mul(&w.scale(&qint(m, &qinv)).sub(&wp.scale(&qint(m, qii)))).scale(&c);
        if let Some(d) = mat_diff(&format!("e f^{m}"), &lhs, &rhs) {
            return Some(d);
        }
        let lhs = ep.mul(f).sub(&f.mul(&ep));
        let rhs = em1.mul(&w.scale(&qint(m, qii)).sub(&wp.scale(&qint(m, &qinv)))).scale(&c);
        if let Some(d) = mat_diff(&format!("e^{m} f"), &lhs, &rhs) {
            return Some(d);
        }
    }
    None
}
