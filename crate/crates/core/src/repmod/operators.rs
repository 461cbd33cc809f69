//! Θ, the Casimir and Ξ operators, the braiding and decompositions.

use std::collections::BTreeMap;

use num_integer::Integer;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{mat_diff, WeightModule};
use crate::borel::{FreeElem, PairingEngine};
use crate::check::Outcome;
use crate::coeff::monomial::Rat;
use crate::coeff::specialize::random_assignment;
use crate::coeff::{FieldElem, Monomial, Specializer, Var};
use crate::error::{Error, Result};
use crate::linalg::{FMatrix, Matrix, QMatrix, Scalar};

/// All `β ≥ 0` of height at most `h`, by height.
fn degrees_up_to(n: usize, h: usize) -> Vec<Vec<i64>> {
    let mut out = vec![vec![0i64; n]];
    let mut level = out.clone();
    for _ in 0..h {
        let mut next: Vec<Vec<i64>> = Vec::new();
        for b in &level {
            for i in 0..n {
                let mut c = b.clone();
                c[i] += 1;
                if !next.contains(&c) {
                    next.push(c);
                }
            }
        }
        next.sort();
        out.extend(next.iter().cloned());
        level = next;
    }
    out
}

fn free_action(m: &WeightModule, x: &FreeElem, positive: bool) -> FMatrix {
    let mut out = FMatrix::zeros(m.dim(), m.dim());
    for (w, c) in x {
        out = out.add(&m.word_action(w, positive).scale(c));
    }
    out
}

/// `Θ_β = Σ_k v_k ⊗ u_k` acting on `M ⊗ M'`, for every `β` of height at most
/// `cutoff`.
pub fn theta(m: &WeightModule, mp: &WeightModule, cutoff: usize) -> Result<BTreeMap<Vec<i64>, FMatrix>> {
    let mut engine = PairingEngine::with_bound(&m.params, cutoff as u32);
    let mut out = BTreeMap::new();
    for beta in degrees_up_to(m.rank(), cutoff) {
        let d = engine.dual_bases(&beta)?;
        let mut acc = FMatrix::zeros(m.dim() * mp.dim(), m.dim() * mp.dim());
        for (v, u) in d.theta() {
            let a = free_action(m, &v, false);
            if a.is_zero() {
                continue;
            }
            let b = mp.word_action(&u, true);
            acc = acc.add(&a.kron(&b));
        }
        out.insert(beta, acc);
    }
    Ok(out)
}

fn theta_total(m: &WeightModule, mp: &WeightModule) -> Result<FMatrix> {
    let cutoff = m.spread().min(mp.spread());
    let parts = theta(m, mp, cutoff)?;
    Ok(parts.values().fold(FMatrix::zeros(m.dim() * mp.dim(), m.dim() * mp.dim()), |acc, t| acc.add(t)))
}

/// `R = Θ_{M',M} ∘ p_{M',M} ∘ P : M ⊗ M' → M' ⊗ M`, with
/// `p(m' ⊗ m) = q_{wt m', wt m}^{-1} m' ⊗ m`.
pub fn braiding(m: &WeightModule, mp: &WeightModule) -> Result<FMatrix> {
    let (d, dp) = (m.dim(), mp.dim());
    let mut flip = FMatrix::zeros(d * dp, d * dp);
    for a in 0..d {
        for b in 0..dp {
            flip.set(b * d + a, a * dp + b, FieldElem::one());
        }
    }
    let mut grading = Vec::with_capacity(d * dp);
    for b in 0..dp {
        for a in 0..d {
            grading.push(FieldElem::monomial(m.params.q_pair(&mp.weights[b], &m.weights[a]).inv()));
        }
    }
    let th = theta_total(mp, m)?;
    Ok(th.mul(&FMatrix::diagonal(grading)).mul(&flip))
}

/// `R Δ_{M⊗M'}(x) = Δ_{M'⊗M}(x) R` for every generator `x`.
pub fn braiding_intertwines(m: &WeightModule, mp: &WeightModule) -> Result<Outcome> {
    let r = braiding(m, mp)?;
    let (a, b) = (m.tensor(mp), mp.tensor(m));
    for i in 0..m.rank() {
        let pairs = [
            ("e", &a.e[i], &b.e[i]),
            ("f", &a.f[i], &b.f[i]),
        ];
        for (name, x, y) in pairs {
            if let Some(d) = mat_diff(&format!("{name}_{}", i + 1), &r.mul(x), &y.mul(&r)) {
                return Ok(Outcome::fail(d));
            }
        }
        let ws = [
            ("ω", a.omega(i, 1), b.omega(i, 1)),
            ("ω'", a.omega_prime(i, 1), b.omega_prime(i, 1)),
        ];
        for (name, x, y) in ws {
            if let Some(d) = mat_diff(&format!("{name}_{}", i + 1), &r.mul(&x), &y.mul(&r)) {
                return Ok(Outcome::fail(d));
            }
        }
    }
    Ok(Outcome::pass())
}

/// The three commutation identities between generators and the homogeneous
/// pieces of Θ, as operators on `M ⊗ M'`.
pub fn lemma48_check(m: &WeightModule, mp: &WeightModule) -> Result<Outcome> {
    let n = m.rank();
    let cutoff = m.spread().min(mp.spread());
    let parts = theta(m, mp, cutoff)?;
    let dim = m.dim() * mp.dim();
    let zero = FMatrix::zeros(dim, dim);
    let get = |b: &[i64]| -> &FMatrix { parts.get(b).unwrap_or(&zero) };
    let (id, idp) = (FMatrix::identity(m.dim()), FMatrix::identity(mp.dim()));
    for beta in degrees_up_to(n, cutoff + 1) {
        let tb = get(&beta);
        for i in 0..n {
            let ww = m.omega(i, 1).kron(&mp.omega(i, 1));
            let wpwp = m.omega_prime(i, 1).kron(&mp.omega_prime(i, 1));
            if let Some(d) = mat_diff("(i) ω", &ww.mul(tb), &tb.mul(&ww)).or_else(|| mat_diff("(i) ω'", &wpwp.mul(tb), &tb.mul(&wpwp))) {
                return Ok(Outcome::fail(format!("β={beta:?}: {d}")));
            }
            let lower = if beta[i] > 0 {
                let mut b = beta.clone();
                b[i] -= 1;
                get(&b).clone()
            } else {
                zero.clone()
            };
            let e1 = m.e[i].kron(&idp);
            let lhs = e1.mul(tb).add(&m.omega(i, 1).kron(&mp.e[i]).mul(&lower));
            let rhs = tb.mul(&e1).add(&lower.mul(&m.omega_prime(i, 1).kron(&mp.e[i])));
            if let Some(d) = mat_diff("(ii)", &lhs, &rhs) {
                return Ok(Outcome::fail(format!("β={beta:?}, i={}: {d}", i + 1)));
            }
            let f2 = id.kron(&mp.f[i]);
            let lhs = f2.mul(tb).add(&m.f[i].kron(&mp.omega_prime(i, 1)).mul(&lower));
            let rhs = tb.mul(&f2).add(&lower.mul(&m.f[i].kron(&mp.omega(i, 1))));
            if let Some(d) = mat_diff("(iii)", &lhs, &rhs) {
                return Ok(Outcome::fail(format!("β={beta:?}, i={}: {d}", i + 1)));
            }
        }
    }
    Ok(Outcome::pass())
}

/// `Ω = Σ_β Σ_k S(v_k) u_k` with `S(f_j) = −f_j ω'^{-1}_j`; refuses a cutoff
/// below the spread of the module.
pub fn casimir(m: &WeightModule, cutoff: usize) -> Result<FMatrix> {
    if cutoff < m.spread() {
        return Err(Error::Domain(format!(
            "cutoff {cutoff} is below the module depth {}; the truncation would be inexact",
            m.spread()
        )));
    }
    let n = m.rank();
    let s_gen: Vec<FMatrix> = (0..n).map(|j| m.f[j].mul(&m.omega_prime(j, -1)).scale(&FieldElem::from_int(-1))).collect();
    let mut engine = PairingEngine::with_bound(&m.params, cutoff as u32);
    let mut out = FMatrix::zeros(m.dim(), m.dim());
    for beta in degrees_up_to(n, cutoff) {
        let d = engine.dual_bases(&beta)?;
        for (v, u) in d.theta() {
            let mut sv = FMatrix::zeros(m.dim(), m.dim());
            for (w, c) in &v {
                let s = w.iter().rev().fold(FMatrix::identity(m.dim()), |acc, &l| acc.mul(&s_gen[l as usize]));
                sv = sv.add(&s.scale(c));
            }
            if sv.is_zero() {
                continue;
            }
            out = out.add(&sv.mul(&m.word_action(&u, true)));
        }
    }
    Ok(out)
}

/// `g(μ) = t^{(μ+ρ, μ+ρ)/2}` with `t = q_ii^{1/d_i}`, `μ` in root coordinates.
pub fn g_value(p: &crate::coeff::ParamMatrix, mu: &[Rat]) -> Result<Monomial> {
    let datum = p.datum();
    let rho = datum.rho()?;
    let s: Vec<Rat> = mu.iter().zip(&rho).map(|(a, b)| a + b).collect();
    let t = p.q(0, 0).pow(Rat::new(1, datum.d[0]));
    Ok(t.pow(datum.form(&s, &s) / Rat::from_integer(2)))
}

/// `Ξ v_μ = g(μ) v_μ`.
pub fn xi_operator(m: &WeightModule) -> Result<FMatrix> {
    let d = m
        .weights
        .iter()
        .map(|w| g_value(&m.params, w).map(FieldElem::monomial))
        .collect::<Result<Vec<_>>>()?;
    Ok(FMatrix::diagonal(d))
}

/// `Ω e_i v = q_ii^{-(λ+α_i)(h_i)} e_i Ω v`, `Ω f_i v = q_ii^{λ(h_i)} f_i Ω v`
/// for `v` of weight `λ`.
pub fn casimir_commutation_check(m: &WeightModule, omega: &FMatrix) -> Outcome {
    for i in 0..m.rank() {
        let qii = m.params.q(i, i);
        let de = FMatrix::diagonal(
            (0..m.dim())
                .map(|k| FieldElem::monomial(qii.pow(-(m.weight_value(k, i) + Rat::from_integer(2)))))
                .collect(),
        );
        let df = FMatrix::diagonal((0..m.dim()).map(|k| FieldElem::monomial(qii.pow(m.weight_value(k, i)))).collect());
        let d = mat_diff(&format!("Ω e_{}", i + 1), &omega.mul(&m.e[i]), &m.e[i].mul(omega).mul(&de))
            .or_else(|| mat_diff(&format!("Ω f_{}", i + 1), &omega.mul(&m.f[i]), &m.f[i].mul(omega).mul(&df)));
        if let Some(d) = d {
            return Outcome::fail(d);
        }
    }
    Outcome::pass()
}

/// `ΩΞ` commutes with every generator.
pub fn casimir_xi_central_check(m: &WeightModule, cx: &FMatrix) -> Outcome {
    for i in 0..m.rank() {
        let gens = [
            ("e", m.e[i].clone()),
            ("f", m.f[i].clone()),
            ("ω", m.omega(i, 1)),
            ("ω'", m.omega_prime(i, 1)),
        ];
        for (name, g) in gens {
            if let Some(d) = mat_diff(&format!("{name}_{}", i + 1), &cx.mul(&g), &g.mul(cx)) {
                return Outcome::fail(d);
            }
        }
    }
    Outcome::pass()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Constituent {
    /// Highest weight in fundamental-weight coordinates.
    pub highest: Vec<i64>,
    pub multiplicity: usize,
    pub dim: usize,
}

/// Splits `M` by the eigenvalues of `ΩΞ` on each weight space.
pub fn decompose(m: &WeightModule) -> Result<Vec<Constituent>> {
    let datum = m.params.datum().clone();
    let cx = casimir(m, m.spread())?.mul(&xi_operator(m)?);
    let mut spaces: BTreeMap<Vec<Rat>, Vec<usize>> = BTreeMap::new();
    for (k, w) in m.weights.iter().enumerate() {
        spaces.entry(w.clone()).or_default().push(k);
    }
    let mut found: Vec<(Vec<i64>, Monomial, usize, usize)> = Vec::new();
    for w in spaces.keys() {
        let vals = datum.root_to_weight(w);
        if vals.iter().any(|v| !v.is_integer() || *v < Rat::from_integer(0)) {
            continue;
        }
        let g = g_value(&m.params, w)?;
        let gf = FieldElem::monomial(g.clone());
        let mut mult = 0;
        let mut total = 0;
        for (nu, idx) in &spaces {
            let block = cx.select(idx, idx).sub(&FMatrix::identity(idx.len()).scale(&gf));
            let k = idx.len() - block.rank();
            if nu == w {
                mult = k;
            }
            total += k;
        }
        if mult == 0 {
            continue;
        }
        if total % mult != 0 {
            return Err(Error::Internal(format!("eigenspace of dimension {total} is not a multiple of {mult}")));
        }
        let hw: Vec<i64> = vals.iter().map(|v| v.to_integer()).collect();
        if let Some(other) = found.iter().find(|x| x.1 == g) {
            return Err(Error::Internal(format!(
                "eigenvalue collision between highest weights {:?} and {hw:?}",
                other.0
            )));
        }
        found.push((hw, g, mult, total / mult));
    }
    let sum: usize = found.iter().map(|x| x.2 * x.3).sum();
    if sum != m.dim() {
        return Err(Error::Internal(format!("constituents account for {sum} of {} dimensions", m.dim())));
    }
    let mut out: Vec<Constituent> =
        found.into_iter().map(|(highest, _, multiplicity, dim)| Constituent { highest, multiplicity, dim }).collect();
    out.sort_by(|a, b| b.dim.cmp(&a.dim).then(a.highest.cmp(&b.highest)));
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "kind")]
pub enum Backend {
    Exact,
    Specialized { seed: u64 },
}

#[derive(Clone, Debug, Serialize)]
pub struct QybeReport {
    pub holds: bool,
    pub backend: Backend,
    pub dim: usize,
    /// Values used by the specialized backend, as canonical strings.
    pub assignment: Option<BTreeMap<String, String>>,
    pub witness: Option<String>,
}

/// `(R_{M',M''} ⊗ 1)(1 ⊗ R_{M,M''})(R_{M,M'} ⊗ 1)` and
/// `(1 ⊗ R_{M,M'})(R_{M,M''} ⊗ 1)(1 ⊗ R_{M',M''})` on `M ⊗ M' ⊗ M''`.
fn braid_sides<T: Scalar>(
    r_ab: &Matrix<T>,
    r_ac: &Matrix<T>,
    r_bc: &Matrix<T>,
    (da, db, dc): (usize, usize, usize),
) -> (Matrix<T>, Matrix<T>) {
    let id = |n: usize| Matrix::<T>::identity(n);
    let lhs = r_bc.kron(&id(da)).mul(&id(db).kron(r_ac)).mul(&r_ab.kron(&id(dc)));
    let rhs = id(dc).kron(r_ab).mul(&r_ac.kron(&id(db))).mul(&id(da).kron(r_bc));
    (lhs, rhs)
}

fn exponent_lift(ms: &[&FMatrix]) -> (Vec<Var>, u32) {
    let mut vars: Vec<Var> = Vec::new();
    let mut lift: i64 = 1;
    for m in ms {
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                let x = m.get(r, c);
                for poly in [x.numer(), x.denom()] {
                    for (mono, _) in poly.terms() {
                        for (v, e) in mono.exponents() {
                            lift = lift.lcm(e.denom());
                            if !vars.contains(v) {
                                vars.push(*v);
                            }
                        }
                    }
                }
            }
        }
    }
    vars.sort();
    (vars, lift as u32)
}

/// The braid relation for `R` on `M ⊗ M' ⊗ M''`.
pub fn qybe_check(m: &WeightModule, mp: &WeightModule, mpp: &WeightModule, backend: Backend) -> Result<QybeReport> {
    let r_ab = braiding(m, mp)?;
    let r_ac = braiding(m, mpp)?;
    let r_bc = braiding(mp, mpp)?;
    let dims = (m.dim(), mp.dim(), mpp.dim());
    let dim = dims.0 * dims.1 * dims.2;
    match backend {
        Backend::Exact => {
            let (l, r) = braid_sides(&r_ab, &r_ac, &r_bc, dims);
            let witness = mat_diff("braid relation", &l, &r);
            Ok(QybeReport { holds: witness.is_none(), backend, dim, assignment: None, witness })
        }
        Backend::Specialized { seed } => {
            let (vars, lift) = exponent_lift(&[&r_ab, &r_ac, &r_bc]);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..64 {
                let at = random_assignment(&mut rng, &vars, lift);
                let mut sp = Specializer::new(at.clone());
                let mut conv = |x: &FMatrix| -> Result<QMatrix> { x.map(|e| sp.eval(e)) };
                let (a, b, c) = match (conv(&r_ab), conv(&r_ac), conv(&r_bc)) {
                    (Ok(a), Ok(b), Ok(c)) => (a, b, c),
                    _ => continue,
                };
                let (l, r) = braid_sides(&a, &b, &c, dims);
                let witness = l.first_difference(&r).map(|(i, j)| format!("braid relation differs at ({i},{j})"));
                let assignment = at.iter().map(|(v, x)| (v.to_string(), x.to_string())).collect();
                return Ok(QybeReport { holds: witness.is_none(), backend, dim, assignment: Some(assignment), witness });
            }
            Err(Error::Eval("no admissible specialization found in 64 draws".into()))
        }
    }
}
