//! q-integers, q-factorials, q-binomials and the classical identities
//! relating them.

use super::field::FieldElem;
use super::monomial::Var;
use crate::error::{Error, Result};

/// `(n)_a = 1 + a + ... + a^{n-1}`.
pub fn qint(n: u32, a: &FieldElem) -> FieldElem {
    let mut acc = FieldElem::zero();
    let mut p = FieldElem::one();
    for _ in 0..n {
        acc = acc.add(&p);
        p = p.mul(a);
    }
    acc
}

/// `(n)_a! = (n)_a (n-1)_a ... (1)_a`.
pub fn qfact(n: u32, a: &FieldElem) -> FieldElem {
    (1..=n).fold(FieldElem::one(), |acc, k| acc.mul(&qint(k, a)))
}

/// Gaussian binomial as a ratio of q-factorials.
pub fn qbinom(n: u32, k: u32, a: &FieldElem) -> Result<FieldElem> {
    if k > n {
        return Err(Error::Domain(format!("binomial with k = {k} > n = {n}")));
    }
    let den = qfact(k, a).mul(&qfact(n - k, a));
    qfact(n, a)
        .checked_div(&den)
        .ok_or_else(|| Error::Domain("q-factorial vanishes".into()))
}

/// Binomial extended by zero outside `0 <= k <= n`.
pub fn qbinom_ext(n: i64, k: i64, a: &FieldElem) -> FieldElem {
    if n < 0 || k < 0 || k > n {
        FieldElem::zero()
    } else {
        qbinom(n as u32, k as u32, a).expect("in range")
    }
}

/// Checks `Σ_k (-1)^k [n,k]_v v^{k(k-1)/2} a^{n-k} z^k = Π_{k<n} (a - v^k z)`
/// with base `v` the generic variable.
pub fn gauss_product_check(n: u32, a: &FieldElem, z: &FieldElem) -> bool {
    gauss_product_check_in(&FieldElem::var(Var::V), n, a, z)
}

pub fn gauss_product_check_in(v: &FieldElem, n: u32, a: &FieldElem, z: &FieldElem) -> bool {
    let mut lhs = FieldElem::zero();
    for k in 0..=n {
        let b = qbinom(n, k, v).expect("k <= n");
        let mut t = b
            .mul(&v.powi((k as i64) * (k as i64 - 1) / 2))
            .mul(&a.powi((n - k) as i64))
            .mul(&z.powi(k as i64));
        if k % 2 == 1 {
            t = t.neg();
        }
        lhs = lhs.add(&t);
    }
    let rhs = (0..n).fold(FieldElem::one(), |acc, k| {
        acc.mul(&a.sub(&v.powi(k as i64).mul(z)))
    });
    lhs == rhs
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct IdentityResult {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl IdentityResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs the addition, absorption, triple-product, Pascal and Gauss product
/// identities for all parameters up to `bound`, with symbolic base `v`.
pub fn identity_suite(bound: u32) -> Vec<IdentityResult> {
    let v = FieldElem::var(Var::V);
    let b = bound as i64;
    let bin = |n: i64, k: i64| qbinom_ext(n, k, &v);
    let qi = |n: i64| qint(n as u32, &v);
    let mut out = Vec::new();

    let mut r = IdentityResult { name: "q-addition".into(), cases: 0, failures: vec![] };
    for m in 0..=b {
        for n in 0..=b {
            r.cases += 1;
            if qi(m + n) != qi(m).add(&v.powi(m).mul(&qi(n))) {
                r.failures.push(format!("m={m} n={n}"));
            }
        }
    }
    out.push(r);

    let mut r = IdentityResult { name: "binomial-absorption".into(), cases: 0, failures: vec![] };
    for m in 0..=b {
        for k in 0..=m {
            r.cases += 1;
            if bin(m, k).mul(&qi(m - k)) != bin(m, k + 1).mul(&qi(k + 1)) {
                r.failures.push(format!("m={m} k={k}"));
            }
        }
    }
    out.push(r);

    let mut r = IdentityResult { name: "binomial-triple-product".into(), cases: 0, failures: vec![] };
    for rr in 0..=b {
        for k in 0..=rr {
            for m in 0..=b {
                for n in 0..=b {
                    r.cases += 1;
                    let lhs = bin(rr, k).mul(&bin(k, m)).mul(&bin(rr - k, n));
                    let rhs = bin(rr - m - n, k - m).mul(&bin(m + n, m)).mul(&bin(rr, m + n));
                    if lhs != rhs {
                        r.failures.push(format!("r={rr} k={k} m={m} n={n}"));
                    }
                }
            }
        }
    }
    out.push(r);

    let mut r = IdentityResult { name: "q-pascal".into(), cases: 0, failures: vec![] };
    for n in 1..=b {
        for k in 0..=n {
            r.cases += 1;
            let first = v.powi(k).mul(&bin(n - 1, k)).add(&bin(n - 1, k - 1));
            let second = bin(n - 1, k).add(&v.powi(n - k).mul(&bin(n - 1, k - 1)));
            if bin(n, k) != first || bin(n, k) != second {
                r.failures.push(format!("n={n} k={k}"));
            }
        }
    }
    out.push(r);

    let mut r = IdentityResult { name: "gauss-product".into(), cases: 0, failures: vec![] };
    let a = FieldElem::var(Var::Sym('a'));
    let z = FieldElem::var(Var::Sym('z'));
    for n in 0..=bound {
        r.cases += 1;
        if !gauss_product_check(n, &a, &z) {
            r.failures.push(format!("n={n}"));
        }
    }
    out.push(r);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(s: &str) -> FieldElem {
        s.parse().unwrap()
    }

    #[test]
    fn small_values() {
        let v = FieldElem::var(Var::V);
        assert!(qint(0, &v).is_zero());
        assert_eq!(qint(3, &v), fe("1 + v + v^2"));
        assert_eq!(qbinom(4, 2, &v).unwrap(), fe("1 + v + 2*v^2 + v^3 + v^4"));
        assert!(qbinom(6, 0, &v).unwrap().is_one());
        assert!(qbinom(2, 3, &v).is_err());
    }

    #[test]
    fn gauss_product_small() {
        let v = FieldElem::var(Var::V);
        assert!(gauss_product_check(0, &v, &FieldElem::one()));
        assert!(gauss_product_check(3, &v, &FieldElem::one()));
        // Using z^k in place of v^k z already fails at n = 2.
        let (a, z) = (fe("a"), fe("z"));
        let lhs_n2 = a.mul(&a).sub(&qint(2, &v).mul(&a).mul(&z)).add(&v.mul(&z).mul(&z));
        let printed = a.sub(&v).mul(&a.sub(&v.mul(&z)));
        assert_ne!(lhs_n2, printed);
    }

    #[test]
    fn suite_passes_to_four() {
        for r in identity_suite(4) {
            assert!(r.passed(), "{}: {:?}", r.name, r.failures);
        }
    }
}
