//! Cartan data, root and weight lattices, the invariant form.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::coeff::Rat;
use crate::error::{Error, Result};

/// A symmetrizable generalized Cartan matrix with its symmetrizer.
///
/// Convention: `a[i][j] = α_j(h_i)`, so the weight coordinates of `α_j`
/// form column `j` of `A`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanDatum {
    #[serde(rename = "A")]
    pub a: Vec<Vec<i64>>,
    pub d: Vec<i64>,
    #[serde(default)]
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub i: usize,
    pub j: usize,
    pub reason: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}): {}", self.i + 1, self.j + 1, self.reason)
    }
}

impl CartanDatum {
    pub fn new(a: Vec<Vec<i64>>, d: Vec<i64>, label: &str) -> Result<Self> {
        let c = CartanDatum { a, d, label: label.to_string() };
        c.validate().map_err(|v| {
            let msgs: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            Error::InvalidDatum(msgs.join("; "))
        })?;
        Ok(c)
    }

    /// Standard finite types of rank at most 3 by name. `B2` has `d = [2, 1]`
    /// and `G2` has `d = [3, 1]` (the first root is long in both).
    pub fn standard(name: &str) -> Result<Self> {
        let (a, d) = match name.to_ascii_uppercase().as_str() {
            "A1" => (vec![vec![2]], vec![1]),
            "A1XA1" | "A1A1" => (vec![vec![2, 0], vec![0, 2]], vec![1, 1]),
            "A2" => (vec![vec![2, -1], vec![-1, 2]], vec![1, 1]),
            "B2" => (vec![vec![2, -1], vec![-2, 2]], vec![2, 1]),
            "C2" => (vec![vec![2, -2], vec![-1, 2]], vec![1, 2]),
            "G2" => (vec![vec![2, -1], vec![-3, 2]], vec![3, 1]),
            "A3" => (
                vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]],
                vec![1, 1, 1],
            ),
            _ => return Err(Error::Usage(format!("unknown Cartan type `{name}`"))),
        };
        CartanDatum::new(a, d, &name.to_ascii_uppercase())
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let c: CartanDatum = serde_json::from_str(s)?;
        CartanDatum::new(c.a, c.d, &c.label)
    }

    pub fn rank(&self) -> usize {
        self.a.len()
    }

    pub fn validate(&self) -> std::result::Result<(), Vec<Violation>> {
        let n = self.a.len();
        let mut out = Vec::new();
        let bad = |i, j, r: &str| Violation { i, j, reason: r.to_string() };
        if self.d.len() != n {
            out.push(bad(0, 0, "symmetrizer length differs from rank"));
        }
        for (i, row) in self.a.iter().enumerate() {
            if row.len() != n {
                out.push(bad(i, 0, "matrix is not square"));
                return Err(out);
            }
        }
        for i in 0..n {
            if self.d.get(i).map(|&x| x <= 0).unwrap_or(false) {
                out.push(bad(i, i, "symmetrizer entry must be positive"));
            }
            if self.a[i][i] != 2 {
                out.push(bad(i, i, "diagonal entry must be 2"));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if self.a[i][j] > 0 {
                    out.push(bad(i, j, "off-diagonal entry must be nonpositive"));
                }
                if (self.a[i][j] == 0) != (self.a[j][i] == 0) {
                    out.push(bad(i, j, "a_ij = 0 must match a_ji = 0"));
                }
                if self.d.len() == n && self.d[i] * self.a[i][j] != self.d[j] * self.a[j][i] {
                    out.push(bad(i, j, "d_i a_ij != d_j a_ji"));
                }
            }
        }
        if out.is_empty() {
            Ok(())
        } else {
            Err(out)
        }
    }

    /// Finite type iff the symmetrized matrix is positive definite.
    pub fn is_finite_type(&self) -> bool {
        let n = self.rank();
        let b: Vec<Vec<Rat>> = (0..n)
            .map(|i| (0..n).map(|j| Rat::from_integer(self.d[i] * self.a[i][j])).collect())
            .collect();
        (1..=n).all(|k| {
            let m: Vec<Vec<Rat>> = b[..k].iter().map(|r| r[..k].to_vec()).collect();
            determinant(m).is_positive()
        })
    }

    /// `(α_i, α_j) = d_i a_ij`.
    pub fn form_simple(&self, i: usize, j: usize) -> i64 {
        self.d[i] * self.a[i][j]
    }

    /// Invariant form on root-basis coordinates.
    pub fn form(&self, mu: &[Rat], nu: &[Rat]) -> Rat {
        let n = self.rank();
        let mut s = Rat::zero();
        for i in 0..n {
            if mu[i].is_zero() {
                continue;
            }
            for j in 0..n {
                s += mu[i] * nu[j] * Rat::from_integer(self.form_simple(i, j));
            }
        }
        s
    }

    /// Exact inverse of `A`; requires finite type.
    pub fn a_inverse(&self) -> Result<Vec<Vec<Rat>>> {
        if !self.is_finite_type() {
            return Err(Error::Unsupported(
                "weight-lattice coordinates need a finite-type datum".into(),
            ));
        }
        let m: Vec<Vec<Rat>> = self
            .a
            .iter()
            .map(|r| r.iter().map(|&x| Rat::from_integer(x)).collect())
            .collect();
        Ok(invert(m).expect("finite type matrices are invertible"))
    }

    /// Root coordinates of a weight given by its values `λ(h_i)`.
    pub fn weight_to_root(&self, w: &[Rat]) -> Result<Vec<Rat>> {
        let inv = self.a_inverse()?;
        Ok(inv
            .iter()
            .map(|row| row.iter().zip(w).fold(Rat::zero(), |s, (a, b)| s + a * b))
            .collect())
    }

    /// Values `λ(h_i)` of a root-coordinate vector.
    pub fn root_to_weight(&self, r: &[Rat]) -> Vec<Rat> {
        self.a
            .iter()
            .map(|row| row.iter().zip(r).fold(Rat::zero(), |s, (&a, b)| s + b * a))
            .collect()
    }

    /// Fundamental weight `Λ_j` in root coordinates.
    pub fn fundamental_weight(&self, j: usize) -> Result<Vec<Rat>> {
        let mut w = vec![Rat::zero(); self.rank()];
        w[j] = Rat::one();
        self.weight_to_root(&w)
    }

    /// `ρ` in root coordinates (`ρ(h_i) = 1`).
    pub fn rho(&self) -> Result<Vec<Rat>> {
        self.weight_to_root(&vec![Rat::one(); self.rank()])
    }

    pub fn simple_root(&self, i: usize) -> Vec<Rat> {
        let mut r = vec![Rat::zero(); self.rank()];
        r[i] = Rat::one();
        r
    }
}

impl CartanDatum {
    /// Positive roots in simple-root coordinates, listed by height; finite
    /// type only.
    pub fn positive_roots(&self) -> Result<Vec<Vec<i64>>> {
        if !self.is_finite_type() {
            return Err(Error::Unsupported("root enumeration needs a finite-type datum".into()));
        }
        let n = self.rank();
        let mut roots: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        let mut k = 0;
        // β + α_i is a root iff the α_i-string through β reaches past β
        while k < roots.len() {
            let b = roots[k].clone();
            for i in 0..n {
                let mut down = 0;
                let mut c = b.clone();
                loop {
                    c[i] -= 1;
                    if roots.contains(&c) {
                        down += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|j| self.a[i][j] * b[j]).sum();
                if down - pairing > 0 {
                    let mut up = b.clone();
                    up[i] += 1;
                    if !roots.contains(&up) {
                        roots.push(up);
                    }
                }
            }
            k += 1;
        }
        roots.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
        Ok(roots)
    }

    /// Number of ways to write `beta` as a multiset of positive roots.
    pub fn kostant_partition(&self, beta: &[i64]) -> Result<u64> {
        let roots = self.positive_roots()?;
        let mut memo = std::collections::HashMap::new();
        fn count(roots: &[Vec<i64>], k: usize, rest: Vec<i64>, memo: &mut std::collections::HashMap<(usize, Vec<i64>), u64>) -> u64 {
            if rest.iter().all(|&x| x == 0) {
                return 1;
            }
            if k == roots.len() || rest.iter().any(|&x| x < 0) {
                return 0;
            }
            if let Some(&v) = memo.get(&(k, rest.clone())) {
                return v;
            }
            let mut less = rest.clone();
            for (a, b) in less.iter_mut().zip(&roots[k]) {
                *a -= b;
            }
            let v = count(roots, k + 1, rest.clone(), memo) + count(roots, k, less, memo);
            memo.insert((k, rest), v);
            v
        }
        Ok(count(&roots, 0, beta.to_vec(), &mut memo))
    }
}

/// A lattice vector tagged with the basis its coordinates refer to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeVec {
    pub basis: Basis,
    #[serde(with = "rat_vec")]
    pub coords: Vec<Rat>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Root,
    Weight,
}

impl LatticeVec {
    pub fn root(coords: Vec<Rat>) -> Self {
        LatticeVec { basis: Basis::Root, coords }
    }

    pub fn root_int(coords: &[i64]) -> Self {
        LatticeVec::root(coords.iter().map(|&x| Rat::from_integer(x)).collect())
    }

    pub fn weight(coords: Vec<Rat>) -> Self {
        LatticeVec { basis: Basis::Weight, coords }
    }

    pub fn weight_int(coords: &[i64]) -> Self {
        LatticeVec::weight(coords.iter().map(|&x| Rat::from_integer(x)).collect())
    }

    pub fn to_root(&self, datum: &CartanDatum) -> Result<Vec<Rat>> {
        match self.basis {
            Basis::Root => Ok(self.coords.clone()),
            Basis::Weight => datum.weight_to_root(&self.coords),
        }
    }

    pub fn in_root_lattice(&self, datum: &CartanDatum) -> Result<bool> {
        Ok(self.to_root(datum)?.iter().all(|x| x.is_integer()))
    }
}

mod rat_vec {
    use super::Rat;
    use crate::coeff::monomial::fmt_rat;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rat], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(fmt_rat))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rat>, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Entry {
            Int(i64),
            Str(String),
        }
        let raw: Vec<Entry> = Vec::deserialize(d)?;
        raw.into_iter()
            .map(|e| match e {
                Entry::Int(n) => Ok(Rat::from_integer(n)),
                Entry::Str(s) => parse_rat(&s).ok_or_else(|| serde::de::Error::custom(s)),
            })
            .collect()
    }

    pub fn parse_rat(s: &str) -> Option<Rat> {
        match s.split_once('/') {
            Some((n, d)) => {
                let n: i64 = n.trim().parse().ok()?;
                let d: i64 = d.trim().parse().ok()?;
                (d != 0).then(|| Rat::new(n, d))
            }
            None => s.trim().parse().ok().map(Rat::from_integer),
        }
    }
}

pub use rat_vec::parse_rat;

fn determinant(mut m: Vec<Vec<Rat>>) -> Rat {
    let n = m.len();
    let mut det = Rat::one();
    for c in 0..n {
        let p = match (c..n).find(|&r| !m[r][c].is_zero()) {
            Some(p) => p,
            None => return Rat::zero(),
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= m[c][c];
        for r in c + 1..n {
            let f = m[r][c] / m[c][c];
            for k in c..n {
                let t = m[c][k];
                m[r][k] -= f * t;
            }
        }
    }
    det
}

fn invert(mut m: Vec<Vec<Rat>>) -> Option<Vec<Vec<Rat>>> {
    let n = m.len();
    let mut inv: Vec<Vec<Rat>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect())
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !m[r][c].is_zero())?;
        m.swap(p, c);
        inv.swap(p, c);
        let piv = m[c][c];
        for k in 0..n {
            m[c][k] /= piv;
            inv[c][k] /= piv;
        }
        for r in 0..n {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c];
                for k in 0..n {
                    let (a, b) = (m[c][k], inv[c][k]);
                    m[r][k] -= f * a;
                    inv[r][k] -= f * b;
                }
            }
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_types_validate() {
        for t in ["A1", "A2", "B2", "C2", "G2", "A3", "A1xA1"] {
            let c = CartanDatum::standard(t).unwrap();
            assert!(c.is_finite_type(), "{t}");
        }
    }

    #[test]
    fn root_counts() {
        for (t, n) in [("A1", 1), ("A2", 3), ("B2", 4), ("G2", 6), ("A3", 6), ("A1xA1", 2)] {
            assert_eq!(CartanDatum::standard(t).unwrap().positive_roots().unwrap().len(), n, "{t}");
        }
        let g2 = CartanDatum::standard("G2").unwrap();
        assert!(g2.positive_roots().unwrap().contains(&vec![2, 3]) || g2.positive_roots().unwrap().contains(&vec![3, 2]));
        let a2 = CartanDatum::standard("A2").unwrap();
        assert_eq!(a2.kostant_partition(&[1, 1]).unwrap(), 2);
        assert_eq!(a2.kostant_partition(&[2, 2]).unwrap(), 3);
    }

    #[test]
    fn violations_are_reported() {
        let c = CartanDatum { a: vec![vec![2, -1], vec![0, 2]], d: vec![1, 1], label: String::new() };
        let v = c.validate().unwrap_err();
        assert!(v.iter().any(|x| x.reason.contains("a_ij = 0")));
        let c = CartanDatum { a: vec![vec![2, -1], vec![-2, 2]], d: vec![1, 1], label: String::new() };
        assert!(c.validate().is_err());
    }

    #[test]
    fn affine_is_not_finite() {
        let c = CartanDatum::new(vec![vec![2, -2], vec![-2, 2]], vec![1, 1], "A1(1)").unwrap();
        assert!(!c.is_finite_type());
        assert!(c.rho().is_err());
    }

    #[test]
    fn weights_and_rho() {
        let a2 = CartanDatum::standard("A2").unwrap();
        assert_eq!(a2.fundamental_weight(0).unwrap(), vec![Rat::new(2, 3), Rat::new(1, 3)]);
        assert_eq!(a2.rho().unwrap(), vec![Rat::one(), Rat::one()]);
        let a1 = CartanDatum::standard("A1").unwrap();
        let rho = a1.rho().unwrap();
        assert_eq!(a1.form(&rho, &rho), Rat::new(1, 2));
    }

    #[test]
    fn datum_json() {
        let c = CartanDatum::from_json(r#"{"A":[[2,-1],[-2,2]],"d":[2,1],"label":"B2"}"#).unwrap();
        assert_eq!(c, CartanDatum::standard("B2").unwrap());
        assert!(CartanDatum::from_json(r#"{"A":[[2,-1],[0,2]],"d":[1,1]}"#).is_err());
    }
}
