//! Sparse Laurent polynomials with integer coefficients and rational exponents.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::monomial::{fmt_rat, Monomial, Rat, Var};

/// Terms are kept sorted by decreasing monomial (graded lex), with no zero
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Monomial, BigInt)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Poly::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: BigInt) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    pub fn monomial(m: Monomial) -> Self {
        Poly::term(m, BigInt::one())
    }

    pub fn var(v: Var) -> Self {
        Poly::monomial(Monomial::var(v))
    }

    /// Collects arbitrary terms, merging equal monomials.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(it: I) -> Self {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (m, c) in it {
            *acc.entry(m).or_insert_with(BigInt::zero) += c;
        }
        let mut terms: Vec<(Monomial, BigInt)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Poly { terms }
    }

    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// A single term `c * m`.
    pub fn as_term(&self) -> Option<(&Monomial, &BigInt)> {
        match self.terms.as_slice() {
            [(m, c)] => Some((m, c)),
            _ => None,
        }
    }

    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.merge(other, true)
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let sign = |c: &BigInt| if negate { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((b[j].0.clone(), sign(&b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), sign(c))));
        Poly { terms: out }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if let Some((m, c)) = other.as_term() {
            return self.mul_term(m, c);
        }
        if let Some((m, c)) = self.as_term() {
            return other.mul_term(m, c);
        }
        let mut acc: HashMap<Monomial, BigInt> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        let mut terms: Vec<(Monomial, BigInt)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Poly { terms }
    }

    /// Multiplying by a single term preserves the order of terms.
    pub fn mul_term(&self, m: &Monomial, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(a, b)| (a.mul(m), b * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(a, b)| (a.mul(m), b.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        self.mul_term(&Monomial::one(), c)
    }

    /// Divides every coefficient by `c`, which must divide them exactly.
    pub fn div_int_exact(&self, c: &BigInt) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, b)| (m.clone(), b / c)).collect(),
        }
    }

    pub fn powi(&self, n: u32) -> Poly {
        let mut out = Poly::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                out = out.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    /// Gcd of the integer coefficients, always nonnegative.
    pub fn int_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Componentwise minimum exponent over all terms.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        let first = match it.next() {
            Some((m, _)) => m.clone(),
            None => return Monomial::one(),
        };
        it.fold(first, |acc, (m, _)| acc.meet(m))
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.terms.iter().flat_map(|(m, _)| m.vars()).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn map_monomials(&self, f: &dyn Fn(&Monomial) -> Monomial) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (f(m), c.clone())))
    }

    /// Exact division `self / d`; `None` if `d` does not divide `self` in the
    /// polynomial ring over the exponent lattice of the inputs.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        if let Some((m, c)) = d.as_term() {
            let mut terms = Vec::with_capacity(self.terms.len());
            for (a, b) in &self.terms {
                let (q, r) = b.div_rem(c);
                if !r.is_zero() {
                    return None;
                }
                terms.push((a.div(m), q));
            }
            return Some(Poly { terms });
        }
        // Shift both to honest polynomials; the quotient is then a polynomial
        // too, which bounds the search.
        let ms = self.monomial_content();
        let md = d.monomial_content();
        let d = d.mul_monomial(&md.inv());
        let (ld, lc) = d.leading().unwrap();
        let mut rem = self.mul_monomial(&ms.inv());
        let mut quot: Vec<(Monomial, BigInt)> = Vec::new();
        while let Some((lm, lcoef)) = rem.leading() {
            let (q, r) = lcoef.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            let m = lm.div(ld);
            if m.exponents().iter().any(|(_, e)| e.is_negative()) {
                return None;
            }
            rem = rem.sub(&d.mul_term(&m, &q));
            quot.push((m, q));
        }
        let shift = ms.div(&md);
        Some(Poly { terms: quot }.mul_monomial(&shift))
    }

    /// Splits into coefficients of powers of `x`; exponents of `x` must be
    /// nonnegative integers.
    pub(crate) fn coeffs_in(&self, x: Var) -> Vec<Poly> {
        let mut buckets: Vec<Vec<(Monomial, BigInt)>> = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exponent(x);
            debug_assert!(e.is_integer() && !e.is_negative());
            let k = e.to_integer() as usize;
            if buckets.len() <= k {
                buckets.resize_with(k + 1, Vec::new);
            }
            let rest = m.div(&Monomial::var_pow(x, e));
            buckets[k].push((rest, c.clone()));
        }
        buckets
            .into_iter()
            .map(|mut t| {
                t.sort_by(|a, b| b.0.cmp(&a.0));
                Poly { terms: t }
            })
            .collect()
    }

    pub(crate) fn from_coeffs_in(x: Var, coeffs: &[Poly]) -> Poly {
        let mut out = Poly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&c.mul_monomial(&Monomial::var_pow(x, Rat::from_integer(k as i64))));
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                let parts: Vec<String> = m
                    .exponents()
                    .iter()
                    .map(|(v, e)| {
                        if e.is_one() {
                            v.to_string()
                        } else if e.is_integer() && e.is_positive() {
                            format!("{v}^{}", fmt_rat(e))
                        } else {
                            format!("{v}^({})", fmt_rat(e))
                        }
                    })
                    .collect();
                write!(f, "{}", parts.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v() -> Poly {
        Poly::var(Var::V)
    }

    #[test]
    fn arithmetic_basics() {
        let a = v().add(&Poly::one());
        let b = v().sub(&Poly::one());
        let p = a.mul(&b);
        assert_eq!(p, v().mul(&v()).sub(&Poly::one()));
        assert!(p.sub(&p).is_zero());
        assert_eq!(p.to_string(), "v^2 - 1");
    }

    #[test]
    fn exact_division() {
        let a = v().add(&Poly::one());
        let b = v().sub(&Poly::one());
        let p = a.mul(&b);
        assert_eq!(p.div_exact(&a).unwrap(), b);
        assert!(p.add(&Poly::one()).div_exact(&a).is_none());
        let x = Poly::var(Var::X(0, 1));
        assert!(x.div_exact(&a).is_none());
    }

    #[test]
    fn coefficient_split_round_trips() {
        let x = Poly::var(Var::X(0, 1));
        let p = v().mul(&x).mul(&x).add(&x).add(&Poly::constant(3.into()));
        let cs = p.coeffs_in(Var::X(0, 1));
        assert_eq!(cs.len(), 3);
        assert_eq!(Poly::from_coeffs_in(Var::X(0, 1), &cs), p);
    }

    #[test]
    fn display_fractional_exponents() {
        let m = Monomial::from_pairs([(Var::V, Rat::new(1, 2)), (Var::X(0, 1), Rat::from_integer(-1))]);
        assert_eq!(Poly::monomial(m).to_string(), "v^(1/2)*x12^(-1)");
    }
}
