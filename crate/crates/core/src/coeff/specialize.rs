//! Evaluation of field elements at exact rational points.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use super::field::FieldElem;
use super::monomial::{Monomial, Rat, Var};
use super::poly::Poly;
use crate::error::{Error, Result};

pub type Assignment = HashMap<Var, BigRational>;

/// Evaluates `x` at the assignment. Fractional exponents need the assigned
/// value to be a perfect power of the exponent's denominator.
pub fn specialize(x: &FieldElem, at: &Assignment) -> Result<BigRational> {
    let mut cache = HashMap::new();
    let d = eval_poly(x.denom(), at, &mut cache)?;
    if d.is_zero() {
        return Err(Error::Eval(format!("denominator of {x} vanishes")));
    }
    Ok(eval_poly(x.numer(), at, &mut cache)? / d)
}

/// Evaluator that memoizes monomial values across many elements.
pub struct Specializer {
    at: Assignment,
    cache: HashMap<Monomial, BigRational>,
}

impl Specializer {
    pub fn new(at: Assignment) -> Self {
        Specializer { at, cache: HashMap::new() }
    }

    pub fn assignment(&self) -> &Assignment {
        &self.at
    }

    pub fn eval(&mut self, x: &FieldElem) -> Result<BigRational> {
        let d = eval_poly(x.denom(), &self.at, &mut self.cache)?;
        if d.is_zero() {
            return Err(Error::Eval(format!("denominator of {x} vanishes")));
        }
        Ok(eval_poly(x.numer(), &self.at, &mut self.cache)? / d)
    }

    pub fn eval_monomial(&mut self, m: &Monomial) -> Result<BigRational> {
        eval_monomial(m, &self.at, &mut self.cache)
    }
}

fn eval_poly(
    p: &Poly,
    at: &Assignment,
    cache: &mut HashMap<Monomial, BigRational>,
) -> Result<BigRational> {
    let mut acc = BigRational::zero();
    for (m, c) in p.terms() {
        acc += eval_monomial(m, at, cache)? * BigRational::from_integer(c.clone());
    }
    Ok(acc)
}

fn eval_monomial(
    m: &Monomial,
    at: &Assignment,
    cache: &mut HashMap<Monomial, BigRational>,
) -> Result<BigRational> {
    if let Some(x) = cache.get(m) {
        return Ok(x.clone());
    }
    let mut acc = BigRational::one();
    for (v, e) in m.exponents() {
        let base = at
            .get(v)
            .ok_or_else(|| Error::Eval(format!("no value assigned to {v}")))?;
        acc *= rat_pow(base, *e)?;
    }
    cache.insert(m.clone(), acc.clone());
    Ok(acc)
}

/// `base^e` for rational `e`, exact or a domain error.
pub fn rat_pow(base: &BigRational, e: Rat) -> Result<BigRational> {
    if base.is_zero() {
        if e.is_positive() {
            return Ok(BigRational::zero());
        }
        return Err(Error::Eval("nonpositive power of zero".into()));
    }
    let root = *e.denom() as u32;
    let b = if root == 1 {
        base.clone()
    } else {
        if base.is_negative() && root % 2 == 0 {
            return Err(Error::Domain(format!("even root of negative value {base}")));
        }
        let n = exact_root(base.numer(), root);
        let d = exact_root(base.denom(), root);
        match (n, d) {
            (Some(n), Some(d)) => BigRational::new(n, d),
            _ => {
                return Err(Error::Domain(format!(
                    "{base} is not a perfect {root}-th power"
                )))
            }
        }
    };
    let k = *e.numer();
    let p = num_traits::pow::pow(b, k.unsigned_abs() as usize);
    Ok(if k < 0 { p.recip() } else { p })
}

fn exact_root(x: &BigInt, k: u32) -> Option<BigInt> {
    let r = if x.is_negative() { -(-x).nth_root(k) } else { x.nth_root(k) };
    (num_traits::pow::pow(r.clone(), k as usize) == *x).then_some(r)
}

/// Draws small rationals for `vars`, each raised to the power `lift` so that
/// exponents with denominators dividing `lift` evaluate exactly. Values
/// avoid 0 and ±1 so that generic behaviour is likely.
pub fn random_assignment<G: Rng>(rng: &mut G, vars: &[Var], lift: u32) -> Assignment {
    let mut out = Assignment::new();
    for &v in vars {
        let x = loop {
            let n: i64 = rng.gen_range(-9..=9);
            let d: i64 = rng.gen_range(1..=9);
            let r = BigRational::new(n.into(), d.into());
            if !r.is_zero() && r.abs() != BigRational::one() {
                break r;
            }
        };
        out.insert(v, num_traits::pow::pow(x, lift as usize));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::CartanDatum;
    use crate::coeff::ParamMatrix;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn parameter_values() {
        let a2 = CartanDatum::standard("A2").unwrap();
        let p = ParamMatrix::generic(&a2);
        let mut at = Assignment::new();
        at.insert(Var::V, r(2, 1));
        at.insert(Var::X(0, 1), r(3, 1));
        assert_eq!(specialize(&p.q_elem(0, 0), &at).unwrap(), r(4, 1));
        let prod = p.q_elem(0, 1).mul(&p.q_elem(1, 0));
        assert_eq!(specialize(&prod, &at).unwrap(), r(1, 4));
    }

    #[test]
    fn evaluation_errors() {
        let mut at = Assignment::new();
        at.insert(Var::V, r(1, 1));
        let x: FieldElem = "1/(v - 1)".parse().unwrap();
        assert!(matches!(specialize(&x, &at), Err(Error::Eval(_))));
        at.insert(Var::V, r(2, 1));
        let h: FieldElem = "v^(1/2)".parse().unwrap();
        assert!(matches!(specialize(&h, &at), Err(Error::Domain(_))));
        at.insert(Var::V, r(9, 4));
        assert_eq!(specialize(&h, &at).unwrap(), r(3, 2));
    }
}
