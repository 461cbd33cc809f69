//! Fractions of Laurent polynomials with rational exponents.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::gcd::poly_gcd;
use super::monomial::{Monomial, Rat, Var};
use super::poly::Poly;
use crate::error::Error;

/// `num / den` in lowest terms.
///
/// Canonical form: the denominator has trivial monomial content and a
/// positive leading coefficient, the integer contents of numerator and
/// denominator are coprime, and no nonconstant common factor remains.
/// Together these make structural equality the field equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElem {
    num: Poly,
    den: Poly,
}

impl FieldElem {
    pub fn zero() -> Self {
        FieldElem { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        FieldElem { num: Poly::one(), den: Poly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        FieldElem::from_poly(Poly::constant(BigInt::from(n)))
    }

    pub fn from_ratio(r: &BigRational) -> Self {
        FieldElem::new(Poly::constant(r.numer().clone()), Poly::constant(r.denom().clone()))
    }

    pub fn from_poly(p: Poly) -> Self {
        FieldElem { num: p, den: Poly::one() }
    }

    pub fn monomial(m: Monomial) -> Self {
        FieldElem::from_poly(Poly::monomial(m))
    }

    pub fn var(v: Var) -> Self {
        FieldElem::monomial(Monomial::var(v))
    }

    /// `v^e` for a variable and rational exponent.
    pub fn var_pow(v: Var, e: Rat) -> Self {
        FieldElem::monomial(Monomial::var_pow(v, e))
    }

    /// Builds and reduces `num / den`. Panics on a zero denominator.
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return FieldElem::zero();
        }
        let mc = den.monomial_content();
        let (mut num, mut den) = if mc.is_one() {
            (num, den)
        } else {
            let inv = mc.inv();
            (num.mul_monomial(&inv), den.mul_monomial(&inv))
        };
        if den.len() > 1 {
            let g = poly_gcd(&num, &den);
            if g.len() > 1 {
                num = num.div_exact(&g).expect("gcd divides numerator");
                den = den.div_exact(&g).expect("gcd divides denominator");
            }
        }
        // den now has trivial monomial content; fix integers and sign.
        let g = num.int_content().gcd(&den.int_content());
        if !g.is_one() {
            num = num.div_int_exact(&g);
            den = den.div_int_exact(&g);
        }
        if den.leading().map(|(_, c)| c.is_negative()).unwrap_or(false) {
            num = num.neg();
            den = den.neg();
        }
        FieldElem { num, den }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    /// The element as `c * m` when it is a single scaled monomial.
    pub fn as_monomial(&self) -> Option<(BigRational, Monomial)> {
        let (m, c) = self.num.as_term()?;
        let d = self.den.as_constant()?;
        Some((BigRational::new(c.clone(), d), m.clone()))
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(BigRational::new(n, d))
    }

    pub fn neg(&self) -> FieldElem {
        FieldElem { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, other: &FieldElem) -> FieldElem {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            if self.den.is_one() {
                return FieldElem::from_poly(self.num.add(&other.num));
            }
            return FieldElem::new(self.num.add(&other.num), self.den.clone());
        }
        if let (Some(a), Some(b)) = (self.den.as_constant(), other.den.as_constant()) {
            let l = a.lcm(&b);
            let n = self.num.scale(&(&l / &a)).add(&other.num.scale(&(&l / &b)));
            return FieldElem::new(n, Poly::constant(l));
        }
        let g = poly_gcd(&self.den, &other.den);
        let (da, db) = if g.len() > 1 || !g.is_one() {
            (
                self.den.div_exact(&g).expect("gcd divides"),
                other.den.div_exact(&g).expect("gcd divides"),
            )
        } else {
            (self.den.clone(), other.den.clone())
        };
        let n = self.num.mul(&db).add(&other.num.mul(&da));
        FieldElem::new(n, self.den.mul(&db))
    }

    pub fn sub(&self, other: &FieldElem) -> FieldElem {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &FieldElem) -> FieldElem {
        if self.is_zero() || other.is_zero() {
            return FieldElem::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return FieldElem::from_poly(self.num.mul(&other.num));
        }
        if let Some((m, c)) = other.num.as_term() {
            if other.den.is_one() {
                return FieldElem::new(self.num.mul_term(m, c), self.den.clone());
            }
        }
        if let Some((m, c)) = self.num.as_term() {
            if self.den.is_one() {
                return FieldElem::new(other.num.mul_term(m, c), other.den.clone());
            }
        }
        // Cross-cancel first so the products stay small.
        let g1 = poly_gcd(&self.num, &other.den);
        let g2 = poly_gcd(&other.num, &self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = other.den.div_exact(&g1).expect("gcd divides");
        let n2 = other.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        FieldElem::new(n1.mul(&n2), d1.mul(&d2))
    }

    pub fn inv(&self) -> Option<FieldElem> {
        if self.is_zero() {
            None
        } else {
            Some(FieldElem::new(self.den.clone(), self.num.clone()))
        }
    }

    pub fn checked_div(&self, other: &FieldElem) -> Option<FieldElem> {
        Some(self.mul(&other.inv()?))
    }

    pub fn scale_monomial(&self, m: &Monomial) -> FieldElem {
        FieldElem { num: self.num.mul_monomial(m), den: self.den.clone() }
    }

    pub fn powi(&self, n: i64) -> FieldElem {
        if n < 0 {
            return self.inv().expect("negative power of zero").powi(-n);
        }
        if let Some((c, m)) = self.as_monomial() {
            let c = num_traits::pow::pow(c, n as usize);
            return FieldElem::from_ratio(&c).scale_monomial(&m.powi(n));
        }
        FieldElem::new(self.num.powi(n as u32), self.den.powi(n as u32))
    }

    /// Applies a monomial substitution to every variable it names.
    pub fn substitute(&self, f: &dyn Fn(Var) -> Option<Monomial>) -> FieldElem {
        let map = |m: &Monomial| m.substitute_monomial(f);
        FieldElem::new(self.num.map_monomials(&map), self.den.map_monomials(&map))
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut v = self.num.vars();
        v.extend(self.den.vars());
        v.sort();
        v.dedup();
        v
    }
}

impl Default for FieldElem {
    fn default() -> Self {
        FieldElem::zero()
    }
}

impl From<i64> for FieldElem {
    fn from(n: i64) -> Self {
        FieldElem::from_int(n)
    }
}

impl From<Monomial> for FieldElem {
    fn from(m: Monomial) -> Self {
        FieldElem::monomial(m)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&FieldElem> for &FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: &FieldElem) -> FieldElem {
                $body(self, rhs)
            }
        }
        impl $tr<FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: FieldElem) -> FieldElem {
                $body(&self, &rhs)
            }
        }
        impl $tr<&FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: &FieldElem) -> FieldElem {
                $body(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &FieldElem, b: &FieldElem| FieldElem::add(a, b));
forward_binop!(Sub, sub, |a: &FieldElem, b: &FieldElem| FieldElem::sub(a, b));
forward_binop!(Mul, mul, |a: &FieldElem, b: &FieldElem| FieldElem::mul(a, b));
forward_binop!(Div, div, |a: &FieldElem, b: &FieldElem| FieldElem::checked_div(a, b)
    .expect("division by zero"));

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem::neg(&self)
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem::neg(self)
    }
}

/// Canonical string: `num` alone when the denominator is 1, otherwise
/// `(num)/(den)`. Fractional and negative exponents are parenthesized, e.g.
/// `v^(1/2)*x12^(-1)`.
impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl FromStr for FieldElem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut p = Parser { src: s.as_bytes(), pos: 0 };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(Error::Parse(format!("trailing input in `{s}`")));
        }
        Ok(e)
    }
}

impl serde::Serialize for FieldElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for FieldElem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Recursive-descent reader for `+ - * / ^ ( )`, integers and variables.
struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {}", self.pos))
    }

    fn expr(&mut self) -> Result<FieldElem, Error> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.term()?.neg()
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                b'-' => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<FieldElem, Error> {
        let mut acc = self.power()?;
        while let Some(c) = self.peek() {
            match c {
                b'*' => {
                    self.pos += 1;
                    acc = acc.mul(&self.power()?);
                }
                b'/' => {
                    self.pos += 1;
                    let d = self.power()?;
                    acc = acc.checked_div(&d).ok_or_else(|| self.err("division by zero"))?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<FieldElem, Error> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let e = self.exponent()?;
        if let Some((c, m)) = base.as_monomial() {
            if c.is_one() {
                return Ok(FieldElem::monomial(m.pow(e)));
            }
        }
        if !e.is_integer() {
            return Err(self.err("fractional power of a non-monomial"));
        }
        if base.is_zero() && e.is_negative() {
            return Err(self.err("negative power of zero"));
        }
        Ok(base.powi(e.to_integer()))
    }

    fn exponent(&mut self) -> Result<Rat, Error> {
        if self.peek() == Some(b'(') {
            self.pos += 1;
            let neg = if self.peek() == Some(b'-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let n = self.integer()?;
            let d = if self.peek() == Some(b'/') {
                self.pos += 1;
                self.integer()?
            } else {
                1
            };
            if self.peek() != Some(b')') {
                return Err(self.err("expected `)`"));
            }
            self.pos += 1;
            if d == 0 {
                return Err(self.err("zero exponent denominator"));
            }
            let r = Rat::new(n, d);
            return Ok(if neg { -r } else { r });
        }
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let n = self.integer()?;
        Ok(Rat::from_integer(if neg { -n } else { n }))
    }

    fn integer(&mut self) -> Result<i64, Error> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("expected integer"))
    }

    fn atom(&mut self) -> Result<FieldElem, Error> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let n: BigInt = std::str::from_utf8(&self.src[start..self.pos])
                    .unwrap()
                    .parse()
                    .map_err(|_| self.err("bad integer"))?;
                Ok(FieldElem::from_poly(Poly::constant(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                self.pos += 1;
                if c == b'x' {
                    while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                        self.pos += 1;
                    }
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                Ok(FieldElem::var(name.parse()?))
            }
            _ => Err(self.err("unexpected input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(s: &str) -> FieldElem {
        s.parse().unwrap()
    }

    #[test]
    fn reduces_common_factors() {
        let a = fe("(v^2 - 1)/(v - 1)");
        assert_eq!(a, fe("v + 1"));
        assert!(a.is_poly());
        let b = fe("(2*v)/(4*v^3)");
        assert_eq!(b.to_string(), "(v^(-2))/(2)");
    }

    #[test]
    fn field_operations() {
        let a = fe("v/(1 - v)");
        let b = fe("x12 + v");
        let c = &a * &b;
        assert_eq!(&c / &b, a);
        assert_eq!(&(&a + &b) - &b, a);
        assert!((&a - &a).is_zero());
        assert_eq!(a.inv().unwrap(), fe("(1 - v)/v"));
    }

    #[test]
    fn canonical_strings_round_trip() {
        for s in ["0", "1", "-3", "v^(1/2)*x12^(-1) + 2", "(v)/(v^2 + 1)", "(1)/(6)"] {
            let x = fe(s);
            assert_eq!(fe(&x.to_string()), x, "{s}");
        }
    }

    #[test]
    fn fractional_powers_combine() {
        let h = fe("v^(1/2)");
        assert_eq!(&h * &h, fe("v"));
        assert_eq!(fe("(v - 1)/(v^(1/2) - 1)"), fe("v^(1/2) + 1"));
    }
}
