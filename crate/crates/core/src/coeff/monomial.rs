//! Variables and rational-exponent monomials.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Exact rational number with machine-sized parts. Used for exponents and
/// lattice coordinates, which stay small.
pub type Rat = Ratio<i64>;

/// A generator of the coefficient field.
///
/// `V` is the base parameter (`q_ii = v^{2 d_i}`), `X(i, j)` with `i < j`
/// (0-based) is the free off-diagonal parameter `x_ij = q_ij`, and `Sym`
/// is a free symbol used by presets (`q`, `r`, `s`) or generic scalars.
/// The derived order `V < X(..) < Sym(..)` is the fixed variable order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    V,
    X(u8, u8),
    Sym(char),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::V => write!(f, "v"),
            Var::X(i, j) => write!(f, "x{}{}", i + 1, j + 1),
            Var::Sym(c) => write!(f, "{c}"),
        }
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s == "v" {
            return Ok(Var::V);
        }
        if let Some(rest) = s.strip_prefix('x') {
            let digits: Vec<u32> = rest.chars().filter_map(|c| c.to_digit(10)).collect();
            if digits.len() == 2 && rest.len() == 2 && digits[0] >= 1 && digits[0] < digits[1] {
                return Ok(Var::X(digits[0] as u8 - 1, digits[1] as u8 - 1));
            }
        }
        let mut chars = s.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) if c.is_ascii_alphabetic() => Ok(Var::Sym(c)),
            _ => Err(Error::Parse(format!("unknown variable `{s}`"))),
        }
    }
}

/// A product of variables raised to exact rational powers, coefficient 1.
///
/// Stored sorted by variable with no zero exponents, so structural equality
/// is mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<(Var, Rat)>,
    deg: Rat,
}

impl Monomial {
    fn build(exps: Vec<(Var, Rat)>) -> Self {
        let deg = exps.iter().fold(Rat::zero(), |acc, (_, e)| acc + e);
        Monomial { exps, deg }
    }

    pub fn one() -> Self {
        Monomial { exps: Vec::new(), deg: Rat::zero() }
    }

    pub fn var(v: Var) -> Self {
        Monomial::var_pow(v, Rat::one())
    }

    pub fn var_pow(v: Var, e: Rat) -> Self {
        if e.is_zero() {
            Monomial::one()
        } else {
            Monomial { exps: vec![(v, e)], deg: e }
        }
    }

    /// Builds from arbitrary (possibly repeated, possibly zero) pairs.
    pub fn from_pairs<I: IntoIterator<Item = (Var, Rat)>>(pairs: I) -> Self {
        let mut exps: Vec<(Var, Rat)> = pairs.into_iter().collect();
        exps.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Var, Rat)> = Vec::with_capacity(exps.len());
        for (v, e) in exps {
            match out.last_mut() {
                Some((lv, le)) if *lv == v => *le += e,
                _ => out.push((v, e)),
            }
        }
        out.retain(|(_, e)| !e.is_zero());
        Monomial::build(out)
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponents(&self) -> &[(Var, Rat)] {
        &self.exps
    }

    pub fn exponent(&self, v: Var) -> Rat {
        self.exps
            .iter()
            .find(|(w, _)| *w == v)
            .map(|(_, e)| *e)
            .unwrap_or_else(Rat::zero)
    }

    pub fn degree(&self) -> Rat {
        self.deg
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.exps, &other.exps);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if !e.is_zero() {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { exps: out, deg: self.deg + other.deg }
    }

    pub fn pow(&self, e: Rat) -> Monomial {
        if e.is_zero() {
            return Monomial::one();
        }
        Monomial {
            exps: self.exps.iter().map(|(v, x)| (*v, x * e)).collect(),
            deg: self.deg * e,
        }
    }

    pub fn powi(&self, e: i64) -> Monomial {
        self.pow(Rat::from_integer(e))
    }

    pub fn inv(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|(v, x)| (*v, -x)).collect(),
            deg: -self.deg,
        }
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        self.mul(&other.inv())
    }

    /// Componentwise minimum of exponents (absent variables count as 0).
    pub fn meet(&self, other: &Monomial) -> Monomial {
        let mut vars: Vec<Var> = self.exps.iter().map(|p| p.0).collect();
        vars.extend(other.exps.iter().map(|p| p.0));
        vars.sort();
        vars.dedup();
        Monomial::from_pairs(vars.into_iter().map(|v| {
            let (a, b) = (self.exponent(v), other.exponent(v));
            (v, if a < b { a } else { b })
        }))
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.exps.iter().map(|p| p.0)
    }

    /// Replaces each variable for which `f` returns an image; others are kept.
    pub fn substitute_monomial(&self, f: &dyn Fn(Var) -> Option<Monomial>) -> Monomial {
        let mut out = Monomial::one();
        for (v, e) in &self.exps {
            match f(*v) {
                Some(img) => out = out.mul(&img.pow(*e)),
                None => out = out.mul(&Monomial::var_pow(*v, *e)),
            }
        }
        out
    }
}

/// Graded lexicographic order: total degree first, then the exponent of
/// the earliest variable in the fixed order decides.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let d = self.deg.cmp(&other.deg);
        if d != Ordering::Equal {
            return d;
        }
        let (a, b) = (&self.exps, &other.exps);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some((_, e)), None) => return e.cmp(&Rat::zero()),
                (None, Some((_, e))) => return Rat::zero().cmp(e),
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    Ordering::Less => return ea.cmp(&Rat::zero()),
                    Ordering::Greater => return Rat::zero().cmp(eb),
                    Ordering::Equal => {
                        let c = ea.cmp(eb);
                        if c != Ordering::Equal {
                            return c;
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub(crate) fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .exps
            .iter()
            .map(|(v, e)| {
                if e.is_one() {
                    format!("{v}")
                } else {
                    format!("{v}^{}", fmt_rat(e))
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Greatest common divisor of two positive rationals, in the sense that both
/// are integer multiples of the result.
pub(crate) fn rat_gcd(a: Rat, b: Rat) -> Rat {
    let a = a.abs();
    let b = b.abs();
    if a.is_zero() {
        return b;
    }
    if b.is_zero() {
        return a;
    }
    let n = a.numer().gcd(b.numer());
    let d = a.denom().lcm(b.denom());
    Rat::new(n, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    #[test]
    fn products_cancel_exponents() {
        let a = Monomial::from_pairs([(Var::V, r(2, 1)), (Var::X(0, 1), r(1, 2))]);
        let b = Monomial::from_pairs([(Var::X(0, 1), r(-1, 2))]);
        assert_eq!(a.mul(&b), Monomial::var_pow(Var::V, r(2, 1)));
        assert!(a.mul(&a.inv()).is_one());
    }

    #[test]
    fn grlex_order() {
        let v = Monomial::var(Var::V);
        let x = Monomial::var(Var::X(0, 1));
        assert!(v > x);
        assert!(x.powi(2) > v);
        assert!(Monomial::one() < x);
        assert!(Monomial::var_pow(Var::V, r(1, 2)) < v);
    }

    #[test]
    fn parse_and_print_vars() {
        for s in ["v", "x12", "x23", "q", "r"] {
            let v: Var = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
        }
        assert!("x21".parse::<Var>().is_err());
        assert!("foo".parse::<Var>().is_err());
    }

    #[test]
    fn rational_gcd() {
        assert_eq!(rat_gcd(r(2, 3), r(4, 1)), r(2, 3));
        assert_eq!(rat_gcd(r(1, 2), r(1, 3)), r(1, 6));
    }
}
