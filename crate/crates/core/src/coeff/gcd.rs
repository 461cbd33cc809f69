//! Multivariate gcd over the integers by recursive primitive remainder
//! sequences.
//!
//! Inputs may carry rational exponents. Monomials are units here, so the
//! monomial content is discarded first; then each variable's exponents are
//! rescaled by their common gcd so that the recursion sees ordinary
//! nonnegative integer exponents.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::monomial::{rat_gcd, Monomial, Rat, Var};
use super::poly::Poly;

/// Gcd normalized to positive leading coefficient and trivial monomial
/// content. `gcd(0, 0) = 0`.
pub fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return normalize_sign(&strip_monomial(b));
    }
    if b.is_zero() {
        return normalize_sign(&strip_monomial(a));
    }
    let a = strip_monomial(a);
    let b = strip_monomial(b);
    if a.len() == 1 || b.len() == 1 {
        return Poly::constant(a.int_content().gcd(&b.int_content()));
    }
    let mut vars = a.vars();
    vars.extend(b.vars());
    vars.sort();
    vars.dedup();
    let scales: Vec<(Var, Rat)> = vars
        .iter()
        .map(|&x| {
            let g = a
                .terms()
                .iter()
                .chain(b.terms().iter())
                .fold(Rat::zero(), |g, (m, _)| rat_gcd(g, m.exponent(x)));
            (x, g)
        })
        .collect();
    let squeeze = |m: &Monomial| {
        Monomial::from_pairs(m.exponents().iter().map(|(x, e)| {
            let g = scales.iter().find(|s| s.0 == *x).unwrap().1;
            (*x, e / g)
        }))
    };
    let expand = |m: &Monomial| {
        Monomial::from_pairs(m.exponents().iter().map(|(x, e)| {
            let g = scales.iter().find(|s| s.0 == *x).unwrap().1;
            (*x, e * g)
        }))
    };
    let ia = a.map_monomials(&squeeze);
    let ib = b.map_monomials(&squeeze);
    let g = gcd_rec(&ia, &ib, &vars);
    normalize_sign(&g.map_monomials(&expand))
}

fn strip_monomial(p: &Poly) -> Poly {
    let m = p.monomial_content();
    if m.is_one() {
        p.clone()
    } else {
        p.mul_monomial(&m.inv())
    }
}

fn normalize_sign(p: &Poly) -> Poly {
    match p.leading() {
        Some((_, c)) if c.is_negative() => p.neg(),
        _ => p.clone(),
    }
}

/// Both inputs nonzero with nonnegative integer exponents.
fn gcd_rec(a: &Poly, b: &Poly, vars: &[Var]) -> Poly {
    if let Some(c) = a.as_constant() {
        return Poly::constant(c.gcd(&b.int_content()));
    }
    if let Some(c) = b.as_constant() {
        return Poly::constant(c.gcd(&a.int_content()));
    }
    if a == b {
        return normalize_sign(a);
    }
    let in_a = a.vars();
    let in_b = b.vars();
    let x = match vars.iter().find(|v| in_a.contains(v) || in_b.contains(v)) {
        Some(&x) => x,
        None => return Poly::constant(a.int_content().gcd(&b.int_content())),
    };
    let rest: Vec<Var> = vars.iter().copied().filter(|&v| v != x).collect();
    if !in_a.contains(&x) {
        let cb = content_of(&b.coeffs_in(x), &rest);
        return gcd_rec(a, &cb, &rest);
    }
    if !in_b.contains(&x) {
        let ca = content_of(&a.coeffs_in(x), &rest);
        return gcd_rec(&ca, b, &rest);
    }
    let ua = a.coeffs_in(x);
    let ub = b.coeffs_in(x);
    let ca = content_of(&ua, &rest);
    let cb = content_of(&ub, &rest);
    let c = gcd_rec(&ca, &cb, &rest);
    let mut p1 = primitive(&ua, &ca);
    let mut p2 = primitive(&ub, &cb);
    if p1.len() < p2.len() {
        std::mem::swap(&mut p1, &mut p2);
    }
    loop {
        let r = prem(&p1, &p2);
        if r.is_empty() {
            break;
        }
        if r.len() == 1 {
            return c;
        }
        let cr = content_of(&r, &rest);
        p1 = p2;
        p2 = primitive(&r, &cr);
    }
    let cg = content_of(&p2, &rest);
    let g = Poly::from_coeffs_in(x, &primitive(&p2, &cg));
    normalize_sign(&g.mul(&c))
}

fn content_of(coeffs: &[Poly], vars: &[Var]) -> Poly {
    let mut g = Poly::zero();
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        g = if g.is_zero() { normalize_sign(c) } else { gcd_rec(&g, c, vars) };
        if g.is_one() {
            break;
        }
    }
    g
}

fn primitive(coeffs: &[Poly], content: &Poly) -> Vec<Poly> {
    if content.is_one() {
        return coeffs.to_vec();
    }
    coeffs
        .iter()
        .map(|c| c.div_exact(content).expect("content divides every coefficient"))
        .collect()
}

/// Pseudo-remainder of univariate polynomials with polynomial coefficients
/// (index = degree). Result has trailing zeros trimmed.
fn prem(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    trim(&mut r);
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c = c.mul(lb);
        }
        for k in 0..=db {
            r[k + dr - db] = r[k + dr - db].sub(&lr.mul(&b[k]));
        }
        trim(&mut r);
    }
    // Keep the coefficient sizes in check between steps.
    let g = r.iter().fold(BigInt::zero(), |g, c| g.gcd(&c.int_content()));
    if !g.is_zero() && !g.is_one() {
        for c in r.iter_mut() {
            *c = c.div_int_exact(&g);
        }
    }
    r
}

fn trim(r: &mut Vec<Poly>) {
    while r.last().map(|c| c.is_zero()).unwrap_or(false) {
        r.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn var(v: Var) -> Poly {
        Poly::var(v)
    }

    #[test]
    fn univariate_common_factor() {
        let v = var(Var::V);
        let one = Poly::one();
        let a = v.sub(&one).mul(&v.add(&one));
        let b = v.sub(&one).mul(&v.mul(&v).add(&one));
        assert_eq!(poly_gcd(&a, &b), v.sub(&one));
    }

    #[test]
    fn bivariate_common_factor() {
        let v = var(Var::V);
        let x = var(Var::X(0, 1));
        let f = v.mul(&x).sub(&Poly::one());
        let a = f.mul(&v.add(&x));
        let b = f.mul(&v.sub(&x)).mul(&f);
        assert_eq!(poly_gcd(&a, &b), f);
    }

    #[test]
    fn fractional_exponents() {
        let h = Poly::monomial(Monomial::var_pow(Var::V, Rat::new(1, 2)));
        let one = Poly::one();
        let a = var(Var::V).sub(&one);
        let b = h.sub(&one);
        assert_eq!(poly_gcd(&a, &b), b);
    }

    #[test]
    fn monomials_are_units() {
        let v = var(Var::V);
        let a = v.mul(&v).mul(&Poly::constant(6.into()));
        let b = v.mul(&Poly::constant(4.into()));
        assert_eq!(poly_gcd(&a, &b), Poly::constant(2.into()));
    }
}
