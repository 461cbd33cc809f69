//! The parameter matrix `q_ij`, its involution, and named specializations.

use num_traits::Zero;

use super::field::FieldElem;
use super::monomial::{Monomial, Rat, Var};
use crate::cartan::CartanDatum;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Preset {
    Generic,
    /// `q_ij = q^{d_i a_ij}` in one symbol `q`.
    OneParameter,
    /// `q_ij = r^{<j,i>} s^{-<i,j>}` with `<i,i> = d_i`, `<i,j> = d_i a_ij`
    /// for `i < j` and `0` for `i > j`.
    TwoParameter,
}

pub const Q: Var = Var::Sym('q');
pub const R: Var = Var::Sym('r');
pub const S: Var = Var::Sym('s');

/// Generic parameters: `q_ii = v^{2d_i}`, `q_ij = x_ij`, and
/// `q_ji = v^{2 d_i a_ij} x_ij^{-1}` for `i < j`, possibly pushed through a
/// preset substitution. Every entry is a monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamMatrix {
    datum: CartanDatum,
    preset: Preset,
    q: Vec<Vec<Monomial>>,
}

impl ParamMatrix {
    pub fn generic(datum: &CartanDatum) -> Self {
        ParamMatrix::with_preset(datum, Preset::Generic)
    }

    pub fn one_parameter(datum: &CartanDatum) -> Self {
        ParamMatrix::with_preset(datum, Preset::OneParameter)
    }

    pub fn two_parameter(datum: &CartanDatum) -> Self {
        ParamMatrix::with_preset(datum, Preset::TwoParameter)
    }

    pub fn with_preset(datum: &CartanDatum, preset: Preset) -> Self {
        let n = datum.rank();
        let subst = preset_substitution(preset, datum);
        let img = |v: Var| subst.iter().find(|(w, _)| *w == v).map(|(_, m)| m.clone());
        let q = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| generic_entry(datum, i, j).substitute_monomial(&img))
                    .collect()
            })
            .collect();
        ParamMatrix { datum: datum.clone(), preset, q }
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn preset(&self) -> Preset {
        self.preset
    }

    pub fn rank(&self) -> usize {
        self.q.len()
    }

    pub fn q(&self, i: usize, j: usize) -> &Monomial {
        &self.q[i][j]
    }

    pub fn q_elem(&self, i: usize, j: usize) -> FieldElem {
        FieldElem::monomial(self.q[i][j].clone())
    }

    /// `q_{μν} = Π q_ij^{μ_i ν_j}` on root-basis coordinates.
    pub fn q_pair(&self, mu: &[Rat], nu: &[Rat]) -> Monomial {
        let mut out = Monomial::one();
        for (i, a) in mu.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in nu.iter().enumerate() {
                if !b.is_zero() {
                    out = out.mul(&self.q[i][j].pow(a * b));
                }
            }
        }
        out
    }

    /// Integer-coordinate convenience form of [`ParamMatrix::q_pair`].
    pub fn q_pair_int(&self, mu: &[i64], nu: &[i64]) -> Monomial {
        let mut out = Monomial::one();
        for (i, &a) in mu.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in nu.iter().enumerate() {
                if b != 0 {
                    out = out.mul(&self.q[i][j].powi(a * b));
                }
            }
        }
        out
    }

    /// The involution swapping `q_ij` and `q_ji`.
    pub fn tau(&self, x: &FieldElem) -> FieldElem {
        let d = &self.datum;
        let f = |v: Var| match v {
            Var::X(i, j) => {
                let (i, j) = (i as usize, j as usize);
                if i < d.rank() && j < d.rank() {
                    Some(generic_entry(d, j, i))
                } else {
                    None
                }
            }
            Var::Sym('r') if self.preset == Preset::TwoParameter => {
                Some(Monomial::var(S).inv())
            }
            Var::Sym('s') if self.preset == Preset::TwoParameter => {
                Some(Monomial::var(R).inv())
            }
            _ => None,
        };
        x.substitute(&f)
    }

    pub fn tau_monomial(&self, m: &Monomial) -> Monomial {
        let x = self.tau(&FieldElem::monomial(m.clone()));
        x.as_monomial().expect("tau maps monomials to monomials").1
    }
}

fn generic_entry(d: &CartanDatum, i: usize, j: usize) -> Monomial {
    let v = |e: i64| Monomial::var_pow(Var::V, Rat::from_integer(e));
    if i == j {
        v(2 * d.d[i])
    } else if i < j {
        Monomial::var(Var::X(i as u8, j as u8))
    } else {
        v(2 * d.d[j] * d.a[j][i]).mul(&Monomial::var(Var::X(j as u8, i as u8)).inv())
    }
}

/// Images of the generic variables `v` and `x_ij` under a preset.
pub fn preset_substitution(preset: Preset, d: &CartanDatum) -> Vec<(Var, Monomial)> {
    let n = d.rank();
    let mut out = Vec::new();
    match preset {
        Preset::Generic => {}
        Preset::OneParameter => {
            out.push((Var::V, Monomial::var(Q)));
            for i in 0..n {
                for j in i + 1..n {
                    let e = Rat::from_integer(d.d[i] * d.a[i][j]);
                    out.push((Var::X(i as u8, j as u8), Monomial::var_pow(Q, e)));
                }
            }
        }
        Preset::TwoParameter => {
            let half = Rat::new(1, 2);
            out.push((
                Var::V,
                Monomial::var_pow(R, half).mul(&Monomial::var_pow(S, -half)),
            ));
            for i in 0..n {
                for j in i + 1..n {
                    let e = Rat::from_integer(-d.d[i] * d.a[i][j]);
                    out.push((Var::X(i as u8, j as u8), Monomial::var_pow(S, e)));
                }
            }
        }
    }
    out
}

/// `<i, j>` of the two-parameter preset.
pub fn two_parameter_bracket(d: &CartanDatum, i: usize, j: usize) -> i64 {
    use std::cmp::Ordering::*;
    match i.cmp(&j) {
        Equal => d.d[i],
        Less => d.d[i] * d.a[i][j],
        Greater => 0,
    }
}

/// `v^{e}` shorthand.
pub fn v_pow(e: Rat) -> Monomial {
    if e.is_zero() {
        Monomial::one()
    } else {
        Monomial::var_pow(Var::V, e)
    }
}

/// `q^{e}` in the one-parameter symbol.
pub fn q_pow(e: Rat) -> Monomial {
    Monomial::var_pow(Q, e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn types() -> Vec<CartanDatum> {
        ["A2", "B2", "C2", "G2", "A1xA1", "A3"]
            .iter()
            .map(|t| CartanDatum::standard(t).unwrap())
            .collect()
    }

    #[test]
    fn product_rule_holds_by_construction() {
        for d in types() {
            for preset in [Preset::Generic, Preset::OneParameter, Preset::TwoParameter] {
                let p = ParamMatrix::with_preset(&d, preset);
                for i in 0..d.rank() {
                    for j in 0..d.rank() {
                        let lhs = p.q(i, j).mul(p.q(j, i));
                        assert_eq!(lhs, p.q(i, i).powi(d.a[i][j]), "{} {i}{j}", d.label);
                    }
                }
            }
        }
    }

    #[test]
    fn tau_swaps_entries() {
        for d in types() {
            for preset in [Preset::Generic, Preset::TwoParameter, Preset::OneParameter] {
                let p = ParamMatrix::with_preset(&d, preset);
                for i in 0..d.rank() {
                    for j in 0..d.rank() {
                        assert_eq!(p.tau(&p.q_elem(i, j)), p.q_elem(j, i));
                    }
                }
            }
        }
    }

    #[test]
    fn presets_match_named_formulas() {
        let a2 = CartanDatum::standard("A2").unwrap();
        let one = ParamMatrix::one_parameter(&a2);
        assert_eq!(one.q(0, 1), &Monomial::var_pow(Q, Rat::from_integer(-1)));
        assert_eq!(one.q(0, 0), &Monomial::var_pow(Q, Rat::from_integer(2)));
        let two = ParamMatrix::two_parameter(&a2);
        assert_eq!(two.q(0, 1), &Monomial::var(S));
        for d in types() {
            let two = ParamMatrix::two_parameter(&d);
            for i in 0..d.rank() {
                for j in 0..d.rank() {
                    let expect = Monomial::var_pow(R, Rat::from_integer(two_parameter_bracket(&d, j, i)))
                        .mul(&Monomial::var_pow(S, Rat::from_integer(-two_parameter_bracket(&d, i, j))));
                    assert_eq!(two.q(i, j), &expect);
                }
            }
        }
    }
}
