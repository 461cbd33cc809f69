use mpqg::cartan::CartanDatum;
use mpqg::coeff::{FieldElem, Monomial, ParamMatrix};
use mpqg::shuffle::{
    delete_last, mixed_power_closed_form, serre_shuffle, shuffle, word, ShuffleElem, Shuffler,
};
use proptest::prelude::*;

/// Sums over all placements of the letters of `b` among those of `a`,
/// weighting each by `Π q(a_p, b_r)` over pairs where `b_r` lands before `a_p`.
fn interleave(p: &ParamMatrix, a: &[u8], b: &[u8]) -> ShuffleElem {
    let n = a.len() + b.len();
    let mut out = ShuffleElem::zero();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != b.len() {
            continue;
        }
        let mut w = Vec::with_capacity(n);
        let mut coeff = Monomial::one();
        let (mut ia, mut ib) = (0, 0);
        for pos in 0..n {
            if mask & (1 << pos) != 0 {
                w.push(b[ib]);
                ib += 1;
            } else {
                for &br in &b[..ib] {
                    coeff = coeff.mul(p.q(a[ia] as usize, br as usize));
                }
                w.push(a[ia]);
                ia += 1;
            }
        }
        out.add_term(w, FieldElem::from(coeff));
    }
    out
}

fn params(t: &str) -> ParamMatrix {
    ParamMatrix::generic(&CartanDatum::standard(t).unwrap())
}

fn small_word(rank: u8) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0..rank, 0..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn recursion_matches_interleavings(a in small_word(3), b in small_word(3)) {
        let p = params("A3");
        prop_assert_eq!(shuffle(&p, &word(&a), &word(&b)), interleave(&p, &a, &b));
    }

    #[test]
    fn associative(a in small_word(2), b in small_word(2), c in small_word(2)) {
        let p = params("B2");
        let mut sh = Shuffler::new(&p);
        let (x, y, z) = (word(&a), word(&b), word(&c));
        let xy = sh.mul(&x, &y);
        let l = sh.mul(&xy, &z);
        let yz = sh.mul(&y, &z);
        let r = sh.mul(&x, &yz);
        prop_assert_eq!(l, r);
    }

    #[test]
    fn derivation_rule(a in small_word(2), b in small_word(2), i in 0u8..2) {
        // D_i(x ⋆ y) = q_{α_i, |y|} D_i(x) ⋆ y + x ⋆ D_i(y)
        let p = params("G2");
        let mut sh = Shuffler::new(&p);
        let (x, y) = (word(&a), word(&b));
                let q = b.iter().fold(Monomial::one(), |m, &j| m.mul(p.q(i as usize, j as usize)));
        let xy = sh.mul(&x, &y);
        let lhs = delete_last(i, &xy);
        let mut rhs = sh.mul(&delete_last(i, &x), &y).scale_monomial(&q);
        rhs.add_assign(&sh.mul(&x, &delete_last(i, &y)));
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn closed_form_mixed_powers() {
    for t in ["A2", "B2", "G2"] {
        let p = params(t);
        for (i, j) in [(0u8, 1u8), (1, 0)] {
            for m in 0..=2 {
                for l in 0..=2 {
                    let mut sh = Shuffler::new(&p);
                    let pm = sh.power(i, m);
                    let pl = sh.power(i, l);
                    let left = sh.mul(&pm, &word(&[j]));
                    let direct = sh.mul(&left, &pl);
                    assert_eq!(direct, mixed_power_closed_form(&p, i, j, m, l).unwrap(), "{t} {i}{j} {m} {l}");
                }
            }
        }
    }
}

#[test]
fn serre_sums_vanish() {
    for t in ["A1xA1", "A2", "B2", "C2", "G2"] {
        let p = params(t);
        for (i, j) in [(0u8, 1u8), (1, 0)] {
            assert!(serre_shuffle(&p, i, j).unwrap().is_zero(), "{t} ({i},{j})");
        }
    }
}
