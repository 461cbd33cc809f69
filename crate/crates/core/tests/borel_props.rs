mod common;

use mpqg::borel::{
    check_lemma16, gamma_by_derivations, gamma_embed, partial_left_free, partial_right_free,
    serre_element, sesq_form, BorelElem, FreeElem, PairingEngine, Side,
};
use mpqg::cartan::CartanDatum;
use mpqg::coeff::{FieldElem, ParamMatrix, Preset, Var};
use mpqg::shuffle::{concat, words_of_degree, Shuffler};
use proptest::prelude::*;

fn params(t: &str) -> ParamMatrix {
    ParamMatrix::generic(&CartanDatum::standard(t).unwrap())
}

fn word_strategy(rank: u8, max: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0..rank, 0..=max)
}

#[test]
fn roots_oracle_sanity() {
    let count = |t: &str| common::positive_roots(&CartanDatum::standard(t).unwrap()).len();
    assert_eq!(count("A2"), 3);
    assert_eq!(count("B2"), 4);
    assert_eq!(count("G2"), 6);
    assert_eq!(count("A3"), 6);
}

#[test]
fn lemma16_all_rank2() {
    for t in common::RANK2 {
        let p = params(t);
        for (i, j) in [(0, 1), (1, 0)] {
            let o = check_lemma16(&p, i, j).unwrap();
            assert!(o.ok, "{t} ({i},{j}): {:?}", o.witness);
        }
    }
}

#[test]
fn serre_pairs_trivially() {
    for t in common::RANK2 {
        let p = params(t);
        let mut e = PairingEngine::new(&p);
        for (i, j) in [(0usize, 1usize), (1, 0)] {
            let u = serre_element(&p, i, j, Side::Neg).unwrap().to_free().unwrap();
            let mut beta = vec![0; 2];
            beta[i] = 1 - p.datum().a[i][j];
            beta[j] = 1;
            for w in words_of_degree(&beta) {
                assert!(e.pair_free(&u, &FreeElem::basis(w.clone())).is_zero(), "{t} {w:?}");
            }
        }
    }
}

#[test]
fn gram_rank_is_kostant() {
    for t in ["A2", "B2", "G2"] {
        let p = params(t);
        let roots = common::positive_roots(p.datum());
        let mut e = PairingEngine::new(&p);
        for beta in common::degrees_up_to(2, 4) {
            let g = e.gram(&beta).unwrap();
            assert_eq!(g.rank as u64, common::kostant(&roots, &beta), "{t} {beta:?}");
        }
    }
}

#[test]
fn left_and_right_peels_agree() {
    for t in ["B2", "G2"] {
        let p = params(t);
        let mut e = PairingEngine::new(&p);
        for beta in common::degrees_up_to(2, 3) {
            let ws = words_of_degree(&beta);
            for a in &ws {
                for b in &ws {
                    assert_eq!(e.words(a, b), e.words_right(a, b), "{t} {a:?} {b:?}");
                }
            }
        }
    }
}

#[test]
fn dual_bases_and_coproducts() {
    for t in ["A2", "B2"] {
        let p = params(t);
        let mut e = PairingEngine::new(&p);
        for beta in [vec![1, 0], vec![1, 1], vec![2, 1], vec![1, 2]] {
            assert!(e.check_reconstruction(&beta).unwrap().ok, "{t} {beta:?}");
            let o = e.check_lemma61(&beta).unwrap();
            assert!(o.ok, "{t} {beta:?}: {:?}", o.witness);
        }
    }
}

#[test]
fn radical_is_serre_at_a2() {
    let p = params("A2");
    let mut e = PairingEngine::new(&p);
    let g = e.gram(&[2, 1]).unwrap();
    let kernel = g.matrix.transpose().kernel();
    assert_eq!(kernel.len(), 1);
    let u = serre_element(&p, 0, 1, Side::Neg).unwrap().to_free().unwrap();
    // the kernel vector is proportional to u_12^-
    let k: FreeElem = g.rows.iter().cloned().zip(kernel[0].iter().cloned()).collect();
    let (w0, c0) = u.iter().next().unwrap();
    let ratio = k.coeff(w0).checked_div(c0).unwrap();
    assert_eq!(k, u.scale(&ratio));
}

#[test]
fn gamma_of_serre_vanishes() {
    for t in common::RANK2 {
        let p = params(t);
        for (i, j) in [(0, 1), (1, 0)] {
            let u = serre_element(&p, i, j, Side::Pos).unwrap().to_free().unwrap();
            assert!(gamma_embed(&p, &u).is_zero(), "{t}");
            assert!(gamma_by_derivations(&p, &u).is_zero(), "{t}");
        }
    }
}

#[test]
fn gamma_examples_and_injectivity() {
    let p = params("A2");
    let g = gamma_embed(&p, &FreeElem::basis(vec![0, 1]));
    let mut expect = FreeElem::basis(vec![0, 1]);
    expect.add_term(vec![1, 0], p.q_elem(0, 1));
    assert_eq!(g, expect);
    for t in ["A2", "B2"] {
        let p = params(t);
        let mut e = PairingEngine::new(&p);
        for beta in common::degrees_up_to(2, 3) {
            let ws = words_of_degree(&beta);
            let rows: Vec<Vec<FieldElem>> = ws
                .iter()
                .map(|w| {
                    let img = gamma_embed(&p, &FreeElem::basis(w.clone()));
                    ws.iter().map(|v| img.coeff(v)).collect()
                })
                .collect();
            let rank = mpqg::linalg::Matrix::from_rows(rows).rank();
            assert_eq!(rank, e.gram(&beta).unwrap().rank, "{t} {beta:?}");
        }
    }
}

#[test]
fn one_parameter_gamma_collapses() {
    let d = CartanDatum::standard("B2").unwrap();
    let p = ParamMatrix::with_preset(&d, Preset::OneParameter);
    let g = gamma_embed(&p, &FreeElem::basis(vec![0, 1, 1]));
    for (_, c) in &g {
        assert!(c.is_poly());
        assert!(c.vars().iter().all(|v| *v == Var::Sym('q')));
    }
    // e_1 e_2 ↦ w12 + q^{d_1 a_12} w21
    let g = gamma_embed(&p, &FreeElem::basis(vec![0, 1]));
    assert_eq!(g.coeff(&vec![1, 0]), "q^-2".parse::<FieldElem>().unwrap());
}

#[test]
fn sesq_examples() {
    let p = params("A2");
    let mut e = PairingEngine::new(&p);
    let c0 = mpqg::borel::generator_pairing(&p, 0);
    assert_eq!(sesq_form(&mut e, &FreeElem::basis(vec![0]), &FreeElem::basis(vec![0])), c0);
    assert!(sesq_form(&mut e, &FreeElem::basis(vec![]), &FreeElem::basis(vec![])).is_one());
    assert!(sesq_form(&mut e, &FreeElem::basis(vec![0]), &FreeElem::basis(vec![1])).is_zero());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn coproduct_is_multiplicative(a in word_strategy(2, 2), b in word_strategy(2, 2), m in prop::collection::vec(-1i64..=1, 2)) {
        let p = params("B2");
        for side in [Side::Pos, Side::Neg] {
            let x = BorelElem::word(side, 2, &a).mul(&p, &BorelElem::toral(side, m.clone())).unwrap();
            let y = BorelElem::word(side, 2, &b);
            let lhs = x.mul(&p, &y).unwrap().coproduct(&p);
            let rhs = x.coproduct(&p).mul(&p, &y.coproduct(&p));
            prop_assert_eq!(&lhs, &rhs);
            prop_assert_eq!(lhs.counit_left(), x.mul(&p, &y).unwrap());
            prop_assert_eq!(lhs.counit_right(), x.mul(&p, &y).unwrap());
        }
    }

    #[test]
    fn derivations_match_coproduct(a in word_strategy(2, 4)) {
        // ∂̂_i(x)ω_i ⊗ e_i and e_iω_{β−α_i} ⊗ _i∂̂(x) components of Δ(x)
        let p = params("G2");
        let x = BorelElem::word(Side::Pos, 2, &a);
        let d = x.coproduct(&p);
        let beta = mpqg::shuffle::degree(&a, 2);
        for i in 0..2usize {
            let mut right = FreeElem::zero();
            let mut left = FreeElem::zero();
            for (((w1, mu), (w2, _)), c) in d.terms() {
                if *w2 == vec![i as u8] {
                    right.add_term(w1.clone(), c.clone());
                    let mut ai = vec![0; 2];
                    ai[i] = 1;
                    prop_assert_eq!(mu, &ai);
                }
                if *w1 == vec![i as u8] {
                    left.add_term(w2.clone(), c.clone());
                    let mut m = beta.clone();
                    m[i] -= 1;
                    prop_assert_eq!(mu, &m);
                }
            }
            let f = FreeElem::basis(a.clone());
            prop_assert_eq!(right, partial_right_free(&p, i, &f));
            prop_assert_eq!(left, partial_left_free(&p, i, &f));
        }
    }

    #[test]
    fn pairing_adjointness(a in word_strategy(2, 3), b in word_strategy(2, 4), i in 0usize..2) {
        let p = params("B2");
        let mut e = PairingEngine::new(&p);
        let c = mpqg::borel::generator_pairing(&p, i);
        let x = FreeElem::basis(b.clone());
        let mut fa = vec![i as u8];
        fa.extend_from_slice(&a);
        let lhs = e.words(&fa, &b);
        let rhs = e.pair_free(&FreeElem::basis(a.clone()), &partial_left_free(&p, i, &x)).mul(&c);
        prop_assert_eq!(lhs, rhs);
        let mut af = a.clone();
        af.push(i as u8);
        let lhs = e.words(&af, &b);
        let rhs = e.pair_free(&FreeElem::basis(a.clone()), &partial_right_free(&p, i, &x)).mul(&c);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gamma_multiplicative(a in word_strategy(2, 3), b in word_strategy(2, 2)) {
        let p = params("G2");
        let x = FreeElem::basis(a.clone());
        let y = FreeElem::basis(b.clone());
        let lhs = gamma_embed(&p, &concat(&x, &y));
        let mut sh = Shuffler::new(&p);
        let rhs = sh.mul(&gamma_embed(&p, &x), &gamma_embed(&p, &y));
        prop_assert_eq!(&lhs, &rhs);
        prop_assert_eq!(gamma_by_derivations(&p, &concat(&x, &y)), lhs);
    }

    #[test]
    fn sesq_adjoint_and_tau_linear(a in word_strategy(2, 2), b in word_strategy(2, 3), i in 0usize..2) {
        // (x e_i, y) = (x, ∂_i y) and (c x, y) = τ(c)(x, y)
        let p = params("B2");
        let mut e = PairingEngine::new(&p);
        let mut ai = a.clone();
        ai.push(i as u8);
        let y = FreeElem::basis(b.clone());
        let lhs = sesq_form(&mut e, &FreeElem::basis(ai), &y);
        let dy = partial_right_free(&p, i, &y).scale(&mpqg::borel::generator_pairing(&p, i));
        prop_assert_eq!(lhs, sesq_form(&mut e, &FreeElem::basis(a.clone()), &dy));
        let c = p.q_elem(0, 1).add(&FieldElem::from_int(2));
        let x = FreeElem::basis(a.clone());
        prop_assert_eq!(
            sesq_form(&mut e, &x.scale(&c), &y),
            p.tau(&c).mul(&sesq_form(&mut e, &x, &y))
        );
    }
}

#[test]
fn sesq_is_tau_hermitian_on_words() {
    for t in ["A2", "B2", "G2"] {
        let p = params(t);
        let mut e = PairingEngine::new(&p);
        for beta in [vec![1, 1], vec![2, 1], vec![1, 2], vec![2, 2]] {
            let ws = words_of_degree(&beta);
            for a in &ws {
                for b in &ws {
                    let xa = FreeElem::basis(a.clone());
                    let xb = FreeElem::basis(b.clone());
                    let ab = sesq_form(&mut e, &xa, &xb);
                    assert_eq!(p.tau(&ab), sesq_form(&mut e, &xb, &xa), "{t} {a:?} {b:?}");
                }
            }
        }
    }
}
