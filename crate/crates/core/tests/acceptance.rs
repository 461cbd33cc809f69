//! The twelve acceptance criteria, each timed against its limit. Prints
//! one line per criterion and exits nonzero if any is red.

mod common;

use std::time::{Duration, Instant};

use mpqg::borel::{
    check_lemma16, gamma_by_derivations, serre_element, FreeElem, PairingEngine, Side,
};
use mpqg::cartan::CartanDatum;
use mpqg::coeff::qnum::identity_suite;
use mpqg::coeff::{FieldElem, Monomial, ParamMatrix, Preset, Rat, Var};
use mpqg::linalg::FMatrix;
use mpqg::repmod::{self, Backend, Simplicity};
use mpqg::shuffle::{mixed_power_closed_form, serre_shuffle, word, words_of_degree, ShuffleElem, Shuffler, Word};
use mpqg::twist::Twist;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Verdict = Result<String, String>;

fn params(t: &str) -> ParamMatrix {
    ParamMatrix::generic(&CartanDatum::standard(t).unwrap())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pairs() -> [(usize, usize); 2] {
    [(0, 1), (1, 0)]
}

/// Types realising every off-diagonal entry in {0, -1, -2, -3}.
const ENTRY_TYPES: [&str; 4] = ["A1xA1", "A2", "B2", "G2"];

fn c1() -> Verdict {
    let res = identity_suite(6);
    for r in &res {
        ensure(r.passed(), || format!("{}: {:?}", r.name, r.failures.first()))?;
    }
    Ok(format!("{} identities, {} cases", res.len(), res.iter().map(|r| r.cases).sum::<usize>()))
}

fn c2() -> Verdict {
    let mut entries = Vec::new();
    for t in ENTRY_TYPES {
        let p = params(t);
        for (i, j) in pairs() {
            let s = serre_shuffle(&p, i as u8, j as u8).map_err(|e| e.to_string())?;
            ensure(s.is_zero(), || format!("{t} ({i},{j}) leaves {} terms", s.len()))?;
            entries.push(p.datum().a[i][j]);
        }
    }
    entries.sort();
    entries.dedup();
    ensure(entries == vec![-3, -2, -1, 0], || format!("entries covered: {entries:?}"))?;
    Ok("a_ij in {0,-1,-2,-3}".into())
}

fn c3() -> Verdict {
    let mut n = 0;
    for t in ["A2", "B2", "G2"] {
        let p = params(t);
        let mut sh = Shuffler::new(&p);
        for (i, j) in pairs() {
            let (i, j) = (i as u8, j as u8);
            for m in 0..=3 {
                for l in 0..=3 {
                    let a = sh.power(i, m);
                    let b = sh.power(i, l);
                    let aw = sh.mul(&a, &word(&[j]));
                    let rec = sh.mul(&aw, &b);
                    let closed = mixed_power_closed_form(&p, i, j, m, l).map_err(|e| e.to_string())?;
                    ensure(rec == closed, || format!("{t} ({i},{j}) m={m} l={l}"))?;
                    n += 1;
                }
            }
        }
    }
    Ok(format!("{n} cases"))
}

fn c4() -> Verdict {
    for t in ENTRY_TYPES {
        let p = params(t);
        for (i, j) in pairs() {
            let o = check_lemma16(&p, i, j).map_err(|e| e.to_string())?;
            ensure(o.ok, || format!("{t} ({i},{j}): {:?}", o.witness))?;
        }
    }
    Ok("both signs, all entry values".into())
}

fn c5() -> Verdict {
    let mut n = 0;
    for t in ["A2", "B2", "G2"] {
        let p = params(t);
        let roots = common::positive_roots(p.datum());
        let mut e = PairingEngine::new(&p);
        for beta in common::degrees_up_to(2, 4) {
            let g = e.gram(&beta).map_err(|e| e.to_string())?;
            let k = common::kostant(&roots, &beta);
            ensure(g.rank as u64 == k, || format!("{t} {beta:?}: rank {} vs {k}", g.rank))?;
            let o = e.check_reconstruction(&beta).map_err(|e| e.to_string())?;
            ensure(o.ok, || format!("{t} {beta:?} reconstruction: {:?}", o.witness))?;
            let o = e.check_lemma61(&beta).map_err(|e| e.to_string())?;
            ensure(o.ok, || format!("{t} {beta:?} coproduct: {:?}", o.witness))?;
            n += 1;
        }
    }
    Ok(format!("{n} degrees"))
}

fn c6() -> Verdict {
    let mut n = 0;
    for t in common::RANK2 {
        let p = params(t);
        let mut e = PairingEngine::new(&p);
        for (i, j) in pairs() {
            let u = serre_element(&p, i, j, Side::Neg).and_then(|u| u.to_free()).map_err(|e| e.to_string())?;
            let mut beta = vec![0; 2];
            beta[i] = 1 - p.datum().a[i][j];
            beta[j] = 1;
            for w in words_of_degree(&beta) {
                let v = e.pair_free(&u, &FreeElem::basis(w.clone()));
                ensure(v.is_zero(), || format!("{t} ({i},{j}) word {w:?}: {v}"))?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} pairings"))
}

fn c7() -> Verdict {
    for t in ["A2", "B2", "G2"] {
        let tw = Twist::new(&CartanDatum::standard(t).unwrap());
        for (name, o) in tw.relation_suite() {
            ensure(o.ok, || format!("{t} {name}: {:?}", o.witness))?;
        }
        let o = tw.cocycle_check(2);
        ensure(o.ok, || format!("{t} cocycle: {:?}", o.witness))?;
    }
    Ok("A2, B2, G2".into())
}

fn c8() -> Verdict {
    let p = params("A2");
    let phi = FieldElem::var(Var::Sym('a'));
    for i in 0..2 {
        for m in 0..=4 {
            let l = repmod::rank1_simple(&p, i, &phi, m).map_err(|e| e.to_string())?;
            let o = l.relations_check();
            ensure(o.ok, || format!("rank1 i={i} m={m}: {:?}", o.witness))?;
        }
        let q = p.q_elem(i, i);
        for m in 0..4u32 {
            let v = repmod::verma_rank1(&p, i, &phi, &phi.mul(&q.powi(-(m as i64)))).map_err(|e| e.to_string())?;
            let s = v.simplicity(8);
            ensure(s == Simplicity::Reducible { first: m + 1 }, || format!("boundary m={m}: {s:?}"))?;
        }
        let v = repmod::verma_rank1(&p, i, &phi, &FieldElem::var(Var::Sym('b'))).map_err(|e| e.to_string())?;
        ensure(v.simplicity(8) == Simplicity::SimpleUpTo(8), || "generic Verma module reducible".into())?;
    }
    let a1 = params("A1");
    for m in 0..=4i64 {
        let l = repmod::highest_weight_module(&a1, &[m], 10).map_err(|e| e.to_string())?;
        let got = l.nilpotency_index(0, 0, 10);
        ensure(got == Some(m as usize + 1), || format!("A1 L({m}): {got:?}"))?;
    }
    for lam in [[1, 0], [0, 1], [1, 1]] {
        let l = repmod::highest_weight_module(&p, &lam, 6).map_err(|e| e.to_string())?;
        for i in 0..2 {
            let got = l.nilpotency_index(i, 0, 10);
            ensure(got == Some(lam[i] as usize + 1), || format!("A2 L({lam:?}) f_{i}: {got:?}"))?;
        }
    }
    Ok("rank one m <= 4, boundary, nilpotency".into())
}

fn c9() -> Verdict {
    let a1 = params("A1");
    let mut mods = Vec::new();
    for m in 0..=3i64 {
        let l = repmod::highest_weight_module(&a1, &[m], 8).map_err(|e| e.to_string())?;
        let om = repmod::casimir(&l, l.spread()).map_err(|e| e.to_string())?;
        let cx = om.mul(&repmod::xi_operator(&l).map_err(|e| e.to_string())?);
        // A1: t = v^2, (λ+ρ, λ+ρ)/2 = (m+1)^2/4
        let g = FieldElem::monomial(Monomial::var_pow(Var::V, Rat::new((m + 1) * (m + 1), 2)));
        ensure(cx == FMatrix::identity(l.dim()).scale(&g), || format!("L({m}): Omega Xi is not {g}"))?;
        mods.push((l, om));
    }
    let a2 = params("A2");
    for lam in [[1, 0], [0, 1]] {
        let l = repmod::highest_weight_module(&a2, &lam, 6).map_err(|e| e.to_string())?;
        let om = repmod::casimir(&l, l.spread()).map_err(|e| e.to_string())?;
        mods.push((l, om));
    }
    for (l, om) in &mods {
        let o = repmod::casimir_commutation_check(l, om);
        ensure(o.ok, || format!("commutation on L({:?}): {:?}", l.highest, o.witness))?;
    }
    Ok(format!("scalar on 4 modules, commutation on {}", mods.len()))
}

fn timed<T>(limit: Duration, what: &str, f: impl FnOnce() -> Result<T, String>) -> Result<T, String> {
    let t = Instant::now();
    let r = f()?;
    let el = t.elapsed();
    ensure(el <= limit, || format!("{what} took {:.1}s", el.as_secs_f64()))?;
    Ok(r)
}

fn c10() -> Verdict {
    let limit = Duration::from_secs(60);
    let a1 = params("A1");
    let l1 = repmod::highest_weight_module(&a1, &[1], 4).map_err(|e| e.to_string())?;
    let l2 = repmod::highest_weight_module(&a1, &[2], 4).map_err(|e| e.to_string())?;
    timed(limit, "intertwiner", || {
        let o = repmod::braiding_intertwines(&l1, &l2).map_err(|e| e.to_string())?;
        ensure(o.ok, || format!("L(1)xL(2): {:?}", o.witness))
    })?;
    timed(limit, "A1 braid relation", || {
        let r = repmod::qybe_check(&l1, &l1, &l1, Backend::Exact).map_err(|e| e.to_string())?;
        ensure(r.holds, || format!("A1: {:?}", r.witness))
    })?;
    let seed = 2024;
    let a2 = params("A2");
    let l = repmod::highest_weight_module(&a2, &[1, 0], 6).map_err(|e| e.to_string())?;
    let assignment = timed(limit, "A2 braid relation", || {
        let r = repmod::qybe_check(&l, &l, &l, Backend::Specialized { seed }).map_err(|e| e.to_string())?;
        ensure(r.holds, || format!("A2: {:?}", r.witness))?;
        Ok(r.assignment.unwrap_or_default())
    })?;
    let vals: Vec<String> = assignment.iter().map(|(k, v)| format!("{k}={v}")).collect();
    Ok(format!("seed {seed}: {}", vals.join(", ")))
}

fn c11() -> Verdict {
    let a1 = params("A1");
    let l = |m| repmod::highest_weight_module(&a1, &[m], 8).map_err(|e| e.to_string());
    let got = repmod::decompose(&l(2)?.tensor(&l(3)?)).map_err(|e| e.to_string())?;
    let have: Vec<(i64, usize, usize)> = got.iter().map(|c| (c.highest[0], c.multiplicity, c.dim)).collect();
    // Clebsch–Gordan: L(a)⊗L(b) = ⊕_{k ≤ min(a,b)} L(a+b−2k)
    let (a, b) = (2i64, 3i64);
    let expect: Vec<(i64, usize, usize)> = (0..=a.min(b)).map(|k| (a + b - 2 * k, 1, (a + b - 2 * k + 1) as usize)).collect();
    ensure(have == expect, || format!("got {have:?}"))?;
    Ok("L(5)+L(3)+L(1), dims 6+4+2".into())
}

fn random_word(rng: &mut ChaCha8Rng, len: usize) -> Word {
    (0..len).map(|_| rng.gen_range(0..2u8)).collect()
}

fn one_parameter(d: &CartanDatum, x: &FieldElem) -> FieldElem {
    let q = Var::Sym('q');
    let d = d.clone();
    x.substitute(&move |v| match v {
        Var::V => Some(Monomial::var(q)),
        Var::X(i, j) => Some(Monomial::var_pow(q, Rat::from_integer(d.d[i as usize] * d.a[i as usize][j as usize]))),
        _ => None,
    })
}

fn c12() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(78);
    let types = ["A2", "B2", "G2"];
    for k in 0..200 {
        let t = types[k % 3];
        let p = params(t);
        let total = rng.gen_range(0..=5);
        let split = rng.gen_range(0..=total);
        let a = random_word(&mut rng, split);
        let b = random_word(&mut rng, total - split);
        let ab: Word = a.iter().chain(&b).copied().collect();
        let g = |w: &Word| gamma_by_derivations(&p, &FreeElem::basis(w.clone()));
        let prod: ShuffleElem = Shuffler::new(&p).mul(&g(&a), &g(&b));
        ensure(g(&ab) == prod, || format!("{t}: Gamma({a:?}{b:?})"))?;
    }
    for t in common::RANK2 {
        let p = params(t);
        for (i, j) in pairs() {
            let u = serre_element(&p, i, j, Side::Pos).and_then(|u| u.to_free()).map_err(|e| e.to_string())?;
            ensure(gamma_by_derivations(&p, &u).is_zero(), || format!("{t} ({i},{j}) Serre"))?;
        }
    }
    for t in ["A2", "B2", "G2"] {
        let d = CartanDatum::standard(t).unwrap();
        let generic = ParamMatrix::generic(&d);
        let one = ParamMatrix::with_preset(&d, Preset::OneParameter);
        for beta in common::degrees_up_to(2, 3) {
            for w in words_of_degree(&beta) {
                let x = FreeElem::basis(w.clone());
                let g1 = gamma_by_derivations(&one, &x);
                let gg = gamma_by_derivations(&generic, &x);
                for (v, c) in &g1 {
                    ensure(c.is_poly() && c.vars().iter().all(|x| *x == Var::Sym('q')), || format!("{t} {w:?}: {c}"))?;
                    ensure(one_parameter(&d, &gg.coeff(v)) == *c, || format!("{t} {w:?} at {v:?}"))?;
                }
                ensure(gg.len() == g1.len(), || format!("{t} {w:?}: support changed"))?;
            }
        }
    }
    Ok("200 pairs, Serre, one-parameter collapse".into())
}

fn main() {
    let criteria: [(&str, u64, fn() -> Verdict); 12] = [
        ("q-identities for n,m,k,r <= 6", 5, c1),
        ("shuffle Serre sums vanish", 30, c2),
        ("mixed power closed form, m,l <= 3", 10, c3),
        ("Serre coproduct identity", 60, c4),
        ("Gram rank, reconstruction, coproduct expansion", 60, c5),
        ("negative Serre elements pair to zero", 60, c6),
        ("twisted relations and cocycle", 60, c7),
        ("rank-one modules, simplicity boundary, nilpotency", 60, c8),
        ("Casimir scalar and commutations", 60, c9),
        ("braiding and braid relation", 180, c10),
        ("complete reducibility instance", 60, c11),
        ("shuffle realization", 60, c12),
    ];
    let mut red = 0;
    for (k, (what, limit, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = f();
        let el = t.elapsed().as_secs_f64();
        let r = r.and_then(|msg| {
            if el <= *limit as f64 {
                Ok(msg)
            } else {
                Err(format!("took {el:.1}s, limit {limit}s"))
            }
        });
        match r {
            Ok(msg) => println!("criterion {:>2}: PASS  {what} ({el:.2}s) {msg}", k + 1),
            Err(msg) => {
                red += 1;
                println!("criterion {:>2}: FAIL  {what} ({el:.2}s) {msg}", k + 1);
            }
        }
    }
    if red > 0 {
        println!("{red} criteria failed");
        std::process::exit(1);
    }
    println!("all 12 criteria passed");
}
