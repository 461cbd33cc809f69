#![allow(dead_code)]

use std::collections::BTreeSet;

use mpqg::cartan::CartanDatum;

/// Positive roots in simple-root coordinates, by closing the simple roots
/// under simple reflections `s_i(β) = β − (Σ_j a_ij β_j) α_i`.
pub fn positive_roots(d: &CartanDatum) -> Vec<Vec<i64>> {
    let n = d.rank();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut stack: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    while let Some(b) = stack.pop() {
        if b.iter().all(|&x| x >= 0) && seen.insert(b.clone()) {
            for i in 0..n {
                let pairing: i64 = (0..n).map(|j| d.a[i][j] * b[j]).sum();
                let mut r = b.clone();
                r[i] -= pairing;
                stack.push(r);
            }
        }
    }
    seen.into_iter().collect()
}

/// Number of multisets of positive roots summing to `beta`.
pub fn kostant(roots: &[Vec<i64>], beta: &[i64]) -> u64 {
    fn go(roots: &[Vec<i64>], k: usize, rest: &mut Vec<i64>) -> u64 {
        if rest.iter().all(|&x| x == 0) {
            return 1;
        }
        if k == roots.len() {
            return 0;
        }
        let mut total = go(roots, k + 1, rest);
        let mut used = 0;
        while rest.iter().zip(&roots[k]).all(|(a, b)| a >= b) {
            for (a, b) in rest.iter_mut().zip(&roots[k]) {
                *a -= b;
            }
            used += 1;
            total += go(roots, k + 1, rest);
        }
        for _ in 0..used {
            for (a, b) in rest.iter_mut().zip(&roots[k]) {
                *a += b;
            }
        }
        total
    }
    go(roots, 0, &mut beta.to_vec())
}

/// Nonzero degrees of height at most `h` in rank `n`.
pub fn degrees_up_to(n: usize, h: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                let used: i64 = v.iter().sum();
                (0..=h - used).map(move |k| {
                    let mut w = v.clone();
                    w.push(k);
                    w
                })
            })
            .collect();
    }
    out.retain(|v| v.iter().any(|&x| x > 0));
    out
}

pub const RANK2: [&str; 5] = ["A1xA1", "A2", "B2", "C2", "G2"];
