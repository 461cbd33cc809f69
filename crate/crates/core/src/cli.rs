//! Batch driver: run configuration, verification suites, JSON reports and
//! the command-line front end.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::borel::{check_lemma16, gamma_by_derivations, serre_element, FreeElem, PairingEngine, Side};
use crate::cartan::CartanDatum;
use crate::check::Outcome;
use crate::coeff::qnum::identity_suite;
use crate::coeff::{FieldElem, ParamMatrix, Rat, Var};
use crate::error::{Error, Result};
use crate::repmod::{self, Backend, WeightModule};
use crate::shuffle::{serre_shuffle, mixed_power_closed_form, word, Shuffler, ShuffleElem, Word};
use crate::twist::Twist;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub const SUITES: [&str; 8] = ["qidentities", "shuffle-serre", "lemma16", "gram", "twist", "modules", "rmatrix", "qybe"];

/// Largest accepted `depth` per suite.
fn depth_limit(suite: &str) -> u32 {
    match suite {
        "qidentities" => 8,
        "shuffle-serre" => 6,
        "gram" => 6,
        "twist" => 4,
        "modules" => 4,
        "rmatrix" => 4,
        _ => u32::MAX,
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum BackendKind {
    #[default]
    #[serde(alias = "exact")]
    #[value(alias = "exact")]
    Symbolic,
    Specialized,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    /// Standard type name; ignored when `datum` is set.
    #[serde(rename = "type")]
    pub type_name: String,
    /// Path to a Cartan datum JSON file.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub datum: Option<PathBuf>,
    pub suites: Vec<String>,
    pub depth: u32,
    pub backend: BackendKind,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub out: Option<String>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            type_name: "A2".into(),
            datum: None,
            suites: SUITES.iter().map(|s| s.to_string()).collect(),
            depth: 2,
            backend: BackendKind::Symbolic,
            seed: 0,
            out: None,
        }
    }
}

/// Fields a config file may set; present fields override the flags.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigPatch {
    #[serde(rename = "type")]
    type_name: Option<String>,
    datum: Option<PathBuf>,
    suites: Option<Vec<String>>,
    depth: Option<u32>,
    backend: Option<BackendKind>,
    seed: Option<u64>,
    out: Option<String>,
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.depth == 0 {
            return Err(Error::Usage("depth must be positive".into()));
        }
        if self.suites.is_empty() {
            return Err(Error::Usage("no suite selected".into()));
        }
        for s in &self.suites {
            if !SUITES.contains(&s.as_str()) {
                return Err(Error::Usage(format!("unknown suite `{s}`; valid suites: {}", SUITES.join(", "))));
            }
            let lim = depth_limit(s);
            if self.depth > lim {
                return Err(Error::Usage(format!(
                    "depth {} exceeds the limit {lim} for suite `{s}`; refusing to run",
                    self.depth
                )));
            }
        }
        Ok(())
    }

    pub fn load_datum(&self) -> Result<CartanDatum> {
        match &self.datum {
            Some(path) => {
                let text = std::fs::read_to_string(path)?;
                CartanDatum::from_json(&text)
            }
            None => CartanDatum::standard(&self.type_name),
        }
    }

    /// Overrides fields with those present in the JSON config `text`.
    pub fn apply_config(&mut self, text: &str) -> Result<()> {
        let p: ConfigPatch =
            serde_json::from_str(text).map_err(|e| Error::Usage(format!("bad config file: {e}")))?;
        if let Some(t) = p.type_name {
            self.type_name = t;
            self.datum = None;
        }
        if p.datum.is_some() {
            self.datum = p.datum;
        }
        if let Some(s) = p.suites {
            self.suites = s;
        }
        if let Some(d) = p.depth {
            self.depth = d;
        }
        if let Some(b) = p.backend {
            self.backend = b;
        }
        if let Some(s) = p.seed {
            self.seed = s;
        }
        if p.out.is_some() {
            self.out = p.out;
        }
        Ok(())
    }

    fn repmod_backend(&self) -> Backend {
        match self.backend {
            BackendKind::Symbolic => Backend::Exact,
            BackendKind::Specialized => Backend::Specialized { seed: self.seed },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub anchor: String,
    /// Instance within the check, e.g. a degree or a pair of indices.
    pub case: String,
    pub status: Status,
    pub witness: Option<String>,
    pub elapsed_ms: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<serde_json::Value>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub config: RunConfig,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
}

impl Report {
    fn new(config: RunConfig, checks: Vec<CheckRecord>) -> Self {
        let mut s = Summary { total: checks.len(), ..Summary::default() };
        for c in &checks {
            match c.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Skipped => s.skipped += 1,
            }
        }
        Report { version: VERSION.into(), config, checks, summary: s }
    }

    pub fn failed(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    /// Copy with every `elapsed_ms` zeroed, for comparing runs.
    pub fn without_timings(&self) -> Self {
        let mut r = self.clone();
        for c in &mut r.checks {
            c.elapsed_ms = 0;
        }
        r
    }

    /// One line per failing or skipped check plus the counts.
    pub fn human_summary(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            if c.status != Status::Pass {
                let tag = if c.status == Status::Fail { "FAIL" } else { "SKIP" };
                out += &format!("{tag} {} [{}] {}: {}\n", c.name, c.anchor, c.case, c.witness.as_deref().unwrap_or(""));
            }
        }
        let s = &self.summary;
        out += &format!("{} checks: {} passed, {} failed, {} skipped\n", s.total, s.pass, s.fail, s.skipped);
        out
    }
}

struct Entry {
    name: &'static str,
    anchor: &'static str,
    statement: &'static str,
}

const CATALOG: &[Entry] = &[
    Entry { name: "q-addition", anchor: "Eq. 1", statement: "(m+n)_v = (m)_v + v^m (n)_v" },
    Entry { name: "binomial-absorption", anchor: "Eq. 2", statement: "[m,k]_v (m-k)_v = [m,k+1]_v (k+1)_v" },
    Entry {
        name: "binomial-triple-product",
        anchor: "Eq. 3",
        statement: "[r,k]_v [k,m]_v [r-k,n]_v = [r-m-n,k-m]_v [m+n,m]_v [r,m+n]_v",
    },
    Entry {
        name: "q-pascal",
        anchor: "Eq. 4",
        statement: "[n,k]_v = v^k [n-1,k]_v + [n-1,k-1]_v = [n-1,k]_v + v^(n-k) [n-1,k-1]_v",
    },
    Entry {
        name: "gauss-product",
        anchor: "Eq. 5",
        statement: "sum_k (-1)^k [n,k]_v v^(k(k-1)/2) a^(n-k) z^k = prod_(k<n) (a - v^k z)",
    },
    Entry {
        name: "shuffle-serre",
        anchor: "Proposition 74",
        statement: "sum_k (-1)^k [N,k]_(q_ii) q_ii^(k(k-1)/2) q_ij^k w_i^(*(N-k)) * w_j * w_i^(*k) = 0 with N = 1 - a_ij",
    },
    Entry {
        name: "lemma73",
        anchor: "Lemma 73",
        statement: "closed double-sum form of w_i^(*m) * w_j * w_i^(*l) equals the recursive shuffle product, m, l <= depth",
    },
    Entry {
        name: "gamma-serre",
        anchor: "Theorem 78",
        statement: "Gamma(u_ij^+) = sum_w d_w(u_ij^+) w = 0, computed from skew derivations",
    },
    Entry {
        name: "gamma-multiplicative",
        anchor: "Theorem 78",
        statement: "Gamma(xy) = Gamma(x) * Gamma(y) for all word pairs of total length <= depth",
    },
    Entry {
        name: "lemma16",
        anchor: "Lemma 16",
        statement: "Delta(u_ij^+) = u_ij^+ (x) 1 + w_i^(1-a_ij) w_j (x) u_ij^+ and Delta(u_ij^-) = u_ij^- (x) w'_i^(1-a_ij) w'_j + 1 (x) u_ij^-",
    },
    Entry { name: "lemma19", anchor: "Lemma 19", statement: "<u_ij^-, e_J> = 0 for every word J of the same degree" },
    Entry {
        name: "gram-rank",
        anchor: "Proposition 44",
        statement: "rank of the Gram block <f_J, e_K> at degree beta equals the Kostant partition number of beta",
    },
    Entry {
        name: "reconstruction",
        anchor: "Eq. 45",
        statement: "x = sum_k <v_k, x> u_k for every word basis vector x of degree beta",
    },
    Entry {
        name: "lemma61",
        anchor: "Lemma 61",
        statement: "Delta(x) = sum over 0 <= gamma <= beta of the dual-basis expansion of x, for basis words x of degree beta",
    },
    Entry { name: "R*1", anchor: "Theorem 28", statement: "twisted toral generators commute and K_i * K_i^-1 = 1" },
    Entry { name: "R*2", anchor: "Theorem 28", statement: "K_i * E_j * K_i^-1 = q_ij E_j and K'_i * E_j * K'_i^-1 = q_ji^-1 E_j" },
    Entry { name: "R*3", anchor: "Theorem 28", statement: "K_i * F_j * K_i^-1 = q_ij^-1 F_j and K'_i * F_j * K'_i^-1 = q_ji F_j" },
    Entry {
        name: "R*4",
        anchor: "Theorem 28",
        statement: "E_i * F_j = q_ji F_j * E_i for i != j, with the twisted product *",
    },
    Entry {
        name: "R*5",
        anchor: "Theorem 28",
        statement: "E_i * F_i - q_ii F_i * E_i = c_i (K_i - K'_i), c_i = q_ii/(q_ii - 1) in the one-parameter normalization",
    },
    Entry { name: "R*6", anchor: "Theorem 28", statement: "twisted E-side Serre sums vanish modulo the one-parameter Serre relation" },
    Entry { name: "R*7", anchor: "Theorem 28", statement: "twisted F-side Serre sums vanish modulo the one-parameter Serre relation" },
    Entry {
        name: "cocycle",
        anchor: "Eqs. 23-24",
        statement: "sigma(a1,b1) sigma(a2 b2, c) = sigma(b1,c1) sigma(a, b2 c2), sigma(1,a) = sigma(a,1) = eps(a), sigma * sigma^-1 = eps (x) eps",
    },
    Entry {
        name: "twisted-antipode",
        anchor: "Eq. 26",
        statement: "m^sigma (S^sigma (x) id) Delta = m^sigma (id (x) S^sigma) Delta = eps on E_i, F_i, K_i, K'_i",
    },
    Entry {
        name: "relations",
        anchor: "Definition 7",
        statement: "module matrices satisfy (R1)-(R7), Serre relations included",
    },
    Entry {
        name: "lemma33",
        anchor: "Lemma 33",
        statement: "e_i f_i^m = f_i^m e_i + c_i f_i^(m-1) ((m)_(q^-1) w_i - (m)_q w'_i), and the mirror identity for e_i^m f_i",
    },
    Entry { name: "nilpotency", anchor: "Proposition 37", statement: "f_i^(lambda(h_i)+1) v_lambda = 0 and f_i^(lambda(h_i)) v_lambda != 0" },
    Entry {
        name: "casimir",
        anchor: "Lemma 57",
        statement: "Omega Xi acts on L(lambda) by t^((lambda+rho, lambda+rho)/2)",
    },
    Entry {
        name: "casimir-commutation",
        anchor: "Eq. 52",
        statement: "Omega e_i v = q_ii^(-(mu+alpha_i)(h_i)) e_i Omega v and Omega f_i v = q_ii^(mu(h_i)) f_i Omega v for v of weight mu",
    },
    Entry {
        name: "rank1",
        anchor: "Proposition 36(iii)",
        statement: "the (m+1)-dimensional U_i-module L(phi) satisfies every U_i relation",
    },
    Entry {
        name: "rank1-printed-scalar",
        anchor: "Proposition 36(iii)",
        statement: "e_i-scalars derived from (R5) agree with phi q^(1-m) (m-j+1)_q (j)_q",
    },
    Entry {
        name: "verma",
        anchor: "Proposition 36(i)",
        statement: "M(phi, phi') has a singular vector v_j iff phi' = q_ii^-(j-1) phi; otherwise simple",
    },
    Entry {
        name: "decompose",
        anchor: "Theorem 58",
        statement: "M (x) M' splits into simple constituents matching the classical pattern (Clebsch-Gordan in rank one, Weyl dimensions otherwise)",
    },
    Entry {
        name: "braiding-intertwines",
        anchor: "Theorem 65",
        statement: "R_(M,M') Delta(x) = Delta(x) R_(M,M') on M (x) M' for every generator x",
    },
    Entry {
        name: "lemma48",
        anchor: "Lemma 48",
        statement: "Theta intertwines Delta with the bar coproduct and Theta Theta-bar = 1",
    },
    Entry {
        name: "qybe",
        anchor: "Corollary 68",
        statement: "(R_(M',M'') (x) 1)(1 (x) R_(M,M''))(R_(M,M') (x) 1) = (1 (x) R_(M,M'))(R_(M,M'') (x) 1)(1 (x) R_(M',M'')) on M (x) M' (x) M''",
    },
];

/// Anchor and identity for a check name.
pub fn explain(name: &str) -> Result<String> {
    match CATALOG.iter().find(|e| e.name == name) {
        Some(e) => Ok(format!("{}: {}\n  {}\n", e.name, e.anchor, e.statement)),
        None => {
            let names: Vec<&str> = CATALOG.iter().map(|e| e.name).collect();
            Err(Error::Usage(format!("unknown check `{name}`; valid names: {}", names.join(", "))))
        }
    }
}

pub fn check_names() -> Vec<&'static str> {
    CATALOG.iter().map(|e| e.name).collect()
}

fn anchor(name: &str) -> &'static str {
    CATALOG.iter().find(|e| e.name == name).map(|e| e.anchor).expect("check is catalogued")
}

struct Runner {
    records: Vec<CheckRecord>,
}

impl Runner {
    fn push(&mut self, name: &str, case: String, started: Instant, r: Result<Outcome>, detail: Option<serde_json::Value>) {
        let (status, witness) = match r {
            Ok(o) if o.ok => (Status::Pass, None),
            Ok(o) => (Status::Fail, o.witness),
            Err(Error::Unsupported(m)) => (Status::Skipped, Some(m)),
            Err(e) => (Status::Fail, Some(e.to_string())),
        };
        self.records.push(CheckRecord {
            name: name.into(),
            anchor: anchor(name).into(),
            case,
            status,
            witness,
            elapsed_ms: started.elapsed().as_millis() as u64,
            detail,
        });
    }

    fn run(&mut self, name: &str, case: impl Into<String>, f: impl FnOnce() -> Result<Outcome>) {
        let t = Instant::now();
        let r = f();
        self.push(name, case.into(), t, r, None);
    }
}

fn fmt_word(w: &[u8]) -> String {
    let s: Vec<String> = w.iter().map(|l| (l + 1).to_string()).collect();
    format!("[{}]", s.join(","))
}

fn first_term(x: &ShuffleElem) -> String {
    match x.iter().next() {
        Some((w, c)) => format!("{} has coefficient {c}", fmt_word(w)),
        None => String::new(),
    }
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).collect()
}

/// Nonzero degrees of height at most `h`.
fn degrees(n: usize, h: i64) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
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
    out.sort_by_key(|v| (v.iter().sum::<i64>(), v.clone()));
    out
}

fn words_up_to(n: usize, len: usize) -> Vec<Word> {
    let mut out = vec![vec![]];
    let mut layer: Vec<Word> = vec![vec![]];
    for _ in 0..len {
        layer = layer
            .iter()
            .flat_map(|w| {
                (0..n as u8).map(move |l| {
                    let mut x = w.clone();
                    x.push(l);
                    x
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn suite_qidentities(r: &mut Runner, depth: u32) {
    let t = Instant::now();
    let results = identity_suite(depth);
    let ms = t.elapsed().as_millis() as u64 / results.len().max(1) as u64;
    for res in results {
        let o = match res.failures.first() {
            None => Outcome::pass(),
            Some(f) => Outcome::fail(format!("{f} ({} of {} cases fail)", res.failures.len(), res.cases)),
        };
        r.records.push(CheckRecord {
            name: res.name.clone(),
            anchor: anchor(&res.name).into(),
            case: format!("parameters <= {depth}, {} cases", res.cases),
            status: if o.ok { Status::Pass } else { Status::Fail },
            witness: o.witness,
            elapsed_ms: ms,
            detail: None,
        });
    }
}

fn suite_shuffle(r: &mut Runner, p: &ParamMatrix, depth: u32) {
    let n = p.rank();
    for (i, j) in pairs(n) {
        let case = format!("(i,j) = ({},{})", i + 1, j + 1);
        r.run("shuffle-serre", case.clone(), || {
            let s = serre_shuffle(p, i as u8, j as u8)?;
            Ok(if s.is_zero() { Outcome::pass() } else { Outcome::fail(first_term(&s)) })
        });
        r.run("lemma73", case.clone(), || {
            let mut sh = Shuffler::new(p);
            for m in 0..=depth {
                for l in 0..=depth {
                    let closed = mixed_power_closed_form(p, i as u8, j as u8, m, l)?;
                    let a = sh.power(i as u8, m);
                    let b = sh.power(i as u8, l);
                    let aw = sh.mul(&a, &word(&[j as u8]));
                    let rec = sh.mul(&aw, &b);
                    let d = closed.sub(&rec);
                    if !d.is_zero() {
                        return Ok(Outcome::fail(format!("m={m} l={l}: {}", first_term(&d))));
                    }
                }
            }
            Ok(Outcome::pass())
        });
        r.run("gamma-serre", case, || {
            let u = serre_element(p, i, j, Side::Pos)?.to_free()?;
            let g = gamma_by_derivations(p, &u);
            Ok(if g.is_zero() { Outcome::pass() } else { Outcome::fail(first_term(&g)) })
        });
    }
    r.run("gamma-multiplicative", format!("total length <= {depth}"), || {
        let mut sh = Shuffler::new(p);
        let ws = words_up_to(n, depth as usize);
        let gamma = |w: &Word| gamma_by_derivations(p, &FreeElem::basis(w.clone()));
        let images: BTreeMap<Word, ShuffleElem> = ws.iter().map(|w| (w.clone(), gamma(w))).collect();
        for a in &ws {
            for b in &ws {
                if a.len() + b.len() > depth as usize {
                    continue;
                }
                let ab: Word = a.iter().chain(b).copied().collect();
                let d = images[&ab].sub(&sh.mul(&images[a], &images[b]));
                if !d.is_zero() {
                    return Ok(Outcome::fail(format!("x={} y={}: {}", fmt_word(a), fmt_word(b), first_term(&d))));
                }
            }
        }
        Ok(Outcome::pass())
    });
}

fn suite_lemma16(r: &mut Runner, p: &ParamMatrix) {
    for (i, j) in pairs(p.rank()) {
        r.run("lemma16", format!("(i,j) = ({},{}), both signs", i + 1, j + 1), || check_lemma16(p, i, j));
    }
}

fn suite_gram(r: &mut Runner, p: &ParamMatrix, depth: u32) {
    let datum = p.datum();
    let mut e = PairingEngine::with_bound(p, depth.max(crate::borel::DEFAULT_HEIGHT_BOUND));
    for beta in degrees(p.rank(), depth as i64) {
        let case = format!("beta = {beta:?}");
        r.run("gram-rank", case.clone(), || {
            let expect = datum.kostant_partition(&beta)?;
            let g = e.gram(&beta)?;
            Ok(if g.rank as u64 == expect {
                Outcome::pass()
            } else {
                Outcome::fail(format!("rank {} but Kostant number {expect}", g.rank))
            })
        });
        r.run("reconstruction", case.clone(), || e.check_reconstruction(&beta));
        r.run("lemma61", case, || e.check_lemma61(&beta));
    }
    for (i, j) in pairs(p.rank()) {
        r.run("lemma19", format!("(i,j) = ({},{})", i + 1, j + 1), || {
            let u = serre_element(p, i, j, Side::Neg)?.to_free()?;
            let mut beta = vec![0; p.rank()];
            beta[i] = 1 - datum.a[i][j];
            beta[j] = 1;
            for w in crate::shuffle::words_of_degree(&beta) {
                let v = e.pair_free(&u, &FreeElem::basis(w.clone()));
                if !v.is_zero() {
                    return Ok(Outcome::fail(format!("pairing with e{} is {v}", fmt_word(&w))));
                }
            }
            Ok(Outcome::pass())
        });
    }
}

fn suite_twist(r: &mut Runner, datum: &CartanDatum, depth: u32) {
    let t = Instant::now();
    let tw = Twist::new(datum);
    let rels = tw.relation_suite();
    let ms = t.elapsed().as_millis() as u64 / rels.len().max(1) as u64;
    for (name, o) in rels {
        r.records.push(CheckRecord {
            name: name.clone(),
            anchor: anchor(&name).into(),
            case: datum.label.clone(),
            status: if o.ok { Status::Pass } else { Status::Fail },
            witness: o.witness,
            elapsed_ms: ms,
            detail: None,
        });
    }
    r.run("cocycle", format!("depth {depth}"), || Ok(tw.cocycle_check(depth as usize)));
    r.run("twisted-antipode", "generators", || {
        let n = tw.rank();
        for i in 0..n {
            for (label, x) in [("E", tw.e(i)), ("F", tw.f(i)), ("K", tw.k(i, 1)), ("K'", tw.kp(i, 1))] {
                let (a, b) = tw.antipode_residuals(&x);
                if !a.is_zero() || !b.is_zero() {
                    let bad = if a.is_zero() { b } else { a };
                    return Ok(Outcome::fail(format!("{label}_{}: residual {}", i + 1, tw.display(&bad))));
                }
            }
        }
        Ok(Outcome::pass())
    });
}

fn rat(n: i64) -> Rat {
    Rat::from_integer(n)
}

fn to_root(datum: &CartanDatum, lam: &[i64]) -> Result<Vec<Rat>> {
    datum.weight_to_root(&lam.iter().map(|&x| rat(x)).collect::<Vec<_>>())
}

/// `L(λ)` for dominant `λ` in fundamental coordinates, finite type only.
pub fn build_module(p: &ParamMatrix, lam: &[i64]) -> Result<WeightModule> {
    let datum = p.datum();
    if !datum.is_finite_type() {
        return Err(Error::Unsupported("highest-weight modules need a finite-type datum".into()));
    }
    if lam.len() != datum.rank() {
        return Err(Error::Usage(format!("highest weight needs {} coordinates", datum.rank())));
    }
    let height: Rat = to_root(datum, lam)?.iter().sum();
    let depth = (height * rat(2)).ceil().to_integer().max(0) as usize + 1;
    repmod::highest_weight_module(p, lam, depth)
}

/// Largest module the suites build.
pub const MODULE_DIM_CAP: i64 = 10;
/// Largest tensor product the suites braid or cube.
pub const TENSOR_DIM_CAP: i64 = 64;
/// Largest tensor product the suites decompose.
pub const DECOMPOSE_DIM_CAP: i64 = 16;

/// Refuses, as `Unsupported`, a tensor product of `L(λ)`s above `cap`.
fn within_cap(datum: &CartanDatum, lams: &[&[i64]], cap: i64) -> Result<()> {
    if !datum.is_finite_type() {
        return Err(Error::Unsupported("highest-weight modules need a finite-type datum".into()));
    }
    let mut dim = rat(1);
    for l in lams {
        dim *= weyl_dim(datum, l)?;
    }
    if dim > rat(cap) {
        return Err(Error::Unsupported(format!("dimension {dim} is above the cap {cap}")));
    }
    Ok(())
}

/// Weyl's dimension formula for `L(λ)`.
fn weyl_dim(datum: &CartanDatum, lam: &[i64]) -> Result<Rat> {
    let rho = datum.rho()?;
    let l = to_root(datum, lam)?;
    let lr: Vec<Rat> = l.iter().zip(&rho).map(|(a, b)| a + b).collect();
    let mut out = rat(1);
    for a in datum.positive_roots()? {
        let a: Vec<Rat> = a.iter().map(|&x| rat(x)).collect();
        out *= datum.form(&lr, &a) / datum.form(&rho, &a);
    }
    Ok(out)
}

/// Dominant weights with coordinate sum in `1..=depth`.
fn dominant(n: usize, depth: u32) -> Vec<Vec<i64>> {
    degrees(n, depth as i64)
}

fn suite_modules(r: &mut Runner, p: &ParamMatrix, depth: u32) {
    let datum = p.datum();
    let n = p.rank();
    let phi = FieldElem::var(Var::Sym('a'));
    for i in 0..n {
        let case = format!("i = {}, m <= {depth}", i + 1);
        r.run("rank1", case.clone(), || {
            for m in 0..=depth {
                let l = repmod::rank1_simple(p, i, &phi, m)?;
                let o = l.relations_check().and(l.lemma33_check(m + 1));
                if !o.ok {
                    return Ok(Outcome::fail(format!("m={m}: {}", o.witness.unwrap_or_default())));
                }
            }
            Ok(Outcome::pass())
        });
        r.run("rank1-printed-scalar", case.clone(), || {
            for m in 0..=depth {
                let o = repmod::rank1_simple(p, i, &phi, m)?.printed_formula_check();
                if !o.ok {
                    return Ok(Outcome::fail(format!("m={m}: {}", o.witness.unwrap_or_default())));
                }
            }
            Ok(Outcome::pass())
        });
        r.run("verma", format!("i = {}, j <= {}", i + 1, depth + 1), || {
            let q = p.q_elem(i, i);
            let look = depth + 4;
            for m in 0..=depth {
                let v = repmod::verma_rank1(p, i, &phi, &phi.mul(&q.powi(-(m as i64))))?;
                let got = v.simplicity(look);
                if got != (repmod::Simplicity::Reducible { first: m + 1 }) {
                    return Ok(Outcome::fail(format!("phi' = q^-{m} phi gives {got:?}")));
                }
            }
            let generic = repmod::verma_rank1(p, i, &phi, &FieldElem::var(Var::Sym('b')))?;
            let got = generic.simplicity(look);
            Ok(if got == repmod::Simplicity::SimpleUpTo(look) {
                Outcome::pass()
            } else {
                Outcome::fail(format!("generic phi' gives {got:?}"))
            })
        });
    }
    let max_sum = if n == 1 { depth } else { depth.min(2) };
    for lam in dominant(n, max_sum) {
        let case = format!("lambda = {lam:?}");
        let built = within_cap(datum, &[&lam], MODULE_DIM_CAP).and_then(|_| build_module(p, &lam));
        let m = match built {
            Ok(m) => m,
            Err(e) => {
                for name in ["relations", "lemma33", "nilpotency", "casimir", "casimir-commutation"] {
                    r.run(name, case.clone(), || Err(clone_err(&e)));
                }
                continue;
            }
        };
        r.run("relations", case.clone(), || {
            Ok(m.relations_check().into_iter().fold(Outcome::pass(), |acc, (name, o)| {
                acc.and(if o.ok { o } else { Outcome::fail(format!("{name}: {}", o.witness.unwrap_or_default())) })
            }))
        });
        r.run("lemma33", case.clone(), || Ok(m.lemma33_check(3)));
        r.run("nilpotency", case.clone(), || {
            for (i, &li) in lam.iter().enumerate() {
                let got = m.nilpotency_index(i, 0, li as usize + 2);
                if got != Some(li as usize + 1) {
                    return Ok(Outcome::fail(format!("f_{} on v_lambda: index {got:?}, expected {}", i + 1, li + 1)));
                }
            }
            Ok(Outcome::pass())
        });
        let mut om = None;
        r.run("casimir", case.clone(), || {
            let o = repmod::casimir(&m, m.spread())?;
            let cx = o.mul(&repmod::xi_operator(&m)?);
            om = Some(o);
            let g = FieldElem::monomial(repmod::g_value(p, &to_root(datum, &lam)?)?);
            let expect = crate::linalg::FMatrix::identity(m.dim()).scale(&g);
            Ok(Outcome::from_witness(repmod_diff("Omega Xi", &cx, &expect)))
        });
        r.run("casimir-commutation", case, || match &om {
            Some(o) => Ok(repmod::casimir_commutation_check(&m, o)),
            None => Err(Error::Internal("Casimir operator unavailable".into())),
        });
    }
    decompose_checks(r, p, depth);
}

fn repmod_diff(label: &str, a: &crate::linalg::FMatrix, b: &crate::linalg::FMatrix) -> Option<String> {
    a.first_difference(b).map(|(i, j)| {
        if i == usize::MAX {
            format!("{label}: shape mismatch")
        } else {
            format!("{label}: entry ({i},{j}) is {} vs {}", a.get(i, j), b.get(i, j))
        }
    })
}

fn decompose_checks(r: &mut Runner, p: &ParamMatrix, depth: u32) {
    let datum = p.datum();
    let n = p.rank();
    let cases: Vec<(Vec<i64>, Vec<i64>)> = if n == 1 {
        (1..=depth as i64).flat_map(|a| (a..=depth as i64 + 1).map(move |b| (vec![a], vec![b]))).collect()
    } else {
        (0..n)
            .flat_map(|i| {
                (i..n).map(move |j| {
                    let e = |k: usize| (0..n).map(|x| i64::from(x == k)).collect::<Vec<i64>>();
                    (e(i), e(j))
                })
            })
            .collect()
    };
    for (a, b) in cases {
        r.run("decompose", format!("L({a:?}) (x) L({b:?})"), || {
            within_cap(datum, &[&a, &b], DECOMPOSE_DIM_CAP)?;
            let ma = build_module(p, &a)?;
            let mb = build_module(p, &b)?;
            let got = repmod::decompose(&ma.tensor(&mb))?;
            let summary: Vec<String> = got.iter().map(|c| format!("{}xL({:?})[{}]", c.multiplicity, c.highest, c.dim)).collect();
            if n == 1 {
                let (x, y) = (a[0], b[0]);
                let expect: Vec<(i64, usize, usize)> =
                    (0..=x.min(y)).map(|k| (x + y - 2 * k, 1, (x + y - 2 * k + 1) as usize)).collect();
                let have: Vec<(i64, usize, usize)> = got.iter().map(|c| (c.highest[0], c.multiplicity, c.dim)).collect();
                return Ok(if have == expect {
                    Outcome::pass()
                } else {
                    Outcome::fail(format!("got {}", summary.join(" + ")))
                });
            }
            let top: Vec<i64> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
            if !got.iter().any(|c| c.highest == top && c.multiplicity == 1) {
                return Ok(Outcome::fail(format!("L({top:?}) missing: {}", summary.join(" + "))));
            }
            for c in &got {
                if rat(c.dim as i64) != weyl_dim(datum, &c.highest)? {
                    return Ok(Outcome::fail(format!("dimension of L({:?}) is {}", c.highest, c.dim)));
                }
            }
            Ok(Outcome::pass())
        });
    }
}

fn rmatrix_pairs(n: usize, depth: u32) -> Vec<(Vec<i64>, Vec<i64>)> {
    if n == 1 {
        (1..=depth as i64).flat_map(|a| (a..=depth as i64).map(move |b| (vec![a], vec![b]))).filter(|(a, b)| a[0] + b[0] <= depth as i64 + 1).collect()
    } else {
        let e = |k: usize| (0..n).map(|x| i64::from(x == k)).collect::<Vec<i64>>();
        (0..n).flat_map(|i| (0..n).map(move |j| (e(i), e(j)))).collect()
    }
}

fn suite_rmatrix(r: &mut Runner, p: &ParamMatrix, depth: u32) {
    let n = p.rank();
    for (a, b) in rmatrix_pairs(n, depth.max(2)) {
        let case = format!("L({a:?}) (x) L({b:?})");
        let mods = within_cap(p.datum(), &[&a, &b], TENSOR_DIM_CAP).and_then(|_| build_module(p, &a)).and_then(|x| Ok((x, build_module(p, &b)?)));
        let mods = mods.as_ref();
        r.run("braiding-intertwines", case.clone(), || match mods {
            Ok((x, y)) => repmod::braiding_intertwines(x, y),
            Err(e) => Err(clone_err(e)),
        });
        r.run("lemma48", case, || match mods {
            Ok((x, y)) => repmod::lemma48_check(x, y),
            Err(e) => Err(clone_err(e)),
        });
    }
}

fn clone_err(e: &Error) -> Error {
    match e {
        Error::Unsupported(s) => Error::Unsupported(s.clone()),
        e => Error::Internal(e.to_string()),
    }
}

fn suite_qybe(r: &mut Runner, p: &ParamMatrix, backend: Backend) {
    let n = p.rank();
    let datum = p.datum();
    // the smallest fundamental module
    let fundamentals: Vec<Vec<i64>> = (0..n).map(|k| (0..n).map(|x| i64::from(x == k)).collect()).collect();
    let lam = fundamentals
        .iter()
        .min_by_key(|l| weyl_dim(datum, l).map(|d| d.to_integer()).unwrap_or(i64::MAX))
        .cloned()
        .expect("rank is positive");
    let case = format!("L({lam:?})^(x)3");
    let t = Instant::now();
    let res = within_cap(datum, &[&lam, &lam, &lam], TENSOR_DIM_CAP).and_then(|_| build_module(p, &lam)).and_then(|m| repmod::qybe_check(&m, &m, &m, backend));
    match res {
        Ok(rep) => {
            let detail = serde_json::json!({ "backend": rep.backend, "dim": rep.dim, "assignment": rep.assignment });
            let o = if rep.holds { Outcome::pass() } else { Outcome::fail(rep.witness.unwrap_or_default()) };
            r.push("qybe", case, t, Ok(o), Some(detail));
        }
        Err(e) => r.push("qybe", case, t, Err(e), None),
    }
}

/// Runs the selected suites in the order given by [`SUITES`].
pub fn run_suite(config: &RunConfig) -> Result<Report> {
    config.validate()?;
    let datum = config.load_datum()?;
    let p = ParamMatrix::generic(&datum);
    let mut r = Runner { records: Vec::new() };
    for suite in SUITES {
        if !config.suites.iter().any(|s| s == suite) {
            continue;
        }
        match suite {
            "qidentities" => suite_qidentities(&mut r, config.depth),
            "shuffle-serre" => suite_shuffle(&mut r, &p, config.depth),
            "lemma16" => suite_lemma16(&mut r, &p),
            "gram" => suite_gram(&mut r, &p, config.depth),
            "twist" => suite_twist(&mut r, &datum, config.depth),
            "modules" => suite_modules(&mut r, &p, config.depth),
            "rmatrix" => suite_rmatrix(&mut r, &p, config.depth),
            "qybe" => suite_qybe(&mut r, &p, config.repmod_backend()),
            _ => unreachable!("validated"),
        }
    }
    Ok(Report::new(config.clone(), r.records))
}

#[derive(Parser, Debug)]
#[command(name = "mpqg", version, about = "Exact verification suites for multi-parameter quantum groups")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug)]
struct Common {
    /// Standard type: A1, A1xA1, A2, B2, C2, G2, A3, ...
    #[arg(long = "type", global = true)]
    type_name: Option<String>,
    /// Cartan datum JSON file, instead of --type.
    #[arg(long, global = true)]
    datum: Option<PathBuf>,
    /// Search depth: word length, degree height or weight size per suite (default 2).
    #[arg(long, global = true)]
    depth: Option<u32>,
    /// Exact rational functions, or evaluation at seeded rational points.
    #[arg(long, global = true, value_enum)]
    backend: Option<BackendKind>,
    /// Seed for the specialized backend and sampled checks.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Output file; `-` or `json` writes to standard output.
    #[arg(long, global = true)]
    out: Option<String>,
    /// JSON run configuration; its fields override the flags.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Run verification suites and write a JSON report.
    Check {
        /// Comma-separated suite names; all suites when omitted.
        #[arg(long = "suite", value_delimiter = ',')]
        suites: Vec<String>,
    },
    /// Shuffle products and the Serre check.
    #[command(subcommand)]
    Shuffle(ShuffleCmd),
    /// Gram block, rank and dual bases at one degree.
    Gram {
        /// Degree as comma-separated multiplicities, e.g. `2,1`.
        #[arg(long)]
        degree: String,
    },
    /// Cocycle twist checks.
    #[command(subcommand)]
    Twist(TwistCmd),
    /// Highest-weight modules.
    #[command(subcommand)]
    Module(ModuleCmd),
    /// Braiding on a tensor product of two highest-weight modules.
    Rmatrix {
        /// Two highest weights, e.g. `--modules 1 2` or `--modules 1,0 0,1`.
        #[arg(long, num_args = 2, required = true)]
        modules: Vec<String>,
    },
    /// Braid relation on a triple tensor product.
    Qybe {
        /// Three highest weights.
        #[arg(long, num_args = 3, required = true)]
        m: Vec<String>,
    },
    /// Print the anchor and identity behind a check name.
    Explain { name: String },
}

#[derive(Subcommand, Debug)]
enum ShuffleCmd {
    /// Shuffle product of two words (1-based letters).
    Eval {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Serre sums in the shuffle algebra.
    SerreCheck,
}

#[derive(Subcommand, Debug)]
enum TwistCmd {
    /// Twisted relations, cocycle identities and the twisted antipode.
    Check,
}

#[derive(Subcommand, Debug)]
enum ModuleCmd {
    /// Matrices of L(lambda).
    Build {
        #[arg(long)]
        highest: String,
    },
}

fn parse_ints(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Usage(format!("not an integer list: `{s}`"))))
        .collect()
}

fn parse_word(s: &str, rank: usize) -> Result<Word> {
    parse_ints(s)?
        .into_iter()
        .map(|l| {
            if l >= 1 && l as usize <= rank {
                Ok((l - 1) as u8)
            } else {
                Err(Error::Usage(format!("letter {l} outside 1..={rank}")))
            }
        })
        .collect()
}

fn json_word(w: &[u8]) -> Vec<u32> {
    w.iter().map(|&l| l as u32 + 1).collect()
}

fn json_terms(x: &FreeElem) -> serde_json::Value {
    x.iter().map(|(w, c)| serde_json::json!({ "word": json_word(w), "coeff": c.to_string() })).collect()
}

fn emit(out: &mut dyn Write, target: Option<&str>, text: &str) -> Result<()> {
    match target {
        None | Some("-") | Some("json") => writeln!(out, "{text}")?,
        Some(path) => std::fs::write(path, format!("{text}\n"))?,
    }
    Ok(())
}

fn to_file(target: Option<&str>) -> bool {
    !matches!(target, None | Some("-") | Some("json"))
}

fn config_from(common: &Common, suites: Vec<String>) -> Result<RunConfig> {
    let mut c = RunConfig::default();
    if let Some(t) = &common.type_name {
        c.type_name = t.clone();
    }
    c.datum = common.datum.clone();
    if !suites.is_empty() {
        c.suites = suites;
    }
    if let Some(d) = common.depth {
        c.depth = d;
    }
    if let Some(b) = common.backend {
        c.backend = b;
    }
    if let Some(s) = common.seed {
        c.seed = s;
    }
    c.out = common.out.clone();
    if let Some(path) = &common.config {
        c.apply_config(&std::fs::read_to_string(path)?)?;
    }
    Ok(c)
}

fn report_out(out: &mut dyn Write, err: &mut dyn Write, config: &RunConfig) -> Result<i32> {
    let rep = run_suite(config)?;
    let target = config.out.as_deref();
    emit(out, target, &rep.to_json())?;
    let summary = rep.human_summary();
    if to_file(target) {
        write!(out, "{summary}")?;
    } else {
        write!(err, "{summary}")?;
    }
    Ok(i32::from(rep.failed()))
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let suites = match &cli.cmd {
        Cmd::Check { suites } => suites.clone(),
        Cmd::Shuffle(ShuffleCmd::SerreCheck) => vec!["shuffle-serre".into()],
        Cmd::Twist(TwistCmd::Check) => vec!["twist".into()],
        _ => vec![],
    };
    let config = config_from(&cli.common, suites)?;
    let target = config.out.clone();
    let target = target.as_deref();
    match cli.cmd {
        Cmd::Check { .. } | Cmd::Shuffle(ShuffleCmd::SerreCheck) | Cmd::Twist(TwistCmd::Check) => {
            report_out(out, err, &config)
        }
        Cmd::Explain { name } => {
            write!(out, "{}", explain(&name)?)?;
            Ok(0)
        }
        Cmd::Shuffle(ShuffleCmd::Eval { left, right }) => {
            let datum = config.load_datum()?;
            let p = ParamMatrix::generic(&datum);
            let a = parse_word(&left, p.rank())?;
            let b = parse_word(&right, p.rank())?;
            let prod = Shuffler::new(&p).words(&a, &b);
            let j = serde_json::json!({
                "type": datum.label,
                "left": json_word(&a),
                "right": json_word(&b),
                "product": json_terms(&prod),
            });
            emit(out, target, &serde_json::to_string_pretty(&j)?)?;
            Ok(0)
        }
        Cmd::Gram { degree } => {
            let datum = config.load_datum()?;
            let p = ParamMatrix::generic(&datum);
            let beta = parse_ints(&degree)?;
            if beta.len() != p.rank() || beta.iter().any(|&b| b < 0) {
                return Err(Error::Usage(format!("degree needs {} nonnegative entries", p.rank())));
            }
            let height: i64 = beta.iter().sum();
            if height > i64::from(depth_limit("gram")) {
                return Err(Error::Usage(format!("height {height} exceeds the limit {}", depth_limit("gram"))));
            }
            let mut e = PairingEngine::new(&p);
            let g = e.gram(&beta)?;
            let d = e.dual_bases(&beta)?;
            let j = serde_json::json!({
                "type": datum.label,
                "degree": beta,
                "rows": g.rows.iter().map(|w| json_word(w)).collect::<Vec<_>>(),
                "cols": g.cols.iter().map(|w| json_word(w)).collect::<Vec<_>>(),
                "matrix": g.matrix.to_strings(),
                "rank": g.rank,
                "basis": d.basis.iter().map(|w| json_word(w)).collect::<Vec<_>>(),
                "dual": d.dual.iter().map(json_terms).collect::<Vec<_>>(),
            });
            emit(out, target, &serde_json::to_string_pretty(&j)?)?;
            Ok(0)
        }
        Cmd::Module(ModuleCmd::Build { highest }) => {
            let datum = config.load_datum()?;
            let p = ParamMatrix::generic(&datum);
            let m = build_module(&p, &parse_ints(&highest)?)?;
            emit(out, target, &serde_json::to_string_pretty(&m.to_json())?)?;
            Ok(0)
        }
        Cmd::Rmatrix { modules } => {
            let datum = config.load_datum()?;
            let p = ParamMatrix::generic(&datum);
            let a = build_module(&p, &parse_ints(&modules[0])?)?;
            let b = build_module(&p, &parse_ints(&modules[1])?)?;
            let rm = repmod::braiding(&a, &b)?;
            let o = repmod::braiding_intertwines(&a, &b)?;
            let j = serde_json::json!({
                "type": datum.label,
                "modules": [a.highest, b.highest],
                "dim": rm.rows(),
                "matrix": rm.to_strings(),
                "intertwines": o.ok,
                "witness": o.witness,
            });
            emit(out, target, &serde_json::to_string_pretty(&j)?)?;
            Ok(i32::from(!o.ok))
        }
        Cmd::Qybe { m } => {
            let datum = config.load_datum()?;
            let p = ParamMatrix::generic(&datum);
            let mods = m.iter().map(|s| build_module(&p, &parse_ints(s)?)).collect::<Result<Vec<_>>>()?;
            let rep = repmod::qybe_check(&mods[0], &mods[1], &mods[2], config.repmod_backend())?;
            let j = serde_json::json!({
                "type": datum.label,
                "modules": mods.iter().map(|x| x.highest.clone()).collect::<Vec<_>>(),
                "seed": config.seed,
                "report": rep,
            });
            emit(out, target, &serde_json::to_string_pretty(&j)?)?;
            Ok(i32::from(!rep.holds))
        }
    }
}

/// Parses `args` (program name first) and runs the command. Returns the
/// exit status: 0 on success, 1 if a check fails, 2 on usage or input
/// errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return 2;
            }
            let _ = write!(out, "{}", e.render());
            return 0;
        }
    };
    match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn explain_known_and_unknown() {
        assert!(explain("lemma16").unwrap().contains("Lemma 16"));
        assert!(explain("qybe").unwrap().contains("Corollary 68"));
        let e = explain("nosuch").unwrap_err().to_string();
        assert!(e.contains("lemma16") && e.contains("qybe"));
    }

    #[test]
    fn every_suite_name_is_catalogued() {
        for name in ["q-addition", "binomial-absorption", "binomial-triple-product", "q-pascal", "gauss-product"] {
            assert!(explain(name).is_ok());
        }
        for k in 1..=7 {
            assert!(explain(&format!("R*{k}")).is_ok());
        }
    }

    #[test]
    fn validation() {
        let mut c = RunConfig::default();
        assert!(c.validate().is_ok());
        c.suites = vec!["nope".into()];
        assert!(matches!(c.validate(), Err(Error::Usage(_))));
        c.suites = vec!["gram".into()];
        c.depth = 99;
        assert!(c.validate().unwrap_err().to_string().contains("refusing"));
        c.depth = 0;
        assert!(c.validate().is_err());
    }

    #[test]
    fn config_patch_overrides() {
        let mut c = RunConfig::default();
        c.apply_config(r#"{"type":"B2","depth":3,"backend":"exact","suites":["lemma16"]}"#).unwrap();
        assert_eq!(c.type_name, "B2");
        assert_eq!(c.depth, 3);
        assert_eq!(c.backend, BackendKind::Symbolic);
        assert!(c.apply_config(r#"{"depht":3}"#).is_err());
    }

    #[test]
    fn word_lists() {
        assert_eq!(words_up_to(2, 2).len(), 7);
        assert_eq!(parse_word("1,2", 2).unwrap(), vec![0, 1]);
        assert!(parse_word("3", 2).is_err());
        assert_eq!(degrees(2, 2).len(), 5);
    }

    #[test]
    fn weyl_dimensions() {
        let g2 = CartanDatum::standard("G2").unwrap();
        let dims: Vec<i64> = [[1, 0], [0, 1], [1, 1]].iter().map(|l| weyl_dim(&g2, l).unwrap().to_integer()).collect();
        let mut sorted = dims.clone();
        sorted.sort();
        assert_eq!(sorted, vec![7, 14, 64]);
    }
}
