use mpqg_demo::{a1_rmatrix, gram_block, qbinomial_rows};
use serde_json::Value;

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn binomial_rows() {
    let j = parse(&qbinomial_rows(4).unwrap());
    let rows = j["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[4][0], "1");
    assert_eq!(rows[4][4], "1");
    // [2,1]_v = 1 + v
    let mid = rows[2][1].as_str().unwrap();
    assert!(mid.contains('v'), "{mid}");
    assert!(qbinomial_rows(40).is_err());
}

#[test]
fn gram_rank() {
    let j = parse(&gram_block("A2", "1,1").unwrap());
    assert_eq!(j["rank"], 2);
    assert_eq!(j["rows"].as_array().unwrap().len(), 2);
    let j = parse(&gram_block("A2", "2,1").unwrap());
    assert_eq!(j["rank"], 2);
    assert!(gram_block("A2", "1").is_err());
    assert!(gram_block("Q7", "1,1").is_err());
}

#[test]
fn braiding_at_a_point() {
    // L(1) ⊗ L(1), v = 4: R(v⊗v) = q_{λλ}^{-1} v⊗v with q_{λλ} = v^{1/2} = 2
    let j = parse(&a1_rmatrix(1, 1, "2").unwrap());
    assert_eq!(j["dim"], 4);
    assert_eq!(j["matrix"][0][0], "1/2");
    assert!(a1_rmatrix(1, 1, "0").is_err());
    assert!(a1_rmatrix(9, 1, "2").is_err());
    assert!(a1_rmatrix(1, 1, "x").is_err());
}
