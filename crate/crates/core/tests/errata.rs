//! Golden checks against the discrepancy file: every printed value must be
//! demonstrably wrong and every corrected value must agree with the library.

use num_bigint::BigInt;
use num_traits::Signed;
use toml::Value;

use twobridge::alexander::{alexander_3i_as_tabulated, alexander_family, determinant};
use twobridge::family::{Family, FamilyTag};
use twobridge::knot::parse_knot_spec;
use twobridge::paths::{enumerate_minimal_expansions, fibonacci, knot_slopes};
use twobridge::{farey_edge_det, mediant, ContinuedFraction, Rational, SlopeMultiset};

const DATA: &str = include_str!("../data/known_discrepancies.toml");

fn data() -> toml::Table {
    DATA.parse().expect("discrepancy file parses")
}

fn str_of<'a>(v: &'a Value, key: &str) -> &'a str {
    v.get(key)
        .and_then(Value::as_str)
        .unwrap_or_else(|| panic!("missing {key}"))
}

fn rationals(v: &Value, key: &str) -> Vec<Rational> {
    v.get(key)
        .and_then(Value::as_array)
        .unwrap_or_else(|| panic!("missing {key}"))
        .iter()
        .map(|s| s.as_str().unwrap().parse().unwrap())
        .collect()
}

fn is_farey_path(vs: &[Rational]) -> bool {
    vs.windows(2)
        .all(|w| farey_edge_det(&w[0], &w[1]).abs() == BigInt::from(1))
}

fn paths_of(knot: &str) -> Vec<twobridge::MinimalPath> {
    let k = parse_knot_spec(knot).unwrap();
    enumerate_minimal_expansions(&k, k.p()).unwrap()
}

#[test]
fn table_expansions() {
    let d = data();
    for row in d["table_cf"].as_array().unwrap() {
        let knot: Rational = str_of(row, "knot").parse().unwrap();
        let printed: ContinuedFraction = str_of(row, "printed").parse().unwrap();
        let corrected: ContinuedFraction = str_of(row, "corrected").parse().unwrap();
        assert_ne!(printed.eval(), knot, "{}", str_of(row, "id"));
        assert_eq!(corrected.eval(), knot);
        let paths = paths_of(str_of(row, "knot"));
        assert!(paths.iter().any(|p| p.expansion == corrected));
        assert!(paths.iter().all(|p| p.expansion != printed));
    }
}

#[test]
fn table_paths() {
    let d = data();
    for row in d["table_path"].as_array().unwrap() {
        let printed = rationals(row, "printed");
        let corrected = rationals(row, "corrected");
        let m = row["m"].as_integer().unwrap();
        assert!(!is_farey_path(&printed), "{}", str_of(row, "id"));
        assert!(is_farey_path(&corrected));
        let paths = paths_of(str_of(row, "knot"));
        let hit = paths
            .iter()
            .find(|p| p.vertices == corrected)
            .expect("corrected path enumerated");
        assert_eq!(hit.unadjusted_slope, m);
        assert!(paths.iter().all(|p| p.vertices != printed));
    }
}

#[test]
fn mediant_formula() {
    let e = &data()["mediant"];
    assert_eq!(str_of(e, "corrected"), "(a+c)/(b+d)");
    // a/b = 1/2, c/d = 1/3: the printed rule gives 2/3, the mediant is 2/5
    let (ab, cd) = (Rational::new(1, 2).unwrap(), Rational::new(1, 3).unwrap());
    let printed = Rational::new(2, 2 + 1).unwrap();
    let m = mediant(&ab, &cd);
    assert_eq!(m, Rational::new(2, 5).unwrap());
    for x in [&ab, &cd] {
        assert_eq!(farey_edge_det(x, &m).abs(), BigInt::from(1));
    }
    assert_ne!(farey_edge_det(&cd, &printed).abs(), BigInt::from(1));
}

fn tag(family: Family, params: Vec<i64>, expansion: &[i64]) -> FamilyTag {
    FamilyTag {
        family,
        params,
        chirality_sign: 1,
        expansion: ContinuedFraction::from_i64(0, expansion),
        representative: BigInt::from(0),
        predicted_slopes: SlopeMultiset::default(),
    }
}

#[test]
fn alexander_3i() {
    let e = &data()["alexander_3i"];
    for s in e["samples"].as_array().unwrap() {
        let (a1, a2) = (s[0].as_integer().unwrap(), s[1].as_integer().unwrap());
        let q = BigInt::from(a1 * a2 + 1);
        assert_eq!(
            determinant(&alexander_3i_as_tabulated(a1, a2)),
            BigInt::from(1)
        );
        let fixed = alexander_family(&tag(Family::T3i, vec![a1, a2], &[a1, a2])).unwrap();
        assert_eq!(determinant(&fixed), q, "({a1}, {a2})");
    }
}

#[test]
fn alexander_3iii() {
    let e = &data()["alexander_3iii"];
    for s in e["samples"].as_array().unwrap() {
        let a1 = s.as_integer().unwrap();
        let poly = alexander_family(&tag(Family::T3iii, vec![a1], &[a1, 1, a1])).unwrap();
        let det = determinant(&poly);
        let printed = ContinuedFraction::from_i64(0, &[a1, -1, a1]).eval();
        let corrected = ContinuedFraction::from_i64(0, &[a1, 1, a1]).eval();
        assert_ne!(printed.denom(), &det, "a1 = {a1}");
        assert_eq!(corrected.denom(), &det, "a1 = {a1}");
    }
}

#[test]
fn fibonacci_index() {
    let e = &data()["fibonacci_bound"];
    let k = parse_knot_spec(str_of(e, "witness")).unwrap();
    let m = e["witness_length"].as_integer().unwrap() as u32;
    let distinct = e["witness_distinct"].as_integer().unwrap() as u64;
    assert_eq!(knot_slopes(&k).distinct_count() as u64, distinct);
    // printed convention f(0) = 0, f(1) = 1 coincides with `fibonacci`
    assert!(fibonacci(m + 1) < distinct);
    assert!(fibonacci(m + 2) >= distinct);
}
