//! Brute-force Farey-graph search, independent of the continued-fraction
//! machinery in the library.

use std::collections::{BTreeSet, VecDeque};

use num_traits::ToPrimitive;
use twobridge::{enumerate_minimal_expansions, TwoBridgeKnot};

/// A vertex `a/b` in lowest terms with `b >= 0`; `(1, 0)` is `1/0`.
pub type Vertex = (i64, i64);

fn det(u: Vertex, v: Vertex) -> i64 {
    u.0 * v.1 - v.0 * u.1
}

fn adjacent(u: Vertex, v: Vertex) -> bool {
    det(u, v).abs() == 1
}

/// Farey neighbours of `a/b` with smaller denominator, found by trying every
/// denominator `d < b` and solving `ad - bc = ±1` for `c`.
fn lower_neighbours((a, b): Vertex) -> Vec<Vertex> {
    let mut out = BTreeSet::new();
    for d in 0..b {
        for s in [1, -1] {
            let num = a * d - s;
            if num % b == 0 {
                let c = num / b;
                out.insert(if d == 0 { (1, 0) } else { (c, d) });
            }
        }
    }
    out.into_iter().collect()
}

/// Every path `1/0 -> ... -> p/q` that never backtracks and never uses two
/// edges of one triangle. Along such a path denominators strictly increase,
/// so a breadth-first search backwards through smaller denominators finds
/// them all.
pub fn farey_paths(p: i64, q: i64) -> BTreeSet<Vec<Vertex>> {
    let mut found = BTreeSet::new();
    let mut queue = VecDeque::from([vec![(p, q)]]);
    while let Some(suffix) = queue.pop_front() {
        let v = suffix[0];
        if v == (1, 0) {
            found.insert(suffix);
            continue;
        }
        for u in lower_neighbours(v) {
            // (u, v, w) must not span a triangle
            if suffix.len() > 1 && adjacent(u, suffix[1]) {
                continue;
            }
            let mut next = Vec::with_capacity(suffix.len() + 1);
            next.push(u);
            next.extend_from_slice(&suffix);
            queue.push_back(next);
        }
    }
    found
}

/// The library's enumeration, as vertex lists.
pub fn library_paths(p: i64, q: i64) -> BTreeSet<Vec<Vertex>> {
    let k = TwoBridgeKnot::from_i64(p, q).unwrap();
    enumerate_minimal_expansions(&k, k.p())
        .unwrap()
        .into_iter()
        .map(|path| {
            path.vertices
                .iter()
                .map(|r| (r.numer().to_i64().unwrap(), r.denom().to_i64().unwrap()))
                .collect()
        })
        .collect()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Fractions `p/q` on which the two enumerations disagree, over every odd
/// `3 <= q <= q_max` and every `0 < p < q` coprime to it.
pub fn enumeration_mismatches(q_max: i64) -> (usize, Vec<String>) {
    let mut checked = 0;
    let mut bad = Vec::new();
    for q in (3..=q_max).step_by(2) {
        for p in 1..q {
            if gcd(p, q) != 1 {
                continue;
            }
            checked += 1;
            if farey_paths(p, q) != library_paths(p, q) {
                bad.push(format!("{p}/{q}"));
            }
        }
    }
    (checked, bad)
}
