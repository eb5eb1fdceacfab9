//! Report records for the command line, rendered as JSON, CSV or text.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::census::CensusReport;
use crate::error::{Error, Result};
use crate::family::{classify_family, corollary_arithmetic, FamilyTag};
use crate::knot::TwoBridgeKnot;
use crate::order::{MinimalityReport, OrderVerdict, Verdict};
use crate::ors::{ors_strongly_positive, theorem42_check, Dichotomy, OrsPair, OrsWord};
use crate::paths::{boundary_slopes, enumerate_minimal_expansions, even_expansion, SlopeMultiset};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            _ => Err(Error::Parse(format!("unknown format {s:?}"))),
        }
    }
}

pub trait Render: Serialize {
    fn csv_rows(&self) -> (Vec<&'static str>, Vec<Vec<String>>);
    fn text(&self) -> String;

    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("serializable");
                s.push('\n');
                s
            }
            Format::Csv => {
                let (header, rows) = self.csv_rows();
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&header).expect("in-memory write");
                for r in rows {
                    w.write_record(&r).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
            }
            Format::Text => self.text(),
        }
    }
}

fn slopes_string(s: &SlopeMultiset) -> String {
    s.entries()
        .iter()
        .map(|(v, c)| {
            if *c == 1 {
                v.to_string()
            } else {
                format!("{v}(x{c})")
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Debug, Clone, Serialize)]
pub struct PathRow {
    pub cf: String,
    pub vertices: Vec<String>,
    pub m: i64,
    pub slope: i64,
}

/// Minimal paths and slopes of one representative.
#[derive(Debug, Clone, Serialize)]
pub struct SlopeReport {
    pub p: String,
    pub q: String,
    pub canonical_p: String,
    pub paths: Vec<PathRow>,
    pub slopes: BTreeMap<String, u64>,
    pub distinct: usize,
    pub diameter: i64,
    pub crossing_number: i64,
    #[serde(skip)]
    multiset: SlopeMultiset,
}

impl SlopeReport {
    /// Paths are listed by decreasing `m`, ties in lexicographic order of
    /// their expansions.
    pub fn new(knot: &TwoBridgeKnot) -> Result<Self> {
        let rep = knot.p();
        let mut paths = enumerate_minimal_expansions(knot, rep)?;
        let m_even = even_expansion(knot, rep)?.unadjusted_slope;
        paths.sort_by_key(|p| std::cmp::Reverse(p.unadjusted_slope));
        let multiset = boundary_slopes(knot, rep)?;
        Ok(Self {
            p: rep.to_string(),
            q: knot.q().to_string(),
            canonical_p: knot.canonical_p().to_string(),
            paths: paths
                .iter()
                .map(|p| PathRow {
                    cf: p.expansion.to_string(),
                    vertices: p.vertices.iter().map(|v| v.to_string()).collect(),
                    m: p.unadjusted_slope,
                    slope: -2 * (p.unadjusted_slope - m_even),
                })
                .collect(),
            slopes: multiset
                .entries()
                .iter()
                .map(|(s, c)| (s.to_string(), *c))
                .collect(),
            distinct: multiset.distinct_count(),
            diameter: multiset.diameter(),
            crossing_number: multiset.crossing_number(),
            multiset,
        })
    }

    pub fn multiset(&self) -> &SlopeMultiset {
        &self.multiset
    }
}

impl Render for SlopeReport {
    fn csv_rows(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let rows = self
            .paths
            .iter()
            .map(|r| {
                vec![
                    r.cf.clone(),
                    r.vertices.join(" "),
                    r.m.to_string(),
                    r.slope.to_string(),
                ]
            })
            .collect();
        (vec!["cf", "vertices", "m", "slope"], rows)
    }

    fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "K_{}/{} (canonical {}/{})",
            self.p, self.q, self.canonical_p, self.q
        );
        let width = self
            .paths
            .iter()
            .map(|r| r.vertices.join(" ").len())
            .max()
            .unwrap_or(4)
            .max(4);
        let cfw = self
            .paths
            .iter()
            .map(|r| r.cf.len())
            .max()
            .unwrap_or(2)
            .max(2);
        let _ = writeln!(
            s,
            "{:<width$}  {:<cfw$}  {:>4}  {:>5}",
            "path", "cf", "m", "slope"
        );
        for r in &self.paths {
            let _ = writeln!(
                s,
                "{:<width$}  {:<cfw$}  {:>4}  {:>5}",
                r.vertices.join(" "),
                r.cf,
                r.m,
                r.slope
            );
        }
        let _ = writeln!(
            s,
            "slopes: {}\ndistinct {}, diameter {}, crossing number {}",
            slopes_string(&self.multiset),
            self.distinct,
            self.diameter,
            self.crossing_number
        );
        s
    }
}

/// Table row (if any) and arithmetic tier of a knot.
#[derive(Debug, Clone, Serialize)]
pub struct ClassifyReport {
    pub knot: String,
    #[serde(flatten)]
    pub tag: Option<FamilyTag>,
    pub tier: Option<u8>,
}

impl ClassifyReport {
    pub fn new(knot: &TwoBridgeKnot) -> Self {
        Self {
            knot: format!("{}/{}", knot.p(), knot.q()),
            tag: classify_family(knot),
            tier: corollary_arithmetic(knot).tier,
        }
    }
}

impl Render for ClassifyReport {
    fn csv_rows(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let row = match &self.tag {
            Some(t) => vec![
                self.knot.clone(),
                t.family.label().to_string(),
                format!("{:?}", t.params),
                t.chirality_sign.to_string(),
                slopes_string(&t.predicted_slopes),
            ],
            None => vec![
                self.knot.clone(),
                "5+".into(),
                String::new(),
                String::new(),
                String::new(),
            ],
        };
        (
            vec!["knot", "family", "params", "chirality", "predicted_slopes"],
            vec![row],
        )
    }

    fn text(&self) -> String {
        match &self.tag {
            Some(t) => format!(
                "K_{}: family {} with parameters {:?}, chirality {:+}, predicted slopes {}\n",
                self.knot,
                t.family,
                t.params,
                t.chirality_sign,
                slopes_string(&t.predicted_slopes)
            ),
            None => format!(
                "K_{}: no table row, at least five distinct slopes\n",
                self.knot
            ),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OrsReport {
    pub seed: Vec<i64>,
    pub word: OrsWord,
    pub raw: String,
    pub reduced: String,
    pub strongly_positive: String,
    pub child: String,
    pub parent: String,
    pub dichotomy: &'static str,
    pub distinct: usize,
}

impl OrsReport {
    pub fn new(pair: &OrsPair) -> Result<Self> {
        let branch = theorem42_check(pair)?;
        let distinct = match branch {
            Dichotomy::TorusCase => 2,
            Dichotomy::AtLeastFive(n) => n,
        };
        Ok(Self {
            seed: pair
                .seed
                .quotients
                .iter()
                .map(|b| {
                    b.to_i64()
                        .ok_or_else(|| Error::Domain(format!("seed entry {b} too large")))
                })
                .collect::<Result<_>>()?,
            word: pair.word.clone(),
            raw: pair.raw.quotients_string(),
            reduced: pair.reduced.quotients_string(),
            strongly_positive: ors_strongly_positive(&pair.reduced)?.quotients_string(),
            child: format!("{}/{}", pair.child.p(), pair.child.q()),
            parent: format!("{}/{}", pair.parent.p(), pair.parent.q()),
            dichotomy: branch.label(),
            distinct,
        })
    }
}

impl Render for OrsReport {
    fn csv_rows(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let row = vec![
            format!("{:?}", self.seed).replace(' ', ""),
            self.word.to_string(),
            self.raw.clone(),
            self.reduced.clone(),
            self.strongly_positive.clone(),
            self.child.clone(),
            self.parent.clone(),
            self.dichotomy.to_string(),
            self.distinct.to_string(),
        ];
        (
            vec![
                "seed",
                "word",
                "raw",
                "reduced",
                "strongly_positive",
                "child",
                "parent",
                "dichotomy",
                "distinct",
            ],
            vec![row],
        )
    }

    fn text(&self) -> String {
        format!(
            "seed [{}], word {}\nraw {}\nreduced {}\nstrongly positive {}\nchild {} over parent {}\n{} ({} distinct slopes)\n",
            self.seed.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(","),
            self.word,
            self.raw,
            self.reduced,
            self.strongly_positive,
            self.child,
            self.parent,
            self.dichotomy,
            self.distinct
        )
    }
}

fn verdict_row(v: &OrderVerdict) -> Vec<String> {
    let (verdict, failing) = match &v.verdict {
        Verdict::Survives(_) => ("survives", String::new()),
        Verdict::Excluded(c) => ("excluded", c.label().to_string()),
    };
    vec![
        format!("{}/{}", v.k1.p(), v.k1.q()),
        format!("{}/{}", v.k2.p(), v.k2.q()),
        verdict.to_string(),
        failing,
        v.witness_d
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(" "),
    ]
}

const VERDICT_HEADER: [&str; 5] = ["k1", "k2", "verdict", "failing_check", "witness_d"];

fn verdict_text(v: &OrderVerdict) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} over {}:", v.k1, v.k2);
    for c in &v.checks {
        let _ = writeln!(
            s,
            "  {:<12} {}  {}",
            c.check.label(),
            if c.passed { "pass" } else { "FAIL" },
            c.detail
        );
    }
    let _ = match &v.verdict {
        Verdict::Survives(d) => writeln!(s, "  survives every check, odd witnesses d = {d:?}"),
        Verdict::Excluded(c) => writeln!(s, "  excluded by the {c} check"),
    };
    s
}

impl Render for OrderVerdict {
    fn csv_rows(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        (VERDICT_HEADER.to_vec(), vec![verdict_row(self)])
    }

    fn text(&self) -> String {
        verdict_text(self)
    }
}

impl Render for MinimalityReport {
    fn csv_rows(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let mut header = VERDICT_HEADER.to_vec();
        header.push("case");
        let rows = self
            .candidates
            .iter()
            .map(|c| {
                let mut r = verdict_row(&c.verdict);
                r.push(c.case.clone().unwrap_or_default());
                r
            })
            .collect();
        (header, rows)
    }

    fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "{}: {} distinct slopes, {} candidate quotients, {} survivors",
            self.knot,
            self.distinct_slopes,
            self.candidates.len(),
            self.survivors.len()
        );
        for c in &self.candidates {
            let r = verdict_row(&c.verdict);
            let _ = writeln!(
                s,
                "  {:<10} {:<9} {:<12} {}{}",
                r[1],
                r[2],
                r[3],
                r[4],
                c.case
                    .as_deref()
                    .map(|x| format!("  {x}"))
                    .unwrap_or_default()
            );
        }
        s
    }
}

impl Render for CensusReport {
    fn csv_rows(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let mut rows = Vec::new();
        for c in &self.checks {
            rows.push(vec![
                c.check.label().to_string(),
                "summary".into(),
                c.cases.to_string(),
                c.anomalies.len().to_string(),
                String::new(),
                c.claim.to_string(),
            ]);
            for a in &c.anomalies {
                rows.push(vec![
                    a.check.label().to_string(),
                    "anomaly".into(),
                    String::new(),
                    String::new(),
                    a.subject.clone(),
                    a.detail.clone(),
                ]);
            }
        }
        (
            vec!["check", "row", "cases", "anomalies", "subject", "detail"],
            rows,
        )
    }

    fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "census q <= {}, seed {}", self.q_max, self.seed);
        for c in &self.checks {
            let status = if c.anomalies.is_empty() {
                "ok"
            } else {
                "ANOMALY"
            };
            let _ = writeln!(
                s,
                "{:<11} {:<7} {:>8} cases  {} anomalies",
                c.check.label(),
                status,
                c.cases,
                c.anomalies.len()
            );
            for a in &c.anomalies {
                let _ = writeln!(
                    s,
                    "    {}: {}\n      claim: {}",
                    a.subject, a.detail, a.claim
                );
            }
        }
        let _ = writeln!(s, "total anomalies: {}", self.anomaly_count());
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_one_order() {
        let r = SlopeReport::new(&TwoBridgeKnot::from_i64(7, 17).unwrap()).unwrap();
        let ms: Vec<i64> = r.paths.iter().map(|p| p.m).collect();
        let slopes: Vec<i64> = r.paths.iter().map(|p| p.slope).collect();
        assert_eq!(ms, [4, 2, 1, -1, -3]);
        assert_eq!(slopes, [0, 4, 6, 10, 14]);
        assert_eq!(
            r.paths[0].vertices,
            ["1/0", "1/1", "1/2", "3/7", "5/12", "7/17"]
        );
        assert_eq!(r.paths[0].cf, "1+[-2,4,-2,2]");
        assert_eq!(r.paths[3].cf, "0+[2,2,3]");
        let json: serde_json::Value = serde_json::from_str(&r.render(Format::Json)).unwrap();
        assert_eq!(json["canonical_p"], "5");
        assert_eq!(json["slopes"]["14"], 1);
        assert_eq!(json["crossing_number"], 7);
        let csv = r.render(Format::Csv);
        assert_eq!(csv.lines().count(), 6);
        assert!(r
            .render(Format::Text)
            .contains("distinct 5, diameter 14, crossing number 7"));
    }

    #[test]
    fn classify_json() {
        let r = ClassifyReport::new(&TwoBridgeKnot::from_i64(3, 7).unwrap());
        let json: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(json["family"], "3_ii");
        assert_eq!(json["params"], serde_json::json!([2, 3]));
        let r = ClassifyReport::new(&TwoBridgeKnot::from_i64(7, 17).unwrap());
        assert!(serde_json::to_value(&r).unwrap().get("family").is_none());
    }

    #[test]
    fn ors_json_shape() {
        let seed = crate::ors::parse_seed("[3]").unwrap();
        let pair = crate::ors::ors_apply(&seed, &"0:-,1:-".parse().unwrap()).unwrap();
        let json = serde_json::to_value(OrsReport::new(&pair).unwrap()).unwrap();
        assert_eq!(json["seed"], serde_json::json!([3]));
        assert_eq!(json["word"], serde_json::json!([[0, -1], [1, -1]]));
        assert_eq!(json["raw"], "[3,0,3,2,3]");
        assert_eq!(json["reduced"], "[6,2,3]");
        assert_eq!(json["child"], "7/45");
        assert_eq!(json["parent"], "1/3");
        assert_eq!(json["dichotomy"], "at_least_five");
        assert_eq!(json["distinct"], 5);
    }
}
