//! Report emitters: JSON, plain text, and Macaulay2-style Betti tallies.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use codedim_core::{BettiTable, DimensionReport, VertexSet, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
    M2,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntryJson {
    pub i: usize,
    pub sigma: String,
    pub beta: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTableJson {
    pub field: u32,
    pub n: usize,
    pub level_ranks: Vec<usize>,
    pub entries: Vec<BettiEntryJson>,
}

impl From<&BettiTable> for BettiTableJson {
    fn from(t: &BettiTable) -> Self {
        Self {
            field: t.field().characteristic(),
            n: t.n(),
            level_ranks: t.level_ranks(),
            entries: t
                .entries()
                .map(|(k, beta)| BettiEntryJson {
                    i: k.step,
                    sigma: k.sigma.to_binary_string(),
                    beta,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub i: usize,
    pub sigma: String,
}

impl From<Witness> for WitnessJson {
    fn from(w: Witness) -> Self {
        Self {
            i: w.step,
            sigma: w.sigma.to_binary_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeWitnessJson {
    pub degree: isize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessesJson {
    #[serde(rename = "d_L")]
    pub leray: Option<WitnessJson>,
    #[serde(rename = "d_H")]
    pub helly: Option<WitnessJson>,
    #[serde(rename = "d_hom_betti")]
    pub hom_betti: Option<WitnessJson>,
    #[serde(rename = "d_hom_unreduced")]
    pub hom_unreduced: Option<DegreeWitnessJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub field: u32,
    pub n: usize,
    #[serde(rename = "d_L")]
    pub leray: usize,
    #[serde(rename = "d_H")]
    pub helly: usize,
    #[serde(rename = "d_hom_betti")]
    pub hom_betti: usize,
    #[serde(rename = "d_hom_unreduced")]
    pub hom_unreduced: usize,
    pub witnesses: WitnessesJson,
    pub helly_oracle_agrees: bool,
    pub leray_oracle_agrees: bool,
}

impl From<&DimensionReport> for ReportJson {
    fn from(r: &DimensionReport) -> Self {
        Self {
            field: r.field.characteristic(),
            n: r.n,
            leray: r.leray,
            helly: r.helly,
            hom_betti: r.hom_betti,
            hom_unreduced: r.hom_unreduced,
            witnesses: WitnessesJson {
                leray: r.leray_witness.map(Into::into),
                helly: r.helly_witness.map(Into::into),
                hom_betti: r.hom_betti_witness.map(Into::into),
                hom_unreduced: r
                    .hom_unreduced_degree
                    .map(|degree| DegreeWitnessJson { degree }),
            },
            helly_oracle_agrees: r.helly_oracle_agrees,
            leray_oracle_agrees: r.leray_oracle_agrees,
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types always serialize");
    s.push('\n');
    s
}

fn m2_degree(sigma: VertexSet) -> String {
    let digits: Vec<&str> = (1..=sigma.ambient())
        .map(|v| if sigma.contains(v) { "1" } else { "0" })
        .collect();
    format!("{{{}}}", digits.join(", "))
}

/// `BettiTally{(i, {b1, …, bn}, |σ|) => β …}`, one entry per line, sorted by
/// `(i, |σ|, bit pattern)`.
pub fn betti_m2(table: &BettiTable) -> String {
    const HEAD: &str = "BettiTally{";
    let mut out = String::from(HEAD);
    let count = table.len();
    for (idx, (key, beta)) in table.entries().enumerate() {
        if idx > 0 {
            out.push_str(&" ".repeat(HEAD.len()));
        }
        write!(
            out,
            "({}, {}, {}) => {}",
            key.step,
            m2_degree(key.sigma),
            key.sigma.cardinality(),
            beta
        )
        .unwrap();
        if idx + 1 == count {
            out.push('}');
        }
        out.push('\n');
    }
    if count == 0 {
        out.push_str("}\n");
    }
    out
}

pub fn betti_text(table: &BettiTable) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "Betti table of S/I over GF({}), n = {}",
        table.field().characteristic(),
        table.n()
    )
    .unwrap();
    writeln!(
        out,
        "{:>4}  {:>5}  {:<w$}  {:>5}  {:>3}",
        "i",
        "|s|",
        "sigma",
        "beta",
        "R",
        w = table.n().max(5)
    )
    .unwrap();
    for (key, beta) in table.entries() {
        let r = key.sigma.cardinality().saturating_sub(key.step);
        writeln!(
            out,
            "{:>4}  {:>5}  {:<w$}  {:>5}  {:>3}",
            key.step,
            key.sigma.cardinality(),
            key.sigma.to_binary_string(),
            beta,
            r,
            w = table.n().max(5)
        )
        .unwrap();
    }
    let ranks: Vec<String> = table
        .level_ranks()
        .iter()
        .map(ToString::to_string)
        .collect();
    writeln!(out, "level ranks: {}", ranks.join(" ")).unwrap();
    out
}

fn witness_text(w: Option<Witness>) -> String {
    match w {
        Some(w) => format!("witness (i={}, sigma={})", w.step, w.sigma),
        None => "empty maximum".into(),
    }
}

pub fn report_text(r: &DimensionReport) -> String {
    let mut out = String::new();
    writeln!(out, "field GF({}), n = {}", r.field.characteristic(), r.n).unwrap();
    writeln!(
        out,
        "d_L             = {}  {}",
        r.leray,
        witness_text(r.leray_witness)
    )
    .unwrap();
    writeln!(
        out,
        "d_H             = {}  {}",
        r.helly,
        witness_text(r.helly_witness)
    )
    .unwrap();
    writeln!(
        out,
        "d_hom (reduced) = {}  {}",
        r.hom_betti,
        witness_text(r.hom_betti_witness)
    )
    .unwrap();
    let degree = match r.hom_unreduced_degree {
        Some(k) => format!("top degree {k}"),
        None => "no homology".into(),
    };
    writeln!(out, "d_hom (ordinary)= {}  {}", r.hom_unreduced, degree).unwrap();
    writeln!(
        out,
        "oracles: Helly {}, Leray {}",
        if r.helly_oracle_agrees {
            "agree"
        } else {
            "DISAGREE"
        },
        if r.leray_oracle_agrees {
            "agree"
        } else {
            "DISAGREE"
        }
    )
    .unwrap();
    out
}

/// Dimension report for `--format m2`: the Betti tally followed by the bounds
/// as Macaulay2 comments.
pub fn report_m2(r: &DimensionReport, table: &BettiTable) -> String {
    let mut out = betti_m2(table);
    writeln!(out, "-- d_L = {}", r.leray).unwrap();
    writeln!(out, "-- d_H = {}", r.helly).unwrap();
    writeln!(out, "-- d_hom (reduced) = {}", r.hom_betti).unwrap();
    writeln!(out, "-- d_hom (ordinary) = {}", r.hom_unreduced).unwrap();
    out
}
