use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::theorem::{TheoremId, TheoremParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_pass(pass: bool) -> Self {
        if pass {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn is_pass(self) -> bool {
        self == Verdict::Pass
    }
}

/// Largest left-hand side found at one `(radius fraction, angle)` cell.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridPoint {
    pub fraction: f64,
    pub r: f64,
    pub theta: f64,
    pub lhs: f64,
}

/// Location and value of the largest left-hand side of a run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub r: f64,
    pub a: f64,
    pub lhs: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: TheoremId,
    pub params: TheoremParams,
    pub radius: f64,
    #[serde(skip)]
    pub grid: Vec<GridPoint>,
    pub max_lhs: f64,
    pub margin: f64,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is plain data")
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let p = &self.params;
        let _ = writeln!(out, "## {} report\n", self.theorem);
        let _ = writeln!(out, "| field | value |");
        let _ = writeln!(out, "|---|---|");
        let _ = writeln!(
            out,
            "| params | k={} m={} p={} q={} s={} t={} lambda={}{} |",
            p.k,
            p.m,
            p.p,
            p.q,
            p.s,
            p.t,
            p.lambda,
            p.a.map(|a| format!(" a={a}")).unwrap_or_default()
        );
        let _ = writeln!(out, "| radius | {:.6} |", self.radius);
        let _ = writeln!(out, "| max_lhs | {:.12} |", self.max_lhs);
        let _ = writeln!(out, "| margin | {:.3e} |", self.margin);
        let _ = writeln!(out, "| verdict | {:?} |", self.verdict);
        if let Some(w) = &self.witness {
            let _ = writeln!(out, "| witness | r={:.6} a={:.6} lhs={:.12} |", w.r, w.a, w.lhs);
        }
        out
    }
}
