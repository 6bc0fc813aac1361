//! Serializable report rows shared by the text, JSON and CSV renderers.

use serde::Serialize;

use lie_index_core::principal::{self, IndexReport, Sl2Decomposition};
use lie_index_core::rational::to_string as q;
use lie_index_core::verify::tabulated_principal_index;
use lie_index_core::{CheckResult, Outcome, RootSystem};

#[derive(Debug, Serialize)]
pub struct IndexJson {
    pub closed: String,
    pub heights: String,
    pub exponents: String,
    pub agree: bool,
}

impl From<&IndexReport> for IndexJson {
    fn from(r: &IndexReport) -> Self {
        IndexJson {
            closed: q(&r.closed_form),
            heights: q(&r.via_heights),
            exponents: q(&r.via_exponents),
            agree: r.agree,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CheckJson {
    pub identity: String,
    #[serde(rename = "type")]
    pub simple_type: String,
    pub weight: Option<Vec<i64>>,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
    pub status: &'static str,
    pub note: Option<String>,
}

impl From<&CheckResult> for CheckJson {
    fn from(r: &CheckResult) -> Self {
        CheckJson {
            identity: r.identity.to_string(),
            simple_type: r.simple_type.to_string(),
            weight: r.weight.clone(),
            lhs: r.lhs.as_ref().map(q),
            rhs: r.rhs.as_ref().map(q),
            status: status(r),
            note: r.note.clone(),
        }
    }
}

pub fn status(r: &CheckResult) -> &'static str {
    match r.outcome() {
        Outcome::Passed => "pass",
        Outcome::Failed => "fail",
        Outcome::Skipped => "skip",
    }
}

#[derive(Debug, Serialize)]
pub struct RepresentationJson {
    pub weight: Vec<i64>,
    pub dim: String,
    pub dynkin_index: String,
    pub ave_index: String,
    pub principal_dynkin_index: String,
    pub sl2_decomposition: Vec<(u64, u64)>,
}

/// One simple type: structure constants, principal index and any checks.
#[derive(Debug, Serialize)]
pub struct TypeReport {
    #[serde(rename = "type")]
    pub simple_type: String,
    pub rank: usize,
    pub dim: i64,
    pub positive_roots: usize,
    pub coxeter: i64,
    pub dual_coxeter: i64,
    pub dual_coxeter_of_dual: i64,
    pub r: i64,
    pub exponents: Vec<i64>,
    pub theta_height: i64,
    pub theta_s_height: i64,
    pub index: IndexJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub representation: Option<RepresentationJson>,
    pub checks: Vec<CheckJson>,
}

impl TypeReport {
    pub fn new(rs: &RootSystem) -> Self {
        let (h, h_star, h_star_dual) = rs.coxeter_data();
        TypeReport {
            simple_type: rs.simple_type().to_string(),
            rank: rs.rank(),
            dim: rs.dim(),
            positive_roots: rs.positive_roots().len(),
            coxeter: h,
            dual_coxeter: h_star,
            dual_coxeter_of_dual: h_star_dual,
            r: rs.r(),
            exponents: rs.exponents().to_vec(),
            theta_height: rs.theta().height(),
            theta_s_height: rs.theta_s().height(),
            index: IndexJson::from(&IndexReport::compute(rs)),
            representation: None,
            checks: Vec::new(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct TableRow {
    #[serde(rename = "type")]
    pub simple_type: String,
    pub tabulated: String,
    pub closed: String,
    pub heights: String,
    pub exponents: String,
    pub agree: bool,
}

impl TableRow {
    pub fn new(rs: &RootSystem) -> Self {
        let report = IndexReport::compute(rs);
        let tabulated = tabulated_principal_index(rs.simple_type());
        TableRow {
            simple_type: rs.simple_type().to_string(),
            agree: report.agree && report.closed_form == tabulated,
            tabulated: q(&tabulated),
            closed: q(&report.closed_form),
            heights: q(&report.via_heights),
            exponents: q(&report.via_exponents),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

pub fn format_decomposition(d: &Sl2Decomposition) -> String {
    d.parts()
        .iter()
        .map(|&(deg, n)| {
            if n == 1 {
                format!("R{deg}")
            } else {
                format!("{n}·R{deg}")
            }
        })
        .collect::<Vec<_>>()
        .join(" ⊕ ")
}

pub fn join_ints(v: &[i64], sep: &str) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(sep)
}

/// Recomputes the principal index with its internal cross-check.
pub fn checked_index(rs: &RootSystem) -> lie_index_core::Result<IndexReport> {
    principal::principal_index(rs)
}
