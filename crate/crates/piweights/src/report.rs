//! Verification report: one entry per `(group, pi)` pair, serialized as
//! versioned JSON, with a machine-readable reason on every skip.

use crate::glauberman::BasicRow;
use crate::lemmas::LemmaSummary;
use crate::vertex_weights::{AwcRow, CorollaryCRow, PerQRow, RelativeRow};
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub tool_version: String,
    pub entries: Vec<GroupPiReport>,
    pub summary: Summary,
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupPiReport {
    pub group: String,
    pub order: u64,
    pub pi: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pi_classes: Option<usize>,
    #[serde(rename = "I_count", skip_serializing_if = "Option::is_none")]
    pub i_count: Option<usize>,
    /// `I_pi(G)` as degree lists with the indices of the ordinary
    /// irreducibles restricting to each member.
    #[serde(rename = "I_pi", skip_serializing_if = "Vec::is_empty")]
    pub i_pi: Vec<IpiRow>,
    #[serde(rename = "per_Q", skip_serializing_if = "Vec::is_empty")]
    pub per_q: Vec<PerQRow>,
    #[serde(rename = "corollaryC", skip_serializing_if = "Option::is_none")]
    pub corollary_c: Option<CorollaryCRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub awc: Option<AwcRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lemmas: Option<LemmaSummary>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub basic: Vec<BasicRow>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub relative: Vec<RelativeRow>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
    pub checks_run: usize,
    pub checks_passed: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct IpiRow {
    pub degree: u64,
    pub lifts: Vec<usize>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub checks_run: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

pub const SKIP_NOT_PI_SEPARABLE: &str = "not_pi_separable";
pub const SKIP_ORDER_LIMIT: &str = "order_limit_exceeded";

impl GroupPiReport {
    pub fn skipped(group: &str, order: u128, pi: &crate::pi::PiConfig, reason: &str) -> Self {
        GroupPiReport {
            group: group.to_string(),
            order: order as u64,
            pi: pi.primes().iter().copied().collect(),
            skipped: Some(reason.to_string()),
            pi_classes: None,
            i_count: None,
            i_pi: Vec::new(),
            per_q: Vec::new(),
            corollary_c: None,
            awc: None,
            lemmas: None,
            basic: Vec::new(),
            relative: Vec::new(),
            failures: Vec::new(),
            checks_run: 0,
            checks_passed: 0,
        }
    }
}
