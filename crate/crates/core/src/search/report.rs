use serde::{Deserialize, Serialize};

use super::{Certificate, SearchReport};
use crate::labeling::{FullLabeling, VertexLabeling};

/// JSON form of a search result: `{"outcome", "labels", "nodes", "ms", ...}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub outcome: String,
    pub labels: Option<Vec<usize>>,
    pub nodes: u64,
    pub ms: u128,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solutions: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge_labels: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub magic_sum: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unpruned_outcome: Option<String>,
}

impl ReportRecord {
    fn base<W>(r: &SearchReport<W>, labels: Option<Vec<usize>>) -> Self {
        ReportRecord {
            outcome: r.outcome.name().to_owned(),
            labels,
            nodes: r.nodes,
            ms: r.elapsed.as_millis(),
            solutions: r.solutions,
            edge_labels: None,
            magic_sum: None,
            unpruned_outcome: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialises")
    }
}

impl From<&SearchReport<VertexLabeling>> for ReportRecord {
    fn from(r: &SearchReport<VertexLabeling>) -> Self {
        ReportRecord::base(r, r.outcome.witness().map(|w| w.as_slice().to_vec()))
    }
}

impl From<&SearchReport<FullLabeling>> for ReportRecord {
    fn from(r: &SearchReport<FullLabeling>) -> Self {
        let w = r.outcome.witness();
        ReportRecord {
            edge_labels: w.map(|w| w.edge_labels.clone()),
            magic_sum: w.map(|w| w.magic_sum),
            ..ReportRecord::base(r, w.map(|w| w.vertex_labels.clone()))
        }
    }
}

impl From<&Certificate> for ReportRecord {
    fn from(c: &Certificate) -> Self {
        ReportRecord {
            unpruned_outcome: c.unpruned.as_ref().map(|u| u.outcome.name().to_owned()),
            ..ReportRecord::from(&c.report)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::{find_sem, Mode, SearchLimits};

    #[test]
    fn json_shape() {
        let r = find_sem(&crate::families::lk1n(2), Mode::Canonical, SearchLimits::default()).unwrap();
        let rec = ReportRecord::from(&r);
        let v: serde_json::Value = serde_json::from_str(&rec.to_json()).unwrap();
        assert_eq!(v["outcome"], "witness");
        assert_eq!(v["labels"], serde_json::json!([1, 2, 3]));
        assert!(v["nodes"].is_u64() && v["ms"].is_u64());
        assert!(v.get("solutions").is_none());
        let back: ReportRecord = serde_json::from_str(&rec.to_json()).unwrap();
        assert_eq!(back, rec);
    }
}
