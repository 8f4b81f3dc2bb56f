use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{sem_window, LabelingError, VertexLabeling};
use crate::graph::Graph;

/// JSON form of a vertex labeling:
/// `{"p": 6, "labels": [...], "sem": true, "window": [5, 10], "magic_sum": 17}`.
///
/// `labels[i]` is the label of vertex `i + 1`. `window` and `magic_sum` are
/// `null` unless the labeling is SEM for the graph it was described against.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelingRecord {
    pub p: usize,
    pub labels: Vec<usize>,
    #[serde(default)]
    pub sem: bool,
    #[serde(default)]
    pub window: Option<[usize; 2]>,
    #[serde(default)]
    pub magic_sum: Option<usize>,
}

#[derive(Debug, Error)]
pub enum RecordError {
    #[error("malformed labeling JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("\"p\" is {p} but {len} labels were given")]
    LengthMismatch { p: usize, len: usize },
    #[error("labels are not a bijection onto [1, p]: {0}")]
    NotBijective(#[from] LabelingError),
}

impl LabelingRecord {
    /// Describes `f` against `g`, recomputing the SEM status and window.
    pub fn describe(g: &Graph, f: &VertexLabeling) -> Self {
        let window = sem_window(g, f);
        LabelingRecord {
            p: f.order(),
            labels: f.as_slice().to_vec(),
            sem: window.is_some(),
            window: window.map(|w| [w.min, w.max()]),
            magic_sum: window.map(|w| g.order() + g.size() + w.min),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("record serialises")
    }

    /// Parses and validates the labels. The stored `sem`/`window` fields are not trusted.
    pub fn parse(text: &str) -> Result<VertexLabeling, RecordError> {
        let rec: LabelingRecord = serde_json::from_str(text)?;
        rec.labeling()
    }

    pub fn labeling(&self) -> Result<VertexLabeling, RecordError> {
        if self.labels.len() != self.p {
            return Err(RecordError::LengthMismatch { p: self.p, len: self.labels.len() });
        }
        Ok(VertexLabeling::new(self.labels.clone())?)
    }
}
