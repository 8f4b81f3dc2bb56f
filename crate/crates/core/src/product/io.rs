//! Family directories and arc-assignment files.
//!
//! A family directory holds one digraph edge-list per member and a
//! `family.json` manifest `{"n": 2, "k": 2, "members": ["m0.txt", ...]}`.
//! An assignment file has one `a b member_index` line per host arc.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{ArcAssignment, LabeledFamily, ProductError};
use crate::graph::io::{parse_digraph, write_digraph, EdgeListError};

#[derive(Debug, Error)]
pub enum FamilyIoError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Json { path: PathBuf, source: serde_json::Error },
    #[error("{path}: {source}")]
    EdgeList { path: PathBuf, source: EdgeListError },
    #[error("manifest declares n={declared_n}, k={declared_k} but members have n={n}, k={k}")]
    ManifestMismatch { declared_n: usize, declared_k: usize, n: usize, k: usize },
    #[error("assignment line {line}: {message}")]
    Assignment { line: usize, message: String },
    #[error(transparent)]
    Product(#[from] ProductError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyManifest {
    pub n: usize,
    pub k: usize,
    pub members: Vec<String>,
}

fn read(path: &Path) -> Result<String, FamilyIoError> {
    fs::read_to_string(path).map_err(|source| FamilyIoError::Io { path: path.to_owned(), source })
}

pub fn load_family_dir(dir: &Path) -> Result<LabeledFamily, FamilyIoError> {
    let manifest_path = dir.join("family.json");
    let text = read(&manifest_path)?;
    let manifest: FamilyManifest = serde_json::from_str(&text)
        .map_err(|source| FamilyIoError::Json { path: manifest_path.clone(), source })?;
    let mut members = Vec::with_capacity(manifest.members.len());
    for file in &manifest.members {
        let path = dir.join(file);
        let d = parse_digraph(&read(&path)?).map_err(|source| FamilyIoError::EdgeList { path, source })?;
        members.push(d);
    }
    let fam = LabeledFamily::new(members)?;
    if fam.n() != manifest.n || fam.k() != manifest.k {
        return Err(FamilyIoError::ManifestMismatch {
            declared_n: manifest.n,
            declared_k: manifest.k,
            n: fam.n(),
            k: fam.k(),
        });
    }
    Ok(fam)
}

/// Writes `member_<i>.txt` files and `family.json` into `dir`, creating it if needed.
pub fn write_family_dir(fam: &LabeledFamily, dir: &Path) -> Result<(), FamilyIoError> {
    let io_err = |path: &Path| {
        let path = path.to_owned();
        move |source| FamilyIoError::Io { path, source }
    };
    fs::create_dir_all(dir).map_err(io_err(dir))?;
    let mut names = Vec::with_capacity(fam.len());
    for (i, d) in fam.members().iter().enumerate() {
        let name = format!("member_{i}.txt");
        let path = dir.join(&name);
        fs::write(&path, write_digraph(d)).map_err(io_err(&path))?;
        names.push(name);
    }
    let manifest = FamilyManifest { n: fam.n(), k: fam.k(), members: names };
    let path = dir.join("family.json");
    let json = serde_json::to_string_pretty(&manifest).expect("manifest serialises");
    fs::write(&path, json).map_err(io_err(&path))
}

pub fn parse_assignment(text: &str) -> Result<ArcAssignment, FamilyIoError> {
    let mut h = ArcAssignment::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let nums: Result<Vec<usize>, _> = line.split_whitespace().map(str::parse).collect();
        match nums.as_deref() {
            Ok(&[a, b, m]) => {
                if h.get((a, b)).is_some() {
                    return Err(FamilyIoError::Assignment {
                        line: i + 1,
                        message: format!("arc ({a}, {b}) assigned twice"),
                    });
                }
                h.insert((a, b), m);
            }
            _ => {
                return Err(FamilyIoError::Assignment {
                    line: i + 1,
                    message: "expected \"a b member_index\"".into(),
                })
            }
        }
    }
    Ok(h)
}

pub fn write_assignment(h: &ArcAssignment) -> String {
    let mut out = String::new();
    for ((a, b), m) in h.iter() {
        let _ = writeln!(out, "{a} {b} {m}");
    }
    out
}
