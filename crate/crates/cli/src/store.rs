//! Append-only JSON-lines result store with an index by parameter tuple.

use std::collections::BTreeMap;
use std::fs::{self, OpenOptions};
use std::io::Write as _;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

/// One executed command and what it produced.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    /// Command line after the program name, enough to replay the run.
    pub args: Vec<String>,
    /// Every parameter of the command, defaults filled in.
    pub params: Value,
    /// SHA-256 of each input file, keyed by path.
    pub inputs: BTreeMap<String, String>,
    pub seed: u64,
    pub tool_version: String,
    pub wall_time_ms: u64,
    pub outcome: Value,
    pub digest: String,
}

impl RunManifest {
    /// Index key: the command and its parameters in canonical JSON.
    pub fn key(&self) -> String {
        format!("{} {}", self.command, self.params)
    }
}

/// SHA-256 of the outcome's canonical JSON with every `wall_time_ms` field
/// removed, so reruns of a deterministic command agree.
pub fn outcome_digest(outcome: &Value) -> String {
    let mut v = outcome.clone();
    strip_timing(&mut v);
    let text = serde_json::to_string(&v).expect("JSON values serialize");
    hex::encode(Sha256::digest(text.as_bytes()))
}

fn strip_timing(v: &mut Value) {
    match v {
        Value::Object(map) => {
            map.remove("wall_time_ms");
            map.values_mut().for_each(strip_timing);
        }
        Value::Array(items) => items.iter_mut().for_each(strip_timing),
        _ => {}
    }
}

pub fn file_digest(path: &Path) -> Result<String> {
    let bytes = fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
    Ok(hex::encode(Sha256::digest(&bytes)))
}

#[derive(Debug, Default, Serialize, Deserialize)]
struct IndexEntry {
    line: usize,
    digest: String,
}

pub struct Store {
    path: PathBuf,
}

impl Store {
    pub fn new(path: impl Into<PathBuf>) -> Self {
        Store { path: path.into() }
    }

    pub fn index_path(&self) -> PathBuf {
        let mut name = self.path.file_name().unwrap_or_default().to_os_string();
        name.push(".index.json");
        self.path.with_file_name(name)
    }

    pub fn load(&self) -> Result<Vec<RunManifest>> {
        if !self.path.exists() {
            return Ok(Vec::new());
        }
        let text = fs::read_to_string(&self.path).with_context(|| format!("cannot read {}", self.path.display()))?;
        text.lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| {
                serde_json::from_str(l)
                    .with_context(|| format!("{}:{}: malformed manifest", self.path.display(), i + 1))
            })
            .collect()
    }

    /// Appends the manifest and records its line under its key in the index.
    pub fn append(&self, manifest: &RunManifest) -> Result<()> {
        let line = self.load()?.len() + 1;
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)
            .with_context(|| format!("cannot open store {}", self.path.display()))?;
        writeln!(file, "{}", serde_json::to_string(manifest)?)?;

        let index_path = self.index_path();
        let mut index: BTreeMap<String, Vec<IndexEntry>> = match fs::read_to_string(&index_path) {
            Ok(text) => {
                serde_json::from_str(&text).with_context(|| format!("malformed index {}", index_path.display()))?
            }
            Err(_) => BTreeMap::new(),
        };
        index.entry(manifest.key()).or_default().push(IndexEntry {
            line,
            digest: manifest.digest.clone(),
        });
        let tmp = index_path.with_extension("json.tmp");
        fs::write(&tmp, serde_json::to_string_pretty(&index)?)?;
        fs::rename(&tmp, &index_path)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn digest_ignores_wall_time() {
        let a = json!({"value": 6, "stats": {"nodes": 10, "wall_time_ms": 3}});
        let b = json!({"stats": {"wall_time_ms": 900, "nodes": 10}, "value": 6});
        assert_eq!(outcome_digest(&a), outcome_digest(&b));
        let c = json!({"value": 6, "stats": {"nodes": 11, "wall_time_ms": 3}});
        assert_ne!(outcome_digest(&a), outcome_digest(&c));
    }

    #[test]
    fn index_path_sits_next_to_store() {
        let s = Store::new("/tmp/x/results.jsonl");
        assert_eq!(s.index_path(), PathBuf::from("/tmp/x/results.jsonl.index.json"));
    }
}
