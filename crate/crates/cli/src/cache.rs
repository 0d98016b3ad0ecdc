//! Content-addressed result cache.
//!
//! Each entry is keyed by the SHA-256 of a canonical parameter string and
//! stores its payload together with the payload's own SHA-256. Entries
//! whose key or hash does not match are ignored and overwritten.

use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

#[derive(Debug, Clone)]
pub struct ResultCache {
    dir: PathBuf,
}

fn sha(s: &str) -> String {
    hex::encode(Sha256::digest(s.as_bytes()))
}

impl ResultCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        ResultCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{}.json", sha(key)))
    }

    /// The stored payload, if present and intact.
    pub fn get(&self, key: &str) -> Option<Value> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        let entry: Value = serde_json::from_str(&text).ok()?;
        let payload = entry.get("payload")?.as_str()?;
        if entry.get("key")?.as_str()? != key || entry.get("sha256")?.as_str()? != sha(payload) {
            return None;
        }
        serde_json::from_str(payload).ok()
    }

    pub fn put(&self, key: &str, value: &Value) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let payload = serde_json::to_string(value)?;
        let entry = json!({ "key": key, "sha256": sha(&payload), "payload": payload });
        let path = self.path(key);
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, serde_json::to_string(&entry)?)?;
        fs::rename(tmp, path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_tamper() {
        let dir = std::env::temp_dir().join(format!("tangles-cache-test-{}", std::process::id()));
        let c = ResultCache::new(&dir);
        let v = json!({"a": [1, 2, "3/4"]});
        assert_eq!(c.get("k"), None);
        c.put("k", &v).unwrap();
        assert_eq!(c.get("k"), Some(v.clone()));
        assert_eq!(c.get("other"), None);
        let path = c.path("k");
        let text = fs::read_to_string(&path).unwrap().replace("3/4", "3/5");
        fs::write(&path, text).unwrap();
        assert_eq!(c.get("k"), None);
        fs::remove_dir_all(dir).unwrap();
    }
}
