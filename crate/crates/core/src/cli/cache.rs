//! Advisory on-disk cache of representation tables.
//!
//! Layout: `{"tables": [{"kind": ..., "key": ..., "nmax": ..., "counts": ["1", ...]}]}`.
//! Counts are decimal strings so consumers never lose integer width. A file
//! that fails to parse, or an entry that fails validation, is skipped with a
//! warning.

use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CacheEntry {
    pub kind: String,
    pub key: String,
    pub nmax: usize,
    pub counts: Vec<String>,
}

#[derive(Debug, Default, Serialize, Deserialize)]
struct CacheFile {
    tables: Vec<CacheEntry>,
}

pub struct TableCache {
    path: PathBuf,
    file: CacheFile,
}

impl TableCache {
    /// Loads `path`; a missing file is an empty cache, anything unreadable is
    /// reported through `warn` and ignored.
    pub fn open(path: &Path, warn: &mut dyn FnMut(String)) -> Self {
        let file = match fs::read_to_string(path) {
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => CacheFile::default(),
            Err(e) => {
                warn(format!("cache {} unreadable, ignoring: {e}", path.display()));
                CacheFile::default()
            }
            Ok(text) => match serde_json::from_str::<CacheFile>(&text) {
                Ok(f) => f,
                Err(e) => {
                    warn(format!("cache {} is corrupt, ignoring: {e}", path.display()));
                    CacheFile::default()
                }
            },
        };
        TableCache {
            path: path.to_path_buf(),
            file,
        }
    }

    /// Counts for `N = 0..=nmax` if a valid entry covers them.
    ///
    /// `validate` receives the parsed counts and rejects entries that break
    /// table invariants.
    pub fn lookup(
        &self,
        kind: &str,
        key: &str,
        nmax: usize,
        validate: &dyn Fn(&[BigInt]) -> bool,
        warn: &mut dyn FnMut(String),
    ) -> Option<Vec<BigInt>> {
        let entry = self
            .file
            .tables
            .iter()
            .find(|e| e.kind == kind && e.key == key && e.nmax >= nmax)?;
        let parsed: Option<Vec<BigInt>> = entry.counts.iter().map(|c| c.parse().ok()).collect();
        match parsed {
            Some(counts) if counts.len() == entry.nmax + 1 && validate(&counts) => {
                Some(counts[..=nmax].to_vec())
            }
            _ => {
                warn(format!("cache entry {kind}/{key} is invalid, ignoring"));
                None
            }
        }
    }

    pub fn store(&mut self, kind: &str, key: &str, counts: &[BigInt]) {
        let nmax = counts.len() - 1;
        if self
            .file
            .tables
            .iter()
            .any(|e| e.kind == kind && e.key == key && e.nmax >= nmax)
        {
            return;
        }
        self.file.tables.retain(|e| !(e.kind == kind && e.key == key));
        self.file.tables.push(CacheEntry {
            kind: kind.to_string(),
            key: key.to_string(),
            nmax,
            counts: counts.iter().map(BigInt::to_string).collect(),
        });
    }

    pub fn save(&self) -> std::io::Result<()> {
        let text = serde_json::to_string(&self.file).expect("cache serializes");
        fs::write(&self.path, text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn store_lookup_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.json");
        let mut warnings = Vec::new();
        let mut warn = |w: String| warnings.push(w);
        let mut c = TableCache::open(&path, &mut warn);
        let counts: Vec<BigInt> = [1, 2, 0, 0, 2].iter().map(|&v| BigInt::from(v)).collect();
        c.store("r_squares", "1", &counts);
        c.save().unwrap();

        let c = TableCache::open(&path, &mut warn);
        let ok = |_: &[BigInt]| true;
        assert_eq!(c.lookup("r_squares", "1", 3, &ok, &mut warn), Some(counts[..=3].to_vec()));
        assert_eq!(c.lookup("r_squares", "1", 9, &ok, &mut warn), None);
        let reject = |_: &[BigInt]| false;
        assert_eq!(c.lookup("r_squares", "1", 3, &reject, &mut warn), None);

        fs::write(&path, "{not json").unwrap();
        let c = TableCache::open(&path, &mut warn);
        assert_eq!(c.lookup("r_squares", "1", 3, &ok, &mut warn), None);
        drop(warn);
        assert_eq!(warnings.len(), 2);
    }
}
