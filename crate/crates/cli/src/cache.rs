//! Content-addressed report cache.
//!
//! The key hashes the schema version, the crate version, the command name
//! and the full config echo (seed and tolerances included), so a version
//! bump or any changed argument misses.

use std::fs;
use std::path::{Path, PathBuf};

use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::error::{CliError, CliResult};
use crate::report::SCHEMA_VERSION;

pub const CACHE_DIR_ENV: &str = "QCA_ZETA_CACHE_DIR";

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

pub enum Lookup {
    Hit(Value),
    Miss,
    /// The entry existed but could not be read back; it will be replaced.
    Corrupt(String),
}

pub fn cache_key(command: &str, config: &Value) -> String {
    let mut h = Sha256::new();
    h.update(format!(
        "{SCHEMA_VERSION}\n{}\n{command}\n",
        env!("CARGO_PKG_VERSION")
    ));
    // serde_json maps are ordered by key, so this rendering is canonical.
    h.update(config.to_string());
    format!("{:x}", h.finalize())
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Cache {
        Cache { dir: dir.into() }
    }

    /// `--cache-dir` if given, else the environment override, else none.
    pub fn resolve(flag: Option<&Path>) -> Option<Cache> {
        flag.map(Path::to_path_buf)
            .or_else(|| std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from))
            .map(Cache::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    pub fn lookup(&self, key: &str) -> CliResult<Lookup> {
        let path = self.path(key);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Lookup::Miss),
            Err(e) => return Err(CliError::Io(format!("{}: {e}", path.display()))),
        };
        Ok(match serde_json::from_str(&text) {
            Ok(v) => Lookup::Hit(v),
            Err(e) => Lookup::Corrupt(format!("{}: {e}", path.display())),
        })
    }

    /// Write through a temporary file so a crash never leaves a torn entry.
    pub fn store(&self, key: &str, body: &Value) -> CliResult<()> {
        let io = |e: std::io::Error| CliError::Io(format!("{}: {e}", self.dir.display()));
        fs::create_dir_all(&self.dir).map_err(io)?;
        let tmp = self.dir.join(format!(".{key}.{}.tmp", std::process::id()));
        fs::write(&tmp, serde_json::to_string(body)?).map_err(io)?;
        fs::rename(&tmp, self.path(key)).map_err(io)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn key_depends_on_everything() {
        let a = cache_key("form", &json!({"n": 4, "seed": 1}));
        assert_eq!(a, cache_key("form", &json!({"seed": 1, "n": 4})));
        assert_ne!(a, cache_key("form", &json!({"n": 4, "seed": 2})));
        assert_ne!(a, cache_key("spectrum", &json!({"n": 4, "seed": 1})));
        assert_eq!(a.len(), 64);
    }

    #[test]
    fn store_and_lookup() {
        let dir = tempfile::tempdir().unwrap();
        let c = Cache::new(dir.path().join("nested"));
        assert!(matches!(c.lookup("k").unwrap(), Lookup::Miss));
        c.store("k", &json!({"x": 1})).unwrap();
        assert!(matches!(c.lookup("k").unwrap(), Lookup::Hit(v) if v == json!({"x": 1})));
        std::fs::write(dir.path().join("nested/k.json"), "{not json").unwrap();
        assert!(matches!(c.lookup("k").unwrap(), Lookup::Corrupt(_)));
    }
}
