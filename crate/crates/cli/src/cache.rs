//! The on-disk cache of computed `g` values: a CSV file with schema
//! `n,m,l,g`, consulted before any recomputation and rewritten atomically
//! (write to a temporary file, then rename). Entries are never removed.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use num_bigint::BigUint;

use crate::error::{CliError, Result};

pub const CACHE_ENV: &str = "CUTSET_CACHE";
pub const DEFAULT_CACHE_PATH: &str = "cutset_cache.csv";

const HEADER: &str = "n,m,l,g";

#[derive(Debug)]
pub struct Cache {
    path: PathBuf,
    entries: BTreeMap<(u32, u32, u32), BigUint>,
    added: usize,
}

impl Cache {
    /// Loads the cache at `path`; a missing file is an empty cache.
    /// Unreadable content is rejected with its line number — the file is
    /// never silently repaired or truncated.
    pub fn open(path: PathBuf) -> Result<Self> {
        let mut entries = BTreeMap::new();
        match std::fs::read_to_string(&path) {
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {}
            Err(e) => return Err(e.into()),
            Ok(text) => {
                let reject = |lineno: usize, msg: String| {
                    CliError::Data(format!("cache {}: line {lineno}: {msg}", path.display()))
                };
                for (idx, line) in text.lines().enumerate() {
                    let lineno = idx + 1;
                    if idx == 0 {
                        if line != HEADER {
                            return Err(reject(lineno, format!("expected header `{HEADER}`")));
                        }
                        continue;
                    }
                    if line.is_empty() {
                        continue;
                    }
                    let fields: Vec<&str> = line.split(',').collect();
                    if fields.len() != 4 {
                        return Err(reject(lineno, "expected 4 fields".into()));
                    }
                    let parse_u32 = |s: &str, what: &str| {
                        s.parse::<u32>()
                            .map_err(|_| reject(lineno, format!("bad {what} `{s}`")))
                    };
                    let key = (
                        parse_u32(fields[0], "n")?,
                        parse_u32(fields[1], "m")?,
                        parse_u32(fields[2], "l")?,
                    );
                    let g: BigUint = fields[3]
                        .parse()
                        .map_err(|_| reject(lineno, format!("bad g `{}`", fields[3])))?;
                    if let Some(old) = entries.insert(key, g.clone()) {
                        if old != g {
                            return Err(reject(lineno, "conflicts with an earlier entry".into()));
                        }
                    }
                }
            }
        }
        Ok(Cache {
            path,
            entries,
            added: 0,
        })
    }

    pub fn get(&self, n: u32, m: u32, l: u32) -> Option<&BigUint> {
        self.entries.get(&(n, m, l))
    }

    pub fn put(&mut self, n: u32, m: u32, l: u32, g: BigUint) {
        if self.entries.insert((n, m, l), g).is_none() {
            self.added += 1;
        }
    }

    /// Writes the cache back if anything was added. The new content is
    /// staged in a temporary file in the same directory and renamed over
    /// the old one, so a failure cannot corrupt the existing cache.
    pub fn flush(&self) -> Result<()> {
        if self.added == 0 {
            return Ok(());
        }
        let dir = match self.path.parent() {
            Some(p) if !p.as_os_str().is_empty() => p.to_path_buf(),
            _ => PathBuf::from("."),
        };
        let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
        writeln!(tmp, "{HEADER}")?;
        for ((n, m, l), g) in &self.entries {
            writeln!(tmp, "{n},{m},{l},{g}")?;
        }
        tmp.persist(&self.path).map_err(|e| CliError::Io(e.error))?;
        Ok(())
    }
}
