//! Reading set families: one JSON integer array per line, in any element
//! order; blank lines and `#` comment lines are ignored. Mixed set sizes
//! are allowed — commands that need a single level check it themselves.

use std::collections::HashMap;
use std::io::BufRead;

use cutset_core::Subset;

use crate::error::{CliError, Result};

/// Parses one set line such as `[1,3,5]`.
pub fn parse_set(line: &str) -> std::result::Result<Subset, String> {
    let raw: Vec<u64> =
        serde_json::from_str(line).map_err(|e| format!("expected a JSON integer array: {e}"))?;
    let mut elems = Vec::with_capacity(raw.len());
    for v in raw {
        if v == 0 {
            return Err("elements are 1-based; 0 is not allowed".into());
        }
        let e = u32::try_from(v).map_err(|_| format!("element {v} is out of range"))?;
        elems.push(e);
    }
    elems.sort_unstable();
    if let Some(w) = elems.windows(2).find(|w| w[0] == w[1]) {
        return Err(format!("element {} repeats within the set", w[0]));
    }
    Subset::new(elems).map_err(|e| e.to_string())
}

/// Reads every set from `reader`, reporting malformed or repeated lines by
/// line number.
pub fn read_sets(reader: impl BufRead) -> Result<Vec<Subset>> {
    let mut sets = Vec::new();
    let mut first_seen: HashMap<Subset, usize> = HashMap::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let set = parse_set(trimmed)
            .map_err(|msg| CliError::Data(format!("line {lineno}: {msg}")))?;
        if let Some(prev) = first_seen.insert(set.clone(), lineno) {
            return Err(CliError::Data(format!(
                "line {lineno} repeats the set from line {prev}"
            )));
        }
        sets.push(set);
    }
    Ok(sets)
}
