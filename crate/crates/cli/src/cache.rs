//! On-disk cache of character tables.
//!
//! One JSON file per `(type, rank, central_rank, schema_version)`. Every
//! number is written as a decimal string. A cached table is only used after
//! its classes match the freshly enumerated group and its rows pass the full
//! orthogonality check, so a damaged file costs a recompute, never a wrong
//! answer.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use log::warn;
use serde::{Deserialize, Serialize};
use weyl_core::chars::CharacterTable;
use weyl_core::grp::Subgroup;
use weyl_core::rootsys::WeylGroup;
use weyl_core::CartanDatum;

use crate::error::CliError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fingerprint {
    #[serde(rename = "type")]
    pub type_label: String,
    pub rank: String,
    pub central_rank: String,
}

impl Fingerprint {
    pub fn of(cartan: &CartanDatum) -> Self {
        Fingerprint {
            type_label: cartan.type_label.to_string(),
            rank: cartan.rank.to_string(),
            central_rank: cartan.central_rank.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CachedClass {
    /// Reduced word of the class representative, e.g. `"s1*s2"`.
    pub representative: String,
    pub size: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableCacheEntry {
    pub schema_version: String,
    pub fingerprint: Fingerprint,
    pub classes: Vec<CachedClass>,
    /// Row-major, irreducibles in canonical order.
    pub rows: Vec<Vec<String>>,
}

impl TableCacheEntry {
    pub fn new(cartan: &CartanDatum, w: &WeylGroup, whole: &Subgroup, table: &CharacterTable) -> Self {
        TableCacheEntry {
            schema_version: SCHEMA_VERSION.to_string(),
            fingerprint: Fingerprint::of(cartan),
            classes: class_data(w, whole),
            rows: table
                .rows()
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect(),
        }
    }

    /// Rebuilds the table for a freshly enumerated group, rejecting any
    /// mismatch or inconsistency.
    pub fn to_table(&self, w: &WeylGroup, whole: &Subgroup) -> Result<CharacterTable, String> {
        if self.classes != class_data(w, whole) {
            return Err("class data differs from the enumerated group".into());
        }
        let rows: Vec<Vec<i64>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|v| v.parse::<i64>()).collect::<Result<Vec<_>, _>>())
            .collect::<Result<_, _>>()
            .map_err(|e| format!("unparsable table value: {e}"))?;
        let table = CharacterTable::from_rows(whole, rows).map_err(|e| e.to_string())?;
        // from_rows sorts canonically; a reordered file is not bit-exact
        let stored: Vec<Vec<String>> = table
            .rows()
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        if stored != self.rows {
            return Err("rows are not in canonical order".into());
        }
        Ok(table)
    }
}

fn class_data(w: &WeylGroup, whole: &Subgroup) -> Vec<CachedClass> {
    whole
        .classes()
        .classes()
        .iter()
        .map(|cl| CachedClass {
            representative: w.word_string(cl.representative),
            size: cl.size.to_string(),
        })
        .collect()
}

pub fn entry_path(dir: &Path, cartan: &CartanDatum) -> PathBuf {
    dir.join(format!(
        "{}{}-c{}-v{}.json",
        cartan.type_label, cartan.rank, cartan.central_rank, SCHEMA_VERSION
    ))
}

/// Reads the entry for `cartan`, or `None` on a miss. Unreadable or
/// mismatched files are reported as warnings and treated as misses.
pub fn load(dir: &Path, cartan: &CartanDatum) -> Option<TableCacheEntry> {
    let path = entry_path(dir, cartan);
    let bytes = match fs::read(&path) {
        Ok(b) => b,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return None,
        Err(e) => {
            warn!("ignoring unreadable cache file {}: {e}", path.display());
            return None;
        }
    };
    let entry: TableCacheEntry = match serde_json::from_slice(&bytes) {
        Ok(e) => e,
        Err(e) => {
            warn!("ignoring corrupted cache file {}: {e}", path.display());
            return None;
        }
    };
    if entry.schema_version != SCHEMA_VERSION.to_string() || entry.fingerprint != Fingerprint::of(cartan) {
        warn!("ignoring cache file {} with a mismatched fingerprint", path.display());
        return None;
    }
    Some(entry)
}

/// Writes the entry atomically: a temporary file in the cache directory is
/// renamed over the target.
pub fn save(dir: &Path, cartan: &CartanDatum, entry: &TableCacheEntry) -> Result<(), CliError> {
    fs::create_dir_all(dir)?;
    let mut bytes = serde_json::to_vec_pretty(entry).map_err(|e| CliError::Serialize(e.to_string()))?;
    bytes.push(b'\n');
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(&bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(entry_path(dir, cartan)).map_err(|e| CliError::Io(e.error))?;
    Ok(())
}
