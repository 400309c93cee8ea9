use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use weyl_core::rootsys::DEFAULT_MAX_ORDER;

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputFormat {
    Json,
    Csv,
    #[default]
    Text,
}

impl FromStr for OutputFormat {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "text" => Ok(OutputFormat::Text),
            other => Err(CliError::Usage(format!(
                "unknown format {other:?}; expected json, csv or text"
            ))),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
            OutputFormat::Text => "text",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub max_group_order: usize,
    pub rng_seed: u64,
    pub cache_dir: PathBuf,
    pub output_format: OutputFormat,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_group_order: DEFAULT_MAX_ORDER,
            rng_seed: 0,
            cache_dir: default_cache_dir(),
            output_format: OutputFormat::Text,
        }
    }
}

impl Config {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.max_group_order < 2 {
            return Err(CliError::Usage(format!(
                "max group order must be at least 2, got {}",
                self.max_group_order
            )));
        }
        Ok(())
    }
}

/// `$WEYL_DL_CACHE_DIR`, else `$XDG_CACHE_HOME/weyl-dl`, else
/// `$HOME/.cache/weyl-dl`, else `.weyl-dl-cache` in the working directory.
pub fn default_cache_dir() -> PathBuf {
    if let Some(dir) = std::env::var_os("WEYL_DL_CACHE_DIR") {
        return PathBuf::from(dir);
    }
    if let Some(dir) = std::env::var_os("XDG_CACHE_HOME") {
        return PathBuf::from(dir).join("weyl-dl");
    }
    if let Some(home) = std::env::var_os("HOME") {
        return PathBuf::from(home).join(".cache").join("weyl-dl");
    }
    PathBuf::from(".weyl-dl-cache")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_parse() {
        assert_eq!("json".parse::<OutputFormat>().unwrap(), OutputFormat::Json);
        assert_eq!("csv".parse::<OutputFormat>().unwrap(), OutputFormat::Csv);
        assert!("xml".parse::<OutputFormat>().is_err());
    }

    #[test]
    fn order_bound() {
        let mut c = Config::default();
        assert!(c.validate().is_ok());
        c.max_group_order = 1;
        assert!(c.validate().is_err());
    }
}
