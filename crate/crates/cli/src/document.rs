use std::fs;
use std::path::Path;

use mustafin_core::Configuration;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// `{"d": 3, "points": [[0, -1, -2], …], "label": "…"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigurationDocument {
    pub d: usize,
    pub points: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl ConfigurationDocument {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::parse("parse", e.to_string()))
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::parse("io", format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Normalizes the points and validates the configuration.
    pub fn to_configuration(&self) -> Result<Configuration, CliError> {
        Ok(Configuration::from_raw(self.d, &self.points)?)
    }

    /// Normalized echo of a configuration.
    pub fn from_configuration(config: &Configuration, label: Option<String>) -> Self {
        ConfigurationDocument {
            d: config.d(),
            points: config
                .points()
                .iter()
                .map(|p| p.coords().to_vec())
                .collect(),
            label,
        }
    }
}

/// Parses comma-separated values such as `0,-1,-4`; an empty string is the
/// empty vector.
pub fn parse_vector<T: std::str::FromStr>(flag: &str, text: &str) -> Result<Vec<T>, CliError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|s| {
            s.trim().parse().map_err(|_| {
                CliError::parse(
                    "parse",
                    format!("{flag}: cannot read {:?} in {text:?}", s.trim()),
                )
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_normalizes() {
        let doc = ConfigurationDocument::parse(r#"{"d":3,"points":[[1,0,-1],[0,1,1]]}"#).unwrap();
        let config = doc.to_configuration().unwrap();
        let echo = ConfigurationDocument::from_configuration(&config, None);
        assert_eq!(echo.points, vec![vec![0, -1, -2], vec![0, 1, 1]]);
    }

    #[test]
    fn rejects_unknown_fields_and_bad_json() {
        assert!(ConfigurationDocument::parse(r#"{"d":3,"points":[],"x":1}"#).is_err());
        assert!(ConfigurationDocument::parse("{").is_err());
    }

    #[test]
    fn dimension_mismatch_is_a_domain_error() {
        let doc = ConfigurationDocument::parse(r#"{"d":3,"points":[[0,1]]}"#).unwrap();
        let err = doc.to_configuration().unwrap_err();
        assert_eq!(err.kind(), "dimension_mismatch");
    }

    #[test]
    fn vectors() {
        assert_eq!(
            parse_vector::<i64>("--vertex", "0,-1, -4").unwrap(),
            vec![0, -1, -4]
        );
        assert_eq!(
            parse_vector::<usize>("--u", "").unwrap(),
            Vec::<usize>::new()
        );
        assert!(parse_vector::<usize>("--u", "1,-1").is_err());
    }
}
