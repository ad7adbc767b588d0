//! Bounds and thread settings from the config file and the environment.

use std::path::Path;

use heckechar::Bounds;
use serde::Deserialize;

/// Keys accepted in the config file. Every key is optional.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    max_group_order: Option<u64>,
    max_subgroup_order: Option<u64>,
    max_degree: Option<usize>,
    threads: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Settings {
    pub bounds: Bounds,
    pub threads: Option<usize>,
}

/// Reads `path` (if any), then applies the `HECKECHAR_*` environment
/// overrides returned by `env`.
pub fn load(path: Option<&Path>, env: impl Fn(&str) -> Option<String>) -> Result<Settings, String> {
    let file = match path {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?;
            toml::from_str::<ConfigFile>(&text).map_err(|e| format!("{}: {e}", p.display()))?
        }
        None => ConfigFile::default(),
    };
    let mut bounds = Bounds::default();
    let mut threads = file.threads;
    if let Some(v) = file.max_group_order {
        bounds.max_group_order = v.into();
    }
    if let Some(v) = file.max_subgroup_order {
        bounds.max_subgroup_order = v.into();
    }
    if let Some(v) = file.max_degree {
        bounds.max_degree = v;
    }

    fn parse<T: std::str::FromStr>(key: &str, v: &str) -> Result<T, String> {
        v.trim()
            .parse()
            .map_err(|_| format!("{key}: expected a non-negative integer, got {v:?}"))
    }
    if let Some(v) = env("HECKECHAR_MAX_GROUP_ORDER") {
        bounds.max_group_order = parse("HECKECHAR_MAX_GROUP_ORDER", &v)?;
    }
    if let Some(v) = env("HECKECHAR_MAX_SUBGROUP_ORDER") {
        bounds.max_subgroup_order = parse("HECKECHAR_MAX_SUBGROUP_ORDER", &v)?;
    }
    if let Some(v) = env("HECKECHAR_MAX_DEGREE") {
        bounds.max_degree = parse("HECKECHAR_MAX_DEGREE", &v)?;
    }
    if let Some(v) = env("HECKECHAR_THREADS") {
        threads = Some(parse("HECKECHAR_THREADS", &v)?);
    }
    Ok(Settings { bounds, threads })
}
