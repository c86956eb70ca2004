//! Diagram catalog: built-in data, the shipped `catalog.json` and the
//! `THETA_POS_CATALOG` override.

use std::path::Path;

use thetapos_core::rootsys::{self, DynkinDiagram, CATALOG_VERSION};

use crate::error::CliError;
use crate::json::{CatalogJson, DiagramJson};

/// Environment variable naming a replacement catalog file.
pub const CATALOG_ENV: &str = "THETA_POS_CATALOG";

/// The catalog file shipped with the crate.
pub const SHIPPED: &str = include_str!("../data/catalog.json");

/// The core catalog as JSON.
pub fn builtin() -> CatalogJson {
    CatalogJson {
        version: CATALOG_VERSION.to_string(),
        diagrams: rootsys::catalog().iter().map(|(n, d)| DiagramJson::from_diagram(n, d)).collect(),
    }
}

/// Parses a catalog document and validates every diagram.
pub fn parse(text: &str) -> Result<CatalogJson, CliError> {
    let c: CatalogJson = serde_json::from_str(text)?;
    for d in &c.diagrams {
        d.to_diagram()?;
    }
    Ok(c)
}

/// The active catalog: the override file if set, otherwise the shipped one.
pub fn load() -> Result<CatalogJson, CliError> {
    match std::env::var_os(CATALOG_ENV) {
        Some(path) => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| CliError::Io(format!("{}: {e}", Path::new(&path).display())))?;
            parse(&text)
        }
        None => parse(SHIPPED),
    }
}

/// Resolves `--diagram`: a catalog name, or a path to a single-diagram JSON file.
pub fn resolve(spec: &str) -> Result<(String, DynkinDiagram), CliError> {
    let catalog = load()?;
    if let Some(d) = catalog.diagrams.iter().find(|d| d.name == spec) {
        return Ok((d.name.clone(), d.to_diagram()?));
    }
    let path = Path::new(spec);
    if path.is_file() {
        let d: DiagramJson = serde_json::from_str(&std::fs::read_to_string(path)?)?;
        return Ok((d.name.clone(), d.to_diagram()?));
    }
    Err(CliError::Usage(format!("unknown diagram {spec:?}")))
}

/// Parses `a1,a2` (labels) or `1,2` (1-based indices) into sorted 0-based indices.
pub fn parse_theta(d: &DynkinDiagram, spec: &str) -> Result<Vec<usize>, CliError> {
    let mut out = Vec::new();
    for tok in spec.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let i = match tok.parse::<usize>() {
            Ok(k) if (1..=d.rank()).contains(&k) => k - 1,
            Ok(k) => return Err(CliError::Usage(format!("node index {k} out of range"))),
            Err(_) => d.node_index(tok).map_err(|_| CliError::Usage(format!("unknown node {tok:?}")))?,
        };
        if !out.contains(&i) {
            out.push(i);
        }
    }
    out.sort_unstable();
    Ok(out)
}
