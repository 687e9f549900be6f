//! Flat `key = value` constants file.

use std::path::Path;

use ucn_gas::PhysicalConstants;

use crate::error::CliError;

pub fn load(path: &Path) -> Result<PhysicalConstants, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
    parse(&text)
}

/// Blank lines and lines starting with `#` are skipped. Absent keys keep
/// their CODATA 2018 values.
pub fn parse(text: &str) -> Result<PhysicalConstants, CliError> {
    let mut c = PhysicalConstants::CODATA_2018;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |msg: &str| CliError::Usage(format!("config line {}: {msg}: {raw}", i + 1));
        let (key, value) = line.split_once('=').ok_or_else(|| bad("expected key = value"))?;
        let value: f64 = value.trim().parse().map_err(|_| bad("not a number"))?;
        let slot = match key.trim() {
            "m_kg" => &mut c.m,
            "g_mps2" => &mut c.g,
            "hbar_Js" => &mut c.hbar,
            "kB_JpK" => &mut c.k_b,
            _ => return Err(bad("unknown key")),
        };
        *slot = value;
    }
    c.validate().map_err(|e| CliError::Usage(format!("config: {e}")))?;
    Ok(c)
}
