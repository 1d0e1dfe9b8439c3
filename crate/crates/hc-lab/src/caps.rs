use hc_lab_core::Caps;

use crate::LabError;

pub const CAPS_ENV: &str = "HC_LAB_CAPS";

/// Parses `order=N,lattice=N,iso=N` (any subset, any order) on top of `base`.
pub fn parse_caps(text: &str, base: Caps) -> Result<Caps, LabError> {
    let mut caps = base;
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| LabError::Usage(format!("{CAPS_ENV}: expected key=value, found `{item}`")))?;
        let n: usize = value
            .trim()
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| LabError::Usage(format!("{CAPS_ENV}: `{value}` is not a positive integer")))?;
        match key.trim() {
            "order" => caps.order = n,
            "lattice" => caps.lattice = n,
            "iso" | "isomorphism" => caps.isomorphism = n,
            other => return Err(LabError::Usage(format!("{CAPS_ENV}: unknown cap `{other}`"))),
        }
    }
    Ok(caps)
}

/// Defaults, then the environment value, then explicit flags.
pub fn caps_from(env: Option<&str>, order: Option<usize>, lattice: Option<usize>) -> Result<Caps, LabError> {
    let mut caps = match env {
        Some(text) => parse_caps(text, Caps::default())?,
        None => Caps::default(),
    };
    if let Some(n) = order {
        caps.order = n;
    }
    if let Some(n) = lattice {
        caps.lattice = n;
    }
    Ok(caps)
}
