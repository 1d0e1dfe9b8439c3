use std::fs;
use std::path::Path;

use hc_lab_core::corpus::{parse_cayley_text, GroupSpec};
use hc_lab_core::{Caps, Error, Group};

use crate::LabError;

/// Reads a Cayley-table file. Without a `name` line the group is named
/// after the file stem.
pub fn load_group(path: &Path, caps: &Caps) -> Result<Group, LabError> {
    let text = fs::read_to_string(path).map_err(|source| LabError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let g = parse_cayley_text(&text, caps).map_err(|source| LabError::File {
        path: path.to_path_buf(),
        source,
    })?;
    if text.lines().any(|l| l.starts_with("name ")) {
        return Ok(g);
    }
    let stem = path.file_stem().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned());
    Ok(g.renamed(stem))
}

/// Parses and realizes a group spec, reading `file:` operands from disk.
pub fn realize(spec: &str, caps: &Caps) -> Result<Group, LabError> {
    match GroupSpec::parse(spec)? {
        GroupSpec::FromFile(path) => load_group(Path::new(&path), caps),
        other => Ok(other.realize_with(caps, &|path| {
            load_group(Path::new(path), caps).map_err(|e| match e {
                LabError::Core(inner) | LabError::File { source: inner, .. } => inner,
                e => Error::InvalidParameter(e.to_string()),
            })
        })?),
    }
}
