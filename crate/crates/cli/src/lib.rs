//! Library side of the `grp` command: group references, the verification
//! suite and report rendering.

pub mod refs;
pub mod report;
pub mod suite;

use anyhow::{Context, Result};
use grp_core::{Group, GroupSpec};

/// Resolves a group reference and builds the group.
pub fn load_group(text: &str) -> Result<(GroupSpec, Group)> {
    let spec = refs::parse_group_ref(text)?;
    let group = spec
        .build()
        .with_context(|| format!("cannot build {spec}"))?;
    Ok((spec, group))
}
