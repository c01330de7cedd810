//! Augmentation frontier on disk, so long searches can resume.
//!
//! ```text
//! p3cert-search-checkpoint 1
//! n 9
//! target Bw
//! forbid D~{
//! level 6
//! nodes 12345
//! <graph6, one per line>
//! ```

use super::SearchProblem;
use crate::error::{Error, Result};
use crate::graphs::{from_graph6, Graph};
use std::fs;
use std::io::Write;
use std::path::Path;

pub const CHECKPOINT_MAGIC: &str = "p3cert-search-checkpoint";
pub const CHECKPOINT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Checkpoint {
    /// Order of the frontier graphs.
    pub level: usize,
    pub nodes: u64,
    pub frontier: Vec<Graph>,
}

fn header(p: &SearchProblem) -> String {
    format!(
        "{CHECKPOINT_MAGIC} {CHECKPOINT_VERSION}\nn {}\ntarget {}\nforbid {}\n",
        p.n, p.target, p.forbid
    )
}

/// Writes atomically (temp file, then rename).
pub fn save_checkpoint(path: &Path, cp: &Checkpoint, p: &SearchProblem) -> Result<()> {
    let io = |e: std::io::Error| Error::Checkpoint(format!("{}: {e}", path.display()));
    let tmp = path.with_extension("tmp");
    let mut f = fs::File::create(&tmp).map_err(io)?;
    let mut body = header(p);
    body.push_str(&format!("level {}\nnodes {}\n", cp.level, cp.nodes));
    for g in &cp.frontier {
        body.push_str(&format!("{g}\n"));
    }
    f.write_all(body.as_bytes()).map_err(io)?;
    f.sync_all().map_err(io)?;
    fs::rename(&tmp, path).map_err(io)
}

/// `None` if the file does not exist. A file for a different problem or
/// version is an error rather than silently ignored.
pub fn load_checkpoint(path: &Path, p: &SearchProblem) -> Result<Option<Checkpoint>> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(Error::Checkpoint(format!("{}: {e}", path.display()))),
    };
    let expected = header(p);
    let Some(rest) = text.strip_prefix(&expected) else {
        return Err(Error::Checkpoint(format!(
            "{} was written for a different problem or version",
            path.display()
        )));
    };
    let mut lines = rest.lines();
    let mut field = |name: &str| -> Result<u64> {
        lines
            .next()
            .and_then(|l| l.strip_prefix(name))
            .and_then(|v| v.trim().parse().ok())
            .ok_or_else(|| Error::Checkpoint(format!("missing {name}")))
    };
    let level = field("level ")? as usize;
    let nodes = field("nodes ")?;
    if level >= p.n.max(1) {
        return Err(Error::Checkpoint(format!("level {level} out of range")));
    }
    let frontier = lines
        .map(from_graph6)
        .collect::<Result<Vec<_>>>()
        .map_err(|e| Error::Checkpoint(e.to_string()))?;
    if frontier.iter().any(|g| g.order() != level) {
        return Err(Error::Checkpoint("frontier graph of the wrong order".into()));
    }
    Ok(Some(Checkpoint { level, nodes, frontier }))
}
