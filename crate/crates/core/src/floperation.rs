//! Index-2 flowlines and the three floperations Flop, Insert and Cancel.

use std::fmt;

use crate::error::{Error, Result};
use crate::hasse::ModifiedHasseDiagram;
use crate::path::{find_double_drop, Path, Traversal};
use crate::simplex::Simplex;

/// A legal index-2 path between critical simplices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flowline {
    path: Path,
    drop: usize,
    critical: bool,
}

impl Flowline {
    pub fn new(path: Path, h: &ModifiedHasseDiagram) -> Result<Self> {
        if !path.is_legal() {
            return Err(Error::MalformedPath(format!("{path:?} is not legal")));
        }
        let drop = find_double_drop(&path)?;
        let top = path.first().dim();
        if path.nodes().iter().any(|s| s.dim() > top || s.dim() + 2 < top) {
            return Err(Error::MalformedPath(format!(
                "{path} leaves dimensions {}..={top}",
                top - 2
            )));
        }
        for end in [path.first(), path.last()] {
            if !h.is_critical(end) {
                return Err(Error::NotCritical(end.clone()));
            }
        }
        let critical = h.is_critical(&path.nodes()[drop + 1]);
        Ok(Flowline { path, drop, critical })
    }

    pub fn from_simplices(nodes: Vec<Simplex>, h: &ModifiedHasseDiagram) -> Result<Self> {
        Flowline::new(Path::new(nodes, h)?, h)
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn into_path(self) -> Path {
        self.path
    }

    /// Step index at which the double drop begins.
    pub fn double_drop_position(&self) -> usize {
        self.drop
    }

    /// The middle simplex of the double drop.
    pub fn intermediate(&self) -> &Simplex {
        &self.path.nodes()[self.drop + 1]
    }

    /// Whether the intermediate simplex is critical.
    pub fn is_critical(&self) -> bool {
        self.critical
    }
}

impl fmt::Display for Flowline {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.path, f)
    }
}

impl fmt::Debug for Flowline {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.path, f)
    }
}

/// Replaces the middle of the double drop with the other simplex lying
/// between its top and bottom.
pub fn flop(p: &Path, h: &ModifiedHasseDiagram) -> Result<Path> {
    let i = find_double_drop(p)?;
    let nodes = p.nodes();
    let (top, mid, bottom) = (&nodes[i], &nodes[i + 1], &nodes[i + 2]);
    if !bottom.is_face_of(top) {
        return Err(Error::MalformedPath(format!("{bottom} is not a face of {top}")));
    }
    let extra: Vec<_> = top
        .vertices()
        .iter()
        .copied()
        .filter(|v| !bottom.contains(*v))
        .collect();
    let [u, v] = extra[..] else {
        return Err(Error::MalformedPath(format!(
            "{top} and {bottom} do not differ by two vertices"
        )));
    };
    let other = if mid.contains(u) { v } else { u };
    let flipped = bottom.with_vertex(other).expect("vertex not in bottom");
    let (mut nodes, mut traversals) = p.clone().into_parts();
    traversals[i] = h.traversal(top, &flipped)?;
    traversals[i + 1] = h.traversal(&flipped, bottom)?;
    nodes[i + 1] = flipped;
    Ok(Path::from_parts_unchecked(nodes, traversals))
}

/// Splices the matched arrow at the intermediate simplex into `f`.
pub fn insert(f: &Flowline, h: &ModifiedHasseDiagram) -> Result<Path> {
    let k = f.drop + 1;
    let beta = f.intermediate();
    let (partner, flags) = if let Some(head) = h.field().head_of(beta) {
        (head.clone(), [Traversal::Forward, Traversal::Backward])
    } else if let Some(tail) = h.field().tail_of(beta) {
        (tail.clone(), [Traversal::Backward, Traversal::Forward])
    } else {
        return Err(Error::CannotInsert(format!(
            "intermediate simplex {beta} of {f} is critical"
        )));
    };
    let (mut nodes, mut traversals) = f.path.clone().into_parts();
    nodes.splice(k + 1..k + 1, [partner, beta.clone()]);
    traversals.splice(k..k, flags);
    Ok(Path::from_parts_unchecked(nodes, traversals))
}

/// Removes a doubled traversal `X → Y → X` that uses one arrow in both
/// directions.
pub fn cancel(p: &Path) -> Result<Path> {
    let nodes = p.nodes();
    let t = p.traversals();
    let site = (0..p.len().saturating_sub(1)).find(|&i| nodes[i] == nodes[i + 2] && t[i] != t[i + 1]);
    let Some(i) = site else {
        return Err(Error::CannotCancel(format!("{p:?} has no doubled arrow")));
    };
    let (mut nodes, mut traversals) = p.clone().into_parts();
    nodes.drain(i + 1..i + 3);
    traversals.drain(i..i + 2);
    Ok(Path::from_parts_unchecked(nodes, traversals))
}
