//! Exhaustive enumeration of flowlines between critical simplices.

use crate::error::{Error, Result};
use crate::floperation::Flowline;
use crate::hasse::ModifiedHasseDiagram;
use crate::path::{Path, Traversal};
use crate::simplex::Simplex;

fn check_endpoints(h: &ModifiedHasseDiagram, alpha: &Simplex, gamma: &Simplex, index: usize) -> Result<()> {
    for s in [alpha, gamma] {
        if !h.complex().contains(s) {
            return Err(Error::NotInComplex(s.clone()));
        }
        if !h.is_critical(s) {
            return Err(Error::NotCritical(s.clone()));
        }
    }
    if alpha.dim() != gamma.dim() + index {
        return Err(Error::DimensionMismatch(format!(
            "expected dim {alpha} = dim {gamma} + {index}"
        )));
    }
    Ok(())
}

/// All forward paths from `alpha` to `gamma` that stay between their
/// dimensions and never rise twice in a row.
fn forward_paths(
    h: &ModifiedHasseDiagram,
    alpha: &Simplex,
    gamma: &Simplex,
    max_len: Option<usize>,
) -> Result<Vec<Path>> {
    if max_len.is_none() && !h.is_gradient() {
        return Err(Error::UnboundedEnumeration);
    }
    let limit = max_len.unwrap_or(usize::MAX);
    let (lo, hi) = (gamma.dim(), alpha.dim());
    let mut out = Vec::new();
    let mut stack = vec![alpha.clone()];
    // each frame holds the remaining successors of the simplex at that depth
    let mut frames: Vec<Vec<Simplex>> = Vec::new();
    let successors = |s: &Simplex, rose: bool| -> Vec<Simplex> {
        let mut next: Vec<Simplex> = if s.dim() > lo { h.down_targets(s) } else { Vec::new() };
        if !rose && s.dim() < hi {
            next.extend(h.up_target(s).cloned());
        }
        next.reverse();
        next
    };
    frames.push(successors(alpha, false));
    while let Some(frame) = frames.last_mut() {
        let Some(next) = frame.pop() else {
            frames.pop();
            stack.pop();
            continue;
        };
        let here = stack.last().expect("stack tracks frames");
        let rose = next.dim() > here.dim();
        if &next == gamma {
            let mut nodes = stack.clone();
            nodes.push(next);
            let flags = vec![Traversal::Forward; nodes.len() - 1];
            out.push(Path::from_parts_unchecked(nodes, flags));
            continue;
        }
        if stack.len() >= limit {
            continue;
        }
        frames.push(successors(&next, rose));
        stack.push(next);
    }
    out.sort();
    Ok(out)
}

/// Index-1 V-paths `alpha → beta` of at most `max_len` steps. A cap is
/// required when the field has a closed V-path.
pub fn enumerate_flowlines_index1(
    h: &ModifiedHasseDiagram,
    alpha: &Simplex,
    beta: &Simplex,
    max_len: Option<usize>,
) -> Result<Vec<Path>> {
    check_endpoints(h, alpha, beta, 1)?;
    forward_paths(h, alpha, beta, max_len)
}

/// Index-2 flowlines `alpha → gamma` of at most `max_len` steps, sorted.
pub fn enumerate_flowlines_index2(
    h: &ModifiedHasseDiagram,
    alpha: &Simplex,
    gamma: &Simplex,
    max_len: Option<usize>,
) -> Result<Vec<Flowline>> {
    check_endpoints(h, alpha, gamma, 2)?;
    forward_paths(h, alpha, gamma, max_len)?
        .into_iter()
        .map(|p| Flowline::new(p, h))
        .collect()
}
