//! Moduli spaces of index-2 flowlines as graphs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::algorithm::{advance, Label};
use crate::enumerate::enumerate_flowlines_index2;
use crate::error::{Error, Result};
use crate::floperation::Flowline;
use crate::hasse::ModifiedHasseDiagram;
use crate::path::path_sign;
use crate::simplex::Simplex;

/// Flowlines `alpha → gamma` joined when one algorithm step leads from one
/// to the other.
#[derive(Clone, Debug)]
pub struct ModuliSpace {
    pub alpha: Simplex,
    pub gamma: Simplex,
    vertices: Vec<Flowline>,
    edges: BTreeSet<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComponentKind {
    Path,
    Cycle,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub kind: ComponentKind,
    /// Members in walking order.
    pub flowlines: Vec<Flowline>,
    /// The two ends of a path component; empty for a cycle.
    pub endpoints: Vec<Flowline>,
}

impl ModuliSpace {
    /// Sorted vertex list.
    pub fn vertices(&self) -> &[Flowline] {
        &self.vertices
    }

    /// Edges as sorted index pairs into [`vertices`](Self::vertices).
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn index_of(&self, f: &Flowline) -> Option<usize> {
        self.vertices.binary_search(f).ok()
    }

    /// Connected components, ordered by their smallest member.
    pub fn components(&self) -> Vec<Component> {
        let mut seen = vec![false; self.vertices.len()];
        let mut out = Vec::new();
        for start in 0..self.vertices.len() {
            if seen[start] {
                continue;
            }
            let mut members = Vec::new();
            let mut queue = vec![start];
            seen[start] = true;
            while let Some(v) = queue.pop() {
                members.push(v);
                for &w in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push(w);
                    }
                }
            }
            members.sort_unstable();
            let ends: Vec<usize> = members.iter().copied().filter(|&v| self.degree(v) <= 1).collect();
            let kind = if ends.is_empty() {
                ComponentKind::Cycle
            } else {
                ComponentKind::Path
            };
            let order = self.walk(ends.first().copied().unwrap_or(members[0]), members.len());
            out.push(Component {
                kind,
                flowlines: order.iter().map(|&v| self.vertices[v].clone()).collect(),
                endpoints: ends.iter().map(|&v| self.vertices[v].clone()).collect(),
            });
        }
        out
    }

    fn walk(&self, start: usize, len: usize) -> Vec<usize> {
        let mut order = vec![start];
        let mut prev = None;
        let mut here = start;
        while order.len() < len {
            let next = self.adjacency[here]
                .iter()
                .copied()
                .find(|&w| Some(w) != prev && !order.contains(&w));
            let Some(next) = next else { break };
            prev = Some(here);
            here = next;
            order.push(next);
        }
        order
    }

    /// Vertices of degree at most one with their signs.
    pub fn boundary(&self) -> Vec<(Flowline, i8)> {
        (0..self.vertices.len())
            .filter(|&v| self.degree(v) <= 1)
            .map(|v| (self.vertices[v].clone(), path_sign(self.vertices[v].path())))
            .collect()
    }

    /// Undirected DOT graph with boundary vertices double-circled.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "graph moduli {{").unwrap();
        writeln!(out, "  label=\"M({}, {})\";", self.alpha, self.gamma).unwrap();
        for (i, f) in self.vertices.iter().enumerate() {
            let shape = if self.degree(i) <= 1 { "doublecircle" } else { "circle" };
            writeln!(out, "  n{i} [label=\"{f}\", shape={shape}];").unwrap();
        }
        for (a, b) in &self.edges {
            writeln!(out, "  n{a} -- n{b};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

/// Builds `M(alpha, gamma)`.
///
/// With `max_len` set, edges to flowlines beyond the cap are dropped.
/// Without it the field must be gradient, and an edge leaving the
/// enumerated set or a vertex of degree above two is an internal error.
pub fn build_moduli(
    h: &ModifiedHasseDiagram,
    alpha: &Simplex,
    gamma: &Simplex,
    max_len: Option<usize>,
) -> Result<ModuliSpace> {
    let vertices = enumerate_flowlines_index2(h, alpha, gamma, max_len)?;
    let index: BTreeMap<&Flowline, usize> = vertices.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let mut edges = BTreeSet::new();
    for (i, f) in vertices.iter().enumerate() {
        let mut labels = vec![Label::C];
        if !f.is_critical() {
            labels.push(Label::F);
        }
        for label in labels {
            let (g, _) = advance(h, f, label)?;
            match index.get(&g) {
                Some(&j) => {
                    edges.insert((i.min(j), i.max(j)));
                }
                None if max_len.is_some() => {}
                None => {
                    return Err(Error::InternalInvariant(format!(
                        "successor {g} of {f} is not among the enumerated flowlines"
                    )))
                }
            }
        }
    }
    let mut adjacency = vec![Vec::new(); vertices.len()];
    for &(a, b) in &edges {
        adjacency[a].push(b);
        adjacency[b].push(a);
    }
    if let Some(v) = adjacency.iter().position(|n| n.len() > 2) {
        return Err(Error::InternalInvariant(format!(
            "flowline {} has {} neighbours in the moduli space",
            vertices[v],
            adjacency[v].len()
        )));
    }
    Ok(ModuliSpace {
        alpha: alpha.clone(),
        gamma: gamma.clone(),
        vertices,
        edges,
        adjacency,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::SimplicialComplex;
    use crate::field::DiscreteVectorField;
    use crate::presets;
    use crate::simplex::simplex;

    #[test]
    fn sphere_is_one_cycle() {
        let (k, v) = presets::sphere();
        let h = ModifiedHasseDiagram::new(k, v).unwrap();
        let m = build_moduli(&h, &simplex(&[1, 2, 3]), &simplex(&[4]), None).unwrap();
        let comps = m.components();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].kind, ComponentKind::Cycle);
        assert_eq!(comps[0].flowlines.len(), 12);
        assert!(m.boundary().is_empty());
        assert_eq!(m.edge_count(), 12);
    }

    #[test]
    fn rp2_has_two_paths() {
        let (k, v) = presets::rp2();
        let h = ModifiedHasseDiagram::new(k, v).unwrap();
        let m = build_moduli(&h, &simplex(&[4, 5, 6]), &simplex(&[1]), None).unwrap();
        let comps = m.components();
        let kinds: Vec<_> = comps.iter().map(|c| c.kind).collect();
        assert_eq!(kinds, vec![ComponentKind::Path, ComponentKind::Path]);
        let boundary = m.boundary();
        assert_eq!(boundary.len(), 4);
        assert_eq!(boundary.iter().map(|(_, s)| *s as i32).sum::<i32>(), 0);
        for c in &comps {
            assert_eq!(c.endpoints.len(), 2);
            let s: Vec<i8> = c.endpoints.iter().map(|f| path_sign(f.path())).collect();
            assert_eq!(s[0], -s[1]);
            assert_eq!(c.flowlines.first(), c.endpoints.first());
            assert_eq!(c.flowlines.last(), c.endpoints.last());
        }
    }

    #[test]
    fn canonical_triangle_is_one_edge() {
        let k = SimplicialComplex::build(&[simplex(&[1, 2, 3])]);
        let h = ModifiedHasseDiagram::new(k, DiscreteVectorField::empty()).unwrap();
        let m = build_moduli(&h, &simplex(&[1, 2, 3]), &simplex(&[1]), None).unwrap();
        assert_eq!(m.vertices().len(), 2);
        assert_eq!(m.edge_count(), 1);
        let signs: BTreeSet<i8> = m.boundary().into_iter().map(|(_, s)| s).collect();
        assert_eq!(signs, BTreeSet::from([-1, 1]));
        let dot = m.to_dot();
        assert!(dot.contains("n0 -- n1;"));
        assert_eq!(dot.matches("doublecircle").count(), 2);
    }
}
