//! Finite abstract simplicial complexes.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::simplex::{Simplex, Vertex};

/// A face-closed family of simplices over a declared vertex universe.
///
/// Simplices are grouped by dimension and stored in lexicographic order.
/// Each simplex also has a dense id: ids run through dimension 0 first,
/// then dimension 1, and so on, lexicographically within a dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<Vertex>,
    by_dim: Vec<Vec<Simplex>>,
    cells: Vec<Simplex>,
    index: HashMap<Simplex, usize>,
}

impl SimplicialComplex {
    /// Downward closure of `maximal`. The vertex universe is the union of
    /// the input vertices.
    pub fn build(maximal: &[Simplex]) -> Self {
        let universe: BTreeSet<Vertex> = maximal.iter().flat_map(|s| s.vertices().iter().copied()).collect();
        Self::closure(universe.into_iter().collect(), maximal)
    }

    /// Downward closure of `maximal` over an explicit vertex universe. Every
    /// universe vertex becomes a 0-simplex.
    pub fn with_vertices(vertices: &[Vertex], maximal: &[Simplex]) -> Result<Self> {
        if vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::MalformedSimplex(
                "vertex universe must be strictly increasing".into(),
            ));
        }
        for s in maximal {
            if let Some(v) = s.vertices().iter().find(|v| vertices.binary_search(v).is_err()) {
                return Err(Error::MalformedSimplex(format!(
                    "simplex {s} uses vertex {v} outside the vertex universe"
                )));
            }
        }
        let mut all = maximal.to_vec();
        all.extend(vertices.iter().map(|&v| Simplex::vertex(v)));
        Ok(Self::closure(vertices.to_vec(), &all))
    }

    /// Like [`build`](Self::build) but from raw vertex lists, rejecting
    /// lists with repeated vertices.
    pub fn from_vertex_lists(lists: &[Vec<Vertex>]) -> Result<Self> {
        let maximal = lists
            .iter()
            .map(|l| Simplex::new(l.clone()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::build(&maximal))
    }

    /// Builds a complex from a set that is claimed to be face-closed already.
    pub fn from_closed_set(vertices: Vec<Vertex>, simplices: BTreeSet<Simplex>) -> Result<Self> {
        for s in &simplices {
            if let Some(f) = s.facets().into_iter().find(|f| !simplices.contains(f)) {
                return Err(Error::MalformedSimplex(format!(
                    "set is not face-closed: facet {f} of {s} is missing"
                )));
            }
        }
        Ok(Self::from_set(vertices, simplices))
    }

    fn closure(vertices: Vec<Vertex>, maximal: &[Simplex]) -> Self {
        let mut set: BTreeSet<Simplex> = BTreeSet::new();
        let mut stack: Vec<Simplex> = maximal.to_vec();
        while let Some(s) = stack.pop() {
            if set.contains(&s) {
                continue;
            }
            stack.extend(s.facets());
            set.insert(s);
        }
        Self::from_set(vertices, set)
    }

    fn from_set(vertices: Vec<Vertex>, set: BTreeSet<Simplex>) -> Self {
        let top = set.iter().map(Simplex::dim).max();
        let mut by_dim: Vec<Vec<Simplex>> = vec![Vec::new(); top.map_or(0, |t| t + 1)];
        for s in set {
            by_dim[s.dim()].push(s);
        }
        let cells: Vec<Simplex> = by_dim.iter().flatten().cloned().collect();
        let index = cells.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        SimplicialComplex {
            vertices,
            by_dim,
            cells,
            index,
        }
    }

    pub fn vertex_universe(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// `None` for the empty complex.
    pub fn top_dimension(&self) -> Option<usize> {
        self.by_dim.len().checked_sub(1)
    }

    /// The `p`-simplices in lexicographic order (empty past the top dimension).
    pub fn simplices(&self, p: usize) -> &[Simplex] {
        self.by_dim.get(p).map_or(&[], Vec::as_slice)
    }

    /// All simplices, dimension-major.
    pub fn iter(&self) -> impl Iterator<Item = &Simplex> {
        self.cells.iter()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.index.contains_key(s)
    }

    pub fn id_of(&self, s: &Simplex) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn cell(&self, id: usize) -> &Simplex {
        &self.cells[id]
    }

    /// Every `τ` in the complex having `σ` as a facet, in lexicographic order.
    pub fn cofacets(&self, s: &Simplex) -> Result<Vec<Simplex>> {
        if !self.contains(s) {
            return Err(Error::NotInComplex(s.clone()));
        }
        let mut out: Vec<Simplex> = self
            .vertices
            .iter()
            .filter_map(|&v| s.with_vertex(v))
            .filter(|t| self.contains(t))
            .collect();
        out.sort();
        Ok(out)
    }

    /// Simplices that are not a facet of anything, in id order.
    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        self.cells
            .iter()
            .filter(|s| self.cofacets(s).map(|c| c.is_empty()).unwrap_or(false))
            .cloned()
            .collect()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.by_dim.iter().map(Vec::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.by_dim
            .iter()
            .enumerate()
            .map(|(p, s)| if p % 2 == 0 { s.len() as i64 } else { -(s.len() as i64) })
            .sum()
    }

    /// Number of (simplex, facet) pairs.
    pub fn facet_relation_count(&self) -> usize {
        self.cells.iter().filter(|s| s.dim() > 0).map(|s| s.dim() + 1).sum()
    }
}

/// The full `n`-simplex on vertices `0..=n`.
pub fn gen_full_simplex(n: usize) -> SimplicialComplex {
    let top = Simplex::from_sorted((0..=n as Vertex).collect()).expect("increasing");
    SimplicialComplex::build(&[top])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplex::simplex;

    fn two_triangles() -> SimplicialComplex {
        SimplicialComplex::build(&[simplex(&[1, 2, 3]), simplex(&[2, 3, 4])])
    }

    #[test]
    fn closure_of_one_triangle() {
        let k = SimplicialComplex::build(&[simplex(&[1, 2, 3])]);
        assert_eq!(k.len(), 7);
        assert_eq!(k.f_vector(), vec![3, 3, 1]);
        assert_eq!(k.simplices(1), &[simplex(&[1, 2]), simplex(&[1, 3]), simplex(&[2, 3])]);
    }

    #[test]
    fn closure_of_two_triangles() {
        let k = two_triangles();
        assert_eq!(k.len(), 11);
        assert_eq!(k.f_vector(), vec![4, 5, 2]);
        assert_eq!(k.euler_characteristic(), 1);
        assert_eq!(k.facet_relation_count(), 16);
    }

    #[test]
    fn empty_complex() {
        let k = SimplicialComplex::build(&[]);
        assert!(k.is_empty());
        assert_eq!(k.top_dimension(), None);
        assert!(k.simplices(0).is_empty());
    }

    #[test]
    fn duplicate_vertices_rejected() {
        assert!(matches!(
            SimplicialComplex::from_vertex_lists(&[vec![1, 2, 2]]),
            Err(Error::MalformedSimplex(_))
        ));
    }

    /// Brute-force scan over every simplex of the complex.
    fn cofacets_by_scan(k: &SimplicialComplex, s: &Simplex) -> Vec<Simplex> {
        k.iter().filter(|t| t.facet_position(s).is_some()).cloned().collect()
    }

    #[test]
    fn cofacets_in_two_triangles() {
        let k = two_triangles();
        assert_eq!(
            k.cofacets(&simplex(&[2, 3])).unwrap(),
            vec![simplex(&[1, 2, 3]), simplex(&[2, 3, 4])]
        );
        assert!(k.cofacets(&simplex(&[1, 2, 3])).unwrap().is_empty());
        assert_eq!(
            k.cofacets(&simplex(&[4])).unwrap(),
            vec![simplex(&[2, 4]), simplex(&[3, 4])]
        );
        for s in k.iter() {
            assert_eq!(k.cofacets(s).unwrap(), cofacets_by_scan(&k, s));
        }
        assert!(matches!(k.cofacets(&simplex(&[1, 4])), Err(Error::NotInComplex(_))));
    }

    #[test]
    fn full_simplices() {
        assert_eq!(gen_full_simplex(0).len(), 1);
        assert_eq!(gen_full_simplex(2).len(), 7);
        assert_eq!(gen_full_simplex(3).len(), 15);
        for n in 0..=5 {
            let k = gen_full_simplex(n);
            assert_eq!(k.len(), (1 << (n + 1)) - 1);
            assert_eq!(k.euler_characteristic(), 1);
        }
    }

    #[test]
    fn universe_is_checked() {
        assert!(SimplicialComplex::with_vertices(&[1, 2], &[simplex(&[1, 3])]).is_err());
        assert!(SimplicialComplex::with_vertices(&[2, 1], &[]).is_err());
        let k = SimplicialComplex::with_vertices(&[1, 2, 5], &[simplex(&[1, 2])]).unwrap();
        assert_eq!(k.f_vector(), vec![3, 1]);
        assert_eq!(k.maximal_simplices(), vec![simplex(&[5]), simplex(&[1, 2])]);
    }

    #[test]
    fn face_closure_holds() {
        let k = two_triangles();
        for s in k.iter() {
            let facets = s.facets();
            if s.dim() >= 1 {
                assert_eq!(facets.len(), s.dim() + 1);
            }
            assert!(facets.iter().all(|f| k.contains(f)));
        }
    }
}
