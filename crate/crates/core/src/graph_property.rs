//! Complexes of monotone graph properties.
//!
//! The vertices of such a complex are the edges of the complete graph `K_n`;
//! a set of edges spans a simplex when the spanning subgraph it forms has the
//! property. Only nonempty edge sets are simplices.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::simplex::{Simplex, Vertex};

/// An edge `(a, b)` of `K_n` with `a < b`.
pub type Edge = (u32, u32);

type Predicate = Arc<dyn Fn(&[Edge]) -> bool + Send + Sync>;

/// A graph predicate that is expected to be monotone decreasing: removing
/// edges never destroys the property.
#[derive(Clone)]
pub enum GraphProperty {
    /// Edge-colourable with `k` colours.
    EdgeColourable(usize),
    /// At most this many edges.
    MaxEdges(usize),
    /// Every graph vertex has degree at most this.
    MaxDegree(usize),
    Custom {
        name: String,
        predicate: Predicate,
    },
}

impl GraphProperty {
    pub fn custom(name: impl Into<String>, f: impl Fn(&[Edge]) -> bool + Send + Sync + 'static) -> Self {
        GraphProperty::Custom {
            name: name.into(),
            predicate: Arc::new(f),
        }
    }

    pub fn holds(&self, edges: &[Edge]) -> bool {
        match self {
            GraphProperty::EdgeColourable(k) => edge_colourable(edges, *k),
            GraphProperty::MaxEdges(m) => edges.len() <= *m,
            GraphProperty::MaxDegree(d) => max_degree(edges) <= *d,
            GraphProperty::Custom { predicate, .. } => predicate(edges),
        }
    }
}

impl fmt::Debug for GraphProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphProperty::EdgeColourable(k) => write!(f, "EdgeColourable({k})"),
            GraphProperty::MaxEdges(m) => write!(f, "MaxEdges({m})"),
            GraphProperty::MaxDegree(d) => write!(f, "MaxDegree({d})"),
            GraphProperty::Custom { name, .. } => write!(f, "Custom({name})"),
        }
    }
}

/// Edges of `K_n` on graph vertices `0..n`, lexicographically. The complex
/// vertex for an edge is its position in this list.
pub fn edge_list(n: usize) -> Vec<Edge> {
    let n = n as u32;
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

/// The graph edges named by a simplex of a graph-property complex on `K_n`.
pub fn edges_of(simplex: &Simplex, n: usize) -> Vec<Edge> {
    let all = edge_list(n);
    simplex.vertices().iter().map(|&v| all[v as usize]).collect()
}

fn max_degree(edges: &[Edge]) -> usize {
    let mut deg = std::collections::HashMap::<u32, usize>::new();
    for &(a, b) in edges {
        *deg.entry(a).or_default() += 1;
        *deg.entry(b).or_default() += 1;
    }
    deg.values().copied().max().unwrap_or(0)
}

fn edge_colourable(edges: &[Edge], k: usize) -> bool {
    fn assign(edges: &[Edge], colours: &mut Vec<usize>, k: usize) -> bool {
        let i = colours.len();
        if i == edges.len() {
            return true;
        }
        let (a, b) = edges[i];
        // colour symmetry: edge i never needs a colour above max used + 1
        let limit = colours.iter().copied().max().map_or(1, |m| m + 2).min(k);
        for c in 0..limit {
            let clash = edges[..i]
                .iter()
                .zip(colours.iter())
                .any(|(&(x, y), &cc)| cc == c && (x == a || x == b || y == a || y == b));
            if !clash {
                colours.push(c);
                if assign(edges, colours, k) {
                    return true;
                }
                colours.pop();
            }
        }
        false
    }
    if edges.is_empty() {
        return true;
    }
    if k == 0 || max_degree(edges) > k {
        return false;
    }
    assign(edges, &mut Vec::with_capacity(edges.len()), k)
}

/// The complex on `K_n` whose `d`-simplices are the `(d+1)`-edge spanning
/// subgraphs having `prop`.
///
/// Simplices are grown one edge at a time from accepted sets; afterwards
/// every accepted set is checked to have all its facets accepted, which
/// catches non-monotone predicates.
pub fn gen_graph_property_complex(n: usize, prop: &GraphProperty) -> Result<SimplicialComplex> {
    if n < 2 {
        return Err(Error::PropertyViolation(format!(
            "need at least 2 graph vertices, got {n}"
        )));
    }
    let all = edge_list(n);
    let mut accepted: BTreeSet<Simplex> = BTreeSet::new();
    let mut level: Vec<Vec<Vertex>> = (0..all.len() as Vertex)
        .filter(|&e| prop.holds(&[all[e as usize]]))
        .map(|e| vec![e])
        .collect();
    while !level.is_empty() {
        let mut next = Vec::new();
        for set in &level {
            let last = *set.last().expect("nonempty");
            for e in last + 1..all.len() as Vertex {
                let mut grown = set.clone();
                grown.push(e);
                let edges: Vec<Edge> = grown.iter().map(|&v| all[v as usize]).collect();
                if prop.holds(&edges) {
                    next.push(grown);
                }
            }
        }
        for set in level {
            accepted.insert(Simplex::from_sorted(set).expect("increasing"));
        }
        level = next;
    }
    for s in &accepted {
        if let Some(f) = s.facets().into_iter().find(|f| !accepted.contains(f)) {
            return Err(Error::PropertyViolation(format!(
                "{prop:?} holds on {s} but not on its facet {f}"
            )));
        }
    }
    let universe: Vec<Vertex> = accepted
        .iter()
        .filter(|s| s.dim() == 0)
        .map(|s| s.vertices()[0])
        .collect();
    SimplicialComplex::from_closed_set(universe, accepted)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_colourable_on_k3() {
        let k = gen_graph_property_complex(3, &GraphProperty::EdgeColourable(2)).unwrap();
        assert_eq!(k.f_vector(), vec![3, 3]);
    }

    #[test]
    fn at_most_one_edge_on_k3() {
        let k = gen_graph_property_complex(3, &GraphProperty::MaxEdges(1)).unwrap();
        assert_eq!(k.f_vector(), vec![3]);
    }

    /// Count matchings of `K_n` of each size by checking every edge subset.
    fn matchings_by_enumeration(n: usize) -> Vec<usize> {
        let all = edge_list(n);
        let mut counts = vec![0usize; all.len() + 1];
        for mask in 1u32..(1 << all.len()) {
            let edges: Vec<Edge> = (0..all.len())
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| all[i])
                .collect();
            let mut used = BTreeSet::new();
            if edges.iter().all(|&(a, b)| used.insert(a) && used.insert(b)) {
                counts[edges.len()] += 1;
            }
        }
        counts.into_iter().skip(1).take_while(|&c| c > 0).collect()
    }

    #[test]
    fn matching_complex_of_k4() {
        let k = gen_graph_property_complex(4, &GraphProperty::MaxDegree(1)).unwrap();
        assert_eq!(k.f_vector(), vec![6, 3]);
        assert_eq!(k.f_vector(), matchings_by_enumeration(4));
        let k5 = gen_graph_property_complex(5, &GraphProperty::MaxDegree(1)).unwrap();
        assert_eq!(k5.f_vector(), matchings_by_enumeration(5));
    }

    #[test]
    fn colourability_matches_known_cases() {
        // triangle needs three colours, a 4-cycle two
        assert!(!edge_colourable(&[(0, 1), (1, 2), (0, 2)], 2));
        assert!(edge_colourable(&[(0, 1), (1, 2), (0, 2)], 3));
        assert!(edge_colourable(&[(0, 1), (1, 2), (2, 3), (0, 3)], 2));
        // K4 is 3-edge-colourable
        assert!(edge_colourable(&edge_list(4), 3));
        // K5 has odd order, so it needs 5
        assert!(!edge_colourable(&edge_list(5), 4));
        assert!(edge_colourable(&edge_list(5), 5));
    }

    #[test]
    fn non_monotone_predicate_detected() {
        // holds on {01,02} but fails on the single edge 02
        let prop = GraphProperty::custom("weird", |edges: &[Edge]| !(edges.len() == 1 && edges[0] == (0, 2)));
        assert!(matches!(
            gen_graph_property_complex(3, &prop),
            Err(Error::PropertyViolation(_))
        ));
    }

    #[test]
    fn builtins_are_face_closed() {
        for n in 2..=5 {
            for prop in [
                GraphProperty::EdgeColourable(2),
                GraphProperty::EdgeColourable(3),
                GraphProperty::MaxEdges(2),
                GraphProperty::MaxDegree(1),
                GraphProperty::MaxDegree(2),
            ] {
                let k = gen_graph_property_complex(n, &prop).unwrap();
                for s in k.iter() {
                    assert!(s.facets().iter().all(|f| k.contains(f)));
                }
            }
        }
    }

    #[test]
    fn builtins_are_monotone_on_samples() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let all = edge_list(5);
        for _ in 0..500 {
            let big: Vec<Edge> = all.iter().copied().filter(|_| rng.random_bool(0.4)).collect();
            let small: Vec<Edge> = big.iter().copied().filter(|_| rng.random_bool(0.6)).collect();
            for prop in [
                GraphProperty::EdgeColourable(2),
                GraphProperty::MaxEdges(3),
                GraphProperty::MaxDegree(2),
            ] {
                if prop.holds(&big) {
                    assert!(prop.holds(&small), "{prop:?} {big:?} {small:?}");
                }
            }
        }
    }
}
