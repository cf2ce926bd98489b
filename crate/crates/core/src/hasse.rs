//! The signed modified Hasse diagram of a complex with a vector field.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::field::{self, DiscreteVectorField};
use crate::path::Traversal;
use crate::simplex::Simplex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ArrowKind {
    /// From a simplex to one of its facets.
    BoundaryDown,
    /// A matched pair, pointing from the facet up to the simplex.
    MorseUp,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub source: Simplex,
    pub target: Simplex,
    pub kind: ArrowKind,
    pub sign: i8,
}

/// `(-1)^i` where `face` is `simplex` with its `i`-th vertex removed.
pub fn arrow_sign(simplex: &Simplex, face: &Simplex) -> Result<i8> {
    match simplex.facet_position(face) {
        Some(i) if i % 2 == 0 => Ok(1),
        Some(_) => Ok(-1),
        None => Err(Error::NotAFacet {
            simplex: simplex.clone(),
            face: face.clone(),
        }),
    }
}

/// Hasse diagram with every matched arrow reversed to point up.
#[derive(Clone, Debug)]
pub struct ModifiedHasseDiagram {
    complex: SimplicialComplex,
    field: DiscreteVectorField,
    gradient: bool,
}

impl ModifiedHasseDiagram {
    /// Fails when `field` is not a valid vector field on `complex`.
    pub fn new(complex: SimplicialComplex, field: DiscreteVectorField) -> Result<Self> {
        field::ensure_valid(&field, &complex)?;
        let gradient = field::is_gradient(&field, &complex);
        Ok(ModifiedHasseDiagram {
            complex,
            field,
            gradient,
        })
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn field(&self) -> &DiscreteVectorField {
        &self.field
    }

    /// Whether the field has no closed V-path.
    pub fn is_gradient(&self) -> bool {
        self.gradient
    }

    pub fn is_critical(&self, s: &Simplex) -> bool {
        self.field.is_critical(s)
    }

    /// One arrow per facet relation, ordered by the larger simplex and then
    /// by removed vertex position.
    pub fn arrows(&self) -> Vec<Arrow> {
        let mut out = Vec::with_capacity(self.complex.facet_relation_count());
        for s in self.complex.iter() {
            for (i, f) in s.facets().into_iter().enumerate() {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                let arrow = if self.field.contains_pair(&f, s) {
                    Arrow {
                        source: f,
                        target: s.clone(),
                        kind: ArrowKind::MorseUp,
                        sign,
                    }
                } else {
                    Arrow {
                        source: s.clone(),
                        target: f,
                        kind: ArrowKind::BoundaryDown,
                        sign,
                    }
                };
                out.push(arrow);
            }
        }
        out
    }

    /// Whether moving `from → to` follows or opposes the diagram's arrow.
    pub fn traversal(&self, from: &Simplex, to: &Simplex) -> Result<Traversal> {
        if !self.complex.contains(from) {
            return Err(Error::NotInComplex(from.clone()));
        }
        if !self.complex.contains(to) {
            return Err(Error::NotInComplex(to.clone()));
        }
        if from.facet_position(to).is_some() {
            Ok(if self.field.contains_pair(to, from) {
                Traversal::Backward
            } else {
                Traversal::Forward
            })
        } else if to.facet_position(from).is_some() {
            Ok(if self.field.contains_pair(from, to) {
                Traversal::Forward
            } else {
                Traversal::Backward
            })
        } else {
            Err(Error::MalformedPath(format!(
                "{from} and {to} are not joined by an arrow"
            )))
        }
    }

    /// Targets of the boundary-down arrows leaving `s`.
    pub fn down_targets(&self, s: &Simplex) -> Vec<Simplex> {
        let paired = self.field.tail_of(s);
        s.facets().into_iter().filter(|f| Some(f) != paired).collect()
    }

    /// Target of the Morse-up arrow leaving `s`, if `s` is a tail.
    pub fn up_target(&self, s: &Simplex) -> Option<&Simplex> {
        self.field.head_of(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;
    use crate::simplex::simplex;

    #[test]
    fn sign_examples() {
        let s = simplex(&[1, 2, 3]);
        assert_eq!(arrow_sign(&s, &simplex(&[1, 3])), Ok(-1));
        assert_eq!(arrow_sign(&s, &simplex(&[2, 3])), Ok(1));
        assert_eq!(arrow_sign(&s, &simplex(&[1, 2])), Ok(1));
        assert!(arrow_sign(&s, &simplex(&[1])).is_err());
        assert!(arrow_sign(&s, &simplex(&[1, 4])).is_err());
    }

    fn count(h: &ModifiedHasseDiagram) -> (usize, usize) {
        let arrows = h.arrows();
        let up = arrows.iter().filter(|a| a.kind == ArrowKind::MorseUp).count();
        (arrows.len(), up)
    }

    #[test]
    fn two_triangle_diagram() {
        let h = ModifiedHasseDiagram::new(presets::two_triangles(), presets::two_triangle_field()).unwrap();
        assert_eq!(count(&h), (16, 5));
        let up: Vec<(Simplex, Simplex)> = h
            .arrows()
            .into_iter()
            .filter(|a| a.kind == ArrowKind::MorseUp)
            .map(|a| (a.source, a.target))
            .collect();
        assert!(up.contains(&(simplex(&[1, 3]), simplex(&[1, 2, 3]))));
        assert!(up.contains(&(simplex(&[3, 4]), simplex(&[2, 3, 4]))));
    }

    #[test]
    fn canonical_diagram_all_down() {
        let h = ModifiedHasseDiagram::new(presets::two_triangles(), DiscreteVectorField::empty()).unwrap();
        assert_eq!(count(&h), (16, 0));
    }

    #[test]
    fn sphere_diagram() {
        let (k, v) = presets::sphere();
        let h = ModifiedHasseDiagram::new(k, v).unwrap();
        assert_eq!(count(&h), (24, 6));
    }

    #[test]
    fn no_relation_has_both_directions() {
        let (k, v) = presets::rp2();
        let h = ModifiedHasseDiagram::new(k, v).unwrap();
        let arrows = h.arrows();
        for a in &arrows {
            assert!(!arrows.iter().any(|b| b.source == a.target && b.target == a.source));
        }
        for a in &arrows {
            let big = if a.kind == ArrowKind::MorseUp {
                &a.target
            } else {
                &a.source
            };
            let small = if a.kind == ArrowKind::MorseUp {
                &a.source
            } else {
                &a.target
            };
            assert_eq!(arrow_sign(big, small), Ok(a.sign));
        }
    }

    #[test]
    fn invalid_field_rejected() {
        let k = presets::two_triangles();
        let v = DiscreteVectorField::new([(simplex(&[1]), simplex(&[2, 3]))]);
        assert!(matches!(ModifiedHasseDiagram::new(k, v), Err(Error::InvalidField(_))));
    }

    #[test]
    fn traversal_directions() {
        let (k, v) = presets::sphere();
        let h = ModifiedHasseDiagram::new(k, v).unwrap();
        let t = |a: &[u32], b: &[u32]| h.traversal(&simplex(a), &simplex(b)).unwrap();
        assert_eq!(t(&[1, 2, 3], &[1, 2]), Traversal::Forward);
        assert_eq!(t(&[1, 2], &[1, 2, 4]), Traversal::Forward);
        assert_eq!(t(&[1, 2, 4], &[1, 2]), Traversal::Backward);
        assert_eq!(t(&[1, 4], &[1]), Traversal::Backward);
        assert_eq!(t(&[1], &[1, 2]), Traversal::Backward);
        assert!(h.traversal(&simplex(&[1]), &simplex(&[2, 3])).is_err());
    }
}
