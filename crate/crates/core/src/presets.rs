//! Worked example complexes with their vector fields.

use crate::complex::SimplicialComplex;
use crate::field::{DiscreteVectorField, MorseFunction};
use crate::simplex::{simplex, Simplex};

fn pairs(list: &[(&[u32], &[u32])]) -> DiscreteVectorField {
    DiscreteVectorField::new(list.iter().map(|(t, h)| (simplex(t), simplex(h))))
}

/// Two triangles `123` and `234` glued along `23`.
pub fn two_triangles() -> SimplicialComplex {
    SimplicialComplex::build(&[simplex(&[1, 2, 3]), simplex(&[2, 3, 4])])
}

/// Morse values on [`two_triangles`] whose only critical simplex is `4`.
pub fn two_triangle_morse_function() -> MorseFunction {
    let values: [(&[u32], f64); 11] = [
        (&[1], 3.0),
        (&[2], 1.5),
        (&[3], 2.1),
        (&[4], 0.0),
        (&[1, 2], 2.0),
        (&[1, 3], 15.0),
        (&[2, 3], 2.0),
        (&[2, 4], 1.2),
        (&[3, 4], 12.0),
        (&[1, 2, 3], 13.0),
        (&[2, 3, 4], 11.0),
    ];
    MorseFunction::new(values.iter().map(|(s, v)| (simplex(s), *v)))
}

/// The gradient of [`two_triangle_morse_function`].
pub fn two_triangle_field() -> DiscreteVectorField {
    pairs(&[
        (&[1], &[1, 2]),
        (&[2], &[2, 4]),
        (&[3], &[2, 3]),
        (&[1, 3], &[1, 2, 3]),
        (&[3, 4], &[2, 3, 4]),
    ])
}

/// Boundary of the tetrahedron on `1..=4` with critical cells `123` and `4`.
pub fn sphere() -> (SimplicialComplex, DiscreteVectorField) {
    let k = SimplicialComplex::build(&[
        simplex(&[1, 2, 3]),
        simplex(&[1, 2, 4]),
        simplex(&[1, 3, 4]),
        simplex(&[2, 3, 4]),
    ]);
    let v = pairs(&[
        (&[1, 2], &[1, 2, 4]),
        (&[1, 3], &[1, 3, 4]),
        (&[2, 3], &[2, 3, 4]),
        (&[1], &[1, 4]),
        (&[2], &[2, 4]),
        (&[3], &[3, 4]),
    ]);
    (k, v)
}

/// The flowline `123 → 12 → 124 → 14 → 4` on [`sphere`].
pub fn sphere_flowline() -> Vec<Simplex> {
    [&[1, 2, 3][..], &[1, 2], &[1, 2, 4], &[1, 4], &[4]]
        .iter()
        .map(|s| simplex(s))
        .collect()
}

/// The six-vertex triangulation of the real projective plane.
///
/// Critical cells are the triangle `456`, the edge `13` and the vertex `1`.
pub fn rp2() -> (SimplicialComplex, DiscreteVectorField) {
    let triangles: [&[u32]; 10] = [
        &[1, 2, 4],
        &[1, 2, 6],
        &[1, 3, 4],
        &[1, 3, 5],
        &[1, 5, 6],
        &[2, 3, 5],
        &[2, 3, 6],
        &[2, 4, 5],
        &[3, 4, 6],
        &[4, 5, 6],
    ];
    let k = SimplicialComplex::build(&triangles.iter().map(|t| simplex(t)).collect::<Vec<_>>());
    let v = pairs(&[
        (&[2], &[1, 2]),
        (&[3], &[2, 3]),
        (&[4], &[2, 4]),
        (&[5], &[3, 5]),
        (&[6], &[1, 6]),
        (&[1, 4], &[1, 2, 4]),
        (&[1, 5], &[1, 3, 5]),
        (&[2, 5], &[2, 3, 5]),
        (&[2, 6], &[1, 2, 6]),
        (&[3, 4], &[1, 3, 4]),
        (&[3, 6], &[2, 3, 6]),
        (&[4, 5], &[2, 4, 5]),
        (&[4, 6], &[3, 4, 6]),
        (&[5, 6], &[1, 5, 6]),
    ]);
    (k, v)
}

/// Critical flowline `456 → 46 → 346 → 34 → 134 → 13 → 1` on [`rp2`].
pub fn rp2_first_flowline() -> Vec<Simplex> {
    [&[4, 5, 6][..], &[4, 6], &[3, 4, 6], &[3, 4], &[1, 3, 4], &[1, 3], &[1]]
        .iter()
        .map(|s| simplex(s))
        .collect()
}

/// The critical flowline [`rp2_first_flowline`] evolves into.
pub fn rp2_partner_flowline() -> Vec<Simplex> {
    [
        &[4, 5, 6][..],
        &[5, 6],
        &[1, 5, 6],
        &[1, 5],
        &[1, 3, 5],
        &[1, 3],
        &[3],
        &[2, 3],
        &[2],
        &[1, 2],
        &[1],
    ]
    .iter()
    .map(|s| simplex(s))
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{critical_simplices, validate_field};

    #[test]
    fn sphere_shape() {
        let (k, v) = sphere();
        assert_eq!(k.f_vector(), vec![4, 6, 4]);
        assert_eq!(k.euler_characteristic(), 2);
        assert_eq!(v.len(), 6);
        assert_eq!(validate_field(&v, &k), Ok(()));
        let critical: Vec<Simplex> = k.iter().filter(|s| v.is_critical(s)).cloned().collect();
        assert_eq!(critical, vec![simplex(&[4]), simplex(&[1, 2, 3])]);
    }

    #[test]
    fn rp2_shape() {
        let (k, v) = rp2();
        assert_eq!(k.f_vector(), vec![6, 15, 10]);
        assert_eq!(k.euler_characteristic(), 1);
        assert_eq!(validate_field(&v, &k), Ok(()));
        assert_eq!(critical_simplices(&k, &v, 0), vec![simplex(&[1])]);
        assert_eq!(critical_simplices(&k, &v, 1), vec![simplex(&[1, 3])]);
        assert_eq!(critical_simplices(&k, &v, 2), vec![simplex(&[4, 5, 6])]);
        // every edge lies in exactly two triangles
        for e in k.simplices(1) {
            assert_eq!(k.cofacets(e).unwrap().len(), 2, "{e}");
        }
    }

    #[test]
    fn two_triangle_field_admits_caption_vpath() {
        let v = two_triangle_field();
        assert!(v.contains_pair(&simplex(&[1, 3]), &simplex(&[1, 2, 3])));
        assert!(v.contains_pair(&simplex(&[2]), &simplex(&[2, 4])));
        assert_eq!(validate_field(&v, &two_triangles()), Ok(()));
    }
}
