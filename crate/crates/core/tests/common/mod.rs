#![allow(dead_code)]

use morseflow::field::{critical_simplices, seeded_gradient_field};
use morseflow::presets;
use morseflow::{
    enumerate_flowlines_index2, gen_full_simplex, gen_graph_property_complex, DiscreteVectorField, Flowline,
    GraphProperty, ModifiedHasseDiagram, SimplicialComplex,
};

pub struct Named {
    pub name: String,
    pub complex: SimplicialComplex,
}

/// Full simplices up to dimension 4, the tetrahedron boundary, RP^2, the two
/// triangles, and matching and 2-edge-colourable complexes of K4 and K5.
pub fn corpus() -> Vec<Named> {
    let mut out = Vec::new();
    for n in 0..=4 {
        out.push(Named {
            name: format!("full simplex dim {n}"),
            complex: gen_full_simplex(n),
        });
    }
    out.push(Named {
        name: "tetrahedron boundary".into(),
        complex: presets::sphere().0,
    });
    out.push(Named {
        name: "RP^2".into(),
        complex: presets::rp2().0,
    });
    out.push(Named {
        name: "two triangles".into(),
        complex: presets::two_triangles(),
    });
    for n in [4, 5] {
        for (label, prop) in [
            ("matching", GraphProperty::MaxDegree(1)),
            ("2-edge-colourable", GraphProperty::EdgeColourable(2)),
        ] {
            out.push(Named {
                name: format!("{label} K{n}"),
                complex: gen_graph_property_complex(n, &prop).unwrap(),
            });
        }
    }
    out
}

pub struct Case {
    pub name: String,
    pub h: ModifiedHasseDiagram,
}

/// `per_complex` seeded random gradient fields on every corpus complex, plus
/// the preset fields.
pub fn cases(per_complex: u64) -> Vec<Case> {
    let mut out = Vec::new();
    for c in corpus() {
        for seed in 0..per_complex {
            let density = [1.0, 0.9, 0.7, 0.5][(seed % 4) as usize];
            let v = seeded_gradient_field(&c.complex, seed, density);
            out.push(Case {
                name: format!("{} seed {seed}", c.name),
                h: ModifiedHasseDiagram::new(c.complex.clone(), v).unwrap(),
            });
        }
    }
    let (k, v) = presets::sphere();
    out.push(Case {
        name: "sphere preset".into(),
        h: ModifiedHasseDiagram::new(k, v).unwrap(),
    });
    let (k, v) = presets::rp2();
    out.push(Case {
        name: "RP^2 preset".into(),
        h: ModifiedHasseDiagram::new(k, v).unwrap(),
    });
    out.push(Case {
        name: "two-triangle preset".into(),
        h: ModifiedHasseDiagram::new(presets::two_triangles(), presets::two_triangle_field()).unwrap(),
    });
    out
}

pub fn canonical(k: &SimplicialComplex) -> ModifiedHasseDiagram {
    ModifiedHasseDiagram::new(k.clone(), DiscreteVectorField::empty()).unwrap()
}

/// Every pair of critical simplices two dimensions apart with the
/// flowlines between them.
pub fn index_two_families(h: &ModifiedHasseDiagram) -> Vec<Vec<Flowline>> {
    let top = h.complex().top_dimension().unwrap_or(0);
    let mut out = Vec::new();
    for p in 2..=top {
        for alpha in critical_simplices(h.complex(), h.field(), p) {
            for gamma in critical_simplices(h.complex(), h.field(), p - 2) {
                out.push(enumerate_flowlines_index2(h, &alpha, &gamma, None).unwrap());
            }
        }
    }
    out
}
