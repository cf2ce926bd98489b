//! Discrete Morse theory on finite simplicial complexes: flowlines and the
//! floperations acting on them, the labelled flowline algorithm, moduli
//! spaces of index-2 flowlines, and Morse homology over the integers.

pub mod algorithm;
pub mod complex;
pub mod enumerate;
pub mod error;
pub mod field;
pub mod floperation;
pub mod format;
pub mod graph_property;
pub mod hasse;
pub mod homology;
pub mod moduli;
pub mod path;
pub mod presets;
pub mod simplex;

pub use algorithm::{advance, alg, alg_list, alg_run, AlgOutcome, AlgRun, Label, LabeledFlowline};
pub use complex::{gen_full_simplex, SimplicialComplex};
pub use enumerate::{enumerate_flowlines_index1, enumerate_flowlines_index2};
pub use error::{Error, Result};
pub use field::{DiscreteVectorField, MorseFunction};
pub use floperation::{cancel, flop, insert, Flowline};
pub use format::{parse_complex_file, print_complex_file, ComplexFile};
pub use graph_property::{gen_graph_property_complex, GraphProperty};
pub use hasse::ModifiedHasseDiagram;
pub use homology::{
    homology, morse_chain_complex, morse_differential, simplicial_boundary, simplicial_homology_oracle,
};
pub use moduli::{build_moduli, ModuliSpace};
pub use path::{compose, path_sign, Path};
pub use simplex::{Simplex, Vertex};
