//! The TOML complex file format.
//!
//! ```toml
//! vertices = [1, 2, 3, 4]
//! maximal_simplices = [
//!   [1, 2, 3],
//!   [2, 3, 4],
//! ]
//! vector_field = [
//!   [[1], [1, 2]],
//! ]
//! morse_values = [
//!   { simplex = [1], value = 3.0 },
//! ]
//! ```
//!
//! `vertices` must be strictly increasing and every listed vertex becomes a
//! 0-simplex; numeric order is the orientation order. Simplices are
//! strictly increasing vertex lists. `vector_field` lists `[tail, head]`
//! pairs. `morse_values` must then be total on the complex, and when both
//! are present the field induced by the values must equal the listed one.

use std::fmt::Write as _;
use std::ops::Range;

use serde::Deserialize;
use toml::Spanned;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::field::{self, field_from_morse, DiscreteVectorField, MorseFunction};
use crate::simplex::{Simplex, Vertex};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    vertices: Spanned<Vec<Vertex>>,
    maximal_simplices: Vec<Spanned<Vec<Vertex>>>,
    vector_field: Option<Vec<Spanned<(Vec<Vertex>, Vec<Vertex>)>>>,
    morse_values: Option<Vec<Spanned<RawValue>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawValue {
    simplex: Vec<Vertex>,
    value: f64,
}

/// The contents of a complex file.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexFile {
    pub complex: SimplicialComplex,
    pub vector_field: Option<DiscreteVectorField>,
    pub morse_values: Option<MorseFunction>,
}

impl ComplexFile {
    pub fn new(complex: SimplicialComplex) -> Self {
        ComplexFile {
            complex,
            vector_field: None,
            morse_values: None,
        }
    }

    pub fn with_field(complex: SimplicialComplex, field: DiscreteVectorField) -> Self {
        ComplexFile {
            complex,
            vector_field: Some(field),
            morse_values: None,
        }
    }

    /// The listed field, else the one induced by the Morse values, else the
    /// empty field.
    pub fn field(&self) -> Result<DiscreteVectorField> {
        match (&self.vector_field, &self.morse_values) {
            (Some(v), _) => Ok(v.clone()),
            (None, Some(f)) => field_from_morse(f, &self.complex),
            (None, None) => Ok(DiscreteVectorField::empty()),
        }
    }
}

fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

fn error_at(text: &str, span: Range<usize>, message: impl Into<String>) -> Error {
    let (line, column) = line_col(text, span.start);
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn simplex_at(text: &str, span: Range<usize>, vertices: Vec<Vertex>) -> Result<Simplex> {
    Simplex::from_sorted(vertices).map_err(|e| error_at(text, span, e.to_string()))
}

pub fn parse_complex_file(text: &str) -> Result<ComplexFile> {
    let raw: RawFile = toml::from_str(text).map_err(|e| {
        let span = e.span().unwrap_or(0..0);
        error_at(text, span, e.message().to_string())
    })?;

    let vspan = raw.vertices.span();
    let vertices = raw.vertices.into_inner();
    if vertices.is_empty() {
        return Err(error_at(text, vspan, "vertices must not be empty"));
    }
    if let Some(w) = vertices.windows(2).find(|w| w[0] >= w[1]) {
        return Err(error_at(
            text,
            vspan,
            format!("vertices must be strictly increasing, found {} before {}", w[0], w[1]),
        ));
    }

    let mut maximal = Vec::new();
    for entry in raw.maximal_simplices {
        let span = entry.span();
        let s = simplex_at(text, span.clone(), entry.into_inner())?;
        if let Some(v) = s.vertices().iter().find(|v| vertices.binary_search(v).is_err()) {
            return Err(error_at(
                text,
                span,
                format!("vertex {v} of {s} is not listed in vertices"),
            ));
        }
        maximal.push(s);
    }
    let complex = SimplicialComplex::with_vertices(&vertices, &maximal)?;

    let vector_field = match raw.vector_field {
        None => None,
        Some(entries) => {
            let mut pairs = Vec::new();
            for entry in entries {
                let span = entry.span();
                let (t, h) = entry.into_inner();
                let tail = simplex_at(text, span.clone(), t)?;
                let head = simplex_at(text, span.clone(), h)?;
                let one = DiscreteVectorField::new([(tail.clone(), head.clone())]);
                if let Err(v) = field::validate_field(&one, &complex) {
                    return Err(error_at(text, span, v[0].to_string()));
                }
                pairs.push((tail, head));
            }
            let field = DiscreteVectorField::new(pairs);
            if let Err(v) = field::validate_field(&field, &complex) {
                return Err(Error::InvalidField(
                    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "),
                ));
            }
            Some(field)
        }
    };

    let morse_values = match raw.morse_values {
        None => None,
        Some(entries) => {
            let mut values = Vec::new();
            for entry in entries {
                let span = entry.span();
                let RawValue { simplex, value } = entry.into_inner();
                let s = simplex_at(text, span.clone(), simplex)?;
                if !complex.contains(&s) {
                    return Err(error_at(text, span, format!("simplex {s} is not in the complex")));
                }
                if !value.is_finite() {
                    return Err(error_at(text, span, format!("value of {s} is not finite")));
                }
                if values.iter().any(|(t, _)| t == &s) {
                    return Err(error_at(text, span, format!("simplex {s} has two values")));
                }
                values.push((s, value));
            }
            Some(MorseFunction::new(values))
        }
    };

    if let Some(f) = &morse_values {
        let induced = field_from_morse(f, &complex)?;
        if let Some(v) = &vector_field {
            if &induced != v {
                return Err(Error::InvalidField(
                    "vector_field differs from the field induced by morse_values".into(),
                ));
            }
        }
    }

    Ok(ComplexFile {
        complex,
        vector_field,
        morse_values,
    })
}

fn list(vs: &[Vertex]) -> String {
    let items: Vec<String> = vs.iter().map(Vertex::to_string).collect();
    format!("[{}]", items.join(", "))
}

/// Canonical text form; [`parse_complex_file`] reads it back unchanged.
pub fn print_complex_file(file: &ComplexFile) -> String {
    let mut out = String::new();
    writeln!(out, "vertices = {}", list(file.complex.vertex_universe())).unwrap();
    out.push_str("maximal_simplices = [\n");
    for s in file.complex.maximal_simplices() {
        writeln!(out, "  {},", list(s.vertices())).unwrap();
    }
    out.push_str("]\n");
    if let Some(v) = &file.vector_field {
        out.push_str("vector_field = [\n");
        for (t, h) in v.pairs() {
            writeln!(out, "  [{}, {}],", list(t.vertices()), list(h.vertices())).unwrap();
        }
        out.push_str("]\n");
    }
    if let Some(f) = &file.morse_values {
        out.push_str("morse_values = [\n");
        for (s, value) in f.iter() {
            writeln!(out, "  {{ simplex = {}, value = {value:?} }},", list(s.vertices())).unwrap();
        }
        out.push_str("]\n");
    }
    out
}
