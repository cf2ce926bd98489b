//! Discrete Morse functions and discrete vector fields.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::simplex::Simplex;

/// A real value on every simplex of a complex.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct MorseFunction {
    values: BTreeMap<Simplex, f64>,
}

impl MorseFunction {
    pub fn new(values: impl IntoIterator<Item = (Simplex, f64)>) -> Self {
        MorseFunction {
            values: values.into_iter().collect(),
        }
    }

    /// `f(σ) = dim σ`, under which every simplex is critical.
    pub fn canonical(k: &SimplicialComplex) -> Self {
        Self::new(k.iter().map(|s| (s.clone(), s.dim() as f64)))
    }

    pub fn value(&self, s: &Simplex) -> Option<f64> {
        self.values.get(s).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Simplex, f64)> {
        self.values.iter().map(|(s, v)| (s, *v))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// A set of facet pairs `(tail, head)` with `dim head = dim tail + 1`.
///
/// Construction accepts any list of pairs; [`validate_field`] decides whether
/// it is a discrete vector field on a given complex. Pairs are kept sorted.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct DiscreteVectorField {
    pairs: Vec<(Simplex, Simplex)>,
    up: HashMap<Simplex, Simplex>,
    down: HashMap<Simplex, Simplex>,
}

impl DiscreteVectorField {
    pub fn new(pairs: impl IntoIterator<Item = (Simplex, Simplex)>) -> Self {
        let mut pairs: Vec<(Simplex, Simplex)> = pairs.into_iter().collect();
        pairs.sort();
        pairs.dedup();
        let mut up = HashMap::new();
        let mut down = HashMap::new();
        for (t, h) in &pairs {
            up.entry(t.clone()).or_insert_with(|| h.clone());
            down.entry(h.clone()).or_insert_with(|| t.clone());
        }
        DiscreteVectorField { pairs, up, down }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn pairs(&self) -> &[(Simplex, Simplex)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// The head paired above `s`, when `s` is a tail.
    pub fn head_of(&self, s: &Simplex) -> Option<&Simplex> {
        self.up.get(s)
    }

    /// The tail paired below `s`, when `s` is a head.
    pub fn tail_of(&self, s: &Simplex) -> Option<&Simplex> {
        self.down.get(s)
    }

    pub fn contains_pair(&self, tail: &Simplex, head: &Simplex) -> bool {
        self.up.get(tail) == Some(head)
    }

    pub fn classify(&self, s: &Simplex) -> CriticalityClass {
        classify(s, self)
    }

    pub fn is_critical(&self, s: &Simplex) -> bool {
        !self.up.contains_key(s) && !self.down.contains_key(s)
    }
}

impl fmt::Debug for DiscreteVectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.pairs.iter().map(|(t, h)| format!("{t}->{h}")))
            .finish()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CriticalityClass {
    Critical,
    /// Upper member of a pair.
    Head,
    /// Lower member of a pair.
    Tail,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldViolation {
    NotInComplex(Simplex),
    NotAFacetPair {
        tail: Simplex,
        head: Simplex,
    },
    /// The simplex occurs in more than one pair.
    Repeated(Simplex),
}

impl fmt::Display for FieldViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldViolation::NotInComplex(s) => write!(f, "simplex {s} is not in the complex"),
            FieldViolation::NotAFacetPair { tail, head } => {
                write!(f, "pair ({tail}, {head}) is not a facet relation")
            }
            FieldViolation::Repeated(s) => write!(f, "simplex {s} is in more than one pair"),
        }
    }
}

/// Checks that every pair is a facet relation inside `k` and that no
/// simplex occurs twice. All violations are reported.
pub fn validate_field(
    field: &DiscreteVectorField,
    k: &SimplicialComplex,
) -> std::result::Result<(), Vec<FieldViolation>> {
    let mut violations = Vec::new();
    let mut count: BTreeMap<&Simplex, usize> = BTreeMap::new();
    for (t, h) in field.pairs() {
        for s in [t, h] {
            if !k.contains(s) {
                violations.push(FieldViolation::NotInComplex(s.clone()));
            }
            *count.entry(s).or_default() += 1;
        }
        if h.facet_position(t).is_none() {
            violations.push(FieldViolation::NotAFacetPair {
                tail: t.clone(),
                head: h.clone(),
            });
        }
    }
    violations.extend(
        count
            .into_iter()
            .filter(|&(_, c)| c > 1)
            .map(|(s, _)| FieldViolation::Repeated(s.clone())),
    );
    violations.dedup();
    if violations.is_empty() {
        Ok(())
    } else {
        Err(violations)
    }
}

pub(crate) fn ensure_valid(field: &DiscreteVectorField, k: &SimplicialComplex) -> Result<()> {
    validate_field(field, k)
        .map_err(|v| Error::InvalidField(v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")))
}

pub fn classify(s: &Simplex, field: &DiscreteVectorField) -> CriticalityClass {
    if field.up.contains_key(s) {
        CriticalityClass::Tail
    } else if field.down.contains_key(s) {
        CriticalityClass::Head
    } else {
        CriticalityClass::Critical
    }
}

/// Critical `p`-simplices in lexicographic order.
pub fn critical_simplices(k: &SimplicialComplex, field: &DiscreteVectorField, p: usize) -> Vec<Simplex> {
    k.simplices(p)
        .iter()
        .filter(|s| field.is_critical(s))
        .cloned()
        .collect()
}

/// The field of a discrete Morse function: every facet pair `(γ, α)` with
/// `f(γ) ≥ f(α)`. Ties count as exceptional.
pub fn field_from_morse(f: &MorseFunction, k: &SimplicialComplex) -> Result<DiscreteVectorField> {
    if let Some((s, _)) = f.iter().find(|(s, _)| !k.contains(s)) {
        return Err(Error::NotInComplex(s.clone()));
    }
    let value = |s: &Simplex| {
        f.value(s).ok_or_else(|| Error::InvalidMorseFunction {
            witness: s.clone(),
            reason: "no value assigned".into(),
        })
    };
    let mut pairs = Vec::new();
    for beta in k.iter() {
        let fb = value(beta)?;
        let mut low = 0;
        for gamma in beta.facets() {
            if value(&gamma)? >= fb {
                low += 1;
                pairs.push((gamma, beta.clone()));
            }
        }
        if low > 1 {
            return Err(Error::InvalidMorseFunction {
                witness: beta.clone(),
                reason: format!("{low} facets have value at least f = {fb}"),
            });
        }
        let mut high = 0;
        for alpha in k.cofacets(beta)? {
            if value(&alpha)? <= fb {
                high += 1;
            }
        }
        if high > 1 {
            return Err(Error::InvalidMorseFunction {
                witness: beta.clone(),
                reason: format!("{high} cofacets have value at most f = {fb}"),
            });
        }
    }
    let field = DiscreteVectorField::new(pairs);
    if let Err(v) = validate_field(&field, k) {
        let witness = match &v[0] {
            FieldViolation::Repeated(s) | FieldViolation::NotInComplex(s) => s.clone(),
            FieldViolation::NotAFacetPair { tail, .. } => tail.clone(),
        };
        return Err(Error::InvalidMorseFunction {
            witness,
            reason: "simplex is both the head and the tail of exceptional pairs".into(),
        });
    }
    Ok(field)
}

/// Searches for a nontrivial closed V-path `α₀, β₀, α₁, β₁, …, α₀`.
///
/// Works per dimension on the digraph over `p`-simplices with an edge
/// `α → α′` whenever `(α, β)` is a pair and `α′ ≠ α` is a facet of `β`.
/// The witness lists the simplices of the loop, ending where it began.
pub fn find_closed_vpath(field: &DiscreteVectorField, k: &SimplicialComplex) -> Option<Vec<Simplex>> {
    let top = k.top_dimension()?;
    for p in 0..top {
        if let Some(cycle) = closed_vpath_in_dim(field, k, p) {
            return Some(cycle);
        }
    }
    None
}

/// True iff the field has no nontrivial closed V-path.
pub fn is_gradient(field: &DiscreteVectorField, k: &SimplicialComplex) -> bool {
    find_closed_vpath(field, k).is_none()
}

fn vpath_successors(field: &DiscreteVectorField, alpha: &Simplex) -> Vec<(Simplex, Simplex)> {
    match field.head_of(alpha) {
        Some(beta) => beta
            .facets()
            .into_iter()
            .filter(|a| a != alpha)
            .map(|a| (beta.clone(), a))
            .collect(),
        None => Vec::new(),
    }
}

fn closed_vpath_in_dim(field: &DiscreteVectorField, k: &SimplicialComplex, p: usize) -> Option<Vec<Simplex>> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        Fresh,
        Open,
        Done,
    }
    let mut mark: HashMap<&Simplex, Mark> = k.simplices(p).iter().map(|s| (s, Mark::Fresh)).collect();
    for start in k.simplices(p) {
        if mark[start] != Mark::Fresh {
            continue;
        }
        // stack entries: (node, its successors, next successor index)
        let mut stack: Vec<(&Simplex, Vec<(Simplex, Simplex)>, usize)> =
            vec![(start, vpath_successors(field, start), 0)];
        mark.insert(start, Mark::Open);
        while let Some(top) = stack.last_mut() {
            if top.2 == top.1.len() {
                mark.insert(top.0, Mark::Done);
                stack.pop();
                continue;
            }
            let (_, next) = &top.1[top.2];
            top.2 += 1;
            let (next_ref, m) = match mark.get_key_value(next) {
                Some((r, m)) => (*r, *m),
                None => continue,
            };
            match m {
                Mark::Fresh => {
                    mark.insert(next_ref, Mark::Open);
                    let succ = vpath_successors(field, next_ref);
                    stack.push((next_ref, succ, 0));
                }
                Mark::Open => {
                    let from = stack.iter().position(|e| e.0 == next_ref).expect("open node on stack");
                    let mut cycle = Vec::new();
                    for e in &stack[from..] {
                        cycle.push(e.0.clone());
                        cycle.push(e.1[e.2 - 1].0.clone());
                    }
                    cycle.push(next_ref.clone());
                    return Some(cycle);
                }
                Mark::Done => {}
            }
        }
    }
    None
}

/// A random gradient vector field on `k`.
///
/// Facet pairs are visited in random order; each is kept with probability
/// `density` when both simplices are still unmatched and keeping it closes
/// no V-path loop.
pub fn random_gradient_field<R: Rng + ?Sized>(k: &SimplicialComplex, rng: &mut R, density: f64) -> DiscreteVectorField {
    let mut candidates: Vec<(Simplex, Simplex)> = k
        .iter()
        .flat_map(|s| s.facets().into_iter().map(move |f| (f, s.clone())))
        .collect();
    candidates.shuffle(rng);
    let mut matched: HashSet<Simplex> = HashSet::new();
    let mut pairs: Vec<(Simplex, Simplex)> = Vec::new();
    for (t, h) in candidates {
        if matched.contains(&t) || matched.contains(&h) || !rng.random_bool(density) {
            continue;
        }
        pairs.push((t.clone(), h.clone()));
        let field = DiscreteVectorField::new(pairs.iter().cloned());
        if closed_vpath_in_dim(&field, k, t.dim()).is_some() {
            pairs.pop();
        } else {
            matched.insert(t);
            matched.insert(h);
        }
    }
    DiscreteVectorField::new(pairs)
}

/// [`random_gradient_field`] driven by a ChaCha8 generator seeded with `seed`.
pub fn seeded_gradient_field(k: &SimplicialComplex, seed: u64, density: f64) -> DiscreteVectorField {
    use rand::SeedableRng;
    random_gradient_field(k, &mut rand_chacha::ChaCha8Rng::seed_from_u64(seed), density)
}
