//! The labelled flowline algorithm.
//!
//! A flowline labelled `c` is flopped next; one labelled `f` gets Insert
//! then Flop. Whenever the result is illegal it is cancelled, and the
//! legal outcome is appended with label `c` after a Cancel or `f` after a
//! Flop. A run from a critical flowline stops at the next critical
//! flowline that would need an Insert.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::floperation::{cancel, flop, insert, Flowline};
use crate::hasse::ModifiedHasseDiagram;
use crate::path::Path;

/// Default cap on the number of algorithm steps in [`alg_list`].
pub const DEFAULT_STEP_LIMIT: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    C,
    F,
}

impl Label {
    pub fn conj(self) -> Label {
        match self {
            Label::C => Label::F,
            Label::F => Label::C,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Label::C => "c",
            Label::F => "f",
        })
    }
}

impl std::str::FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "c" => Ok(Label::C),
            "f" => Ok(Label::F),
            _ => Err(Error::MalformedPath(format!("unknown label {s:?}, expected c or f"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabeledFlowline {
    pub flowline: Flowline,
    pub label: Label,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FloperationKind {
    Flop,
    Insert,
    Cancel,
}

/// One floperation applied during a run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Floperation {
    pub kind: FloperationKind,
    pub before: Path,
    pub after: Path,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgOutcome {
    /// Ends in a critical flowline.
    Terminated(Vec<LabeledFlowline>),
    /// The last entry repeats the entry `period` places before it.
    Cycled { list: Vec<LabeledFlowline>, period: usize },
}

impl AlgOutcome {
    pub fn list(&self) -> &[LabeledFlowline] {
        match self {
            AlgOutcome::Terminated(list) | AlgOutcome::Cycled { list, .. } => list,
        }
    }
}

/// An [`AlgOutcome`] together with every floperation performed.
#[derive(Clone, Debug)]
pub struct AlgRun {
    pub outcome: AlgOutcome,
    pub floperations: Vec<Floperation>,
}

impl AlgRun {
    pub fn count(&self, kind: FloperationKind) -> usize {
        self.floperations.iter().filter(|op| op.kind == kind).count()
    }
}

/// One algorithm step from `(f, label)` to the next appended flowline,
/// recording each floperation in `ops`.
pub fn advance_traced(
    h: &ModifiedHasseDiagram,
    f: &Flowline,
    label: Label,
    ops: &mut Vec<Floperation>,
) -> Result<(Flowline, Label)> {
    let mut record = |kind, before: &Path, after: &Path| {
        ops.push(Floperation {
            kind,
            before: before.clone(),
            after: after.clone(),
        })
    };
    let start = match label {
        Label::C => f.path().clone(),
        Label::F => {
            let p = insert(f, h)?;
            record(FloperationKind::Insert, f.path(), &p);
            p
        }
    };
    let flopped = flop(&start, h)?;
    record(FloperationKind::Flop, &start, &flopped);
    if flopped.is_legal() {
        return Ok((Flowline::new(flopped, h)?, Label::F));
    }
    let cancelled = cancel(&flopped)
        .map_err(|e| Error::InternalInvariant(format!("illegal path {flopped:?} cannot be cancelled: {e}")))?;
    record(FloperationKind::Cancel, &flopped, &cancelled);
    if !cancelled.is_legal() {
        return Err(Error::InternalInvariant(format!(
            "cancel produced the illegal path {cancelled:?}"
        )));
    }
    Ok((Flowline::new(cancelled, h)?, Label::C))
}

pub fn advance(h: &ModifiedHasseDiagram, f: &Flowline, label: Label) -> Result<(Flowline, Label)> {
    advance_traced(h, f, label, &mut Vec::new())
}

/// Runs the algorithm from `(f, start)` until it terminates, cycles, or
/// exceeds `step_limit` steps.
pub fn alg_run(h: &ModifiedHasseDiagram, f: &Flowline, start: Label, step_limit: usize) -> Result<AlgRun> {
    if start == Label::F && f.is_critical() {
        return Err(Error::CannotInsert(format!(
            "{f} is critical and cannot start with label f"
        )));
    }
    let mut list = vec![LabeledFlowline {
        flowline: f.clone(),
        label: start,
    }];
    let mut seen = HashMap::new();
    seen.insert((f.clone(), start), 0usize);
    let mut ops = Vec::new();
    for _ in 0..step_limit {
        let last = list.last().expect("nonempty");
        let (next, label) = advance_traced(h, &last.flowline, last.label, &mut ops)?;
        let repeat = seen.get(&(next.clone(), label)).copied();
        let done = label == Label::F && next.is_critical();
        list.push(LabeledFlowline {
            flowline: next.clone(),
            label,
        });
        if let Some(first) = repeat {
            let period = list.len() - 1 - first;
            return Ok(AlgRun {
                outcome: AlgOutcome::Cycled { list, period },
                floperations: ops,
            });
        }
        if done {
            return Ok(AlgRun {
                outcome: AlgOutcome::Terminated(list),
                floperations: ops,
            });
        }
        seen.insert((next, label), list.len() - 1);
    }
    Err(Error::StepLimit(step_limit))
}

pub fn alg_list(h: &ModifiedHasseDiagram, f: &Flowline, start: Label) -> Result<AlgOutcome> {
    Ok(alg_run(h, f, start, DEFAULT_STEP_LIMIT)?.outcome)
}

/// The critical flowline at which the run from critical `f` with label `c`
/// ends.
pub fn alg(h: &ModifiedHasseDiagram, f: &Flowline) -> Result<Flowline> {
    if !f.is_critical() {
        return Err(Error::MalformedPath(format!("{f} is not a critical flowline")));
    }
    match alg_list(h, f, Label::C)? {
        AlgOutcome::Terminated(mut list) => Ok(list.pop().expect("nonempty").flowline),
        AlgOutcome::Cycled { period, .. } => Err(Error::InternalInvariant(format!(
            "run from critical flowline {f} cycled with period {period}"
        ))),
    }
}
