//! Pullbacks of finite sets, and the report types every checker returns.
//!
//! A square of finite sets is given by four index tables
//!
//! ```text
//!   A --top--> B
//!   |          |
//!  left      right
//!   v          v
//!   C --bot--> D
//! ```
//!
//! and is a pullback iff `a |-> (top(a), left(a))` is a bijection onto
//! `B ×_D C = {(b, c) | right(b) = bot(c)}`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    HoldsAtCheckedDepth,
    Fails,
}

/// Describes which square of a simplicial set a witness comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareLabel {
    pub name: String,
    /// Levels of the corners: top-left, top-right, bottom-left, bottom-right.
    pub levels: [usize; 4],
    pub top: String,
    pub left: String,
    pub right: String,
    pub bottom: String,
}

impl SquareLabel {
    pub fn new(name: impl Into<String>, levels: [usize; 4], legs: [&str; 4]) -> Self {
        let [top, left, right, bottom] = legs.map(str::to_owned);
        Self { name: name.into(), levels, top, left, right, bottom }
    }
}

impl fmt::Display for SquareLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [tl, tr, bl, br] = self.levels;
        write!(
            f,
            "{}: X{tl} -{}-> X{tr}, X{tl} -{}-> X{bl}, X{tr} -{}-> X{br}, X{bl} -{}-> X{br}",
            self.name, self.top, self.left, self.right, self.bottom
        )
    }
}

/// An element of the comparison target with other than exactly one preimage.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareWitness {
    pub square: SquareLabel,
    /// Components of the offending fiber-product element, as cell names.
    pub element: Vec<String>,
    pub preimage_count: usize,
    pub preimages: Vec<String>,
}

/// A simplicial identity (or naturality equation) that fails on a cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityViolation {
    pub identity: String,
    pub level: usize,
    pub cell: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "type")]
pub enum Witness {
    Square(SquareWitness),
    Identity(IdentityViolation),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub criterion: String,
    pub verdict: Verdict,
    /// Highest level of the object that entered a checked square (0 if none).
    pub checked_depth: usize,
    pub squares_checked: usize,
    /// Set when a square budget stopped enumeration before it finished.
    pub budget_exhausted: bool,
    pub witness: Option<Witness>,
}

impl CheckReport {
    pub fn holds(&self) -> bool {
        self.verdict == Verdict::HoldsAtCheckedDepth
    }

    pub fn square_witness(&self) -> Option<&SquareWitness> {
        match &self.witness {
            Some(Witness::Square(w)) => Some(w),
            _ => None,
        }
    }

    pub(crate) fn tracker(criterion: impl Into<String>) -> ReportTracker {
        ReportTracker {
            report: CheckReport {
                criterion: criterion.into(),
                verdict: Verdict::HoldsAtCheckedDepth,
                checked_depth: 0,
                squares_checked: 0,
                budget_exhausted: false,
                witness: None,
            },
        }
    }

    /// Conjunction of two reports; the first witness wins.
    pub fn and(self, other: CheckReport, criterion: impl Into<String>) -> CheckReport {
        let witness = self.witness.or(other.witness);
        CheckReport {
            criterion: criterion.into(),
            verdict: if witness.is_some() { Verdict::Fails } else { Verdict::HoldsAtCheckedDepth },
            checked_depth: self.checked_depth.max(other.checked_depth),
            squares_checked: self.squares_checked + other.squares_checked,
            budget_exhausted: self.budget_exhausted || other.budget_exhausted,
            witness,
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = match self.verdict {
            Verdict::HoldsAtCheckedDepth => "holds at checked depth",
            Verdict::Fails => "fails",
        };
        writeln!(f, "criterion: {}", self.criterion)?;
        writeln!(f, "verdict: {verdict}")?;
        writeln!(f, "checked depth: {}", self.checked_depth)?;
        writeln!(f, "squares checked: {}", self.squares_checked)?;
        if self.budget_exhausted {
            writeln!(f, "square budget exhausted before enumeration finished")?;
        }
        match &self.witness {
            None => {}
            Some(Witness::Square(w)) => {
                writeln!(f, "witness square: {}", w.square)?;
                writeln!(f, "offending element: ({})", w.element.join(", "))?;
                writeln!(f, "preimages ({}): [{}]", w.preimage_count, w.preimages.join(", "))?;
            }
            Some(Witness::Identity(v)) => {
                writeln!(f, "violated: {} at level {} on cell {}", v.identity, v.level, v.cell)?;
                writeln!(f, "lhs = {}, rhs = {}", v.lhs, v.rhs)?;
            }
        }
        Ok(())
    }
}

pub(crate) struct ReportTracker {
    report: CheckReport,
}

impl ReportTracker {
    pub fn record(&mut self, depth: usize) {
        self.report.squares_checked += 1;
        self.report.checked_depth = self.report.checked_depth.max(depth);
    }

    pub fn fail(&mut self, witness: Witness) {
        self.report.verdict = Verdict::Fails;
        self.report.witness = Some(witness);
    }

    pub fn exhausted(&mut self) {
        self.report.budget_exhausted = true;
    }

    pub fn squares(&self) -> usize {
        self.report.squares_checked
    }

    pub fn finish(self) -> CheckReport {
        self.report
    }
}

/// The first element of `B ×_D C` (lexicographic in `(b, c)`) whose preimage count
/// is not one, together with its preimages in `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Defect {
    pub b: usize,
    pub c: usize,
    pub preimages: Vec<usize>,
}

/// Core pullback test on index tables. `top: A -> B`, `left: A -> C`,
/// `right: B -> D`, `bottom: C -> D`; the sizes of `B` and `C` are the lengths
/// of `right` and `bottom`.
pub fn pullback_defect(
    top: &[usize],
    left: &[usize],
    right: &[usize],
    bottom: &[usize],
) -> Result<Option<Defect>> {
    if top.len() != left.len() {
        return Err(Error::InvalidArgument("top and left legs have different domains".into()));
    }
    let mut preimages: HashMap<(usize, usize), Vec<usize>> = HashMap::with_capacity(top.len());
    for (a, (&b, &c)) in top.iter().zip(left).enumerate() {
        let (Some(&rb), Some(&qc)) = (right.get(b), bottom.get(c)) else {
            return Err(Error::InvalidArgument(format!("element {a} maps outside the square")));
        };
        if rb != qc {
            return Err(Error::NonCommutingSquare(format!(
                "element {a}: right(top) = {rb} but bottom(left) = {qc}"
            )));
        }
        preimages.entry((b, c)).or_default().push(a);
    }

    let fiber_size = fiber_product_size(right, bottom);
    let all_unique = preimages.values().all(|v| v.len() == 1);
    if all_unique && preimages.len() == fiber_size {
        return Ok(None);
    }

    let d_size = right.iter().chain(bottom).map(|&d| d + 1).max().unwrap_or(0);
    let mut over: Vec<Vec<usize>> = vec![Vec::new(); d_size];
    for (c, &d) in bottom.iter().enumerate() {
        over[d].push(c);
    }
    for (b, &d) in right.iter().enumerate() {
        for &c in &over[d] {
            let pre = preimages.get(&(b, c)).cloned().unwrap_or_default();
            if pre.len() != 1 {
                return Ok(Some(Defect { b, c, preimages: pre }));
            }
        }
    }
    unreachable!("a defect was detected by counting but not found by enumeration")
}

fn fiber_product_size(right: &[usize], bottom: &[usize]) -> usize {
    let mut counts: HashMap<usize, usize> = HashMap::new();
    for &d in bottom {
        *counts.entry(d).or_default() += 1;
    }
    right.iter().map(|d| counts.get(d).copied().unwrap_or(0)).sum()
}

/// Names for the elements of the three corners a witness can mention.
pub struct CornerNames<'a> {
    pub a: &'a [String],
    pub b: &'a [String],
    pub c: &'a [String],
}

/// Checks one labelled square and converts a defect into a witness.
pub fn check_square(
    label: &SquareLabel,
    legs: [&[usize]; 4],
    names: &CornerNames<'_>,
) -> Result<Option<SquareWitness>> {
    let [top, left, right, bottom] = legs;
    let defect = pullback_defect(top, left, right, bottom).map_err(|e| match e {
        Error::NonCommutingSquare(msg) => Error::NonCommutingSquare(format!("{label}: {msg}")),
        other => other,
    })?;
    Ok(defect.map(|d| SquareWitness {
        square: label.clone(),
        element: vec![names.b[d.b].clone(), names.c[d.c].clone()],
        preimage_count: d.preimages.len(),
        preimages: d.preimages.iter().map(|&a| names.a[a].clone()).collect(),
    }))
}

/// Standalone pullback check for four finite functions; elements are named by index.
pub fn is_pullback_square(
    top: &[usize],
    left: &[usize],
    right: &[usize],
    bottom: &[usize],
) -> Result<CheckReport> {
    let name = |n: usize| (0..n).map(|i| i.to_string()).collect::<Vec<_>>();
    let (a, b, c) = (name(top.len()), name(right.len()), name(bottom.len()));
    let label = SquareLabel::new("square", [0; 4], ["top", "left", "right", "bottom"]);
    let mut tracker = CheckReport::tracker("pullback");
    tracker.record(0);
    if let Some(w) = check_square(&label, [top, left, right, bottom], &CornerNames { a: &a, b: &b, c: &c })? {
        tracker.fail(Witness::Square(w));
    }
    Ok(tracker.finish())
}
