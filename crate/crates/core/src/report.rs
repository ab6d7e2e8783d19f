//! Named bounds and the reports that collect them.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::expr::VolumeExpr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Upper,
    Lower,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundKind::Upper => "upper",
            BoundKind::Lower => "lower",
        })
    }
}

/// One named bound. `value` is present exactly when the bound applies;
/// otherwise `reason` says why not.
#[derive(Debug, Clone, PartialEq)]
pub struct Bound {
    pub name: String,
    pub kind: BoundKind,
    pub value: Option<VolumeExpr>,
    pub reason: Option<String>,
    pub hypotheses: Vec<String>,
    pub citation: String,
}

pub type PolyhedronBound = Bound;
pub type LinkBound = Bound;

impl Bound {
    pub fn new(name: &str, kind: BoundKind, outcome: Result<VolumeExpr>, hypotheses: &[&str], citation: &str) -> Self {
        let (value, reason) = match outcome {
            Ok(v) => (Some(v), None),
            Err(Error::NotApplicable(msg)) => (None, Some(msg)),
            Err(e) => (None, Some(e.to_string())),
        };
        Self {
            name: name.to_string(),
            kind,
            value,
            reason,
            hypotheses: hypotheses.iter().map(|h| h.to_string()).collect(),
            citation: citation.to_string(),
        }
    }

    pub fn applicable(&self) -> bool {
        self.value.is_some()
    }

    pub fn numeric(&self) -> Option<f64> {
        self.value.as_ref().map(VolumeExpr::eval)
    }
}

/// A pairwise comparison of two bounds of the same kind, recorded when the
/// literature singles out a crossover between them.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Comparison {
    pub left: String,
    pub right: String,
    /// Name of the smaller upper (or larger lower) bound; `None` on a tie.
    pub winner: Option<String>,
    pub note: String,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct BoundReport {
    pub bounds: Vec<Bound>,
    pub comparisons: Vec<Comparison>,
    /// Kept sorted and free of duplicates.
    pub warnings: BTreeSet<String>,
}

impl BoundReport {
    pub fn push(&mut self, b: Bound) {
        self.bounds.push(b);
    }

    pub fn warn(&mut self, msg: impl Into<String>) {
        self.warnings.insert(msg.into());
    }

    pub fn get(&self, name: &str) -> Option<&Bound> {
        self.bounds.iter().find(|b| b.name == name)
    }

    fn best(&self, kind: BoundKind) -> Option<usize> {
        let mut best: Option<(usize, f64)> = None;
        for (i, b) in self.bounds.iter().enumerate() {
            if b.kind != kind {
                continue;
            }
            let Some(v) = b.numeric() else { continue };
            let better = match (best, kind) {
                (None, _) => true,
                (Some((_, w)), BoundKind::Upper) => v < w,
                (Some((_, w)), BoundKind::Lower) => v > w,
            };
            if better {
                best = Some((i, v));
            }
        }
        best.map(|(i, _)| i)
    }

    /// Smallest applicable upper bound; the first one wins ties.
    pub fn best_upper(&self) -> Option<&Bound> {
        self.best(BoundKind::Upper).map(|i| &self.bounds[i])
    }

    /// Largest applicable lower bound; the first one wins ties.
    pub fn best_lower(&self) -> Option<&Bound> {
        self.best(BoundKind::Lower).map(|i| &self.bounds[i])
    }

    /// Compare two named bounds and record the outcome.
    pub fn compare(&mut self, left: &str, right: &str, note: &str) {
        let (Some(l), Some(r)) = (self.get(left), self.get(right)) else { return };
        let winner = match (l.numeric(), r.numeric()) {
            (Some(a), Some(b)) if a == b => None,
            (Some(a), Some(b)) => {
                let left_wins = match l.kind {
                    BoundKind::Upper => a < b,
                    BoundKind::Lower => a > b,
                };
                Some(if left_wins { left } else { right }.to_string())
            }
            (Some(_), None) => Some(left.to_string()),
            (None, Some(_)) => Some(right.to_string()),
            (None, None) => None,
        };
        self.comparisons.push(Comparison {
            left: left.to_string(),
            right: right.to_string(),
            winner,
            note: note.to_string(),
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::q;

    #[test]
    fn best_markers() {
        let mut r = BoundReport::default();
        r.push(Bound::new("a", BoundKind::Upper, Ok(VolumeExpr::v_tet(q(5, 1))), &[], ""));
        r.push(Bound::new("b", BoundKind::Upper, Ok(VolumeExpr::v_tet(q(3, 1))), &[], ""));
        r.push(Bound::new("c", BoundKind::Upper, Ok(VolumeExpr::v_tet(q(3, 1))), &[], ""));
        r.push(Bound::new("d", BoundKind::Upper, Err(Error::not_applicable("no")), &[], ""));
        r.push(Bound::new("e", BoundKind::Lower, Ok(VolumeExpr::v_tet(q(1, 1))), &[], ""));
        assert_eq!(r.best_upper().unwrap().name, "b");
        assert_eq!(r.best_lower().unwrap().name, "e");
        assert_eq!(r.get("d").unwrap().reason.as_deref(), Some("no"));
        r.compare("a", "b", "");
        assert_eq!(r.comparisons[0].winner.as_deref(), Some("b"));
    }
}
