//! The generalized elimination circle: n people stand in a ring,
//! counting starts at a chosen position (which counts as 1), every
//! step-th survivor is removed, and counting resumes at the next
//! survivor. Also builds the good/bad arrangement that makes a chosen
//! number of people drown first, and inverts the puzzle by searching
//! for a step.

use std::collections::BTreeSet;

use crate::limits::{Error, Result};

/// Ring parameters: size, count-off interval, and starting position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CircleConfig {
    size: u64,
    step: u64,
    start: u64,
}

impl CircleConfig {
    pub fn new(size: u64, step: u64, start: u64) -> Result<Self> {
        if size < 1 {
            return Err(Error::EmptyCircle);
        }
        if step < 1 {
            return Err(Error::ZeroStep);
        }
        if start < 1 || start > size {
            return Err(Error::StartOutOfRange { start, size });
        }
        Ok(CircleConfig { size, step, start })
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn step(&self) -> u64 {
        self.step
    }

    pub fn start(&self) -> u64 {
        self.start
    }
}

/// Complete elimination order of a circle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationTrace {
    pub config: CircleConfig,
    /// 1-based positions in the order they are eliminated; a
    /// permutation of 1..=size.
    pub order: Vec<u64>,
}

impl EliminationTrace {
    /// Positions still standing after the first `rounds` eliminations.
    pub fn survivors_after(&self, rounds: usize) -> BTreeSet<u64> {
        let eliminated: BTreeSet<u64> = self.order[..rounds.min(self.order.len())]
            .iter()
            .copied()
            .collect();
        (1..=self.config.size)
            .filter(|p| !eliminated.contains(p))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Label {
    Good,
    Bad,
}

/// Good/Bad labels over positions 1..=size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrangementLabels {
    pub labels: Vec<Label>,
}

impl ArrangementLabels {
    pub fn bad_positions(&self) -> BTreeSet<u64> {
        self.labels
            .iter()
            .enumerate()
            .filter(|(_, l)| **l == Label::Bad)
            .map(|(i, _)| i as u64 + 1)
            .collect()
    }
}

/// Runs the circle to completion and returns the elimination order.
pub fn elimination_order(config: CircleConfig) -> EliminationTrace {
    let size = config.size as usize;
    let mut ring: Vec<u64> = (1..=config.size).collect();
    let mut order = Vec::with_capacity(size);
    // Index of the position that counts as 1.
    let mut cursor = (config.start - 1) as usize;
    while !ring.is_empty() {
        cursor = (cursor + (config.step - 1) as usize) % ring.len();
        order.push(ring.remove(cursor));
        if cursor == ring.len() {
            cursor = 0;
        }
    }
    EliminationTrace { config, order }
}

/// Labels the first `doomed_count` eliminated positions Bad and the
/// rest Good, so re-simulation drowns every Bad before any Good.
pub fn arrangement_for_partition(
    size: u64,
    doomed_count: u64,
    step: u64,
    start: u64,
) -> Result<ArrangementLabels> {
    if doomed_count > size {
        return Err(Error::DoomedCountTooLarge {
            count: doomed_count,
            size,
        });
    }
    let trace = elimination_order(CircleConfig::new(size, step, start)?);
    let mut labels = vec![Label::Good; size as usize];
    for &position in &trace.order[..doomed_count as usize] {
        labels[(position - 1) as usize] = Label::Bad;
    }
    Ok(ArrangementLabels { labels })
}

/// Smallest step <= step_limit whose first |doomed| eliminations equal
/// the doomed set, or None.
pub fn find_step_for_partition(
    size: u64,
    doomed_positions: &BTreeSet<u64>,
    start: u64,
    step_limit: u64,
) -> Result<Option<u64>> {
    for &p in doomed_positions {
        if p < 1 || p > size {
            return Err(Error::DoomedPositionOutOfRange { position: p, size });
        }
    }
    for step in 1..=step_limit {
        let trace = elimination_order(CircleConfig::new(size, step, start)?);
        let prefix: BTreeSet<u64> = trace.order[..doomed_positions.len()].iter().copied().collect();
        if prefix == *doomed_positions {
            return Ok(Some(step));
        }
    }
    Ok(None)
}
