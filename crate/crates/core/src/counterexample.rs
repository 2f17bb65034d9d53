//! A branching model on `R^2` in which the chain-compactness postulate fails.
//!
//! Splitting points are `(0, n)` for `n = 0, 1, 2, ...`, each of them binary,
//! so scenarios are 01-sequences. Only sequences with finitely many zeros are
//! scenarios; the all-zero sequence is missing. Then `[z_i s_i]` with
//! `z_i = (i - 1/2, 0)` and `s_i = 0^i 1 1 1 ...` is a chain whose maximal
//! extension cannot be read off any single scenario.

use alloc::borrow::Cow;
use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::minkowski::{self, Point};
use crate::model::{in_overlap_region, Branching, SplittingFamily};
use crate::quotient::{leq_s_with, LabeledPoint};
use crate::{Error, Rational, Result};

/// A 01-sequence with finitely many zeros, stored as the set of positions
/// holding 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ZeroSetScenario {
    zeros: BTreeSet<u64>,
}

impl ZeroSetScenario {
    pub fn new(zeros: impl IntoIterator<Item = u64>) -> Self {
        ZeroSetScenario { zeros: zeros.into_iter().collect() }
    }

    /// `s_i`: zeros exactly at positions `0..i`.
    pub fn prefix(i: u64) -> Self {
        ZeroSetScenario::new(0..i)
    }

    /// Every scenario whose zeros lie in `0..bound`, in mask order.
    pub fn all_with_support(bound: u32) -> Vec<Self> {
        (0u64..1 << bound)
            .map(|mask| ZeroSetScenario::new((0..bound as u64).filter(|j| mask >> j & 1 == 1)))
            .collect()
    }

    pub fn zeros(&self) -> &BTreeSet<u64> {
        &self.zeros
    }

    pub fn bit(&self, position: u64) -> u8 {
        if self.zeros.contains(&position) {
            0
        } else {
            1
        }
    }

    /// Positions where the two sequences differ: the symmetric difference of
    /// the zero sets.
    pub fn differing_positions(&self, other: &ZeroSetScenario) -> Vec<u64> {
        self.zeros.symmetric_difference(&other.zeros).copied().collect()
    }

    /// Least position holding a 1. Always exists since zeros are finite.
    pub fn first_one(&self) -> u64 {
        (0..).find(|k| !self.zeros.contains(k)).expect("finite zero set")
    }
}

impl fmt::Display for ZeroSetScenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(&last) = self.zeros.iter().next_back() {
            for j in 0..=last {
                write!(f, "{}", self.bit(j))?;
            }
        }
        f.write_str("1...")
    }
}

impl fmt::Debug for ZeroSetScenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The generated model: every finite-zero 01-sequence is a scenario and the
/// splitting family of a pair is the row of positions where they differ.
#[derive(Debug, Clone, Copy, Default)]
pub struct BinaryRowModel;

impl Branching for BinaryRowModel {
    type Scenario = ZeroSetScenario;

    fn dimension(&self) -> usize {
        2
    }

    fn contains_scenario(&self, _: &ZeroSetScenario) -> bool {
        true
    }

    fn scenarios(&self) -> Option<&[ZeroSetScenario]> {
        None
    }

    fn family(&self, a: &ZeroSetScenario, b: &ZeroSetScenario) -> Result<Cow<'_, SplittingFamily>> {
        ce_splitting_set(a, b).map(Cow::Owned)
    }
}

pub fn ce_splitting_set(a: &ZeroSetScenario, b: &ZeroSetScenario) -> Result<SplittingFamily> {
    if a == b {
        return Err(Error::SameScenario(alloc::format!("{a}")));
    }
    Ok(SplittingFamily::difference_row(a.clone(), b.clone()))
}

/// `(0, n)`.
pub fn splitting_point(n: u64) -> Point {
    Point::new(alloc::vec![Rational::from_integer(0.into()), Rational::from_integer(n.into())])
        .expect("two coordinates")
}

/// `z_i = (i - 1/2, 0)`.
pub fn z_point(i: u64) -> Point {
    Point::new(alloc::vec![
        Rational::from_integer(i.into()) - crate::rational(1, 2),
        Rational::from_integer(0.into()),
    ])
    .expect("two coordinates")
}

/// `[z_1, ..., z_k]`.
pub fn z_chain(k: u64) -> Vec<Point> {
    (1..=k).map(z_point).collect()
}

/// First pair `(m, n)`, `m < n`, of positions in `items` where
/// `[items[m]] <= [items[n]]` fails.
pub fn chain_failure<M: Branching>(model: &M, items: &[LabeledPoint<M::Scenario>]) -> Result<Option<(usize, usize)>> {
    for (m, a) in items.iter().enumerate() {
        for (n, b) in items.iter().enumerate().skip(m + 1) {
            if !leq_s_with(model, a, b)? {
                return Ok(Some((m, n)));
            }
        }
    }
    Ok(None)
}

/// `[z_i s_i]` for `i = 1..=k`.
pub fn labeled_z_chain(k: u64) -> Vec<LabeledPoint<ZeroSetScenario>> {
    (1..=k).map(|i| LabeledPoint::new(z_point(i), ZeroSetScenario::prefix(i))).collect()
}

/// Checks `[z_m s_m] <= [z_n s_n]` for all `1 <= m < n <= k`.
pub fn verify_zi_chain(k: u64) -> bool {
    matches!(chain_failure(&BinaryRowModel, &labeled_z_chain(k)), Ok(None))
}

/// Why a scenario cannot be the one the chain's history is read from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonRepresentability {
    pub scenario: ZeroSetScenario,
    /// Least position where the scenario holds a 1.
    pub k: u64,
    /// `(0, k)`.
    pub splitting_point: Point,
    /// Interval between `(0, k)` and `z_{k+1}`.
    pub interval: Rational,
    /// `(0, k)` splits the scenario from `s_{k+1}`.
    pub splits_from_next: bool,
    /// `(0, k)` splits `s_k` from `s_{k+1}`.
    pub splits_prefixes: bool,
    /// `(0, k) < z_{k+1}`.
    pub strictly_below: bool,
    /// `z_{k+1}` lies outside the overlap of the scenario and `s_{k+1}`.
    pub unglued: bool,
}

impl NonRepresentability {
    pub fn verified(&self) -> bool {
        self.splits_from_next && self.splits_prefixes && self.strictly_below && self.unglued
    }
}

pub fn nonrepresentability_witness(scenario: &ZeroSetScenario) -> Result<NonRepresentability> {
    let model = BinaryRowModel;
    let k = scenario.first_one();
    let next = ZeroSetScenario::prefix(k + 1);
    let split = splitting_point(k);
    let z = z_point(k + 1);
    Ok(NonRepresentability {
        scenario: scenario.clone(),
        k,
        interval: minkowski::interval(&split, &z)?,
        splits_from_next: ce_splitting_set(scenario, &next)?.contains(&split)?,
        splits_prefixes: ce_splitting_set(&ZeroSetScenario::prefix(k), &next)?.contains(&split)?,
        strictly_below: minkowski::lt(&split, &z)?,
        unglued: !in_overlap_region(&model, scenario, &next, &z)?,
        splitting_point: split,
    })
}

/// The scenarios whose copy of `z_i` belongs to the chain's history: those
/// with zeros at every position `0..i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShrinkingSet {
    pub level: u64,
}

impl ShrinkingSet {
    pub fn contains(&self, scenario: &ZeroSetScenario) -> bool {
        (0..self.level).all(|j| scenario.bit(j) == 0)
    }

    /// Membership decided from the gluing relation: `z_i` read in the
    /// scenario is glued to `z_i` read in `s_i`.
    pub fn contains_by_overlap(&self, scenario: &ZeroSetScenario) -> Result<bool> {
        let own = ZeroSetScenario::prefix(self.level);
        in_overlap_region(&BinaryRowModel, scenario, &own, &z_point(self.level))
    }

    /// Two members: `s_i` and `s_{i+1}`.
    pub fn sample(&self) -> [ZeroSetScenario; 2] {
        [ZeroSetScenario::prefix(self.level), ZeroSetScenario::prefix(self.level + 1)]
    }

    pub fn description(&self) -> String {
        alloc::format!("{{ s : s(j) = 0 for all j < {} }}", self.level)
    }
}

pub fn sigma_h_star(i: u64) -> ShrinkingSet {
    ShrinkingSet { level: i }
}

/// The level whose set first excludes `scenario`.
pub fn excluding_level(scenario: &ZeroSetScenario) -> u64 {
    scenario.first_one() + 1
}

/// One level of the shrinking-intersection trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceRow {
    pub level: u64,
    pub sample: [ZeroSetScenario; 2],
    /// A member of the intersection of levels `1..=level`.
    pub intersection_witness: ZeroSetScenario,
}

/// Everything the counterexample establishes at a finite depth.
#[derive(Debug, Clone)]
pub struct CounterexampleReport {
    pub depth: u64,
    pub support: u32,
    /// `(m, n, [z_m s_m] <= [z_n s_n])` for consecutive `m`, `n = m + 1`.
    pub chain_rows: Vec<(u64, u64, bool)>,
    /// First failing chain pair over all `m < n`, 1-based.
    pub chain_failure: Option<(u64, u64)>,
    pub witnesses: Vec<NonRepresentability>,
    pub trace: Vec<TraceRow>,
}

impl CounterexampleReport {
    pub fn passed(&self) -> bool {
        self.chain_failure.is_none()
            && self.chain_rows.iter().all(|r| r.2)
            && self.witnesses.iter().all(NonRepresentability::verified)
            && self.trace.iter().all(|row| {
                (1..=row.level).all(|i| sigma_h_star(i).contains(&row.intersection_witness))
            })
    }
}

/// Builds the chain table to `depth`, the witness table for every scenario
/// with zeros in `0..support`, and the trace of shrinking intersections.
pub fn build_report(depth: u64, support: u32) -> Result<CounterexampleReport> {
    let chain = labeled_z_chain(depth);
    let model = BinaryRowModel;
    let mut chain_rows = Vec::new();
    for w in chain.windows(2).enumerate() {
        let (m, pair) = w;
        chain_rows.push((m as u64 + 1, m as u64 + 2, leq_s_with(&model, &pair[0], &pair[1])?));
    }
    let chain_failure = chain_failure(&model, &chain)?.map(|(m, n)| (m as u64 + 1, n as u64 + 1));
    let witnesses = ZeroSetScenario::all_with_support(support)
        .iter()
        .map(nonrepresentability_witness)
        .collect::<Result<Vec<_>>>()?;
    let trace = (1..=depth)
        .map(|i| TraceRow {
            level: i,
            sample: sigma_h_star(i).sample(),
            intersection_witness: ZeroSetScenario::prefix(i),
        })
        .collect();
    Ok(CounterexampleReport { depth, support, chain_rows, chain_failure, witnesses, trace })
}
