//! Brute-force recomputation of overlap regions, choice points and the
//! quotient order on a bounded rational grid.
//!
//! Nothing here uses the closed-form family queries: splitting families are
//! truncated to their first members and every relation is evaluated by
//! enumeration, so the results serve as an independent check on the
//! analytic decision procedures.
//!
//! Choice-point detection runs on a refined copy of the grid (`refine`
//! sub-steps per step). A grid point counts as a candidate if it lies in the
//! region and no refined grid point strictly above it does. Points within
//! one step of the top of the box have too little room above them and are
//! flagged instead of classified.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::histories::choice_point_closed_form;
use crate::minkowski::{self, Point};
use crate::model::{Branching, SplittingFamily};
use crate::quotient::{leq_s_with, LabeledPoint};
use crate::{Error, Rational, Result};

/// Upper limit on the number of (refined) grid points.
pub const MAX_GRID_POINTS: u128 = 10_000_000;

/// A box, a step, and how far to truncate infinite families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSpec {
    pub lo: Vec<Rational>,
    pub hi: Vec<Rational>,
    pub step: Rational,
    /// Members with defining index above this are dropped.
    pub truncation: usize,
    /// Sub-steps per step for the upward search of choice points.
    pub refine: u32,
}

impl GridSpec {
    pub fn cube(dimension: usize, lo: Rational, hi: Rational, step: Rational, truncation: usize) -> Self {
        GridSpec {
            lo: alloc::vec![lo; dimension],
            hi: alloc::vec![hi; dimension],
            step,
            truncation,
            refine: 2,
        }
    }

    pub fn dimension(&self) -> usize {
        self.lo.len()
    }

    fn lattice(&self, refine: u32) -> Result<Lattice> {
        if !self.step.is_positive() {
            return Err(Error::InvalidGrid("step must be positive".into()));
        }
        if refine == 0 {
            return Err(Error::InvalidGrid("refinement must be at least 1".into()));
        }
        if self.lo.len() != self.hi.len() {
            return Err(Error::InvalidGrid("lower and upper bounds differ in length".into()));
        }
        if self.lo.len() < 2 {
            return Err(Error::DimensionTooSmall(self.lo.len()));
        }
        let mut counts = Vec::with_capacity(self.lo.len());
        let mut total: u128 = 1;
        for (l, h) in self.lo.iter().zip(&self.hi) {
            if l > h {
                return Err(Error::InvalidGrid("empty box".into()));
            }
            let steps = ((h - l) / &self.step).floor().to_integer().to_u128().unwrap_or(u128::MAX / 4);
            let n = steps.saturating_mul(refine as u128).saturating_add(1);
            total = total.saturating_mul(n);
            counts.push(n);
        }
        if total > MAX_GRID_POINTS {
            return Err(Error::GridTooLarge { points: total, limit: MAX_GRID_POINTS });
        }
        Ok(Lattice {
            lo: self.lo.clone(),
            step: &self.step / Rational::from_integer(BigInt::from(refine)),
            counts: counts.into_iter().map(|n| n as usize).collect(),
        })
    }
}

/// Grid points `lo + i * step` with `i[j] < counts[j]`, flattened with the
/// time coordinate most significant.
struct Lattice {
    lo: Vec<Rational>,
    step: Rational,
    counts: Vec<usize>,
}

impl Lattice {
    fn len(&self) -> usize {
        self.counts.iter().product()
    }

    fn unflatten(&self, mut flat: usize, out: &mut [usize]) {
        for j in (0..self.counts.len()).rev() {
            out[j] = flat % self.counts[j];
            flat /= self.counts[j];
        }
    }

    fn flatten(&self, idx: &[usize]) -> usize {
        idx.iter().zip(&self.counts).fold(0, |acc, (&i, &n)| acc * n + i)
    }

    fn point(&self, idx: &[usize]) -> Point {
        Point::new(
            idx.iter()
                .zip(&self.lo)
                .map(|(&i, l)| l + &self.step * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
        .expect("lattice dimension >= 2")
    }

    fn points(&self) -> Vec<Point> {
        let mut idx = alloc::vec![0; self.counts.len()];
        (0..self.len())
            .map(|f| {
                self.unflatten(f, &mut idx);
                self.point(&idx)
            })
            .collect()
    }
}

fn region_mask(points: &[Point], members: &[Point]) -> Result<Vec<bool>> {
    points
        .iter()
        .map(|x| {
            for m in members {
                if m.time() < x.time() && minkowski::lt(m, x)? {
                    return Ok(false);
                }
            }
            Ok(true)
        })
        .collect()
}

/// Whether members beyond the truncation index could change a strict-below
/// decision for points of the lattice.
fn truncation_warnings(family: &SplittingFamily, grid: &GridSpec, lattice: &Lattice) -> Vec<String> {
    let mut out = Vec::new();
    let n = Rational::from_integer(BigInt::from(grid.truncation));
    match family {
        SplittingFamily::HarmonicPair { center, axis } => {
            // tail members sit within 1/N of the center; on a lattice aligned
            // with the center they are shadowed by member N once 1/N <= step
            if grid.truncation == 0 || n.recip() > lattice.step {
                out.push(format!("harmonic pair truncated at {} is coarser than step {}", grid.truncation, lattice.step));
            }
            let aligned = center
                .coords()
                .iter()
                .zip(&lattice.lo)
                .all(|(c, l)| ((c - l) / &lattice.step).is_integer());
            if !aligned {
                out.push(format!("grid is not aligned with harmonic center {center}"));
            }
            if let Some(u) = crowded_offset(center, *axis, grid, &lattice.step) {
                out.push(format!(
                    "grid value {u} off the center lies within one search step {} of a member; raise the refinement",
                    lattice.step
                ));
            }
        }
        SplittingFamily::IntegerRow { time, axis } => {
            let reach = &grid.hi[*axis] + (&grid.hi[0] - time);
            if reach.is_positive() && reach.floor() > n {
                out.push(format!("integer row truncated at {} but members up to {} reach the box", grid.truncation, reach.floor()));
            }
        }
        _ => {}
    }
    out
}

/// Distance from `|u|` to the nearest value `1/n`.
fn harmonic_gap(u: &Rational) -> Rational {
    let inv = u.recip();
    let mut best: Option<Rational> = None;
    for n in [inv.floor(), inv.ceil()] {
        if n.is_positive() {
            let g = (u - n.recip()).abs();
            if best.as_ref().is_none_or(|b| &g < b) {
                best = Some(g);
            }
        }
    }
    best.unwrap_or_else(|| u - Rational::from_integer(BigInt::from(1)))
}

/// A coarse grid offset along a harmonic pair's axis whose upward
/// neighbourhood in the region is narrower than the search step, so the
/// oracle would report it as a false candidate.
fn crowded_offset(center: &Point, axis: usize, grid: &GridSpec, fine_step: &Rational) -> Option<Rational> {
    let c = &center.coords()[axis];
    let n = ((&grid.hi[axis] - &grid.lo[axis]) / &grid.step).floor().to_integer().to_usize()?;
    (0..=n)
        .map(|k| (&grid.lo[axis] + &grid.step * Rational::from_integer(BigInt::from(k)) - c).abs())
        .filter(|u| u.is_positive() && !u.recip().is_integer())
        .find(|u| harmonic_gap(u) <= *fine_step)
}

fn oracle_members<M: Branching>(model: &M, a: &M::Scenario, b: &M::Scenario, grid: &GridSpec) -> Result<Option<SplittingFamily>> {
    model.check_scenario(a)?;
    model.check_scenario(b)?;
    if grid.dimension() != model.dimension() {
        return Err(Error::DimensionMismatch { left: grid.dimension(), right: model.dimension() });
    }
    if a == b {
        return Ok(None);
    }
    Ok(Some(model.family(a, b)?.into_owned()))
}

/// Grid points of an overlap region, found by enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleRegion {
    pub grid_points: usize,
    pub points: BTreeSet<Point>,
    pub warnings: Vec<String>,
}

pub fn oracle_overlap<M: Branching>(model: &M, a: &M::Scenario, b: &M::Scenario, grid: &GridSpec) -> Result<OracleRegion> {
    let family = oracle_members(model, a, b, grid)?;
    let lattice = grid.lattice(1)?;
    let points = lattice.points();
    let (members, warnings) = match &family {
        Some(f) => (f.truncated_members(model.dimension(), grid.truncation), truncation_warnings(f, grid, &lattice)),
        None => (Vec::new(), Vec::new()),
    };
    let mask = region_mask(&points, &members)?;
    Ok(OracleRegion {
        grid_points: points.len(),
        points: points.into_iter().zip(mask).filter(|(_, m)| *m).map(|(p, _)| p).collect(),
        warnings,
    })
}

/// Choice-point candidates found by enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleChoices {
    pub region: OracleRegion,
    /// Region points with no refined grid point above them in the region.
    pub candidates: BTreeSet<Point>,
    /// Region points within one step of the top of the box.
    pub flagged: BTreeSet<Point>,
}

/// Some refined lattice point strictly above `x` lies in the region.
fn has_region_point_above(lattice: &Lattice, mask: &[bool], x: &[usize]) -> bool {
    let d = lattice.counts.len();
    let mut z = alloc::vec![0usize; d];
    for t in x[0] + 1..lattice.counts[0] {
        let dt = (t - x[0]) as i64;
        z[0] = t;
        let lo: Vec<usize> = (1..d).map(|j| x[j].saturating_sub(dt as usize)).collect();
        let hi: Vec<usize> = (1..d).map(|j| (x[j] + dt as usize).min(lattice.counts[j] - 1)).collect();
        z[1..d].copy_from_slice(&lo[..d - 1]);
        loop {
            let dist: i64 = (1..d).map(|j| (z[j] as i64 - x[j] as i64).pow(2)).sum();
            if dist <= dt * dt && mask[lattice.flatten(&z)] {
                return true;
            }
            // odometer over the spatial box
            let mut j = d - 1;
            loop {
                if z[j] < hi[j - 1] {
                    z[j] += 1;
                    break;
                }
                z[j] = lo[j - 1];
                j -= 1;
                if j == 0 {
                    break;
                }
            }
            if j == 0 {
                break;
            }
        }
    }
    false
}

pub fn oracle_choice_points<M: Branching>(model: &M, a: &M::Scenario, b: &M::Scenario, grid: &GridSpec) -> Result<OracleChoices> {
    let family = oracle_members(model, a, b, grid)?;
    let coarse = grid.lattice(1)?;
    let fine = grid.lattice(grid.refine)?;
    let r = grid.refine as usize;
    let fine_points = fine.points();
    let (members, warnings) = match &family {
        Some(f) => (f.truncated_members(model.dimension(), grid.truncation), truncation_warnings(f, grid, &fine)),
        None => (Vec::new(), Vec::new()),
    };
    let mask = region_mask(&fine_points, &members)?;

    let d = coarse.counts.len();
    let mut region = BTreeSet::new();
    let mut candidates = BTreeSet::new();
    let mut flagged = BTreeSet::new();
    let mut idx = alloc::vec![0; d];
    let mut fine_idx = alloc::vec![0; d];
    for f in 0..coarse.len() {
        coarse.unflatten(f, &mut idx);
        for j in 0..d {
            fine_idx[j] = idx[j] * r;
        }
        if !mask[fine.flatten(&fine_idx)] {
            continue;
        }
        let p = coarse.point(&idx);
        region.insert(p.clone());
        if fine_idx[0] + r + 1 >= fine.counts[0] {
            flagged.insert(p);
        } else if !has_region_point_above(&fine, &mask, &fine_idx) {
            candidates.insert(p);
        }
    }
    Ok(OracleChoices {
        region: OracleRegion { grid_points: coarse.len(), points: region, warnings },
        candidates,
        flagged,
    })
}

/// The analytic decision procedures under test. [`ClosedForms`] is the
/// shipped implementation; tests substitute deliberately broken variants to
/// confirm the oracle notices.
pub trait Decisions {
    fn exists_strictly_below(&self, family: &SplittingFamily, x: &Point) -> Result<bool>;
    fn is_choice_point(&self, family: &SplittingFamily, dimension: usize, x: &Point) -> Result<bool>;
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ClosedForms;

impl Decisions for ClosedForms {
    fn exists_strictly_below(&self, family: &SplittingFamily, x: &Point) -> Result<bool> {
        family.exists_strictly_below(x)
    }

    fn is_choice_point(&self, family: &SplittingFamily, dimension: usize, x: &Point) -> Result<bool> {
        choice_point_closed_form(family, dimension, x)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChoiceDisagreement {
    pub point: Point,
    pub analytic: bool,
    pub oracle: bool,
}

/// Agreement of analytic and enumerated answers for one scenario pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCrossCheck<S> {
    pub pair: (S, S),
    pub grid_points: usize,
    pub overlap_disagreements: Vec<Point>,
    pub choice_disagreements: Vec<ChoiceDisagreement>,
    pub flagged: usize,
    pub order_checks: usize,
    /// `(x, y)` where `[x_a] <= [y_b]` disagrees with the enumerated region.
    pub order_disagreements: Vec<(Point, Point)>,
    pub warnings: Vec<String>,
}

impl<S> PairCrossCheck<S> {
    pub fn disagreements(&self) -> usize {
        self.overlap_disagreements.len() + self.choice_disagreements.len() + self.order_disagreements.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheckReport<S> {
    pub pairs: Vec<PairCrossCheck<S>>,
}

impl<S> CrossCheckReport<S> {
    pub fn disagreements(&self) -> usize {
        self.pairs.iter().map(PairCrossCheck::disagreements).sum()
    }

    pub fn passed(&self) -> bool {
        self.disagreements() == 0
    }
}

fn order_offsets(dimension: usize, step: &Rational) -> Vec<Point> {
    let z = || Rational::zero();
    let mut out = Vec::new();
    let make = |t: Rational, x: Rational| {
        let mut c: Vec<Rational> = (0..dimension).map(|_| z()).collect();
        c[0] = t;
        c[1] = x;
        Point::new(c).expect("dimension >= 2")
    };
    out.push(make(step.clone(), z()));
    out.push(make(step.clone(), step.clone()));
    out.push(make(z(), step.clone()));
    out.push(make(step * Rational::from_integer(2.into()), -step.clone()));
    out
}

/// Cross-checks one pair under the given decision procedures.
pub fn cross_check_pair<M: Branching, D: Decisions>(
    model: &M,
    a: &M::Scenario,
    b: &M::Scenario,
    grid: &GridSpec,
    decisions: &D,
) -> Result<PairCrossCheck<M::Scenario>> {
    if a == b {
        return Err(Error::SameScenario(format!("{a}")));
    }
    let family = model.family(a, b)?.into_owned();
    let d = model.dimension();
    let oracle = oracle_choice_points(model, a, b, grid)?;
    let coarse = grid.lattice(1)?;
    let points = coarse.points();

    let mut overlap_disagreements = Vec::new();
    let mut choice_disagreements = Vec::new();
    for x in &points {
        let analytic_in = !decisions.exists_strictly_below(&family, x)?;
        let oracle_in = oracle.region.points.contains(x);
        if analytic_in != oracle_in {
            overlap_disagreements.push(x.clone());
        }
        if oracle.flagged.contains(x) {
            continue;
        }
        let analytic = decisions.is_choice_point(&family, d, x)?;
        let found = oracle.candidates.contains(x);
        if analytic != found {
            choice_disagreements.push(ChoiceDisagreement { point: x.clone(), analytic, oracle: found });
        }
    }

    let mut order_checks = 0;
    let mut order_disagreements = Vec::new();
    let offsets = order_offsets(d, &grid.step);
    for x in &points {
        for off in &offsets {
            let y = x.translate(off)?;
            order_checks += 1;
            let analytic = leq_s_with(model, &LabeledPoint::new(x.clone(), a.clone()), &LabeledPoint::new(y.clone(), b.clone()))?;
            let expected = minkowski::leq(x, &y)? && oracle.region.points.contains(x);
            if analytic != expected {
                order_disagreements.push((x.clone(), y));
            }
        }
    }

    Ok(PairCrossCheck {
        pair: (a.clone(), b.clone()),
        grid_points: points.len(),
        overlap_disagreements,
        choice_disagreements,
        flagged: oracle.flagged.len(),
        order_checks,
        order_disagreements,
        warnings: oracle.region.warnings,
    })
}

/// Cross-checks every pair of distinct scenarios of an explicit model.
pub fn oracle_cross_check<M: Branching>(model: &M, grid: &GridSpec) -> Result<CrossCheckReport<M::Scenario>> {
    oracle_cross_check_with(model, grid, &ClosedForms)
}

pub fn oracle_cross_check_with<M: Branching, D: Decisions>(
    model: &M,
    grid: &GridSpec,
    decisions: &D,
) -> Result<CrossCheckReport<M::Scenario>> {
    let mut labels: Vec<M::Scenario> = model.finite_scenarios()?.to_vec();
    labels.sort();
    let mut pairs = Vec::new();
    for (i, a) in labels.iter().enumerate() {
        for b in &labels[i + 1..] {
            pairs.push(cross_check_pair(model, a, b, grid, decisions)?);
        }
    }
    Ok(CrossCheckReport { pairs })
}
