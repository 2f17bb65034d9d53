//! Scenarios, splitting families and the consistency conditions on them.

use alloc::borrow::Cow;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::counterexample::ZeroSetScenario;
use crate::minkowski::{self, Point};
use crate::{Error, Rational, Result};

/// Number of members examined when the triangle condition has to be
/// sampled on an infinite family.
pub const TRIANGLE_SAMPLE_MEMBERS: usize = 1000;

/// Opaque scenario label of an explicitly listed model.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ScenarioId(String);

impl ScenarioId {
    pub fn new(label: impl Into<String>) -> Self {
        ScenarioId(label.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl From<&str> for ScenarioId {
    fn from(s: &str) -> Self {
        ScenarioId(s.into())
    }
}

impl fmt::Debug for ScenarioId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for ScenarioId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// The splitting points of one pair of scenarios.
///
/// Infinite families are limited to a fixed catalog, each kind carrying an
/// exact decision procedure for "is some member strictly below x".
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplittingFamily {
    /// An explicit finite set, kept sorted and free of duplicates.
    Finite(Vec<Point>),
    /// `{ (time, n e_axis) : n = 0, 1, 2, ... }`, all other spatial
    /// coordinates zero.
    IntegerRow { time: Rational, axis: usize },
    /// `{ center + (0, +-1/n e_axis) : n >= 1 }`, accumulating at `center`.
    HarmonicPair { center: Point, axis: usize },
    /// `{ (0, n e_1) : the two 01-sequences differ at n }`.
    DifferenceRow { a: ZeroSetScenario, b: ZeroSetScenario },
}

/// Where a member of a catalog family sits relative to its kind's index.
fn axis_value(x: &Point, axis: usize) -> &Rational {
    &x.coords()[axis]
}

/// Sum of squared spatial coordinates of `x - base` off `axis`.
fn off_axis_sq(x: &Point, base: Option<&Point>, axis: usize) -> Rational {
    let mut acc = Rational::zero();
    for j in 1..x.dim() {
        if j == axis {
            continue;
        }
        let d = match base {
            Some(b) => &x.coords()[j] - &b.coords()[j],
            None => x.coords()[j].clone(),
        };
        acc += &d * &d;
    }
    acc
}

fn sq(v: &Rational) -> Rational {
    v * v
}

impl SplittingFamily {
    pub fn finite(mut points: Vec<Point>) -> Self {
        points.sort();
        points.dedup();
        SplittingFamily::Finite(points)
    }

    pub fn difference_row(a: ZeroSetScenario, b: ZeroSetScenario) -> Self {
        if a <= b {
            SplittingFamily::DifferenceRow { a, b }
        } else {
            SplittingFamily::DifferenceRow { a: b, b: a }
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            SplittingFamily::Finite(_) => "finite",
            SplittingFamily::IntegerRow { .. } => "integer_row",
            SplittingFamily::HarmonicPair { .. } => "harmonic_pair",
            SplittingFamily::DifferenceRow { .. } => "difference_row",
        }
    }

    pub fn check_dimension(&self, dimension: usize) -> Result<()> {
        let axis_ok = |axis: usize| {
            if axis == 0 || axis >= dimension {
                Err(Error::AxisOutOfRange { axis, dimension })
            } else {
                Ok(())
            }
        };
        match self {
            SplittingFamily::Finite(points) => points.iter().try_for_each(|p| p.check_dim(dimension)),
            SplittingFamily::IntegerRow { axis, .. } => axis_ok(*axis),
            SplittingFamily::HarmonicPair { center, axis } => {
                center.check_dim(dimension)?;
                axis_ok(*axis)
            }
            SplittingFamily::DifferenceRow { .. } => Ok(()),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, SplittingFamily::Finite(_) | SplittingFamily::DifferenceRow { .. })
    }

    pub fn is_empty(&self) -> bool {
        match self {
            SplittingFamily::Finite(points) => points.is_empty(),
            SplittingFamily::DifferenceRow { a, b } => a == b,
            _ => false,
        }
    }

    /// All members, for finite kinds.
    pub fn members(&self, dimension: usize) -> Option<Vec<Point>> {
        match self {
            SplittingFamily::Finite(points) => Some(points.clone()),
            SplittingFamily::DifferenceRow { a, b } => Some(
                a.differing_positions(b)
                    .into_iter()
                    .map(|n| row_point(dimension, Rational::zero(), 1, Rational::from_integer(BigInt::from(n))))
                    .collect(),
            ),
            _ => None,
        }
    }

    /// Members whose defining index is at most `limit`. Finite kinds return
    /// every member.
    pub fn truncated_members(&self, dimension: usize, limit: usize) -> Vec<Point> {
        match self {
            SplittingFamily::IntegerRow { time, axis } => (0..=limit)
                .map(|n| row_point(dimension, time.clone(), *axis, Rational::from_integer(BigInt::from(n))))
                .collect(),
            SplittingFamily::HarmonicPair { center, axis } => (1..=limit)
                .flat_map(|n| {
                    let v = crate::rational(1, n as i64);
                    [harmonic_point(center, *axis, v.clone()), harmonic_point(center, *axis, -v)]
                })
                .collect(),
            _ => self.members(dimension).unwrap_or_default(),
        }
    }

    /// Membership test.
    pub fn contains(&self, x: &Point) -> Result<bool> {
        match self {
            SplittingFamily::Finite(points) => {
                if let Some(p) = points.first() {
                    p.check_dim(x.dim())?;
                }
                Ok(points.binary_search(x).is_ok())
            }
            SplittingFamily::IntegerRow { time, axis } => {
                self.check_dimension(x.dim())?;
                let u = axis_value(x, *axis);
                Ok(x.time() == time
                    && off_axis_sq(x, None, *axis).is_zero()
                    && u.is_integer()
                    && !u.is_negative())
            }
            SplittingFamily::HarmonicPair { center, axis } => {
                self.check_dimension(x.dim())?;
                let u = axis_value(x, *axis) - axis_value(center, *axis);
                Ok(x.time() == center.time()
                    && off_axis_sq(x, Some(center), *axis).is_zero()
                    && !u.is_zero()
                    && u.abs().recip().is_integer())
            }
            SplittingFamily::DifferenceRow { a, b } => {
                let u = axis_value(x, 1);
                Ok(x.time().is_zero()
                    && off_axis_sq(x, None, 1).is_zero()
                    && u.is_integer()
                    && !u.is_negative()
                    && u.to_integer().try_into().map(|n: u64| a.bit(n) != b.bit(n)).unwrap_or(false))
            }
        }
    }

    /// Some member strictly below `x`, if one exists.
    pub fn member_strictly_below(&self, x: &Point) -> Result<Option<Point>> {
        match self {
            SplittingFamily::Finite(points) => {
                for p in points {
                    if minkowski::lt(p, x)? {
                        return Ok(Some(p.clone()));
                    }
                }
                Ok(None)
            }
            SplittingFamily::DifferenceRow { .. } => {
                for p in self.members(x.dim()).unwrap_or_default() {
                    if minkowski::lt(&p, x)? {
                        return Ok(Some(p));
                    }
                }
                Ok(None)
            }
            SplittingFamily::IntegerRow { time, axis } => {
                self.check_dimension(x.dim())?;
                Ok(integer_row_below(x, time, *axis))
            }
            SplittingFamily::HarmonicPair { center, axis } => {
                self.check_dimension(x.dim())?;
                Ok(harmonic_below(x, center, *axis))
            }
        }
    }

    pub fn exists_strictly_below(&self, x: &Point) -> Result<bool> {
        Ok(self.member_strictly_below(x)?.is_some())
    }

    /// Some member `y` with `y <= x`.
    pub fn member_weakly_below(&self, x: &Point) -> Result<Option<Point>> {
        if self.contains(x)? {
            return Ok(Some(x.clone()));
        }
        self.member_strictly_below(x)
    }

    pub fn exists_weakly_below(&self, x: &Point) -> Result<bool> {
        Ok(self.member_weakly_below(x)?.is_some())
    }

    /// Whether two families denote the same point set. Catalog kinds are
    /// compared structurally.
    pub fn same_members(&self, other: &SplittingFamily, dimension: usize) -> bool {
        match (self.members(dimension), other.members(dimension)) {
            (Some(mut a), Some(mut b)) => {
                a.sort();
                b.sort();
                a == b
            }
            (None, None) => self == other,
            _ => false,
        }
    }
}

fn row_point(dimension: usize, time: Rational, axis: usize, value: Rational) -> Point {
    let mut coords: Vec<Rational> = (0..dimension).map(|_| Rational::zero()).collect();
    coords[0] = time;
    coords[axis] = value;
    Point::new(coords).expect("catalog families live in dimension >= 2")
}

fn harmonic_point(center: &Point, axis: usize, offset: Rational) -> Point {
    let value = &center.coords()[axis] + offset;
    center.with_coord(axis, value)
}

/// Closed form for the integer row: a member `n` is strictly below `x` iff
/// `dt > 0` and `(u - n)^2 <= dt^2 - q`, so only the integers nearest to
/// `u` need checking.
fn integer_row_below(x: &Point, time: &Rational, axis: usize) -> Option<Point> {
    let dt = x.time() - time;
    if !dt.is_positive() {
        return None;
    }
    let reach = sq(&dt) - off_axis_sq(x, None, axis);
    if reach.is_negative() {
        return None;
    }
    let u = axis_value(x, axis);
    let mut candidates = Vec::with_capacity(2);
    if u.is_positive() {
        candidates.push(u.floor());
        candidates.push(u.ceil());
    } else {
        candidates.push(Rational::zero());
    }
    candidates
        .into_iter()
        .find(|n| sq(&(u - n)) <= reach)
        .map(|n| row_point(x.dim(), time.clone(), axis, n))
}

/// Closed form for the harmonic pair. Members are `v = +-1/n` along `axis`
/// relative to the center; one lies strictly below `x` iff `dt > 0` and
/// `(u - v)^2 <= dt^2 - q` for some `v`.
///
/// If the allowed interval `[u - R, u + R]` reaches the accumulation point
/// 0 (with `R > 0`) infinitely many members qualify and a large enough `n`
/// is found by doubling. Otherwise only the members nearest to `u` on its
/// side of 0 can qualify.
fn harmonic_below(x: &Point, center: &Point, axis: usize) -> Option<Point> {
    let dt = x.time() - center.time();
    if !dt.is_positive() {
        return None;
    }
    let reach = sq(&dt) - off_axis_sq(x, Some(center), axis);
    if reach.is_negative() {
        return None;
    }
    let u = axis_value(x, axis) - axis_value(center, axis);
    let fits = |v: &Rational| sq(&(&u - v)) <= reach;

    if !u.is_zero() {
        let inv = u.abs().recip();
        let sign = if u.is_positive() { Rational::one() } else { -Rational::one() };
        for n in [inv.floor(), inv.ceil()] {
            if n < Rational::one() {
                continue;
            }
            let v = &sign / &n;
            if fits(&v) {
                return Some(harmonic_point(center, axis, v));
            }
        }
    }
    if reach.is_positive() && sq(&u) <= reach {
        let sign = if u.is_negative() { -Rational::one() } else { Rational::one() };
        let mut n = BigInt::one();
        loop {
            let v = &sign / Rational::from_integer(n.clone());
            if fits(&v) {
                return Some(harmonic_point(center, axis, v));
            }
            n <<= 1;
        }
    }
    None
}

/// A branching model: a scenario set with a splitting family for every pair
/// of distinct scenarios.
pub trait Branching {
    type Scenario: Clone + Ord + fmt::Debug + fmt::Display;

    fn dimension(&self) -> usize;

    fn contains_scenario(&self, scenario: &Self::Scenario) -> bool;

    /// The explicit scenario list, or `None` for generated scenario sets.
    fn scenarios(&self) -> Option<&[Self::Scenario]>;

    /// The splitting family of two distinct, known scenarios.
    fn family(&self, a: &Self::Scenario, b: &Self::Scenario) -> Result<Cow<'_, SplittingFamily>>;

    fn check_scenario(&self, scenario: &Self::Scenario) -> Result<()> {
        if self.contains_scenario(scenario) {
            Ok(())
        } else {
            Err(Error::UnknownScenario(scenario.to_string()))
        }
    }

    fn check_point(&self, x: &Point) -> Result<()> {
        x.check_dim(self.dimension())
    }

    /// The finite scenario list or [`Error::GeneratorMode`].
    fn finite_scenarios(&self) -> Result<&[Self::Scenario]> {
        self.scenarios().ok_or(Error::GeneratorMode)
    }
}

/// One `pair -> family` line of a model presentation.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilyEntry {
    pub pair: (ScenarioId, ScenarioId),
    pub family: SplittingFamily,
}

/// An explicit model: finitely many labelled scenarios and a list of family
/// entries. The pair map is looked up orientation-free; whether duplicate
/// entries agree is a validation question.
#[derive(Debug, Clone)]
pub struct ModelSpec {
    dimension: usize,
    scenarios: Vec<ScenarioId>,
    families: Vec<FamilyEntry>,
    index: BTreeMap<(ScenarioId, ScenarioId), Vec<usize>>,
}

fn unordered(a: &ScenarioId, b: &ScenarioId) -> (ScenarioId, ScenarioId) {
    if a <= b {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    }
}

impl ModelSpec {
    pub fn new(dimension: usize, scenarios: Vec<ScenarioId>, families: Vec<FamilyEntry>) -> Result<Self> {
        if dimension < 2 {
            return Err(Error::DimensionTooSmall(dimension));
        }
        let mut seen = BTreeSet::new();
        for s in &scenarios {
            if !seen.insert(s.clone()) {
                return Err(Error::DuplicateScenario(s.to_string()));
            }
        }
        let mut index: BTreeMap<_, Vec<usize>> = BTreeMap::new();
        for (i, entry) in families.iter().enumerate() {
            let (a, b) = &entry.pair;
            for s in [a, b] {
                if !seen.contains(s) {
                    return Err(Error::UnknownScenario(s.to_string()));
                }
            }
            if a == b {
                return Err(Error::SameScenario(a.to_string()));
            }
            entry.family.check_dimension(dimension)?;
            index.entry(unordered(a, b)).or_default().push(i);
        }
        Ok(ModelSpec { dimension, scenarios, families, index })
    }

    /// Convenience constructor from string labels and finite families.
    pub fn finite(dimension: usize, scenarios: &[&str], families: Vec<(&str, &str, Vec<Point>)>) -> Result<Self> {
        ModelSpec::new(
            dimension,
            scenarios.iter().map(|s| ScenarioId::from(*s)).collect(),
            families
                .into_iter()
                .map(|(a, b, pts)| FamilyEntry { pair: (a.into(), b.into()), family: SplittingFamily::finite(pts) })
                .collect(),
        )
    }

    pub fn entries(&self) -> &[FamilyEntry] {
        &self.families
    }

    pub fn scenario_list(&self) -> &[ScenarioId] {
        &self.scenarios
    }

    fn entries_for(&self, a: &ScenarioId, b: &ScenarioId) -> impl Iterator<Item = &FamilyEntry> {
        self.index
            .get(&unordered(a, b))
            .into_iter()
            .flatten()
            .map(move |&i| &self.families[i])
    }
}

static EMPTY_FAMILY: SplittingFamily = SplittingFamily::Finite(Vec::new());

impl Branching for ModelSpec {
    type Scenario = ScenarioId;

    fn dimension(&self) -> usize {
        self.dimension
    }

    fn contains_scenario(&self, scenario: &ScenarioId) -> bool {
        self.scenarios.contains(scenario)
    }

    fn scenarios(&self) -> Option<&[ScenarioId]> {
        Some(&self.scenarios)
    }

    fn family(&self, a: &ScenarioId, b: &ScenarioId) -> Result<Cow<'_, SplittingFamily>> {
        self.check_scenario(a)?;
        self.check_scenario(b)?;
        if a == b {
            return Err(Error::SameScenario(a.to_string()));
        }
        // missing pairs read as empty; validation reports them
        Ok(Cow::Borrowed(self.entries_for(a, b).next().map(|e| &e.family).unwrap_or(&EMPTY_FAMILY)))
    }
}

/// The regions where two scenarios are glued together: every point not
/// strictly above one of their splitting points. A scenario overlaps itself
/// everywhere.
pub fn in_overlap_region<M: Branching>(model: &M, a: &M::Scenario, b: &M::Scenario, x: &Point) -> Result<bool> {
    model.check_scenario(a)?;
    model.check_scenario(b)?;
    model.check_point(x)?;
    if a == b {
        return Ok(true);
    }
    Ok(!model.family(a, b)?.exists_strictly_below(x)?)
}

/// How a condition was established.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    /// Every member was checked.
    Exhaustive { members: usize },
    /// Holds structurally for the family kinds involved.
    ByConstruction,
    /// Only the first `members` members of an infinite family were checked.
    Sampled { members: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TriangleOutcome {
    Holds(Evidence),
    /// A splitting point of the outer pair with no splitting point of
    /// either inner pair weakly below it.
    Violated { witness: Point },
}

impl TriangleOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, TriangleOutcome::Holds(_))
    }
}

/// Checks that every `a`/`c` splitting point has an `a`/`b` or `b`/`c`
/// splitting point weakly below it.
pub fn triangle_check<M: Branching>(model: &M, a: &M::Scenario, b: &M::Scenario, c: &M::Scenario) -> Result<TriangleOutcome> {
    for s in [a, b, c] {
        model.check_scenario(s)?;
    }
    if a == b || b == c {
        return Err(Error::SameScenario(b.to_string()));
    }
    if a == c {
        return Err(Error::SameScenario(a.to_string()));
    }
    let outer = model.family(a, c)?;
    let left = model.family(a, b)?;
    let right = model.family(b, c)?;
    let d = model.dimension();

    let all_rows = [&outer, &left, &right]
        .iter()
        .all(|f| matches!(f.as_ref(), SplittingFamily::DifferenceRow { .. }));
    if all_rows {
        // a position where a and c differ is one where a,b or b,c differ
        return Ok(TriangleOutcome::Holds(Evidence::ByConstruction));
    }
    if !outer.is_finite() && (outer.same_members(&left, d) || outer.same_members(&right, d)) {
        return Ok(TriangleOutcome::Holds(Evidence::ByConstruction));
    }
    let (members, evidence) = match outer.members(d) {
        Some(m) => {
            let n = m.len();
            (m, Evidence::Exhaustive { members: n })
        }
        None => {
            let m = outer.truncated_members(d, TRIANGLE_SAMPLE_MEMBERS);
            let n = m.len();
            (m, Evidence::Sampled { members: n })
        }
    };
    for x in members {
        if !left.exists_weakly_below(&x)? && !right.exists_weakly_below(&x)? {
            return Ok(TriangleOutcome::Violated { witness: x });
        }
    }
    Ok(TriangleOutcome::Holds(evidence))
}

/// The families of every pair of distinct scenarios must be symmetric,
/// internally space-like, nonempty, and satisfy the triangle condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Check {
    Symmetry,
    Spacelike,
    Nonempty,
    Triangle,
}

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::Symmetry => "symmetry",
            Check::Spacelike => "spacelike",
            Check::Nonempty => "nonempty",
            Check::Triangle => "triangle",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Two entries for the same pair disagree.
    Asymmetric,
    /// Two members of one family are causally related.
    CausalPair { lower: Point, upper: Point },
    Empty,
    Triangle { witness: Point },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass(Evidence),
    Fail(Violation),
}

impl Outcome {
    pub fn passed(&self) -> bool {
        matches!(self, Outcome::Pass(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationEntry {
    pub check: Check,
    /// The pair, or the triple `[outer_a, middle, outer_c]` for triangle
    /// checks.
    pub scenarios: Vec<ScenarioId>,
    pub outcome: Outcome,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub entries: Vec<ValidationEntry>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.outcome.passed())
    }

    pub fn check_passed(&self, check: Check) -> bool {
        self.entries.iter().filter(|e| e.check == check).all(|e| e.outcome.passed())
    }

    pub fn failures(&self) -> impl Iterator<Item = &ValidationEntry> {
        self.entries.iter().filter(|e| !e.outcome.passed())
    }
}

fn spacelike_check(family: &SplittingFamily) -> Result<Outcome> {
    match family {
        SplittingFamily::Finite(points) => {
            for (i, p) in points.iter().enumerate() {
                for q in &points[i + 1..] {
                    match minkowski::relation(p, q)? {
                        minkowski::CausalRelation::Spacelike => {}
                        minkowski::CausalRelation::After => {
                            return Ok(Outcome::Fail(Violation::CausalPair { lower: q.clone(), upper: p.clone() }))
                        }
                        _ => return Ok(Outcome::Fail(Violation::CausalPair { lower: p.clone(), upper: q.clone() })),
                    }
                }
            }
            let n = points.len();
            Ok(Outcome::Pass(Evidence::Exhaustive { members: n * n.saturating_sub(1) / 2 }))
        }
        // catalog kinds lie on a single simultaneity slice
        _ => Ok(Outcome::Pass(Evidence::ByConstruction)),
    }
}

/// Runs every consistency check on an explicit model. Entries are sorted by
/// check, then by scenario labels.
pub fn validate_model(spec: &ModelSpec) -> ValidationReport {
    let mut labels: Vec<ScenarioId> = spec.scenarios.clone();
    labels.sort();
    let d = spec.dimension;
    let mut entries = Vec::new();

    for (i, a) in labels.iter().enumerate() {
        for b in &labels[i + 1..] {
            let pair = alloc::vec![a.clone(), b.clone()];
            let found: Vec<&FamilyEntry> = spec.entries_for(a, b).collect();
            let symmetric = found.windows(2).all(|w| w[0].family.same_members(&w[1].family, d));
            entries.push(ValidationEntry {
                check: Check::Symmetry,
                scenarios: pair.clone(),
                outcome: if symmetric {
                    Outcome::Pass(Evidence::Exhaustive { members: found.len() })
                } else {
                    Outcome::Fail(Violation::Asymmetric)
                },
            });

            let family = spec.family(a, b).expect("labels come from the spec");
            let spacelike = spacelike_check(&family).expect("families are dimension-checked at load");
            entries.push(ValidationEntry { check: Check::Spacelike, scenarios: pair.clone(), outcome: spacelike });

            entries.push(ValidationEntry {
                check: Check::Nonempty,
                scenarios: pair,
                outcome: if family.is_empty() {
                    Outcome::Fail(Violation::Empty)
                } else {
                    Outcome::Pass(Evidence::ByConstruction)
                },
            });
        }
    }

    for (i, a) in labels.iter().enumerate() {
        for (j, b) in labels.iter().enumerate().skip(i + 1) {
            for c in &labels[j + 1..] {
                for (outer_a, middle, outer_c) in [(a, b, c), (b, a, c), (a, c, b)] {
                    let outcome = match triangle_check(spec, outer_a, middle, outer_c)
                        .expect("labels come from the spec")
                    {
                        TriangleOutcome::Holds(ev) => Outcome::Pass(ev),
                        TriangleOutcome::Violated { witness } => Outcome::Fail(Violation::Triangle { witness }),
                    };
                    entries.push(ValidationEntry {
                        check: Check::Triangle,
                        scenarios: alloc::vec![outer_a.clone(), middle.clone(), outer_c.clone()],
                        outcome,
                    });
                }
            }
        }
    }
    entries.sort_by(|x, y| x.check.cmp(&y.check).then_with(|| x.scenarios.cmp(&y.scenarios)));
    ValidationReport { entries }
}
