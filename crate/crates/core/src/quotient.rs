//! The gluing equivalence on labelled points, its classes, and the order the
//! classes inherit from Minkowski space-time.

use alloc::collections::BTreeSet;
use core::fmt;

use crate::minkowski::{self, Point};
use crate::model::{in_overlap_region, Branching};
use crate::{Error, Result};

/// A point tagged with the scenario it is read in.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabeledPoint<S> {
    pub point: Point,
    pub scenario: S,
}

impl<S> LabeledPoint<S> {
    pub fn new(point: Point, scenario: S) -> Self {
        LabeledPoint { point, scenario }
    }
}

impl<S: fmt::Display> fmt::Debug for LabeledPoint<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.point, self.scenario)
    }
}

/// How the labels of an [`EventClass`] are known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassLabels<S> {
    /// Every scenario whose copy of the point is glued to this one.
    Materialized(BTreeSet<S>),
    /// One member; the rest are decided on demand by [`equiv`].
    Representative(S),
}

/// An element of the quotient: an equivalence class `[x_s]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EventClass<S> {
    point: Point,
    labels: ClassLabels<S>,
}

impl<S: Clone + Ord> EventClass<S> {
    /// Lazy class of `a`, usable with generated scenario sets.
    pub fn representative(a: LabeledPoint<S>) -> Self {
        EventClass { point: a.point, labels: ClassLabels::Representative(a.scenario) }
    }

    pub fn point(&self) -> &Point {
        &self.point
    }

    pub fn labels(&self) -> &ClassLabels<S> {
        &self.labels
    }

    /// The materialized label set, if known.
    pub fn label_set(&self) -> Option<&BTreeSet<S>> {
        match &self.labels {
            ClassLabels::Materialized(set) => Some(set),
            ClassLabels::Representative(_) => None,
        }
    }

    /// A canonical member: the least label of a materialized class.
    pub fn rep_scenario(&self) -> &S {
        match &self.labels {
            ClassLabels::Materialized(set) => set.iter().next().expect("event classes are never empty"),
            ClassLabels::Representative(s) => s,
        }
    }

    pub fn rep(&self) -> LabeledPoint<S> {
        LabeledPoint::new(self.point.clone(), self.rep_scenario().clone())
    }
}

/// `x_s ~ y_e` iff `x = y` and `x` lies in the overlap region of `s` and `e`.
pub fn equiv<M: Branching>(model: &M, a: &LabeledPoint<M::Scenario>, b: &LabeledPoint<M::Scenario>) -> Result<bool> {
    model.check_scenario(&a.scenario)?;
    model.check_scenario(&b.scenario)?;
    model.check_point(&a.point)?;
    model.check_point(&b.point)?;
    if a.point != b.point {
        return Ok(false);
    }
    in_overlap_region(model, &a.scenario, &b.scenario, &a.point)
}

/// The class of `a` with all of its labels. Needs an explicit scenario set.
pub fn event_class<M: Branching>(model: &M, a: &LabeledPoint<M::Scenario>) -> Result<EventClass<M::Scenario>> {
    model.check_scenario(&a.scenario)?;
    model.check_point(&a.point)?;
    let scenarios = model.finite_scenarios()?;
    let mut labels = BTreeSet::new();
    for s in scenarios {
        if in_overlap_region(model, &a.scenario, s, &a.point)? {
            labels.insert(s.clone());
        }
    }
    Ok(EventClass { point: a.point.clone(), labels: ClassLabels::Materialized(labels) })
}

fn check_class<M: Branching>(model: &M, class: &EventClass<M::Scenario>) -> Result<()> {
    model.check_point(&class.point)?;
    match &class.labels {
        ClassLabels::Materialized(set) => {
            if set.is_empty() {
                return Err(Error::Precondition("event class without labels".into()));
            }
            set.iter().try_for_each(|s| model.check_scenario(s))
        }
        ClassLabels::Representative(s) => model.check_scenario(s),
    }
}

/// Class equality: same point and glued representatives. Points are compared
/// first.
pub fn same_event<M: Branching>(model: &M, a: &EventClass<M::Scenario>, b: &EventClass<M::Scenario>) -> Result<bool> {
    check_class(model, a)?;
    check_class(model, b)?;
    if a.point != b.point {
        return Ok(false);
    }
    equiv(model, &a.rep(), &b.rep())
}

/// `[x_s] <= [y_e]` iff `x <= y` in Minkowski order and `x_s ~ x_e`.
pub fn leq_s<M: Branching>(model: &M, a: &EventClass<M::Scenario>, b: &EventClass<M::Scenario>) -> Result<bool> {
    leq_s_with(model, &a.rep(), &b.rep())
}

/// [`leq_s`] evaluated on explicitly chosen representatives.
pub fn leq_s_with<M: Branching>(
    model: &M,
    a: &LabeledPoint<M::Scenario>,
    b: &LabeledPoint<M::Scenario>,
) -> Result<bool> {
    model.check_scenario(&a.scenario)?;
    model.check_scenario(&b.scenario)?;
    model.check_point(&a.point)?;
    model.check_point(&b.point)?;
    if !minkowski::leq(&a.point, &b.point)? {
        return Ok(false);
    }
    in_overlap_region(model, &a.scenario, &b.scenario, &a.point)
}

pub fn lt_s<M: Branching>(model: &M, a: &EventClass<M::Scenario>, b: &EventClass<M::Scenario>) -> Result<bool> {
    Ok(leq_s(model, a, b)? && !same_event(model, a, b)?)
}

/// [`lt_s`] on representatives.
pub fn lt_s_with<M: Branching>(
    model: &M,
    a: &LabeledPoint<M::Scenario>,
    b: &LabeledPoint<M::Scenario>,
) -> Result<bool> {
    Ok(leq_s_with(model, a, b)? && !(a.point == b.point && equiv(model, a, b)?))
}
