//! Histories read off a single scenario, choice points, and the branching
//! space-time axioms checked on samples.
//!
//! A history `h_s` is the set of classes `[x_s]` for all `x`. The class of
//! `x_e` belongs to `h_s` iff `x_e` is glued to `x_s`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::minkowski::{self, Point};
use crate::model::{in_overlap_region, validate_model, Branching, ModelSpec, SplittingFamily, ValidationReport};
use crate::quotient::{equiv, leq_s_with, lt_s_with, LabeledPoint};
use crate::sampling::{Sampler, SamplerConfig};
use crate::{Error, Result};

/// Members examined when a sampler needs splitting points of an infinite
/// family.
const SAMPLED_MEMBERS: usize = 16;

/// The history `{ [x_s] : x in R^d }` of one scenario.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct History<S> {
    pub scenario: S,
}

impl<S> History<S> {
    pub fn of(scenario: S) -> Self {
        History { scenario }
    }
}

/// A finite chain of points, ascending in Minkowski order, optionally with a
/// declared infimum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainSample {
    points: Vec<Point>,
    infimum: Option<Point>,
}

impl ChainSample {
    /// Sorts and deduplicates `points`; fails unless they are pairwise
    /// comparable and the declared infimum is a lower bound.
    pub fn new(mut points: Vec<Point>, infimum: Option<Point>) -> Result<Self> {
        points.sort_by(|a, b| a.time().cmp(b.time()).then_with(|| a.cmp(b)));
        points.dedup();
        for w in points.windows(2) {
            if !minkowski::leq(&w[0], &w[1])? {
                return Err(Error::Precondition(format!("{} and {} are not comparable", w[0], w[1])));
            }
        }
        if let Some(inf) = &infimum {
            for p in &points {
                if !minkowski::leq(inf, p)? {
                    return Err(Error::Precondition(format!("declared infimum {inf} is not below {p}")));
                }
            }
        }
        Ok(ChainSample { points, infimum })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn infimum(&self) -> Option<&Point> {
        self.infimum.as_ref()
    }

    pub fn least(&self) -> Option<&Point> {
        self.points.first()
    }

    pub fn greatest(&self) -> Option<&Point> {
        self.points.last()
    }
}

pub fn in_history<M: Branching>(model: &M, a: &LabeledPoint<M::Scenario>, h: &History<M::Scenario>) -> Result<bool> {
    model.check_scenario(&h.scenario)?;
    equiv(model, a, &LabeledPoint::new(a.point.clone(), h.scenario.clone()))
}

/// Scenarios whose copy of `x` lies in `h`.
pub fn sigma_h<M: Branching>(model: &M, h: &History<M::Scenario>, x: &Point) -> Result<BTreeSet<M::Scenario>> {
    model.check_scenario(&h.scenario)?;
    model.check_point(x)?;
    let mut out = BTreeSet::new();
    for s in model.finite_scenarios()? {
        if in_overlap_region(model, s, &h.scenario, x)? {
            out.insert(s.clone());
        }
    }
    Ok(out)
}

fn distinct_family<'m, M: Branching>(
    model: &'m M,
    a: &M::Scenario,
    b: &M::Scenario,
) -> Result<alloc::borrow::Cow<'m, SplittingFamily>> {
    if a == b {
        return Err(Error::SameScenario(format!("{a}")));
    }
    model.family(a, b)
}

/// `[x_s]` is a generated choice point: `x` is a splitting point of the pair.
pub fn is_generated_choice_point<M: Branching>(model: &M, a: &M::Scenario, b: &M::Scenario, x: &Point) -> Result<bool> {
    model.check_point(x)?;
    distinct_family(model, a, b)?.contains(x)
}

/// Decides whether `x` is maximal in the overlap region of a family.
///
/// Every member is maximal, since anything strictly above it leaves the
/// region. A non-member in the region has a small upward neighbourhood in
/// the region unless it is a limit of members' future cones, which for the
/// catalog happens only at the center of a planar harmonic pair. Off the
/// plane the center is not maximal: lightlike lifts perpendicular to the
/// pair's axis stay in the region.
pub fn choice_point_closed_form(family: &SplittingFamily, dimension: usize, x: &Point) -> Result<bool> {
    x.check_dim(dimension)?;
    if family.contains(x)? {
        return Ok(true);
    }
    Ok(match family {
        SplittingFamily::HarmonicPair { center, .. } => dimension == 2 && x == center,
        _ => false,
    })
}

/// `[x_s]` is maximal in `h_a` intersected with `h_b`.
pub fn is_choice_point<M: Branching>(model: &M, a: &M::Scenario, b: &M::Scenario, x: &Point) -> Result<bool> {
    model.check_point(x)?;
    let family = distinct_family(model, a, b)?;
    choice_point_closed_form(&family, model.dimension(), x)
}

/// A choice point for `h_a`, `h_b` strictly below every point of a chain
/// that lies in `h_a` but outside `h_b`.
pub fn pcp_witness<M: Branching>(model: &M, a: &M::Scenario, b: &M::Scenario, chain: &ChainSample) -> Result<Point> {
    let family = distinct_family(model, a, b)?;
    let least = chain
        .least()
        .ok_or_else(|| Error::Precondition("empty chain".into()))?;
    for p in chain.points() {
        model.check_point(p)?;
        if in_overlap_region(model, a, b, p)? {
            return Err(Error::Precondition(format!("{p} lies in both histories")));
        }
    }
    let witness = family.member_strictly_below(least)?.ok_or(Error::NoPcpWitness)?;
    for p in chain.points() {
        if !minkowski::lt(&witness, p)? {
            return Err(Error::NoPcpWitness);
        }
    }
    if !choice_point_closed_form(&family, model.dimension(), &witness)? {
        return Err(Error::NoPcpWitness);
    }
    Ok(witness)
}

/// The intersection of `sigma_h` over a chain, and whether it is nonempty.
pub fn check_corollary_c1<M: Branching>(
    model: &M,
    h: &History<M::Scenario>,
    chain: &ChainSample,
) -> Result<(bool, BTreeSet<M::Scenario>)> {
    let mut acc: BTreeSet<M::Scenario> = model.finite_scenarios()?.iter().cloned().collect();
    model.check_scenario(&h.scenario)?;
    for p in chain.points() {
        let here = sigma_h(model, h, p)?;
        acc = acc.intersection(&here).cloned().collect();
    }
    Ok((!acc.is_empty(), acc))
}

/// Checks `[x_s] <= [y_s]` iff `x <= y` on every sampled pair.
pub fn history_iso_check<M: Branching>(model: &M, h: &History<M::Scenario>, pairs: &[(Point, Point)]) -> Result<bool> {
    for (x, y) in pairs {
        let a = LabeledPoint::new(x.clone(), h.scenario.clone());
        let b = LabeledPoint::new(y.clone(), h.scenario.clone());
        if leq_s_with(model, &a, &b)? != minkowski::leq(x, y)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Axiom {
    Density,
    NoMaximal,
    Infima,
    Suprema,
    PriorChoice,
}

impl Axiom {
    pub const ALL: [Axiom; 5] = [Axiom::Density, Axiom::NoMaximal, Axiom::Infima, Axiom::Suprema, Axiom::PriorChoice];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Density => "density",
            Axiom::NoMaximal => "no-maximal",
            Axiom::Infima => "infima",
            Axiom::Suprema => "suprema",
            Axiom::PriorChoice => "prior-choice",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomFailure {
    pub case: usize,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub cases: usize,
    pub failures: Vec<AxiomFailure>,
}

impl AxiomCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub validation: ValidationReport,
    /// Empty when validation failed and the suite refused to run.
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn refused(&self) -> bool {
        !self.validation.passed()
    }

    pub fn passed(&self) -> bool {
        !self.refused() && self.checks.iter().all(AxiomCheck::passed)
    }
}

/// Runs the five axiom checks on `config.cases` sampled cases each, after
/// validating the model. A model that fails validation is not sampled.
pub fn axiom_suite(spec: &ModelSpec, config: &SamplerConfig) -> Result<AxiomReport> {
    if config.dimension() != spec.dimension() {
        return Err(Error::DimensionMismatch { left: config.dimension(), right: spec.dimension() });
    }
    let mut sampler = Sampler::new(config)?;
    let validation = validate_model(spec);
    if !validation.passed() {
        return Ok(AxiomReport { validation, checks: Vec::new() });
    }
    let mut checks = Vec::new();
    for axiom in Axiom::ALL {
        let mut failures = Vec::new();
        let mut cases = 0;
        for case in 0..config.cases {
            let outcome = match axiom {
                Axiom::Density => density_case(spec, &mut sampler),
                Axiom::NoMaximal => no_maximal_case(spec, &mut sampler),
                Axiom::Infima => infima_case(spec, &mut sampler),
                Axiom::Suprema => suprema_case(spec, &mut sampler),
                Axiom::PriorChoice => prior_choice_case(spec, &mut sampler),
            }?;
            match outcome {
                CaseOutcome::Pass => cases += 1,
                CaseOutcome::Skip => {}
                CaseOutcome::Fail(detail) => {
                    cases += 1;
                    failures.push(AxiomFailure { case, detail });
                }
            }
        }
        checks.push(AxiomCheck { axiom, cases, failures });
    }
    Ok(AxiomReport { validation, checks })
}

enum CaseOutcome {
    Pass,
    /// Not applicable, e.g. prior choice with a single scenario.
    Skip,
    Fail(String),
}

fn fail_unless(ok: bool, detail: impl FnOnce() -> String) -> CaseOutcome {
    if ok {
        CaseOutcome::Pass
    } else {
        CaseOutcome::Fail(detail())
    }
}

fn lp(p: &Point, s: &crate::ScenarioId) -> LabeledPoint<crate::ScenarioId> {
    LabeledPoint::new(p.clone(), s.clone())
}

/// Between `[x_s] < [y_e]` lies `[m_e]` with `m` the midpoint.
fn density_case(spec: &ModelSpec, sampler: &mut Sampler) -> Result<CaseOutcome> {
    let scenarios = spec.scenario_list();
    let s = sampler.choose(scenarios).clone();
    let x = sampler.point();
    let glued: Vec<_> = scenarios.iter().filter(|e| in_overlap_region(spec, &s, e, &x).unwrap_or(false)).cloned().collect();
    let e = sampler.choose(&glued).clone();
    let y = x.translate(&sampler.future_offset())?;
    let (low, high) = (lp(&x, &s), lp(&y, &e));
    if !lt_s_with(spec, &low, &high)? {
        return Ok(CaseOutcome::Fail(format!("sampled pair {low:?} < {high:?} is not ordered")));
    }
    let mid = lp(&minkowski::density_witness(&x, &y)?, &e);
    let ok = lt_s_with(spec, &low, &mid)? && lt_s_with(spec, &mid, &high)?;
    Ok(fail_unless(ok, || format!("{mid:?} is not strictly between {low:?} and {high:?}")))
}

fn no_maximal_case(spec: &ModelSpec, sampler: &mut Sampler) -> Result<CaseOutcome> {
    let s = sampler.choose(spec.scenario_list()).clone();
    let x = sampler.point();
    let above = x.with_time(x.time() + crate::rational(1, 1));
    let ok = lt_s_with(spec, &lp(&x, &s), &lp(&above, &s))?;
    Ok(fail_unless(ok, || format!("nothing found above {:?}", lp(&x, &s))))
}

/// The least element of a finite chain is its infimum: it is a lower bound,
/// and sampled lower bounds in every label lie below it.
fn infima_case(spec: &ModelSpec, sampler: &mut Sampler) -> Result<CaseOutcome> {
    let scenarios = spec.scenario_list();
    let s = sampler.choose(scenarios).clone();
    let len = sampler.range(2, 6);
    let start = sampler.point();
    let chain = sampler.ascending_chain(start, len);
    let inf = lp(&chain[0], &s);
    for p in &chain {
        if !leq_s_with(spec, &inf, &lp(p, &s))? {
            return Ok(CaseOutcome::Fail(format!("{inf:?} is not below chain element {:?}", lp(p, &s))));
        }
    }
    for _ in 0..4 {
        let probe_point = chain[0].translate(&sampler.past_offset())?;
        let probe = lp(&probe_point, sampler.choose(scenarios));
        let mut lower = true;
        for p in &chain {
            lower &= leq_s_with(spec, &probe, &lp(p, &s))?;
        }
        if lower && !leq_s_with(spec, &probe, &inf)? {
            return Ok(CaseOutcome::Fail(format!("lower bound {probe:?} is not below infimum {inf:?}")));
        }
    }
    Ok(CaseOutcome::Pass)
}

/// In every history containing the chain, its greatest element belongs to
/// the history and is below every sampled upper bound there.
fn suprema_case(spec: &ModelSpec, sampler: &mut Sampler) -> Result<CaseOutcome> {
    let scenarios = spec.scenario_list();
    let s = sampler.choose(scenarios).clone();
    let len = sampler.range(2, 6);
    let start = sampler.point();
    let chain = sampler.ascending_chain(start, len);
    let top_point = chain.last().expect("len >= 2").clone();
    let sup = lp(&top_point, &s);
    for e in scenarios {
        let h = History::of(e.clone());
        let mut contains = true;
        for p in &chain {
            contains &= in_history(spec, &lp(p, &s), &h)?;
        }
        if !contains {
            continue;
        }
        if !in_history(spec, &sup, &h)? {
            return Ok(CaseOutcome::Fail(format!("supremum {sup:?} missing from h_{e}")));
        }
        for _ in 0..2 {
            let bound = lp(&top_point.translate(&sampler.future_offset())?, e);
            if !leq_s_with(spec, &sup, &bound)? {
                return Ok(CaseOutcome::Fail(format!("upper bound {bound:?} in h_{e} is not above {sup:?}")));
            }
        }
    }
    Ok(CaseOutcome::Pass)
}

fn prior_choice_case(spec: &ModelSpec, sampler: &mut Sampler) -> Result<CaseOutcome> {
    let scenarios = spec.scenario_list();
    if scenarios.len() < 2 {
        return Ok(CaseOutcome::Skip);
    }
    let i = sampler.index(scenarios.len());
    let mut j = sampler.index(scenarios.len() - 1);
    if j >= i {
        j += 1;
    }
    let (s, e) = (&scenarios[i], &scenarios[j]);
    let family = spec.family(s, e)?;
    let members = family.truncated_members(spec.dimension(), SAMPLED_MEMBERS);
    let split = sampler.choose(&members).clone();
    let len = sampler.range(1, 5);
    let start = split.translate(&sampler.future_offset())?;
    let chain = ChainSample::new(sampler.ascending_chain(start, len), None)?;
    let witness = match pcp_witness(spec, s, e, &chain) {
        Ok(w) => w,
        Err(err) => return Ok(CaseOutcome::Fail(format!("no witness for chain above {split}: {err}"))),
    };
    let mut ok = in_overlap_region(spec, s, e, &witness)? && is_choice_point(spec, s, e, &witness)?;
    for p in chain.points() {
        ok &= minkowski::lt(&witness, p)?;
    }
    Ok(fail_unless(ok, || format!("witness {witness} fails for chain above {split}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::ScenarioId;
    use crate::rational;
    use alloc::vec;

    fn p(t: i64, x: i64) -> Point {
        Point::from_ints(&[t, x]).unwrap()
    }

    fn two() -> ModelSpec {
        ModelSpec::finite(2, &["s", "e"], vec![("s", "e", vec![p(0, 0)])]).unwrap()
    }

    fn sid(s: &str) -> ScenarioId {
        s.into()
    }

    fn harmonic() -> ModelSpec {
        ModelSpec::new(
            2,
            vec![sid("s"), sid("e")],
            vec![crate::FamilyEntry {
                pair: (sid("s"), sid("e")),
                family: SplittingFamily::HarmonicPair { center: Point::origin(2).unwrap(), axis: 1 },
            }],
        )
        .unwrap()
    }

    #[test]
    fn history_membership() {
        let m = two();
        let hs = History::of(sid("s"));
        assert!(in_history(&m, &LabeledPoint::new(p(1, 0), sid("s")), &hs).unwrap());
        assert!(!in_history(&m, &LabeledPoint::new(p(1, 0), sid("e")), &hs).unwrap());
        assert!(in_history(&m, &LabeledPoint::new(p(-1, 0), sid("e")), &hs).unwrap());
    }

    #[test]
    fn sigma_h_examples() {
        let m = two();
        let hs = History::of(sid("s"));
        assert_eq!(sigma_h(&m, &hs, &p(-1, 0)).unwrap(), [sid("e"), sid("s")].into_iter().collect());
        assert_eq!(sigma_h(&m, &hs, &p(1, 0)).unwrap(), [sid("s")].into_iter().collect());
        assert!(sigma_h(&crate::BinaryRowModel, &History::of(crate::ZeroSetScenario::prefix(1)), &p(0, 0)).is_err());
    }

    #[test]
    fn choice_point_examples() {
        let m = two();
        let (s, e) = (sid("s"), sid("e"));
        assert!(is_generated_choice_point(&m, &s, &e, &p(0, 0)).unwrap());
        assert!(is_choice_point(&m, &s, &e, &p(0, 0)).unwrap());
        assert!(!is_choice_point(&m, &s, &e, &p(1, 0)).unwrap());
        assert!(is_choice_point(&m, &s, &s, &p(0, 0)).is_err());

        let h = harmonic();
        let o = Point::origin(2).unwrap();
        assert!(!is_generated_choice_point(&h, &s, &e, &o).unwrap());
        assert!(is_choice_point(&h, &s, &e, &o).unwrap());
        let third = Point::from_ratios(&[(0, 1), (1, 3)]).unwrap();
        assert!(is_generated_choice_point(&h, &s, &e, &third).unwrap());
        assert!(is_choice_point(&h, &s, &e, &third).unwrap());
    }

    #[test]
    fn pcp_examples() {
        let m = two();
        let (s, e) = (sid("s"), sid("e"));
        let chain = ChainSample::new(vec![p(3, 0), p(2, 0)], None).unwrap();
        assert_eq!(pcp_witness(&m, &s, &e, &chain).unwrap(), p(0, 0));
        let outside = ChainSample::new(vec![p(1, 5)], None).unwrap();
        assert!(matches!(pcp_witness(&m, &s, &e, &outside), Err(Error::Precondition(_))));

        let ce = crate::BinaryRowModel;
        let z1 = ChainSample::new(vec![crate::counterexample::z_point(1)], None).unwrap();
        let w = pcp_witness(&ce, &crate::ZeroSetScenario::prefix(0), &crate::ZeroSetScenario::prefix(1), &z1).unwrap();
        assert_eq!(w, p(0, 0));
    }

    #[test]
    fn chain_sample_rejects_incomparable() {
        assert!(ChainSample::new(vec![p(0, 0), p(0, 1)], None).is_err());
        assert!(ChainSample::new(vec![p(1, 0)], Some(p(2, 0))).is_err());
        let c = ChainSample::new(vec![p(2, 0), p(1, 0), p(1, 0)], Some(p(0, 0))).unwrap();
        assert_eq!(c.points(), &[p(1, 0), p(2, 0)]);
    }

    #[test]
    fn corollary_examples() {
        let m = two();
        let hs = History::of(sid("s"));
        let below = ChainSample::new(vec![p(-2, 0), p(-1, 0)], None).unwrap();
        assert_eq!(check_corollary_c1(&m, &hs, &below).unwrap(), (true, [sid("e"), sid("s")].into_iter().collect()));
        let across = ChainSample::new(vec![p(-1, 0), p(1, 0)], None).unwrap();
        assert_eq!(check_corollary_c1(&m, &hs, &across).unwrap(), (true, [sid("s")].into_iter().collect()));
    }

    #[test]
    fn iso_examples() {
        let m = two();
        let hs = History::of(sid("s"));
        assert!(history_iso_check(&m, &hs, &[(p(1, 0), p(1, 0))]).unwrap());
        assert!(history_iso_check(&m, &hs, &[(p(-1, 0), p(1, 0)), (p(0, 0), p(0, 1)), (p(1, 1), p(-1, 0))]).unwrap());
    }

    #[test]
    fn axiom_suite_runs_and_gates() {
        let cfg = SamplerConfig::cube(1, 50, 2, rational(-2, 1), rational(2, 1), rational(1, 4));
        let r = axiom_suite(&two(), &cfg).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(r.checks.iter().all(|c| c.cases == 50));

        let single = ModelSpec::finite(2, &["s"], vec![]).unwrap();
        let r = axiom_suite(&single, &cfg).unwrap();
        assert!(r.passed());

        let bad = ModelSpec::finite(
            2,
            &["a", "b", "c"],
            vec![("a", "b", vec![p(0, 0)]), ("b", "c", vec![p(0, 2)]), ("a", "c", vec![p(0, 1)])],
        )
        .unwrap();
        let r = axiom_suite(&bad, &cfg).unwrap();
        assert!(r.refused() && r.checks.is_empty());
    }
}
