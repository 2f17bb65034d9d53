//! Acceptance gate: every criterion at its stated scale, one line each.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::mutants::{CenterNotChoice, FiniteSkipsLast, HarmonicOffByOne, IntegerRowStrict};
use common::{broken_triangle, random_spec, two_scenarios};
use mbs_core::counterexample::{
    excluding_level, nonrepresentability_witness, sigma_h_star, verify_zi_chain, ZeroSetScenario,
};
use mbs_core::histories::{axiom_suite, check_corollary_c1, history_iso_check, is_choice_point, is_generated_choice_point, ChainSample, History};
use mbs_core::minkowski::{self, CausalRelation};
use mbs_core::model::{validate_model, FamilyEntry};
use mbs_core::oracle::{oracle_choice_points, oracle_cross_check, oracle_cross_check_with, Decisions, GridSpec};
use mbs_core::quotient::{equiv, event_class, leq_s, same_event};
use mbs_core::sampling::{Sampler, SamplerConfig};
use mbs_core::{rational, Branching, LabeledPoint, ModelSpec, Point, Rational, ScenarioId, SplittingFamily};

type Outcome = Result<String, String>;

/// The finite specs the suites run on: the two-scenario spec and random
/// validated ones in the plane.
fn finite_specs() -> Vec<ModelSpec> {
    let mut out = vec![two_scenarios(2)];
    out.extend((0..5).map(|seed| random_spec(seed, 2)));
    out
}

fn config(seed: u64, cases: usize, dimension: usize) -> SamplerConfig {
    SamplerConfig::cube(seed, cases, dimension, rational(-2, 1), rational(2, 1), rational(1, 4))
}

fn order_laws() -> Outcome {
    let samples = 100_000;
    let mut failures = 0;
    for d in [2usize, 4] {
        let cfg = SamplerConfig::cube(11 + d as u64, 0, d, rational(-4, 1), rational(4, 1), rational(1, 8));
        let mut s = Sampler::new(&cfg).unwrap();
        for _ in 0..samples {
            let x = s.point();
            let y = if s.coin() { x.translate(&s.future_offset()).unwrap() } else { s.point() };
            let z = if s.coin() { y.translate(&s.future_offset()).unwrap() } else { s.point() };
            let leq = |a: &Point, b: &Point| minkowski::leq(a, b).unwrap();
            let mut ok = leq(&x, &x);
            if leq(&x, &y) && leq(&y, &x) {
                ok &= x == y;
            }
            if leq(&x, &y) && leq(&y, &z) {
                ok &= leq(&x, &z);
            }
            let before = minkowski::lt(&x, &y).unwrap();
            let after = minkowski::lt(&y, &x).unwrap();
            let slr = minkowski::slr(&x, &y).unwrap();
            ok &= [before, after, x == y, slr].iter().filter(|b| **b).count() == 1;
            ok &= (minkowski::relation(&x, &y).unwrap() == CausalRelation::Spacelike) == slr;
            ok &= minkowski::interval(&x, &y).unwrap() == minkowski::interval(&y, &x).unwrap();
            if !ok {
                failures += 1;
            }
        }
    }
    if failures == 0 {
        Ok(format!("{} triples in d=2 and d=4, 0 failures", 2 * samples))
    } else {
        Err(format!("{failures} failing triples"))
    }
}

fn quotient_laws() -> Outcome {
    let samples = 10_000;
    let mut failures = 0;
    for (i, m) in finite_specs().iter().enumerate() {
        let labels = m.scenario_list().to_vec();
        let mut s = Sampler::new(&config(100 + i as u64, 0, 2)).unwrap();
        for _ in 0..samples {
            let x = s.point();
            let [a, b, c] = [0; 3].map(|_| LabeledPoint::new(x.clone(), s.choose(&labels).clone()));
            let eq = |p: &LabeledPoint<ScenarioId>, q: &LabeledPoint<ScenarioId>| equiv(m, p, q).unwrap();
            let mut ok = eq(&a, &a) && eq(&a, &b) == eq(&b, &a);
            if eq(&a, &b) && eq(&b, &c) {
                ok &= eq(&a, &c);
            }
            let y = x.translate(&s.future_offset()).unwrap();
            let z = if s.coin() { y.translate(&s.future_offset()).unwrap() } else { s.point() };
            let cls = [(&x, &a), (&y, &b), (&z, &c)]
                .map(|(p, l)| event_class(m, &LabeledPoint::new(p.clone(), l.scenario.clone())).unwrap());
            let le = |i: usize, j: usize| leq_s(m, &cls[i], &cls[j]).unwrap();
            ok &= le(0, 0) && le(1, 1);
            if le(0, 1) && le(1, 0) {
                ok &= same_event(m, &cls[0], &cls[1]).unwrap();
            }
            if le(0, 1) && le(1, 2) {
                ok &= le(0, 2);
            }
            if !ok {
                failures += 1;
            }
        }
    }
    if failures > 0 {
        return Err(format!("{failures} failing samples on validated specs"));
    }
    let broken = broken_triangle();
    let labels = broken.scenario_list().to_vec();
    let mut s = Sampler::new(&config(7, 0, 2)).unwrap();
    let mut found = None;
    for _ in 0..samples {
        let x = s.point();
        let [a, b, c] = [0; 3].map(|_| LabeledPoint::new(x.clone(), s.choose(&labels).clone()));
        if equiv(&broken, &a, &b).unwrap() && equiv(&broken, &b, &c).unwrap() && !equiv(&broken, &a, &c).unwrap() {
            found = Some((a, b, c));
            break;
        }
    }
    match found {
        Some((a, b, c)) => Ok(format!(
            "{} specs x {samples} samples, 0 failures; broken triangle spec: {a:?} ~ {b:?} ~ {c:?} but not {a:?} ~ {c:?}",
            finite_specs().len()
        )),
        None => Err("no transitivity failure found on the broken triangle spec".into()),
    }
}

fn axiom_suites() -> Outcome {
    let mut failures = Vec::new();
    let mut cases = 0;
    for (i, m) in finite_specs().iter().enumerate() {
        let report = axiom_suite(m, &config(200 + i as u64, 1000, 2)).unwrap();
        if report.refused() {
            return Err(format!("spec {i} refused by validation"));
        }
        for c in &report.checks {
            cases += c.cases;
            failures.extend(c.failures.iter().map(|f| format!("spec {i} {}: {}", c.axiom.name(), f.detail)));
        }
    }
    if failures.is_empty() {
        Ok(format!("{} specs, {cases} cases, 0 failures", finite_specs().len()))
    } else {
        Err(format!("{} failures, first: {}", failures.len(), failures[0]))
    }
}

fn finite_collapse() -> Outcome {
    let mut specs: Vec<ModelSpec> = finite_specs();
    specs.extend((0..2).map(|seed| random_spec(seed, 3)));
    let mut checked = 0;
    let mut disagreements = 0;
    for m in &specs {
        let report = validate_model(m);
        if !report.passed() {
            return Err("a suite spec failed validation".into());
        }
        let grid = GridSpec::cube(m.dimension(), rational(-2, 1), rational(2, 1), rational(1, 4), 0);
        let r = oracle_cross_check(m, &grid).unwrap();
        for p in &r.pairs {
            checked += p.grid_points - p.flagged;
            disagreements += p.choice_disagreements.len() + p.overlap_disagreements.len();
        }
    }
    if disagreements == 0 {
        Ok(format!("{} specs (d=2,3), {checked} unflagged pair-points, 0 disagreements", specs.len()))
    } else {
        Err(format!("{disagreements} disagreements"))
    }
}

fn harmonic_model() -> ModelSpec {
    let (s, e) = (ScenarioId::from("s"), ScenarioId::from("e"));
    let family = SplittingFamily::HarmonicPair { center: Point::origin(2).unwrap(), axis: 1 };
    ModelSpec::new(2, vec![s.clone(), e.clone()], vec![FamilyEntry { pair: (s, e), family }]).unwrap()
}

fn emergent_choice_point() -> Outcome {
    let m = harmonic_model();
    let (s, e) = (ScenarioId::from("s"), ScenarioId::from("e"));
    let o = Point::origin(2).unwrap();
    let analytic = is_choice_point(&m, &s, &e, &o).unwrap();
    let generated = is_generated_choice_point(&m, &s, &e, &o).unwrap();
    let mut grid = GridSpec::cube(2, rational(-1, 2), rational(1, 2), rational(1, 8), 1000);
    // half steps cannot resolve the non-member 3/8 between 1/3 and 1/2
    grid.refine = 4;
    let oracle = oracle_choice_points(&m, &s, &e, &grid).unwrap();
    let listed = oracle.candidates.contains(&o) && !oracle.flagged.contains(&o);
    let disagreements = oracle_cross_check(&m, &grid).unwrap().disagreements();
    if analytic && !generated && listed && oracle.region.warnings.is_empty() && disagreements == 0 {
        Ok("(0,0): choice point, not generated, unflagged oracle candidate; full cross-check agrees".into())
    } else {
        Err(format!(
            "analytic={analytic} generated={generated} oracle listed={listed} warnings={:?} disagreements={disagreements}",
            oracle.region.warnings
        ))
    }
}

fn counterexample() -> Outcome {
    if !verify_zi_chain(50) {
        return Err("z chain not ordered up to 50".into());
    }
    let all = ZeroSetScenario::all_with_support(10);
    for s in &all {
        let w = nonrepresentability_witness(s).unwrap();
        let k = Rational::from_integer(w.k.into());
        let dt = &k + rational(1, 2);
        if !w.verified() || w.interval != &k * &k - &dt * &dt {
            return Err(format!("witness for {s} fails"));
        }
        let level = excluding_level(s);
        if sigma_h_star(level).contains_by_overlap(s).unwrap() || sigma_h_star(level).contains(s) {
            return Err(format!("{s} is not excluded at level {level}"));
        }
    }
    for k in 1..=50 {
        let member = ZeroSetScenario::prefix(k);
        for i in 1..=k {
            if !sigma_h_star(i).contains_by_overlap(&member).unwrap() {
                return Err(format!("intersection up to {k} is empty"));
            }
        }
    }
    Ok(format!("chain to 50 ordered, {} witnesses exact, intersections nonempty to 50", all.len()))
}

fn corollary() -> Outcome {
    let specs = finite_specs();
    let mut s = Sampler::new(&config(300, 0, 2)).unwrap();
    for case in 0..1000 {
        let m = s.choose(&specs);
        let h = History::of(s.choose(m.scenario_list()).clone());
        let len = s.range(1, 6);
        let start = s.point();
        let chain = ChainSample::new(s.ascending_chain(start, len), None).unwrap();
        let (ok, _) = check_corollary_c1(m, &h, &chain).unwrap();
        if !ok {
            return Err(format!("case {case}: empty intersection"));
        }
    }
    Ok("1000 triples, 0 failures".into())
}

fn isomorphism() -> Outcome {
    let specs = finite_specs();
    for (i, m) in specs.iter().enumerate() {
        let mut s = Sampler::new(&config(400 + i as u64, 0, 2)).unwrap();
        let pairs: Vec<(Point, Point)> = (0..10_000)
            .map(|_| {
                let x = s.point();
                let y = if s.coin() { x.translate(&s.future_offset()).unwrap() } else { s.point() };
                (x, y)
            })
            .collect();
        for label in m.scenario_list() {
            if !history_iso_check(m, &History::of(label.clone()), &pairs).unwrap() {
                return Err(format!("spec {i} history {label}"));
            }
        }
    }
    Ok(format!("{} specs x 10000 pairs per history, 0 failures", specs.len()))
}

fn sensitivity() -> Outcome {
    let mut harmonic = GridSpec::cube(2, rational(-1, 1), rational(1, 1), rational(1, 8), 1000);
    harmonic.refine = 4;
    let row_model = {
        let (s, e) = (ScenarioId::from("s"), ScenarioId::from("e"));
        let family = SplittingFamily::IntegerRow { time: rational(0, 1), axis: 1 };
        ModelSpec::new(2, vec![s.clone(), e.clone()], vec![FamilyEntry { pair: (s, e), family }]).unwrap()
    };
    let row = GridSpec::cube(2, rational(-1, 1), rational(2, 1), rational(1, 2), 10);
    let finite = GridSpec::cube(2, rational(-1, 1), rational(1, 1), rational(1, 4), 0);
    let results = [
        ("harmonic off-by-one", disagreements(&harmonic_model(), &harmonic, &HarmonicOffByOne)),
        ("harmonic center dropped", disagreements(&harmonic_model(), &harmonic, &CenterNotChoice)),
        ("integer row strict", disagreements(&row_model, &row, &IntegerRowStrict)),
        ("finite skips last", disagreements(&two_scenarios(2), &finite, &FiniteSkipsLast)),
    ];
    let summary = results.iter().map(|(n, c)| format!("{n}: {c}")).collect::<Vec<_>>().join(", ");
    if results.iter().all(|(_, c)| *c > 0) {
        Ok(summary)
    } else {
        Err(summary)
    }
}

fn disagreements<D: Decisions>(m: &ModelSpec, grid: &GridSpec, decisions: &D) -> usize {
    oracle_cross_check_with(m, grid, decisions).unwrap().disagreements()
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("order laws", order_laws),
        ("quotient laws", quotient_laws),
        ("axiom suite", axiom_suites),
        ("finite choice-point collapse", finite_collapse),
        ("emergent choice point", emergent_choice_point),
        ("non-representable chain", counterexample),
        ("finite corollary", corollary),
        ("history isomorphism", isomorphism),
        ("oracle sensitivity", sensitivity),
    ];
    let mut all = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail}) [{secs:.1}s]", i + 1),
            Err(detail) => {
                all = false;
                println!("criterion {} {name}: FAIL ({detail}) [{secs:.1}s]", i + 1);
            }
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
