use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::io::{self, Write};

use mbs_core::counterexample::{build_report, BinaryRowModel};
use mbs_core::histories::{
    axiom_suite, is_choice_point, is_generated_choice_point, pcp_witness, sigma_h, ChainSample, History,
};
use mbs_core::model::{in_overlap_region, validate_model, Check, Evidence, Outcome, Violation};
use mbs_core::oracle::{oracle_choice_points, oracle_cross_check, GridSpec, MAX_GRID_POINTS};
use mbs_core::quotient::{equiv, leq_s_with};
use mbs_core::sampling::SamplerConfig;
use mbs_core::{Branching, LabeledPoint, ModelSpec, Point, Rational, ScenarioId, SplittingFamily};
use num_traits::Signed;

use crate::args::{self, Command, Query};
use crate::file::{self, parse_rational, read_model, Model, ModelFile, ParseError};
use crate::plot::{render_svg, Cell, PlotData};

/// Why a command could not produce a verdict.
#[derive(Debug)]
pub enum Failure {
    Parse(ParseError),
    /// The input parsed but the core rejected it.
    Model(mbs_core::Error),
    Io(String, io::Error),
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Parse(e) => write!(f, "{e}"),
            Failure::Model(e) => write!(f, "{e}"),
            Failure::Io(path, e) => write!(f, "{path}: {e}"),
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Parse(e)
    }
}

impl From<mbs_core::Error> for Failure {
    fn from(e: mbs_core::Error) -> Self {
        Failure::Model(e)
    }
}

/// Whether every check a command ran passed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

type Res = Result<Status, Failure>;

fn out_err(e: io::Error) -> Failure {
    Failure::Io("<stdout>".into(), e)
}

/// Models whose scenario labels can be read from text.
trait Labels: Branching {
    fn label(&self, flag: &str, text: &str) -> Result<Self::Scenario, Failure>;
}

impl Labels for ModelSpec {
    fn label(&self, _flag: &str, text: &str) -> Result<ScenarioId, Failure> {
        let s = ScenarioId::new(text);
        self.check_scenario(&s)?;
        Ok(s)
    }
}

impl Labels for BinaryRowModel {
    fn label(&self, flag: &str, text: &str) -> Result<mbs_core::ZeroSetScenario, Failure> {
        file::parse_zero_set(text).ok_or_else(|| {
            Failure::Parse(ParseError {
                source: flag.into(),
                location: None,
                message: format!("`{text}` is not a 01-sequence label such as 0011..."),
            })
        })
    }
}

macro_rules! with_model {
    ($file:expr, $m:ident => $body:expr) => {
        match &$file.model {
            Model::Explicit(spec) => {
                let $m = spec;
                $body
            }
            Model::BinaryRows => {
                let $m = &BinaryRowModel;
                $body
            }
        }
    };
}

fn explicit<'a>(file: &'a ModelFile, command: &str) -> Result<&'a ModelSpec, Failure> {
    match &file.model {
        Model::Explicit(spec) => Ok(spec),
        Model::BinaryRows => Err(Failure::Model(mbs_core::Error::Precondition(format!(
            "{command} needs a model with an explicit scenario list"
        )))),
    }
}

pub fn execute(command: &Command, out: &mut dyn Write) -> Res {
    match command {
        Command::Validate(a) => validate(&read_model(&a.model)?, &a.model, out),
        Command::Query(q) => query(q, out),
        Command::ChoicePoints(a) => {
            let f = read_model(&a.model)?;
            with_model!(f, m => choice_points(m, a, out))
        }
        Command::Axioms(a) => axioms(&read_model(&a.model)?, a, out),
        Command::Counterexample(a) => counterexample(a, out),
        Command::Oracle(a) => oracle(&read_model(&a.model)?, a, out),
        Command::Plot(a) => {
            let f = read_model(&a.model)?;
            with_model!(f, m => plot(m, a, out))
        }
    }
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "✓"
    } else {
        "✗"
    }
}

fn check_label(c: Check) -> &'static str {
    match c {
        Check::Spacelike => "SLR",
        other => other.name(),
    }
}

fn describe_violation(v: &Violation, scenarios: &[ScenarioId]) -> String {
    match v {
        Violation::Asymmetric => "entries for the pair list different splitting points".into(),
        Violation::CausalPair { lower, upper } => format!("splitting points {lower} <= {upper} are causally related"),
        Violation::Empty => "no splitting points".into(),
        Violation::Triangle { witness } => match scenarios {
            [a, b, c] => format!("{witness} in C({a},{c}) has nothing below it in C({a},{b}) or C({b},{c})"),
            _ => format!("{witness} is uncovered"),
        },
    }
}

fn validate(file: &ModelFile, path: &str, out: &mut dyn Write) -> Res {
    let checks = [Check::Symmetry, Check::Spacelike, Check::Nonempty, Check::Triangle];
    let spec = match &file.model {
        Model::BinaryRows => {
            writeln!(out, "model {path}: dimension 2, generated 01-sequence scenarios").map_err(out_err)?;
            let line: Vec<String> = checks.iter().map(|c| format!("{} ✓", check_label(*c))).collect();
            writeln!(out, "{} (by construction)", line.join(" ")).map_err(out_err)?;
            return Ok(Status::Pass);
        }
        Model::Explicit(spec) => spec,
    };
    let report = validate_model(spec);
    writeln!(
        out,
        "model {path}: dimension {}, {} scenarios, {} families",
        spec.dimension(),
        spec.scenario_list().len(),
        spec.entries().len()
    )
    .map_err(out_err)?;
    let line: Vec<String> = checks.iter().map(|c| format!("{} {}", check_label(*c), mark(report.check_passed(*c)))).collect();
    writeln!(out, "{}", line.join(" ")).map_err(out_err)?;
    let sampled = report
        .entries
        .iter()
        .filter(|e| matches!(e.outcome, Outcome::Pass(Evidence::Sampled { .. })))
        .count();
    if sampled > 0 {
        writeln!(
            out,
            "note: {sampled} triangle checks on infinite families were sampled on their first {} members",
            mbs_core::model::TRIANGLE_SAMPLE_MEMBERS
        )
        .map_err(out_err)?;
    }
    for e in report.failures() {
        if let Outcome::Fail(v) = &e.outcome {
            let labels: Vec<&str> = e.scenarios.iter().map(ScenarioId::as_str).collect();
            writeln!(out, "  ✗ {} [{}]: {}", check_label(e.check), labels.join(", "), describe_violation(v, &e.scenarios))
                .map_err(out_err)?;
        }
    }
    Ok(Status::from_bool(report.passed()))
}

fn labeled<M: Labels>(m: &M, flag: &str, text: &str) -> Result<LabeledPoint<M::Scenario>, Failure> {
    let (point, label) = file::parse_labeled(flag, text)?;
    Ok(LabeledPoint::new(point, m.label(flag, &label)?))
}

fn print_bool(out: &mut dyn Write, value: bool) -> Res {
    writeln!(out, "{value}").map_err(out_err)?;
    Ok(Status::Pass)
}

fn query(q: &Query, out: &mut dyn Write) -> Res {
    match q {
        Query::Order(a) => {
            let f = read_model(&a.model)?;
            with_model!(f, m => {
                let (x, y) = (labeled(m, "--a", &a.a)?, labeled(m, "--b", &a.b)?);
                print_bool(out, leq_s_with(m, &x, &y)?)
            })
        }
        Query::Equiv(a) => {
            let f = read_model(&a.model)?;
            with_model!(f, m => {
                let (x, y) = (labeled(m, "--a", &a.a)?, labeled(m, "--b", &a.b)?);
                print_bool(out, equiv(m, &x, &y)?)
            })
        }
        Query::Overlap(a) => {
            let f = read_model(&a.model)?;
            with_model!(f, m => {
                let s = m.label("--sigma", &a.sigma)?;
                let e = m.label("--eta", &a.eta)?;
                let x = file::parse_point("--point", &a.point)?;
                print_bool(out, in_overlap_region(m, &s, &e, &x)?)
            })
        }
        Query::History(a) => {
            let f = read_model(&a.model)?;
            let spec = explicit(&f, "query history")?;
            let h = History::of(spec.label("--history", &a.history)?);
            let x = file::parse_point("--point", &a.point)?;
            let set = sigma_h(spec, &h, &x)?;
            let names: Vec<&str> = set.iter().map(ScenarioId::as_str).collect();
            writeln!(out, "{{{}}}", names.join(", ")).map_err(out_err)?;
            Ok(Status::Pass)
        }
    }
}

fn choice_points<M: Labels>(m: &M, a: &args::ChoicePoints, out: &mut dyn Write) -> Res {
    let s = m.label("--sigma", &a.sigma)?;
    let e = m.label("--eta", &a.eta)?;
    if s == e {
        return Err(Failure::Model(mbs_core::Error::SameScenario(s.to_string())));
    }
    if let Some(text) = &a.point {
        let x = file::parse_point("--point", text)?;
        writeln!(out, "in overlap region: {}", in_overlap_region(m, &s, &e, &x)?).map_err(out_err)?;
        writeln!(out, "choice point: {}", is_choice_point(m, &s, &e, &x)?).map_err(out_err)?;
        writeln!(out, "generated: {}", is_generated_choice_point(m, &s, &e, &x)?).map_err(out_err)?;
        return Ok(Status::Pass);
    }
    if let Some(text) = &a.chain {
        let chain = ChainSample::new(file::parse_points("--chain", text)?, None)?;
        return match pcp_witness(m, &s, &e, &chain) {
            Ok(w) => {
                writeln!(out, "prior choice point: {w}").map_err(out_err)?;
                Ok(Status::Pass)
            }
            Err(mbs_core::Error::NoPcpWitness) => {
                writeln!(out, "no choice point below the chain").map_err(out_err)?;
                Ok(Status::Fail)
            }
            Err(err) => Err(err.into()),
        };
    }
    let family = m.family(&s, &e)?;
    let d = m.dimension();
    let (members, more) = match family.members(d) {
        Some(all) => (all, false),
        None => (family.truncated_members(d, a.limit), true),
    };
    writeln!(out, "family ({s},{e}): {}", family.kind_name()).map_err(out_err)?;
    writeln!(out, "generated choice points:").map_err(out_err)?;
    for p in &members {
        writeln!(out, "  {p}").map_err(out_err)?;
    }
    if more {
        writeln!(out, "  ...").map_err(out_err)?;
    }
    writeln!(out, "emergent choice points:").map_err(out_err)?;
    match family.as_ref() {
        SplittingFamily::HarmonicPair { center, .. } if d == 2 => writeln!(out, "  {center}").map_err(out_err)?,
        _ => writeln!(out, "  none").map_err(out_err)?,
    }
    Ok(Status::Pass)
}

/// `lo,hi` for every coordinate or one `lo,hi` pair per coordinate.
fn parse_box(text: &str, dimension: usize) -> Result<(Vec<Rational>, Vec<Rational>), ParseError> {
    let values = text
        .split(',')
        .enumerate()
        .map(|(i, v)| parse_rational("--box", &format!("[{i}]"), v))
        .collect::<Result<Vec<_>, _>>()?;
    let (lo, hi): (Vec<Rational>, Vec<Rational>) = if values.len() == 2 {
        (vec![values[0].clone(); dimension], vec![values[1].clone(); dimension])
    } else if values.len() == 2 * dimension {
        values.chunks(2).map(|c| (c[0].clone(), c[1].clone())).unzip()
    } else {
        return Err(ParseError {
            source: "--box".into(),
            location: None,
            message: format!("expected 2 or {} values, found {}", 2 * dimension, values.len()),
        });
    };
    if lo.iter().zip(&hi).any(|(l, h)| l > h) {
        return Err(ParseError { source: "--box".into(), location: None, message: "lower bound above upper bound".into() });
    }
    Ok((lo, hi))
}

fn parse_step(text: &str) -> Result<Rational, ParseError> {
    let step = parse_rational("--step", "step", text)?;
    if !step.is_positive() {
        return Err(ParseError { source: "--step".into(), location: None, message: "step must be positive".into() });
    }
    Ok(step)
}

fn axioms(file: &ModelFile, a: &args::Axioms, out: &mut dyn Write) -> Res {
    let spec = explicit(file, "axioms")?;
    let (lo, hi) = parse_box(&a.bounds, spec.dimension())?;
    let config = SamplerConfig { seed: a.seed, cases: a.cases, lo, hi, step: parse_step(&a.step)? };
    let report = axiom_suite(spec, &config)?;
    if report.refused() {
        writeln!(out, "refused: the model fails validation").map_err(out_err)?;
        for e in report.validation.failures() {
            if let Outcome::Fail(v) = &e.outcome {
                writeln!(out, "  ✗ {}: {}", check_label(e.check), describe_violation(v, &e.scenarios)).map_err(out_err)?;
            }
        }
        return Ok(Status::Fail);
    }
    writeln!(out, "seed {}, {} cases per axiom", a.seed, a.cases).map_err(out_err)?;
    for c in &report.checks {
        writeln!(out, "{:<13} {:>6} cases  {}", c.axiom.name(), c.cases, mark(c.passed())).map_err(out_err)?;
        for f in c.failures.iter().take(5) {
            writeln!(out, "  case {}: {}", f.case, f.detail).map_err(out_err)?;
        }
    }
    Ok(Status::from_bool(report.passed()))
}

fn counterexample(a: &args::Counterexample, out: &mut dyn Write) -> Res {
    let report = build_report(a.depth, a.support)?;
    let chain = mbs_core::counterexample::labeled_z_chain(a.depth);
    writeln!(out, "chain [z_m s_m] <= [z_n s_n], z_i = (i-1/2,0), s_i zero below i").map_err(out_err)?;
    writeln!(out, "{:>4} {:>4}  {:<12} {:<14} {:<12} {:<14} holds", "m", "n", "z_m", "s_m", "z_n", "s_n").map_err(out_err)?;
    for (m, n, holds) in &report.chain_rows {
        let (x, y) = (&chain[*m as usize - 1], &chain[*n as usize - 1]);
        writeln!(
            out,
            "{m:>4} {n:>4}  {:<12} {:<14} {:<12} {:<14} {holds}",
            x.point.to_string(),
            x.scenario.to_string(),
            y.point.to_string(),
            y.scenario.to_string()
        )
        .map_err(out_err)?;
    }
    match report.chain_failure {
        None => writeln!(out, "all pairs m < n <= {} ordered", a.depth).map_err(out_err)?,
        Some((m, n)) => writeln!(out, "order fails at m={m}, n={n}").map_err(out_err)?,
    }
    writeln!(out).map_err(out_err)?;
    writeln!(out, "no scenario carries the chain: s splits from s_(k+1) at (0,k) below z_(k+1)").map_err(out_err)?;
    writeln!(out, "{:<14} {:>3}  {:<8} {:>9}  verified", "scenario", "k", "split", "interval").map_err(out_err)?;
    for w in &report.witnesses {
        writeln!(
            out,
            "{:<14} {:>3}  {:<8} {:>9}  {}",
            w.scenario.to_string(),
            w.k,
            w.splitting_point.to_string(),
            file::wire_rational(&w.interval),
            w.verified()
        )
        .map_err(out_err)?;
    }
    writeln!(out).map_err(out_err)?;
    writeln!(out, "shrinking sets: scenarios glued to the chain's history at z_i").map_err(out_err)?;
    for row in &report.trace {
        writeln!(
            out,
            "{:>4}  {}  e.g. {}, {}; common member {}",
            row.level,
            mbs_core::counterexample::sigma_h_star(row.level).description(),
            row.sample[0],
            row.sample[1],
            row.intersection_witness
        )
        .map_err(out_err)?;
    }
    writeln!(out, "every scenario s is excluded at level k(s)+1, so the intersection over all levels is empty")
        .map_err(out_err)?;
    Ok(Status::from_bool(report.passed()))
}

fn oracle(file: &ModelFile, a: &args::Oracle, out: &mut dyn Write) -> Res {
    let spec = explicit(file, "oracle")?;
    let (lo, hi) = parse_box(&a.bounds, spec.dimension())?;
    let grid = GridSpec { lo, hi, step: parse_step(&a.step)?, truncation: a.truncate, refine: a.refine };
    let report = oracle_cross_check(spec, &grid)?;
    for p in &report.pairs {
        writeln!(
            out,
            "pair ({},{}): {} grid points, {} flagged, {} order checks, {} disagreements",
            p.pair.0,
            p.pair.1,
            p.grid_points,
            p.flagged,
            p.order_checks,
            p.disagreements()
        )
        .map_err(out_err)?;
        for w in &p.warnings {
            writeln!(out, "  warning: {w}").map_err(out_err)?;
        }
        for x in &p.overlap_disagreements {
            writeln!(out, "  overlap differs at {x}").map_err(out_err)?;
        }
        for c in &p.choice_disagreements {
            writeln!(out, "  choice point differs at {}: analytic {}, oracle {}", c.point, c.analytic, c.oracle)
                .map_err(out_err)?;
        }
        for (x, y) in &p.order_disagreements {
            writeln!(out, "  order differs for [{x}_{}] <= [{y}_{}]", p.pair.0, p.pair.1).map_err(out_err)?;
        }
    }
    writeln!(out, "{} disagreements", report.disagreements()).map_err(out_err)?;
    if let Some(path) = &a.csv {
        write_oracle_csv(spec, &grid, path)?;
    }
    Ok(Status::from_bool(report.passed()))
}

fn write_oracle_csv(spec: &ModelSpec, grid: &GridSpec, path: &str) -> Result<(), Failure> {
    let io_err = |e: csv::Error| Failure::Io(path.to_string(), e.into());
    let mut w = csv::Writer::from_path(path).map_err(io_err)?;
    let d = spec.dimension();
    let mut header = vec!["sigma".to_string(), "eta".to_string()];
    header.extend((0..d).map(|i| format!("x{i}")));
    header.extend(["in_region", "candidate", "flagged"].map(String::from));
    w.write_record(&header).map_err(io_err)?;
    let mut labels = spec.scenario_list().to_vec();
    labels.sort();
    for (i, s) in labels.iter().enumerate() {
        for e in &labels[i + 1..] {
            let c = oracle_choice_points(spec, s, e, grid)?;
            let all = grid_points(&grid.lo, &grid.hi, &grid.step);
            for p in all {
                let mut row = vec![s.to_string(), e.to_string()];
                row.extend(file::wire_point(&p));
                row.push(c.region.points.contains(&p).to_string());
                row.push(c.candidates.contains(&p).to_string());
                row.push(c.flagged.contains(&p).to_string());
                w.write_record(&row).map_err(io_err)?;
            }
        }
    }
    w.flush().map_err(|e| Failure::Io(path.to_string(), e))
}

fn steps_between(lo: &Rational, hi: &Rational, step: &Rational) -> usize {
    use num_traits::ToPrimitive;
    ((hi - lo) / step).floor().to_integer().to_usize().unwrap_or(usize::MAX)
}

/// Grid points in lexicographic order; the oracle has already bounded the
/// grid size.
fn grid_points(lo: &[Rational], hi: &[Rational], step: &Rational) -> Vec<Point> {
    let axes: Vec<Vec<Rational>> = lo
        .iter()
        .zip(hi)
        .map(|(l, h)| (0..=steps_between(l, h, step)).map(|k| l + step * Rational::from_integer(k.into())).collect())
        .collect();
    let mut out = vec![Vec::new()];
    for axis in &axes {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                axis.iter().map(move |v| {
                    let mut p = prefix.clone();
                    p.push(v.clone());
                    p
                })
            })
            .collect();
    }
    out.into_iter().map(|c| Point::new(c).expect("dimension >= 2")).collect()
}

fn parse_slice(text: Option<&str>, dimension: usize, axis: usize) -> Result<BTreeMap<usize, Rational>, ParseError> {
    let err = |m: String| ParseError { source: "--slice".into(), location: None, message: m };
    let mut fixed = BTreeMap::new();
    for part in text.unwrap_or("").split(',').filter(|p| !p.trim().is_empty()) {
        let (k, v) = part.split_once('=').ok_or_else(|| err(format!("`{part}` is not of the form index=value")))?;
        let k: usize = k.trim().parse().map_err(|_| err(format!("`{k}` is not a coordinate index")))?;
        if k == 0 || k == axis || k >= dimension {
            return Err(err(format!("coordinate {k} cannot be fixed")));
        }
        fixed.insert(k, parse_rational("--slice", part, v)?);
    }
    let missing: Vec<usize> = (1..dimension).filter(|k| *k != axis && !fixed.contains_key(k)).collect();
    if !missing.is_empty() {
        return Err(err(format!("dimension {dimension} needs values for coordinates {missing:?}")));
    }
    Ok(fixed)
}

fn plot<M: Labels>(m: &M, a: &args::Plot, out: &mut dyn Write) -> Res {
    let d = m.dimension();
    if a.axis == 0 || a.axis >= d {
        return Err(Failure::Model(mbs_core::Error::AxisOutOfRange { axis: a.axis, dimension: d }));
    }
    let fixed = parse_slice(a.slice.as_deref(), d, a.axis)?;
    let s = m.label("--sigma", &a.sigma)?;
    let e = m.label("--eta", &a.eta)?;
    let (lo, hi) = parse_box(&a.bounds, 2)?;
    let step = parse_step(&a.step)?;
    let rows = steps_between(&lo[0], &hi[0], &step).saturating_add(1);
    let cols = steps_between(&lo[1], &hi[1], &step).saturating_add(1);
    if (rows as u128) * (cols as u128) > MAX_GRID_POINTS {
        return Err(Failure::Model(mbs_core::Error::GridTooLarge {
            points: rows as u128 * cols as u128,
            limit: MAX_GRID_POINTS,
        }));
    }
    let embed = |t: &Rational, x: &Rational| {
        let mut c = vec![Rational::from_integer(0.into()); d];
        c[0] = t.clone();
        c[a.axis] = x.clone();
        for (k, v) in &fixed {
            c[*k] = v.clone();
        }
        Point::new(c).expect("dimension >= 2")
    };
    let family = m.family(&s, &e)?;
    let io_err = |e: csv::Error| Failure::Io(a.csv.clone(), e.into());
    let mut w = csv::Writer::from_path(&a.csv).map_err(io_err)?;
    w.write_record(["t", "x", "in_region", "choice_point"]).map_err(io_err)?;
    let mut cells = Vec::with_capacity(rows * cols);
    let at = |k: usize, base: &Rational| base + &step * Rational::from_integer(k.into());
    for i in 0..rows {
        let t = at(i, &lo[0]);
        for j in 0..cols {
            let x = at(j, &lo[1]);
            let p = embed(&t, &x);
            let in_region = in_overlap_region(m, &s, &e, &p)?;
            let choice_point = is_choice_point(m, &s, &e, &p)?;
            let generated = family.contains(&p)?;
            w.write_record([file::wire_rational(&t), file::wire_rational(&x), in_region.to_string(), choice_point.to_string()])
                .map_err(io_err)?;
            cells.push(Cell { i, j, in_region, choice_point, generated });
        }
    }
    w.flush().map_err(|e| Failure::Io(a.csv.clone(), e))?;

    let on_slice = |p: &Point| fixed.iter().all(|(k, v)| &p.coords()[*k] == v);
    let others_zero = |p: &Point| (1..d).all(|k| k == a.axis || fixed.contains_key(&k) || p.coords()[k] == Rational::from_integer(0.into()));
    let in_box = |p: &Point| {
        let (t, x) = (p.time(), &p.coords()[a.axis]);
        t >= &lo[0] && t <= &hi[0] && x >= &lo[1] && x <= &hi[1]
    };
    let members: BTreeSet<(Rational, Rational)> = family
        .truncated_members(d, a.truncate)
        .into_iter()
        .filter(|p| on_slice(p) && others_zero(p) && in_box(p))
        .map(|p| (p.time().clone(), p.coords()[a.axis].clone()))
        .collect();
    let data = PlotData {
        title: format!("overlap of {s} and {e}"),
        t_lo: lo[0].clone(),
        x_lo: lo[1].clone(),
        step: step.clone(),
        rows,
        cols,
        cells,
        members: members.into_iter().collect(),
        x_label: format!("x{}", a.axis),
    };
    std::fs::write(&a.svg, render_svg(&data)).map_err(|err| Failure::Io(a.svg.clone(), err))?;
    let region = data.cells.iter().filter(|c| c.in_region).count();
    let choice: Vec<String> = data
        .cells
        .iter()
        .filter(|c| c.choice_point)
        .map(|c| embed(&at(c.i, &lo[0]), &at(c.j, &lo[1])).to_string())
        .collect();
    writeln!(out, "{} grid points, {region} in the overlap region, {} splitting marks", data.cells.len(), data.members.len())
        .map_err(out_err)?;
    writeln!(out, "choice points on the grid: {}", if choice.is_empty() { "none".to_string() } else { choice.join(" ") })
        .map_err(out_err)?;
    writeln!(out, "wrote {} and {}", a.svg, a.csv).map_err(out_err)?;
    Ok(Status::Pass)
}
