//! The model file format and the inline JSON fragments accepted by flags.
//!
//! Files are JSON, read with a JSON5 parser so hand-written files may use
//! unquoted keys, comments and trailing commas. Rationals are strings
//! `"p/q"` (a bare integer `"p"` is accepted on input).
//!
//! ```json
//! {
//!   "dimension": 2,
//!   "scenarios": ["s", "e"],
//!   "families": [
//!     { "pair": ["s", "e"], "kind": "finite", "data": { "points": [["0/1", "0/1"]] } }
//!   ],
//!   "state": { "anything": "carried, never read" }
//! }
//! ```
//!
//! Family kinds and their `data`:
//!
//! | kind             | data                                                  |
//! |------------------|-------------------------------------------------------|
//! | `finite`         | `{ "points": [point, ...] }`                          |
//! | `integer_row`    | `{ "time": rational, "axis": k }`                     |
//! | `harmonic_pair`  | `{ "center": point, "axis": k }`                      |
//! | `difference_row` | `{ "a": [zero positions], "b": [zero positions] }`    |
//!
//! The 01-sequence model is selected with `"generator": "binary_rows"` in
//! place of `scenarios` and `families`.

use std::fmt;

use mbs_core::model::FamilyEntry;
use mbs_core::{LabeledPoint, ModelSpec, Point, Rational, ScenarioId, SplittingFamily, ZeroSetScenario};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const GENERATOR_BINARY_ROWS: &str = "binary_rows";

/// A syntax or schema error, with where it happened.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// File name or flag the text came from.
    pub source: String,
    /// `line:column` for syntax errors, a field path for schema errors.
    pub location: Option<String>,
    pub message: String,
}

impl ParseError {
    fn at(source: &str, location: impl Into<String>, message: impl Into<String>) -> Self {
        ParseError { source: source.to_string(), location: Some(location.into()), message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.location {
            Some(loc) => write!(f, "{}:{}: {}", self.source, loc, self.message),
            None => write!(f, "{}: {}", self.source, self.message),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawModel {
    dimension: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    generator: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    scenarios: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    families: Option<Vec<RawFamily>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    state: Option<Value>,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawFamily {
    pair: [String; 2],
    kind: String,
    data: Value,
}

#[derive(Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct FiniteData {
    points: Vec<Vec<String>>,
}

#[derive(Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct IntegerRowData {
    time: String,
    axis: usize,
}

#[derive(Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct HarmonicPairData {
    center: Vec<String>,
    axis: usize,
}

#[derive(Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct DifferenceRowData {
    a: Vec<u64>,
    b: Vec<u64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLabeled {
    point: Vec<String>,
    scenario: String,
}

/// A loaded model.
#[derive(Debug, Clone)]
pub enum Model {
    Explicit(ModelSpec),
    BinaryRows,
}

#[derive(Debug, Clone)]
pub struct ModelFile {
    pub model: Model,
    /// Opaque state annotation, kept for round trips.
    pub state: Option<Value>,
}

fn syntax<T: DeserializeOwned>(source: &str, text: &str) -> Result<T, ParseError> {
    json5::from_str(text).map_err(|err| {
        let json5::Error::Message { msg, location } = err;
        ParseError {
            source: source.to_string(),
            location: location.map(|l| format!("{}:{}", l.line, l.column)),
            message: msg,
        }
    })
}

fn field<T: DeserializeOwned>(source: &str, path: &str, value: Value) -> Result<T, ParseError> {
    serde_json::from_value(value).map_err(|e| ParseError::at(source, path, e.to_string()))
}

pub fn parse_rational(source: &str, path: &str, text: &str) -> Result<Rational, ParseError> {
    let t = text.trim();
    let ok = !t.is_empty() && t.chars().all(|c| c.is_ascii_digit() || c == '-' || c == '/' || c == '+');
    if !ok {
        return Err(ParseError::at(source, path, format!("`{text}` is not a rational of the form p/q")));
    }
    t.parse::<Rational>()
        .map_err(|_| ParseError::at(source, path, format!("`{text}` is not a rational of the form p/q")))
}

pub fn parse_point_strings(source: &str, path: &str, coords: &[String]) -> Result<Point, ParseError> {
    let c = coords
        .iter()
        .enumerate()
        .map(|(i, s)| parse_rational(source, &format!("{path}[{i}]"), s))
        .collect::<Result<Vec<_>, _>>()?;
    Point::new(c).map_err(|e| ParseError::at(source, path, e.to_string()))
}

/// A point written as a JSON array of rational strings.
pub fn parse_point(source: &str, text: &str) -> Result<Point, ParseError> {
    let coords: Vec<String> = syntax(source, text)?;
    parse_point_strings(source, "point", &coords)
}

/// A list of points, e.g. a chain.
pub fn parse_points(source: &str, text: &str) -> Result<Vec<Point>, ParseError> {
    let raw: Vec<Vec<String>> = syntax(source, text)?;
    raw.iter().enumerate().map(|(i, c)| parse_point_strings(source, &format!("[{i}]"), c)).collect()
}

/// `{point: [...], scenario: "..."}`, with the label left unparsed.
pub fn parse_labeled(source: &str, text: &str) -> Result<(Point, String), ParseError> {
    let raw: RawLabeled = syntax(source, text)?;
    Ok((parse_point_strings(source, "point", &raw.point)?, raw.scenario))
}

/// A 01-sequence label: its leading bits, optionally followed by `...`; all
/// later bits are 1. The display form `101101...` parses back to itself.
pub fn parse_zero_set(text: &str) -> Option<ZeroSetScenario> {
    let bits = text.strip_suffix("...").unwrap_or(text);
    if !bits.chars().all(|c| c == '0' || c == '1') {
        return None;
    }
    Some(ZeroSetScenario::new(bits.char_indices().filter(|(_, c)| *c == '0').map(|(i, _)| i as u64)))
}

fn decode_family(source: &str, i: usize, raw: RawFamily, dimension: usize) -> Result<FamilyEntry, ParseError> {
    let path = format!("families[{i}]");
    let data = format!("{path}.data");
    let family = match raw.kind.as_str() {
        "finite" => {
            let d: FiniteData = field(source, &data, raw.data)?;
            let points = d
                .points
                .iter()
                .enumerate()
                .map(|(j, c)| parse_point_strings(source, &format!("{data}.points[{j}]"), c))
                .collect::<Result<Vec<_>, _>>()?;
            SplittingFamily::finite(points)
        }
        "integer_row" => {
            let d: IntegerRowData = field(source, &data, raw.data)?;
            SplittingFamily::IntegerRow { time: parse_rational(source, &format!("{data}.time"), &d.time)?, axis: d.axis }
        }
        "harmonic_pair" => {
            let d: HarmonicPairData = field(source, &data, raw.data)?;
            SplittingFamily::HarmonicPair {
                center: parse_point_strings(source, &format!("{data}.center"), &d.center)?,
                axis: d.axis,
            }
        }
        "difference_row" => {
            let d: DifferenceRowData = field(source, &data, raw.data)?;
            SplittingFamily::difference_row(ZeroSetScenario::new(d.a), ZeroSetScenario::new(d.b))
        }
        other => {
            return Err(ParseError::at(
                source,
                format!("{path}.kind"),
                format!("unknown family kind `{other}` (expected finite, integer_row, harmonic_pair or difference_row)"),
            ))
        }
    };
    family.check_dimension(dimension).map_err(|e| ParseError::at(source, &data, e.to_string()))?;
    let [a, b] = raw.pair;
    Ok(FamilyEntry { pair: (ScenarioId::new(a), ScenarioId::new(b)), family })
}

/// Parses a model file. `source` names the file in error messages.
pub fn parse_model(source: &str, text: &str) -> Result<ModelFile, ParseError> {
    let raw: RawModel = syntax(source, text)?;
    let model = match raw.generator.as_deref() {
        Some(GENERATOR_BINARY_ROWS) => {
            if raw.scenarios.is_some() || raw.families.is_some() {
                return Err(ParseError::at(source, "generator", "a generated model has no scenarios or families"));
            }
            if raw.dimension != 2 {
                return Err(ParseError::at(source, "dimension", "the binary_rows generator lives in dimension 2"));
            }
            Model::BinaryRows
        }
        Some(other) => return Err(ParseError::at(source, "generator", format!("unknown generator `{other}`"))),
        None => {
            let scenarios = raw
                .scenarios
                .ok_or_else(|| ParseError::at(source, "scenarios", "missing field `scenarios`"))?;
            let families = raw
                .families
                .unwrap_or_default()
                .into_iter()
                .enumerate()
                .map(|(i, f)| decode_family(source, i, f, raw.dimension))
                .collect::<Result<Vec<_>, _>>()?;
            let spec = ModelSpec::new(raw.dimension, scenarios.into_iter().map(ScenarioId::new).collect(), families)
                .map_err(|e| ParseError { source: source.to_string(), location: None, message: e.to_string() })?;
            Model::Explicit(spec)
        }
    };
    Ok(ModelFile { model, state: raw.state })
}

pub fn read_model(path: &str) -> Result<ModelFile, ParseError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| ParseError { source: path.to_string(), location: None, message: e.to_string() })?;
    parse_model(path, &text)
}

/// `p/q`, with the denominator always written.
pub fn wire_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn wire_point(p: &Point) -> Vec<String> {
    p.coords().iter().map(wire_rational).collect()
}

fn family_data(family: &SplittingFamily) -> Value {
    let v = match family {
        SplittingFamily::Finite(points) => {
            serde_json::to_value(FiniteData { points: points.iter().map(wire_point).collect() })
        }
        SplittingFamily::IntegerRow { time, axis } => {
            serde_json::to_value(IntegerRowData { time: wire_rational(time), axis: *axis })
        }
        SplittingFamily::HarmonicPair { center, axis } => {
            serde_json::to_value(HarmonicPairData { center: wire_point(center), axis: *axis })
        }
        SplittingFamily::DifferenceRow { a, b } => serde_json::to_value(DifferenceRowData {
            a: a.zeros().iter().copied().collect(),
            b: b.zeros().iter().copied().collect(),
        }),
    };
    v.expect("plain data serializes")
}

/// Writes a model in the file format; [`parse_model`] reads it back.
pub fn write_model(file: &ModelFile) -> String {
    let raw = match &file.model {
        Model::Explicit(spec) => RawModel {
            dimension: mbs_core::Branching::dimension(spec),
            generator: None,
            scenarios: Some(spec.scenario_list().iter().map(|s| s.as_str().to_string()).collect()),
            families: Some(
                spec.entries()
                    .iter()
                    .map(|e| RawFamily {
                        pair: [e.pair.0.as_str().to_string(), e.pair.1.as_str().to_string()],
                        kind: e.family.kind_name().to_string(),
                        data: family_data(&e.family),
                    })
                    .collect(),
            ),
            state: file.state.clone(),
        },
        Model::BinaryRows => RawModel {
            dimension: 2,
            generator: Some(GENERATOR_BINARY_ROWS.to_string()),
            scenarios: None,
            families: None,
            state: file.state.clone(),
        },
    };
    let mut out = serde_json::to_string_pretty(&raw).expect("plain data serializes");
    out.push('\n');
    out
}

/// The inline form of a labelled point, as accepted by `--a` and `--b`.
pub fn wire_labeled<S: fmt::Display>(a: &LabeledPoint<S>) -> String {
    serde_json::json!({ "point": wire_point(&a.point), "scenario": a.scenario.to_string() }).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    const TWO: &str = r#"{
        // single splitting point
        dimension: 2,
        scenarios: ["s", "e"],
        families: [{ pair: ["s", "e"], kind: "finite", data: { points: [["0/1", "0/1"]] } }],
    }"#;

    #[test]
    fn reads_unquoted_keys_and_comments() {
        let f = parse_model("two", TWO).unwrap();
        match f.model {
            Model::Explicit(spec) => assert_eq!(spec.entries().len(), 1),
            Model::BinaryRows => panic!("explicit model expected"),
        }
    }

    #[test]
    fn round_trips() {
        let text = r#"{"dimension": 3, "scenarios": ["a", "b", "c"], "families": [
            {"pair": ["a", "b"], "kind": "integer_row", "data": {"time": "1/2", "axis": 2}},
            {"pair": ["a", "c"], "kind": "harmonic_pair", "data": {"center": ["0/1", "1/3", "0/1"], "axis": 1}},
            {"pair": ["b", "c"], "kind": "finite", "data": {"points": [["0/1", "0/1", "0/1"], ["0/1", "2/1", "0/1"]]}}
        ], "state": {"t": [1, 2]}}"#;
        let f = parse_model("m", text).unwrap();
        let written = write_model(&f);
        let again = parse_model("m2", &written).unwrap();
        assert_eq!(written, write_model(&again));
        assert_eq!(again.state, Some(serde_json::json!({"t": [1, 2]})));
    }

    #[test]
    fn errors_carry_locations() {
        let e = parse_model("bad", "{dimension: 2,\n scenarios: [\"s\" \"e\"]}").unwrap_err();
        assert_eq!(e.location.as_deref().map(|l| l.starts_with("2:")), Some(true), "{e}");

        let e = parse_model("bad", r#"{dimension: 2, scenarios: ["s", "e"], families: [{pair: ["s", "e"], kind: "spiral", data: {}}]}"#)
            .unwrap_err();
        assert_eq!(e.location.as_deref(), Some("families[0].kind"));

        let e = parse_model("bad", r#"{dimension: 2, scenarios: ["s", "e"], families: [{pair: ["s", "e"], kind: "finite", data: {points: [["0.5", "0"]]}}]}"#)
            .unwrap_err();
        assert_eq!(e.location.as_deref(), Some("families[0].data.points[0][0]"));

        let e = parse_model("bad", r#"{dimension: 2, scenarios: ["s"], colour: "red"}"#).unwrap_err();
        assert!(e.message.contains("colour"), "{e}");

        let e = parse_model("bad", r#"{dimension: 2, scenarios: ["s", "e"], families: [{pair: ["s", "x"], kind: "finite", data: {points: []}}]}"#)
            .unwrap_err();
        assert!(e.message.contains('x'), "{e}");
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("t", "p", "3/6").unwrap(), mbs_core::rational(1, 2));
        assert_eq!(parse_rational("t", "p", "-2").unwrap(), mbs_core::rational(-2, 1));
        assert!(parse_rational("t", "p", "1/0").is_err());
        assert!(parse_rational("t", "p", "0.5").is_err());
        assert_eq!(wire_rational(&mbs_core::rational(0, 1)), "0/1");
    }

    #[test]
    fn zero_set_labels() {
        let s = ZeroSetScenario::new([1, 4]);
        assert_eq!(parse_zero_set(&s.to_string()), Some(s));
        assert_eq!(parse_zero_set("001"), Some(ZeroSetScenario::prefix(2)));
        assert_eq!(parse_zero_set("1..."), Some(ZeroSetScenario::prefix(0)));
        assert_eq!(parse_zero_set("s1"), None);
    }

    #[test]
    fn generator_models() {
        let f = parse_model("g", r#"{dimension: 2, generator: "binary_rows"}"#).unwrap();
        assert!(matches!(f.model, Model::BinaryRows));
        assert!(parse_model("g", r#"{dimension: 3, generator: "binary_rows"}"#).is_err());
        assert!(parse_model("g", r#"{dimension: 2, generator: "binary_rows", scenarios: []}"#).is_err());
    }

    #[test]
    fn labeled_points() {
        let (p, s) = parse_labeled("--a", r#"{point:["1/2","0/1"],scenario:"s1"}"#).unwrap();
        assert_eq!(p, Point::from_ratios(&[(1, 2), (0, 1)]).unwrap());
        assert_eq!(s, "s1");
        assert!(parse_labeled("--a", r#"{point:["1/2","0/1"]}"#).is_err());
    }
}
