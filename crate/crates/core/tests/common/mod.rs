#![allow(dead_code)]

use mbs_core::model::ValidationReport;
use mbs_core::{rational, ModelSpec, Point, Rational};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn pt(coords: &[(i64, i64)]) -> Point {
    Point::from_ratios(coords).unwrap()
}

pub fn ints(coords: &[i64]) -> Point {
    Point::from_ints(coords).unwrap()
}

/// Two scenarios split at the origin.
pub fn two_scenarios(dimension: usize) -> ModelSpec {
    ModelSpec::finite(dimension, &["s", "e"], vec![("s", "e", vec![Point::origin(dimension).unwrap()])]).unwrap()
}

/// Three scenarios whose ac family is not covered by ab and bc.
pub fn broken_triangle() -> ModelSpec {
    ModelSpec::finite(
        2,
        &["a", "b", "c"],
        vec![("a", "b", vec![ints(&[0, 0])]), ("b", "c", vec![ints(&[0, 2])]), ("a", "c", vec![ints(&[0, 1])])],
    )
    .unwrap()
}

/// A random finite model that satisfies every consistency condition.
///
/// A pool of pairwise space-like points is fixed and each scenario picks a
/// distinct bit vector over it; two scenarios split exactly where their
/// vectors differ. A position where `a` and `c` differ is one where `a, b`
/// or `b, c` differ, so the triangle condition holds with `y = x`.
pub fn random_spec(seed: u64, dimension: usize) -> ModelSpec {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool_len = rng.gen_range(2..=8usize);
    let scenarios_len = rng.gen_range(2..=5usize).min(1 << pool_len);
    // x positions 1/2 apart, times at most 1/4 apart: every pair is space-like
    let pool: Vec<Point> = (0..pool_len)
        .map(|j| {
            let mut c: Vec<Rational> = vec![rational(0, 1); dimension];
            c[0] = rational(rng.gen_range(0..=1), 4);
            c[1] = rational(2 * j as i64 - 7, 4);
            for v in c.iter_mut().skip(2) {
                *v = rational(rng.gen_range(-1..=1), 4);
            }
            Point::new(c).unwrap()
        })
        .collect();
    let mut codes: Vec<u32> = (0..1u32 << pool_len).collect();
    codes.shuffle(&mut rng);
    codes.truncate(scenarios_len);
    let labels: Vec<String> = (0..scenarios_len).map(|i| format!("s{i}")).collect();
    let label_refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let mut families = Vec::new();
    for i in 0..scenarios_len {
        for j in i + 1..scenarios_len {
            let diff = codes[i] ^ codes[j];
            let members = (0..pool_len).filter(|k| diff >> k & 1 == 1).map(|k| pool[k].clone()).collect();
            families.push((label_refs[i], label_refs[j], members));
        }
    }
    ModelSpec::finite(dimension, &label_refs, families).unwrap()
}

pub fn describe_failures(report: &ValidationReport) -> String {
    report.failures().map(|e| format!("{:?} {:?} {:?}", e.check, e.scenarios, e.outcome)).collect::<Vec<_>>().join("; ")
}

pub mod mutants {
    use mbs_core::histories::choice_point_closed_form;
    use mbs_core::minkowski;
    use mbs_core::oracle::{ClosedForms, Decisions};
    use mbs_core::{Point, Result, SplittingFamily};

    /// Harmonic members are indexed from 2 instead of 1.
    pub struct HarmonicOffByOne;

    impl Decisions for HarmonicOffByOne {
        fn exists_strictly_below(&self, family: &SplittingFamily, x: &Point) -> Result<bool> {
            match family {
                SplittingFamily::HarmonicPair { .. } => {
                    let members = family.truncated_members(x.dim(), 1000);
                    for m in members.iter().skip(2) {
                        if minkowski::lt(m, x)? {
                            return Ok(true);
                        }
                    }
                    Ok(false)
                }
                _ => ClosedForms.exists_strictly_below(family, x),
            }
        }

        fn is_choice_point(&self, family: &SplittingFamily, dimension: usize, x: &Point) -> Result<bool> {
            ClosedForms.is_choice_point(family, dimension, x)
        }
    }

    /// Integer rows only count time-like separation.
    pub struct IntegerRowStrict;

    impl Decisions for IntegerRowStrict {
        fn exists_strictly_below(&self, family: &SplittingFamily, x: &Point) -> Result<bool> {
            match family {
                SplittingFamily::IntegerRow { .. } => {
                    for m in family.truncated_members(x.dim(), 1000) {
                        if m.time() < x.time() && minkowski::interval(&m, x)? < num_traits::Zero::zero() {
                            return Ok(true);
                        }
                    }
                    Ok(false)
                }
                _ => ClosedForms.exists_strictly_below(family, x),
            }
        }

        fn is_choice_point(&self, family: &SplittingFamily, dimension: usize, x: &Point) -> Result<bool> {
            ClosedForms.is_choice_point(family, dimension, x)
        }
    }

    /// The scan over a finite family stops before its last member.
    pub struct FiniteSkipsLast;

    impl Decisions for FiniteSkipsLast {
        fn exists_strictly_below(&self, family: &SplittingFamily, x: &Point) -> Result<bool> {
            match family {
                SplittingFamily::Finite(points) => {
                    let n = points.len().saturating_sub(1);
                    for m in &points[..n] {
                        if minkowski::lt(m, x)? {
                            return Ok(true);
                        }
                    }
                    Ok(false)
                }
                _ => ClosedForms.exists_strictly_below(family, x),
            }
        }

        fn is_choice_point(&self, family: &SplittingFamily, dimension: usize, x: &Point) -> Result<bool> {
            ClosedForms.is_choice_point(family, dimension, x)
        }
    }

    /// Forgets that the center of a planar harmonic pair is a choice point.
    pub struct CenterNotChoice;

    impl Decisions for CenterNotChoice {
        fn exists_strictly_below(&self, family: &SplittingFamily, x: &Point) -> Result<bool> {
            ClosedForms.exists_strictly_below(family, x)
        }

        fn is_choice_point(&self, family: &SplittingFamily, dimension: usize, x: &Point) -> Result<bool> {
            Ok(family.contains(x)? && choice_point_closed_form(family, dimension, x)?)
        }
    }
}
