//! Minkowski geometry over exact rationals.
//!
//! The interval is `-(dt)^2 + |dx|^2` and `x <= y` holds iff the interval is
//! non-positive and `x` is not later than `y`. Lightlike separation counts as
//! causal.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_traits::{Signed, Zero};

use crate::rational::{dyadic_sqrt_ceil, Rational};
use crate::{Error, Result};

/// Precision of the rational lift used by [`up`]: overshoots are multiples
/// of `2^-16`.
pub const UP_PRECISION_BITS: u32 = 16;

/// A point of `R^d`. `coords[0]` is time, the rest are spatial.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    coords: Vec<Rational>,
}

impl Point {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::DimensionTooSmall(coords.len()));
        }
        Ok(Point { coords })
    }

    /// Builds a point from integer pairs `(numer, denom)`.
    pub fn from_ratios(coords: &[(i64, i64)]) -> Result<Self> {
        Point::new(coords.iter().map(|&(n, d)| crate::rational(n, d)).collect())
    }

    /// Builds a point from integer coordinates.
    pub fn from_ints(coords: &[i64]) -> Result<Self> {
        Point::new(coords.iter().map(|&n| crate::rational(n, 1)).collect())
    }

    /// The origin of `R^dimension`.
    pub fn origin(dimension: usize) -> Result<Self> {
        Point::new((0..dimension).map(|_| Rational::zero()).collect())
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn time(&self) -> &Rational {
        &self.coords[0]
    }

    pub fn space(&self) -> &[Rational] {
        &self.coords[1..]
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    /// Same point with the time coordinate replaced.
    pub fn with_time(&self, time: Rational) -> Point {
        let mut coords = self.coords.clone();
        coords[0] = time;
        Point { coords }
    }

    /// Same point with coordinate `index` replaced.
    pub fn with_coord(&self, index: usize, value: Rational) -> Point {
        let mut coords = self.coords.clone();
        coords[index] = value;
        Point { coords }
    }

    /// Coordinate-wise sum. Dimensions must agree.
    pub fn translate(&self, offset: &Point) -> Result<Point> {
        check_dims(self, offset)?;
        Ok(Point {
            coords: self.coords.iter().zip(&offset.coords).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn check_dim(&self, dimension: usize) -> Result<()> {
        if self.dim() == dimension {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { left: self.dim(), right: dimension })
        }
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// How two points are causally related. Exactly one variant holds for any
/// pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CausalRelation {
    Equal,
    /// The first point is strictly below the second.
    Before,
    /// The first point is strictly above the second.
    After,
    Spacelike,
}

fn check_dims(x: &Point, y: &Point) -> Result<()> {
    if x.dim() == y.dim() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { left: x.dim(), right: y.dim() })
    }
}

/// Squared spatial distance.
pub fn spatial_distance_sq(x: &Point, y: &Point) -> Result<Rational> {
    check_dims(x, y)?;
    Ok(x.space()
        .iter()
        .zip(y.space())
        .map(|(a, b)| {
            let d = a - b;
            &d * &d
        })
        .fold(Rational::zero(), |acc, v| acc + v))
}

/// The Minkowski interval `-(x0 - y0)^2 + sum_i (xi - yi)^2`.
pub fn interval(x: &Point, y: &Point) -> Result<Rational> {
    let space = spatial_distance_sq(x, y)?;
    let dt = x.time() - y.time();
    Ok(space - &dt * &dt)
}

pub fn leq(x: &Point, y: &Point) -> Result<bool> {
    let iv = interval(x, y)?;
    Ok(!iv.is_positive() && x.time() <= y.time())
}

pub fn lt(x: &Point, y: &Point) -> Result<bool> {
    Ok(x != y && leq(x, y)?)
}

/// Space-like related: neither point is causally below the other.
pub fn slr(x: &Point, y: &Point) -> Result<bool> {
    Ok(relation(x, y)? == CausalRelation::Spacelike)
}

pub fn relation(x: &Point, y: &Point) -> Result<CausalRelation> {
    let iv = interval(x, y)?;
    if iv.is_positive() {
        return Ok(CausalRelation::Spacelike);
    }
    Ok(match x.time().cmp(y.time()) {
        Ordering::Less => CausalRelation::Before,
        Ordering::Greater => CausalRelation::After,
        // same time and non-positive interval forces equal positions
        Ordering::Equal => CausalRelation::Equal,
    })
}

/// A point with the spatial coordinates of `a` that lies causally above
/// both `b` and `a`.
///
/// The time coordinate is `max(a0, b0) + r` where `r` is the smallest
/// multiple of `2^-16` with `r^2` at least the squared spatial distance
/// between `a` and `b`.
pub fn up(a: &Point, b: &Point) -> Result<Point> {
    let dist = spatial_distance_sq(a, b)?;
    let lift = dyadic_sqrt_ceil(&dist, UP_PRECISION_BITS);
    let base = core::cmp::max(a.time(), b.time()).clone();
    Ok(a.with_time(base + lift))
}

/// Some point above both `x` and `y`; it carries the spatial coordinates
/// of `x`.
pub fn join_witness(x: &Point, y: &Point) -> Result<Point> {
    up(&up(x, x)?, y)
}

/// The midpoint of a strictly ordered pair, which lies strictly between
/// them.
pub fn density_witness(x: &Point, y: &Point) -> Result<Point> {
    if !lt(x, y)? {
        return Err(Error::NotStrictlyOrdered);
    }
    let half = crate::rational(1, 2);
    Ok(Point {
        coords: x.coords.iter().zip(&y.coords).map(|(a, b)| (a + b) * &half).collect(),
    })
}
