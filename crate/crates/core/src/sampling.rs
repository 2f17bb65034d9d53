//! Seeded, exact sampling of grid points and causal offsets.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::minkowski::Point;
use crate::{Error, Rational, Result};

/// Largest spatial offset, in grid steps, of a sampled causal offset.
const MAX_OFFSET_STEPS: i64 = 4;

/// Where and how much to sample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SamplerConfig {
    pub seed: u64,
    pub cases: usize,
    /// Per-coordinate lower bounds; `lo.len()` is the dimension.
    pub lo: Vec<Rational>,
    pub hi: Vec<Rational>,
    pub step: Rational,
}

impl SamplerConfig {
    /// The cube `[lo, hi]^dimension`.
    pub fn cube(seed: u64, cases: usize, dimension: usize, lo: Rational, hi: Rational, step: Rational) -> Self {
        SamplerConfig {
            seed,
            cases,
            lo: alloc::vec![lo; dimension],
            hi: alloc::vec![hi; dimension],
            step,
        }
    }

    pub fn dimension(&self) -> usize {
        self.lo.len()
    }

    pub fn check(&self) -> Result<()> {
        if !self.step.is_positive() {
            return Err(Error::InvalidGrid("step must be positive".into()));
        }
        if self.lo.len() != self.hi.len() {
            return Err(Error::InvalidGrid("lower and upper bounds differ in length".into()));
        }
        if self.lo.len() < 2 {
            return Err(Error::DimensionTooSmall(self.lo.len()));
        }
        if self.lo.iter().zip(&self.hi).any(|(l, h)| l > h) {
            return Err(Error::InvalidGrid("empty box".into()));
        }
        Ok(())
    }
}

/// Deterministic source of exact sample points.
pub struct Sampler {
    rng: ChaCha8Rng,
    lo: Vec<Rational>,
    counts: Vec<u64>,
    step: Rational,
}

impl Sampler {
    pub fn new(config: &SamplerConfig) -> Result<Self> {
        config.check()?;
        let counts = config
            .lo
            .iter()
            .zip(&config.hi)
            .map(|(l, h)| {
                let n = ((h - l) / &config.step).floor().to_integer();
                u64::try_from(n).unwrap_or(u64::MAX - 1)
            })
            .collect();
        Ok(Sampler {
            rng: ChaCha8Rng::seed_from_u64(config.seed),
            lo: config.lo.clone(),
            counts,
            step: config.step.clone(),
        })
    }

    pub fn dimension(&self) -> usize {
        self.lo.len()
    }

    fn steps(&self, k: i64) -> Rational {
        &self.step * Rational::from_integer(BigInt::from(k))
    }

    /// A uniformly chosen grid point of the box.
    pub fn point(&mut self) -> Point {
        let coords = self
            .lo
            .iter()
            .zip(&self.counts)
            .map(|(l, &n)| {
                let k = self.rng.gen_range(0..=n);
                l + &self.step * Rational::from_integer(BigInt::from(k))
            })
            .collect();
        Point::new(coords).expect("config dimension checked")
    }

    /// A nonzero offset `v` with `0 <= v`: a future-pointing causal vector,
    /// sometimes exactly lightlike.
    pub fn future_offset(&mut self) -> Point {
        let d = self.dimension();
        let spatial: Vec<i64> = (1..d).map(|_| self.rng.gen_range(-MAX_OFFSET_STEPS..=MAX_OFFSET_STEPS)).collect();
        // the l1 norm bounds the euclidean norm
        let l1: i64 = spatial.iter().map(|k| k.abs()).sum();
        let mut time = l1 + self.rng.gen_range(0..=2);
        if time == 0 {
            time = 1;
        }
        let mut coords = Vec::with_capacity(d);
        coords.push(self.steps(time));
        coords.extend(spatial.into_iter().map(|k| self.steps(k)));
        Point::new(coords).expect("dimension >= 2")
    }

    /// The negation of a [`Sampler::future_offset`].
    pub fn past_offset(&mut self) -> Point {
        let v = self.future_offset();
        Point::new(v.into_coords().into_iter().map(|c| -c).collect()).expect("dimension >= 2")
    }

    /// A strictly ascending chain of `len` points starting at `start`.
    pub fn ascending_chain(&mut self, start: Point, len: usize) -> Vec<Point> {
        let mut out = Vec::with_capacity(len);
        let mut cur = start;
        for _ in 0..len {
            out.push(cur.clone());
            let step = self.future_offset();
            cur = cur.translate(&step).expect("same dimension");
        }
        out
    }

    pub fn index(&mut self, len: usize) -> usize {
        self.rng.gen_range(0..len)
    }

    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }

    pub fn choose<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        &items[self.index(items.len())]
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }

    /// A random grid offset of `k` steps, `k` in `-max..=max`.
    pub fn grid_offset(&mut self, max: i64) -> Rational {
        let k = self.rng.gen_range(-max..=max);
        self.steps(k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minkowski;
    use crate::rational;

    fn config() -> SamplerConfig {
        SamplerConfig::cube(7, 10, 3, rational(-2, 1), rational(2, 1), rational(1, 4))
    }

    #[test]
    fn points_stay_in_box_and_on_grid() {
        let mut s = Sampler::new(&config()).unwrap();
        for _ in 0..200 {
            let p = s.point();
            for c in p.coords() {
                assert!(*c >= rational(-2, 1) && *c <= rational(2, 1));
                assert!((c * rational(4, 1)).is_integer());
            }
        }
    }

    #[test]
    fn offsets_are_future_causal() {
        let mut s = Sampler::new(&config()).unwrap();
        let o = Point::origin(3).unwrap();
        for _ in 0..200 {
            let v = s.future_offset();
            assert!(minkowski::lt(&o, &v).unwrap());
            let w = s.past_offset();
            assert!(minkowski::lt(&w, &o).unwrap());
        }
    }

    #[test]
    fn same_seed_same_stream() {
        let mut a = Sampler::new(&config()).unwrap();
        let mut b = Sampler::new(&config()).unwrap();
        for _ in 0..20 {
            assert_eq!(a.point(), b.point());
        }
    }

    #[test]
    fn bad_configs_rejected() {
        let mut c = config();
        c.step = rational(0, 1);
        assert!(Sampler::new(&c).is_err());
        let mut c = config();
        c.hi[0] = rational(-3, 1);
        assert!(Sampler::new(&c).is_err());
    }
}
