//! Monomial (affine semigroup) algebras: exact Hilbert-function enumeration
//! by breadth-first closure over weighted degree, lattice rank of the
//! generated group, cumulative growth tables, and the combined dimension
//! report in which Krull dimension, transcendence degree, growth slope and
//! pole order are cross-checked against each other.
//!
//! Enumeration is degree-stratified: the elements of weighted degree n are
//! exactly the sums e + g over elements e of degree n - deg(g), so only
//! degrees up to the truncation are ever materialized, and a per-degree
//! deduplication set is enough (equal vectors have equal degrees).

use std::collections::HashSet;
use std::hash::{BuildHasherDefault, Hasher};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::IntegerLattice;
use crate::monomial::{ExponentVector, WeightVector};
use crate::series::{
    default_denominator_candidates, default_guard, fit_rational, pole_order_at_one, FitOutcome,
    GradedSeries, RationalSeries,
};

/// Default cap on the number of distinct monoid elements an enumeration may
/// store before reporting a capacity error.
pub const DEFAULT_MAX_ELEMENTS: usize = 20_000_000;

/// A finitely generated submonoid of N^n with a weighted grading.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidPresentation {
    vars: usize,
    weights: WeightVector,
    generators: Vec<ExponentVector>,
}

impl MonoidPresentation {
    /// Validate dimensions and that every generator is nonzero (weights are
    /// positive, so nonzero generators have weighted degree >= 1).
    pub fn new(
        vars: usize,
        weights: WeightVector,
        generators: Vec<ExponentVector>,
    ) -> Result<Self> {
        if weights.dim() != vars {
            return Err(Error::DimensionMismatch {
                expected: vars,
                got: weights.dim(),
            });
        }
        for (i, g) in generators.iter().enumerate() {
            if g.dim() != vars {
                return Err(Error::DimensionMismatch {
                    expected: vars,
                    got: g.dim(),
                });
            }
            if g.is_one() {
                return Err(Error::InvalidGenerator {
                    index: i,
                    reason: "monoid generators must be nonzero".into(),
                });
            }
        }
        Ok(Self {
            vars,
            weights,
            generators,
        })
    }

    /// Standard grading shortcut.
    pub fn with_unit_weights(vars: usize, generators: Vec<ExponentVector>) -> Result<Self> {
        Self::new(vars, WeightVector::ones(vars), generators)
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    /// Weighted degrees of the generators.
    pub fn generator_degrees(&self) -> Vec<u64> {
        self.generators
            .iter()
            .map(|g| g.weighted_degree(&self.weights).expect("validated"))
            .collect()
    }

    /// h_n = number of distinct monoid elements of weighted degree exactly
    /// n, for 0 <= n <= n_max.
    ///
    /// Fails with a capacity error once more than `max_elements` distinct
    /// elements would have to be stored.
    pub fn hilbert_function(&self, n_max: usize, max_elements: usize) -> Result<GradedSeries> {
        // exponent i is bounded by n_max / w_i, so the per-variable bit
        // widths below hold every element of degree <= n_max, and a packed
        // integer key addition can never overflow a field
        let layout = PackedLayout::for_bounds(&self.weights, n_max);
        let counts = if layout.total_bits <= 64 {
            self.enumerate_packed::<u64>(&layout, n_max, max_elements)?
        } else if layout.total_bits <= 128 {
            self.enumerate_packed::<u128>(&layout, n_max, max_elements)?
        } else {
            self.enumerate_boxed(n_max, max_elements)?
        };
        Ok(GradedSeries::from_u64s(&counts))
    }

    /// Packed path: every element of degree <= n_max fits one integer key.
    fn enumerate_packed<K: PackedKey>(
        &self,
        layout: &PackedLayout,
        n_max: usize,
        max_elements: usize,
    ) -> Result<Vec<u64>> {
        let mut gens: Vec<(K, usize)> = Vec::new();
        for g in self.dedup_generators() {
            let d = g.weighted_degree(&self.weights).expect("validated") as usize;
            if d <= n_max {
                gens.push((K::pack(&g, layout), d));
            }
        }
        let mut counts = vec![0u64; n_max + 1];
        counts[0] = 1;
        let mut by_degree: Vec<Vec<K>> = vec![Vec::new(); n_max + 1];
        by_degree[0].push(K::ZERO);
        let mut total = 1usize;
        for n in 1..=n_max {
            let mut set: FxSet<K> = FxSet::default();
            for &(gkey, gdeg) in &gens {
                if gdeg > n {
                    continue;
                }
                for &e in &by_degree[n - gdeg] {
                    set.insert(e.combine(gkey));
                }
            }
            counts[n] = set.len() as u64;
            total += set.len();
            if total > max_elements {
                return Err(Error::CapacityExceeded {
                    count: total,
                    limit: max_elements,
                });
            }
            by_degree[n] = set.into_iter().collect();
        }
        Ok(counts)
    }

    /// Fallback for monoids whose exponent ranges exceed 128 packed bits:
    /// elements are boxed byte slices (u8 per variable when the truncation
    /// allows it, u16 otherwise).
    fn enumerate_boxed(&self, n_max: usize, max_elements: usize) -> Result<Vec<u64>> {
        if n_max > u16::MAX as usize {
            return Err(Error::SeriesPrecondition(format!(
                "enumeration truncation {n_max} exceeds the supported bound {}",
                u16::MAX
            )));
        }
        let wide = n_max > u8::MAX as usize;
        let encode = |g: &ExponentVector| -> Box<[u8]> {
            if wide {
                g.exps()
                    .iter()
                    .flat_map(|&e| (e as u16).to_le_bytes())
                    .collect()
            } else {
                g.exps().iter().map(|&e| e as u8).collect()
            }
        };
        let mut gens: Vec<(Box<[u8]>, usize)> = Vec::new();
        for g in self.dedup_generators() {
            let d = g.weighted_degree(&self.weights).expect("validated") as usize;
            if d <= n_max {
                gens.push((encode(&g), d));
            }
        }
        let mut counts = vec![0u64; n_max + 1];
        counts[0] = 1;
        let mut by_degree: Vec<Vec<Box<[u8]>>> = vec![Vec::new(); n_max + 1];
        by_degree[0].push(encode(&ExponentVector::one(self.vars)));
        let mut total = 1usize;
        let mut scratch: Vec<u8> = Vec::new();
        for n in 1..=n_max {
            let mut set: FxSet<Box<[u8]>> = FxSet::default();
            for (gkey, gdeg) in &gens {
                if *gdeg > n {
                    continue;
                }
                for e in &by_degree[n - gdeg] {
                    scratch.clear();
                    if wide {
                        for (a, b) in e.chunks_exact(2).zip(gkey.chunks_exact(2)) {
                            let sum = u16::from_le_bytes([a[0], a[1]])
                                + u16::from_le_bytes([b[0], b[1]]);
                            scratch.extend_from_slice(&sum.to_le_bytes());
                        }
                    } else {
                        scratch.extend(e.iter().zip(gkey.iter()).map(|(&a, &b)| a + b));
                    }
                    // probe before allocating an owned key; most candidates
                    // are duplicates
                    if !set.contains(scratch.as_slice()) {
                        set.insert(scratch.as_slice().into());
                    }
                }
            }
            counts[n] = set.len() as u64;
            total += set.len();
            if total > max_elements {
                return Err(Error::CapacityExceeded {
                    count: total,
                    limit: max_elements,
                });
            }
            by_degree[n] = set.into_iter().collect();
        }
        Ok(counts)
    }

    fn dedup_generators(&self) -> Vec<ExponentVector> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for g in &self.generators {
            if seen.insert(g.clone()) {
                out.push(g.clone());
            }
        }
        out
    }

    /// Rank of the subgroup of Z^n generated by the generators: the rank of
    /// the Grothendieck group of the monoid, which equals the Krull
    /// dimension, the transcendence degree, the GK dimension and the pole
    /// order of the monoid algebra.
    pub fn rank(&self) -> usize {
        let rows = self
            .generators
            .iter()
            .map(|g| g.exps().iter().map(|&e| BigInt::from(e)).collect())
            .collect();
        IntegerLattice::new(self.vars, rows)
            .expect("validated dimensions")
            .rank()
    }
}

/// Per-variable field offsets for packing exponent vectors into integers.
struct PackedLayout {
    offsets: Vec<u32>,
    total_bits: u32,
}

impl PackedLayout {
    fn for_bounds(weights: &WeightVector, n_max: usize) -> Self {
        let mut offsets = Vec::with_capacity(weights.dim());
        let mut total = 0u32;
        for &w in weights.weights() {
            offsets.push(total);
            let bound = n_max as u64 / u64::from(w);
            let width = if bound == 0 { 0 } else { 64 - bound.leading_zeros() };
            total = total.saturating_add(width);
        }
        Self {
            offsets,
            total_bits: total,
        }
    }
}

trait PackedKey: Copy + Eq + std::hash::Hash {
    const ZERO: Self;
    fn pack(g: &ExponentVector, layout: &PackedLayout) -> Self;
    fn combine(self, other: Self) -> Self;
}

impl PackedKey for u64 {
    const ZERO: Self = 0;

    fn pack(g: &ExponentVector, layout: &PackedLayout) -> Self {
        let mut key = 0u64;
        for (&e, &off) in g.exps().iter().zip(&layout.offsets) {
            // zero-width fields (weight beyond the truncation) may sit at
            // offset 64; their exponents are always zero here
            if e != 0 {
                key |= u64::from(e) << off;
            }
        }
        key
    }

    #[inline]
    fn combine(self, other: Self) -> Self {
        self + other
    }
}

impl PackedKey for u128 {
    const ZERO: Self = 0;

    fn pack(g: &ExponentVector, layout: &PackedLayout) -> Self {
        let mut key = 0u128;
        for (&e, &off) in g.exps().iter().zip(&layout.offsets) {
            if e != 0 {
                key |= u128::from(e) << off;
            }
        }
        key
    }

    #[inline]
    fn combine(self, other: Self) -> Self {
        self + other
    }
}

/// Cumulative counts A(N) = sum of h_n for n <= N.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthTable {
    cumulative: Vec<BigInt>,
}

impl GrowthTable {
    pub fn cumulative(&self) -> &[BigInt] {
        &self.cumulative
    }

    pub fn value(&self, n: usize) -> &BigInt {
        &self.cumulative[n]
    }

    pub fn len(&self) -> usize {
        self.cumulative.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cumulative.is_empty()
    }
}

/// Prefix sums of the coefficient sequence.
pub fn growth_table(h: &GradedSeries) -> GrowthTable {
    let mut acc = BigInt::zero();
    let cumulative = h
        .coeffs()
        .iter()
        .map(|c| {
            acc += c;
            acc.clone()
        })
        .collect();
    GrowthTable { cumulative }
}

/// Least-squares slope of log A(N) against log N over the window
/// [lo, hi] -- the finite surrogate for the Gelfand-Kirillov dimension.
///
/// Requires lo >= 2, hi within the table, and at least 5 points.
pub fn gk_slope(a: &GrowthTable, lo: usize, hi: usize) -> Result<f64> {
    if lo < 2 {
        return Err(Error::SeriesPrecondition(
            "growth window must start at N >= 2".into(),
        ));
    }
    if hi >= a.len() {
        return Err(Error::SeriesPrecondition(format!(
            "growth window end {hi} is beyond the table (len {})",
            a.len()
        )));
    }
    if hi < lo || hi - lo + 1 < 5 {
        return Err(Error::SeriesPrecondition(
            "growth window too small: need at least 5 points".into(),
        ));
    }
    let points: Vec<(f64, f64)> = (lo..=hi)
        .map(|n| {
            let x = (n as f64).ln();
            let y = big_ln(a.value(n));
            (x, y)
        })
        .collect();
    let k = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / k;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / k;
    let mut num = 0.0;
    let mut den = 0.0;
    for (x, y) in points {
        num += (x - mean_x) * (y - mean_y);
        den += (x - mean_x) * (x - mean_x);
    }
    Ok(num / den)
}

fn big_ln(x: &BigInt) -> f64 {
    // growth tables start at A(0) = 1 > 0
    let f = x.to_f64().unwrap_or(f64::MAX);
    if f.is_finite() {
        f.ln()
    } else {
        let bits = x.bits();
        let shift = bits.saturating_sub(53);
        let top = (x >> shift).to_f64().unwrap_or(f64::MAX);
        top.ln() + shift as f64 * std::f64::consts::LN_2
    }
}

/// Knobs for `dimension_report`.
#[derive(Debug, Clone)]
pub struct DimensionReportParams {
    /// Truncation used for the exact rational fit.
    pub fit_truncation: usize,
    /// Truncation used for the growth slope (window is its upper half).
    pub growth_truncation: usize,
    /// |slope - rank| tolerance for setting the all-equal flag.
    pub slope_tolerance: f64,
    /// Element cap passed to the enumerator.
    pub max_elements: usize,
    /// Extra denominator candidates tried before the defaults.
    pub extra_denominators: Vec<Vec<u32>>,
}

impl Default for DimensionReportParams {
    fn default() -> Self {
        Self {
            fit_truncation: 60,
            growth_truncation: 200,
            slope_tolerance: 0.2,
            max_elements: DEFAULT_MAX_ELEMENTS,
            extra_denominators: Vec::new(),
        }
    }
}

/// The four dimension invariants of a monomial algebra, cross-checked.
///
/// For a monomial algebra the Krull dimension, the transcendence degree and
/// the pole order all equal the lattice rank of the generators, and the
/// growth slope estimates the same number; `all_equal` records whether the
/// independently computed pole order and slope confirm the rank.
#[derive(Debug, Clone)]
pub struct DimensionReport {
    pub krull_dim: usize,
    pub trdeg: usize,
    /// Pole order from the fitted series; `None` when no candidate
    /// denominator produced an exact fit at this truncation.
    pub pole_order: Option<usize>,
    /// The successful fit, if any.
    pub fit: Option<RationalSeries>,
    /// Growth-slope estimate of the GK dimension.
    pub gk_estimate: f64,
    pub all_equal: bool,
}

/// Compute the full dimension report of a monomial algebra.
///
/// A failed fit is reported with `pole_order: None`, not an error;
/// enumeration capacity problems do surface as errors.
pub fn dimension_report(
    m: &MonoidPresentation,
    params: &DimensionReportParams,
) -> Result<DimensionReport> {
    let rank = m.rank();
    let n_max = params.fit_truncation.max(params.growth_truncation);
    let h = m.hilbert_function(n_max, params.max_elements)?;
    let h_fit = h.truncate(params.fit_truncation);

    let mut candidates = params.extra_denominators.clone();
    candidates.extend(default_denominator_candidates(
        Some(&m.generator_degrees()),
        12,
    ));
    let mut fit: Option<RationalSeries> = None;
    for cand in &candidates {
        let guard = default_guard(cand);
        if h_fit.truncation() < 2 * guard {
            continue;
        }
        if let Ok(FitOutcome::Fit(rs)) = fit_rational(&h_fit, cand, guard) {
            fit = Some(rs);
            break;
        }
    }
    let pole_order = match &fit {
        Some(rs) => Some(pole_order_at_one(rs)?),
        None => None,
    };

    let table = growth_table(&h.truncate(params.growth_truncation));
    let hi = params.growth_truncation.min(h.truncation());
    let gk_estimate = gk_slope(&table, (hi / 2).max(2), hi)?;

    let all_equal =
        pole_order == Some(rank) && (gk_estimate - rank as f64).abs() <= params.slope_tolerance;

    Ok(DimensionReport {
        krull_dim: rank,
        trdeg: rank,
        pole_order,
        fit,
        gk_estimate,
        all_equal,
    })
}

type FxSet<T> = HashSet<T, BuildHasherDefault<FxHasher>>;

/// Small multiply-rotate hasher (the rustc algorithm): deterministic across
/// runs, fast on the short keys used by the enumerator.
#[derive(Default)]
struct FxHasher {
    hash: u64,
}

impl FxHasher {
    const SEED: u64 = 0x51_7c_c1_b7_27_22_0a_95;

    #[inline]
    fn add(&mut self, word: u64) {
        self.hash = (self.hash.rotate_left(5) ^ word).wrapping_mul(Self::SEED);
    }
}

impl Hasher for FxHasher {
    #[inline]
    fn write(&mut self, bytes: &[u8]) {
        let mut chunks = bytes.chunks_exact(8);
        for c in &mut chunks {
            self.add(u64::from_le_bytes(c.try_into().unwrap()));
        }
        let rem = chunks.remainder();
        if !rem.is_empty() {
            let mut buf = [0u8; 8];
            buf[..rem.len()].copy_from_slice(rem);
            self.add(u64::from_le_bytes(buf));
        }
    }

    #[inline]
    fn write_u64(&mut self, n: u64) {
        self.add(n);
    }

    #[inline]
    fn write_usize(&mut self, n: usize) {
        self.add(n as u64);
    }

    #[inline]
    fn finish(&self) -> u64 {
        self.hash
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(exps: &[u32]) -> ExponentVector {
        ExponentVector::new(exps.to_vec())
    }

    /// Generators {x, xy, xy^2, ..., xy^{k-1}} in k[x, y].
    fn staircase_monoid(max_degree: usize) -> MonoidPresentation {
        let gens = (0..max_degree as u32).map(|k| ev(&[1, k])).collect();
        MonoidPresentation::with_unit_weights(2, gens).unwrap()
    }

    /// Generators {xy, xy^2, ..., xy^k} in k[x, y].
    fn shifted_staircase_monoid(max_degree: usize) -> MonoidPresentation {
        let gens = (1..=max_degree as u32).map(|k| ev(&[1, k])).collect();
        MonoidPresentation::with_unit_weights(2, gens).unwrap()
    }

    #[test]
    fn staircase_counts() {
        let m = staircase_monoid(5);
        let h = m.hilbert_function(5, DEFAULT_MAX_ELEMENTS).unwrap();
        assert_eq!(h.head_string(6), "1 1 2 3 4 5");
    }

    #[test]
    fn empty_monoid_counts() {
        let m = MonoidPresentation::with_unit_weights(2, Vec::new()).unwrap();
        let h = m.hilbert_function(4, DEFAULT_MAX_ELEMENTS).unwrap();
        assert_eq!(h.head_string(5), "1 0 0 0 0");
    }

    #[test]
    fn shifted_staircase_counts_match_pair_oracle() {
        let m = shifted_staircase_monoid(7);
        let h = m.hilbert_function(7, DEFAULT_MAX_ELEMENTS).unwrap();
        assert_eq!(h.head_string(8), "1 0 1 1 2 2 3 3");
        // brute force: elements are (i, j) with 1 <= i <= j, i + j = n
        for n in 1..=7usize {
            let count = (1..=n)
                .filter(|&i| n >= i && n - i >= i)
                .count();
            assert_eq!(h.coeff(n), &BigInt::from(count));
        }
    }

    #[test]
    fn packed_and_generic_paths_agree() {
        let m2 = shifted_staircase_monoid(12);
        let h2 = m2.hilbert_function(12, DEFAULT_MAX_ELEMENTS).unwrap();
        // same monoid embedded in 9 variables forces the generic path
        let gens9: Vec<ExponentVector> = (1..=12u32)
            .map(|k| {
                let mut e = vec![0u32; 9];
                e[0] = 1;
                e[1] = k;
                ev(&e)
            })
            .collect();
        let m9 = MonoidPresentation::with_unit_weights(9, gens9).unwrap();
        let h9 = m9.hilbert_function(12, DEFAULT_MAX_ELEMENTS).unwrap();
        assert_eq!(h2.coeffs(), h9.coeffs());
    }

    #[test]
    fn generator_order_and_duplicates_do_not_matter() {
        let a = MonoidPresentation::with_unit_weights(2, vec![ev(&[1, 1]), ev(&[1, 2])]).unwrap();
        let b = MonoidPresentation::with_unit_weights(
            2,
            vec![ev(&[1, 2]), ev(&[1, 1]), ev(&[1, 2])],
        )
        .unwrap();
        let ha = a.hilbert_function(20, DEFAULT_MAX_ELEMENTS).unwrap();
        let hb = b.hilbert_function(20, DEFAULT_MAX_ELEMENTS).unwrap();
        assert_eq!(ha.coeffs(), hb.coeffs());
    }

    #[test]
    fn truncation_below_some_weights_is_fine() {
        // weights above the truncation produce zero-width key fields; the
        // heavy generators simply never appear
        let weights = WeightVector::new((1..=20).collect()).unwrap();
        let gens = (0..20).map(|i| ExponentVector::var(20, i)).collect();
        let m = MonoidPresentation::new(20, weights, gens).unwrap();
        let h = m.hilbert_function(10, DEFAULT_MAX_ELEMENTS).unwrap();
        // partition numbers p(0..10)
        assert_eq!(h.head_string(11), "1 1 2 3 5 7 11 15 22 30 42");
    }

    #[test]
    fn redundant_generator_changes_nothing() {
        let base = MonoidPresentation::with_unit_weights(2, vec![ev(&[1, 0]), ev(&[1, 1])]).unwrap();
        // x^2 y = x * xy already lies in the monoid
        let padded = MonoidPresentation::with_unit_weights(
            2,
            vec![ev(&[1, 0]), ev(&[1, 1]), ev(&[2, 1])],
        )
        .unwrap();
        let ha = base.hilbert_function(25, DEFAULT_MAX_ELEMENTS).unwrap();
        let hb = padded.hilbert_function(25, DEFAULT_MAX_ELEMENTS).unwrap();
        assert_eq!(ha.coeffs(), hb.coeffs());
    }

    #[test]
    fn capacity_cap_is_enforced() {
        let m = staircase_monoid(30);
        let err = m.hilbert_function(30, 10).unwrap_err();
        assert!(matches!(err, Error::CapacityExceeded { .. }));
    }

    #[test]
    fn rank_examples() {
        let full = MonoidPresentation::with_unit_weights(
            3,
            (0..3).map(|i| ExponentVector::var(3, i)).collect(),
        )
        .unwrap();
        assert_eq!(full.rank(), 3);

        let m = MonoidPresentation::with_unit_weights(2, vec![ev(&[1, 1]), ev(&[1, 2])]).unwrap();
        assert_eq!(m.rank(), 2);

        let collinear =
            MonoidPresentation::with_unit_weights(3, vec![ev(&[2, 0, 2]), ev(&[1, 0, 1])]).unwrap();
        assert_eq!(collinear.rank(), 1);
    }

    #[test]
    fn growth_table_examples() {
        let t = growth_table(&GradedSeries::from_u64s(&[1, 0, 0]));
        assert_eq!(t.cumulative(), &[1.into(), 1.into(), 1.into()]);
        let t = growth_table(&GradedSeries::from_u64s(&[1, 1, 2, 3]));
        assert_eq!(t.cumulative(), &[1.into(), 2.into(), 4.into(), 7.into()]);
        let t = growth_table(&GradedSeries::from_u64s(&[1, 1, 2, 3, 5]));
        assert_eq!(
            t.cumulative(),
            &[1.into(), 2.into(), 4.into(), 7.into(), 12.into()]
        );
    }

    #[test]
    fn slope_of_plane_counting_is_two() {
        // A(N) = (N+1)(N+2)/2 for k[x, y]
        let coeffs: Vec<u64> = (0..=200).map(|n| n + 1).collect();
        let t = growth_table(&GradedSeries::from_u64s(&coeffs));
        let s = gk_slope(&t, 50, 200).unwrap();
        assert!((s - 2.0).abs() < 0.1, "slope {s}");
    }

    #[test]
    fn slope_of_staircase_family_is_two() {
        let m = staircase_monoid(200);
        let h = m.hilbert_function(200, DEFAULT_MAX_ELEMENTS).unwrap();
        let t = growth_table(&h);
        let s = gk_slope(&t, 100, 200).unwrap();
        assert!((s - 2.0).abs() < 0.15, "slope {s}");
    }

    #[test]
    fn slope_of_partition_growth_flags_unbounded() {
        let t = growth_table(&crate::series::partition_series(200));
        let wide = gk_slope(&t, 100, 200).unwrap();
        assert!(wide > 3.0, "slope {wide}");
        // moving the window outward increases the slope estimate
        let early = gk_slope(&t, 40, 100).unwrap();
        assert!(wide > early, "slopes {early} -> {wide}");
    }

    #[test]
    fn slope_window_validation() {
        let t = growth_table(&GradedSeries::from_u64s(&[1; 30]));
        assert!(gk_slope(&t, 1, 20).is_err());
        assert!(gk_slope(&t, 2, 40).is_err());
        assert!(gk_slope(&t, 10, 12).is_err());
    }

    #[test]
    fn dimension_report_of_staircase_family() {
        let m = staircase_monoid(200);
        let report = dimension_report(&m, &DimensionReportParams::default()).unwrap();
        assert_eq!(report.krull_dim, 2);
        assert_eq!(report.trdeg, 2);
        assert_eq!(report.pole_order, Some(2));
        assert!((report.gk_estimate - 2.0).abs() <= 0.2);
        assert!(report.all_equal);
    }

    #[test]
    fn dimension_report_of_full_polynomial_monoid() {
        let m = MonoidPresentation::with_unit_weights(
            3,
            (0..3).map(|i| ExponentVector::var(3, i)).collect(),
        )
        .unwrap();
        let params = DimensionReportParams {
            growth_truncation: 120,
            ..Default::default()
        };
        let report = dimension_report(&m, &params).unwrap();
        assert_eq!(report.krull_dim, 3);
        assert_eq!(report.pole_order, Some(3));
        assert!(report.all_equal);
    }

    #[test]
    fn zero_generator_rejected() {
        let err =
            MonoidPresentation::with_unit_weights(2, vec![ev(&[0, 0])]).unwrap_err();
        assert!(matches!(err, Error::InvalidGenerator { .. }));
    }
}
