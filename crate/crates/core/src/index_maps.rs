//! Index permutations, the running-minimum maps `i` and `j`, plateau bounds and the compact
//! survival-function formulas built on them.

use std::fmt;

use crate::error::{Error, Result};
use crate::gsf::Arrangement;
use crate::model::{canonicalize_step, ExtRational, Piece, Rational, StepFunction};

/// `(·)`, its inverse `⟨·⟩` and their running minima.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationTables {
    pub pi: Vec<usize>,
    pub pi_inv: Vec<usize>,
    pub i_map: Vec<usize>,
    pub j_map: Vec<usize>,
}

fn running_min_idx(v: &[usize]) -> Vec<usize> {
    v.iter()
        .scan(usize::MAX, |m, &x| {
            *m = (*m).min(x);
            Some(*m)
        })
        .collect()
}

impl PermutationTables {
    pub fn build(arr: &Arrangement) -> Self {
        let pi = arr.paren().to_vec();
        let mut pi_inv = vec![0; pi.len()];
        for (i, &j) in pi.iter().enumerate() {
            pi_inv[j] = i;
        }
        let i_map = running_min_idx(&pi);
        let j_map = running_min_idx(&pi_inv);
        PermutationTables { pi, pi_inv, i_map, j_map }
    }

    pub fn kappa(&self) -> usize {
        self.pi.len()
    }

    /// `(i) = κ - 1 - i` for every `i`.
    pub fn is_decreasing(&self) -> bool {
        let k = self.kappa();
        self.pi.iter().enumerate().all(|(i, &p)| p == k - 1 - i)
    }
}

pub fn build_permutations(arr: &Arrangement) -> PermutationTables {
    PermutationTables::build(arr)
}

/// Which running-minimum map drives [`gsf_via_maps`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MapRoute {
    I,
    J,
}

/// Pieces of the survival function read off `i` or `j`, before canonicalization.
pub fn via_maps_partition(arr: &Arrangement, pt: &PermutationTables, route: MapRoute) -> Vec<Piece> {
    let k = arr.kappa();
    let a = arr.agg();
    let mu = arr.mu();
    match route {
        MapRoute::I => (0..k)
            .map(|i| Piece { lo: a[i].clone(), hi: arr.agg_ext(i + 1), value: mu[pt.i_map[i]].clone() })
            .collect(),
        MapRoute::J => (0..k)
            .map(|j| Piece {
                lo: a[pt.j_map[j]].clone(),
                hi: if j == 0 { ExtRational::Infinity } else { ExtRational::Finite(a[pt.j_map[j - 1]].clone()) },
                value: mu[j].clone(),
            })
            .collect(),
    }
}

pub fn gsf_via_maps(arr: &Arrangement, pt: &PermutationTables, route: MapRoute) -> StepFunction {
    let g = canonicalize_step(via_maps_partition(arr, pt, route)).expect("map route tiles [0, ∞)");
    if pt.is_decreasing() {
        assert_eq!(g, decreasing_shortcut(arr), "decreasing shortcut disagrees");
    }
    g
}

/// `Σ μ_{κ-1-i} 1_{[A_i, A_{i+1})}`, valid when `(·)` is decreasing.
pub fn decreasing_shortcut(arr: &Arrangement) -> StepFunction {
    let k = arr.kappa();
    let pieces = (0..k)
        .map(|i| Piece { lo: arr.agg()[i].clone(), hi: arr.agg_ext(i + 1), value: arr.mu()[k - 1 - i].clone() })
        .collect();
    canonicalize_step(pieces).expect("shortcut tiles [0, ∞)")
}

fn idx(v: usize) -> Rational {
    Rational::from_integer(v as i64)
}

/// The survival function on index axes: `i(⌊β⌋)` for `β < κ - 1`, then `i(κ - 1)`.
pub fn indexed_gsf(pt: &PermutationTables) -> StepFunction {
    let k = pt.kappa();
    let pieces = (0..k)
        .map(|b| Piece {
            lo: idx(b),
            hi: if b + 1 == k { ExtRational::Infinity } else { ExtRational::Finite(idx(b + 1)) },
            value: idx(pt.i_map[b]),
        })
        .collect();
    canonicalize_step(pieces).expect("index axis is tiled")
}

/// The same function built from the generalized inverse of `j`: value `j` on `[j(j), j(j-1))`.
pub fn indexed_gsf_from_j(pt: &PermutationTables) -> StepFunction {
    let pieces = (0..pt.kappa())
        .map(|j| Piece {
            lo: idx(pt.j_map[j]),
            hi: if j == 0 { ExtRational::Infinity } else { ExtRational::Finite(idx(pt.j_map[j - 1])) },
            value: idx(j),
        })
        .collect();
    canonicalize_step(pieces).expect("index axis is tiled")
}

fn as_index(r: &Rational) -> usize {
    usize::try_from(r.floor()).expect("index values are small nonnegative integers")
}

/// Replaces index `k` on the horizontal axis by `A_k` and level `k` by `μ_k`.
pub fn relabel(indexed: &StepFunction, arr: &Arrangement) -> StepFunction {
    let pieces = indexed
        .pieces()
        .into_iter()
        .map(|p| Piece {
            lo: arr.agg()[as_index(&p.lo)].clone(),
            hi: match &p.hi {
                ExtRational::Infinity => ExtRational::Infinity,
                ExtRational::Finite(h) => arr.agg_ext(as_index(h)),
            },
            value: arr.mu()[as_index(&p.value)].clone(),
        })
        .collect();
    canonicalize_step(pieces).expect("relabeling keeps the tiling")
}

/// First and last indices of the plateau through each index, for the measure order (`φ`)
/// and for the running minima of `μ_(·)` (`ψ`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlateauBounds {
    pub phi_low: Vec<usize>,
    pub phi_high: Vec<usize>,
    pub psi_low: Vec<usize>,
    pub psi_high: Vec<usize>,
}

fn runs(v: &[Rational]) -> (Vec<usize>, Vec<usize>) {
    let k = v.len();
    let mut low = vec![0; k];
    let mut high = vec![0; k];
    let mut start = 0;
    while start < k {
        let mut end = start;
        while end + 1 < k && v[end + 1] == v[start] {
            end += 1;
        }
        for t in start..=end {
            low[t] = start;
            high[t] = end;
        }
        start = end + 1;
    }
    (low, high)
}

impl PlateauBounds {
    pub fn build(arr: &Arrangement) -> Self {
        // Both sequences are monotone, so equal values form contiguous runs.
        let (phi_low, phi_high) = runs(arr.mu());
        let (psi_low, psi_high) = runs(&arr.paren_prefix_min());
        PlateauBounds { phi_low, phi_high, psi_low, psi_high }
    }
}

pub fn plateau_bounds(arr: &Arrangement) -> PlateauBounds {
    PlateauBounds::build(arr)
}

/// A right-open interval `[lo, hi)`.
#[derive(Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rational,
    pub hi: ExtRational,
}

impl Interval {
    pub fn is_empty(&self) -> bool {
        self.hi <= ExtRational::Finite(self.lo.clone())
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("empty")
        } else {
            write!(f, "[{},{})", self.lo, self.hi)
        }
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{})", self.lo, self.hi)
    }
}

/// A level index in either order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LevelQuery {
    /// Index `j` into `μ_0 ≤ … ≤ μ_{κ-1}`.
    Measure(usize),
    /// Index `i` into `A_0 ≤ … ≤ A_{κ-1}`; the level is `min_{k≤i} μ_(k)`.
    Aggregation(usize),
}

/// `min_{k≤l} A_⟨k⟩` with `l = -1` giving `∞`.
fn angle_min(mins: &[Rational], l: isize) -> ExtRational {
    if l < 0 {
        ExtRational::Infinity
    } else {
        ExtRational::Finite(mins[l as usize].clone())
    }
}

fn finite(e: ExtRational) -> Rational {
    e.finite().cloned().expect("lower bound is finite")
}

/// The largest interval on which the queried level is the value of the survival function.
pub fn greatest_interval(query: LevelQuery, arr: &Arrangement, pb: &PlateauBounds) -> Result<Interval> {
    let k = arr.kappa();
    match query {
        LevelQuery::Measure(j) | LevelQuery::Aggregation(j) if j >= k => {
            Err(Error::IndexOutOfRange { index: j, size: k })
        }
        LevelQuery::Measure(j) => {
            let mins = arr.angle_prefix_min();
            Ok(Interval {
                lo: finite(angle_min(&mins, pb.phi_high[j] as isize)),
                hi: angle_min(&mins, pb.phi_low[j] as isize - 1),
            })
        }
        LevelQuery::Aggregation(i) => Ok(Interval {
            lo: arr.agg()[pb.psi_low[i]].clone(),
            hi: arr.agg_ext(pb.psi_high[i] + 1),
        }),
    }
}

/// Whether `μ_j` is a value of the survival function.
pub fn is_value_achieved(j: usize, arr: &Arrangement, pb: &PlateauBounds) -> Result<bool> {
    Ok(!greatest_interval(LevelQuery::Measure(j), arr, pb)?.is_empty())
}

/// Variants of the compact formulas, one summand per level with a greatest interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CompactRoute {
    /// `μ_j` on `[min_{k≤φ^*(j)} A_⟨k⟩, min_{k≤φ^*(j-1)} A_⟨k⟩)`.
    PhiUpper,
    /// `μ_j` on `[min_{k<φ_*(j+1)} A_⟨k⟩, min_{k<φ_*(j)} A_⟨k⟩)`, `φ_*(κ) = κ`.
    PhiLower,
    /// `μ_(ψ_*(i))` on `[A_{ψ_*(i)}, A_{ψ_*(i+1)})`.
    PsiLower,
    /// `μ_(ψ_*(i))` on `[A_{ψ^*(i-1)+1}, A_{ψ^*(i)+1})`, `ψ^*(-1) = -1`.
    PsiUpper,
}

impl CompactRoute {
    pub const ALL: [CompactRoute; 4] =
        [CompactRoute::PhiUpper, CompactRoute::PhiLower, CompactRoute::PsiLower, CompactRoute::PsiUpper];
}

/// The summands of a compact formula, one per index, before canonicalization.
pub fn compact_summands(arr: &Arrangement, pb: &PlateauBounds, route: CompactRoute) -> Vec<Piece> {
    let k = arr.kappa();
    let mins = arr.angle_prefix_min();
    let mu = arr.mu();
    let mu_paren = arr.mu_paren();
    // A lower bound of `∞` only arises for an empty summand inside the zero block.
    let piece = |lo: ExtRational, hi: ExtRational, value: Rational| match lo {
        ExtRational::Finite(lo) => Piece { lo, hi, value },
        ExtRational::Infinity => Piece { lo: Rational::zero(), hi: ExtRational::Finite(Rational::zero()), value },
    };
    match route {
        CompactRoute::PhiUpper => (0..k)
            .map(|j| {
                let prev = if j == 0 { -1 } else { pb.phi_high[j - 1] as isize };
                piece(angle_min(&mins, pb.phi_high[j] as isize), angle_min(&mins, prev), mu[j].clone())
            })
            .collect(),
        CompactRoute::PhiLower => (0..k)
            .map(|j| {
                let next_low = if j + 1 == k { k } else { pb.phi_low[j + 1] };
                piece(
                    angle_min(&mins, next_low as isize - 1),
                    angle_min(&mins, pb.phi_low[j] as isize - 1),
                    mu[j].clone(),
                )
            })
            .collect(),
        CompactRoute::PsiLower => (0..k)
            .map(|i| {
                let next = if i + 1 == k { k } else { pb.psi_low[i + 1] };
                Piece {
                    lo: arr.agg()[pb.psi_low[i]].clone(),
                    hi: arr.agg_ext(next),
                    value: mu_paren[pb.psi_low[i]].clone(),
                }
            })
            .collect(),
        CompactRoute::PsiUpper => (0..k)
            .map(|i| {
                let start = if i == 0 { 0 } else { pb.psi_high[i - 1] + 1 };
                piece(arr.agg_ext(start), arr.agg_ext(pb.psi_high[i] + 1), mu_paren[pb.psi_low[i]].clone())
            })
            .collect(),
    }
}

pub fn gsf_compact(arr: &Arrangement, pb: &PlateauBounds, route: CompactRoute) -> StepFunction {
    canonicalize_step(compact_summands(arr, pb, route)).expect("compact formula tiles [0, ∞)")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aggregators::{AggregatorKind, Fca};
    use crate::gsf::{build_arrangement, gsf_agg_scan};
    use crate::model::{q, Collection, IndexSet, MonotoneMeasure};

    fn s(m: &[usize]) -> IndexSet {
        IndexSet::from_members(3, m).unwrap()
    }

    fn worked() -> Arrangement {
        let c = Collection::from_member_lists(3, &[vec![], vec![1], vec![2], vec![3], vec![1, 3], vec![1, 2, 3]])
            .unwrap();
        let mu = MonotoneMeasure::new(
            c.complement(),
            [
                (s(&[1, 2, 3]), q("1")),
                (s(&[2, 3]), q("0.7")),
                (s(&[1, 3]), q("0.5")),
                (s(&[1, 2]), q("0.5")),
                (s(&[2]), q("0.5")),
                (s(&[]), q("0")),
            ],
        )
        .unwrap();
        let f = Fca::uniform(c, AggregatorKind::Sum).unwrap();
        build_arrangement(&f, &mu, &[q("2"), q("3"), q("1")]).unwrap()
    }

    #[test]
    fn tables_of_worked_example() {
        let arr = worked();
        let pt = build_permutations(&arr);
        assert_eq!(pt.pi, [5, 2, 4, 1, 3, 0]);
        assert_eq!(pt.i_map, [5, 2, 2, 1, 1, 0]);
        assert_eq!(pt.pi_inv, [5, 3, 1, 4, 2, 0]);
        assert_eq!(pt.j_map, [5, 3, 1, 1, 1, 0]);
        assert!(!pt.is_decreasing());
        let expected = "[0,1) -> 1; [1,6) -> 1/2; [6,inf) -> 0";
        assert_eq!(gsf_via_maps(&arr, &pt, MapRoute::I).to_string(), expected);
        assert_eq!(gsf_via_maps(&arr, &pt, MapRoute::J).to_string(), expected);
    }

    #[test]
    fn indexed_and_relabeled() {
        let arr = worked();
        let pt = build_permutations(&arr);
        let ig = indexed_gsf(&pt);
        assert_eq!(ig.to_string(), "[0,1) -> 5; [1,3) -> 2; [3,5) -> 1; [5,inf) -> 0");
        assert_eq!(indexed_gsf_from_j(&pt), ig);
        assert_eq!(relabel(&ig, &arr), gsf_agg_scan(&arr));
    }

    #[test]
    fn plateaus_and_intervals() {
        let arr = worked();
        let pb = plateau_bounds(&arr);
        assert_eq!(pb.phi_low, [0, 1, 1, 1, 4, 5]);
        assert_eq!(pb.phi_high, [0, 3, 3, 3, 4, 5]);
        // Running minima of μ_(·) are (1, 1/2, 1/2, 1/2, 1/2, 0).
        assert_eq!((pb.psi_low[1], pb.psi_high[1]), (1, 4));
        let gi = |j| greatest_interval(LevelQuery::Measure(j), &arr, &pb).unwrap();
        assert_eq!(gi(1).to_string(), "[1,6)");
        assert!(gi(4).is_empty());
        assert_eq!(gi(0).to_string(), "[6,inf)");
        assert_eq!(gi(5).to_string(), "[0,1)");
        assert!(!is_value_achieved(4, &arr, &pb).unwrap());
        assert!(is_value_achieved(5, &arr, &pb).unwrap());
        assert!(is_value_achieved(0, &arr, &pb).unwrap());
        assert_eq!(
            greatest_interval(LevelQuery::Aggregation(1), &arr, &pb).unwrap().to_string(),
            "[1,6)"
        );
        assert!(matches!(
            greatest_interval(LevelQuery::Measure(6), &arr, &pb),
            Err(Error::IndexOutOfRange { index: 6, size: 6 })
        ));
    }

    #[test]
    fn compact_routes() {
        let arr = worked();
        let pb = plateau_bounds(&arr);
        let target = gsf_agg_scan(&arr);
        for r in CompactRoute::ALL {
            assert_eq!(gsf_compact(&arr, &pb, r), target, "{r:?}");
        }
        let lower = compact_summands(&arr, &pb, CompactRoute::PhiLower);
        let empty: Vec<usize> = (1..6).filter(|&j| lower[j].is_empty()).collect();
        assert_eq!(empty, [1, 2, 4]);
        assert_eq!(lower[3].to_string(), "[1,6) -> 1/2");
        assert_eq!(lower[5].to_string(), "[0,1) -> 1");
    }
}
