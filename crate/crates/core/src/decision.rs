//! Multi-criteria ranking with Choquet integrals, Shapley calibration and the knapsack selector.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::aggregators::{validate_vector, AggregatorKind, Fca};
use crate::choquet::{choquet_generalized, choquet_standard, ChoquetRoute};
use crate::error::{Error, Result};
use crate::gsf::Arrangement;
use crate::index_maps::{gsf_via_maps, MapRoute, PermutationTables};
use crate::model::{Collection, IndexSet, MonotoneMeasure, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Minimize,
    Maximize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionSpec {
    pub name: String,
    pub direction: Direction,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Alternative {
    pub name: String,
    pub scores: Vec<Rational>,
}

impl Alternative {
    pub fn new(name: impl Into<String>, scores: Vec<Rational>) -> Self {
        Alternative { name: name.into(), scores }
    }
}

/// Rescales every column into `(0, 1]`: `min / value` for minimized criteria and
/// `value / max` for maximized ones. The best value of each column becomes `1`.
pub fn normalize_criteria(specs: &[CriterionSpec], alts: &[Alternative]) -> Result<Vec<Alternative>> {
    let mut names = HashSet::new();
    if let Some(dup) = specs.iter().find(|s| !names.insert(s.name.as_str())) {
        return Err(Error::PreconditionViolated(format!("criterion `{}` appears twice", dup.name)));
    }
    for a in alts {
        if a.scores.len() != specs.len() {
            return Err(Error::DimensionMismatch { expected: specs.len(), got: a.scores.len() });
        }
    }
    let mut out: Vec<Alternative> = alts.iter().map(|a| Alternative::new(a.name.clone(), Vec::new())).collect();
    for (c, spec) in specs.iter().enumerate() {
        let column: Vec<&Rational> = alts.iter().map(|a| &a.scores[c]).collect();
        match spec.direction {
            Direction::Minimize => {
                if column.iter().any(|v| !v.is_positive()) {
                    return Err(Error::ZeroDivision(c + 1));
                }
                let best = Rational::min_of(column.iter().copied()).unwrap_or_else(Rational::one);
                for (o, v) in out.iter_mut().zip(&column) {
                    o.scores.push(&best / *v);
                }
            }
            Direction::Maximize => {
                if column.iter().any(|v| v.is_negative()) {
                    return Err(Error::NegativeComponent(c + 1));
                }
                let best = Rational::max_of(column.iter().copied()).unwrap_or_else(Rational::one);
                if !best.is_positive() {
                    return Err(Error::ZeroDivision(c + 1));
                }
                for (o, v) in out.iter_mut().zip(&column) {
                    o.scores.push(*v / &best);
                }
            }
        }
    }
    Ok(out)
}

fn factorial(k: usize) -> Rational {
    (1..=k as i64).fold(Rational::one(), |acc, v| acc * Rational::from_integer(v))
}

/// `(n - |A| - 1)! |A|! / n!`.
pub fn shapley_coefficient(n: usize, a: usize) -> Rational {
    factorial(n - a - 1) * factorial(a) / factorial(n)
}

/// Shapley value of the 0-based criterion `i`.
pub fn shapley_value(mu: &MonotoneMeasure, i: usize) -> Result<Rational> {
    if !mu.domain().is_powerset() {
        return Err(Error::MeasureNotOnPowerset);
    }
    let n = mu.n();
    if i >= n {
        return Err(Error::IndexOutOfRange { index: i, size: n });
    }
    let coef: Vec<Rational> = (0..n).map(|a| shapley_coefficient(n, a)).collect();
    Ok(mu
        .domain()
        .sets()
        .iter()
        .filter(|s| !s.contains(i))
        .map(|&s| &coef[s.len()] * &(mu.value(s.with(i)) - mu.value(s)))
        .sum())
}

pub fn shapley_vector(mu: &MonotoneMeasure) -> Result<Vec<Rational>> {
    (0..mu.n()).map(|i| shapley_value(mu, i)).collect()
}

/// Positive per-criterion weights, used after normalization to sum to one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapleyTargets {
    pub weights: Vec<Rational>,
}

impl ShapleyTargets {
    pub fn normalized(&self) -> Result<Vec<Rational>> {
        if self.weights.iter().any(|w| !w.is_positive()) {
            return Err(Error::InconsistentTargets("weights must be positive".into()));
        }
        let total: Rational = self.weights.iter().sum();
        Ok(self.weights.iter().map(|w| w / &total).collect())
    }
}

/// How to pick one solution of the rank-deficient calibration system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CalibrationPolicy {
    /// The minimum-norm solution; fails if it is not monotone.
    MinimumNorm,
    /// The monotone solution closest to the minimum-norm one.
    #[default]
    MonotoneMinimumNorm,
}

/// Result of [`calibrate_measure`] for three criteria.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Calibration {
    pub measure: MonotoneMeasure,
    /// `(μ{1,2}, μ{1,3}, μ{2,3})`.
    pub pairs: [Rational; 3],
    /// The minimum-norm particular solution.
    pub minimum_norm: [Rational; 3],
    /// Every solution is `minimum_norm + t · (1, 1, 1)`.
    pub nullspace: [Rational; 3],
    /// The chosen `t`.
    pub shift: Rational,
    /// Right-hand sides of the three equations, in criterion order.
    pub rhs: [Rational; 3],
}

fn pair_sets() -> [IndexSet; 3] {
    [IndexSet::from_positions([0, 1]), IndexSet::from_positions([0, 2]), IndexSet::from_positions([1, 2])]
}

/// Right-hand sides `r_i = 6 t_i - 2 s_i + s_j + s_k - 2`. Criterion `i` reads
/// `(sum of the two pairs holding i) - 2 (pair without i) = r_i`.
fn calibration_rhs(t: &[Rational], s: &[Rational]) -> [Rational; 3] {
    let six = Rational::from_integer(6);
    let two = Rational::from_integer(2);
    let total: Rational = s.iter().sum();
    std::array::from_fn(|i| &six * &t[i] - &Rational::from_integer(3) * &s[i] + &total - &two)
}

/// Left-hand sides of the three equations for pair values `(a, b, c)`.
fn calibration_lhs(p: &[Rational; 3]) -> [Rational; 3] {
    let [a, b, c] = p;
    let two = Rational::from_integer(2);
    [a + b - &two * c, a - &two * b + c, &(b + c) - &two * a]
}

fn build_three(singletons: &[Rational], pairs: &[Rational; 3]) -> Result<MonotoneMeasure> {
    let c = Collection::powerset(3)?;
    let mut values = vec![(IndexSet::EMPTY, Rational::zero()), (IndexSet::full(3), Rational::one())];
    values.extend(singletons.iter().enumerate().map(|(p, v)| (IndexSet::from_positions([p]), v.clone())));
    values.extend(pair_sets().into_iter().zip(pairs.iter().cloned()));
    MonotoneMeasure::new(c, values)
}

/// Reports the first inclusion `{i} ⊆ pair` or `pair ⊆ [3]` that the pair values break.
fn check_pairs(singletons: &[Rational], pairs: &[Rational; 3]) -> Result<()> {
    for (pair, value) in pair_sets().into_iter().zip(pairs) {
        for p in pair.positions() {
            if singletons[p] > *value {
                return Err(Error::MonotonicityViolation { smaller: IndexSet::from_positions([p]), larger: pair });
            }
        }
        if *value > Rational::one() {
            return Err(Error::MonotonicityViolation { smaller: pair, larger: IndexSet::full(3) });
        }
    }
    Ok(())
}

/// Fits the pair values of a capacity on `2^[3]` with fixed singletons so that its Shapley
/// values equal the normalized targets.
pub fn calibrate_measure(
    targets: &ShapleyTargets,
    singletons: &[Rational],
    policy: CalibrationPolicy,
) -> Result<Calibration> {
    if targets.weights.len() != 3 || singletons.len() != 3 {
        return Err(Error::InconsistentTargets("calibration supports exactly three criteria".into()));
    }
    let t = targets.normalized()?;
    let rhs = calibration_rhs(&t, singletons);
    let third = Rational::new(1, 3);
    let minimum_norm: [Rational; 3] = [-(&rhs[2] * &third), -(&rhs[1] * &third), -(&rhs[0] * &third)];
    debug_assert_eq!(calibration_lhs(&minimum_norm), rhs);

    let shift = match policy {
        CalibrationPolicy::MinimumNorm => Rational::zero(),
        CalibrationPolicy::MonotoneMinimumNorm => {
            // Monotonicity: max of the two singletons ≤ pair ≤ 1.
            let below = [(0, 1), (0, 2), (1, 2)];
            let mut lo: Option<Rational> = None;
            let mut hi: Option<Rational> = None;
            for (k, (p, q)) in below.iter().enumerate() {
                let need = Rational::max_of([&singletons[*p], &singletons[*q]]).expect("two values");
                let l = need - &minimum_norm[k];
                let h = Rational::one() - &minimum_norm[k];
                if lo.as_ref().map_or(true, |v| l > *v) {
                    lo = Some(l);
                }
                if hi.as_ref().map_or(true, |v| h < *v) {
                    hi = Some(h);
                }
            }
            let (lo, hi) = (lo.expect("three bounds"), hi.expect("three bounds"));
            if lo > hi {
                // No shift works; report the violation of the minimum-norm solution.
                Rational::zero()
            } else if lo.is_positive() {
                lo
            } else if hi.is_negative() {
                hi
            } else {
                Rational::zero()
            }
        }
    };
    let pairs: [Rational; 3] = std::array::from_fn(|k| &minimum_norm[k] + &shift);
    check_pairs(singletons, &pairs)?;
    let measure = build_three(singletons, &pairs)?;
    Ok(Calibration {
        measure,
        pairs,
        minimum_norm,
        nullspace: [Rational::one(), Rational::one(), Rational::one()],
        shift,
        rhs,
    })
}

/// How well a given capacity on `2^[3]` meets the calibration equations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CalibrationCheck {
    pub shapley: Vec<Rational>,
    pub targets: Vec<Rational>,
    /// `lhs - rhs` of each equation.
    pub residuals: [Rational; 3],
    pub max_shapley_error: Rational,
    pub max_residual: Rational,
}

impl CalibrationCheck {
    pub fn within(&self, tol: &Rational) -> bool {
        self.max_shapley_error <= *tol && self.max_residual <= *tol
    }
}

/// Checks given pair values against the targets instead of solving for them.
pub fn verify_calibration(targets: &ShapleyTargets, singletons: &[Rational], pairs: &[Rational; 3]) -> Result<CalibrationCheck> {
    if targets.weights.len() != 3 || singletons.len() != 3 {
        return Err(Error::InconsistentTargets("calibration supports exactly three criteria".into()));
    }
    let t = targets.normalized()?;
    let measure = build_three(singletons, pairs)?;
    let shapley = shapley_vector(&measure)?;
    let rhs = calibration_rhs(&t, singletons);
    let lhs = calibration_lhs(pairs);
    let residuals: [Rational; 3] = std::array::from_fn(|i| &lhs[i] - &rhs[i]);
    let max_shapley_error =
        Rational::max_of(shapley.iter().zip(&t).map(|(a, b)| (a - b).abs()).collect::<Vec<_>>().iter())
            .expect("three values");
    let max_residual = Rational::max_of(residuals.iter().map(Rational::abs).collect::<Vec<_>>().iter())
        .expect("three values");
    Ok(CalibrationCheck { shapley, targets: t, residuals, max_shapley_error, max_residual })
}

/// Scoring rule for [`rank_alternatives`].
#[derive(Clone, Debug)]
pub enum RankMethod {
    Standard,
    /// Generalized Choquet integral with this family; the measure lives on its complements.
    Generalized(Fca),
}

impl RankMethod {
    /// The family `A(x|E) = C(x · 1_E, μ)` on `2^[n]`.
    pub fn generalized_default(mu: &MonotoneMeasure) -> Result<Self> {
        let c = Collection::powerset(mu.n())?;
        Ok(RankMethod::Generalized(Fca::uniform(c, AggregatorKind::choquet_based(mu.clone()))?))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Ranked {
    pub name: String,
    pub score: Rational,
    /// Competition rank; tied scores share a rank.
    pub rank: usize,
}

/// Scores every alternative and sorts by descending score. Ties keep input order.
pub fn rank_alternatives(alts: &[Alternative], mu: &MonotoneMeasure, method: &RankMethod) -> Result<Vec<Ranked>> {
    let mut scored = alts
        .iter()
        .map(|a| {
            let score = match method {
                RankMethod::Standard => choquet_standard(&a.scores, mu)?,
                RankMethod::Generalized(f) => choquet_generalized(f, mu, &a.scores, ChoquetRoute::FormulaI)?.value,
            };
            Ok(Ranked { name: a.name.clone(), score, rank: 0 })
        })
        .collect::<Result<Vec<_>>>()?;
    scored.sort_by(|a, b| b.score.cmp(&a.score));
    for k in 0..scored.len() {
        scored[k].rank = if k > 0 && scored[k].score == scored[k - 1].score { scored[k - 1].rank } else { k + 1 };
    }
    Ok(scored)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnapsackChoice {
    /// `min{μ(E^c) : Σ_{i∈E} x_i ≤ budget}`.
    pub value: Rational,
    /// Preferred minimizer: most items first, then canonical order.
    pub chosen: IndexSet,
    /// All minimizers in the same order.
    pub minimizers: Vec<IndexSet>,
}

/// Picks the items `E` to carry so that the price `μ(E^c)` of the rest is smallest while the
/// total volume stays within `budget`.
pub fn knapsack_select(
    volumes: &[Rational],
    prices: &MonotoneMeasure,
    budget: &Rational,
    collection: &Collection,
) -> Result<KnapsackChoice> {
    if budget.is_negative() {
        return Err(Error::PreconditionViolated("budget must be nonnegative".into()));
    }
    validate_vector(collection.n(), volumes)?;
    let f = Fca::uniform(collection.clone(), AggregatorKind::Sum)?;
    let arr = Arrangement::build(&f, prices, volumes)?;
    let pt = PermutationTables::build(&arr);
    let value = gsf_via_maps(&arr, &pt, MapRoute::I).eval(budget).clone();
    let n = collection.n();
    let mut minimizers: Vec<IndexSet> = arr
        .e_order()
        .filter(|(e, a)| *a <= budget && *prices.value(e.complement(n)) == value)
        .map(|(e, _)| e)
        .collect();
    minimizers.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    Ok(KnapsackChoice { value, chosen: minimizers[0], minimizers })
}
