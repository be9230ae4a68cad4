//! Standard and generalized Choquet integrals, closed forms for special measures and OWA.

use crate::aggregators::{validate_vector, Fca};
use crate::error::{Error, Result};
use crate::gsf::{check_special_preconditions, gsf_agg_scan, min_by_cardinality, running_min, sort_distribution, Arrangement};
use crate::index_maps::PermutationTables;
use crate::model::{integrate_step, IndexSet, MonotoneMeasure, Rational, SpecialMeasure, StepFunction};

/// Ascending order of `x`, ties broken by index.
fn ascending(x: &[Rational]) -> Vec<usize> {
    let mut sigma: Vec<usize> = (0..x.len()).collect();
    sigma.sort_by(|&a, &b| x[a].cmp(&x[b]).then(a.cmp(&b)));
    sigma
}

/// `Σ μ(G_σ(i)) (x_σ(i) - x_σ(i-1))` with `σ` sorting `x` ascending and
/// `G_σ(i) = {σ(i), …, σ(n)}`. The Abel-summed form is computed as well and must agree.
pub fn choquet_standard(x: &[Rational], mu: &MonotoneMeasure) -> Result<Rational> {
    if !mu.domain().is_powerset() {
        return Err(Error::MeasureNotOnPowerset);
    }
    let n = mu.n();
    validate_vector(n, x)?;
    let sigma = ascending(x);
    let level: Vec<&Rational> =
        (0..=n).map(|i| mu.value(IndexSet::from_positions(sigma[i..].iter().copied()))).collect();
    let mut prev = Rational::zero();
    let mut increments = Rational::zero();
    let mut abel = Rational::zero();
    for i in 0..n {
        let xi = &x[sigma[i]];
        increments += level[i] * &(xi - &prev);
        abel += xi * &(level[i] - level[i + 1]);
        prev = xi.clone();
    }
    assert_eq!(increments, abel, "Choquet forms disagree");
    Ok(increments)
}

/// Ways to compute the generalized Choquet integral.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChoquetRoute {
    /// Integrate the survival function.
    Integrate,
    /// `Σ_{i=0}^{κ-2} μ_{i(i)} (A_{i+1} - A_i)`.
    FormulaI,
    /// `Σ_{i=1}^{κ-1} μ_i (A_{j(i-1)} - A_{j(i)})`.
    FormulaII,
    /// `Σ_{i=0}^{κ-2} min_{k≤i} μ_(k) (A_{i+1} - A_i)`.
    FormulaIII,
    /// `Σ_{i=1}^{κ-1} μ_i (min_{k<i} A_⟨k⟩ - min_{k≤i} A_⟨k⟩)`.
    FormulaIV,
}

impl ChoquetRoute {
    pub const ALL: [ChoquetRoute; 5] = [
        ChoquetRoute::Integrate,
        ChoquetRoute::FormulaI,
        ChoquetRoute::FormulaII,
        ChoquetRoute::FormulaIII,
        ChoquetRoute::FormulaIV,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ChoquetRoute::Integrate => "integrate",
            ChoquetRoute::FormulaI => "formula-i",
            ChoquetRoute::FormulaII => "formula-ii",
            ChoquetRoute::FormulaIII => "formula-iii",
            ChoquetRoute::FormulaIV => "formula-iv",
        }
    }
}

impl std::str::FromStr for ChoquetRoute {
    type Err = Error;

    /// Accepts the full names and the short forms `i` to `iv`.
    fn from_str(s: &str) -> Result<Self> {
        let short = format!("formula-{s}");
        ChoquetRoute::ALL
            .into_iter()
            .find(|r| r.name() == s || r.name() == short)
            .ok_or_else(|| Error::PreconditionViolated(format!("unknown integral route `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChoquetResult {
    pub value: Rational,
    pub route: ChoquetRoute,
    /// The canonical survival function, whatever the route.
    pub gsf: StepFunction,
}

/// Sums along increments `Σ c_i (a_{i+1} - a_i)` and the Abel form `Σ a_{i+1} (c_i - c_{i+1})`
/// for a nondecreasing `a` with `a_0 = 0` and `c` ending in `0`.
fn abel_pair(coef: &[Rational], a: &[Rational]) -> (Rational, Rational) {
    let k = a.len();
    assert!(coef[k - 1].is_zero(), "last level must vanish");
    let direct = (0..k - 1).map(|i| &coef[i] * &(&a[i + 1] - &a[i])).sum();
    let dual = (0..k - 1).map(|i| &a[i + 1] * &(&coef[i] - &coef[i + 1])).sum();
    (direct, dual)
}

/// Sums `Σ_{i=1}^{κ-1} μ_i (b_{i-1} - b_i)` and `Σ_{i=1}^{κ-1} b_{i-1} (μ_i - μ_{i-1})`
/// for a nonincreasing `b` ending in `0` and `μ_0 = 0`.
fn measure_pair(mu: &[Rational], b: &[Rational]) -> (Rational, Rational) {
    let k = mu.len();
    let direct = (1..k).map(|i| &mu[i] * &(&b[i - 1] - &b[i])).sum();
    let dual = (1..k).map(|i| &b[i - 1] * &(&mu[i] - &mu[i - 1])).sum();
    (direct, dual)
}

/// One closed formula, in both summation forms.
pub fn choquet_formula(arr: &Arrangement, pt: &PermutationTables, route: ChoquetRoute) -> (Rational, Rational) {
    let a = arr.agg();
    let mu = arr.mu();
    match route {
        ChoquetRoute::Integrate => {
            let v = integrate_step(&gsf_agg_scan(arr)).expect("survival function vanishes at A(x|[n])");
            (v.clone(), v)
        }
        ChoquetRoute::FormulaI => {
            let coef: Vec<Rational> = pt.i_map.iter().map(|&k| mu[k].clone()).collect();
            abel_pair(&coef, a)
        }
        ChoquetRoute::FormulaII => {
            let b: Vec<Rational> = pt.j_map.iter().map(|&k| a[k].clone()).collect();
            measure_pair(mu, &b)
        }
        ChoquetRoute::FormulaIII => abel_pair(&arr.paren_prefix_min(), a),
        ChoquetRoute::FormulaIV => measure_pair(mu, &arr.angle_prefix_min()),
    }
}

/// `∫_0^∞ μ_A(x, α) dα` along the chosen route.
pub fn choquet_generalized(
    f: &Fca,
    mu: &MonotoneMeasure,
    x: &[Rational],
    route: ChoquetRoute,
) -> Result<ChoquetResult> {
    let arr = Arrangement::build(f, mu, x)?;
    let pt = PermutationTables::build(&arr);
    let (value, dual) = choquet_formula(&arr, &pt, route);
    assert_eq!(value, dual, "{route:?} disagrees with its Abel form");
    Ok(ChoquetResult { value, route, gsf: gsf_agg_scan(&arr) })
}

/// Closed-form generalized Choquet integral for a special measure.
pub fn choquet_special(kind: &SpecialMeasure, f: &Fca, x: &[Rational]) -> Result<Rational> {
    check_special_preconditions(kind, f, x)?;
    let n = f.n();
    Ok(match kind {
        SpecialMeasure::Greatest => f.evaluate(x, IndexSet::full(n))?,
        SpecialMeasure::Weakest => {
            let vals = f.evaluate_all(x);
            Rational::min_of(
                f.collection().sets().iter().zip(&vals).filter(|(e, _)| !e.is_empty()).map(|(_, a)| a),
            )
            .expect("collection holds [n]")
        }
        SpecialMeasure::Symmetric(levels) => {
            let mins = min_by_cardinality(f, x);
            (1..=n).map(|i| &(&levels[i] - &levels[i - 1]) * &mins[n - i + 1]).sum()
        }
        SpecialMeasure::Possibility(pi) => {
            let sigma = sort_distribution(pi);
            let mut prev = Rational::zero();
            let mut total = Rational::zero();
            for i in 0..n {
                let g = f.evaluate(x, IndexSet::from_positions(sigma[i..].iter().copied()))?;
                total += &(&pi[sigma[i]] - &prev) * &g;
                prev = pi[sigma[i]].clone();
            }
            total
        }
        SpecialMeasure::Necessity(pi) => {
            let sigma = sort_distribution(pi);
            let single: Vec<Rational> = sigma
                .iter()
                .map(|&p| f.evaluate(x, IndexSet::from_positions([p])))
                .collect::<Result<_>>()?;
            let mut suffix: Vec<Rational> = running_min(&single.iter().rev().cloned().collect::<Vec<_>>());
            suffix.reverse();
            let mut prev = Rational::zero();
            let mut total = Rational::zero();
            for i in 0..n {
                total += &(&pi[sigma[i]] - &prev) * &suffix[i];
                prev = pi[sigma[i]].clone();
            }
            total
        }
    })
}

/// OWA weights `w_i = μ^{n-i+1} - μ^{n-i}` from symmetric levels `μ^0, …, μ^n`.
pub fn owa_weights(levels: &[Rational]) -> Result<Vec<Rational>> {
    if levels.len() < 2 {
        return Err(Error::BadLevels("need at least two levels".into()));
    }
    let n = levels.len() - 1;
    if !levels[0].is_zero() {
        return Err(Error::BadLevels("level 0 must be 0".into()));
    }
    if levels[n] != Rational::one() {
        return Err(Error::BadLevels("top level must be 1".into()));
    }
    if levels.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::BadLevels("levels must be nondecreasing".into()));
    }
    Ok((1..=n).map(|i| &levels[n - i + 1] - &levels[n - i]).collect())
}

/// `Σ w_i x_σ(i)` with `x` sorted ascending.
pub fn owa_evaluate(weights: &[Rational], x: &[Rational]) -> Result<Rational> {
    validate_vector(weights.len(), x)?;
    let sigma = ascending(x);
    Ok(weights.iter().zip(&sigma).map(|(w, &p)| w * &x[p]).sum())
}
