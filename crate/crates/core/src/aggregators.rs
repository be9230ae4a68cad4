//! Families of conditional aggregation operators.

use std::fmt;
use std::sync::Arc;

use crate::choquet::choquet_standard;
use crate::error::{Error, Result};
use crate::model::{Collection, IndexSet, MonotoneMeasure, Rational};

/// Checks length and sign of an input vector.
pub fn validate_vector(n: usize, x: &[Rational]) -> Result<()> {
    if x.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: x.len() });
    }
    match x.iter().position(Rational::is_negative) {
        Some(p) => Err(Error::NegativeComponent(p + 1)),
        None => Ok(()),
    }
}

/// `x · 1_E`.
pub fn mask(x: &[Rational], e: IndexSet) -> Vec<Rational> {
    x.iter()
        .enumerate()
        .map(|(p, v)| if e.contains(p) { v.clone() } else { Rational::zero() })
        .collect()
}

/// Anything that aggregates `x` conditioned on a set `E`.
pub trait ConditionalAggregation {
    /// `A(x|E)`. Callers guarantee a validated `x` and `E ≠ ∅`.
    fn aggregate(&self, x: &[Rational], e: IndexSet) -> Rational;
}

impl<F: Fn(&[Rational], IndexSet) -> Rational> ConditionalAggregation for F {
    fn aggregate(&self, x: &[Rational], e: IndexSet) -> Rational {
        self(x, e)
    }
}

/// The built-in operator kinds.
#[derive(Clone, PartialEq, Eq)]
pub enum AggregatorKind {
    Max,
    Min,
    Sum,
    /// Standard Choquet integral of `x · 1_E` with respect to a measure on `2^[n]`.
    ChoquetBased(Arc<MonotoneMeasure>),
}

impl AggregatorKind {
    pub fn choquet_based(inner: MonotoneMeasure) -> Self {
        AggregatorKind::ChoquetBased(Arc::new(inner))
    }

    pub fn name(&self) -> &'static str {
        match self {
            AggregatorKind::Max => "max",
            AggregatorKind::Min => "min",
            AggregatorKind::Sum => "sum",
            AggregatorKind::ChoquetBased(_) => "choquet",
        }
    }

    fn check(&self, n: usize) -> Result<()> {
        if let AggregatorKind::ChoquetBased(m) = self {
            if m.n() != n {
                return Err(Error::DimensionMismatch { expected: n, got: m.n() });
            }
            if !m.domain().is_powerset() {
                return Err(Error::MeasureNotOnPowerset);
            }
        }
        Ok(())
    }
}

impl ConditionalAggregation for AggregatorKind {
    fn aggregate(&self, x: &[Rational], e: IndexSet) -> Rational {
        if e.is_empty() {
            return Rational::zero();
        }
        let vals = || e.positions().map(|p| &x[p]);
        match self {
            AggregatorKind::Max => Rational::max_of(vals()).expect("nonempty set"),
            AggregatorKind::Min => Rational::min_of(vals()).expect("nonempty set"),
            AggregatorKind::Sum => vals().sum(),
            AggregatorKind::ChoquetBased(m) => {
                choquet_standard(&mask(x, e), m).expect("inner measure checked on construction")
            }
        }
    }
}

impl fmt::Debug for AggregatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AggregatorKind::ChoquetBased(m) => write!(f, "ChoquetBased({m:?})"),
            other => f.write_str(other.name()),
        }
    }
}

/// A family of conditional aggregation operators indexed by a collection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fca {
    collection: Collection,
    // Aligned with `collection.sets()`.
    kinds: Vec<AggregatorKind>,
}

impl Fca {
    /// The same kind on every set.
    pub fn uniform(collection: Collection, kind: AggregatorKind) -> Result<Self> {
        kind.check(collection.n())?;
        let kinds = vec![kind; collection.kappa()];
        Ok(Fca { collection, kinds })
    }

    /// A default kind with per-set overrides.
    pub fn mixed(
        collection: Collection,
        default: AggregatorKind,
        overrides: impl IntoIterator<Item = (IndexSet, AggregatorKind)>,
    ) -> Result<Self> {
        let mut f = Fca::uniform(collection, default)?;
        for (s, k) in overrides {
            k.check(f.collection.n())?;
            let idx = f.collection.index_of(s).ok_or(Error::SetNotInCollection(s))?;
            f.kinds[idx] = k;
        }
        Ok(f)
    }

    pub fn collection(&self) -> &Collection {
        &self.collection
    }

    pub fn n(&self) -> usize {
        self.collection.n()
    }

    pub fn kind(&self, e: IndexSet) -> Option<&AggregatorKind> {
        self.collection.index_of(e).map(|k| &self.kinds[k])
    }

    pub fn kinds(&self) -> impl Iterator<Item = (IndexSet, &AggregatorKind)> {
        self.collection.sets().iter().copied().zip(self.kinds.iter())
    }

    /// `A(x|E)`.
    pub fn evaluate(&self, x: &[Rational], e: IndexSet) -> Result<Rational> {
        let k = self.collection.index_of(e).ok_or(Error::SetNotInCollection(e))?;
        validate_vector(self.n(), x)?;
        Ok(self.kinds[k].aggregate(x, e))
    }

    /// `A(x|E)` for every `E`, aligned with the collection. `x` must already be validated.
    pub(crate) fn evaluate_all(&self, x: &[Rational]) -> Vec<Rational> {
        self.kinds().map(|(e, k)| k.aggregate(x, e)).collect()
    }

    /// Whether `E ⊆ F` implies `A(x|E) ≤ A(x|F)` at this `x`. Needs the full power set,
    /// where covering pairs `E ⊂ E ∪ {i}` suffice.
    pub fn is_set_monotone_at(&self, x: &[Rational]) -> Result<bool> {
        if !self.collection.is_powerset() {
            return Err(Error::PreconditionViolated(
                "set monotonicity is only checked on the full power set".into(),
            ));
        }
        validate_vector(self.n(), x)?;
        let vals = self.evaluate_all(x);
        let c = &self.collection;
        Ok(c.sets().iter().enumerate().all(|(k, &e)| {
            (0..c.n())
                .filter(|&p| !e.contains(p))
                .all(|p| vals[k] <= vals[c.index_of(e.with(p)).expect("power set")])
        }))
    }

    /// Checks both operator axioms on the given probes plus a default grid.
    pub fn check_axioms(&self, probes: &[(Vec<Rational>, Vec<Rational>)]) -> AxiomReport {
        let kinds = &self.kinds;
        let c = &self.collection;
        let op = |x: &[Rational], e: IndexSet| {
            let k = c.index_of(e).expect("set from the collection");
            kinds[k].aggregate(x, e)
        };
        check_axioms_with(c, &op, probes)
    }
}

/// Outcome of [`check_axioms_with`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub checked: usize,
    pub failure: Option<AxiomFailure>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// First counterexample found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomFailure {
    /// `x ≤ y` on `set` but `A(x|set) > A(y|set)`.
    Monotonicity { set: IndexSet, x: Vec<Rational>, y: Vec<Rational> },
    /// `A(1_{set^c}|set) ≠ 0`.
    Annihilation { set: IndexSet, value: Rational },
}

impl fmt::Display for AxiomFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomFailure::Monotonicity { set, x, y } => {
                write!(f, "monotonicity fails on {set} for x={x:?}, y={y:?}")
            }
            AxiomFailure::Annihilation { set, value } => {
                write!(f, "A(1_complement|{set}) = {value}, expected 0")
            }
        }
    }
}

/// Largest `n` for which the `{0, 1/2, 1}^n` grid is added to the probes.
pub const GRID_MAX_N: usize = 6;

/// Checks monotonicity in `x` and `A(1_{E^c}|E) = 0` for every nonempty `E` of `collection`.
///
/// Monotonicity is tested on each probe pair for the sets on which `x ≤ y` holds, and on
/// neighbouring grid points. Raising a coordinate outside `E` is tested in both directions,
/// so the value must not depend on it.
pub fn check_axioms_with(
    collection: &Collection,
    op: &impl ConditionalAggregation,
    probes: &[(Vec<Rational>, Vec<Rational>)],
) -> AxiomReport {
    let n = collection.n();
    let sets: Vec<IndexSet> = collection.sets().iter().copied().filter(|s| !s.is_empty()).collect();
    let mut checked = 0;
    let fail = |checked, failure| AxiomReport { checked, failure: Some(failure) };

    for &e in &sets {
        let ind: Vec<Rational> = (0..n)
            .map(|p| if e.contains(p) { Rational::zero() } else { Rational::one() })
            .collect();
        checked += 1;
        let v = op.aggregate(&ind, e);
        if !v.is_zero() {
            return fail(checked, AxiomFailure::Annihilation { set: e, value: v });
        }
    }

    let mut pairs: Vec<(Vec<Rational>, Vec<Rational>, Option<usize>)> =
        probes.iter().map(|(x, y)| (x.clone(), y.clone(), None)).collect();
    if n <= GRID_MAX_N {
        let steps = [Rational::zero(), Rational::new(1, 2), Rational::one()];
        let total = 3usize.pow(n as u32);
        for code in 0..total {
            let digits: Vec<usize> = (0..n).map(|p| code / 3usize.pow(p as u32) % 3).collect();
            let x: Vec<Rational> = digits.iter().map(|&d| steps[d].clone()).collect();
            for p in 0..n {
                if digits[p] < 2 {
                    let mut y = x.clone();
                    y[p] = steps[digits[p] + 1].clone();
                    pairs.push((x.clone(), y, Some(p)));
                }
            }
        }
    }

    for (x, y, moved) in &pairs {
        for &e in &sets {
            let le_on_e = e.positions().all(|p| x[p] <= y[p]);
            if le_on_e {
                checked += 1;
                if op.aggregate(x, e) > op.aggregate(y, e) {
                    return fail(checked, AxiomFailure::Monotonicity { set: e, x: x.clone(), y: y.clone() });
                }
            }
            if let Some(p) = moved {
                if !e.contains(*p) {
                    checked += 1;
                    if op.aggregate(y, e) > op.aggregate(x, e) {
                        return fail(checked, AxiomFailure::Monotonicity {
                            set: e,
                            x: y.clone(),
                            y: x.clone(),
                        });
                    }
                }
            }
        }
    }
    AxiomReport { checked, failure: None }
}
