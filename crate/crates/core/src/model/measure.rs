//! Monotone measures on a collection of subsets.

use std::fmt;

use crate::error::{Error, Result};
use crate::model::{Collection, IndexSet, Rational};

/// A nonnegative set function on `domain`, vanishing on `∅` and monotone under inclusion.
#[derive(Clone, PartialEq, Eq)]
pub struct MonotoneMeasure {
    domain: Collection,
    // Aligned with `domain.sets()`.
    values: Vec<Rational>,
}

impl MonotoneMeasure {
    /// Validates `values` against `domain`. Every domain set needs exactly one value.
    pub fn new(
        domain: Collection,
        values: impl IntoIterator<Item = (IndexSet, Rational)>,
    ) -> Result<Self> {
        let mut slots: Vec<Option<Rational>> = vec![None; domain.kappa()];
        for (set, v) in values {
            match domain.index_of(set) {
                Some(k) => slots[k] = Some(v),
                None => return Err(Error::UnexpectedMeasureValue(set)),
            }
        }
        let values = slots
            .into_iter()
            .zip(domain.sets())
            .map(|(v, s)| v.ok_or(Error::MissingMeasureValue(*s)))
            .collect::<Result<Vec<_>>>()?;
        let m = MonotoneMeasure { domain, values };
        m.validate()?;
        Ok(m)
    }

    /// Builds a measure from a function of the set. Used for closed-form families.
    pub fn from_fn(domain: Collection, f: impl Fn(IndexSet) -> Rational) -> Result<Self> {
        let values = domain.sets().iter().map(|&s| (s, f(s))).collect::<Vec<_>>();
        MonotoneMeasure::new(domain, values)
    }

    fn validate(&self) -> Result<()> {
        let n = self.domain.n();
        for (s, v) in self.entries() {
            if v.is_negative() {
                return Err(Error::NegativeValue(s));
            }
        }
        if !self.values[0].is_zero() {
            return Err(Error::NonZeroEmptySet);
        }
        if let Some(v) = self.get(IndexSet::full(n)) {
            if !v.is_positive() {
                return Err(Error::ZeroFullSet);
            }
        }
        if self.domain.is_powerset() {
            // Covering pairs generate inclusion on a full power set.
            for (k, &s) in self.domain.sets().iter().enumerate() {
                for p in 0..n {
                    if s.contains(p) {
                        continue;
                    }
                    let bigger = s.with(p);
                    let j = self.domain.index_of(bigger).expect("power set is closed");
                    if self.values[k] > self.values[j] {
                        return Err(Error::MonotonicityViolation { smaller: s, larger: bigger });
                    }
                }
            }
        } else {
            let sets = self.domain.sets();
            for (a, sa) in sets.iter().enumerate() {
                for (b, sb) in sets.iter().enumerate().skip(a + 1) {
                    // Canonical order puts subsets first, so only (a, b) with a < b can nest.
                    if sa.is_subset(*sb) && self.values[a] > self.values[b] {
                        return Err(Error::MonotonicityViolation { smaller: *sa, larger: *sb });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn domain(&self) -> &Collection {
        &self.domain
    }

    pub fn n(&self) -> usize {
        self.domain.n()
    }

    pub fn get(&self, s: IndexSet) -> Option<&Rational> {
        self.domain.index_of(s).map(|k| &self.values[k])
    }

    /// Value on a set that is known to be in the domain. Panics otherwise.
    pub fn value(&self, s: IndexSet) -> &Rational {
        self.get(s)
            .unwrap_or_else(|| panic!("{s} is not in the measure domain"))
    }

    /// `(set, value)` pairs in canonical set order.
    pub fn entries(&self) -> impl Iterator<Item = (IndexSet, &Rational)> {
        self.domain.sets().iter().copied().zip(self.values.iter())
    }

    /// `μ([n]) == 1`.
    pub fn is_capacity(&self) -> bool {
        self.get(IndexSet::full(self.n())) == Some(&Rational::one())
    }

    /// Restriction to a sub-collection of the domain.
    pub fn restrict(&self, domain: Collection) -> Result<Self> {
        let values = domain
            .sets()
            .iter()
            .map(|&s| {
                self.get(s)
                    .cloned()
                    .map(|v| (s, v))
                    .ok_or(Error::MissingMeasureValue(s))
            })
            .collect::<Result<Vec<_>>>()?;
        MonotoneMeasure::new(domain, values)
    }
}

impl fmt::Debug for MonotoneMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.entries()).finish()
    }
}

/// Closed-form measure families with dedicated survival-function and integral formulas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecialMeasure {
    /// `1` on every nonempty set.
    Greatest,
    /// `1` on `[n]` only.
    Weakest,
    /// Depends on cardinality only; `levels[i]` is the value on sets of size `i`.
    Symmetric(Vec<Rational>),
    /// `Π(F) = max_{i∈F} π(i)`.
    Possibility(Vec<Rational>),
    /// `N(F) = 1 - max_{i∉F} π(i)`, with `max ∅ = 0`.
    Necessity(Vec<Rational>),
}

impl SpecialMeasure {
    /// Checks the family parameters against the ground set size.
    pub fn validate(&self, n: usize) -> Result<()> {
        match self {
            SpecialMeasure::Greatest | SpecialMeasure::Weakest => Ok(()),
            SpecialMeasure::Symmetric(levels) => {
                if levels.len() != n + 1 {
                    return Err(Error::BadLevels(format!(
                        "expected {} levels, got {}",
                        n + 1,
                        levels.len()
                    )));
                }
                if !levels[0].is_zero() {
                    return Err(Error::BadLevels("level 0 must be 0".into()));
                }
                if levels.windows(2).any(|w| w[0] > w[1]) {
                    return Err(Error::BadLevels("levels must be nondecreasing".into()));
                }
                if !levels[n].is_positive() {
                    return Err(Error::BadLevels("top level must be positive".into()));
                }
                Ok(())
            }
            SpecialMeasure::Possibility(pi) | SpecialMeasure::Necessity(pi) => {
                if pi.len() != n {
                    return Err(Error::PreconditionViolated(format!(
                        "possibility distribution has {} entries, expected {n}",
                        pi.len()
                    )));
                }
                if pi.iter().any(|p| p.is_negative() || *p > Rational::one()) {
                    return Err(Error::PreconditionViolated(
                        "possibility distribution must take values in [0, 1]".into(),
                    ));
                }
                if Rational::max_of(pi) != Some(Rational::one()) {
                    return Err(Error::PreconditionViolated(
                        "possibility distribution must attain 1".into(),
                    ));
                }
                Ok(())
            }
        }
    }

    /// Value of the family on `s ⊆ [n]`.
    pub fn value(&self, n: usize, s: IndexSet) -> Rational {
        match self {
            SpecialMeasure::Greatest => {
                if s.is_empty() {
                    Rational::zero()
                } else {
                    Rational::one()
                }
            }
            SpecialMeasure::Weakest => {
                if s == IndexSet::full(n) {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }
            SpecialMeasure::Symmetric(levels) => levels[s.len()].clone(),
            SpecialMeasure::Possibility(pi) => {
                Rational::max_of(s.positions().map(|p| &pi[p])).unwrap_or_else(Rational::zero)
            }
            SpecialMeasure::Necessity(pi) => {
                let outside = s.complement(n);
                Rational::one()
                    - Rational::max_of(outside.positions().map(|p| &pi[p]))
                        .unwrap_or_else(Rational::zero)
            }
        }
    }

    /// The measure this family induces on `domain`.
    pub fn induce(&self, domain: &Collection) -> Result<MonotoneMeasure> {
        self.validate(domain.n())?;
        let n = domain.n();
        MonotoneMeasure::from_fn(domain.clone(), |s| self.value(n, s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::q;

    fn six_set_domain() -> Collection {
        Collection::from_member_lists(
            3,
            &[vec![1, 2, 3], vec![2, 3], vec![1, 3], vec![1, 2], vec![2], vec![]],
        )
        .unwrap()
    }

    fn s(m: &[usize]) -> IndexSet {
        IndexSet::from_members(3, m).unwrap()
    }

    #[test]
    fn six_set_measure_is_valid() {
        let m = MonotoneMeasure::new(
            six_set_domain(),
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
        assert!(m.is_capacity());
        assert_eq!(m.value(s(&[2, 3])), &q("0.7"));
    }

    #[test]
    fn rejects_nonzero_empty_set() {
        let err = MonotoneMeasure::new(
            six_set_domain(),
            [
                (s(&[1, 2, 3]), q("1")),
                (s(&[2, 3]), q("0.7")),
                (s(&[1, 3]), q("0.5")),
                (s(&[1, 2]), q("0.5")),
                (s(&[2]), q("0.5")),
                (s(&[]), q("0.1")),
            ],
        )
        .unwrap_err();
        assert_eq!(err, Error::NonZeroEmptySet);
    }

    #[test]
    fn reports_monotonicity_violation() {
        let err = MonotoneMeasure::new(
            six_set_domain(),
            [
                (s(&[1, 2, 3]), q("1")),
                (s(&[2, 3]), q("0.5")),
                (s(&[1, 3]), q("0.5")),
                (s(&[1, 2]), q("0.6")),
                (s(&[2]), q("0.6")),
                (s(&[]), q("0")),
            ],
        )
        .unwrap_err();
        assert_eq!(err, Error::MonotonicityViolation { smaller: s(&[2]), larger: s(&[2, 3]) });
        assert_eq!(err.to_string(), "MonotonicityViolation: {2} ⊆ {2,3}");
    }

    #[test]
    fn rejects_negative_zero_full_and_missing() {
        let d = Collection::from_member_lists(2, &[vec![], vec![1], vec![1, 2]]).unwrap();
        let e = MonotoneMeasure::new(
            d.clone(),
            [(IndexSet::EMPTY, q("0")), (IndexSet::full(2), q("1")), (IndexSet::from_positions([0]), q("-1"))],
        );
        assert!(matches!(e, Err(Error::NegativeValue(_))));
        let e = MonotoneMeasure::new(
            d.clone(),
            [(IndexSet::EMPTY, q("0")), (IndexSet::full(2), q("0")), (IndexSet::from_positions([0]), q("0"))],
        );
        assert_eq!(e.unwrap_err(), Error::ZeroFullSet);
        let e = MonotoneMeasure::new(d, [(IndexSet::EMPTY, q("0")), (IndexSet::full(2), q("1"))]);
        assert!(matches!(e, Err(Error::MissingMeasureValue(_))));
    }

    #[test]
    fn powerset_violation_found_via_covering_pairs() {
        let d = Collection::powerset(3).unwrap();
        let err = MonotoneMeasure::from_fn(d, |s| {
            if s == IndexSet::from_positions([0]) {
                q("0.9")
            } else {
                Rational::new(s.len() as i64, 3)
            }
        })
        .unwrap_err();
        assert!(matches!(err, Error::MonotonicityViolation { .. }));
    }

    #[test]
    fn special_families_are_monotone() {
        let d = Collection::powerset(3).unwrap();
        let fams = [
            SpecialMeasure::Greatest,
            SpecialMeasure::Weakest,
            SpecialMeasure::Symmetric(vec![q("0"), q("0.2"), q("0.6"), q("1")]),
            SpecialMeasure::Possibility(vec![q("0.5"), q("1"), q("0.3")]),
            SpecialMeasure::Necessity(vec![q("0.5"), q("1"), q("0.3")]),
        ];
        for f in fams {
            let m = f.induce(&d).unwrap();
            assert!(m.is_capacity(), "{f:?}");
        }
        let nec = SpecialMeasure::Necessity(vec![q("0.5"), q("1"), q("0.3")]);
        assert_eq!(nec.value(3, s(&[1, 3])), q("0"));
        assert_eq!(nec.value(3, s(&[2])), q("0.5"));
        assert!(SpecialMeasure::Possibility(vec![q("0.5"), q("0.9"), q("0.3")])
            .validate(3)
            .is_err());
        assert!(SpecialMeasure::Symmetric(vec![q("0"), q("0.7"), q("0.6"), q("1")])
            .validate(3)
            .is_err());
    }
}
