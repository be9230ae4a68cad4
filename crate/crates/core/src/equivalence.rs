//! Integral equivalence of triples `(μ, A, x)`.

use std::fmt;

use crate::aggregators::{validate_vector, Fca};
use crate::error::{Error, Result};
use crate::gsf::{gsf_agg_scan, Arrangement};
use crate::index_maps::{greatest_interval, Interval, LevelQuery, PlateauBounds};
use crate::model::{MonotoneMeasure, Rational, StepFunction};

/// A measure, an aggregation family and an input vector.
#[derive(Clone, Debug)]
pub struct Triple {
    measure: MonotoneMeasure,
    fca: Fca,
    x: Vec<Rational>,
    arrangement: Arrangement,
}

impl Triple {
    pub fn new(measure: MonotoneMeasure, fca: Fca, x: Vec<Rational>) -> Result<Self> {
        if *measure.domain() != fca.collection().complement() {
            return Err(Error::DomainMismatch);
        }
        validate_vector(fca.n(), &x)?;
        let arrangement = Arrangement::build(&fca, &measure, &x)?;
        Ok(Triple { measure, fca, x, arrangement })
    }

    pub fn measure(&self) -> &MonotoneMeasure {
        &self.measure
    }

    pub fn fca(&self) -> &Fca {
        &self.fca
    }

    pub fn x(&self) -> &[Rational] {
        &self.x
    }

    pub fn arrangement(&self) -> &Arrangement {
        &self.arrangement
    }

    pub fn gsf(&self) -> StepFunction {
        gsf_agg_scan(&self.arrangement)
    }

    /// Each achieved level `μ_j` with its greatest interval, in measure order.
    pub fn achieved_levels(&self) -> Vec<(usize, Rational, Interval)> {
        let pb = PlateauBounds::build(&self.arrangement);
        (0..self.arrangement.kappa())
            .filter_map(|j| {
                let iv = greatest_interval(LevelQuery::Measure(j), &self.arrangement, &pb).expect("index in range");
                (!iv.is_empty()).then(|| (j, self.arrangement.mu()[j].clone(), iv))
            })
            .collect()
    }
}

/// Identical survival functions.
pub fn integral_equivalent(t1: &Triple, t2: &Triple) -> bool {
    t1.gsf() == t2.gsf()
}

/// Which triple a level belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    First,
    Second,
}

/// An achieved level of one triple and the index of the matching level in the other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelMatch {
    pub side: Side,
    pub index: usize,
    pub value: Rational,
    pub interval: Interval,
    /// `None` when the other triple has no level with this value and interval.
    pub counterpart: Option<usize>,
}

impl fmt::Display for LevelMatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = match self.side {
            Side::First => "first",
            Side::Second => "second",
        };
        write!(f, "{side} level {} = {} on {}", self.index, self.value, self.interval)?;
        match self.counterpart {
            Some(k) => write!(f, " matches level {k}"),
            None => f.write_str(" has no counterpart"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub holds: bool,
    pub matches: Vec<LevelMatch>,
}

impl EquivalenceReport {
    /// The first unmatched level, if any.
    pub fn witness(&self) -> Option<&LevelMatch> {
        self.matches.iter().find(|m| m.counterpart.is_none())
    }
}

fn match_levels(side: Side, from: &[(usize, Rational, Interval)], to: &[(usize, Rational, Interval)]) -> Vec<LevelMatch> {
    from.iter()
        .map(|(j, v, iv)| LevelMatch {
            side,
            index: *j,
            value: v.clone(),
            interval: iv.clone(),
            counterpart: to.iter().find(|(_, w, jv)| w == v && jv == iv).map(|(k, _, _)| *k),
        })
        .collect()
}

/// Every achieved level of either triple has a level of the other one with the same value
/// and the same greatest interval.
pub fn equivalence_condition(t1: &Triple, t2: &Triple) -> EquivalenceReport {
    let l1 = t1.achieved_levels();
    let l2 = t2.achieved_levels();
    let mut matches = match_levels(Side::First, &l1, &l2);
    matches.extend(match_levels(Side::Second, &l2, &l1));
    EquivalenceReport { holds: matches.iter().all(|m| m.counterpart.is_some()), matches }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aggregators::AggregatorKind;
    use crate::model::{q, Collection, IndexSet};

    fn v(xs: &[&str]) -> Vec<Rational> {
        xs.iter().map(|s| q(s)).collect()
    }

    #[test]
    fn max_and_sum_example() {
        let c = Collection::from_member_lists(3, &[vec![], vec![1], vec![1, 2, 3]]).unwrap();
        let s = |m: &[usize]| IndexSet::from_members(3, m).unwrap();
        let mu = MonotoneMeasure::new(
            c.complement(),
            [(s(&[]), q("0")), (s(&[2, 3]), q("0.5")), (s(&[1, 2, 3]), q("1"))],
        )
        .unwrap();
        let t1 = Triple::new(mu.clone(), Fca::uniform(c.clone(), AggregatorKind::Max).unwrap(), v(&["2", "5", "9"])).unwrap();
        let t2 = Triple::new(mu.clone(), Fca::uniform(c, AggregatorKind::Sum).unwrap(), v(&["2", "3", "4"])).unwrap();
        assert_eq!(t1.gsf().to_string(), "[0,2) -> 1; [2,9) -> 1/2; [9,inf) -> 0");
        assert!(integral_equivalent(&t1, &t2));
        let r = equivalence_condition(&t1, &t2);
        assert!(r.holds && r.witness().is_none());
        assert!(integral_equivalent(&t1, &t1));

        let bumped = MonotoneMeasure::new(
            mu.domain().clone(),
            [(s(&[]), q("0")), (s(&[2, 3]), q("0.6")), (s(&[1, 2, 3]), q("1"))],
        )
        .unwrap();
        let t3 = Triple::new(bumped, t2.fca().clone(), t2.x().to_vec()).unwrap();
        assert!(!integral_equivalent(&t1, &t3));
        let r = equivalence_condition(&t1, &t3);
        assert!(!r.holds);
        assert_eq!(r.witness().unwrap().value, q("0.5"));
    }
}
