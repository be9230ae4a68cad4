//! Cross-checks of one instance: every survival-function and integral route against the
//! others, plus the structural identities of the index maps and plateau bounds.

use std::fmt;

use crate::aggregators::Fca;
use crate::choquet::{choquet_formula, ChoquetRoute};
use crate::error::Result;
use crate::gsf::{agg_scan_partition, gsf_definition, measure_scan_partition, Arrangement};
use crate::index_maps::{
    greatest_interval, indexed_gsf, indexed_gsf_from_j, is_value_achieved, relabel, Interval, LevelQuery,
    PermutationTables, PlateauBounds,
};
use crate::model::{ExtRational, MonotoneMeasure, Piece, Rational, StepFunction};
use crate::routes::{gsf_from_arrangement, GsfRoute};

/// A failed check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Finding {
    pub check: &'static str,
    pub detail: String,
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.check, self.detail)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AuditReport {
    /// Number of individual assertions evaluated.
    pub checked: usize,
    pub findings: Vec<Finding>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.findings.is_empty()
    }

    fn expect(&mut self, ok: bool, check: &'static str, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.findings.push(Finding { check, detail: detail() });
        }
    }

    fn merge(&mut self, other: AuditReport) {
        self.checked += other.checked;
        self.findings.extend(other.findings);
    }
}

/// All survival-function routes and all integral routes agree.
pub fn audit_routes(f: &Fca, mu: &MonotoneMeasure, x: &[Rational]) -> Result<AuditReport> {
    let arr = Arrangement::build(f, mu, x)?;
    let reference = gsf_definition(f, mu, x)?;
    let mut r = AuditReport::default();
    for route in GsfRoute::ALL.into_iter().filter(|&g| g != GsfRoute::Definition) {
        let g = gsf_from_arrangement(&arr, route);
        r.expect(g == reference, "routes", || format!("{} gives {g}, definition gives {reference}", route.name()));
    }
    let pt = PermutationTables::build(&arr);
    let (first, _) = choquet_formula(&arr, &pt, ChoquetRoute::Integrate);
    for route in ChoquetRoute::ALL {
        let (direct, dual) = choquet_formula(&arr, &pt, route);
        r.expect(direct == dual, "integral", || format!("{} direct {direct} vs dual {dual}", route.name()));
        r.expect(direct == first, "integral", || format!("{} gives {direct}, integration gives {first}", route.name()));
    }
    Ok(r)
}

fn nonincreasing(v: &[usize]) -> bool {
    v.windows(2).all(|w| w[0] >= w[1])
}

fn nondecreasing(v: &[usize]) -> bool {
    v.windows(2).all(|w| w[0] <= w[1])
}

fn contains(outer: &Piece, inner: &Piece) -> bool {
    outer.lo <= inner.lo && inner.hi <= outer.hi
}

/// Where the canonical survival function takes `value`, or an empty interval.
fn level_set(gsf: &StepFunction, value: &Rational) -> Interval {
    gsf.pieces()
        .into_iter()
        .find(|p| &p.value == value)
        .map_or(Interval { lo: Rational::zero(), hi: ExtRational::Finite(Rational::zero()) }, |p| Interval {
            lo: p.lo,
            hi: p.hi,
        })
}

fn same_interval(a: &Interval, b: &Interval) -> bool {
    (a.is_empty() && b.is_empty()) || a == b
}

/// Identities of `(·)`, `i`, `j`, the plateau bounds and the greatest intervals.
pub fn audit_structure(arr: &Arrangement) -> AuditReport {
    let mut r = AuditReport::default();
    let k = arr.kappa();
    let pt = PermutationTables::build(arr);
    let pb = PlateauBounds::build(arr);
    let gsf = gsf_from_arrangement(arr, GsfRoute::AggScan);
    let mu = arr.mu();
    let agg = arr.agg();
    let run_mu = arr.paren_prefix_min();
    let run_agg = arr.angle_prefix_min();

    let mut seen = vec![false; k];
    pt.pi.iter().for_each(|&p| seen[p] = true);
    r.expect(seen.iter().all(|&s| s), "permutation", || format!("{:?} is not a permutation", pt.pi));
    r.expect((0..k).all(|i| pt.pi_inv[pt.pi[i]] == i), "permutation", || "inverse does not invert".into());
    r.expect(nonincreasing(&pt.i_map), "maps", || format!("i = {:?} increases", pt.i_map));
    r.expect(nonincreasing(&pt.j_map), "maps", || format!("j = {:?} increases", pt.j_map));
    r.expect((0..k).all(|i| pt.i_map[i] <= pt.pi[i] && pt.j_map[i] <= pt.pi_inv[i]), "maps", || {
        "a running minimum exceeds its permutation".into()
    });
    for i in 0..k {
        r.expect(run_mu[i] == mu[pt.i_map[i]], "lemma i", || format!("at {i}: {} vs {}", run_mu[i], mu[pt.i_map[i]]));
        r.expect(run_agg[i] == agg[pt.j_map[i]], "lemma j", || {
            format!("at {i}: {} vs {}", run_agg[i], agg[pt.j_map[i]])
        });
    }
    let relabeled = relabel(&indexed_gsf(&pt), arr);
    r.expect(relabeled == gsf, "indexed", || format!("relabeled {relabeled} vs {gsf}"));
    let from_j = indexed_gsf_from_j(&pt);
    r.expect(from_j == indexed_gsf(&pt), "indexed", || format!("inverse construction gives {from_j}"));

    let coarse: Vec<Piece> = measure_scan_partition(arr).into_iter().filter(|p| !p.is_empty()).collect();
    for p in agg_scan_partition(arr).into_iter().filter(|p| !p.is_empty()) {
        r.expect(coarse.iter().any(|c| contains(c, &p) && c.value == p.value), "refinement", || {
            format!("{p} lies in no measure-scan piece")
        });
    }

    r.expect(nondecreasing(&pb.phi_low) && nondecreasing(&pb.phi_high), "phi", || "bounds decrease".into());
    r.expect(nondecreasing(&pb.psi_low) && nondecreasing(&pb.psi_high), "psi", || "bounds decrease".into());
    for j in 0..k {
        let (lo, hi) = (pb.phi_low[j], pb.phi_high[j]);
        r.expect(lo <= j && j <= hi, "phi", || format!("{lo} <= {j} <= {hi} fails"));
        r.expect(mu[lo..=hi].iter().all(|v| v == &mu[j]), "phi", || format!("block of {j} is not constant"));
        r.expect((lo == 0 || mu[lo - 1] != mu[j]) && (hi + 1 == k || mu[hi + 1] != mu[j]), "phi", || {
            format!("block of {j} is not maximal")
        });
        let block = Interval {
            lo: run_agg[hi].clone(),
            hi: if lo == 0 { ExtRational::Infinity } else { ExtRational::Finite(run_agg[lo - 1].clone()) },
        };
        let iv = greatest_interval(LevelQuery::Measure(j), arr, &pb).expect("in range");
        r.expect(same_interval(&iv, &block), "phi", || format!("measure-scan union for {j} is {block:?}, not {iv:?}"));
        r.expect(same_interval(&iv, &level_set(&gsf, &mu[j])), "greatest interval", || {
            format!("level {j} = {} holds on {:?}, query says {iv:?}", mu[j], level_set(&gsf, &mu[j]))
        });
        let achieved = is_value_achieved(j, arr, &pb).expect("in range");
        let collapsed = lo > 0 && run_agg[hi] == run_agg[lo - 1];
        r.expect(achieved != collapsed, "achieved", || format!("level {j}: achieved {achieved}, prefix minima equal {collapsed}"));
        r.expect(achieved == gsf.values().contains(&mu[j]), "achieved", || format!("level {j} misreported"));
    }
    for i in 0..k {
        let (lo, hi) = (pb.psi_low[i], pb.psi_high[i]);
        r.expect(lo <= i && i <= hi, "psi", || format!("{lo} <= {i} <= {hi} fails"));
        r.expect(run_mu[lo..=hi].iter().all(|v| v == &run_mu[i]), "psi", || format!("plateau of {i} moves"));
        for t in 0..k {
            let eq = run_mu[i] == run_mu[t];
            r.expect(eq == (lo == pb.psi_low[t]) && eq == (hi == pb.psi_high[t]), "psi", || {
                format!("equal minima at {i}, {t} disagree with bounds")
            });
            let gt = run_mu[i] > run_mu[t];
            r.expect(gt == (hi < pb.psi_low[t]), "psi", || format!("strict order at {i}, {t} disagrees with bounds"));
        }
        let iv = greatest_interval(LevelQuery::Aggregation(i), arr, &pb).expect("in range");
        if !iv.is_empty() {
            r.expect(iv == level_set(&gsf, &run_mu[i]), "greatest interval", || {
                format!("aggregation level {i} holds on {:?}, query says {iv:?}", level_set(&gsf, &run_mu[i]))
            });
        }
    }
    r
}

/// [`audit_routes`] and [`audit_structure`] together.
pub fn audit_instance(f: &Fca, mu: &MonotoneMeasure, x: &[Rational]) -> Result<AuditReport> {
    let mut r = audit_routes(f, mu, x)?;
    r.merge(audit_structure(&Arrangement::build(f, mu, x)?));
    Ok(r)
}
