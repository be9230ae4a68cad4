//! Generalized survival functions: the definition, the two scan formulas and closed forms
//! for special measures.

use std::collections::HashMap;

use crate::aggregators::{validate_vector, Fca};
use crate::error::{Error, Result};
use crate::model::{
    canonicalize_step, ExtRational, IndexSet, MonotoneMeasure, Piece, Rational, SpecialMeasure,
    StepFunction,
};

/// The two sorted enumerations of an instance.
///
/// `E_i` runs over the collection by ascending `A_i = A(x|E_i)`, `F_j` over the measure
/// domain by ascending `μ_j = μ(F_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    n: usize,
    e_sets: Vec<IndexSet>,
    agg: Vec<Rational>,
    f_sets: Vec<IndexSet>,
    mu: Vec<Rational>,
    // μ(E_i^c), i.e. μ_(i).
    mu_paren: Vec<Rational>,
    // A(x|F_j^c), i.e. A_⟨j⟩.
    agg_angle: Vec<Rational>,
    // (i): E_i = F_(i)^c.
    paren: Vec<usize>,
}

impl Arrangement {
    /// Builds the canonical arrangement.
    ///
    /// Ties in `A` put `∅` first and then follow the canonical order of the complements,
    /// which lists `E` in the same order as its counterpart `E^c` in the measure order.
    /// Ties in `μ` follow the canonical set order.
    pub fn build(f: &Fca, mu: &MonotoneMeasure, x: &[Rational]) -> Result<Self> {
        let c = f.collection();
        if *mu.domain() != c.complement() {
            return Err(Error::DomainMismatch);
        }
        validate_vector(c.n(), x)?;
        let n = c.n();
        let vals = f.evaluate_all(x);
        let mut e_order: Vec<(IndexSet, Rational)> = c.sets().iter().copied().zip(vals).collect();
        e_order.sort_by(|(e1, a1), (e2, a2)| {
            a1.cmp(a2)
                .then_with(|| (!e1.is_empty()).cmp(&!e2.is_empty()))
                .then_with(|| e1.complement(n).cmp(&e2.complement(n)))
        });
        let mut f_order: Vec<(IndexSet, Rational)> = mu.entries().map(|(s, v)| (s, v.clone())).collect();
        f_order.sort_by(|(f1, m1), (f2, m2)| m1.cmp(m2).then_with(|| f1.cmp(f2)));
        Arrangement::from_parts(n, e_order, f_order)
    }

    /// Builds an arrangement from explicit orders. Both must be sorted by value; ties may be
    /// in any order. Used to check that results do not depend on tie-breaking.
    pub fn from_parts(
        n: usize,
        e_order: Vec<(IndexSet, Rational)>,
        f_order: Vec<(IndexSet, Rational)>,
    ) -> Result<Self> {
        if e_order.len() != f_order.len() || e_order.is_empty() {
            return Err(Error::DomainMismatch);
        }
        if e_order.windows(2).any(|w| w[0].1 > w[1].1) || f_order.windows(2).any(|w| w[0].1 > w[1].1) {
            return Err(Error::PreconditionViolated("arrangement is not sorted".into()));
        }
        let f_pos: HashMap<IndexSet, usize> = f_order.iter().enumerate().map(|(j, (s, _))| (*s, j)).collect();
        let e_pos: HashMap<IndexSet, usize> = e_order.iter().enumerate().map(|(i, (s, _))| (*s, i)).collect();
        if f_pos.len() != f_order.len() || e_pos.len() != e_order.len() {
            return Err(Error::PreconditionViolated("arrangement repeats a set".into()));
        }
        let paren = e_order
            .iter()
            .map(|(e, _)| f_pos.get(&e.complement(n)).copied().ok_or(Error::DomainMismatch))
            .collect::<Result<Vec<_>>>()?;
        let (e_sets, agg): (Vec<_>, Vec<_>) = e_order.into_iter().unzip();
        let (f_sets, mu): (Vec<_>, Vec<_>) = f_order.into_iter().unzip();
        let mu_paren = paren.iter().map(|&j| mu[j].clone()).collect();
        let mut agg_angle = vec![Rational::zero(); agg.len()];
        for (i, &j) in paren.iter().enumerate() {
            agg_angle[j] = agg[i].clone();
        }
        Ok(Arrangement { n, e_sets, agg, f_sets, mu, mu_paren, agg_angle, paren })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `κ`.
    pub fn kappa(&self) -> usize {
        self.agg.len()
    }

    /// `(E_i, A_i)` pairs.
    pub fn e_order(&self) -> impl Iterator<Item = (IndexSet, &Rational)> {
        self.e_sets.iter().copied().zip(self.agg.iter())
    }

    /// `(F_j, μ_j)` pairs.
    pub fn f_order(&self) -> impl Iterator<Item = (IndexSet, &Rational)> {
        self.f_sets.iter().copied().zip(self.mu.iter())
    }

    pub fn e_sets(&self) -> &[IndexSet] {
        &self.e_sets
    }

    pub fn f_sets(&self) -> &[IndexSet] {
        &self.f_sets
    }

    /// `A_0 ≤ … ≤ A_{κ-1}`.
    pub fn agg(&self) -> &[Rational] {
        &self.agg
    }

    /// `A_i`, or `∞` for `i = κ`.
    pub fn agg_ext(&self, i: usize) -> ExtRational {
        self.agg.get(i).cloned().map_or(ExtRational::Infinity, ExtRational::Finite)
    }

    /// `μ_0 ≤ … ≤ μ_{κ-1}`.
    pub fn mu(&self) -> &[Rational] {
        &self.mu
    }

    /// `μ_(i) = μ(E_i^c)`.
    pub fn mu_paren(&self) -> &[Rational] {
        &self.mu_paren
    }

    /// `A_⟨j⟩ = A(x|F_j^c)`.
    pub fn agg_angle(&self) -> &[Rational] {
        &self.agg_angle
    }

    /// The permutation `(·)` with `E_i = F_(i)^c`.
    pub fn paren(&self) -> &[usize] {
        &self.paren
    }

    /// `min_{k≤j} A_⟨k⟩` for every `j`.
    pub fn angle_prefix_min(&self) -> Vec<Rational> {
        running_min(&self.agg_angle)
    }

    /// `min_{k≤i} μ_(k)` for every `i`.
    pub fn paren_prefix_min(&self) -> Vec<Rational> {
        running_min(&self.mu_paren)
    }
}

pub(crate) fn running_min(v: &[Rational]) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(v.len());
    for x in v {
        let next = match out.last() {
            Some(m) if m < x => m.clone(),
            _ => x.clone(),
        };
        out.push(next);
    }
    out
}

/// Shorthand for [`Arrangement::build`].
pub fn build_arrangement(f: &Fca, mu: &MonotoneMeasure, x: &[Rational]) -> Result<Arrangement> {
    Arrangement::build(f, mu, x)
}

/// `min{μ(E^c) : A(x|E) ≤ α}` evaluated directly at every distinct value of `A`.
pub fn gsf_definition(f: &Fca, mu: &MonotoneMeasure, x: &[Rational]) -> Result<StepFunction> {
    let c = f.collection();
    if *mu.domain() != c.complement() {
        return Err(Error::DomainMismatch);
    }
    validate_vector(c.n(), x)?;
    let n = c.n();
    let vals = f.evaluate_all(x);
    let mut cuts: Vec<Rational> = vals.clone();
    cuts.sort();
    cuts.dedup();
    let pieces = cuts
        .iter()
        .enumerate()
        .map(|(k, alpha)| {
            let value = c
                .sets()
                .iter()
                .zip(&vals)
                .filter(|(_, a)| *a <= alpha)
                .map(|(e, _)| mu.value(e.complement(n)))
                .min()
                .cloned()
                .expect("A(x|∅) = 0 is always feasible");
            let hi = cuts.get(k + 1).cloned().map_or(ExtRational::Infinity, ExtRational::Finite);
            Piece { lo: alpha.clone(), hi, value }
        })
        .collect();
    canonicalize_step(pieces)
}

/// Pieces `min_{k≤i} μ_(k)` on `[A_i, A_{i+1})`, before canonicalization.
pub fn agg_scan_partition(arr: &Arrangement) -> Vec<Piece> {
    let mins = arr.paren_prefix_min();
    (0..arr.kappa())
        .map(|i| Piece { lo: arr.agg[i].clone(), hi: arr.agg_ext(i + 1), value: mins[i].clone() })
        .collect()
}

pub fn gsf_agg_scan(arr: &Arrangement) -> StepFunction {
    canonicalize_step(agg_scan_partition(arr)).expect("aggregation scan tiles [0, ∞)")
}

/// Pieces `μ_j` on `[min_{k≤j} A_⟨k⟩, min_{k<j} A_⟨k⟩)`, before canonicalization.
pub fn measure_scan_partition(arr: &Arrangement) -> Vec<Piece> {
    let mins = arr.angle_prefix_min();
    (0..arr.kappa())
        .map(|j| Piece {
            lo: mins[j].clone(),
            hi: if j == 0 { ExtRational::Infinity } else { ExtRational::Finite(mins[j - 1].clone()) },
            value: arr.mu[j].clone(),
        })
        .collect()
}

pub fn gsf_measure_scan(arr: &Arrangement) -> StepFunction {
    canonicalize_step(measure_scan_partition(arr)).expect("measure scan tiles [0, ∞)")
}

/// Checks the shared preconditions of the symmetric, possibility and necessity forms.
pub(crate) fn check_special_preconditions(kind: &SpecialMeasure, f: &Fca, x: &[Rational]) -> Result<()> {
    kind.validate(f.n())?;
    validate_vector(f.n(), x)?;
    if matches!(kind, SpecialMeasure::Greatest | SpecialMeasure::Weakest) {
        return Ok(());
    }
    if !f.collection().is_powerset() {
        return Err(Error::PreconditionViolated("closed form needs the full power set".into()));
    }
    if !f.is_set_monotone_at(x)? {
        return Err(Error::PreconditionViolated(
            "aggregation family is not nondecreasing with respect to sets".into(),
        ));
    }
    Ok(())
}

/// Ascending permutation of `π` with ties broken by index.
pub(crate) fn sort_distribution(pi: &[Rational]) -> Vec<usize> {
    let mut sigma: Vec<usize> = (0..pi.len()).collect();
    sigma.sort_by(|&a, &b| pi[a].cmp(&pi[b]).then(a.cmp(&b)));
    sigma
}

/// `min_{|E| = k} A(x|E)` for `k = 0..=n`. Needs the full power set.
pub(crate) fn min_by_cardinality(f: &Fca, x: &[Rational]) -> Vec<Rational> {
    let mut out: Vec<Option<Rational>> = vec![None; f.n() + 1];
    for ((e, _), a) in f.kinds().zip(f.evaluate_all(x)) {
        let slot = &mut out[e.len()];
        if slot.as_ref().map_or(true, |m| a < *m) {
            *slot = Some(a);
        }
    }
    out.into_iter().map(|m| m.expect("power set has every size")).collect()
}

fn fin(r: Rational) -> ExtRational {
    ExtRational::Finite(r)
}

/// Closed-form survival function for a special measure on the complement collection.
pub fn gsf_special(kind: &SpecialMeasure, f: &Fca, x: &[Rational]) -> Result<StepFunction> {
    check_special_preconditions(kind, f, x)?;
    let n = f.n();
    let one = Rational::one();
    let zero = Rational::zero();
    let eval = |e: IndexSet| f.evaluate(x, e);
    let pieces = match kind {
        SpecialMeasure::Greatest => {
            let top = eval(IndexSet::full(n))?;
            vec![
                Piece { lo: zero.clone(), hi: fin(top.clone()), value: one },
                Piece { lo: top, hi: ExtRational::Infinity, value: zero },
            ]
        }
        SpecialMeasure::Weakest => {
            let vals = f.evaluate_all(x);
            let low = Rational::min_of(
                f.collection().sets().iter().zip(&vals).filter(|(e, _)| !e.is_empty()).map(|(_, a)| a),
            )
            .expect("collection holds [n]");
            vec![
                Piece { lo: zero.clone(), hi: fin(low.clone()), value: one },
                Piece { lo: low, hi: ExtRational::Infinity, value: zero },
            ]
        }
        SpecialMeasure::Symmetric(levels) => {
            let mins = min_by_cardinality(f, x);
            (0..=n)
                .map(|i| Piece {
                    lo: mins[n - i].clone(),
                    hi: if i == 0 { ExtRational::Infinity } else { fin(mins[n - i + 1].clone()) },
                    value: levels[i].clone(),
                })
                .collect()
        }
        SpecialMeasure::Possibility(pi) => {
            let sigma = sort_distribution(pi);
            // g[i] = A(x|G_σ(i)) for i = 1..=n+1, G_σ(i) = {σ(i), …, σ(n)}.
            let g: Vec<Rational> = (0..=n)
                .map(|k| eval(IndexSet::from_positions(sigma[k..].iter().copied())))
                .collect::<Result<_>>()?;
            // The i = 0 term carries the zero value on [A(x|[n]), ∞).
            let mut pieces = vec![Piece { lo: g[0].clone(), hi: ExtRational::Infinity, value: zero }];
            for i in 1..=n {
                pieces.push(Piece {
                    lo: g[i].clone(),
                    hi: fin(g[i - 1].clone()),
                    value: pi[sigma[i - 1]].clone(),
                });
            }
            pieces
        }
        SpecialMeasure::Necessity(pi) => {
            let sigma = sort_distribution(pi);
            let single: Vec<Rational> = sigma
                .iter()
                .map(|&p| eval(IndexSet::from_positions([p])))
                .collect::<Result<_>>()?;
            // suffix[i] = min_{k≥i} A(x|{σ(k)}) for 1-based i = 1..=n, stored at i - 1.
            let mut suffix = single.clone();
            for k in (0..n.saturating_sub(1)).rev() {
                if suffix[k + 1] < suffix[k] {
                    suffix[k] = suffix[k + 1].clone();
                }
            }
            let mut pieces =
                vec![Piece { lo: zero.clone(), hi: fin(suffix[0].clone()), value: one.clone() }];
            for i in 1..=n {
                pieces.push(Piece {
                    lo: suffix[i - 1].clone(),
                    hi: suffix.get(i).cloned().map_or(ExtRational::Infinity, fin),
                    value: &one - &pi[sigma[i - 1]],
                });
            }
            pieces
        }
    };
    canonicalize_step(pieces)
}
