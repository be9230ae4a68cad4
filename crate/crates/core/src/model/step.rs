//! Right-continuous nonincreasing step functions on `[0, ∞)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::model::{ExtRational, Rational};

/// One constant piece `value` on `[lo, hi)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Piece {
    pub lo: Rational,
    pub hi: ExtRational,
    pub value: Rational,
}

impl Piece {
    pub fn new(lo: Rational, hi: impl Into<ExtRational>, value: Rational) -> Self {
        Piece { lo, hi: hi.into(), value }
    }

    pub fn is_empty(&self) -> bool {
        match &self.hi {
            ExtRational::Finite(h) => *h <= self.lo,
            ExtRational::Infinity => false,
        }
    }
}

impl fmt::Display for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}) -> {}", self.lo, self.hi, self.value)
    }
}

/// A step function stored as breakpoints `0 = b_0 < b_1 < ...` and one value per breakpoint.
/// The value `values[k]` holds on `[b_k, b_{k+1})`; the last one holds up to `∞`.
/// Adjacent values always differ.
#[derive(Clone, PartialEq, Eq)]
pub struct StepFunction {
    breakpoints: Vec<Rational>,
    values: Vec<Rational>,
}

impl StepFunction {
    pub fn constant(value: Rational) -> Self {
        StepFunction { breakpoints: vec![Rational::zero()], values: vec![value] }
    }

    /// Canonicalizes a list of pieces that must tile `[0, ∞)` after empty pieces are
    /// dropped. Pieces may come in any order.
    pub fn from_pieces(pieces: impl IntoIterator<Item = Piece>) -> Result<Self> {
        canonicalize_step(pieces.into_iter().collect())
    }

    /// Value at `alpha ≥ 0`.
    pub fn eval(&self, alpha: &Rational) -> &Rational {
        let k = self.breakpoints.partition_point(|b| b <= alpha);
        &self.values[k.saturating_sub(1)]
    }

    pub fn pieces(&self) -> Vec<Piece> {
        (0..self.values.len())
            .map(|k| Piece {
                lo: self.breakpoints[k].clone(),
                hi: self
                    .breakpoints
                    .get(k + 1)
                    .cloned()
                    .map_or(ExtRational::Infinity, ExtRational::Finite),
                value: self.values[k].clone(),
            })
            .collect()
    }

    pub fn breakpoints(&self) -> &[Rational] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn is_nonincreasing(&self) -> bool {
        self.values.windows(2).all(|w| w[0] >= w[1])
    }

    /// Value on the unbounded last piece.
    pub fn tail(&self) -> &Rational {
        self.values.last().expect("step function is never empty")
    }

    /// Number of constant pieces.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Debug for StepFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.pieces().iter().map(|p| p.to_string())).finish()
    }
}

impl fmt::Display for StepFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.pieces().iter().enumerate() {
            if k > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Drops empty pieces, sorts, checks that the rest tile `[0, ∞)` and merges equal neighbours.
pub fn canonicalize_step(mut pieces: Vec<Piece>) -> Result<StepFunction> {
    for p in &pieces {
        if let ExtRational::Finite(h) = &p.hi {
            if *h < p.lo {
                return Err(Error::GapOrOverlap(format!("piece {p} has lo > hi")));
            }
        }
    }
    pieces.retain(|p| !p.is_empty());
    pieces.sort_by(|a, b| a.lo.cmp(&b.lo));
    let mut expected = ExtRational::Finite(Rational::zero());
    let mut breakpoints: Vec<Rational> = Vec::new();
    let mut values: Vec<Rational> = Vec::new();
    for p in pieces {
        if expected != ExtRational::Finite(p.lo.clone()) {
            return Err(Error::GapOrOverlap(format!("expected a piece starting at {expected}, found {p}")));
        }
        if values.last() != Some(&p.value) {
            breakpoints.push(p.lo.clone());
            values.push(p.value.clone());
        }
        expected = p.hi;
    }
    if !expected.is_infinite() {
        return Err(Error::GapOrOverlap(format!("pieces stop at {expected}")));
    }
    Ok(StepFunction { breakpoints, values })
}

/// `∫_0^∞ f(α) dα`. Diverges unless the last value is zero.
pub fn integrate_step(f: &StepFunction) -> Result<Rational> {
    if !f.tail().is_zero() {
        return Err(Error::DivergentIntegral);
    }
    Ok(f.breakpoints
        .windows(2)
        .zip(&f.values)
        .map(|(w, v)| (&w[1] - &w[0]) * v)
        .sum())
}
