//! Sets, collections, exact numbers, measures and step functions.

mod measure;
mod rational;
mod sets;
mod step;

pub use measure::{MonotoneMeasure, SpecialMeasure};
pub use rational::{q, ExtRational, Rational};
pub use sets::{Collection, IndexSet, MAX_KAPPA, MAX_N};
pub use step::{canonicalize_step, integrate_step, Piece, StepFunction};
