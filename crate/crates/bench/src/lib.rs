//! Shared fixtures for the benchmarks.

use gsf_core::gen::{random_instance, rng, GenConfig, Instance};

/// A fixed batch of random instances on `n` points, powerset-sized collections included.
pub fn instances(n: usize, count: usize) -> Vec<Instance> {
    let cfg = GenConfig { n_choices: vec![n], mixed_kinds: true, choquet_kind: false };
    let mut g = rng(0xbe9c + n as u64);
    (0..count).map(|_| random_instance(&mut g, &cfg)).collect()
}
