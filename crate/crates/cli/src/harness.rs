//! Seeded gadget verification, sharded across worker threads.

use anyhow::{bail, Result};
use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use strq::gadgets::{
    binary_text, exhaustive_inputs, verify_reduction, GadgetInput, GadgetInstance, GadgetKind, InputShape,
    ReductionReport,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Trials { count: u64, seed: u64 },
}

/// Largest size accepted for an exhaustive sweep of each input shape.
pub fn exhaustive_limit(shape: InputShape) -> u64 {
    match shape {
        InputShape::Permutation => 8,
        InputShape::Set => 5,
        InputShape::BinaryText => 16,
    }
}

/// The RNG for instance `index` of a run: one ChaCha stream per instance.
pub fn instance_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// A random input of the kind's shape.
pub fn random_input(kind: GadgetKind, size: usize, rng: &mut impl Rng) -> GadgetInput {
    match kind.input_shape() {
        InputShape::Permutation => {
            let mut a: Vec<usize> = (1..=size).collect();
            a.shuffle(rng);
            GadgetInput::Permutation(a)
        }
        InputShape::Set => {
            let mut a: Vec<u64> = index::sample(rng, size * size, size).into_iter().map(|i| i as u64 + 1).collect();
            a.sort_unstable();
            GadgetInput::Set(a)
        }
        InputShape::BinaryText => GadgetInput::Text(binary_text((0..size).map(|_| rng.gen_range(0..2)).collect())),
    }
}

fn input_at(kind: GadgetKind, size: usize, seed: u64, i: u64) -> GadgetInput {
    random_input(kind, size, &mut instance_rng(seed, i))
}

fn check_one(kind: GadgetKind, input: &GadgetInput, i: u64) -> Result<ReductionReport> {
    let g = GadgetInstance::build(kind, input)?;
    Ok(verify_reduction(g.as_gadget(), i))
}

/// Verifies every instance of the run and merges the reports in instance
/// order, so the result is the same for any worker count.
pub fn verify(kind: GadgetKind, size: u64, mode: Mode, workers: usize) -> Result<ReductionReport> {
    if mode == Mode::Exhaustive && size > exhaustive_limit(kind.input_shape()) {
        bail!(
            "exhaustive {kind} is limited to size {}; use --trials for larger sizes",
            exhaustive_limit(kind.input_shape())
        );
    }
    let size = usize::try_from(size)?;
    let pool = rayon::ThreadPoolBuilder::new().num_threads(workers.max(1)).build()?;
    let reports: Vec<ReductionReport> = pool.install(|| match mode {
        Mode::Exhaustive => {
            let inputs = exhaustive_inputs(kind, size);
            inputs.par_iter().enumerate().map(|(i, input)| check_one(kind, input, i as u64)).collect::<Result<_>>()
        }
        Mode::Trials { count, seed } => (0..count)
            .into_par_iter()
            .map(|i| check_one(kind, &input_at(kind, size, seed, i), i))
            .collect::<Result<_>>(),
    })?;
    Ok(reports.into_iter().fold(ReductionReport::empty(kind), ReductionReport::merge))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_inputs_are_stable() {
        let a = input_at(GadgetKind::PhiPred, 6, 9, 3);
        let b = input_at(GadgetKind::PhiPred, 6, 9, 3);
        assert_eq!(a, b);
        let GadgetInput::Set(keys) = a else { panic!("set expected") };
        assert_eq!(keys.len(), 6);
        assert!(keys.windows(2).all(|w| w[0] < w[1]) && keys[5] <= 36 && keys[0] >= 1);
        assert_ne!(input_at(GadgetKind::LcpSelect, 12, 9, 0), input_at(GadgetKind::LcpSelect, 12, 9, 1));
    }

    #[test]
    fn worker_count_does_not_matter() {
        let mode = Mode::Trials { count: 24, seed: 5 };
        let one = verify(GadgetKind::IsaCount, 7, mode, 1).unwrap();
        let four = verify(GadgetKind::IsaCount, 7, mode, 4).unwrap();
        assert_eq!(one, four);
        assert!(one.passed());
        assert_eq!(one.instances, 24);
    }

    #[test]
    fn exhaustive_limits() {
        assert!(verify(GadgetKind::LcpSelect, 9, Mode::Exhaustive, 1).is_err());
        let rep = verify(GadgetKind::PlcpPred, 2, Mode::Exhaustive, 2).unwrap();
        assert_eq!(rep.instances, 6);
        assert!(rep.passed());
    }
}
