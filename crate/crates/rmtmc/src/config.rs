//! Sampling configuration and the deterministic parallel driver.

use crate::RmtError;

#[derive(Clone, Debug)]
pub struct SampleConfig {
    /// Number of independent samples.
    pub samples: usize,
    /// Master seed; each sample derives its own generator from it.
    pub seed: u64,
    /// Worker threads; zero uses the process-wide default pool.
    pub threads: usize,
    /// Consecutive samples per batch for the batch-means error bars.
    pub batch_size: usize,
}

impl SampleConfig {
    pub fn new(samples: usize, seed: u64) -> Self {
        SampleConfig {
            samples,
            seed,
            threads: 0,
            batch_size: (samples / 32).max(1),
        }
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads;
        self
    }

    pub fn with_batch_size(mut self, batch_size: usize) -> Self {
        self.batch_size = batch_size;
        self
    }

    /// Complete batches available for error bars; a trailing short batch
    /// is ignored by the spread (estimates still use every sample).
    pub fn batches(&self) -> usize {
        self.samples / self.batch_size.max(1)
    }

    pub fn validate(&self) -> Result<(), RmtError> {
        if self.samples == 0 {
            return Err(RmtError::BadConfig("need at least one sample".into()));
        }
        if self.batch_size == 0 {
            return Err(RmtError::BadConfig("batch size must be positive".into()));
        }
        if self.batches() < 2 {
            return Err(RmtError::BadConfig(
                "error bars need at least two complete batches".into(),
            ));
        }
        Ok(())
    }

    /// Evaluates `f` once per sample index, in parallel, and returns the
    /// results in index order. The per-index values are pure functions of
    /// (seed, index), so the thread budget cannot change the output.
    pub fn run<T: Send>(&self, f: impl Fn(u64) -> T + Sync) -> Vec<T> {
        use rayon::prelude::*;
        let work = || (0..self.samples as u64).into_par_iter().map(&f).collect();
        if self.threads == 0 {
            work()
        } else {
            rayon::ThreadPoolBuilder::new()
                .num_threads(self.threads)
                .build()
                .expect("thread pool construction")
                .install(work)
        }
    }
}
