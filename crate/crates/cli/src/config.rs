//! Run configuration: one seed determines every randomized suite, so
//! identical configs reproduce identical reports and instance files.

#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub seed: u64,
    pub trials: usize,
    pub max_n: usize,
    pub max_d: usize,
    pub expansion_cap: u64,
    pub parallel: bool,
}

impl SuiteConfig {
    pub fn new(seed: u64, trials: usize) -> SuiteConfig {
        SuiteConfig {
            seed,
            trials,
            max_n: 4,
            max_d: 3,
            expansion_cap: 10_000_000,
            parallel: true,
        }
    }

    /// Seed for one trial: the run seed plus the trial index.
    pub fn trial_seed(&self, trial: usize) -> u64 {
        self.seed.wrapping_add(trial as u64)
    }
}
