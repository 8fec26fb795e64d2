//! Execution counters reported by the enumeration engines, the measured
//! counterparts of the quantities the runtime bounds are stated in.

use alloc::vec::Vec;
use core::time::Duration;

/// Counters collected during one engine invocation (or one whole streaming
/// session for the incremental engines).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EngineStats {
    /// Pool engine: vertex rounds. Stack engine: main-loop iterations,
    /// summed over every per-vertex call of a session.
    pub outer_iterations: u64,
    /// Calls into a restricted solver.
    pub restricted_calls: u64,
    /// Peak number of in-progress candidates (pool size, respectively live
    /// stack entries).
    pub max_candidate_pool: usize,
    /// Solutions handed out; equals the size of the returned solution set.
    pub emissions: u64,
    /// For streaming engines: main-loop iterations between consecutive
    /// emissions, including the stretch before the first one. Emissions
    /// are deduplicated session-wide, so gaps span per-vertex calls.
    pub emission_gaps: Vec<u64>,
    /// For the stack engine: main-loop iterations between consecutive
    /// finished candidates within one per-vertex call, whether or not the
    /// candidate was new to the session.
    pub push_gaps: Vec<u64>,
    /// Wall-clock time of the run; zero without the `std` feature.
    pub elapsed: Duration,
}

impl EngineStats {
    /// Largest inter-emission gap, zero when nothing was emitted.
    pub fn max_emission_gap(&self) -> u64 {
        self.emission_gaps.iter().copied().max().unwrap_or(0)
    }

    /// Largest within-call gap between finished candidates.
    pub fn max_push_gap(&self) -> u64 {
        self.push_gaps.iter().copied().max().unwrap_or(0)
    }

    pub(crate) fn note_pool_size(&mut self, size: usize) {
        if size > self.max_candidate_pool {
            self.max_candidate_pool = size;
        }
    }
}

/// Wall-clock stopwatch; a no-op without the `std` feature.
pub(crate) struct Timer {
    #[cfg(feature = "std")]
    start: std::time::Instant,
}

impl Timer {
    pub(crate) fn start() -> Self {
        Timer {
            #[cfg(feature = "std")]
            start: std::time::Instant::now(),
        }
    }

    pub(crate) fn elapsed(&self) -> Duration {
        #[cfg(feature = "std")]
        {
            self.start.elapsed()
        }
        #[cfg(not(feature = "std"))]
        {
            Duration::ZERO
        }
    }
}
