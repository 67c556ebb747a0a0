//! Certificate search parallelized over rational primes.
//!
//! Each prime is an independent task; [`SearchOutcome::merge`] sorts the
//! results into canonical order, so the outcome does not depend on the number
//! of threads or on scheduling.

use distbound_core::arith::primes_up_to;
use distbound_core::bounds::{search_prime, SearchConfig, SearchOutcome};
use distbound_core::geometry::DistanceSet;
use rayon::prelude::*;

/// Same result as `distbound_core::certify_search`, computed on `jobs`
/// threads (`0` uses the global pool).
pub fn parallel_search(distances: &DistanceSet, d: usize, cfg: &SearchConfig, jobs: usize) -> SearchOutcome {
    let primes = primes_up_to(cfg.prime_limit);
    let run = || {
        primes
            .par_iter()
            .map(|&p| search_prime(distances, d, p, cfg.seed))
            .collect::<Vec<_>>()
    };
    let parts = if jobs == 0 {
        run()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool")
            .install(run)
    };
    SearchOutcome::merge(parts)
}
