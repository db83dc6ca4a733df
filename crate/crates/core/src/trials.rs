//! Independent trial execution.

use rayon::prelude::*;

use crate::hv::RandomStream;

/// Runs `trials` independent work units on a pool of `jobs` threads.
///
/// Trial `i` receives the stream `root.fork("trial/<i>")`, and results are
/// returned in trial order, so output never depends on `jobs`.
pub fn run_trials<T, F>(root: &RandomStream, trials: usize, jobs: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize, &mut RandomStream) -> T + Sync,
{
    let work = |i: usize| {
        let mut stream = root.fork(format_args!("trial/{i}"));
        f(i, &mut stream)
    };
    if jobs <= 1 || trials <= 1 {
        return (0..trials).map(work).collect();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(|| (0..trials).into_par_iter().map(work).collect()),
        Err(_) => (0..trials).map(work).collect(),
    }
}

/// Reads `NABUNDLE_JOBS`, defaulting to 1.
pub fn jobs_from_env() -> usize {
    std::env::var("NABUNDLE_JOBS")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&j| j >= 1)
        .unwrap_or(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::RngCore;

    #[test]
    fn results_independent_of_width() {
        let root = RandomStream::new(42, "t");
        let draw = |_: usize, s: &mut RandomStream| s.next_u64();
        let serial = run_trials(&root, 64, 1, draw);
        let parallel = run_trials(&root, 64, 4, draw);
        assert_eq!(serial, parallel);
        assert_eq!(serial.len(), 64);
    }
}
