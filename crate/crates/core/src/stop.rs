//! Cooperative cancellation for long-running searches.
//!
//! Solvers poll [`Stop::check`] inside their enumeration loops; timeouts are
//! a deadline here rather than forced thread termination.

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use crate::error::SolveError;

#[derive(Clone, Debug, Default)]
pub struct Stop {
    flag: Option<Arc<AtomicBool>>,
    deadline: Option<Instant>,
}

impl Stop {
    /// Never stops.
    pub fn none() -> Self {
        Stop::default()
    }

    pub fn after(timeout: Duration) -> Self {
        Stop {
            flag: None,
            deadline: Some(Instant::now() + timeout),
        }
    }

    pub fn with_flag(flag: Arc<AtomicBool>) -> Self {
        Stop {
            flag: Some(flag),
            deadline: None,
        }
    }

    pub fn is_set(&self) -> bool {
        if let Some(f) = &self.flag {
            if f.load(Ordering::Relaxed) {
                return true;
            }
        }
        if let Some(d) = self.deadline {
            if Instant::now() >= d {
                return true;
            }
        }
        false
    }

    pub fn check(&self) -> Result<(), SolveError> {
        if self.is_set() {
            Err(SolveError::Interrupted)
        } else {
            Ok(())
        }
    }
}

/// Options shared by the search-based solvers.
#[derive(Clone, Debug, Default)]
pub struct SearchOptions {
    pub stop: Stop,
    /// Worker count for the embarrassingly parallel layers; 0 or 1 means
    /// sequential. Results are deterministic regardless of the value.
    pub jobs: usize,
}

impl SearchOptions {
    pub fn sequential() -> Self {
        SearchOptions::default()
    }
}
