//! Timing harness for construction cost as a function of `q`.
//!
//! The family fixes `m = 8` and varies `n = q - 7`, so the smallest
//! realizable size is `q = 14`. Only construction is timed; warm-up runs
//! are discarded. The log-log slope of median time against `q` estimates
//! the growth exponent.

use std::fmt::Write as _;
use std::hint::black_box;
use std::time::Instant;

use thiserror::Error;

use crate::construct::{
    algorithmic_labeling, closed_form_labeling, min_path_len, validate_params, ConstructionParams,
};

pub const BENCH_CYCLE_LEN: usize = 8;
pub const DEFAULT_Q_VALUES: [usize; 4] = [1_000, 10_000, 100_000, 1_000_000];
pub const DEFAULT_REPETITIONS: usize = 7;
pub const WARMUP_REPETITIONS: usize = 2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BenchError {
    #[error("repetitions must be at least 1")]
    NoRepetitions,
    #[error("no q values given")]
    NoSizes,
    #[error("q = {q} is not realizable with m = {m}: need n >= {min_n}, so q >= {min_q}")]
    Unrealizable {
        q: usize,
        m: usize,
        min_n: usize,
        min_q: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Method {
    ClosedForm,
    Algorithmic,
}

impl Method {
    pub const ALL: [Method; 2] = [Method::ClosedForm, Method::Algorithmic];

    pub fn name(self) -> &'static str {
        match self {
            Method::ClosedForm => "closed",
            Method::Algorithmic => "algorithmic",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BenchSample {
    pub q: usize,
    pub method: Method,
    pub nanos: u64,
}

/// Least-squares line through `(ln q, ln t)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogLogFit {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
}

#[derive(Debug, Clone)]
pub struct BenchReport {
    pub samples: Vec<BenchSample>,
    pub fits: Vec<(Method, LogLogFit)>,
}

pub fn bench_params(q: usize) -> Result<ConstructionParams, BenchError> {
    let m = BENCH_CYCLE_LEN;
    let min_n = min_path_len(m);
    let unrealizable = BenchError::Unrealizable {
        q,
        m,
        min_n,
        min_q: m + min_n - 1,
    };
    let n = (q + 1).checked_sub(m).ok_or(unrealizable.clone())?;
    validate_params(m, n).map_err(|_| unrealizable)
}

pub fn run_bench(q_values: &[usize], repetitions: usize) -> Result<BenchReport, BenchError> {
    if repetitions == 0 {
        return Err(BenchError::NoRepetitions);
    }
    if q_values.is_empty() {
        return Err(BenchError::NoSizes);
    }
    let params: Vec<ConstructionParams> = q_values
        .iter()
        .map(|&q| bench_params(q))
        .collect::<Result<_, _>>()?;

    let mut samples = Vec::with_capacity(q_values.len() * 2 * repetitions);
    for p in &params {
        for method in Method::ALL {
            for rep in 0..WARMUP_REPETITIONS + repetitions {
                let nanos = time_once(p, method);
                if rep >= WARMUP_REPETITIONS {
                    samples.push(BenchSample {
                        q: p.q(),
                        method,
                        nanos,
                    });
                }
            }
        }
    }
    let fits = Method::ALL
        .iter()
        .map(|&m| (m, fit_method(&samples, m)))
        .collect();
    Ok(BenchReport { samples, fits })
}

fn time_once(params: &ConstructionParams, method: Method) -> u64 {
    let start = Instant::now();
    let labeling = match method {
        Method::ClosedForm => closed_form_labeling(black_box(params)),
        Method::Algorithmic => algorithmic_labeling(black_box(params)),
    };
    let elapsed = start.elapsed();
    black_box(labeling);
    (elapsed.as_nanos() as u64).max(1)
}

/// Fit over per-`q` medians of one method.
fn fit_method(samples: &[BenchSample], method: Method) -> LogLogFit {
    let mut by_q: std::collections::BTreeMap<usize, Vec<u64>> = Default::default();
    for s in samples.iter().filter(|s| s.method == method) {
        by_q.entry(s.q).or_default().push(s.nanos);
    }
    let points: Vec<(f64, f64)> = by_q
        .into_iter()
        .map(|(q, mut t)| {
            t.sort_unstable();
            (q as f64, median(&t))
        })
        .collect();
    fit_loglog(&points)
}

fn median(sorted: &[u64]) -> f64 {
    let mid = sorted.len() / 2;
    if sorted.len() % 2 == 1 {
        sorted[mid] as f64
    } else {
        (sorted[mid - 1] as f64 + sorted[mid] as f64) / 2.0
    }
}

/// Ordinary least squares on `(ln x, ln y)`. Needs two distinct `x`.
pub fn fit_loglog(points: &[(f64, f64)]) -> LogLogFit {
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let count = logs.len() as f64;
    let mean_x = logs.iter().map(|p| p.0).sum::<f64>() / count;
    let mean_y = logs.iter().map(|p| p.1).sum::<f64>() / count;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    let sxy: f64 = logs.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    let syy: f64 = logs.iter().map(|p| (p.1 - mean_y).powi(2)).sum();
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let r_squared = if syy == 0.0 {
        1.0
    } else {
        sxy * sxy / (sxx * syy)
    };
    LogLogFit {
        slope,
        intercept,
        r_squared,
    }
}

impl BenchReport {
    pub fn fit(&self, method: Method) -> LogLogFit {
        self.fits
            .iter()
            .find(|f| f.0 == method)
            .expect("both methods fitted")
            .1
    }

    /// `q,method,nanoseconds` rows.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("q,method,nanoseconds\n");
        for s in &self.samples {
            writeln!(out, "{},{},{}", s.q, s.method.name(), s.nanos).unwrap();
        }
        out
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        for (method, fit) in &self.fits {
            writeln!(
                out,
                "# {}: log-log slope {:.4}, r^2 {:.4}",
                method.name(),
                fit.slope,
                fit.r_squared
            )
            .unwrap();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fit_recovers_power_law() {
        let points: Vec<(f64, f64)> = [10.0, 100.0, 1000.0]
            .iter()
            .map(|&x: &f64| (x, 3.0 * x.powf(1.5)))
            .collect();
        let fit = fit_loglog(&points);
        assert!((fit.slope - 1.5).abs() < 1e-12);
        assert!((fit.intercept - 3f64.ln()).abs() < 1e-9);
        assert!((fit.r_squared - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(
            run_bench(&[1000], 0).unwrap_err(),
            BenchError::NoRepetitions
        );
        assert_eq!(run_bench(&[], 3).unwrap_err(), BenchError::NoSizes);
        let err = run_bench(&[5], 1).unwrap_err();
        assert_eq!(
            err,
            BenchError::Unrealizable {
                q: 5,
                m: 8,
                min_n: 7,
                min_q: 14
            }
        );
        assert!(err.to_string().contains("q >= 14"));
        assert!(bench_params(13).is_err());
        assert_eq!(bench_params(14).unwrap().n(), 7);
    }

    #[test]
    fn small_run_shape() {
        let report = run_bench(&[20, 200, 2000], 2).unwrap();
        assert_eq!(report.samples.len(), 3 * 2 * 2);
        assert!(report.samples.iter().all(|s| s.nanos > 0));
        let csv = report.to_csv();
        assert!(csv.starts_with("q,method,nanoseconds\n20,closed,"));
        assert_eq!(report.summary().lines().count(), 2);
    }
}
