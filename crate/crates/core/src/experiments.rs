//! Seeded G(n, p) sampling and the md = 1 certificate experiment.
//!
//! Generator: ChaCha8 seeded with `seed_from_u64(seed)`. Stream `s` of a
//! seed is selected with `set_stream(s)`; [`sample_gnp`] uses stream 0 and
//! trial `t` of [`md1_fraction`] uses stream `t`. Each vertex pair `(u, v)`
//! with `u < v`, taken in lexicographic order, consumes one `f64` draw in
//! `[0, 1)` and becomes an edge when the draw is below `p`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::{has_three_common_neighbors, md1_certificate};

/// The generator for stream `stream` of `seed`.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn sample_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_probability(p)?;
    Ok(gnp_with(n, p, &mut stream_rng(seed, 0)))
}

pub(crate) fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::precondition(format!(
            "edge probability {p} is outside [0, 1]"
        )))
    }
}

/// Caller guarantees `0 <= p <= 1`.
pub(crate) fn gnp_with<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_simple(n, edges)
}

/// Outcome of one sampled graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TrialOutcome {
    pub trial: usize,
    pub edges: usize,
    pub connected: bool,
    pub property: bool,
    pub certified: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub n: usize,
    pub p: f64,
    pub trials: usize,
    pub seed: u64,
    pub count_connected: usize,
    /// Connected samples where every vertex pair has at least three common neighbors.
    pub count_property: usize,
    /// Connected samples with a closure certificate.
    pub count_certified: usize,
    pub fraction_connected: f64,
    pub fraction_property: f64,
    pub fraction_certified: f64,
    #[serde(skip)]
    pub outcomes: Vec<TrialOutcome>,
}

impl ExperimentReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// One header line, then one row per trial.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("trial,edges,connected,property,certified\n");
        for o in &self.outcomes {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                o.trial, o.edges, o.connected, o.property, o.certified
            ));
        }
        out
    }
}

/// Runs `trials` independent samples of G(n, p) through connectivity, the
/// three-common-neighbors property and the closure certificate.
///
/// A sample with the property but without a certificate is reported as
/// [`Error::ImplicationViolated`].
pub fn md1_fraction(n: usize, p: f64, trials: usize, seed: u64) -> Result<ExperimentReport> {
    if trials == 0 {
        return Err(Error::precondition("need at least one trial"));
    }
    check_probability(p)?;
    let outcomes: Vec<TrialOutcome> = (0..trials)
        .into_par_iter()
        .map(|trial| run_trial(n, p, seed, trial))
        .collect::<Result<_>>()?;

    let count = |f: fn(&TrialOutcome) -> bool| outcomes.iter().filter(|o| f(o)).count();
    let count_connected = count(|o| o.connected);
    let count_property = count(|o| o.property);
    let count_certified = count(|o| o.certified);
    let frac = |c: usize| c as f64 / trials as f64;
    Ok(ExperimentReport {
        n,
        p,
        trials,
        seed,
        count_connected,
        count_property,
        count_certified,
        fraction_connected: frac(count_connected),
        fraction_property: frac(count_property),
        fraction_certified: frac(count_certified),
        outcomes,
    })
}

fn run_trial(n: usize, p: f64, seed: u64, trial: usize) -> Result<TrialOutcome> {
    let g = gnp_with(n, p, &mut stream_rng(seed, trial as u64));
    let mut out = TrialOutcome {
        trial,
        edges: g.m(),
        connected: g.is_connected() && g.m() > 0,
        property: false,
        certified: false,
    };
    if !out.connected {
        return Ok(out);
    }
    out.property = has_three_common_neighbors(&g)?;
    out.certified = md1_certificate(&g)?.is_some();
    if out.property && !out.certified {
        return Err(Error::ImplicationViolated { trial });
    }
    Ok(out)
}
