//! End-to-end construction: enumerate, lift and expand, filter on
//! auto-correlation, build the compatibility graph and extract maximum sets.

use crate::clique::Budget;
use crate::error::{Error, Result};
use crate::generator::{enumerate_1d, filter_by_auto, lift_and_expand};
use crate::matrix::MatrixCode;
use crate::params::CodeParams;
use crate::setsearch::{build_graph, maximum_sets, CompatibilityGraph, SetReport, SetSearch, Thresholds};

#[derive(Debug, Clone)]
pub struct PipelineConfig {
    pub params: CodeParams,
    pub limits: Thresholds,
    pub budget: Budget,
    /// Use these codes as the candidate pool instead of generating one.
    pub pool: Option<Vec<MatrixCode>>,
}

impl PipelineConfig {
    pub fn new(params: CodeParams, limits: Thresholds) -> Self {
        PipelineConfig {
            params,
            limits,
            budget: Budget::unlimited(),
            pool: None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct PipelineRun {
    pub params: CodeParams,
    pub limits: Thresholds,
    /// Candidates before auto-correlation filtering.
    pub generated: usize,
    pub graph: CompatibilityGraph,
    pub search: SetSearch,
}

impl PipelineRun {
    pub fn report(&self) -> SetReport {
        SetReport::new(self.params, self.limits, &self.search)
    }

    /// Member codes of set `index`.
    pub fn set_codes(&self, index: usize) -> Vec<MatrixCode> {
        self.search.sets[index]
            .ids
            .iter()
            .map(|&id| self.graph.code(id).clone())
            .collect()
    }
}

pub fn run_pipeline(config: &PipelineConfig) -> Result<PipelineRun> {
    let p = config.params;
    let pool = match &config.pool {
        Some(pool) => {
            if let Some(bad) = pool.iter().find(|c| c.params() != p) {
                return Err(Error::Params(format!(
                    "pool code `{bad}` is not a {}x{} weight-{} code",
                    p.rows(),
                    p.columns(),
                    p.weight()
                )));
            }
            pool.clone()
        }
        None => {
            let codes: Vec<_> = enumerate_1d(p.length(), p.weight())?.collect();
            lift_and_expand(&codes, p.rows(), p.columns())?
        }
    };
    let generated = pool.len();
    let candidates = filter_by_auto(pool, config.limits.lambda_a);
    let graph = build_graph(candidates, config.limits.lambda_c)?;
    let search = maximum_sets(&graph, config.limits, config.budget)?;
    Ok(PipelineRun {
        params: p,
        limits: config.limits,
        generated,
        graph,
        search,
    })
}
