//! Code-set formation: the compatibility graph, maximum-set extraction, the
//! Johnson bound and independent set verification.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::clique::{maximal_cliques, maximum_cliques, Adjacency, Budget, CliqueList};
use crate::correlation::{cross_constraint, grid_overlap, set_constraints};
use crate::error::{Error, Result};
use crate::generator::Candidate;
use crate::matrix::MatrixCode;
use crate::params::CodeParams;

/// Johnson bound A on the size of an `L x N` code set of weight `w` whose
/// auto- and cross-correlation constraints are both at most `lambda`.
///
/// Evaluated innermost-first with exact integer floors:
/// `v = (LN - λ) div (w - λ)`, then `v = v (LN - k) div (w - k)` for
/// `k = λ-1 .. 1`, and finally `v L div w`. For `λ = 0` the chain is empty
/// and the result is `L div w`.
pub fn johnson_bound(rows: u32, columns: u32, weight: u32, lambda: u32) -> Result<u64> {
    let params = CodeParams::new(rows, columns, weight)?;
    if lambda >= weight {
        return Err(Error::Params(format!(
            "the bound needs lambda < w (got lambda={lambda}, w={weight})"
        )));
    }
    let ln = u128::from(params.length());
    let w = u128::from(weight);
    let mut v: u128 = 1;
    for k in (1..=u128::from(lambda)).rev() {
        v = v
            .checked_mul(ln - k)
            .ok_or(Error::Overflow("the Johnson bound"))?
            / (w - k);
    }
    let v = v * u128::from(rows) / w;
    u64::try_from(v).map_err(|_| Error::Overflow("the Johnson bound"))
}

/// Candidates (sorted by canonical form) joined wherever their pairwise
/// cross-correlation constraint is at most the threshold.
///
/// Vertex ids are positions in canonical order, so they do not depend on the
/// order in which codes were supplied.
#[derive(Debug, Clone)]
pub struct CompatibilityGraph {
    vertices: Vec<Candidate>,
    adjacency: Adjacency,
    max_lambda_c: u32,
}

impl CompatibilityGraph {
    pub fn vertices(&self) -> &[Candidate] {
        &self.vertices
    }

    pub fn code(&self, id: usize) -> &MatrixCode {
        &self.vertices[id].code
    }

    pub fn adjacency(&self) -> &Adjacency {
        &self.adjacency
    }

    pub fn max_lambda_c(&self) -> u32 {
        self.max_lambda_c
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Shared parameters of the vertices, if there are any.
    pub fn params(&self) -> Option<CodeParams> {
        self.vertices.first().map(|c| c.code.params())
    }
}

/// Builds the compatibility graph. Edge evaluation runs on the rayon pool.
pub fn build_graph(mut candidates: Vec<Candidate>, max_lambda_c: u32) -> Result<CompatibilityGraph> {
    candidates.sort_by(|a, b| a.code.cmp(&b.code));
    if candidates.windows(2).any(|w| w[0].code == w[1].code) {
        return Err(Error::DegeneratePair);
    }
    if let Some(first) = candidates.first() {
        let p = first.code.params();
        if candidates.iter().any(|c| c.code.params() != p) {
            return Err(Error::Params("all codes must share L, N and w".into()));
        }
    }
    let n = candidates.len();
    let edges: Vec<(usize, usize)> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            let candidates = &candidates;
            (i + 1..n).filter_map(move |j| {
                let lc = cross_constraint(&candidates[i].code, &candidates[j].code)
                    .expect("distinct codes on one grid");
                (lc <= max_lambda_c).then_some((i, j))
            })
        })
        .collect();
    Ok(CompatibilityGraph {
        adjacency: Adjacency::from_edges(n, edges),
        vertices: candidates,
        max_lambda_c,
    })
}

/// Every maximal clique of the graph within `budget`, as vertex id lists.
pub fn enumerate_maximal_cliques(graph: &CompatibilityGraph, budget: Budget) -> CliqueList {
    maximal_cliques(&graph.adjacency, budget)
}

/// A verified code set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSet {
    pub ids: Vec<usize>,
    pub size: usize,
    pub lambda_a: u32,
    pub lambda_c: u32,
}

/// Correlation limits imposed on a code set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Thresholds {
    pub lambda_a: u32,
    pub lambda_c: u32,
}

impl Thresholds {
    pub fn new(lambda_a: u32, lambda_c: u32) -> Self {
        Thresholds { lambda_a, lambda_c }
    }

    /// The single collision parameter both limits fit under.
    pub fn collision_parameter(&self) -> u32 {
        self.lambda_a.max(self.lambda_c)
    }
}

/// Outcome of [`maximum_sets`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetSearch {
    pub sets: Vec<CodeSet>,
    /// False when the budget ran out; the sizes are then only lower bounds.
    pub complete: bool,
    /// Johnson bound for `λ = max(λ_a, λ_c)`, absent when `λ >= w` or the
    /// graph is empty.
    pub bound: Option<u64>,
}

/// All code sets of maximum size, each re-checked against `limits`.
///
/// Sets are ordered lexicographically by member ids, which is the order of
/// their members' canonical forms.
pub fn maximum_sets(graph: &CompatibilityGraph, limits: Thresholds, budget: Budget) -> Result<SetSearch> {
    let bound = match graph.params() {
        Some(p) => johnson_bound(p.rows(), p.columns(), p.weight(), limits.collision_parameter()).ok(),
        None => None,
    };
    let found = maximum_cliques(&graph.adjacency, budget);
    let mut sets = Vec::with_capacity(found.cliques.len());
    for ids in found.cliques {
        let codes: Vec<MatrixCode> = ids.iter().map(|&i| graph.code(i).clone()).collect();
        let (lambda_a, lambda_c) = set_constraints(&codes)?;
        if lambda_a > limits.lambda_a || lambda_c > limits.lambda_c {
            return Err(Error::Params(format!(
                "set {ids:?} realizes ({lambda_a}, {lambda_c}) above the limits ({}, {})",
                limits.lambda_a, limits.lambda_c
            )));
        }
        sets.push(CodeSet {
            size: ids.len(),
            ids,
            lambda_a,
            lambda_c,
        });
    }
    Ok(SetSearch {
        sets,
        complete: found.complete,
        bound,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodeCheck {
    pub index: usize,
    pub lambda_a: u32,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairCheck {
    pub first: usize,
    pub second: usize,
    pub lambda_c: u32,
    pub pass: bool,
}

/// Per-code and per-pair results of [`verify_set`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub codes: Vec<CodeCheck>,
    pub pairs: Vec<PairCheck>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.codes.iter().all(|c| c.pass) && self.pairs.iter().all(|p| p.pass)
    }

    pub fn failures(&self) -> usize {
        self.codes.iter().filter(|c| !c.pass).count() + self.pairs.iter().filter(|p| !p.pass).count()
    }
}

/// Recomputes every auto and pairwise cross constraint from the dense grids
/// and checks them against `limits`.
///
/// Nothing cached on the codes is trusted; repeated codes simply fail their
/// pair check.
pub fn verify_set(codes: &[MatrixCode], limits: Thresholds) -> Result<VerifyReport> {
    if let Some(first) = codes.first() {
        if codes.iter().any(|c| !c.params().same_grid(&first.params())) {
            return Err(Error::Params("all codes must share L and N".into()));
        }
    }
    let mut report = VerifyReport {
        codes: Vec::with_capacity(codes.len()),
        pairs: Vec::new(),
    };
    for (index, x) in codes.iter().enumerate() {
        let mut lambda_a = 0;
        for tau in 1..x.columns() {
            lambda_a = lambda_a.max(grid_overlap(x, x, tau)?);
        }
        report.codes.push(CodeCheck {
            index,
            lambda_a,
            pass: lambda_a <= limits.lambda_a,
        });
    }
    for (first, x) in codes.iter().enumerate() {
        for (second, y) in codes.iter().enumerate().skip(first + 1) {
            let mut lambda_c = 0;
            for tau in 0..x.columns() {
                lambda_c = lambda_c.max(grid_overlap(x, y, tau)?);
            }
            report.pairs.push(PairCheck {
                first,
                second,
                lambda_c,
                pass: lambda_c <= limits.lambda_c,
            });
        }
    }
    Ok(report)
}

/// Serializable summary of a set search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetReport {
    pub params: ReportParams,
    pub bound: Option<u64>,
    pub sets: Vec<CodeSet>,
    pub complete: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportParams {
    #[serde(rename = "L")]
    pub rows: u32,
    #[serde(rename = "N")]
    pub columns: u32,
    pub w: u32,
    pub lambda_a: u32,
    pub lambda_c: u32,
}

impl SetReport {
    pub fn new(params: CodeParams, limits: Thresholds, search: &SetSearch) -> Self {
        SetReport {
            params: ReportParams {
                rows: params.rows(),
                columns: params.columns(),
                w: params.weight(),
                lambda_a: limits.lambda_a,
                lambda_c: limits.lambda_c,
            },
            bound: search.bound,
            sets: search.sets.clone(),
            complete: search.complete,
        }
    }
}
