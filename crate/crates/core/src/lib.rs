//! Construction and analysis of two-dimensional unipolar (optical)
//! orthogonal codes for wavelength-hopping time-spreading optical CDMA.
//!
//! The construction starts from one-dimensional cyclic constant-weight codes
//! of length `L * N`, folds each into an `L x N` matrix, adds the row-shifted
//! variants, keeps those whose auto-correlation constraint is small enough,
//! and finally searches the compatibility graph of pairwise cross-correlation
//! for the largest code sets.
//!
//! ```
//! use ooc::{CodeParams, PipelineConfig, Thresholds, run_pipeline};
//!
//! let params = CodeParams::new(4, 3, 3).unwrap();
//! let run = run_pipeline(&PipelineConfig::new(params, Thresholds::new(2, 2))).unwrap();
//! assert_eq!(run.search.bound, Some(73));
//! assert!(run.search.sets.iter().all(|s| s.size as u64 <= 73));
//! ```

pub mod catalog;
pub mod clique;
pub mod code1d;
pub mod correlation;
pub mod error;
pub mod generator;
pub mod matrix;
pub mod params;
pub mod pipeline;
pub mod setsearch;
pub mod text;

pub use clique::Budget;
pub use code1d::OneDimCode;
pub use correlation::{auto_profile, cross_profile, set_constraints, CorrelationProfile};
pub use error::{Error, Result};
pub use generator::{enumerate_1d, filter_by_auto, lift_and_expand, Candidate};
pub use matrix::{CanonicalForm, Cell, DoprEntry, MatrixCode};
pub use params::CodeParams;
pub use pipeline::{run_pipeline, PipelineConfig, PipelineRun};
pub use setsearch::{build_graph, johnson_bound, maximum_sets, verify_set, CodeSet, SetReport, Thresholds};
pub use text::{parse_code, Dims};
