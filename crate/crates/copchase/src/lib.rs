//! Cop-versus-drunk pursuit on finite connected graphs.
//!
//! A cop and a drunk occupy vertices of a graph. Each move the cop steps to
//! a neighbor (or idles, when allowed), then the drunk steps to a uniformly
//! random neighbor; the game ends when they coincide, mid-move included.
//! This crate bundles:
//!
//! - graph families the chase is interesting on ([`generators`]),
//! - a seeded, reproducible simulation engine ([`engine`]),
//! - exact expected-capture-time solvers and optimal-play values
//!   ([`analysis::exact`]),
//! - checkable inequalities the capture-time story rests on
//!   ([`analysis::lemmas`]).
//!
//! Start with the runnable examples; each one exercises a capability end to
//! end. [`cli`] exposes the same surface as a small command-line tool.
//!
//! ```
//! use copchase::{exact_expected_capture, monte_carlo, FamilySpec, GameConfig, PolicySpec};
//!
//! let g = FamilySpec::parse("cycle:12")?.build()?;
//! let spec = PolicySpec::parse("greedy:lex")?;
//! let config = GameConfig::new(0, 6);
//!
//! let report = monte_carlo(&g, spec, &config, 20_000, 7, 1)?;
//! let exact = exact_expected_capture(&g, spec.as_memoryless().unwrap(), 1e-10, false)?;
//! assert!((report.mean - exact.value(0, 6)).abs() < 4.0 * report.stderr);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod analysis;
pub mod cli;
pub mod engine;
pub mod generators;
pub mod graph;
pub mod io;

pub use analysis::{exact_expected_capture, optimal_capture_values, MemorylessPolicy, ValueTable};
pub use engine::{monte_carlo, GameConfig, PolicySpec, SimulationReport};
pub use generators::FamilySpec;
pub use graph::{GeodesicTie, Graph, GraphError};
