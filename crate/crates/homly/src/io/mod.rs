//! File formats and catalog: the `.alg` definition DSL (parser and emitter),
//! the built-in algebras, and JSON verdict reports.

pub mod builtins;
pub mod emit;
pub mod parse;
pub mod report;

pub use builtins::{builtin, UnknownBuiltin, BUILTIN_NAMES};
pub use emit::{emit_algebra_file, emit_hom_ly};
pub use parse::{parse_algebra_file, parse_gauss_constant, ParseError, MAX_DIM};
pub use report::{emit_report, CheckEntry, CounterexampleEntry, ReportDocument};
