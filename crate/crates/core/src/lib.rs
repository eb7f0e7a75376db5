//! Elliptic Sombor and Euler Sombor graph indices, join and corona
//! products, parameter-based bounds on the indices of those products,
//! and a brute-force harness that verifies the bounds over all small
//! graph pairs.
//!
//! Everything operates on immutable [`Graph`] values; graphs move in and
//! out of the toolkit as graph6 text.

pub mod bounds;
pub mod graph;
pub mod graph6;
pub mod indices;
pub mod numfmt;
pub mod products;
pub mod verify;

pub use bounds::{
    bounds_for, eso_corona_bounds, eso_join_bounds, eu_corona_bounds, eu_join_bounds,
    regular_exact, BoundKind, BoundPair, BoundsError, FormulaVariant,
};
pub use graph::{Graph, GraphError, GraphParams};
pub use graph6::{parse_graph6, write_graph6, Graph6Error};
pub use indices::{elliptic_sombor, euler_sombor, report, sombor, IndexReport};
pub use numfmt::format_significant;
pub use products::{corona, join, ProductKind, ProductLayout};
pub use verify::{
    enumerate_graphs, random_graph, run_sweep, verify_pair, write_records_csv, write_records_jsonl,
    SweepConfig, SweepMode, SweepOutcome, SweepSummary, VerificationRecord, VerifyError,
};
