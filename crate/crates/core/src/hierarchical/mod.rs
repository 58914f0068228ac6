//! Strong hierarchical graphs: recognition and polynomial counting.

mod decompose;
mod reduce;
mod tables;

pub use decompose::{decompose, Decomposition};
pub use reduce::{reduce_graph_r, reduce_graph_r2, reduction_is_exact, sat_oblivious_by_reduction};
pub use tables::{
    expansion_count, expansion_counts, expansion_table, expansion_trace_counts, sat_nonoblivious_hierarchical,
    sat_oblivious_hierarchical, satisfaction_tables, SatTables,
};
