//! Codeword enumeration, halting-probability bounds and counting checks.

pub mod counting;
pub mod enumerate;
pub mod omega;
pub mod records;

pub use counting::{catalan, catalan_asymptotic, count_trees};
pub use enumerate::{
    enumerate_halting, enumerate_length, enumerate_with, ChaitinMachine, Enumeration, HaltingRecord,
};
pub use omega::{
    complexity_upper_bound, kraft_prefix_check, kraft_prefix_check_records, omega_lower_bound,
    omega_lower_bound_with, shortest_in, Dyadic, OmegaBound, OutputTarget,
};
pub use records::{omega_resumable, read_records, RecordError, RecordFile};
