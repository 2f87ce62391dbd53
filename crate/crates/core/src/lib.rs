//! Partition-level computation of duality for nilpotent orbits marked with
//! conjugacy classes in the canonical quotient of their component groups:
//! the classical-type label calculus, the extended duality map and its
//! order-theoretic characterization, poset enumeration with Hasse diagrams,
//! embedded exceptional-group data, and an exhaustive verification harness.

pub mod duality;
pub mod error;
pub mod exceptional;
pub mod marked;
pub mod partition;
pub mod poset;
pub mod verify;

pub use duality::{
    canonical_inverse, d_bv, d_ls, d_s, dbar, dbar_trace, is_special_partition, nu_hat,
    partial_specialize, pi_marking, specialize, DbarTrace,
};
pub use error::{Error, Result};
pub use exceptional::{load_group, ExceptionalDataset, ExceptionalGroup};
pub use marked::{markable_parts, parse_marked, reduce_parts, BlockKind, IntervalData, MarkedPartition};
pub use partition::{
    class_partitions_of, partitions_of, superiority, GroupType, Partition, Superiority,
};
pub use poset::{
    dbar_via_characterization, enumerate_labels, hasse, pair_leq, special_set, LabeledPoset,
};
pub use verify::{
    check_axioms, check_blocks, check_collapse_oracle, check_cupvee, check_reflection,
    check_special_alt, check_theorem_po, Failure, SuiteReport,
};
