//! GR measures, GR submodules, the realized measure order and its
//! take-off / central / landing structure.

mod engine;
mod iso;
mod ladder;
mod partition;
mod tree;
mod verify;

pub use engine::{
    enumerate_indecomposables, enumerate_with_lambda, gr_measure, gr_submodules, is_gr_inclusion, EngineConfig,
    GrEngine, GrQuotient, GrResult, Strategy,
};
pub use iso::{Descriptor, IsoClass};
pub use ladder::{ladder_quasi_simples, mu_ij_table, LadderEntry, LadderRow, MuTable, PredecessorLink};
pub use partition::{partition_report, regular_ceiling, PartLabel, PartitionReport, PartitionRow, RegularCeiling};
pub use tree::{reach, Certification, MeasureIndex, NoPredecessor, RealizedMeasure, SuccessorAnswer};
pub use verify::{verify_property, PropertyReport, Verdict, VerifyBounds, PROPERTIES};
