//! Structure-verification pipelines for the derived codes.

mod cases;
mod frame;
mod lattice;
mod pipeline;
mod report;

pub use cases::{
    classify_cases, generation_check, parity_check, CaseError, CaseLabel, Classification,
    GenerationSummary,
};
pub use frame::{find_d24_frame, normalize_frame, D24Frame, FrameError, FrameSearch};
pub use lattice::{
    assemble_lattice, index_in_leech, leech_lattice_hnf, minimal_ip_closure_check,
    odd_product_witness, AssembledLattice, LatticeError,
};
pub use pipeline::{
    chain_anchors_members, run_uniqueness, run_uniqueness_on, run_uniqueness_with_leech,
    PipelineKind, PipelineOptions,
};
pub use report::{CertificateReport, Check, ReportMeta};
