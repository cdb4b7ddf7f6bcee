//! Noncommutative polynomials over ℚ(i), presented algebras, bounded ideal
//! membership with replayable certificates, and the symbolic verification suites.

mod algmatrix;
mod glued;
mod hopf;
mod membership;
mod presentation;
mod resolution;
mod tensor;
mod verify;
mod word;
mod yd;

pub use algmatrix::{entry_label, AlgMatrix};
pub use glued::{run_glued_embedding, verify_glued_embedding, GluedVariant};
pub use hopf::{hopf_maps, run_hopf, run_hopf_with, verify_hopf, HopfMaps};
pub use membership::{
    ideal_member, CertTerm, IdealOracle, Membership, MembershipCertificate, SpanEngine, Status,
};
pub use presentation::{
    presentation_a, presentation_b, presentation_h, tensor_square, verify_grading, Character, Presentation,
    PresentationKind,
};
pub use resolution::{
    resolution_matrices, run_resolution_complex, run_resolution_with, verify_resolution_complex, Resolution,
};
pub use tensor::{normal_order, tensor};
pub use verify::{CheckItem, SuiteStatus, VerificationReport};
pub use word::{Alphabet, NcPoly, Word};
pub use yd::{run_yd_colinearity, verify_yd_colinearity, YdVariant};
