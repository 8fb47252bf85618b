//! Discriminants, dual varieties, jumping sets and Milnor data of linear
//! systems.

mod curves;
mod discriminant;
mod dual;
mod incidence;
mod jumping;
mod singular;
mod system;

pub use curves::{
    binary_roots, binary_squarefree, cover_branch, rnc_projection_pencil, wronskian_branch, BranchLocus, BranchValue,
    RamificationPoint, WronskianReport,
};
pub use discriminant::{discriminant, discriminant_basic, DiscriminantReport, Residual};
pub use dual::{
    bidual_check, conormal_ideal, default_dual_names, dual_variety, flex_points, flexes_with_tangent_through, hessian,
    tangent_line, BidualReport, DualVariety,
};
pub use incidence::{certify_irreducible, discriminant_locus, incidence_ideal, Locus};
pub use jumping::{
    hyperplane_components, jumping_sets, strata, HyperplaneComponents, JumpingSet, JumpingSetReport,
};
pub use singular::{
    milnor, milnor_at, pencil_verify, singular_points, total_milnor, MilnorDatum, PencilReport, SingularLocus,
    SingularMember, MILNOR_CUTOFF,
};
pub use system::{LinearSystem, Source};
