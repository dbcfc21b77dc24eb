//! Projective resolutions, Ext, homological dimensions and complexity.

mod complexity;
mod dims;
mod ext;
mod resolution;
mod tracker;

pub use complexity::{
    complexity_report, complexity_report_tracked, radsq_complexity_exact, verdicts_agree,
    ComplexityReport, ComplexityVerdict, RadSquareComplexity,
};
pub use dims::{
    dominant_dimension, global_dimension, is_higher_auslander, proj_dim, proj_dim_tracked,
    DominantDimension, HigherAuslanderReport, HomDimension, DEFAULT_RESOLUTION_CAP,
};
pub use ext::{ext1, ext_dim, ext_dim_explicit, ext_dim_tracked, Ext1};
pub use resolution::{
    min_inj_coresolution, min_proj_resolution, InjectiveCoresolution, ProjectiveResolution,
    ResolutionTerm,
};
pub use tracker::{Counts, SyzygyTracker};
