//! Auslander-Reiten theory: translates, almost split sequences, knitting.

mod knit;
mod separated;
mod sequence;
mod translate;

pub use knit::{
    knit_ar_quiver, ArArrow, ArQuiver, ArVertex, StandardNames, TauPair, DEFAULT_KNIT_CAP,
};
pub use separated::{separated_quiver_repfinite, SeparatedComponent, SeparatedQuiverVerdict};
pub use sequence::{almost_split_sequence, AlmostSplitSequence};
pub use translate::{
    ar_formula_check, projectively_factoring, stable_hom_dim, tau, tau_inv, transpose,
    ArFormulaCheck,
};
