use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use super::tracker::{dominated, SyzygyTracker};
use crate::algebra::BoundQuiverAlgebra;
use crate::error::Result;
use crate::rep::{is_projective, Representation};

/// Default number of syzygy steps examined before giving up.
pub const DEFAULT_RESOLUTION_CAP: usize = 40;

/// Projective (or global) dimension with a certificate when infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HomDimension {
    Finite {
        value: usize,
    },
    /// `Ω^a` is nonzero and isomorphic to a summand of `Ω^b` (`a < b`), so
    /// the syzygies never vanish.
    InfiniteCertified {
        a: usize,
        b: usize,
    },
    AtLeast {
        cap: usize,
    },
}

impl HomDimension {
    pub fn finite(&self) -> Option<usize> {
        match self {
            HomDimension::Finite { value } => Some(*value),
            _ => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, HomDimension::InfiniteCertified { .. })
    }
}

impl fmt::Display for HomDimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomDimension::Finite { value } => write!(f, "{value}"),
            HomDimension::InfiniteCertified { a, b } => {
                write!(f, "infinite (Omega^{a} is a summand of Omega^{b})")
            }
            HomDimension::AtLeast { cap } => write!(f, "at least {cap}"),
        }
    }
}

/// Projective dimension, reusing the classes of `tracker`.
pub fn proj_dim_tracked(
    tracker: &mut SyzygyTracker,
    m: &Representation,
    cap: usize,
) -> Result<HomDimension> {
    let mut seq = vec![tracker.classify(m)?];
    let mut nonproj = vec![tracker.nonprojective(&seq[0])];
    for b in 0..=cap {
        if nonproj[b].is_empty() {
            return Ok(HomDimension::Finite { value: b });
        }
        for a in 0..b {
            if !nonproj[a].is_empty() && dominated(&nonproj[a], &nonproj[b]) {
                return Ok(HomDimension::InfiniteCertified { a, b });
            }
        }
        if b == cap {
            break;
        }
        let next = tracker.step(&seq[b])?;
        nonproj.push(tracker.nonprojective(&next));
        seq.push(next);
    }
    Ok(HomDimension::AtLeast { cap })
}

pub fn proj_dim(m: &Representation, cap: usize) -> Result<HomDimension> {
    let mut t = SyzygyTracker::new(m.algebra())?;
    proj_dim_tracked(&mut t, m, cap)
}

/// Maximum of the projective dimensions of the simples.
pub fn global_dimension(a: &Arc<BoundQuiverAlgebra>, cap: usize) -> Result<HomDimension> {
    let dims: Vec<HomDimension> = (0..a.vertex_count())
        .into_par_iter()
        .map(|i| proj_dim(&Representation::simple(a, i)?, cap))
        .collect::<Result<_>>()?;
    if let Some(d) = dims.iter().find(|d| d.is_infinite()) {
        return Ok(*d);
    }
    if dims
        .iter()
        .any(|d| matches!(d, HomDimension::AtLeast { .. }))
    {
        return Ok(HomDimension::AtLeast { cap });
    }
    Ok(HomDimension::Finite {
        value: dims
            .iter()
            .filter_map(HomDimension::finite)
            .max()
            .unwrap_or(0),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DominantDimension {
    Finite {
        value: usize,
    },
    /// The first `cap` terms of the minimal injective coresolution of `A` are projective.
    AtLeast {
        cap: usize,
    },
}

impl DominantDimension {
    pub fn finite(&self) -> Option<usize> {
        match self {
            DominantDimension::Finite { value } => Some(*value),
            DominantDimension::AtLeast { .. } => None,
        }
    }
}

impl fmt::Display for DominantDimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DominantDimension::Finite { value } => write!(f, "{value}"),
            DominantDimension::AtLeast { cap } => write!(f, "at least {cap}"),
        }
    }
}

/// Index of the first non-projective term of the minimal injective
/// coresolution of `A_A`. The coresolution is the dual of a projective
/// resolution of `D(A)` over the opposite algebra, tracked by multiplicities.
pub fn dominant_dimension(a: &Arc<BoundQuiverAlgebra>, cap: usize) -> Result<DominantDimension> {
    let proj_inj: Vec<bool> = (0..a.vertex_count())
        .map(|v| Representation::indec_injective(a, v).map(|i| is_projective(&i)))
        .collect::<Result<_>>()?;
    let op = Arc::new(a.opposite());
    let mut t = SyzygyTracker::new(&op)?;
    let da = Representation::regular(a).dual_over(op.clone());
    let mut counts = t.classify(&da)?;
    for k in 0..cap {
        let tops = t.cover_vertices(&counts)?;
        if tops.iter().all(|&c| c == 0) {
            break;
        }
        if tops.iter().enumerate().any(|(v, &c)| c > 0 && !proj_inj[v]) {
            return Ok(DominantDimension::Finite { value: k });
        }
        counts = t.step(&counts)?;
    }
    Ok(DominantDimension::AtLeast { cap })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HigherAuslanderReport {
    pub global_dimension: HomDimension,
    pub dominant_dimension: DominantDimension,
    pub is_higher_auslander: bool,
}

/// `gldim A = domdim A ≥ 2`, both certified finite.
pub fn is_higher_auslander(
    a: &Arc<BoundQuiverAlgebra>,
    cap: usize,
) -> Result<HigherAuslanderReport> {
    let g = global_dimension(a, cap)?;
    let d = dominant_dimension(a, cap)?;
    let ok = matches!((g.finite(), d.finite()), (Some(x), Some(y)) if x == y && x >= 2);
    Ok(HigherAuslanderReport {
        global_dimension: g,
        dominant_dimension: d,
        is_higher_auslander: ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linalg::FieldSpec;

    #[test]
    fn flagship_algebra_dimensions() {
        let a = Arc::new(fixtures::flagship_algebra(FieldSpec::Rationals));
        let s2 = Representation::simple(&a, 1).unwrap();
        assert_eq!(
            proj_dim(&s2, 10).unwrap(),
            HomDimension::InfiniteCertified { a: 0, b: 2 }
        );
        let p1 = Representation::indec_projective(&a, 0).unwrap();
        assert_eq!(
            proj_dim(&p1, 10).unwrap(),
            HomDimension::Finite { value: 0 }
        );
        assert!(global_dimension(&a, 10).unwrap().is_infinite());
        assert_eq!(
            dominant_dimension(&a, 10).unwrap(),
            DominantDimension::Finite { value: 0 }
        );
        assert!(!is_higher_auslander(&a, 10).unwrap().is_higher_auslander);
    }

    #[test]
    fn small_controls() {
        let a2 = Arc::new(fixtures::linear_a2(FieldSpec::Rationals));
        assert_eq!(
            global_dimension(&a2, 10).unwrap(),
            HomDimension::Finite { value: 1 }
        );
        assert_eq!(
            proj_dim(&Representation::simple(&a2, 0).unwrap(), 10).unwrap(),
            HomDimension::Finite { value: 1 }
        );
        assert!(!is_higher_auslander(&a2, 10).unwrap().is_higher_auslander);
        let l = Arc::new(fixtures::one_loop(FieldSpec::Rationals));
        assert_eq!(
            dominant_dimension(&l, 12).unwrap(),
            DominantDimension::AtLeast { cap: 12 }
        );
        assert_eq!(
            proj_dim(&Representation::simple(&l, 0).unwrap(), 10).unwrap(),
            HomDimension::InfiniteCertified { a: 0, b: 1 }
        );
    }

    #[test]
    fn typed_endomorphism_algebra_is_higher_auslander() {
        let b = Arc::new(fixtures::flagship_endomorphism_algebra(
            FieldSpec::Rationals,
        ));
        let r = is_higher_auslander(&b, 10).unwrap();
        assert_eq!(r.global_dimension, HomDimension::Finite { value: 3 });
        assert_eq!(r.dominant_dimension, DominantDimension::Finite { value: 3 });
        assert!(r.is_higher_auslander);
    }
}
