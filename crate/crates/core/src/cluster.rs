//! Membership in `add(M)` and the two cluster-tilting checks.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::BoundQuiverAlgebra;
use crate::endo::endo_bound_quiver;
use crate::error::{Error, Result};
use crate::homology::{
    dominant_dimension, ext_dim, global_dimension, DominantDimension, HomDimension,
    DEFAULT_RESOLUTION_CAP,
};
use crate::rep::{decompose, indecomposables_isomorphic, LocalEndo, Representation};

/// Whether every indecomposable summand of `x` is a summand of `m`.
pub fn add_membership(m: &Representation, x: &Representation) -> Result<bool> {
    m.check_same_algebra(x)?;
    let dm = decompose(m)?;
    for c in &decompose(x)?.classes {
        if dm.find_class(&c.module)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClusterMode {
    ViaList,
    ViaEndo,
}

/// Which side of the Ext condition a list entry failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtSide {
    /// `Ext^i(M, X)`
    Right,
    /// `Ext^i(X, M)`
    Left,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ListFailure {
    /// Index into the list.
    pub module: usize,
    pub dims: Vec<usize>,
    pub in_add_m: bool,
    /// The first degree with nonzero Ext, when the entry is a summand of `M`
    /// that is not Ext-orthogonal.
    pub ext_index: Option<usize>,
    pub side: Option<ExtSide>,
    pub ext_dim: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClusterEvidence {
    List {
        /// Entries `X` with `Ext^i(M, X) = 0` for `1 <= i < n`.
        right_orthogonal: Vec<usize>,
        /// Entries `X` with `Ext^i(X, M) = 0` for `1 <= i < n`.
        left_orthogonal: Vec<usize>,
        summands: Vec<usize>,
        /// `ext_m_x[i - 1][k] = dim Ext^i(M, X_k)`.
        ext_m_x: Vec<Vec<usize>>,
        /// `ext_x_m[i - 1][k] = dim Ext^i(X_k, M)`.
        ext_x_m: Vec<Vec<usize>>,
        generator_cogenerator: bool,
        failure: Option<ListFailure>,
    },
    Endo {
        global_dimension: HomDimension,
        dominant_dimension: DominantDimension,
        endo_dim: usize,
        endo_vertices: usize,
        endo_arrows: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClusterVerdict {
    pub result: bool,
    pub mode: ClusterMode,
    pub n: usize,
    pub evidence: ClusterEvidence,
}

fn generator_cogenerator(a: &Arc<BoundQuiverAlgebra>, m: &Representation) -> Result<(bool, bool)> {
    Ok((
        add_membership(m, &Representation::regular(a))?,
        add_membership(m, &Representation::dual_regular(a))?,
    ))
}

/// Checks `add(M) = {X : Ext^i(M, X) = 0, 0 < i < n} = {X : Ext^i(X, M) = 0, 0 < i < n}`
/// against a complete list of indecomposables.
///
/// Completeness of the list is the caller's responsibility; each entry is
/// certified indecomposable and entries are checked pairwise non-isomorphic.
pub fn check_via_list(
    a: &Arc<BoundQuiverAlgebra>,
    m: &Representation,
    n: usize,
    list: &[Representation],
) -> Result<ClusterVerdict> {
    let m = m.rehome(a)?;
    let mut locals = Vec::with_capacity(list.len());
    for (index, x) in list.iter().enumerate() {
        let x = x.rehome(a)?;
        let local = LocalEndo::certify(&x)?.ok_or(Error::ListEntryDecomposable { index })?;
        for (first, l) in locals.iter().enumerate() {
            if indecomposables_isomorphic(l, &x)?.is_some() {
                return Err(Error::DuplicateListEntry {
                    first,
                    second: index,
                });
            }
        }
        locals.push(local);
    }
    let dm = decompose(&m)?;
    let mut summands = Vec::new();
    for c in &dm.classes {
        let k = locals
            .iter()
            .position(|l| {
                l.module().dims() == c.module.dims()
                    && indecomposables_isomorphic(l, &c.module)
                        .ok()
                        .flatten()
                        .is_some()
            })
            .ok_or_else(|| {
                Error::DecompositionIncomplete("a summand of M is missing from the list".into())
            })?;
        summands.push(k);
    }
    summands.sort_unstable();
    let degrees: Vec<usize> = (1..n).collect();
    let table = |right: bool| -> Result<Vec<Vec<usize>>> {
        degrees
            .par_iter()
            .map(|&i| {
                list.par_iter()
                    .map(|x| {
                        let x = x.rehome(a)?;
                        if right {
                            ext_dim(i, &m, &x)
                        } else {
                            ext_dim(i, &x, &m)
                        }
                    })
                    .collect()
            })
            .collect()
    };
    let ext_m_x = table(true)?;
    let ext_x_m = table(false)?;
    let orthogonal = |t: &[Vec<usize>]| -> Vec<usize> {
        (0..list.len())
            .filter(|&k| t.iter().all(|row| row[k] == 0))
            .collect()
    };
    let right_orthogonal = orthogonal(&ext_m_x);
    let left_orthogonal = orthogonal(&ext_x_m);
    let result = right_orthogonal == summands && left_orthogonal == summands;
    let failure = if result {
        None
    } else {
        let bad = (0..list.len())
            .find(|k| {
                right_orthogonal.contains(k) != summands.contains(k)
                    || left_orthogonal.contains(k) != summands.contains(k)
            })
            .expect("sets differ");
        let in_add_m = summands.contains(&bad);
        let mut failure = ListFailure {
            module: bad,
            dims: list[bad].dims().to_vec(),
            in_add_m,
            ext_index: None,
            side: None,
            ext_dim: None,
        };
        if in_add_m {
            let found = degrees.iter().enumerate().find_map(|(r, &i)| {
                if ext_m_x[r][bad] != 0 {
                    Some((i, ExtSide::Right, ext_m_x[r][bad]))
                } else if ext_x_m[r][bad] != 0 {
                    Some((i, ExtSide::Left, ext_x_m[r][bad]))
                } else {
                    None
                }
            });
            if let Some((i, side, d)) = found {
                failure.ext_index = Some(i);
                failure.side = Some(side);
                failure.ext_dim = Some(d);
            }
        }
        Some(failure)
    };
    let (gen, cogen) = generator_cogenerator(a, &m)?;
    Ok(ClusterVerdict {
        result,
        mode: ClusterMode::ViaList,
        n,
        evidence: ClusterEvidence::List {
            right_orthogonal,
            left_orthogonal,
            summands,
            ext_m_x,
            ext_x_m,
            generator_cogenerator: gen && cogen,
            failure,
        },
    })
}

/// Checks that `End(M)` has global and dominant dimension `n + 1`, after
/// checking that `M` is a generator-cogenerator.
pub fn check_via_endo(
    a: &Arc<BoundQuiverAlgebra>,
    m: &Representation,
    n: usize,
) -> Result<ClusterVerdict> {
    check_via_endo_with_cap(a, m, n, DEFAULT_RESOLUTION_CAP)
}

pub fn check_via_endo_with_cap(
    a: &Arc<BoundQuiverAlgebra>,
    m: &Representation,
    n: usize,
    cap: usize,
) -> Result<ClusterVerdict> {
    let m = m.rehome(a)?;
    match generator_cogenerator(a, &m)? {
        (true, true) => {}
        (false, _) => return Err(Error::GenCogenFailed("A is not in add(M)".into())),
        (true, false) => return Err(Error::GenCogenFailed("D(A) is not in add(M)".into())),
    }
    let (p, b) = endo_bound_quiver(&m)?;
    let g = global_dimension(&b, cap)?;
    let d = dominant_dimension(&b, cap)?;
    let result = g == HomDimension::Finite { value: n + 1 }
        && d == DominantDimension::Finite { value: n + 1 };
    Ok(ClusterVerdict {
        result,
        mode: ClusterMode::ViaEndo,
        n,
        evidence: ClusterEvidence::Endo {
            global_dimension: g,
            dominant_dimension: d,
            endo_dim: p.dim,
            endo_vertices: p.quiver.vertex_count(),
            endo_arrows: p.quiver.arrows().len(),
        },
    })
}
