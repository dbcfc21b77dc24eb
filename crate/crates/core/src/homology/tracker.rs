//! Iterated syzygies tracked as multiplicities of indecomposable classes.
//!
//! `Ω` commutes with finite direct sums, so once `Ω X` is known for every
//! indecomposable `X` that occurs, `Ω^n M` is determined by a multiplicity
//! vector. This keeps long windows cheap even when `dim Ω^n M` grows
//! exponentially.

use std::sync::Arc;

use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};
use crate::rep::{
    decompose_using, indecomposables_isomorphic, is_projective, omega, standard_locals, top,
    LocalEndo, Representation,
};

#[derive(Clone, Debug)]
struct TrackedClass {
    local: LocalEndo,
    projective: bool,
    top: Vec<usize>,
    omega: Option<Vec<(usize, u64)>>,
}

/// Multiplicities indexed by class id (shorter vectors are zero-padded).
pub type Counts = Vec<u64>;

#[derive(Clone, Debug)]
pub struct SyzygyTracker {
    algebra: Arc<BoundQuiverAlgebra>,
    classes: Vec<TrackedClass>,
    seeds: Vec<LocalEndo>,
}

fn checked_mul_add(acc: u64, a: u64, b: u64) -> Result<u64> {
    a.checked_mul(b)
        .and_then(|p| p.checked_add(acc))
        .ok_or_else(|| Error::Overflow("syzygy multiplicities exceed 64 bits".into()))
}

impl SyzygyTracker {
    pub fn new(algebra: &Arc<BoundQuiverAlgebra>) -> Result<Self> {
        Ok(SyzygyTracker {
            algebra: algebra.clone(),
            classes: Vec::new(),
            seeds: standard_locals(algebra)?,
        })
    }

    pub fn algebra(&self) -> &Arc<BoundQuiverAlgebra> {
        &self.algebra
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_module(&self, c: usize) -> &Representation {
        self.classes[c].local.module()
    }

    pub fn is_projective_class(&self, c: usize) -> bool {
        self.classes[c].projective
    }

    fn class_of(&mut self, local: &LocalEndo) -> Result<usize> {
        let x = local.module();
        for (i, c) in self.classes.iter().enumerate() {
            if c.local.module().dims() == x.dims()
                && indecomposables_isomorphic(&c.local, x)?.is_some()
            {
                return Ok(i);
            }
        }
        let (t, _) = top(x);
        self.classes.push(TrackedClass {
            local: local.clone(),
            projective: is_projective(x),
            top: t.dims().to_vec(),
            omega: None,
        });
        Ok(self.classes.len() - 1)
    }

    /// Multiplicities of the indecomposable summands of `m`.
    pub fn classify(&mut self, m: &Representation) -> Result<Counts> {
        let m = m.rehome(&self.algebra)?;
        let mut cands: Vec<LocalEndo> = self.classes.iter().map(|c| c.local.clone()).collect();
        cands.extend(self.seeds.iter().cloned());
        let d = decompose_using(&m, &cands)?;
        let mut counts = vec![0u64; self.classes.len()];
        for c in &d.classes {
            let id = self.class_of(&c.local)?;
            if id >= counts.len() {
                counts.resize(id + 1, 0);
            }
            counts[id] += c.multiplicity() as u64;
        }
        Ok(counts)
    }

    fn omega_of(&mut self, c: usize) -> Result<Vec<(usize, u64)>> {
        if let Some(o) = &self.classes[c].omega {
            return Ok(o.clone());
        }
        let o = if self.classes[c].projective {
            Vec::new()
        } else {
            let x = self.classes[c].local.module().clone();
            let counts = self.classify(&omega(&x).module)?;
            counts
                .into_iter()
                .enumerate()
                .filter(|&(_, k)| k > 0)
                .collect()
        };
        self.classes[c].omega = Some(o.clone());
        Ok(o)
    }

    /// `Ω` applied to a multiplicity vector.
    pub fn step(&mut self, counts: &Counts) -> Result<Counts> {
        let mut out: Counts = Vec::new();
        for (c, &k) in counts.iter().enumerate() {
            if k == 0 {
                continue;
            }
            for (d, mult) in self.omega_of(c)? {
                if d >= out.len() {
                    out.resize(d + 1, 0);
                }
                out[d] = checked_mul_add(out[d], k, mult)?;
            }
        }
        Ok(out)
    }

    /// Multiplicity vectors of `Ω^0 M = M, Ω^1 M, ..., Ω^steps M`.
    pub fn sequence(&mut self, m: &Representation, steps: usize) -> Result<Vec<Counts>> {
        let mut seq = vec![self.classify(m)?];
        for _ in 0..steps {
            let next = self.step(seq.last().expect("nonempty"))?;
            seq.push(next);
        }
        Ok(seq)
    }

    /// The counts with projective classes dropped.
    pub fn nonprojective(&self, counts: &Counts) -> Counts {
        let mut out: Counts = counts
            .iter()
            .enumerate()
            .map(|(c, &k)| if self.classes[c].projective { 0 } else { k })
            .collect();
        while out.last() == Some(&0) {
            out.pop();
        }
        out
    }

    /// Multiplicity of each indecomposable projective in the projective cover.
    pub fn cover_vertices(&self, counts: &Counts) -> Result<Vec<u64>> {
        let n = self.algebra.vertex_count();
        let mut out = vec![0u64; n];
        for (c, &k) in counts.iter().enumerate() {
            for (v, &t) in self.classes[c].top.iter().enumerate() {
                out[v] = checked_mul_add(out[v], k, t as u64)?;
            }
        }
        Ok(out)
    }

    /// `dim` of the projective cover.
    pub fn cover_dim(&self, counts: &Counts) -> Result<u64> {
        let mut acc = 0u64;
        for (v, k) in self.cover_vertices(counts)?.into_iter().enumerate() {
            acc = checked_mul_add(acc, k, self.algebra.projective_dim(v) as u64)?;
        }
        Ok(acc)
    }

    pub fn module_dim(&self, counts: &Counts) -> Result<u64> {
        let mut acc = 0u64;
        for (c, &k) in counts.iter().enumerate() {
            acc = checked_mul_add(acc, k, self.class_module(c).total_dim() as u64)?;
        }
        Ok(acc)
    }
}

/// `a` is componentwise at most `b`, after zero padding.
pub(crate) fn dominated(a: &[u64], b: &[u64]) -> bool {
    a.iter()
        .enumerate()
        .all(|(i, &x)| x <= b.get(i).copied().unwrap_or(0))
}

/// Largest `m` with `m·a ≤ b` componentwise, for `a` nonzero.
pub(crate) fn max_multiple(a: &[u64], b: &[u64]) -> u64 {
    a.iter()
        .enumerate()
        .filter(|&(_, &x)| x > 0)
        .map(|(i, &x)| b.get(i).copied().unwrap_or(0) / x)
        .min()
        .unwrap_or(0)
}

pub(crate) fn same_counts(a: &[u64], b: &[u64]) -> bool {
    let n = a.len().max(b.len());
    (0..n).all(|i| a.get(i).copied().unwrap_or(0) == b.get(i).copied().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linalg::FieldSpec;

    #[test]
    fn syzygies_of_s2_double_every_two_steps() {
        let a = Arc::new(fixtures::flagship_algebra(FieldSpec::Rationals));
        let mut t = SyzygyTracker::new(&a).unwrap();
        let s2 = Representation::simple(&a, 1).unwrap();
        let seq = t.sequence(&s2, 6).unwrap();
        let dims: Vec<u64> = seq.iter().map(|c| t.cover_dim(c).unwrap()).collect();
        assert_eq!(dims, vec![3, 4, 6, 8, 12, 16, 24]);
        let s2_class = seq[0].iter().position(|&k| k == 1).unwrap();
        assert_eq!(seq[6][s2_class], 8);
    }

    #[test]
    fn helpers() {
        assert!(dominated(&[1, 0], &[1, 2, 3]));
        assert!(!dominated(&[1, 4], &[1, 2]));
        assert_eq!(max_multiple(&[1, 1], &[2, 3]), 2);
        assert!(same_counts(&[1, 0, 0], &[1]));
    }
}
