use std::sync::Arc;

use crate::rep::{omega, top, Morphism, Representation};

/// One term `P_k` of a projective resolution: a sum of indecomposable
/// projectives at `vertices`.
#[derive(Clone, Debug)]
pub struct ResolutionTerm {
    pub module: Representation,
    pub vertices: Vec<usize>,
}

/// `... -> P_1 -> P_0 -> M -> 0`, minimal, computed for a fixed number of steps.
#[derive(Clone, Debug)]
pub struct ProjectiveResolution {
    pub target: Representation,
    pub terms: Vec<ResolutionTerm>,
    /// `differentials[0]` is the augmentation `P_0 -> M`; `differentials[k]` is `P_k -> P_{k-1}`.
    pub differentials: Vec<Morphism>,
    /// `syzygies[k]` is `Ω^{k+1} M` with its inclusion into `P_k`.
    pub syzygies: Vec<(Representation, Morphism)>,
}

impl ProjectiveResolution {
    pub fn length(&self) -> usize {
        self.terms.len()
    }

    pub fn term_dims(&self) -> Vec<usize> {
        self.terms.iter().map(|t| t.module.total_dim()).collect()
    }

    /// Exactness, `d∘d = 0`, surjective augmentation and images in the radical.
    pub fn verify(&self) -> bool {
        let d = &self.differentials;
        if !d[0].is_surjective() && !self.target.is_zero() {
            return false;
        }
        for k in 1..d.len() {
            if !d[k - 1].compose(&d[k]).is_zero() {
                return false;
            }
            let ker_dim = d[k - 1].source().total_dim() - d[k - 1].rank();
            if d[k].rank() != ker_dim {
                return false;
            }
            let (_, q) = top(d[k].target());
            if !q.compose(&d[k]).is_zero() {
                return false;
            }
        }
        if let (Some(last), Some((om, _))) = (d.last(), self.syzygies.last()) {
            let ker = last.source().total_dim() - last.rank();
            if ker != om.total_dim() {
                return false;
            }
        }
        true
    }
}

/// Minimal projective resolution with terms `P_0, ..., P_steps` (fewer when
/// a syzygy vanishes).
pub fn min_proj_resolution(m: &Representation, steps: usize) -> ProjectiveResolution {
    let mut terms = Vec::new();
    let mut differentials = Vec::new();
    let mut syzygies: Vec<(Representation, Morphism)> = Vec::new();
    let mut cur = m.clone();
    for k in 0..=steps {
        if cur.is_zero() && k > 0 {
            break;
        }
        let s = omega(&cur);
        terms.push(ResolutionTerm {
            module: s.cover.module.clone(),
            vertices: s.cover.vertices.clone(),
        });
        let d = match syzygies.last() {
            None => s.cover.map.clone(),
            Some((_, inc)) => inc.compose(&s.cover.map),
        };
        differentials.push(d);
        syzygies.push((s.module.clone(), s.inclusion.clone()));
        cur = s.module;
    }
    ProjectiveResolution {
        target: m.clone(),
        terms,
        differentials,
        syzygies,
    }
}

/// `0 -> M -> I^0 -> I^1 -> ...`, built by dualizing a projective resolution
/// over the opposite algebra.
#[derive(Clone, Debug)]
pub struct InjectiveCoresolution {
    pub target: Representation,
    pub terms: Vec<Representation>,
    /// Socle vertices of each term: `I^k` is the sum of the `I_v`.
    pub vertices: Vec<Vec<usize>>,
    /// `differentials[0]` is `M -> I^0`; `differentials[k]` is `I^{k-1} -> I^k`.
    pub differentials: Vec<Morphism>,
    pub projective: Vec<bool>,
}

pub fn min_inj_coresolution(m: &Representation, steps: usize) -> InjectiveCoresolution {
    let alg = m.algebra().clone();
    let op = Arc::new(alg.opposite());
    let res = min_proj_resolution(&m.dual_over(op), steps);
    let mut terms = Vec::new();
    let mut differentials = Vec::new();
    let mut projective = Vec::new();
    for d in &res.differentials {
        let dd = d.dual_over(alg.clone());
        terms.push(dd.target().clone());
        projective.push(crate::rep::is_projective(dd.target()));
        differentials.push(dd);
    }
    InjectiveCoresolution {
        target: m.clone(),
        vertices: res.terms.iter().map(|t| t.vertices.clone()).collect(),
        terms,
        differentials,
        projective,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linalg::FieldSpec;

    #[test]
    fn resolution_of_s2() {
        let a = Arc::new(fixtures::flagship_algebra(FieldSpec::Rationals));
        let s2 = Representation::simple(&a, 1).unwrap();
        let r = min_proj_resolution(&s2, 4);
        assert_eq!(r.term_dims(), vec![3, 4, 6, 8, 12]);
        assert!(r.verify());
    }

    #[test]
    fn resolution_of_projective_stops() {
        let a = Arc::new(fixtures::flagship_algebra(FieldSpec::Rationals));
        let p = Representation::indec_projective(&a, 0).unwrap();
        let r = min_proj_resolution(&p, 5);
        assert_eq!(r.term_dims(), vec![2]);
        assert!(r.syzygies[0].0.is_zero());
        assert!(r.verify());
    }

    #[test]
    fn hereditary_a2_resolution() {
        let a = Arc::new(fixtures::linear_a2(FieldSpec::Rationals));
        let s1 = Representation::simple(&a, 0).unwrap();
        let r = min_proj_resolution(&s1, 3);
        assert_eq!(r.terms.len(), 2);
        assert_eq!(r.terms[0].vertices, vec![0]);
        assert_eq!(r.terms[1].vertices, vec![1]);
        assert!(r.verify());
    }

    #[test]
    fn coresolution_of_regular_module() {
        let a = Arc::new(fixtures::flagship_algebra(FieldSpec::Rationals));
        let c = min_inj_coresolution(&Representation::regular(&a), 1);
        assert!(!c.projective[0]);
        assert!(c.differentials[0].is_injective());
        assert!(c.differentials[1].compose(&c.differentials[0]).is_zero());
    }
}
