use std::sync::Arc;

use super::{decompose, morphism_from_projectives, quotient, submodule, Morphism, Representation};
use crate::error::Result;
use crate::linalg::Matrix;

/// `rad M`, the sum of the images of all arrows, with its inclusion.
pub fn radical(m: &Representation) -> (Representation, Morphism) {
    let f = m.field();
    let alg = m.algebra();
    let bases = (0..alg.vertex_count())
        .map(|w| {
            let mut span = Matrix::zeros(f, m.dims()[w], 0);
            for (id, a) in alg.quiver().arrows().iter().enumerate() {
                if a.target == w {
                    span = span.hstack(m.map(id));
                }
            }
            span.column_space()
        })
        .collect();
    submodule(m, bases).expect("radical is a submodule")
}

/// `top M = M / rad M`, with the projection.
pub fn top(m: &Representation) -> (Representation, Morphism) {
    let (_, inc) = radical(m);
    quotient(m, inc.blocks())
}

/// `soc M`, computed as `D(top(D M))`, with its inclusion.
pub fn socle(m: &Representation) -> (Representation, Morphism) {
    let alg = m.algebra();
    let op = Arc::new(alg.opposite());
    let (_, proj) = top(&m.dual_over(op));
    let inc = proj.dual_over(alg.clone());
    let soc = inc.source().clone();
    (soc.clone(), inc.with_ends(&soc, m))
}

/// A projective cover `π: P -> M`; `P` is the sum of the indecomposable
/// projectives at `vertices`, in that order.
#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    pub module: Representation,
    pub map: Morphism,
    pub vertices: Vec<usize>,
}

pub fn projective_cover(m: &Representation) -> ProjectiveCover {
    let (_, proj) = top(m);
    let mut vertices = Vec::new();
    let mut gens = Vec::new();
    for (v, q) in proj.blocks().iter().enumerate() {
        if q.rows() == 0 {
            continue;
        }
        let r = q
            .right_inverse()
            .expect("projection onto the top is surjective");
        for c in r.columns() {
            vertices.push(v);
            gens.push(c);
        }
    }
    let map = morphism_from_projectives(&vertices, &gens, m);
    ProjectiveCover {
        module: map.source().clone(),
        map,
        vertices,
    }
}

/// `Ω M = ker(P -> M)` for a projective cover, with all the pieces.
#[derive(Clone, Debug)]
pub struct Syzygy {
    pub module: Representation,
    pub inclusion: Morphism,
    pub cover: ProjectiveCover,
}

pub fn omega(m: &Representation) -> Syzygy {
    let cover = projective_cover(m);
    let (module, inclusion) = cover.map.kernel();
    Syzygy {
        module,
        inclusion,
        cover,
    }
}

pub fn is_projective(m: &Representation) -> bool {
    let (t, _) = top(m);
    let p: usize = t
        .dims()
        .iter()
        .enumerate()
        .map(|(v, &k)| k * m.algebra().projective_dim(v))
        .sum();
    p == m.total_dim()
}

pub fn is_injective(m: &Representation) -> bool {
    let (s, _) = socle(m);
    let op = m.algebra().opposite();
    let i: usize = s
        .dims()
        .iter()
        .enumerate()
        .map(|(v, &k)| k * op.projective_dim(v))
        .sum();
    i == m.total_dim()
}

/// `Ω^k M`. For `k = 0` this is `M` with its projective summands removed.
pub fn syzygy(m: &Representation, k: usize) -> Result<Representation> {
    if k == 0 {
        return decompose::remove_projective_summands(m);
    }
    let mut cur = m.clone();
    for _ in 0..k {
        cur = omega(&cur).module;
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linalg::FieldSpec;
    use crate::rep::hom_dim;

    #[test]
    fn radical_top_socle_of_projectives() {
        let a = Arc::new(fixtures::flagship_algebra(FieldSpec::Rationals));
        let p2 = Representation::indec_projective(&a, 1).unwrap();
        assert_eq!(radical(&p2).0.dims(), &[1, 0, 1]);
        assert_eq!(top(&p2).0.dims(), &[0, 1, 0]);
        assert_eq!(socle(&p2).0.dims(), &[1, 0, 1]);
        let i2 = Representation::indec_injective(&a, 1).unwrap();
        assert_eq!(socle(&i2).0.dims(), &[0, 1, 0]);
        assert_eq!(top(&i2).0.dims(), &[1, 0, 1]);
        let (s, inc) = socle(&i2);
        assert!(inc.is_homomorphism());
        assert!(inc.is_injective());
        assert_eq!(s.dims(), &[0, 1, 0]);
    }

    #[test]
    fn covers_and_syzygies() {
        let a = Arc::new(fixtures::flagship_algebra(FieldSpec::Rationals));
        let s2 = Representation::simple(&a, 1).unwrap();
        let c = projective_cover(&s2);
        assert_eq!(c.vertices, vec![1]);
        assert!(c.map.is_surjective() && c.map.is_homomorphism());
        let o = omega(&s2);
        assert_eq!(o.module.dims(), &[1, 0, 1]);
        let o2 = syzygy(&s2, 2).unwrap();
        assert_eq!(o2.dims(), &[0, 2, 0]);
        assert!(is_projective(&Representation::regular(&a)));
        assert!(!is_projective(&s2));
        assert!(is_injective(&Representation::dual_regular(&a)));
        assert!(!is_injective(
            &Representation::indec_projective(&a, 0).unwrap()
        ));
        assert_eq!(hom_dim(&o2, &s2).unwrap(), 2);
    }
}
