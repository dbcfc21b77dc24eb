use rayon::prelude::*;

use super::{Morphism, Representation};
use crate::error::Result;
use crate::linalg::{rank_of_vectors, Matrix};

/// Position of entry `(r, c)` of the block at vertex `v` in the flattened morphism.
fn offsets(m: &Representation, n: &Representation) -> Vec<usize> {
    let mut acc = 0;
    m.dims()
        .iter()
        .zip(n.dims())
        .map(|(&s, &t)| {
            let o = acc;
            acc += s * t;
            o
        })
        .collect()
}

/// Matrix of the linear map `f ↦ (N_a f_i - f_j M_a)_a` on flattened morphisms.
fn intertwining_system(m: &Representation, n: &Representation) -> Matrix {
    let f = m.field();
    let off = offsets(m, n);
    let unknowns: usize = m.dims().iter().zip(n.dims()).map(|(a, b)| a * b).sum();
    let arrows = m.algebra().quiver().arrows();
    let eq_count: usize = arrows
        .iter()
        .map(|a| n.dims()[a.target] * m.dims()[a.source])
        .sum();
    let mut sys = Matrix::zeros(f, eq_count, unknowns);
    let mut row0 = 0;
    for (id, a) in arrows.iter().enumerate() {
        let (i, j) = (a.source, a.target);
        let (mi, mj, ni, nj) = (m.dims()[i], m.dims()[j], n.dims()[i], n.dims()[j]);
        let (ma, na) = (m.map(id), n.map(id));
        // equation (r, c) with r < nj, c < mi
        for r in 0..nj {
            for c in 0..mi {
                let row = row0 + r * mi + c;
                // (N_a f_i)[r, c] = Σ_k N_a[r, k] f_i[k, c]
                for k in 0..ni {
                    let v = &na[(r, k)];
                    if !v.is_zero() {
                        let col = off[i] + k * mi + c;
                        sys[(row, col)] = &sys[(row, col)] + v;
                    }
                }
                // (f_j M_a)[r, c] = Σ_k f_j[r, k] M_a[k, c]
                for k in 0..mj {
                    let v = &ma[(k, c)];
                    if !v.is_zero() {
                        let col = off[j] + r * mj + k;
                        sys[(row, col)] = &sys[(row, col)] - v;
                    }
                }
            }
        }
        row0 += nj * mi;
    }
    sys
}

/// A basis of `Hom_A(m, n)`, deterministic for fixed inputs.
pub fn hom_basis(m: &Representation, n: &Representation) -> Result<Vec<Morphism>> {
    m.check_same_algebra(n)?;
    let k = intertwining_system(m, n).kernel_basis();
    Ok(k.columns()
        .iter()
        .map(|v| Morphism::from_vector(m, n, v))
        .collect())
}

pub fn hom_dim(m: &Representation, n: &Representation) -> Result<usize> {
    m.check_same_algebra(n)?;
    let sys = intertwining_system(m, n);
    Ok(sys.cols() - sys.rank())
}

/// Dimension of the span of a family of morphisms with common source and target.
pub fn morphisms_rank(maps: &[Morphism]) -> usize {
    let Some(first) = maps.first() else {
        return 0;
    };
    let len: usize = first.blocks().iter().map(|b| b.rows() * b.cols()).sum();
    let vecs: Vec<_> = maps.par_iter().map(Morphism::to_vector).collect();
    rank_of_vectors(first.source().field(), len, &vecs)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::fixtures;
    use crate::linalg::FieldSpec;

    #[test]
    fn homs_between_standard_modules() {
        let a = Arc::new(fixtures::flagship_algebra(FieldSpec::Rationals));
        let p: Vec<_> = (0..3)
            .map(|i| Representation::indec_projective(&a, i).unwrap())
            .collect();
        let s: Vec<_> = (0..3)
            .map(|i| Representation::simple(&a, i).unwrap())
            .collect();
        // Hom(P_i, M) = M_i
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(hom_dim(&p[i], &p[j]).unwrap(), p[j].dims()[i]);
                assert_eq!(hom_dim(&p[i], &s[j]).unwrap(), usize::from(i == j));
            }
        }
        for f in hom_basis(&p[1], &p[0]).unwrap() {
            assert!(f.is_homomorphism());
        }
        let reg = Representation::regular(&a);
        assert_eq!(hom_dim(&reg, &reg).unwrap(), 7);
    }
}
