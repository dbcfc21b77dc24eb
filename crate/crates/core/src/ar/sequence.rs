use super::translate::tau;
use crate::error::{Error, Result};
use crate::homology::ext1;
use crate::linalg::{Matrix, Scalar};
use crate::rep::{
    decompose, direct_sum, hom_basis, is_projective, morphism_from_projectives,
    DecompositionResult, LocalEndo, Morphism, Representation,
};

/// `0 -> τX -> E -> X -> 0`, almost split.
#[derive(Clone, Debug)]
pub struct AlmostSplitSequence {
    pub left: Representation,
    pub middle: Representation,
    pub right: Representation,
    pub inclusion: Morphism,
    pub projection: Morphism,
    pub middle_decomposition: DecompositionResult,
}

impl AlmostSplitSequence {
    /// Exactness and non-splitness, checked directly.
    pub fn verify(&self) -> Result<bool> {
        let (f, g) = (&self.inclusion, &self.projection);
        if !g.compose(f).is_zero() || !f.is_injective() || !g.is_surjective() {
            return Ok(false);
        }
        if self.middle.total_dim() != self.left.total_dim() + self.right.total_dim() {
            return Ok(false);
        }
        let Some(local) = LocalEndo::certify(&self.right)? else {
            return Ok(false);
        };
        // split iff some g ∘ s is a unit of End(X)
        for s in hom_basis(&self.right, &self.middle)? {
            if !local.residue(&g.compose(&s)).is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Lift of `phi ∘ π` along the cover `π: P -> X`.
fn lift_through_cover(phi: &Morphism, cover: &crate::rep::ProjectiveCover) -> Morphism {
    let p = &cover.module;
    let target = phi.compose(&cover.map);
    let alg = p.algebra();
    let mut gens = Vec::new();
    let mut offset = vec![0usize; alg.vertex_count()];
    for &w in &cover.vertices {
        // the generator e_w of this summand is its first basis vector at w
        let col = offset[w];
        for v in 0..alg.vertex_count() {
            offset[v] += alg.basis_between(w, v).len();
        }
        let want = target.block(w).column(col);
        let y = cover
            .map
            .block(w)
            .solve(&want)
            .expect("shapes agree")
            .expect("covers are surjective");
        gens.push(y);
    }
    morphism_from_projectives(&cover.vertices, &gens, p).with_ends(p, p)
}

pub fn almost_split_sequence(x: &Representation) -> Result<AlmostSplitSequence> {
    if is_projective(x) {
        return Err(Error::ProjectiveInput);
    }
    let local = LocalEndo::certify(x)?.ok_or(Error::NotIndecomposable)?;
    let t = tau(x);
    let e = ext1(x, &t)?;
    let syz = &e.syzygy;
    let id = x.identity();
    // rad End(X) acting on Ext^1(X, τX) by precomposition with lifts
    let d = e.dim();
    let field = x.field();
    let mut action = Matrix::zeros(field, 0, d);
    for phi in hom_basis(x, x)? {
        let r = phi.sub(&id.scale(&local.residue(&phi)));
        if r.is_zero() {
            continue;
        }
        let lift = lift_through_cover(&r, &syz.cover);
        let restricted = lift
            .compose(&syz.inclusion)
            .factor_through_mono(&syz.inclusion)
            .expect("lifts preserve the syzygy");
        let cols: Vec<Vec<Scalar>> = e
            .representatives
            .iter()
            .map(|c| e.coordinates(&c.compose(&restricted)))
            .collect();
        action = action.vstack(&Matrix::from_columns(field, d, &cols));
    }
    let socle = action.kernel_basis();
    if socle.cols() == 0 {
        return Err(Error::NotIndecomposable);
    }
    let xi = socle.column(0);
    let terms: Vec<(Scalar, &Morphism)> = xi.into_iter().zip(&e.representatives).collect();
    let cocycle = Morphism::linear_combination(&syz.module, &t, &terms);

    // pushout of 0 -> Ω -> P_0 -> X -> 0 along the cocycle
    let alg = x.algebra();
    let sum = direct_sum(alg, &[t.clone(), syz.cover.module.clone()]);
    let inj_t = &sum.injections[0];
    let inj_p = sum.injections[1].with_ends(&syz.cover.module, &sum.module);
    let h = inj_t.compose(&cocycle).sub(&inj_p.compose(&syz.inclusion));
    let (middle, q) = h.cokernel();
    let inclusion = q.compose(inj_t);
    let to_x = syz
        .cover
        .map
        .compose(&sum.projections[1].with_ends(&sum.module, &syz.cover.module));
    let projection = to_x
        .factor_through_epi(&q)
        .expect("the cover map kills the pushout relations")
        .with_ends(&middle, x);
    let middle_decomposition = decompose(&middle)?;
    Ok(AlmostSplitSequence {
        left: t,
        middle,
        right: x.clone(),
        inclusion,
        projection,
        middle_decomposition,
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::fixtures;
    use crate::linalg::FieldSpec;
    use crate::rep::is_isomorphic;

    #[test]
    fn sequences_ending_in_simples() {
        for f in [FieldSpec::Rationals, FieldSpec::prime(5).unwrap()] {
            let a = Arc::new(fixtures::flagship_algebra(f));
            let s2 = Representation::simple(&a, 1).unwrap();
            let seq = almost_split_sequence(&s2).unwrap();
            assert!(seq.verify().unwrap());
            let p2 = Representation::indec_projective(&a, 1).unwrap();
            assert!(is_isomorphic(&seq.left, &p2).unwrap().is_some());
            let i1 = Representation::indec_injective(&a, 0).unwrap();
            let i3 = Representation::indec_injective(&a, 2).unwrap();
            assert!(is_isomorphic(&seq.middle, &i1.oplus(&i3).unwrap())
                .unwrap()
                .is_some());

            let s3 = Representation::simple(&a, 2).unwrap();
            let seq = almost_split_sequence(&s3).unwrap();
            assert!(seq.verify().unwrap());
            let i2 = Representation::indec_injective(&a, 1).unwrap();
            assert!(is_isomorphic(&seq.middle, &i2).unwrap().is_some());
        }
    }

    #[test]
    fn rejects_projectives_and_decomposables() {
        let a = Arc::new(fixtures::flagship_algebra(FieldSpec::Rationals));
        let p1 = Representation::indec_projective(&a, 0).unwrap();
        assert!(matches!(
            almost_split_sequence(&p1),
            Err(Error::ProjectiveInput)
        ));
        let s = Representation::simple(&a, 0).unwrap().power(2);
        assert!(matches!(
            almost_split_sequence(&s),
            Err(Error::NotIndecomposable)
        ));
    }
}
