use std::sync::Arc;

use serde::Serialize;

use crate::algebra::BoundQuiverAlgebra;
use crate::error::Result;
use crate::homology::ext_dim;
use crate::linalg::Scalar;
use crate::rep::{
    hom_basis, hom_dim, morphism_from_projectives, morphisms_rank, omega, projective_cover,
    projective_map_entries, projective_sum, Morphism, Representation,
};

/// `Tr M` over the algebra handle `op`, which must be the opposite of the
/// algebra of `m`.
fn transpose_into(m: &Representation, op: &Arc<BoundQuiverAlgebra>) -> Representation {
    let s0 = omega(m);
    let c1 = projective_cover(&s0.module);
    let d1 = s0.inclusion.compose(&c1.map);
    let w = &s0.cover.vertices;
    let u = &c1.vertices;
    // x[i][j] ∈ e_{w_i} A e_{u_j}: the P_{w_i}-component of d1 on the j-th generator
    let x = projective_map_entries(&d1, u, w);
    let target = projective_sum(op, u);
    let gens: Vec<Vec<Scalar>> = w
        .iter()
        .enumerate()
        .map(|(i, &wi)| {
            let mut g = Vec::new();
            for (j, &uj) in u.iter().enumerate() {
                for &k in op.basis_between(uj, wi) {
                    g.push(x[i][j][k].clone());
                }
            }
            g
        })
        .collect();
    let f = morphism_from_projectives(w, &gens, &target);
    f.cokernel().0
}

/// The transpose `Tr M = coker(P_0^* -> P_1^*)` for a minimal presentation
/// `P_1 -> P_0 -> M -> 0`, as a module over the opposite algebra.
pub fn transpose(m: &Representation) -> Representation {
    let op = Arc::new(m.algebra().opposite());
    transpose_into(m, &op)
}

/// `τ M = D Tr M`.
pub fn tau(m: &Representation) -> Representation {
    let alg = m.algebra().clone();
    let op = Arc::new(alg.opposite());
    transpose_into(m, &op).dual_over(alg)
}

/// `τ⁻ M = Tr D M`.
pub fn tau_inv(m: &Representation) -> Representation {
    let alg = m.algebra().clone();
    let op = Arc::new(alg.opposite());
    transpose_into(&m.dual_over(op), &alg)
}

/// Maps `m -> n` that factor through a projective: those of the form `π ∘ h`
/// with `π: P(n) -> n` the projective cover.
pub fn projectively_factoring(m: &Representation, n: &Representation) -> Result<Vec<Morphism>> {
    let cover = projective_cover(n);
    Ok(hom_basis(m, &cover.module)?
        .iter()
        .map(|h| cover.map.compose(h))
        .collect())
}

/// `dim Hom(m, n)` modulo maps factoring through projectives.
pub fn stable_hom_dim(m: &Representation, n: &Representation) -> Result<usize> {
    m.check_same_algebra(n)?;
    Ok(hom_dim(m, n)? - morphisms_rank(&projectively_factoring(m, n)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ArFormulaCheck {
    pub ext: usize,
    pub stable_hom: usize,
    pub holds: bool,
}

/// Compares `dim Ext^1(x, y)` with `dim Hom(τ⁻ y, x)` modulo projectives.
pub fn ar_formula_check(x: &Representation, y: &Representation) -> Result<ArFormulaCheck> {
    let ext = ext_dim(1, x, y)?;
    let stable_hom = stable_hom_dim(&tau_inv(y), x)?;
    Ok(ArFormulaCheck {
        ext,
        stable_hom,
        holds: ext == stable_hom,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linalg::FieldSpec;
    use crate::rep::is_isomorphic;

    fn setup() -> Arc<BoundQuiverAlgebra> {
        Arc::new(fixtures::flagship_algebra(FieldSpec::Rationals))
    }

    #[test]
    fn tau_of_injectives_and_simples() {
        let a = setup();
        let s = |i| Representation::simple(&a, i).unwrap();
        let p = |i| Representation::indec_projective(&a, i).unwrap();
        let inj = |i| Representation::indec_injective(&a, i).unwrap();
        let iso = |x: &Representation, y: &Representation| is_isomorphic(x, y).unwrap().is_some();
        assert!(iso(&tau(&inj(0)), &s(2)));
        assert!(iso(&tau(&inj(1)), &s(1)));
        assert!(iso(&tau(&inj(2)), &s(0)));
        assert!(iso(&tau(&s(1)), &p(1)));
        assert!(iso(&tau(&s(2)), &p(0)));
        assert!(iso(&tau(&s(0)), &p(2)));
        assert!(tau(&p(0)).is_zero());
        assert!(transpose(&p(1)).is_zero());
        let reg = Representation::regular(&a);
        let ss = s(0).oplus(&s(1)).unwrap().oplus(&s(2)).unwrap();
        assert!(iso(&tau_inv(&reg), &ss));
    }

    #[test]
    fn transpose_is_a_duality_on_s2() {
        let a = setup();
        let s2 = Representation::simple(&a, 1).unwrap();
        let tt = transpose(&transpose(&s2)).rehome(&a).unwrap();
        assert!(is_isomorphic(&tt, &s2).unwrap().is_some());
    }

    #[test]
    fn stable_homs() {
        let a = setup();
        let s1 = Representation::simple(&a, 0).unwrap();
        let i1 = Representation::indec_injective(&a, 0).unwrap();
        assert_eq!(hom_dim(&s1, &i1).unwrap(), 1);
        assert_eq!(stable_hom_dim(&s1, &i1).unwrap(), 0);
        let ss = Representation::simple(&a, 0)
            .unwrap()
            .oplus(&Representation::simple(&a, 1).unwrap())
            .unwrap()
            .oplus(&Representation::simple(&a, 2).unwrap())
            .unwrap();
        assert_eq!(
            stable_hom_dim(&ss, &Representation::dual_regular(&a)).unwrap(),
            0
        );
        let check = ar_formula_check(
            &Representation::dual_regular(&a),
            &Representation::regular(&a),
        )
        .unwrap();
        assert_eq!((check.ext, check.stable_hom), (0, 0));
    }
}
