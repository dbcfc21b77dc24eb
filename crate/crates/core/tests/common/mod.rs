#![allow(dead_code)]

use std::sync::{Arc, OnceLock};

use proptest::prelude::*;
use qrep_core::fixtures;
use qrep_core::rep::{morphism_from_projectives, projective_sum};
use qrep_core::{BoundQuiverAlgebra, FieldSpec, Matrix, Representation};

pub fn f5() -> FieldSpec {
    FieldSpec::prime(5).unwrap()
}

fn build_corpus(field: FieldSpec) -> Vec<Arc<BoundQuiverAlgebra>> {
    vec![
        Arc::new(fixtures::flagship_algebra(field)),
        Arc::new(fixtures::linear_a2(field)),
        Arc::new(fixtures::one_loop(field)),
        Arc::new(fixtures::commutative_square(field)),
        Arc::new(fixtures::kronecker(field)),
    ]
}

/// The bundled test algebras over `Q` or `F_5`.
pub fn corpus(rationals: bool) -> &'static [Arc<BoundQuiverAlgebra>] {
    static Q: OnceLock<Vec<Arc<BoundQuiverAlgebra>>> = OnceLock::new();
    static F5: OnceLock<Vec<Arc<BoundQuiverAlgebra>>> = OnceLock::new();
    if rationals {
        Q.get_or_init(|| build_corpus(FieldSpec::Rationals))
    } else {
        F5.get_or_init(|| build_corpus(f5()))
    }
}

/// Recipe for a module: `coker(⊕ P_rel -> ⊕ P_top)` with small integer
/// generator coordinates.
#[derive(Clone, Debug)]
pub struct ModuleCase {
    pub rationals: bool,
    pub algebra: usize,
    pub top: Vec<usize>,
    pub rel: Vec<usize>,
    pub coeffs: Vec<i64>,
}

impl ModuleCase {
    pub fn algebra(&self) -> &'static Arc<BoundQuiverAlgebra> {
        &corpus(self.rationals)[self.algebra]
    }

    pub fn build(&self) -> Representation {
        let a = self.algebra();
        let n = a.vertex_count();
        let top: Vec<usize> = self.top.iter().map(|v| v % n).collect();
        let rel: Vec<usize> = self.rel.iter().map(|v| v % n).collect();
        let p = projective_sum(a, &top);
        let mut k = 0;
        let mut next = || {
            let c = self.coeffs[k % self.coeffs.len()];
            k += 1;
            a.field().from_i64(c)
        };
        let gens: Vec<Vec<_>> = rel
            .iter()
            .map(|&w| (0..p.dims()[w]).map(|_| next()).collect())
            .collect();
        let f = morphism_from_projectives(&rel, &gens, &p);
        f.cokernel().0
    }
}

pub fn module_case(rationals: bool) -> impl Strategy<Value = ModuleCase> {
    (
        0..5usize,
        prop::collection::vec(0..6usize, 1..=3),
        prop::collection::vec(0..6usize, 0..=2),
        prop::collection::vec(-2i64..=2, 1..=12),
    )
        .prop_map(move |(algebra, top, rel, coeffs)| ModuleCase {
            rationals,
            algebra,
            top,
            rel,
            coeffs,
        })
}

/// A random matrix with small integer entries.
pub fn matrix_case(rationals: bool) -> impl Strategy<Value = Matrix> {
    (1..6usize, 1..6usize)
        .prop_flat_map(|(r, c)| (Just(r), Just(c), prop::collection::vec(-3i64..=3, r * c)))
        .prop_map(move |(r, c, v)| {
            let field = if rationals {
                FieldSpec::Rationals
            } else {
                f5()
            };
            Matrix::from_fn(field, r, c, |i, j| field.from_i64(v[i * c + j]))
        })
}

pub type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `dim Hom(P_i, X) = dim X_i = dim Hom(X, I_i)`.
pub fn check_hom_identities(case: &ModuleCase) -> Check {
    use qrep_core::rep::hom_dim;
    let a = case.algebra();
    let x = case.build();
    for i in 0..a.vertex_count() {
        let p = Representation::indec_projective(a, i).unwrap();
        let inj = Representation::indec_injective(a, i).unwrap();
        let d = x.dims()[i];
        let hp = hom_dim(&p, &x).map_err(|e| e.to_string())?;
        let hi = hom_dim(&x, &inj).map_err(|e| e.to_string())?;
        ensure(hp == d && hi == d, || {
            format!("vertex {i}: Hom(P,X)={hp}, Hom(X,I)={hi}, dim X_i={d}")
        })?;
    }
    Ok(())
}

/// `D` preserves dimension vectors, `DD X = X`, and `dim Hom(X, Y) = dim Hom(DY, DX)`.
pub fn check_duality(case: &ModuleCase, other: &ModuleCase) -> Check {
    use qrep_core::rep::hom_dim;
    let x = case.build();
    let y = ModuleCase {
        rationals: case.rationals,
        algebra: case.algebra,
        ..other.clone()
    }
    .build();
    let (dx, dy) = (x.dual(), y.dual());
    ensure(dx.dims() == x.dims(), || {
        "D changed the dimension vector".into()
    })?;
    let op = dx.algebra().clone();
    let dy = dy.rehome(&op).map_err(|e| e.to_string())?;
    let h = hom_dim(&x, &y).map_err(|e| e.to_string())?;
    let hd = hom_dim(&dy, &dx).map_err(|e| e.to_string())?;
    ensure(h == hd, || format!("Hom(X,Y)={h} but Hom(DY,DX)={hd}"))?;
    let ddx = dx.dual().rehome(x.algebra()).map_err(|e| e.to_string())?;
    ensure(ddx == x, || "DD X differs from X".into())
}

/// The computed minimal resolution is exact with differentials into the radical.
pub fn check_resolution(case: &ModuleCase) -> Check {
    use qrep_core::homology::min_proj_resolution;
    let x = case.build();
    let r = min_proj_resolution(&x, 3);
    ensure(r.verify(), || {
        format!("resolution of {:?} failed verification", x.dims())
    })
}

/// Splitting witnesses sum to the identity and the reassembled sum is isomorphic to `X`.
pub fn check_decomposition(case: &ModuleCase) -> Check {
    use qrep_core::rep::{decompose, direct_sum, is_isomorphic};
    use qrep_core::Error;
    let x = case.build();
    let d = match decompose(&x) {
        Ok(d) => d,
        // residue fields larger than k (e.g. Kronecker modules over Q with an
        // irreducible parameter) are outside the certified range
        Err(Error::DecompositionIncomplete(_)) if case.algebra == 4 => return Ok(()),
        Err(e) => return Err(e.to_string()),
    };
    ensure(d.witnesses_sum_to_identity(), || {
        "witnesses do not sum to the identity".into()
    })?;
    let parts: Vec<Representation> = d
        .classes
        .iter()
        .flat_map(|c| std::iter::repeat_n(c.module.clone(), c.multiplicity()))
        .collect();
    let sum = direct_sum(x.algebra(), &parts).module;
    let iso = is_isomorphic(&sum, &x).map_err(|e| e.to_string())?;
    ensure(iso.is_some(), || {
        format!("reassembled {:?} is not isomorphic", x.dims())
    })
}

/// `rank + nullity = columns`, the kernel is killed, and row reduction keeps the rank.
pub fn check_rank_nullity(m: &Matrix) -> Check {
    let k = m.kernel_basis();
    ensure(m.rank() + k.cols() == m.cols(), || {
        format!("rank {} + nullity {} != {}", m.rank(), k.cols(), m.cols())
    })?;
    ensure(k.cols() == 0 || m.mul(&k).is_zero(), || {
        "kernel vector not annihilated".into()
    })?;
    let (r, pivots) = m.rref();
    ensure(pivots.len() == m.rank() && r.rank() == m.rank(), || {
        "rref changed the rank".into()
    })?;
    ensure(m.transpose().rank() == m.rank(), || {
        "row rank differs from column rank".into()
    })
}
