//! Krull-Schmidt decomposition with explicit split maps.
//!
//! A module `X` is certified indecomposable when `End(X) = k·id ⊕ R` with
//! `R` a nilpotent ideal; the residue map `End(X) -> k` then tells whether
//! a composite `X -> M -> X` is invertible. Summands are split off one at a
//! time from a list of candidate indecomposables; whatever remains is split
//! with Fitting's lemma.

use std::sync::Arc;

use super::{direct_sum, hom_basis, is_projective, submodule, Morphism, Representation};
use crate::error::{Error, Result};
use crate::linalg::poly::{krylov_min_poly, roots};
use crate::linalg::{rank_of_vectors, Matrix, Scalar};

fn first_vertex(x: &Representation) -> Option<usize> {
    x.dims().iter().position(|&d| d > 0)
}

/// The unique eigenvalue of `b` seen from the first standard basis vector,
/// if the local minimal polynomial is a power of a linear factor.
fn single_eigenvalue(b: &Matrix) -> Option<Scalar> {
    let f = b.field();
    let mut u = vec![f.zero(); b.rows()];
    u[0] = f.one();
    let mp = krylov_min_poly(b, &u);
    let s = mp.len() - 1;
    let ks = f.from_i64(s as i64);
    let lambda = if ks.is_zero() {
        let r = roots(f, &mp)?;
        if r.len() != 1 {
            return None;
        }
        r.into_iter().next()?
    } else {
        // (t - λ)^s has t^{s-1}-coefficient -sλ
        &(-&mp[s - 1]) / &ks
    };
    let shifted = b.sub(&Matrix::identity(f, b.rows()).scale(&lambda));
    let mut v = u;
    for _ in 0..s {
        v = shifted.mul_vec(&v);
    }
    v.iter().all(Scalar::is_zero).then_some(lambda)
}

fn is_nilpotent(m: &Morphism) -> bool {
    m.blocks().iter().all(|b| {
        let mut p = b.clone();
        for _ in 1..b.rows().max(1) {
            p = p.mul(b);
        }
        p.is_zero()
    })
}

/// A module certified to have local endomorphism ring with residue field `k`.
#[derive(Clone, Debug)]
pub struct LocalEndo {
    module: Representation,
    vertex: usize,
}

impl LocalEndo {
    /// `Ok(None)` when `x` is zero, decomposable, or has a residue field
    /// larger than `k`.
    pub fn certify(x: &Representation) -> Result<Option<LocalEndo>> {
        let Some(vertex) = first_vertex(x) else {
            return Ok(None);
        };
        let f = x.field();
        let id = x.identity();
        let mut rad = Vec::new();
        for phi in hom_basis(x, x)? {
            let Some(l) = single_eigenvalue(phi.block(vertex)) else {
                return Ok(None);
            };
            let n = phi.sub(&id.scale(&l));
            if !is_nilpotent(&n) {
                return Ok(None);
            }
            if !n.is_zero() {
                rad.push(n);
            }
        }
        let len: usize = x.dims().iter().map(|d| d * d).sum();
        let vecs: Vec<_> = rad.iter().map(Morphism::to_vector).collect();
        let r = rank_of_vectors(f, len, &vecs);
        // R·R ⊆ R, then R^k = 0 for some k
        let mut power = rad.clone();
        for step in 0..=x.total_dim() {
            let prods: Vec<Morphism> = rad
                .iter()
                .flat_map(|a| power.iter().map(move |b| a.compose(b)))
                .filter(|p| !p.is_zero())
                .collect();
            if prods.is_empty() {
                return Ok(Some(LocalEndo {
                    module: x.clone(),
                    vertex,
                }));
            }
            let pv: Vec<_> = prods.iter().map(Morphism::to_vector).collect();
            if step == 0 {
                let mut all = vecs.clone();
                all.extend(pv.iter().cloned());
                if rank_of_vectors(f, len, &all) != r {
                    return Ok(None);
                }
            }
            let basis = Matrix::from_columns(f, len, &pv).column_space();
            power = basis
                .columns()
                .iter()
                .map(|v| Morphism::from_vector(x, x, v))
                .collect();
        }
        Ok(None)
    }

    pub fn module(&self) -> &Representation {
        &self.module
    }

    pub(crate) fn rehome(&self, alg: &Arc<crate::algebra::BoundQuiverAlgebra>) -> LocalEndo {
        LocalEndo {
            module: self.module.rehome(alg).expect("same algebra"),
            vertex: self.vertex,
        }
    }

    /// Image of an endomorphism in the residue field.
    pub fn residue(&self, phi: &Morphism) -> Scalar {
        self.residue_of_block(phi.block(self.vertex))
    }

    fn residue_of_block(&self, b: &Matrix) -> Scalar {
        single_eigenvalue(b).expect("endomorphisms of a local module have one eigenvalue")
    }

    /// Some `f: X -> M`, `g: M -> X` with `g ∘ f = id`, if `X` is a summand of `m`.
    pub fn split_into(&self, m: &Representation) -> Result<Option<(Morphism, Morphism)>> {
        let x = &self.module;
        if x.dims().iter().zip(m.dims()).any(|(a, b)| a > b) {
            return Ok(None);
        }
        let fs = hom_basis(x, m)?;
        if fs.is_empty() {
            return Ok(None);
        }
        let gs = hom_basis(m, x)?;
        let v = self.vertex;
        for f in &fs {
            for g in &gs {
                let b = g.block(v).mul(f.block(v));
                if self.residue_of_block(&b).is_zero() {
                    continue;
                }
                let u = g.compose(f);
                let ui = u.inverse().expect("unit of a local ring");
                return Ok(Some((f.clone(), ui.compose(g))));
            }
        }
        Ok(None)
    }
}

/// An isomorphism `x -> y`, given that `x` is certified local.
pub fn indecomposables_isomorphic(x: &LocalEndo, y: &Representation) -> Result<Option<Morphism>> {
    if x.module.dims() != y.dims() {
        return Ok(None);
    }
    Ok(x.split_into(y)?.map(|(f, _)| f))
}

/// Structure maps of one summand: `projection ∘ inclusion = id`.
#[derive(Clone, Debug)]
pub struct SummandWitness {
    pub inclusion: Morphism,
    pub projection: Morphism,
}

/// One isomorphism class of indecomposable summands and its copies.
#[derive(Clone, Debug)]
pub struct DecomposedClass {
    pub module: Representation,
    pub local: LocalEndo,
    pub copies: Vec<SummandWitness>,
}

impl DecomposedClass {
    pub fn multiplicity(&self) -> usize {
        self.copies.len()
    }
}

#[derive(Clone, Debug)]
pub struct DecompositionResult {
    pub module: Representation,
    pub classes: Vec<DecomposedClass>,
}

impl DecompositionResult {
    pub fn summand_count(&self) -> usize {
        self.classes.iter().map(DecomposedClass::multiplicity).sum()
    }

    pub fn is_indecomposable(&self) -> bool {
        self.summand_count() == 1
    }

    pub fn is_basic(&self) -> bool {
        self.classes.iter().all(|c| c.multiplicity() == 1)
    }

    /// Whether `Σ inclusion ∘ projection` is the identity.
    pub fn witnesses_sum_to_identity(&self) -> bool {
        let mut acc = Morphism::zero(&self.module, &self.module);
        for c in &self.classes {
            for w in &c.copies {
                acc = acc.add(&w.inclusion.compose(&w.projection));
            }
        }
        acc == self.module.identity()
    }

    /// Index of the class isomorphic to `y`, if any.
    pub fn find_class(&self, y: &Representation) -> Result<Option<usize>> {
        for (i, c) in self.classes.iter().enumerate() {
            if indecomposables_isomorphic(&c.local, y)?.is_some() {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }
}

struct Piece {
    local: LocalEndo,
    inclusion: Morphism,
    projection: Morphism,
}

fn standard_candidates(alg: &Arc<crate::algebra::BoundQuiverAlgebra>) -> Vec<Representation> {
    let n = alg.vertex_count();
    let mut out = Vec::new();
    for i in 0..n {
        out.push(Representation::indec_projective(alg, i).expect("vertex in range"));
    }
    for i in 0..n {
        out.push(Representation::indec_injective(alg, i).expect("vertex in range"));
    }
    for i in 0..n {
        out.push(Representation::simple(alg, i).expect("vertex in range"));
    }
    out
}

/// Projection onto a complement `C` of the summand given by `f`, `g`.
fn complement(
    m: &Representation,
    f: &Morphism,
    g: &Morphism,
) -> (Representation, Morphism, Morphism) {
    let (c, inc) = g.kernel();
    let fm = m.field();
    let blocks = (0..m.dims().len())
        .map(|v| {
            let l = inc.block(v).left_inverse().expect("inclusion is injective");
            let e = Matrix::identity(fm, m.dims()[v]).sub(&f.block(v).mul(g.block(v)));
            l.mul(&e)
        })
        .collect();
    let proj = Morphism::from_blocks(m.clone(), c.clone(), blocks);
    (c, inc, proj)
}

fn fitting_split(x: &Representation, psi: &Morphism) -> Option<(Vec<Matrix>, Vec<Matrix>)> {
    let mut ks = Vec::new();
    let mut is = Vec::new();
    for b in psi.blocks() {
        let mut p = b.clone();
        for _ in 1..b.rows().max(1) {
            p = p.mul(b);
        }
        ks.push(p.kernel_basis());
        is.push(p.column_space());
    }
    let kd: usize = ks.iter().map(Matrix::cols).sum();
    (kd > 0 && kd < x.total_dim()).then_some((ks, is))
}

fn endo_candidates(basis: &[Morphism]) -> Vec<Morphism> {
    let mut out: Vec<Morphism> = basis.to_vec();
    for a in basis {
        for b in basis {
            out.push(a.compose(b));
        }
    }
    for (i, a) in basis.iter().enumerate() {
        for b in &basis[i + 1..] {
            out.push(a.add(b));
        }
    }
    out
}

fn eigenvalues(m: &Morphism) -> Vec<Scalar> {
    let f = m.source().field();
    let mut out: Vec<Scalar> = Vec::new();
    for b in m.blocks() {
        for k in 0..b.rows() {
            let mut u = vec![f.zero(); b.rows()];
            u[k] = f.one();
            for r in roots(f, &krylov_min_poly(b, &u)).unwrap_or_default() {
                if !out.contains(&r) {
                    out.push(r);
                }
            }
        }
    }
    out
}

/// Splits `x` into certified-local pieces with Fitting's lemma.
fn split_generic(x: &Representation) -> Result<Vec<Piece>> {
    if x.is_zero() {
        return Ok(Vec::new());
    }
    if let Some(local) = LocalEndo::certify(x)? {
        return Ok(vec![Piece {
            local,
            inclusion: x.identity(),
            projection: x.identity(),
        }]);
    }
    let id = x.identity();
    let basis = hom_basis(x, x)?;
    for phi in endo_candidates(&basis) {
        for l in eigenvalues(&phi) {
            let psi = phi.sub(&id.scale(&l));
            let Some((kb, ib)) = fitting_split(x, &psi) else {
                continue;
            };
            let f = x.field();
            let (k, k_inc) = submodule(x, kb.clone())?;
            let (i, i_inc) = submodule(x, ib.clone())?;
            let mut kp = Vec::new();
            let mut ip = Vec::new();
            for v in 0..x.dims().len() {
                let t = kb[v]
                    .hstack(&ib[v])
                    .inverse()
                    .expect("Fitting decomposition");
                let kd = kb[v].cols();
                kp.push(t.submatrix(0, kd, 0, t.cols()));
                ip.push(t.submatrix(kd, ib[v].cols(), 0, t.cols()));
                debug_assert_eq!(t.field(), f);
            }
            let k_proj = Morphism::from_blocks(x.clone(), k.clone(), kp);
            let i_proj = Morphism::from_blocks(x.clone(), i.clone(), ip);
            let mut out = Vec::new();
            for (sub, inc, proj) in [(k, k_inc, k_proj), (i, i_inc, i_proj)] {
                for p in split_generic(&sub)? {
                    out.push(Piece {
                        local: p.local,
                        inclusion: inc.compose(&p.inclusion),
                        projection: p.projection.compose(&proj),
                    });
                }
            }
            return Ok(out);
        }
    }
    Err(Error::DecompositionIncomplete(format!(
        "no splitting idempotent found for a module of dimension vector {:?}",
        x.dims()
    )))
}

/// Certified standard candidates: indecomposable projectives, injectives, simples.
pub fn standard_locals(alg: &Arc<crate::algebra::BoundQuiverAlgebra>) -> Result<Vec<LocalEndo>> {
    let mut out = Vec::new();
    for c in standard_candidates(alg) {
        if let Some(l) = LocalEndo::certify(&c)? {
            out.push(l);
        }
    }
    Ok(out)
}

/// Decomposes `m`, trying the indecomposable projectives, injectives and
/// simples as candidate summands first.
pub fn decompose(m: &Representation) -> Result<DecompositionResult> {
    decompose_with(m, &[])
}

/// Like [`decompose`], with extra candidate indecomposables tried first.
pub fn decompose_with(m: &Representation, extra: &[Representation]) -> Result<DecompositionResult> {
    let alg = m.algebra();
    let mut locals = Vec::new();
    for c in extra {
        m.check_same_algebra(c)?;
        if let Some(l) = LocalEndo::certify(&c.rehome(alg)?)? {
            locals.push(l);
        }
    }
    locals.extend(standard_locals(alg)?);
    decompose_using(m, &locals)
}

/// Decomposition trying the given certified candidates, in order, before
/// falling back to Fitting splittings.
pub fn decompose_using(
    m: &Representation,
    candidates: &[LocalEndo],
) -> Result<DecompositionResult> {
    let mut pieces: Vec<Piece> = Vec::new();
    let mut rem = m.clone();
    let mut rem_inc = m.identity();
    let mut rem_proj = m.identity();
    for local in candidates {
        m.check_same_algebra(local.module())?;
        if rem.is_zero() {
            break;
        }
        while let Some((f, g)) = local.split_into(&rem)? {
            let (c_mod, c_inc, c_proj) = complement(&rem, &f, &g);
            pieces.push(Piece {
                local: local.rehome(m.algebra()),
                inclusion: rem_inc.compose(&f),
                projection: g.compose(&rem_proj),
            });
            rem_inc = rem_inc.compose(&c_inc);
            rem_proj = c_proj.compose(&rem_proj);
            rem = c_mod;
        }
    }
    for p in split_generic(&rem)? {
        pieces.push(Piece {
            local: p.local,
            inclusion: rem_inc.compose(&p.inclusion),
            projection: p.projection.compose(&rem_proj),
        });
    }

    let mut classes: Vec<DecomposedClass> = Vec::new();
    'pieces: for p in pieces {
        for c in classes.iter_mut() {
            if let Some(sigma) = indecomposables_isomorphic(&c.local, p.local.module())? {
                let inv = sigma.inverse().expect("isomorphism");
                c.copies.push(SummandWitness {
                    inclusion: p.inclusion.compose(&sigma),
                    projection: inv.compose(&p.projection),
                });
                continue 'pieces;
            }
        }
        classes.push(DecomposedClass {
            module: p.local.module().clone(),
            local: p.local,
            copies: vec![SummandWitness {
                inclusion: p.inclusion,
                projection: p.projection,
            }],
        });
    }
    Ok(DecompositionResult {
        module: m.clone(),
        classes,
    })
}

/// `m` with all projective summands removed (up to isomorphism).
pub fn remove_projective_summands(m: &Representation) -> Result<Representation> {
    let d = decompose(m)?;
    let mut parts = Vec::new();
    for c in &d.classes {
        if !is_projective(&c.module) {
            for _ in 0..c.multiplicity() {
                parts.push(c.module.clone());
            }
        }
    }
    Ok(direct_sum(m.algebra(), &parts).module)
}

/// An isomorphism `m -> n`, or `None` if the modules are not isomorphic.
pub fn is_isomorphic(m: &Representation, n: &Representation) -> Result<Option<Morphism>> {
    m.check_same_algebra(n)?;
    if m.dims() != n.dims() {
        return Ok(None);
    }
    let n = &n.rehome(m.algebra())?;
    if m.is_zero() {
        return Ok(Some(Morphism::zero(m, n)));
    }
    let hs = hom_basis(m, n)?;
    if hs.is_empty() {
        return Ok(None);
    }
    let f = m.field();
    let probes = f.probe_values(7);
    let mut tries: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..hs.len() {
        let mut c = vec![f.zero(); hs.len()];
        c[i] = f.one();
        tries.push(c);
    }
    for s in 0..3u64 {
        // a fixed linear congruential sequence of coefficients
        let mut state = 0x9e37_79b9_7f4a_7c15u64.wrapping_mul(s + 1);
        let c = (0..hs.len())
            .map(|_| {
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                probes[(state >> 33) as usize % probes.len()].clone()
            })
            .collect();
        tries.push(c);
    }
    for c in tries {
        let terms: Vec<(Scalar, &Morphism)> = c.into_iter().zip(&hs).collect();
        let phi = Morphism::linear_combination(m, n, &terms);
        if phi.is_isomorphism() {
            return Ok(Some(phi));
        }
    }
    // exact comparison of decompositions
    let dm = decompose(m)?;
    let reps: Vec<Representation> = dm.classes.iter().map(|c| c.module.clone()).collect();
    let dn = decompose_with(n, &reps)?;
    if dm.classes.len() != dn.classes.len() {
        return Ok(None);
    }
    let mut iso = Morphism::zero(m, n);
    for cm in &dm.classes {
        let mut matched = false;
        for cn in &dn.classes {
            let Some(sigma) = indecomposables_isomorphic(&cm.local, &cn.module)? else {
                continue;
            };
            if cn.multiplicity() != cm.multiplicity() {
                return Ok(None);
            }
            for (wm, wn) in cm.copies.iter().zip(&cn.copies) {
                iso = iso.add(&wn.inclusion.compose(&sigma).compose(&wm.projection));
            }
            matched = true;
            break;
        }
        if !matched {
            return Ok(None);
        }
    }
    debug_assert!(iso.is_isomorphism());
    Ok(Some(iso))
}
