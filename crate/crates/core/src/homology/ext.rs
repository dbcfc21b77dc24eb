use super::resolution::min_proj_resolution;
use super::tracker::SyzygyTracker;
use crate::error::Result;
use crate::linalg::{Matrix, Scalar};
use crate::rep::{hom_basis, hom_dim, morphisms_rank, omega, Morphism, Representation, Syzygy};

/// `Ext^1(M, N)` realized as `Hom(Ω M, N)` modulo restrictions of maps `P_0 -> N`.
#[derive(Clone, Debug)]
pub struct Ext1 {
    pub syzygy: Syzygy,
    pub target: Representation,
    /// Maps `Ω M -> N` whose classes form a basis of `Ext^1(M, N)`.
    pub representatives: Vec<Morphism>,
    coboundaries: Vec<Morphism>,
}

impl Ext1 {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    /// Coordinates of the class of `f: Ω M -> N` in the representative basis.
    pub fn coordinates(&self, f: &Morphism) -> Vec<Scalar> {
        let field = self.target.field();
        let len = f.to_vector().len();
        let cols: Vec<Vec<Scalar>> = self
            .representatives
            .iter()
            .chain(&self.coboundaries)
            .map(Morphism::to_vector)
            .collect();
        let m = Matrix::from_columns(field, len, &cols);
        let x = m
            .solve(&f.to_vector())
            .expect("shapes agree")
            .expect("every map Ω M -> N has a class");
        x[..self.representatives.len()].to_vec()
    }
}

pub fn ext1(m: &Representation, n: &Representation) -> Result<Ext1> {
    m.check_same_algebra(n)?;
    let syz = omega(m);
    let restr: Vec<Morphism> = hom_basis(&syz.cover.module, n)?
        .iter()
        .map(|g| g.compose(&syz.inclusion))
        .collect();
    // a basis of the coboundaries
    let mut coboundaries: Vec<Morphism> = Vec::new();
    for r in restr {
        let mut trial = coboundaries.clone();
        trial.push(r.clone());
        if morphisms_rank(&trial) == trial.len() {
            coboundaries = trial;
        }
    }
    let mut span = coboundaries.clone();
    let mut representatives = Vec::new();
    for h in hom_basis(&syz.module, n)? {
        span.push(h.clone());
        if morphisms_rank(&span) == span.len() {
            representatives.push(h);
        } else {
            span.pop();
        }
    }
    Ok(Ext1 {
        syzygy: syz,
        target: n.clone(),
        representatives,
        coboundaries,
    })
}

/// `dim Ext^1(X, N)` from the cover of `X`.
fn ext1_dim(x: &Representation, n: &Representation) -> Result<usize> {
    let syz = omega(x);
    if syz.module.is_zero() {
        return Ok(0);
    }
    let restr: Vec<Morphism> = hom_basis(&syz.cover.module, n)?
        .iter()
        .map(|g| g.compose(&syz.inclusion))
        .collect();
    Ok(hom_dim(&syz.module, n)? - morphisms_rank(&restr))
}

/// `dim Ext^i(M, N)`; uses `Ext^i(M, N) = Ext^1(Ω^{i-1} M, N)` summand by summand.
pub fn ext_dim(i: usize, m: &Representation, n: &Representation) -> Result<usize> {
    m.check_same_algebra(n)?;
    if i == 0 {
        return hom_dim(m, n);
    }
    let mut t = SyzygyTracker::new(m.algebra())?;
    ext_dim_tracked(&mut t, i, m, n)
}

/// [`ext_dim`] reusing the syzygy classes already known to `tracker`.
pub fn ext_dim_tracked(
    tracker: &mut SyzygyTracker,
    i: usize,
    m: &Representation,
    n: &Representation,
) -> Result<usize> {
    if i == 0 {
        return hom_dim(m, n);
    }
    let seq = tracker.sequence(m, i - 1)?;
    let counts = &seq[i - 1];
    let n = n.rehome(tracker.algebra())?;
    let mut total = 0usize;
    for (c, &k) in counts.iter().enumerate() {
        if k == 0 || tracker.is_projective_class(c) {
            continue;
        }
        total += k as usize * ext1_dim(tracker.class_module(c), &n)?;
    }
    Ok(total)
}

/// `dim Ext^i(M, N)` as the cohomology of `Hom(P_•, N)` on an explicit
/// resolution of length `length` (at least `i + 1`).
pub fn ext_dim_explicit(
    i: usize,
    m: &Representation,
    n: &Representation,
    length: usize,
) -> Result<usize> {
    m.check_same_algebra(n)?;
    let res = min_proj_resolution(m, length.max(i + 1));
    let Some(pi) = res.terms.get(i) else {
        return Ok(0);
    };
    let hom_i = hom_dim(&pi.module, n)?;
    // rank of d_{i+1}^*: Hom(P_i, N) -> Hom(P_{i+1}, N)
    let out_rank = match res.differentials.get(i + 1) {
        Some(d) => {
            let imgs: Vec<Morphism> = hom_basis(&pi.module, n)?
                .iter()
                .map(|g| g.compose(d))
                .collect();
            morphisms_rank(&imgs)
        }
        None => 0,
    };
    // rank of d_i^*: Hom(P_{i-1}, N) -> Hom(P_i, N)
    let in_rank = if i == 0 {
        0
    } else {
        let d = &res.differentials[i];
        let imgs: Vec<Morphism> = hom_basis(&res.terms[i - 1].module, n)?
            .iter()
            .map(|g| g.compose(d))
            .collect();
        morphisms_rank(&imgs)
    };
    Ok(hom_i - out_rank - in_rank)
}
