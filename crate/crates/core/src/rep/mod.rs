//! Modules over a bound quiver algebra, as quiver representations.
//!
//! A right module `M` is stored as one vector space per vertex and one
//! matrix per arrow `a: i -> j`, mapping `M_i` to `M_j` (so the matrix has
//! `dim M_j` rows). A path `a*b` acts by `M_b * M_a`.

mod decompose;
mod hom;
mod structure;

use std::fmt;
use std::sync::Arc;

use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Matrix, Scalar};
use crate::quiver::Path;

pub use decompose::{
    decompose, decompose_using, decompose_with, indecomposables_isomorphic, is_isomorphic,
    remove_projective_summands, standard_locals, DecomposedClass, DecompositionResult, LocalEndo,
    SummandWitness,
};
pub use hom::{hom_basis, hom_dim, morphisms_rank};
pub use structure::{
    is_injective, is_projective, omega, projective_cover, radical, socle, syzygy, top,
    ProjectiveCover, Syzygy,
};

struct RepInner {
    algebra: Arc<BoundQuiverAlgebra>,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

/// A finite-dimensional representation of a bound quiver. Cloning is cheap.
#[derive(Clone)]
pub struct Representation {
    inner: Arc<RepInner>,
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        self.same_algebra(other) && self.dims() == other.dims() && self.maps() == other.maps()
    }
}

impl Eq for Representation {}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Representation(dim {:?}", self.dims())?;
        for (a, m) in self.algebra().quiver().arrows().iter().zip(self.maps()) {
            if !m.is_zero() {
                write!(f, ", {}={}", a.name, m)?;
            }
        }
        write!(f, ")")
    }
}

pub(crate) fn same_algebra(a: &Arc<BoundQuiverAlgebra>, b: &Arc<BoundQuiverAlgebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Representation {
    /// Checks matrix shapes and that every relation acts as zero.
    pub fn new(
        algebra: Arc<BoundQuiverAlgebra>,
        dims: Vec<usize>,
        maps: Vec<Matrix>,
    ) -> Result<Self> {
        let rep = Self::from_parts(algebra, dims, maps)?;
        rep.validate()?;
        Ok(rep)
    }

    /// Checks shapes only.
    pub(crate) fn from_parts(
        algebra: Arc<BoundQuiverAlgebra>,
        dims: Vec<usize>,
        maps: Vec<Matrix>,
    ) -> Result<Self> {
        let q = algebra.quiver();
        if dims.len() != q.vertex_count() || maps.len() != q.arrows().len() {
            return Err(Error::InvalidRepresentation(format!(
                "expected {} dimensions and {} maps",
                q.vertex_count(),
                q.arrows().len()
            )));
        }
        for (a, m) in q.arrows().iter().zip(&maps) {
            if m.shape() != (dims[a.target], dims[a.source]) {
                return Err(Error::InvalidRepresentation(format!(
                    "map for arrow {} has shape {:?}, expected {:?}",
                    a.name,
                    m.shape(),
                    (dims[a.target], dims[a.source])
                )));
            }
            if m.field() != algebra.field() {
                return Err(Error::InvalidRepresentation(format!(
                    "map for arrow {} is over the wrong field",
                    a.name
                )));
            }
        }
        Ok(Representation {
            inner: Arc::new(RepInner {
                algebra,
                dims,
                maps,
            }),
        })
    }

    pub fn validate(&self) -> Result<()> {
        let alg = self.algebra();
        for r in alg.zero_relations() {
            let (s, t) = (r.terms[0].1.source(), r.terms[0].1.target());
            let mut sum = Matrix::zeros(alg.field(), self.dims()[t], self.dims()[s]);
            for (c, p) in &r.terms {
                sum = sum.add(&self.path_matrix(p).scale(c));
            }
            if !sum.is_zero() {
                return Err(Error::InvalidRepresentation(format!(
                    "relation {} does not act as zero",
                    r.display(alg.quiver())
                )));
            }
        }
        Ok(())
    }

    pub fn zero(algebra: Arc<BoundQuiverAlgebra>) -> Self {
        let n = algebra.vertex_count();
        let f = algebra.field();
        let maps = algebra
            .quiver()
            .arrows()
            .iter()
            .map(|_| Matrix::zeros(f, 0, 0))
            .collect();
        Self::from_parts(algebra, vec![0; n], maps).expect("zero module")
    }

    pub fn algebra(&self) -> &Arc<BoundQuiverAlgebra> {
        &self.inner.algebra
    }

    pub fn field(&self) -> FieldSpec {
        self.inner.algebra.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.inner.dims
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.inner.maps
    }

    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.inner.maps[arrow]
    }

    pub fn total_dim(&self) -> usize {
        self.inner.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn same_algebra(&self, other: &Representation) -> bool {
        same_algebra(self.algebra(), other.algebra())
    }

    pub(crate) fn check_same_algebra(&self, other: &Representation) -> Result<()> {
        if self.same_algebra(other) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// The same module re-attached to a structurally equal algebra handle.
    pub fn rehome(&self, algebra: &Arc<BoundQuiverAlgebra>) -> Result<Representation> {
        if !same_algebra(self.algebra(), algebra) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(Representation {
            inner: Arc::new(RepInner {
                algebra: algebra.clone(),
                dims: self.inner.dims.clone(),
                maps: self.inner.maps.clone(),
            }),
        })
    }

    /// Matrix by which a path acts, from the source vertex space to the target one.
    pub fn path_matrix(&self, p: &Path) -> Matrix {
        let f = self.field();
        let mut m = Matrix::identity(f, self.dims()[p.source()]);
        for &a in p.arrows() {
            m = self.map(a).mul(&m);
        }
        m
    }

    /// `v . p` for a vector `v` at the source of `p`.
    pub fn act_path(&self, p: &Path, v: &[Scalar]) -> Vec<Scalar> {
        let mut x = v.to_vec();
        for &a in p.arrows() {
            x = self.map(a).mul_vec(&x);
        }
        x
    }

    /// The simple module at vertex `i`.
    pub fn simple(algebra: &Arc<BoundQuiverAlgebra>, i: usize) -> Result<Self> {
        algebra.check_vertex(i)?;
        let mut dims = vec![0; algebra.vertex_count()];
        dims[i] = 1;
        let f = algebra.field();
        let maps = algebra
            .quiver()
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(f, dims[a.target], dims[a.source]))
            .collect();
        Self::from_parts(algebra.clone(), dims, maps)
    }

    /// The indecomposable projective `e_i A`, with basis the basis paths starting at `i`.
    pub fn indec_projective(algebra: &Arc<BoundQuiverAlgebra>, i: usize) -> Result<Self> {
        algebra.check_vertex(i)?;
        let a = algebra;
        let f = a.field();
        let n = a.vertex_count();
        let dims: Vec<usize> = (0..n).map(|w| a.basis_between(i, w).len()).collect();
        let maps = a
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(id, arr)| {
                let src = a.basis_between(i, arr.source);
                let tgt = a.basis_between(i, arr.target);
                let mut m = Matrix::zeros(f, tgt.len(), src.len());
                let ae = a.arrow_element(id);
                for (c, &p) in src.iter().enumerate() {
                    for (k, coef) in a.basis_product(p, ae) {
                        let r = tgt
                            .iter()
                            .position(|x| x == k)
                            .expect("product stays in e_i A");
                        m[(r, c)] = coef.clone();
                    }
                }
                m
            })
            .collect();
        Self::from_parts(algebra.clone(), dims, maps)
    }

    /// The indecomposable injective with socle at `i`: the dual of the
    /// projective at `i` over the opposite algebra.
    pub fn indec_injective(algebra: &Arc<BoundQuiverAlgebra>, i: usize) -> Result<Self> {
        algebra.check_vertex(i)?;
        let op = Arc::new(algebra.opposite());
        Representation::indec_projective(&op, i)?
            .dual()
            .rehome(algebra)
    }

    /// The right regular module `A_A`.
    pub fn regular(algebra: &Arc<BoundQuiverAlgebra>) -> Self {
        let parts: Vec<_> = (0..algebra.vertex_count())
            .map(|i| Representation::indec_projective(algebra, i).expect("vertex in range"))
            .collect();
        direct_sum(algebra, &parts).module
    }

    /// `D(A_A)`, the direct sum of the indecomposable injectives.
    pub fn dual_regular(algebra: &Arc<BoundQuiverAlgebra>) -> Self {
        let parts: Vec<_> = (0..algebra.vertex_count())
            .map(|i| Representation::indec_injective(algebra, i).expect("vertex in range"))
            .collect();
        direct_sum(algebra, &parts).module
    }

    /// The vector-space dual, a module over the opposite algebra.
    pub fn dual(&self) -> Representation {
        let op = Arc::new(self.algebra().opposite());
        self.dual_over(op)
    }

    pub(crate) fn dual_over(&self, op: Arc<BoundQuiverAlgebra>) -> Representation {
        let maps = self.maps().iter().map(Matrix::transpose).collect();
        Representation::from_parts(op, self.dims().to_vec(), maps).expect("dual shapes")
    }

    /// `M^k`.
    pub fn power(&self, k: usize) -> Representation {
        direct_sum(self.algebra(), &vec![self.clone(); k]).module
    }

    /// `self ⊕ other`.
    pub fn oplus(&self, other: &Representation) -> Result<Representation> {
        self.check_same_algebra(other)?;
        Ok(direct_sum(self.algebra(), &[self.clone(), other.clone()]).module)
    }

    pub fn identity(&self) -> Morphism {
        let f = self.field();
        Morphism::from_blocks(
            self.clone(),
            self.clone(),
            self.dims()
                .iter()
                .map(|&d| Matrix::identity(f, d))
                .collect(),
        )
    }
}

/// A direct sum with its structure maps.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub module: Representation,
    pub injections: Vec<Morphism>,
    pub projections: Vec<Morphism>,
}

/// Direct sum of modules over the same algebra (the algebra handle of the
/// result is `algebra`).
pub fn direct_sum(algebra: &Arc<BoundQuiverAlgebra>, parts: &[Representation]) -> DirectSum {
    let f = algebra.field();
    let n = algebra.vertex_count();
    let q = algebra.quiver();
    let dims: Vec<usize> = (0..n)
        .map(|v| parts.iter().map(|p| p.dims()[v]).sum())
        .collect();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(id, _)| {
            let blocks: Vec<Matrix> = parts.iter().map(|p| p.map(id).clone()).collect();
            Matrix::block_diag(f, &blocks)
        })
        .collect();
    let module =
        Representation::from_parts(algebra.clone(), dims.clone(), maps).expect("sum shapes");
    let mut offsets = vec![0usize; n];
    let mut injections = Vec::new();
    let mut projections = Vec::new();
    for p in parts {
        let mut inj = Vec::new();
        let mut proj = Vec::new();
        for v in 0..n {
            let mut i = Matrix::zeros(f, dims[v], p.dims()[v]);
            let mut pr = Matrix::zeros(f, p.dims()[v], dims[v]);
            for k in 0..p.dims()[v] {
                i[(offsets[v] + k, k)] = f.one();
                pr[(k, offsets[v] + k)] = f.one();
            }
            offsets[v] += p.dims()[v];
            inj.push(i);
            proj.push(pr);
        }
        injections.push(Morphism::from_blocks(p.clone(), module.clone(), inj));
        projections.push(Morphism::from_blocks(module.clone(), p.clone(), proj));
    }
    DirectSum {
        module,
        injections,
        projections,
    }
}

/// A module homomorphism, one matrix per vertex.
#[derive(Clone)]
pub struct Morphism {
    source: Representation,
    target: Representation,
    blocks: Vec<Matrix>,
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Morphism(")?;
        for (v, b) in self.blocks.iter().enumerate() {
            if v > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}: {}", v + 1, b)?;
        }
        write!(f, ")")
    }
}

impl PartialEq for Morphism {
    fn eq(&self, other: &Self) -> bool {
        self.blocks == other.blocks && self.source == other.source && self.target == other.target
    }
}

impl Morphism {
    /// Checks shapes and the intertwining condition.
    pub fn new(
        source: Representation,
        target: Representation,
        blocks: Vec<Matrix>,
    ) -> Result<Self> {
        source.check_same_algebra(&target)?;
        let n = source.algebra().vertex_count();
        if blocks.len() != n {
            return Err(Error::InvalidMorphism(format!("expected {n} blocks")));
        }
        for v in 0..n {
            if blocks[v].shape() != (target.dims()[v], source.dims()[v]) {
                return Err(Error::InvalidMorphism(format!(
                    "block {} has the wrong shape",
                    v + 1
                )));
            }
        }
        let m = Morphism::from_blocks(source, target, blocks);
        if !m.is_homomorphism() {
            return Err(Error::InvalidMorphism(
                "blocks do not commute with the arrows".into(),
            ));
        }
        Ok(m)
    }

    pub(crate) fn from_blocks(
        source: Representation,
        target: Representation,
        blocks: Vec<Matrix>,
    ) -> Self {
        Morphism {
            source,
            target,
            blocks,
        }
    }

    pub fn zero(source: &Representation, target: &Representation) -> Self {
        let f = source.field();
        let blocks = source
            .dims()
            .iter()
            .zip(target.dims())
            .map(|(&s, &t)| Matrix::zeros(f, t, s))
            .collect();
        Morphism::from_blocks(source.clone(), target.clone(), blocks)
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    pub fn blocks(&self) -> &[Matrix] {
        &self.blocks
    }

    pub fn block(&self, v: usize) -> &Matrix {
        &self.blocks[v]
    }

    pub fn is_homomorphism(&self) -> bool {
        self.source
            .algebra()
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .all(|(id, a)| {
                self.target.map(id).mul(&self.blocks[a.source])
                    == self.blocks[a.target].mul(self.source.map(id))
            })
    }

    /// `self ∘ g`: first `g`, then `self`.
    pub fn compose(&self, g: &Morphism) -> Morphism {
        debug_assert_eq!(g.target.dims(), self.source.dims());
        let blocks = self
            .blocks
            .iter()
            .zip(&g.blocks)
            .map(|(a, b)| a.mul(b))
            .collect();
        Morphism::from_blocks(g.source.clone(), self.target.clone(), blocks)
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a.add(b))
            .collect();
        Morphism::from_blocks(self.source.clone(), self.target.clone(), blocks)
    }

    pub fn sub(&self, other: &Morphism) -> Morphism {
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a.sub(b))
            .collect();
        Morphism::from_blocks(self.source.clone(), self.target.clone(), blocks)
    }

    pub fn scale(&self, s: &Scalar) -> Morphism {
        let blocks = self.blocks.iter().map(|a| a.scale(s)).collect();
        Morphism::from_blocks(self.source.clone(), self.target.clone(), blocks)
    }

    /// `Σ c_i f_i`; all `f_i` share source and target.
    pub fn linear_combination(
        source: &Representation,
        target: &Representation,
        terms: &[(Scalar, &Morphism)],
    ) -> Morphism {
        let mut acc = Morphism::zero(source, target);
        for (c, f) in terms {
            if !c.is_zero() {
                acc = acc.add(&f.scale(c));
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(Matrix::rank).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.total_dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.total_dim()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.source.dims() == self.target.dims() && self.is_injective()
    }

    pub fn inverse(&self) -> Option<Morphism> {
        if !self.is_isomorphism() {
            return None;
        }
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.inverse())
            .collect::<Option<Vec<_>>>()?;
        Some(Morphism::from_blocks(
            self.target.clone(),
            self.source.clone(),
            blocks,
        ))
    }

    /// Row-major entries of the blocks, concatenated in vertex order.
    pub fn to_vector(&self) -> Vec<Scalar> {
        self.blocks
            .iter()
            .flat_map(|b| b.entries().iter().cloned())
            .collect()
    }

    pub fn from_vector(source: &Representation, target: &Representation, v: &[Scalar]) -> Morphism {
        let f = source.field();
        let mut pos = 0;
        let blocks = source
            .dims()
            .iter()
            .zip(target.dims())
            .map(|(&s, &t)| {
                let b = Matrix::from_vec(f, t, s, v[pos..pos + s * t].to_vec());
                pos += s * t;
                b
            })
            .collect();
        Morphism::from_blocks(source.clone(), target.clone(), blocks)
    }

    /// `D(f): D(target) -> D(source)` over the opposite algebra.
    pub fn dual(&self) -> Morphism {
        let op = Arc::new(self.source.algebra().opposite());
        self.dual_over(op)
    }

    pub(crate) fn dual_over(&self, op: Arc<BoundQuiverAlgebra>) -> Morphism {
        let s = self.target.dual_over(op.clone());
        let t = self.source.dual_over(op);
        Morphism::from_blocks(s, t, self.blocks.iter().map(Matrix::transpose).collect())
    }

    /// Replaces source and target by equal modules (e.g. re-homed ones).
    pub fn with_ends(&self, source: &Representation, target: &Representation) -> Morphism {
        debug_assert_eq!(source.dims(), self.source.dims());
        debug_assert_eq!(target.dims(), self.target.dims());
        Morphism::from_blocks(source.clone(), target.clone(), self.blocks.clone())
    }

    /// Kernel as a submodule of the source.
    pub fn kernel(&self) -> (Representation, Morphism) {
        let bases = self.blocks.iter().map(Matrix::kernel_basis).collect();
        submodule(&self.source, bases).expect("kernels are submodules")
    }

    /// Image as a submodule of the target.
    pub fn image(&self) -> (Representation, Morphism) {
        let bases = self.blocks.iter().map(Matrix::column_space).collect();
        submodule(&self.target, bases).expect("images are submodules")
    }

    pub fn cokernel(&self) -> (Representation, Morphism) {
        let bases: Vec<Matrix> = self.blocks.iter().map(Matrix::column_space).collect();
        quotient(&self.target, &bases)
    }

    /// `h` with `mono ∘ h = self`, when the image of `self` lies in the image of `mono`.
    pub fn factor_through_mono(&self, mono: &Morphism) -> Option<Morphism> {
        let mut blocks = Vec::new();
        for (b, m) in self.blocks.iter().zip(&mono.blocks) {
            blocks.push(m.solve_matrix(b).ok().flatten()?);
        }
        Some(Morphism::from_blocks(
            self.source.clone(),
            mono.source.clone(),
            blocks,
        ))
    }

    /// The map `coker -> Z` induced by `self: Y -> Z`, given the quotient
    /// map `q: Y -> coker`; `self` must vanish on the kernel of `q`.
    pub fn factor_through_epi(&self, epi: &Morphism) -> Option<Morphism> {
        let mut blocks = Vec::new();
        for (b, q) in self.blocks.iter().zip(&epi.blocks) {
            let x = q.transpose().solve_matrix(&b.transpose()).ok().flatten()?;
            blocks.push(x.transpose());
        }
        Some(Morphism::from_blocks(
            epi.target.clone(),
            self.target.clone(),
            blocks,
        ))
    }
}

/// The submodule spanned at each vertex by the columns of `bases[v]`
/// (assumed independent), with its inclusion.
pub fn submodule(m: &Representation, bases: Vec<Matrix>) -> Result<(Representation, Morphism)> {
    let alg = m.algebra();
    let f = m.field();
    let dims: Vec<usize> = bases.iter().map(Matrix::cols).collect();
    let mut maps = Vec::new();
    for (id, a) in alg.quiver().arrows().iter().enumerate() {
        let img = m.map(id).mul(&bases[a.source]);
        let x = if dims[a.source] == 0 {
            Matrix::zeros(f, dims[a.target], 0)
        } else {
            bases[a.target].solve_matrix(&img)?.ok_or_else(|| {
                Error::InvalidRepresentation("subspaces are not closed under the arrows".into())
            })?
        };
        maps.push(x);
    }
    let sub = Representation::from_parts(alg.clone(), dims, maps)?;
    let inc = Morphism::from_blocks(sub.clone(), m.clone(), bases);
    Ok((sub, inc))
}

/// `m / U` for a submodule given by spanning columns, with the projection.
pub fn quotient(m: &Representation, bases: &[Matrix]) -> (Representation, Morphism) {
    let alg = m.algebra();
    let qs: Vec<Matrix> = bases.iter().map(Matrix::left_kernel).collect();
    let rs: Vec<Matrix> = qs
        .iter()
        .map(|q| q.right_inverse().expect("left kernel has full row rank"))
        .collect();
    let dims: Vec<usize> = qs.iter().map(Matrix::rows).collect();
    let maps = alg
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(id, a)| qs[a.target].mul(m.map(id)).mul(&rs[a.source]))
        .collect();
    let quot = Representation::from_parts(alg.clone(), dims, maps).expect("quotient shapes");
    let proj = Morphism::from_blocks(m.clone(), quot.clone(), qs);
    (quot, proj)
}

/// The projective `⊕ P_v` (one summand per entry of `vertices`) with the
/// morphism sending the generator `e_v` of the `k`-th summand to
/// `generators[k]`, a vector in `target` at vertex `vertices[k]`.
pub fn morphism_from_projectives(
    vertices: &[usize],
    generators: &[Vec<Scalar>],
    target: &Representation,
) -> Morphism {
    let alg = target.algebra();
    let f = alg.field();
    let n = alg.vertex_count();
    let parts: Vec<Representation> = vertices
        .iter()
        .map(|&v| Representation::indec_projective(alg, v).expect("vertex in range"))
        .collect();
    let source = direct_sum(alg, &parts).module;
    let mut blocks = Vec::new();
    for w in 0..n {
        let mut cols = Vec::new();
        for (&v, y) in vertices.iter().zip(generators) {
            for &p in alg.basis_between(v, w) {
                cols.push(target.act_path(&alg.basis()[p], y));
            }
        }
        blocks.push(Matrix::from_columns(f, target.dims()[w], &cols));
    }
    Morphism::from_blocks(source, target.clone(), blocks)
}

/// The direct sum of indecomposable projectives at the given vertices.
pub fn projective_sum(algebra: &Arc<BoundQuiverAlgebra>, vertices: &[usize]) -> Representation {
    let parts: Vec<Representation> = vertices
        .iter()
        .map(|&v| Representation::indec_projective(algebra, v).expect("vertex in range"))
        .collect();
    direct_sum(algebra, &parts).module
}

/// For a morphism between sums of indecomposable projectives, the algebra
/// element (in `e_{v_i} A e_{w_j}`) by which the `j`-th source generator
/// lands in the `i`-th target summand.
pub fn projective_map_entries(
    f: &Morphism,
    source_vertices: &[usize],
    target_vertices: &[usize],
) -> Vec<Vec<Vec<Scalar>>> {
    let alg = f.source().algebra().clone();
    let field = alg.field();
    let n = alg.vertex_count();
    // offset of each summand's block at each vertex
    let offsets = |vs: &[usize]| -> Vec<Vec<usize>> {
        let mut cur = vec![0usize; n];
        vs.iter()
            .map(|&v| {
                let o = cur.clone();
                for w in 0..n {
                    cur[w] += alg.basis_between(v, w).len();
                }
                o
            })
            .collect()
    };
    let so = offsets(source_vertices);
    let to = offsets(target_vertices);
    let mut out =
        vec![vec![vec![field.zero(); alg.dim()]; source_vertices.len()]; target_vertices.len()];
    for (j, &w) in source_vertices.iter().enumerate() {
        // generator e_w is the first basis path of P_w at w
        let col = so[j][w];
        for (i, &v) in target_vertices.iter().enumerate() {
            for (k, &p) in alg.basis_between(v, w).iter().enumerate() {
                out[i][j][p] = f.block(w)[(to[i][w] + k, col)].clone();
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn flagship() -> Arc<BoundQuiverAlgebra> {
        Arc::new(fixtures::flagship_algebra(FieldSpec::Rationals))
    }

    #[test]
    fn standard_modules_of_flagship_algebra() {
        let a = flagship();
        assert_eq!(Representation::simple(&a, 1).unwrap().dims(), &[0, 1, 0]);
        let p2 = Representation::indec_projective(&a, 1).unwrap();
        assert_eq!(p2.dims(), &[1, 1, 1]);
        p2.validate().unwrap();
        let i2 = Representation::indec_injective(&a, 1).unwrap();
        assert_eq!(i2.dims(), &[1, 1, 1]);
        i2.validate().unwrap();
        assert_eq!(
            Representation::indec_projective(&a, 0).unwrap().dims(),
            &[1, 1, 0]
        );
        assert_eq!(
            Representation::indec_injective(&a, 0).unwrap().dims(),
            &[1, 1, 0]
        );
        assert!(matches!(
            Representation::simple(&a, 3),
            Err(Error::VertexOutOfRange {
                vertex: 3,
                count: 3
            })
        ));
        assert_eq!(Representation::regular(&a).total_dim(), 7);
        assert_eq!(Representation::dual_regular(&a).total_dim(), 7);
    }

    #[test]
    fn dual_is_an_involution() {
        let a = flagship();
        let p2 = Representation::indec_projective(&a, 1).unwrap();
        let dd = p2.dual().dual().rehome(&a).unwrap();
        assert_eq!(dd, p2);
        let s = Representation::simple(&a, 2).unwrap();
        let op = Arc::new(a.opposite());
        assert_eq!(
            s.dual().rehome(&op).unwrap(),
            Representation::simple(&op, 2).unwrap()
        );
    }

    #[test]
    fn invalid_representation_rejected() {
        let a = flagship();
        let f = a.field();
        let one = Matrix::identity(f, 1);
        let z = |r, c| Matrix::zeros(f, r, c);
        let res = Representation::new(
            a.clone(),
            vec![1, 1, 0],
            vec![one.clone(), one, z(0, 1), z(1, 0)],
        );
        assert!(matches!(res, Err(Error::InvalidRepresentation(_))));
    }

    #[test]
    fn projective_map_entries_round_trip() {
        let a = flagship();
        let p1 = Representation::indec_projective(&a, 0).unwrap();
        // P_2 -> P_1 sending e_2 to alpha
        let g = vec![p1.act_path(
            &a.quiver().path_from_names(&["alpha"]).unwrap(),
            &[a.field().one()],
        )];
        let f = morphism_from_projectives(&[1], &g, &p1);
        assert!(f.is_homomorphism());
        let e = projective_map_entries(&f, &[1], &[0]);
        let alpha = a.arrow_element(0);
        assert!(e[0][0][alpha].is_one());
    }
}
