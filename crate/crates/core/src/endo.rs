//! Endomorphism algebras and their presentations by quivers with relations.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{BoundQuiverAlgebra, DEFAULT_LEN_CAP};
use crate::error::{Error, Result};
use crate::format::write_alg;
use crate::linalg::{FieldSpec, Matrix, Scalar};
use crate::quiver::{enumerate_paths, Arrow, Path, Quiver, Relation, RelationSet};
use crate::rep::{decompose, direct_sum, hom_basis, Morphism, Representation};

/// A finite-dimensional algebra given by structure constants, with a
/// complete set of orthogonal idempotents.
///
/// For `endo_algebra(m)` the basis is a basis of `End(m)` and the product is
/// `x · y = y ∘ x`, so that paths, read left to right, compose like maps.
#[derive(Clone, Debug)]
pub struct AbstractAlgebra {
    field: FieldSpec,
    /// `table[i][j]`: coordinates of `b_i · b_j`.
    table: Vec<Vec<Vec<Scalar>>>,
    idempotents: Vec<Vec<Scalar>>,
    /// For each idempotent, the map to the residue field of its corner.
    residues: Vec<Vec<Scalar>>,
    /// Class index of the summand cut out by each idempotent.
    classes: Vec<usize>,
    summands: Vec<Representation>,
}

impl AbstractAlgebra {
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.table.len()
    }

    pub fn idempotents(&self) -> &[Vec<Scalar>] {
        &self.idempotents
    }

    /// The indecomposable summand corresponding to each idempotent.
    pub fn summands(&self) -> &[Representation] {
        &self.summands
    }

    /// Pairwise non-isomorphic summands.
    pub fn is_basic(&self) -> bool {
        let mut seen = self.classes.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim()];
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let c = xi * yj;
                for (k, t) in self.table[i][j].iter().enumerate() {
                    if !t.is_zero() {
                        out[k] += &(&c * t);
                    }
                }
            }
        }
        out
    }

    pub fn unit(&self) -> Vec<Scalar> {
        let mut u = vec![self.field.zero(); self.dim()];
        for e in &self.idempotents {
            for (a, b) in u.iter_mut().zip(e) {
                *a += b;
            }
        }
        u
    }

    /// Associativity on basis triples, unit, and orthogonality of the idempotents.
    pub fn check_axioms(&self) -> bool {
        let n = self.dim();
        let basis: Vec<Vec<Scalar>> = (0..n).map(|i| unit_vector(self.field, n, i)).collect();
        for x in &basis {
            for y in &basis {
                let xy = self.multiply(x, y);
                for z in &basis {
                    if self.multiply(&xy, z) != self.multiply(x, &self.multiply(y, z)) {
                        return false;
                    }
                }
            }
        }
        let u = self.unit();
        if basis
            .iter()
            .any(|x| self.multiply(&u, x) != *x || self.multiply(x, &u) != *x)
        {
            return false;
        }
        let zero = vec![self.field.zero(); n];
        for (i, e) in self.idempotents.iter().enumerate() {
            for (j, f) in self.idempotents.iter().enumerate() {
                let p = self.multiply(e, f);
                if (i == j && p != *e) || (i != j && p != zero) {
                    return false;
                }
            }
        }
        true
    }

    /// `e_i B e_j` as a matrix whose columns span it.
    fn corner(&self, i: usize, j: usize) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vec<Scalar>> = (0..n)
            .map(|k| {
                let x = unit_vector(self.field, n, k);
                self.multiply(
                    &self.multiply(&self.idempotents[i], &x),
                    &self.idempotents[j],
                )
            })
            .collect();
        Matrix::from_columns(self.field, n, &cols).column_space()
    }
}

fn unit_vector(field: FieldSpec, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

/// `End(m)` with idempotents from a decomposition of `m`.
pub fn endo_algebra(m: &Representation) -> Result<AbstractAlgebra> {
    let field = m.field();
    let basis = hom_basis(m, m)?;
    let len: usize = m.dims().iter().map(|d| d * d).sum();
    let vecs: Vec<Vec<Scalar>> = basis.iter().map(Morphism::to_vector).collect();
    let coords = Matrix::from_columns(field, len, &vecs)
        .left_inverse()
        .ok_or_else(|| Error::DimensionMismatch("hom basis is not independent".into()))?;
    let coordinates = |f: &Morphism| coords.mul_vec(&f.to_vector());
    let table = basis
        .iter()
        .map(|x| basis.iter().map(|y| coordinates(&y.compose(x))).collect())
        .collect();
    let d = decompose(m)?;
    let (mut idempotents, mut residues, mut classes, mut summands) =
        (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    for (ci, c) in d.classes.iter().enumerate() {
        for w in &c.copies {
            idempotents.push(coordinates(&w.inclusion.compose(&w.projection)));
            residues.push(
                basis
                    .iter()
                    .map(|x| {
                        c.local
                            .residue(&w.projection.compose(x).compose(&w.inclusion))
                    })
                    .collect(),
            );
            classes.push(ci);
            summands.push(c.module.clone());
        }
    }
    Ok(AbstractAlgebra {
        field,
        table,
        idempotents,
        residues,
        classes,
        summands,
    })
}

/// One copy of each indecomposable summand of `m`.
pub fn basic_part(m: &Representation) -> Result<Representation> {
    let d = decompose(m)?;
    let parts: Vec<Representation> = d.classes.iter().map(|c| c.module.clone()).collect();
    Ok(direct_sum(m.algebra(), &parts).module)
}

/// A quiver with relations presenting a basic algebra.
#[derive(Clone, Debug)]
pub struct AlgebraPresentation {
    pub quiver: Quiver,
    pub relations: RelationSet,
    pub field: FieldSpec,
    /// Dimension of the presented algebra.
    pub dim: usize,
    /// Dimension vectors of the summands matching the vertices.
    pub vertex_dims: Vec<Vec<usize>>,
    pub summands: Vec<Representation>,
}

impl AlgebraPresentation {
    pub fn to_alg(&self) -> String {
        write_alg(&self.quiver, &self.relations, self.field)
    }

    /// JSON view with relations rendered as text.
    pub fn summary(&self) -> PresentationSummary {
        PresentationSummary {
            field: self.field.to_string(),
            dim: self.dim,
            vertices: self.quiver.vertex_count(),
            arrows: self
                .quiver
                .arrows()
                .iter()
                .map(|a| (a.name.clone(), a.source + 1, a.target + 1))
                .collect(),
            relations: self
                .relations
                .relations
                .iter()
                .map(|r| r.display(&self.quiver))
                .collect(),
            vertex_dims: self.vertex_dims.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PresentationSummary {
    pub field: String,
    pub dim: usize,
    pub vertices: usize,
    /// `(name, source, target)` with 1-based vertices.
    pub arrows: Vec<(String, usize, usize)>,
    pub relations: Vec<String>,
    pub vertex_dims: Vec<Vec<usize>>,
}

/// Paths of length at most `max_len`, with an index for lookups.
struct Paths {
    paths: Vec<Path>,
    index: HashMap<Path, usize>,
}

impl Paths {
    fn new(q: &Quiver, max_len: usize) -> Self {
        let paths: Vec<Path> = (0..=max_len).flat_map(|l| enumerate_paths(q, l)).collect();
        let index = paths
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        Paths { paths, index }
    }

    /// Span of `u · r · v` for all paths `u`, `v`, dropping terms longer than the bound.
    fn ideal_closure(&self, field: FieldSpec, r: &[Scalar]) -> Vec<Vec<Scalar>> {
        let Some(first) = r.iter().position(|c| !c.is_zero()) else {
            return Vec::new();
        };
        let (s, t) = (self.paths[first].source(), self.paths[first].target());
        let mut out = Vec::new();
        for u in self.paths.iter().filter(|p| p.target() == s) {
            for v in self.paths.iter().filter(|p| p.source() == t) {
                let mut row = vec![field.zero(); self.paths.len()];
                let mut any = false;
                for (k, c) in r.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    let full = u
                        .compose(&self.paths[k])
                        .and_then(|x| x.compose(v))
                        .expect("composable");
                    if let Some(&i) = self.index.get(&full) {
                        row[i] += c;
                        any = true;
                    }
                }
                if any {
                    out.push(row);
                }
            }
        }
        out
    }
}

fn span_rank(field: FieldSpec, len: usize, rows: &[Vec<Scalar>]) -> usize {
    if rows.is_empty() {
        0
    } else {
        Matrix::from_rows(field, len, rows).rank()
    }
}

/// Quiver and relations of a basic algebra: vertices are the idempotents,
/// arrows span `rad / rad^2`, and relations are minimal generators of the
/// kernel of the map from the path algebra, found degree by degree.
pub fn basic_presentation(b: &AbstractAlgebra) -> Result<AlgebraPresentation> {
    if !b.is_basic() {
        return Err(Error::NotBasic("some summand occurs more than once".into()));
    }
    let field = b.field;
    let n = b.dim();
    let r = b.idempotents.len();
    // rad B: kernel of the residue maps
    let rad = if r == 0 {
        Matrix::zeros(field, n, 0)
    } else {
        Matrix::from_rows(field, n, &b.residues).kernel_basis()
    };
    let rad_cols = rad.columns();
    let products = |left: &[Vec<Scalar>]| -> Matrix {
        let cols: Vec<Vec<Scalar>> = left
            .iter()
            .flat_map(|x| rad_cols.iter().map(move |y| b.multiply(x, y)))
            .collect();
        Matrix::from_columns(field, n, &cols).column_space()
    };
    let rad2 = products(&rad_cols);
    // nilpotency of rad B
    let mut power = rad.clone();
    let mut loewy = 1;
    while power.cols() > 0 {
        power = products(&power.columns());
        loewy += 1;
        if loewy > n + 1 {
            return Err(Error::DecompositionIncomplete(
                "radical is not nilpotent".into(),
            ));
        }
    }
    // arrows: for each corner, a complement of rad^2 in rad
    let mut arrows = Vec::new();
    let mut arrow_elems = Vec::new();
    for i in 0..r {
        for j in 0..r {
            let corner = b.corner(i, j);
            let in_corner = |m: &Matrix| -> Vec<Vec<Scalar>> {
                // the part of m lying in e_i B e_j
                m.columns()
                    .iter()
                    .map(|x| b.multiply(&b.multiply(&b.idempotents[i], x), &b.idempotents[j]))
                    .filter(|x| x.iter().any(|c| !c.is_zero()))
                    .collect()
            };
            if corner.cols() == 0 {
                continue;
            }
            let mut span = in_corner(&rad2);
            let mut rank = span_rank(field, n, &span);
            for x in in_corner(&rad) {
                span.push(x.clone());
                let k = span_rank(field, n, &span);
                if k > rank {
                    rank = k;
                    arrows.push(Arrow {
                        name: String::new(),
                        source: i,
                        target: j,
                    });
                    arrow_elems.push(x);
                } else {
                    span.pop();
                }
            }
        }
    }
    for (k, a) in arrows.iter_mut().enumerate() {
        a.name = format!("b{}", k + 1);
    }
    let quiver = Quiver::new(r, arrows)?;
    let paths = Paths::new(&quiver, loewy);
    let image = |p: &Path| -> Vec<Scalar> {
        if p.is_trivial() {
            return b.idempotents[p.source()].clone();
        }
        let mut acc = arrow_elems[p.arrows()[0]].clone();
        for &a in &p.arrows()[1..] {
            acc = b.multiply(&acc, &arrow_elems[a]);
        }
        acc
    };
    let images: Vec<Vec<Scalar>> = paths.paths.iter().map(image).collect();
    let total = paths.paths.len();
    let mut chosen: Vec<Vec<Scalar>> = Vec::new();
    let mut ideal: Vec<Vec<Scalar>> = Vec::new();
    let mut ideal_rank = 0;
    for d in 2..=loewy {
        for s in 0..r {
            for t in 0..r {
                let block: Vec<usize> = (0..total)
                    .filter(|&k| {
                        let p = &paths.paths[k];
                        p.source() == s && p.target() == t && p.len() >= 2 && p.len() <= d
                    })
                    .collect();
                if block.is_empty() {
                    continue;
                }
                let cols: Vec<Vec<Scalar>> = block.iter().map(|&k| images[k].clone()).collect();
                let kernel = Matrix::from_columns(field, n, &cols).kernel_basis();
                for v in kernel.columns() {
                    let mut rel = vec![field.zero(); total];
                    for (c, &k) in v.iter().zip(&block) {
                        rel[k] = c.clone();
                    }
                    let mut test = ideal.clone();
                    test.push(rel.clone());
                    if span_rank(field, total, &test) > ideal_rank {
                        ideal.extend(paths.ideal_closure(field, &rel));
                        ideal_rank = span_rank(field, total, &ideal);
                        chosen.push(rel);
                    }
                }
            }
        }
    }
    // drop generators the others already produce
    let mut k = 0;
    while k < chosen.len() {
        let others: Vec<Vec<Scalar>> = chosen
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .flat_map(|(_, rel)| paths.ideal_closure(field, rel))
            .collect();
        if span_rank(field, total, &others) == ideal_rank {
            chosen.remove(k);
        } else {
            k += 1;
        }
    }
    let relations = chosen
        .iter()
        .map(|v| {
            Relation::new(
                v.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (c.clone(), paths.paths[i].clone()))
                    .collect(),
            )
        })
        .collect();
    Ok(AlgebraPresentation {
        quiver,
        relations: RelationSet::from_relations(relations),
        field,
        dim: n,
        vertex_dims: b.summands.iter().map(|s| s.dims().to_vec()).collect(),
        summands: b.summands.clone(),
    })
}

/// Builds `kQ/I` from a presentation and checks that its dimension is the
/// dimension of the algebra it came from.
pub fn presentation_to_algebra(
    p: &AlgebraPresentation,
    field: FieldSpec,
) -> Result<BoundQuiverAlgebra> {
    let relations = if field == p.field {
        p.relations.clone()
    } else {
        return Err(Error::InvalidField(format!(
            "presentation is over {}, not {field}",
            p.field
        )));
    };
    let alg = BoundQuiverAlgebra::build(
        p.quiver.clone(),
        relations,
        field,
        DEFAULT_LEN_CAP.max(p.dim + 1),
    )?;
    if alg.dim() != p.dim {
        return Err(Error::PresentationMismatch(format!(
            "presented algebra has dimension {}, expected {}",
            alg.dim(),
            p.dim
        )));
    }
    Ok(alg)
}

/// `End(m)` of the basic part of `m`, as a bound quiver algebra.
pub fn endo_bound_quiver(
    m: &Representation,
) -> Result<(AlgebraPresentation, Arc<BoundQuiverAlgebra>)> {
    let b = endo_algebra(&basic_part(m)?)?;
    let p = basic_presentation(&b)?;
    let alg = presentation_to_algebra(&p, b.field)?;
    Ok((p, Arc::new(alg)))
}

/// A vertex bijection `φ` with `#arrows(i -> j) = #arrows(φi -> φj)`.
pub fn quivers_isomorphic(q1: &Quiver, q2: &Quiver) -> Option<Vec<usize>> {
    let n = q1.vertex_count();
    if n != q2.vertex_count() || q1.arrows().len() != q2.arrows().len() {
        return None;
    }
    let (c1, c2) = (q1.arrow_count_matrix(), q2.arrow_count_matrix());
    let signature = |c: &[Vec<usize>], v: usize| {
        let mut out: Vec<usize> = (0..n).map(|w| c[v][w]).filter(|&x| x > 0).collect();
        let mut inc: Vec<usize> = (0..n).map(|w| c[w][v]).filter(|&x| x > 0).collect();
        out.sort_unstable();
        inc.sort_unstable();
        (out, inc, c[v][v])
    };
    let s1: Vec<_> = (0..n).map(|v| signature(&c1, v)).collect();
    let s2: Vec<_> = (0..n).map(|v| signature(&c2, v)).collect();
    fn extend(
        map: &mut Vec<usize>,
        used: &mut [bool],
        c1: &[Vec<usize>],
        c2: &[Vec<usize>],
        compatible: &dyn Fn(usize, usize) -> bool,
    ) -> bool {
        let v = map.len();
        if v == c1.len() {
            return true;
        }
        for w in 0..c1.len() {
            if used[w] || !compatible(v, w) {
                continue;
            }
            if (0..v).any(|u| c1[u][v] != c2[map[u]][w] || c1[v][u] != c2[w][map[u]]) {
                continue;
            }
            map.push(w);
            used[w] = true;
            if extend(map, used, c1, c2, compatible) {
                return true;
            }
            map.pop();
            used[w] = false;
        }
        false
    }
    let compatible = |v: usize, w: usize| s1[v] == s2[w];
    let mut map = Vec::new();
    let mut used = vec![false; n];
    extend(&mut map, &mut used, &c1, &c2, &compatible).then_some(map)
}
