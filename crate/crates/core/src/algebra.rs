//! Finite-dimensional quotients `kQ/I` of path algebras.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Matrix, Scalar};
use crate::quiver::{enumerate_paths, Path, Quiver, Relation, RelationSet};

/// Default bound on the nilpotency degree searched by [`BoundQuiverAlgebra::build`].
pub const DEFAULT_LEN_CAP: usize = 20;

type Sparse = Vec<(usize, Scalar)>;

/// A bound quiver algebra `kQ/I` together with a path basis and its
/// structure constants.
///
/// The basis consists of paths; every trivial path and every arrow is a
/// basis element. Products of basis elements are stored sparsely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundQuiverAlgebra {
    quiver: Quiver,
    relations: RelationSet,
    field: FieldSpec,
    basis: Vec<Path>,
    nilpotency: usize,
    table: Vec<Vec<Sparse>>,
    vertex_index: Vec<usize>,
    arrow_index: Vec<usize>,
    /// `between[v][w]`: basis indices of paths from `v` to `w`, in basis order.
    between: Vec<Vec<Vec<usize>>>,
}

/// Paths of length at most `max_len`, bucketed by source and by target.
struct PathIndex {
    paths: Vec<Path>,
    index: HashMap<Path, usize>,
    ending_at: Vec<Vec<usize>>,
    starting_at: Vec<Vec<usize>>,
}

impl PathIndex {
    fn new(q: &Quiver, max_len: usize) -> Self {
        let mut paths = Vec::new();
        for len in 0..=max_len {
            paths.extend(enumerate_paths(q, len));
        }
        let index = paths
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let n = q.vertex_count();
        let mut ending_at = vec![Vec::new(); n];
        let mut starting_at = vec![Vec::new(); n];
        for (i, p) in paths.iter().enumerate() {
            ending_at[p.target()].push(i);
            starting_at[p.source()].push(i);
        }
        PathIndex {
            paths,
            index,
            ending_at,
            starting_at,
        }
    }
}

/// Spanning vectors (over the paths of `idx`) for the two-sided ideal
/// generated by `rels`, truncated to paths of length at most `max_len`.
fn ideal_span(
    idx: &PathIndex,
    rels: &RelationSet,
    field: FieldSpec,
    max_len: usize,
) -> Vec<Vec<Scalar>> {
    let dim = idx.paths.len();
    let mut rows = Vec::new();
    let mut generators: Vec<&Relation> = rels.relations.iter().collect();
    let power_rels: Vec<Relation>;
    if let Some(m) = rels.rad_power {
        if m <= max_len {
            power_rels = idx
                .paths
                .iter()
                .filter(|p| p.len() == m)
                .map(|p| Relation::monomial(field, p.clone()))
                .collect();
            generators.extend(power_rels.iter());
        }
    }
    for r in generators {
        let Some(min_len) = r.terms.iter().map(|(_, p)| p.len()).min() else {
            continue;
        };
        if min_len > max_len {
            continue;
        }
        let (s, t) = (r.terms[0].1.source(), r.terms[0].1.target());
        for &u in &idx.ending_at[s] {
            let u = &idx.paths[u];
            if u.len() + min_len > max_len {
                continue;
            }
            for &v in &idx.starting_at[t] {
                let v = &idx.paths[v];
                if u.len() + min_len + v.len() > max_len {
                    continue;
                }
                let mut row = vec![field.zero(); dim];
                for (c, p) in &r.terms {
                    let full = u.compose(p).and_then(|x| x.compose(v)).expect("composable");
                    if full.len() <= max_len {
                        row[idx.index[&full]] += c;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    rows
}

impl BoundQuiverAlgebra {
    /// Builds `kQ/(I + J^m)` where `m` is the least degree (at most
    /// `len_cap`) such that every path of length `m` lies in `I` modulo
    /// paths of length `m + 1`.
    ///
    /// For homogeneous relations, or relation sets that already contain a
    /// power of the arrow ideal, this is exactly `kQ/I`.
    pub fn build(
        quiver: Quiver,
        relations: RelationSet,
        field: FieldSpec,
        len_cap: usize,
    ) -> Result<Self> {
        relations.validate(&quiver)?;
        for r in &relations.relations {
            for (c, _) in &r.terms {
                if c.field() != field {
                    return Err(Error::InvalidField(format!(
                        "relation coefficient {c} is not in {field}"
                    )));
                }
            }
        }
        let nilpotency = (1..=len_cap)
            .find(|&m| {
                let idx = PathIndex::new(&quiver, m);
                let span = ideal_span(&idx, &relations, field, m);
                let top: Vec<usize> = (0..idx.paths.len())
                    .filter(|&i| idx.paths[i].len() == m)
                    .collect();
                if top.is_empty() {
                    return true;
                }
                if span.is_empty() {
                    return false;
                }
                let gen = Matrix::from_rows(field, idx.paths.len(), &span);
                let rank = gen.rank();
                let mut extended = span.clone();
                for &i in &top {
                    let mut e = vec![field.zero(); idx.paths.len()];
                    e[i] = field.one();
                    extended.push(e);
                }
                Matrix::from_rows(field, idx.paths.len(), &extended).rank() == rank
            })
            .ok_or(Error::NotAdmissibleWithinCap { cap: len_cap })?;
        Ok(Self::from_truncation(quiver, relations, field, nilpotency))
    }

    fn from_truncation(
        quiver: Quiver,
        relations: RelationSet,
        field: FieldSpec,
        nilpotency: usize,
    ) -> Self {
        let max_len = nilpotency.saturating_sub(1);
        let idx = PathIndex::new(&quiver, max_len);
        let n = idx.paths.len();
        let span = ideal_span(&idx, &relations, field, max_len);
        // Columns ordered from the largest path down, so pivots fall on the
        // largest paths and the smallest ones survive as the basis.
        let order: Vec<usize> = (0..n).rev().collect();
        let mut normal_forms: HashMap<usize, Sparse> = HashMap::new();
        let mut is_basis = vec![true; n];
        if !span.is_empty() {
            let gen = Matrix::from_rows(field, n, &span).select_columns(&order);
            let (r, pivots) = gen.rref();
            for (row, &pc) in pivots.iter().enumerate() {
                let path = order[pc];
                is_basis[path] = false;
                let mut nf = Vec::new();
                for col in 0..n {
                    if col != pc && !pivots.contains(&col) && !r[(row, col)].is_zero() {
                        nf.push((order[col], -&r[(row, col)]));
                    }
                }
                normal_forms.insert(path, nf);
            }
        }
        let basis_paths: Vec<usize> = (0..n).filter(|&i| is_basis[i]).collect();
        let position: HashMap<usize, usize> = basis_paths
            .iter()
            .enumerate()
            .map(|(k, &i)| (i, k))
            .collect();
        let basis: Vec<Path> = basis_paths.iter().map(|&i| idx.paths[i].clone()).collect();
        let reduce = |p: &Path| -> Sparse {
            if p.len() >= nilpotency {
                return Vec::new();
            }
            let i = idx.index[p];
            if let Some(&k) = position.get(&i) {
                vec![(k, field.one())]
            } else {
                let mut v: Sparse = normal_forms[&i]
                    .iter()
                    .map(|(j, c)| (position[j], c.clone()))
                    .collect();
                v.sort_by_key(|(k, _)| *k);
                v
            }
        };
        let table: Vec<Vec<Sparse>> = basis
            .iter()
            .map(|x| {
                basis
                    .iter()
                    .map(|y| x.compose(y).map(|p| reduce(&p)).unwrap_or_default())
                    .collect()
            })
            .collect();
        Self::assemble(quiver, relations, field, basis, nilpotency, table)
    }

    fn assemble(
        quiver: Quiver,
        relations: RelationSet,
        field: FieldSpec,
        basis: Vec<Path>,
        nilpotency: usize,
        table: Vec<Vec<Sparse>>,
    ) -> Self {
        let nv = quiver.vertex_count();
        let find = |p: &Path| basis.iter().position(|b| b == p);
        let vertex_index = (0..nv)
            .map(|v| find(&Path::trivial(v)).expect("trivial paths are basis elements"))
            .collect();
        let arrow_index = (0..quiver.arrows().len())
            .map(|a| {
                let p = Path::from_arrows(&quiver, vec![a]).expect("arrow path");
                find(&p).unwrap_or(usize::MAX)
            })
            .collect();
        let mut between = vec![vec![Vec::new(); nv]; nv];
        for (i, p) in basis.iter().enumerate() {
            between[p.source()][p.target()].push(i);
        }
        BoundQuiverAlgebra {
            quiver,
            relations,
            field,
            basis,
            nilpotency,
            table,
            vertex_index,
            arrow_index,
            between,
        }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &RelationSet {
        &self.relations
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    /// Least `m` with `J^m = 0` in the quotient.
    pub fn nilpotency_degree(&self) -> usize {
        self.nilpotency
    }

    pub fn is_radical_square_zero(&self) -> bool {
        self.nilpotency <= 2
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                count: self.vertex_count(),
            });
        }
        Ok(())
    }

    /// Basis index of the trivial path at `v`.
    pub fn vertex_element(&self, v: usize) -> usize {
        self.vertex_index[v]
    }

    /// Basis index of the arrow with id `a`.
    pub fn arrow_element(&self, a: usize) -> usize {
        self.arrow_index[a]
    }

    /// Basis indices of the paths from `v` to `w`.
    pub fn basis_between(&self, v: usize, w: usize) -> &[usize] {
        &self.between[v][w]
    }

    /// Basis indices of the paths starting at `v`, in basis order.
    pub fn basis_from(&self, v: usize) -> Vec<usize> {
        (0..self.basis.len())
            .filter(|&i| self.basis[i].source() == v)
            .collect()
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i][j]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[i] = self.field.one();
        v
    }

    /// Bilinear product of two elements given in basis coordinates.
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim()];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in &self.table[i][j] {
                    out[*k] += &(&ab * c);
                }
            }
        }
        out
    }

    /// The element represented by a path of the quiver.
    pub fn path_element(&self, p: &Path) -> Vec<Scalar> {
        let mut x = self.basis_vector(self.vertex_element(p.source()));
        for &a in p.arrows() {
            if self.arrow_index[a] == usize::MAX {
                return vec![self.field.zero(); self.dim()];
            }
            x = self.multiply(&x, &self.basis_vector(self.arrow_index[a]));
        }
        x
    }

    pub fn relation_element(&self, r: &Relation) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim()];
        for (c, p) in &r.terms {
            for (k, v) in self.path_element(p).iter().enumerate() {
                out[k] += &(c * v);
            }
        }
        out
    }

    /// Relations every module must satisfy: the given relations plus all
    /// paths of the nilpotency length.
    pub fn zero_relations(&self) -> Vec<Relation> {
        let mut rels = self.relations.relations.clone();
        let mut lens = vec![self.nilpotency];
        if let Some(m) = self.relations.rad_power {
            if m < self.nilpotency {
                lens.push(m);
            }
        }
        for len in lens {
            rels.extend(
                enumerate_paths(&self.quiver, len)
                    .into_iter()
                    .map(|p| Relation::monomial(self.field, p)),
            );
        }
        rels
    }

    /// The opposite algebra: reversed quiver, reversed relations, reversed
    /// basis paths in the same order, transposed products.
    pub fn opposite(&self) -> BoundQuiverAlgebra {
        let basis = self.basis.iter().map(Path::reversed).collect();
        let n = self.dim();
        let table = (0..n)
            .map(|i| (0..n).map(|j| self.table[j][i].clone()).collect())
            .collect();
        Self::assemble(
            self.quiver.opposite(),
            self.relations.reversed(),
            self.field,
            basis,
            self.nilpotency,
            table,
        )
    }

    /// Dimension of the indecomposable projective `e_v A`.
    pub fn projective_dim(&self, v: usize) -> usize {
        self.between[v].iter().map(Vec::len).sum()
    }

    pub fn describe(&self) -> String {
        let q = &self.quiver;
        let mut s = format!(
            "algebra over {} of dimension {} (J^{} = 0)\n{}\nbasis:",
            self.field,
            self.dim(),
            self.nilpotency,
            q
        );
        for p in &self.basis {
            s.push(' ');
            s.push_str(&p.display(q));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn flagship_algebra_has_dimension_seven() {
        let a = fixtures::flagship_algebra(FieldSpec::Rationals);
        assert_eq!(a.dim(), 7);
        assert_eq!(a.nilpotency_degree(), 2);
        assert!(a.is_radical_square_zero());
        let names: Vec<_> = a.basis().iter().map(|p| p.display(a.quiver())).collect();
        assert_eq!(names, ["e1", "e2", "e3", "alpha", "beta", "gamma", "delta"]);
    }

    #[test]
    fn hereditary_a2() {
        let a = fixtures::linear_a2(FieldSpec::Rationals);
        assert_eq!(a.dim(), 3);
    }

    #[test]
    fn commutative_square() {
        let a = fixtures::commutative_square(FieldSpec::Rationals);
        assert_eq!(a.dim(), 9);
        assert_eq!(a.nilpotency_degree(), 3);
        let q = a.quiver();
        let ac = a.path_element(&q.path_from_names(&["a", "c"]).unwrap());
        let bd = a.path_element(&q.path_from_names(&["b", "d"]).unwrap());
        assert_eq!(ac, bd);
    }

    #[test]
    fn products_in_flagship_algebra() {
        let a = fixtures::flagship_algebra(FieldSpec::Rationals);
        let q = a.quiver();
        let e = |v| a.basis_vector(a.vertex_element(v));
        let arrow = |n| a.basis_vector(a.arrow_element(q.arrow_id(n).unwrap()));
        assert_eq!(a.multiply(&e(0), &e(0)), e(0));
        assert!(a
            .multiply(&arrow("alpha"), &arrow("beta"))
            .iter()
            .all(Scalar::is_zero));
        assert_eq!(a.multiply(&e(0), &arrow("alpha")), arrow("alpha"));
        assert!(a
            .multiply(&e(1), &arrow("alpha"))
            .iter()
            .all(Scalar::is_zero));
    }

    #[test]
    fn opposite_is_an_involution() {
        let a = fixtures::flagship_algebra(FieldSpec::Rationals);
        let op = a.opposite();
        assert_eq!(op.dim(), 7);
        assert_eq!(op.opposite(), a);
        let a2 = fixtures::linear_a2(FieldSpec::Rationals);
        let op = a2.opposite();
        let arrow = &op.quiver().arrows()[0];
        assert_eq!((arrow.source, arrow.target), (1, 0));
    }

    #[test]
    fn relation_of_short_path_is_rejected() {
        let q = Quiver::from_arrows(2, &[("a", 0, 1)]).unwrap();
        let f = FieldSpec::Rationals;
        let r = Relation::monomial(f, q.path_from_names(&["a"]).unwrap());
        assert!(matches!(
            BoundQuiverAlgebra::build(q, RelationSet::from_relations(vec![r]), f, 5),
            Err(Error::NotAdmissible(_))
        ));
    }

    #[test]
    fn free_loop_is_not_admissible_within_cap() {
        let q = Quiver::from_arrows(1, &[("x", 0, 0)]).unwrap();
        assert!(matches!(
            BoundQuiverAlgebra::build(q, RelationSet::none(), FieldSpec::Rationals, 6),
            Err(Error::NotAdmissibleWithinCap { cap: 6 })
        ));
    }

    #[test]
    fn associativity_and_unit_exhaustive() {
        for a in [
            fixtures::flagship_algebra(FieldSpec::Rationals),
            fixtures::commutative_square(FieldSpec::prime(5).unwrap()),
            fixtures::one_loop(FieldSpec::Rationals),
        ] {
            let n = a.dim();
            let mut unit = vec![a.field().zero(); n];
            for v in 0..a.vertex_count() {
                unit[a.vertex_element(v)] = a.field().one();
            }
            for i in 0..n {
                let x = a.basis_vector(i);
                assert_eq!(a.multiply(&unit, &x), x);
                assert_eq!(a.multiply(&x, &unit), x);
                for j in 0..n {
                    let y = a.basis_vector(j);
                    let xy = a.multiply(&x, &y);
                    for k in 0..n {
                        let z = a.basis_vector(k);
                        assert_eq!(a.multiply(&xy, &z), a.multiply(&x, &a.multiply(&y, &z)));
                    }
                }
            }
            for r in a.zero_relations() {
                assert!(a.relation_element(&r).iter().all(Scalar::is_zero));
            }
        }
    }
}
