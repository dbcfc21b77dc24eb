//! Quivers, paths and relations.
//!
//! Vertices are numbered from 0. Paths compose left to right: the path
//! `a*b` first traverses `a`, then `b`.

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Quiver {
    vertex_count: usize,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertex_count: usize, arrows: Vec<Arrow>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidQuiver(
                "a quiver needs at least one vertex".into(),
            ));
        }
        let mut names = HashSet::new();
        for a in &arrows {
            if a.source >= vertex_count || a.target >= vertex_count {
                return Err(Error::InvalidQuiver(format!(
                    "arrow {} has an endpoint outside 1..={vertex_count}",
                    a.name
                )));
            }
            if !names.insert(a.name.as_str()) {
                return Err(Error::InvalidQuiver(format!(
                    "duplicate arrow name {}",
                    a.name
                )));
            }
        }
        Ok(Quiver {
            vertex_count,
            arrows,
        })
    }

    /// Convenience constructor from `(name, source, target)` triples.
    pub fn from_arrows(vertex_count: usize, arrows: &[(&str, usize, usize)]) -> Result<Self> {
        Quiver::new(
            vertex_count,
            arrows
                .iter()
                .map(|&(n, s, t)| Arrow {
                    name: n.to_string(),
                    source: s,
                    target: t,
                })
                .collect(),
        )
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, id: usize) -> &Arrow {
        &self.arrows[id]
    }

    pub fn arrow_id(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// The same quiver with every arrow reversed (names kept).
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertex_count: self.vertex_count,
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }

    /// Number of arrows from `i` to `j` for every ordered pair.
    pub fn arrow_count_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count;
        let mut c = vec![vec![0; n]; n];
        for a in &self.arrows {
            c[a.source][a.target] += 1;
        }
        c
    }

    /// Connectivity of the underlying undirected graph.
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count;
        let mut adj = vec![Vec::new(); n];
        for a in &self.arrows {
            adj[a.source].push(a.target);
            adj[a.target].push(a.source);
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn path_from_names(&self, names: &[&str]) -> Result<Path> {
        let ids = names
            .iter()
            .map(|n| {
                self.arrow_id(n)
                    .ok_or_else(|| Error::InvalidQuiver(format!("unknown arrow {n}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Path::from_arrows(self, ids)
    }
}

/// A path in a quiver: a trivial path at a vertex, or a sequence of
/// composable arrows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Path {
    source: usize,
    target: usize,
    arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(vertex: usize) -> Path {
        Path {
            source: vertex,
            target: vertex,
            arrows: Vec::new(),
        }
    }

    pub fn from_arrows(q: &Quiver, arrows: Vec<usize>) -> Result<Path> {
        let Some(&first) = arrows.first() else {
            return Err(Error::InvalidQuiver(
                "a nontrivial path needs at least one arrow".into(),
            ));
        };
        for w in arrows.windows(2) {
            if q.arrow(w[0]).target != q.arrow(w[1]).source {
                return Err(Error::InvalidQuiver(format!(
                    "arrows {} and {} do not compose",
                    q.arrow(w[0]).name,
                    q.arrow(w[1]).name
                )));
            }
        }
        Ok(Path {
            source: q.arrow(first).source,
            target: q.arrow(*arrows.last().unwrap()).target,
            arrows,
        })
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_trivial()
    }

    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    /// `self` followed by `other`, if they compose.
    pub fn compose(&self, other: &Path) -> Option<Path> {
        if self.target != other.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path {
            source: self.source,
            target: other.target,
            arrows,
        })
    }

    /// The same arrows traversed backwards, as a path of the opposite quiver.
    pub fn reversed(&self) -> Path {
        Path {
            source: self.target,
            target: self.source,
            arrows: self.arrows.iter().rev().copied().collect(),
        }
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e{}", self.source + 1)
        } else {
            self.arrows
                .iter()
                .map(|&a| q.arrow(a).name.as_str())
                .collect::<Vec<_>>()
                .join("*")
        }
    }
}

impl Ord for Path {
    /// Length first, then arrow ids lexicographically; trivial paths by vertex.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.source.cmp(&other.source))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All paths of exactly `len` arrows, sorted.
pub fn enumerate_paths(q: &Quiver, len: usize) -> Vec<Path> {
    let mut paths: Vec<Path> = (0..q.vertex_count()).map(Path::trivial).collect();
    for _ in 0..len {
        let mut next = Vec::new();
        for p in &paths {
            for (id, a) in q.arrows().iter().enumerate() {
                if a.source == p.target {
                    let mut arrows = p.arrows.clone();
                    arrows.push(id);
                    next.push(Path {
                        source: p.source,
                        target: a.target,
                        arrows,
                    });
                }
            }
        }
        paths = next;
    }
    paths.sort();
    paths
}

/// A formal linear combination of parallel paths.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub terms: Vec<(Scalar, Path)>,
}

impl Relation {
    pub fn new(terms: Vec<(Scalar, Path)>) -> Self {
        Relation { terms }
    }

    /// A single path as a relation.
    pub fn monomial(field: FieldSpec, p: Path) -> Self {
        Relation {
            terms: vec![(field.one(), p)],
        }
    }

    pub fn reversed(&self) -> Relation {
        Relation {
            terms: self
                .terms
                .iter()
                .map(|(c, p)| (c.clone(), p.reversed()))
                .collect(),
        }
    }

    pub fn display(&self, q: &Quiver) -> String {
        let mut out = String::new();
        for (k, (c, p)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !abs.is_one() {
                out.push_str(&format!("{abs}*"));
            }
            out.push_str(&p.display(q));
        }
        out
    }
}

/// Relations of a bound quiver algebra, plus an optional marker adding every
/// path of a given length.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RelationSet {
    pub relations: Vec<Relation>,
    pub rad_power: Option<usize>,
}

impl RelationSet {
    pub fn none() -> Self {
        RelationSet::default()
    }

    pub fn rad_power(m: usize) -> Self {
        RelationSet {
            relations: Vec::new(),
            rad_power: Some(m),
        }
    }

    pub fn from_relations(relations: Vec<Relation>) -> Self {
        RelationSet {
            relations,
            rad_power: None,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty() && self.rad_power.is_none()
    }

    /// Checks that every relation is a nonempty combination of parallel
    /// paths of length at least two.
    pub fn validate(&self, q: &Quiver) -> Result<()> {
        if let Some(m) = self.rad_power {
            if m < 2 {
                return Err(Error::NotAdmissible(format!(
                    "J {m} would kill arrows; powers must be at least 2"
                )));
            }
        }
        for r in &self.relations {
            let Some((_, first)) = r.terms.first() else {
                return Err(Error::NotAdmissible("empty relation".into()));
            };
            for (_, p) in &r.terms {
                if p.len() < 2 {
                    return Err(Error::NotAdmissible(format!(
                        "relation {} contains the path {} of length {}",
                        r.display(q),
                        p.display(q),
                        p.len()
                    )));
                }
                if p.source() != first.source() || p.target() != first.target() {
                    return Err(Error::NotAdmissible(format!(
                        "relation {} mixes non-parallel paths",
                        r.display(q)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn reversed(&self) -> RelationSet {
        RelationSet {
            relations: self.relations.iter().map(Relation::reversed).collect(),
            rad_power: self.rad_power,
        }
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "quiver with {} vertices:", self.vertex_count)?;
        for a in &self.arrows {
            write!(f, " {}:{}->{}", a.name, a.source + 1, a.target + 1)?;
        }
        Ok(())
    }
}
