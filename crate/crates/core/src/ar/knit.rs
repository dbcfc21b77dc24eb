use std::collections::VecDeque;
use std::fmt::Write as _;
use std::sync::Arc;

use serde::Serialize;

use super::sequence::almost_split_sequence;
use super::translate::tau_inv;
use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};
use crate::rep::{
    decompose, indecomposables_isomorphic, is_injective, is_projective, radical, socle, LocalEndo,
    Representation,
};

pub const DEFAULT_KNIT_CAP: usize = 200;

#[derive(Clone, Debug, Serialize)]
pub struct ArVertex {
    pub index: usize,
    pub label: String,
    pub dims: Vec<usize>,
    pub projective: bool,
    pub injective: bool,
    #[serde(skip)]
    pub module: Representation,
}

/// An irreducible map (with multiplicity) between indecomposables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ArArrow {
    pub source: usize,
    pub target: usize,
    pub multiplicity: usize,
}

/// `from` is non-projective and `τ(from) ≅ to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TauPair {
    pub from: usize,
    pub to: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ArQuiver {
    pub vertices: Vec<ArVertex>,
    pub arrows: Vec<ArArrow>,
    pub tau: Vec<TauPair>,
    pub complete: bool,
}

impl ArQuiver {
    pub fn label(&self, i: usize) -> &str {
        &self.vertices[i].label
    }

    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.label == label)
    }

    pub fn tau_of(&self, i: usize) -> Option<usize> {
        self.tau.iter().find(|p| p.from == i).map(|p| p.to)
    }

    /// Arrow count with multiplicity.
    pub fn arrow_count(&self) -> usize {
        self.arrows.iter().map(|a| a.multiplicity).sum()
    }

    pub fn modules(&self) -> Vec<Representation> {
        self.vertices.iter().map(|v| v.module.clone()).collect()
    }

    /// Graphviz source: solid edges are irreducible maps, dashed edges go from
    /// a module to its translate.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph ar_quiver {\n  rankdir=LR;\n");
        for v in &self.vertices {
            let dims: Vec<String> = v.dims.iter().map(usize::to_string).collect();
            let _ = writeln!(
                s,
                "  v{} [label=\"{}\\n({})\"];",
                v.index,
                v.label,
                dims.join(",")
            );
        }
        for a in &self.arrows {
            for _ in 0..a.multiplicity {
                let _ = writeln!(s, "  v{} -> v{};", a.source, a.target);
            }
        }
        for p in &self.tau {
            let _ = writeln!(
                s,
                "  v{} -> v{} [style=dashed, constraint=false];",
                p.from, p.to
            );
        }
        s.push_str("}\n");
        s
    }
}

/// Names `S<i>`, `P<i>`, `I<i>` (1-based) for the standard modules.
pub struct StandardNames {
    entries: Vec<(String, LocalEndo)>,
}

impl StandardNames {
    pub fn new(alg: &Arc<BoundQuiverAlgebra>) -> Result<Self> {
        let mut entries = Vec::new();
        for i in 0..alg.vertex_count() {
            let mods = [
                ("P", Representation::indec_projective(alg, i)?),
                ("I", Representation::indec_injective(alg, i)?),
                ("S", Representation::simple(alg, i)?),
            ];
            for (p, m) in mods {
                if let Some(l) = LocalEndo::certify(&m)? {
                    entries.push((format!("{p}{}", i + 1), l));
                }
            }
        }
        entries.sort_by_key(|(name, _)| match name.as_bytes()[0] {
            b'P' => 0,
            b'I' => 1,
            _ => 2,
        });
        Ok(StandardNames { entries })
    }

    pub fn name(&self, x: &Representation) -> Result<String> {
        for (name, l) in &self.entries {
            if indecomposables_isomorphic(l, x)?.is_some() {
                return Ok(name.clone());
            }
        }
        let dims: Vec<String> = x.dims().iter().map(usize::to_string).collect();
        Ok(format!("M({})", dims.join(",")))
    }
}

struct Knitter {
    alg: Arc<BoundQuiverAlgebra>,
    names: StandardNames,
    locals: Vec<LocalEndo>,
    quiver: ArQuiver,
    queue: VecDeque<usize>,
    cap: usize,
}

impl Knitter {
    fn find_or_add(&mut self, x: &Representation) -> Result<usize> {
        for (i, l) in self.locals.iter().enumerate() {
            if indecomposables_isomorphic(l, x)?.is_some() {
                return Ok(i);
            }
        }
        let local = LocalEndo::certify(x)?.ok_or(Error::NotIndecomposable)?;
        let index = self.locals.len();
        if index >= self.cap {
            return Err(Error::CapExceeded {
                cap: self.cap,
                partial: Box::new(self.quiver.clone()),
            });
        }
        self.quiver.vertices.push(ArVertex {
            index,
            label: self.names.name(x)?,
            dims: x.dims().to_vec(),
            projective: is_projective(x),
            injective: is_injective(x),
            module: x.clone(),
        });
        self.locals.push(local);
        self.queue.push_back(index);
        Ok(index)
    }

    fn add_summands(&mut self, m: &Representation) -> Result<Vec<(usize, usize)>> {
        let d = decompose(m)?;
        let mut out = Vec::new();
        for c in &d.classes {
            out.push((self.find_or_add(&c.module)?, c.multiplicity()));
        }
        Ok(out)
    }

    fn process(&mut self, v: usize) -> Result<()> {
        let x = self.quiver.vertices[v].module.clone();
        let into = if self.quiver.vertices[v].projective {
            self.add_summands(&radical(&x).0)?
        } else {
            let seq = almost_split_sequence(&x)?;
            let t = self.find_or_add(&seq.left)?;
            self.quiver.tau.push(TauPair { from: v, to: t });
            let mut out = Vec::new();
            for c in &seq.middle_decomposition.classes {
                out.push((self.find_or_add(&c.module)?, c.multiplicity()));
            }
            out
        };
        for (s, mult) in into {
            self.quiver.arrows.push(ArArrow {
                source: s,
                target: v,
                multiplicity: mult,
            });
        }
        if !self.quiver.vertices[v].injective {
            let y = tau_inv(&x);
            self.add_summands(&y)?;
        }
        Ok(())
    }
}

/// Knits the Auslander-Reiten quiver starting from the projectives, the
/// injectives, the summands of `rad P_i` and of `I_i / soc I_i`.
pub fn knit_ar_quiver(alg: &Arc<BoundQuiverAlgebra>, vertex_cap: usize) -> Result<ArQuiver> {
    let mut k = Knitter {
        alg: alg.clone(),
        names: StandardNames::new(alg)?,
        locals: Vec::new(),
        quiver: ArQuiver {
            vertices: Vec::new(),
            arrows: Vec::new(),
            tau: Vec::new(),
            complete: false,
        },
        queue: VecDeque::new(),
        cap: vertex_cap,
    };
    let n = alg.vertex_count();
    for i in 0..n {
        k.find_or_add(&Representation::indec_projective(alg, i)?)?;
    }
    for i in 0..n {
        k.find_or_add(&Representation::indec_injective(alg, i)?)?;
    }
    for i in 0..n {
        let p = Representation::indec_projective(&k.alg, i)?;
        k.add_summands(&radical(&p).0)?;
        let inj = Representation::indec_injective(&k.alg, i)?;
        let (_, inc) = socle(&inj);
        k.add_summands(&inc.cokernel().0)?;
    }
    while let Some(v) = k.queue.pop_front() {
        k.process(v)?;
    }
    k.quiver.arrows.sort_by_key(|a| (a.target, a.source));
    k.quiver.tau.sort_by_key(|p| p.from);
    k.quiver.complete = alg.quiver().is_connected();
    Ok(k.quiver)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linalg::FieldSpec;

    #[test]
    fn flagship_ar_quiver() {
        let a = Arc::new(fixtures::flagship_algebra(FieldSpec::Rationals));
        let q = knit_ar_quiver(&a, 50).unwrap();
        assert!(q.complete);
        assert_eq!(q.vertices.len(), 9);
        assert_eq!(q.arrow_count(), 12);
        assert!(q.arrows.iter().all(|a| a.multiplicity == 1));
        let pairs: Vec<(&str, &str)> = q
            .tau
            .iter()
            .map(|p| (q.label(p.from), q.label(p.to)))
            .collect();
        for want in [
            ("I2", "S2"),
            ("S3", "P1"),
            ("S1", "P3"),
            ("I1", "S3"),
            ("I3", "S1"),
            ("S2", "P2"),
        ] {
            assert!(pairs.contains(&want), "missing {want:?} in {pairs:?}");
        }
        assert_eq!(pairs.len(), 6);
        let dot = q.to_dot();
        assert_eq!(dot.matches("style=dashed").count(), 6);
    }

    #[test]
    fn small_ar_quivers() {
        let a2 = Arc::new(fixtures::linear_a2(FieldSpec::Rationals));
        let q = knit_ar_quiver(&a2, 20).unwrap();
        assert!(q.complete);
        assert_eq!(q.vertices.len(), 3);
        let l = Arc::new(fixtures::one_loop(FieldSpec::Rationals));
        let q = knit_ar_quiver(&l, 20).unwrap();
        assert!(q.complete);
        assert_eq!(q.vertices.len(), 2);
        assert_eq!(q.arrow_count(), 2);
    }

    #[test]
    fn cap_is_reported_with_partial_quiver() {
        let a = Arc::new(fixtures::flagship_algebra(FieldSpec::Rationals));
        match knit_ar_quiver(&a, 4) {
            Err(Error::CapExceeded { cap, partial }) => {
                assert_eq!(cap, 4);
                assert!(!partial.complete);
                assert_eq!(partial.vertices.len(), 4);
            }
            other => panic!("expected cap error, got {other:?}"),
        }
    }
}
