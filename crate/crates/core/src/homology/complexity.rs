use std::fmt;
use std::sync::Arc;

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;
use serde::Serialize;

use super::tracker::{max_multiple, same_counts, Counts, SyzygyTracker};
use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};
use crate::rep::Representation;

/// Growth class of the minimal projective resolution of a module.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ComplexityVerdict {
    /// Finite projective dimension.
    Zero,
    /// The non-projective parts of `Ω^a` and `Ω^{a+p}` are isomorphic.
    OneCertified {
        a: usize,
        p: usize,
    },
    /// Least-squares exponent of `dim P_n` against `n` on the second half of
    /// the window; not a certificate.
    PolynomialEstimate {
        degree: f64,
        window: usize,
    },
    /// `Ω^{a+p} ≅ (Ω^a)^m ⊕ R` up to projective summands, with `m ≥ 2`.
    InfiniteCertified {
        a: usize,
        p: usize,
        m: u64,
    },
    Inconclusive {
        window: usize,
    },
}

impl fmt::Display for ComplexityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexityVerdict::Zero => write!(f, "0 (finite projective dimension)"),
            ComplexityVerdict::OneCertified { a, p } => {
                write!(
                    f,
                    "1 (Omega^{a} and Omega^{} agree up to projectives)",
                    a + p
                )
            }
            ComplexityVerdict::PolynomialEstimate { degree, window } => {
                write!(
                    f,
                    "estimated growth exponent {degree:.2} over {window} steps (not certified)"
                )
            }
            ComplexityVerdict::InfiniteCertified { a, p, m } => write!(
                f,
                "infinite (Omega^{} contains {m} copies of Omega^{a}; a={a}, p={p}, m={m})",
                a + p
            ),
            ComplexityVerdict::Inconclusive { window } => {
                write!(f, "inconclusive after {window} steps")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComplexityReport {
    pub verdict: ComplexityVerdict,
    /// `dim P_n` for `n = 0, ..., window`.
    pub dims: Vec<u64>,
    /// Multiplicity vectors of `Ω^n` over the tracked classes.
    #[serde(skip)]
    pub syzygies: Vec<Counts>,
}

fn polynomial_fit(dims: &[u64]) -> Option<f64> {
    let n = dims.len();
    if n < 8 {
        return None;
    }
    let pts: Vec<(f64, f64)> = (n / 2..n)
        .filter(|&k| k > 0 && dims[k] > 0)
        .map(|k| ((k as f64).ln(), (dims[k] as f64).ln()))
        .collect();
    if pts.len() < 4 {
        return None;
    }
    let len = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / len;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / len;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let syy: f64 = pts.iter().map(|p| (p.1 - my).powi(2)).sum();
    let slope = sxy / sxx;
    if syy > 1e-12 {
        let r2 = sxy * sxy / (sxx * syy);
        if r2 < 0.99 {
            return None;
        }
    }
    Some((slope * 100.0).round() / 100.0)
}

pub fn complexity_report_tracked(
    tracker: &mut SyzygyTracker,
    m: &Representation,
    window: usize,
) -> Result<ComplexityReport> {
    let seq = tracker.sequence(m, window)?;
    let dims = seq
        .iter()
        .map(|c| tracker.cover_dim(c))
        .collect::<Result<Vec<_>>>()?;
    let nonproj: Vec<Counts> = seq.iter().map(|c| tracker.nonprojective(c)).collect();
    let verdict = 'v: {
        if nonproj.iter().any(|c| c.is_empty()) {
            break 'v ComplexityVerdict::Zero;
        }
        for b in 1..=window {
            for a in 0..b {
                if same_counts(&nonproj[a], &nonproj[b]) {
                    break 'v ComplexityVerdict::OneCertified { a, p: b - a };
                }
                let k = max_multiple(&nonproj[a], &nonproj[b]);
                if k >= 2 {
                    break 'v ComplexityVerdict::InfiniteCertified { a, p: b - a, m: k };
                }
            }
        }
        match polynomial_fit(&dims) {
            Some(degree) => ComplexityVerdict::PolynomialEstimate { degree, window },
            None => ComplexityVerdict::Inconclusive { window },
        }
    };
    Ok(ComplexityReport {
        verdict,
        dims,
        syzygies: seq,
    })
}

pub fn complexity_report(m: &Representation, window: usize) -> Result<ComplexityReport> {
    let mut t = SyzygyTracker::new(m.algebra())?;
    complexity_report_tracked(&mut t, m, window)
}

/// Exact growth of the resolution of a simple over a radical-square-zero algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RadSquareComplexity {
    FinitePd,
    Bounded,
    /// `dim P_n` grows like `n^degree`.
    Polynomial {
        degree: usize,
    },
    Exponential,
}

impl fmt::Display for RadSquareComplexity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RadSquareComplexity::FinitePd => write!(f, "finite projective dimension"),
            RadSquareComplexity::Bounded => write!(f, "bounded"),
            RadSquareComplexity::Polynomial { degree } => {
                write!(f, "polynomial of degree {degree}")
            }
            RadSquareComplexity::Exponential => write!(f, "exponential"),
        }
    }
}

/// For `J^2 = 0`, `Ω(S_i) = ⊕_{a: i -> j} S_j`, so the syzygies of `S_i`
/// follow walks in the quiver. Growth is exponential when a reachable
/// strongly connected component is more than a single cycle, and otherwise
/// polynomial of degree one less than the longest chain of cyclic components.
pub fn radsq_complexity_exact(
    a: &Arc<BoundQuiverAlgebra>,
    i: usize,
) -> Result<RadSquareComplexity> {
    if !a.is_radical_square_zero() {
        return Err(Error::NotRadicalSquareZero);
    }
    a.check_vertex(i)?;
    let n = a.vertex_count();
    let mut g = DiGraph::<(), ()>::new();
    let nodes: Vec<_> = (0..n).map(|_| g.add_node(())).collect();
    for arr in a.quiver().arrows() {
        g.add_edge(nodes[arr.source], nodes[arr.target], ());
    }
    let sccs = tarjan_scc(&g);
    let mut comp = vec![0usize; n];
    for (c, members) in sccs.iter().enumerate() {
        for v in members {
            comp[v.index()] = c;
        }
    }
    let arrows = a.quiver().arrow_count_matrix();
    let ncomp = sccs.len();
    let mut cyclic = vec![false; ncomp];
    let mut single_cycle = vec![true; ncomp];
    for (c, members) in sccs.iter().enumerate() {
        for v in members {
            let out: usize = members.iter().map(|w| arrows[v.index()][w.index()]).sum();
            if out > 0 {
                cyclic[c] = true;
            }
            if out != 1 {
                single_cycle[c] = false;
            }
        }
    }
    // condensation edges
    let mut succ = vec![Vec::new(); ncomp];
    for arr in a.quiver().arrows() {
        let (cs, ct) = (comp[arr.source], comp[arr.target]);
        if cs != ct && !succ[cs].contains(&ct) {
            succ[cs].push(ct);
        }
    }
    // tarjan_scc lists components in reverse topological order, so
    // successors come first
    let mut chain = vec![0usize; ncomp];
    let mut exp = vec![false; ncomp];
    for c in 0..ncomp {
        let best = succ[c].iter().map(|&d| chain[d]).max().unwrap_or(0);
        chain[c] = best + usize::from(cyclic[c]);
        exp[c] = (cyclic[c] && !single_cycle[c]) || succ[c].iter().any(|&d| exp[d]);
    }
    let c = comp[i];
    Ok(if exp[c] {
        RadSquareComplexity::Exponential
    } else {
        match chain[c] {
            0 => RadSquareComplexity::FinitePd,
            1 => RadSquareComplexity::Bounded,
            k => RadSquareComplexity::Polynomial { degree: k - 1 },
        }
    })
}

/// Whether a window verdict is consistent with the exact classification.
pub fn verdicts_agree(exact: RadSquareComplexity, window: &ComplexityVerdict) -> bool {
    match (exact, window) {
        (RadSquareComplexity::FinitePd, ComplexityVerdict::Zero) => true,
        (RadSquareComplexity::Bounded, ComplexityVerdict::OneCertified { .. }) => true,
        (RadSquareComplexity::Exponential, ComplexityVerdict::InfiniteCertified { .. }) => true,
        (
            RadSquareComplexity::Polynomial { degree },
            ComplexityVerdict::PolynomialEstimate { degree: d, .. },
        ) => (d - degree as f64).abs() < 0.5,
        _ => false,
    }
}
