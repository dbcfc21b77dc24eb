use std::fmt::Write as _;

use qrep_core::ar::{knit_ar_quiver, stable_hom_dim, tau, tau_inv, ArQuiver, StandardNames};
use qrep_core::cluster::{
    check_via_endo_with_cap, check_via_list, ClusterEvidence, ClusterVerdict,
};
use qrep_core::endo::{basic_part, basic_presentation, endo_algebra, presentation_to_algebra};
use qrep_core::homology::{
    complexity_report_tracked, dominant_dimension, ext_dim, global_dimension, proj_dim_tracked,
    radsq_complexity_exact, ComplexityVerdict, SyzygyTracker,
};
use qrep_core::rep::{decompose, hom_dim};
use qrep_core::Representation;
use serde_json::{json, Value};

use crate::workspace::Workspace;
use crate::CliError;

/// What a subcommand produced, in every format it supports.
pub struct Report {
    pub text: String,
    pub json: Value,
    pub dot: Option<String>,
}

impl Report {
    fn new(text: String, json: Value) -> Self {
        Report {
            text,
            json,
            dot: None,
        }
    }
}

fn dims_string(d: &[usize]) -> String {
    let parts: Vec<String> = d.iter().map(usize::to_string).collect();
    format!("({})", parts.join(","))
}

/// Labeled indecomposable summands of `m`.
fn summands(ws: &Workspace, m: &Representation) -> Result<(String, Value), CliError> {
    let names = StandardNames::new(&ws.algebra)?;
    let d = decompose(m)?;
    let mut text = Vec::new();
    let mut items = Vec::new();
    for c in &d.classes {
        let label = names.name(&c.module)?;
        let k = c.multiplicity();
        text.push(if k == 1 {
            label.clone()
        } else {
            format!("{label}^{k}")
        });
        items.push(json!({"label": label, "dims": c.module.dims(), "multiplicity": k}));
    }
    let text = if text.is_empty() {
        "0".to_string()
    } else {
        text.join(" + ")
    };
    Ok((text, json!({"dims": m.dims(), "summands": items})))
}

pub fn basis(ws: &Workspace) -> Report {
    let a = &ws.algebra;
    let q = a.quiver();
    let mut text = format!("dimension {}\n", a.dim());
    let mut items = Vec::new();
    for p in a.basis() {
        let _ = writeln!(
            text,
            "  {}: {} -> {}",
            p.display(q),
            p.source() + 1,
            p.target() + 1
        );
        items.push(
            json!({"path": p.display(q), "source": p.source() + 1, "target": p.target() + 1}),
        );
    }
    Report::new(
        text,
        json!({"field": ws.field.to_string(), "dim": a.dim(), "basis": items}),
    )
}

pub fn modules(ws: &Workspace) -> Result<Report, CliError> {
    let a = &ws.algebra;
    let mut text = String::from("vertex  S        P        I\n");
    let mut items = Vec::new();
    for i in 0..a.vertex_count() {
        let s = Representation::simple(a, i)?;
        let p = Representation::indec_projective(a, i)?;
        let inj = Representation::indec_injective(a, i)?;
        let _ = writeln!(
            text,
            "{:<7} {:<8} {:<8} {}",
            i + 1,
            dims_string(s.dims()),
            dims_string(p.dims()),
            dims_string(inj.dims())
        );
        items.push(json!({"vertex": i + 1, "simple": s.dims(), "projective": p.dims(), "injective": inj.dims()}));
    }
    Ok(Report::new(text, json!({"modules": items})))
}

pub fn hom(ws: &Workspace, x: &str, y: &str) -> Result<Report, CliError> {
    let (m, n) = (ws.module(x)?, ws.module(y)?);
    let h = hom_dim(&m, &n)?;
    let s = stable_hom_dim(&m, &n)?;
    Ok(Report::new(
        format!("dim Hom({x}, {y}) = {h}\nmodulo projectives: {s}\n"),
        json!({"hom": h, "stable_hom": s}),
    ))
}

pub fn resolve(ws: &Workspace, x: &str, steps: usize) -> Result<Report, CliError> {
    let m = ws.module(x)?;
    let mut t = SyzygyTracker::new(&ws.algebra)?;
    let seq = t.sequence(&m, steps)?;
    let mut text = String::new();
    let mut terms = Vec::new();
    for (n, c) in seq.iter().enumerate() {
        let tops = t.cover_vertices(c)?;
        let dim = t.cover_dim(c)?;
        let parts: Vec<String> = tops
            .iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(|(v, &k)| {
                if k == 1 {
                    format!("P{}", v + 1)
                } else {
                    format!("P{}^{k}", v + 1)
                }
            })
            .collect();
        let shown = if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        };
        let _ = writeln!(text, "P_{n} = {shown}  (dim {dim})");
        terms.push(json!({"n": n, "dim": dim, "vertices": tops}));
        if dim == 0 {
            break;
        }
    }
    let pd = proj_dim_tracked(&mut t, &m, steps)?;
    let _ = writeln!(text, "projective dimension: {pd}");
    Ok(Report::new(
        text,
        json!({"terms": terms, "projective_dimension": pd}),
    ))
}

pub fn ext(ws: &Workspace, i: usize, x: &str, y: &str) -> Result<Report, CliError> {
    let d = ext_dim(i, &ws.module(x)?, &ws.module(y)?)?;
    Ok(Report::new(format!("{d}\n"), json!({"i": i, "dim": d})))
}

pub fn translate(ws: &Workspace, x: &str, inverse: bool) -> Result<Report, CliError> {
    let m = ws.module(x)?;
    let t = if inverse { tau_inv(&m) } else { tau(&m) };
    let (text, value) = summands(ws, &t)?;
    let name = if inverse { "tau-inv" } else { "tau" };
    Ok(Report::new(
        format!("{name}({x}) = {text}  {}\n", dims_string(t.dims())),
        value,
    ))
}

pub fn knit(ws: &Workspace) -> Result<ArQuiver, CliError> {
    Ok(knit_ar_quiver(&ws.algebra, ws.caps.knit)?)
}

pub fn ar_knit(ws: &Workspace) -> Result<Report, CliError> {
    let q = knit(ws)?;
    let mut text = format!(
        "{} indecomposables, {} irreducible maps, complete: {}\n",
        q.vertices.len(),
        q.arrow_count(),
        q.complete
    );
    for v in &q.vertices {
        let _ = writeln!(text, "  {:<10} {}", v.label, dims_string(&v.dims));
    }
    for a in &q.arrows {
        let mult = if a.multiplicity > 1 {
            format!(" (x{})", a.multiplicity)
        } else {
            String::new()
        };
        let _ = writeln!(
            text,
            "  {} -> {}{mult}",
            q.label(a.source),
            q.label(a.target)
        );
    }
    for p in &q.tau {
        let _ = writeln!(text, "  tau({}) = {}", q.label(p.from), q.label(p.to));
    }
    Ok(Report {
        text,
        json: serde_json::to_value(&q).expect("serializable"),
        dot: Some(q.to_dot()),
    })
}

pub fn cluster_list(
    ws: &Workspace,
    m: &Representation,
    n: usize,
) -> Result<(ClusterVerdict, ArQuiver), CliError> {
    let q = knit(ws)?;
    if !q.complete {
        return Err(CliError::Computation(
            "the knitted list of indecomposables is not certified complete".into(),
        ));
    }
    Ok((check_via_list(&ws.algebra, m, n, &q.modules())?, q))
}

pub fn cluster_endo(
    ws: &Workspace,
    m: &Representation,
    n: usize,
) -> Result<ClusterVerdict, CliError> {
    Ok(check_via_endo_with_cap(
        &ws.algebra,
        m,
        n,
        ws.caps.resolution,
    )?)
}

pub fn verdict_text(v: &ClusterVerdict, labels: Option<&ArQuiver>) -> String {
    let word = if v.result { "is" } else { "is not" };
    let mut s = format!("{word} {}-cluster tilting ({:?})\n", v.n, v.mode);
    let name = |k: usize| labels.map_or_else(|| format!("#{k}"), |q| q.label(k).to_string());
    match &v.evidence {
        ClusterEvidence::List {
            right_orthogonal,
            left_orthogonal,
            summands,
            failure,
            ..
        } => {
            let set = |xs: &[usize]| xs.iter().map(|&k| name(k)).collect::<Vec<_>>().join(", ");
            let _ = writeln!(s, "  summands of M:      {{{}}}", set(summands));
            let _ = writeln!(s, "  Ext(M, X) vanishes: {{{}}}", set(right_orthogonal));
            let _ = writeln!(s, "  Ext(X, M) vanishes: {{{}}}", set(left_orthogonal));
            if let Some(f) = failure {
                let _ = write!(s, "  first offending module: {}", name(f.module));
                if let (Some(i), Some(d)) = (f.ext_index, f.ext_dim) {
                    let _ = write!(s, " (Ext^{i} has dimension {d})");
                }
                s.push('\n');
            }
        }
        ClusterEvidence::Endo {
            global_dimension,
            dominant_dimension,
            endo_dim,
            endo_vertices,
            endo_arrows,
        } => {
            let _ = writeln!(
                s,
                "  End(M): dimension {endo_dim}, {endo_vertices} vertices, {endo_arrows} arrows"
            );
            let _ = writeln!(
                s,
                "  global dimension {global_dimension}, dominant dimension {dominant_dimension}"
            );
        }
    }
    s
}

pub fn endo(ws: &Workspace, x: &str) -> Result<Report, CliError> {
    let m = basic_part(&ws.module(x)?)?;
    let b = endo_algebra(&m)?;
    let p = basic_presentation(&b)?;
    presentation_to_algebra(&p, ws.field)?;
    let names = StandardNames::new(&ws.algebra)?;
    let mut text = String::new();
    let mut labels = Vec::new();
    for (i, s) in p.summands.iter().enumerate() {
        let l = names.name(s)?;
        let _ = writeln!(text, "# vertex {}: {l} {}", i + 1, dims_string(s.dims()));
        labels.push(l);
    }
    text.push_str(&p.to_alg());
    let mut dot = String::from("digraph endo_quiver {\n");
    for (i, l) in labels.iter().enumerate() {
        let _ = writeln!(dot, "  v{} [label=\"{}: {l}\"];", i + 1, i + 1);
    }
    for a in p.quiver.arrows() {
        let _ = writeln!(
            dot,
            "  v{} -> v{} [label=\"{}\"];",
            a.source + 1,
            a.target + 1,
            a.name
        );
    }
    dot.push_str("}\n");
    let mut json = serde_json::to_value(p.summary()).expect("serializable");
    json["vertex_labels"] = json!(labels);
    Ok(Report {
        text,
        json,
        dot: Some(dot),
    })
}

pub fn gldim(ws: &Workspace) -> Result<Report, CliError> {
    let g = global_dimension(&ws.algebra, ws.caps.resolution)?;
    Ok(Report::new(
        format!("{g}\n"),
        json!({"global_dimension": g}),
    ))
}

pub fn domdim(ws: &Workspace) -> Result<Report, CliError> {
    let d = dominant_dimension(&ws.algebra, ws.caps.resolution)?;
    Ok(Report::new(
        format!("{d}\n"),
        json!({"dominant_dimension": d}),
    ))
}

pub fn complexity(ws: &Workspace, x: &str, window: usize) -> Result<Report, CliError> {
    let m = ws.module(x)?;
    let mut t = SyzygyTracker::new(&ws.algebra)?;
    let r = complexity_report_tracked(&mut t, &m, window)?;
    let mut text = format!("complexity: {}\n", r.verdict);
    let dims: Vec<String> = r.dims.iter().map(u64::to_string).collect();
    let _ = writeln!(text, "dim P_n: {}", dims.join(" "));
    let mut json = serde_json::to_value(&r).expect("serializable");
    // for a simple over a radical-square-zero algebra the growth is known exactly
    if ws.algebra.is_radical_square_zero() && m.total_dim() == 1 {
        let v = m
            .dims()
            .iter()
            .position(|&d| d == 1)
            .expect("one-dimensional");
        let exact = radsq_complexity_exact(&ws.algebra, v)?;
        let _ = writeln!(text, "exact growth: {exact}");
        json["exact"] = serde_json::to_value(exact).expect("serializable");
    }
    Ok(Report::new(text, json))
}

/// Whether a complexity verdict is the expected certificate for `S_2`.
pub fn expected_s2_verdict(v: &ComplexityVerdict) -> bool {
    *v == ComplexityVerdict::InfiniteCertified { a: 0, p: 2, m: 2 }
}
