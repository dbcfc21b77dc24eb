use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use qrep_core::algebra::DEFAULT_LEN_CAP;
use qrep_core::ar::DEFAULT_KNIT_CAP;
use qrep_core::format::{parse_alg, parse_rep};
use qrep_core::homology::DEFAULT_RESOLUTION_CAP;
use qrep_core::{fixtures, BoundQuiverAlgebra, FieldSpec, Representation};

use crate::CliError;

#[derive(Clone, Copy, Debug)]
pub struct Caps {
    pub resolution: usize,
    pub knit: usize,
    pub admissibility: usize,
}

impl Caps {
    pub fn from_env() -> Result<Self, CliError> {
        let read = |var: &str, default: usize| -> Result<usize, CliError> {
            match std::env::var(var) {
                Ok(v) => v.trim().parse().map_err(|_| {
                    CliError::Input(format!("{var} must be a non-negative integer, got `{v}`"))
                }),
                Err(_) => Ok(default),
            }
        };
        Ok(Caps {
            resolution: read("QREP_CAP_RESOLUTION", DEFAULT_RESOLUTION_CAP)?,
            knit: read("QREP_CAP_KNIT", DEFAULT_KNIT_CAP)?,
            admissibility: read("QREP_CAP_ADMISSIBILITY", DEFAULT_LEN_CAP)?,
        })
    }
}

pub struct Workspace {
    pub algebra: Arc<BoundQuiverAlgebra>,
    pub field: FieldSpec,
    pub modules: BTreeMap<String, Representation>,
    pub caps: Caps,
}

/// Reads a file, falling back to the bundled algebras by file name.
fn read_source(path: &str) -> Result<String, CliError> {
    match std::fs::read_to_string(path) {
        Ok(t) => Ok(t),
        Err(e) => {
            let name = Path::new(path)
                .file_name()
                .and_then(|n| n.to_str())
                .unwrap_or(path);
            fixtures::bundled(name)
                .map(str::to_string)
                .ok_or_else(|| CliError::Input(format!("cannot read `{path}`: {e}")))
        }
    }
}

impl Workspace {
    pub fn load(
        alg: &str,
        field: Option<FieldSpec>,
        reps: &[String],
        caps: Caps,
    ) -> Result<Self, CliError> {
        let text = read_source(alg)?;
        let file = parse_alg(&text, field)?;
        let algebra = Arc::new(file.build(caps.admissibility)?);
        let mut modules = BTreeMap::new();
        for path in reps {
            let text = read_source(path)?;
            for r in parse_rep(&text, &algebra)? {
                modules.insert(r.name, r.module);
            }
        }
        Ok(Workspace {
            field: algebra.field(),
            algebra,
            modules,
            caps,
        })
    }

    /// Evaluates `X + Y^k + ...` where atoms are `A`, `DA`, `S<i>`, `P<i>`,
    /// `I<i>` (1-based) or names from the loaded `.rep` files.
    pub fn module(&self, expr: &str) -> Result<Representation, CliError> {
        let mut parts = Vec::new();
        for term in expr.split('+') {
            let term = term.trim();
            let (atom, power) = match term.split_once('^') {
                Some((a, k)) => (
                    a.trim(),
                    k.trim()
                        .parse::<usize>()
                        .map_err(|_| CliError::Input(format!("bad exponent in `{term}`")))?,
                ),
                None => (term, 1),
            };
            let m = self.atom(atom)?;
            parts.push(m.power(power));
        }
        Ok(qrep_core::rep::direct_sum(&self.algebra, &parts).module)
    }

    fn atom(&self, atom: &str) -> Result<Representation, CliError> {
        if let Some(m) = self.modules.get(atom) {
            return Ok(m.clone());
        }
        let a = &self.algebra;
        match atom {
            "A" => return Ok(Representation::regular(a)),
            "DA" => return Ok(Representation::dual_regular(a)),
            "" => return Err(CliError::Input("empty module expression".into())),
            _ => {}
        }
        let (kind, idx) = atom.split_at(1);
        let i: usize = idx
            .parse()
            .map_err(|_| CliError::Input(format!("unknown module `{atom}`")))?;
        if i == 0 || i > a.vertex_count() {
            return Err(CliError::Input(format!(
                "vertex {i} in `{atom}` is out of range 1..={}",
                a.vertex_count()
            )));
        }
        Ok(match kind {
            "S" => Representation::simple(a, i - 1)?,
            "P" => Representation::indec_projective(a, i - 1)?,
            "I" => Representation::indec_injective(a, i - 1)?,
            _ => return Err(CliError::Input(format!("unknown module `{atom}`"))),
        })
    }
}
