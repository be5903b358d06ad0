//! `gapkit solve`: dispatch a measure over an instance file. The file's
//! `kind` field decides which payloads are compatible; scores print as
//! plain integers, distances as half-unit decimals.

use gapkit_core::Sequence;
use gapkit_dtwd::GadgetInstance;
use gapkit_klcs::{KLcsInstance, LocalKlcsInstance};
use gapkit_lcs::LcsInstance;
use gapkit_solvers as solvers;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Measure {
    Lcs,
    Wlcs,
    Klcs,
    Edit,
    Dtwd,
    Frechet,
    LocalKlcs,
}

impl Measure {
    pub fn parse(name: &str) -> Result<Measure, String> {
        Ok(match name {
            "lcs" => Measure::Lcs,
            "wlcs" => Measure::Wlcs,
            "klcs" => Measure::Klcs,
            "edit" => Measure::Edit,
            "dtwd" => Measure::Dtwd,
            "frechet" => Measure::Frechet,
            "local-klcs" => Measure::LocalKlcs,
            other => {
                return Err(format!(
                    "unknown measure {other:?}; expected lcs, wlcs, klcs, edit, dtwd, frechet or local-klcs"
                ))
            }
        })
    }
}

fn kind_of(text: &str) -> Result<String, String> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| format!("not an instance file: {e}"))?;
    value
        .get("kind")
        .and_then(|k| k.as_str())
        .map(|k| k.to_string())
        .ok_or_else(|| "instance file has no kind field".to_string())
}

/// Solves the instance in `text` under `measure`, returning the line to
/// print. Kind/measure mismatches are format errors.
pub fn solve_text(measure: Measure, text: &str) -> Result<String, String> {
    let kind = kind_of(text)?;
    match (measure, kind.as_str()) {
        (Measure::Lcs | Measure::Wlcs | Measure::Edit, "lcs") => {
            let inst = LcsInstance::from_json(text).map_err(|e| e.to_string())?;
            let score = match measure {
                Measure::Lcs => solvers::lcs(&inst.p1, &inst.p2),
                Measure::Wlcs => solvers::wlcs(&inst.p1, &inst.p2, &inst.weights),
                _ => solvers::edit(&inst.p1, &inst.p2),
            }
            .map_err(|e| e.to_string())?;
            Ok(score.to_string())
        }
        (Measure::Klcs, "klcs") => {
            let inst = KLcsInstance::from_json(text).map_err(|e| e.to_string())?;
            let refs: Vec<&Sequence> = inst.sequences.iter().collect();
            let score = solvers::k_wlcs_with_cap(&refs, &inst.weights, 2_000_000_000)
                .map_err(|e| e.to_string())?;
            Ok(score.to_string())
        }
        (Measure::LocalKlcs, "local_klcs") => {
            let inst = LocalKlcsInstance::from_json(text).map_err(|e| e.to_string())?;
            let refs: Vec<&Sequence> = inst.sequences.iter().collect();
            let score = solvers::local_k_lcs(&refs, inst.window).map_err(|e| e.to_string())?;
            Ok(score.to_string())
        }
        (Measure::Dtwd | Measure::Frechet, "frechet_gadget") => {
            let inst = GadgetInstance::from_json(text).map_err(|e| e.to_string())?;
            let cost = if measure == Measure::Dtwd {
                solvers::dtwd(&inst.p1, &inst.p2, &inst.points.dist)
            } else {
                solvers::frechet(&inst.p1, &inst.p2, &inst.points.dist)
            }
            .map_err(|e| e.to_string())?;
            Ok(cost.to_string())
        }
        (measure, kind) => {
            Err(format!("measure {measure:?} does not apply to a {kind:?} instance"))
        }
    }
}
