//! One function per CLI subcommand. Each returns a complete [`Report`];
//! engine errors become error reports rather than panics, so the binary can
//! map verdicts straight to exit codes.

use serde_json::{json, Value};

use crate::algebra::Grade;
use crate::error::EngineError;
use crate::pbw::isqrt;
use crate::rat::Rat;
use crate::report::{Report, RunConfig, Verdict};
use crate::singular::{find_singular, verify_embedding_data, verify_vsing, EmbeddingReport};
use crate::spectrum::{disjointness_check, s_set, w_set, AdmissibleLevel};
use crate::verma::{HighestWeight, Module, ModuleElement, SingularityCheck};

/// Wire form of a module element: terms in canonical basis order, each word
/// an ordered list of {kind, index2} mode objects with a short display name
/// alongside.
fn element_json(v: &ModuleElement) -> Value {
    let terms: Vec<Value> = v
        .terms()
        .map(|(word, coeff)| {
            json!({
                "word": word.modes(),
                "display": word.to_string(),
                "coeff": coeff,
            })
        })
        .collect();
    json!({ "grade": v.grade(), "terms": terms })
}

fn audit_json(audit: &SingularityCheck) -> Value {
    let rows: Vec<Value> = audit
        .checks
        .iter()
        .map(|c| json!({ "generator": c.generator.to_string(), "vanishes": c.residual.is_zero() }))
        .collect();
    json!(rows)
}

/// Classification data for the level t/u: admissibility, the central charge,
/// the spin set S, the weight table W, and for fractional levels the charged
/// curve constants for membership tests against D.
pub fn cmd_classify(t: i64, u: i64, cfg: RunConfig) -> Report {
    match classify_inner(t, u) {
        Ok((payload, verdict)) => Report::new("classify", cfg, payload, verdict),
        Err(e) => Report::error("classify", cfg, e.to_string()),
    }
}

fn classify_inner(t: i64, u: i64) -> Result<(Value, Verdict), EngineError> {
    let lvl = match AdmissibleLevel::new(t, u) {
        Ok(lvl) => lvl,
        Err(EngineError::NotAdmissible { reason, .. }) => {
            // an inadmissible level is an answer, not a failure
            return Ok((
                json!({ "t": t, "u": u, "admissible": false, "reason": reason }),
                Verdict::Pass,
            ));
        }
        Err(e) => return Err(e),
    };
    let spins = s_set(&lvl);
    let m2 = &lvl.m() + &Rat::from_int(2);
    let m2sq = &m2 * &m2;
    let curves: Value = if lvl.is_integral() {
        Value::Null
    } else {
        // q^2 + 4h/(m+2) = constant, one curve per non-integral spin
        let rows: Vec<Value> = spins
            .iter()
            .filter(|r| !r.is_integer())
            .map(|r| {
                let constant = (r * &(r + &Rat::from_int(2)))
                    .checked_div(&m2sq)
                    .expect("m + 2 > 0");
                json!({ "r": r, "constant": constant })
            })
            .collect();
        json!(rows)
    };
    let payload = json!({
        "t": t,
        "u": u,
        "admissible": true,
        "m": lvl.m(),
        "integral": lvl.is_integral(),
        "central_charge": lvl.central_charge(),
        "n_bound": lvl.n_bound(),
        "s_set": spins,
        "w_set": w_set(&lvl),
        "d_curves": curves,
    });
    Ok((payload, Verdict::Pass))
}

/// Exact singular-vector search at one grade of the Verma module with
/// highest weight (h, q, c).
pub fn cmd_singular_search(
    h: Rat,
    q: Rat,
    c: Rat,
    level: Rat,
    charge: i64,
    cfg: RunConfig,
) -> Report {
    match singular_search_inner(h, q, c, level, charge, &cfg) {
        Ok(payload) => Report::new("singular-search", cfg, payload, Verdict::Pass),
        Err(e) => Report::error("singular-search", cfg, e.to_string()),
    }
}

fn singular_search_inner(
    h: Rat,
    q: Rat,
    c: Rat,
    level: Rat,
    charge: i64,
    cfg: &RunConfig,
) -> Result<Value, EngineError> {
    let grade = Grade::checked(&level, charge)?;
    let module = Module::verma(HighestWeight::new(h, q, c), cfg.cutoff2);
    let basis_dim = module.basis(grade)?.len();
    let cert = find_singular(&module, grade, cfg.paranoid)?;
    Ok(json!({
        "hw": cert.hw,
        "grade": grade,
        "basis_dim": basis_dim,
        "solution_dim": cert.solution_dim,
        "vectors": cert.vectors.iter().map(element_json).collect::<Vec<_>>(),
        "audits": cert.audits.iter().map(audit_json).collect::<Vec<_>>(),
        "sound": cert.sound(),
    }))
}

fn embedding_json(rep: &EmbeddingReport) -> Value {
    let scans: Vec<Value> = rep
        .scans
        .iter()
        .map(|s| {
            json!({
                "grade": s.grade,
                "solution_dim": s.solution_dim,
                "predicted_by": s.predicted_by,
            })
        })
        .collect();
    json!({
        "j": Rat::from_half(rep.j2),
        "k": Rat::from_half(rep.k2),
        "hw": rep.hw,
        "charge_window": rep.charge_window,
        "i_max_used": rep.i_max_used,
        "scans": scans,
        "failures": rep.failures,
        "ok": rep.passed(),
    })
}

/// The audit suite at integral level m: weight-table size, the disjointness
/// sweep, solver-backed embedding scans over every table point, and the
/// explicit vacuum singular vector.
pub fn cmd_verify(m: i64, cfg: RunConfig) -> Report {
    match verify_inner(m, &cfg) {
        Ok((payload, verdict)) => Report::new("verify", cfg, payload, verdict),
        Err(e) => Report::error("verify", cfg, e.to_string()),
    }
}

fn verify_inner(m: i64, cfg: &RunConfig) -> Result<(Value, Verdict), EngineError> {
    if m < 1 {
        return Err(EngineError::NotAdmissible {
            t: m,
            u: 1,
            reason: "verification needs a positive integral level".to_string(),
        });
    }
    let lvl = AdmissibleLevel::new(m, 1)?;
    let table = w_set(&lvl);
    let expected_size = ((m + 1) * (m + 2) / 2) as usize;
    let table_ok = table.len() == expected_size;

    let disjoint = disjointness_check(m, cfg.i_max_formula)?;

    let mut embeddings = Vec::new();
    let mut embeddings_ok = true;
    for p in &table {
        let rep = verify_embedding_data(
            m,
            p.j2,
            p.k2,
            cfg.cutoff2,
            cfg.i_max_solver,
            cfg.charge_window(),
        )?;
        embeddings_ok &= rep.passed();
        embeddings.push(embedding_json(&rep));
    }

    let vs = verify_vsing(m, cfg.cutoff2)?;
    let vs_ok = vs.passed();

    let pass = table_ok && disjoint.passed() && embeddings_ok && vs_ok;
    let payload = json!({
        "m": m,
        "central_charge": lvl.central_charge(),
        "weight_table": {
            "size": table.len(),
            "expected_size": expected_size,
            "points": table,
            "ok": table_ok,
        },
        "disjointness": {
            "i_max": disjoint.i_max,
            "points_checked": disjoint.points_checked,
            "evaluations": disjoint.evaluations,
            "violations": disjoint.violations,
            "identity_checked": disjoint.identity_checked,
            "identity_ok": disjoint.identity_ok,
            "ok": disjoint.passed(),
        },
        "embeddings": embeddings,
        "embeddings_ok": embeddings_ok,
        "explicit_vector": {
            "m": vs.m,
            "central_charge": vs.c,
            "grade": vs.grade,
            "grade_ok": vs.grade_ok,
            "verma_term_count": vs.verma_term_count,
            "nonzero_in_quotient": vs.nonzero_in_quotient,
            "quotient_term_count": vs.quotient_term_count,
            "annihilation": vs.audit.as_ref().map(audit_json).unwrap_or(Value::Null),
            "ok": vs_ok,
        },
    });
    Ok((payload, if pass { Verdict::Pass } else { Verdict::Fail }))
}

/// Graded dimensions of the Verma module two independent ways: basis
/// enumeration against the character generating function.
pub fn cmd_dims(h: Rat, q: Rat, c: Rat, max_level: Rat, cfg: RunConfig) -> Report {
    match dims_inner(h, q, c, max_level, &cfg) {
        Ok((payload, verdict)) => Report::new("dims", cfg, payload, verdict),
        Err(e) => Report::error("dims", cfg, e.to_string()),
    }
}

fn dims_inner(
    h: Rat,
    q: Rat,
    c: Rat,
    max_level: Rat,
    cfg: &RunConfig,
) -> Result<(Value, Verdict), EngineError> {
    let max2 = max_level
        .doubled()
        .filter(|l2| *l2 >= 0)
        .ok_or_else(|| EngineError::BadLevel(max_level.clone()))?;
    if max2 > cfg.cutoff2 {
        return Err(EngineError::CutoffExceeded {
            requested: max_level.clone(),
            cutoff: Rat::from_half(cfg.cutoff2),
        });
    }
    let hw = HighestWeight::new(h, q, c);
    let module = Module::verma(hw.clone(), cfg.cutoff2);
    let mut rows = Vec::new();
    let mut all_agree = true;
    for level2 in 0..=max2 {
        let bound = isqrt(level2);
        for charge in -bound..=bound {
            if (level2 - charge).rem_euclid(2) != 0 {
                continue;
            }
            let g = Grade::new(level2, charge);
            let enumerated = module.graded_dim(g)?;
            let generating = module.graded_dim_gf(g)?;
            let agree = enumerated == generating;
            all_agree &= agree;
            rows.push(json!({
                "level": Rat::from_half(level2),
                "charge": charge,
                "dim_enumerated": enumerated,
                "dim_generating_function": generating,
                "agree": agree,
            }));
        }
    }
    let payload = json!({
        "hw": hw,
        "max_level": max_level,
        "rows": rows,
        "all_agree": all_agree,
    });
    Ok((payload, if all_agree { Verdict::Pass } else { Verdict::Fail }))
}
