//! Acceptance suite. Each test prints exactly one `criterion N (...): pass`
//! or `... fail` line (run with `--nocapture` to see them alongside the
//! harness output) and enforces the stated wall-clock budget.

use std::collections::BTreeSet;
use std::time::Instant;

use n2kit::algebra::{bracket, bracket_elem, AlgebraElement};
use n2kit::character::CharacterTable;
use n2kit::pbw::basis_words;
use n2kit::singular::{find_singular, verify_vsing};
use n2kit::spectrum::{d_membership, disjointness_check, s_set, w_set, AdmissibleLevel};
use n2kit::{Grade, HighestWeight, Mode, Module, Rat};

fn criterion<F>(n: u32, label: &str, budget_ms: u128, body: F)
where
    F: FnOnce() -> Result<(), String>,
{
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed().as_millis();
    match outcome {
        Ok(()) if elapsed <= budget_ms => {
            println!("criterion {n} ({label}): pass [{elapsed} ms]");
        }
        Ok(()) => {
            println!(
                "criterion {n} ({label}): fail [over budget: {elapsed} ms > {budget_ms} ms]"
            );
            panic!("criterion {n} exceeded its {budget_ms} ms budget ({elapsed} ms)");
        }
        Err(msg) => {
            println!("criterion {n} ({label}): fail [{msg}]");
            panic!("criterion {n} failed: {msg}");
        }
    }
}

fn vacuum_verma(c: Rat) -> Module {
    Module::verma(HighestWeight::new(Rat::zero(), Rat::zero(), c), 12)
}

/// Singular grades found by exhaustive scanning, as (level2, charge) pairs.
fn scan_singular_grades(
    module: &Module,
    max_level2: i64,
    charge_window: i64,
) -> Result<BTreeSet<(i64, i64)>, String> {
    let mut found = BTreeSet::new();
    for level2 in 1..=max_level2 {
        for charge in -charge_window..=charge_window {
            let g = Grade::new(level2, charge);
            if module.basis(g).map_err(|e| e.to_string())?.is_empty() {
                continue;
            }
            let cert = find_singular(module, g, false).map_err(|e| e.to_string())?;
            if cert.solution_dim > 0 {
                found.insert((level2, charge));
            }
        }
    }
    Ok(found)
}

#[test]
fn criterion_1_weight_table_cardinality() {
    criterion(1, "weight-table cardinality m=1..12", 1_000, || {
        for m in 1..=12 {
            let lvl = AdmissibleLevel::new(m, 1).map_err(|e| e.to_string())?;
            let got = w_set(&lvl).len() as i64;
            let want = (m + 1) * (m + 2) / 2;
            if got != want {
                return Err(format!("|W| at m={m} is {got}, expected {want}"));
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_2_vacuum_rim_singular_vectors() {
    criterion(2, "vacuum rim singular vectors", 1_000, || {
        for c in [Rat::one(), Rat::new(3, 2), Rat::from_int(-3), Rat::new(7, 11)] {
            let module = vacuum_verma(c.clone());
            for charge in [1i64, -1] {
                let cert = find_singular(&module, Grade::new(1, charge), false)
                    .map_err(|e| e.to_string())?;
                if cert.solution_dim != 1 {
                    return Err(format!(
                        "dimension {} at grade (1/2, {charge}) for c={c}, expected 1",
                        cert.solution_dim
                    ));
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_3_vacuum_embedding_spot_check() {
    criterion(3, "vacuum singular grades m=1,2", 240_000, || {
        let cases = vec![
            (Rat::one(), 5, vec![(1, -1), (1, 1), (4, 0)]),
            (Rat::new(3, 2), 6, vec![(1, -1), (1, 1), (6, 0)]),
        ];
        for (c, max_level2, expected) in cases {
            let module = vacuum_verma(c.clone());
            let found = scan_singular_grades(&module, max_level2, 1)?;
            let want: BTreeSet<(i64, i64)> = expected.iter().copied().collect();
            if found != want {
                return Err(format!("c={c}: found {found:?}, expected {want:?}"));
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_4_predicted_weight_concordance() {
    criterion(4, "predicted weights vs solver, m=1 non-vacuum", 300_000, || {
        let lvl = AdmissibleLevel::new(1, 1).map_err(|e| e.to_string())?;
        let c = lvl.central_charge();
        let points: Vec<_> = w_set(&lvl)
            .into_iter()
            .filter(|p| !(p.h.is_zero() && p.q.is_zero()))
            .collect();
        if points.len() != 2 {
            return Err(format!("expected 2 non-vacuum points, got {}", points.len()));
        }
        for p in points {
            let hw = HighestWeight::new(p.h.clone(), p.q.clone(), c.clone());
            let module = Module::verma(hw, 12);
            let found = scan_singular_grades(&module, 6, 1)?;
            let predicted: BTreeSet<(i64, i64)> =
                n2kit::singular::predicted_weights(1, p.j2, p.k2, 1)
                    .map_err(|e| e.to_string())?
                    .into_iter()
                    .filter(|w| w.level2 <= 6 && w.rel_charge.abs() <= 1)
                    .map(|w| (w.level2, w.rel_charge))
                    .collect();
            if found != predicted {
                return Err(format!(
                    "point (j,k)=({},{}): solver {found:?} vs i=1 predictions {predicted:?}",
                    Rat::from_half(p.j2),
                    Rat::from_half(p.k2)
                ));
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_5_explicit_singular_vector() {
    criterion(5, "explicit vacuum singular vector m=1,2", 240_000, || {
        for m in [1, 2] {
            let report = verify_vsing(m, 12).map_err(|e| e.to_string())?;
            if report.grade != Grade::new(2 * (m + 1), 0) {
                return Err(format!("m={m}: grade {} unexpected", report.grade));
            }
            if !report.passed() {
                return Err(format!(
                    "m={m}: grade_ok={} nonzero={} audit={:?}",
                    report.grade_ok,
                    report.nonzero_in_quotient,
                    report.audit.map(|a| a.passed())
                ));
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_6_family_disjointness_sweep() {
    criterion(6, "family disjointness sweep m=1..6, i<=50", 10_000, || {
        for m in 1..=6 {
            let report = disjointness_check(m, 50).map_err(|e| e.to_string())?;
            if !report.violations.is_empty() {
                return Err(format!(
                    "m={m}: {} violations, first {:?}",
                    report.violations.len(),
                    report.violations.first()
                ));
            }
            if !report.identity_ok {
                return Err(format!("m={m}: closed-form identity mismatch"));
            }
            let expected_evals = (((m + 1) * (m + 2) / 2) * 6 * 50) as usize;
            if report.evaluations != expected_evals {
                return Err(format!(
                    "m={m}: {} evaluations, expected {expected_evals}",
                    report.evaluations
                ));
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_7_engine_soundness() {
    criterion(7, "algebra laws, action, dimension counts", 60_000, || {
        // super-Jacobi over all mode triples with |index2| <= 8
        let mut modes = vec![Mode::central()];
        for n in -4i64..=4 {
            modes.push(Mode::l(n));
            modes.push(Mode::t(n));
        }
        for r2 in (-7i64..=7).step_by(2) {
            modes.push(Mode::g_plus(r2));
            modes.push(Mode::g_minus(r2));
        }
        let sign = |a: Mode, b: Mode| {
            if a.is_odd() && b.is_odd() {
                -Rat::one()
            } else {
                Rat::one()
            }
        };
        for &a in &modes {
            let ea = AlgebraElement::from_mode(a);
            for &b in &modes {
                let eb = AlgebraElement::from_mode(b);
                let ab = bracket(a, b);
                for &c in &modes {
                    let ec = AlgebraElement::from_mode(c);
                    let lhs = bracket_elem(&ea, &bracket(b, c));
                    let rhs = bracket_elem(&ab, &ec)
                        + bracket_elem(&eb, &bracket(a, c)).scaled(&sign(a, b));
                    if lhs != rhs {
                        return Err(format!("super-Jacobi fails at a={a} b={b} c={c}"));
                    }
                }
            }
        }

        // the action represents the bracket on every word of level <= 2
        let module = Module::verma(
            HighestWeight::new(Rat::new(3, 7), Rat::new(-2, 5), Rat::new(11, 3)),
            12,
        );
        let mut words = Vec::new();
        for level2 in 0..=4 {
            for charge in -4..=4 {
                words.extend(basis_words(Grade::new(level2, charge)));
            }
        }
        let mut small = vec![Mode::central()];
        for n in -2i64..=2 {
            small.push(Mode::l(n));
            small.push(Mode::t(n));
        }
        for r2 in (-3i64..=3).step_by(2) {
            small.push(Mode::g_plus(r2));
            small.push(Mode::g_minus(r2));
        }
        for &a in &small {
            for &b in &small {
                let ab = bracket(a, b);
                for w in &words {
                    let v = module.element_from_word(w.clone()).map_err(|e| e.to_string())?;
                    let bv = module.act(b, &v).map_err(|e| e.to_string())?;
                    let av = module.act(a, &v).map_err(|e| e.to_string())?;
                    let lhs = module
                        .act(a, &bv)
                        .map_err(|e| e.to_string())?
                        .checked_add(
                            &module
                                .act(b, &av)
                                .map_err(|e| e.to_string())?
                                .scaled(&-sign(a, b)),
                        )
                        .map_err(|e| e.to_string())?;
                    let rhs = module.act_elem(&ab, &v).map_err(|e| e.to_string())?;
                    let same = lhs.terms().eq(rhs.terms());
                    if !same {
                        return Err(format!("action mismatch at a={a} b={b} w={w}"));
                    }
                }
            }
        }

        // enumerated dimensions match the character generating function
        let table = CharacterTable::new(12);
        for level2 in 0..=12 {
            for charge in -6..=6 {
                let g = Grade::new(level2, charge);
                let enumerated = basis_words(g).len();
                let generating = table.dim(g).map_err(|e| e.to_string())?;
                if enumerated != generating {
                    return Err(format!(
                        "dimension mismatch at {g}: enumerated {enumerated}, series {generating}"
                    ));
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_8_fractional_level_machinery() {
    criterion(8, "fractional level m=1/2 spin set and curves", 1_000, || {
        let lvl = AdmissibleLevel::new(1, 2).map_err(|e| e.to_string())?;
        let spins = s_set(&lvl);
        let expected: Vec<Rat> = vec![
            Rat::new(-5, 2),
            Rat::new(-3, 2),
            Rat::new(-1, 2),
            Rat::zero(),
            Rat::new(1, 2),
            Rat::one(),
            Rat::from_int(2),
            Rat::from_int(3),
        ];
        if spins != expected {
            return Err(format!("s_set mismatch: {spins:?}"));
        }
        let hit = d_membership(&lvl, &Rat::new(1, 8), &Rat::zero()).map_err(|e| e.to_string())?;
        if hit != Some(Rat::new(1, 2)) {
            return Err(format!("(1/8, 0) membership witness {hit:?}, expected 1/2"));
        }
        let miss = d_membership(&lvl, &Rat::zero(), &Rat::zero()).map_err(|e| e.to_string())?;
        if miss.is_some() {
            return Err(format!("(0, 0) unexpectedly on a curve: {miss:?}"));
        }
        Ok(())
    });
}

#[test]
fn criterion_9_cli_determinism() {
    criterion(9, "byte-identical verify payloads", 600_000, || {
        let run = || -> Result<String, String> {
            let out = std::process::Command::new(env!("CARGO_BIN_EXE_n2kit"))
                .args(["verify", "1", "--format", "json"])
                .env_remove("N2KIT_CUTOFF")
                .output()
                .map_err(|e| e.to_string())?;
            if !out.status.success() {
                return Err(format!(
                    "verify 1 exited with {:?}: {}",
                    out.status.code(),
                    String::from_utf8_lossy(&out.stderr)
                ));
            }
            String::from_utf8(out.stdout).map_err(|e| e.to_string())
        };
        let first = run()?;
        let second = run()?;

        let payload_section = |text: &str| -> Result<String, String> {
            let start = text
                .find("\"payload\":")
                .ok_or_else(|| "no payload key in output".to_string())?;
            let end = text
                .find("\"verdict\":")
                .ok_or_else(|| "no verdict key in output".to_string())?;
            Ok(text[start..end].to_string())
        };
        if payload_section(&first)? != payload_section(&second)? {
            return Err("payload sections differ between runs".to_string());
        }

        // stronger: everything but the timing line is byte-identical
        let strip = |text: &str| -> String {
            text.lines()
                .filter(|l| !l.contains("\"timing_ms\""))
                .collect::<Vec<_>>()
                .join("\n")
        };
        if strip(&first) != strip(&second) {
            return Err("reports differ beyond the timing line".to_string());
        }
        Ok(())
    });
}
