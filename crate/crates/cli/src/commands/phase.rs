use std::f64::consts::PI;
use std::fmt::Write as _;

use galq_core::phase::{
    galois_expectation, galois_phase_operator, lock_operator, lock_sweep, LockRange,
};
use serde::Serialize;

use super::field_of;
use crate::cli::{GlobalArgs, PhaseCommand, RangeArg};
use crate::output::{csv, pass_label, real, Report, Verdict};
use crate::{flag, CliResult};

pub fn run(cmd: &PhaseCommand, global: &GlobalArgs) -> CliResult<Report> {
    let tol = global.tol;
    match *cmd {
        PhaseCommand::LockSweep {
            q,
            qmax,
            beta,
            range,
        } => {
            let range = match range {
                RangeArg::Full => LockRange::Full,
                RangeArg::Totient => LockRange::Totient,
            };
            let sweep = lock_sweep(q, qmax, beta, range).map_err(flag("--q"))?;
            let maxima = sweep.interior_local_maxima();
            let correlation = sweep.mangoldt_correlation();
            let mut text = format!(
                "lock expectations, beta = {}, range = {range:?}\n",
                real(beta)
            );
            let _ = writeln!(text, "q | closed form | spectral | pi*Lambda(q)/ln q");
            for r in &sweep.rows {
                let _ = writeln!(
                    text,
                    "{} | {} | {} | {}",
                    r.q,
                    real(r.expectation_closed_form),
                    real(r.expectation_spectral),
                    r.mangoldt_reference.map_or("-".to_string(), real)
                );
            }
            let _ = writeln!(text, "interior local maxima: {maxima:?}");
            let _ = writeln!(
                text,
                "Pearson correlation over prime powers: {}",
                correlation.map_or("undefined".to_string(), real)
            );
            let table = csv(
                &[
                    "q",
                    "expectation_closed_form",
                    "expectation_spectral",
                    "mangoldt_reference",
                ],
                sweep.rows.iter().map(|r| {
                    vec![
                        r.q.to_string(),
                        real(r.expectation_closed_form),
                        real(r.expectation_spectral),
                        r.mangoldt_reference.map_or(String::new(), real),
                    ]
                }),
            );
            #[derive(Serialize)]
            struct Sweep<'a> {
                #[serde(flatten)]
                sweep: &'a galq_core::phase::PhaseSweep,
                interior_local_maxima: Vec<usize>,
                mangoldt_correlation: Option<f64>,
            }
            let body = Sweep {
                sweep: &sweep,
                interior_local_maxima: maxima,
                mangoldt_correlation: correlation,
            };
            Ok(Report::new(Verdict::Info, &body, text).with_csv(table))
        }
        PhaseCommand::Lock { q } => {
            let op = lock_operator(q).map_err(flag("--q"))?;
            let hermitian = op
                .spectral
                .hermitian_deviation()
                .max(op.ramanujan.hermitian_deviation());
            let pass = op.projector_deviation <= tol && hermitian <= tol;
            let text = format!(
                "lock operator, q = {q}\nprojector deviation of the Ramanujan kernel = {}\nhermitian deviation = {}\ntrace of projector = {}\n{}\n",
                real(op.projector_deviation),
                real(hermitian),
                real(op.ramanujan.trace().re),
                pass_label(pass)
            );
            let body =
                serde_json::json!({"operator": op, "hermitian_deviation": hermitian, "pass": pass});
            Ok(Report::new(Verdict::from_pass(pass), &body, text))
        }
        PhaseCommand::Operator { q, a, k } => {
            let field = field_of(q)?;
            let a = field.element(a).map_err(flag("--a"))?;
            let op = galois_phase_operator(&field, a, k).map_err(flag("--q"))?;
            let hermitian = op.spectral.hermitian_deviation();
            let pass = op.max_discrepancy <= tol && hermitian <= tol;
            let text = format!(
                "Galois phase operator, q = {}, a = {}, k = {}\nspectral vs matrix elements: max discrepancy = {}\nhermitian deviation = {}\n{}\n",
                op.q,
                op.a,
                op.k,
                real(op.max_discrepancy),
                real(hermitian),
                pass_label(pass)
            );
            let body =
                serde_json::json!({"operator": op, "hermitian_deviation": hermitian, "pass": pass});
            Ok(Report::new(Verdict::from_pass(pass), &body, text))
        }
        PhaseCommand::Galois { q, a, k, beta } => {
            let field = field_of(q)?;
            let a = field.element(a).map_err(flag("--a"))?;
            let e = galois_expectation(&field, a, k, beta).map_err(flag("--q"))?;
            let diagonal_expected = PI * (e.q as f64 - 1.0) / e.q as f64;
            let pass = (e.value - e.direct).abs() <= tol
                && e.imaginary_residue <= tol
                && (e.diagonal - diagonal_expected).abs() <= tol;
            let text = format!(
                "Galois phase expectation, q = {}, a = {}, k = {}, beta = {}\nmatrix-element sum = {}\nspectral = {}\nimaginary residue = {}\ndiagonal = {} (expected {})\n{}\n",
                e.q,
                e.a,
                e.k,
                real(e.beta),
                real(e.value),
                real(e.direct),
                real(e.imaginary_residue),
                real(e.diagonal),
                real(diagonal_expected),
                pass_label(pass)
            );
            let body = serde_json::json!({"expectation": e, "diagonal_expected": diagonal_expected, "pass": pass});
            Ok(Report::new(Verdict::from_pass(pass), &body, text))
        }
    }
}
