use std::fmt::Write as _;

use galq_core::chars::{
    gamma_expected_magnitude, gamma_sum, gauss_sum_field, gauss_sum_ring, unit_group_characters,
    weil_bound, weil_sum, weil_sweep, CharacterSpec, TrivialConvention,
};
use galq_core::gf::FqPoly;
use galq_core::gring::RingSpec;
use num_complex::Complex64;
use serde::Serialize;

use super::field_of;
use crate::cli::{GlobalArgs, SumCommand};
use crate::output::{complex, csv, pass_label, real, Report, Verdict};
use crate::{flag, CliError, CliResult};

#[derive(Serialize)]
struct SumReport {
    kind: &'static str,
    inputs: serde_json::Value,
    value: Complex64,
    magnitude: f64,
    /// Expected magnitude or upper bound, when one applies.
    bound: Option<f64>,
    bound_kind: &'static str,
    pass: bool,
}

impl SumReport {
    fn text(&self) -> String {
        let mut out = format!("{} sum\ninputs: {}\n", self.kind, self.inputs);
        let _ = writeln!(out, "value = {}", complex(self.value));
        let _ = writeln!(out, "|value| = {}", real(self.magnitude));
        match self.bound {
            Some(b) => {
                let _ = writeln!(out, "{} = {}", self.bound_kind, real(b));
            }
            None => {
                let _ = writeln!(out, "no bound applies");
            }
        }
        let _ = writeln!(out, "{}", pass_label(self.pass));
        out
    }

    fn report(self) -> Report {
        let text = self.text();
        Report::new(Verdict::from_pass(self.pass), &self, text)
    }
}

pub fn run(cmd: &SumCommand, global: &GlobalArgs) -> CliResult<Report> {
    let tol = global.tol;
    match cmd {
        SumCommand::Weil { q, g, b } => {
            let field = field_of(*q)?;
            let f = FqPoly::new(&field, g.clone()).map_err(flag("--g"))?;
            let c = field.element(*b).map_err(flag("--b"))?;
            let kappa = CharacterSpec::additive_field(&field, c).map_err(flag("--b"))?;
            let value = weil_sum(&field, &f, &kappa).map_err(flag("--g"))?;
            let degree = f.degree().unwrap_or(0);
            let applies = *b != 0 && degree % field.p() as usize != 0;
            let bound = applies.then(|| weil_bound(degree, field.q()));
            Ok(SumReport {
                kind: "weil",
                inputs: serde_json::json!({"q": q, "f": f.display(), "degree": degree, "b": b}),
                value,
                magnitude: value.norm(),
                bound,
                bound_kind: "(d-1)·sqrt(q)",
                pass: bound.map_or(true, |bd| value.norm() <= bd + tol),
            }
            .report())
        }
        SumCommand::Gauss { q, k, b } => {
            let field = field_of(*q)?;
            let psi = CharacterSpec::multiplicative_field(&field, *k).map_err(flag("--k"))?;
            let c = field.element(*b).map_err(flag("--b"))?;
            let kappa = CharacterSpec::additive_field(&field, c).map_err(flag("--b"))?;
            let value = gauss_sum_field(&field, &psi, &kappa, None, None).map_err(flag("--q"))?;
            let qf = field.q() as f64;
            let (expected, pass, bound_kind) = match (psi.is_trivial(), *b == 0) {
                (true, true) => (
                    qf - 1.0,
                    (value - (qf - 1.0)).norm() <= tol,
                    "expected value q-1",
                ),
                (true, false) => (-1.0, (value + 1.0).norm() <= tol, "expected value -1"),
                (false, true) => (0.0, value.norm() <= tol, "expected value 0"),
                (false, false) => (
                    qf.sqrt(),
                    (value.norm() - qf.sqrt()).abs() <= tol,
                    "expected magnitude sqrt(q)",
                ),
            };
            Ok(SumReport {
                kind: "gauss",
                inputs: serde_json::json!({"q": q, "k": psi.parameter(), "b": b}),
                value,
                magnitude: value.norm(),
                bound: Some(expected),
                bound_kind,
                pass,
            }
            .report())
        }
        SumCommand::Gamma { m, b } => {
            let ring = RingSpec::new(*m).map_err(flag("--m"))?;
            let ys: Vec<_> = match b {
                Some(b) => vec![ring.element(*b).map_err(flag("--b"))?],
                None => ring.elements().collect(),
            };
            #[derive(Serialize)]
            struct GammaRow {
                y: u32,
                element: String,
                value: Complex64,
                magnitude: f64,
                expected: f64,
                pass: bool,
            }
            let rows = ys
                .into_iter()
                .map(|y| {
                    let value = gamma_sum(&ring, y)?;
                    let expected = gamma_expected_magnitude(&ring, y)?;
                    Ok(GammaRow {
                        y: y.index(),
                        element: ring.format_element(y),
                        value,
                        magnitude: value.norm(),
                        expected,
                        pass: (value.norm() - expected).abs() <= tol,
                    })
                })
                .collect::<galq_core::Result<Vec<_>>>()
                .map_err(flag("--b"))?;
            let pass = rows.iter().all(|r| r.pass);
            let mut text = format!("Teichmüller sums over {ring}\n");
            for r in &rows {
                let _ = writeln!(
                    text,
                    "y={} ({}) value={} |value|={} expected={} {}",
                    r.y,
                    r.element,
                    complex(r.value),
                    real(r.magnitude),
                    real(r.expected),
                    pass_label(r.pass)
                );
            }
            let _ = writeln!(text, "{}", pass_label(pass));
            let table = csv(
                &["y", "element", "re", "im", "magnitude", "expected", "pass"],
                rows.iter().map(|r| {
                    vec![
                        r.y.to_string(),
                        r.element.clone(),
                        real(r.value.re),
                        real(r.value.im),
                        real(r.magnitude),
                        real(r.expected),
                        r.pass.to_string(),
                    ]
                }),
            );
            let body = serde_json::json!({"m": m, "rows": rows, "pass": pass});
            Ok(Report::new(Verdict::from_pass(pass), &body, text).with_csv(table))
        }
        SumCommand::RingGauss { m, k, b } => {
            let ring = RingSpec::new(*m).map_err(flag("--m"))?;
            let y = ring.element(*b).map_err(flag("--b"))?;
            let chars = unit_group_characters(&ring).map_err(flag("--m"))?;
            let psi = &chars[(*k % chars.len() as u64) as usize];
            let value = gauss_sum_ring(&ring, psi, y, TrivialConvention::UnitSupported)
                .map_err(flag("--b"))?;
            let applies = ring.is_unit(y);
            let bound = applies.then(|| (1u64 << m) as f64);
            Ok(SumReport {
                kind: "ring gauss",
                inputs: serde_json::json!({"m": m, "k": psi.parameter(), "b": b, "unit_argument": applies}),
                value,
                magnitude: value.norm(),
                bound,
                bound_kind: "2^m",
                pass: bound.map_or(true, |bd| value.norm() <= bd + tol),
            }
            .report())
        }
        SumCommand::WeilSweep { q, n, k } => {
            let field = field_of(*q)?;
            if *n == 0 {
                return Err(CliError::Usage(
                    "invalid value for --n: need at least one sample".into(),
                ));
            }
            let sweep = weil_sweep(&field, *n, *k, global.seed, tol).map_err(flag("--k"))?;
            let worst = sweep
                .samples
                .iter()
                .map(|s| s.magnitude - s.bound)
                .fold(f64::NEG_INFINITY, f64::max);
            let failures = sweep.samples.iter().filter(|s| !s.pass).count();
            let text = format!(
                "Weil sweep over GF({}) with seed {}\nsamples = {}\nfailures = {failures}\nmax(|S| - bound) = {}\n{}\n",
                sweep.q,
                sweep.seed,
                sweep.samples.len(),
                real(worst),
                pass_label(sweep.all_pass)
            );
            let table = csv(
                &[
                    "degree",
                    "coefficients",
                    "character",
                    "re",
                    "im",
                    "magnitude",
                    "bound",
                    "pass",
                ],
                sweep.samples.iter().map(|s| {
                    let coeffs: Vec<String> = s.coefficients.iter().map(u32::to_string).collect();
                    vec![
                        s.degree.to_string(),
                        coeffs.join(","),
                        s.character.to_string(),
                        real(s.value.re),
                        real(s.value.im),
                        real(s.magnitude),
                        real(s.bound),
                        s.pass.to_string(),
                    ]
                }),
            );
            Ok(Report::new(Verdict::from_pass(sweep.all_pass), &sweep, text).with_csv(table))
        }
    }
}
