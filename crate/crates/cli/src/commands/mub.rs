use std::fmt::Write as _;

use galq_core::gring::RingSpec;
use galq_core::mub::{
    bell_fourier, bell_galois, entanglement_check, galois_bell_bases, gram_deviation, mub_even,
    mub_odd, verify_unbiasedness, BasisSet,
};
use galq_core::numtheory::prime_power;
use serde::Serialize;

use super::field_of;
use crate::cli::{GlobalArgs, MubCommand, MubTarget};
use crate::output::{csv, pass_label, real, Report, Verdict};
use crate::{flag, CliError, CliResult};

fn basis_set(target: &MubTarget) -> CliResult<BasisSet> {
    match (target.q, target.m) {
        (Some(q), None) => match prime_power(q) {
            Some((2, m)) => {
                let ring = RingSpec::new(m).map_err(flag("--q"))?;
                mub_even(&ring, target.k).map_err(flag("--q"))
            }
            _ => mub_odd(&field_of(q)?, target.k).map_err(flag("--q")),
        },
        (None, Some(m)) => {
            let ring = RingSpec::new(m).map_err(flag("--m"))?;
            mub_even(&ring, target.k).map_err(flag("--m"))
        }
        _ => Err(CliError::Usage(
            "exactly one of --q or --m is required".into(),
        )),
    }
}

pub fn run(cmd: &MubCommand, global: &GlobalArgs) -> CliResult<Report> {
    let tol = global.tol;
    match cmd {
        MubCommand::Verify(target) => {
            let set = basis_set(target)?;
            let report = verify_unbiasedness(&set, tol).map_err(flag("--q"))?;
            let complete = set.is_complete();
            let pass = report.pass && complete;
            #[derive(Serialize)]
            struct Verify<'a> {
                #[serde(flatten)]
                report: &'a galq_core::mub::UnbiasednessReport,
                k: u64,
                complete: bool,
                expected_overlap: f64,
            }
            let body = Verify {
                report: &report,
                k: target.k,
                complete,
                expected_overlap: set.overlap,
            };
            let text = format!(
                "dimension = {}\nbases = {} (complete: {complete})\nmax cross-basis deviation from {} = {}\nmax within-basis deviation = {}\ntolerance = {}\n{}\n",
                report.dim,
                report.bases,
                real(set.overlap),
                real(report.max_abs_deviation),
                real(report.max_ortho_deviation),
                real(tol),
                pass_label(pass)
            );
            Ok(Report::new(Verdict::from_pass(pass), &body, text))
        }
        MubCommand::Export(target) => {
            let set = basis_set(target)?;
            let mut text = format!("{} bases in dimension {}\n", set.bases.len(), set.dim);
            let mut rows = Vec::new();
            for (position, basis) in set.bases.iter().enumerate() {
                let label = basis
                    .a
                    .map_or("computational".to_string(), |a| a.to_string());
                let _ = writeln!(text, "basis {position} (a = {label})");
                for v in &basis.vectors {
                    let amps: Vec<String> = v
                        .state
                        .amplitudes
                        .iter()
                        .map(|&z| crate::output::complex(z))
                        .collect();
                    let _ = writeln!(text, "  b = {}: [{}]", v.b, amps.join(", "));
                    for (n, z) in v.state.amplitudes.iter().enumerate() {
                        rows.push(vec![
                            position.to_string(),
                            label.clone(),
                            v.b.to_string(),
                            n.to_string(),
                            real(z.re),
                            real(z.im),
                        ]);
                    }
                }
            }
            let table = csv(&["basis", "a", "b", "n", "re", "im"], rows);
            Ok(Report::new(Verdict::Info, &set, text).with_csv(table))
        }
        MubCommand::Bell { dim, q, h, a, b } => match (dim, q) {
            (Some(dim), None) => fourier_family(*dim, tol),
            (None, Some(q)) => galois_family(*q, *h, a.zip(*b), tol),
            _ => Err(CliError::Usage(
                "exactly one of --dim or --q is required".into(),
            )),
        },
    }
}

#[derive(Serialize)]
struct BellFamily {
    family: &'static str,
    q: usize,
    states: usize,
    gram_deviation: f64,
    max_entanglement_deviation: f64,
    /// Cross-basis overlap check for Galois sub-bases.
    max_overlap_deviation: Option<f64>,
    tolerance: f64,
    pass: bool,
}

impl BellFamily {
    fn report(self) -> Report {
        let mut text = format!(
            "{} Bell states, q = {}, {} states\nGram deviation = {}\nmax |rho - I/q| = {}\n",
            self.family,
            self.q,
            self.states,
            real(self.gram_deviation),
            real(self.max_entanglement_deviation)
        );
        if let Some(d) = self.max_overlap_deviation {
            let _ = writeln!(
                text,
                "max cross-basis deviation from 1/sqrt(q) = {}",
                real(d)
            );
        }
        let _ = writeln!(text, "{}", pass_label(self.pass));
        Report::new(Verdict::from_pass(self.pass), &self, text)
    }
}

fn fourier_family(q: usize, tol: f64) -> CliResult<Report> {
    let states = (0..q)
        .flat_map(|h| (0..q).map(move |k| bell_fourier(q, h, k)))
        .collect::<galq_core::Result<Vec<_>>>()
        .map_err(flag("--dim"))?;
    let gram = gram_deviation(&states).map_err(flag("--dim"))?;
    let mut worst = 0f64;
    for s in &states {
        worst = worst.max(
            entanglement_check(s, tol)
                .map_err(flag("--dim"))?
                .max_deviation,
        );
    }
    Ok(BellFamily {
        family: "Fourier",
        q,
        states: states.len(),
        gram_deviation: gram,
        max_entanglement_deviation: worst,
        max_overlap_deviation: None,
        tolerance: tol,
        pass: gram <= tol && worst <= tol,
    }
    .report())
}

fn galois_family(q: u64, h: u32, single: Option<(u32, u32)>, tol: f64) -> CliResult<Report> {
    let field = field_of(q)?;
    let h = field.element(h).map_err(flag("--h"))?;
    if let Some((a, b)) = single {
        let a = field.element(a).map_err(flag("--a"))?;
        let b = field.element(b).map_err(flag("--b"))?;
        let state = bell_galois(&field, a, h, b).map_err(flag("--q"))?;
        let report = entanglement_check(&state, tol).map_err(flag("--q"))?;
        let mut text = format!(
            "Galois Bell state a={} h={} b={} in dimension {}\nmax |rho - I/q| = {}\n",
            a.index(),
            h.index(),
            b.index(),
            state.dim,
            real(report.max_deviation)
        );
        let _ = writeln!(text, "{}", pass_label(report.pass));
        let body = serde_json::json!({"state": state, "entanglement": report});
        return Ok(Report::new(Verdict::from_pass(report.pass), &body, text));
    }
    let set = galois_bell_bases(&field, h).map_err(flag("--q"))?;
    let unbiased = verify_unbiasedness(&set, tol).map_err(flag("--q"))?;
    let states: Vec<_> = set
        .bases
        .iter()
        .flat_map(|b| b.vectors.iter().map(|v| v.state.clone()))
        .collect();
    let mut worst = 0f64;
    for s in &states {
        worst = worst.max(
            entanglement_check(s, tol)
                .map_err(flag("--q"))?
                .max_deviation,
        );
    }
    Ok(BellFamily {
        family: "Galois",
        q: q as usize,
        states: states.len(),
        gram_deviation: unbiased.max_ortho_deviation,
        max_entanglement_deviation: worst,
        max_overlap_deviation: Some(unbiased.max_abs_deviation),
        tolerance: tol,
        pass: unbiased.pass && worst <= tol,
    }
    .report())
}
