use std::fmt::Write as _;

use galq_core::codes::{
    cyclic_code, cyclic_extension_matrix, plane_axioms_check, xn1_divisors, DistanceReport,
};
use galq_core::gf::FqPoly;
use serde::Serialize;

use super::field_of;
use crate::cli::CodeCommand;
use crate::output::{csv, Report, Verdict};
use crate::{flag, CliResult};

/// Attached to the binary [7,4] Hamming code, whose minimum distance is
/// sometimes misquoted as 4.
pub const HAMMING_NOTE: &str =
    "erratum: the binary [7,4] Hamming code has minimum distance 3 ([7,4,3]), not 4 as in the label [7,4,4]";

fn matrix_text(matrix: &[Vec<u32>]) -> String {
    let mut out = String::new();
    for row in matrix {
        let cells: Vec<String> = row.iter().map(u32::to_string).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    out
}

fn matrix_csv(matrix: &[Vec<u32>]) -> String {
    let n = matrix.first().map_or(0, Vec::len);
    let header: Vec<String> = (0..n).map(|j| format!("c{j}")).collect();
    let header: Vec<&str> = header.iter().map(String::as_str).collect();
    csv(
        &header,
        matrix
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>()),
    )
}

pub fn run(cmd: &CodeCommand) -> CliResult<Report> {
    match cmd {
        CodeCommand::Distance { n, q, g } => {
            let field = field_of(*q)?;
            let g = FqPoly::new(&field, g.clone()).map_err(flag("--g"))?;
            let code = cyclic_code(*n, &field, &g).map_err(flag("--g"))?;
            let report = code.min_distance().map_err(flag("--n"))?;
            let note = (*q == 2 && report.n == 7 && report.k == 4 && report.d_min == 3)
                .then_some(HAMMING_NOTE);
            #[derive(Serialize)]
            struct Distance<'a> {
                generator: String,
                #[serde(flatten)]
                report: &'a DistanceReport,
                generator_matrix: &'a [Vec<u32>],
                note: Option<&'static str>,
            }
            let body = Distance {
                generator: g.display(),
                report: &report,
                generator_matrix: &code.generator_matrix,
                note,
            };
            let mut text = format!(
                "[{}, {}, {}] code over GF({}) generated by {}\n",
                report.n,
                report.k,
                report.d_min,
                report.q,
                g.display()
            );
            let _ = writeln!(text, "d_min = {}", report.d_min);
            let _ = writeln!(
                text,
                "corrects up to {} errors, detects up to {}",
                report.correct_up_to, report.detect_up_to
            );
            let _ = writeln!(
                text,
                "singleton_gap = {} (MDS: {})",
                report.singleton_gap, report.is_mds
            );
            let _ = writeln!(
                text,
                "weight distribution = {:?}",
                report.weight_distribution
            );
            if let Some(note) = note {
                let _ = writeln!(text, "{note}");
            }
            let table = csv(
                &["weight", "count"],
                report
                    .weight_distribution
                    .iter()
                    .enumerate()
                    .map(|(w, c)| vec![w.to_string(), c.to_string()]),
            );
            Ok(Report::new(Verdict::Info, &body, text).with_csv(table))
        }
        CodeCommand::Divisors { n, q } => {
            let field = field_of(*q)?;
            let divisors = xn1_divisors(*n, &field).map_err(flag("--n"))?;
            #[derive(Serialize)]
            struct Divisor {
                polynomial: String,
                coefficients: Vec<u32>,
                degree: usize,
                k: usize,
            }
            let rows: Vec<Divisor> = divisors
                .iter()
                .map(|d| {
                    let degree = d.degree().unwrap_or(0);
                    Divisor {
                        polynomial: d.display(),
                        coefficients: d.coeffs().to_vec(),
                        degree,
                        k: n - degree,
                    }
                })
                .collect();
            let mut text = format!("monic divisors of x^{n}-1 over GF({q}): {}\n", rows.len());
            for r in &rows {
                let _ = writeln!(text, "deg {} (k = {}): {}", r.degree, r.k, r.polynomial);
            }
            let table = csv(
                &["degree", "k", "polynomial", "coefficients"],
                rows.iter().map(|r| {
                    let coeffs: Vec<String> = r.coefficients.iter().map(u32::to_string).collect();
                    vec![
                        r.degree.to_string(),
                        r.k.to_string(),
                        r.polynomial.clone(),
                        coeffs.join(","),
                    ]
                }),
            );
            let body = serde_json::json!({"n": n, "q": q, "divisors": rows});
            Ok(Report::new(Verdict::Info, &body, text).with_csv(table))
        }
        CodeCommand::Matrix { n, q, g, cyclic } => {
            let field = field_of(*q)?;
            let g = FqPoly::new(&field, g.clone()).map_err(flag("--g"))?;
            let matrix = if *cyclic {
                cyclic_extension_matrix(*n, &field, &g).map_err(flag("--g"))?
            } else {
                cyclic_code(*n, &field, &g)
                    .map_err(flag("--g"))?
                    .generator_matrix
            };
            let axioms = cyclic.then(|| plane_axioms_check(&matrix));
            let mut text = matrix_text(&matrix);
            if let Some(a) = &axioms {
                let _ = writeln!(
                    text,
                    "projective plane axioms: {}{}",
                    if a.pass { "hold" } else { "fail" },
                    a.order.map_or(String::new(), |o| format!(" (order {o})"))
                );
            }
            let body = serde_json::json!({"generator": g.display(), "matrix": matrix, "plane_axioms": axioms});
            Ok(Report::new(Verdict::Info, &body, text).with_csv(matrix_csv(&matrix)))
        }
    }
}
