use std::fmt::Write as _;

use galq_core::codes::plane_axioms_check;
use galq_core::pg::{
    arc_search, bruck_ryser_excluded, build_pg, classify_arc, incidence_matrix, is_arc, is_ovoid,
    sum_of_two_squares, ArcClass, PointSet, ProjectiveSpace, SearchMode,
};
use serde::Serialize;

use super::field_of;
use crate::cli::PgCommand;
use crate::output::{csv, pass_label, Report, Verdict};
use crate::{flag, CliResult};

fn space(dim: usize, q: u64) -> CliResult<ProjectiveSpace> {
    let field = field_of(q)?;
    build_pg(dim, &field).map_err(flag("--dim"))
}

fn point_label(space: &ProjectiveSpace, i: usize) -> String {
    let coords: Vec<String> = space.points()[i].iter().map(u32::to_string).collect();
    format!("{i}:({})", coords.join(","))
}

#[derive(Serialize)]
struct SetAnalysis {
    points: Vec<usize>,
    coordinates: Vec<Vec<u32>>,
    no_three_collinear: bool,
    collinear_triple: Option<[usize; 3]>,
    general_position: bool,
    dependent_subset: Option<Vec<usize>>,
    tangents: Option<Vec<usize>>,
    class: Option<ArcClass>,
    ovoid: Option<bool>,
}

fn analyse(set: &PointSet<'_>) -> CliResult<SetAnalysis> {
    let space = set.space();
    let report = is_arc(set);
    let (tangents, class) = if space.delta() == 2 && report.no_three_collinear && !set.is_empty() {
        let (t, c) = classify_arc(set).map_err(flag("--points"))?;
        (Some(t), Some(c))
    } else {
        (None, None)
    };
    Ok(SetAnalysis {
        points: set.indices().to_vec(),
        coordinates: set
            .indices()
            .iter()
            .map(|&i| space.points()[i].clone())
            .collect(),
        no_three_collinear: report.no_three_collinear,
        collinear_triple: report.collinear_triple,
        general_position: report.general_position,
        dependent_subset: report.dependent_subset,
        tangents,
        class,
        ovoid: (space.delta() == 3).then(|| is_ovoid(set)),
    })
}

fn analysis_text(space: &ProjectiveSpace, a: &SetAnalysis) -> String {
    let labels: Vec<String> = a.points.iter().map(|&i| point_label(space, i)).collect();
    let mut out = format!("points ({}): {}\n", a.points.len(), labels.join(" "));
    let _ = writeln!(out, "no three collinear: {}", a.no_three_collinear);
    if let Some(t) = a.collinear_triple {
        let _ = writeln!(
            out,
            "certificate: collinear triple {} {} {}",
            point_label(space, t[0]),
            point_label(space, t[1]),
            point_label(space, t[2])
        );
    }
    let _ = writeln!(out, "general position: {}", a.general_position);
    if let (Some(d), None) = (&a.dependent_subset, a.collinear_triple) {
        let labels: Vec<String> = d.iter().map(|&i| point_label(space, i)).collect();
        let _ = writeln!(out, "certificate: dependent subset {}", labels.join(" "));
    }
    if let (Some(t), Some(c)) = (&a.tangents, a.class) {
        let _ = writeln!(out, "tangents per point: {t:?}\nclass: {c:?}");
    }
    if let Some(o) = a.ovoid {
        let _ = writeln!(out, "ovoid: {o}");
    }
    out
}

pub fn run(cmd: &PgCommand) -> CliResult<Report> {
    match cmd {
        PgCommand::Build { dim, q } => {
            let space = space(*dim, *q)?;
            let summary = space.summary();
            let mut text = format!(
                "PG({dim}, {q}): {} points, {} lines, {} points per line\n",
                space.point_count(),
                space.lines().len(),
                q + 1
            );
            for i in 0..space.point_count() {
                let _ = writeln!(text, "{}", point_label(&space, i));
            }
            for (l, line) in space.lines().iter().enumerate() {
                let members: Vec<String> = line.iter().map(usize::to_string).collect();
                let _ = writeln!(text, "line {l}: {}", members.join(" "));
            }
            let table = csv(
                &["point", "coordinates"],
                space.points().iter().enumerate().map(|(i, p)| {
                    let coords: Vec<String> = p.iter().map(u32::to_string).collect();
                    vec![i.to_string(), coords.join(",")]
                }),
            );
            Ok(Report::new(Verdict::Info, &summary, text).with_csv(table))
        }
        PgCommand::Arcs {
            dim,
            q,
            points,
            greedy,
        } => {
            let space = space(*dim, *q)?;
            match points {
                Some(points) => {
                    let set = PointSet::new(&space, points.clone()).map_err(flag("--points"))?;
                    let analysis = analyse(&set)?;
                    let pass = if *dim == 2 {
                        analysis.general_position
                    } else {
                        analysis.no_three_collinear
                    };
                    let mut text = analysis_text(&space, &analysis);
                    let _ = writeln!(text, "{}", pass_label(pass));
                    let body = serde_json::json!({"delta": dim, "q": q, "analysis": analysis, "pass": pass});
                    Ok(Report::new(Verdict::from_pass(pass), &body, text))
                }
                None => {
                    let mode = if *greedy {
                        SearchMode::Greedy
                    } else {
                        SearchMode::Exhaustive
                    };
                    let found = arc_search(&space, mode).map_err(flag("--q"))?;
                    let set = PointSet::new(&space, found.points.clone()).map_err(flag("--q"))?;
                    let analysis = analyse(&set)?;
                    let mut text = format!(
                        "{:?} search in PG({dim}, {q}): size {}{}\n",
                        found.mode,
                        found.size,
                        if found.certified_maximum {
                            " (certified maximum)"
                        } else {
                            ""
                        }
                    );
                    text.push_str(&analysis_text(&space, &analysis));
                    let body = serde_json::json!({"search": found, "analysis": analysis});
                    Ok(Report::new(Verdict::Info, &body, text))
                }
            }
        }
        PgCommand::Incidence { q } => {
            let space = space(2, *q)?;
            let matrix = incidence_matrix(&space).map_err(flag("--q"))?;
            let axioms = plane_axioms_check(&matrix);
            let mut text = String::new();
            for row in &matrix {
                let cells: Vec<String> = row.iter().map(u32::to_string).collect();
                let _ = writeln!(text, "{}", cells.join(" "));
            }
            let _ = writeln!(
                text,
                "projective plane axioms: {}{}",
                pass_label(axioms.pass),
                axioms
                    .order
                    .map_or(String::new(), |o| format!(" (order {o})"))
            );
            let n = matrix.len();
            let header: Vec<String> = (0..n).map(|j| format!("p{j}")).collect();
            let header: Vec<&str> = header.iter().map(String::as_str).collect();
            let table = csv(
                &header,
                matrix
                    .iter()
                    .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>()),
            );
            let pass = axioms.pass;
            let body = serde_json::json!({"q": q, "matrix": matrix, "plane_axioms": axioms});
            Ok(Report::new(Verdict::from_pass(pass), &body, text).with_csv(table))
        }
        PgCommand::BruckRyser { qmax } => {
            #[derive(Serialize)]
            struct Row {
                q: u64,
                residue_mod_4: u64,
                sum_of_two_squares: bool,
                excluded: bool,
            }
            let rows: Vec<Row> = (2..=*qmax)
                .map(|q| Row {
                    q,
                    residue_mod_4: q % 4,
                    sum_of_two_squares: sum_of_two_squares(q),
                    excluded: bruck_ryser_excluded(q),
                })
                .collect();
            let excluded: Vec<u64> = rows.iter().filter(|r| r.excluded).map(|r| r.q).collect();
            let text = format!("excluded orders up to {qmax}: {excluded:?}\n");
            let table = csv(
                &["q", "residue_mod_4", "sum_of_two_squares", "excluded"],
                rows.iter().map(|r| {
                    vec![
                        r.q.to_string(),
                        r.residue_mod_4.to_string(),
                        r.sum_of_two_squares.to_string(),
                        r.excluded.to_string(),
                    ]
                }),
            );
            let body = serde_json::json!({"qmax": qmax, "excluded": excluded, "rows": rows});
            Ok(Report::new(Verdict::Info, &body, text).with_csv(table))
        }
    }
}
