use std::f64::consts::TAU;
use std::fmt::Write as _;

use galq_core::gf::FieldSpec;
use galq_core::gring::RingSpec;
use galq_core::numtheory::{cyclotomic_poly, divisors, gcd, ramanujan_sum, ArithmeticProfile};
use serde::Serialize;

use crate::cli::{ArithCommand, FieldCommand, GlobalArgs, RingCommand};
use crate::output::{csv, pass_label, real, Report, Verdict};
use crate::{flag, CliError, CliResult};

pub fn field(cmd: &FieldCommand) -> CliResult<Report> {
    let FieldCommand::Table { p, m, g } = cmd;
    let field = FieldSpec::new(*p, *m, g.as_deref()).map_err(flag(if g.is_some() {
        "--g"
    } else {
        "--p"
    }))?;
    let table = field.table().map_err(flag("--m"))?;
    let rows = table.rows.iter().map(|r| {
        vec![
            r.exponent.map_or(String::new(), |e| e.to_string()),
            r.index.to_string(),
            r.power.clone(),
            r.polynomial.clone(),
            r.tuple.clone(),
        ]
    });
    let csv = csv(&["exponent", "index", "power", "polynomial", "tuple"], rows);
    Ok(Report::new(Verdict::Info, &table, table.to_string()).with_csv(csv))
}

pub fn ring(cmd: &RingCommand) -> CliResult<Report> {
    let RingCommand::Table { m, g } = cmd;
    let ring = match (m, g) {
        (_, Some(g)) => {
            let ring = RingSpec::from_hbar(g).map_err(flag("--g"))?;
            if m.is_some_and(|m| m != ring.m()) {
                return Err(CliError::Usage(format!(
                    "invalid value for --m: modulus given by --g has degree {}",
                    ring.m()
                )));
            }
            ring
        }
        (Some(m), None) => RingSpec::new(*m).map_err(flag("--m"))?,
        (None, None) => return Err(CliError::Usage("one of --m or --g is required".into())),
    };
    let rows = ring.table().map_err(flag("--m"))?;

    #[derive(Serialize)]
    struct RingTable<'a> {
        m: u32,
        modulus: Vec<u32>,
        description: String,
        rows: &'a [galq_core::gring::RingTableRow],
    }
    let body = RingTable {
        m: ring.m(),
        modulus: ring.modulus().to_vec(),
        description: ring.to_string(),
        rows: &rows,
    };
    let mut text = format!("{ring}\n");
    let _ = writeln!(
        text,
        "index | element | unit | a (T pos) | b (T pos) | gtrace | character"
    );
    for r in &rows {
        let _ = writeln!(
            text,
            "{} | {} | {} | {} | {} | {} | {}",
            r.index,
            r.polynomial,
            r.is_unit,
            r.teichmuller_a,
            r.teichmuller_b,
            r.gtrace,
            r.character
        );
    }
    let csv = csv(
        &[
            "index",
            "element",
            "is_unit",
            "teichmuller_a",
            "teichmuller_b",
            "gtrace",
            "character",
        ],
        rows.iter().map(|r| {
            vec![
                r.index.to_string(),
                r.polynomial.clone(),
                r.is_unit.to_string(),
                r.teichmuller_a.to_string(),
                r.teichmuller_b.to_string(),
                r.gtrace.to_string(),
                r.character.clone(),
            ]
        }),
    );
    Ok(Report::new(Verdict::Info, &body, text).with_csv(csv))
}

pub fn arith(cmd: &ArithCommand, global: &GlobalArgs) -> CliResult<Report> {
    match *cmd {
        ArithCommand::Profile { n } => {
            #[derive(Serialize)]
            struct Profile {
                #[serde(flatten)]
                profile: ArithmeticProfile,
                divisors: Vec<u64>,
                cyclotomic: Vec<i64>,
            }
            let profile = ArithmeticProfile::of(n).map_err(flag("--n"))?;
            let phi = cyclotomic_poly(n).map_err(flag("--n"))?;
            let body = Profile {
                divisors: divisors(n),
                cyclotomic: phi.coeffs().to_vec(),
                profile,
            };
            let p = &body.profile;
            let text = format!(
                "n = {n}\nmobius = {}\ntotient = {}\nmangoldt = {}\nprime power = {}\ndivisors = {:?}\ncyclotomic = {phi}\n",
                p.mobius,
                p.totient,
                real(p.mangoldt),
                p.is_prime_power,
                body.divisors
            );
            Ok(Report::new(Verdict::Info, &body, text))
        }
        ArithCommand::Ramanujan { q, n } => {
            #[derive(Serialize)]
            struct Ramanujan {
                q: u64,
                n: i64,
                closed_form: i64,
                exponential_sum: f64,
                pass: bool,
            }
            let closed_form = ramanujan_sum(q, n).map_err(flag("--q"))?;
            let exponential_sum: f64 = (1..=q)
                .filter(|&a| gcd(a, q) == 1)
                .map(|a| {
                    (TAU * ((a as i128 * n as i128).rem_euclid(q as i128)) as f64 / q as f64).cos()
                })
                .sum();
            let pass = (exponential_sum - closed_form as f64).abs() <= global.tol;
            let body = Ramanujan {
                q,
                n,
                closed_form,
                exponential_sum,
                pass,
            };
            let text = format!(
                "c_{q}({n}) = {closed_form}\nexponential sum = {}\n{}\n",
                real(exponential_sum),
                pass_label(pass)
            );
            Ok(Report::new(Verdict::from_pass(pass), &body, text))
        }
    }
}
