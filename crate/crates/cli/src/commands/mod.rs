mod algebra;
mod code;
mod mub;
mod pg;
mod phase;
mod sums;

use galq_core::gf::FieldSpec;

use crate::cli::{Cli, Command};
use crate::output::Report;
use crate::{flag, CliResult};

pub fn execute(cli: &Cli) -> CliResult<Report> {
    let global = &cli.global;
    match &cli.command {
        Command::Field(cmd) => algebra::field(cmd),
        Command::Ring(cmd) => algebra::ring(cmd),
        Command::Arith(cmd) => algebra::arith(cmd, global),
        Command::Sum(cmd) => sums::run(cmd, global),
        Command::Mub(cmd) => mub::run(cmd, global),
        Command::Code(cmd) => code::run(cmd),
        Command::Pg(cmd) => pg::run(cmd),
        Command::Phase(cmd) => phase::run(cmd, global),
    }
}

fn field_of(q: u64) -> CliResult<FieldSpec> {
    FieldSpec::with_order(q).map_err(flag("--q"))
}
