use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::output::Format;

#[derive(Debug, Parser)]
#[command(
    name = "galq",
    version,
    about = "Finite fields, Galois rings, character sums, MUBs, phase operators, cyclic codes and projective geometry"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads for parallel sections.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,
    /// Write the report to this file; relative paths resolve against $GALQ_OUT_DIR.
    #[arg(long, global = true)]
    pub out: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Finite fields GF(p^m).
    #[command(subcommand)]
    Field(FieldCommand),
    /// Galois rings R_{4^m} = Z_4[x]/(h).
    #[command(subcommand)]
    Ring(RingCommand),
    /// Elementary arithmetic functions.
    #[command(subcommand)]
    Arith(ArithCommand),
    /// Character sums.
    #[command(subcommand)]
    Sum(SumCommand),
    /// Mutually unbiased bases and Bell states.
    #[command(subcommand)]
    Mub(MubCommand),
    /// Cyclic codes.
    #[command(subcommand)]
    Code(CodeCommand),
    /// Finite projective spaces.
    #[command(subcommand)]
    Pg(PgCommand),
    /// Phase operators.
    #[command(subcommand)]
    Phase(PhaseCommand),
}

#[derive(Debug, Subcommand)]
pub enum FieldCommand {
    /// Every element as a power, a polynomial and a coefficient tuple.
    Table {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        m: u32,
        /// Modulus coefficients, lowest degree first.
        #[arg(long, value_delimiter = ',')]
        g: Option<Vec<u32>>,
    },
}

#[derive(Debug, Subcommand)]
pub enum RingCommand {
    /// Elements with 2-adic form, generalized trace and additive character.
    Table {
        #[arg(long)]
        m: Option<u32>,
        /// Primitive modulus over Z_2 to lift, lowest degree first.
        #[arg(long, value_delimiter = ',')]
        g: Option<Vec<u32>>,
    },
}

#[derive(Debug, Subcommand)]
pub enum ArithCommand {
    /// Möbius, totient, Mangoldt, divisors and cyclotomic polynomial of n.
    Profile {
        #[arg(long)]
        n: u64,
    },
    /// Ramanujan sum c_q(n), closed form against the exponential sum.
    Ramanujan {
        #[arg(long)]
        q: u64,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
    },
}

#[derive(Debug, Subcommand)]
pub enum SumCommand {
    /// Σ κ(f(x)) for f given by --g and κ(x) = ω^{tr(b x)}.
    Weil {
        #[arg(long)]
        q: u64,
        #[arg(long, value_delimiter = ',', required = true)]
        g: Vec<u32>,
        #[arg(long, default_value_t = 1)]
        b: u32,
    },
    /// Σ ψ(x) κ(x) over F_q* with ψ = α^t ↦ e^{2πi k t/(q-1)} and κ(x) = ω^{tr(b x)}.
    Gauss {
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 1)]
        k: u64,
        #[arg(long, default_value_t = 1)]
        b: u32,
    },
    /// Σ_{u ∈ T} i^{gtrace(y u)}; all y unless --b is given.
    Gamma {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        b: Option<u32>,
    },
    /// Σ ψ_k(x) i^{gtrace(b x)} over R_{4^m} with ψ_k a unit-group character.
    RingGauss {
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 1)]
        k: u64,
        #[arg(long, default_value_t = 1)]
        b: u32,
    },
    /// Random polynomials checked against the Weil bound.
    WeilSweep {
        #[arg(long)]
        q: u64,
        /// Number of samples.
        #[arg(long, default_value_t = 200)]
        n: usize,
        /// Largest polynomial degree.
        #[arg(long, default_value_t = 6)]
        k: usize,
    },
}

#[derive(Debug, Args)]
pub struct MubTarget {
    /// Dimension q (odd prime power, or a power of two).
    #[arg(long, alias = "odd-q", conflicts_with = "m")]
    pub q: Option<u64>,
    /// Even dimension 2^m through the Galois ring.
    #[arg(long)]
    pub m: Option<u32>,
    /// Phase parameter of the construction.
    #[arg(long, default_value_t = 0)]
    pub k: u64,
}

#[derive(Debug, Subcommand)]
pub enum MubCommand {
    /// Orthonormality and unbiasedness of a complete set.
    Verify(MubTarget),
    /// Amplitudes of every basis vector.
    Export(MubTarget),
    /// Fourier Bell states (--dim) or Galois Bell states (--q).
    Bell {
        #[arg(long, conflicts_with = "q")]
        dim: Option<usize>,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long, default_value_t = 0)]
        h: u32,
        #[arg(long, requires = "b")]
        a: Option<u32>,
        #[arg(long, requires = "a")]
        b: Option<u32>,
    },
}

#[derive(Debug, Subcommand)]
pub enum CodeCommand {
    /// Exhaustive weight distribution and minimum distance.
    Distance {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
        #[arg(long, value_delimiter = ',', required = true)]
        g: Vec<u32>,
    },
    /// Monic divisors of x^n - 1.
    Divisors {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
    },
    /// Generator matrix, or all n cyclic shifts with --cyclic.
    Matrix {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
        #[arg(long, value_delimiter = ',', required = true)]
        g: Vec<u32>,
        #[arg(long)]
        cyclic: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum PgCommand {
    /// Points and lines of PG(dim, q).
    Build {
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long)]
        q: u64,
    },
    /// Checks a point set, or searches for a largest arc.
    Arcs {
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long)]
        q: u64,
        /// Point indices to check instead of searching.
        #[arg(long, value_delimiter = ',')]
        points: Option<Vec<usize>>,
        #[arg(long)]
        greedy: bool,
    },
    /// Line-point incidence matrix of PG(2, q) with the plane axioms.
    Incidence {
        #[arg(long)]
        q: u64,
    },
    /// Orders up to --qmax excluded by the sum-of-two-squares condition.
    BruckRyser {
        #[arg(long, default_value_t = 100)]
        qmax: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RangeArg {
    Full,
    Totient,
}

#[derive(Debug, Subcommand)]
pub enum PhaseCommand {
    /// Lock-operator expectations for q = --q ..= --qmax.
    LockSweep {
        #[arg(long, default_value_t = 2)]
        q: usize,
        #[arg(long, default_value_t = 50)]
        qmax: usize,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        beta: f64,
        #[arg(long, value_enum, default_value_t = RangeArg::Full)]
        range: RangeArg,
    },
    /// Lock operator of dimension q and its coprime projector.
    Lock {
        #[arg(long)]
        q: usize,
    },
    /// Galois phase operator built two ways.
    Operator {
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 0)]
        a: u32,
        #[arg(long, default_value_t = 0)]
        k: u64,
    },
    /// Galois phase expectation in a phase state.
    Galois {
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 0)]
        a: u32,
        #[arg(long, default_value_t = 0)]
        k: u64,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        beta: f64,
    },
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn command_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn unknown_flags_are_rejected() {
        let err =
            Cli::try_parse_from(["galq", "field", "table", "--p", "2", "--m", "3", "--bogus"])
                .unwrap_err();
        assert_eq!(err.kind(), clap::error::ErrorKind::UnknownArgument);
    }

    #[test]
    fn polynomial_flags_split_on_commas() {
        let cli = Cli::try_parse_from([
            "galq", "code", "distance", "--n", "7", "--q", "2", "--g", "1,1,0,1",
        ])
        .unwrap();
        match cli.command {
            Command::Code(CodeCommand::Distance { g, .. }) => assert_eq!(g, vec![1, 1, 0, 1]),
            other => panic!("parsed {other:?}"),
        }
    }
}
