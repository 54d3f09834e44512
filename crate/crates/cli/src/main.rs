use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};

use commuting_classes::catalog::{GroupSpec, SubgroupSpec};
use commuting_classes::verify::Suite;
use commuting_classes::DEFAULT_CAP;

mod commands;

#[derive(Parser)]
#[command(author, version, about = "Commuting conjugacy classes of finite groups", long_about = None)]
struct Args {
    #[command(subcommand)]
    command: Command,

    /// Normal subgroup H: whole, trivial, alt, sl, rot, centre, derived, v4 or sub:K
    #[arg(long = "mod", global = true, value_name = "SUBGROUP")]
    subgroup: Option<SubgroupSpec>,

    /// Coset exponent x (the coset H t^x)
    #[arg(long, global = true, default_value_t = 0)]
    coset: usize,

    /// Output format; each command has its own default
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Seed for sampled Hall audits
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Largest group order to enumerate
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Class table: id, representative, size, coset exponent, split flag
    Classes { group: GroupSpec },
    /// The commuting relation on classes as a graph
    Relation { group: GroupSpec },
    /// Matching from non-split classes of H t^x onto the classes of H t
    Match { group: GroupSpec },
    /// Partition of the non-split classes into commuting tuples (prime index)
    Partition { group: GroupSpec },
    /// Coarsenings of a partition, or a common coarsening of two
    Coarsen {
        lambda: commuting_classes::Partition,
        mu: Option<commuting_classes::Partition>,
    },
    /// Partitions of n with parity, splitting and the pairing of even and odd types
    SymTable { n: u32 },
    /// Class counts by type in SL2(q) and in the determinant-xi coset
    Gl2Table {
        #[arg(long, value_delimiter = ',', default_value = "3,5,7")]
        q: Vec<u32>,
    },
    /// Split classes against the Frobenius property (prime index)
    Frobenius { group: GroupSpec },
    /// Experimental: search for a commuting matching between two cosets
    Explore {
        group: GroupSpec,
        /// Target coset exponent y
        #[arg(long, default_value_t = 1)]
        to: usize,
    },
    /// Run the property suite over the built-in catalog
    Verify {
        /// Run every suite (the default when --only is absent)
        #[arg(long)]
        all: bool,
        /// Comma-separated suites: matching, sym, gl2, gl4, frobenius
        #[arg(long, value_delimiter = ',')]
        only: Vec<Suite>,
        /// Field orders for the gl2 suite
        #[arg(long, value_delimiter = ',')]
        q: Vec<u32>,
    },
}

fn main() -> ExitCode {
    let args = Args::parse();
    match commands::run(&args) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

impl Args {
    fn subgroup(&self) -> SubgroupSpec {
        self.subgroup.clone().unwrap_or(SubgroupSpec::Default)
    }

    fn format_or(&self, default: Format) -> Format {
        self.format.unwrap_or(default)
    }
}

fn unsupported(cmd: &str, f: Format) -> Result<(String, bool)> {
    anyhow::bail!("{cmd} does not support --format {f:?}")
}
