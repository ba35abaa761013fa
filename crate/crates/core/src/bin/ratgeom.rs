use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ratgeom::geometry::Scope;
use ratgeom::report::{self, Format, GeometryKind};
use ratgeom::spec::GroupSpec;
use ratgeom::Limits;

/// Decide rationality of finite permutation groups from fixed-flag counts.
///
/// Groups are given as sym:n, alt:n, cyc:n, dih:m (the dihedral group of
/// ORDER m, m even), quat:8, or gens:<cycles>[,<cycles>...][@degree].
#[derive(Parser)]
#[command(name = "ratgeom", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Text, global = true)]
    format: FormatArg,

    /// Largest group order enumerated.
    #[arg(long, default_value_t = Limits::default().max_order, global = true)]
    max_order: usize,

    /// Largest number of flags enumerated per type set.
    #[arg(long, default_value_t = Limits::default().max_flags, global = true)]
    max_flags: usize,

    /// Largest type set for --scope all.
    #[arg(long, default_value_t = Limits::default().max_types, global = true)]
    max_types: usize,

    /// Largest n for the subsets geometry.
    #[arg(long, default_value_t = Limits::default().max_subset_degree, global = true)]
    max_subset_degree: usize,
}

#[derive(Subcommand)]
enum Command {
    /// List conjugacy classes.
    Classes { spec: GroupSpec },
    /// Power-map, geometric and permutation-character verdicts.
    Rationality { spec: GroupSpec },
    /// Fixed-flag counts per class representative and type set.
    Fixtable {
        spec: GroupSpec,
        #[command(flatten)]
        geometry: GeometryArgs,
    },
    /// Whether fixed-flag counts separate conjugacy classes.
    Separate {
        spec: GroupSpec,
        #[command(flatten)]
        geometry: GeometryArgs,
    },
    /// Fixed k-subset counts for every cycle type of sym:n.
    DemoSubsets { n: usize },
    /// Print a geometry as a Graphviz graph.
    Export {
        spec: GroupSpec,
        #[arg(long, value_enum, default_value_t = GeometryArg::Coset)]
        geometry: GeometryArg,
    },
}

#[derive(Args)]
struct GeometryArgs {
    #[arg(long, value_enum, default_value_t = ScopeArg::Singletons)]
    scope: ScopeArg,
    #[arg(long, value_enum, default_value_t = GeometryArg::Coset)]
    geometry: GeometryArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScopeArg {
    Singletons,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum GeometryArg {
    Coset,
    Subsets,
}

impl From<ScopeArg> for Scope {
    fn from(s: ScopeArg) -> Self {
        match s {
            ScopeArg::Singletons => Scope::Singletons,
            ScopeArg::All => Scope::AllSubsets,
        }
    }
}

impl From<GeometryArg> for GeometryKind {
    fn from(g: GeometryArg) -> Self {
        match g {
            GeometryArg::Coset => GeometryKind::Coset,
            GeometryArg::Subsets => GeometryKind::Subsets,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = Limits {
        max_order: cli.max_order,
        max_flags: cli.max_flags,
        max_types: cli.max_types,
        max_subset_degree: cli.max_subset_degree,
        ..Limits::default()
    };
    let format = match cli.format {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
    };
    let result = match &cli.command {
        Command::Classes { spec } => report::cmd_classes(spec, &limits),
        Command::Rationality { spec } => report::cmd_rationality(spec, &limits),
        Command::Fixtable { spec, geometry } => {
            report::cmd_fixtable(spec, geometry.scope.into(), geometry.geometry.into(), &limits)
        }
        Command::Separate { spec, geometry } => {
            report::cmd_separate(spec, geometry.scope.into(), geometry.geometry.into(), &limits)
        }
        Command::DemoSubsets { n } => report::cmd_demo_subsets(*n, &limits),
        Command::Export { spec, geometry } => match report::cmd_export(spec, (*geometry).into(), &limits) {
            Ok(dot) => return emit(&dot),
            Err(e) => Err(e),
        },
    }
    .map(|r| r.render(format));
    match result {
        Ok(text) => emit(&text),
        Err(e) => {
            eprintln!("ratgeom: {e}");
            ExitCode::from(report::exit_code(&e) as u8)
        }
    }
}

fn emit(text: &str) -> ExitCode {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(_) => ExitCode::FAILURE,
    }
}
