use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cusped::report::{self, Report};

/// Exact verification of the group theory and tessellation combinatorics of
/// multiply transitive cusp actions.
#[derive(Parser)]
#[command(name = "cusped", version, about)]
struct Cli {
    /// Emit the report as JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Directory containing the bundled tessellation fixtures.
    #[arg(long, global = true)]
    data_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify a bundled tessellation example against its expected invariants.
    VerifyExample {
        /// borromean | double-dodecahedron | five-chain | congruence-5 | congruence-7
        name: String,
    },
    /// Exhaustively audit the order-72 subgroups of the semilinear group of
    /// the nine-element field.
    AuditGamma9 {
        /// Include the per-subgroup classification table.
        #[arg(long)]
        list: bool,
    },
    /// Scan all transitive subgroup classes of the symmetric group of
    /// degree n (n at most 6) against the classification.
    Scan { n: usize },
    /// Classify the permutation group generated by a group file.
    CheckGroup { file: PathBuf },
    /// Exact GL(2,Z) computations.
    Gl2z {
        #[command(subcommand)]
        command: Gl2zCommand,
    },
}

#[derive(Subcommand)]
enum Gl2zCommand {
    /// Amalgam normal form of one matrix, e.g. "[[0,-1],[1,1]]".
    NormalForm { matrix: String },
    /// Close a file of matrices (one [[a,b],[c,d]] per line) and conjugate
    /// the result into a standard dihedral factor if finite.
    Closure { file: PathBuf },
}

fn run(cli: &Cli) -> Report {
    match &cli.command {
        Command::VerifyExample { name } => {
            report::cmd_verify_example(name, cli.data_dir.as_deref())
        }
        Command::AuditGamma9 { list } => report::cmd_audit_gamma9(*list),
        Command::Scan { n } => report::cmd_scan(*n),
        Command::CheckGroup { file } => match std::fs::read_to_string(file) {
            Ok(text) => report::cmd_check_group(&text),
            Err(e) => report::cmd_file_error(file, e),
        },
        Command::Gl2z { command } => match command {
            Gl2zCommand::NormalForm { matrix } => report::cmd_gl2z_normal_form(matrix),
            Gl2zCommand::Closure { file } => match std::fs::read_to_string(file) {
                Ok(text) => report::cmd_gl2z_closure(&text),
                Err(e) => report::cmd_file_error(file, e),
            },
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = run(&cli);
    if cli.json {
        println!("{}", report.render_json());
    } else {
        print!("{}", report.render_text());
    }
    ExitCode::from(report.exit_code as u8)
}
