//! `uqsl2`: command-line front end for the exact computations in the `uqsl2` library.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use uqsl2::{EmbeddingChoice, Error, StarKind};

use uqsl2_cli::commands::{self, Ctx};
use uqsl2_cli::report::Report;

#[derive(Parser, Debug)]
#[command(name = "uqsl2", version, about = "Exact computations in restricted U_q(sl2) at an odd root of unity")]
struct Cli {
    /// Order of the root of unity q (odd, at least 3).
    #[arg(long = "N", global = true, default_value_t = 3)]
    n: u32,
    /// Star structure: hopf, twisted+ or twisted-.
    #[arg(long, global = true)]
    star: Option<StarKind>,
    /// Complex embedding q -> exp(2 pi i k / N) used for signs.
    #[arg(long, global = true, default_value_t = 1)]
    embedding: u32,
    /// Write the structured report as JSON to this path.
    #[arg(long, global = true)]
    emit: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hopf axioms of H and F, star laws, duality, and the quantum plane coaction.
    CheckAxioms,
    /// Star structures on H and F, and the quantum metric.
    Stars,
    /// Structure of H; with --rep, one named module.
    Reps {
        #[arg(long)]
        rep: Option<String>,
        /// Also decompose the module into indecomposables.
        #[arg(long)]
        analyze: bool,
    },
    /// Invariant hermitian forms on a named module.
    Forms {
        #[arg(long)]
        rep: Option<String>,
        /// Also report the spread of signatures over sampled members.
        #[arg(long)]
        analyze: bool,
    },
    /// The quantum plane as a module algebra and its invariant forms.
    Plane {
        #[arg(long)]
        analyze: bool,
    },
    /// Adjoint action, quantum trace and the Killing form.
    Killing,
    /// Invariant integrals and the integral scalar product.
    Integral {
        /// Analyze the scalar product built from the left integral.
        #[arg(long)]
        analyze: bool,
    },
    /// Star representations and tensor products under the coproduct and its opposite.
    Tensor {
        #[arg(long)]
        rep: Option<String>,
        /// Second factor (defaults to --rep; with neither, all pairs from 3_irr and 2_eve).
        #[arg(long)]
        with: Option<String>,
    },
    /// The double with K^{2N} = 1 and its two sectors.
    Double {
        /// Solve forms on this representation (e.g. 3-_irr, regular~).
        #[arg(long)]
        rep: Option<String>,
    },
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::UnsupportedN(..)
        | Error::BadEmbedding { .. }
        | Error::UnknownRepresentation(_)
        | Error::Parse(_)
        | Error::IncompatiblePair(_)
        | Error::PreconditionFailed(_) => 1,
        _ => 3,
    }
}

fn run(cli: Cli) -> Result<Report, Error> {
    let embedding = EmbeddingChoice::new(cli.embedding, cli.n)?;
    let mut ctx = Ctx { n: cli.n, star: cli.star, rep: None, with: None, analyze: false, embedding };
    match cli.command {
        Command::CheckAxioms => commands::check_axioms(&ctx),
        Command::Stars => commands::stars(&ctx),
        Command::Reps { rep, analyze } => {
            (ctx.rep, ctx.analyze) = (rep, analyze);
            commands::reps(&ctx)
        }
        Command::Forms { rep, analyze } => {
            (ctx.rep, ctx.analyze) = (rep, analyze);
            commands::forms(&ctx)
        }
        Command::Plane { analyze } => {
            ctx.analyze = analyze;
            commands::plane(&ctx)
        }
        Command::Killing => commands::killing(&ctx),
        Command::Integral { analyze } => {
            ctx.analyze = analyze;
            commands::integral(&ctx)
        }
        Command::Tensor { rep, with } => {
            (ctx.rep, ctx.with) = (rep, with);
            commands::tensor(&ctx)
        }
        Command::Double { rep } => {
            ctx.rep = rep;
            commands::double(&ctx)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let emit = cli.emit.clone();
    let report = match run(cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code_for(&e));
        }
    };
    print!("{}", report.render());
    if let Some(path) = emit {
        if let Err(e) = std::fs::write(&path, report.to_json()) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(3);
        }
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    }
}
