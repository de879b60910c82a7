//! `icf`: command-line front end for the interlaced continued fraction toolkit.

mod commands;
mod report;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use icf_core::Error;

use commands::*;
use report::{Format, Report};

#[derive(Parser, Debug)]
#[command(
    name = "icf",
    version,
    about = "Exact experiments with interlaced geometric continued fractions",
    long_about = "Exact experiments with interlaced geometric continued fractions \
F(x,s) = [x, s/x, x^2, s/x^2, ...] and F(x,y) = [x, 1/y, x^2, 1/y^2, ...].\n\n\
Exit status: 0 success, 1 identity or theorem violation, 2 usage error, \
3 precision or budget exhausted."
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    Table1(Table1Args),
    Convergents(ConvergentsArgs),
    Identities(IdentitiesArgs),
    Gfcheck(GfcheckArgs),
    Certify(CertifyArgs),
    FibAnalogy(FibArgs),
    Qseries(QseriesArgs),
    Scan(ScanArgs),
    Euler(EulerArgs),
    QuadraticPattern(PatternArgs),
    Fvalue(FvalueArgs),
}

fn run(cmd: &Command) -> Result<Report, Error> {
    match cmd {
        Command::Table1(a) => table1(a),
        Command::Convergents(a) => convergents(a),
        Command::Identities(a) => identities(a),
        Command::Gfcheck(a) => gfcheck(a),
        Command::Certify(a) => certify(a),
        Command::FibAnalogy(a) => fib_analogy(a),
        Command::Qseries(a) => qseries(a),
        Command::Scan(a) => scan(a),
        Command::Euler(a) => euler(a),
        Command::QuadraticPattern(a) => quadratic_pattern(a),
        Command::Fvalue(a) => fvalue(a),
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::IdentityViolation(_) | Error::TheoremViolation(_) => 1,
        Error::PrecisionInsufficient(_) | Error::Budget(_) | Error::SingularEvaluation { .. } => 3,
        Error::Domain(_)
        | Error::Unsupported(_)
        | Error::UnknownIdentity(_)
        | Error::DegenerateRoot(_) => 2,
    }
}

fn emit(report: &Report, format: Format, out: Option<&PathBuf>) -> anyhow::Result<()> {
    let mut w: Box<dyn Write> = match out {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    report.write(format, &mut *w)?;
    w.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let report = match run(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("icf: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };
    if let Err(e) = emit(&report, cli.format, cli.out.as_ref()) {
        eprintln!("icf: cannot write report: {e}");
        return ExitCode::from(2);
    }
    if report.violations.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn error_classes_map_to_exit_codes() {
        assert_eq!(exit_code(&Error::Budget("b".into())), 3);
        assert_eq!(exit_code(&Error::TheoremViolation("t".into())), 1);
        assert_eq!(exit_code(&Error::Domain("d".into())), 2);
    }
}
