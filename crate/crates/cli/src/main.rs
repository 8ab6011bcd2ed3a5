mod algebra;
mod args;
mod chars;
mod parse;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::*;
use report::Report;

fn run(cmd: &Cmd) -> cosetlab::Result<Report> {
    match cmd {
        Cmd::Rootsys { cmd: RootsysCmd::Info(a) } => algebra::rootsys_info(a),
        Cmd::Forms { cmd: FormsCmd::Verify(a) } => algebra::forms_verify(a),
        Cmd::Weights { cmd } => match cmd {
            WeightsCmd::ToSc { level, weight } => algebra::weights_to_sc(level, weight),
            WeightsCmd::ToAf { level, input } => algebra::weights_to_af(level, input),
            WeightsCmd::Converse { level, input } => algebra::weights_converse(level, input),
        },
        Cmd::Lattice { cmd } => match cmd {
            LatticeCmd::Disc { lattice, expect } => algebra::lattice_disc(lattice, expect.as_deref()),
            LatticeCmd::Enum { lattice, bound } => algebra::lattice_enum(lattice, bound),
        },
        Cmd::Ope { cmd: OpeCmd::Verify { level, check } } => algebra::ope_verify(level, *check),
        Cmd::Char { cmd } => match cmd {
            CharCmd::Roundtrip { seed, t, mu } => chars::char_roundtrip(seed, t, mu.as_deref()),
            CharCmd::Fermionize { seed, t, mu, output } => chars::char_fermionize(seed, t, mu.as_deref(), output.as_deref()),
            CharCmd::Defermionize { input, t, lambda, output } => {
                chars::char_defermionize(input, t, lambda.as_deref(), output.as_deref())
            }
            CharCmd::Cflemma { seed, gamma, t, mu, bound } => chars::char_cflemma(seed, gamma, t, mu.as_deref(), *bound),
        },
        Cmd::Flow { cmd } => match cmd {
            FlowCmd::Check { seed, t, sc_gamma, af_gamma } => chars::flow_check(seed, t, sc_gamma, af_gamma),
            FlowCmd::Diagnostics { level, gamma } => chars::flow_diagnostics_cmd(level, gamma),
        },
    }
}

fn command_name(cmd: &Cmd) -> &'static str {
    match cmd {
        Cmd::Rootsys { .. } => "rootsys info",
        Cmd::Forms { .. } => "forms verify",
        Cmd::Weights { cmd: WeightsCmd::ToSc { .. } } => "weights to-sc",
        Cmd::Weights { cmd: WeightsCmd::ToAf { .. } } => "weights to-af",
        Cmd::Weights { cmd: WeightsCmd::Converse { .. } } => "weights converse",
        Cmd::Lattice { cmd: LatticeCmd::Disc { .. } } => "lattice disc",
        Cmd::Lattice { cmd: LatticeCmd::Enum { .. } } => "lattice enum",
        Cmd::Ope { .. } => "ope verify",
        Cmd::Char { cmd: CharCmd::Roundtrip { .. } } => "char roundtrip",
        Cmd::Char { cmd: CharCmd::Fermionize { .. } } => "char fermionize",
        Cmd::Char { cmd: CharCmd::Defermionize { .. } } => "char defermionize",
        Cmd::Char { cmd: CharCmd::Cflemma { .. } } => "char cflemma",
        Cmd::Flow { cmd: FlowCmd::Check { .. } } => "flow check",
        Cmd::Flow { cmd: FlowCmd::Diagnostics { .. } } => "flow diagnostics",
    }
}

/// Writes one document to stdout; a closed pipe is not an error.
fn emit(doc: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{doc}");
}

/// Exit status: 0 when every check holds, 1 when a mathematical check fails,
/// 2 for usage and input errors (clap also exits with 2).
fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.cmd) {
        Ok(r) => {
            emit(&match cli.format {
                Format::Json => r.to_json(),
                Format::Text => r.to_text(),
            });
            if r.ok { ExitCode::SUCCESS } else { ExitCode::from(1) }
        }
        Err(e) => {
            if cli.format == Format::Json {
                emit(&report::error_json(command_name(&cli.cmd), &e.to_string()));
            }
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
