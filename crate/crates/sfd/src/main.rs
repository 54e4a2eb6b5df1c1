use std::io::Write;

use clap::Parser;

fn main() {
    let cli = sfd::cli::Cli::parse();
    let out = sfd::cli::run(&cli);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    std::process::exit(out.code);
}
