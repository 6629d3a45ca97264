use clap::Parser;
use cubelat::cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("cubelat: {e}");
        std::process::exit(e.exit_code());
    }
}
