use clap::Parser;

fn main() {
    // clap exits 2 on usage errors and 0 for --help/--version, matching the
    // documented code for bad arguments.
    let cli = ngon_cli::Cli::parse();
    if let Err(err) = ngon_cli::run(cli) {
        eprintln!("error: {err}");
        std::process::exit(err.exit_code());
    }
}
