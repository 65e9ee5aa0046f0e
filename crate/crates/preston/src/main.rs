use clap::Parser;

fn main() {
    let cli = preston::cli::Cli::parse();
    if let Err(e) = preston::cli::run(cli) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
