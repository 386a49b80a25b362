use clap::Parser;

fn main() {
    let cli = ygrowth::cli::Cli::parse();
    std::process::exit(ygrowth::cli::run(cli));
}
