use clap::Parser;

fn main() {
    let cli = twcert_cli::Cli::parse();
    std::process::exit(twcert_cli::run(cli));
}
