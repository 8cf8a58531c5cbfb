use clap::Parser;

fn main() {
    let cli = sepbell_cli::Cli::parse();
    std::process::exit(sepbell_cli::execute(&cli));
}
