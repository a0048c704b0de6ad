use clap::Parser;

fn main() {
    let cli = sgl::cli::Cli::parse();
    let code = sgl::cli::run(&cli, &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    std::process::exit(code);
}
