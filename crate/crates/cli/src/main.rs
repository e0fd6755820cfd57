use clap::Parser;
use ratswarm_cli::app::{self, Cli};

fn main() {
    let cli = Cli::parse();
    match app::execute(cli, &mut std::io::stdout().lock()) {
        Ok(()) => {}
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
