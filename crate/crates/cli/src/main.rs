use extremo_cli::error::CliError;

fn main() {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    if let Err(e) = extremo_cli::run(std::env::args_os().collect()) {
        if let CliError::Clap(c) = e {
            c.exit();
        }
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
