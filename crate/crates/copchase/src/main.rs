fn main() -> std::process::ExitCode {
    std::process::ExitCode::from(copchase::cli::run())
}
