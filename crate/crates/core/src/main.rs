fn main() -> std::process::ExitCode {
    latticekit::cli::run()
}
