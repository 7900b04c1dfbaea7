use std::io::Write;

fn main() {
    let outcome = qgrk0::cli::run_args(std::env::args());
    if outcome.code == 0 {
        print!("{}", outcome.output);
        let _ = std::io::stdout().flush();
    } else {
        eprint!("{}", outcome.output);
        let _ = std::io::stderr().flush();
    }
    std::process::exit(outcome.code);
}
