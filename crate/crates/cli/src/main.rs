use std::io;

fn main() {
    let code = ehig_cli::run(std::env::args(), &mut io::stdin().lock(), &mut io::stdout().lock(), &mut io::stderr());
    std::process::exit(code);
}
