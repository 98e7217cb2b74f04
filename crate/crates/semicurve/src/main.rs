use std::io::Write;

fn main() {
    let (out, code) = semicurve::cli::run(std::env::args_os());
    let stream: &mut dyn Write = if code == 0 || code == 1 { &mut std::io::stdout() } else { &mut std::io::stderr() };
    let _ = stream.write_all(out.as_bytes());
    std::process::exit(code);
}
