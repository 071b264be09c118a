fn main() {
    let (code, out, err) = yagita::cli::main_with_args(std::env::args_os());
    if !out.is_empty() {
        println!("{out}");
    }
    if !err.is_empty() {
        eprintln!("{err}");
    }
    std::process::exit(code);
}
