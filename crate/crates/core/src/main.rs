fn main() {
    let out = ddquiver::cli::run(std::env::args_os());
    print!("{}", out.text);
    std::process::exit(out.code);
}
