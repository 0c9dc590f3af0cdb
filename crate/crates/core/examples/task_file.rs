//! Parsing a task file and running commands on it in process.

use ddquiver::cli::run;
use ddquiver::parse_task;

const TASK: &str = "\
quiver kronecker
vertices e1 e2
arrow a : e1 -> e2
arrow b : e1 -> e2
cap 3
";

fn main() -> ddquiver::Result<()> {
    let task = parse_task(TASK)?;
    println!("{} derivations, cap {}", task.family.len(), task.cap);

    let path = std::env::temp_dir().join("ddquiver_example.quiver");
    std::fs::write(&path, TASK).expect("writable temp dir");
    let file = path.display().to_string();
    for args in [
        vec!["ddquiver", "verify", &file],
        vec!["ddquiver", "rhobar", &file, "--element", "a + 2*e2"],
    ] {
        let out = run(args);
        print!("{}", out.text);
        println!("exit {}", out.code);
    }
    Ok(())
}
