//! Evaluates expressions given as arguments, or one per line on stdin.
//!
//! Example: cargo run --example calculator -- "rhom(Q, Z)" "k0mul(T, T)"

use std::io::BufRead;

use flca::frontend::eval_str;

fn show(line: &str) {
    match eval_str(line) {
        Ok(v) => println!("{line}\n  = {}", v.render_text()),
        Err(e) => println!("{line}\n  error: {e}"),
    }
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if !args.is_empty() {
        args.iter().for_each(|a| show(a));
        return;
    }
    for line in std::io::stdin().lock().lines().map_while(Result::ok) {
        let line = line.trim();
        if !line.is_empty() {
            show(line);
        }
    }
}
