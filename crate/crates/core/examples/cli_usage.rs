//! The command-line front end, driven in-process.

use mlim::cli::main_with_args;

fn main() {
    let runs: [&[&str]; 4] = [
        &["mlim", "--num", "sin(x^2+y^2+z^2)", "--den", "3-cos(x)-cos(y)-cos(z)", "--vars", "x,y,z", "--mode", "lim"],
        &["mlim", "--num", "sin(x*y)", "--den", "cos(x)+cos(y)-2", "--vars", "x,y", "--mode", "lim"],
        &["mlim", "--num", "sin(x*y)", "--den", "cos(x)+cos(y)-2", "--vars", "x,y", "--json"],
        &["mlim", "--num", "sin(x*", "--den", "x", "--vars", "x"],
    ];
    for argv in runs {
        let out = main_with_args(argv);
        println!("$ {}", argv[1..].join(" "));
        print!("{}{}", out.stdout, out.stderr);
        println!("[exit {}]\n", out.code);
    }
}
