//! Driving the command-line interface in-process.

use kaehler::cli::run;

fn main() {
    let fixture = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/complete_intersection_f3.json");
    for args in [
        vec!["kaehler", "kaehler", "hf", fixture, "--m", "1"],
        vec!["kaehler", "kaehler", "hf", fixture, "--torsion"],
        vec!["kaehler", "formula", "local", "--n", "2", "--k", "3", "--m", "1"],
        vec!["kaehler", "--json", "formula", "delta", "--n", "2", "--k", "2", "--m", "1", "--field", "F2"],
        vec!["kaehler", "check", "bogus"],
    ] {
        let out = run(args.clone());
        println!("$ {}\n{}{}[exit {}]\n", args[1..].join(" "), out.stdout, out.stderr, out.code);
    }
}
