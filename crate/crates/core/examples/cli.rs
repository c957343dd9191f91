//! Driving the command-line front end in-process.

use primal_deduct::cli::run;

fn main() {
    let calls: &[&[&str]] = &[
        &["decide", "--logic", "pel0", "x -> x |- (x & x) -> x"],
        &[
            "decide",
            "--logic",
            "pl",
            "--countermodel",
            "x -> x |- (x & x) -> x",
        ],
        &["transform", "--reduction", "il-to-ml", "bot |- x"],
        &["oracle", "--logic", "ml", "|- x -> x"],
        &["decide", "--logic", "ml", "|- x -> x"],
    ];
    for args in calls {
        let mut argv = vec!["primal-deduct"];
        argv.extend_from_slice(args);
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(argv, &mut std::io::empty(), &mut out, &mut err);
        println!("$ primal-deduct {}", args.join(" "));
        print!(
            "{}{}",
            String::from_utf8_lossy(&out),
            String::from_utf8_lossy(&err)
        );
        println!("exit {code}\n");
    }
}
