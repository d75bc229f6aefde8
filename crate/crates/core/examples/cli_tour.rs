//! Drives the command line in-process; the same calls work with the `edsfq` binary.

fn main() {
    let curve = "0,-t*(t-2),0,2*t^2*(t+1),0";
    let runs: Vec<Vec<&str>> = vec![
        vec!["curve-info", "--p", "5", "--curve", curve],
        vec!["eds", "--p", "5", "--curve", curve, "--point", "t;t^2", "--range", "1..5"],
        vec!["scan", "--p", "5", "--curve", curve, "--point", "t;t^2", "--range", "1..12", "--json"],
        vec!["bounds", "prop19", "--deg-disc", "10", "--h-x", "1", "--h-j", "6"],
        vec!["descend", "--p", "5", "--curve", "0,0,0,t^5,t^10"],
        vec!["scan", "--p", "5", "--curve", "0,0,0,0,0", "--point", "0;0"],
    ];
    for args in runs {
        println!("$ edsfq {}", args.join(" "));
        let argv = std::iter::once("edsfq").chain(args.iter().copied());
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = edsfq::harness::cli::run(argv, &mut out, &mut err);
        print!("{}{}", String::from_utf8_lossy(&out), String::from_utf8_lossy(&err));
        println!("exit {code}\n");
    }
}
