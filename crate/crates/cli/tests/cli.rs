use std::process::{Command, Output};

fn tlfc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tlfc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = tlfc(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn multiplies_monomials() {
    assert_eq!(
        stdout_of(&["mul", "n=4:[1,4]", "n=4:[4,4][3,3][1,1]"]),
        "delta^1 * n=4:[3,3][1,1]\n"
    );
    assert_eq!(
        stdout_of(&["mul", "n=4:[4,4][3,3][1,1]", "n=4:[1,4]"]),
        "delta^1 * n=4:[4,4][1,1]\n"
    );
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&[
        "mul",
        "--json",
        "n=4:[1,4]",
        "n=4:[4,4][3,3][1,1]",
    ]))
    .unwrap();
    assert_eq!(json["delta"], 1);
    assert_eq!(json["text"], "n=4:[3,3][1,1]");
}

#[test]
fn counts() {
    assert_eq!(
        stdout_of(&["count", "--n", "4", "--narayana"]),
        "1 10 20 10 1\n"
    );
    assert_eq!(
        stdout_of(&["count", "--n", "4", "--narayana", "--brute"]),
        "1 10 20 10 1\n"
    );
    assert_eq!(stdout_of(&["count", "--n", "3"]), "14\n");
    assert_eq!(stdout_of(&["count", "--n", "5", "--start", "3"]), "28\n");
    assert_eq!(stdout_of(&["count", "--n", "5", "--end", "5"]), "5\n");
    assert_eq!(
        stdout_of(&["count", "--n", "5", "--first-block", "2", "4"]),
        "4\n"
    );
    assert_eq!(
        stdout_of(&["count", "--n", "5", "--start", "3", "--p", "2"]),
        "15\n"
    );
    assert_eq!(
        stdout_of(&["count", "--n", "5", "--start", "3", "--p", "2", "--brute"]),
        "15\n"
    );
    let json: serde_json::Value =
        serde_json::from_str(&stdout_of(&["count", "--json", "--n", "40"])).unwrap();
    assert_eq!(json["value"], "10113918591637898134020");
}

#[test]
fn tables_in_every_format() {
    let text = stdout_of(&["table", "--n", "3"]);
    assert!(text.lines().any(|l| l.trim() == "3 1 6 6 1"), "{text}");
    let csv = stdout_of(&["table", "--n", "3", "--format", "csv"]);
    assert_eq!(csv.lines().nth(4), Some("3,1,6,6,1"));
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&[
        "table",
        "--n",
        "3",
        "--kind",
        "triangle-start",
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(json["rows"][3]["values"], serde_json::json!([1, 3, 5, 5]));
    assert_eq!(
        stdout_of(&["table", "--n", "6", "--kind", "start-end"]),
        stdout_of(&["table", "--n", "6", "--kind", "start-end"])
    );
}

#[test]
fn diagrams_and_conversions() {
    assert_eq!(stdout_of(&["to-fc", "strings=2;1-2,1'-2'"]), "n=1:[1,1]\n");
    let d = stdout_of(&["to-diagram", "n=5:[4,5][3,3][1,1]"]);
    assert_eq!(stdout_of(&["to-fc", d.trim()]), "n=5:[4,5][3,3][1,1]\n");
    let traced = stdout_of(&["to-diagram", "--json", "--trace", "n=5:[4,5][3,3][1,1]"]);
    let json: serde_json::Value = serde_json::from_str(&traced).unwrap();
    assert!(json["trace"]["top"].is_array());
    assert_eq!(
        stdout_of(&[
            "convert",
            "--from",
            "fc",
            "--to",
            "ballot",
            "n=5:[4,5][3,3][1,1]"
        ]),
        "+-++--++-+--\n"
    );
    assert_eq!(
        stdout_of(&[
            "convert",
            "--from",
            "ballot",
            "--to",
            "dyck",
            "+−++−−++−+−−"
        ]),
        "RURRUURRURUU\n"
    );
    assert_eq!(
        stdout_of(&["convert", "--from", "dyck", "--to", "fc", "RURRUURRURUU"]),
        "n=5:[4,5][3,3][1,1]\n"
    );
    let nb = stdout_of(&[
        "convert",
        "--nb",
        "--from",
        "diagram",
        "--to",
        "ballot",
        d.trim(),
    ]);
    assert_ne!(nb, "+-++--++-+--\n");
}

#[test]
fn enumerates_and_renders() {
    let listed = stdout_of(&["enum", "--n", "3"]);
    assert_eq!(listed.lines().count(), 14);
    assert_eq!(listed.lines().next(), Some("n=3:[]"));
    assert_eq!(
        stdout_of(&["enum", "--n", "4", "--p", "2"]).lines().count(),
        20
    );
    let svg = stdout_of(&["render", "n=2:[1,1]"]);
    assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
    let path = std::env::temp_dir().join(format!("tlfc-render-{}.svg", std::process::id()));
    stdout_of(&[
        "render",
        "strings=3;1-2,3-3',1'-2'",
        "--svg",
        path.to_str().unwrap(),
    ]);
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        stdout_of(&["render", "strings=3;1-2,3-3',1'-2'"])
    );
    std::fs::remove_file(path).unwrap();
}

#[test]
fn census_lists_classes() {
    let out = stdout_of(&["census", "--n", "4", "--p", "2"]);
    let total: usize = out
        .lines()
        .skip(1)
        .map(|l| {
            l.split_whitespace()
                .last()
                .unwrap()
                .parse::<usize>()
                .unwrap()
        })
        .sum();
    assert_eq!(total, 20);
}

#[test]
fn verify_runs_suites() {
    let out = stdout_of(&["verify", "--all", "--max-n", "4"]);
    assert!(out.lines().all(|l| l.starts_with("PASS")), "{out}");
    assert_eq!(
        out.lines().count(),
        stdout_of(&["verify", "--list"])
            .lines()
            .filter(|l| l.starts_with("  "))
            .count()
    );
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&[
        "verify",
        "--json",
        "tl-rewriting",
        "--max-n",
        "3",
    ]))
    .unwrap();
    assert_eq!(json["passed"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(tlfc(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        tlfc(&["table", "--n", "3", "--format", "xml"])
            .status
            .code(),
        Some(2)
    );
    let bad = tlfc(&["mul", "n=4:[1,4]", "n=4:[1,5]"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(!bad.stderr.is_empty());
    assert_eq!(tlfc(&["to-fc", "strings=2;1-2'"]).status.code(), Some(1));
    assert_eq!(tlfc(&["verify", "nope"]).status.code(), Some(1));
    assert_eq!(
        tlfc(&["convert", "--from", "ballot", "--to", "fc", "+--+"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn output_is_deterministic() {
    let args = ["census", "--json", "--n", "5", "--p", "2"];
    assert_eq!(stdout_of(&args), stdout_of(&args));
}
