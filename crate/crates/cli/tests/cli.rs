use std::process::{Command, Output};

use zetaval_core::Rational;

fn zetaval(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zetaval"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn ok(args: &[&str]) -> String {
    let o = zetaval(args);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    stdout(&o)
}

fn code(args: &[&str]) -> i32 {
    zetaval(args).status.code().expect("exit code")
}

#[test]
fn value_examples() {
    assert_eq!(ok(&["value", "zeta", "--n", "-1"]), "-1/12\n");
    assert_eq!(ok(&["value", "lvalue", "--char", "chi4", "--n", "-2"]), "-1/2\n");
    assert_eq!(
        ok(&["value", "gbernoulli", "--char", "kronecker:11", "--n", "5"]),
        "-12750/11\n"
    );
    assert_eq!(ok(&["value", "zeta", "--n", "2"]), "1/6*pi^2\n");
    assert_eq!(
        ok(&["value", "hurwitz", "--n", "-1", "--a", "1/2", "--route", "integral"]),
        "1/24\nroute: integral\n"
    );
    assert_eq!(
        ok(&["value", "chi4", "--n", "-2", "--route", "euler-poly"]),
        "-1/2\nroute: euler_poly\n"
    );
    assert_eq!(
        ok(&["value", "twisted", "--char", "chi4", "--n", "-1", "--a", "1/2"]),
        "-1/4\n"
    );
    assert_eq!(ok(&["value", "lerch", "--k", "1", "--a", "1/3"]), "1/2\n");
    assert_eq!(ok(&["value", "bernoulli", "--n", "12"]), "-691/2730\n");
}

#[test]
fn values_round_trip_through_the_text_format() {
    let cases: &[&[&str]] = &[
        &["value", "zeta", "--n", "-11"],
        &["value", "hurwitz", "--n", "-7", "--a", "2/7"],
        &[
            "value",
            "lvalue",
            "--char",
            "kronecker:7",
            "--n",
            "-6",
            "--route",
            "hurwitz-scaled",
        ],
        &["value", "gbernoulli", "--char", "kronecker:23", "--n", "11"],
        &["value", "lerch", "--k", "4", "--a", "3/5", "--c", "-2/3"],
    ];
    for args in cases {
        let out = ok(args);
        let first = out.lines().next().unwrap();
        let parsed: Rational = first.parse().unwrap();
        assert_eq!(parsed.to_string(), first);
    }
}

#[test]
fn value_usage_errors_exit_2() {
    assert_eq!(code(&["value", "zeta"]), 2);
    assert_eq!(code(&["value", "zeta", "--n", "3"]), 2);
    assert_eq!(code(&["value", "zeta", "--n", "1"]), 2);
    assert_eq!(code(&["value", "hurwitz", "--n", "-1", "--a", "0"]), 2);
    assert_eq!(code(&["value", "hurwitz", "--n", "-1", "--a", "x"]), 2);
    assert_eq!(code(&["value", "lvalue", "--char", "trivial:4", "--n", "-1"]), 2);
    assert_eq!(code(&["value", "lvalue", "--char", "kronecker:9", "--n", "-1"]), 2);
    assert_eq!(code(&["value", "lerch", "--k", "2", "--a", "1", "--c", "-1"]), 2);
    assert_eq!(code(&["value", "zeta", "--n", "-1", "--route", "sideways"]), 2);
    assert_eq!(code(&["value", "nonsense"]), 2);
    assert_eq!(code(&[]), 2);
    assert_eq!(code(&["--help"]), 0);
}

#[test]
fn table_csv_example() {
    assert_eq!(
        ok(&["table", "--chars", "chi4", "--n", "0..3", "--format", "csv"]),
        "n,chi4\n0,0\n1,-1/2\n2,0\n3,3/2\n"
    );
}

#[test]
fn table_formats() {
    let md = ok(&["table", "--chars", "B,kronecker:5", "--n", "2..2"]);
    assert_eq!(md, "| n | B | kronecker:5 |\n|---|---|---|\n| 2 | 1/6 | 4/5 |\n");
    let json: serde_json::Value = serde_json::from_str(&ok(&[
        "table",
        "--chars",
        "table:4:1,0,-1,0",
        "--n",
        "1",
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(json["columns"][0], "table:4:1,0,-1,0");
    assert_eq!(json["rows"][0]["values"][0], "-1/2");
}

#[test]
fn table_golden_and_errors() {
    let out = ok(&[
        "table",
        "--chars",
        "chi4,kronecker:19",
        "--n",
        "0..12",
        "--golden",
        "appendix",
    ]);
    assert!(out.ends_with("golden appendix: 26/26 cells match\n"));
    assert_eq!(
        code(&[
            "table",
            "--chars",
            "kronecker:29",
            "--n",
            "0..2",
            "--golden",
            "appendix"
        ]),
        2
    );
    assert_eq!(
        code(&["table", "--chars", "chi4", "--n", "0..13", "--golden", "appendix"]),
        2
    );
    assert_eq!(code(&["table", "--chars", "chi4", "--n", "0..65"]), 2);
    assert_eq!(code(&["table", "--chars", "table:4:1,1,1,1"]), 2);
    assert_eq!(code(&["table", "--n", "0..3"]), 2);
}

#[test]
fn verify_exit_codes() {
    let out = ok(&["verify", "chi4", "--nmax", "12"]);
    assert!(out.starts_with("suite chi4: "));
    assert!(out.contains(" 0 failed"));
    ok(&["verify", "prop-a1", "--primes", "3,5,7,11,13,17,19,23", "--nmax", "12"]);
    ok(&["verify", "hurwitz-integral", "--nmax", "30", "--jobs", "2"]);
    assert_eq!(code(&["verify", "everything"]), 2);
    assert_eq!(code(&["verify", "prop-a1", "--primes", "9"]), 2);
    assert_eq!(code(&["verify", "chi4", "--jobs", "0"]), 2);
}

#[test]
fn plot_examples() {
    assert_eq!(
        ok(&["plot", "sn", "--n", "2", "--range", "0..1", "--samples", "3"]),
        "label,x,y,xf,yf\nS_2,0,0,0,0\nS_2,1/2,0,0.5,0\nS_2,1,0,1,0\n"
    );
    let json: serde_json::Value = serde_json::from_str(&ok(&[
        "plot",
        "sna",
        "--n",
        "0",
        "--a",
        "1/2",
        "--range",
        "1/2..3/2",
        "--samples",
        "2",
        "--format",
        "json",
    ]))
    .unwrap();
    let points = &json["series"][0]["points"];
    assert_eq!(points[0]["x"], "1/2");
    assert_eq!(points[0]["y"], "-1/2");
    assert_eq!(points[1]["y"], "1/2");
    assert_eq!(points[1]["yf"], 0.5);
}

#[test]
fn plot_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("sn_odd.csv");
    ok(&[
        "plot",
        "sn",
        "--n",
        "1,3,5",
        "--range",
        "0..1",
        "--samples",
        "101",
        "--out",
        csv.to_str().unwrap(),
    ]);
    let text = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(text.lines().count(), 1 + 3 * 101);
    assert!(text.contains("\nS_1,1/2,-1/8,0.5,-0.125\n"));
    assert!(text.contains("\nS_3,1/2,1/64,0.5,0.015625\n"));

    let json = dir.path().join("phi.json");
    ok(&[
        "plot",
        "phi",
        "--n",
        "0,1",
        "--samples",
        "5",
        "--out",
        json.to_str().unwrap(),
    ]);
    let value: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(value["series"].as_array().unwrap().len(), 2);
    assert_eq!(value["series"][0]["points"][2]["y"], "1/8");
}

#[test]
fn plot_errors() {
    assert_eq!(code(&["plot", "sn", "--n", "1", "--samples", "1"]), 2);
    assert_eq!(code(&["plot", "sn", "--n", "1", "--range", "1..0"]), 2);
    assert_eq!(code(&["plot", "sna", "--n", "1"]), 2);
    assert_eq!(code(&["plot", "sna", "--n", "1", "--a", "2"]), 2);
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("no/such/dir/out.csv");
    assert_eq!(code(&["plot", "sn", "--n", "1", "--out", missing.to_str().unwrap()]), 1);
}
