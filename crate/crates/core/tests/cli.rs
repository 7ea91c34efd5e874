use std::process::{Command, Output};

use recpow::gfpow::{display, gf_power};
use recpow::polyrat::render::parse;
use recpow::RecurrenceSpec;

fn recpow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_recpow")).args(args).output().expect("spawn recpow")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[track_caller]
fn expect(args: &[&str], exit: i32, text: &str) {
    let out = recpow(args);
    assert_eq!(code(&out), exit, "{args:?}: stderr {}", stderr(&out));
    assert_eq!(stdout(&out), text, "{args:?}");
}

#[test]
fn seq_terms() {
    expect(&["seq", "--preset", "fibonacci", "--n", "10"], 0, "55\n");
    expect(&["seq", "--preset", "lucas", "--n", "0"], 0, "2\n");
    expect(&["seq", "--preset", "fibonacci", "--n", "90", "--fast"], 0, "2880067194370816120\n");
    expect(&["seq", "--preset", "fibonacci", "--n", "-6"], 0, "-8\n");
    expect(&["seq", "--preset", "pell", "--n", "5", "--companion"], 0, "82\n");
    expect(&["seq", "--preset", "gen-pell:1,2", "--n", "3"], 0, "5\n");
    expect(&["seq", "--a", "1", "--b", "2", "--u0", "1/2", "--u1", "-3", "--n", "2"], 0, "-2\n");
}

#[test]
fn degenerate_spec_is_a_usage_error() {
    let out = recpow(&["seq", "--a", "1", "--b", "0", "--u0", "0", "--u1", "1", "--n", "3"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("b = 0"), "{}", stderr(&out));
    let out = recpow(&["seq", "--a", "2", "--b", "-1", "--n", "3"]);
    assert_eq!(code(&out), 2);
    assert_eq!(code(&recpow(&["seq", "--n", "3"])), 2);
    assert_eq!(code(&recpow(&["seq", "--preset", "tribonacci", "--n", "3"])), 2);
    assert_eq!(code(&recpow(&["frobnicate"])), 2);
}

#[test]
fn gf_rendering() {
    expect(&["gf", "--preset", "fibonacci", "--power", "1"], 0, "x/(1 - x - x^2)\n");
    expect(&["gf", "--a", "1", "--b", "2", "--u0", "0", "--u1", "1", "--power", "1"], 0, "x/(1 - x - 2x^2)\n");
    assert_eq!(code(&recpow(&["gf", "--preset", "fibonacci", "--power", "0"])), 2);
}

#[test]
fn gf_square_passes_the_series_check() {
    let out = recpow(&["gf", "--preset", "fibonacci", "--power", "2", "--check-terms", "32"]);
    assert_eq!(code(&out), 0);
    assert!(stderr(&out).contains("first 32 coefficients agree"));
    let f = parse(stdout(&out).trim()).unwrap();
    let fib = RecurrenceSpec::fibonacci();
    assert_eq!(f, gf_power(&fib, 2).unwrap());
    assert_eq!(f, display::eq2(&fib));
}

#[test]
fn gf_latex_round_trips() {
    for (preset, power) in [("fibonacci", "3"), ("pell", "4"), ("lucas", "2"), ("pell-q", "5")] {
        let out = recpow(&["gf", "--preset", preset, "--power", power, "--format", "latex"]);
        assert_eq!(code(&out), 0);
        let latex = stdout(&out);
        assert!(latex.starts_with("\\frac{"), "{latex}");
        let text = stdout(&recpow(&["gf", "--preset", preset, "--power", power]));
        assert_eq!(parse(latex.trim()).unwrap(), parse(text.trim()).unwrap());
    }
}

#[test]
fn gf_structured() {
    let out = recpow(&["gf", "--preset", "fibonacci", "--power", "2", "--format", "structured"]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["numerator"], serde_json::json!(["0", "1", "-1"]));
    assert_eq!(doc["denominator"], serde_json::json!(["1", "-2", "-2", "1"]));
    assert_eq!(doc["power"], "2");
}

#[test]
fn partial_sums() {
    expect(
        &["sum", "--preset", "fibonacci", "--n", "5", "--power", "1", "--x", "1", "--both"],
        0,
        "direct: 12\nclosed: 12\nmatch\n",
    );
    expect(&["sum", "--preset", "pell", "--n", "4", "--power", "1", "--x", "1", "--direct"], 0, "direct: 20\n");
    expect(&["sum", "--preset", "fibonacci", "--n", "0", "--power", "2", "--x", "7", "--direct"], 0, "direct: 0\n");
    expect(
        &["sum", "--a", "1", "--b", "2", "--n", "3", "--power", "2", "--x", "1"],
        0,
        "direct: 11\nclosed (general-b route): 11\nmatch\n",
    );
    expect(
        &["sum", "--preset", "fibonacci", "--n", "3", "--power", "1", "--closed"],
        0,
        "closed: x + x^2 + 2x^3\n",
    );
}

#[test]
fn partial_sum_errors() {
    let out = recpow(&["sum", "--preset", "fibonacci", "--n", "3", "--power", "2", "--x", "-1", "--closed"]);
    assert_eq!(code(&out), 4);
    assert!(stderr(&out).contains("vanishing denominator"));
    // closed form needs U_0 = 0
    assert_eq!(code(&recpow(&["sum", "--preset", "lucas", "--n", "3", "--x", "1", "--closed"])), 2);
    assert_eq!(code(&recpow(&["sum", "--preset", "fibonacci", "--n", "40", "--direct"])), 2);
    assert_eq!(code(&recpow(&["sum", "--preset", "fibonacci", "--n", "3", "--closed", "--direct"])), 2);
}

#[test]
fn binomial_sums() {
    expect(
        &["binom-sum", "--preset", "fibonacci", "--n", "4", "--power", "1", "--x", "1", "--both"],
        0,
        "direct: 21\nclosed: 21\nmatch\n",
    );
    expect(&["binom-sum", "--preset", "fibonacci", "--n", "2", "--power", "4", "--x", "-1", "--direct"], 0, "direct: -1\n");
    expect(&["binom-sum", "--preset", "fibonacci", "--n", "0", "--power", "3", "--x", "5", "--direct"], 0, "direct: 0\n");
    expect(
        &["binom-sum", "--preset", "pell", "--n", "6", "--power", "3", "--x", "-1/2"],
        0,
        &{
            let out = stdout(&recpow(&["binom-sum", "--preset", "pell", "--n", "6", "--power", "3", "--x", "-1/2", "--direct"]));
            let v = out.trim().strip_prefix("direct: ").unwrap().to_string();
            format!("direct: {v}\nclosed: {v}\nmatch\n")
        },
    );
}

#[test]
fn audit_exit_codes() {
    let out = recpow(&["audit", "--claims", "cor7-1", "--max-n", "50"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("cells    51  pass    51"), "{}", stdout(&out));

    let out = recpow(&["audit", "--claims", "cor8-iii", "--max-n", "9"]);
    assert_eq!(code(&out), 0, "variant holds on every cell");
    assert!(stdout(&out).contains("variant implied-exponent"));

    let out = recpow(&["audit", "--claims", "cor8-iv,eq2"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("fail r=0, n=0"));

    assert_eq!(code(&recpow(&["audit", "--claims", "thm99"])), 2);
    let listed = stdout(&recpow(&["audit", "--list"]));
    assert!(listed.lines().any(|l| l.starts_with("thm2-S4n-1 ")));
}

#[test]
fn audit_out_file_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let paths = [dir.path().join("a.json"), dir.path().join("b.json")];
    for path in &paths {
        let out = recpow(&[
            "audit",
            "--claims",
            "all",
            "--max-n",
            "25",
            "--format",
            "structured",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(code(&out), 1);
        assert!(stdout(&out).is_empty());
        assert!(stderr(&out).contains("with failures"));
    }
    let (a, b) = (std::fs::read(&paths[0]).unwrap(), std::fs::read(&paths[1]).unwrap());
    assert_eq!(a, b);
    let doc: serde_json::Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(doc["run"]["max_n"], "25");
    assert!(doc["claims"].as_array().unwrap().len() > 40);
}

#[test]
fn config_file_sets_defaults() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("recpow.conf");
    std::fs::write(&cfg, "# defaults\nclaims = cor7-1\nmax-n = 10\nformat = structured\n").unwrap();
    let out = recpow(&["--config", cfg.to_str().unwrap(), "audit"]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["claims"][0]["cells"].as_array().unwrap().len(), 11);

    // flags win over the file
    let out = recpow(&["--config", cfg.to_str().unwrap(), "audit", "--format", "text"]);
    assert!(stdout(&out).starts_with("cor7-1"));

    std::fs::write(&cfg, "colour = blue\n").unwrap();
    assert_eq!(code(&recpow(&["--config", cfg.to_str().unwrap(), "audit"])), 2);
    assert_eq!(code(&recpow(&["--config", "/nonexistent/recpow.conf", "audit"])), 2);
}
