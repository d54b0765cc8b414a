//! Runs the built `indet` binary end to end.

use std::process::{Command, Output};

fn indet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_indet"))
        .args(args)
        .env_remove("INDET_SEED")
        .output()
        .expect("spawn indet")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn search_example_all_algorithms() {
    for algo in ["bf", "kmp-indet", "bm-indet"] {
        let o = indet(&[
            "search",
            "--algo",
            algo,
            "--alphabet",
            "abc",
            "--text",
            "aabaabaa[ab]baa[ac]",
            "--pattern",
            "aabaa",
        ]);
        assert_eq!(o.status.code(), Some(0), "{algo}");
        assert_eq!(stdout(&o), "1\n4\n8\n", "{algo}");
    }
}

#[test]
fn search_no_match_exits_one() {
    let o = indet(&["search", "--text", "acgt", "--pattern", "tt"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).is_empty());
}

#[test]
fn regular_only_searcher_rejects_indeterminate_text() {
    let o = indet(&[
        "search",
        "--algo",
        "kmp",
        "--text",
        "ac[gt]t",
        "--pattern",
        "ct",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("indeterminate"));
}

#[test]
fn malformed_input_exits_two() {
    for text in ["ac[gt", "ac[]t", "acxt", "a[gg]t"] {
        let o = indet(&["search", "--text", text, "--pattern", "a"]);
        assert_eq!(o.status.code(), Some(2), "{text}");
    }
    assert_eq!(
        indet(&["search", "--algo", "nope", "--text", "a", "--pattern", "a"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        indet(&["search", "--text", "a", "--pattern", "aa"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn iupac_files_and_output_modes() {
    let dir = std::env::temp_dir().join(format!("indet-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let text = dir.join("y.fa");
    std::fs::write(&text, ">seq1\nACGRTN\nacg\n").unwrap();
    let t = text.to_str().unwrap();

    let o = indet(&[
        "search",
        "--format",
        "iupac",
        "--text-file",
        t,
        "--pattern",
        "CR",
    ]);
    assert_eq!(o.status.code(), Some(0));
    // R = [ag]; the N at 6 stands in for C
    assert_eq!(stdout(&o), "2\n6\n8\n");

    let o = indet(&[
        "search",
        "--format",
        "iupac",
        "--text-file",
        t,
        "--pattern",
        "CR",
        "--output",
        "csv",
    ]);
    assert_eq!(stdout(&o), "position\n2\n6\n8\n");
    let o = indet(&[
        "search",
        "--format",
        "iupac",
        "--text-file",
        t,
        "--pattern",
        "CR",
        "--output",
        "json-lines",
    ]);
    assert_eq!(stdout(&o).lines().next(), Some("{\"position\":2}"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_reports_agreement() {
    let o = indet(&["verify", "--count", "300", "--seed", "9"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "300/300 agree\n");
    let o = indet(&["verify", "--count", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0/0 agree\n");
}

#[test]
fn verify_seed_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_indet"))
        .args(["verify", "--count", "50", "--sigma", "2"])
        .env("INDET_SEED", "77")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "50/50 agree\n");
}

#[test]
fn gen_is_deterministic_and_searchable() {
    let args = [
        "gen", "--sigma", "4", "--n", "60", "--m", "5", "--k1", "6", "--k2", "2", "--seed", "42",
    ];
    let a = indet(&args);
    let b = indet(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let out = stdout(&a);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0].matches('[').count(), 6);
    assert_eq!(lines[1].matches('[').count(), 2);

    let bf = indet(&[
        "search",
        "--algo",
        "bf",
        "--text",
        lines[0],
        "--pattern",
        lines[1],
    ]);
    let bm = indet(&[
        "search",
        "--algo",
        "bm-indet",
        "--text",
        lines[0],
        "--pattern",
        lines[1],
    ]);
    assert_eq!(bf.stdout, bm.stdout);
    assert_eq!(bf.status.code(), bm.status.code());
}

#[test]
fn gen_rejects_bad_spec() {
    assert_eq!(
        indet(&["gen", "--sigma", "12", "--n", "5", "--m", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        indet(&["gen", "--n", "5", "--m", "2", "--k2", "3"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn bench_writes_csv() {
    let o = indet(&[
        "bench", "--n", "500,1000", "--m", "8", "--k2", "2", "--trials", "2", "--seed", "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(
        lines.next(),
        Some("algo,sigma,n,m,k1,k2,seed,trial,time_s,matches,comparisons")
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 2 * 3 * 2);
    assert!(rows.iter().all(|r| r.split(',').count() == 11));
}
