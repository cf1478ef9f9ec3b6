use std::path::Path;

use rcn::cli::{run, EXIT_IO, EXIT_OK, EXIT_USAGE, EXIT_VALIDATION};

fn rcn(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("rcn").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_string()
}

#[test]
fn gen_reports_counts() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) = rcn(&["gen", "--strategy", "singer", "--n", "81", "--out", &path(dir.path(), "s.rcn")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("625,320 crossings (expected 625,320)"), "{out}");
    let (_, out, _) = rcn(&["gen", "--strategy", "convex", "--n", "4", "--out", &path(dir.path(), "c.rcn")]);
    assert!(out.contains(" 1 crossings (expected 1)"), "{out}");
    let (code, out, _) =
        rcn(&["--porcelain", "gen", "--strategy", "s3", "--n", "81", "--a", "26", "--out", &path(dir.path(), "x.rcn")]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "623916\t623916\n");
}

#[test]
fn count_prints_ratio_and_is_independent_of_method_and_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let file = path(dir.path(), "s9.rcn");
    rcn(&["gen", "--strategy", "singer", "--n", "9", "--out", &file]);
    let (code, out, _) = rcn(&["count", &file]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("crossings: 36\n") && out.contains("0.285714"), "{out}");
    let reference = rcn(&["--porcelain", "count", &file, "--method", "pairs", "--jobs", "1"]).1;
    assert_eq!(reference, "36\t0.285714\n");
    for jobs in ["1", "3", "8"] {
        assert_eq!(rcn(&["--porcelain", "count", &file, "--method", "quads", "--jobs", jobs]).1, reference);
        assert_eq!(rcn(&["--porcelain", "count", &file, "--method", "pairs", "--jobs", jobs]).1, reference);
    }
    let convex = path(dir.path(), "c81.rcn");
    rcn(&["gen", "--strategy", "convex", "--n", "81", "--out", &convex]);
    let (_, out, _) = rcn(&["count", &convex]);
    assert!(out.contains("1,663,740") && out.contains("1.000000"), "{out}");
}

#[test]
fn count_reports_violations_and_io_errors() {
    let dir = tempfile::tempdir().unwrap();
    let file = path(dir.path(), "bad.rcn");
    std::fs::write(&file, "rcn-drawing v1\nn=4\n0/1 0/1\n1/1 1/1\n2/1 2/1\n0/1 5/1\n").unwrap();
    let (code, _, err) = rcn(&["count", &file]);
    assert_eq!(code, EXIT_VALIDATION);
    assert!(err.contains("0, 1, 2"), "{err}");
    std::fs::write(&file, "rcn-drawing v1\nn=1\n2/4 0/1\n").unwrap();
    assert_eq!(rcn(&["count", &file]).0, EXIT_VALIDATION);
    assert_eq!(rcn(&["count", &path(dir.path(), "missing.rcn")]).0, EXIT_IO);
}

#[test]
fn verify_ranges() {
    let (code, out, _) = rcn(&["verify", "singer", "3..27"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.matches("PASS").count(), 3);
    assert!(out.contains("6,264") && out.contains("all passed"));
    let (code, out, _) = rcn(&["verify", "convex", "4..12"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.matches("PASS").count(), 9);
    let (code, out, _) = rcn(&["verify", "s1", "81"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("a=26") && out.contains("624,852"), "{out}");
    assert_eq!(rcn(&["verify", "singer", "4..8"]).0, EXIT_USAGE);
}

#[test]
fn tables() {
    let (code, t3, _) = rcn(&["table", "table3"]);
    assert_eq!(code, EXIT_OK);
    assert!(t3.contains("623,916") && t3.contains("659,178") && t3.contains("[reference]"));
    let (_, t1, _) = rcn(&["table", "table1"]);
    assert!(t1.lines().any(|l| l.starts_with("C4 ") && l.contains("0.4286")));
    let (_, t2, _) = rcn(&["table", "table2"]);
    assert!(t2.lines().any(|l| l.starts_with("Cs3") && l.contains("0.3838") && l.contains("a0 = 23/72 n - 1/24")));
    assert_eq!(rcn(&["table", "table1"]).1, t1);
    assert_eq!(rcn(&["table", "table4"]).0, EXIT_USAGE);
}

#[test]
fn render_writes_svg() {
    let dir = tempfile::tempdir().unwrap();
    let file = path(dir.path(), "s9.rcn");
    let svg = path(dir.path(), "s9.svg");
    rcn(&["gen", "--strategy", "singer", "--n", "9", "--out", &file]);
    assert_eq!(rcn(&["render", &file, "--out", &svg, "--width", "400"]).0, EXIT_OK);
    let text = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(text.matches("<line").count(), 36);
    assert_eq!(text.matches("<circle").count(), 9);
    let again = path(dir.path(), "again.svg");
    rcn(&["render", &file, "--out", &again, "--width", "400"]);
    assert_eq!(std::fs::read_to_string(&again).unwrap(), text);

    let big = path(dir.path(), "s81.rcn");
    rcn(&["gen", "--strategy", "singer", "--n", "81", "--out", &big]);
    assert_eq!(rcn(&["render", &big, "--out", &path(dir.path(), "s81.svg")]).0, EXIT_OK);
    assert_eq!(rcn(&["render", &file, "--out", &path(dir.path(), "no/such/dir.svg")]).0, EXIT_IO);
}

#[test]
fn generated_files_are_deterministic_and_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (path(dir.path(), "a.rcn"), path(dir.path(), "b.rcn"));
    rcn(&["gen", "--strategy", "s2", "--n", "27", "--a", "8", "--out", &a]);
    rcn(&["gen", "--strategy", "s2", "--n", "27", "--a", "8", "--out", &b]);
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    let d = rcn::cli::format::read(Path::new(&a)).unwrap();
    assert_eq!(rcn::cli::format::to_string(&d), text);
}

#[test]
fn usage_errors() {
    assert_eq!(rcn(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(rcn(&["gen", "--strategy", "singer", "--n", "10", "--out", "/tmp/never.rcn"]).0, EXIT_USAGE);
    assert_eq!(rcn(&["gen", "--strategy", "nope", "--n", "9", "--out", "/tmp/never.rcn"]).0, EXIT_USAGE);
    let (code, out, _) = rcn(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("verify"));
}
