use std::path::PathBuf;
use std::process::{Command, Output};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_losanitsch"))
        .args(args)
        .env_remove("LOSANITSCH_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn fixture(id: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(format!("{id}.txt")).display().to_string()
}

#[test]
fn triangle_l_rows() {
    let o = bin(&["triangle", "L", "--rows", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\n1 1\n1 1 1\n1 2 2 1\n1 2 4 2 1\n1 3 6 6 3 1\n1 3 9 10 9 3 1\n");
}

#[test]
fn triangle_single_row() {
    assert_eq!(stdout(&bin(&["triangle", "e", "--rows", "0"])), "1\n");
}

#[test]
fn triangle_formats() {
    let csv = stdout(&bin(&["triangle", "o", "--rows", "2", "--format", "csv"]));
    assert_eq!(csv, "0\n0,1\n0,1,1\n");
    let b = stdout(&bin(&["triangle", "L_mod_p", "--p", "3", "--rows", "2", "--format", "bfile"]));
    assert_eq!(b, "0 1\n1 1\n2 1\n3 1\n4 1\n5 1\n");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["triangle", "epsilon", "--rows", "3"][..],
        &["triangle", "epsilon", "--p", "3", "--j", "3"],
        &["triangle", "nope"],
        &["triangle", "L", "--format", "xml"],
        &["verify", "bogus"],
        &["verify", "all", "--primes", "4"],
        &["series", "1.0"],
        &["oeis", "compare", "L", "A034851"],
        &["oeis", "compare", "L", "A034851", "--file", "/nonexistent/b.txt"],
        &["frobnicate"],
    ] {
        assert_eq!(bin(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_single_and_all() {
    let o = bin(&["verify", "3.14", "--max-n", "12"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("3.14\toracle n<=12\tpass\t"));
    let o = bin(&["verify", "all", "--max-n", "12", "--primes", "3,5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    let last = out.lines().last().unwrap();
    let (passed, total) = last.strip_suffix(" passed").unwrap().split_once('/').unwrap();
    assert_eq!(passed, total);
}

#[test]
fn series_listing() {
    let o = bin(&["series", "3.11", "--terms", "4"]);
    assert_eq!(stdout(&o), "1\n1+x\n1+x+x^2\n1+2x+2x^2+x^3\n1+2x+4x^2+2x^3+x^4\n");
    let o = bin(&["series", "4.29", "--terms", "2", "--p", "3"]);
    assert_eq!(stdout(&o), "1\n1\n1+x^2\n");
}

#[test]
fn export_then_compare() {
    let dir = tempfile::tempdir().unwrap();
    let o = bin(&["oeis", "export", "e", "--rows", "3", "--id", "A282011"]);
    let text = stdout(&o);
    assert!(text.starts_with("# A282011\n0 1\n1 1\n2 0\n"));
    let path = dir.path().join("e.txt");
    std::fs::write(&path, &text).unwrap();
    let o = bin(&["oeis", "compare", "e", "A282011", "--file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("match: shift 0, 10 terms compared"));
}

#[test]
fn compare_mismatch_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "0 1\n1 1\n2 1\n3 1\n4 7\n5 1\n").unwrap();
    let o = bin(&["oeis", "compare", "L", "A034851", "--file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("at b-file index 4 computed 1 but b-file has 7"));
}

#[test]
fn malformed_bfile_is_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "0 1\n1\t1\n").unwrap();
    let o = bin(&["oeis", "compare", "L", "A034851", "--file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn shifted_fixture_aligns() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("shifted.txt");
    std::fs::write(&path, "1 0\n2 1\n3 1\n4 2\n5 2\n6 4\n7 5\n8 9\n9 12\n").unwrap();
    let o = bin(&["oeis", "compare", "fib", "A102526", "--file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("match: shift -1"));
}

#[test]
fn shipped_fixtures_match() {
    for (source, id) in [("L", "A034851"), ("e", "A282011"), ("o", "A159916"), ("Lbar", "A034852"), ("fib", "A102526")] {
        let o = bin(&["oeis", "compare", source, id, "--file", &fixture(id)]);
        assert_eq!(o.status.code(), Some(0), "{id}: {}", stdout(&o));
    }
}
