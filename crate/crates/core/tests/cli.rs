use clustermod::cli::{run, EXIT_MISMATCH, EXIT_OK, EXIT_TRUNCATED, EXIT_USAGE};
use std::io::Write;

fn cli(args: &[&str]) -> (i32, String) {
    let mut all = vec!["clustermod"];
    all.extend_from_slice(args);
    let o = run(all);
    (o.code, o.output)
}

fn field<'a>(out: &'a str, key: &str) -> &'a str {
    out.lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(": ")))
        .unwrap_or_else(|| panic!("no `{key}` in\n{out}"))
}

#[test]
fn classify_names() {
    assert_eq!(cli(&["classify", "T:3,3,2/1,1,1"]), (EXIT_OK, "affine E~_6\n".into()));
    assert_eq!(cli(&["classify", "T:4,4,2/1,1,1"]).1, "doubly-extended E7^(1,1)\n");
    assert_eq!(cli(&["classify", "T:4,3,3/1,1,1"]).1, "infinite-mutation\n");
    assert_eq!(cli(&["classify", "T:9,9/1,1"]).1, "affine A_{9,9}\n");
    assert_eq!(cli(&["classify", "nonsense"]).0, EXIT_USAGE);
}

#[test]
fn explore_outputs() {
    let (code, out) = cli(&["explore", "T:2/1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(field(&out, "classes"), "2");
    let (code, out) = cli(&["explore", "T:2,2,2/1,1,1", "--framing", "special"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(field(&out, "vertices"), "108");
    assert_eq!(field(&out, "faces by codimension"), "16 96 244 270 108");
    let (code, out) = cli(&["explore", "A_3", "--framing", "principal"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(field(&out, "vertices"), "14");
}

#[test]
fn explore_truncation_exit_code() {
    let (code, out) = cli(&["explore", "E_6", "--framing", "principal", "--budget-vertices", "10"]);
    assert_eq!(code, EXIT_TRUNCATED);
    assert!(field(&out, "status").starts_with("TRUNCATED"));
}

#[test]
fn output_is_deterministic() {
    let a = cli(&["explore", "T:3,3/1,1", "--jobs", "3"]);
    let b = cli(&["explore", "T:3,3/1,1", "--jobs", "1"]);
    assert_eq!(a, b);
    let a = cli(&["explore", "D_4", "--framing", "principal", "--format", "tsv"]);
    assert_eq!(a, cli(&["explore", "D_4", "--framing", "principal", "--format", "tsv"]));
}

#[test]
fn count_tables() {
    let (code, out) = cli(&["count", "d4aff"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(!out.contains('≠'));
    let (code, out) = cli(&["count", "series", "--format", "tsv"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.lines().any(|l| l.starts_with("dhat-closed\t")));
    assert_eq!(cli(&["count", "apq", "--max", "6"]).0, EXIT_OK);
    assert_eq!(cli(&["count", "affine-groups"]).0, EXIT_OK);
    assert_eq!(cli(&["count", "dbl-clusters"]).0, EXIT_OK);
    assert_eq!(cli(&["count", "bogus"]).0, EXIT_USAGE);
}

#[test]
fn group_relations_file() {
    let dir = std::env::temp_dir().join(format!("clustermod-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("good.txt");
    let mut f = std::fs::File::create(&good).unwrap();
    writeln!(f, "# twist relations of A_{{3,1}}\ntau1^3 gamma^-1\n\ntau1 gamma tau1^-1 gamma^-1").unwrap();
    let (code, out) = cli(&["group", "T:3/1", good.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert_eq!(out.lines().filter(|l| l.starts_with("TRIVIAL")).count(), 2);

    let bad = dir.join("bad.txt");
    std::fs::write(&bad, "tau1 gamma^-1\n").unwrap();
    let (code, out) = cli(&["group", "T:3/1", bad.to_str().unwrap()]);
    assert_eq!(code, EXIT_MISMATCH);
    assert!(out.starts_with("NONTRIVIAL"));

    std::fs::write(&bad, "tau9\n").unwrap();
    assert_eq!(cli(&["group", "T:3/1", bad.to_str().unwrap()]).0, EXIT_USAGE);
    std::fs::remove_dir_all(&dir).unwrap();
}
