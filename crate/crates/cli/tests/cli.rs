use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn holim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_holim")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn specs() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../specs")
}

#[test]
fn all_is_byte_identical_across_runs() {
    let args = ["run", "--suite", "all", "--algebra", "z2", "--truncation", "4", "--seed", "0"];
    let a = holim(&args);
    let b = holim(&args);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains(" checks: "));
    let kv = ["run", "--suite", "all", "--algebra", "z2", "--format", "kv"];
    assert_eq!(holim(&kv).stdout, holim(&kv).stdout);
}

#[test]
fn seeds_change_inputs_not_verdicts() {
    let run = |seed: &str| holim(&["run", "--suite", "mc", "--algebra", "sweedler", "--truncation", "3", "--seed", seed, "--samples", "10", "--format", "kv"]);
    let (a, b) = (run("1"), run("2"));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(b.status.code(), Some(0));
    assert!(stdout(&a).contains("run.seed=1\n"));
    assert!(stdout(&b).contains("summary.result=pass\n"));
}

#[test]
fn rendered_built_ins_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["z2", "s3", "exterior", "sweedler"] {
        let rendered = holim(&["render", "--algebra", name]);
        assert_eq!(rendered.status.code(), Some(0));
        let path = dir.path().join(format!("{name}.spec"));
        std::fs::write(&path, &rendered.stdout).unwrap();
        let run = holim(&["run", "--suite", "axioms", "--algebra", path.to_str().unwrap(), "--truncation", "3", "--samples", "10"]);
        assert_eq!(run.status.code(), Some(0), "{name}: {}{}", stdout(&run), stderr(&run));
        assert!(!stderr(&run).contains("warning"));
    }
}

#[test]
fn shipped_specs_match_renderings() {
    for (file, name) in [("z2.spec", "z2"), ("dg-sweedler.spec", "sweedler")] {
        let shipped = std::fs::read(specs().join(file)).unwrap();
        assert_eq!(holim(&["render", "--algebra", name]).stdout, shipped, "{file}");
    }
    let path = specs().join("z2-rescaled.spec");
    let run = holim(&["run", "--suite", "cobar", "--algebra", path.to_str().unwrap(), "--truncation", "3", "--samples", "10"]);
    assert_eq!(run.status.code(), Some(0), "{}", stdout(&run));
    assert!(stdout(&run).contains("algebra     z2-rescaled\n"));
}

#[test]
fn broken_spec_loads_flagged_and_fails() {
    let path = specs().join("broken-coassociativity.spec");
    let run = holim(&["run", "--suite", "axioms", "--algebra", path.to_str().unwrap(), "--format", "kv"]);
    assert_eq!(run.status.code(), Some(1));
    assert!(stderr(&run).contains("warning"));
    let out = stdout(&run);
    assert!(out.contains("check.axioms.coassociativity.status=fail\n"));
    assert!(out.contains("summary.result=fail\n"));
}

#[test]
fn syntax_errors_carry_positions() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.spec");
    std::fs::write(&path, "[basis]\ne0 0\n\n[unit]\ne0\n\n[product]\ne0 ⊗ e0 -> e0\n\n[coproduct]\ne0 -> e0⊗e0\n\n[counit]\ne0 -> 1\ne0 -> x\n").unwrap();
    let run = holim(&["run", "--suite", "axioms", "--algebra", path.to_str().unwrap()]);
    assert_eq!(run.status.code(), Some(2));
    assert!(stderr(&run).contains("line 15"), "{}", stderr(&run));
    assert!(run.stdout.is_empty());
}

#[test]
fn missing_counit_names_the_label() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("nocounit.spec");
    std::fs::write(&path, "[basis]\ne0 0\ne1 0\n[unit]\ne0 + e1\n[product]\ne0 ⊗ e0 -> e0\ne1 ⊗ e1 -> e1\n[coproduct]\ne0 -> e0⊗e0 + e1⊗e1\ne1 -> e0⊗e1 + e1⊗e0\n[counit]\ne0 -> 1\n").unwrap();
    let run = holim(&["run", "--suite", "axioms", "--algebra", path.to_str().unwrap()]);
    assert_eq!(run.status.code(), Some(2));
    assert!(stderr(&run).contains("e1"), "{}", stderr(&run));
}

#[test]
fn unknown_names_are_usage_errors() {
    let run = holim(&["run", "--suite", "cobra", "--algebra", "z2"]);
    assert_eq!(run.status.code(), Some(2));
    assert!(stderr(&run).contains("unknown suite `cobra`"));
    let run = holim(&["run", "--suite", "cobar", "--algebra", "no-such-algebra"]);
    assert_eq!(run.status.code(), Some(2));
    assert!(stderr(&run).contains("no-such-algebra"));
    let run = holim(&["render", "--algebra", "upper-triangular"]);
    assert_eq!(run.status.code(), Some(2));
    let run = holim(&["run", "--suite", "cobar", "--algebra", "z2", "--window", "x"]);
    assert_eq!(run.status.code(), Some(2));
}

#[test]
fn ext_example_on_upper_triangular() {
    let run = holim(&["run", "--suite", "ext-example", "--algebra", "upper-triangular", "--format", "kv"]);
    assert_eq!(run.status.code(), Some(0));
    let out = stdout(&run);
    for id in ["boundary", "cycles", "dimension", "nonzero-class"] {
        assert!(out.contains(&format!("check.ext-example.{id}.status=pass\n")), "{out}");
    }
}
