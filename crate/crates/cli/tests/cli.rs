use std::process::{Command, Output};

fn colorsuper(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_colorsuper")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn jacobi_summary_line() {
    let o = colorsuper(&["verify", "jacobi", "--two-ell", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("triples checked: 455, violations: 0"), "{}", stdout(&o));
}

#[test]
fn central_extension_needs_half_integer_ell() {
    let o = colorsuper(&["algebra", "build", "--two-ell", "2", "--central"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("central extension requires half-integer ℓ"), "{}", stderr(&o));
    assert!(stdout(&o).is_empty());
}

#[test]
fn superadjoint_needs_half_integer_ell() {
    let o = colorsuper(&["involution", "check", "--two-ell", "2", "--kind", "superadjoint"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn small_cutoff_is_rejected() {
    let o = colorsuper(&["fock", "build", "--two-ell", "1", "--cutoff", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(colorsuper(&["verify", "jacobi"]).status.code(), Some(2));
    assert_eq!(colorsuper(&["involution", "check", "--two-ell", "1", "--kind", "nope"]).status.code(), Some(2));
    assert_eq!(colorsuper(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn superadjoint_on_mass_extension_fails_with_listing() {
    let o = colorsuper(&["involution", "check", "--two-ell", "1", "--central", "--kind", "superadjoint", "--sign", "plus"]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert!(err.contains("(P_0, P_1)") && err.contains("(X_0, X_0)"), "{err}");
}

#[test]
fn exported_table_round_trips_through_verify() {
    let dir = std::env::temp_dir().join(format!("colorsuper-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g3.json");
    let p = path.to_str().unwrap();
    let o = colorsuper(&["algebra", "build", "--two-ell", "3", "--central", "--output", p]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = colorsuper(&["verify", "jacobi", "--input", p]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("violations: 0"));

    std::fs::write(&path, r#"{"two_ell":1,"central":false,"basis":[{"id":"Qbar","degree":"10"}],"table":[]}"#).unwrap();
    let o = colorsuper(&["verify", "jacobi", "--input", p]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn broken_table_exits_one() {
    let dir = std::env::temp_dir().join(format!("colorsuper-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    // [D, K] = +K breaks the sl(2) relations.
    let doc = r#"{"two_ell":1,"central":false,
      "basis":[{"id":"H","degree":"00"},{"id":"D","degree":"00"},{"id":"K","degree":"00"}],
      "table":[{"left":"D","right":"H","value":[{"id":"H","coeff":"1/1"}]},
               {"left":"D","right":"K","value":[{"id":"K","coeff":"1/1"}]},
               {"left":"H","right":"K","value":[{"id":"D","coeff":"1/1"}]}]}"#;
    std::fs::write(&path, doc).unwrap();
    let o = colorsuper(&["verify", "jacobi", "--input", path.to_str().unwrap()]);
    std::fs::remove_dir_all(&dir).unwrap();
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    assert!(stderr(&o).contains("violation"));
}
