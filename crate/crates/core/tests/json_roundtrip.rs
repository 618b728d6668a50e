use colorsuper::colored::{build_colored_explicit, derive_colored_from_envelope};
use colorsuper::json::{export_json, import_json, to_doc, to_json_string};
use colorsuper::Error;

fn temp(name: &str) -> std::path::PathBuf {
    std::env::temp_dir().join(format!("colorsuper-{}-{name}.json", std::process::id()))
}

#[test]
fn round_trip_half_through_a_file() {
    let a = build_colored_explicit(1, false).unwrap();
    let p = temp("half");
    export_json(&a, &p).unwrap();
    let b = import_json(&p).unwrap();
    std::fs::remove_file(&p).ok();
    assert_eq!(a, b);
}

#[test]
fn central_three_halves_keeps_coefficients_verbatim() {
    let a = derive_colored_from_envelope(3, true).unwrap();
    let p = temp("three-halves");
    export_json(&a, &p).unwrap();
    let b = import_json(&p).unwrap();
    std::fs::remove_file(&p).ok();
    assert_eq!(to_doc(&a), to_doc(&b));
    assert_eq!(to_json_string(&a), to_json_string(&b));
    let fractional = to_doc(&b).table.iter().flat_map(|e| e.value.clone()).filter(|t| !t.coeff.ends_with("/1")).count();
    assert!(fractional > 0);
}

#[test]
fn missing_file_is_an_io_error() {
    assert!(matches!(import_json(&temp("absent")), Err(Error::Io(_))));
}

#[test]
fn unknown_generator_is_located() {
    let s = r#"{"two_ell":1,"central":false,"basis":[{"id":"H","degree":"00"}],
        "table":[{"left":"H","right":"Z_9","value":[]}]}"#;
    match colorsuper::json::from_json_str(s) {
        Err(Error::Schema { location, .. }) => assert_eq!(location, "table[0].right"),
        other => panic!("{other:?}"),
    }
}
