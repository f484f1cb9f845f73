use std::process::{Command, Output};

fn framed(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_framed")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn verify_reed_muller_pair() {
    let o = framed(&["verify", "--c-code", "@rm2-4", "--d-code", "@rm1-4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("holomorphic, structure codes (C,D)"));
    assert!(out.contains("1024"));
}

#[test]
fn verify_from_catalog_pair_and_single_code() {
    for args in [
        vec!["verify", "--catalog", "rm4"],
        vec!["verify", "--d-code", "@rm1-4"],
        vec!["verify", "--c-code", "@rm2-4"],
        vec!["verify", "--catalog", "case2"],
        vec!["verify", "--catalog", "rep16"],
    ] {
        let o = framed(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn sectors_of_length_two_code() {
    let o = framed(&["sectors", "--c-code", "@toy2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let line = out.lines().find(|l| l.contains("sectors;")).unwrap();
    assert!(line.starts_with("4 sectors; weights "), "{line}");
    assert!(line.ends_with("; μ = 4"), "{line}");
    let weights = line.trim_start_matches("4 sectors; weights ").trim_end_matches("; μ = 4");
    let mut weights: Vec<&str> = weights.split(", ").collect();
    weights.sort();
    assert_eq!(weights, vec!["0", "1/2", "1/8", "1/8"]);
}

#[test]
fn non_triply_even_d_fails_with_stage() {
    let o = framed(&["verify", "--d-code", "@rm2-4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("failed at triply-even check"));
    assert!(stdout(&o).contains("failed at triply-even check"));
}

#[test]
fn json_output_round_trips_byte_for_byte() {
    let cases: Vec<Vec<&str>> = vec![
        vec!["verify", "--catalog", "rm4"],
        vec!["verify", "--d-code", "@rm2-4"],
        vec!["sectors", "--c-code", "@toy2"],
        vec!["beta", "--catalog", "rm4", "--beta", "1111111111111111"],
        vec!["chain", "--d-code", "@rm1-4", "--beta", "0000000011111111"],
        vec!["delta", "--catalog", "case2"],
        vec!["discriminate", "--spins", "0,2,8,2", "--groups", "4;2,2"],
        vec!["catalog"],
    ];
    for mut args in cases {
        args.extend(["--format", "json"]);
        let o = framed(&args);
        assert!(matches!(o.status.code(), Some(0) | Some(1)), "{args:?}");
        let text = stdout(&o);
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        let again = serde_json::to_string_pretty(&value).unwrap() + "\n";
        assert_eq!(again, text, "{args:?}");
        fn no_floats(v: &serde_json::Value) -> bool {
            match v {
                serde_json::Value::Number(n) => n.is_u64() || n.is_i64(),
                serde_json::Value::Array(a) => a.iter().all(no_floats),
                serde_json::Value::Object(m) => m.values().all(no_floats),
                _ => true,
            }
        }
        assert!(no_floats(&value), "{args:?}");
    }
}

#[test]
fn exit_status_does_not_depend_on_format() {
    for format in ["json", "markdown", "text"] {
        let o = framed(&["verify", "--d-code", "@rm2-4", "--format", format]);
        assert_eq!(o.status.code(), Some(1), "{format}");
        let o = framed(&["verify", "--catalog", "toy2", "--format", format]);
        assert_eq!(o.status.code(), Some(1), "{format}");
        assert!(stderr(&o).contains("failed at length check"));
    }
}

#[test]
fn thread_count_does_not_change_output() {
    let a = framed(&["verify", "--catalog", "rm4", "--format", "json", "--threads", "1"]);
    let b = framed(&["verify", "--catalog", "rm4", "--format", "json", "--threads", "4"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn code_files_are_read() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    std::fs::write(&path, r#"{"length": 2, "generators": ["11"]}"#).unwrap();
    let o = framed(&["sectors", "--c-code", path.to_str().unwrap(), "--format", "markdown"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.starts_with("# Sectors of the code net"));
    assert!(out.contains("| beta | wt |"));
}

#[test]
fn bad_input_exits_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"length": 3, "generators": ["11"]}"#).unwrap();
    let malformed = dir.path().join("malformed.json");
    std::fs::write(&malformed, "{length").unwrap();
    let missing = dir.path().join("missing.json");
    for args in [
        vec!["sectors", "--c-code", bad.to_str().unwrap()],
        vec!["sectors", "--c-code", malformed.to_str().unwrap()],
        vec!["sectors", "--c-code", missing.to_str().unwrap()],
        vec!["sectors", "--c-code", "@no-such-code"],
        vec!["beta", "--catalog", "rm4", "--beta", "0101"],
        vec!["beta", "--catalog", "rm4"],
        vec!["chain", "--catalog", "rm4", "--beta", "1111111111111111"],
        vec!["discriminate", "--spins", "0,x"],
        vec!["verify"],
    ] {
        let o = framed(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn discriminate_lists_all_groups_of_the_order() {
    let o = framed(&["discriminate", "--spins", "0,2,8,2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("Z4     yes"), "{out}");
    assert!(out.contains("Z2xZ2  no"), "{out}");
}

#[test]
fn chain_and_delta_tables() {
    let o = framed(&["chain", "--d-code", "@rm1-4", "--beta", "0000000011111111"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("5 codes; all checks pass"));
    let o = framed(&["delta", "--catalog", "rm4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("32 sectors; 0 differ"));
}

#[test]
fn catalog_lists_builtins() {
    let o = framed(&["catalog"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for name in ["toy2", "all-one-16", "rm1-4", "rm2-4", "case2-d", "rep8"] {
        assert!(out.contains(name), "{name}");
    }
}
