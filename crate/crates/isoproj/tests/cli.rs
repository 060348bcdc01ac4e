use isoproj::census::{parse, ExportFormat, Homogeneous};
use isoproj::cli::run;

fn call(args: &[&str]) -> (i32, String) {
    let mut argv = vec!["isoproj".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let mut out = Vec::new();
    let code = run(&argv, &mut out);
    (code, String::from_utf8(out).unwrap())
}

#[test]
fn space_e_ii() {
    let (code, out) = call(&["space", "--label", "E II"]);
    assert_eq!(code, 0);
    assert!(out.contains("N=2"));
    assert!(out.contains("(1 6)(3 5)"));
    assert!(out.contains("-h2+2h6"));
}

#[test]
fn space_json() {
    let (code, out) = call(&["space", "--label", "A III", "--p", "5", "--nu", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["N"], 4);
    assert_eq!(v["n"], 7);
    assert_eq!(v["admissible"].as_array().unwrap().len(), 6);
}

#[test]
fn space_bad_parameters() {
    assert_eq!(call(&["space", "--label", "E XI"]).0, 2);
    assert_eq!(call(&["space", "--label", "A III", "--p", "3", "--nu", "1"]).0, 2);
}

#[test]
fn fkm_verbs() {
    let (code, out) = call(&["fkm", "--m", "2", "--k", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("N=3"));
    let (code, out) = call(&["fkm", "--m", "3", "--k", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("(m1,m2)=(3,4)"));
    assert!(out.contains("N=2"));
    let (code, out) = call(&["fkm", "--m", "8", "--kplus", "2", "--kminus", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("N=1"));
    assert_eq!(call(&["fkm", "--m", "4", "--k", "3"]).0, 2);
    assert_eq!(call(&["fkm", "--m", "2", "--k", "2"]).0, 2);
}

#[test]
fn census_formats() {
    let (code, out) = call(&["census", "--n", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("all_homogeneous=true"));
    assert!(out.contains("homogeneous-only"));

    let (code, out) = call(&["census", "--n", "15", "--format", "json"]);
    assert_eq!(code, 0);
    let recs = parse(&out, ExportFormat::Json).unwrap();
    assert!(recs.iter().any(|r| r.source.starts_with("open-gap")));

    let (code, out) = call(&["census", "--n", "3", "--format", "csv"]);
    assert_eq!(code, 0);
    let recs = parse(&out, ExportFormat::Csv).unwrap();
    assert!(recs.iter().any(|r| r.homogeneous == Homogeneous::No));
    assert_eq!(call(&["census", "--n", "3", "--format", "xml"]).0, 2);
}

#[test]
fn census_output_is_stable() {
    let a = call(&["census", "--n", "35", "--format", "json"]);
    let b = call(&["census", "--n", "35", "--format", "json"]);
    assert_eq!(a, b);
}

#[test]
fn check_requires_tables_flag() {
    assert_eq!(call(&["check"]).0, 2);
}

#[test]
fn check_tables_small() {
    let (code, out) = call(&["check", "--tables", "--max-rank", "4", "--fkm-max-m", "6", "--fkm-max-dim", "6"]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn help_and_usage() {
    assert_eq!(call(&["--help"]).0, 0);
    assert_eq!(call(&[]).0, 2);
    assert_eq!(call(&["frobnicate"]).0, 2);
}
