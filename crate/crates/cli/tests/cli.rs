use numsg::{build_semigroup, classify, InvariantReport};
use numsg_cli::{render_report, run, CliError, Format};

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("numsg").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn json_round_trip_is_byte_identical() {
    for gens in [&[4, 9, 11][..], &[2, 3], &[5, 11, 17, 18, 19], &[34, 51, 53, 70]] {
        let report = classify(&build_semigroup(gens).unwrap()).unwrap();
        let first = render_report(&report, Format::Json).unwrap();
        let parsed: InvariantReport = serde_json::from_slice(&first).unwrap();
        assert_eq!(parsed, report);
        assert_eq!(render_report(&parsed, Format::Json).unwrap(), first);
    }
}

#[test]
fn analyze_json_fields() {
    let (code, out, _) = invoke(&["analyze", "4,9,11"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["pf"], serde_json::json!([7, 14]));
    assert_eq!(v["reduced_type"], 1);
    assert_eq!(v["pseudo_symmetric"], true);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(
        keys,
        [
            "generators", "multiplicity", "edim", "genus", "frobenius", "conductor", "type",
            "reduced_type", "pf", "gorenstein", "minimal_multiplicity", "max_reduced_type",
            "min_reduced_type", "almost_gorenstein", "pseudo_symmetric", "far_flung_gorenstein",
            "cm_finite", "ref_finite", "mu_overring"
        ]
    );

    let (_, out, _) = invoke(&["analyze", "5", "11 17,18", "19"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["far_flung_gorenstein"], true);
    assert_eq!(v["reduced_type"], 3);
    assert_eq!(v["type"], 4);
    assert_eq!(v["max_reduced_type"], false);
}

#[test]
fn csv_single_row() {
    let (code, out, _) = invoke(&["analyze", "2,3", "--format", "csv"]);
    assert_eq!(code, 0);
    let mut reader = csv::Reader::from_reader(out.as_bytes());
    let headers = reader.headers().unwrap().clone();
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 1);
    let field = |name: &str| rows[0].get(headers.iter().position(|h| h == name).unwrap()).unwrap().to_string();
    assert_eq!(field("type"), "1");
    assert_eq!(field("gorenstein"), "true");
    assert_eq!(field("generators"), "2 3");
}

#[test]
fn text_is_a_labelled_table() {
    let (code, out, _) = invoke(&["analyze", "4,5,11", "--format", "text"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l.starts_with("reduced_type") && l.ends_with(" 2")));
    assert_eq!(out.lines().count(), 19);
}

#[test]
fn duplicates_are_ignored() {
    assert_eq!(invoke(&["analyze", "4,9,9,11,4"]).1, invoke(&["analyze", "11 9 4"]).1);
}

#[test]
fn exit_codes() {
    assert_eq!(invoke(&["analyze", "4,6"]).0, 1);
    assert_eq!(invoke(&["analyze", "4,x"]).0, 1);
    assert_eq!(invoke(&["analyze", "0,3"]).0, 1);
    assert_eq!(invoke(&["analyze"]).0, 1);
    assert_eq!(invoke(&["frobnicate"]).0, 1);
    assert_eq!(invoke(&["analyze", "3,4", "--format", "yaml"]).0, 1);
    assert_eq!(invoke(&["verify", "--suite", "nope", "--max-genus", "3"]).0, 1);
    assert_eq!(invoke(&["rohrbach", "11"]).0, 1);
    assert_eq!(invoke(&["enumerate", "--max-genus", "41"]).0, 1);
    assert_eq!(invoke(&["glue", "--h1", "4,9,11", "--h2", "5,6,7,9", "-x", "10", "-y", "9"]).0, 1);
    assert_eq!(invoke(&["--help"]).0, 0);
    assert_eq!(invoke(&["--version"]).0, 0);
    assert_eq!(invoke(&["verify", "--suite", "all", "--max-genus", "6"]).0, 0);

    let internal = CliError::Core(numsg::Error::InternalInconsistency("x".into()));
    assert_eq!(internal.exit_code(), 3);
    let mismatch = CliError::Core(numsg::Error::PredictionMismatch("x".into()));
    assert_eq!(mismatch.exit_code(), 3);
}

#[test]
fn glue_and_dual() {
    let (code, out, _) = invoke(&["glue", "--h1", "4,9,11", "--h2", "5,6,7,9", "-x", "10", "-y", "13"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["conductor"], 375);
    assert_eq!(v["pf"], serde_json::json!([252, 304, 322, 374]));

    let (_, out, _) = invoke(&["dual", "4,6,7,9"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["generators"], serde_json::json!([2, 3]));

    let (code, out, _) = invoke(&["dual", "3,4,5"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["generators"], serde_json::json!([1]));
}

#[test]
fn rohrbach_command() {
    let (code, out, _) = invoke(&["rohrbach", "5", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(out, "r,value,witness\n5,13,0 1 3 5 6\n");
}

#[test]
fn enumerate_filters_and_sampling() {
    let (code, out, _) = invoke(&["enumerate", "--max-genus", "12", "--filter", "cm-finite"]);
    assert_eq!(code, 0);
    let all: Vec<InvariantReport> = serde_json::from_str(&out).unwrap();
    assert!(all.iter().all(|r| r.cm_finite));
    let non_gorenstein: Vec<Vec<i64>> = all
        .iter()
        .filter(|r| !r.gorenstein)
        .map(|r| r.generators.clone())
        .collect();
    assert_eq!(non_gorenstein, vec![vec![3, 4, 5], vec![3, 5, 7]]);

    let (_, out, _) = invoke(&["enumerate", "--max-genus", "5", "--filter", "gorenstein,min-reduced-type"]);
    let gor: Vec<InvariantReport> = serde_json::from_str(&out).unwrap();
    assert!(gor.iter().all(|r| r.semigroup_type == 1));

    let args = ["enumerate", "--max-genus", "9", "--sample", "5", "--seed", "7"];
    let (_, a, _) = invoke(&args);
    let (_, b, _) = invoke(&args);
    assert_eq!(a, b);
    let sample: Vec<InvariantReport> = serde_json::from_str(&a).unwrap();
    assert_eq!(sample.len(), 5);
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("numsg-cli-test-{}.json", std::process::id()));
    let (code, out, _) = invoke(&["analyze", "3,5", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(written, invoke(&["analyze", "3,5"]).1);
}
