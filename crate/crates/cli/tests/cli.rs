use serde_json::Value;
use twobridge_cli::{run, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE};

fn ok(args: &[&str]) -> String {
    let (code, out) = run(args.iter().copied());
    assert_eq!(code, EXIT_OK, "{args:?}: {out}");
    out
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&ok(args)).expect("valid JSON")
}

#[test]
fn documented_examples() {
    assert_eq!(ok(&["cf", "5/17", "--positive"]), "[3,2,2]\n");
    assert_eq!(ok(&["cf", "10/33"]), "[4,-2,2,-4]\n");
    assert!(ok(&["epi", "1/9", "1/3"]).starts_with("YES (clause 1, witness length 2)"));
    assert!(ok(&["epi", "2/5", "1/3"]).starts_with("NO ("));

    let rep = json(&["classify", "2/5", "--json"]);
    assert_eq!(rep["verdict"], serde_json::json!(["upper", "lower"]));
    assert_eq!(rep["candidates"].as_array().unwrap().len(), 4);
}

#[test]
fn json_payloads() {
    let v = json(&["--json", "cf", "5/17", "--positive"]);
    assert_eq!(v["entries"], serde_json::json!([3, 2, 2]));

    let v = json(&["heckoid", "3/5", "5/2", "--json"]);
    assert_eq!(v["descriptor"]["family"], "M1");
    assert_eq!(v["descriptor"]["slope"], "4/5");
    assert_eq!(v["figure_type"], 3);

    let v = json(&["epi", "1/9", "1/3", "--json"]);
    assert_eq!(v["exists"], true);
    assert_eq!(v["satisfied_clause"], "C1_r");
    assert_eq!(v["witness"].as_array().unwrap().len(), 2);

    let v = json(&["symmetry", "5/12", "--json"]);
    assert_eq!(v["even"], "Palindromic");
    assert_eq!(v["positive"], "SymEvenMiddle");
    assert_eq!(v["isometry_group"], "Z2cubed");

    let v = json(&["orbit", "1/3", "--depth", "3", "--max-den", "100", "--json"]);
    let elems = v["elements"].as_array().unwrap();
    assert!(elems.contains(&Value::from("1/3")) && elems.contains(&Value::from("inf")));
}

#[test]
fn negative_slopes_parse() {
    let (code, out) = run(["cf", "-3/8", "--positive"]);
    assert_eq!(code, EXIT_DOMAIN);
    assert!(out.contains("OutOfRange"));
    let out = ok(&["orbit", "-1/3", "--depth", "1"]);
    assert!(out.lines().any(|l| l == "-1/3"));
}

#[test]
fn domain_errors() {
    for args in [
        vec!["classify", "1/3"],
        vec!["epi", "1/3", "1/4"],
        vec!["cf", "3/5"],
        vec!["heckoid", "1/3", "1"],
        vec!["cf", "0/0"],
    ] {
        let (code, out) = run(args.iter().copied());
        assert_eq!(code, EXIT_DOMAIN, "{args:?}");
        let v: Value = serde_json::from_str(&out).unwrap();
        assert!(v["error"]["code"].is_string(), "{out}");
    }
    let (_, out) = run(["epi", "1/3", "1/4"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["error"]["code"], "LinkSlope");
}

#[test]
fn usage_errors() {
    for args in [
        vec!["frobnicate"],
        vec!["cf"],
        vec!["cf", "1/x"],
        vec!["cf", "1/3", "--positive", "--even"],
        vec!["orbit", "1/3", "--depth", "deep"],
        vec![],
    ] {
        let (code, _) = run(args.iter().copied());
        assert_eq!(code, EXIT_USAGE, "{args:?}");
    }
    assert_eq!(run(["--help"]).0, EXIT_OK);
}

#[test]
fn deterministic_output() {
    for args in [
        vec!["classify", "10/33", "--json"],
        vec!["selfcheck", "30", "--seed", "9", "--json"],
        vec!["orbit", "2/5", "--json"],
    ] {
        assert_eq!(ok(&args), ok(&args));
    }
}
