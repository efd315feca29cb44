use std::process::{Command, Output};

fn cablecalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cablecalc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let o = cablecalc(args);
    assert!(
        o.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn kprime_record() {
    let v = json(&["classify", "T(2,3).cable(2,3)", "--format", "json"]);
    assert_eq!(v["status"], "ok");
    assert_eq!(v["tb_bar"], 6);
    assert_eq!(v["width"]["exact"], "6");
    assert_eq!(v["utp"], "no");
    assert_eq!(v["parity"], 1);
    let gens: Vec<(i64, i64)> = v["shape"]["branched"]["generators"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| (g["tb"].as_i64().unwrap(), g["r"].as_i64().unwrap()))
        .collect();
    assert_eq!(gens, [(6, 1), (6, -1), (5, 2), (5, -2)]);
    assert_eq!(
        v["shape"]["branched"]["identifications"]
            .as_array()
            .unwrap()
            .len(),
        3
    );
}

#[test]
fn nonthick_list() {
    let out = stdout(&cablecalc(&["nonthick", "--max-k", "3"]));
    let slopes: Vec<&str> = out
        .lines()
        .skip(1)
        .map(|l| l.split_whitespace().nth(1).unwrap())
        .collect();
    assert_eq!(slopes, ["-1/5", "-2/11", "-3/17", "-4/23"]);
    let v = json(&["nonthick", "--max-k", "1", "--format", "json"]);
    assert_eq!(v["tori"][1]["slope"], "-2/11");
    assert_eq!(v["tori"][1]["m1"], 3);
    assert_eq!(v["tori"][1]["m2"], 4);
}

#[test]
fn range_json_is_sorted_and_has_peaks() {
    let v = json(&["range", "T(-9,4)", "--tb-floor", "-40", "--format", "json"]);
    assert_eq!(v["tb_bar"], -36);
    assert_eq!(v["floor"], -40);
    let cells: Vec<(i64, i64, i64)> = v["cells"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| {
            (
                c["r"].as_i64().unwrap(),
                c["tb"].as_i64().unwrap(),
                c["mult"].as_i64().unwrap(),
            )
        })
        .collect();
    let top: Vec<i64> = cells.iter().filter(|c| c.1 == -36).map(|c| c.0).collect();
    assert_eq!(top, [-5, -3, 3, 5]);
    let mut sorted = cells.clone();
    sorted.sort_by_key(|&(r, tb, _)| (-tb, r));
    assert_eq!(cells, sorted);
    assert!(cells.iter().all(|c| c.2 == 1 && c.1 >= -40));
}

#[test]
fn transverse_table() {
    let v = json(&[
        "transverse",
        "T(2,3).cable(2,3)",
        "--floor",
        "-4",
        "--format",
        "json",
    ]);
    let classes = v["classes"].as_array().unwrap();
    assert_eq!(classes[0]["sl"], 7);
    let at3 = classes.iter().find(|c| c["sl"] == 3).unwrap();
    assert_eq!(at3["count"], 2);
}

#[test]
fn farey_command() {
    let v = json(&["farey", "-1/5", "-3/16", "--format", "json"]);
    assert_eq!(v["neighbors"], true);
    assert_eq!(v["det"], "-1");
    assert_eq!(v["length"], 1);
    let v = json(&["farey", "inf", "1/2", "--format", "json"]);
    assert_eq!(v["path"], serde_json::json!(["inf", "0/1", "1/2"]));
}

#[test]
fn output_is_deterministic() {
    let runs = [
        vec!["classify", "T(2,3).cable(2,3)", "--format", "json"],
        vec![
            "range",
            "T(2,3).cable(2,3)",
            "--tb-floor",
            "-3",
            "--format",
            "ascii",
        ],
        vec!["transverse", "(T(-5,2) # T(-3,2))", "--floor", "-12"],
    ];
    for args in runs {
        let a = cablecalc(&args);
        let b = cablecalc(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert!(a.status.success());
    }
}

#[test]
fn exit_codes_and_reasons() {
    let o = cablecalc(&["classify", "T(2,3).cable(1,2)", "--format", "json"]);
    assert_eq!(o.status.code(), Some(3));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "not_covered");
    assert_eq!(v["hypothesis"], "base_not_utp");

    let o = cablecalc(&["classify", "T(2,5).cable(1,2)", "--format", "json"]);
    assert_eq!(o.status.code(), Some(3));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["hypothesis"], "width_not_exact");

    let o = cablecalc(&["classify", "T(2,4)"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not coprime"));

    assert_eq!(cablecalc(&["frobnicate"]).status.code(), Some(2));
}
