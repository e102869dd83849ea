use std::process::{Command, Output};

fn balpha(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_balpha")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = balpha(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    balpha(args).status.code().expect("exit code")
}

fn csv_column(text: &str, column: usize) -> Vec<String> {
    text.lines().skip(1).map(|l| l.split(',').nth(column).unwrap().to_string()).collect()
}

fn json(args: &[&str]) -> serde_json::Value {
    serde_json::from_str(&stdout(args)).expect("valid JSON")
}

#[test]
fn spectrum_examples() {
    assert_eq!(stdout(&["spectrum", "-g", "K4", "-a", "0.3"]), "k,lambda\n1,2.5\n2,2.5\n3,2.5\n4,0.9\n");
    assert_eq!(csv_column(&stdout(&["spectrum", "-g", "K1,24", "-a", "0"]), 1)[0], "25");
    assert!(csv_column(&stdout(&["spectrum", "-g", "C6", "-a", "0.5"]), 1).iter().all(|v| v == "1"));
    let v = json(&["spectrum", "-g", "petersen", "-a", "1", "--format", "json"]);
    assert_eq!(v["schema"], 1);
    let s: Vec<f64> = v["spectrum"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
    assert_eq!(s.len(), 10);
    assert!((s[0] - 3.0).abs() < 1e-12 && (s[9] + 2.0).abs() < 1e-12);
}

#[test]
fn sources() {
    let dir = std::env::temp_dir().join(format!("balpha-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let edges = dir.join("p3.txt");
    std::fs::write(&edges, "3 2\n0 1\n1 2\n").unwrap();
    let g6 = dir.join("k3.g6");
    std::fs::write(&g6, "Bw\n").unwrap();
    let p3 = stdout(&["spectrum", "-g", edges.to_str().unwrap(), "-a", "0.2"]);
    assert_eq!(p3, stdout(&["spectrum", "-g", "P3", "-a", "0.2"]));
    let k3 = stdout(&["spectrum", "-g", g6.to_str().unwrap(), "-a", "1/3"]);
    assert_eq!(k3, stdout(&["spectrum", "-g", "Bw", "-a", "1/3"]));
    assert_eq!(k3, stdout(&["spectrum", "-g", "K3", "-a", "1/3"]));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn table_reproduction() {
    let out = stdout(&["sweep", "-g", "K1,24"]);
    assert!(out.starts_with("alpha,lambda1,yz_bound\n"));
    let reference = [
        (0.0, 25.0, 25.0),
        (0.1, 22.317, 22.317),
        (0.2, 19.658, 19.654),
        (0.3, 17.035, 16.997),
        (0.4, 14.469, 13.675),
        (0.6, 9.703, 1.978),
        (0.7, 7.718, 0.936),
        (0.8, 6.232, 0.250),
        (0.9, 5.334, 0.361),
        (1.0, 4.899, 1.92),
    ];
    let rows: Vec<Vec<f64>> = out.lines().skip(1).map(|l| l.split(',').map(|x| x.parse().unwrap()).collect()).collect();
    assert_eq!(rows.len(), reference.len());
    for (row, (a, l1, yz)) in rows.iter().zip(reference) {
        assert_eq!(row[0], a);
        assert!((row[1] - l1).abs() < 5e-3, "λ1 at {a}: {}", row[1]);
        assert!((row[2] - yz).abs() < 5e-3, "Y/Z at {a}: {}", row[2]);
    }

    let table = stdout(&["sweep", "-g", "K1,24", "--format", "table"]);
    assert!(table.contains("     0.7 |      7.718 |      0.936"), "{table}");
    assert!(table.contains("     0.8 |      6.232 |      0.250"), "{table}");
    assert!(table.contains("     0.9 |      5.334 |      0.361"), "{table}");
}

#[test]
fn sweep_grids() {
    let out = stdout(&["sweep", "-g", "C5", "--grid", "0.6,0.5,0.4"]);
    assert_eq!(csv_column(&out, 0), vec!["0.4", "0.5", "0.6"]);
    assert_eq!(csv_column(&out, 2)[1], "undefined");
    let out = stdout(&["sweep", "-g", "petersen", "--grid", "0:1/10:1"]);
    assert_eq!(out.lines().count(), 12);
    for line in out.lines().skip(1).filter(|l| !l.ends_with("undefined")) {
        let v: Vec<f64> = line.split(',').map(|x| x.parse().unwrap()).collect();
        assert!(v[1] >= v[2] - 1e-9, "{line}");
    }
    let v = json(&["sweep", "-g", "K1,24", "--grid", "0.5", "--format", "json"]);
    assert!(v["rows"][0]["yz_bound"].is_null());
}

#[test]
fn beta0_examples() {
    let grab = |g: &str| {
        stdout(&["beta0", "-g", g]).lines().find_map(|l| l.strip_prefix("beta0: ").map(str::to_string)).unwrap()
    };
    assert_eq!(grab("K4"), "0.8000000000");
    assert_eq!(grab("petersen"), "0.7142857143");
    assert_eq!(grab("K2,3"), "0.6666666667");
    let out = stdout(&["beta0", "-g", "K4"]);
    assert!(out.contains("regular_formula: 0.8000000000\n"));
    assert!(out.contains("indefinite: (0.8000000000, 1]\n"));
    assert!(stdout(&["beta0", "-g", "K2,3"]).contains("regular_formula: not regular\n"));
    let v = json(&["beta0", "-g", "C5", "--format", "json"]);
    assert_eq!(v["schema"], 1);
    assert!(v["beta0"].as_f64().unwrap() >= 2.0 / 3.0);
}

#[test]
fn bounds_examples() {
    let v = json(&["bounds", "-g", "K4", "-a", "0.9"]);
    assert_eq!(v["schema"], 1);
    let bounds = v["bounds"].as_array().unwrap();
    assert!(bounds.iter().all(|b| b["holds"] == true));
    let chromatic = bounds.iter().find(|b| b["name"] == "lambda_n_upper_chromatic").unwrap();
    assert!(chromatic["gap"].as_f64().unwrap() < 1e-9);
    let skipped = v["not_applicable"].as_array().unwrap();
    assert!(skipped.iter().any(|s| s["reason"] == "not bipartite"));

    let v = json(&["bounds", "-g", "C6", "-a", "2/3"]);
    assert_eq!(v["bipartite_equality"], "equal_alpha_two_thirds");

    let v = json(&["bounds", "-g", "petersen", "-a", "0.3"]);
    for b in v["bounds"].as_array().unwrap().iter().filter(|b| b["target"] == "lambda1") {
        assert!(b["holds"] == true && b["gap"].as_f64().unwrap() > 1e-6, "{b}");
    }
}

#[test]
fn detpoly_examples() {
    let out = stdout(&["detpoly", "-g", "P3", "-a", "2/3"]);
    assert!(out.contains("det_sachs: 0\n") && out.contains("det_linalg: 0\n"), "{out}");
    let out = stdout(&["detpoly", "-g", "K3", "-a", "1"]);
    assert!(out.contains("det_sachs: 2\n") && out.contains("harary: 2\n"), "{out}");
    for a in [0.1, 0.35, 0.9] {
        let v = json(&["detpoly", "-g", "K2", "-a", &a.to_string(), "--format", "json"]);
        let c: Vec<f64> = v["coefficients_sachs"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
        let expected = [1.0, -2.0 * (1.0 - a), (1.0 - a) * (1.0 - a) - (2.0 * a - 1.0) * (2.0 * a - 1.0)];
        for (x, y) in c.iter().zip(expected) {
            assert!((x - y).abs() < 1e-12, "α = {a}: {c:?}");
        }
    }
}

#[test]
fn verify_runs() {
    let out = stdout(&["verify"]);
    assert!(out.starts_with("verify: seed 42"));
    assert!(out.ends_with("failures=0\n"), "{out}");

    let out = stdout(&["verify", "--max-n", "0", "--random", "0"]);
    assert!(out.ends_with("total: checks=0 failures=0\n"), "{out}");

    let bad = balpha(&["verify", "--max-n", "4", "--random", "0", "--inject-fault"]);
    assert_eq!(bad.status.code(), Some(1));
    let text = String::from_utf8(bad.stdout).unwrap();
    assert!(text.contains("FAIL lambda1_bounds graph6="), "{text}");
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["spectrum", "-g", "not a graph", "-a", "0.3"]), 2);
    assert_eq!(code(&["spectrum", "-g", "C2", "-a", "0.3"]), 2);
    assert_eq!(code(&["spectrum", "-g", "K4"]), 2);
    assert_eq!(code(&["spectrum", "-g", "K4", "-a", "1.5"]), 3);
    assert_eq!(code(&["spectrum", "-g", "K4", "-a", "-0.1"]), 3);
    assert_eq!(code(&["spectrum", "-g", "K4", "-a", "x"]), 3);
    assert_eq!(code(&["sweep", "-g", "K4", "--grid", "0:0:1"]), 3);
    assert_eq!(code(&["beta0", "-g", "A_"]), 0);
    assert_eq!(code(&["beta0", "-g", "B?"]), 4);
    assert_eq!(code(&["bounds", "-g", "C17", "-a", "0.3"]), 5);
    assert_eq!(code(&["bounds", "-g", "C17", "-a", "0.3", "--chi", "3"]), 0);
    assert_eq!(code(&["detpoly", "-g", "C13", "-a", "0.3"]), 6);
    assert_eq!(code(&["detpoly", "-g", "K3", "-a", "0"]), 3);
    assert_eq!(code(&["--tol", "bogus=1", "spectrum", "-g", "K4", "-a", "0.3"]), 2);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["sweep", "-g", "petersen", "--grid", "0:0.05:1"][..],
        &["bounds", "-g", "T3,3,3", "-a", "0.7"],
        &["verify", "--max-n", "5", "--random", "20", "--seed", "9"],
    ] {
        assert_eq!(stdout(args), stdout(args));
    }
}
