//! Drives the `koszul` binary end to end.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn koszul_with_input(args: &[&str], input: Option<&str>, env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_koszul"));
    cmd.args(args)
        .env_remove("KOSZUL_THREADS")
        .stdin(if input.is_some() { Stdio::piped() } else { Stdio::null() })
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("spawn koszul");
    if let Some(text) = input {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    }
    let out = child.wait_with_output().unwrap();
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn koszul(args: &[&str]) -> Run {
    koszul_with_input(args, None, &[])
}

fn koszul_stdin(args: &[&str], input: &str) -> Run {
    koszul_with_input(args, Some(input), &[])
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let r = koszul(&all);
    let v: Value = serde_json::from_str(&r.stdout).unwrap_or_else(|e| panic!("{e}: {}{}", r.stdout, r.stderr));
    (r.code, v)
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(data(name)).unwrap()
}

#[test]
fn hilbert_series_golden() {
    let r = koszul(&["hilbert", &data("kosnotlg.ring")]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, golden("hilbert_kosnotlg.golden"));
    let r = koszul(&["hilbert", &data("lg_non_obstructed.ring")]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "(1+3z-3z^3)/(1-z)\n"));
}

#[test]
fn lg_search_finds_nothing_for_the_filtered_ring() {
    let r = koszul(&["lg-search", "--h", "1,2,-2,-2,2", "--max-extra-vars", "5"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("no quadratic monomial ideal found"));
    assert_eq!(r.stdout, golden("lg_search_kosnotlg.golden"));
    // Same h-polynomial read off the ring file.
    let (code, v) = json(&["lg-search", &data("kosnotlg.ring"), "--max-extra-vars", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["obstructed"], Value::Bool(true));
}

#[test]
fn lg_search_finds_one_ideal_in_five_six_and_seven_variables() {
    let (code, v) = json(&["lg-search", "--h", "1,3,0,-3", "--max-extra-vars", "4"]);
    assert_eq!(code, 0);
    let counts: Vec<(u64, usize)> = v["result"]["levels"]
        .as_array()
        .unwrap()
        .iter()
        .map(|l| (l["nvars"].as_u64().unwrap(), l["ideals"].as_array().unwrap().len()))
        .collect();
    assert_eq!(counts, vec![(3, 0), (4, 0), (5, 1), (6, 1), (7, 1)]);
    assert_eq!(v["obstructed"], Value::Bool(false));
}

#[test]
fn betti_over_r_shows_the_off_diagonal_entry() {
    let r = koszul(&["betti", "--module", "K", "--over", "R", &data("r161.ring")]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("first off-diagonal entry: beta_3,4 = 5"));
    let (_, v) = json(&["betti", "--module", "K", "--over", "R", "--deg", "8", &data("r161.ring")]);
    let entries = v["entries"].as_object().unwrap();
    assert_eq!(entries["3,4"], 5);
    for (k, _) in entries {
        let (i, j) = k.split_once(',').unwrap();
        let (i, j): (i64, i64) = (i.parse().unwrap(), j.parse().unwrap());
        if i <= 3 && (i, j) != (3, 4) {
            assert_eq!(i, j, "unexpected entry {k}");
        }
    }
    assert_eq!(v["first_off_diagonal"], serde_json::json!({"i": 3, "j": 4, "value": 5}));
}

#[test]
fn betti_over_s_matches_koszul_homology() {
    let (_, b) = json(&["betti", "--hom", "5", &data("kosnotlg.ring")]);
    let (_, h) = json(&["koszul-homology", "--hom", "5", &data("kosnotlg.ring")]);
    let mut from_homology = serde_json::Map::new();
    for slice in h["slices"].as_array().unwrap() {
        for (j, d) in slice["dims"].as_object().unwrap() {
            if d.as_u64().unwrap() > 0 {
                from_homology.insert(format!("{},{j}", slice["i"]), d.clone());
            }
        }
    }
    assert_eq!(b["entries"].as_object().unwrap(), &from_homology);
    assert_eq!(b["projective_dimension"], 4);
}

#[test]
fn filtration_verifies_and_a_corrupted_witness_fails() {
    let r = koszul(&["filtration-verify", &data("kosnotlg.ring")]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "filtration verified: 7 ideals, 6 witnesses\n"));
    let bad = golden("kosnotlg.ring").replace("witness cd: c + d -> ac", "witness cd: c + d -> acd");
    let r = koszul_stdin(&["filtration-verify", "-"], &bad);
    assert_eq!(r.code, 1);
    assert!(r.stdout.starts_with("filtration fails at cd"), "{}", r.stdout);
    let r = koszul(&["filtration-verify", &data("r161.ring")]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("no filtration block"));
}

#[test]
fn input_errors_exit_with_two_and_a_position() {
    let r = koszul(&["hilbert", &data("bad_inhomogeneous.ring")]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("bad_inhomogeneous.ring:3:3: generator \"a + b^2\" is not homogeneous"), "{}", r.stderr);
    let r = koszul_stdin(&["hilbert", "-"], "vars: a b\nideal: a^2; a*q\n");
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("-:2:15: unknown variable \"q\""), "{}", r.stderr);
    let r = koszul_stdin(&["hilbert", "-"], "vars: a b\nideal: a*b; a - b\n");
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("degree at most one"));
    let r = koszul_stdin(&["gb", "-"], "field: QQ\nvars: a b\nideal: (a + b\n");
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("-:3:"), "{}", r.stderr);
    let r = koszul(&["hilbert", &data("missing.ring")]);
    assert_eq!(r.code, 2);
    let r = koszul(&["rees-ci", &data("not_regular.ring")]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("not a regular sequence"));
}

#[test]
fn report_exit_codes_follow_the_verdict() {
    let r = koszul(&["koszul-report", &data("kosnotlg.ring")]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.ends_with("verdict: koszul (decided by filtration)\n"));
    let r = koszul(&["koszul-report", "--deg", "6", &data("r161.ring")]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("1/H(-z): negative coefficient at z^6"));
    assert!(r.stdout.contains("e'_3 = 0"));
    let r = koszul(&["koszul-report", &data("kosnotlg.ring"), "--no-filtration"]);
    assert_eq!(r.code, 3);
    let (code, v) = json(&["koszul-report", &data("xy.ring"), "--g-quadratic"]);
    assert_eq!(code, 0);
    assert_eq!(v["report"]["verdict"], "koszul");
    assert_eq!(v["report"]["decided_by"], "g_quadratic");
}

#[test]
fn output_is_deterministic_and_thread_independent() {
    let args = ["--json", "koszul-report", "--g-quadratic", "--random-changes", "4", "--lg-extra-vars", "3"];
    let mut a: Vec<&str> = args.to_vec();
    let file = data("lg_non_obstructed.ring");
    a.push(&file);
    let one = koszul_with_input(&a, None, &[("KOSZUL_THREADS", "1")]);
    let four = koszul_with_input(&a, None, &[("KOSZUL_THREADS", "4")]);
    let again = koszul(&a);
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(one.stdout, again.stdout);
    assert_eq!(one.code, again.code);
    let mut seeded = a.clone();
    seeded.extend(["--seed", "7", "--threads", "2"]);
    assert_eq!(koszul(&seeded).stdout, koszul(&seeded).stdout);
}

#[test]
fn json_has_a_schema_and_timings_only_on_request() {
    let (_, v) = json(&["hilbert", &data("kosnotlg.ring")]);
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(&keys[..4], &["schema", "command", "status", "exit_code"]);
    assert_eq!(v["schema"], 1);
    assert!(v.get("elapsed_ms").is_none());
    let (_, v) = json(&["--timings", "hilbert", &data("kosnotlg.ring")]);
    assert!(v["elapsed_ms"].is_number());
    let r = koszul(&["--timings", "hilbert", &data("kosnotlg.ring")]);
    assert!(r.stdout.lines().last().unwrap().starts_with("elapsed: "));
}

#[test]
fn strongly_koszul_exit_codes() {
    let r = koszul(&["strongly-koszul", &data("kosnotlg.ring")]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("(0) : b"));
    let r = koszul(&["strongly-koszul", &data("xy.ring")]);
    assert_eq!(r.code, 0);
    let r = koszul(&["strongly-koszul", &data("xy.ring"), "--basis", "x,x+y"]);
    assert_eq!(r.code, 1);
}

/// Emitted presentations are ring files: feed them back in.
#[test]
fn pinched_veronese_round_trips_through_the_ring_file() {
    let r = koszul(&["pinched", "--n", "3", "--d", "3", "--s", "2"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("# kernel minimal generators: 17 in degree 2\n"));
    let r2 = koszul_stdin(&["gb", "-"], &r.stdout);
    assert_eq!(r2.code, 0, "{}", r2.stderr);
    // Degree-j piece of PV(3,3,2): distinct products of j cubics supported
    // on at most two variables.
    let cubics: Vec<[u8; 3]> = (0..=3u8)
        .flat_map(|a| (0..=3 - a).map(move |b| [a, b, 3 - a - b]))
        .filter(|e| e.iter().filter(|&&x| x > 0).count() <= 2)
        .collect();
    let mut products = std::collections::BTreeSet::new();
    for p in &cubics {
        for q in &cubics {
            products.insert([p[0] + q[0], p[1] + q[1], p[2] + q[2]]);
        }
    }
    let expected = format!("hilbert function: 1, {}, {}", cubics.len(), products.len());
    let h = koszul_stdin(&["hilbert", "-", "--terms", "2"], &r.stdout);
    assert!(h.stdout.contains(&expected), "{}", h.stdout);
}

#[test]
fn pinched_veronese_four_five_two() {
    let r = koszul(&["pinched", "--n", "4", "--d", "5", "--s", "2"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("# kernel minimal generators: 168 in degree 2, 12 in degree 3\n"));
}

#[test]
fn veronese_of_four_variables_has_regularity_two() {
    let v = koszul(&["veronese", &data("poly4.ring"), "--degree", "2"]);
    assert_eq!(v.code, 0);
    let (_, b) = {
        let r = koszul_stdin(&["--json", "--hom", "7", "--deg", "20", "betti", "-"], &v.stdout);
        (r.code, serde_json::from_str::<Value>(&r.stdout).unwrap())
    };
    assert_eq!(b["regularity"], 2);
    assert_eq!(b["projective_dimension"], 6);
    assert_eq!(b["entries"]["1,2"], 20);
    let vars = v.stdout.lines().find(|l| l.starts_with("vars:")).unwrap();
    assert_eq!(vars.split_whitespace().count() - 1, 10);
}

#[test]
fn veronese_module_lists_relations() {
    let conic = "vars: x y z\nideal: x*z - y^2\n";
    let r = koszul_stdin(&["--json", "veronese", "-", "--degree", "2", "--module", "1", "--bound", "3"], conic);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["module"]["generators"].as_array().unwrap().len(), 3);
    assert!(!v["module"]["relations"].as_array().unwrap().is_empty());
}

#[test]
fn diagonal_and_rees_outputs() {
    let r = koszul(&["diagonal", &data("bigraded.ring"), "--c1", "1", "--c2", "1"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.ends_with("ideal: t2*t3 - t1*t4\n"));
    let rees = koszul(&["rees-ci", &data("squares.ring")]);
    assert_eq!(rees.code, 0);
    assert!(rees.stdout.contains("grading: 1 1 0 0; 0 0 1 1\n"));
    assert!(rees.stdout.ends_with("ideal: y^2*y1 - x^2*y2\n"));
    // The Rees ring is bigraded: take its (2,1) diagonal.
    let d = koszul_stdin(&["diagonal", "-", "--c1", "2", "--c2", "1"], &rees.stdout);
    assert_eq!(d.code, 0, "{}", d.stderr);
    let q = koszul_stdin(&["--json", "koszul-report", "-"], d.stdout.as_str());
    let v: Value = serde_json::from_str(&q.stdout).unwrap();
    assert_eq!(v["report"]["quadratic"]["value"]["quadratic"], true);
}

#[test]
fn ci_lift_is_lex_certified() {
    let r = koszul(&["ci-lift", &data("ci_quadrics.ring")]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("# lex initial ideal: (y1^2, y2^2, y3^2)\n"));
    assert!(r.stdout.contains("order: lex\n"));
    let (_, gb) = {
        let g = koszul_stdin(&["--json", "gb", "-"], &r.stdout);
        (g.code, serde_json::from_str::<Value>(&g.stdout).unwrap())
    };
    assert_eq!(gb["order"], "lex");
    let mut lead: Vec<&str> = gb["leading_monomials"].as_array().unwrap().iter().map(|m| m.as_str().unwrap()).collect();
    lead.sort_unstable();
    assert_eq!(lead, ["y1^2", "y2^2", "y3^2"]);
}

#[test]
fn cartwright_sturmfels_and_identities() {
    for (m, n) in [("2", "2"), ("2", "3"), ("3", "2")] {
        let r = koszul(&["cs-check", "--m", m, "--n", n, "--box", "2"]);
        assert_eq!(r.code, 0, "{m} {n}");
        assert!(r.stdout.lines().last().unwrap().ends_with("multidegrees agree"));
    }
    let r = koszul(&["cs-check", "--m", "2", "--n", "2"]);
    assert!(r.stdout.contains("a = (1,1): 3 3 3\n"));
    let r = koszul(&["identity-check", "--grid", "4,3,3"]);
    assert_eq!(r.code, 0);
    let r = koszul(&["identity-check", "--n", "2", "--b", "1,1"]);
    assert_eq!(r.stdout, "left: 3\nright: 3\nidentity holds\n");
    let r = koszul(&["identity-check", "--n", "3"]);
    assert_eq!(r.code, 2);
}

#[test]
fn gb_order_flag() {
    let (_, v) = json(&["gb", "--order", "lex", &data("kosnotlg.ring")]);
    assert_eq!(v["order"], "lex");
    let r = koszul(&["gb", "--order", "weird", &data("kosnotlg.ring")]);
    assert_eq!(r.code, 2);
}

#[test]
fn prime_fields_are_supported() {
    let text = golden("kosnotlg.ring").replace("field: QQ", "field: GF(32003)");
    let r = koszul_stdin(&["hilbert", "-"], &text);
    assert_eq!(r.stdout, golden("hilbert_kosnotlg.golden"));
    let r = koszul_stdin(&["filtration-verify", "-"], &text);
    assert_eq!(r.code, 0);
}
