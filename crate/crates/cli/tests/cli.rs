use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn catsimp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_catsimp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn check_category_prints_counts() {
    let o = catsimp(&["check", &data("linear3.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "category: objects: 3, morphisms: 6 (3 non-identity, 3 isomorphisms)\n"
    );
}

#[test]
fn check_accepts_every_valid_corpus_file() {
    let bad = ["bad_missing_composite.json", "bad_unit_action.json"];
    let dir: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "data"].iter().collect();
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        let name = path.file_name().unwrap().to_string_lossy().into_owned();
        let o = catsimp(&["check", path.to_str().unwrap()]);
        let expected = if bad.contains(&name.as_str()) { 1 } else { 0 };
        assert_eq!(o.status.code(), Some(expected), "{name}: {}", stderr(&o));
    }
}

#[test]
fn pi1_of_circle() {
    let o = catsimp(&["pi1", &data("s1.json"), "--base", "v"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("generators: 1, relators: 0, abelianization: Z\n"));
}

#[test]
fn pi1_of_torus_has_rank_two_both_orders() {
    for extra in [&[][..], &["--reversed"][..]] {
        let mut args = vec!["pi1", "--base", "0"];
        let file = data("torus7.json");
        args.push(&file);
        args.extend_from_slice(extra);
        let o = catsimp(&args);
        assert!(stdout(&o).contains("abelianization: Z^2\n"), "{}", stdout(&o));
    }
}

#[test]
fn pi1_unknown_base_is_a_domain_error() {
    let o = catsimp(&["pi1", &data("s1.json"), "--base", "w"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("error: "));
}

#[test]
fn classify_inner_horn_is_neither_with_witness() {
    let o = catsimp(&["classify", &data("horn21.json")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("verdict: neither"));
    assert!(out.contains("inner witness: Λ^2_1 with d0=12, d2=01"));
}

#[test]
fn nerve_of_z2_counts() {
    let o = catsimp(&["nerve", &data("z2.json")]);
    assert_eq!(stdout(&o), "nondegenerate: (1, 1, 1, 1)\ntotal: (1, 2, 4, 8)\n");
}

#[test]
fn svk_matches_direct_pi1() {
    let glued = catsimp(&["pi1", &data("figure_eight_disk.json"), "--base", "v"]);
    let span = catsimp(&["svk", &data("svk_figure_eight_disk.json")]);
    let ab = |o: &Output| {
        stdout(o)
            .lines()
            .next()
            .unwrap()
            .rsplit(": ")
            .next()
            .unwrap()
            .to_string()
    };
    assert_eq!(ab(&glued), "Z");
    assert_eq!(ab(&span), "Z");
}

#[test]
fn model_check_exit_codes() {
    let ok = catsimp(&["model-check", &data("model_trivial_arrow.json")]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(!stdout(&ok).contains("FAIL"));
    let bad = catsimp(&["model-check", &data("model_bad_arrow.json")]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("lifting: FAIL"));
}

#[test]
fn localize_walking_arrow_at_f() {
    let o = catsimp(&["localize", &data("walking_arrow.json"), "--weq", "f"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("morphisms: 4 (2 non-identity, 4 isomorphisms)"));
}

#[test]
fn localize_unknown_morphism_is_input_error() {
    let o = catsimp(&["localize", &data("walking_arrow.json"), "--weq", "nope"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn orbit_and_monoid_checks() {
    let o = catsimp(&["orbit", &data("swap_fix.json")]);
    assert_eq!(stdout(&o), "orbits: 2\n{1, 2}\n{3}\n");
    let o = catsimp(&["check-monoid", &data("max.json")]);
    assert!(stdout(&o).contains("group: no"));
    let o = catsimp(&["check-action", &data("bad_unit_action.json")]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn eckmann_hilton_small_scan() {
    let o = catsimp(&["eckmann-hilton", "--max-size", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("size 2: unital operations 4, interchange pairs 4"));
    let o = catsimp(&["eckmann-hilton", "--max-size", "5"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn parse_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let dir = dir.path();
    let broken = dir.join("broken.json");
    std::fs::write(&broken, "{ not json").unwrap();
    assert_eq!(catsimp(&["check", broken.to_str().unwrap()]).status.code(), Some(2));

    let unknown = dir.join("unknown.json");
    std::fs::write(&unknown, r#"{"objects":["A"],"morphisms":[],"colour":"red"}"#).unwrap();
    assert_eq!(catsimp(&["check", unknown.to_str().unwrap()]).status.code(), Some(2));

    let version = dir.join("version.json");
    std::fs::write(&version, r#"{"v":2,"objects":["A"],"morphisms":[]}"#).unwrap();
    let o = catsimp(&["check", version.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("version 2"));

    assert_eq!(catsimp(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(catsimp(&["pi1", &data("s1.json")]).status.code(), Some(2));
}

#[test]
fn emitted_json_reparses() {
    let dir = tempfile::tempdir().unwrap();
    let dir = dir.path();
    for (verb, file) in [("sd", "delta2.json"), ("ex", "s1.json")] {
        let o = catsimp(&[verb, &data(file)]);
        assert_eq!(o.status.code(), Some(0));
        let out = dir.join(format!("{verb}.json"));
        std::fs::write(&out, &o.stdout).unwrap();
        let again = catsimp(&["check", out.to_str().unwrap()]);
        assert_eq!(again.status.code(), Some(0), "{}", stderr(&again));
    }
    let o = catsimp(&["nerve", &data("walking_arrow.json"), "--json", "--max-dim", "2"]);
    let out = dir.join("nerve.json");
    std::fs::write(&out, &o.stdout).unwrap();
    let classify = catsimp(&["classify", out.to_str().unwrap()]);
    assert!(stdout(&classify).starts_with("verdict: quasi"));
}

#[test]
fn sd_of_delta2_counts() {
    let dir = tempfile::tempdir().unwrap();
    let dir = dir.path();
    let o = catsimp(&["sd", &data("delta2.json")]);
    let out = dir.join("sd.json");
    std::fs::write(&out, &o.stdout).unwrap();
    let check = catsimp(&["check", out.to_str().unwrap()]);
    assert!(stdout(&check).contains("nondegenerate: (7, 12, 6)"));
}

#[test]
fn ex_iter_writes_last_stage() {
    let dir = tempfile::tempdir().unwrap();
    let dir = dir.path();
    let out = dir.join("ex1.json");
    let o = catsimp(&["ex-iter", &data("s1.json"), "-k", "1", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 2);
    let check = catsimp(&["check", out.to_str().unwrap()]);
    assert_eq!(check.status.code(), Some(0));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let runs: Vec<Vec<&str>> = vec![
        vec!["limit", "PULLBACK"],
        vec!["colimit", "PUSHOUT"],
        vec!["pi1", "TORUS", "--base", "0"],
        vec!["horns", "HORN"],
        vec!["sd", "DELTA2"],
    ];
    for args in runs {
        let resolved: Vec<String> = args
            .iter()
            .map(|a| match *a {
                "PULLBACK" => data("pullback_diagram.json"),
                "PUSHOUT" => data("pushout_diagram.json"),
                "TORUS" => data("torus7.json"),
                "HORN" => data("horn21.json"),
                "DELTA2" => data("delta2.json"),
                other => other.to_string(),
            })
            .collect();
        let refs: Vec<&str> = resolved.iter().map(String::as_str).collect();
        let a = catsimp(&refs);
        let b = catsimp(&refs);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert!(!a.stdout.is_empty());
    }
}

#[test]
fn kan_extensions_and_ends() {
    let o = catsimp(&[
        "kan-left",
        &data("discrete_diagram.json"),
        &data("discrete_inclusion.json"),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("Lan(B): 3 elements"));
    let o = catsimp(&[
        "kan-right",
        &data("terminal_diagram.json"),
        &data("terminal_into_arrow.json"),
    ]);
    assert!(stdout(&o).contains("Ran(B): 1 elements"));
    let o = catsimp(&["end", &data("hom_arrow.json")]);
    assert!(stdout(&o).starts_with("end: 1 elements"));
    let o = catsimp(&["coend", &data("hom_arrow.json")]);
    assert!(stdout(&o).starts_with("coend: 2 elements"));
}
