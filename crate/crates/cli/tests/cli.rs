use assert_cmd::Command;
use serde_json::Value;

fn dinvkit() -> Command {
    Command::cargo_bin("dinvkit").expect("binary is built")
}

fn stdout_of(args: &[&str]) -> String {
    let out = dinvkit().args(args).assert().success().get_output().stdout.clone();
    String::from_utf8(out).expect("utf-8 output")
}

#[test]
fn counts_dyck_paths() {
    assert_eq!(stdout_of(&["enum", "--family", "d", "--n", "3", "--count"]), "5\n");
}

#[test]
fn empty_polyomino_word_is_the_ghost_letter() {
    let line = stdout_of(&["enum", "--family", "rp", "--m", "0", "--n", "0"]);
    let v: Value = serde_json::from_str(line.trim()).unwrap();
    assert_eq!(v["word"], "0");
    assert_eq!(v["dinv"], 0);
    assert_eq!(v["area"], 0);
}

#[test]
fn two_car_enumerator_as_csv() {
    let csv = stdout_of(&["enum", "--family", "pf2", "--m", "1", "--n", "1", "--qt"]);
    assert_eq!(csv, "q_exp,t_exp,coeff\n0,0,1\n0,1,1\n1,0,1\n");
}

#[test]
fn streamed_members_carry_their_statistics() {
    let out = stdout_of(&["enum", "--family", "catalan-pld", "--m", "1", "--n", "2"]);
    let lines: Vec<Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let count = stdout_of(&["enum", "--family", "catalan-pld", "--m", "1", "--n", "2", "--count"]);
    assert_eq!(lines.len().to_string(), count.trim());
    assert!(lines.iter().all(|v| v["family"] == "catalan-pld" && v["dinv"].is_u64() && v["area"].is_u64()));
}

#[test]
fn seedless_rejects_a_value() {
    dinvkit().args(["--seedless=x", "enum", "--family", "d", "--n", "1", "--count"]).assert().code(2);
    dinvkit().args(["--seedless", "enum", "--family", "d", "--n", "1", "--count"]).assert().success();
}

#[test]
fn invalid_family_spec_is_a_usage_error() {
    dinvkit().args(["enum", "--family", "pf2", "--content", "1,1"]).assert().code(2);
    dinvkit().args(["enum", "--family", "nope", "--n", "1"]).assert().code(2);
}

#[test]
fn eta_inverse_then_psi_transports_dinv_and_area() {
    let out = stdout_of(&["enum", "--family", "catalan-pld", "--m", "2", "--n", "2"]);
    for line in out.lines() {
        let member: Value = serde_json::from_str(line).unwrap();
        let mut input = member.clone();
        for key in ["family", "dinv", "area"] {
            input.as_object_mut().unwrap().remove(key);
        }
        let first: Value = serde_json::from_str(&stdout_of(&["biject", "eta-inv", &input.to_string()])).unwrap();
        assert!(first["contracts"].as_array().unwrap().iter().all(|c| c["holds"] == true));
        assert_eq!(first["after"]["area"], member["area"]);
        let word = first["image"]["word"].as_str().unwrap().to_string();
        let second: Value = serde_json::from_str(&stdout_of(&["biject", "psi", &format!("\"{word}\"")])).unwrap();
        assert!(second["contracts"].as_array().unwrap().iter().all(|c| c["holds"] == true));
        assert_eq!(second["after"]["area"], member["area"]);
        assert_eq!(second["after"]["dinv"], first["after"]["dinv"]);
    }
}

#[test]
fn map_outside_its_domain_exits_two() {
    let not_catalan = r#"{"area_word":[0,1,1],"labels":[0,1,2],"decorated_rises":[],"ghost_row":false}"#;
    dinvkit().args(["biject", "eta-inv", not_catalan]).assert().code(2);
    dinvkit().args(["biject", "eta-inv", "not json"]).assert().code(2);
}

#[test]
fn shuffle_maps_need_their_parameters() {
    let path = r#"{"area_word":[0],"labels":[1],"decorated_rises":[],"ghost_row":false}"#;
    dinvkit().args(["biject", "ehh", path]).assert().code(2);
}

#[test]
fn ndinv_suite_passes() {
    dinvkit().args(["verify", "ndinv", "--max", "5"]).assert().success();
}

#[test]
fn single_identity_passes() {
    let out = stdout_of(&["verify", "identities", "--name", "mac-hook", "--n", "4"]);
    assert!(out.starts_with("suite,check,instance,status,detail,witness\n"));
    assert!(out.lines().skip(1).all(|l| l.contains(",pass,")));
}

#[test]
fn recursion_reconcile_names_one_survivor() {
    let out = stdout_of(&["verify", "recursion-reconcile", "--max", "4"]);
    let survivor = out.lines().find(|l| l.contains("unique-survivor")).unwrap();
    assert!(survivor.contains(",pass,"));
    assert!(survivor.contains("offsets=(+1,+0,+0) r=GhostInclusive base=delta(m+1,r)"));
}

#[test]
fn sizes_over_the_cap_are_usage_errors() {
    dinvkit().args(["verify", "ndinv", "--max", "9"]).assert().code(2);
    dinvkit().args(["verify", "nope"]).assert().code(2);
}

#[test]
fn figures_report_the_printed_word_mismatch() {
    let out = dinvkit().args(["verify", "figures"]).assert().code(1).get_output().stdout.clone();
    let out = String::from_utf8(out).unwrap();
    assert!(out.lines().any(|l| l.contains(",fail,")));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let args = ["verify", "ehh", "--max", "4", "--format", "json"];
    assert_eq!(stdout_of(&args), stdout_of(&args));
}

#[test]
fn out_writes_to_a_file() {
    let dir = std::env::temp_dir().join(format!("dinvkit-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("count.txt");
    dinvkit().args(["enum", "--family", "d", "--n", "4", "--count", "--out", file.to_str().unwrap()]).assert().success();
    assert_eq!(std::fs::read_to_string(&file).unwrap(), "14\n");
    std::fs::remove_dir_all(&dir).unwrap();
}
