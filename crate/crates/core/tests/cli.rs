use std::process::{Command, Output};

fn mwrsk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mwrsk")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn mw_and_rsk_commands() {
    let o = mwrsk(&["mw", "[1,3]+[2,2]"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "m† = [2,3]+[2,2]\nΔ° = [1,1]\n");
    assert_eq!(stdout(&mwrsk(&["mw", "--involution", "[1,3]+[2,2]"])), "[3,3]+[2,2]+[2,2]+[1,1]\n");
    assert_eq!(stdout(&mwrsk(&["rsk", "[1,3]+[2,2]"])), "[2,3]; [1,2]\n");
    assert_eq!(stdout(&mwrsk(&["rsk", "--inverse", "[2,3]; [1,2]"])), "[2,2]+[1,3]\n");
    assert_eq!(stdout(&mwrsk(&["socle", "[1,2]", "[2,3]"])), "[2,2]+[1,3]\n");
}

#[test]
fn bad_input_exits_with_two() {
    let o = mwrsk(&["rsk", "[3,1]"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    assert_eq!(mwrsk(&["verify", "no-such-suite"]).status.code(), Some(2));
}

#[test]
fn verify_and_check() {
    let o = mwrsk(&["verify", "mw-involution", "--window", "1..3", "--max-segs", "3", "--json", "--jobs", "1"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["failures_total"], 0);
    assert_eq!(v["instances"], 84);
    let again = mwrsk(&["verify", "mw-involution", "--window", "1..3", "--max-segs", "3", "--json", "--jobs", "2"]);
    assert_eq!(o.stdout, again.stdout);
    let o = mwrsk(&["check", "thm-main-socle-chain", "[1,3]+[2,2]"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let o = mwrsk(&["verify", "mw-involution", "--window", "1..30", "--max-segs", "9"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn budget_cap_comes_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_mwrsk"))
        .args(["verify", "mw-involution", "--window", "1..3", "--max-segs", "3"])
        .env("MWRSK_ENUM_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("exceeds the cap 10"));
}

#[test]
fn words_and_ring_commands() {
    let t = "6:5,6;5:3,4;4:2,3,3;3:1,2,2;2:1,2;1:1";
    let o = mwrsk(&["flagged", t]);
    assert_eq!(stdout(&o), "flagged: true (key test true)\nenhanced flagged: true (key test true)\n");
    assert!(mwrsk(&["crsk", t]).status.success());
    assert!(mwrsk(&["keys", t]).status.success());
    let o = mwrsk(&["ring", "expand", "[2,3]+[1,2]"]);
    assert_eq!(stdout(&o), "z[2,3]*z[1,2] - z[2,2]*z[1,3]\n");
    let o = mwrsk(&["ring", "drs-check", "--a", "1,2", "--b", "2,3", "--grade", "1,2/2,3"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["unimodular"], true);
    let o = mwrsk(&["render", "[1,3]+[2,2]", "--format", "json"]);
    assert!(serde_json::from_slice::<serde_json::Value>(&o.stdout).is_ok());
    let o = mwrsk(&["interp", "[1,2]", "--dummies", "0"]);
    assert!(o.status.success(), "{}", stdout(&o));
}
