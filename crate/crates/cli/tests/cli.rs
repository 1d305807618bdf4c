use std::process::{Command, Output};

use serde_json::Value;

fn so21(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_so21")).args(args).output().expect("binary runs")
}

fn records(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).expect("each line is JSON"))
        .collect()
}

fn num(v: &Value) -> f64 {
    v.as_f64().expect("numeric field")
}

#[test]
fn zonal_grid_has_seven_records() {
    let out = so21(&["zonal", "--sigma=-0.5+2i", "--alpha-grid=0:3:0.5"]);
    assert_eq!(out.status.code(), Some(0));
    let recs = records(&out);
    assert_eq!(recs.len(), 7);
    assert_eq!(num(&recs[0]["value_re"]), 1.0);
    assert_eq!(num(&recs[6]["inputs"]["alpha"]), 3.0);
    assert!(recs.iter().all(|r| r["status"] == "ok"));
}

#[test]
fn wigner_normalization() {
    let out = so21(&["wigner3", "--sigmas=-1.8,-1.8,-1.8", "--ms=0,0,0"]);
    assert_eq!(out.status.code(), Some(0));
    let r = &records(&out)[0];
    assert!((num(&r["value_re"]) - 1.0).abs() < 1e-8);
}

#[test]
fn methods_agree() {
    let a = records(&so21(&["wigner3", "--sigmas=-0.5+0.7i,-0.5-0.2i,-0.5+1.1i", "--ms=2,-1,-1"]));
    let b = records(&so21(&["wigner3", "--sigmas=-0.5+0.7i,-0.5-0.2i,-0.5+1.1i", "--ms=2,-1,-1", "--method=3h3"]));
    let d = (num(&a[0]["value_re"]) - num(&b[0]["value_re"])).hypot(num(&a[0]["value_im"]) - num(&b[0]["value_im"]));
    assert!(d < 1e-10);
}

#[test]
fn library_errors_exit_three() {
    let out = so21(&["wigner3", "--sigmas=0,0,0", "--ms=0,0,0"]);
    assert_eq!(out.status.code(), Some(3));
    let r = &records(&out)[0];
    assert_eq!(r["status"], "no_convergence");
    assert!(r["value_re"].is_null() && r["value_im"].is_null());

    let out = so21(&["phi-m", "--sigma=-3", "--m=1"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(records(&out)[0]["status"], "pole");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(so21(&["zonal", "--sigma=abc", "--alpha=1"]).status.code(), Some(2));
    assert_eq!(so21(&["zonal", "--sigma=1", "--alpha-grid=0:1:0"]).status.code(), Some(2));
    assert_eq!(so21(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(so21(&["verify", "--suite=bogus"]).status.code(), Some(2));
    assert_eq!(so21(&["induced-action", "--label=spin:1", "--p=2,1,0"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["assoc", "--sigma=-0.5+1.3i,-0.3", "--m=-2:2:1", "--alpha-grid=0:2:0.25"];
    let a = so21(&args);
    let b = so21(&args);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(records(&a).len(), 2 * 5 * 9);
}

#[test]
fn csv_columns() {
    let out = so21(&["phi-m", "--sigma=-0.5+1i", "--m=0,1", "--format=csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "sigma,m,value_re,value_im,err_estimate,terms_used,status,message");
    assert_eq!(lines.count(), 2);
}

#[test]
fn kinematics_commands() {
    let out = so21(&["orbit", "--p=2,1,0", "--p=1,0.6,0.8"]);
    let recs = records(&out);
    assert_eq!(recs[0]["class"], "massive_upper");
    assert_eq!(recs[1]["class"], "lightlike_upper");

    let out = so21(&["wigner-rotation", "--p=2,0,0", "--phi1=0.8"]);
    let r = &records(&out)[0];
    assert_eq!(r["kind"], "rotation");
    assert!((num(&r["value_re"]) - 0.8).abs() < 1e-14);

    let out = so21(&["induced-action", "--label=helicity:0.5", "--p=2,1,0"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(records(&out)[0]["status"], "label_orbit_mismatch");

    let out = so21(&["measure", "--class=massive", "--x-grid=0:1:0.5", "--y=0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(records(&out).len(), 3);
}

#[test]
fn verify_single_suite() {
    let out = so21(&["verify", "--suite=hygiene"]);
    assert_eq!(out.status.code(), Some(0));
    let r = &records(&out)[0];
    assert_eq!(r["inputs"]["criterion"], 13);
    assert!(String::from_utf8_lossy(&out.stderr).contains("[PASS]"));
}
