use std::process::{Command, Output};

use superjacobi::arith::ring::int;
use superjacobi::characters::e_sch;
use superjacobi::cli::{PolyDoc, SchDoc, VerifyDoc};
use superjacobi::Partition;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superjacobi")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn sj_infinity_of_two_is_signed_euler_character() {
    let o = bin(&["compute-sj", "--n", "1", "--lambda", "2", "--t", "inf", "--format", "json"]);
    assert!(o.status.success());
    let doc: PolyDoc = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((doc.n, doc.lambda.clone(), doc.t.as_str()), (1, vec![2], "inf"));
    let lam = Partition::of(&[2]);
    let sign = if lam.s_stat().is_multiple_of(2) { int(1) } else { int(-1) };
    assert_eq!(doc.to_poly().unwrap(), e_sch(&lam, 1).unwrap().scale(&sign));
}

#[test]
fn empty_partition_gives_one() {
    let o = bin(&["compute-sj", "--n", "1", "--lambda", "-"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1\n");
    let o = bin(&["compute-sj", "--n", "2", "--lambda", "-", "--format", "json"]);
    let doc: PolyDoc = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc.terms.len(), 1);
    assert_eq!((doc.terms[0].exp.clone(), doc.terms[0].coeff.as_str()), (vec![0, 0, 0], "1/1"));
}

#[test]
fn json_round_trips_and_is_byte_stable() {
    let args = ["compute-si", "--n", "2", "--lambda", "3,1", "--format", "json"];
    let a = stdout(&bin(&args));
    let b = stdout(&bin(&args));
    assert_eq!(a, b);
    let doc: PolyDoc = serde_json::from_str(&a).unwrap();
    let again = PolyDoc::new(doc.n, &Partition::of(&doc.lambda), &doc.t, &doc.to_poly().unwrap());
    assert_eq!(serde_json::to_string_pretty(&again).unwrap() + "\n", a);
}

#[test]
fn routes_agree() {
    for (lam, t) in [("3,1", "1/2"), ("2,1", "7/3"), ("3", "5/3")] {
        let fam = bin(&["compute-sj", "--n", "2", "--lambda", lam, "--t", t]);
        let dir = bin(&["compute-sj", "--n", "2", "--lambda", lam, "--t", t, "--route", "direct"]);
        assert!(fam.status.success() && dir.status.success());
        assert_eq!(stdout(&fam), stdout(&dir), "λ={lam} t={t}");
    }
    let fam = bin(&["compute-si", "--n", "1", "--lambda", "3,1"]);
    let dir = bin(&["compute-si", "--n", "1", "--lambda", "3,1", "--route", "direct"]);
    assert_eq!(stdout(&fam), stdout(&dir));
}

#[test]
fn sch_lists_three_characters() {
    let o = bin(&["compute-sch", "--n", "1", "--lambda", "2", "--format", "json"]);
    let doc: SchDoc = serde_json::from_str(&stdout(&o)).unwrap();
    let names: Vec<_> = doc.characters.iter().map(|c| c.name.as_str()).collect();
    assert_eq!(names, ["E", "L", "K"]);
}

#[test]
fn verify_euler_passes() {
    let o = bin(&["verify", "euler", "--n", "1", "--max-size", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("PASS\n"));
    let o = bin(&["verify", "kac", "--n", "2", "--max-size", "5", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: VerifyDoc = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(doc.passed && doc.checked > 0);
}

#[test]
fn excluded_parameter_and_bad_input_fail() {
    let o = bin(&["compute-sj", "--n", "1", "--lambda", "2", "--t", "0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("excluded"));
    let o = bin(&["compute-sj", "--n", "1", "--lambda", "2,2"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn table_text_is_tab_separated() {
    let o = bin(&["table", "--n", "2", "--max-size", "4", "--t", "1/2"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let row = text.lines().find(|l| l.starts_with("3,1\t")).unwrap();
    assert_eq!(row, "3,1\tsingular\t2\t3,1 > 1,1\t-8\t4");
}
