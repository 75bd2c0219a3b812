use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use rotsphere::config::{parse_config, ConfigError, GridSpec, Mode, RunConfig};
use rotsphere_core::{BoundaryKind, Varsigma};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rotsphere"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn config_round_trip() {
    let text = "mode=condensate bc=mit varsigma=-1 M=2 R=1.5 Omega=0.4 beta=0.5 mu=0.3 \
                jmax=11/2 imax=12 r-grid=0:1.5:7 theta-grid=pi/8,pi/2 format=json";
    let cfg = parse_config(text).unwrap();
    let again = parse_config(&cfg.to_config_string()).unwrap();
    assert_eq!(cfg, again);
    assert_eq!(cfg.boundary, BoundaryKind::Mit(Varsigma::Chiral));
}

#[test]
fn documented_examples() {
    let err = parse_config("mode=condensate bc=spectral M=1 R=1 Omega=1.2 beta=1").unwrap_err();
    assert!(matches!(err, ConfigError::FasterThanLight(_)));
    assert!(err.to_string().contains("faster-than-light"));

    let cfg = parse_config("mode=condensate bc=mit varsigma=-1 M=0 R=1 Omega=0.5 beta=1").unwrap();
    assert_eq!(cfg.boundary, BoundaryKind::Mit(Varsigma::Chiral));
    assert_eq!(cfg.mode, Mode::Condensate);

    let cfg = parse_config("mode=condensate r-grid=0:1:5").unwrap();
    assert_eq!(cfg.r_grid, GridSpec::Linspace { start: 0.0, end: 1.0, count: 5 });
}

#[test]
fn errors_name_the_key() {
    let cases = [
        ("beta=0", "beta"),
        ("M=-1", "M"),
        ("R=abc", "R"),
        ("jmax=7", "jmax"),
        ("imax=0", "imax"),
        ("varsigma=2", "varsigma"),
        ("bc=bag", "bc"),
        ("colour=red", "colour"),
        ("r-grid=0:2:5", "r-grid"),
    ];
    let mut seen = Vec::new();
    for (text, key) in cases {
        let msg = parse_config(text).unwrap_err().to_string();
        assert!(msg.contains(key), "`{text}` gave `{msg}`");
        assert!(!seen.contains(&msg), "duplicate message `{msg}`");
        seen.push(msg);
    }
}

#[test]
fn later_pairs_override_earlier_ones() {
    let cfg = RunConfig::from_pairs([("M", "1"), ("M", "3")]).unwrap();
    assert_eq!(cfg.params.mass, 3.0);
}

fn condensate_args<'a>(out: &'a str, extra: &[&'a str]) -> Vec<&'a str> {
    let mut v = vec![
        "condensate", "--bc", "mit", "--M", "1", "--Omega", "0.6", "--beta", "0.8",
        "--jmax", "9/2", "--imax", "8", "--r-grid", "0:1:11", "--theta-grid", "pi/8,pi/2",
        "--out", out,
    ];
    v.extend_from_slice(extra);
    v
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let p = |n: &str| dir.path().join(n).to_string_lossy().into_owned();
    let (a, b, c) = (p("a.csv"), p("b.csv"), p("c.csv"));
    for (out, extra) in [(&a, vec!["--serial"]), (&b, vec!["--serial"]), (&c, vec!["--threads", "4"])] {
        let o = bin(&condensate_args(out, &extra));
        assert!(o.status.success(), "{}", stderr(&o));
    }
    let read = |f: &str| fs::read(f).unwrap();
    assert_eq!(read(&a), read(&b));
    assert_eq!(read(&a), read(&c));
    let text = String::from_utf8(read(&a)).unwrap();
    assert!(text.lines().any(|l| l == "r,theta,value"));
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 1 + 22);
}

#[test]
fn json_output_parses() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("c.json");
    let o = bin(&condensate_args(out.to_str().unwrap(), &["--format", "json"]));
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_slice(&fs::read(&out).unwrap()).unwrap();
    assert!(v.is_object());
}

#[test]
fn preset_writes_one_file_per_curve() {
    let dir = tempfile::tempdir().unwrap();
    let o = bin(&[
        "condensate", "--preset", "fig1a", "--jmax", "7/2", "--imax", "6",
        "--r-grid", "0:1:6", "--out", dir.path().to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let expected = rotsphere::presets::curves("fig1a".parse().unwrap()).len();
    let files: Vec<_> = fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().path()).collect();
    assert_eq!(files.len(), expected);
    assert!(files.iter().all(|f| f.extension().and_then(|e| e.to_str()) == Some("csv")));
}

#[test]
fn verify_passes_near_light_cylinder() {
    for bc in [["--bc", "spectral", "--varsigma", "1"], ["--bc", "mit", "--varsigma", "-1"]] {
        let mut args = vec!["verify", "--Omega", "0.99", "--M", "1", "--jmax", "11/2", "--imax", "8"];
        args.extend_from_slice(&bc);
        let o = bin(&args);
        assert!(o.status.success(), "{}", stderr(&o));
    }
}

#[test]
fn rejects_superluminal_flags() {
    let o = bin(&["condensate", "--Omega", "1.2", "--out", "/dev/null"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("faster-than-light"));
}

#[test]
fn zeros_listing() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("z.csv");
    let o = bin(&["zeros", "--order", "1", "--count", "3", "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = fs::read_to_string(Path::new(&out)).unwrap();
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 3);
    assert!(rows[0].starts_with("1,1,4.4934"), "{}", rows[0]);
}
