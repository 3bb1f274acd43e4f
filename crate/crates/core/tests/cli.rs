use std::path::Path;
use std::process::{Command, Output};

use casimir_lcp::ScenarioConfig;

fn lcp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lcp")).args(args).output().unwrap()
}

fn write_config(dir: &Path, name: &str, cfg: &ScenarioConfig) -> String {
    let p = dir.join(name);
    std::fs::write(&p, cfg.to_toml().unwrap()).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn fig3_curve_has_512_rows_and_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for (out, threads) in [(&a, "1"), (&b, "8")] {
        let o = lcp(&[
            "curve",
            "--preset",
            "fig3",
            "--out",
            out.to_str().unwrap(),
            "--threads",
            threads,
        ]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    }
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("z_m,u_cp_J,u_l_J,u_lcp_J,u_tot_J"));
    assert_eq!(lines.count(), 512);
}

#[test]
fn config_file_with_zero_power() {
    let dir = tempfile::tempdir().unwrap();
    let mut cfg = ScenarioConfig::preset("fig3").unwrap();
    cfg.laser.field = casimir_lcp::config::FieldBlock::Evanescent {
        c0: 4.51e-23,
        power: 0.0,
        z0: 430e-9,
        waist_x: None,
        waist_y: None,
        prism_index: None,
    };
    cfg.sweep.powers = vec![0.0];
    let path = write_config(dir.path(), "zero.toml", &cfg);
    let o = lcp(&["curve", &path]);
    assert!(o.status.success());
    let text = String::from_utf8(o.stdout).unwrap();
    for row in text.lines().skip(1) {
        let cols: Vec<f64> = row.split(',').map(|c| c.parse().unwrap()).collect();
        assert_eq!((cols[2], cols[3]), (0.0, 0.0));
    }
    let o = lcp(&["extrema", &path]);
    assert!(o.status.success());
    assert_eq!(String::from_utf8(o.stdout).unwrap(), "power_W,kind,z_m,value_J\n");
}

#[test]
fn additive_only_extrema_move_inward() {
    let dir = tempfile::tempdir().unwrap();
    let mut cfg = ScenarioConfig::preset("fig3").unwrap();
    cfg.sweep.powers = vec![10e-6, 39e-6, 100e-6, 400e-6];
    let path = write_config(dir.path(), "sweep.toml", &cfg);
    let o = lcp(&["extrema", &path, "--additive-only"]);
    assert!(o.status.success());
    let text = String::from_utf8(o.stdout).unwrap();
    let z: Vec<f64> = text
        .lines()
        .skip(1)
        .map(|r| {
            let c: Vec<&str> = r.split(',').collect();
            assert_eq!(c[1], "maximum");
            c[2].parse().unwrap()
        })
        .collect();
    assert_eq!(z.len(), 4);
    assert!(z.windows(2).all(|w| w[1] < w[0]));
}

#[test]
fn fig4_extrema_contain_minima() {
    let o = lcp(&["extrema", "--preset", "fig4"]);
    assert!(o.status.success());
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.lines().any(|l| l.contains(",minimum,")));
}

#[test]
fn check_passes_and_fails_on_corrupted_c3() {
    let o = lcp(&["check", "--preset", "fig3"]);
    assert!(o.status.success());
    let text = String::from_utf8(o.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 4);

    let dir = tempfile::tempdir().unwrap();
    let mut cfg = ScenarioConfig::preset("fig3").unwrap();
    cfg.potential.c3 = Some(2.0 * 4.794035e-49);
    let path = write_config(dir.path(), "bad.toml", &cfg);
    let o = lcp(&["check", &path]);
    assert!(!o.status.success());
    assert!(String::from_utf8(o.stdout).unwrap().contains("FAIL identity"));
}

#[test]
fn parse_errors_report_position() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("broken.toml");
    std::fs::write(&p, "[atom]\nomega10 = 2.37e15\ndipol = 2.53e-29\n").unwrap();
    let o = lcp(&["curve", p.to_str().unwrap()]);
    assert!(!o.status.success());
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn numeric_failures_name_operation_and_height() {
    let dir = tempfile::tempdir().unwrap();
    let mut cfg = ScenarioConfig::preset("fig2").unwrap();
    cfg.quadrature.max_subdivisions = 1;
    cfg.sweep.z_points = 16;
    let path = write_config(dir.path(), "tight.toml", &cfg);
    let o = lcp(&["curve", &path]);
    assert!(!o.status.success());
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("potential_curve failed at z ="), "{err}");
}

#[test]
fn mode_flag_and_missing_input() {
    let o = lcp(&["curve", "--preset", "fig3", "--mode", "full"]);
    assert!(o.status.success());
    let nr = lcp(&["curve", "--preset", "fig3"]);
    assert_ne!(o.stdout, nr.stdout);
    assert!(!lcp(&["curve"]).status.success());
}
