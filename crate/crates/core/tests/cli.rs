// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;
use std::process::{Command, Output};

use triomode::model::PhysicalParams;
use triomode::params_file;

struct Scratch(PathBuf);

impl Scratch {
    fn new(name: &str) -> Self {
        let dir = std::env::temp_dir().join(format!("triomode-cli-{name}-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        Scratch(dir)
    }

    fn config(&self, p: &PhysicalParams) -> PathBuf {
        let path = self.0.join("params.conf");
        std::fs::write(&path, params_file::render(p)).unwrap();
        path
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

fn triomode(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_triomode")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn point_reports_the_benchmark() {
    let s = Scratch::new("point");
    let cfg = s.config(&PhysicalParams::cooling_benchmark());
    let out = triomode(&["point", "--config", cfg.to_str().unwrap(), "--strict"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("stability = true"));
    let n: f64 = text.lines().find_map(|l| l.strip_prefix("n_final = ")).unwrap().parse().unwrap();
    assert!((n - 0.4473).abs() < 1e-4);
    assert_eq!(text.lines().filter(|l| l.starts_with("covariance[")).count(), 6);
}

#[test]
fn derive_prints_constants() {
    let s = Scratch::new("derive");
    let cfg = s.config(&PhysicalParams::cooling_benchmark());
    let text = stdout(&triomode(&["derive", "--config", cfg.to_str().unwrap()]));
    assert!(text.contains("g0 = 1.1467720373533434"));
    assert!(text.contains("q_bar_1 = 0\n"));
}

#[test]
fn strict_mode_exits_one_on_instability() {
    let s = Scratch::new("strict");
    let mut p = PhysicalParams::cooling_benchmark();
    p.mode_gap = -p.omega_m();
    let cfg = s.config(&p);
    let cfg = cfg.to_str().unwrap();

    let lax = triomode(&["point", "--config", cfg]);
    assert_eq!(lax.status.code(), Some(0));
    assert!(stdout(&lax).contains("stability = false"));
    assert!(!stdout(&lax).contains("covariance["));

    assert_eq!(triomode(&["point", "--config", cfg, "--strict"]).status.code(), Some(1));
}

#[test]
fn config_and_usage_errors_exit_two() {
    let s = Scratch::new("errors");
    let cfg = s.config(&PhysicalParams::cooling_benchmark());
    let cfg = cfg.to_str().unwrap();
    let bad = s.0.join("bad.conf");
    std::fs::write(&bad, "mass = 1e-7\nspin = 3\n").unwrap();

    let cases: Vec<Vec<&str>> = vec![
        vec!["point"],
        vec!["point", "--config", bad.to_str().unwrap()],
        vec!["point", "--config", "/nonexistent/params.conf"],
        vec!["sweep", "--config", cfg, "--sweep", "power_00=0:1:2", "--quantities", "en_0m,bogus"],
        vec!["sweep", "--config", cfg, "--sweep", "power_00=1:0:2"],
        vec!["sweep", "--config", cfg, "--sweep", "a=0:1:2"],
        vec![
            "sweep",
            "--config",
            cfg,
            "--sweep",
            "power_00=0:1:2",
            "--sweep",
            "power_01=0:1:2",
            "--sweep",
            "mass=1:2:2",
        ],
        vec!["recipe", "fig9"],
        vec!["point", "--config", cfg, "--d-mode", "classical"],
    ];
    for args in cases {
        let out = triomode(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }

    let out = triomode(&["point", "--config", bad.to_str().unwrap()]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn sweep_writes_csv_to_file() {
    let s = Scratch::new("sweep");
    let cfg = s.config(&PhysicalParams::cooling_benchmark());
    let csv = s.0.join("out.csv");
    let out = triomode(&[
        "sweep",
        "--config",
        cfg.to_str().unwrap(),
        "--sweep",
        "temperature=0.1:100:4:log",
        "--quantities",
        "n_acoustic,en_0m",
        "--d-mode",
        "zero-point",
        "--out",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "temperature,stability,n_acoustic,en_0m");
    assert_eq!(lines.len(), 5);
    assert!(lines[1].starts_with("0.1,true,"));
    assert!(lines[4].starts_with("100,true,"));
}

#[test]
fn unwritable_output_exits_two() {
    let out = triomode(&["recipe", "cooling-benchmark", "--out", "/nonexistent/dir/out.txt"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cooling_benchmark_recipe() {
    let out = triomode(&["recipe", "cooling-benchmark"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).lines().any(|l| l.starts_with("n_final = 0.447")));
}
