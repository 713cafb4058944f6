#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

pub fn sessions() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/sessions")
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub struct Run {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Runs the binary; a leading `@r1` argument is replaced by the session path.
pub fn semidual(args: &[&str]) -> Run {
    let args: Vec<String> = args
        .iter()
        .map(|a| match a.strip_prefix('@') {
            Some(name) => sessions()
                .join(format!("{name}.toml"))
                .display()
                .to_string(),
            None => a.to_string(),
        })
        .collect();
    let out = Command::new(env!("CARGO_BIN_EXE_semidual"))
        .args(&args)
        .output()
        .unwrap();
    Run {
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
        code: out.status.code().unwrap_or(-1),
    }
}

/// A JSON report with its timing zeroed.
pub fn normalized(json: &str) -> serde_json::Value {
    let mut v: serde_json::Value = serde_json::from_str(json).unwrap();
    v["millis"] = 0.into();
    v
}

/// The `verdict:` line of a text report.
pub fn text_verdict(text: &str) -> Option<&str> {
    text.lines().find_map(|l| l.strip_prefix("verdict: "))
}

pub struct GoldenCase {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub code: i32,
}

macro_rules! case {
    ($name:literal, $code:literal, [$($a:literal),*]) => {
        GoldenCase { name: $name, args: &[$($a),*], code: $code }
    };
}

pub const CASES: &[GoldenCase] = &[
    case!("r1_check_ring", 0, ["check-ring", "@r1"]),
    case!(
        "r1_sd_R",
        0,
        ["check-semidualizing", "@r1", "--module", "R"]
    ),
    case!(
        "r1_sd_D",
        0,
        [
            "check-semidualizing",
            "@r1",
            "--module",
            "D",
            "--bound",
            "5"
        ]
    ),
    case!(
        "r1_sd_k",
        1,
        ["check-semidualizing", "@r1", "--module", "k"]
    ),
    case!(
        "r1_sd_m",
        1,
        ["check-semidualizing", "@r1", "--module", "m"]
    ),
    case!(
        "r1_sd_DR",
        1,
        ["check-semidualizing", "@r1", "--module", "DR"]
    ),
    case!("r1_ext_k_k", 0, ["ext", "@r1", "--from", "k", "--to", "k"]),
    case!(
        "r1_ext_D_M",
        0,
        ["ext", "@r1", "--from", "D", "--to", "M", "--i", "2"]
    ),
    case!(
        "r1_tor_D_k",
        0,
        ["tor", "@r1", "--left", "D", "--right", "k"]
    ),
    case!(
        "r1_relext_D_k_k",
        0,
        ["relext", "@r1", "--c", "D", "--i", "2", "--from", "k", "--to", "k", "--via", "both"]
    ),
    case!(
        "r1_relext_proper",
        0,
        ["relext", "@r1", "--c", "D", "--i", "1", "--from", "M", "--to", "k", "--via", "proper"]
    ),
    case!(
        "r1_relext_refused",
        1,
        ["relext", "@r1", "--c", "k", "--i", "1", "--from", "k", "--to", "k"]
    ),
    case!(
        "r1_relext_ic_D_k_k",
        0,
        [
            "relext-ic",
            "@r1",
            "--c",
            "D",
            "--i",
            "1",
            "--from",
            "k",
            "--to",
            "k"
        ]
    ),
    case!("r1_pd_k", 0, ["pd", "@r1", "--module", "k"]),
    case!("r1_pd_R", 0, ["pd", "@r1", "--module", "R"]),
    case!("r1_id_D", 0, ["id", "@r1", "--module", "D"]),
    case!("r1_cpd_D_k", 0, ["cpd", "@r1", "--c", "D", "--module", "k"]),
    case!("r1_cpd_D_D", 0, ["cpd", "@r1", "--c", "D", "--module", "D"]),
    case!("r1_cid_D_D", 0, ["cid", "@r1", "--c", "D", "--module", "D"]),
    case!("r1_cid_D_R", 0, ["cid", "@r1", "--c", "D", "--module", "R"]),
    case!(
        "r1_classify_D_k",
        0,
        ["classify", "@r1", "--c", "D", "--module", "k"]
    ),
    case!(
        "r1_classify_D_D",
        0,
        ["classify", "@r1", "--c", "D", "--module", "D"]
    ),
    case!(
        "r1_foxby_tensor_R",
        0,
        [
            "foxby",
            "@r1",
            "--c",
            "D",
            "--module",
            "R",
            "--direction",
            "tensor"
        ]
    ),
    case!(
        "r1_foxby_hom_k",
        0,
        [
            "foxby",
            "@r1",
            "--c",
            "D",
            "--module",
            "k",
            "--direction",
            "hom"
        ]
    ),
    case!(
        "r1_resolve_free_k",
        0,
        ["resolve", "@r1", "--module", "k", "--bound", "3"]
    ),
    case!(
        "r1_resolve_injective_k",
        0,
        [
            "resolve",
            "@r1",
            "--module",
            "k",
            "--kind",
            "injective",
            "--bound",
            "3"
        ]
    ),
    case!(
        "r1_resolve_pp_k",
        0,
        [
            "resolve",
            "@r1",
            "--module",
            "k",
            "--kind",
            "proper-projective",
            "--c",
            "D",
            "--bound",
            "3"
        ]
    ),
    case!(
        "r1_resolve_pi_k",
        0,
        [
            "resolve",
            "@r1",
            "--module",
            "k",
            "--kind",
            "proper-injective",
            "--c",
            "D",
            "--bound",
            "3"
        ]
    ),
    case!(
        "r1_verify_all",
        0,
        ["verify-all", "@r1", "--samples", "4", "--bound", "3"]
    ),
    case!("r2_check_ring", 0, ["check-ring", "@r2"]),
    case!(
        "r2_sd_D",
        0,
        ["check-semidualizing", "@r2", "--module", "D"]
    ),
    case!(
        "r2_sd_m",
        1,
        ["check-semidualizing", "@r2", "--module", "m"]
    ),
    case!("r2_ext_M_M", 0, ["ext", "@r2", "--from", "M", "--to", "M"]),
    case!(
        "r2_tor_M_k",
        0,
        ["tor", "@r2", "--left", "M", "--right", "k", "--i", "3"]
    ),
    case!(
        "r2_relext_D_M_k",
        0,
        ["relext", "@r2", "--c", "D", "--i", "1", "--from", "M", "--to", "k"]
    ),
    case!(
        "r2_relext_ic_D_M_k",
        0,
        [
            "relext-ic",
            "@r2",
            "--c",
            "D",
            "--i",
            "2",
            "--from",
            "M",
            "--to",
            "k",
            "--via",
            "formula"
        ]
    ),
    case!("r2_pd_M", 0, ["pd", "@r2", "--module", "M"]),
    case!("r2_id_R", 0, ["id", "@r2", "--module", "R"]),
    case!("r2_cpd_D_D", 0, ["cpd", "@r2", "--c", "D", "--module", "D"]),
    case!("r2_cid_R_M", 0, ["cid", "@r2", "--c", "R", "--module", "M"]),
    case!(
        "r2_classify_D_M",
        0,
        ["classify", "@r2", "--c", "D", "--module", "M"]
    ),
    case!(
        "r2_foxby_tensor_M",
        0,
        [
            "foxby",
            "@r2",
            "--c",
            "D",
            "--module",
            "M",
            "--direction",
            "tensor"
        ]
    ),
    case!(
        "r2_resolve_free_M",
        0,
        ["resolve", "@r2", "--module", "M", "--bound", "3"]
    ),
    case!(
        "r2_resolve_pi_M",
        0,
        [
            "resolve",
            "@r2",
            "--module",
            "M",
            "--kind",
            "proper-injective",
            "--c",
            "D",
            "--bound",
            "3"
        ]
    ),
    case!(
        "r2_verify_all",
        0,
        ["verify-all", "@r2", "--samples", "4", "--bound", "3"]
    ),
];

/// Compares every case against its stored JSON report (or rewrites the
/// stores when `UPDATE_GOLDEN` is set). Returns the mismatches.
pub fn check_goldens() -> Vec<String> {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut bad = Vec::new();
    for case in CASES {
        let mut args = vec!["--json"];
        args.extend_from_slice(case.args);
        let json = semidual(&args);
        let text = semidual(case.args);
        if json.code != case.code || text.code != case.code {
            bad.push(format!(
                "{}: exit {} / {} (want {})",
                case.name, json.code, text.code, case.code
            ));
            continue;
        }
        let got = normalized(&json.stdout);
        if text_verdict(&text.stdout) != got["verdict"].as_str() {
            bad.push(format!("{}: text and JSON verdicts differ", case.name));
        }
        let path = golden_dir().join(format!("{}.json", case.name));
        if update {
            std::fs::write(&path, serde_json::to_string_pretty(&got).unwrap() + "\n").unwrap();
            continue;
        }
        match std::fs::read_to_string(&path) {
            Ok(want) if serde_json::from_str::<serde_json::Value>(&want).unwrap() == got => {}
            Ok(_) => bad.push(format!(
                "{}: report differs from {}",
                case.name,
                path.display()
            )),
            Err(e) => bad.push(format!("{}: {e}", case.name)),
        }
    }
    bad
}
