#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

pub struct Golden {
    pub file: &'static str,
    pub args: &'static [&'static str],
}

pub const GOLDEN: &[Golden] = &[
    Golden { file: "rep_R_squares4_n3", args: &["rep", "--kind", "R", "--squares", "4", "--n", "3"] },
    Golden { file: "rep_r_squares3_n3", args: &["rep", "--kind", "r", "--squares", "3", "--n", "3"] },
    Golden { file: "rep_R_an2_n1", args: &["rep", "--kind", "R", "--form", "an:2", "--n", "1"] },
    Golden { file: "charge_alpha_zero", args: &["charge", "--k", "2", "--l", "0,0", "--alpha", "0,0", "--sigma", "5"] },
    Golden { file: "charge_half_half", args: &["charge", "--k", "0", "--l", "1,-1", "--alpha", "1/2,1/2", "--sigma", "4"] },
    Golden { file: "obstruct_rank1_sigma3", args: &["obstruct", "--rank", "1", "--sigma", "3", "--case", "diagonal"] },
    Golden { file: "obstruct_rank1_sigma4", args: &["obstruct", "--rank", "1", "--sigma", "4", "--case", "diagonal"] },
    Golden { file: "obstruct_rank2_sigma1", args: &["obstruct", "--rank", "2", "--sigma", "1", "--case", "general"] },
];

pub fn thetarep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_thetarep"))
        .args(args)
        .env_remove("THETAREP_CACHE")
        .output()
        .expect("binary runs")
}

pub fn normalize(stdout: &[u8]) -> String {
    let text = String::from_utf8(stdout.to_vec()).expect("utf-8 output");
    let key = "\"elapsed_ms\":";
    match text.find(key) {
        Some(at) => {
            let start = at + key.len();
            let end = start + text[start..].bytes().take_while(u8::is_ascii_digit).count();
            format!("{}0{}", &text[..start], &text[end..])
        }
        None => text,
    }
}

pub fn golden_path(file: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{file}.json"))
}

/// `Err` describes the first golden mismatch.
pub fn check_golden(g: &Golden) -> Result<(), String> {
    let out = thetarep(g.args);
    if out.status.code() != Some(0) {
        return Err(format!("{}: exit {:?}", g.file, out.status.code()));
    }
    let expected = std::fs::read_to_string(golden_path(g.file)).map_err(|e| format!("{}: {e}", g.file))?;
    let got = normalize(&out.stdout);
    if got != expected {
        return Err(format!("{}:\n  expected {expected}  got      {got}", g.file));
    }
    Ok(())
}
