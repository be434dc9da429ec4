#![allow(dead_code)]

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

pub fn fixture_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

pub fn fixture(name: &str) -> String {
    fixture_dir().join(name).display().to_string()
}

/// Every `*.txt` fixture, sorted by file name.
pub fn fixtures() -> Vec<PathBuf> {
    let mut all: Vec<PathBuf> = std::fs::read_dir(fixture_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "txt"))
        .collect();
    all.sort();
    all
}

pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn cli(args: &[&str]) -> Output {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("monospread").chain(args.iter().copied());
    let code = monospread_cli::run(argv, &mut out, &mut err);
    Output {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

/// Subcommands replayed on every fixture.
pub const COMMANDS: &[&[&str]] = &[
    &["check-smooth"],
    &["spread", "-t", "2"],
    &["spread", "-t", "8", "--padded"],
    &["polarize"],
    &["embed", "-t", "8"],
    &["lattice"],
    &["lattice", "--dot"],
    &["iso"],
    &["delta", "--pretty"],
    &["depth"],
    &["sdepth"],
    &["sdepth", "--ideal"],
];

/// Stdout and exit code of every command in [`COMMANDS`] on every fixture.
/// `iso` compares each fixture with itself.
pub fn transcript() -> String {
    let mut text = String::new();
    for path in fixtures() {
        let name = path.file_name().unwrap().to_string_lossy().into_owned();
        let p = path.display().to_string();
        for cmd in COMMANDS {
            let mut args: Vec<&str> = cmd.to_vec();
            args.push(&p);
            if cmd[0] == "iso" {
                args.push(&p);
            }
            let o = cli(&args);
            let _ = writeln!(text, "$ {} {name} -> {}", cmd.join(" "), o.code);
            text.push_str(&o.stdout);
        }
    }
    text
}
