//! Command-line front end for `monospread`.
//!
//! [`run`] is the whole program: it parses arguments, dispatches to one
//! subcommand, writes the report to `out` and diagnostics to `err`, and
//! returns the process exit code.
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success, YES, ISO, all laws hold |
//! | 1 | a valid negative answer: NO, NONISO, a failed law or golden row |
//! | 2 | usage or parse error |
//! | 3 | a size cap was exceeded |
//! | 4 | internal invariant violated |

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use monospread::{
    build_delta, check_smooth_ideal, depth_quotient, embed_spread, hasse_dot, is_isomorphic,
    polarize_ideal, sdepth_ideal, sdepth_quotient, spread_ideal, spread_ideal_padded, verify_delta,
    verify_spreading_laws, LcmLattice, Monomial, MonomialIdeal, SmoothVerdict,
};

pub mod golden;
pub mod ideal_file;

use ideal_file::{parse_ideal, write_ideal, ParseError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_TOO_LARGE: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "monospread", version, about = "Spreading, smoothness and lcm-lattices of monomial ideals")]
struct Cli {
    /// Render monomials as x1^2*x2 in reports instead of exponent vectors
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the t-fold spread of the ideal
    Spread {
        #[arg(short)]
        t: usize,
        /// Use t*d variables instead of the exact n + t(d-1)
        #[arg(long)]
        padded: bool,
        file: PathBuf,
    },
    /// Print the polarization in n*d variables
    Polarize { file: PathBuf },
    /// Decide smooth spreadability: YES with a permutation or NO with a witness
    CheckSmooth { file: PathBuf },
    /// Print the variable map for t >= n and the image of the n-fold spread
    Embed {
        #[arg(short)]
        t: usize,
        file: PathBuf,
    },
    /// Print the lcm-lattice
    Lattice {
        /// Hasse diagram in DOT format
        #[arg(long)]
        dot: bool,
        file: PathBuf,
    },
    /// Compare two lcm-lattices
    Iso { first: PathBuf, second: PathBuf },
    /// Print the comparison map from the lattice of the n-fold spread
    Delta { file: PathBuf },
    /// Depth of T/I with its Betti table
    Depth { file: PathBuf },
    /// Stanley depth of T/I, or of I with --ideal
    Sdepth {
        #[arg(long)]
        ideal: bool,
        file: PathBuf,
    },
    /// Check depth and Stanley depth laws for spreads with t in T1..T2
    VerifyLaws {
        #[arg(short, value_parser = parse_range)]
        t: (usize, usize),
        file: PathBuf,
    },
    /// Replay the built-in table of worked examples
    VerifyPaper,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (a, b),
        None => (s, s),
    };
    let lo: usize = lo.trim().parse().map_err(|_| format!("bad range start {lo:?}"))?;
    let hi: usize = hi.trim().parse().map_err(|_| format!("bad range end {hi:?}"))?;
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok((lo, hi))
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error(transparent)]
    Lib(#[from] monospread::Error),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Parse { .. } => EXIT_USAGE,
            CliError::Lib(monospread::Error::TooLarge { .. }) => EXIT_TOO_LARGE,
            CliError::Lib(monospread::Error::Internal(_)) => EXIT_INTERNAL,
            CliError::Lib(_) => EXIT_USAGE,
        }
    }
}

/// A finished command: report text, warnings, exit code.
struct Outcome {
    report: String,
    warnings: Vec<String>,
    code: i32,
}

/// Monomial rendering for reports.
#[derive(Clone, Copy, Debug)]
pub struct Style {
    pub pretty: bool,
}

impl Style {
    pub fn mono(&self, u: &Monomial) -> String {
        if self.pretty {
            u.to_string()
        } else {
            format!("[{}]", u.exponent_string())
        }
    }

    pub fn ideal(&self, i: &MonomialIdeal) -> String {
        let gens: Vec<String> = i.generators().iter().map(|g| self.mono(g)).collect();
        format!("({}) in T_{}", gens.join(", "), i.ambient())
    }
}

/// Runs the program on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    let style = Style { pretty: cli.pretty };
    match dispatch(cli.command, style) {
        Ok(outcome) => {
            for w in &outcome.warnings {
                let _ = writeln!(err, "warning: {w}");
            }
            if out.write_all(outcome.report.as_bytes()).is_err() {
                return EXIT_INTERNAL;
            }
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.code()
        }
    }
}

fn load(path: &Path, warnings: &mut Vec<String>, style: Style) -> Result<MonomialIdeal, CliError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: shown.clone(),
        source,
    })?;
    let parsed = parse_ideal(&text).map_err(|source| CliError::Parse {
        path: shown.clone(),
        source,
    })?;
    for u in &parsed.dropped {
        warnings.push(format!("{shown}: dropped redundant generator {}", style.mono(u)));
    }
    Ok(parsed.ideal)
}

fn dispatch(command: Command, style: Style) -> Result<Outcome, CliError> {
    let mut warnings = Vec::new();
    let mut report = String::new();
    let mut code = EXIT_OK;
    match command {
        Command::Spread { t, padded, file } => {
            let i = load(&file, &mut warnings, style)?;
            let s = if padded {
                spread_ideal_padded(&i, t)?
            } else {
                spread_ideal(&i, t)?
            };
            report = write_ideal(&s);
        }
        Command::Polarize { file } => {
            let i = load(&file, &mut warnings, style)?;
            report = write_ideal(&polarize_ideal(&i)?);
        }
        Command::CheckSmooth { file } => {
            let i = load(&file, &mut warnings, style)?;
            match check_smooth_ideal(&i)? {
                SmoothVerdict::Smooth(cert) => {
                    let _ = writeln!(report, "YES");
                    let _ = writeln!(report, "tau {}", cert.cycle_notation());
                }
                SmoothVerdict::NotSmooth(w) => {
                    let _ = writeln!(report, "NO");
                    let _ = writeln!(report, "witness {w}");
                    code = EXIT_NEGATIVE;
                }
            }
        }
        Command::Embed { t, file } => {
            let i = load(&file, &mut warnings, style)?;
            let (image, emb) = embed_spread(&i, t)?;
            let _ = writeln!(report, "# phi: T_{} -> T_{}", emb.source_ambient(), emb.target_ambient());
            for (j, k) in emb.table() {
                let _ = writeln!(report, "# {j} -> {k}");
            }
            report.push_str(&write_ideal(&image));
        }
        Command::Lattice { dot, file } => {
            let i = load(&file, &mut warnings, style)?;
            let l = LcmLattice::build(&i)?;
            if dot {
                report = hasse_dot(&l);
            } else {
                lattice_report(&mut report, &l, style);
            }
        }
        Command::Iso { first, second } => {
            let a = LcmLattice::build(&load(&first, &mut warnings, style)?)?;
            let b = LcmLattice::build(&load(&second, &mut warnings, style)?)?;
            match is_isomorphic(&a, &b) {
                Some(f) => {
                    let _ = writeln!(report, "ISO");
                    for (x, &y) in f.iter().enumerate() {
                        let _ = writeln!(
                            report,
                            "{} -> {}",
                            style.mono(a.element(x)),
                            style.mono(b.element(y))
                        );
                    }
                }
                None => {
                    let _ = writeln!(report, "NONISO");
                    code = EXIT_NEGATIVE;
                }
            }
        }
        Command::Delta { file } => {
            let i = load(&file, &mut warnings, style)?;
            match build_delta(&i) {
                Ok(map) => {
                    for (x, &y) in map.values.iter().enumerate() {
                        let _ = writeln!(
                            report,
                            "{} -> {}",
                            style.mono(map.source.element(x)),
                            style.mono(map.target.element(y))
                        );
                    }
                    if verify_delta(&map) {
                        let _ = writeln!(report, "VERIFIED join-preserving, onto, bottom to bottom");
                    } else {
                        let _ = writeln!(report, "FAILED verification");
                        code = EXIT_NEGATIVE;
                    }
                }
                Err(monospread::Error::WellDefinednessViolation(why)) => {
                    let _ = writeln!(report, "NOT WELL-DEFINED {why}");
                    code = EXIT_NEGATIVE;
                }
                Err(e) => return Err(e.into()),
            }
        }
        Command::Depth { file } => {
            let i = load(&file, &mut warnings, style)?;
            let r = depth_quotient(&i)?;
            let _ = writeln!(report, "depth {}", r.value);
            let _ = writeln!(report, "projdim {}", r.projective_dimension);
            let _ = writeln!(report, "ambient {}", r.ambient);
            for e in &r.betti.entries {
                let _ = writeln!(report, "b {} {} {}", e.homological, style.mono(&e.multidegree), e.value);
            }
        }
        Command::Sdepth { ideal, file } => {
            let i = load(&file, &mut warnings, style)?;
            let r = if ideal {
                sdepth_ideal(&i)?
            } else {
                sdepth_quotient(&i)?
            };
            let what = if ideal { "I" } else { "T/I" };
            let _ = writeln!(report, "sdepth {what} {}", r.value);
            for (lo, hi) in &r.partition {
                let _ = writeln!(report, "interval {} {}", style.mono(lo), style.mono(hi));
            }
        }
        Command::VerifyLaws { t: (lo, hi), file } => {
            let i = load(&file, &mut warnings, style)?;
            let ts: Vec<usize> = (lo..=hi).collect();
            let r = verify_spreading_laws(&i, &ts)?;
            let _ = writeln!(report, "n {} d {}", r.n, r.degree);
            let _ = writeln!(report, "smooth {}", r.smooth);
            let _ = writeln!(report, "lattices isomorphic {}", r.lattices_isomorphic);
            let row = |report: &mut String, label: &str, v: &monospread::laws::Invariants| {
                let _ = writeln!(
                    report,
                    "{label} ambient {} depth {} sdepth T/I {} sdepth I {}",
                    v.ambient, v.depth, v.sdepth_quotient, v.sdepth_ideal
                );
            };
            row(&mut report, "base", &r.base);
            for (t, v) in &r.spreads {
                row(&mut report, &format!("t={t}"), v);
            }
            for c in &r.checks {
                let mark = if c.holds { "PASS" } else { "FAIL" };
                let _ = writeln!(report, "{mark} {}: {}", c.name, c.detail);
            }
            if !r.all_hold() {
                code = EXIT_NEGATIVE;
            }
        }
        Command::VerifyPaper => {
            let rows = golden::replay();
            let width = rows.iter().map(|r| r.label.len()).max().unwrap_or(0);
            for r in &rows {
                let mark = if r.pass { "PASS" } else { "FAIL" };
                let _ = writeln!(report, "{mark}  {:width$}  {}", r.label, r.detail);
            }
            let passed = rows.iter().filter(|r| r.pass).count();
            let _ = writeln!(report, "{passed}/{} rows passed", rows.len());
            if passed != rows.len() {
                code = EXIT_NEGATIVE;
            }
        }
    }
    Ok(Outcome {
        report,
        warnings,
        code,
    })
}

fn lattice_report(report: &mut String, l: &LcmLattice, style: Style) {
    let heights = l.heights();
    let _ = writeln!(report, "elements {}", l.len());
    for (k, u) in l.elements().iter().enumerate() {
        let _ = writeln!(report, "{k} rank {} {}", heights[k], style.mono(u));
    }
    let _ = writeln!(report, "covers {}", l.covers().len());
    for &(a, b) in l.covers() {
        let _ = writeln!(report, "{a} < {b}");
    }
}
