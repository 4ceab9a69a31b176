//! Command-line front end. Exit codes: 0 success, 1 failed verification or
//! non-isomorphic inputs, 2 bad input.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::analysis::{classify_case, hyperplane_distribution, nu_kind, section_2d, special_facets};
use crate::canonical::{is_isomorphic, normal_form};
use crate::constructions::{construct, with_hexagons, NamedPolytope};
use crate::enumeration::enumerate_reflexive_polygons;
use crate::error::Error;
use crate::io::{parse_polytope, write_polytope};
use crate::polytope::LatticePolytope;
use crate::verifier::{verify_casagrande, verify_polygon_landscape, verify_theorem};

#[derive(Debug, Parser)]
#[command(name = "reflexive", version, about = "Exact tools for simplicial reflexive polytopes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print predicates, vertex sum, special facets and case labels.
    Analyze { path: PathBuf },
    /// Print a named polytope, optionally summed with hexagons up to --dim.
    Construct {
        name: String,
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Write one file per reflexive polygon class into a directory.
    EnumeratePolygons { outdir: PathBuf },
    /// Run a verification report.
    Verify(VerifyArgs),
    /// Print the normal form matrix.
    NormalForm { path: PathBuf },
    /// Print the dual polytope.
    Dual { path: PathBuf },
    /// Decide unimodular equivalence; prints YES or NO.
    Iso { a: PathBuf, b: PathBuf },
    /// Print the section by the plane through three vertices (0-based).
    Section { path: PathBuf, i: usize, j: usize, k: usize },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct VerifyArgs {
    /// Check the classification list in this dimension (3 to 7).
    #[arg(long)]
    dim: Option<usize>,
    /// Check the hexagon sum in this even dimension (2 to 8).
    #[arg(long)]
    casagrande: Option<usize>,
    /// Check the reflexive polygon counts.
    #[arg(long)]
    polygons: bool,
}

/// Outcome of a command: exit code plus stdout text.
struct Outcome {
    code: i32,
    stdout: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::Dimension(_) | Error::Degenerate(_) | Error::Domain(_) | Error::Singular => 2,
        _ => 1,
    }
}

fn read(path: &Path) -> Result<LatticePolytope, (i32, String)> {
    let text = fs::read_to_string(path).map_err(|e| (2, format!("{}: {e}", path.display())))?;
    parse_polytope(&text).map_err(|e| (exit_code(&e), format!("{}: {e}", path.display())))
}

fn lift(e: Error) -> (i32, String) {
    (exit_code(&e), e.to_string())
}

fn summary_line(p: &LatticePolytope) -> String {
    let reflexive = p.is_reflexive();
    let simplicial = p.is_simplicial();
    let mut flags = vec![if reflexive { "reflexive" } else { "not reflexive" }];
    let mut parts = Vec::new();
    if simplicial {
        flags.push("simplicial");
        if p.is_smooth_fano() {
            flags.push("smooth");
        }
    }
    parts.push(flags.join(" "));
    if !simplicial {
        parts.push("not simplicial".to_string());
    }
    let nu = p.vertex_sum();
    parts.push(if nu.is_zero() { "nu=0".to_string() } else { format!("nu={nu}") });
    if let Ok(r) = p.picard_number() {
        parts.push(format!("picard={r}"));
    }
    parts.join("; ")
}

fn analyze(p: &LatticePolytope) -> Result<String, (i32, String)> {
    let mut out = summary_line(p) + "\n";
    let d = p.dim();
    out += &format!("dim {d}\nvertices {}\nfacets {}\n", p.num_vertices(), p.facets().len());
    out += &format!("nu {} {}\n", p.vertex_sum(), nu_kind(p));
    if !(p.is_reflexive() && p.is_simplicial()) {
        return Ok(out);
    }
    let special = special_facets(p).map_err(lift)?;
    out += &format!("special-facets {}\n", special.len());
    for k in special {
        let dist = hyperplane_distribution(p, k).map_err(lift)?;
        out += &format!("special {k} normal {} levels {}", p.facets()[k].normal(), dist.to_text());
        if d >= 2 && p.num_vertices() == 3 * d - 1 {
            match classify_case(p, k) {
                Ok(label) => out += &format!(" case {label}"),
                Err(e) => out += &format!(" case ? ({e})"),
            }
        }
        out += "\n";
    }
    Ok(out)
}

fn construct_cmd(name: &str, dim: Option<usize>) -> Result<String, (i32, String)> {
    let name: NamedPolytope = name.parse().map_err(lift)?;
    let base = construct(name).map_err(lift)?;
    let p = match dim {
        None => base,
        Some(d) if d >= name.dim() && (d - name.dim()) % 2 == 0 => {
            with_hexagons(&base, (d - name.dim()) / 2).map_err(lift)?
        }
        Some(d) => {
            return Err((
                2,
                format!("{name} has dimension {}; --dim must exceed it by an even amount, got {d}", name.dim()),
            ))
        }
    };
    Ok(write_polytope(&p))
}

fn enumerate_cmd(outdir: &Path) -> Result<String, (i32, String)> {
    let classes = enumerate_reflexive_polygons().map_err(lift)?;
    fs::create_dir_all(outdir).map_err(|e| (2, format!("{}: {e}", outdir.display())))?;
    let mut out = String::new();
    for (k, c) in classes.iter().enumerate() {
        let file = format!("polygon-{}.poly", k + 1);
        fs::write(outdir.join(&file), write_polytope(&c.representative))
            .map_err(|e| (2, format!("{file}: {e}")))?;
        out += &format!(
            "{file} vertices={} smooth={} nu={}\n",
            c.vertex_count,
            if c.smooth { "yes" } else { "no" },
            c.nu_kind
        );
    }
    Ok(out)
}

fn verify_cmd(args: &VerifyArgs) -> Result<Outcome, (i32, String)> {
    let report = if let Some(d) = args.dim {
        verify_theorem(d)
    } else if let Some(d) = args.casagrande {
        verify_casagrande(d)
    } else {
        verify_polygon_landscape()
    }
    .map_err(lift)?;
    Ok(Outcome {
        code: if report.passed() { 0 } else { 1 },
        stdout: report.to_text(),
    })
}

fn dual_cmd(p: &LatticePolytope) -> String {
    let dual = p.dual();
    let mut out = format!("{} {}\n", dual.dim(), dual.vertices().len());
    for v in dual.vertices() {
        let cells: Vec<String> = v.coords().iter().map(|c| c.to_string()).collect();
        out += &cells.join(" ");
        out += "\n";
    }
    out
}

fn section_cmd(p: &LatticePolytope, idx: [usize; 3]) -> Result<String, (i32, String)> {
    if let Some(&bad) = idx.iter().find(|&&i| i >= p.num_vertices()) {
        return Err((2, format!("vertex index {bad} out of range 0..{}", p.num_vertices())));
    }
    let s = section_2d(p, p.vertex(idx[0]), p.vertex(idx[1]), p.vertex(idx[2])).map_err(lift)?;
    Ok(write_polytope(&s.polygon))
}

fn dispatch(cli: &Cli) -> Result<Outcome, (i32, String)> {
    match &cli.command {
        Command::Analyze { path } => analyze(&read(path)?).map(Outcome::ok),
        Command::Construct { name, dim } => construct_cmd(name, *dim).map(Outcome::ok),
        Command::EnumeratePolygons { outdir } => enumerate_cmd(outdir).map(Outcome::ok),
        Command::Verify(args) => verify_cmd(args),
        Command::NormalForm { path } => Ok(Outcome::ok(normal_form(&read(path)?).to_text())),
        Command::Dual { path } => Ok(Outcome::ok(dual_cmd(&read(path)?))),
        Command::Iso { a, b } => {
            let same = is_isomorphic(&read(a)?, &read(b)?);
            Ok(Outcome {
                code: if same { 0 } else { 1 },
                stdout: if same { "YES\n" } else { "NO\n" }.to_string(),
            })
        }
        Command::Section { path, i, j, k } => section_cmd(&read(path)?, [*i, *j, *k]).map(Outcome::ok),
    }
}

/// Runs the command line `args` (program name first), writing to the given
/// streams, and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(outcome) => {
            let _ = stdout.write_all(outcome.stdout.as_bytes());
            outcome.code
        }
        Err((code, message)) => {
            let _ = writeln!(stderr, "error: {message}");
            code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("reflexive").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn construct_prints_poly_text() {
        let (code, out, _) = run_args(&["construct", "q3"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("3 8\n"));
        assert_eq!(out.lines().count(), 9);
        let (code, out, _) = run_args(&["construct", "tv2", "--dim", "4"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("4 11\n"));
        assert_eq!(run_args(&["construct", "q3", "--dim", "4"]).0, 2);
        assert_eq!(run_args(&["construct", "nope"]).0, 2);
    }

    #[test]
    fn summary_lines() {
        let hex = construct(NamedPolytope::V2).unwrap();
        assert_eq!(summary_line(&hex), "reflexive simplicial smooth; nu=0; picard=4");
        let square = LatticePolytope::from_i64_rows(&[&[1, 1], &[1, -1], &[-1, 1], &[-1, -1]]).unwrap();
        assert_eq!(summary_line(&square), "reflexive simplicial; nu=0; picard=2");
    }

    #[test]
    fn verify_requires_one_mode() {
        assert_eq!(run_args(&["verify"]).0, 2);
        assert_eq!(run_args(&["verify", "--dim", "3", "--polygons"]).0, 2);
        let (code, out, _) = run_args(&["verify", "--dim", "3"]);
        assert_eq!(code, 0);
        assert!(out.ends_with("VERDICT: PASS\n"));
        assert_eq!(run_args(&["verify", "--dim", "9"]).0, 2);
    }
}
