//! `geoconn` command-line front end.
//!
//! Exit codes: 0 success, 1 analysis mismatch (`check`), 2 input or usage
//! error, 3 numerical non-convergence.

mod files;
mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use thiserror::Error;

use crate::hypergraph::{Hypergraph, HypergraphError};
use crate::scalar::Scalar;
use crate::spectral::{
    geometry_connectivity, perron, verify_h_eigenpair, verify_z_eigenpair, ConnectivityOptions,
    EigenpairCertificate, SpectralError, DEFAULT_EIGENPAIR_TOL, DEFAULT_MAX_ITER,
};
use crate::tensor::TensorView;

pub use files::{parse_hypergraph, parse_hypergraph_file, parse_vector, parse_vector_file};
pub use report::{
    build_report, CertificateEntry, InputSummary, PerronEntry, ReportDocument, SCHEMA_VERSION,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: {source}")]
    Hypergraph {
        line: usize,
        source: HypergraphError,
    },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Spectral(SpectralError::NoConvergence { .. }) => 3,
            _ => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "geoconn", version, about = "Geometry connectivity of k-uniform hypergraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print connected components, one per line.
    Components(Common),
    /// Print β(G) and its indicator-vector certificates.
    Beta(Common),
    /// Power iteration for the spectral radius of a nonnegative tensor.
    Perron {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "adjacency")]
        tensor: TensorKind,
    },
    /// Check a candidate eigenpair read from a vector file.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        vector: PathBuf,
        /// Check the Z-eigenpair equations instead of the H-eigenpair ones.
        #[arg(long)]
        z: bool,
        #[arg(long, value_enum, default_value = "laplacian")]
        tensor: TensorKind,
    },
    /// Recompute β and compare it with an independent component count.
    Check(Common),
    /// Emit the full JSON report.
    Report(Common),
}

#[derive(Debug, Args)]
struct Common {
    /// Hypergraph file (`k n m` header, then m edge lines).
    path: PathBuf,
    /// Tolerance (eigenpair acceptance; Perron convergence for `perron`).
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_MAX_ITER)]
    max_iter: usize,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TensorKind {
    Adjacency,
    Laplacian,
    LaplacianShifted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

impl Common {
    fn graph(&self) -> Result<Hypergraph, CliError> {
        parse_hypergraph_file(&self.path)
    }

    fn source(&self) -> String {
        self.path.display().to_string()
    }

    fn options(&self) -> ConnectivityOptions {
        ConnectivityOptions {
            tol: self.tol.unwrap_or(DEFAULT_EIGENPAIR_TOL),
            perron: report::perron_options(None, self.max_iter),
        }
    }
}

impl TensorKind {
    fn view(self, g: &Hypergraph) -> TensorView {
        match self {
            TensorKind::Adjacency => TensorView::adjacency(g),
            TensorKind::Laplacian => TensorView::laplacian(g),
            TensorKind::LaplacianShifted => TensorView::shifted_laplacian(g),
        }
    }
}

fn fmt_vector(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(Scalar::to_string).collect();
    format!("({})", parts.join(","))
}

fn fmt_certificate(c: &EigenpairCertificate) -> String {
    let verdict = if c.accepted { "ACCEPTED" } else { "REJECTED" };
    let residual = CertificateEntry::from(c).residual;
    let mode = if c.exact { "exact" } else { "float" };
    format!("{verdict} residual {residual} ({mode})")
}

/// Counts components with a union-find over edges, independently of the
/// breadth-first search in [`Hypergraph::connected_components`].
pub fn union_find_component_count(g: &Hypergraph) -> usize {
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    let mut parent: Vec<usize> = (0..g.n()).collect();
    let mut count = g.n();
    for edge in g.edges() {
        let root = find(&mut parent, edge[0] - 1);
        for &v in &edge[1..] {
            let r = find(&mut parent, v - 1);
            if r != root {
                parent[r] = root;
                count -= 1;
            }
        }
    }
    count
}

struct Outcome {
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, code: 0 }
    }
}

fn json_line(value: serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(&value).expect("json value serializes");
    s.push('\n');
    s
}

fn execute(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Components(c) => {
            let parts = c.graph()?.connected_components().parts;
            Ok(Outcome::ok(match c.format {
                Format::Json => json_line(json!({ "components": parts })),
                Format::Text => parts
                    .iter()
                    .map(|p| {
                        let labels: Vec<String> = p.iter().map(usize::to_string).collect();
                        labels.join(" ") + "\n"
                    })
                    .collect(),
            }))
        }
        Command::Beta(c) => {
            let g = c.graph()?;
            if c.format == Format::Json {
                return Ok(Outcome::ok(build_report(&g, &c.source(), &c.options())?.to_json()));
            }
            let r = geometry_connectivity(&g, &c.options())?;
            let mut text = format!("beta = {}\n", r.beta);
            for (i, cert) in r.certificates.iter().enumerate() {
                text += &format!("certificate {}: {} {}\n", i + 1, fmt_vector(&cert.x), fmt_certificate(cert));
            }
            let maximality = if r.maximality_verified() { "verified" } else { "unverified" };
            text += &format!("maximality: {maximality}\n");
            Ok(Outcome::ok(text))
        }
        Command::Perron { common, tensor } => {
            let g = common.graph()?;
            let opts = report::perron_options(common.tol, common.max_iter);
            let r = perron(&tensor.view(&g), &opts)?;
            let vector = Scalar::floats(&r.vector);
            Ok(Outcome::ok(match common.format {
                Format::Json => json_line(json!({
                    "rho": Scalar::Float(r.rho),
                    "vector": vector,
                    "iterations": r.iterations,
                    "tolerance": Scalar::Float(opts.tol),
                })),
                Format::Text => format!(
                    "rho = {}\niterations = {}\nvector = {}\n",
                    Scalar::Float(r.rho),
                    r.iterations,
                    fmt_vector(&vector)
                ),
            }))
        }
        Command::Verify {
            common,
            lambda,
            vector,
            z,
            tensor,
        } => {
            let g = common.graph()?;
            let lambda: Scalar = lambda
                .parse()
                .map_err(|e: crate::scalar::ScalarParseError| CliError::Usage(e.to_string()))?;
            let x = parse_vector_file(vector)?;
            let view = tensor.view(&g);
            let tol = common.tol.unwrap_or(DEFAULT_EIGENPAIR_TOL);
            let cert = if *z {
                verify_z_eigenpair(&view, &lambda, &x, tol)?
            } else {
                verify_h_eigenpair(&view, &lambda, &x, tol)?
            };
            Ok(Outcome::ok(match common.format {
                Format::Json => json_line(json!({
                    "accepted": cert.accepted,
                    "certificate": CertificateEntry::from(&cert),
                })),
                Format::Text => fmt_certificate(&cert) + "\n",
            }))
        }
        Command::Check(c) => {
            let g = c.graph()?;
            let r = geometry_connectivity(&g, &c.options())?;
            let components = union_find_component_count(&g);
            let certified = r.certificates.iter().all(|c| c.accepted && c.exact);
            let irreducible_agrees = r.weakly_irreducible == (components == 1);
            let ok = r.beta == components
                && r.beta_z == components
                && certified
                && irreducible_agrees
                && r.maximality_verified();
            let text = if ok {
                format!("beta = {} = components\n", r.beta)
            } else {
                format!(
                    "MISMATCH beta = {}, beta_z = {}, components = {}, certified = {}, irreducibility agrees = {}, maximality = {}\n",
                    r.beta,
                    r.beta_z,
                    components,
                    certified,
                    irreducible_agrees,
                    r.maximality_verified()
                )
            };
            let text = match c.format {
                Format::Json => json_line(json!({
                    "ok": ok,
                    "beta": r.beta,
                    "beta_z": r.beta_z,
                    "components": components,
                })),
                Format::Text => text,
            };
            Ok(Outcome {
                text,
                code: if ok { 0 } else { 1 },
            })
        }
        Command::Report(c) => {
            let g = c.graph()?;
            Ok(Outcome::ok(build_report(&g, &c.source(), &c.options())?.to_json()))
        }
    }
}

fn out_path(command: &Command) -> Option<&PathBuf> {
    match command {
        Command::Components(c) | Command::Beta(c) | Command::Check(c) | Command::Report(c) => {
            c.out.as_ref()
        }
        Command::Perron { common, .. } | Command::Verify { common, .. } => common.out.as_ref(),
    }
}

/// Parses `args` (including the program name) and runs one subcommand.
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            let rendered = e.to_string();
            let line = rendered.lines().find(|l| !l.trim().is_empty()).unwrap_or("usage error");
            let _ = writeln!(stderr, "{}", line.trim());
            return 2;
        }
    };
    let outcome = execute(&cli.command).and_then(|o| {
        if let Some(path) = out_path(&cli.command) {
            std::fs::write(path, &o.text).map_err(|e| CliError::Io {
                path: path.display().to_string(),
                message: e.to_string(),
            })?;
        } else {
            let _ = stdout.write_all(o.text.as_bytes());
        }
        Ok(o.code)
    });
    match outcome {
        Ok(code) => code,
        Err(e) => {
            let msg = e.to_string().replace('\n', " ");
            let _ = writeln!(stderr, "error: {msg}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn union_find_matches_bfs_on_fixtures() {
        for g in [
            fixtures::single_edge_k4(),
            fixtures::two_triangles(),
            fixtures::linked_pair(),
            Hypergraph::edgeless(3, 3).unwrap(),
        ] {
            assert_eq!(union_find_component_count(&g), g.connected_components().count());
        }
    }

    #[test]
    fn usage_errors_exit_two() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(run(["geoconn", "frobnicate"], &mut out, &mut err), 2);
        assert_eq!(String::from_utf8(err).unwrap().lines().count(), 1);
    }

    #[test]
    fn missing_file_exits_two() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(run(["geoconn", "beta", "/nonexistent/x.hg"], &mut out, &mut err), 2);
        let err = String::from_utf8(err).unwrap();
        assert!(err.starts_with("error: /nonexistent/x.hg"), "{err}");
    }

    #[test]
    fn help_exits_zero() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(run(["geoconn", "--help"], &mut out, &mut err), 0);
        assert!(String::from_utf8(out).unwrap().contains("report"));
    }
}
