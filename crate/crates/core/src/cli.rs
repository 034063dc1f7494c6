//! Command-line front end. `run` never touches the process: it returns the
//! exit status and both output streams.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactmath::{format_p_basis, to_p_basis, PBasisPoly, PolyS, PolyT};
use crate::neargon::{compose, compose_maximal, edge_poly, realize_labeled, recover_edge_poly_from_counts, EdgeMethod, NearGon};
use crate::oracle::{oracle_complete_poly, oracle_region_poly, DEFAULT_GUARD};
use crate::planar::{format_points, read_points, Configuration, NearEdge};
use crate::roofs::{Roof, RoofSystem, StepMode};
use crate::selftest::run_selftest;
use crate::transfer::{
    complete_config_poly_traced, complete_edge_poly_tm_traced, max_config_count_traced, region_poly_traced, RegionCount,
    RoofVector,
};
use crate::weighted::{weighted_complete_poly, weighted_max_count};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_GUARD: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "tripoly", version, about = "Exact triangulation polynomials of planar point configurations")]
struct Cli {
    /// Print results as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Print the transfer-matrix vectors V_i.
    #[arg(long, global = true)]
    trace: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Auto,
    Tm,
    Roofs,
    Convex,
}

impl From<MethodArg> for EdgeMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => EdgeMethod::Auto,
            MethodArg::Tm => EdgeMethod::TransferMatrix,
            MethodArg::Roofs => EdgeMethod::CoveringRoofs,
            MethodArg::Convex => EdgeMethod::Convex,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Complete triangulation polynomial of a configuration.
    Poly { file: PathBuf },
    /// Number of maximal triangulations of a configuration.
    Maxcount { file: PathBuf },
    /// Triangulations of the region between two roofs.
    Region {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        floor: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        ceiling: Vec<usize>,
        #[arg(long)]
        maximal: bool,
    },
    /// Complete edge-polynomial of a near-edge, in the p_j basis.
    Edgepoly {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
        #[arg(long)]
        maximal: bool,
    },
    /// Complete edge-polynomial of a near-edge by the transfer matrix.
    EdgepolyTm { file: PathBuf },
    /// Weighted convex polygon with the given side weights.
    Weighted {
        #[arg(required = true, num_args = 2..)]
        weights: Vec<u32>,
        #[arg(long)]
        maximal: bool,
    },
    /// Near-gon glued from near-edge files, in cyclic order.
    Neargon {
        #[arg(required = true, num_args = 2..)]
        files: Vec<PathBuf>,
        #[arg(long)]
        maximal: bool,
    },
    /// Maximal edge-polynomial from the counts of its fan closures.
    Recover {
        #[arg(required = true, allow_negative_numbers = true)]
        counts: Vec<BigInt>,
        /// `alpha,d`: lowest p-index and number of unknowns.
        #[arg(long, value_delimiter = ',', num_args = 1, required = true)]
        range: Vec<u32>,
    },
    /// Integer configuration of a near-gon.
    Realize {
        #[arg(required = true, num_args = 3..)]
        files: Vec<PathBuf>,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = 40)]
        steps: u32,
    },
    /// Brute-force complete polynomial.
    Oracle {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_GUARD)]
        guard: usize,
    },
    /// Brute-force region polynomial.
    OracleRegion {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        floor: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        ceiling: Vec<usize>,
        #[arg(long, default_value_t = DEFAULT_GUARD)]
        guard: usize,
    },
    /// Recompute the published worked examples.
    Selftest,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn poly_json(p: &PolyS) -> Value {
    let terms: Vec<Value> = p.display_order().into_iter().map(|(k, c)| json!({"s": k.0, "coeff": c.to_string()})).collect();
    json!({ "terms": terms })
}

/// Inverse of [`poly_json`].
pub fn poly_from_json(v: &Value) -> Option<PolyS> {
    let mut p = PolyS::zero();
    for t in v.get("terms")?.as_array()? {
        let s = u32::try_from(t.get("s")?.as_u64()?).ok()?;
        let c: BigInt = t.get("coeff")?.as_str()?.parse().ok()?;
        p.add_term(crate::exactmath::SExp(s), c);
    }
    Some(p)
}

fn s_power(half: u32) -> Value {
    if half % 2 == 0 {
        json!(half / 2)
    } else {
        json!(format!("{half}/2"))
    }
}

fn p_basis_json(p: &PBasisPoly) -> Value {
    let mut terms: Vec<(&(u32, u32), &BigInt)> = p.terms().collect();
    terms.sort_by(|a, b| b.0 .0.cmp(&a.0 .0).then(a.0 .1.cmp(&b.0 .1)));
    let terms: Vec<Value> = terms.into_iter().map(|(&(h, j), c)| json!({"s": s_power(h), "p": j, "coeff": c.to_string()})).collect();
    json!({ "terms": terms })
}

fn maximal_json(p: &PolyT) -> Result<(String, Value)> {
    let coeffs = to_p_basis(p)?;
    let terms: Vec<Value> = coeffs.iter().map(|(j, c)| json!({"p": j, "coeff": c.to_string()})).collect();
    Ok((format_p_basis(&coeffs), json!({ "terms": terms })))
}

fn count_json(c: &BigInt) -> Value {
    json!({ "count": c.to_string() })
}

fn read_config(path: &Path) -> Result<Configuration> {
    Configuration::new(read_points(path)?)
}

fn read_edge(path: &Path) -> Result<NearEdge> {
    NearEdge::new(read_points(path)?)
}

fn roof(indices: &[usize], host: &Configuration) -> Result<Roof> {
    if host.is_empty() {
        return Err(Error::InvalidArgument("empty configuration".into()));
    }
    Roof::new(indices.to_vec(), host.len() - 1)
}

struct Tracer {
    enabled: bool,
    lines: Vec<String>,
}

impl Tracer {
    fn record(&mut self, sys: &RoofSystem, i: usize, v: &RoofVector) {
        if self.enabled {
            self.lines.push(format!("V_{i} = {}", v.render(sys)));
        }
    }
}

/// Result text and its JSON encoding.
type Rendered = (String, Value);

fn execute(cli: &Cli) -> Result<(Rendered, Vec<String>)> {
    let mut tracer = Tracer { enabled: cli.trace, lines: Vec::new() };
    let rendered = match &cli.command {
        Command::Poly { file } => {
            let host = read_config(file)?;
            let p = complete_config_poly_traced(&host, &mut |s, i, v| tracer.record(s, i, v))?;
            (p.to_string(), poly_json(&p))
        }
        Command::Maxcount { file } => {
            let host = read_config(file)?;
            let c = max_config_count_traced(&host, &mut |s, i, v| tracer.record(s, i, v))?;
            (c.to_string(), count_json(&c))
        }
        Command::Region { file, floor, ceiling, maximal } => {
            let host = read_config(file)?;
            let (lo, hi) = (roof(floor, &host)?, roof(ceiling, &host)?);
            let mode = if *maximal { StepMode::Immediate } else { StepMode::All };
            match region_poly_traced(&host, &lo, &hi, mode, &mut |s, i, v| tracer.record(s, i, v))? {
                RegionCount::Polynomial(p) => (p.to_string(), poly_json(&p)),
                RegionCount::Maximal(c) => (c.to_string(), count_json(&c)),
            }
        }
        Command::Edgepoly { file, method, maximal } => {
            let p = edge_poly(&read_edge(file)?, (*method).into())?;
            if *maximal {
                maximal_json(&p.maximal())?
            } else {
                let b = p.p_basis();
                (b.to_string(), p_basis_json(&b))
            }
        }
        Command::EdgepolyTm { file } => {
            let b = complete_edge_poly_tm_traced(&read_edge(file)?, &mut |s, i, v| tracer.record(s, i, v))?;
            (b.to_string(), p_basis_json(&b))
        }
        Command::Weighted { weights, maximal } => {
            if *maximal {
                let c = weighted_max_count(weights)?;
                (c.to_string(), count_json(&c))
            } else {
                let p = weighted_complete_poly(weights)?;
                (p.to_string(), poly_json(&p))
            }
        }
        Command::Neargon { files, maximal } => {
            let edges = files.iter().map(|f| read_edge(f)).collect::<Result<Vec<_>>>()?;
            let polys = NearGon::new(edges)?.edge_polys(EdgeMethod::Auto)?;
            if *maximal {
                let c = compose_maximal(&polys)?;
                (c.to_string(), count_json(&c))
            } else {
                let p = compose(&polys)?;
                (p.to_string(), poly_json(&p))
            }
        }
        Command::Recover { counts, range } => {
            let [alpha, d] = range[..] else {
                return Err(Error::InvalidArgument(format!("--range takes `alpha,d`, got {} values", range.len())));
            };
            maximal_json(&recover_edge_poly_from_counts(counts, alpha, d)?)?
        }
        Command::Realize { files, output, steps } => {
            let edges = files.iter().map(|f| read_edge(f)).collect::<Result<Vec<_>>>()?;
            let (pts, m) = realize_labeled(&NearGon::new(edges)?, *steps)?;
            let text = format_points(&pts);
            let coords: Vec<Value> = pts.iter().map(|p| json!([p.x, p.y])).collect();
            match output {
                Some(path) => {
                    std::fs::write(path, &text)
                        .map_err(|e| Error::Io { path: path.display().to_string(), message: e.to_string() })?;
                    let summary = format!("{} points, height exponent {m}, written to {}", pts.len(), path.display());
                    (summary, json!({ "points": coords, "exponent": m, "output": path.display().to_string() }))
                }
                None => (text.trim_end().to_string(), json!({ "points": coords, "exponent": m })),
            }
        }
        Command::Oracle { file, guard } => {
            let p = oracle_complete_poly(&read_config(file)?, *guard)?;
            (p.to_string(), poly_json(&p))
        }
        Command::OracleRegion { file, floor, ceiling, guard } => {
            let host = read_config(file)?;
            let p = oracle_region_poly(&host, &roof(floor, &host)?, &roof(ceiling, &host)?, *guard)?;
            (p.to_string(), poly_json(&p))
        }
        Command::Selftest => unreachable!("handled by run"),
    };
    Ok((rendered, tracer.lines))
}

fn selftest(json: bool) -> CliOutput {
    let checks = run_selftest();
    let failed = checks.iter().filter(|c| !c.passed()).count();
    let mut stdout = String::new();
    if json {
        let items: Vec<Value> = checks
            .iter()
            .map(|c| json!({"name": c.name, "passed": c.passed(), "expected": c.expected, "actual": c.actual}))
            .collect();
        stdout = format!("{}\n", json!({ "checks": items, "failed": failed }));
    } else {
        for c in &checks {
            if c.passed() {
                let _ = writeln!(stdout, "PASS {}", c.name);
            } else {
                let _ = writeln!(stdout, "FAIL {}: expected {}, got {}", c.name, c.expected, c.actual);
            }
        }
        let _ = writeln!(stdout, "{} passed, {failed} failed", checks.len() - failed);
    }
    CliOutput { code: if failed == 0 { EXIT_OK } else { EXIT_INPUT }, stdout, stderr: String::new() }
}

pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                CliOutput { code, stdout: text, stderr: String::new() }
            } else {
                CliOutput { code, stdout: String::new(), stderr: text }
            };
        }
    };
    if let Command::Selftest = cli.command {
        return selftest(cli.json);
    }
    match execute(&cli) {
        Ok(((text, value), trace)) => {
            let stdout = if cli.json {
                let mut value = value;
                if cli.trace {
                    value["trace"] = json!(trace);
                }
                format!("{value}\n")
            } else {
                trace.iter().chain(std::iter::once(&text)).map(|l| format!("{l}\n")).collect()
            };
            CliOutput { code: EXIT_OK, stdout, stderr: String::new() }
        }
        Err(e) => {
            let code = if matches!(e, Error::GuardExceeded { .. }) { EXIT_GUARD } else { EXIT_INPUT };
            CliOutput { code, stdout: String::new(), stderr: format!("error: {e}\n") }
        }
    }
}
