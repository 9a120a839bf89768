//! `designforge` command-line front end.
//!
//! Reports are `key: value` lines, or one JSON object with `--json`.
//! Exit status: 0 on success, 1 on a domain error, 2 on bad input.

use clap::{Args, Parser, Subcommand, ValueEnum};
use designforge::arrays::{check_conditions, check_rank_inequalities, Classification};
use designforge::biplane::{self, as_biplane, Biplane, ShippedBiplane};
use designforge::format::{parse_array, parse_design, parse_latin, write_array, write_design};
use designforge::latin::{canonical_phi2, construct_default, construct_latin_sesqui, cyclic_latin};
use designforge::optimality::{self, EfficiencySpectrum};
use designforge::{sylvester, Error};
use rayon::prelude::*;
use serde_json::{json, Map, Value};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "designforge",
    version,
    about = "Construct and verify sesqui-arrays and triple arrays"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// (n+1)×n² sesqui-array from Latin squares
    ConstructLatin {
        #[arg(long)]
        n: usize,
        /// Latin square of order n (default: cyclic)
        #[arg(long)]
        phi1: Option<PathBuf>,
        /// Latin square of order n+1; its top symbol is ∞ (default: cyclic)
        #[arg(long)]
        phi3: Option<PathBuf>,
    },
    /// 7×36 sesqui-array from the Sylvester graph
    ConstructSylvester {
        /// Edge of the Hoffman–Singleton graph, as `a,b`
        #[arg(long, value_parser = parse_edge)]
        edge: Option<(usize, usize)>,
        /// Also write the 36-point column design here
        #[arg(long)]
        design_out: Option<PathBuf>,
    },
    /// K×(V−K) array from a block of a biplane
    ConstructBiplane {
        #[command(flatten)]
        source: BiplaneSource,
        #[arg(long, default_value_t = 0)]
        block: usize,
    },
    /// Classify an array by conditions (A0)–(A4)
    Verify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Canonical efficiency factors of a component design
    Analyze {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Component::Column)]
        component: Component,
        /// Treat the file as a block design instead of an array
        #[arg(long)]
        design: bool,
        #[arg(long)]
        json: bool,
    },
    /// Hussain chain structure and resulting array for every block
    ScanBiplane {
        #[command(flatten)]
        source: BiplaneSource,
        #[arg(long)]
        json: bool,
    },
    /// Incidence ranks and the inequalities they satisfy
    Rank {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct BiplaneSource {
    /// One of (7,4,2), (11,5,2), (16,6,2), (37,9,2)
    #[arg(long)]
    name: Option<ShippedBiplane>,
    /// Block design file
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Component {
    Row,
    Column,
    Combined,
}

fn parse_edge(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected `a,b`")?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| e.to_string());
    Ok((num(a)?, num(b)?))
}

enum Failure {
    Domain(Error),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_parse() {
            Failure::Input(format!("{}: {e}", e.name()))
        } else {
            Failure::Domain(e)
        }
    }
}

type Outcome<T = ()> = Result<T, Failure>;

/// Relative paths that do not exist are also looked up under `DESIGNFORGE_DATA`.
fn resolve(path: &Path) -> PathBuf {
    if path.exists() || path.is_absolute() {
        return path.to_path_buf();
    }
    match std::env::var_os("DESIGNFORGE_DATA") {
        Some(dir) if Path::new(&dir).join(path).exists() => Path::new(&dir).join(path),
        _ => path.to_path_buf(),
    }
}

fn read(path: &Path) -> Outcome<String> {
    let path = resolve(path);
    std::fs::read_to_string(&path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn with_file<T>(path: &Path, parse: impl Fn(&str) -> designforge::Result<T>) -> Outcome<T> {
    parse(&read(path)?).map_err(|e| match e {
        Error::Parse { line, msg } => {
            Failure::Input(format!("Parse: {}:{line}: {msg}", path.display()))
        }
        other => other.into(),
    })
}

/// Ordered key/value report.
#[derive(Default)]
struct Report(Vec<(String, Value)>);

impl Report {
    fn put(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.0.push((key.to_string(), value.into()));
        self
    }

    fn render(&self, as_json: bool) -> String {
        if as_json {
            let map: Map<String, Value> = self.0.iter().cloned().collect();
            return format!("{}\n", Value::Object(map));
        }
        self.0
            .iter()
            .map(|(k, v)| format!("{k}: {}\n", text(v)))
            .collect()
    }
}

fn text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

fn classification_report(c: &Classification) -> Report {
    let mut r = Report::default();
    r.put("kind", c.kind.to_string())
        .put("notation", c.notation())
        .put("rows", c.rows)
        .put("cols", c.cols)
        .put("v", c.v)
        .put("k", c.k)
        .put("lambda_rr", c.lambda_rr)
        .put("lambda_cc", c.lambda_cc)
        .put(
            "gamma",
            format!(
                "{{{}}}",
                c.gamma
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            ),
        )
        .put("lambda_rc", c.lambda_rc);
    for (name, ok) in c.conditions.iter() {
        r.put(name, pass(ok));
    }
    r
}

fn spectrum_report(s: &EfficiencySpectrum, sum_check: Option<bool>) -> Report {
    let mut r = Report::default();
    r.put("factors", s.factor_string())
        .put("count", s.count())
        .put("mu_1", s.mu_1)
        .put("mu_1_exact", s.mu_1_exact().map(|q| q.to_string()))
        .put("mu_a", s.mu_a)
        .put("mu_a_exact", s.mu_a_exact().map(|q| q.to_string()))
        .put("mu_d", s.mu_d)
        .put("connected", s.connected);
    if let Some(ok) = sum_check {
        r.put("sum_check", pass(ok));
    }
    r
}

fn load_biplane(source: &BiplaneSource) -> Outcome<Biplane> {
    match (&source.name, &source.file) {
        (Some(name), _) => Ok(name.load()?),
        (None, Some(file)) => Ok(as_biplane(&with_file(file, parse_design)?)?),
        (None, None) => Err(Failure::Input("one of --name or --file is required".into())),
    }
}

fn construct_latin(n: usize, phi1: Option<&Path>, phi3: Option<&Path>) -> Outcome<String> {
    let array = if phi1.is_none() && phi3.is_none() {
        construct_default(n)?
    } else {
        let phi1 = phi1.map_or_else(|| Ok(cyclic_latin(n)), |p| with_file(p, parse_latin))?;
        let phi3 = phi3.map_or_else(|| Ok(cyclic_latin(n + 1)), |p| with_file(p, parse_latin))?;
        construct_latin_sesqui(&phi1, &canonical_phi2(n), &phi3)?
    };
    Ok(write_array(&array))
}

fn construct_sylvester(edge: Option<(usize, usize)>, design_out: Option<&Path>) -> Outcome<String> {
    let c = sylvester::construct(edge, &sylvester::default_sigmas())?;
    if let Some(path) = design_out {
        std::fs::write(path, write_design(&c.theta))
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    }
    Ok(write_array(&c.array))
}

fn construct_biplane(source: &BiplaneSource, block: usize) -> Outcome<String> {
    let bp = load_biplane(source)?;
    let built = biplane::construct_array(&bp, block)?;
    let mut out = format!("# block: {block}\n# binary: {}\n", built.binary);
    if let Ok(c) = check_conditions(&built.array) {
        out.push_str(&format!("# classification: {}\n", c.notation()));
    }
    out.push_str(&write_array(&built.array));
    Ok(out)
}

fn analyze(file: &Path, component: Component, design: bool, as_json: bool) -> Outcome<String> {
    let report = if design {
        let d = with_file(file, parse_design)?;
        let s = optimality::efficiency_spectrum(&d)?;
        let k = d
            .constant_block_size()
            .expect("checked by the information matrix");
        spectrum_report(&s, Some(optimality::spectrum_sum_check(&s, d.points(), k)))
    } else {
        let array = with_file(file, parse_array)?;
        match component {
            Component::Row | Component::Column => {
                let d = match component {
                    Component::Row => optimality::row_component(&array)?,
                    _ => optimality::column_component(&array)?,
                };
                let s = optimality::efficiency_spectrum(&d)?;
                let k = d
                    .constant_block_size()
                    .expect("checked by the information matrix");
                spectrum_report(&s, Some(optimality::spectrum_sum_check(&s, d.points(), k)))
            }
            Component::Combined => {
                let m = optimality::combined_information_matrix(&array)?;
                let mut r = spectrum_report(&optimality::spectrum_from_matrix(&m)?, None);
                r.put("general_balance", optimality::general_balance_check(&array));
                if let Ok(em) = optimality::em_identity(&array) {
                    r.put("mu_ar", em.mu_ar)
                        .put("mu_ac", em.mu_ac)
                        .put("em_gap", em.gap);
                }
                r
            }
        }
    };
    Ok(report.render(as_json))
}

fn scan_biplane(source: &BiplaneSource, as_json: bool) -> Outcome<String> {
    let bp = load_biplane(source)?;
    let rows: Vec<Result<Value, Error>> = (0..bp.points())
        .into_par_iter()
        .map(|block| {
            let report = biplane::block_chain_report(&bp, block)?;
            let classification = match biplane::construct_array(&bp, block) {
                Ok(built) => check_conditions(&built.array).ok().map(|c| c.notation()),
                Err(Error::BlockSizeTooSmall(_)) => None,
                Err(e) => return Err(e),
            };
            Ok(json!({
                "block": block,
                "histogram": report.histogram_string(),
                "four_cycle_free": report.four_cycle_free,
                "all_triangles": report.all_triangles,
                "classification": classification,
            }))
        })
        .collect();
    let rows = rows.into_iter().collect::<Result<Vec<_>, _>>()?;
    if as_json {
        return Ok(format!(
            "{}\n",
            json!({ "biplane": format!("({},{},2)", bp.points(), bp.block_size()), "blocks": rows })
        ));
    }
    Ok(rows
        .iter()
        .map(|r| {
            format!(
                "block {}: histogram: {} four_cycle_free: {} all_triangles: {} classification: {}\n",
                r["block"],
                text(&r["histogram"]),
                r["four_cycle_free"],
                r["all_triangles"],
                text(&r["classification"]),
            )
        })
        .collect())
}

fn rank(file: &Path, as_json: bool) -> Outcome<String> {
    let array = with_file(file, parse_array)?;
    let rr = check_rank_inequalities(&array);
    let mut r = Report::default();
    r.put("rank_row_incidence", rr.rank_row_incidence)
        .put("rank_col_incidence", rr.rank_col_incidence)
        .put("rank_row_col_product", rr.rank_row_col_product)
        .put("adjusted_orthogonality", rr.adjusted_orthogonality)
        .put("rank_sum_bound", pass(rr.rank_sum_bound))
        .put("column_rank_bound", pass(rr.column_rank_bound))
        .put("size_bound", pass(rr.size_bound));
    Ok(r.render(as_json))
}

fn run(cli: Cli) -> Outcome<String> {
    match cli.command {
        Command::ConstructLatin { n, phi1, phi3 } => {
            construct_latin(n, phi1.as_deref(), phi3.as_deref())
        }
        Command::ConstructSylvester { edge, design_out } => {
            construct_sylvester(edge, design_out.as_deref())
        }
        Command::ConstructBiplane { source, block } => construct_biplane(&source, block),
        Command::Verify { file, json } => {
            let array = with_file(&file, parse_array)?;
            Ok(classification_report(&check_conditions(&array)?).render(json))
        }
        Command::Analyze {
            file,
            component,
            design,
            json,
        } => analyze(&file, component, design, json),
        Command::ScanBiplane { source, json } => scan_biplane(&source, json),
        Command::Rank { file, json } => rank(&file, json),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {}: {e}", e.name());
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edges_parse() {
        assert_eq!(parse_edge("3, 17"), Ok((3, 17)));
        assert!(parse_edge("3").is_err());
        assert!(parse_edge("a,1").is_err());
    }

    #[test]
    fn report_renders_both_ways() {
        let mut r = Report::default();
        r.put("kind", "TRIPLE")
            .put("k", Some(3))
            .put("lambda_cc", None::<usize>);
        assert_eq!(r.render(false), "kind: TRIPLE\nk: 3\nlambda_cc: -\n");
        assert_eq!(
            r.render(true),
            "{\"k\":3,\"kind\":\"TRIPLE\",\"lambda_cc\":null}\n"
        );
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
