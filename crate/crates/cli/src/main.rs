use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use lunefree::constructions::{
    braid_shadow, figure25, g8, k_lune_graph, lune_free_knot_graph, polygon_family, tight_knot_graph,
    tight_link_graph_12, venn,
};
use lunefree::enumerate::{census_table_with, enumerate_universes_with, Ceilings, EnumFilter};
use lunefree::io::{export_planar_code, parse_uni, to_dot, to_svg, write_uni, PLANAR_CODE_HEADER};
use lunefree::knot_graph::{as_universe, Universe};
use lunefree::medial::{angle_components, classify_special, medial, premedial_default, wheel, PlaneGraph};
use lunefree::planar_map::{canonical_code, PlanarMap};
use lunefree::verify::{criterion_count, run_criterion, Suite};

#[derive(Parser, Debug)]
#[command(name = "lunefree", version, about = "Knot shadows, medial graphs and lune-free constructions")]
struct Cli {
    /// Worker threads for enumeration (default: all cores).
    #[arg(long, global = true, env = "LUNEFREE_THREADS")]
    threads: Option<usize>,
    /// TOML file with `threads` and a `[ceilings]` table.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print counts, face census, strand count and verdicts for a .uni file.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Build a named graph and write it as .uni text.
    Construct {
        #[command(subcommand)]
        what: Construct,
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Medial of a plane graph, or with --inverse the plane graph of a universe.
    Medial {
        file: PathBuf,
        #[arg(long)]
        inverse: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List universes with a given number of crossings, or tabulate counts.
    Enumerate {
        /// Crossing count; the upper bound with --census.
        #[arg(long = "v")]
        v: usize,
        #[arg(long)]
        simple: bool,
        #[arg(long)]
        mu: Option<usize>,
        #[arg(long)]
        tight: bool,
        #[arg(long)]
        census: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run the acceptance criteria.
    Verify {
        #[arg(long, value_enum, default_value = "paper")]
        suite: SuiteArg,
        /// Run a single criterion by number.
        #[arg(long)]
        criterion: Option<usize>,
    },
    /// Convert a .uni file to another format.
    Export {
        file: PathBuf,
        #[arg(long, value_enum)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum Construct {
    Venn,
    G8,
    /// Concentric p-gon rings.
    Family { p: usize, n: usize },
    /// Tight lune-free knot shadow with V crossings.
    Tight { v: usize },
    /// The tight three-component link shadow with 12 crossings.
    #[command(name = "tight-link-12")]
    TightLink12,
    /// Lune-free knot shadow with V crossings.
    Lunefree { v: usize },
    /// Knot shadow with V crossings and K lunes.
    Klune { k: usize, v: usize },
    /// Closure shadow of (σ1σ2σ3)^(4K−1)(σ2σ1)^M σ2^L.
    Braid { k: usize, m: usize, l: usize },
    /// The wheel W_N (a plane graph).
    Wheel { n: usize },
    /// Stored special plane graph with V ∈ {9, 15, 18, 24} edges.
    Base { v: usize },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum SuiteArg {
    Paper,
    Quick,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Format {
    Uni,
    Planarcode,
    Dot,
    Svg,
}

#[derive(Deserialize, Default, Debug)]
#[serde(default, deny_unknown_fields)]
struct Config {
    threads: Option<usize>,
    ceilings: Option<Ceilings>,
}

#[derive(Serialize)]
struct Analysis {
    v: usize,
    e: usize,
    f: usize,
    census: Vec<(usize, usize)>,
    universe: bool,
    mu: Option<usize>,
    lunes: Option<usize>,
    simple: bool,
    lune_free: Option<bool>,
    tight: Option<bool>,
    admissible: Option<bool>,
    angle_cycles: Option<usize>,
    special: Option<String>,
}

struct Env {
    ceilings: Ceilings,
}

fn load_config(path: Option<&Path>) -> Result<Config> {
    let Some(path) = path else {
        return Ok(Config::default());
    };
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

/// `-` reads standard input.
fn read_map(path: &Path) -> Result<PlanarMap> {
    let text = if path == Path::new("-") {
        std::io::read_to_string(std::io::stdin()).context("reading standard input")?
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    parse_uni(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit(out: &mut dyn Write, path: Option<&Path>, bytes: &[u8]) -> Result<()> {
    match path {
        Some(p) => fs::write(p, bytes).with_context(|| format!("writing {}", p.display())),
        None => out.write_all(bytes).context("writing output"),
    }
}

fn analyze(map: &PlanarMap) -> Analysis {
    let faces = map.faces();
    let mut census = std::collections::BTreeMap::new();
    for c in &faces.cycles {
        *census.entry(c.len()).or_insert(0) += 1;
    }
    let universe = as_universe(map.clone()).ok();
    let plane = PlaneGraph::new(map.clone()).ok();
    Analysis {
        v: map.vertex_count(),
        e: map.edge_count(),
        f: faces.len(),
        census: census.into_iter().collect(),
        universe: universe.is_some(),
        mu: universe.as_ref().map(Universe::strand_count),
        lunes: universe.as_ref().map(Universe::lune_count),
        simple: map.is_simple(),
        lune_free: universe.as_ref().map(Universe::is_lune_free),
        tight: universe.as_ref().map(|u| u.is_tight() == Ok(true)),
        admissible: universe.as_ref().map(|u| u.is_admissible() == Ok(true)),
        angle_cycles: plane.as_ref().map(angle_components),
        special: plane.as_ref().map(|g| format!("{:?}", classify_special(g).tag)),
    }
}

fn write_analysis(out: &mut dyn Write, a: &Analysis) -> io::Result<()> {
    let census: Vec<String> = a.census.iter().map(|(k, n)| format!("{k}:{n}")).collect();
    writeln!(out, "v={} e={} f={}", a.v, a.e, a.f)?;
    writeln!(out, "census={{{}}}", census.join(", "))?;
    if a.universe {
        writeln!(
            out,
            "mu={} tight={} lune_free={} lunes={} simple={} admissible={}",
            a.mu.unwrap(),
            a.tight.unwrap(),
            a.lune_free.unwrap(),
            a.lunes.unwrap(),
            a.simple,
            a.admissible.unwrap()
        )?;
    } else {
        writeln!(out, "universe=false simple={}", a.simple)?;
    }
    if let (Some(cycles), Some(class)) = (a.angle_cycles, &a.special) {
        writeln!(out, "angle_cycles={cycles} special={class}")?;
    }
    Ok(())
}

fn construct(what: &Construct) -> Result<PlanarMap> {
    let u = match *what {
        Construct::Venn => venn(),
        Construct::G8 => g8(),
        Construct::Family { p, n } => polygon_family(p, n)?,
        Construct::Tight { v } => tight_knot_graph(v)?,
        Construct::TightLink12 => tight_link_graph_12(),
        Construct::Lunefree { v } => lune_free_knot_graph(v)?,
        Construct::Klune { k, v } => k_lune_graph(k, v)?,
        Construct::Braid { k, m, l } => braid_shadow(k, m, l)?,
        Construct::Wheel { n } => return Ok(wheel(n)?.into_map()),
        Construct::Base { v } => return Ok(figure25(v)?.into_map()),
    };
    Ok(u.into_map())
}

fn enumerate(out: &mut dyn Write, env: &Env, v: usize, filter: EnumFilter, census: bool, json: bool) -> Result<()> {
    if census {
        let rows = census_table_with(v, &env.ceilings)?;
        // one order at a time, so only the largest order is held in memory
        let matching = (1..=v)
            .map(|n| Ok(enumerate_universes_with(&EnumFilter { v_min: n, v_max: n, ..filter.clone() }, &env.ceilings)?.len()))
            .collect::<Result<Vec<usize>>>()?;
        if json {
            #[derive(Serialize)]
            struct Row<'a> {
                #[serde(flatten)]
                row: &'a lunefree::enumerate::CensusRow,
                matching: usize,
            }
            let rows: Vec<Row> = rows.iter().zip(&matching).map(|(row, &matching)| Row { row, matching }).collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&rows)?)?;
        } else {
            writeln!(out, "{:>3} {:>9} {:>9} {:>6} {:>6} {:>6}", "v", "matching", "lunefree", "knot", "tight", "tknot")?;
            for (row, m) in rows.iter().zip(&matching) {
                writeln!(
                    out,
                    "{:>3} {:>9} {:>9} {:>6} {:>6} {:>6}",
                    row.v, m, row.total_lune_free, row.knot_graphs, row.tight_lune_free, row.tight_knot
                )?;
            }
        }
        return Ok(());
    }
    let found = enumerate_universes_with(&filter, &env.ceilings)?;
    if json {
        let docs: Vec<serde_json::Value> = found
            .iter()
            .map(|u| {
                serde_json::json!({
                    "code": canonical_code(u.map(), true).code,
                    "mu": u.strand_count(),
                    "uni": write_uni(u.map()),
                })
            })
            .collect();
        writeln!(out, "{}", serde_json::to_string_pretty(&docs)?)?;
    } else {
        writeln!(out, "# {} universes", found.len())?;
        for (i, u) in found.iter().enumerate() {
            writeln!(out, "\n# graph {} mu={} census={}", i + 1, u.strand_count(), u.face_census())?;
            write!(out, "{}", write_uni(u.map()))?;
        }
    }
    Ok(())
}

/// Returns whether every criterion passed.
fn verify(out: &mut dyn Write, suite: Suite, only: Option<usize>) -> Result<bool> {
    let ids: Vec<usize> = match only {
        Some(id) if (1..=criterion_count()).contains(&id) => vec![id],
        Some(id) => bail!("criterion {id} does not exist (1..={})", criterion_count()),
        None => (1..=criterion_count()).collect(),
    };
    let mut all = true;
    for id in ids {
        let report = run_criterion(id, suite);
        writeln!(out, "{report}")?;
        out.flush()?;
        all &= report.passed;
    }
    Ok(all)
}

fn dispatch(cli: &Cli, env: &Env, out: &mut dyn Write) -> Result<bool> {
    match &cli.command {
        Command::Analyze { file, json } => {
            let a = analyze(&read_map(file)?);
            if *json {
                writeln!(out, "{}", serde_json::to_string_pretty(&a)?)?;
            } else {
                write_analysis(out, &a)?;
            }
        }
        Command::Construct { what, output } => {
            let map = construct(what)?;
            emit(out, output.as_deref(), write_uni(&map).as_bytes())?;
        }
        Command::Medial { file, inverse, output } => {
            let map = read_map(file)?;
            let result = if *inverse {
                premedial_default(&as_universe(map)?).into_map()
            } else {
                medial(&PlaneGraph::new(map)?)?.into_map()
            };
            emit(out, output.as_deref(), write_uni(&result).as_bytes())?;
        }
        Command::Enumerate {
            v,
            simple,
            mu,
            tight,
            census,
            json,
        } => {
            let mut filter = EnumFilter::exactly(*v);
            filter.require_simple = *simple;
            filter.mu = *mu;
            filter.tight = tight.then_some(true);
            enumerate(out, env, *v, filter, *census, *json)?;
        }
        Command::Verify { suite, criterion } => {
            let suite = match suite {
                SuiteArg::Paper => Suite::Paper,
                SuiteArg::Quick => Suite::Quick,
            };
            return verify(out, suite, *criterion);
        }
        Command::Export { file, format, output } => {
            let map = read_map(file)?;
            let bytes = match format {
                Format::Uni => write_uni(&map).into_bytes(),
                Format::Dot => to_dot(&map).into_bytes(),
                Format::Svg => to_svg(&map).into_bytes(),
                Format::Planarcode => {
                    let mut b = PLANAR_CODE_HEADER.to_vec();
                    b.extend(export_planar_code(&map)?);
                    b
                }
            };
            emit(out, output.as_deref(), &bytes)?;
        }
    }
    Ok(true)
}

fn setup(cli: &Cli) -> Result<Env> {
    let config = load_config(cli.config.as_deref())?;
    let mut ceilings = config.ceilings.unwrap_or_default();
    let from_env = Ceilings::from_env();
    let defaults = Ceilings::default();
    // environment variables beat the config file, which beats the defaults
    for (slot, env, default) in [
        (&mut ceilings.simple_v, from_env.simple_v, defaults.simple_v),
        (&mut ceilings.general_v, from_env.general_v, defaults.general_v),
        (&mut ceilings.plane_e, from_env.plane_e, defaults.plane_e),
        (&mut ceilings.cross_check_v, from_env.cross_check_v, defaults.cross_check_v),
    ] {
        if env != default {
            *slot = env;
        }
    }
    if let Some(n) = cli.threads.or(config.threads) {
        if n == 0 {
            return Err(anyhow!("thread count must be positive"));
        }
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Ok(Env { ceilings })
}

/// Runs one invocation: 0 on success, 1 on a domain error or a failed
/// check, 2 on a usage error.
fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let result = setup(&cli).and_then(|env| dispatch(&cli, &env, out));
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            1
        }
    }
}

fn main() -> ExitCode {
    let stdout = io::stdout();
    let stderr = io::stderr();
    let code = run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock());
    ExitCode::from(code)
}
