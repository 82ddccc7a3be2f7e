use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ctdesign::analysis::{analyze_capped, distance_partition_capped};
use ctdesign::constructions::{construct, BundledGroup, ConstructionParams};
use ctdesign::reproduce::{run_criterion, run_suite, SuiteReport, CRITERIA};
use ctdesign::screening::{family_screen, Family, GroupFamilySpec};
use ctdesign::{Design, Error, PermGroup, DEFAULT_MAX_RANKS};
use serde::Serialize;

const EXIT_INPUT: u8 = 2;
const EXIT_MEMORY: u8 = 3;
const EXIT_VERIFY: u8 = 4;

#[derive(Parser)]
#[command(name = "ctdesign", version, about = "Designs in Johnson graphs: construct, analyse, screen")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named design and write it as a block file
    Construct {
        /// pg-lines, ag-lines, biplane, inversive-plane, witt, m11-hexads,
        /// example1..example5 or disjoint-blocks
        name: String,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        v: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// Comma-separated point list
        #[arg(long, value_delimiter = ',')]
        y: Option<Vec<usize>>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the paired group
        #[arg(long)]
        group_out: Option<PathBuf>,
    },
    /// Distance partition, regularity and transitivity verdicts for a design
    Analyze {
        #[arg(long)]
        design: PathBuf,
        /// Group file, or the name of a bundled group (m24, m23, m22, m12, m11, m11-12, l2-11)
        #[arg(long)]
        group: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MAX_RANKS)]
        max_ranks: u64,
    },
    /// Orbits of a group on k-subsets with their minimum pairwise distances
    Orbits {
        /// Group file or bundled group name
        #[arg(long)]
        group: String,
        #[arg(long)]
        k: usize,
        /// Also report the distance from this design met by each orbit
        #[arg(long)]
        design: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MAX_RANKS)]
        max_ranks: u64,
    },
    /// Screen a family of 2-transitive groups
    Screen {
        /// suzuki, unitary, ree, l2, projective, affine or sporadic
        #[arg(long)]
        family: String,
        #[arg(long)]
        q_max: Option<u64>,
        #[arg(long)]
        d_max: Option<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the reproduction suite; exits 4 if any criterion fails
    Verify {
        /// Run a single criterion
        #[arg(long)]
        criterion: Option<u8>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Lib(Error),
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::MemoryCap { .. } => EXIT_MEMORY,
                Error::Contradiction(_) => EXIT_VERIFY,
                _ => EXIT_INPUT,
            })
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(EXIT_VERIFY)
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Construct {
            name,
            q,
            n,
            v,
            k,
            y,
            a,
            b,
            out,
            group_out,
        } => {
            let params = ConstructionParams { q, n, v, k, y, a, b };
            let (design, group) = construct(&name, &params)?;
            emit(out.as_deref(), &design.to_text())?;
            if let Some(path) = group_out {
                emit(Some(&path), &group.to_text())?;
            }
            Ok(())
        }
        Command::Analyze {
            design,
            group,
            format,
            out,
            max_ranks,
        } => {
            let d = read_design(&design)?;
            let g = group.as_deref().map(read_group).transpose()?;
            let report = analyze_capped(&d, g.as_ref(), max_ranks)?;
            let text = match format {
                Format::Json => report.to_json(),
                Format::Text => report.to_text(),
                Format::Csv => return Err(Failure::Usage("analyze supports json and text".into())),
            };
            emit(out.as_deref(), &text)
        }
        Command::Orbits {
            group,
            k,
            design,
            format,
            out,
            max_ranks,
        } => {
            let g = read_group(&group)?;
            let d = design.as_deref().map(read_design).transpose()?;
            let report = orbit_report(&g, k, d.as_ref(), max_ranks)?;
            emit(out.as_deref(), &report.render(format))
        }
        Command::Screen {
            family,
            q_max,
            d_max,
            format,
            out,
        } => {
            let mut spec = GroupFamilySpec::new(Family::from_name(&family)?);
            if let Some(q) = q_max {
                spec = spec.with_q_max(q);
            }
            if let Some(d) = d_max {
                spec = spec.with_d_max(d);
            }
            let table = family_screen(&spec);
            let text = match format {
                Format::Json => table.to_json(),
                Format::Csv => table.to_csv(),
                Format::Text => table.to_text(),
            };
            emit(out.as_deref(), &text)
        }
        Command::Verify {
            criterion,
            format,
            out,
        } => {
            let report = match criterion {
                Some(id) if CRITERIA.iter().any(|c| c.0 == id) => SuiteReport {
                    criteria: vec![run_criterion(id)],
                },
                Some(id) => return Err(Failure::Usage(format!("no criterion {id}; expected 1..=11"))),
                None => run_suite(),
            };
            let text = match format {
                Format::Json => report.to_json(),
                Format::Text => report.to_text(),
                Format::Csv => return Err(Failure::Usage("verify supports json and text".into())),
            };
            emit(out.as_deref(), &text)?;
            if report.passed() {
                Ok(())
            } else {
                let failed: Vec<String> = report
                    .criteria
                    .iter()
                    .filter(|c| !c.passed())
                    .map(|c| c.id.to_string())
                    .collect();
                Err(Failure::Verification(format!("failed criteria: {}", failed.join(", "))))
            }
        }
    }
}

fn emit(path: Option<&Path>, text: &str) -> Outcome {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn read_design(path: &Path) -> Result<Design, Failure> {
    Ok(Design::parse(&read_file(path)?)?)
}

fn read_group(spec: &str) -> Result<PermGroup, Failure> {
    let path = Path::new(spec);
    if !path.exists() {
        if let Some(g) = BundledGroup::from_name(spec) {
            return Ok(g.load()?);
        }
    }
    Ok(PermGroup::parse(&read_file(path)?)?)
}

#[derive(Serialize)]
struct OrbitRow {
    index: usize,
    size: usize,
    stabilizer_order: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    design_distances: Option<Vec<usize>>,
    representative: Vec<usize>,
}

#[derive(Serialize)]
struct OrbitReport {
    v: usize,
    k: usize,
    order: String,
    orbits: Vec<OrbitRow>,
    /// Minimum distance in `J(v,k)` between members of orbits `i` and `j`.
    distance_matrix: Vec<Vec<usize>>,
}

fn orbit_report(g: &PermGroup, k: usize, d: Option<&Design>, max_ranks: u64) -> Result<OrbitReport, Failure> {
    if let Some(d) = d {
        if d.v() != g.degree() || d.k() != k {
            return Err(Failure::Usage(format!(
                "design is on J({},{}) but the group and --k give J({},{k})",
                d.v(),
                d.k(),
                g.degree()
            )));
        }
        g.preserves(d)?;
    }
    let orbits = g.orbits_on_ksubsets_capped(k, max_ranks)?;
    let dp = d.map(|d| distance_partition_capped(d, max_ranks)).transpose()?;
    let rows = orbits
        .sizes()
        .into_iter()
        .enumerate()
        .map(|(i, size)| {
            let design_distances = dp.as_ref().map(|dp| {
                let mut ds: Vec<usize> = orbits.members(i).map(|s| dp.distance_of(s)).collect();
                ds.sort_unstable();
                ds.dedup();
                ds
            });
            OrbitRow {
                index: i,
                size,
                stabilizer_order: g.stabilizer_order(size).to_string(),
                design_distances,
                representative: orbits.representative(i).points(),
            }
        })
        .collect();
    Ok(OrbitReport {
        v: g.degree(),
        k,
        order: g.order().to_string(),
        orbits: rows,
        distance_matrix: orbits.distance_matrix(),
    })
}

impl OrbitReport {
    fn render(&self, format: Format) -> String {
        let join = |xs: &[usize], sep: &str| xs.iter().map(usize::to_string).collect::<Vec<_>>().join(sep);
        let mut out = String::new();
        match format {
            Format::Json => {
                out = serde_json::to_string_pretty(self).expect("report serialises");
                out.push('\n');
            }
            Format::Csv => {
                let _ = writeln!(out, "index,size,stabilizer_order,design_distances,representative");
                for r in &self.orbits {
                    let dists = r.design_distances.as_deref().map(|d| join(d, " ")).unwrap_or_default();
                    let _ = writeln!(
                        out,
                        "{},{},{},{},{}",
                        r.index,
                        r.size,
                        r.stabilizer_order,
                        dists,
                        join(&r.representative, " ")
                    );
                }
            }
            Format::Text => {
                let _ = writeln!(
                    out,
                    "group of order {} on {} points, {} orbits on {}-subsets",
                    self.order,
                    self.v,
                    self.orbits.len(),
                    self.k
                );
                for r in &self.orbits {
                    let _ = write!(
                        out,
                        "orbit {}: size {}, stabiliser order {}, representative {{{}}}",
                        r.index,
                        r.size,
                        r.stabilizer_order,
                        join(&r.representative, ",")
                    );
                    if let Some(d) = &r.design_distances {
                        let _ = write!(out, ", distances from design {}", join(d, ","));
                    }
                    out.push('\n');
                }
                let _ = writeln!(out, "minimum distances between orbits");
                for row in &self.distance_matrix {
                    let _ = writeln!(out, "  {}", join(row, " "));
                }
            }
        }
        out
    }
}
