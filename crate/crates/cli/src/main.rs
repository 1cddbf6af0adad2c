//! `toricap`: capacities, embedding verdicts and width bounds from polygon files.

mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use toricap::capacities::calg_sequence;
use toricap::lattice::text::{read_polygon, read_vertices};
use toricap::oracle::{brute_calg_table, sw_equals_nef};
use toricap::{
    embedding_verdict, width_bound_check, xi_width, CapacitySequence, ConcaveDomain,
    EmbeddingVerdict, Error, MomentPolygon, Rational, Result, ToricSurface, TorusDivisor,
};

use report::Table;

#[derive(Parser, Debug)]
#[command(name = "toricap", version, about = "Exact capacities of toric surfaces and toric domains")]
struct Cli {
    /// Worker threads for the enumerations (defaults to all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Add a rounded decimal column next to every exact value.
    #[arg(long, global = true)]
    decimal: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct Horizon {
    /// Largest k to compute.
    #[arg(long = "k-max", default_value_t = 100)]
    k_max: usize,
}

#[derive(Args, Debug, Clone, Copy)]
struct SearchBox {
    /// Support numbers are scanned in [0, box].
    #[arg(long = "box", default_value_t = 6)]
    bound: u32,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Algebraic capacities c^alg_k of the surface of a polygon.
    Capacities {
        polygon: PathBuf,
        #[command(flatten)]
        horizon: Horizon,
    },
    /// ECH capacities of a toric domain (concave, or convex/free).
    Ech {
        domain: PathBuf,
        #[command(flatten)]
        horizon: Horizon,
    },
    /// Capacity obstruction for embedding a concave domain into a toric surface.
    Embed {
        delta: PathBuf,
        omega: PathBuf,
        #[command(flatten)]
        horizon: Horizon,
    },
    /// Gromov (or Xi-) width estimate and the lattice-width bound.
    Width {
        polygon: PathBuf,
        /// Concave model domain; the unit ball when omitted.
        #[arg(long)]
        xi: Option<PathBuf>,
        #[command(flatten)]
        horizon: Horizon,
    },
    /// Lattice width and a minimising direction.
    LatticeWidth { polygon: PathBuf },
    /// Iterates the isoparametric transform on a divisor.
    TransformIp {
        polygon: PathBuf,
        /// Comma-separated coefficients, one per edge in canonical order.
        #[arg(long, allow_hyphen_values = true)]
        divisor: String,
    },
    /// Minimal resolution of the surface of a polygon.
    Resolve { polygon: PathBuf },
    /// Compares c^alg_k with an exhaustive scan.
    VerifyCalg {
        polygon: PathBuf,
        #[command(flatten)]
        horizon: Horizon,
        #[command(flatten)]
        search: SearchBox,
    },
    /// Compares c^alg_k with the Seiberg-Witten-side infimum.
    VerifySw {
        polygon: PathBuf,
        #[command(flatten)]
        horizon: Horizon,
        #[command(flatten)]
        search: SearchBox,
    },
    /// Width bound check for every .poly file in a directory.
    Corpus {
        dir: PathBuf,
        #[command(flatten)]
        horizon: Horizon,
    },
}

/// What the process reports besides its table.
enum Status {
    Ok,
    /// An obstruction or a failed verification.
    Negative,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let mut table = Table::new(cli.decimal);
    match run(cli.command, &mut table) {
        Ok(status) => {
            print!("{}", table.render());
            match status {
                Status::Ok => ExitCode::SUCCESS,
                Status::Negative => ExitCode::from(1),
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, t: &mut Table) -> Result<Status> {
    match command {
        Command::Capacities { polygon, horizon } => {
            let p = read_polygon(&polygon)?;
            t.header(&["k"]).rat_header("calg");
            for (k, c) in calg_sequence(&p, horizon.k_max)?.iter().enumerate() {
                t.row().int(k).rat(c);
            }
            Ok(Status::Ok)
        }
        Command::Ech { domain, horizon } => {
            let seq = domain_sequence(&domain)?;
            t.header(&["k"]).rat_header("ech").header(&["provenance"]);
            let provenance = seq.provenance().to_string();
            for (k, c) in seq.prefix(horizon.k_max)?.iter().enumerate() {
                t.row().int(k).rat(c).text(&provenance);
            }
            Ok(Status::Ok)
        }
        Command::Embed {
            delta,
            omega,
            horizon,
        } => {
            let d = read_concave(&delta)?;
            let o = read_polygon(&omega)?;
            let verdict = embedding_verdict(&d, &o, horizon.k_max)?;
            t.header(&["status", "k"])
                .rat_header("ech")
                .rat_header("alg")
                .header(&["horizon"]);
            match &verdict {
                EmbeddingVerdict::Obstructed { k, ech, alg } => {
                    t.row()
                        .text("OBSTRUCTED")
                        .int(*k)
                        .rat(ech)
                        .rat(alg)
                        .int(horizon.k_max);
                    Ok(Status::Negative)
                }
                EmbeddingVerdict::CompatibleUpTo { horizon } => {
                    t.row()
                        .text("COMPATIBLE_UP_TO_K")
                        .text("-")
                        .blank_rat()
                        .blank_rat()
                        .int(*horizon);
                    Ok(Status::Ok)
                }
            }
        }
        Command::Width {
            polygon,
            xi,
            horizon,
        } => {
            let p = read_polygon(&polygon)?;
            t.rat_header("estimate")
                .header(&["argmin", "stable", "horizon"])
                .rat_header("lattice_width")
                .header(&["direction", "bound_holds"]);
            match xi {
                None => {
                    let b = width_bound_check(&p, horizon.k_max)?;
                    let e = &b.estimate;
                    t.row()
                        .rat(&e.value)
                        .int(e.argmin)
                        .flag(e.stable)
                        .int(e.horizon)
                        .rat(&b.lattice_width)
                        .text(&b.direction.to_string())
                        .flag(b.holds);
                }
                Some(path) => {
                    // The lattice-width bound concerns balls only.
                    let shape = read_concave(&path)?;
                    let e = xi_width(&p, &shape, horizon.k_max)?;
                    let (w, dir) = p.lattice_width();
                    t.row()
                        .rat(&e.value)
                        .int(e.argmin)
                        .flag(e.stable)
                        .int(e.horizon)
                        .rat(&w)
                        .text(&dir.to_string())
                        .text("-");
                }
            }
            Ok(Status::Ok)
        }
        Command::LatticeWidth { polygon } => {
            let p = read_polygon(&polygon)?;
            let (w, dir) = p.lattice_width();
            t.rat_header("lattice_width").header(&["direction"]);
            t.row().rat(&w).text(&dir.to_string());
            Ok(Status::Ok)
        }
        Command::TransformIp { polygon, divisor } => {
            let p = read_polygon(&polygon)?;
            let s = ToricSurface::build(&p);
            let d = parse_divisor(&divisor)?;
            let chain = s.iterate_ip(&d)?;
            t.header(&["step", "divisor"])
                .rat_header("index")
                .header(&["h0", "nef"]);
            for (i, d) in chain.iter().enumerate() {
                t.row()
                    .int(i)
                    .text(&report::divisor(d))
                    .rat(&s.index(d))
                    .int(s.h0(d))
                    .flag(s.is_nef(d));
            }
            Ok(Status::Ok)
        }
        Command::Resolve { polygon } => {
            let p = read_polygon(&polygon)?;
            let s = ToricSurface::build(&p);
            let r = s.resolve();
            t.header(&["i", "ray"])
                .rat_header("self_intersection")
                .header(&["inserted"]);
            for (i, ray) in r.rays().iter().enumerate() {
                t.row()
                    .int(i)
                    .text(&ray.to_string())
                    .rat(r.self_intersection(i))
                    .flag(!s.rays().contains(ray));
            }
            Ok(Status::Ok)
        }
        Command::VerifyCalg {
            polygon,
            horizon,
            search,
        } => {
            let p = read_polygon(&polygon)?;
            let alg = calg_sequence(&p, horizon.k_max)?;
            let brute = brute_calg_table(&p, horizon.k_max, search.bound)?;
            t.header(&["k"])
                .rat_header("calg")
                .rat_header("brute")
                .header(&["equal", "witness"]);
            let mut all = true;
            for (c, b) in alg.iter().zip(&brute) {
                let equal = *c == b.value;
                all &= equal;
                t.row()
                    .int(b.k)
                    .rat(c)
                    .rat(&b.value)
                    .flag(equal)
                    .text(&report::divisor(&b.witness));
            }
            Ok(if all { Status::Ok } else { Status::Negative })
        }
        Command::VerifySw {
            polygon,
            horizon,
            search,
        } => {
            let p = read_polygon(&polygon)?;
            let rows = sw_equals_nef(&p, horizon.k_max, search.bound)?;
            t.header(&["k"])
                .rat_header("sw")
                .rat_header("calg")
                .header(&["equal", "witness", "certificate", "certificate_ok"]);
            let mut all = true;
            for r in &rows {
                all &= r.equal && r.certificate_ok;
                t.row()
                    .int(r.k)
                    .rat(&r.sw)
                    .rat(&r.calg)
                    .flag(r.equal)
                    .text(&report::divisor(&r.witness))
                    .text(&report::divisor(&r.certificate))
                    .flag(r.certificate_ok);
            }
            Ok(if all { Status::Ok } else { Status::Negative })
        }
        Command::Corpus { dir, horizon } => corpus(&dir, horizon.k_max, t),
    }
}

fn corpus(dir: &Path, k_max: usize, t: &mut Table) -> Result<Status> {
    let io = |e: std::io::Error| Error::Parse {
        line: 0,
        message: format!("{}: {e}", dir.display()),
    };
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(io)?
        .map(|e| e.map(|e| e.path()).map_err(io))
        .collect::<Result<Vec<_>>>()?;
    files.retain(|p| p.extension().is_some_and(|x| x == "poly"));
    files.sort();
    t.header(&["file"])
        .rat_header("estimate")
        .header(&["argmin", "stable", "horizon"])
        .rat_header("lattice_width")
        .header(&["bound_holds"]);
    for path in &files {
        let name = path
            .file_name()
            .map(|n| n.to_string_lossy().into_owned())
            .unwrap_or_default();
        let b = width_bound_check(&read_polygon(path)?, k_max)?;
        t.row()
            .text(&name)
            .rat(&b.estimate.value)
            .int(b.estimate.argmin)
            .flag(b.estimate.stable)
            .int(b.estimate.horizon)
            .rat(&b.lattice_width)
            .flag(b.holds);
    }
    Ok(Status::Ok)
}

fn read_concave(path: &Path) -> Result<ConcaveDomain> {
    ConcaveDomain::from_vertices(&read_vertices(path)?.vertices)
}

/// Concave regions (triangles included) use the weight decomposition;
/// anything else must be a convex domain or free polygon.
fn domain_sequence(path: &Path) -> Result<CapacitySequence> {
    let list = read_vertices(path)?;
    match ConcaveDomain::from_vertices(&list.vertices) {
        Ok(d) => Ok(CapacitySequence::concave(&d)),
        Err(concave_err) => {
            let p = MomentPolygon::new(list.vertices).map_err(|_| concave_err.clone())?;
            CapacitySequence::convex(&p)
        }
    }
}

fn parse_divisor(text: &str) -> Result<TorusDivisor> {
    let coeffs = text
        .split(',')
        .map(|s| {
            toricap::rational::parse(s.trim()).ok_or_else(|| Error::Parse {
                line: 0,
                message: format!("malformed divisor coefficient `{s}`"),
            })
        })
        .collect::<Result<Vec<Rational>>>()?;
    Ok(TorusDivisor::new(coeffs))
}
