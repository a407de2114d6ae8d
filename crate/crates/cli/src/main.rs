use std::fs;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use oneplane::analyze::{
    is_near_optimal, regularity_checks, verify_bounds, vertex_connectivity, BoundOptions,
    DegreeProfile, Facts,
};
use oneplane::format::{parse, serialize, to_dot};
use oneplane::generators::{Family, FamilySpec};
use oneplane::maximality::{immovability_witness, maximality_witness};
use oneplane::properties::fuzz;
use oneplane::transform::{planarization, skeleton, SkeletonStrategy};
use oneplane::{Error, OnePlaneGraph};

#[derive(Parser)]
#[command(name = "oneplane", version, about = "Build and check 1-plane drawings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a family member or load a fixture and write it as .1pg.
    Generate {
        family: FamilyArg,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Fixture file, for `fixture`.
        #[arg(long)]
        path: Option<PathBuf>,
        /// Output file. Defaults to `<family><k>.1pg`; fixtures are only
        /// written when given.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Validate a drawing and run the requested checks.
    Check {
        path: PathBuf,
        #[arg(long)]
        maximal: bool,
        #[arg(long)]
        immovable: bool,
        #[arg(long)]
        bounds: bool,
    },
    /// Write the planarization as Graphviz DOT.
    ExportDot {
        path: PathBuf,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Saturate random drawings and check the property suite on each.
    Fuzz {
        #[arg(long, default_value_t = 50)]
        count: usize,
        /// Vertex count range `a..b` (inclusive).
        #[arg(long = "n", default_value = "6..14", value_parser = parse_range)]
        orders: RangeInclusive<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print structural statistics of a drawing.
    Stats { path: PathBuf },
}

#[derive(Copy, Clone, ValueEnum)]
enum FamilyArg {
    H,
    Hh,
    Xh,
    Yh,
    M,
    Xm,
    Fixture,
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected `a..b`, got `{s}`"))?;
    let a: usize = a.parse().map_err(|_| format!("bad lower end `{a}`"))?;
    let b: usize = b
        .trim_start_matches('=')
        .parse()
        .map_err(|_| format!("bad upper end `{b}`"))?;
    if a < 4 || a > b {
        return Err(format!("need 4 <= a <= b, got {a}..{b}"));
    }
    Ok(a..=b)
}

/// Failed checks exit with 1; unusable input with 2.
enum Failure {
    Check,
    Input(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Generate {
            family,
            k,
            path,
            out,
        } => generate(family, k, path, out),
        Command::Check {
            path,
            maximal,
            immovable,
            bounds,
        } => check(&path, maximal, immovable, bounds),
        Command::ExportDot { path, out } => export_dot(&path, out.as_deref()),
        Command::Fuzz {
            count,
            orders,
            seed,
        } => run_fuzz(count, orders, seed),
        Command::Stats { path } => stats(&path),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn load(path: &Path) -> Result<OnePlaneGraph, Error> {
    parse(&fs::read_to_string(path)?)
}

fn summary(g: &OnePlaneGraph) -> String {
    format!(
        "n={} cr={} edges={}",
        g.n(),
        g.crossing_count(),
        g.edge_count()
    )
}

fn generate(family: FamilyArg, k: usize, path: Option<PathBuf>, out: Option<PathBuf>) -> Outcome {
    let (family, name) = match family {
        FamilyArg::H => (Family::H, "h"),
        FamilyArg::Hh => (Family::HH, "hh"),
        FamilyArg::Xh => (Family::XH, "xh"),
        FamilyArg::Yh => (Family::YH, "yh"),
        FamilyArg::M => (Family::M, "m"),
        FamilyArg::Xm => (Family::XM, "xm"),
        FamilyArg::Fixture => {
            let p = path.ok_or_else(|| Error::BadParameter("fixture needs --path".into()))?;
            (Family::Fixture(p), "fixture")
        }
    };
    let is_fixture = matches!(family, Family::Fixture(_));
    let g = FamilySpec::new(family, k).build()?;
    let out = out.or_else(|| (!is_fixture).then(|| PathBuf::from(format!("{name}{k}.1pg"))));
    if let Some(out) = out {
        fs::write(&out, serialize(&g)).map_err(Error::from)?;
    }
    println!("{}", summary(&g));
    Ok(())
}

fn check(path: &Path, maximal: bool, immovable: bool, bounds: bool) -> Outcome {
    let g = load(path)?;
    println!("valid {}", summary(&g));
    println!(
        "faces {} fake={} true={}",
        g.faces().len(),
        g.faces().fake_count(),
        g.faces().true_count()
    );
    let kappa = vertex_connectivity(&g.underlying())?;
    println!("connectivity {kappa}");
    let mut failed = false;

    let witness = maximality_witness(&g);
    if maximal {
        match &witness {
            None => println!("maximal PASS"),
            Some(w) => {
                println!("maximal FAIL witness {w}");
                failed = true;
            }
        }
    }
    if immovable {
        match immovability_witness(&g) {
            Ok(None) => println!("immovable PASS"),
            Ok(Some((e, _))) => {
                println!("immovable FAIL witness {e} redraws without crossing");
                failed = true;
            }
            Err(Error::NotMaximal) => {
                println!("immovable FAIL drawing is not maximal");
                failed = true;
            }
            Err(e) => return Err(e.into()),
        }
    }
    if bounds {
        if witness.is_some() {
            println!("bounds FAIL drawing is not maximal");
            failed = true;
        } else {
            let facts = Facts {
                connectivity: kappa,
                maximal: true,
                immovable: None,
            };
            let report = verify_bounds(&g, &BoundOptions { facts: Some(facts) })?;
            for line in report.lines() {
                println!("{line}");
            }
            failed |= !report.all_pass();
        }
    }
    if failed {
        Err(Failure::Check)
    } else {
        Ok(())
    }
}

fn export_dot(path: &Path, out: Option<&Path>) -> Outcome {
    let dot = to_dot(&load(path)?);
    match out {
        Some(out) => fs::write(out, dot).map_err(Error::from)?,
        None => print!("{dot}"),
    }
    Ok(())
}

fn run_fuzz(count: usize, orders: RangeInclusive<usize>, seed: u64) -> Outcome {
    if count == 0 {
        return Err(Error::BadParameter("--count must be at least 1".into()).into());
    }
    let report = fuzz(count, orders, seed)?;
    for i in &report.instances {
        for v in &i.violations {
            println!(
                "violation instance={} n={} seed={} {v}",
                i.index, i.n, i.seed
            );
        }
    }
    let violations = report.violation_count();
    println!("instances {count} violations {violations}");
    if violations > 0 {
        Err(Failure::Check)
    } else {
        Ok(())
    }
}

fn stats(path: &Path) -> Outcome {
    let g = load(path)?;
    let under = g.underlying();
    println!("{}", summary(&g));
    println!(
        "faces {} fake={} true={}",
        g.faces().len(),
        g.faces().fake_count(),
        g.faces().true_count()
    );
    println!("connectivity {}", vertex_connectivity(&under)?);
    let profile = DegreeProfile::of(&under);
    let degrees: Vec<String> = profile
        .histogram
        .iter()
        .map(|(d, c)| format!("{d}:{c}"))
        .collect();
    println!("degrees {}", degrees.join(" "));
    println!(
        "lambda {} {} {}",
        profile.lambda1, profile.lambda2, profile.lambda3
    );
    println!("triangulated {}", planarization(&g).is_triangulation);
    println!("near-optimal {}", is_near_optimal(&g).holds);
    let s = skeleton(&g, &SkeletonStrategy::LexMax)?;
    println!(
        "skeleton edges={} red={} blue={}",
        s.plane.edge_count(),
        s.red_count(),
        s.blue_count()
    );
    if let Ok(r) = regularity_checks(&s.plane) {
        println!(
            "skeleton-regularity 56-regular={} low-degree={}",
            r.is_56_regular, r.low_degree_value
        );
    }
    Ok(())
}
