use std::path::{Path, PathBuf};
use std::process::ExitCode;

use ballconv::arc::SymmetricPolygon;
use ballconv::caratheodory::caratheodory_estimate;
use ballconv::covering::{covering_semicontinuity_probe, illumination_number_2d, verify_cover};
use ballconv::generation::{generation_search, GenerationOutcome};
use ballconv::io::{
    digest, example_body, from_json, to_json, Assertion, BodyFile, ExampleParams, ExperimentReport,
    PointSetFile, RegionFile,
};
use ballconv::ops::{ball_hull, spindle, spindle_hull};
use ballconv::separation::{
    separate_from_hyperplane, separate_from_point, separate_sets_2d, HyperplaneQuery, Side,
};
use ballconv::svg::{render, Figure};
use ballconv::{covering, ConvexBody, GeomError, Point, PointSet, Region, Tolerance};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "ballconv",
    version,
    about = "Ball and spindle convexity with respect to a convex body"
)]
struct Cli {
    /// Set-equality tolerance (Hausdorff distance).
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write the result here instead of standard output.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum HullMode {
    Ball,
    Spindle,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProbeMode {
    Bplus,
    Cover,
}

#[derive(Clone, Copy, ValueEnum)]
enum Perturb {
    /// C_i = (1 + 1/i) C.
    Scale,
    /// X_i = X + v / i.
    Shift,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Below,
    Above,
}

#[derive(Subcommand)]
enum Command {
    /// Ball hull or iterated spindle hull of a point set.
    Hull {
        #[arg(long)]
        body: PathBuf,
        #[arg(long)]
        points: PathBuf,
        #[arg(long, value_enum, default_value = "ball")]
        mode: HullMode,
        #[arg(long, default_value_t = 32)]
        max_iter: usize,
    },
    /// The spindle of two points.
    Spindle {
        #[arg(long)]
        body: PathBuf,
        #[arg(long)]
        p: String,
        #[arg(long)]
        q: String,
    },
    /// A translate of C containing K and separating it from a point,
    /// hyperplane or second set.
    Separate {
        #[arg(long)]
        body: PathBuf,
        #[arg(long)]
        set: PathBuf,
        #[arg(long, conflicts_with_all = ["hyperplane", "other"])]
        point: Option<String>,
        /// "n1,n2[,n3];c" for the hyperplane n·x = c.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "other")]
        hyperplane: Option<String>,
        /// Side of the hyperplane holding K.
        #[arg(long, value_enum, default_value = "below")]
        side: SideArg,
        #[arg(long)]
        other: Option<PathBuf>,
    },
    /// Arc-distance of two points in a symmetric polygon norm.
    ArcDist {
        #[arg(long)]
        body: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
    /// Arc-distance disk of radius rho about the origin.
    ArcDisk {
        #[arg(long)]
        body: PathBuf,
        #[arg(long)]
        rho: f64,
    },
    /// Seeded lower bound for the ball Carathéodory number.
    Caratheodory {
        #[arg(long)]
        body: PathBuf,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 6)]
        max_points: usize,
    },
    /// Search for at most k points generating a C-ball convex target.
    Kgen {
        #[arg(long)]
        body: PathBuf,
        #[arg(long)]
        target: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Covering number of a polygon with a cover certificate.
    Illuminate {
        #[arg(long)]
        body: PathBuf,
    },
    /// Stability probes for B+ and for covering numbers.
    ProbeStability {
        #[arg(long, value_enum)]
        mode: ProbeMode,
        #[arg(long)]
        body: PathBuf,
        /// Point set X (bplus mode).
        #[arg(long)]
        points: Option<PathBuf>,
        /// Inner body L with L ⊆ K ⊆ δL (cover mode).
        #[arg(long)]
        inner: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "scale")]
        perturb: Perturb,
        #[arg(long, default_value_t = 10)]
        steps: usize,
    },
    /// SVG figure of bodies and point sets.
    Plot {
        #[arg(long, num_args = 1.., required = true)]
        inputs: Vec<PathBuf>,
    },
    /// A named example body with its companion files.
    Example {
        name: String,
        #[arg(long, default_value_t = 3)]
        dim: usize,
        #[arg(long, default_value_t = 4)]
        k: usize,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 0.1)]
        depth: f64,
        #[arg(long, default_value_t = 3.0)]
        p: f64,
        #[arg(long, default_value_t = 16)]
        samples: usize,
    },
}

enum Failure {
    Invalid(String),
}

impl From<GeomError> for Failure {
    fn from(e: GeomError) -> Self {
        Failure::Invalid(e.to_string())
    }
}

type Outcome = std::result::Result<(String, bool), Failure>;

fn read_text(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}

fn load_body(path: &Path, tol: &Tolerance) -> Result<ConvexBody, Failure> {
    let f: BodyFile = from_json(&read_text(path)?)?;
    Ok(f.to_body(tol)?)
}

fn load_points(path: &Path) -> Result<PointSet, Failure> {
    let f: PointSetFile = from_json(&read_text(path)?)?;
    Ok(f.to_set()?)
}

fn parse_point(s: &str) -> Result<Point, Failure> {
    let coords = s
        .split(',')
        .map(|t| t.trim().parse::<f64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure::Invalid(format!("bad point {s:?}: {e}")))?;
    Ok(Point::try_new(coords)?)
}

fn parse_hyperplane(s: &str, side: SideArg) -> Result<HyperplaneQuery, Failure> {
    let (n, c) = s
        .split_once(';')
        .ok_or_else(|| Failure::Invalid(format!("bad hyperplane {s:?}, expected \"n1,n2;c\"")))?;
    let offset = c
        .trim()
        .parse::<f64>()
        .map_err(|e| Failure::Invalid(format!("bad offset {c:?}: {e}")))?;
    Ok(HyperplaneQuery {
        normal: parse_point(n)?,
        offset,
        side: match side {
            SideArg::Below => Side::Below,
            SideArg::Above => Side::Above,
        },
    })
}

fn json_out(v: &Value) -> Result<String, Failure> {
    Ok(to_json(v)?)
}

fn report_out(r: &ExperimentReport) -> Result<String, Failure> {
    json_out(&serde_json::to_value(r).map_err(|e| Failure::Invalid(e.to_string()))?)
}

fn region_value(r: &Region, dim: usize) -> Result<Value, Failure> {
    serde_json::to_value(RegionFile::from_region(r, dim))
        .map_err(|e| Failure::Invalid(e.to_string()))
}

fn with_fields(mut base: Value, extra: Value) -> Value {
    if let (Some(b), Some(e)) = (base.as_object_mut(), extra.as_object()) {
        for (k, v) in e {
            b.insert(k.clone(), v.clone());
        }
    }
    base
}

fn file_digest(paths: &[&Path], args: &str) -> Result<String, Failure> {
    let mut parts: Vec<Vec<u8>> = Vec::new();
    for p in paths {
        parts.push(read_text(p)?.into_bytes());
    }
    parts.push(args.as_bytes().to_vec());
    let refs: Vec<&[u8]> = parts.iter().map(Vec::as_slice).collect();
    Ok(digest(&refs))
}

fn run(cli: &Cli, tol: &Tolerance) -> Outcome {
    match &cli.command {
        Command::Hull {
            body,
            points,
            mode,
            max_iter,
        } => {
            let c = load_body(body, tol)?;
            let a = load_points(points)?;
            let v = match mode {
                HullMode::Ball => region_value(&ball_hull(&c, &a, tol)?, c.dim())?,
                HullMode::Spindle => {
                    let s = spindle_hull(&c, &a, *max_iter, tol)?;
                    with_fields(
                        region_value(&s.inner, c.dim())?,
                        json!({ "gap": finite(s.gap), "iterations": s.iterations }),
                    )
                }
            };
            Ok((json_out(&v)?, true))
        }
        Command::Spindle { body, p, q } => {
            let c = load_body(body, tol)?;
            let s = spindle(&c, &parse_point(p)?, &parse_point(q)?, tol)?;
            let v = with_fields(
                region_value(&s.region, c.dim())?,
                json!({ "c_distance": s.c_distance, "near_critical": s.near_critical }),
            );
            Ok((json_out(&v)?, true))
        }
        Command::Separate {
            body,
            set,
            point,
            hyperplane,
            side,
            other,
        } => {
            let c = load_body(body, tol)?;
            let k = load_body(set, tol)?;
            let cert = match (point, hyperplane, other) {
                (Some(p), None, None) => separate_from_point(&c, &k, &parse_point(p)?, tol)?,
                (None, Some(h), None) => {
                    separate_from_hyperplane(&c, &k, &parse_hyperplane(h, *side)?, tol)?
                }
                (None, None, Some(o)) => separate_sets_2d(&c, &k, &load_body(o, tol)?, tol)?,
                _ => {
                    return Err(Failure::Invalid(
                        "give exactly one of --point, --hyperplane, --other".into(),
                    ))
                }
            };
            Ok((json_out(&json!({ "certificate": cert }))?, true))
        }
        Command::ArcDist { body, p, q } => {
            let c = SymmetricPolygon::new(load_body(body, tol)?, tol)?;
            let d = c.arc_distance(&parse_point(p)?, &parse_point(q)?);
            Ok((json_out(&json!({ "arc_distance": d }))?, true))
        }
        Command::ArcDisk { body, rho } => {
            let c = SymmetricPolygon::new(load_body(body, tol)?, tol)?;
            let disk = c.arc_disk(*rho)?;
            let v = with_fields(
                region_value(&Region::Body(disk.polygon), 2)?,
                json!({ "rho": disk.rho }),
            );
            Ok((json_out(&v)?, true))
        }
        Command::Caratheodory {
            body,
            trials,
            max_points,
        } => {
            let c = load_body(body, tol)?;
            let est = caratheodory_estimate(&c, *trials, *max_points, cli.seed, tol)?;
            let bound = c.halfspaces().len() * c.dim();
            let report = ExperimentReport {
                command: "caratheodory".into(),
                seed: Some(cli.seed),
                tolerance: *tol,
                inputs_digest: file_digest(&[body], &format!("{trials} {max_points}"))?,
                outputs: json!({ "estimate": est, "facets_times_dim": bound }),
                assertions: vec![Assertion {
                    name: "estimate within facets times dimension".into(),
                    passed: est <= bound,
                }],
            };
            Ok((report_out(&report)?, report.passed()))
        }
        Command::Kgen { body, target, k } => {
            let c = load_body(body, tol)?;
            let p = load_body(target, tol)?;
            let v = match generation_search(&c, &p, *k, tol)? {
                GenerationOutcome::Certificate(cert) => {
                    json!({ "status": "certificate", "certificate": cert })
                }
                GenerationOutcome::Impossible { hitting_number } => {
                    json!({ "status": "impossible", "hitting_number": hitting_number })
                }
                GenerationOutcome::NotFound => json!({ "status": "not-found" }),
            };
            Ok((json_out(&v)?, true))
        }
        Command::Illuminate { body } => {
            let k = load_body(body, tol)?;
            let (n, cert) = illumination_number_2d(&k, tol)?;
            let ok = verify_cover(&k, &cert)?;
            let v = json!({ "number": n, "certificate": cert, "verified": ok });
            Ok((json_out(&v)?, ok))
        }
        Command::ProbeStability {
            mode,
            body,
            points,
            inner,
            perturb,
            steps,
        } => {
            let c = load_body(body, tol)?;
            match mode {
                ProbeMode::Bplus => {
                    let path = points
                        .as_ref()
                        .ok_or_else(|| Failure::Invalid("--points is required".into()))?;
                    let x = load_points(path)?;
                    let n = (*steps).max(1);
                    let (cs, xs): (Vec<ConvexBody>, Vec<PointSet>) = (1..=n)
                        .map(|i| {
                            let t = 1.0 / i as f64;
                            match perturb {
                                Perturb::Scale => (c.scale(1.0 + t), x.clone()),
                                Perturb::Shift => {
                                    let v = Point::new(vec![t; c.dim()]).scale(0.1);
                                    (c.clone(), x.translate(&v))
                                }
                            }
                        })
                        .unzip();
                    let r = covering::bplus_stability_probe(&cs, &xs, &c, &x, tol)?;
                    let report = ExperimentReport {
                        command: "probe-stability bplus".into(),
                        seed: None,
                        tolerance: *tol,
                        inputs_digest: file_digest(&[body, path], &format!("{n}"))?,
                        outputs: serde_json::to_value(&r)
                            .map_err(|e| Failure::Invalid(e.to_string()))?,
                        assertions: vec![Assertion {
                            name: "d_i <= c / i".into(),
                            passed: r.fit_holds,
                        }],
                    };
                    Ok((report_out(&report)?, report.passed()))
                }
                ProbeMode::Cover => {
                    let path = inner
                        .as_ref()
                        .ok_or_else(|| Failure::Invalid("--inner is required".into()))?;
                    let l = load_body(path, tol)?;
                    let (_, cert) = illumination_number_2d(&c, tol)?;
                    let ok = covering_semicontinuity_probe(&c, &l, &cert, tol)?;
                    let report = ExperimentReport {
                        command: "probe-stability cover".into(),
                        seed: None,
                        tolerance: *tol,
                        inputs_digest: file_digest(&[body, path], "")?,
                        outputs: json!({ "certificate": cert, "delta": 1.0 / cert.ratio.sqrt() }),
                        assertions: vec![Assertion {
                            name: "scaled copies cover L".into(),
                            passed: ok,
                        }],
                    };
                    Ok((report_out(&report)?, report.passed()))
                }
            }
        }
        Command::Plot { inputs } => {
            let mut figs = Vec::new();
            for path in inputs {
                figs.push(load_figure(path, tol)?);
            }
            Ok((render(&figs), true))
        }
        Command::Example {
            name,
            dim,
            k,
            n,
            depth,
            p,
            samples,
        } => {
            let params = ExampleParams {
                dim: *dim,
                k: *k,
                n: *n,
                depth: *depth,
                p: *p,
                samples: *samples,
            };
            let out = example_body(name, &params, tol)?;
            let v = json!({
                "body": out.body,
                "companion_bodies": out.companion_bodies,
                "companion_sets": out.companion_sets,
            });
            Ok((json_out(&v)?, true))
        }
    }
}

fn finite(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else {
        Value::Null
    }
}

fn load_figure(path: &Path, tol: &Tolerance) -> Result<Figure, Failure> {
    let text = read_text(path)?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    if let Ok(b) = from_json::<BodyFile>(&text) {
        let label = b.label.clone().unwrap_or(name);
        return Ok(Figure::Body(label, b.to_body(tol)?));
    }
    if let Ok(s) = from_json::<PointSetFile>(&text) {
        let label = s.label.clone().unwrap_or(name);
        return Ok(Figure::Points(label, s.to_set()?.points().to_vec()));
    }
    match from_json::<RegionFile>(&text)? {
        RegionFile::Body { body } => {
            let label = body.label.clone().unwrap_or(name);
            Ok(Figure::Body(label, body.to_body(tol)?))
        }
        _ => Err(Failure::Invalid(format!(
            "{}: region has nothing to draw",
            path.display()
        ))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut tol = Tolerance::default();
    if let Some(t) = cli.tol {
        if !(t > 0.0 && t.is_finite()) {
            eprintln!("error: --tol must be positive");
            return ExitCode::from(2);
        }
        tol.eps_set = t;
    }
    let (text, passed) = match run(&cli, &tol) {
        Ok(r) => r,
        Err(Failure::Invalid(m)) => {
            eprintln!("error: {m}");
            return ExitCode::from(2);
        }
    };
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if passed {
        ExitCode::SUCCESS
    } else {
        eprintln!("assertion failed");
        ExitCode::from(1)
    }
}
