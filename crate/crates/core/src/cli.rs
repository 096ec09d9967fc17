//! Command-line surface.
//!
//! Exposes the library as CSV-emitting subcommands. Every artifact starts
//! with a comment header recording the resolved configuration, and identical
//! invocations produce byte-identical files.
//!
//! Exit codes: 0 success (for `certify`: spectrally nonnegative), 1 usage or
//! runtime error, 2 non-positive-definiteness witness found, 3 inconclusive.

use crate::certifier::{asymptotic_deviation, certify_with, sign_map, SpectralRoute};
use crate::gram::{circle_gaussian_gram, circle_gaussian_spectrum, min_eig_sym, witness_search};
use crate::kernels::{gauss_density_h2, HmDistribution, RadialProfile};
use crate::transforms::{forward_grid, QuadratureConfig, RadialCutoff, Space};
use clap::{Args, Parser, Subcommand};
use std::fs;
use std::path::PathBuf;
use std::str::FromStr;

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser, Debug)]
#[command(name = "hypk", version, about = "Spherical transforms and positive-definiteness certification of radial kernels on hyperbolic spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct TolArgs {
    /// Absolute quadrature tolerance
    #[arg(long, default_value_t = 1e-12)]
    abs_tol: f64,
    /// Relative quadrature tolerance
    #[arg(long, default_value_t = 1e-10)]
    rel_tol: f64,
    /// Radial cutoff; omit for automatic tail-bound selection
    #[arg(long)]
    rmax: Option<f64>,
}

impl TolArgs {
    fn config(&self) -> Result<QuadratureConfig, String> {
        if self.abs_tol <= 0.0 || self.abs_tol.is_nan() || self.rel_tol < 0.0 || self.rel_tol.is_nan() {
            return Err("tolerances must be positive".into());
        }
        Ok(QuadratureConfig {
            abs_tol: self.abs_tol,
            rel_tol: self.rel_tol,
            r_max: match self.rmax {
                Some(r) if r > 0.0 => RadialCutoff::Fixed(r),
                Some(r) => return Err(format!("--rmax must be positive, got {r}")),
                None => RadialCutoff::Auto,
            },
            max_refinements: 20_000,
        })
    }

    fn note(&self) -> String {
        format!(
            "abs_tol={} rel_tol={} rmax={}",
            self.abs_tol,
            self.rel_tol,
            self.rmax.map_or("auto".to_string(), |r| r.to_string())
        )
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Spherical transform of a kernel over a t grid, as CSV "t,fhat,err"
    Transform {
        /// h2 or h3
        #[arg(long)]
        space: String,
        /// Kernel descriptor, e.g. gaussian:lambda=1, sech:a=2, wishart:a=0.5
        #[arg(long)]
        kernel: String,
        /// Spectral grid start:stop:step (inclusive of start; stop included
        /// when it lands within half a step)
        #[arg(long)]
        t: String,
        #[command(flatten)]
        tols: TolArgs,
        /// Output CSV path
        #[arg(long)]
        out: PathBuf,
    },
    /// Certify or refute positive-definiteness; prints the verdict line
    Certify {
        #[arg(long)]
        space: String,
        #[arg(long)]
        kernel: String,
        /// Scan bound in t
        #[arg(long)]
        tmax: f64,
        /// quadrature (default) or closed-form
        #[arg(long, default_value = "quadrature")]
        route: String,
        #[command(flatten)]
        tols: TolArgs,
        /// Optional path for the verdict line
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sign map of a kernel family over a (lambda, t) grid, CSV "lambda,t,value,sign"
    Signmap {
        #[arg(long)]
        space: String,
        /// Family name: gaussian (parameter lambda), sech or wishart (parameter a)
        #[arg(long, default_value = "gaussian")]
        kernel: String,
        /// Parameter grid start:stop:step
        #[arg(long)]
        lambda: String,
        /// Spectral grid start:stop:step
        #[arg(long)]
        t: String,
        #[command(flatten)]
        tols: TolArgs,
        #[arg(long)]
        out: PathBuf,
    },
    /// Random-configuration Gram eigenvalue search
    Gram {
        #[arg(long)]
        space: String,
        #[arg(long)]
        kernel: String,
        /// Points per configuration
        #[arg(long, default_value_t = 100)]
        n: usize,
        /// Number of seeded trials
        #[arg(long, default_value_t = 20)]
        trials: usize,
        /// Ball radius for sampling
        #[arg(long, default_value_t = 5.0)]
        radius: f64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Also dump the best configuration's Gram matrix
        #[arg(long)]
        dump_matrix: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Exact circulant spectrum of the circle Gaussian kernel, CSV "k,eigenvalue"
    Circle {
        #[arg(long)]
        lambda: f64,
        /// Number of equally spaced points
        #[arg(long)]
        n: Option<usize>,
        /// Scan N = 2.. up to this bound for the first negative eigenvalue
        #[arg(long)]
        find_negative: Option<usize>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Density tables of the Herschel-Maxwell and Gaussian families, CSV "r,hm,gauss"
    Density {
        /// Herschel-Maxwell parameters as n=2,a=4
        #[arg(long)]
        hm: String,
        /// Gaussian parameter as lambda=1.66
        #[arg(long)]
        gauss: String,
        /// Radial grid start:stop:step
        #[arg(long)]
        r: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Relative deviation of the H2 Gaussian transform from its large-lambda expansion
    Asymptotic {
        #[arg(long)]
        lambda: f64,
        /// Upper end of the t range
        #[arg(long)]
        tmax: f64,
        #[command(flatten)]
        tols: TolArgs,
        /// Optional CSV "t,quadrature,asymptotic"
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Grid syntax "start:stop:step": start, start+step, ..., inclusive of any
/// point within step/2 past stop, so "0:10:0.05" lands exactly on 10.
fn parse_grid(spec: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("grid '{spec}' must be start:stop:step"));
    }
    let start: f64 = parts[0].parse().map_err(|_| format!("bad grid start '{}'", parts[0]))?;
    let stop: f64 = parts[1].parse().map_err(|_| format!("bad grid stop '{}'", parts[1]))?;
    let step: f64 = parts[2].parse().map_err(|_| format!("bad grid step '{}'", parts[2]))?;
    if step <= 0.0 || step.is_nan() || stop < start {
        return Err(format!("grid '{spec}' needs step > 0 and stop >= start"));
    }
    let count = ((stop - start) / step + 0.5).floor() as usize;
    Ok((0..=count).map(|i| start + step * i as f64).collect())
}

fn parse_kv(spec: &str, key: &str) -> Result<f64, String> {
    for part in spec.split(',') {
        if let Some((k, v)) = part.split_once('=') {
            if k.trim() == key {
                return v
                    .trim()
                    .parse()
                    .map_err(|_| format!("bad value for {key} in '{spec}'"));
            }
        }
    }
    Err(format!("missing {key}= in '{spec}'"))
}

fn write_artifact(path: &PathBuf, content: &str) -> Result<(), String> {
    fs::write(path, content).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

/// Runs the command line given full argv (including the program name) and
/// returns the process exit code.
pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            // clap prints help/version on stdout with success status
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

fn dispatch(cmd: Command) -> Result<i32, String> {
    match cmd {
        Command::Transform {
            space,
            kernel,
            t,
            tols,
            out,
        } => {
            let space = Space::from_str(&space).map_err(|e| e.to_string())?;
            let profile = RadialProfile::from_str(&kernel).map_err(|e| e.to_string())?;
            let grid = parse_grid(&t)?;
            let q = tols.config()?;
            let samples =
                forward_grid(space, &profile, &grid, &q).map_err(|e| e.to_string())?;
            let mut content = format!(
                "# cmd=transform space={} kernel={} t={} {} version={}\n",
                space.label(),
                profile,
                t,
                tols.note(),
                VERSION
            );
            content.push_str(&samples.to_csv());
            write_artifact(&out, &content)?;
            Ok(0)
        }
        Command::Certify {
            space,
            kernel,
            tmax,
            route,
            tols,
            out,
        } => {
            let space = Space::from_str(&space).map_err(|e| e.to_string())?;
            let profile = RadialProfile::from_str(&kernel).map_err(|e| e.to_string())?;
            let route = match route.as_str() {
                "quadrature" => SpectralRoute::Quadrature,
                "closed-form" => SpectralRoute::ClosedForm,
                other => return Err(format!("unknown route '{other}'")),
            };
            let q = tols.config()?;
            let verdict = certify_with(space, &profile, tmax, &q, route);
            let line = format!(
                "# cmd=certify space={} kernel={} tmax={tmax} route={route:?} {} version={}\n{verdict}\n",
                space.label(),
                profile,
                tols.note(),
                VERSION
            );
            print!("{line}");
            if let Some(path) = out {
                write_artifact(&path, &line)?;
            }
            Ok(verdict.exit_code())
        }
        Command::Signmap {
            space,
            kernel,
            lambda,
            t,
            tols,
            out,
        } => {
            let space = Space::from_str(&space).map_err(|e| e.to_string())?;
            let lambda_grid = parse_grid(&lambda)?;
            let t_grid = parse_grid(&t)?;
            let q = tols.config()?;
            let family: Box<dyn Fn(f64) -> RadialProfile + Sync> = match kernel.as_str() {
                "gaussian" => Box::new(|l| RadialProfile::Gaussian { lambda: l }),
                "sech" => Box::new(|a| RadialProfile::Sech { a }),
                "wishart" => Box::new(|a| RadialProfile::Wishart { a }),
                other => return Err(format!("unknown kernel family '{other}'")),
            };
            if lambda_grid.iter().any(|&l| l <= 0.0) {
                return Err("family parameters must be positive".into());
            }
            let map = sign_map(space, family.as_ref(), &lambda_grid, &t_grid, &q);
            let mut content = format!(
                "# cmd=signmap space={} kernel={kernel} lambda={lambda} t={t} {} version={}\n",
                space.label(),
                tols.note(),
                VERSION
            );
            for note in &map.notes {
                content.push_str(&format!("# cell-failure {note}\n"));
            }
            content.push_str(&map.to_csv());
            write_artifact(&out, &content)?;
            Ok(0)
        }
        Command::Gram {
            space,
            kernel,
            n,
            trials,
            radius,
            seed,
            dump_matrix,
            out,
        } => {
            let space = Space::from_str(&space).map_err(|e| e.to_string())?;
            let profile = RadialProfile::from_str(&kernel).map_err(|e| e.to_string())?;
            if radius <= 0.0 {
                return Err("--radius must be positive".into());
            }
            let report = witness_search(space, &profile, n, trials, radius, seed)
                .map_err(|e| e.to_string())?;
            let mut content = format!(
                "# cmd=gram space={} kernel={} n={n} trials={trials} radius={radius} seed={seed} version={}\n",
                space.label(),
                profile,
                VERSION
            );
            content.push_str(&report.to_csv(space, &profile, dump_matrix));
            write_artifact(&out, &content)?;
            println!("min_eig={} (best seed {})", report.min_eig, report.best_config.seed);
            Ok(0)
        }
        Command::Circle {
            lambda,
            n,
            find_negative,
            out,
        } => {
            if lambda <= 0.0 {
                return Err("--lambda must be positive".into());
            }
            let mut content = format!(
                "# cmd=circle lambda={lambda} n={} find_negative={} version={}\n",
                n.map_or("none".into(), |v| v.to_string()),
                find_negative.map_or("none".into(), |v| v.to_string()),
                VERSION
            );
            match (n, find_negative) {
                (Some(n), _) if n >= 2 => {
                    let spec = circle_gaussian_spectrum(lambda, n);
                    content.push_str("k,eigenvalue\n");
                    for (k, v) in spec.iter().enumerate() {
                        content.push_str(&format!("{k},{v}\n"));
                    }
                    write_artifact(&out, &content)?;
                    Ok(0)
                }
                (None, Some(bound)) => {
                    content.push_str("n,min_eigenvalue,negative\n");
                    let mut found = None;
                    for m in 2..=bound {
                        let min = circle_gaussian_spectrum(lambda, m)
                            .into_iter()
                            .fold(f64::INFINITY, f64::min);
                        let neg = min < -1e-12;
                        content.push_str(&format!("{m},{min},{neg}\n"));
                        if neg && found.is_none() {
                            found = Some((m, min));
                            // cross-check the circulant route against the
                            // dense eigensolver before reporting
                            let dense = min_eig_sym(&circle_gaussian_gram(lambda, m))
                                .map_err(|e| e.to_string())?;
                            if (dense - min).abs() > 1e-10 {
                                return Err(format!(
                                    "circulant/eigensolver disagreement at N={m}: {min} vs {dense}"
                                ));
                            }
                        }
                    }
                    write_artifact(&out, &content)?;
                    match found {
                        Some((m, min)) => {
                            println!("first negative eigenvalue at N={m}: {min}");
                            Ok(0)
                        }
                        None => {
                            println!("no negative eigenvalue up to N={bound}");
                            Ok(3)
                        }
                    }
                }
                _ => Err("pass --n N (spectrum) or --find-negative BOUND (scan)".into()),
            }
        }
        Command::Density { hm, gauss, r, out } => {
            let n = parse_kv(&hm, "n")?;
            let a = parse_kv(&hm, "a")?;
            let lambda = parse_kv(&gauss, "lambda")?;
            if n != 2.0 && n != 3.0 {
                return Err("density table supports n=2 or n=3".into());
            }
            let dist = HmDistribution::new(n as u32, a).map_err(|e| e.to_string())?;
            if lambda <= 0.0 {
                return Err("gaussian lambda must be positive".into());
            }
            let grid = parse_grid(&r)?;
            let mut content = format!(
                "# cmd=density hm=n={n},a={a} gauss=lambda={lambda} r={r} version={}\n",
                VERSION
            );
            content.push_str("r,hm,gauss\n");
            for &radius in &grid {
                content.push_str(&format!(
                    "{radius},{},{}\n",
                    dist.density(radius),
                    gauss_density_h2(lambda, radius)
                ));
            }
            write_artifact(&out, &content)?;
            Ok(0)
        }
        Command::Asymptotic {
            lambda,
            tmax,
            tols,
            out,
        } => {
            if lambda <= 0.0 || tmax <= 0.0 {
                return Err("--lambda and --tmax must be positive".into());
            }
            let q = tols.config()?;
            let dev = asymptotic_deviation(lambda, tmax, &q).map_err(|e| e.to_string())?;
            println!("max_relative_deviation={dev}");
            if let Some(path) = out {
                let profile = RadialProfile::Gaussian { lambda };
                let grid: Vec<f64> = (0..61).map(|i| tmax * i as f64 / 60.0).collect();
                let samples =
                    forward_grid(Space::H2, &profile, &grid, &q).map_err(|e| e.to_string())?;
                let mut content = format!(
                    "# cmd=asymptotic lambda={lambda} tmax={tmax} {} version={} max_relative_deviation={dev}\n",
                    tols.note(),
                    VERSION
                );
                // the expansion describes the radial integral, i.e. the
                // transform divided by the angular factor 2 pi
                content.push_str("t,quadrature_over_2pi,asymptotic\n");
                for (i, &t) in grid.iter().enumerate() {
                    content.push_str(&format!(
                        "{t},{},{}\n",
                        samples.values[i] / (2.0 * std::f64::consts::PI),
                        crate::kernels::gaussian_asymptotic_h2(lambda, t)
                    ));
                }
                write_artifact(&path, &content)?;
            }
            Ok(0)
        }
    }
}
