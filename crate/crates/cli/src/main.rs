//! `qho-tunnel`: exact and asymptotic tunneling probabilities of the quantum
//! harmonic oscillator, emitted as CSV.
//!
//! Exit codes: 0 success, 2 usage error, 3 numerical failure.

mod plot;
mod range;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};
use qho_tunnel::analysis::{
    compare_sweep, csv::format_real, figure_dataset, lemma_check, ratio_sweep, Figure,
    FigureParams,
};
use qho_tunnel::asymptotics::{leading_term, second_order};
use qho_tunnel::quadrature::tunneling_exact;
use qho_tunnel::{Error, QuadratureConfigF64};

use range::IndexRange;

#[derive(Parser, Debug)]
#[command(name = "qho-tunnel", version, about = "Tunneling probabilities of harmonic oscillator eigenstates")]
struct Cli {
    /// Relative quadrature tolerance.
    #[arg(long, global = true, default_value_t = 1e-11)]
    rel_tol: f64,
    /// Absolute quadrature tolerance.
    #[arg(long, global = true, default_value_t = 1e-15)]
    abs_tol: f64,
    /// Output file, or `-` for stdout.
    #[arg(long, global = true, default_value = "-")]
    out: String,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("index").required(true).args(["n", "n_range"])))]
struct IndexArgs {
    /// A single quantum number.
    #[arg(long)]
    n: Option<usize>,
    /// Quantum numbers `a:b[:step]`, inclusive.
    #[arg(long)]
    n_range: Option<IndexRange>,
}

impl IndexArgs {
    fn values(&self) -> Vec<usize> {
        match (self.n, self.n_range) {
            (Some(n), _) => IndexRange::single(n).values(),
            (None, Some(r)) => r.values(),
            (None, None) => unreachable!("clap enforces the group"),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact tunneling probability by quadrature: `n,p_exact,err_estimate`.
    Exact(IndexArgs),
    /// Asymptotic formula of order 1 or 2: `n,p_asympt`.
    Asympt {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        order: u8,
        #[command(flatten)]
        index: IndexArgs,
    },
    /// Exact value against both asymptotic formulas.
    Compare {
        #[arg(long)]
        n_range: IndexRange,
    },
    /// The Airy-weighted integral F_n and the ratio F_inf/F_n.
    Fn {
        #[arg(long)]
        n_range: IndexRange,
    },
    /// Grid check that zeta(x)/(x^2-1) decreases from 2^(-2/3).
    Lemma {
        #[arg(long, default_value_t = 50.0)]
        x_max: f64,
        #[arg(long, default_value_t = 10_000)]
        grid: usize,
    },
    /// Dataset of figure 1 to 5.
    Fig {
        #[arg(long)]
        id: u8,
        /// Also write a gnuplot script next to the CSV (needs `--out FILE`).
        #[arg(long)]
        plot_script: bool,
    },
}

enum Failure {
    Usage(String),
    Numerical(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain { .. } | Error::NonFinite { .. } | Error::InvalidConfig(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Numerical(e.to_string()),
        }
    }
}

/// Rendered output: the main document plus any side files.
struct Rendered {
    main: String,
    extra: Vec<(String, String)>,
}

impl Rendered {
    fn single(main: String) -> Self {
        Rendered {
            main,
            extra: Vec::new(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Numerical(msg)) => {
            eprintln!("numerical failure: {msg}");
            ExitCode::from(3)
        }
    }
}

fn config(cli: &Cli) -> Result<QuadratureConfigF64, Failure> {
    if !(cli.rel_tol > 0.0 && cli.rel_tol.is_finite()) || !(cli.abs_tol > 0.0 && cli.abs_tol.is_finite()) {
        return Err(Failure::Usage("tolerances must be positive".into()));
    }
    Ok(QuadratureConfigF64 {
        rel_tol: cli.rel_tol,
        abs_tol: cli.abs_tol,
        ..Default::default()
    })
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let cfg = config(cli)?;
    let target = match cli.out.as_str() {
        "-" => None,
        path => Some(PathBuf::from(path)),
    };
    if let Command::Fig { plot_script: true, .. } = cli.command {
        if target.is_none() {
            return Err(Failure::Usage("--plot-script needs --out FILE".into()));
        }
    }
    if let Some(path) = &target {
        fs::File::create(path)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
    }

    let rendered = render(cli, &cfg);
    match (rendered, &target) {
        (Ok(r), None) => {
            let mut text = r.main;
            for (_, body) in &r.extra {
                text.push('\n');
                text.push_str(body);
            }
            io::stdout()
                .write_all(text.as_bytes())
                .map_err(|e| Failure::Usage(format!("cannot write stdout: {e}")))
        }
        (Ok(r), Some(path)) => write_files(path, &r),
        (Err(e), Some(path)) => {
            let _ = fs::remove_file(path);
            Err(e)
        }
        (Err(e), None) => Err(e),
    }
}

fn write_files(path: &Path, r: &Rendered) -> Result<(), Failure> {
    let io_err = |p: &Path, e: io::Error| Failure::Usage(format!("cannot write {}: {e}", p.display()));
    fs::write(path, &r.main).map_err(|e| io_err(path, e))?;
    for (name, body) in &r.extra {
        let p = path.with_file_name(name);
        fs::write(&p, body).map_err(|e| io_err(&p, e))?;
    }
    Ok(())
}

fn render(cli: &Cli, cfg: &QuadratureConfigF64) -> Result<Rendered, Failure> {
    match &cli.command {
        Command::Exact(index) => {
            let mut out = String::from("n,p_exact,err_estimate\n");
            let ns = index.values();
            let results: Result<Vec<_>, Error> = ns.iter().map(|&n| tunneling_exact(n, cfg)).collect();
            for r in results? {
                out += &format!("{},{},{}\n", r.n, format_real(r.value), format_real(r.err_estimate));
            }
            Ok(Rendered::single(out))
        }
        Command::Asympt { order, index } => {
            let ns = index.values();
            require_positive(&ns)?;
            let mut out = String::from("n,p_asympt\n");
            for n in ns {
                let r = if *order == 1 { leading_term::<f64>(n)? } else { second_order::<f64>(n)? };
                out += &format!("{n},{}\n", format_real(r.value));
            }
            Ok(Rendered::single(out))
        }
        Command::Compare { n_range } => {
            let ns = n_range.values();
            require_positive(&ns)?;
            let mut out = String::from(
                "n,p_exact,p_leading,p_second,err_leading,err_second,scaled_err_second\n",
            );
            for r in compare_sweep(&ns, cfg)? {
                let vals = [r.p_exact, r.p_leading, r.p_second, r.err_leading, r.err_second, r.scaled_err_second];
                let cols: Vec<String> = vals.iter().map(|&v| format_real(v)).collect();
                out += &format!("{},{}\n", r.n, cols.join(","));
            }
            Ok(Rendered::single(out))
        }
        Command::Fn { n_range } => {
            let ns = n_range.values();
            require_positive(&ns)?;
            let mut out = String::from("n,f_n,ratio\n");
            // ratio_sweep works on contiguous ranges; honor the step by sampling
            let points = ratio_sweep(n_range.start, n_range.end, cfg)?;
            for p in points.iter().step_by(n_range.step) {
                out += &format!("{},{},{}\n", p.n, format_real(p.big_f), format_real(p.ratio));
            }
            Ok(Rendered::single(out))
        }
        Command::Lemma { x_max, grid } => {
            let r = lemma_check(*x_max, *grid)?;
            Ok(Rendered::single(format!(
                "grid_size: {}\nx_max: {}\nendpoint_left: {}\nendpoint_decay: {}\nmax_violation: {}\npassed: {}\n",
                r.grid_size,
                format_real(*x_max),
                format_real(r.endpoint_left),
                format_real(r.endpoint_decay),
                format_real(r.max_violation),
                r.passed
            )))
        }
        Command::Fig { id, plot_script } => {
            let fig = figure_dataset(*id, &FigureParams::default(), cfg)?;
            Ok(render_figure(&fig, cli.out.as_str(), *plot_script))
        }
    }
}

fn require_positive(ns: &[usize]) -> Result<(), Failure> {
    if ns.contains(&0) {
        Err(Failure::Usage("asymptotic formulas need n >= 1".into()))
    } else {
        Ok(())
    }
}

fn render_figure(fig: &Figure, out: &str, plot_script: bool) -> Rendered {
    let path = Path::new(out);
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| format!("fig{}", fig.id));
    let ext = path
        .extension()
        .map(|e| e.to_string_lossy().into_owned())
        .unwrap_or_else(|| "csv".into());
    let main_name = path
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| format!("{stem}.{ext}"));

    let mut names = vec![main_name];
    let mut extra = Vec::new();
    for t in &fig.tables[1..] {
        let name = format!("{stem}_{}.{ext}", t.name);
        names.push(name.clone());
        extra.push((name, t.to_csv()));
    }
    if plot_script {
        extra.push((format!("{stem}.gp"), plot::script(fig.id, &names, &stem)));
    }
    Rendered {
        main: fig.tables[0].to_csv(),
        extra,
    }
}
