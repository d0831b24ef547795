//! Command-line surface: point computations, figure-data tables, optical
//! network simulation, and the validation suites.
//!
//! Exit codes: 0 success, 1 validation failure, 2 usage or configuration
//! error. Tables go to `--out` (default standard output); all diagnostics
//! go to standard error. Output is byte-deterministic for fixed
//! `(flags, seed, workers)`.

mod output;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use qcompare::coherent::{
    comparator_network, sample_detection, success_prob_coherent, CoherentPair,
};
use qcompare::finite::{avg_success, success_prob_pure, EnsembleSpec, OverlapSquared};
use qcompare::oracle::{mc_average_success, mc_estimate};
use qcompare::validate::{all_suites, coherent_suite, lemma_suite, oracle_suite, SuiteConfig};

use output::{format_sig, open_output, write_table, Figure1Row, Figure2Row, Format};

#[derive(Parser)]
#[command(
    name = "qcompare",
    version,
    about = "Optimal unambiguous comparison of ensembles of pure and coherent quantum states"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Seed for every randomized path
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    /// Monte Carlo sample count (0 skips optional sampling)
    #[arg(long, global = true, default_value_t = 100_000)]
    samples: u64,

    /// Worker threads for Monte Carlo estimators
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,

    /// Table output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Table output path ("-" for standard output)
    #[arg(long, global = true, default_value = "-")]
    out: String,
}

#[derive(Subcommand)]
enum Command {
    /// Success probability for pure qudit ensembles at a given overlap
    ComparePure {
        /// Squared overlap |<psi1|psi2>|^2, in [0, 1]
        #[arg(long)]
        x: f64,
        /// Copies of the first state
        #[arg(long)]
        k: u32,
        /// Copies of the second state
        #[arg(long)]
        l: u32,
    },
    /// Coherent-state comparison, optionally simulating the network
    CompareCoherent {
        /// First amplitude as "re,im"
        #[arg(long, value_parser = parse_complex)]
        alpha1: Complex64,
        /// Second amplitude as "re,im"
        #[arg(long, value_parser = parse_complex)]
        alpha2: Complex64,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        l: u32,
        /// Also run the beam-splitter network and sample the detector
        #[arg(long)]
        simulate: bool,
    },
    /// Average success over uniformly random pure state pairs
    Average {
        /// Hilbert-space dimension
        #[arg(long)]
        d: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        l: u32,
        /// Cross-check against a Monte Carlo estimate
        #[arg(long)]
        mc: bool,
    },
    /// Success-vs-overlap table for the pure and coherent comparators
    Figure1 {
        /// Copy-count pairs as "k,l"
        #[arg(long, value_parser = parse_pair, num_args = 1..,
              default_values = ["1,1", "2,2", "3,3", "4,4"])]
        pairs: Vec<(u32, u32)>,
        /// Points on the overlap grid (including both endpoints)
        #[arg(long, default_value_t = 101)]
        grid_points: usize,
    },
    /// Average-success-vs-dimension table for balanced ensembles
    Figure2 {
        /// Largest dimension (table runs d = 2..=d_max)
        #[arg(long, default_value_t = 20)]
        d_max: u32,
        /// Copy counts k (each row uses k = l)
        #[arg(long = "k-list", num_args = 1.., default_values = ["1", "2", "3", "4"])]
        k_list: Vec<u32>,
    },
    /// Run invariant suites and report pass/fail per invariant
    Validate {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Oracle,
    Lemma,
    Coherent,
    All,
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let (re, im) = s
        .split_once(',')
        .ok_or_else(|| format!("expected \"re,im\", got {s:?}"))?;
    let re: f64 = re
        .trim()
        .parse()
        .map_err(|e| format!("bad real part {re:?}: {e}"))?;
    let im: f64 = im
        .trim()
        .parse()
        .map_err(|e| format!("bad imaginary part {im:?}: {e}"))?;
    if !re.is_finite() || !im.is_finite() {
        return Err(format!("amplitude must be finite, got {s:?}"));
    }
    Ok(Complex64::new(re, im))
}

fn parse_pair(s: &str) -> Result<(u32, u32), String> {
    let (k, l) = s
        .split_once(',')
        .ok_or_else(|| format!("expected \"k,l\", got {s:?}"))?;
    let k: u32 = k.trim().parse().map_err(|e| format!("bad k {k:?}: {e}"))?;
    let l: u32 = l.trim().parse().map_err(|e| format!("bad l {l:?}: {e}"))?;
    if k < 1 || l < 1 {
        return Err(format!("copy counts must be at least 1, got {s:?}"));
    }
    Ok((k, l))
}

fn main() {
    let cli = Cli::parse();
    let code = match execute(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            2
        }
    };
    std::process::exit(code);
}

fn execute(cli: Cli) -> Result<i32, String> {
    if cli.workers < 1 {
        return Err("--workers must be at least 1".to_string());
    }
    match cli.command {
        Command::ComparePure { x, k, l } => {
            let x = OverlapSquared::new(x).map_err(|e| e.to_string())?;
            let spec = EnsembleSpec::new(k, l, 2).map_err(|e| e.to_string())?;
            println!("{}", format_sig(success_prob_pure(x, spec).value(), 15));
            Ok(0)
        }
        Command::CompareCoherent {
            alpha1,
            alpha2,
            k,
            l,
            simulate,
        } => {
            let pair = CoherentPair::new(alpha1, alpha2, k, l).map_err(|e| e.to_string())?;
            let closed = success_prob_coherent(&pair).value();
            println!("closed_form {}", format_sig(closed, 15));
            if simulate {
                let (amplitude, network) = comparator_network(&pair);
                println!(
                    "detector_amplitude {},{}",
                    format_sig(amplitude.re, 15),
                    format_sig(amplitude.im, 15)
                );
                println!("network {}", format_sig(network.value(), 15));
                println!(
                    "network_vs_closed_form {}",
                    format_sig((network.value() - closed).abs(), 6)
                );
                if cli.samples > 0 {
                    let estimate = mc_estimate(cli.samples, cli.seed, cli.workers, |rng| {
                        f64::from(u8::from(sample_detection(amplitude, rng).clicked))
                    });
                    println!("click_frequency {}", format_sig(estimate.mean, 15));
                }
            }
            Ok(0)
        }
        Command::Average { d, k, l, mc } => {
            let spec = EnsembleSpec::new(k, l, d).map_err(|e| e.to_string())?;
            let exact = avg_success(spec).value();
            println!("exact {}", format_sig(exact, 15));
            if mc {
                if cli.samples < 1 {
                    return Err("--mc needs --samples >= 1".to_string());
                }
                let estimate = mc_average_success(spec, cli.samples, cli.seed, cli.workers);
                let diff = (estimate.mean - exact).abs();
                let z = if diff == 0.0 {
                    0.0
                } else {
                    diff / estimate.std_error
                };
                println!("mc_mean {}", format_sig(estimate.mean, 15));
                println!("mc_std_error {}", format_sig(estimate.std_error, 6));
                println!("z_score {}", format_sig(z, 6));
            }
            Ok(0)
        }
        Command::Figure1 { pairs, grid_points } => {
            if grid_points < 2 {
                return Err("--grid-points must be at least 2".to_string());
            }
            let mut rows = Vec::with_capacity(pairs.len() * grid_points);
            for &(k, l) in &pairs {
                let spec = EnsembleSpec::new(k, l, 2).map_err(|e| e.to_string())?;
                let exponent = f64::from(k) * f64::from(l) / (f64::from(k) + f64::from(l));
                for x in OverlapSquared::unit_grid(grid_points) {
                    let p_pure = success_prob_pure(x, spec).value();
                    let p_coherent = if x.value() == 0.0 {
                        1.0
                    } else {
                        1.0 - x.value().powf(exponent)
                    };
                    rows.push(Figure1Row {
                        x: x.value(),
                        k,
                        l,
                        p_pure,
                        p_coherent,
                    });
                }
            }
            let mut target = open_output(&cli.out)?;
            write_table(target.as_mut(), cli.format, &rows).map_err(|e| e.to_string())?;
            Ok(0)
        }
        Command::Figure2 { d_max, k_list } => {
            if d_max < 2 {
                return Err("--d-max must be at least 2".to_string());
            }
            let mut rows = Vec::new();
            for d in 2..=d_max {
                for &k in &k_list {
                    let spec = EnsembleSpec::new(k, k, d).map_err(|e| e.to_string())?;
                    rows.push(Figure2Row {
                        d,
                        k,
                        p_avg: avg_success(spec).value(),
                    });
                }
            }
            let mut target = open_output(&cli.out)?;
            write_table(target.as_mut(), cli.format, &rows).map_err(|e| e.to_string())?;
            Ok(0)
        }
        Command::Validate { suite } => {
            if cli.samples < 1 {
                return Err("validate needs --samples >= 1".to_string());
            }
            let config = SuiteConfig {
                seed: cli.seed,
                samples: cli.samples,
                workers: cli.workers,
            };
            let results = match suite {
                Suite::Oracle => oracle_suite(&config),
                Suite::Lemma => lemma_suite(&config),
                Suite::Coherent => coherent_suite(&config),
                Suite::All => all_suites(&config),
            };
            let mut passed = 0usize;
            for result in &results {
                println!(
                    "[{}] {}: max deviation {} (tolerance {}; {} cases)",
                    if result.passed { "PASS" } else { "FAIL" },
                    result.name,
                    format_sig(result.max_deviation, 6),
                    format_sig(result.tolerance, 6),
                    result.cases
                );
                for note in &result.notes {
                    eprintln!("note: {}: {}", result.name, note);
                }
                if result.passed {
                    passed += 1;
                }
            }
            println!("result: {passed}/{} checks passed", results.len());
            Ok(if passed == results.len() { 0 } else { 1 })
        }
    }
}
