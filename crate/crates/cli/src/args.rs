//! Command-line flags.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use falsilab::{BitString, PartialAssignment, Rational};
use num_bigint::BigInt;

#[derive(Debug, Parser)]
#[command(name = "falsilab", version, about = "Exact falsifiability measures over finite hypothesis classes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// Where the hypothesis class comes from.
#[derive(Debug, Clone, Args)]
pub struct ClassArgs {
    /// Class file.
    #[arg(long, value_name = "FILE", required_unless_present = "seed", conflicts_with = "seed")]
    pub class: Option<PathBuf>,
    /// Draw a random explicit class from this seed instead of reading a file.
    #[arg(long, value_name = "K", requires = "ground")]
    pub seed: Option<u64>,
    /// Ground size of the random class.
    #[arg(long, value_name = "N", requires = "seed")]
    pub ground: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct SampleArgs {
    /// Sample prefix; the rest of the ground set follows in ascending order.
    #[arg(long, value_name = "i,j,k,...", value_delimiter = ',')]
    pub sample: Vec<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// VC dimension with its lexicographically smallest witness.
    Vc {
        #[command(flatten)]
        class: ClassArgs,
    },
    /// Popper dimension relative to a partial assignment, or a profile over all small assignments.
    Popper {
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, value_name = "i=b,j=b", value_parser = parse_assignment, default_value = "")]
        assign: PartialAssignment,
        /// Profile every assignment with at most this many entries.
        #[arg(long, value_name = "K", conflicts_with = "assign")]
        depth: Option<usize>,
    },
    /// Growth function up to m, next to the Sauer-Shelah bound.
    Growth {
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, value_name = "K")]
        m: Option<usize>,
    },
    /// Sauer-Shelah bound sum_{i<=d} C(m,i).
    Sauer {
        #[arg(long, value_name = "K")]
        m: usize,
        #[arg(long, value_name = "K")]
        d: usize,
    },
    /// Semi-measure and surprise after n observations.
    Surprise {
        #[command(flatten)]
        class: ClassArgs,
        #[command(flatten)]
        sample: SampleArgs,
        #[arg(long, value_name = "K")]
        n: usize,
    },
    /// Severe-surprise verdict for an observed outcome.
    Severe {
        #[command(flatten)]
        class: ClassArgs,
        #[command(flatten)]
        sample: SampleArgs,
        /// Defaults to the width of --observed.
        #[arg(long, value_name = "K")]
        n: Option<usize>,
        #[arg(long, value_name = "P/Q", value_parser = parse_rational)]
        epsilon: Rational,
        #[arg(long, value_name = "BITS", value_parser = parse_bits)]
        observed: BitString,
    },
    /// Co-surprise, optionally conditioned on a second class or a cylinder.
    Cosurprise {
        #[command(flatten)]
        class: ClassArgs,
        #[command(flatten)]
        sample: SampleArgs,
        #[arg(long, value_name = "K")]
        n: usize,
        /// Condition on the class in this file.
        #[arg(long, value_name = "FILE", conflicts_with = "cylinder")]
        given: Option<PathBuf>,
        /// Condition on the cylinder of hypotheses showing these bits on the first n sample points.
        #[arg(long, value_name = "BITS", value_parser = parse_bits)]
        cylinder: Option<BitString>,
    },
    /// Ratio of co-surprise to surprise.
    Ratio {
        #[command(flatten)]
        class: ClassArgs,
        #[command(flatten)]
        sample: SampleArgs,
        #[arg(long, value_name = "K")]
        n: usize,
    },
    /// Least sample size guaranteeing surprise at least 1 - epsilon on every injective sample.
    Bound {
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, value_name = "P/Q", value_parser = parse_rational)]
        epsilon: Rational,
    },
    /// Sample that keeps surprise at zero for the first m observations.
    Adversary {
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, value_name = "K")]
        m: usize,
    },
    /// Falsifying selector built from Popper witnesses.
    Selector {
        #[command(flatten)]
        class: ClassArgs,
        /// Seed assignment.
        #[arg(long, value_name = "i=b,j=b", value_parser = parse_assignment, default_value = "")]
        assign: PartialAssignment,
        /// Maximum number of stages (defaults to the ground size).
        #[arg(long, value_name = "K")]
        stages: Option<usize>,
    },
    /// Surprise and co-surprise for every prefix length.
    Trace {
        #[command(flatten)]
        class: ClassArgs,
        #[command(flatten)]
        sample: SampleArgs,
        /// Last prefix length (defaults to the ground size).
        #[arg(long, value_name = "K")]
        n: Option<usize>,
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
        /// Write p/q strings to the CSV instead of decimals.
        #[arg(long, requires = "csv")]
        exact: bool,
    },
    /// Built-in families with their computed and analytic VC dimensions.
    Family {
        #[arg(long, value_name = "N")]
        ground: usize,
        /// One family, in class-file syntax, e.g. "cylinder support=1,3".
        #[arg(long, value_name = "SPEC")]
        kind: Option<String>,
        /// Write the selected family as a class file.
        #[arg(long, value_name = "PATH", requires = "kind")]
        write: Option<PathBuf>,
    },
    /// Maximum likelihood for coin flips over a parameter set.
    Mle {
        /// Flips as a string of H and T.
        #[arg(long, value_name = "HT...")]
        data: String,
        /// Finite parameter set.
        #[arg(long, value_name = "t,t,...", value_delimiter = ',', required_unless_present = "interval", conflicts_with = "interval")]
        thetas: Vec<f64>,
        /// Interval parameter set.
        #[arg(long, value_name = "LO,HI", value_parser = parse_interval)]
        interval: Option<(f64, f64)>,
        /// Points removed from the interval.
        #[arg(long, value_name = "t,t,...", value_delimiter = ',', requires = "interval")]
        exclude: Vec<f64>,
        /// Grid spacing for the interval search.
        #[arg(long, value_name = "H", default_value_t = 1e-4, requires = "interval")]
        step: f64,
    },
    /// Heads probability above which one tails in n flips has probability below epsilon.
    Tails {
        #[arg(long, value_name = "P/Q", value_parser = parse_rational)]
        epsilon: Rational,
        #[arg(long, value_name = "K")]
        n: usize,
    },
}

/// Accepts `p/q`, an integer, or a decimal such as `0.125`, all converted exactly.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let bad = || format!("expected P/Q or a decimal, got {s:?}");
    let int = |t: &str| -> Result<BigInt, String> {
        if t.is_empty() || !t.trim_start_matches('-').chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        t.parse().map_err(|_| bad())
    };
    if let Some((p, q)) = s.split_once('/') {
        let q = int(q)?;
        if q == BigInt::from(0) {
            return Err(format!("zero denominator in {s:?}"));
        }
        return Ok(Rational::new(int(p)?, q));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.starts_with('-') {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let whole = if whole.is_empty() || whole == "-" { BigInt::from(0) } else { int(whole)? };
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let frac = if frac.is_empty() { BigInt::from(0) } else { int(frac)? };
        let magnitude = Rational::new(whole.magnitude().clone().into(), 1.into()) + Rational::new(frac, scale);
        return Ok(if negative { -magnitude } else { magnitude });
    }
    Ok(Rational::from_integer(int(s)?))
}

pub fn parse_bits(s: &str) -> Result<BitString, String> {
    s.parse().map_err(|e: falsilab::Error| e.to_string())
}

pub fn parse_assignment(s: &str) -> Result<PartialAssignment, String> {
    s.parse().map_err(|e: falsilab::Error| e.to_string())
}

fn parse_interval(s: &str) -> Result<(f64, f64), String> {
    let (lo, hi) = s.split_once(',').ok_or_else(|| format!("expected LO,HI, got {s:?}"))?;
    let num = |t: &str| t.trim().parse::<f64>().map_err(|_| format!("bad interval endpoint {t:?}"));
    Ok((num(lo)?, num(hi)?))
}
