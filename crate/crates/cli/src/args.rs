use std::fmt;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use lcdbch::bchcodes::{CodeSpec, Family};
use lcdbch::cosets::CosetParams;
use lcdbch::dimensions::TheoremId;
use lcdbch::distance::SearchBudget;
use lcdbch::report::DistanceMode;

#[derive(Parser, Debug)]
#[command(name = "lcdbch", version, about = "LCD and narrow-sense primitive BCH codes over GF(q)")]
pub struct Cli {
    /// Worker threads for sweeps and searches (1 runs sequentially).
    #[arg(long, global = true, env = "LCDBCH_THREADS")]
    pub threads: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Coset leaders and sizes for a range of exponents.
    Cosets(CosetsArgs),
    /// Build one code and report its parameters.
    Construct(ConstructArgs),
    /// Bound or determine the minimum distance of one code.
    Distance(DistanceArgs),
    /// Compare closed-form dimensions with constructive ones.
    Verify(VerifyArgs),
    /// Emit a parameter table.
    Table(TableArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Inclusive integer range written `a:b` or `a`. `a > b` is empty.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub start: u64,
    pub end: u64,
}

impl Span {
    pub fn iter(self) -> RangeInclusive<u64> {
        self.start..=self.end
    }
}

impl FromStr for Span {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| t.trim().parse::<u64>().map_err(|_| format!("bad range '{s}': expected a:b or a"));
        match s.split_once(':') {
            Some((a, b)) => Ok(Span {
                start: num(a)?,
                end: num(b)?,
            }),
            None => {
                let v = num(s)?;
                Ok(Span { start: v, end: v })
            }
        }
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.start, self.end)
    }
}

#[derive(Args, Debug)]
pub struct CosetsArgs {
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub m: u32,
    /// Exponents to list, `a:b`.
    #[arg(long, default_value = "0:0")]
    pub range: Span,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Narrow,
    Generic,
    /// Family A; the parity of q picks the even- or odd-length variant.
    LcdA,
    LcdB,
    LcdBTilde,
    Melas,
}

#[derive(Args, Debug)]
pub struct SpecArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub m: u32,
    /// Multiplier u in `δ = u q^m̄ + 1` (halved for family A when q is even).
    #[arg(long, conflicts_with_all = ["delta", "designed"])]
    pub u: Option<u64>,
    /// The family's own parameter (half-range δ for the LCD families).
    #[arg(long, conflicts_with = "designed")]
    pub delta: Option<u64>,
    /// Designed distance; converted to the family parameter.
    #[arg(long)]
    pub designed: Option<u64>,
    /// First exponent, for the generic family.
    #[arg(long)]
    pub b: Option<u64>,
}

impl SpecArgs {
    pub fn params(&self) -> Result<CosetParams> {
        Ok(CosetParams::new(self.q, self.m)?)
    }

    pub fn spec(&self) -> Result<CodeSpec> {
        let p = self.params()?;
        let family = family_of(self.family, &p);
        let delta = match (self.u, self.delta, self.designed) {
            _ if family == Family::MelasEvenlike => 2,
            (Some(u), _, _) => delta_from_u(family, &p, u)?,
            (_, Some(d), _) => d,
            (_, _, Some(d)) => delta_from_designed(family, &p, d)?,
            _ => bail!("one of --u, --delta or --designed is required for {family}"),
        };
        Ok(CodeSpec::new(family, p, delta, self.b)?)
    }
}

pub fn family_of(arg: FamilyArg, p: &CosetParams) -> Family {
    match arg {
        FamilyArg::Narrow => Family::Narrow,
        FamilyArg::Generic => Family::Generic,
        FamilyArg::LcdA if p.q_odd() => Family::LcdAEvenN,
        FamilyArg::LcdA => Family::LcdAOddN,
        FamilyArg::LcdB => Family::LcdB,
        FamilyArg::LcdBTilde => Family::LcdBTilde,
        FamilyArg::Melas => Family::MelasEvenlike,
    }
}

fn delta_from_u(family: Family, p: &CosetParams, u: u64) -> Result<u64> {
    let top = p.pow(p.m_bar());
    Ok(match family {
        Family::Generic => bail!("GENERIC takes --delta (designed distance) and --b"),
        Family::LcdAOddN => u * top / 2 + 1,
        _ => u * top + 1,
    })
}

fn delta_from_designed(family: Family, p: &CosetParams, d: u64) -> Result<u64> {
    Ok(match family {
        Family::Narrow | Family::Generic => d,
        Family::LcdAOddN if d % 2 == 1 => d.div_ceil(2),
        Family::LcdAEvenN | Family::LcdB | Family::LcdBTilde if d.is_multiple_of(2) => d / 2,
        _ => bail!("designed distance {d} is not attainable in {family} over GF({})", p.q()),
    })
}

#[derive(Args, Debug, Clone, Copy)]
pub struct DistanceOpts {
    #[arg(long, value_enum, default_value_t = DistanceArg::Bounds)]
    pub distance: DistanceArg,
    /// Largest message count for exhaustive enumeration.
    #[arg(long, default_value_t = SearchBudget::default().messages)]
    pub max_messages: u64,
    /// Largest number of weighted supports for the low-weight search.
    #[arg(long, default_value_t = SearchBudget::default().supports)]
    pub max_supports: u128,
}

impl DistanceOpts {
    pub fn budget(&self) -> SearchBudget {
        SearchBudget {
            messages: self.max_messages,
            supports: self.max_supports,
        }
    }
    pub fn mode(&self) -> DistanceMode {
        match self.distance {
            DistanceArg::Bounds => DistanceMode::Bounds,
            DistanceArg::Auto => DistanceMode::Auto,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DistanceArg {
    Bounds,
    Auto,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    #[command(flatten)]
    pub distance: DistanceOpts,
    /// Include the generator polynomial.
    #[arg(long)]
    pub generator: bool,
    /// Exit non-zero if the closed form disagrees with the construction.
    #[arg(long)]
    pub check: bool,
}

#[derive(Args, Debug)]
pub struct DistanceArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    /// Largest message count for exhaustive enumeration.
    #[arg(long, default_value_t = SearchBudget::default().messages)]
    pub max_messages: u64,
    /// Largest number of weighted supports for the low-weight search.
    #[arg(long, default_value_t = SearchBudget::default().supports)]
    pub max_supports: u128,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Restrict to these formulas (repeatable); all by default.
    #[arg(long = "theorem", value_parser = parse_theorem)]
    pub theorems: Vec<TheoremId>,
    #[arg(long)]
    pub q: Option<Span>,
    #[arg(long)]
    pub m: Option<Span>,
    /// `q^m` ceiling unless both --q and --m are given.
    #[arg(long, default_value_t = 6561)]
    pub max_qm: u64,
    /// Extra binary lengths up to this m (default sweep only).
    #[arg(long, default_value_t = 20)]
    pub binary_max_m: u32,
    /// `q^m` ceiling for bound-type formulas.
    #[arg(long, default_value_t = 1 << 16)]
    pub bounds_max_qm: u64,
    /// Skip the check that the dispatcher reproduces each instance.
    #[arg(long)]
    pub no_dispatch: bool,
    /// Print every mismatch instead of the first ten.
    #[arg(long)]
    pub all: bool,
}

fn parse_theorem(s: &str) -> Result<TheoremId, String> {
    s.parse()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    /// Every worked example with its stated parameters.
    Golden,
    /// Family-A codes with designed distance `q^t - 1`.
    DesignedQt,
    /// One family over a parameter range.
    Family,
    /// Binary family-B codes meeting the sphere-packing bound.
    Mindis,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long, value_enum)]
    pub kind: TableKind,
    #[arg(long, default_value = "2:9")]
    pub q: Span,
    #[arg(long, default_value = "2:8")]
    pub m: Span,
    /// `t` for designed-qt; defaults to `1:m̄`.
    #[arg(long)]
    pub t: Option<Span>,
    #[arg(long, value_enum)]
    pub family: Option<FamilyArg>,
    /// Family parameter range for `--kind family`.
    #[arg(long)]
    pub delta: Option<Span>,
    /// Range of u for `--kind family`, as in `construct --u`.
    #[arg(long, conflicts_with = "delta")]
    pub u: Option<Span>,
    /// First exponent, for the generic family.
    #[arg(long)]
    pub b: Option<u64>,
    /// `q^m` ceiling.
    #[arg(long, default_value_t = 1 << 16)]
    pub max_qm: u64,
    #[command(flatten)]
    pub distance: DistanceOpts,
}
