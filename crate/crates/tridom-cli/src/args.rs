//! Flag definitions and the small value parsers behind them.

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use tridom::search::ShapeFilter;

#[derive(Parser)]
#[command(name = "tridom", version, about = "Dominating-set patterns on triangular tori")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Torus dimensions m,n (both at least 3).
    #[arg(long, global = true, value_name = "M,N", value_parser = parse_i64_pair)]
    pub torus: Option<(i64, i64)>,

    /// Write the report here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Search budget as nodes,seconds.
    #[arg(long, global = true, value_name = "NODES,SECONDS", value_parser = parse_u64_pair)]
    pub budget: Option<(u64, u64)>,

    /// Pattern document to read (family request or explicit vertex list).
    #[arg(long, global = true, value_name = "PATH")]
    pub seedfile: Option<PathBuf>,

    /// Reserved for parallel search; runs are sequential today.
    #[arg(long, global = true, value_name = "N", default_value_t = 1,
          value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: u32,
}

#[derive(Subcommand)]
pub enum Command {
    /// Build a named pattern family and verify it.
    Construct(ConstructArgs),
    /// Check the domination properties of the set in --seedfile.
    Verify,
    /// Enumerate sets satisfying a predicate.
    Search(SearchArgs),
    /// Identify which two-vertex family the set in --seedfile belongs to.
    Classify(ClassifyArgs),
    /// Tabulate predicate existence over dimension ranges.
    Table(TableArgs),
    /// Draw a pattern as an SVG figure.
    Render(RenderArgs),
}

#[derive(Args)]
pub struct ConstructArgs {
    /// One of: perfect-code, spds-isolated, spds-lines, k3-qpds, k2-parallel,
    /// k2-t-linear, k2-sandwiched, k2-diagonal.
    pub family: String,

    /// Mirror image (perfect-code).
    #[arg(long)]
    pub mirror: bool,

    /// Line axis rows|cols (spds-lines) or diagonal axis 1|2|3 (k2-diagonal).
    #[arg(long, value_name = "AXIS")]
    pub axis: Option<String>,

    /// Hexagon type 1|2|3 (k2-parallel).
    #[arg(long = "hex-type", value_name = "T")]
    pub hex_type: Option<u8>,

    /// Linearity parameter, at least 1 (k2-t-linear).
    #[arg(long, value_name = "T")]
    pub t: Option<u32>,

    /// Hexagon type pair i,j (k2-t-linear).
    #[arg(long, value_name = "I,J", value_parser = parse_u8_pair)]
    pub types: Option<(u8, u8)>,

    /// Word over {2,3} as a digit string (k2-sandwiched).
    #[arg(long, value_name = "WORD")]
    pub xi: Option<String>,

    /// Word over {1,2} as a digit string (k2-diagonal).
    #[arg(long, value_name = "WORD")]
    pub eta: Option<String>,

    /// Translate the whole pattern by x1,x2.
    #[arg(long, value_name = "X1,X2", value_parser = parse_i64_pair, allow_hyphen_values = true)]
    pub offset: Option<(i64, i64)>,
}

#[derive(Args)]
pub struct SearchArgs {
    /// Predicate: pds, perfect-code, spds, qpds, or k<nu>-qpds with nu in 1..=3.
    #[arg(long, value_name = "NAME")]
    pub predicate: String,

    /// Stop after this many solutions.
    #[arg(long, value_name = "N")]
    pub limit: Option<usize>,

    /// Keep one representative per translation orbit.
    #[arg(long)]
    pub canonicalize: bool,

    /// Restrict the component shapes of accepted solutions.
    #[arg(long = "shape-filter", value_enum, default_value_t = ShapeArg::None)]
    pub shape_filter: ShapeArg,

    /// Impose the translation symmetry generated by u1,u2 and v1,v2.
    #[arg(long, value_name = "U1,U2,V1,V2", value_parser = parse_i64_quad, allow_hyphen_values = true)]
    pub impose: Option<(i64, i64, i64, i64)>,
}

#[derive(Args)]
pub struct TableArgs {
    /// Predicate, same names as for search.
    #[arg(long, value_name = "NAME")]
    pub predicate: String,

    /// Values of m: comma-separated integers or inclusive a..b ranges.
    #[arg(long, value_name = "LIST", value_parser = parse_range_list)]
    pub m: RangeList,

    /// Values of n, same syntax as --m.
    #[arg(long, value_name = "LIST", value_parser = parse_range_list)]
    pub n: RangeList,

    #[arg(long = "shape-filter", value_enum, default_value_t = ShapeArg::None)]
    pub shape_filter: ShapeArg,
}

#[derive(Args)]
pub struct ClassifyArgs {
    /// Treat this family label as the minority when reading periods.
    #[arg(long = "low-type", value_name = "LABEL")]
    pub low_type: Option<u8>,
}

#[derive(Args)]
pub struct RenderArgs {
    /// Write hexagon-type digits beside each two-vertex component.
    #[arg(long)]
    pub labels: bool,

    /// Overlay the component link graph.
    #[arg(long)]
    pub overlay: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ShapeArg {
    None,
    AllK1,
    AllCycles,
}

impl ShapeArg {
    pub fn as_str(self) -> &'static str {
        match self {
            ShapeArg::None => "none",
            ShapeArg::AllK1 => "all-k1",
            ShapeArg::AllCycles => "all-cycles",
        }
    }
}

impl From<ShapeArg> for ShapeFilter {
    fn from(a: ShapeArg) -> ShapeFilter {
        match a {
            ShapeArg::None => ShapeFilter::None,
            ShapeArg::AllK1 => ShapeFilter::AllK1,
            ShapeArg::AllCycles => ShapeFilter::AllCycles,
        }
    }
}

/// Dimension list for table commands, in the order given on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RangeList(pub Vec<i64>);

fn split_pair(s: &str) -> Result<(&str, &str), String> {
    s.split_once(',')
        .ok_or_else(|| format!("expected two comma-separated values, got `{s}`"))
}

fn int<T: std::str::FromStr>(tok: &str) -> Result<T, String> {
    tok.trim()
        .parse()
        .map_err(|_| format!("`{}` is not a valid number", tok.trim()))
}

pub fn parse_i64_pair(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = split_pair(s)?;
    Ok((int(a)?, int(b)?))
}

pub fn parse_u64_pair(s: &str) -> Result<(u64, u64), String> {
    let (a, b) = split_pair(s)?;
    Ok((int(a)?, int(b)?))
}

pub fn parse_u8_pair(s: &str) -> Result<(u8, u8), String> {
    let (a, b) = split_pair(s)?;
    Ok((int(a)?, int(b)?))
}

pub fn parse_i64_quad(s: &str) -> Result<(i64, i64, i64, i64), String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 4 {
        return Err(format!("expected four comma-separated integers, got `{s}`"));
    }
    Ok((int(parts[0])?, int(parts[1])?, int(parts[2])?, int(parts[3])?))
}

pub fn parse_range_list(s: &str) -> Result<RangeList, String> {
    let mut values = Vec::new();
    for item in s.split(',') {
        let item = item.trim();
        if let Some((lo, hi)) = item.split_once("..") {
            let lo: i64 = int(lo)?;
            let hi: i64 = int(hi.strip_prefix('=').unwrap_or(hi))?;
            if lo > hi {
                return Err(format!("range `{item}` is empty"));
            }
            values.extend(lo..=hi);
        } else {
            values.push(int(item)?);
        }
    }
    if values.is_empty() {
        return Err("empty dimension list".to_string());
    }
    Ok(RangeList(values))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairs_parse_and_reject() {
        assert_eq!(parse_i64_pair("7,7").unwrap(), (7, 7));
        assert_eq!(parse_i64_pair(" 3 , -2 ").unwrap(), (3, -2));
        assert!(parse_i64_pair("7").is_err());
        assert!(parse_i64_pair("7,x").is_err());
        assert_eq!(parse_u8_pair("2,1").unwrap(), (2, 1));
        assert!(parse_u8_pair("2,-1").is_err());
    }

    #[test]
    fn quads_need_four_parts() {
        assert_eq!(parse_i64_quad("4,-2,3,1").unwrap(), (4, -2, 3, 1));
        assert!(parse_i64_quad("4,-2,3").is_err());
    }

    #[test]
    fn range_lists_expand_inclusively() {
        assert_eq!(parse_range_list("3..6").unwrap().0, vec![3, 4, 5, 6]);
        assert_eq!(parse_range_list("3..9,14").unwrap().0, vec![3, 4, 5, 6, 7, 8, 9, 14]);
        assert_eq!(parse_range_list("5").unwrap().0, vec![5]);
        assert_eq!(parse_range_list("3..=4").unwrap().0, vec![3, 4]);
        assert!(parse_range_list("6..3").is_err());
        assert!(parse_range_list("").is_err());
    }

    #[test]
    fn cli_parses_typical_invocations() {
        use clap::Parser as _;
        let cli = Cli::try_parse_from(["tridom", "construct", "perfect-code", "--torus", "7,7"]).unwrap();
        assert_eq!(cli.torus, Some((7, 7)));
        assert!(matches!(cli.command, Command::Construct(_)));

        let cli = Cli::try_parse_from([
            "tridom", "search", "--predicate", "spds", "--torus", "4,4",
            "--shape-filter", "all-cycles", "--budget", "100,5",
        ])
        .unwrap();
        assert_eq!(cli.budget, Some((100, 5)));
        match cli.command {
            Command::Search(a) => assert_eq!(a.shape_filter, ShapeArg::AllCycles),
            _ => panic!("wrong command"),
        }

        assert!(Cli::try_parse_from(["tridom", "table", "--predicate", "pds", "--m", "3..x", "--n", "3"]).is_err());
        assert!(Cli::try_parse_from(["tridom", "search", "--torus", "3,3"]).is_err());
    }
}
