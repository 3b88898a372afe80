//! `cdes`: fibre tables, cyclic extensions and verification suites from the
//! command line.

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cyclic_descents::cyclic::{build_extension, fiber_table_formula, fiber_table_inner, gw_invariant, FiberTable};
use cyclic_descents::exceptional::{cdes_star_sn, exceptional_feasibility, is_exceptional_family};
use cyclic_descents::gens::{cdes_poly, cellini_cdes, des_poly, perm_des};
use cyclic_descents::symfunc::{affine_ribbon_schur, skew_schur, SchurVector};
use cyclic_descents::tableaux::{count_syt, enumerate_syt_limited, DEFAULT_SYT_LIMIT};
use cyclic_descents::verify::{self, Suite};
use cyclic_descents::{Error, Partition, ShapeClass, SkewShape, SubsetOfN};

#[derive(Parser)]
#[command(name = "cdes", version, about = "Cyclic descents of standard Young tableaux")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Refuse shapes with more standard tableaux than this.
    #[arg(long, default_value_t = DEFAULT_SYT_LIMIT, global = true)]
    limit_syt: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Route {
    /// From descent fibres of the enumerated tableaux.
    Formula,
    /// From Hall inner products with affine ribbon Schur functions.
    Inner,
    /// Both, failing if they differ.
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Cyclic descent fibre sizes m(J) of a shape such as "3,2,1" or "4,4/2".
    Fibers {
        shape: String,
        #[arg(long, value_enum, default_value_t = Route::Formula)]
        route: Route,
    },
    /// An explicit cyclic extension: tableaux, cyclic descent sets and p.
    Extend { shape: String },
    /// Run a verification suite: all, theorem1, theorem2, prop25, gens, exceptional or gw.
    Verify {
        #[arg(default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
    },
    /// Standard Young tableaux of a shape with their descent sets.
    Syt { shape: String },
    /// Schur expansion of a skew Schur function.
    Schur { shape: String },
    /// Schur expansion of the affine ribbon Schur function of J ⊆ [n].
    Affine { n: usize, set: String },
    /// Pairing of the affine ribbon Schur function of J with s_ν, ν not a hook.
    Gw { n: usize, set: String, partition: String },
    /// Descent and cyclic descent polynomials in t.
    Poly { shape: String },
    /// Feasible values of #cDes*^{-1}(∅) for exceptional extensions.
    Feasibility { shape: String },
    /// Descent, cyclic descent and (for even n) exceptional cyclic descent sets of a permutation.
    Perm { perm: String },
}

/// Why a command did not succeed.
enum Failure {
    Lib(Error),
    /// A check ran and failed; carries the diagnostic.
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Check(_) | Failure::Lib(Error::Internal(_)) => 1,
            Failure::Lib(Error::Domain(_) | Error::NotExtendable { .. } | Error::Parse(_)) => 2,
            Failure::Lib(Error::Resource(_)) => 3,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Lib(e) => e.to_string(),
            Failure::Check(m) => m.clone(),
        }
    }
}

/// Something that can be printed in every output format.
struct Output {
    json: Value,
    text: String,
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl Output {
    fn write(&self, format: Format, out: &mut impl Write) -> io::Result<()> {
        match format {
            Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&self.json).expect("plain data")),
            Format::Text => write!(out, "{}", self.text),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.header)?;
                for row in &self.rows {
                    w.write_record(row)?;
                }
                w.flush()
            }
        }
    }
}

fn parse_shape(s: &str) -> Result<SkewShape, Error> {
    s.parse()
}

/// Parses "1,3", "{1,3}" or "{}" as a subset of `[n]`.
fn parse_subset(n: usize, s: &str) -> Result<SubsetOfN, Error> {
    let body = s.trim().trim_start_matches('{').trim_end_matches('}');
    let elems = body
        .split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| {
            x.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad subset element {x:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    SubsetOfN::from_elements(n, elems)
}

fn parse_perm(s: &str) -> Result<Vec<usize>, Error> {
    let body = s.trim().trim_start_matches('[').trim_end_matches(']');
    if !body.contains(',') && body.chars().all(|c| c.is_ascii_digit()) {
        // One-line notation such as 2143.
        return Ok(body.chars().map(|c| c as usize - '0' as usize).collect());
    }
    body.split(',')
        .map(|x| {
            x.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad permutation entry {x:?}")))
        })
        .collect()
}

fn guard_syt(shape: &SkewShape, limit: usize) -> Result<(), Error> {
    let count = count_syt(shape)?;
    if count as u128 > limit as u128 {
        return Err(Error::Resource(format!(
            "{shape} has {count} standard tableaux, above --limit-syt {limit}"
        )));
    }
    Ok(())
}

fn refuse_ribbon(shape: &SkewShape) -> Result<(), Error> {
    if shape.classify() == ShapeClass::ConnectedRibbon {
        return Err(Error::NotExtendable {
            shape: shape.to_string(),
        });
    }
    Ok(())
}

fn fiber_output(shape: &SkewShape, table: &FiberTable) -> Output {
    let entries = table.entries();
    Output {
        json: json!({ "shape": shape.to_string(), "table": table.to_json() }),
        text: table.to_text(),
        header: vec!["J", "m"],
        rows: entries
            .iter()
            .map(|(s, m)| vec![s.to_string(), m.to_string()])
            .collect(),
    }
}

fn schur_output(f: &SchurVector) -> Output {
    Output {
        json: f.to_json(),
        text: format!("{f}\n"),
        header: vec!["partition", "coefficient"],
        rows: f.terms().map(|(p, c)| vec![p.to_string(), c.to_string()]).collect(),
    }
}

fn fibers(shape: &str, route: Route, limit: usize) -> Result<Output, Failure> {
    let shape = parse_shape(shape)?;
    refuse_ribbon(&shape)?;
    let table = match route {
        Route::Inner => fiber_table_inner(&shape)?,
        Route::Formula => {
            guard_syt(&shape, limit)?;
            fiber_table_formula(&shape)?
        }
        Route::Both => {
            guard_syt(&shape, limit)?;
            let formula = fiber_table_formula(&shape)?;
            if formula != fiber_table_inner(&shape)? {
                return Err(Failure::Check(format!(
                    "formula and inner-product fibre tables of {shape} differ"
                )));
            }
            formula
        }
    };
    Ok(fiber_output(&shape, &table))
}

fn extend(shape: &str, limit: usize) -> Result<Output, Failure> {
    let shape = parse_shape(shape)?;
    refuse_ribbon(&shape)?;
    guard_syt(&shape, limit)?;
    let ext = build_extension(&shape)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for (i, t) in ext.tableaux.iter().enumerate() {
        let rendered: Vec<String> = t
            .rows()
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        let rendered = rendered.join(" / ");
        text.push_str(&format!(
            "{} [{rendered}] Des={} cDes={} p={}\n",
            i + 1,
            t.des_set(),
            ext.cdes[i],
            ext.p[i] + 1
        ));
        rows.push(vec![
            (i + 1).to_string(),
            rendered,
            t.des_set().to_string(),
            ext.cdes[i].to_string(),
            (ext.p[i] + 1).to_string(),
        ]);
    }
    Ok(Output {
        json: ext.to_json(),
        text,
        header: vec!["index", "rows", "des", "cdes", "p"],
        rows,
    })
}

fn run_verify(suite: &str, max_n: usize) -> Result<(Output, bool), Failure> {
    let suite: Suite = suite.parse()?;
    let report = verify::run(suite, max_n)?;
    let rows = report
        .checks
        .iter()
        .map(|c| {
            vec![
                c.suite.to_string(),
                c.check.to_string(),
                c.cases.to_string(),
                c.passed.to_string(),
                c.counterexample.as_ref().map(Value::to_string).unwrap_or_default(),
            ]
        })
        .collect();
    let output = Output {
        json: report.to_json(),
        text: report.to_text(),
        header: vec!["suite", "check", "cases", "passed", "counterexample"],
        rows,
    };
    Ok((output, report.passed()))
}

fn syt(shape: &str, limit: usize) -> Result<Output, Failure> {
    let shape = parse_shape(shape)?;
    let tableaux = enumerate_syt_limited(&shape, limit)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut json = Vec::new();
    for t in &tableaux {
        let rendered: Vec<String> = t
            .rows()
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        let rendered = rendered.join(" / ");
        text.push_str(&format!("[{rendered}] Des={}\n", t.des_set()));
        rows.push(vec![rendered, t.des_set().to_string()]);
        let mut entry = t.to_json();
        entry["des"] = json!(t.des_set());
        json.push(entry);
    }
    Ok(Output {
        json: json!({ "shape": shape.to_string(), "count": tableaux.len(), "tableaux": json }),
        text,
        header: vec!["rows", "des"],
        rows,
    })
}

fn poly(shape: &str, limit: usize) -> Result<Output, Failure> {
    let shape = parse_shape(shape)?;
    refuse_ribbon(&shape)?;
    guard_syt(&shape, limit)?;
    let des = des_poly(&shape)?;
    let cdes = cdes_poly(&shape)?;
    Ok(Output {
        json: json!({ "shape": shape.to_string(), "des": des.to_json(), "cdes": cdes.to_json() }),
        text: format!("des: {des}\ncdes: {cdes}\n"),
        header: vec!["statistic", "polynomial"],
        rows: vec![
            vec!["des".into(), des.to_string()],
            vec!["cdes".into(), cdes.to_string()],
        ],
    })
}

fn feasibility(shape: &str, limit: usize) -> Result<Output, Failure> {
    let shape = parse_shape(shape)?;
    guard_syt(&shape, limit)?;
    let feasible = exceptional_feasibility(&shape)?;
    let family = is_exceptional_family(&shape);
    let listed: Vec<String> = feasible.iter().map(i64::to_string).collect();
    Ok(Output {
        json: json!({ "shape": shape.to_string(), "feasible": feasible, "exceptional_family": family }),
        text: format!("feasible: {{{}}}\n", listed.join(",")),
        header: vec!["e0"],
        rows: listed.into_iter().map(|e| vec![e]).collect(),
    })
}

fn perm(perm: &str) -> Result<Output, Failure> {
    let w = parse_perm(perm)?;
    let n = w.len();
    let cdes = cellini_cdes(&w)?;
    let des = SubsetOfN::new(n, perm_des(&w))?;
    let star = if n % 2 == 0 { Some(cdes_star_sn(&w)?) } else { None };
    let mut text = format!("Des={des}\ncDes={cdes}\n");
    let mut rows = vec![
        vec!["des".to_string(), des.to_string()],
        vec!["cdes".to_string(), cdes.to_string()],
    ];
    if let Some(s) = star {
        text.push_str(&format!("cDes*={s}\n"));
        rows.push(vec!["cdes_star".into(), s.to_string()]);
    }
    Ok(Output {
        json: json!({ "permutation": w, "des": des, "cdes": cdes, "cdes_star": star }),
        text,
        header: vec!["statistic", "set"],
        rows,
    })
}

fn execute(cli: &Cli) -> Result<(Output, bool), Failure> {
    let limit = cli.limit_syt;
    let ok = |o: Output| Ok((o, true));
    match &cli.command {
        Command::Fibers { shape, route } => ok(fibers(shape, *route, limit)?),
        Command::Extend { shape } => ok(extend(shape, limit)?),
        Command::Verify { suite, max_n } => run_verify(suite, *max_n),
        Command::Syt { shape } => ok(syt(shape, limit)?),
        Command::Schur { shape } => ok(schur_output(&skew_schur(&parse_shape(shape)?)?)),
        Command::Affine { n, set } => ok(schur_output(&affine_ribbon_schur(*n, &parse_subset(*n, set)?)?)),
        Command::Gw { n, set, partition } => {
            let nu: Partition = partition.parse()?;
            let value = gw_invariant(*n, &parse_subset(*n, set)?, &nu)?;
            ok(Output {
                json: json!({ "n": n, "J": parse_subset(*n, set)?, "partition": nu, "value": value }),
                text: format!("{value}\n"),
                header: vec!["value"],
                rows: vec![vec![value.to_string()]],
            })
        }
        Command::Poly { shape } => ok(poly(shape, limit)?),
        Command::Feasibility { shape } => ok(feasibility(shape, limit)?),
        Command::Perm { perm: p } => ok(perm(p)?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok((output, passed)) => {
            let mut stdout = io::stdout().lock();
            if let Err(e) = output.write(cli.format, &mut stdout) {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                eprintln!("verification failed");
                ExitCode::from(1)
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.exit_code())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_parse() {
        assert_eq!(parse_subset(5, "{1,3}").unwrap().elements(), vec![1, 3]);
        assert_eq!(parse_subset(5, "2, 4").unwrap().elements(), vec![2, 4]);
        assert!(parse_subset(5, "{}").unwrap().is_empty());
        assert!(parse_subset(3, "4").is_err());
        assert!(parse_subset(3, "x").is_err());
    }

    #[test]
    fn permutations_parse() {
        assert_eq!(parse_perm("2143").unwrap(), vec![2, 1, 4, 3]);
        assert_eq!(parse_perm("[2,1,4,5,3]").unwrap(), vec![2, 1, 4, 5, 3]);
        assert_eq!(parse_perm("10,1,2,3,4,5,6,7,8,9").unwrap()[0], 10);
        assert!(parse_perm("2,x").is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(Failure::Lib(Error::Domain("x".into())).exit_code(), 2);
        assert_eq!(Failure::Lib(Error::NotExtendable { shape: "5".into() }).exit_code(), 2);
        assert_eq!(Failure::Lib(Error::Parse("x".into())).exit_code(), 2);
        assert_eq!(Failure::Lib(Error::Resource("x".into())).exit_code(), 3);
        assert_eq!(Failure::Check("x".into()).exit_code(), 1);
    }
}
