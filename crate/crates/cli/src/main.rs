use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use tlfc::counting::{self, brute};
use tlfc::lattice::{self, Ballot};
use tlfc::render::diagram_svg;
use tlfc::tl::census;
use tlfc::verify::{self, run_all, select, SUITES};
use tlfc::{
    diagram_to_fc, enumerate_fc, fc_to_diagram, monomial_product, BigCount, Diagram, DyckPath,
    FcElement,
};

/// Largest rank accepted by commands that enumerate every element.
const ENUM_LIMIT: usize = 14;

#[derive(Parser)]
#[command(
    name = "tlfc",
    version,
    about = "Fully commutative elements, Temperley-Lieb diagrams and their counts"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every FC element of rank n in canonical order.
    Enum {
        #[arg(long)]
        n: usize,
        /// Keep only elements with this many blocks.
        #[arg(long)]
        p: Option<usize>,
    },
    /// Evaluate a closed-form count.
    Count(CountArgs),
    /// Print a table of counts.
    Table {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "narayana")]
        kind: TableKind,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Draw the diagram of an FC element.
    ToDiagram {
        element: String,
        /// Also dump the intermediate data of the drawing algorithm.
        #[arg(long)]
        trace: bool,
    },
    /// Read the FC element off a diagram.
    ToFc { diagram: String },
    /// Multiply two monomials.
    Mul { left: String, right: String },
    /// Convert between FC elements, Dyck paths, ballots and diagrams.
    Convert {
        #[arg(long, value_enum)]
        from: Kind,
        #[arg(long, value_enum)]
        to: Kind,
        value: String,
        /// Read ballots off diagrams directly (tails +, heads -).
        #[arg(long)]
        nb: bool,
    },
    /// Write an SVG picture of a diagram or of the diagram of an FC element.
    Render {
        value: String,
        /// Output file; standard output when absent.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Group size-p elements by the through-strings of their diagrams.
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
    },
    /// Run property sweeps.
    Verify {
        /// Suite (module) or property names.
        names: Vec<String>,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        max_n: Option<usize>,
        /// List suites and properties without running them.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Args)]
struct CountArgs {
    #[arg(long)]
    n: usize,
    /// Whole Narayana row N(n, 0..=n).
    #[arg(long)]
    narayana: bool,
    /// Elements with p blocks.
    #[arg(long)]
    p: Option<usize>,
    /// Elements whose last block starts at i (0 selects the identity).
    #[arg(long)]
    start: Option<usize>,
    /// Elements whose first block ends at j.
    #[arg(long)]
    end: Option<usize>,
    /// Elements whose first block is [i, j].
    #[arg(long, num_args = 2, value_names = ["I", "J"])]
    first_block: Option<Vec<usize>>,
    /// Elements whose last block is [i, j].
    #[arg(long, num_args = 2, value_names = ["I", "J"])]
    last_block: Option<Vec<usize>>,
    /// Count by enumeration instead of the closed forms.
    #[arg(long)]
    brute: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    Narayana,
    TriangleStart,
    TriangleEnd,
    StartSize,
    SizeEnd,
    StartEnd,
    FirstBlock,
    LastBlock,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Fc,
    Dyck,
    Ballot,
    Diagram,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(Outcome::Ok(out)) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::Failed(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

enum Outcome {
    Ok(String),
    Failed(String),
}

fn run(cli: &Cli) -> Result<Outcome> {
    let json = cli.json;
    let out = match &cli.command {
        Command::Enum { n, p } => enumerate(*n, *p, json)?,
        Command::Count(args) => count(args, json)?,
        Command::Table { n, kind, format } => {
            let format = if json { Format::Json } else { *format };
            table(*n, *kind, format)?
        }
        Command::ToDiagram { element, trace } => to_diagram(element, *trace, json)?,
        Command::ToFc { diagram } => {
            let d: Diagram = diagram.parse()?;
            let w = diagram_to_fc(&d);
            if json {
                line(json!({ "text": w.to_string(), "fc": w }))
            } else {
                format!("{w}\n")
            }
        }
        Command::Mul { left, right } => mul(left, right, json)?,
        Command::Convert {
            from,
            to,
            value,
            nb,
        } => convert(*from, *to, value, *nb, json)?,
        Command::Render { value, svg } => render(value, svg.as_ref())?,
        Command::Census { n, p } => census_table(*n, *p, json)?,
        Command::Verify {
            names,
            all,
            max_n,
            list,
        } => return verify_cmd(names, *all, *max_n, *list, json),
    };
    Ok(Outcome::Ok(out))
}

fn line(value: Value) -> String {
    format!("{value}\n")
}

fn big(v: &BigCount) -> Value {
    let s = v.to_string();
    s.parse::<u64>()
        .map(Value::from)
        .unwrap_or(Value::String(s))
}

fn parse_fc(s: &str) -> Result<FcElement> {
    s.parse()
        .with_context(|| format!("invalid FC element {s:?}"))
}

fn check_rank(n: usize) -> Result<()> {
    if n > ENUM_LIMIT {
        bail!("rank {n} is above the enumeration limit {ENUM_LIMIT}");
    }
    Ok(())
}

fn enumerate(n: usize, p: Option<usize>, json: bool) -> Result<String> {
    check_rank(n)?;
    let all: Vec<FcElement> = enumerate_fc(n)
        .into_iter()
        .filter(|w| p.is_none_or(|p| w.size() == p))
        .collect();
    if json {
        return Ok(line(json!(all
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>())));
    }
    Ok(all.iter().map(|w| format!("{w}\n")).collect())
}

fn count(args: &CountArgs, json: bool) -> Result<String> {
    let n = args.n;
    if args.narayana {
        let row: Vec<BigCount> = if args.brute {
            check_rank(n)?;
            let all = enumerate_fc(n);
            (0..=n)
                .map(|p| BigCount::from(brute::size(&all, p)))
                .collect()
        } else {
            (0..=n)
                .map(|p| counting::narayana(n as isize, p as isize))
                .collect()
        };
        if json {
            return Ok(line(
                json!({ "n": n, "narayana": row.iter().map(big).collect::<Vec<_>>() }),
            ));
        }
        return Ok(format!(
            "{}\n",
            row.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        ));
    }

    let pair = |v: &Option<Vec<usize>>| v.as_ref().map(|v| (v[0], v[1]));
    let (first, last) = (pair(&args.first_block), pair(&args.last_block));
    let all = if args.brute {
        check_rank(n)?;
        enumerate_fc(n)
    } else {
        Vec::new()
    };
    let b = |v: usize| BigCount::from(v);
    let mut note = None;
    let (label, value) = match (args.p, args.start, args.end, first, last) {
        (None, None, None, None, None) => (
            "catalan",
            if args.brute {
                b(all.len())
            } else {
                counting::catalan(n + 1)
            },
        ),
        (Some(p), None, None, None, None) => (
            "size",
            if args.brute {
                b(brute::size(&all, p))
            } else {
                counting::narayana(n as isize, p as isize)
            },
        ),
        (None, Some(i), None, None, None) => (
            "start",
            if args.brute {
                b(brute::start(&all, i))
            } else {
                counting::triangle_start(n, i)
            },
        ),
        (None, None, Some(j), None, None) => (
            "end",
            if args.brute {
                b(brute::end(&all, j))
            } else {
                counting::triangle_end(n, j)
            },
        ),
        (Some(p), Some(i), None, None, None) => (
            "start-size",
            if args.brute {
                b(brute::start_size(&all, i, p))
            } else {
                counting::count_start_size(n, i, p)
            },
        ),
        (Some(p), None, Some(j), None, None) => (
            "size-end",
            if args.brute {
                b(brute::size_end(&all, p, j))
            } else {
                counting::count_size_end(n, p, j)
            },
        ),
        (None, Some(i), Some(j), None, None) => {
            if args.brute {
                ("start-end", b(brute::start_end(&all, i, j)))
            } else {
                if j + 1 < i {
                    check_rank(n)?;
                }
                let c = counting::count_start_end(n, i, j);
                if c.provenance == counting::Provenance::NoClosedForm {
                    note = Some("no closed form; counted by enumeration");
                }
                ("start-end", c.value)
            }
        }
        (None, None, None, Some((i, j)), None) => (
            "first-block",
            if args.brute {
                b(brute::first_block(&all, i, j))
            } else {
                counting::count_first_block(n, i, j)
            },
        ),
        (None, None, None, None, Some((i, j))) => (
            "last-block",
            if args.brute {
                b(brute::last_block(&all, i, j))
            } else {
                counting::count_last_block(n, i, j)
            },
        ),
        _ => bail!("unsupported combination of count options"),
    };
    if json {
        let mut obj = json!({ "n": n, "statistic": label, "value": big(&value) });
        if let Some(note) = note {
            obj["note"] = json!(note);
        }
        return Ok(line(obj));
    }
    Ok(match note {
        Some(note) => format!("{value} ({note})\n"),
        None => format!("{value}\n"),
    })
}

struct Table {
    title: String,
    row_name: &'static str,
    col_name: &'static str,
    columns: Vec<usize>,
    rows: Vec<(usize, Vec<Option<BigCount>>)>,
}

fn build_table(n: usize, kind: TableKind) -> Result<Table> {
    let grid = |row_name,
                col_name,
                rows: std::ops::RangeInclusive<usize>,
                cols: std::ops::RangeInclusive<usize>,
                f: &dyn Fn(usize, usize) -> Option<BigCount>| Table {
        title: String::new(),
        row_name,
        col_name,
        columns: cols.clone().collect(),
        rows: rows
            .map(|r| (r, cols.clone().map(|c| f(r, c)).collect()))
            .collect(),
    };
    let mut table = match kind {
        TableKind::Narayana => grid("n", "p", 0..=n, 0..=n, &|m, p| {
            (p <= m).then(|| counting::narayana(m as isize, p as isize))
        }),
        TableKind::TriangleStart => grid("n", "i", 0..=n, 0..=n, &|m, i| {
            (i <= m).then(|| counting::triangle_start(m, i))
        }),
        TableKind::TriangleEnd => grid("n", "j", 1..=n, 1..=n, &|m, j| {
            (j <= m).then(|| counting::triangle_end(m, j))
        }),
        TableKind::StartSize => grid("i", "p", 0..=n, 0..=n, &|i, p| {
            Some(counting::count_start_size(n, i, p))
        }),
        TableKind::SizeEnd => grid("p", "j", 1..=n, 1..=n, &|p, j| {
            Some(counting::count_size_end(n, p, j))
        }),
        TableKind::StartEnd => {
            check_rank(n)?;
            grid("i", "j", 1..=n, 1..=n, &|i, j| {
                Some(counting::count_start_end(n, i, j).value)
            })
        }
        TableKind::FirstBlock => grid("i", "j", 1..=n, 1..=n, &|i, j| {
            (i <= j).then(|| counting::count_first_block(n, i, j))
        }),
        TableKind::LastBlock => grid("i", "j", 1..=n, 1..=n, &|i, j| {
            (i <= j).then(|| counting::count_last_block(n, i, j))
        }),
    };
    table.title = kind
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_owned();
    Ok(table)
}

fn table(n: usize, kind: TableKind, format: Format) -> Result<String> {
    let t = build_table(n, kind)?;
    let cell = |v: &Option<BigCount>| v.as_ref().map(ToString::to_string).unwrap_or_default();
    let mut out = String::new();
    match format {
        Format::Json => {
            let rows: Vec<Value> = t
                .rows
                .iter()
                .map(|(r, cells)| json!({ t.row_name: r, "values": cells.iter().map(|c| c.as_ref().map_or(Value::Null, big)).collect::<Vec<_>>() }))
                .collect();
            let obj = json!({ "table": t.title, "n": n, "rows_by": t.row_name, "columns_by": t.col_name, "columns": t.columns, "rows": rows });
            out = line(obj);
        }
        Format::Csv => {
            let header: Vec<String> = std::iter::once(format!("{}\\{}", t.row_name, t.col_name))
                .chain(t.columns.iter().map(ToString::to_string))
                .collect();
            writeln!(out, "{}", header.join(","))?;
            for (r, cells) in &t.rows {
                let fields: Vec<String> = std::iter::once(r.to_string())
                    .chain(cells.iter().map(cell))
                    .collect();
                writeln!(out, "{}", fields.join(","))?;
            }
        }
        Format::Text => {
            let mut lines: Vec<Vec<String>> =
                vec![std::iter::once(format!("{}\\{}", t.row_name, t.col_name))
                    .chain(t.columns.iter().map(ToString::to_string))
                    .collect()];
            for (r, cells) in &t.rows {
                lines.push(
                    std::iter::once(r.to_string())
                        .chain(cells.iter().map(cell))
                        .collect(),
                );
            }
            let widths: Vec<usize> = (0..lines[0].len())
                .map(|c| lines.iter().map(|l| l[c].len()).max().unwrap_or(0))
                .collect();
            writeln!(out, "{}", t.title)?;
            for l in &lines {
                let padded: Vec<String> = l
                    .iter()
                    .zip(&widths)
                    .map(|(s, w)| format!("{s:>w$}"))
                    .collect();
                writeln!(out, "{}", padded.join(" ").trim_end())?;
            }
        }
    }
    Ok(out)
}

fn to_diagram(element: &str, trace: bool, json: bool) -> Result<String> {
    let w = parse_fc(element)?;
    let (d, t) = fc_to_diagram(&w);
    if json {
        let mut obj = json!({ "text": d.to_string(), "diagram": d });
        if trace {
            obj["trace"] = serde_json::to_value(&t)?;
        }
        return Ok(line(obj));
    }
    let mut out = format!("{d}\n");
    if trace {
        out.push_str(&serde_json::to_string_pretty(&t)?);
        out.push('\n');
    }
    Ok(out)
}

fn mul(left: &str, right: &str, json: bool) -> Result<String> {
    let (u, v) = (parse_fc(left)?, parse_fc(right)?);
    let (w, m) = monomial_product(&u, &v)?;
    if json {
        return Ok(line(
            json!({ "delta": m, "text": w.to_string(), "product": w }),
        ));
    }
    Ok(format!("delta^{m} * {w}\n"))
}

fn convert(from: Kind, to: Kind, value: &str, nb: bool, json: bool) -> Result<String> {
    if nb && !(from == Kind::Diagram && to == Kind::Ballot) {
        bail!("--nb applies only to --from diagram --to ballot");
    }
    let text = if nb {
        let d: Diagram = value.parse()?;
        lattice::diagram_to_ballot(&d).to_string()
    } else {
        let w = match from {
            Kind::Fc => parse_fc(value)?,
            Kind::Dyck => lattice::dyck_to_fc(&value.parse::<DyckPath>()?),
            Kind::Ballot => lattice::ballot_to_fc(&value.parse::<Ballot>()?),
            Kind::Diagram => diagram_to_fc(&value.parse::<Diagram>()?),
        };
        match to {
            Kind::Fc => w.to_string(),
            Kind::Dyck => lattice::fc_to_dyck(&w).to_string(),
            Kind::Ballot => lattice::fc_to_ballot(&w).to_string(),
            Kind::Diagram => fc_to_diagram(&w).0.to_string(),
        }
    };
    if json {
        return Ok(line(json!({ "value": text })));
    }
    Ok(format!("{text}\n"))
}

fn render(value: &str, svg: Option<&PathBuf>) -> Result<String> {
    let d = if value.trim_start().starts_with("strings=") {
        value.parse::<Diagram>()?
    } else {
        fc_to_diagram(&parse_fc(value)?).0
    };
    let picture = diagram_svg(&d);
    match svg {
        Some(path) => {
            std::fs::write(path, picture)
                .with_context(|| format!("cannot write {}", path.display()))?;
            Ok(String::new())
        }
        None => Ok(picture),
    }
}

fn census_table(n: usize, p: usize, json: bool) -> Result<String> {
    check_rank(n)?;
    if p > n {
        bail!("size {p} exceeds rank {n}");
    }
    let classes = census(n, p);
    if json {
        let rows: Vec<Value> = classes
            .iter()
            .map(|c| json!({ "key": c.key.to_string(), "size": c.size, "members": c.members.iter().map(ToString::to_string).collect::<Vec<_>>() }))
            .collect();
        return Ok(line(json!({ "n": n, "p": p, "classes": rows })));
    }
    let width = classes
        .iter()
        .map(|c| c.key.to_string().len())
        .max()
        .unwrap_or(0)
        .max(3);
    let mut out = format!("{:<width$}  size\n", "key");
    for c in &classes {
        writeln!(out, "{:<width$}  {}", c.key.to_string(), c.size)?;
    }
    Ok(out)
}

fn verify_cmd(
    names: &[String],
    all: bool,
    max_n: Option<usize>,
    list: bool,
    json: bool,
) -> Result<Outcome> {
    if list {
        let mut out = String::new();
        for suite in SUITES {
            writeln!(out, "{suite}")?;
            for p in verify::properties().iter().filter(|p| p.module == suite) {
                writeln!(out, "  {:<24} n<={:<3} {}", p.name, p.bound, p.description)?;
            }
        }
        return Ok(Outcome::Ok(out));
    }
    let selected: Vec<&'static verify::Property> = if all {
        if !names.is_empty() {
            bail!("--all takes no suite names");
        }
        verify::properties().iter().collect()
    } else {
        if names.is_empty() {
            bail!("name a suite or property, or pass --all");
        }
        let mut chosen = Vec::new();
        for name in names {
            let found = select(name);
            if found.is_empty() {
                bail!("unknown suite or property {name:?}; try --list");
            }
            chosen.extend(found);
        }
        chosen
    };
    let outcomes = run_all(&selected, max_n.unwrap_or(usize::MAX));
    let failed = outcomes.iter().any(|o| !o.passed());
    let out = if json {
        let rows: Vec<Value> = outcomes
            .iter()
            .map(|o| json!({ "property": o.name, "max_n": o.bound, "checks": o.checks, "passed": o.passed(), "counterexample": o.counterexample }))
            .collect();
        line(json!({ "passed": !failed, "results": rows }))
    } else {
        let mut out = String::new();
        for o in &outcomes {
            match &o.counterexample {
                None => writeln!(
                    out,
                    "PASS {:<24} n<={:<3} {} checks",
                    o.name, o.bound, o.checks
                )?,
                Some(cx) => writeln!(
                    out,
                    "FAIL {:<24} n<={:<3} counterexample: {cx}",
                    o.name, o.bound
                )?,
            }
        }
        out
    };
    Ok(if failed {
        Outcome::Failed(out)
    } else {
        Outcome::Ok(out)
    })
}
