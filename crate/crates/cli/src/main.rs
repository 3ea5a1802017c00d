//! `alhc`: count, expand, verify and trace anti-lecture hall compositions
//! and the identities around them.

use std::collections::BTreeMap;
use std::io::{self, Write};
use std::process::ExitCode;
use std::sync::mpsc;

use alhc::bijection::{theta_inv, theta_trace, FerrersView, ThetaTrace};
use alhc::enumerate::{family_gf, Family};
use alhc::identities::{default_grid, sides, verify, IdentityReport, Params, IDENTITIES};
use alhc::triangle::{decompose, to_triangle, Decomposition, Parity, TriangularArray};
use alhc::{Composition, Partition, TruncatedSeries};
use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "alhc", version, about = "Anti-lecture hall compositions, overpartitions and their q-series identities")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    JsonLines,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Count the members of a family for every weight 0..=n.
    Count {
        /// F, Q, A, A_k, E, H, O, D, P, partitions or R.
        family: String,
        /// Bound, length or modulus, for families that take one.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        n: usize,
    },
    /// Print the coefficients of a family's generating function or of an
    /// identity's two sides.
    Series {
        /// Family name, or identity id with --identity.
        target: String,
        /// Treat TARGET as an identity id.
        #[arg(long)]
        identity: bool,
        #[arg(long, value_enum, default_value_t = Side::Both)]
        side: Side,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 20)]
        order: usize,
    },
    /// Check one identity coefficient by coefficient.
    Verify {
        id: String,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 40)]
        order: usize,
    },
    /// Check every identity on the built-in parameter grid.
    VerifyAll,
    /// Apply the Durfee-rectangle bijection or its inverse.
    Bijection {
        #[arg(value_enum)]
        map: Map,
        #[arg(long)]
        k: usize,
        /// Input partition for `theta`, e.g. 5,3,3.
        #[arg(long, conflicts_with = "composition")]
        partition: Option<String>,
        /// Input composition for `theta-inv`, e.g. 2,4,2.
        #[arg(long)]
        composition: Option<String>,
        /// Also print the Durfee rectangles and intermediate triangles.
        #[arg(long)]
        trace: bool,
    },
    /// Print the A-triangle of a composition and its decomposition.
    Decompose {
        #[arg(long)]
        composition: String,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = ParityArg::Even)]
        parity: ParityArg,
    },
    /// List the registered identity ids.
    List,
}

#[derive(Args, Clone, Copy)]
struct ParamArgs {
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
}

impl From<ParamArgs> for Params {
    fn from(p: ParamArgs) -> Self {
        Params { k: p.k, a: p.a, m: p.m, p: p.p }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Side {
    Lhs,
    Rhs,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Map {
    Theta,
    ThetaInv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ParityArg {
    Even,
    Odd,
}

impl From<ParityArg> for Parity {
    fn from(p: ParityArg) -> Self {
        match p {
            ParityArg::Even => Parity::Even,
            ParityArg::Odd => Parity::Odd,
        }
    }
}

/// Largest weight or order accepted on the command line.
const MAX_ORDER: usize = 2000;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = Output::new(cli.format, stdout.lock());
    match run(cli.command, &mut out).and_then(|code| out.finish().map(|_| code)) {
        Ok(code) => code,
        Err(e) => {
            if e.downcast_ref::<io::Error>().is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe) {
                return ExitCode::SUCCESS;
            }
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, out: &mut Output<impl Write>) -> anyhow::Result<ExitCode> {
    match command {
        Command::Count { family, k, n } => {
            check_order("--n", n)?;
            let fam = Family::from_name(&family, k)?;
            let gf = family_gf(fam, n);
            count_records(out, fam, &gf)?;
        }
        Command::Series { target, identity, side, params, order } => {
            check_order("--order", order)?;
            if identity {
                let s = sides(&target, params.into(), order)?;
                for (name, series) in [("lhs", &s.lhs), ("rhs", &s.rhs)] {
                    if side == Side::Both || (side == Side::Lhs) == (name == "lhs") {
                        let label = if side == Side::Both { Some(name) } else { None };
                        series_record(out, s.id, &s.params, name, label, series)?;
                    }
                }
            } else {
                let fam = Family::from_name(&target, params.k).map_err(|e| {
                    if IDENTITIES.iter().any(|(id, _)| *id == target) {
                        anyhow!("{e} (`{target}` is also an identity id; pass --identity for its sides)")
                    } else {
                        anyhow!("{e}")
                    }
                })?;
                let params = fam.param().map(|k| BTreeMap::from([("k".to_string(), k)])).unwrap_or_default();
                series_record(out, fam.name(), &params, "gf", None, &family_gf(fam, order))?;
            }
        }
        Command::Verify { id, params, order } => {
            check_order("--order", order)?;
            let report = verify(&id, params.into(), order)?;
            report_record(out, &report)?;
            return Ok(if report.passed { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
        Command::VerifyAll => return verify_all(out),
        Command::Bijection { map, k, partition, composition, trace } => {
            let (input, trace_data) = match map {
                Map::Theta => {
                    let text = partition.context("theta needs --partition")?;
                    let p: Partition = text.parse().with_context(|| format!("bad partition `{text}`"))?;
                    (p.to_string(), theta_trace(&p, k)?)
                }
                Map::ThetaInv => {
                    let text = composition.context("theta-inv needs --composition")?;
                    let mu: Composition = text.parse().with_context(|| format!("bad composition `{text}`"))?;
                    let p = theta_inv(&mu, k)?;
                    (mu.to_string(), theta_trace(&p, k)?)
                }
            };
            bijection_record(out, map, k, &input, &trace_data, trace)?;
        }
        Command::Decompose { composition, k, parity } => {
            let lambda: Composition =
                composition.parse().with_context(|| format!("bad composition `{composition}`"))?;
            let t = to_triangle(&lambda)?;
            let d = decompose(&lambda, k, parity.into())?;
            decompose_record(out, &lambda, &t, &d)?;
        }
        Command::List => {
            for (id, description) in IDENTITIES {
                out.record(
                    format!("{id:<12} {description}"),
                    json!({ "id": id, "description": description }),
                    &[("id", id.to_string()), ("description", description.to_string())],
                )?;
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn check_order(flag: &str, value: usize) -> anyhow::Result<()> {
    if value > MAX_ORDER {
        bail!("{flag} {value} is above the limit of {MAX_ORDER}");
    }
    Ok(())
}

/// Runs the grid in parallel and writes the reports in grid order as they
/// complete.
fn verify_all(out: &mut Output<impl Write>) -> anyhow::Result<ExitCode> {
    let grid = default_grid();
    let total = grid.len();
    let (tx, rx) = mpsc::channel();
    let mut pending = BTreeMap::new();
    let mut next = 0;
    let mut failed = 0;
    std::thread::scope(|scope| -> anyhow::Result<()> {
        scope.spawn(move || {
            grid.into_par_iter().enumerate().for_each_with(tx, |tx, (i, (id, params, order))| {
                let _ = tx.send((i, verify(id, params, order)));
            });
        });
        for (i, result) in rx {
            pending.insert(i, result);
            while let Some(result) = pending.remove(&next) {
                let report = result?;
                failed += usize::from(!report.passed);
                report_record(out, &report)?;
                next += 1;
            }
        }
        Ok(())
    })?;
    eprintln!("{} of {total} checks passed", total - failed);
    Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn params_text(params: &BTreeMap<String, usize>) -> String {
    params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";")
}

fn triangle_rows(t: &TriangularArray) -> Vec<Vec<usize>> {
    (1..=t.size()).map(|i| t.row(i)).collect()
}

/// Rows separated by `/`, entries by spaces, for one CSV cell.
fn triangle_cell(t: &TriangularArray) -> String {
    triangle_rows(t).iter().map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")).collect::<Vec<_>>().join("/")
}

fn count_records(out: &mut Output<impl Write>, fam: Family, gf: &TruncatedSeries) -> anyhow::Result<()> {
    if out.format == Format::Plain {
        return out.line(&join(gf.coeffs()));
    }
    let k = fam.param().map(|k| k.to_string()).unwrap_or_default();
    for (n, c) in gf.coeffs().iter().enumerate() {
        out.record(
            String::new(),
            json!({ "family": fam.name(), "k": fam.param(), "n": n, "count": c.to_string() }),
            &[("family", fam.name().to_string()), ("k", k.clone()), ("n", n.to_string()), ("count", c.to_string())],
        )?;
    }
    Ok(())
}

fn series_record(
    out: &mut Output<impl Write>,
    target: &str,
    params: &BTreeMap<String, usize>,
    side: &str,
    label: Option<&str>,
    series: &TruncatedSeries,
) -> anyhow::Result<()> {
    let coeffs = join(series.coeffs());
    let plain = match label {
        Some(l) => format!("{l}: {coeffs}"),
        None => coeffs.clone(),
    };
    let strings: Vec<String> = series.coeffs().iter().map(|c| c.to_string()).collect();
    out.record(
        plain,
        json!({ "target": target, "params": params, "side": side, "order": series.order(), "coeffs": strings }),
        &[
            ("target", target.to_string()),
            ("params", params_text(params)),
            ("side", side.to_string()),
            ("order", series.order().to_string()),
            ("coeffs", coeffs),
        ],
    )
}

fn report_record(out: &mut Output<impl Write>, r: &IdentityReport) -> anyhow::Result<()> {
    let m = r.first_mismatch.as_ref();
    out.record(
        r.to_string(),
        serde_json::to_value(r)?,
        &[
            ("id", r.id.clone()),
            ("params", params_text(&r.params)),
            ("order", r.order.to_string()),
            ("passed", r.passed.to_string()),
            ("mismatch_exponent", m.map(|m| m.exponent.to_string()).unwrap_or_default()),
            ("mismatch_lhs", m.map(|m| m.lhs.clone()).unwrap_or_default()),
            ("mismatch_rhs", m.map(|m| m.rhs.clone()).unwrap_or_default()),
            ("wall_time_ms", r.wall_time_ms.to_string()),
        ],
    )
}

fn bijection_record(
    out: &mut Output<impl Write>,
    map: Map,
    k: usize,
    input: &str,
    t: &ThetaTrace,
    trace: bool,
) -> anyhow::Result<()> {
    let (name, output) = match map {
        Map::Theta => ("theta", t.image.to_string()),
        Map::ThetaInv => ("theta-inv", t.dissection.reassemble().to_string()),
    };
    let mut plain = String::new();
    let mut value = json!({ "map": name, "k": k, "input": input, "output": output });
    let mut fields = vec![("map", name.to_string()), ("k", k.to_string()), ("input", input.to_string())];
    if trace {
        let d = &t.dissection;
        plain.push_str(&FerrersView(d).to_string());
        for (i, b) in t.blocks.iter().enumerate() {
            plain.push_str(&format!("\nblock {} (N = {}):\n{b}", i + 1, d.rect_sizes[i]));
        }
        plain.push_str(&format!("\ncombined:\n{}\n", t.combined));
        let residues: Vec<String> = d.right_residues.iter().map(Partition::to_string).collect();
        value["rect_sizes"] = json!(d.rect_sizes);
        value["residues"] = json!(residues);
        value["blocks"] = json!(t.blocks.iter().map(triangle_rows).collect::<Vec<_>>());
        value["combined"] = json!(triangle_rows(&t.combined));
        fields.push(("rect_sizes", join(&d.rect_sizes)));
        fields.push(("residues", residues.join("/")));
        fields.push(("combined", triangle_cell(&t.combined)));
    }
    plain.push_str(&output);
    fields.insert(3, ("output", output));
    out.record(plain, value, &fields)
}

fn decompose_record(
    out: &mut Output<impl Write>,
    lambda: &Composition,
    t: &TriangularArray,
    d: &Decomposition,
) -> anyhow::Result<()> {
    let parity = match d.parity {
        Parity::Even => "even",
        Parity::Odd => "odd",
    };
    let mut plain = format!("T({lambda}):\n{t}\nN = {}\nm = {}\n", join(&d.ns), join(&d.ms));
    plain.push_str(&format!("\nR({},1):\n{}", d.ns[0], d.r1));
    for (n, r) in d.ns[1..].iter().zip(&d.r2s) {
        plain.push_str(&format!("\nR({n},2):\n{r}"));
    }
    plain.push_str(&format!("\nS:\n{}\ntail: {}", d.s, d.tail));
    out.record(
        plain,
        json!({
            "composition": lambda.to_string(),
            "k": d.k(),
            "parity": parity,
            "triangle": triangle_rows(t),
            "ns": d.ns,
            "ms": d.ms,
            "s": triangle_rows(&d.s),
            "tail": d.tail.parts(),
        }),
        &[
            ("composition", lambda.to_string()),
            ("k", d.k().to_string()),
            ("parity", parity.to_string()),
            ("triangle", triangle_cell(t)),
            ("ns", join(&d.ns)),
            ("ms", join(&d.ms)),
            ("s", triangle_cell(&d.s)),
            ("tail", d.tail.to_string()),
        ],
    )
}

enum Sink<W: Write> {
    Text(W),
    Csv(Box<csv::Writer<W>>),
}

/// Writes records in the chosen format. CSV output gets a header row
/// whenever the column set changes.
struct Output<W: Write> {
    format: Format,
    sink: Sink<W>,
    header: Vec<String>,
}

impl<W: Write> Output<W> {
    fn new(format: Format, w: W) -> Self {
        let sink = match format {
            Format::Csv => Sink::Csv(Box::new(csv::WriterBuilder::new().flexible(true).from_writer(w))),
            _ => Sink::Text(w),
        };
        Output { format, sink, header: Vec::new() }
    }

    fn line(&mut self, text: &str) -> anyhow::Result<()> {
        if let Sink::Text(w) = &mut self.sink {
            writeln!(w, "{}", text.trim_end_matches('\n'))?;
        }
        Ok(())
    }

    fn record(&mut self, plain: String, value: Value, fields: &[(&str, String)]) -> anyhow::Result<()> {
        match self.format {
            Format::Plain => self.line(&plain),
            Format::JsonLines => self.line(&serde_json::to_string(&value)?),
            Format::Csv => {
                let Sink::Csv(w) = &mut self.sink else { unreachable!("csv format always has a csv sink") };
                let names: Vec<String> = fields.iter().map(|(n, _)| n.to_string()).collect();
                if names != self.header {
                    w.write_record(&names)?;
                    self.header = names;
                }
                w.write_record(fields.iter().map(|(_, v)| v.as_str()))?;
                Ok(())
            }
        }
    }

    fn finish(&mut self) -> anyhow::Result<()> {
        match &mut self.sink {
            Sink::Text(w) => w.flush()?,
            Sink::Csv(w) => w.flush()?,
        }
        Ok(())
    }
}
