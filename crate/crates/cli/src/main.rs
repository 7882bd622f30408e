//! `springer`: enumerate, biject, intersect, lift, verify and draw two-row
//! Springer fiber data from the command line.
//!
//! Exit status is 0 on success, 1 when a verification or oracle check fails
//! and 2 on malformed input.

mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use springer_core::cupdiag::{
    diagrams_for_shape, intersection_graph, intersection_type, node_index, node_name, CupDiagram, Parity,
};
use springer_core::sphere::oracle_cross_check;
use springer_core::springer::{
    jordan_sequence, phi_inverse, sample_rng, sample_t_a, spaltenstein, Ambient, ComponentReport, FlagJson, FormSpec,
    Verifier,
};
use springer_core::tableaux::{
    big_psi, big_psi_inverse, c_to_d, d_to_c, enumerate_adt, enumerate_signed, is_admissible, psi, psi_inverse,
    DominoTableau, Flavor, StandardYoungTableau,
};

#[derive(Parser)]
#[command(name = "springer", version, about = "Two-row Springer fibers of types C and D")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List cup diagrams or domino tableaux of one shape as JSON.
    Enumerate {
        /// Shape `a,b`. For cup diagrams this is the type D shape.
        #[arg(long, value_parser = parse_shape)]
        shape: (usize, usize),
        #[arg(long, value_enum)]
        what: What,
        /// Keep only objects of this parity (number of dots or minus signs).
        #[arg(long, value_parser = parse_parity)]
        parity: Option<Parity>,
        /// Tableau flavor; cup diagrams are always type D.
        #[arg(long, value_parser = parse_flavor, default_value = "D")]
        flavor: Flavor,
    },
    /// Apply one of the bijections to a single object.
    #[command(group(ArgGroup::new("map").required(true)))]
    Biject {
        /// Standard Young tableau, e.g. "5 3 2 / 4 1", to its cup diagram.
        #[arg(long, group = "map")]
        psi: Option<String>,
        /// Cup diagram back to its standard Young tableau.
        #[arg(long = "psi-inv", group = "map")]
        psi_inv: Option<String>,
        /// Signed type D domino tableau to its cup diagram.
        #[arg(long = "Psi", group = "map")]
        big_psi: Option<String>,
        /// Cup diagram back to its signed type D domino tableau.
        #[arg(long = "Psi-inv", group = "map")]
        big_psi_inv: Option<String>,
        /// Signed type D tableau with an odd number of minus signs to type C.
        #[arg(long = "d-to-c", group = "map")]
        d_to_c: Option<String>,
        /// Signed type C tableau back to type D with the requested parity.
        #[arg(long = "c-to-d", group = "map")]
        c_to_d: Option<String>,
        #[arg(long, value_parser = parse_parity, default_value = "odd")]
        parity: Parity,
    },
    /// Intersection types of pairs of components of one shape.
    Intersect {
        #[arg(long, value_parser = parse_shape)]
        shape: (usize, usize),
        /// `all`, or two diagram names such as `a,c`.
        #[arg(long, default_value = "all")]
        pairs: String,
        /// Cross-check every pair against the sphere constraint solver.
        #[arg(long)]
        oracle: bool,
        /// Print the intersection graph in Graphviz DOT format instead.
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// Sample points of a component and print their lifted flags as JSON.
    Lift {
        #[arg(long)]
        diagram: String,
        #[arg(long, default_value_t = 1)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// With `C`, drop the last space of each flag (odd diagrams only).
        #[arg(long, value_parser = parse_flavor, default_value = "D")]
        flavor: Flavor,
    },
    /// Jordan types and Spaltenstein tableau of a flag read from JSON.
    Spaltenstein {
        /// File written by `lift`, or `-` for stdin.
        #[arg(long)]
        flag: PathBuf,
        #[arg(long, value_parser = parse_flavor, default_value = "D")]
        form: Flavor,
        /// Form shape; defaults to the shape recorded in the file.
        #[arg(long, value_parser = parse_shape)]
        shape: Option<(usize, usize)>,
    },
    /// Check that sampled flags of each component have the predicted
    /// geometry and tableau.
    #[command(group(ArgGroup::new("target").required(true)))]
    Verify {
        /// Type D shape whose diagrams are all checked.
        #[arg(long, value_parser = parse_shape, group = "target")]
        shape: Option<(usize, usize)>,
        /// A single diagram.
        #[arg(long, group = "target")]
        diagram: Option<String>,
        #[arg(long, value_parser = parse_flavor, default_value = "D")]
        flavor: Flavor,
        /// Numeric alias for `--flavor`: 1 is D, 2 is C.
        #[arg(long, hide = true, value_parser = parse_flavor_number, conflicts_with = "flavor")]
        theorem: Option<Flavor>,
        #[arg(long, default_value_t = 5)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Draw a cup diagram as SVG.
    Render {
        #[arg(long)]
        diagram: String,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Cups,
    Adt,
    Signed,
}

enum Failure {
    Input(anyhow::Error),
    Check(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

type Run = Result<(), Failure>;

/// `println!` that stops quietly when the reader hangs up, as with `| head`.
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout().lock(), $($t)*);
    }};
}

fn parse_shape(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected a,b but got {s:?}"))?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    Ok((num(a)?, num(b)?))
}

fn parse_flavor(s: &str) -> Result<Flavor, String> {
    match s {
        "D" | "d" => Ok(Flavor::D),
        "C" | "c" => Ok(Flavor::C),
        _ => Err(format!("flavor must be D or C, not {s:?}")),
    }
}

fn parse_flavor_number(s: &str) -> Result<Flavor, String> {
    match s {
        "1" => Ok(Flavor::D),
        "2" => Ok(Flavor::C),
        _ => Err(format!("expected 1 or 2, not {s:?}")),
    }
}

fn parse_parity(s: &str) -> Result<Parity, String> {
    match s {
        "even" => Ok(Parity::Even),
        "odd" => Ok(Parity::Odd),
        _ => Err(format!("parity must be even or odd, not {s:?}")),
    }
}

fn parity_name(p: Parity) -> &'static str {
    match p {
        Parity::Even => "even",
        Parity::Odd => "odd",
    }
}

fn tableau_parity(t: &DominoTableau) -> Parity {
    if t.minus_count().is_multiple_of(2) {
        Parity::Even
    } else {
        Parity::Odd
    }
}

fn d_shape(shape: (usize, usize)) -> anyhow::Result<(usize, usize)> {
    let (a, b) = shape;
    if b > a || b == 0 || (a + b) % 2 == 1 || !is_admissible(a, b, Flavor::D) {
        bail!("({a},{b}) is not a type D shape: need a >= b >= 1 with a, b both odd or a = b");
    }
    Ok(shape)
}

fn diagram(s: &str) -> anyhow::Result<CupDiagram> {
    s.parse().with_context(|| format!("bad cup diagram {s:?}"))
}

fn print_json(v: &impl serde::Serialize) {
    out!("{}", serde_json::to_string_pretty(v).expect("values serialize"));
}

fn enumerate(shape: (usize, usize), what: What, parity: Option<Parity>, flavor: Flavor) -> Run {
    let keep = |p: Parity| parity.is_none_or(|want| want == p);
    let items: Vec<Value> = match what {
        What::Cups => {
            let (a, b) = d_shape(shape)?;
            diagrams_for_shape(a, b)
                .iter()
                .enumerate()
                .filter(|(_, d)| keep(d.parity()))
                .map(|(i, d)| json!({"name": node_name(i), "diagram": d.to_string(), "parity": parity_name(d.parity()), "value": d}))
                .collect()
        }
        What::Adt => {
            if parity.is_some() {
                return Err(Failure::Input(anyhow!("--parity needs signed tableaux or cup diagrams")));
            }
            enumerate_adt(shape.0, shape.1, flavor)
                .context("cannot enumerate")?
                .iter()
                .map(|t| json!({"tableau": t.to_string()}))
                .collect()
        }
        What::Signed => enumerate_signed(shape.0, shape.1, flavor)
            .context("cannot enumerate")?
            .iter()
            .filter(|t| keep(tableau_parity(t)))
            .map(|t| json!({"tableau": t.to_string(), "minus": t.minus_count()}))
            .collect(),
    };
    let what = match what {
        What::Cups => "cups",
        What::Adt => "adt",
        What::Signed => "signed",
    };
    print_json(&json!({"shape": shape, "what": what, "flavor": flavor, "count": items.len(), "items": items}));
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn biject(
    psi_in: Option<String>,
    psi_inv: Option<String>,
    big_psi_in: Option<String>,
    big_psi_inv: Option<String>,
    d_to_c_in: Option<String>,
    c_to_d_in: Option<String>,
    parity: Parity,
) -> Run {
    let (map, input, output) = if let Some(s) = psi_in {
        let t: StandardYoungTableau = s.parse().with_context(|| format!("bad tableau {s:?}"))?;
        ("psi", s, psi(&t).to_string())
    } else if let Some(s) = psi_inv {
        let t = psi_inverse(&diagram(&s)?).context("not in the image of psi")?;
        ("psi-inv", s, t.to_string())
    } else if let Some(s) = big_psi_in {
        let t = DominoTableau::parse(&s, Flavor::D).with_context(|| format!("bad tableau {s:?}"))?;
        ("Psi", s, big_psi(&t).context("cannot apply Psi")?.to_string())
    } else if let Some(s) = big_psi_inv {
        let t = big_psi_inverse(&diagram(&s)?).context("cannot invert Psi")?;
        ("Psi-inv", s, t.to_string())
    } else if let Some(s) = d_to_c_in {
        let t = DominoTableau::parse(&s, Flavor::D).with_context(|| format!("bad tableau {s:?}"))?;
        ("d-to-c", s, d_to_c(&t).context("cannot map to type C")?.to_string())
    } else if let Some(s) = c_to_d_in {
        let t = DominoTableau::parse(&s, Flavor::C).with_context(|| format!("bad tableau {s:?}"))?;
        ("c-to-d", s, c_to_d(&t, parity).context("cannot map to type D")?.to_string())
    } else {
        unreachable!("clap requires one map")
    };
    print_json(&json!({"map": map, "input": input, "output": output}));
    Ok(())
}

fn intersect(shape: (usize, usize), pairs: &str, oracle: bool, dot: bool, as_json: bool) -> Run {
    let (a, b) = d_shape(shape)?;
    let ds = diagrams_for_shape(a, b);
    if dot {
        out!("{}", intersection_graph(&ds).context("diagrams differ in size")?.to_dot());
        return Ok(());
    }
    let selected: Vec<(usize, usize)> = if pairs == "all" {
        (0..ds.len()).flat_map(|i| (0..ds.len()).map(move |j| (i, j))).collect()
    } else {
        let (x, y) = pairs.split_once(',').ok_or_else(|| anyhow!("--pairs takes `all` or `x,y`"))?;
        let idx = |name: &str| {
            node_index(name.trim())
                .filter(|&i| i < ds.len())
                .ok_or_else(|| anyhow!("no diagram named {name:?}; shape ({a},{b}) has {} diagrams", ds.len()))
        };
        vec![(idx(x)?, idx(y)?)]
    };
    let mut rows = Vec::new();
    let mut mismatches = Vec::new();
    for (i, j) in selected {
        let kind = intersection_type(&ds[i], &ds[j]).context("diagrams differ in size")?;
        let mut row = json!({
            "a": node_name(i), "b": node_name(j),
            "diagram_a": ds[i].to_string(), "diagram_b": ds[j].to_string(),
            "type": kind.to_string(),
        });
        if oracle {
            match oracle_cross_check(&ds[i], &ds[j]).context("diagrams differ in size")? {
                Ok(_) => row["oracle"] = json!("agree"),
                Err(m) => {
                    row["oracle"] = json!("disagree");
                    mismatches.push(m.to_string());
                }
            }
        }
        rows.push(row);
    }
    if as_json {
        print_json(&rows);
    } else {
        for r in &rows {
            let tail =
                r.get("oracle").map(|o| format!(" oracle {}", o.as_str().unwrap_or_default())).unwrap_or_default();
            out!(
                "{} {} {}{tail}",
                r["a"].as_str().unwrap_or_default(),
                r["b"].as_str().unwrap_or_default(),
                r["type"].as_str().unwrap_or_default()
            );
        }
    }
    if mismatches.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(mismatches.join("\n")))
    }
}

fn lift(s: &str, samples: u64, seed: u64, flavor: Flavor) -> Run {
    let d = diagram(s)?;
    if flavor == Flavor::C && d.parity() != Parity::Odd {
        return Err(Failure::Input(anyhow!("type C lifts need an odd diagram, {d} is even")));
    }
    let shape = d.d_shape();
    let ambient = Ambient::for_shape(d.m(), shape.0);
    let mut out = Vec::new();
    for index in 0..samples {
        let lines = sample_t_a(&d, &mut sample_rng(&d, seed, index));
        let flag = phi_inverse(&lines, &ambient).map_err(|e| Failure::Check(format!("sample {index}: {e}")))?;
        let (flag, shape) = match flavor {
            Flavor::D => (flag, shape),
            Flavor::C => (flag.pi(), (shape.0 - 1, shape.1 - 1)),
        };
        let flag = FlagJson::from_flag(&flag, &ambient, Some(shape));
        out.push(json!({"index": index, "lines": lines, "flag": flag}));
    }
    print_json(&json!({"diagram": d.to_string(), "flavor": flavor, "seed": seed, "samples": out}));
    Ok(())
}

fn spaltenstein_cmd(path: &PathBuf, form: Flavor, shape: Option<(usize, usize)>) -> Run {
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin()).context("cannot read stdin")?
    } else {
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?
    };
    let value: Value = serde_json::from_str(&text).context("flag file is not JSON")?;
    let flag_value = if value.get("spaces").is_some() {
        value
    } else if let Some(f) = value.pointer("/samples/0/flag") {
        f.clone()
    } else {
        value.get("flag").cloned().ok_or_else(|| anyhow!("no flag found in the JSON"))?
    };
    let fj: FlagJson = serde_json::from_value(flag_value).context("malformed flag")?;
    let shape = shape.or(fj.shape).ok_or_else(|| anyhow!("the file records no shape; pass --shape"))?;
    let flag = fj.to_flag().context("not a flag")?;
    let ambient = Ambient::new(fj.n_half);
    let form_spec = FormSpec::for_shape(form, shape, &ambient).context("bad form shape")?;
    let seq = jordan_sequence(&flag, &form_spec).context("cannot compute Jordan types")?;
    let tableau = spaltenstein(&flag, &form_spec).context("no Spaltenstein tableau")?;
    print_json(&json!({
        "form": form, "shape": shape,
        "jordan": seq.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "tableau": tableau.to_string(),
    }));
    Ok(())
}

fn verify(
    shape: Option<(usize, usize)>,
    single: Option<String>,
    flavor: Flavor,
    samples: u64,
    seed: u64,
    as_json: bool,
) -> Run {
    let ds = match (shape, single) {
        (Some(s), _) => {
            let (a, b) = d_shape(s)?;
            diagrams_for_shape(a, b)
        }
        (None, Some(s)) => vec![diagram(&s)?],
        (None, None) => unreachable!("clap requires a target"),
    };
    let ds: Vec<CupDiagram> = match flavor {
        Flavor::D => ds,
        Flavor::C if shape.is_some() => ds.into_iter().filter(|d| d.parity() == Parity::Odd).collect(),
        Flavor::C => {
            if ds[0].parity() != Parity::Odd {
                return Err(Failure::Input(anyhow!("type C needs an odd diagram, {} is even", ds[0])));
            }
            ds
        }
    };
    let v = Verifier::new();
    let mut reports: Vec<ComponentReport> = Vec::new();
    for d in &ds {
        let r = match flavor {
            Flavor::D => v.verify_component(d, samples, seed),
            Flavor::C => v.verify_type_c(d, samples, seed),
        }
        .with_context(|| format!("cannot verify {d}"))?;
        reports.push(r);
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    if as_json {
        print_json(&reports);
    } else {
        for r in &reports {
            match r.first_failure() {
                None => {
                    let note = r.note.as_deref().map(|n| format!(" ({n})")).unwrap_or_default();
                    out!("PASS {} [{} samples]{note}", r.diagram, r.samples.len());
                }
                Some((idx, c)) => {
                    let at = idx.map(|i| format!("sample {i}")).unwrap_or_else(|| "across samples".into());
                    out!("FAIL {}: {} at {at}: {}", r.diagram, c.name, c.detail.as_deref().unwrap_or(""));
                }
            }
        }
        out!("{} of {} components pass ({flavor}, seed {seed})", reports.len() - failed, reports.len());
    }
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Check(format!("{failed} components failed")))
    }
}

fn render_cmd(s: &str, out: &PathBuf) -> Run {
    let d = diagram(s)?;
    std::fs::write(out, render::svg(&d)).with_context(|| format!("cannot write {}", out.display()))?;
    Ok(())
}

fn run(cli: Cli) -> Run {
    match cli.command {
        Command::Enumerate { shape, what, parity, flavor } => enumerate(shape, what, parity, flavor),
        Command::Biject { psi, psi_inv, big_psi, big_psi_inv, d_to_c, c_to_d, parity } => {
            biject(psi, psi_inv, big_psi, big_psi_inv, d_to_c, c_to_d, parity)
        }
        Command::Intersect { shape, pairs, oracle, dot, json } => intersect(shape, &pairs, oracle, dot, json),
        Command::Lift { diagram, samples, seed, flavor } => lift(&diagram, samples, seed, flavor),
        Command::Spaltenstein { flag, form, shape } => spaltenstein_cmd(&flag, form, shape),
        Command::Verify { shape, diagram, flavor, theorem, samples, seed, json } => {
            verify(shape, diagram, theorem.unwrap_or(flavor), samples, seed, json)
        }
        Command::Render { diagram, out } => render_cmd(&diagram, &out),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
