//! Command-line front end.
//!
//! Exit status: 0 success, 1 invalid input, 2 a comparison failed, 64 usage error.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::alexander::{
    alexander_functor_qh, alexander_functor_z, alexander_functor_zg, compare_bsda_alexander,
    AlexRing,
};
use crate::bsda::{bsda_z, bsda_zh, enumerate_generators, gr_da};
use crate::diagram::ops::{cap, disjoint, glue, normalize};
use crate::diagram::HeegaardDiagram;
use crate::exterior::{global_unit, GradedMap, Subset};
use crate::fixtures::fixture_library;
use crate::homology::{generator_sum, k_element, kernel_istar, vfn_sut};
use crate::rings::{QHElem, Ring};
use crate::selftest::run_all;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_COMPARE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum RingArg {
    Z,
    Zh,
    Zg,
    Qh,
}

#[derive(Parser, Debug)]
#[command(
    name = "sutured",
    version,
    about = "Decategorified bordered sutured invariants of Heegaard diagrams"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check a diagram file.
    Validate { file: PathBuf },
    /// List generators with their gradings.
    Generators {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Print the bordered map.
    Bsda {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "z")]
        ring: RingArg,
        #[arg(long)]
        json: bool,
        /// Restrict to one input subset, 1-based, e.g. `1,3`.
        #[arg(long = "in", value_name = "I")]
        input: Option<String>,
        /// Restrict to one output subset.
        #[arg(long = "out", value_name = "J")]
        output: Option<String>,
    },
    /// Print the Alexander functor of the normal form.
    Alexander {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "z")]
        ring: RingArg,
        /// Compare with the bordered map and print the unit.
        #[arg(long)]
        compare: bool,
        #[arg(long)]
        json: bool,
    },
    /// Kernel data and the Frohman-Nicas map of the normal form.
    Fn {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Glue the outgoing side of RIGHT into the incoming side of LEFT.
    Glue {
        left: PathBuf,
        right: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Disjoint union, FIRST before SECOND.
    Disjoint {
        first: PathBuf,
        second: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Normal form.
    Normalize {
        file: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Capped closed diagram of the normal form for subsets I and J.
    Cap {
        file: PathBuf,
        #[arg(long = "in", value_name = "I", default_value = "")]
        input: String,
        #[arg(long = "out", value_name = "J", default_value = "")]
        output_subset: String,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Run the acceptance battery.
    Selftest {
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Write the fixture library as JSON files.
    Fixtures {
        /// Target directory; without it the names are listed.
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
}

/// A failure carrying its exit status.
struct Failure {
    code: i32,
    msg: String,
}

fn invalid(msg: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INVALID,
        msg: msg.into(),
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        msg: msg.into(),
    }
}

type Outcome = Result<(String, i32), Failure>;

fn load(path: &Path) -> Result<HeegaardDiagram, Failure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))?;
    HeegaardDiagram::from_json(&text).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn load_valid(path: &Path) -> Result<HeegaardDiagram, Failure> {
    let h = load(path)?;
    let v = h.validate();
    if v.is_empty() {
        Ok(h)
    } else {
        Err(invalid(format!("{}: {}", path.display(), v.join("; "))))
    }
}

/// Parse `1,3` as the 0-based subset {0, 2}; empty text or `-` is the empty set.
pub fn parse_subset(text: &str, n: usize) -> Result<Subset, String> {
    let t = text.trim();
    if t.is_empty() || t == "-" {
        return Ok(Subset::empty());
    }
    let mut s = Subset::empty();
    for part in t.split(',') {
        let k: usize = part
            .trim()
            .parse()
            .map_err(|_| format!("bad index {part:?}"))?;
        if k == 0 || k > n {
            return Err(format!("index {k} outside 1..={n}"));
        }
        s = s.insert(k - 1);
    }
    Ok(s)
}

fn one_based(s: Subset) -> Vec<usize> {
    s.iter().map(|i| i + 1).collect()
}

fn emit_diagram(h: &HeegaardDiagram, output: &Option<PathBuf>) -> Outcome {
    let text = h.to_json();
    match output {
        Some(p) => {
            std::fs::write(p, &text).map_err(|e| invalid(format!("{}: {e}", p.display())))?;
            Ok((format!("wrote {}\n", p.display()), EXIT_OK))
        }
        None => Ok((text, EXIT_OK)),
    }
}

fn render_map<R: Ring>(
    f: &GradedMap<R>,
    i: Option<Subset>,
    j: Option<Subset>,
    json: bool,
) -> String {
    let keep = |a: Subset, b: Subset| i.is_none_or(|x| x == a) && j.is_none_or(|y| y == b);
    if json {
        let entries: Vec<_> = f
            .entries()
            .filter(|((a, b), _)| keep(*a, *b))
            .map(|((a, b), v)| json!({"in": one_based(*a), "out": one_based(*b), "value": v.to_string()}))
            .collect();
        let doc = json!({"degree": f.degree, "entries": entries});
        return serde_json::to_string_pretty(&doc).expect("serializable") + "\n";
    }
    let mut s = format!("degree {} ({} -> {})\n", f.degree, f.src, f.tgt);
    for ((a, b), v) in f.entries().filter(|((a, b), _)| keep(*a, *b)) {
        let _ = writeln!(s, "out{b} <- in{a}: {v}");
    }
    if let (Some(a), Some(b)) = (i, j) {
        if f.entry(a, b).is_zero() {
            let _ = writeln!(s, "out{b} <- in{a}: 0");
        }
    }
    s
}

fn cmd_validate(file: &Path) -> Outcome {
    let h = load(file)?;
    let v = h.validate();
    if v.is_empty() {
        Ok((
            format!(
                "ok: {} (n1={}, a={}, n0={}, b={})\n",
                file.display(),
                h.n1(),
                h.a(),
                h.n0(),
                h.b()
            ),
            EXIT_OK,
        ))
    } else {
        let mut s = String::new();
        for x in &v {
            let _ = writeln!(s, "error: {x}");
        }
        Ok((s, EXIT_INVALID))
    }
}

fn cmd_generators(file: &Path, json: bool) -> Outcome {
    let h = load_valid(file)?;
    let c = h.compile();
    let mut rows = vec![];
    for x in enumerate_generators(&h) {
        let g = gr_da(&h, &x).map_err(|e| invalid(e.to_string()))?;
        let pts: Vec<String> = x
            .points
            .iter()
            .map(|&p| {
                format!(
                    "p{}={}:{}",
                    p + 1,
                    c.beta_ids[c.points[p].beta],
                    c.alpha_ids[c.points[p].alpha]
                )
            })
            .collect();
        rows.push((pts, g));
    }
    if json {
        let v: Vec<_> = rows
            .iter()
            .map(|(pts, g)| {
                json!({
                    "points": pts,
                    "in": one_based(g.o_r),
                    "out": one_based(g.o_l_bar),
                    "intersection_parity": g.intersection_parity,
                    "inv_sigma": g.inv_sigma_x,
                    "inv_idempotent": g.inv_idempotent,
                    "correction": g.correction,
                    "grading": g.total,
                })
            })
            .collect();
        return Ok((
            serde_json::to_string_pretty(&v).expect("serializable") + "\n",
            EXIT_OK,
        ));
    }
    let mut s = format!("{} generators\n", rows.len());
    for (pts, g) in &rows {
        let _ = writeln!(
            s,
            "{}  in{} out{}  gr {} (i {}, inv {}, idem {}, corr {})",
            pts.join(" "),
            g.o_r,
            g.o_l_bar,
            g.total,
            g.intersection_parity,
            g.inv_sigma_x,
            g.inv_idempotent,
            g.correction
        );
    }
    Ok((s, EXIT_OK))
}

fn cmd_bsda(
    file: &Path,
    ring: RingArg,
    json: bool,
    input: &Option<String>,
    output: &Option<String>,
) -> Outcome {
    let h = load_valid(file)?;
    let i = input
        .as_deref()
        .map(|t| parse_subset(t, h.n0()))
        .transpose()
        .map_err(usage)?;
    let j = output
        .as_deref()
        .map(|t| parse_subset(t, h.n1()))
        .transpose()
        .map_err(usage)?;
    let text = match ring {
        RingArg::Z => render_map(&bsda_z(&h), i, j, json),
        RingArg::Zh => render_map(&bsda_zh(&h), i, j, json),
        RingArg::Zg => render_map(&bsda_zh(&h).map_values(|x| x.project_free()), i, j, json),
        RingArg::Qh => {
            let m = h.group.torsion_order;
            render_map(
                &bsda_zh(&h).map_values(|x| QHElem::from_zh(x, m)),
                i,
                j,
                json,
            )
        }
    };
    Ok((text, EXIT_OK))
}

fn alex_ring(ring: RingArg) -> Result<AlexRing, Failure> {
    match ring {
        RingArg::Z => Ok(AlexRing::Z),
        RingArg::Zg => Ok(AlexRing::ZG),
        RingArg::Qh => Ok(AlexRing::QH),
        RingArg::Zh => Err(usage("the Alexander functor is defined over z, zg or qh")),
    }
}

fn cmd_alexander(file: &Path, ring: RingArg, compare: bool, json: bool) -> Outcome {
    let h = load_valid(file)?;
    let ar = alex_ring(ring)?;
    if compare {
        let c = compare_bsda_alexander(&h, ar).map_err(|e| invalid(e.to_string()))?;
        let unit = c.unit.clone();
        let code = if c.pass() { EXIT_OK } else { EXIT_COMPARE };
        if json {
            let doc =
                json!({"ring": format!("{ar:?}").to_lowercase(), "unit": unit, "pass": c.pass()});
            return Ok((
                serde_json::to_string_pretty(&doc).expect("serializable") + "\n",
                code,
            ));
        }
        let mut s = String::new();
        let _ = writeln!(s, "bsda:\n{}", c.bsda);
        let _ = writeln!(s, "functor:\n{}", c.functor);
        let _ = writeln!(s, "unit: {}", unit.as_deref().unwrap_or("none"));
        let _ = writeln!(s, "{}", if c.pass() { "PASS" } else { "FAIL" });
        return Ok((s, code));
    }
    let hn = normalize(&h);
    let text = match ar {
        AlexRing::Z => render_map(
            &alexander_functor_z(&hn).map_err(|e| invalid(e.to_string()))?,
            None,
            None,
            json,
        ),
        AlexRing::ZG => render_map(
            &alexander_functor_zg(&hn).map_err(|e| invalid(e.to_string()))?,
            None,
            None,
            json,
        ),
        AlexRing::QH => render_map(
            &alexander_functor_qh(&hn).map_err(|e| invalid(e.to_string()))?,
            None,
            None,
            json,
        ),
    };
    Ok((text, EXIT_OK))
}

fn cmd_fn(file: &Path, json: bool) -> Outcome {
    let h = load_valid(file)?;
    let hn = normalize(&h);
    let bad = |e: crate::diagram::DiagramError| invalid(e.to_string());
    let ker = kernel_istar(&hn).map_err(bad)?;
    let ke = k_element(&hn).map_err(bad)?;
    let v = vfn_sut(&hn).map_err(bad)?;
    let b = bsda_z(&hn);
    let unit = global_unit(&v, &b).ok().flatten();
    let pass = unit.is_some();
    let code = if pass { EXIT_OK } else { EXIT_COMPARE };
    if json {
        let doc = json!({
            "k": ker.k,
            "rank_ker": ker.rank_ker,
            "prefactor": ker.prefactor.to_string(),
            "wedge": ke.wedge.to_string(),
            "map": v.entries().map(|((a, bb), x)| json!({"in": one_based(*a), "out": one_based(*bb), "value": x.to_string()})).collect::<Vec<_>>(),
            "pass": pass,
        });
        return Ok((
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n",
            code,
        ));
    }
    let mut s = String::new();
    let _ = writeln!(s, "K: {}", ker.k);
    let _ = writeln!(s, "rank ker: {}", ker.rank_ker);
    let _ = writeln!(s, "prefactor: {}", ker.prefactor);
    let _ = writeln!(s, "wedge: {}", ke.wedge);
    let _ = writeln!(s, "map:\n{}", render_map(&v, None, None, false).trim_end());
    let _ = writeln!(
        s,
        "{} vfn = {} * bsda",
        if pass { "PASS" } else { "FAIL" },
        unit.map_or("none".to_string(), |u| u.to_string())
    );
    Ok((s, code))
}

fn cmd_cap(file: &Path, input: &str, output_subset: &str, output: &Option<PathBuf>) -> Outcome {
    let h = load_valid(file)?;
    let hn = if h.has_roles() { h } else { normalize(&h) };
    let i = parse_subset(input, hn.n0()).map_err(usage)?;
    let j = parse_subset(output_subset, hn.n1()).map_err(usage)?;
    let c = cap(&hn, i, j).map_err(|e| invalid(e.to_string()))?;
    let (text, code) = emit_diagram(&c, output)?;
    if output.is_some() {
        let sum = generator_sum(&c).map_err(|e| invalid(e.to_string()))?;
        return Ok((format!("{text}generator sum: {sum}\n"), code));
    }
    Ok((text, code))
}

fn cmd_selftest(seed: u64) -> Outcome {
    let reports = run_all(seed);
    let mut s = String::new();
    let mut failed = 0;
    for r in &reports {
        failed += usize::from(!r.pass);
        let _ = writeln!(s, "{}", r.line());
    }
    let _ = writeln!(
        s,
        "{} of {} criteria passed (seed {seed})",
        reports.len() - failed,
        reports.len()
    );
    Ok((s, if failed == 0 { EXIT_OK } else { EXIT_COMPARE }))
}

fn cmd_fixtures(output: &Option<PathBuf>) -> Outcome {
    let lib = fixture_library();
    let Some(dir) = output else {
        let names: Vec<String> = lib.into_iter().map(|(n, _)| n).collect();
        return Ok((names.join("\n") + "\n", EXIT_OK));
    };
    std::fs::create_dir_all(dir).map_err(|e| invalid(format!("{}: {e}", dir.display())))?;
    for (name, h) in &lib {
        let p = dir.join(format!("{name}.json"));
        std::fs::write(&p, h.to_json()).map_err(|e| invalid(format!("{}: {e}", p.display())))?;
    }
    Ok((
        format!("wrote {} fixtures to {}\n", lib.len(), dir.display()),
        EXIT_OK,
    ))
}

fn dispatch(cmd: &Command) -> Outcome {
    match cmd {
        Command::Validate { file } => cmd_validate(file),
        Command::Generators { file, json } => cmd_generators(file, *json),
        Command::Bsda {
            file,
            ring,
            json,
            input,
            output,
        } => cmd_bsda(file, *ring, *json, input, output),
        Command::Alexander {
            file,
            ring,
            compare,
            json,
        } => cmd_alexander(file, *ring, *compare, *json),
        Command::Fn { file, json } => cmd_fn(file, *json),
        Command::Glue {
            left,
            right,
            output,
        } => {
            let h = glue(&load_valid(left)?, &load_valid(right)?)
                .map_err(|e| invalid(e.to_string()))?;
            emit_diagram(&h, output)
        }
        Command::Disjoint {
            first,
            second,
            output,
        } => {
            let h = disjoint(&load_valid(first)?, &load_valid(second)?)
                .map_err(|e| invalid(e.to_string()))?;
            emit_diagram(&h, output)
        }
        Command::Normalize { file, output } => emit_diagram(&normalize(&load_valid(file)?), output),
        Command::Cap {
            file,
            input,
            output_subset,
            output,
        } => cmd_cap(file, input, output_subset, output),
        Command::Selftest { seed } => cmd_selftest(*seed),
        Command::Fixtures { output } => cmd_fixtures(output),
    }
}

/// Run with the full argument list (program name first), writing to the given streams.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match dispatch(&cli.command) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.msg);
            f.code
        }
    }
}
