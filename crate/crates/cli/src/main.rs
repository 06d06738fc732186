//! `cactus`: apolarity computations and the cactus-rank verification from
//! the command line.
//!
//! Exit status is 0 on success, 1 when a verification fails and 2 on bad
//! input.

use std::fmt::Write as _;
use std::process::ExitCode;

use cactus_core::{
    admissible_decompositions, annihilator_generators, diff_space, embedding_dims, exotic_extend, local_scheme,
    parse_with, selftest, symmetric_decomposition, v_bound, verify_theorem_with, witness, CandidateFilter, Indexing,
    Polynomial, Side, SymmetricDecomposition,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

#[derive(Parser)]
#[command(name = "cactus", version, about = "Apolarity and cactus-rank bounds for cubic forms")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Emit JSON lines instead of tables.
    #[arg(long, global = true)]
    json: bool,
    /// Write the report to a file.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<std::path::PathBuf>,
    /// Worker threads for enumeration.
    #[arg(long, global = true, value_name = "K")]
    threads: Option<usize>,
    /// Number variables from x0 in affine inputs.
    #[arg(long, global = true)]
    zero_based: bool,
}

#[derive(Args)]
struct PolyArgs {
    /// Polynomial in divided powers, e.g. "x1^2*x2 + x2^2".
    #[arg(long = "f", value_name = "POLY")]
    f: String,
    /// Number of variables; inferred from the input when omitted.
    #[arg(long)]
    nvars: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FilterArg {
    Nonsmoothable,
    Literal,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension and Hilbert function of the space of partials.
    Diff(PolyArgs),
    /// Hilbert function and symmetric decomposition.
    Hilbert(PolyArgs),
    /// Basis of the annihilator up to a degree.
    Annihilator {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long, value_name = "D")]
        max_degree: u32,
    },
    /// Local apolar scheme of a form at the point of a linear form.
    /// Variables are numbered from x0.
    LocalLength {
        #[command(flatten)]
        poly: PolyArgs,
        /// Linear form defining the point.
        #[arg(long, value_name = "LINEAR")]
        at: String,
    },
    /// Admissible symmetric decompositions of a given length.
    Enumerate {
        #[arg(long)]
        length: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        nonsmoothable_only: bool,
    },
    /// Dimension bound for a decomposition or for the decomposition of a
    /// polynomial.
    Bounds {
        /// Compact notation, e.g. "(1,6,6,1) -> (1,6,6,1)".
        #[arg(long, conflicts_with = "f", required_unless_present = "f")]
        decomposition: Option<String>,
        #[arg(long = "f", value_name = "POLY")]
        f: Option<String>,
        #[arg(long)]
        nvars: Option<usize>,
        /// Ambient number of variables.
        #[arg(long)]
        n: u64,
    },
    /// Checks the dimension inequality for every candidate.
    VerifyTheorem {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value = "nonsmoothable")]
        filter: FilterArg,
    },
    /// Extension by hidden variables.
    ExoticExtend {
        #[command(flatten)]
        poly: PolyArgs,
        /// Dual operator of order at least 2; repeat for more variables.
        #[arg(long = "phi", value_name = "DUAL")]
        phis: Vec<String>,
    },
    /// Quartic witness for a cubic surface written as a cubic in x0, x1, x2.
    CuspWitness {
        #[arg(long = "f", value_name = "CUBIC", conflicts_with_all = ["seed", "trials"])]
        f: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        trials: usize,
    },
    /// Runs the worked examples.
    Selftest,
}

enum Failure {
    Usage(String),
}

impl From<cactus_core::Error> for Failure {
    fn from(e: cactus_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(String, bool), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(k) = cli.common.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(k).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok((report, pass)) => {
            if let Some(path) = &cli.common.out {
                if let Err(e) = std::fs::write(path, &report) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                print!("{report}");
            }
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Largest variable index in `text`, over both letters.
fn max_index(text: &str) -> Option<usize> {
    let bytes = text.as_bytes();
    let mut best = None;
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b'x' || bytes[i] == b'y' {
            let start = i + 1;
            let mut j = start;
            while j < bytes.len() && bytes[j].is_ascii_digit() {
                j += 1;
            }
            if let Ok(v) = text[start..j].parse::<usize>() {
                best = best.max(Some(v));
            }
            i = j.max(i + 1);
        } else {
            i += 1;
        }
    }
    best
}

fn infer_nvars(texts: &[&str], nvars: Option<usize>, indexing: Indexing) -> usize {
    nvars.unwrap_or_else(|| {
        let m = texts.iter().filter_map(|t| max_index(t)).max();
        match (m, indexing) {
            (Some(m), Indexing::ZeroBased) => m + 1,
            (Some(m), Indexing::OneBased) => m.max(1),
            (None, _) => 1,
        }
    })
}

fn read(text: &str, nvars: usize, side: Side, indexing: Indexing) -> Result<Polynomial, Failure> {
    parse_with(text, nvars, side, indexing).map_err(|e| Failure::Usage(format!("in {text:?}: {e}")))
}

fn json_line(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

fn run(cli: &Cli) -> Outcome {
    let c = &cli.common;
    let affine = if c.zero_based {
        Indexing::ZeroBased
    } else {
        Indexing::OneBased
    };
    match &cli.command {
        Command::Diff(p) => {
            let n = infer_nvars(&[&p.f], p.nvars, affine);
            let f = read(&p.f, n, Side::Primal, affine)?;
            let space = diff_space(&f)?;
            let h = space.hilbert_function();
            let basis: Vec<String> = space.rows().iter().map(|r| r.to_text(affine)).collect();
            if c.json {
                return Ok((
                    json_line(&json!({"dim_Diff": space.dim(), "H": h, "basis": basis})),
                    true,
                ));
            }
            let mut out = format!("dim_Diff = {}\nH = {h}\n", space.dim());
            for b in basis {
                writeln!(out, "  {b}").unwrap();
            }
            Ok((out, true))
        }
        Command::Hilbert(p) => {
            let n = infer_nvars(&[&p.f], p.nvars, affine);
            let f = read(&p.f, n, Side::Primal, affine)?;
            let dec = symmetric_decomposition(&f)?;
            let h = dec.hilbert();
            let dims = embedding_dims(&dec);
            if c.json {
                let v = json!({"H": h, "deltas": dec.rows(), "d": dec.socle_degree(), "n_dims": dims.values()});
                return Ok((json_line(&v), true));
            }
            let mut out = format!("H = {h}\nd = {}\n", dec.socle_degree());
            for a in 0..dec.num_rows() {
                let row = &dec.row(a)[..=dec.socle_degree() - a];
                let cells: Vec<String> = row.iter().map(u64::to_string).collect();
                writeln!(out, "Delta_{a} = ({})", cells.join(",")).unwrap();
            }
            writeln!(out, "n_a = {:?}", dims.values()).unwrap();
            Ok((out, true))
        }
        Command::Annihilator { poly, max_degree } => {
            let n = infer_nvars(&[&poly.f], poly.nvars, affine);
            let f = read(&poly.f, n, Side::Primal, affine)?;
            let ann = annihilator_generators(&f, *max_degree)?;
            let basis: Vec<String> = ann.generators.iter().map(|g| g.to_text(affine)).collect();
            let minimal: Vec<String> = ann.minimal_generators().iter().map(|g| g.to_text(affine)).collect();
            if c.json {
                let v = json!({
                    "max_degree": ann.max_degree,
                    "basis": basis,
                    "minimal": minimal,
                    "stabilized": ann.stabilized,
                });
                return Ok((json_line(&v), true));
            }
            let mut out = format!(
                "annihilator up to degree {} ({} elements)\n",
                ann.max_degree,
                basis.len()
            );
            for b in &basis {
                writeln!(out, "  {b}").unwrap();
            }
            writeln!(out, "minimal generators: {}", minimal.join(", ")).unwrap();
            writeln!(out, "stabilized = {}", ann.stabilized).unwrap();
            Ok((out, true))
        }
        Command::LocalLength { poly, at } => {
            let n = infer_nvars(&[&poly.f, at], poly.nvars, Indexing::ZeroBased);
            let form = read(&poly.f, n, Side::Primal, Indexing::ZeroBased)?;
            let l = read(at, n, Side::Primal, Indexing::ZeroBased)?;
            let scheme = local_scheme(&form, &l)?;
            let rep = scheme.report();
            let pass = rep.apolarity_checked;
            if c.json {
                return Ok((json_line(&rep), pass));
            }
            let out = format!(
                "length = {}\nH = {}\nlocal polynomial = {}\nannihilator = {}\napolar = {}\n",
                rep.length,
                scheme.hilbert,
                scheme.defining_polynomial,
                rep.annihilator.join(", "),
                rep.apolarity_checked
            );
            Ok((out, pass))
        }
        Command::Enumerate {
            length,
            n,
            nonsmoothable_only,
        } => {
            let cands = admissible_decompositions(*length, *n, *nonsmoothable_only);
            let mut out = String::new();
            for cand in &cands {
                if c.json {
                    out.push_str(&cand.to_json());
                    out.push('\n');
                } else {
                    writeln!(out, "{cand}").unwrap();
                }
            }
            if !c.json {
                writeln!(out, "{} candidates", cands.len()).unwrap();
            }
            Ok((out, true))
        }
        Command::Bounds {
            decomposition,
            f,
            nvars,
            n,
        } => {
            let dec = match (decomposition, f) {
                (Some(text), _) => SymmetricDecomposition::from_compact(text)?,
                (None, Some(text)) => {
                    let k = infer_nvars(&[text], *nvars, affine);
                    symmetric_decomposition(&read(text, k, Side::Primal, affine)?)?
                }
                (None, None) => return Err(Failure::Usage("need --decomposition or --f".into())),
            };
            let rep = v_bound(&dec, *n)?;
            if c.json {
                return Ok((json_line(&rep), true));
            }
            let mut out = format!("{}\n", dec.to_compact());
            writeln!(out, "n_a = {:?}", rep.n_dims).unwrap();
            writeln!(out, "v_theta = {}", rep.v_theta).unwrap();
            writeln!(out, "d_infty = {}", rep.d_infty).unwrap();
            writeln!(out, "d_flag = {}", rep.d_flag).unwrap();
            writeln!(out, "v = {}", rep.v).unwrap();
            if let (Some(w), Some(m)) = (rep.w, rep.margin) {
                writeln!(out, "w = {w}\nmargin = {m}").unwrap();
            }
            Ok((out, true))
        }
        Command::VerifyTheorem { n, filter } => {
            let filter = match filter {
                FilterArg::Nonsmoothable => CandidateFilter::Nonsmoothable,
                FilterArg::Literal => CandidateFilter::Literal,
                FilterArg::All => CandidateFilter::All,
            };
            let rep = verify_theorem_with(*n, filter);
            if c.json {
                let mut out = String::new();
                for row in &rep.rows {
                    out.push_str(&json_line(row));
                }
                out.push_str(&json_line(&json!({
                    "n": rep.n,
                    "cactus_rank": rep.cactus_rank,
                    "filter": rep.filter,
                    "w_table": rep.w_table,
                    "candidates_per_length": rep.candidates_per_length,
                    "worst_margin": rep.worst_margin,
                    "extremal": rep.extremal,
                    "pass": rep.pass,
                })));
                return Ok((out, rep.pass));
            }
            let mut out = String::new();
            let w: Vec<String> = rep.w_table.iter().map(|(l, w)| format!("w({l})={w}")).collect();
            writeln!(out, "{}", w.join(" ")).unwrap();
            writeln!(
                out,
                "{:>3} {:>3} {:>5} {:>9} {:>6}  decomposition",
                "l", "r", "v", "threshold", "margin"
            )
            .unwrap();
            for row in &rep.rows {
                writeln!(
                    out,
                    "{:>3} {:>3} {:>5} {:>9} {:>6}  {}",
                    row.l, row.r, row.v, row.threshold, row.margin, row.decomposition
                )
                .unwrap();
            }
            if let Some(m) = rep.worst_margin {
                writeln!(out, "{} rows, worst margin {m}", rep.rows.len()).unwrap();
            }
            writeln!(out, "{}", rep.summary()).unwrap();
            Ok((out, rep.pass))
        }
        Command::ExoticExtend { poly, phis } => {
            let mut texts: Vec<&str> = vec![&poly.f];
            texts.extend(phis.iter().map(String::as_str));
            let n = infer_nvars(&texts, poly.nvars, affine);
            let f = read(&poly.f, n, Side::Primal, affine)?;
            let ops = phis
                .iter()
                .map(|t| read(t, n, Side::Dual, affine))
                .collect::<Result<Vec<_>, _>>()?;
            let ext = exotic_extend(&f, &ops)?;
            let sf = diff_space(&f)?;
            let se = diff_space(&ext)?;
            let same_h = sf.hilbert_function() == se.hilbert_function();
            let same_linear = se.dim_degree_at_most(1) == sf.dim_degree_at_most(1)
                && (0..n).all(|v| se.contains(&Polynomial::variable(n + phis.len(), Side::Primal, v)));
            let pass = same_h && same_linear;
            if c.json {
                let v = json!({
                    "extension": ext.to_text(affine),
                    "H_f": sf.hilbert_function(),
                    "H_extension": se.hilbert_function(),
                    "same_hilbert": same_h,
                    "same_linear_partials": same_linear,
                });
                return Ok((json_line(&v), pass));
            }
            let out = format!(
                "extension = {}\nH_f = {}\nH_extension = {}\nsame linear partials = {}\n",
                ext.to_text(affine),
                sf.hilbert_function(),
                se.hilbert_function(),
                same_linear
            );
            Ok((out, pass))
        }
        Command::CuspWitness { f, seed, trials } => {
            let reports = match f {
                Some(text) => {
                    let cubic = read(text, 3, Side::Primal, Indexing::ZeroBased)?;
                    vec![witness::cusp_witness(&cubic)?]
                }
                None => witness::cusp_trials(*seed, *trials),
            };
            let bad = reports.iter().filter(|r| !r.ok()).count();
            let mut out = String::new();
            for r in &reports {
                if c.json {
                    out.push_str(&json_line(r));
                } else {
                    writeln!(
                        out,
                        "f = {}\n  G = {}\n  g = {}\n  lengthG = {} H = {}\n  lengthF = {} H_F = {}\n  apolarOK = {}\n  {}",
                        r.f,
                        r.big_g,
                        r.g,
                        r.length_g,
                        r.local_hilbert_g,
                        r.length_f,
                        r.hilbert_f,
                        r.apolar_ok,
                        r.conclusion
                    )
                    .unwrap();
                }
            }
            if !c.json {
                writeln!(out, "{} of {} ok", reports.len() - bad, reports.len()).unwrap();
            }
            Ok((out, bad == 0))
        }
        Command::Selftest => {
            let checks = selftest::run();
            let failed = checks.iter().filter(|c| !c.pass).count();
            let mut out = String::new();
            for ch in &checks {
                if c.json {
                    out.push_str(&json_line(ch));
                } else {
                    let tag = if ch.pass { "ok  " } else { "FAIL" };
                    writeln!(out, "{tag} {}  {}", ch.name, ch.detail).unwrap();
                }
            }
            if !c.json {
                writeln!(out, "{} passed, {failed} failed", checks.len() - failed).unwrap();
            }
            Ok((out, failed == 0))
        }
    }
}
