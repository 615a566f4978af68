//! Command-line front end. Results go to stdout (or `-o`), progress and
//! errors to stderr. Exit codes: 0 pass, 1 failed check, 2 bad input or
//! exhausted budget.

use std::fs;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use crate::cartan::{parse_matrix_text, parse_type_label, CartanData};
use crate::error::{Error, Result};
use crate::hwmodule::{freudenthal, tensor_power_support, DEFAULT_BUDGET};
use crate::present::{
    complete, completion_log, count_normal_words, instantiate_at, instantiate_presentation,
    presented_dimension, presented_dimension_at, PresentedDimension,
};
use crate::report::VerificationReport;
use crate::schur::{
    algebra_span, assemble_with_budget, cell_basis, enveloping_image_dim, rep_dump, specialize,
    verify_divided, verify_presentation_with, Fault, DEFAULT_ALGEBRA_BUDGET,
};
use crate::weyl::{is_saturated, largest_saturated_subset, saturate, Weight, WeightSet};

#[derive(Parser, Debug)]
#[command(
    name = "qschur",
    version,
    about = "Generalized q-Schur algebras from Cartan data"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,

    /// Write results here instead of stdout.
    #[arg(short = 'o', long, global = true)]
    pub output: Option<PathBuf>,

    /// Largest module dimension any construction may reach.
    #[arg(long, global = true, env = "QSCHUR_BUDGET", default_value_t = DEFAULT_BUDGET)]
    pub budget: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FaultArg {
    None,
    KTamper,
}

#[derive(Args, Debug)]
pub struct CartanArgs {
    /// Built-in type such as A2, C2 or G2.
    #[arg(
        long = "type",
        conflicts_with = "matrix",
        required_unless_present = "matrix"
    )]
    pub type_label: Option<String>,

    /// File holding the rank followed by the matrix rows.
    #[arg(long)]
    pub matrix: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct Target {
    #[command(flatten)]
    pub cartan: CartanArgs,

    /// Dominant weights, `;`-separated, coordinates `,`-separated.
    #[arg(long)]
    pub pi: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Cartan data, orbit, saturation and predicted dimension.
    Describe(Target),
    /// Write the assembled representation.
    Build(Target),
    /// Run every relation suite on the assembled representation.
    Verify {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 2)]
        abound: u32,
        #[arg(long, value_enum, default_value = "none")]
        fault: FaultArg,
        /// Also check the quantum relations at `v = p/q`.
        #[arg(long)]
        v_eval: Option<String>,
    },
    /// Compare the assembled, presented and predicted dimensions.
    Dim {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 16)]
        degree_bound: usize,
        #[arg(long)]
        classical: bool,
        /// Also run the presentation with `v = p/q` (heuristic).
        #[arg(long)]
        v_eval: Option<String>,
    },
    /// Image of the enveloping algebra on a tensor power.
    Envdim {
        #[command(flatten)]
        cartan: CartanArgs,
        #[arg(long)]
        hw: String,
        #[arg(long, default_value_t = 1)]
        d: usize,
    },
    /// Print the presentation, the completion log and the dimension.
    Present {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 16)]
        degree_bound: usize,
        #[arg(long)]
        classical: bool,
        #[arg(long)]
        v_eval: Option<String>,
    },
}

/// Lines of output plus whether every check passed.
struct Outcome {
    format: Format,
    text: String,
    passed: bool,
}

impl Outcome {
    fn new(format: Format) -> Self {
        Self {
            format,
            text: String::new(),
            passed: true,
        }
    }

    fn field(&mut self, key: &str, value: impl std::fmt::Display) {
        match self.format {
            Format::Text => self.text.push_str(&format!("{key}: {value}\n")),
            Format::Structured => self.text.push_str(&format!("{key}={value}\n")),
        }
    }

    fn report(&mut self, r: &VerificationReport) {
        match self.format {
            Format::Structured => self.text.push_str(&r.to_structured()),
            Format::Text => {
                for c in r.failures() {
                    let mut line = format!("FAIL {} {} {}", r.suite, c.relation, c.params);
                    if let Some((row, col)) = c.defect {
                        line.push_str(&format!(" defect at ({row},{col})"));
                    }
                    if let Some(n) = &c.note {
                        line.push_str(&format!(" ({n})"));
                    }
                    self.text.push_str(&line);
                    self.text.push('\n');
                }
                self.text.push_str(&format!(
                    "{}: {} checks, {} failed\n",
                    r.suite,
                    r.len(),
                    r.failures().count()
                ));
            }
        }
        self.passed &= r.passed();
    }
}

fn load_cartan(a: &CartanArgs) -> Result<CartanData> {
    match (&a.type_label, &a.matrix) {
        (Some(t), _) => parse_type_label(t),
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
            parse_matrix_text(&text)
        }
        (None, None) => Err(Error::Parse("a Cartan source is required".into())),
    }
}

fn load_target(t: &Target) -> Result<(CartanData, WeightSet)> {
    let c = load_cartan(&t.cartan)?;
    let pi = WeightSet::parse(&t.pi)?;
    if pi.is_empty() {
        return Err(Error::EmptyPi);
    }
    pi.check_rank(c.rank())?;
    if let Some(w) = pi.iter().find(|w| !w.is_dominant()) {
        return Err(Error::NotDominant(w.to_string()));
    }
    Ok((c, pi))
}

fn parse_point(s: &str) -> Result<BigRational> {
    BigRational::from_str(s.trim()).map_err(|_| Error::Parse(format!("bad rational {s:?}")))
}

/// `sum (dim L_l)^2` and the individual dimensions.
fn prediction(c: &CartanData, pi: &WeightSet) -> Result<(u64, Vec<(Weight, u64)>)> {
    let mut dims = Vec::new();
    for l in pi {
        dims.push((l.clone(), freudenthal(c, l)?.total));
    }
    Ok((dims.iter().map(|(_, d)| d * d).sum(), dims))
}

fn dims_text(dims: &[(Weight, u64)]) -> String {
    let parts: Vec<String> = dims.iter().map(|(l, d)| format!("{l}={d}")).collect();
    parts.join(" ")
}

fn describe(t: &Target, out: &mut Outcome) -> Result<()> {
    let (c, pi) = load_target(t)?;
    out.field("cartan", &c);
    out.field("pi", &pi);
    out.field("wpi", crate::weyl::orbit(&c, &pi));
    let sat = is_saturated(&c, &pi)?;
    out.field("saturated", if sat { "yes" } else { "no" });
    let closure = saturate(&c, &pi)?;
    if !sat {
        out.field("closure", &closure);
        out.field("saturated_subset", largest_saturated_subset(&c, &pi)?);
    }
    let (total, dims) = prediction(&c, &closure)?;
    out.field("dims", dims_text(&dims));
    out.field("predicted", total);
    Ok(())
}

fn build(t: &Target, budget: usize) -> Result<String> {
    let (c, pi) = load_target(t)?;
    Ok(rep_dump(&assemble_with_budget(&c, &pi, budget)?))
}

fn verify(
    t: &Target,
    abound: u32,
    fault: FaultArg,
    v_eval: Option<&str>,
    budget: usize,
    out: &mut Outcome,
) -> Result<()> {
    let (c, pi) = load_target(t)?;
    let point = v_eval.map(parse_point).transpose()?;
    eprintln!("assembling {c} pi {pi}");
    let r = assemble_with_budget(&c, &pi, budget)?;
    out.field("dim", r.dim());
    let fault = match fault {
        FaultArg::None => Fault::None,
        FaultArg::KTamper => Fault::KTamper,
    };
    eprintln!("checking relations");
    out.report(&verify_presentation_with(&r, fault));
    eprintln!("checking divided powers up to {abound}");
    out.report(&verify_divided(&r, abound));
    eprintln!("checking cells");
    let span = algebra_span(&r, DEFAULT_ALGEBRA_BUDGET)?;
    out.field("algebra_dim", span.dim());
    match cell_basis(&r, &span) {
        Ok(cd) => out.report(&cd.report),
        Err(Error::MembershipFailure { lambda, s, t }) => {
            let mut rep = VerificationReport::new("cell");
            rep.record_note(
                "member",
                format!("{lambda} S={s} T={t}"),
                false,
                "not in the algebra span",
            );
            out.report(&rep);
        }
        Err(e) => return Err(e),
    }
    eprintln!("specializing at v = 1");
    let one = BigRational::from_integer(1.into());
    let sp = specialize(&r, &one)?;
    let mut classical = sp.report;
    classical.record_note(
        "dim",
        "v=1",
        sp.dimension == span.dim(),
        format!("{} vs {}", sp.dimension, span.dim()),
    );
    out.report(&classical);
    if let Some(v0) = point {
        eprintln!("specializing at v = {v0}");
        let sp = specialize(&r, &v0)?;
        out.report(&sp.report);
        out.field("algebra_dim_at_point", sp.dimension);
    }
    out.field("result", if out.passed { "pass" } else { "fail" });
    Ok(())
}

fn dim(
    t: &Target,
    degree_bound: usize,
    classical: bool,
    v_eval: Option<&str>,
    budget: usize,
    out: &mut Outcome,
) -> Result<()> {
    let (c, pi) = load_target(t)?;
    let point = v_eval.map(parse_point).transpose()?;
    let sat = is_saturated(&c, &pi)?;
    let core = largest_saturated_subset(&c, &pi)?;
    let (predicted, _) = prediction(&c, &core)?;

    let assembled = if sat {
        eprintln!("span closure");
        let r = assemble_with_budget(&c, &pi, budget)?;
        let d = algebra_span(&r, DEFAULT_ALGEBRA_BUDGET)?.dim();
        out.field("assembled", d);
        Some(d as u64)
    } else {
        out.field("assembled", "n/a (pi not saturated)");
        None
    };
    eprintln!("completing the presentation up to degree {degree_bound}");
    let presented = presented_dimension(&c, &pi, classical, degree_bound)?;
    out.field("presented", &presented);
    out.field("prediction", predicted);
    if !sat {
        let (closure_pred, _) = prediction(&c, &saturate(&c, &pi)?)?;
        out.field(
            "note",
            format!(
                "pi is not saturated: the algebra collapses to the one for {core}; the closure {} would give {closure_pred}",
                saturate(&c, &pi)?
            ),
        );
    }
    if let Some(v0) = point {
        let at = presented_dimension_at(&c, &pi, &v0, classical, degree_bound)?;
        out.field("presented_at_point", format!("{at} (v = {v0}, heuristic)"));
    }
    let verdict = match presented.finite() {
        None => "UNSTABILIZED",
        Some(p) if p as u64 == predicted && assembled.is_none_or(|a| a == predicted) => "AGREE",
        Some(_) => "DISAGREE",
    };
    out.passed = verdict == "AGREE";
    out.field("verdict", verdict);
    Ok(())
}

fn envdim(a: &CartanArgs, hw: &str, d: usize, budget: usize, out: &mut Outcome) -> Result<()> {
    let c = load_cartan(a)?;
    let lv = Weight::parse(hw)?;
    if lv.rank() != c.rank() {
        return Err(Error::WeightArity {
            weight: lv.to_string(),
            got: lv.rank(),
            expected: c.rank(),
        });
    }
    let support = tensor_power_support(&c, &lv, d)?;
    let (predicted, _) = prediction(&c, &support)?;
    let image = enveloping_image_dim(&c, &lv, d, budget)?;
    out.field("image", image);
    out.field("support", &support);
    out.field("prediction", predicted);
    Ok(())
}

fn present(
    t: &Target,
    degree_bound: usize,
    classical: bool,
    v_eval: Option<&str>,
    out: &mut Outcome,
) -> Result<()> {
    let (c, pi) = load_target(t)?;
    let (dump, log, dim) = match v_eval {
        Some(s) => {
            let p = instantiate_at(&c, &pi, &parse_point(s)?, classical)?;
            let sys = complete(&p, degree_bound)?;
            (p.dump(), completion_log(&sys), count_normal_words(&sys)?)
        }
        None => {
            let p = instantiate_presentation(&c, &pi, classical)?;
            let sys = complete(&p, degree_bound)?;
            (p.dump(), completion_log(&sys), count_normal_words(&sys)?)
        }
    };
    out.text.push_str(&dump);
    out.text.push_str(&log);
    out.passed = matches!(dim, PresentedDimension::Finite(_));
    out.field("dimension", dim);
    Ok(())
}

/// Execute a parsed command line; returns the process exit code.
pub fn run(cli: &Cli) -> i32 {
    let mut out = Outcome::new(cli.format);
    let result = match &cli.command {
        Command::Describe(t) => describe(t, &mut out),
        Command::Build(t) => build(t, cli.budget).map(|s| out.text = s),
        Command::Verify {
            target,
            abound,
            fault,
            v_eval,
        } => verify(
            target,
            *abound,
            *fault,
            v_eval.as_deref(),
            cli.budget,
            &mut out,
        ),
        Command::Dim {
            target,
            degree_bound,
            classical,
            v_eval,
        } => dim(
            target,
            *degree_bound,
            *classical,
            v_eval.as_deref(),
            cli.budget,
            &mut out,
        ),
        Command::Envdim { cartan, hw, d } => envdim(cartan, hw, *d, cli.budget, &mut out),
        Command::Present {
            target,
            degree_bound,
            classical,
            v_eval,
        } => present(
            target,
            *degree_bound,
            *classical,
            v_eval.as_deref(),
            &mut out,
        ),
    };
    if let Err(e) = result {
        eprintln!("error: {e}");
        return 2;
    }
    let written = match &cli.output {
        Some(path) => {
            fs::write(path, &out.text).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => {
            print!("{}", out.text);
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return 2;
    }
    if out.passed {
        0
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("qschur").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn one_cartan_source() {
        assert!(Cli::try_parse_from(["qschur", "describe", "--pi", "1"]).is_err());
        assert!(Cli::try_parse_from([
            "qschur", "describe", "--type", "A1", "--matrix", "m", "--pi", "1"
        ])
        .is_err());
        let cli = parse(&[
            "describe",
            "--type",
            "A1",
            "--pi",
            "1",
            "--format",
            "structured",
        ]);
        assert_eq!(cli.format, Format::Structured);
    }

    #[test]
    fn points() {
        assert_eq!(
            parse_point("3/7").unwrap(),
            BigRational::new(3.into(), 7.into())
        );
        assert!(parse_point("x").is_err());
    }
}
