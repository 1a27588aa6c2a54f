//! Command-line front end. [`run`] never touches the process streams, so it
//! can be driven from tests; `main` only forwards the [`Outcome`].

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::json;

use crate::algebra::{
    centralizer, embedding_from_frame, fab_product, frame_conjugate, make_fab_fiber, noether_skolem_conjugator, segre,
    standard_frame, verify_frame, FabFiber, Frame, FrameCheck, FrameFile, ProjectivePoint,
};
use crate::classes::{
    chern_from_newton, fab_chern_product, fab_from_su_bundle, fab_inverse, fab_newton_product, newton_from_chern,
    psi_bezout, tensor_newton, ClassKind, ClassRing, ClassVector, GradedPolynomial, VirtualBundleClass,
    DEFAULT_TRUNCATION,
};
use crate::homotopy::{exact_sequence_oracle, induced_map, pi_frame_space, pi_grassmannian, InducedMapReport};
use crate::linalg::{Matrix, Rational};

#[derive(Parser, Debug)]
#[command(name = "fabcalc", version, about = "Exact computations for floating algebra bundles")]
pub struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Stable homotopy groups of Gr_{k,l} or Fr_{k,l}.
    Pi {
        #[arg(value_enum)]
        space: Space,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        l: u64,
        #[arg(long)]
        r: u64,
    },
    /// The map pi_r(Gr_{k,l}) -> pi_r(Gr_{m,n}).
    Induced {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        l: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: u64,
    },
    /// (pi_{2r}, pi_{2r-1}) of Gr_{k,l} from the exact sequence.
    Oracle {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        l: u64,
        #[arg(long)]
        r: u64,
    },
    /// Frames of matrix units.
    #[command(subcommand)]
    Frame(FrameCommand),
    /// Frame of the commutant of the subalgebra spanned by a frame.
    Centralizer {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// FAB fibers: an embedding together with its centralizer.
    #[command(subcommand)]
    Fab(FabCommand),
    /// Segre map of two projective points.
    Segre {
        #[arg(long)]
        p: PathBuf,
        #[arg(long)]
        q: PathBuf,
    },
    /// Characteristic-class calculus.
    Class(ClassArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Space {
    /// Matrix Grassmannian Gr_{k,l}.
    Gr,
    /// Frame space Fr_{k,l}.
    Fr,
}

#[derive(Subcommand, Debug)]
pub enum FrameCommand {
    /// The standard frame E_ij ⊗ 1_l.
    Standard {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
    },
    /// Check the frame conditions; exits with status 1 if they fail.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// A matrix g conjugating the standard frame onto the given one.
    Conjugator {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// The frame g·a_ij·g^-1.
    Conjugate {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        g: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum FabCommand {
    /// Build a fiber from a frame file.
    Make {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Product of two fibers (each given as a frame or fiber file).
    Product {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long = "in2")]
        input2: PathBuf,
    },
}

#[derive(clap::Args, Debug)]
pub struct ClassArgs {
    #[arg(value_enum)]
    pub op: ClassOp,
    /// Class vector file (required unless --symbolic).
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
    /// Second class vector file for binary operations.
    #[arg(long = "in2")]
    pub input2: Option<PathBuf>,
    /// Truncation degree.
    #[arg(long = "N")]
    pub n: Option<usize>,
    /// Work with generic classes and print formulas.
    #[arg(long)]
    pub symbolic: bool,
    /// Class family used by symbolic fab-product and fab-inverse.
    #[arg(long, value_enum, default_value = "chern")]
    pub kind: KindArg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ClassOp {
    Newton2chern,
    Chern2newton,
    Tensor,
    FabProduct,
    FabInverse,
    FabFromSu,
    Bezout,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Chern,
    Newton,
}

impl From<KindArg> for ClassKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Chern => ClassKind::Chern,
            KindArg::Newton => ClassKind::Newton,
        }
    }
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Status 1: the computation rejected its input. Status 2: bad arguments or files.
#[derive(Debug)]
enum Failure {
    Domain(String),
    Usage(String),
}

fn domain(e: impl std::fmt::Display) -> Failure {
    Failure::Domain(e.to_string())
}

struct Report {
    text: String,
    status: i32,
}

impl Report {
    fn ok(text: String) -> Self {
        Self { text, status: 0 }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome { status: 2, stdout: String::new(), stderr: rendered }
            } else {
                Outcome { status: 0, stdout: rendered, stderr: String::new() }
            };
        }
    };
    match dispatch(&cli) {
        Ok(Report { mut text, status }) => {
            if !text.ends_with('\n') {
                text.push('\n');
            }
            Outcome { status, stdout: text, stderr: String::new() }
        }
        Err(Failure::Domain(msg)) => Outcome { status: 1, stdout: String::new(), stderr: format!("error: {msg}\n") },
        Err(Failure::Usage(msg)) => Outcome { status: 2, stdout: String::new(), stderr: format!("error: {msg}\n") },
    }
}

fn dispatch(cli: &Cli) -> Result<Report, Failure> {
    let json = cli.json;
    match &cli.command {
        Command::Pi { space, k, l, r } => {
            let g = match space {
                Space::Gr => pi_grassmannian(*r, *k, *l),
                Space::Fr => pi_frame_space(*r, *k, *l),
            }
            .map_err(domain)?;
            Ok(Report::ok(if json { to_json(&g) } else { g.to_string() }))
        }
        Command::Induced { k, l, m, n, r } => {
            let rep = induced_map(*r, *k, *l, *m, *n).map_err(domain)?;
            Ok(Report::ok(if json { to_json(&rep) } else { describe_induced(&rep) }))
        }
        Command::Oracle { k, l, r } => {
            let (even, odd) = exact_sequence_oracle(*k, *l, *r).map_err(domain)?;
            Ok(Report::ok(if json {
                to_json(&json!({ "even": even, "odd": odd }))
            } else {
                format!("pi_{} = {even}\npi_{} = {odd}", 2 * r, 2 * r - 1)
            }))
        }
        Command::Frame(cmd) => frame_command(cmd, json),
        Command::Centralizer { input } => {
            let frame: Frame = read_json(input)?;
            let c = centralizer(&embedding_from_frame(frame)).map_err(domain)?;
            Ok(Report::ok(show_frame(c.frame(), json)))
        }
        Command::Fab(cmd) => fab_command(cmd, json),
        Command::Segre { p, q } => {
            let p: ProjectivePoint = read_json(p)?;
            let q: ProjectivePoint = read_json(q)?;
            let z = segre(&p, &q);
            Ok(Report::ok(if json {
                to_json(&z)
            } else {
                let coords: Vec<String> = z.coords().iter().map(ToString::to_string).collect();
                format!("[{}]", coords.join(" : "))
            }))
        }
        Command::Class(args) => class_command(args, json),
    }
}

fn frame_command(cmd: &FrameCommand, json: bool) -> Result<Report, Failure> {
    match cmd {
        FrameCommand::Standard { k, l } => {
            let f = standard_frame(*k, *l).map_err(domain)?;
            Ok(Report::ok(show_frame(&f, json)))
        }
        FrameCommand::Verify { input } => {
            let file: FrameFile = read_json(input)?;
            let check = verify_frame(&file.generators, file.k, file.n).map_err(domain)?;
            let status = if check.is_valid() { 0 } else { 1 };
            let text = if json {
                let defect = match &check {
                    FrameCheck::Valid => None,
                    FrameCheck::Invalid(d) => Some(d.to_string()),
                };
                to_json(&json!({ "valid": check.is_valid(), "defect": defect }))
            } else {
                check.to_string()
            };
            Ok(Report { text, status })
        }
        FrameCommand::Conjugator { input } => {
            let frame: Frame = read_json(input)?;
            let g = noether_skolem_conjugator(&frame).map_err(domain)?;
            Ok(Report::ok(show_matrix(&g, json)))
        }
        FrameCommand::Conjugate { input, g } => {
            let frame: Frame = read_json(input)?;
            let g: Matrix = read_json(g)?;
            let out = frame_conjugate(&frame, &g).map_err(domain)?;
            Ok(Report::ok(show_frame(&out, json)))
        }
    }
}

fn fab_command(cmd: &FabCommand, json: bool) -> Result<Report, Failure> {
    let fiber = match cmd {
        FabCommand::Make { input } => {
            let frame: Frame = read_json(input)?;
            make_fab_fiber(&embedding_from_frame(frame)).map_err(domain)?
        }
        FabCommand::Product { input, input2 } => {
            let a = read_fiber(input)?;
            let b = read_fiber(input2)?;
            fab_product(&a, &b).map_err(domain)?
        }
    };
    Ok(Report::ok(if json {
        to_json(&fiber)
    } else {
        format!(
            "FAB fiber M_{k} -> M_{n} (k = {k}, l = {l})\ncore:\n{}complement:\n{}",
            frame_text(fiber.core().frame()),
            frame_text(fiber.complement().frame()),
            k = fiber.k(),
            l = fiber.l(),
            n = fiber.k() * fiber.l(),
        )
    }))
}

/// Accepts a fiber file, or a frame file whose frame becomes the core.
fn read_fiber(path: &Path) -> Result<FabFiber, Failure> {
    let value: serde_json::Value = read_json(path)?;
    if value.get("core").is_some() {
        return serde_json::from_value(value).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())));
    }
    let frame: Frame = serde_json::from_value(value).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    make_fab_fiber(&embedding_from_frame(frame)).map_err(domain)
}

fn class_command(args: &ClassArgs, json: bool) -> Result<Report, Failure> {
    if args.symbolic {
        let n = args.n.unwrap_or(DEFAULT_TRUNCATION);
        if n == 0 {
            return Err(Failure::Usage("--N must be positive".into()));
        }
        return symbolic_class(args.op, n, args.kind.into(), json);
    }
    let input = args.input.as_deref().ok_or_else(|| Failure::Usage("--in is required".into()))?;
    let first = truncated(read_json::<ClassVector<Rational>>(input)?, args.n)?;
    let second = || -> Result<ClassVector<Rational>, Failure> {
        let path = args.input2.as_deref().ok_or_else(|| Failure::Usage("--in2 is required".into()))?;
        truncated(read_json(path)?, args.n)
    };
    let out = match args.op {
        ClassOp::Newton2chern => chern_from_newton(&first).map_err(domain)?,
        ClassOp::Chern2newton => newton_from_chern(&first).map_err(domain)?,
        ClassOp::Tensor => {
            let x = VirtualBundleClass::new(first).map_err(domain)?;
            let y = VirtualBundleClass::new(second()?).map_err(domain)?;
            tensor_newton(&x, &y).map_err(domain)?.into_newton()
        }
        ClassOp::FabProduct => {
            let b = second()?;
            match first.kind() {
                ClassKind::Chern => fab_chern_product(&first, &b, first.truncation()).map_err(domain)?,
                ClassKind::Newton => fab_newton_product(&first, &b).map_err(domain)?,
            }
        }
        ClassOp::FabInverse => match first.kind() {
            ClassKind::Newton => fab_inverse(&first).map_err(domain)?,
            ClassKind::Chern => {
                let s = newton_from_chern(&first).map_err(domain)?;
                chern_from_newton(&fab_inverse(&s).map_err(domain)?).map_err(domain)?
            }
        },
        ClassOp::FabFromSu => {
            let xi = VirtualBundleClass::new(first).map_err(domain)?;
            let k = xi.dim().as_integer().and_then(|d| i64::try_from(d).ok()).unwrap_or(0);
            fab_from_su_bundle(&xi, k).map_err(domain)?
        }
        ClassOp::Bezout => {
            let xk = VirtualBundleClass::new(first).map_err(domain)?;
            let xm = VirtualBundleClass::new(second()?).map_err(domain)?;
            psi_bezout(&xk, &xm).map_err(domain)?.into_newton()
        }
    };
    Ok(Report::ok(if json { to_json(&out) } else { show_vector(&out, "", out.is_integral()) }))
}

fn truncated(v: ClassVector<Rational>, n: Option<usize>) -> Result<ClassVector<Rational>, Failure> {
    match n {
        Some(n) if n == 0 => Err(Failure::Usage("--N must be positive".into())),
        Some(n) => v.truncate(n).map_err(domain),
        None => Ok(v),
    }
}

fn symbolic_class(op: ClassOp, n: usize, kind: ClassKind, json: bool) -> Result<Report, Failure> {
    let fab = |kind, label| ClassVector::symbolic_fab(kind, label, n).map_err(domain);
    let plain = |kind, label| ClassVector::symbolic_plain(kind, label, n).map_err(domain);
    let bundle = |label| VirtualBundleClass::new(plain(ClassKind::Newton, label)?).map_err(domain);
    let (out, tag): (ClassVector<GradedPolynomial>, &str) = match op {
        ClassOp::Newton2chern => (chern_from_newton(&plain(ClassKind::Newton, "")?).map_err(domain)?, ""),
        ClassOp::Chern2newton => (newton_from_chern(&plain(ClassKind::Chern, "")?).map_err(domain)?, ""),
        ClassOp::Tensor => (tensor_newton(&bundle("A")?, &bundle("B")?).map_err(domain)?.into_newton(), "(A x B)"),
        ClassOp::FabProduct => {
            let out = match kind {
                ClassKind::Chern => fab_chern_product(&fab(kind, "A")?, &fab(kind, "B")?, n),
                ClassKind::Newton => fab_newton_product(&fab(kind, "A")?, &fab(kind, "B")?),
            };
            (out.map_err(domain)?, "(A x B)")
        }
        ClassOp::FabInverse => {
            let out = match kind {
                ClassKind::Chern => {
                    let s = newton_from_chern(&fab(kind, "A")?).map_err(domain)?;
                    chern_from_newton(&fab_inverse(&s).map_err(domain)?).map_err(domain)?
                }
                ClassKind::Newton => fab_inverse(&fab(kind, "A")?).map_err(domain)?,
            };
            (out, "(A^-1)")
        }
        ClassOp::FabFromSu | ClassOp::Bezout => {
            return Err(Failure::Usage("this operation needs numeric input; drop --symbolic".into()));
        }
    };
    Ok(Report::ok(if json { to_json(&out) } else { show_vector(&out, tag, true) }))
}

fn show_vector<R: ClassRing>(v: &ClassVector<R>, tag: &str, integral: bool) -> String {
    let letter = match v.kind() {
        ClassKind::Chern => "c",
        ClassKind::Newton => "s",
    };
    let mut out = format!("{letter}0{tag} = {}\n", v.dim0());
    for (i, value) in v.values().iter().enumerate() {
        let _ = writeln!(out, "{letter}{}{tag} = {value}", i + 1);
    }
    if !integral {
        out.push_str("note: some classes are not integral\n");
    }
    out
}

fn describe_induced(rep: &InducedMapReport) -> String {
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let mut out = format!("source: {}\ntarget: {}\n", rep.source, rep.target);
    if let Some(f) = rep.factor {
        let _ = writeln!(out, "map: multiplication by {f}");
    }
    if let Some(g) = rep.image_generator {
        let _ = writeln!(out, "image generator: {g}");
    }
    match rep.image_order {
        Some(o) => {
            let _ = writeln!(out, "image order: {o}");
        }
        None => out.push_str("image order: infinite\n"),
    }
    let _ = writeln!(out, "injective: {}\nisomorphism: {}", yes_no(rep.injective), yes_no(rep.is_isomorphism()));
    out
}

fn frame_text(f: &Frame) -> String {
    let mut out = String::new();
    for i in 0..f.k() {
        for j in 0..f.k() {
            let _ = write!(out, "a({},{}) =\n{}", i + 1, j + 1, f.generator(i, j));
        }
    }
    out
}

fn show_frame(f: &Frame, json: bool) -> String {
    if json {
        to_json(f)
    } else {
        format!("{}-frame in M_{}\n{}", f.k(), f.n(), frame_text(f))
    }
}

fn show_matrix(m: &Matrix, json: bool) -> String {
    if json {
        to_json(m)
    } else {
        m.to_string()
    }
}

fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable")
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("fabcalc").chain(args.iter().copied()))
    }

    #[test]
    fn pi_grassmannian_text() {
        let out = run_args(&["pi", "gr", "--k", "2", "--l", "3", "--r", "4"]);
        assert_eq!(out, Outcome { status: 0, stdout: "Z\n".into(), stderr: String::new() });
    }

    #[test]
    fn domain_and_usage_status() {
        assert_eq!(run_args(&["pi", "gr", "--k", "2", "--l", "3", "--r", "9"]).status, 1);
        assert_eq!(run_args(&["pi", "gr", "--k", "2"]).status, 2);
        assert_eq!(run_args(&["bogus"]).status, 2);
        assert_eq!(run_args(&["class", "tensor"]).status, 2);
        assert_eq!(run_args(&["--help"]).status, 0);
    }

    #[test]
    fn symbolic_fab_product_prints_formulas() {
        let out = run_args(&["class", "fab-product", "--symbolic", "--N", "5"]);
        assert_eq!(out.status, 0);
        assert!(out.stdout.contains("c4(A x B) = c4(A) - 5*c2(A)*c2(B) + c4(B)"), "{}", out.stdout);
        assert!(out.stdout.contains("c5(A x B) = c5(A) - 11*c3(A)*c2(B) - 11*c2(A)*c3(B) + c5(B)"));
    }
}
