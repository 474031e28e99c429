//! `leibniz`: build, check and compare structure-constant tables.
//!
//! Exit status: 0 on success or PASS, 1 on a mathematical FAIL, 2 on usage,
//! parse or admissibility errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use leibniz_core::constructions::{
    make_abelian, make_direct_sum, make_dzhumadildaev_sl2, make_generic_family, make_l3_prefamily,
    make_l_family, make_r2, make_sl2, make_theorem2_algebra, FamilySpec,
};
use leibniz_core::scalars::parse_rational;
use leibniz_core::{
    apply_basis_change, compare_profiles, extract_constraints, parse_algebra, parse_change,
    serialize_algebra, verify_isomorphism, AlgebraTable, BasisChange, Error, ProfileComparison,
    Rational, Verdict,
};

#[derive(Parser)]
#[command(name = "leibniz", version, about = "Exact computations with Leibniz algebra tables")]
struct Cli {
    /// Line-oriented `key<TAB>value` output.
    #[arg(long, global = true)]
    porcelain: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Leibniz,
    Lie,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Leibniz or Lie identities on a constant table.
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "leibniz")]
        mode: Mode,
    },
    /// Print a built-in table in `.alg` format.
    Construct {
        /// sl2, r2, abelian, dzhumadildaev, generic, theorem2, prefamily,
        /// Lfamily or direct-sum.
        id: String,
        /// Operands of direct-sum: built-in ids without options or `.alg` files.
        operands: Vec<String>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        l: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        #[arg(long)]
        dim: Option<usize>,
        /// generic: free coefficients on `[e/h/f, y_i]`.
        #[arg(long)]
        sl2_r: bool,
        /// generic: free `x`-tails on every sl2 product.
        #[arg(long)]
        defects: bool,
    },
    /// Print the squares ideal in reduced echelon form.
    Ideal { file: PathBuf },
    /// Print the quotient by the squares ideal in `.alg` format.
    Quotient { file: PathBuf },
    /// Print the polynomial conditions for the Leibniz identity, one per line.
    Constraints { file: PathBuf },
    /// Rewrite a table in a new basis.
    ChangeBasis { file: PathBuf, change: PathBuf },
    /// Check that a change of basis carries the first table onto the second.
    VerifyIso {
        first: PathBuf,
        second: PathBuf,
        /// A change-of-basis file or `identity`.
        change: String,
    },
    /// Print invariant dimensions and compare every pair of tables.
    Profile {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type CmdResult = Result<ExitCode, Failure>;

struct Out {
    porcelain: bool,
    text: String,
}

impl Out {
    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    /// `key<TAB>value` in porcelain mode, `human` otherwise.
    fn kv(&mut self, key: &str, value: impl AsRef<str>, human: impl AsRef<str>) {
        if self.porcelain {
            self.line(format!("{key}\t{}", value.as_ref()));
        } else {
            self.line(human);
        }
    }
}

fn read_table(path: &Path) -> Result<AlgebraTable, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    parse_algebra(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn read_change(path: &Path) -> Result<BasisChange, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    parse_change(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn require_constant(t: &AlgebraTable, command: &str) -> Result<(), Failure> {
    let params = t.occurring_params();
    if params.is_empty() {
        return Ok(());
    }
    let list: Vec<&str> = params.into_iter().collect();
    Err(Failure::Usage(format!(
        "`{command}` needs a constant table but {} depends on {}; run `leibniz constraints` for the admissible parameter values",
        t.name(),
        list.join(" ")
    )))
}

fn status(out: &mut Out, verdict: &Verdict, basis: &[String], pass_text: &str) -> ExitCode {
    match verdict {
        Verdict::Pass => {
            out.kv("status", "PASS", format!("PASS: {pass_text}"));
            ExitCode::SUCCESS
        }
        Verdict::Fail(w) => {
            let text = w.describe(basis);
            out.kv("status", "FAIL", format!("FAIL: {text}"));
            if out.porcelain {
                out.line(format!("witness\t{text}"));
            }
            ExitCode::from(1)
        }
    }
}

fn cmd_check(out: &mut Out, file: &Path, mode: Mode) -> CmdResult {
    let t = read_table(file)?;
    require_constant(&t, "check")?;
    let (verdict, what) = match mode {
        Mode::Leibniz => (t.check_leibniz()?, "Leibniz identity"),
        Mode::Lie => (t.check_lie()?, "antisymmetry and Jacobi identity"),
    };
    Ok(status(out, &verdict, t.basis(), &format!("{} satisfies the {what}", t.name())))
}

fn rational_opt(name: &str, value: &Option<String>) -> Result<Rational, Failure> {
    let s = value
        .as_deref()
        .ok_or_else(|| Failure::Usage(format!("missing --{name}")))?;
    parse_rational(s).map_err(|e| Failure::Usage(format!("--{name}: {e}")))
}

fn usize_opt(name: &str, value: Option<usize>) -> Result<usize, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("missing --{name}")))
}

fn builtin_simple(id: &str) -> Option<AlgebraTable> {
    match id {
        "sl2" => Some(make_sl2()),
        "r2" => Some(make_r2()),
        "prefamily" => Some(make_l3_prefamily()),
        _ => None,
    }
}

fn operand(s: &str) -> Result<AlgebraTable, Failure> {
    match builtin_simple(s) {
        Some(t) => Ok(t),
        None if Path::new(s).exists() => read_table(Path::new(s)),
        None => Err(Failure::Usage(format!(
            "`{s}` is neither sl2, r2, prefamily nor an existing file"
        ))),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_construct(
    out: &mut Out,
    id: &str,
    operands: &[String],
    m: Option<usize>,
    a: &Option<String>,
    l: &Option<String>,
    mu: &Option<String>,
    dim: Option<usize>,
    sl2_r: bool,
    defects: bool,
) -> CmdResult {
    if id != "direct-sum" && !operands.is_empty() {
        return Err(Failure::Usage(format!("`{id}` takes no operands")));
    }
    let t = match id {
        "sl2" | "r2" | "prefamily" => builtin_simple(id).expect("listed id"),
        "abelian" => {
            let n = usize_opt("dim", dim)?;
            if n == 0 {
                return Err(Failure::Usage("--dim must be positive".into()));
            }
            make_abelian(n)
        }
        "dzhumadildaev" => make_dzhumadildaev_sl2(usize_opt("m", m)?),
        "generic" => make_generic_family(&FamilySpec {
            m: usize_opt("m", m)?,
            include_sl2_defects: defects,
            include_sl2_r_products: sl2_r,
        }),
        "theorem2" => make_theorem2_algebra(usize_opt("m", m)?, &rational_opt("a", a)?),
        "Lfamily" => make_l_family(
            &rational_opt("l", l)?,
            &rational_opt("mu", mu)?,
            &rational_opt("a", a)?,
        )?,
        "direct-sum" => {
            let [x, y] = operands else {
                return Err(Failure::Usage("direct-sum takes exactly two operands".into()));
            };
            make_direct_sum(&operand(x)?, &operand(y)?)
        }
        other => return Err(Failure::Usage(format!("unknown constructor `{other}`"))),
    };
    out.text.push_str(&serialize_algebra(&t));
    Ok(ExitCode::SUCCESS)
}

fn cmd_ideal(out: &mut Out, file: &Path) -> CmdResult {
    let t = read_table(file)?;
    require_constant(&t, "ideal")?;
    let ideal = t.squares_ideal()?;
    out.kv(
        "dim",
        ideal.dim().to_string(),
        format!("squares ideal of {}: dimension {}", t.name(), ideal.dim()),
    );
    for row in ideal.row_elements() {
        let s = row.display(t.basis()).to_string();
        out.kv("row", &s, format!("  {s}"));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_quotient(out: &mut Out, file: &Path) -> CmdResult {
    let t = read_table(file)?;
    require_constant(&t, "quotient")?;
    let q = t.quotient(&t.squares_ideal()?)?;
    out.text.push_str(&serialize_algebra(&q.table));
    Ok(ExitCode::SUCCESS)
}

fn cmd_constraints(out: &mut Out, file: &Path) -> CmdResult {
    let t = read_table(file)?;
    for p in extract_constraints(&t).iter() {
        let s = p.to_string();
        out.kv("constraint", &s, &s);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_change_basis(out: &mut Out, file: &Path, change: &Path) -> CmdResult {
    let t = read_table(file)?;
    let c = read_change(change)?;
    out.text.push_str(&serialize_algebra(&apply_basis_change(&t, &c)?));
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify_iso(out: &mut Out, first: &Path, second: &Path, change: &str) -> CmdResult {
    let t1 = read_table(first)?;
    let t2 = read_table(second)?;
    require_constant(&t1, "verify-iso")?;
    require_constant(&t2, "verify-iso")?;
    if t1.dim() != t2.dim() {
        return Err(Failure::Usage(format!(
            "dimension mismatch: {} has dim {}, {} has dim {}",
            t1.name(),
            t1.dim(),
            t2.name(),
            t2.dim()
        )));
    }
    let c = if change == "identity" {
        BasisChange::identity(t1.basis())
    } else {
        read_change(Path::new(change))?
    };
    let verdict = verify_isomorphism(&t1, &t2, &c)?;
    let text = format!("{} maps {} onto {}", c.name(), t1.name(), t2.name());
    Ok(status(out, &verdict, t1.basis(), &text))
}

fn cmd_profile(out: &mut Out, files: &[PathBuf]) -> CmdResult {
    let tables = files
        .iter()
        .map(|f| {
            let t = read_table(f)?;
            require_constant(&t, "profile")?;
            Ok(t)
        })
        .collect::<Result<Vec<_>, Failure>>()?;
    for t in &tables {
        let p = t.profile()?;
        if out.porcelain {
            for (k, v) in p.entries() {
                out.line(format!("{}\t{k}\t{v}", t.name()));
            }
        } else {
            out.line(format!("{}:", t.name()));
            for line in p.to_string().lines() {
                out.line(format!("  {line}"));
            }
        }
    }
    for (i, t1) in tables.iter().enumerate() {
        for t2 in &tables[i + 1..] {
            let pair = format!("{} vs {}", t1.name(), t2.name());
            match compare_profiles(t1, t2)? {
                ProfileComparison::Distinguished { invariants, .. } => {
                    let list = invariants.join(",");
                    out.kv(
                        "compare",
                        format!("{}\t{}\tDISTINGUISHED\t{list}", t1.name(), t2.name()),
                        format!("{pair}: DISTINGUISHED by {list} (not isomorphic)"),
                    );
                }
                ProfileComparison::Inconclusive { .. } => out.kv(
                    "compare",
                    format!("{}\t{}\tINCONCLUSIVE", t1.name(), t2.name()),
                    format!("{pair}: INCONCLUSIVE (every computed invariant agrees)"),
                ),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli, out: &mut Out) -> CmdResult {
    match cli.command {
        Command::Check { file, mode } => cmd_check(out, &file, mode),
        Command::Construct {
            id,
            operands,
            m,
            a,
            l,
            mu,
            dim,
            sl2_r,
            defects,
        } => cmd_construct(out, &id, &operands, m, &a, &l, &mu, dim, sl2_r, defects),
        Command::Ideal { file } => cmd_ideal(out, &file),
        Command::Quotient { file } => cmd_quotient(out, &file),
        Command::Constraints { file } => cmd_constraints(out, &file),
        Command::ChangeBasis { file, change } => cmd_change_basis(out, &file, &change),
        Command::VerifyIso {
            first,
            second,
            change,
        } => cmd_verify_iso(out, &first, &second, &change),
        Command::Profile { files } => cmd_profile(out, &files),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Out {
        porcelain: cli.porcelain,
        text: String::new(),
    };
    let code = run(cli, &mut out);
    print!("{}", out.text);
    match code {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
