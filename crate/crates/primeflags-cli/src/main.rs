use std::fmt::Write as _;
use std::process::ExitCode;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use primeflags::arith::is_prime;
use primeflags::boundary::fabry_lindelof;
use primeflags::compositions::Composition;
use primeflags::diagonals::{binomial_basis_text, diagonal_polynomial, walk_diagonal};
use primeflags::polyring::{RatPoly, SparsePolynomial};
use primeflags::quantum::{
    classify_semiclassical, companion_matrix_a, fiber_char_poly, quantum_char_poly, semiclassical_char_poly,
    simplicity_at_one, ZETA,
};
use primeflags::sequences::{
    asymptotic_ratio, dirichlet_coeff_identity_check, ogf_truncation, SequenceKind, SequenceTable,
};
use primeflags::walkgraphs::{build_graph, GraphKind};
use primeflags::witnesses::{goldbach_report, witness, PrimeFlagWitness};
use primeflags::Error;

const EXIT_DOMAIN: u8 = 2;
const EXIT_SIZE: u8 = 3;
const EXIT_USAGE: u8 = 64;
/// Probes above this n need `--long`.
const LONG_FABRY_N: usize = 10_000;

#[derive(Parser)]
#[command(name = "primeflags", version, about = "Quantum spectra of flag varieties and prime-driven sequences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Args)]
struct Out {
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Triangular table of lcyr, tlcyr or ell.
    Seq {
        #[arg(long)]
        kind: String,
        #[arg(long, default_value_t = 18)]
        nmax: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Truncated ordinary generating function in z for fixed N.
    Ogf {
        #[arg(long)]
        kind: String,
        #[arg(long = "N")]
        parts: usize,
        #[arg(long, default_value_t = 20)]
        degree: usize,
        #[command(flatten)]
        out: Out,
    },
    /// Coefficientwise check of the Dirichlet series identity.
    DirichletCheck {
        #[arg(long, default_value_t = 2000)]
        bound: u64,
        #[command(flatten)]
        out: Out,
    },
    /// Ratio of the partial sum of lcyr(n, N) to its asymptotic.
    Asym {
        #[arg(long = "N")]
        parts: usize,
        /// Comma-separated cut-offs.
        #[arg(long, default_value = "1000,10000,100000,1000000")]
        x: String,
        #[command(flatten)]
        out: Out,
    },
    /// Adjacency and transfer matrices of a walk graph.
    Graph {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        out: Out,
    },
    /// Bivariate walk generating function.
    Genfun {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        out: Out,
    },
    /// Diagonal N -> a(N + k, N) as a rational series and eventual polynomial.
    Diag {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        k: usize,
        /// Graph size; defaults to k + 1.
        #[arg(long)]
        m: Option<usize>,
        #[command(flatten)]
        out: Out,
    },
    /// Quantum characteristic polynomial, optionally at rational q.
    Spectrum {
        #[arg(long)]
        lambda: String,
        /// Comma-separated values p/r for q1, q2, ...
        #[arg(long)]
        q: Option<String>,
        #[command(flatten)]
        out: Out,
    },
    /// Semiclassical limits and fiber powers.
    Semiclassical {
        #[arg(long)]
        lambda: String,
        /// Pair index; all pairs when omitted.
        #[arg(long)]
        i: Option<usize>,
        #[command(flatten)]
        out: Out,
    },
    /// Exceeding / non-exceeding classification by both routes.
    Classify {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        i: Option<usize>,
        #[command(flatten)]
        out: Out,
    },
    /// Whether the spectrum at q = 1 is simple.
    Simplicity {
        #[arg(long)]
        lambda: String,
        #[command(flatten)]
        out: Out,
    },
    /// Companion-type matrix of the quantum presentation.
    Companion {
        #[arg(long)]
        lambda: String,
        #[command(flatten)]
        out: Out,
    },
    /// A composition of n into N parts with prime adjacent sums.
    Witness {
        #[arg(long)]
        n: usize,
        #[arg(long = "N")]
        parts: usize,
        #[command(flatten)]
        out: Out,
    },
    /// Four- and six-part witnesses against the Goldbach exceptions.
    Goldbach {
        #[arg(long, default_value_t = 100)]
        nmax: usize,
        #[command(flatten)]
        out: Out,
    },
    /// Fabry-Lindelof probes at theta = 2*pi*m/divisions.
    Fabry {
        /// Comma-separated n values.
        #[arg(long)]
        n: String,
        /// Single angle; the whole table m = 1..divisions when omitted.
        #[arg(long)]
        m: Option<u64>,
        #[arg(long, default_value_t = 10)]
        divisions: u64,
        #[arg(long)]
        precision_bits: Option<usize>,
        /// Allow n above 10000.
        #[arg(long)]
        long: bool,
        #[command(flatten)]
        out: Out,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = e.print();
                    ExitCode::SUCCESS
                }
                ErrorKind::InvalidSubcommand
                | ErrorKind::MissingSubcommand
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    eprint!("{}", e.render());
                    ExitCode::from(EXIT_USAGE)
                }
                _ => {
                    let _ = e.print();
                    ExitCode::from(EXIT_USAGE)
                }
            };
        }
    };
    match run(cli.command) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("primeflags: {e}");
            ExitCode::from(match e {
                Error::SizeGuard(_) => EXIT_SIZE,
                _ => EXIT_DOMAIN,
            })
        }
    }
}

type Res = primeflags::Result<String>;

fn lambda(s: &str) -> primeflags::Result<Composition> {
    s.parse()
}

fn kind(s: &str) -> primeflags::Result<SequenceKind> {
    SequenceKind::from_str(s)
}

fn graph_kind(s: &str) -> primeflags::Result<GraphKind> {
    GraphKind::from_str(s)
}

fn json_out(v: Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable"))
}

fn unsupported(f: Format, what: &str) -> Error {
    let name = match f {
        Format::Text => "text",
        Format::Csv => "csv",
        Format::Json => "json",
    };
    Error::Domain(format!("{what} has no {name} output"))
}

fn run(cmd: Command) -> Res {
    match cmd {
        Command::Seq { kind: k, nmax, format } => seq(kind(&k)?, nmax, format),
        Command::Ogf { kind: k, parts, degree, out } => ogf(kind(&k)?, parts, degree, out.format),
        Command::DirichletCheck { bound, out } => dirichlet(bound, out.format),
        Command::Asym { parts, x, out } => asym(parts, &x, out.format),
        Command::Graph { kind: k, m, out } => graph(graph_kind(&k)?, m, out.format),
        Command::Genfun { kind: k, m, out } => genfun(graph_kind(&k)?, m, out.format),
        Command::Diag { kind: k, k: shift, m, out } => diag(kind(&k)?, shift, m, out.format),
        Command::Spectrum { lambda: l, q, out } => spectrum(&lambda(&l)?, q.as_deref(), out.format),
        Command::Semiclassical { lambda: l, i, out } => semiclassical(&lambda(&l)?, i, out.format),
        Command::Classify { lambda: l, i, out } => classify(&lambda(&l)?, i, out.format),
        Command::Simplicity { lambda: l, out } => simplicity(&lambda(&l)?, out.format),
        Command::Companion { lambda: l, out } => companion(&lambda(&l)?, out.format),
        Command::Witness { n, parts, out } => witness_cmd(n, parts, out.format),
        Command::Goldbach { nmax, out } => goldbach(nmax, out.format),
        Command::Fabry { n, m, divisions, precision_bits, long, out } => {
            fabry(&n, m, divisions, precision_bits, long, out.format)
        }
    }
}

fn seq(kind: SequenceKind, nmax: usize, format: Format) -> Res {
    if nmax < 2 {
        return Err(Error::Domain("nmax must be at least 2".into()));
    }
    let t = SequenceTable::compute(kind, nmax);
    match format {
        Format::Csv => Ok(t.to_csv()),
        Format::Json => {
            let rows: Vec<Value> = t
                .rows()
                .into_iter()
                .map(|(k, vals)| {
                    json!({"N": k, "values": vals.iter().map(|v| v.to_string()).collect::<Vec<_>>()})
                })
                .collect();
            Ok(json_out(json!({"kind": kind.name(), "nmax": nmax, "rows": rows})))
        }
        Format::Text => Err(unsupported(format, "seq")),
    }
}

fn ogf(kind: SequenceKind, parts: usize, degree: usize, format: Format) -> Res {
    let o = ogf_truncation(kind, parts, degree)?;
    let coeffs: Vec<String> = o.coefficients.iter().map(|c| c.to_string()).collect();
    match format {
        Format::Json => Ok(json_out(json!({
            "kind": kind.name(),
            "N": parts,
            "degree": degree,
            "coefficients": coeffs,
            "factorization_holds": o.factorization_holds,
        }))),
        Format::Csv => {
            let mut s = String::from("n,coefficient\n");
            for (n, c) in coeffs.iter().enumerate() {
                let _ = writeln!(s, "{n},{c}");
            }
            Ok(s)
        }
        Format::Text => {
            let mut s = format!("coefficients: {}\n", coeffs.join(","));
            if let Some(h) = o.factorization_holds {
                let _ = writeln!(s, "factorization holds: {h}");
            }
            Ok(s)
        }
    }
}

fn dirichlet(bound: u64, format: Format) -> Res {
    let r = dirichlet_coeff_identity_check(bound);
    match format {
        Format::Json => Ok(json_out(json!({"bound": bound, "holds": r.holds, "first_failure": r.first_failure}))),
        Format::Text => Ok(match r.first_failure {
            None => format!("holds for n <= {bound}\n"),
            Some(n) => format!("fails at n = {n}\n"),
        }),
        Format::Csv => Err(unsupported(format, "dirichlet-check")),
    }
}

fn parse_list<T: FromStr>(s: &str, what: &str) -> primeflags::Result<Vec<T>> {
    s.split(',')
        .map(|p| p.trim().parse().map_err(|_| Error::Parse(format!("bad {what} value {p:?}"))))
        .collect()
}

fn asym(parts: usize, xs: &str, format: Format) -> Res {
    let xs: Vec<u64> = parse_list(xs, "x")?;
    let rho: Vec<f64> = xs.iter().map(|&x| asymptotic_ratio(parts, x)).collect::<primeflags::Result<_>>()?;
    match format {
        Format::Json => Ok(json_out(json!({
            "N": parts,
            "values": xs.iter().zip(&rho).map(|(x, r)| json!({"x": x, "rho": r})).collect::<Vec<_>>(),
        }))),
        _ => {
            let mut s = String::from("x,rho\n");
            for (x, r) in xs.iter().zip(&rho) {
                let _ = writeln!(s, "{x},{r:.12}");
            }
            Ok(s)
        }
    }
}

fn graph(kind: GraphKind, m: usize, format: Format) -> Res {
    let g = build_graph(kind, m)?;
    let adj = g.adjacency_matrix();
    let transfer = g.transfer_matrix();
    match format {
        Format::Json => Ok(json_out(json!({
            "kind": kind.name(),
            "m": m,
            "adjacency": adj,
            "transfer": transfer.rows().iter().map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        }))),
        Format::Csv => Ok(adj
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",") + "\n")
            .collect()),
        Format::Text => {
            let mut s = String::from("adjacency:\n");
            for r in &adj {
                let _ = writeln!(s, "{}", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "));
            }
            let _ = write!(s, "transfer:\n{transfer}");
            Ok(s)
        }
    }
}

fn genfun(kind: GraphKind, m: usize, format: Format) -> Res {
    let f = build_graph(kind, m)?.bivariate_genfun()?;
    match format {
        Format::Json => Ok(json_out(json!({
            "kind": kind.name(),
            "m": m,
            "numerator": f.numerator().to_string(),
            "denominator": f.denominator().to_string(),
        }))),
        Format::Text => Ok(format!("{f}\n")),
        Format::Csv => Err(unsupported(format, "genfun")),
    }
}

fn diag(kind: SequenceKind, k: usize, m: Option<usize>, format: Format) -> Res {
    let e = match m {
        Some(m) if kind != SequenceKind::Lcyr => {
            let d = walk_diagonal(kind, k, m)?;
            let mut e = primeflags::diagonals::eventual_polynomial(&d);
            e.threshold = e.threshold.max(1);
            e
        }
        _ => diagonal_polynomial(kind, k)?,
    };
    let series = if kind == SequenceKind::Lcyr { None } else { Some(walk_diagonal(kind, k, m.unwrap_or(k + 1))?) };
    let shift = if kind == SequenceKind::Lcyr { -2 } else { 0 };
    let binom = binomial_basis_text(&e.polynomial, shift);
    match format {
        Format::Json => Ok(json_out(json!({
            "kind": kind.name(),
            "k": k,
            "series": series.as_ref().map(|s| s.to_string()),
            "polynomial": e.polynomial.to_string(),
            "binomial_form": binom,
            "threshold": e.threshold,
        }))),
        Format::Text => {
            let mut s = String::new();
            if let Some(d) = &series {
                let _ = writeln!(s, "series: {d}");
            }
            let _ = writeln!(s, "polynomial: {}", e.polynomial);
            let _ = writeln!(s, "binomial form: {binom}");
            let _ = writeln!(s, "valid from N = {}", e.threshold);
            Ok(s)
        }
        Format::Csv => Err(unsupported(format, "diag")),
    }
}

fn parse_rational(s: &str) -> primeflags::Result<BigRational> {
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    let (p, r) = match s.split_once('/') {
        Some((p, r)) => (p.trim().parse::<BigInt>().map_err(|_| bad())?, r.trim().parse::<BigInt>().map_err(|_| bad())?),
        None => (s.trim().parse::<BigInt>().map_err(|_| bad())?, BigInt::one()),
    };
    if r.is_zero() {
        return Err(Error::Domain(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(p, r))
}

/// Substitutes rational values for q1, q2, ... leaving a polynomial in zeta.
fn at_rational_q(f: &SparsePolynomial, q: &[BigRational]) -> RatPoly {
    let ring = f.ring();
    let zi = ring.index(ZETA).expect("zeta variable");
    let qi: Vec<Option<usize>> = (1..=q.len()).map(|j| ring.index(&format!("q{j}"))).collect();
    let mut coeffs: Vec<BigRational> = Vec::new();
    for (exps, c) in f.terms() {
        let mut v = BigRational::from_integer(c.clone());
        for (j, idx) in qi.iter().enumerate() {
            if let Some(i) = idx {
                for _ in 0..exps[*i] {
                    v *= &q[j];
                }
            }
        }
        let d = exps[zi] as usize;
        if coeffs.len() <= d {
            coeffs.resize(d + 1, BigRational::zero());
        }
        coeffs[d] += v;
    }
    RatPoly::new(coeffs)
}

fn spectrum(lam: &Composition, q: Option<&str>, format: Format) -> Res {
    let f = quantum_char_poly(lam)?;
    let text = match q {
        None => f.to_string(),
        Some(q) => {
            let q: Vec<BigRational> = q.split(',').map(parse_rational).collect::<primeflags::Result<_>>()?;
            if q.len() + 1 != lam.len() {
                return Err(Error::Shape(format!("expected {} values of q, got {}", lam.len() - 1, q.len())));
            }
            at_rational_q(&f, &q).display_in(ZETA)
        }
    };
    match format {
        Format::Json => Ok(json_out(json!({"lambda": lam.to_string(), "char_poly": text}))),
        Format::Text => Ok(format!("{text}\n")),
        Format::Csv => Err(unsupported(format, "spectrum")),
    }
}

fn pair_indices(lam: &Composition, i: Option<usize>) -> Vec<usize> {
    i.map_or_else(|| (1..lam.len()).collect(), |i| vec![i])
}

fn semiclassical(lam: &Composition, i: Option<usize>, format: Format) -> Res {
    let mut rows = Vec::new();
    for i in pair_indices(lam, i) {
        let limit = semiclassical_char_poly(lam, i)?;
        let (fiber, d) = fiber_char_poly(lam, i)?;
        let power = limit == fiber.pow(d);
        rows.push((i, limit, fiber, d, power));
    }
    match format {
        Format::Json => Ok(json_out(json!({
            "lambda": lam.to_string(),
            "limits": rows.iter().map(|(i, l, f, d, p)| json!({
                "i": i, "limit": l.to_string(), "fiber": f.to_string(), "power": d, "is_power": p,
            })).collect::<Vec<_>>(),
        }))),
        Format::Text => {
            let mut s = String::new();
            for (i, l, f, d, p) in rows {
                let _ = writeln!(s, "i = {i}\n  limit: {l}\n  fiber: {f}\n  power: {d}\n  limit is fiber^power: {p}");
            }
            Ok(s)
        }
        Format::Csv => Err(unsupported(format, "semiclassical")),
    }
}

fn classify(lam: &Composition, i: Option<usize>, format: Format) -> Res {
    let mut rows = Vec::new();
    for i in pair_indices(lam, i) {
        rows.push((i, classify_semiclassical(lam, i)?));
    }
    let spectral = |c: &primeflags::quantum::Classification| c.spectral.map_or("skipped".to_string(), |s| s.to_string());
    match format {
        Format::Json => Ok(json_out(json!({
            "lambda": lam.to_string(),
            "pairs": rows.iter().map(|(i, c)| json!({
                "i": i,
                "arithmetic": c.arithmetic.to_string(),
                "spectral": spectral(c),
                "consistent": c.consistent(),
            })).collect::<Vec<_>>(),
        }))),
        Format::Csv => {
            let mut s = String::from("i,arithmetic,spectral,consistent\n");
            for (i, c) in &rows {
                let _ = writeln!(s, "{i},{},{},{}", c.arithmetic, spectral(c), c.consistent());
            }
            Ok(s)
        }
        Format::Text => {
            let mut s = String::new();
            for (i, c) in &rows {
                let _ = writeln!(s, "i = {i}: arithmetic {}, spectral {}, consistent {}", c.arithmetic, spectral(c), c.consistent());
            }
            Ok(s)
        }
    }
}

fn simplicity(lam: &Composition, format: Format) -> Res {
    let simple = simplicity_at_one(lam)?;
    match format {
        Format::Json => Ok(json_out(json!({"lambda": lam.to_string(), "simple": simple}))),
        Format::Text => Ok(if simple { "simple\n" } else { "not simple\n" }.to_string()),
        Format::Csv => Err(unsupported(format, "simplicity")),
    }
}

fn companion(lam: &Composition, format: Format) -> Res {
    let a = companion_matrix_a(lam).matrix;
    let rows: Vec<Vec<String>> = a.rows().iter().map(|r| r.iter().map(|e| e.to_string()).collect()).collect();
    match format {
        Format::Json => Ok(json_out(json!({"lambda": lam.to_string(), "matrix": rows}))),
        Format::Csv => Ok(rows.iter().map(|r| r.join(",") + "\n").collect()),
        Format::Text => Ok(a.to_string()),
    }
}

fn absence_reason(n: usize, parts: usize) -> String {
    if parts == 0 || parts > n {
        "N out of range".into()
    } else if parts == 2 && !is_prime(n as u64) {
        "n not prime".into()
    } else if parts == 4 && !primeflags::arith::is_sum_of_two_primes(n as u64) {
        "n in Omega".into()
    } else {
        "no prime-type composition".into()
    }
}

fn witness_json(w: &PrimeFlagWitness) -> Value {
    json!({
        "status": "present",
        "lambda": w.lambda.parts(),
        "source": w.source.name(),
        "certificates": w.certificates.iter().map(|(i, p)| json!({"i": i, "sum": p})).collect::<Vec<_>>(),
    })
}

fn witness_cmd(n: usize, parts: usize, format: Format) -> Res {
    let w = witness(n, parts);
    match format {
        Format::Json => Ok(json_out(match &w {
            Some(w) => {
                let mut v = witness_json(w);
                v["n"] = json!(n);
                v["N"] = json!(parts);
                v
            }
            None => json!({"n": n, "N": parts, "status": "absent", "reason": absence_reason(n, parts)}),
        })),
        Format::Text => Ok(match w {
            Some(w) => {
                let sums: Vec<String> = w.certificates.iter().map(|(i, p)| format!("{i}:{p}")).collect();
                format!("{}\nsource: {}\nprime sums: {}\n", w.lambda, w.source, sums.join(" "))
            }
            None => format!("absent\nreason: {}\n", absence_reason(n, parts)),
        }),
        Format::Csv => Err(unsupported(format, "witness")),
    }
}

fn goldbach(nmax: usize, format: Format) -> Res {
    if nmax < 4 {
        return Err(Error::Domain("nmax must be at least 4".into()));
    }
    let r = goldbach_report(nmax);
    let join = |v: &[usize]| {
        if v.is_empty() {
            "none".to_string()
        } else {
            v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        }
    };
    match format {
        Format::Json => Ok(json_out(json!({
            "nmax": nmax,
            "holds": r.holds(),
            "omega": r.omega,
            "six_part_counterexamples": r.six_part_counterexamples,
            "four_part_mismatches": r.four_part_mismatches,
        }))),
        Format::Csv => {
            let mut s = String::from("n,in_omega,four_parts,six_parts\n");
            let show = |w: &Option<PrimeFlagWitness>| {
                w.as_ref().map_or(String::new(), |w| w.lambda.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            };
            for e in &r.entries {
                let _ = writeln!(s, "{},{},{},{}", e.n, e.in_omega, show(&e.four_parts), show(&e.six_parts));
            }
            Ok(s)
        }
        Format::Text => Ok(format!(
            "n <= {nmax}\nomega: {}\nsix-part counterexamples: {}\nfour-part mismatches: {}\nholds: {}\n",
            join(&r.omega),
            join(&r.six_part_counterexamples),
            join(&r.four_part_mismatches),
            r.holds()
        )),
    }
}

fn fabry(ns: &str, m: Option<u64>, divisions: u64, bits: Option<usize>, long: bool, format: Format) -> Res {
    let ns: Vec<usize> = parse_list(ns, "n")?;
    if let Some(&big) = ns.iter().find(|&&n| n > LONG_FABRY_N) {
        if !long {
            return Err(Error::SizeGuard(format!("n = {big} exceeds {LONG_FABRY_N}; pass --long")));
        }
    }
    let precision = |n: usize| bits.unwrap_or(n + 128);
    let ms: Vec<u64> = m.map_or_else(|| (1..=divisions).collect(), |m| vec![m]);
    let mut values: Vec<Vec<String>> = Vec::new();
    for &mm in &ms {
        let mut row = Vec::new();
        for &n in &ns {
            let p = fabry_lindelof(n, mm, divisions, precision(n))?;
            row.push(if m.is_some() { p.to_decimal() } else { format!("{:.6}", p.to_f64()) });
        }
        values.push(row);
    }
    match format {
        Format::Json => Ok(json_out(json!({
            "divisions": divisions,
            "n": ns,
            "rows": ms.iter().zip(&values).map(|(m, r)| json!({"m": m, "values": r})).collect::<Vec<_>>(),
        }))),
        _ => {
            let mut s = String::from("m");
            for n in &ns {
                let _ = write!(s, ",{n}");
            }
            s.push('\n');
            for (mm, row) in ms.iter().zip(&values) {
                let _ = writeln!(s, "{mm},{}", row.join(","));
            }
            Ok(s)
        }
    }
}
