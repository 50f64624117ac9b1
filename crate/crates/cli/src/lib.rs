//! Argument parsing and report assembly for the `pjshadow` binary.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Map, Value};

use pjshadow::arith::Prime;
use pjshadow::error::Error;
use pjshadow::exec::Execution;
use pjshadow::imj;
use pjshadow::jshadow;
use pjshadow::padic::{self, PadicNumber};
use pjshadow::rational::NonzeroRational;
use pjshadow::sweep::{self, SweepConfig};
use pjshadow::symbols::{self, Place, SignValue};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "pjshadow", version, about = "Exact checks of p-adic J-homomorphism shadows")]
struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// p-adic precision in digits.
    #[arg(long, global = true, default_value_t = padic::DEFAULT_PRECISION)]
    precision: u32,
    /// Seed for sampled sweeps.
    #[arg(long, global = true, default_value_t = sweep::DEFAULT_SEED)]
    seed: u64,
    /// Evaluate sweep rows on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Pair {
    #[arg(long, allow_hyphen_values = true)]
    a: NonzeroRational,
    #[arg(long, allow_hyphen_values = true)]
    b: NonzeroRational,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hilbert symbol (a, b)_v, at one place or over the support.
    Hilbert {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        place: Option<Place>,
        /// Also decide solvability by Hensel search and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Per-place Hilbert symbols and their product.
    Reciprocity {
        #[command(flatten)]
        pair: Pair,
    },
    /// Sign of x -> ax on Z/p against the Legendre symbol.
    Zolotarev {
        #[arg(long, allow_hyphen_values = true)]
        a: Option<BigInt>,
        #[arg(long, conflicts_with = "p_max")]
        p: Option<Prime>,
        /// Sweep every odd prime up to this bound.
        #[arg(long)]
        p_max: Option<u64>,
    },
    /// Tame symbol of (a, b) at p, in F_p^x.
    Tame {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        p: Prime,
    },
    /// Exact Bernoulli numbers.
    Bernoulli {
        #[arg(long)]
        n: Option<u32>,
        /// All of B_0 ..= B_n-max.
        #[arg(long, conflicts_with = "n")]
        n_max: Option<u32>,
    },
    /// Order of the image of J in stem 4k-1.
    ImjOrder {
        #[arg(long)]
        k: u32,
    },
    /// Order of pi_(2k-1) of the K(1)-local sphere.
    K1Sphere {
        #[arg(long)]
        ell: Prime,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        /// Topological generator; defaults to the smallest one.
        #[arg(long, allow_hyphen_values = true)]
        u: Option<BigInt>,
    },
    /// K_n(F_q).
    Kff {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: u64,
    },
    /// (1/l) log(x^(l-1)) for an l-adic unit x.
    RezkLog {
        #[arg(long, allow_hyphen_values = true)]
        x: NonzeroRational,
        #[arg(long)]
        ell: Prime,
    },
    /// Ad hoc p-adic arithmetic.
    Padic {
        #[arg(long, value_enum)]
        op: PadicOp,
        #[arg(long)]
        p: Prime,
        #[arg(long, allow_hyphen_values = true)]
        x: NonzeroRational,
        #[arg(long, allow_hyphen_values = true)]
        y: Option<NonzeroRational>,
        #[arg(long, allow_hyphen_values = true)]
        exp: Option<i64>,
    },
    /// Run a named verification suite, or all of them.
    Sweep {
        #[arg(required_unless_present = "all")]
        name: Option<String>,
        #[arg(long, conflicts_with = "name")]
        all: bool,
    },
    /// |x|_inf times the product of |x|_p.
    NormProduct {
        #[arg(long, allow_hyphen_values = true)]
        x: NonzeroRational,
    },
    /// The (l, k) grid of image-of-J consistency checks.
    ImjConsistency {
        #[arg(long, default_value_t = 97)]
        ell_max: u64,
        #[arg(long, default_value_t = 30)]
        k_max: u32,
    },
    /// v_l(p^k - 1) >= v_l(u^k - 1).
    Surjectivity {
        #[arg(long)]
        ell: Prime,
        #[arg(long)]
        p: Prime,
        #[arg(long)]
        k: u32,
    },
    /// (u^d)^m - 1 = (u^m - 1)(1 + u^m + ... + u^(m(d-1))) modulo l^precision.
    NormIdentity {
        #[arg(long)]
        ell: Prime,
        #[arg(long, allow_hyphen_values = true)]
        u: BigInt,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        m: u32,
    },
    /// Whether 1 - l^(k-1) is an l-adic unit.
    UnitFactor {
        #[arg(long)]
        ell: Prime,
        #[arg(long)]
        k: u32,
    },
    /// Low-degree J values at a finite place.
    JTable {
        #[arg(long, allow_hyphen_values = true)]
        k: BigInt,
        #[arg(long, allow_hyphen_values = true)]
        x: NonzeroRational,
        #[arg(long)]
        p: Prime,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PadicOp {
    Embed,
    Vp,
    Norm,
    Add,
    Sub,
    Mul,
    Div,
    Inv,
    Pow,
    Log,
    Teichmuller,
    Generator,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "n/a")]
    NotApplicable,
}

impl Verdict {
    fn of(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotApplicable => "n/a",
        }
    }
}

/// A statement id and a one-line mathematical summary of what is checked.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub statement: &'static str,
    pub anchor: &'static str,
}

const fn prov(statement: &'static str, anchor: &'static str) -> Provenance {
    Provenance { statement, anchor }
}

const PRODUCT: Provenance = prov("Theorem product", "the product over all places v of (a,b)_v is +1");
const HILBERT: Provenance = prov("§1.1 footnote", "pi_2 of J at Q_p is the Hilbert symbol (a,b)_p");
const ZOLOTAREV: Provenance =
    prov("§1.1 footnote", "the sign of x -> ax on Z/p equals the Legendre symbol (a/p)");
const ADAMS: Provenance =
    prov("§1.1", "im J in stem 4k-1 is cyclic of order den(B_2k/k), away from 2");
const K1_SPHERE: Provenance =
    prov("§5.2", "pi_(2k-1) of the K(1)-local sphere is Z_l/(u^k - 1)");
const QUILLEN: Provenance =
    prov("§4.2", "K_(2i-1)(F_q) is cyclic of order q^i - 1 and K_(2i)(F_q) = 0 for i > 0");
const RZK: Provenance =
    prov("Prop. rzk", "x -> (1/l) log(x^(l-1)) maps Z_l^x onto Z_l, killing roots of unity");
const IMJ: Provenance =
    prov("Theorem imj", "the l-part of im J in stem 4k-1 has the order of pi_(4k-1) of the K(1)-local sphere");
const SURJ: Provenance =
    prov("§5.5", "v_l(p^k - 1) >= v_l(u^k - 1), so the p-adic image surjects");
const NORM_ID: Provenance =
    prov("§5.5", "(u^d)^m - 1 = (u^m - 1)(1 + u^m + ... + u^(m(d-1)))");
const UNIT: Provenance = prov("§5.4 remark", "the two normalizations differ by the unit 1 - l^(k-1)");
const TATE: Provenance = prov("§7.2", "|x|_inf times the product of |x|_p over all p is 1");
const LOWREAL: Provenance = prov("Lemma lowreal", "pi_0 of J at R is the identity on Z");
const LOWTAME: Provenance = prov("Lemma lowtame", "pi_1 of the tame J is x -> 1/|x|_p, on pi_0 k -> p^k");
const LOWWILD: Provenance = prov("Lemma lowwild", "the wild J is k -> -k on pi_0 and x -> 1/x on pi_1");
const APPENDIX_A: Provenance = prov("Appendix A", "1 + 3 + 9 + ... converges 3-adically to -1/2");

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub rows: Vec<Value>,
    pub verdict: Verdict,
    pub provenance: Vec<Provenance>,
    pub version: &'static str,
}

impl Report {
    fn new(command: &str, inputs: Value) -> Self {
        Report {
            command: command.to_string(),
            inputs: match inputs {
                Value::Object(m) => m,
                _ => Map::new(),
            },
            rows: Vec::new(),
            verdict: Verdict::NotApplicable,
            provenance: Vec::new(),
            version: env!("CARGO_PKG_VERSION"),
        }
    }

    fn verdict(mut self, v: Verdict) -> Self {
        self.verdict = v;
        self
    }

    fn provenance(mut self, p: &[Provenance]) -> Self {
        self.provenance = p.to_vec();
        self
    }

    fn rows(mut self, rows: Vec<Value>) -> Self {
        self.rows = rows;
        self
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        if !self.inputs.is_empty() {
            let _ = writeln!(out, "inputs: {}", flat(&self.inputs));
        }
        let _ = writeln!(out, "rows:");
        for row in &self.rows {
            if let Value::Object(m) = row {
                let _ = writeln!(out, "  {}", flat(m));
            }
        }
        let _ = writeln!(out, "verdict: {}", self.verdict.as_str());
        for p in &self.provenance {
            let _ = writeln!(out, "provenance: {} ({})", p.statement, p.anchor);
        }
        out
    }
}

fn flat(m: &Map<String, Value>) -> String {
    m.iter()
        .map(|(k, v)| match v {
            Value::String(s) => format!("{k}={s}"),
            other => format!("{k}={other}"),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// What the binary prints and returns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output { code, stdout: String::new(), stderr: text }
            } else {
                Output { code, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(&cli) {
        Ok(report) => emit(&report, cli.json),
        Err(e) => Output {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn emit(report: &Report, json: bool) -> Output {
    let code = if report.verdict == Verdict::Fail { EXIT_FAIL } else { EXIT_PASS };
    let stdout = if json {
        serde_json::to_string_pretty(report).expect("report serializes") + "\n"
    } else {
        report.render_text()
    };
    Output { code, stdout, stderr: String::new() }
}

fn config(cli: &Cli) -> SweepConfig {
    SweepConfig {
        exec: if cli.sequential { Execution::Sequential } else { Execution::default() },
        seed: cli.seed,
    }
}

fn execute(cli: &Cli) -> Result<Report, Error> {
    let n = cli.precision;
    match &cli.command {
        Command::Hilbert { pair, place, oracle } => hilbert(pair, *place, *oracle),
        Command::Reciprocity { pair } => reciprocity(pair),
        Command::Zolotarev { a, p, p_max } => zolotarev(a.as_ref(), *p, *p_max, config(cli)),
        Command::Tame { pair, p } => {
            let t = symbols::tame_symbol(&pair.a, &pair.b, *p);
            Ok(Report::new("tame", json!({"a": pair.a.to_string(), "b": pair.b.to_string(), "p": p.get()}))
                .rows(vec![json!({"p": p.get(), "tame": t})])
                .provenance(&[LOWTAME]))
        }
        Command::Bernoulli { n: index, n_max } => bernoulli(*index, *n_max),
        Command::ImjOrder { k } => {
            let r = imj::imj_order(*k)?;
            Ok(Report::new("imj-order", json!({"k": k}))
                .rows(vec![order_row(json!({"k": k}), &r)])
                .provenance(&[ADAMS]))
        }
        Command::K1Sphere { ell, k, u } => {
            let u = match u {
                Some(u) => u.clone(),
                None => padic::canonical_generator(*ell)?.into(),
            };
            let r = imj::k1_sphere_order(*ell, *k, u.clone())?;
            let row = order_row(
                json!({
                    "ell": ell.get(), "k": k, "u": r.generator, "valuation": r.valuation,
                    "closed_form": r.closed_form, "consistent": r.consistent,
                }),
                &r.report,
            );
            Ok(Report::new("k1-sphere", json!({"ell": ell.get(), "k": k, "u": u.to_string()}))
                .rows(vec![row])
                .verdict(Verdict::of(r.consistent))
                .provenance(&[K1_SPHERE]))
        }
        Command::Kff { n: degree, q } => {
            let r = imj::k_finite_field(*degree, *q)?;
            let ok = imj::prime_to_characteristic(&r, *q) && r.is_consistent();
            Ok(Report::new("kff", json!({"n": degree, "q": q}))
                .rows(vec![order_row(json!({"n": degree, "q": q}), &r)])
                .verdict(Verdict::of(ok))
                .provenance(&[QUILLEN]))
        }
        Command::RezkLog { x, ell } => {
            let e = PadicNumber::embed(x, *ell, n)?;
            let r = padic::rezk_log_pi0(&e)?;
            Ok(Report::new("rezk-log", json!({"x": x.to_string(), "ell": ell.get(), "precision": n}))
                .rows(vec![padic_row(json!({"ell": ell.get()}), &r)])
                .provenance(&[RZK]))
        }
        Command::Padic { op, p, x, y, exp } => padic_op(*op, *p, x, y.as_ref(), *exp, n),
        Command::Sweep { name, all } => sweep_cmd(name.as_deref(), *all, config(cli)),
        Command::NormProduct { x } => norm_product(x),
        Command::ImjConsistency { ell_max, k_max } => {
            let rows = sweep::imj_consistency_rows(*ell_max, *k_max, config(cli).exec)?;
            let ok = rows.iter().all(|r| r.holds);
            Ok(Report::new("imj-consistency", json!({"ell_max": ell_max, "k_max": k_max}))
                .rows(rows.iter().map(to_row).collect())
                .verdict(Verdict::of(ok && !rows.is_empty()))
                .provenance(&[IMJ]))
        }
        Command::Surjectivity { ell, p, k } => {
            let r = imj::surjectivity_check(*ell, *p, *k)?;
            Ok(Report::new("surjectivity", json!({"ell": ell.get(), "p": p.get(), "k": k}))
                .rows(vec![to_row(&r)])
                .verdict(Verdict::of(r.holds))
                .provenance(&[SURJ]))
        }
        Command::NormIdentity { ell, u, d, m } => {
            let ok = imj::norm_identity_check(*ell, u.clone(), *d, *m, n)?;
            let inputs = json!({"ell": ell.get(), "u": u.to_string(), "d": d, "m": m, "precision": n});
            Ok(Report::new("norm-identity", inputs.clone())
                .rows(vec![merge(inputs, json!({"holds": ok}))])
                .verdict(Verdict::of(ok))
                .provenance(&[NORM_ID]))
        }
        Command::UnitFactor { ell, k } => {
            let ok = imj::unit_factor_check(*ell, *k)?;
            Ok(Report::new("unit-factor", json!({"ell": ell.get(), "k": k}))
                .rows(vec![json!({"ell": ell.get(), "k": k, "unit": ok})])
                .verdict(Verdict::of(ok))
                .provenance(&[UNIT]))
        }
        Command::JTable { k, x, p } => {
            let rows = jshadow::low_degree_table(k, x, *p, n)?;
            let ok = rows.iter().all(|r| r.is_well_formed());
            let inputs = json!({"k": k.to_string(), "x": x.to_string(), "p": p.get(), "precision": n});
            Ok(Report::new("j-table", inputs)
                .rows(rows.iter().map(to_row).collect())
                .verdict(Verdict::of(ok))
                .provenance(&[LOWREAL, LOWTAME, LOWWILD]))
        }
    }
}

fn to_row<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("rows serialize")
}

fn merge(mut a: Value, b: Value) -> Value {
    if let (Value::Object(a), Value::Object(b)) = (&mut a, b) {
        a.extend(b);
    }
    a
}

fn order_row(base: Value, r: &imj::GroupOrderReport) -> Value {
    let factorization = r
        .factorization
        .iter()
        .map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") })
        .collect::<Vec<_>>()
        .join(" * ");
    let odd = r.odd_part().map_or(Value::Null, |o| Value::String(o.to_string()));
    merge(
        base,
        json!({"order": r.order.to_string(), "factorization": factorization, "odd_part": odd}),
    )
}

fn padic_row(base: Value, x: &PadicNumber) -> Value {
    merge(
        base,
        json!({
            "value": x.to_string(),
            "zero": x.is_zero(),
            "valuation": x.valuation().ok(),
            "unit_digits": x.unit_digits().ok().map(|d| d.to_string()),
            "precision": x.precision(),
        }),
    )
}

fn pair_inputs(pair: &Pair) -> Value {
    json!({"a": pair.a.to_string(), "b": pair.b.to_string()})
}

fn hilbert(pair: &Pair, place: Option<Place>, oracle: bool) -> Result<Report, Error> {
    let places = match place {
        Some(v) => vec![v],
        None => symbols::support(&symbols::Factored::of(&pair.a)?, &symbols::Factored::of(&pair.b)?),
    };
    let mut ok = true;
    let mut rows = Vec::new();
    for v in places {
        let s = symbols::hilbert_symbol(&pair.a, &pair.b, v);
        let mut row = json!({"place": v.to_string(), "symbol": s});
        if oracle {
            let o = symbols::hilbert_oracle(&pair.a, &pair.b, v, symbols::DEFAULT_ORACLE_LEVEL)?;
            ok &= o == s;
            row = merge(row, json!({"oracle": o, "agree": o == s}));
        }
        rows.push(row);
    }
    let mut inputs = pair_inputs(pair);
    if let Some(v) = place {
        inputs = merge(inputs, json!({"place": v.to_string()}));
    }
    Ok(Report::new("hilbert", inputs)
        .rows(rows)
        .verdict(if oracle { Verdict::of(ok) } else { Verdict::NotApplicable })
        .provenance(&[HILBERT]))
}

fn reciprocity(pair: &Pair) -> Result<Report, Error> {
    let r = symbols::hilbert_reciprocity_check(&pair.a, &pair.b)?;
    let mut rows: Vec<Value> = r
        .rows
        .iter()
        .map(|l| json!({"place": l.place.to_string(), "symbol": l.symbol}))
        .collect();
    let others = if r.omitted_places_trivial { SignValue::Plus } else { SignValue::Minus };
    rows.push(json!({"place": "others", "symbol": others}));
    rows.push(json!({"place": "product", "symbol": r.product}));
    Ok(Report::new("reciprocity", pair_inputs(pair))
        .rows(rows)
        .verdict(Verdict::of(r.holds()))
        .provenance(&[PRODUCT, HILBERT]))
}

fn zolotarev(
    a: Option<&BigInt>,
    p: Option<Prime>,
    p_max: Option<u64>,
    cfg: SweepConfig,
) -> Result<Report, Error> {
    if let Some(p_max) = p_max {
        if a.is_some() {
            return Err(Error::InvalidArgument("--a cannot be combined with --p-max".into()));
        }
        let rows = sweep::zolotarev_rows(p_max, cfg.exec);
        let ok = rows.iter().all(|r| r.mismatches == 0);
        return Ok(Report::new("zolotarev", json!({"p_max": p_max}))
            .rows(rows.iter().map(to_row).collect())
            .verdict(Verdict::of(ok && !rows.is_empty()))
            .provenance(&[ZOLOTAREV]));
    }
    let p = p.ok_or_else(|| Error::InvalidArgument("give --p or --p-max".into()))?;
    let values: Vec<BigInt> = match a {
        Some(a) => vec![a.clone()],
        None => (1..p.get()).map(BigInt::from).collect(),
    };
    let mut ok = true;
    let mut rows = Vec::new();
    for a in &values {
        let sign = symbols::zolotarev_sign(a, p)?;
        let leg = symbols::legendre(a, p)?;
        ok &= sign.to_i8() == leg;
        rows.push(json!({"a": a.to_string(), "p": p.get(), "sign": sign, "legendre": leg}));
    }
    let mut inputs = json!({"p": p.get()});
    if let Some(a) = a {
        inputs = merge(inputs, json!({"a": a.to_string()}));
    }
    Ok(Report::new("zolotarev", inputs)
        .rows(rows)
        .verdict(Verdict::of(ok))
        .provenance(&[ZOLOTAREV]))
}

fn bernoulli(index: Option<u32>, n_max: Option<u32>) -> Result<Report, Error> {
    let (lo, hi, inputs) = match (index, n_max) {
        (Some(n), None) => (n, n, json!({"n": n})),
        (None, Some(m)) => (0, m, json!({"n_max": m})),
        _ => return Err(Error::InvalidArgument("give --n or --n-max".into())),
    };
    let table = imj::bernoulli_table(hi);
    let mut ok = true;
    let mut rows = Vec::new();
    for n in lo..=hi {
        let b = imj::BernoulliRational {
            index: n,
            value: table[n as usize].clone(),
        };
        let mut holds = imj::bernoulli_invariants_hold(&b);
        let mut row = json!({"n": n, "value": b.to_string()});
        if n >= 2 && n % 2 == 0 {
            let vsc = imj::vsc_denominator(n)?;
            holds &= BigInt::from(vsc.clone()) == *b.value.denom();
            row = merge(row, json!({"vsc_denominator": vsc.to_string()}));
        }
        ok &= holds;
        rows.push(merge(row, json!({"holds": holds})));
    }
    Ok(Report::new("bernoulli", inputs)
        .rows(rows)
        .verdict(Verdict::of(ok))
        .provenance(&[ADAMS]))
}

fn padic_op(
    op: PadicOp,
    p: Prime,
    x: &NonzeroRational,
    y: Option<&NonzeroRational>,
    exp: Option<i64>,
    n: u32,
) -> Result<Report, Error> {
    let need_y = || y.ok_or_else(|| Error::InvalidArgument("this op needs --y".into()));
    let ex = || PadicNumber::embed(x, p, n);
    let ey = || PadicNumber::embed(need_y()?, p, n);
    let mut inputs = json!({"op": format!("{op:?}").to_lowercase(), "p": p.get(), "x": x.to_string(), "precision": n});
    if let Some(y) = y {
        inputs = merge(inputs, json!({"y": y.to_string()}));
    }
    if let Some(e) = exp {
        inputs = merge(inputs, json!({"exp": e}));
    }
    let base = json!({"p": p.get()});
    let row = match op {
        PadicOp::Vp => json!({"p": p.get(), "vp": padic::vp(x, p)}),
        PadicOp::Norm => json!({"p": p.get(), "norm": padic::padic_norm(x, p).to_string()}),
        PadicOp::Generator => {
            json!({"p": p.get(), "generator": padic::is_topological_generator(x.cleared(), p)?})
        }
        PadicOp::Embed => padic_row(base, &ex()?),
        PadicOp::Add => padic_row(base, &ex()?.add(&ey()?)?),
        PadicOp::Sub => padic_row(base, &ex()?.sub(&ey()?)?),
        PadicOp::Mul => padic_row(base, &ex()?.mul(&ey()?)?),
        PadicOp::Div => padic_row(base, &ex()?.div(&ey()?)?),
        PadicOp::Inv => padic_row(base, &ex()?.inv()?),
        PadicOp::Pow => {
            let e = exp.ok_or_else(|| Error::InvalidArgument("pow needs --exp".into()))?;
            padic_row(base, &ex()?.pow(e)?)
        }
        PadicOp::Log => padic_row(base, &padic::padic_log(&ex()?)?),
        PadicOp::Teichmuller => {
            if !x.is_integer() {
                return Err(Error::InvalidArgument("teichmuller needs an integer --x".into()));
            }
            padic_row(base, &padic::teichmuller(x.numer(), p, n)?)
        }
    };
    Ok(Report::new("padic", inputs).rows(vec![row]))
}

fn norm_product(x: &NonzeroRational) -> Result<Report, Error> {
    let f = symbols::Factored::of(x)?;
    let mut rows = vec![json!({"place": "inf", "norm": x.abs().to_string()})];
    for p in f.primes() {
        let p = Prime::new(p)?;
        rows.push(json!({"place": p.to_string(), "norm": padic::padic_norm(x, p).to_string()}));
    }
    let product = jshadow::adelic_norm_product(x)?;
    rows.push(json!({"place": "product", "norm": product.to_string()}));
    Ok(Report::new("norm-product", json!({"x": x.to_string()}))
        .rows(rows)
        .verdict(Verdict::of(product == NonzeroRational::one()))
        .provenance(&[TATE]))
}

fn suite_provenance(name: &str) -> &'static [Provenance] {
    match name {
        "reciprocity" | "pi2-nontrivial" => &[PRODUCT, HILBERT],
        "hilbert-oracle" => &[HILBERT],
        "zolotarev" => &[ZOLOTAREV],
        "imj-consistency" | "k1-generators" => &[IMJ, K1_SPHERE],
        "bernoulli" => &[ADAMS],
        "rezk" => &[RZK],
        "surjectivity" => &[SURJ],
        "norm-identity" => &[NORM_ID],
        "quillen" => &[QUILLEN],
        "appendix-a" => &[APPENDIX_A],
        "low-degree" => &[LOWREAL, LOWTAME, LOWWILD],
        "unit-factor" => &[UNIT],
        "adelic-product" => &[TATE],
        _ => &[],
    }
}

fn sweep_cmd(name: Option<&str>, all: bool, cfg: SweepConfig) -> Result<Report, Error> {
    let names: Vec<&str> = if all { sweep::SUITES.to_vec() } else { name.into_iter().collect() };
    let mut rows = Vec::new();
    let mut provenance: Vec<Provenance> = Vec::new();
    let mut ok = true;
    for name in &names {
        let o = sweep::run_suite(name, &cfg)?;
        ok &= o.passed();
        for p in suite_provenance(name) {
            if !provenance.contains(p) {
                provenance.push(p.clone());
            }
        }
        rows.push(json!({
            "suite": o.suite,
            "checked": o.checked,
            "failed": o.failed,
            "first_failure": o.failures.first(),
        }));
    }
    let inputs = json!({"suites": names.join(","), "seed": cfg.seed});
    Ok(Report::new("sweep", inputs)
        .rows(rows)
        .verdict(Verdict::of(ok))
        .provenance(&provenance))
}
