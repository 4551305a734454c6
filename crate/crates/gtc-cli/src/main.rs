//! Command-line front end for the gtc library. Every subcommand is a
//! thin composition of library calls: parse matrices, run one workflow,
//! render the report as text or JSON. Reports go to stdout (or --out),
//! diagnostics to stderr.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gtc::{
    analyze, automorphism_group, build_syndrome_table, correct_single_error, is_adjacency_like,
    punctured_minimum_distance, search_twists, verify_coordinate_action, CodeReport, Error,
    FieldElement, GtcCode, Matrix, Objective, PositionMask, SearchResult,
    AUTOMORPHISM_N_LIMIT, DEFAULT_DIST_LIMIT, DEFAULT_INVERTIBLE_BUDGET,
};

#[derive(Parser)]
#[command(
    name = "gtc",
    version,
    about = "Generalized twisted centralizer codes: construction, analysis, decoding"
)]
struct Cli {
    /// Emit the report as JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Write the report to a file instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct the code C(A, D) and print its dimension and basis
    Construct(PairArgs),
    /// Compute code parameters, dimension bounds, and related checks
    Analyze(AnalyzeArgs),
    /// Encode a message vector into a codeword matrix
    Encode(EncodeArgs),
    /// Correct up to one symbol error in a received matrix
    Decode(DecodeArgs),
    /// Restrict to codewords vanishing on masked positions, then delete them
    Puncture(PunctureArgs),
    /// Sample random twists D for a fixed A and rank the resulting codes
    Search(SearchArgs),
    /// Enumerate graph automorphisms of A (and of AD, verifying the action)
    Autgroup(AutgroupArgs),
}

#[derive(Args)]
struct PairArgs {
    /// Matrix file for A
    #[arg(long = "A", value_name = "FILE")]
    a: PathBuf,
    /// Matrix file for the twist D
    #[arg(long = "D", value_name = "FILE")]
    d: PathBuf,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    pair: PairArgs,
    /// Cap on nonzero messages enumerated for the minimum distance
    #[arg(long, value_name = "N", default_value_t = DEFAULT_DIST_LIMIT)]
    dist_limit: u64,
    /// Budget for the invertible-codeword scan
    #[arg(long, value_name = "N", default_value_t = DEFAULT_INVERTIBLE_BUDGET)]
    budget: u64,
}

#[derive(Args)]
struct EncodeArgs {
    #[command(flatten)]
    pair: PairArgs,
    /// Message symbols, comma-separated, e.g. "1,0,2"
    #[arg(long, value_name = "SYMBOLS")]
    message: String,
}

#[derive(Args)]
struct DecodeArgs {
    #[command(flatten)]
    pair: PairArgs,
    /// Matrix file with the received word
    #[arg(long, value_name = "FILE")]
    received: PathBuf,
}

#[derive(Args)]
struct PunctureArgs {
    #[command(flatten)]
    pair: PairArgs,
    /// Mask description: 1-based "r,c" pairs and col=K / row=K shorthands
    #[arg(long, value_name = "SPEC")]
    mask: Option<String>,
    /// Single 1-based position "r,c"; repeatable
    #[arg(long = "pos", value_name = "R,C")]
    pos: Vec<String>,
    /// Mask a whole 1-based column; repeatable
    #[arg(long = "col", value_name = "K")]
    col: Vec<usize>,
    /// Mask a whole 1-based row; repeatable
    #[arg(long = "row", value_name = "K")]
    row: Vec<usize>,
    /// Cap on nonzero messages enumerated for the punctured distance
    #[arg(long, value_name = "N", default_value_t = DEFAULT_DIST_LIMIT)]
    dist_limit: u64,
}

#[derive(Args)]
struct SearchArgs {
    /// Matrix file for A
    #[arg(long = "A", value_name = "FILE")]
    a: PathBuf,
    /// Number of twists to sample
    #[arg(long, value_name = "N", default_value_t = 100)]
    trials: u64,
    /// RNG seed; equal seeds reproduce the run exactly
    #[arg(long, value_name = "N", default_value_t = 1)]
    seed: u64,
    /// Cap on nonzero messages enumerated per distance computation
    #[arg(long, value_name = "N", default_value_t = DEFAULT_DIST_LIMIT)]
    dist_limit: u64,
    /// Ranking objective
    #[arg(long, value_enum, default_value_t = ObjectiveArg::Distance)]
    objective: ObjectiveArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum ObjectiveArg {
    /// Maximize d, tie-break on larger k
    Distance,
    /// Maximize k, tie-break on larger d
    Dimension,
}

#[derive(Args)]
struct AutgroupArgs {
    /// Matrix file for A
    #[arg(long = "A", value_name = "FILE")]
    a: PathBuf,
    /// Matrix file for D; also verifies the action of every pair on C(A, D)
    #[arg(long = "D", value_name = "FILE")]
    d: Option<PathBuf>,
    /// Cap on the brute-force S_n enumeration
    #[arg(long, value_name = "N", default_value_t = AUTOMORPHISM_N_LIMIT)]
    limit: usize,
}

/// A library error, optionally attributed to the file it came from.
enum Failure {
    Lib(Error),
    In(PathBuf, Error),
    Io(PathBuf, std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Lib(e) => write!(f, "{e}"),
            Failure::In(path, e) => write!(f, "{}: {e}", path.display()),
            Failure::Io(path, e) => write!(f, "{}: {e}", path.display()),
        }
    }
}

fn exit_code(failure: &Failure) -> u8 {
    let error = match failure {
        Failure::Io(..) => return 2,
        Failure::Lib(e) | Failure::In(_, e) => e,
    };
    match error {
        Error::Parse { .. } => 2,
        Error::EnumerationLimit { .. } => 4,
        Error::Diagnostic(_) => 5,
        Error::Uncorrectable { .. } => 6,
        _ => 3,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => match &cli.out {
            Some(path) => match std::fs::write(path, &report) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: {}: {e}", path.display());
                    ExitCode::from(2)
                }
            },
            None => {
                print!("{report}");
                ExitCode::SUCCESS
            }
        },
        Err(failure) => {
            eprintln!("error: {failure}");
            if let Failure::Lib(Error::Uncorrectable { syndrome })
            | Failure::In(_, Error::Uncorrectable { syndrome }) = &failure
            {
                eprint!("syndrome:\n{syndrome}");
            }
            ExitCode::from(exit_code(&failure))
        }
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Construct(args) => run_construct(args, cli.json),
        Command::Analyze(args) => run_analyze(args, cli.json),
        Command::Encode(args) => run_encode(args, cli.json),
        Command::Decode(args) => run_decode(args, cli.json),
        Command::Puncture(args) => run_puncture(args, cli.json),
        Command::Search(args) => run_search(args, cli.json),
        Command::Autgroup(args) => run_autgroup(args, cli.json),
    }
}

fn load_matrix(path: &Path) -> Result<Matrix, Failure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))?;
    Matrix::parse_text(&text).map_err(|e| Failure::In(path.to_path_buf(), e))
}

fn load_code(pair: &PairArgs) -> Result<GtcCode, Failure> {
    let a = load_matrix(&pair.a)?;
    let d = load_matrix(&pair.d)?;
    Ok(GtcCode::construct(a, d)?)
}

fn matrix_rows(m: &Matrix) -> Vec<Vec<u64>> {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m.get(r, c)).collect())
        .collect()
}

fn inline(m: &Matrix) -> String {
    let rows: Vec<String> = matrix_rows(m)
        .iter()
        .map(|row| {
            let cells: Vec<String> = row.iter().map(u64::to_string).collect();
            format!("[{}]", cells.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}

fn push_matrix(out: &mut String, m: &Matrix) {
    for line in m.to_string().lines() {
        let _ = writeln!(out, "  {line}");
    }
}

fn finish_json(value: Value) -> String {
    let mut text = serde_json::to_string_pretty(&value).expect("report serializes");
    text.push('\n');
    text
}

fn run_construct(args: &PairArgs, as_json: bool) -> Result<String, Failure> {
    let code = load_code(args)?;
    if as_json {
        let basis: Vec<Value> = code.basis().iter().map(|b| json!(matrix_rows(b))).collect();
        return Ok(finish_json(json!({
            "p": code.modulus(),
            "n": code.n(),
            "length": code.length(),
            "k": code.k(),
            "basis": basis,
        })));
    }
    let mut out = String::new();
    let _ = writeln!(out, "p: {}", code.modulus());
    let _ = writeln!(out, "n: {}", code.n());
    let _ = writeln!(out, "length: {}", code.length());
    let _ = writeln!(out, "k: {}", code.k());
    for (i, b) in code.basis().iter().enumerate() {
        let _ = writeln!(out, "basis element {}:", i + 1);
        push_matrix(&mut out, b);
    }
    Ok(out)
}

fn report_json(report: &CodeReport, length: usize) -> Value {
    let product = match report.product_bound {
        Some((kk, dd)) => json!({ "kk": kk, "dd": dd }),
        None => Value::Null,
    };
    json!({
        "p": report.p,
        "n": report.n,
        "length": length,
        "k": report.k,
        "d": report.d,
        "r_a": report.r_a,
        "r_ad": report.r_ad,
        "bound_rank": report.bound_rank,
        "bound_strict_applies": report.bound_strict_applies,
        "product_bound": product,
        "invertible": report.invertible.as_ref().map(matrix_rows),
    })
}

fn run_analyze(args: &AnalyzeArgs, as_json: bool) -> Result<String, Failure> {
    let code = load_code(&args.pair)?;
    let report = analyze(&code, args.dist_limit, args.budget)?;
    if report.d.is_none() {
        if report.k == 0 {
            eprintln!("note: the code is trivial, so d is undefined");
        } else {
            eprintln!(
                "note: distance enumeration needs more than {} messages; d omitted",
                args.dist_limit
            );
        }
    }
    if as_json {
        return Ok(finish_json(report_json(&report, code.length())));
    }
    let mut out = String::new();
    let _ = writeln!(out, "p: {}", report.p);
    let _ = writeln!(out, "n: {}", report.n);
    let _ = writeln!(out, "length: {}", code.length());
    let _ = writeln!(out, "k: {}", report.k);
    match report.d {
        Some(d) => {
            let _ = writeln!(out, "d: {d}");
        }
        None => {
            let _ = writeln!(out, "d: unknown");
        }
    }
    let _ = writeln!(out, "r_A: {}", report.r_a);
    let _ = writeln!(out, "r_AD: {}", report.r_ad);
    let _ = writeln!(out, "rank bound: k <= {} (holds)", report.bound_rank);
    if report.bound_strict_applies {
        let _ = writeln!(
            out,
            "strict bound: k <= {} (holds)",
            report.n * report.n - 1
        );
    } else {
        let _ = writeln!(out, "strict bound: not applicable");
    }
    match report.product_bound {
        Some((kk, Some(dd))) => {
            let _ = writeln!(out, "product subcode: kk' = {kk}, dd' = {dd}");
        }
        Some((kk, None)) => {
            let _ = writeln!(out, "product subcode: kk' = {kk}");
        }
        None => {
            let _ = writeln!(out, "product subcode: skipped (enumeration limit)");
        }
    }
    match &report.invertible {
        Some(w) => {
            let _ = writeln!(out, "invertible codeword:");
            push_matrix(&mut out, w);
        }
        None => {
            let _ = writeln!(out, "invertible codeword: none");
        }
    }
    Ok(out)
}

fn parse_message(text: &str, p: u64) -> Result<Vec<FieldElement>, Failure> {
    let mut symbols = Vec::new();
    for (i, raw) in text.split(',').enumerate() {
        let token = raw.trim();
        let value: u64 = token.parse().map_err(|_| {
            Failure::Lib(Error::Parse {
                line: 1,
                column: i + 1,
                message: format!("`{token}` is not a message symbol"),
            })
        })?;
        if value >= p {
            return Err(Failure::Lib(Error::Parse {
                line: 1,
                column: i + 1,
                message: format!("symbol {value} is out of range for modulus {p}"),
            }));
        }
        symbols.push(FieldElement::new(value, p)?);
    }
    Ok(symbols)
}

fn message_values(message: &[FieldElement]) -> Vec<u64> {
    message.iter().map(|e| e.value()).collect()
}

fn join_values(values: &[u64]) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn run_encode(args: &EncodeArgs, as_json: bool) -> Result<String, Failure> {
    let code = load_code(&args.pair)?;
    let message = parse_message(&args.message, code.modulus())?;
    let codeword = code.encode(&message)?;
    let values = message_values(&message);
    if as_json {
        return Ok(finish_json(json!({
            "p": code.modulus(),
            "n": code.n(),
            "k": code.k(),
            "message": values,
            "codeword": matrix_rows(&codeword),
        })));
    }
    let mut out = String::new();
    let _ = writeln!(out, "p: {}", code.modulus());
    let _ = writeln!(out, "n: {}", code.n());
    let _ = writeln!(out, "k: {}", code.k());
    let _ = writeln!(out, "message: {}", join_values(&values));
    let _ = writeln!(out, "codeword:");
    push_matrix(&mut out, &codeword);
    Ok(out)
}

fn run_decode(args: &DecodeArgs, as_json: bool) -> Result<String, Failure> {
    let code = load_code(&args.pair)?;
    let received = load_matrix(&args.received)?;
    let table = build_syndrome_table(&code)?;
    let (decoded, error) = correct_single_error(&code, &table, &received)?;
    let message = code.message_of(&decoded)?;
    let values = message_values(&message);
    // report the corrected position 1-based; a zero error matrix means
    // the received word was already a codeword
    let position = if error.is_zero() {
        None
    } else {
        let (r, c) = (0..code.n())
            .flat_map(|r| (0..code.n()).map(move |c| (r, c)))
            .find(|&(r, c)| error.get(r, c) != 0)
            .expect("error matrix has one nonzero entry");
        Some((r + 1, c + 1, error.get(r, c)))
    };
    if as_json {
        let error_json = match position {
            Some((row, col, value)) => json!({ "row": row, "col": col, "value": value }),
            None => Value::Null,
        };
        return Ok(finish_json(json!({
            "p": code.modulus(),
            "n": code.n(),
            "k": code.k(),
            "decoded": matrix_rows(&decoded),
            "message": values,
            "error": error_json,
        })));
    }
    let mut out = String::new();
    let _ = writeln!(out, "p: {}", code.modulus());
    let _ = writeln!(out, "n: {}", code.n());
    let _ = writeln!(out, "k: {}", code.k());
    let _ = writeln!(out, "decoded:");
    push_matrix(&mut out, &decoded);
    let _ = writeln!(out, "message: {}", join_values(&values));
    match position {
        Some((row, col, value)) => {
            let _ = writeln!(out, "error: ({row},{col}) value {value}");
        }
        None => {
            let _ = writeln!(out, "error: none");
        }
    }
    Ok(out)
}

fn build_mask(args: &PunctureArgs, n: usize) -> Result<PositionMask, Failure> {
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    if let Some(spec) = &args.mask {
        for &(r, c) in PositionMask::parse(spec, n)?.positions() {
            pairs.push((r + 1, c + 1));
        }
    }
    for pos in &args.pos {
        let parsed = PositionMask::parse(pos, n)?;
        if parsed.len() != 1 {
            return Err(Failure::Lib(Error::InvalidMask(format!(
                "--pos takes a single `r,c` pair, got `{pos}`"
            ))));
        }
        let (r, c) = parsed.positions()[0];
        pairs.push((r + 1, c + 1));
    }
    for &col in &args.col {
        pairs.extend((1..=n).map(|r| (r, col)));
    }
    for &row in &args.row {
        pairs.extend((1..=n).map(|c| (row, c)));
    }
    Ok(PositionMask::new(n, &pairs)?)
}

fn run_puncture(args: &PunctureArgs, as_json: bool) -> Result<String, Failure> {
    let code = load_code(&args.pair)?;
    let mask = build_mask(args, code.n())?;
    let punctured = gtc::puncture(&code, &mask)?;
    let d = if punctured.k() == 0 {
        None
    } else {
        Some(punctured_minimum_distance(&punctured, args.dist_limit)?)
    };
    let mask_pairs: Vec<(usize, usize)> = mask
        .positions()
        .iter()
        .map(|&(r, c)| (r + 1, c + 1))
        .collect();
    if as_json {
        let basis: Vec<Value> = punctured
            .basis()
            .iter()
            .map(|v| json!(v.entries()))
            .collect();
        let mask_json: Vec<Value> = mask_pairs.iter().map(|&(r, c)| json!([r, c])).collect();
        return Ok(finish_json(json!({
            "p": punctured.modulus(),
            "n": code.n(),
            "parent_k": code.k(),
            "mask": mask_json,
            "length": punctured.length(),
            "k": punctured.k(),
            "d": d,
        "basis": basis,
        })));
    }
    let mut out = String::new();
    let _ = writeln!(out, "p: {}", punctured.modulus());
    let _ = writeln!(out, "n: {}", code.n());
    let _ = writeln!(out, "parent k: {}", code.k());
    let mask_text: Vec<String> = mask_pairs
        .iter()
        .map(|&(r, c)| format!("({r},{c})"))
        .collect();
    let _ = writeln!(out, "mask: {}", mask_text.join(" "));
    let _ = writeln!(out, "length: {}", punctured.length());
    let _ = writeln!(out, "k: {}", punctured.k());
    match d {
        Some(d) => {
            let _ = writeln!(out, "d: {d}");
        }
        None => {
            let _ = writeln!(out, "d: undefined");
        }
    }
    for (i, v) in punctured.basis().iter().enumerate() {
        let cells: Vec<String> = v.entries().iter().map(u64::to_string).collect();
        let _ = writeln!(out, "basis vector {}: {}", i + 1, cells.join(" "));
    }
    Ok(out)
}

fn search_json(result: &SearchResult, p: u64, n: usize, objective: &str) -> Value {
    let entries: Vec<Value> = result
        .entries
        .iter()
        .map(|e| {
            json!({
                "twist": matrix_rows(&e.twist),
                "k": e.k,
                "d": e.d,
            })
        })
        .collect();
    json!({
        "p": p,
        "n": n,
        "seed": result.seed,
        "trials": result.trials,
        "objective": objective,
        "entries": entries,
    })
}

fn run_search(args: &SearchArgs, as_json: bool) -> Result<String, Failure> {
    let a = load_matrix(&args.a)?;
    let (objective, label) = match args.objective {
        ObjectiveArg::Distance => (Objective::MaxDistance, "distance"),
        ObjectiveArg::Dimension => (Objective::MaxDimension, "dimension"),
    };
    let result = search_twists(&a, args.trials, args.seed, args.dist_limit, objective)?;
    if as_json {
        return Ok(finish_json(search_json(&result, a.modulus(), a.rows(), label)));
    }
    let mut out = String::new();
    let _ = writeln!(out, "p: {}", a.modulus());
    let _ = writeln!(out, "n: {}", a.rows());
    let _ = writeln!(out, "seed: {}", result.seed);
    let _ = writeln!(out, "trials: {}", result.trials);
    let _ = writeln!(out, "objective: {label}");
    for (i, e) in result.entries.iter().enumerate() {
        let d = e.d.map_or_else(|| "-".to_string(), |d| d.to_string());
        let _ = writeln!(
            out,
            "rank {:>3}: k = {}, d = {}, D = {}",
            i + 1,
            e.k,
            d,
            inline(&e.twist)
        );
    }
    Ok(out)
}

fn run_autgroup(args: &AutgroupArgs, as_json: bool) -> Result<String, Failure> {
    let a = load_matrix(&args.a)?;
    if !is_adjacency_like(&a) {
        eprintln!("note: A is not a symmetric 0/1 matrix; automorphisms are taken algebraically");
    }
    let aut_a = automorphism_group(&a, args.limit)?;
    let mut aut_ad: Option<Vec<gtc::Permutation>> = None;
    let mut pairs_checked: Option<usize> = None;
    if let Some(d_path) = &args.d {
        let d = load_matrix(d_path)?;
        let code = GtcCode::construct(a.clone(), d)?;
        let ad = code.a().product(code.d())?;
        if !is_adjacency_like(&ad) {
            eprintln!(
                "note: AD is not a symmetric 0/1 matrix; automorphisms are taken algebraically"
            );
        }
        let group_ad = automorphism_group(&ad, args.limit)?;
        let mut checked = 0;
        for p in &aut_a {
            for q in &group_ad {
                verify_coordinate_action(&code, p, q)?;
                checked += 1;
            }
        }
        aut_ad = Some(group_ad);
        pairs_checked = Some(checked);
    }
    if as_json {
        let elements = |group: &[gtc::Permutation]| -> Vec<Value> {
            group.iter().map(|g| json!(g.one_line())).collect()
        };
        return Ok(finish_json(json!({
            "p": a.modulus(),
            "n": a.rows(),
            "aut_a": { "order": aut_a.len(), "elements": elements(&aut_a) },
            "aut_ad": aut_ad
                .as_ref()
                .map(|g| json!({ "order": g.len(), "elements": elements(g) })),
            "pairs_checked": pairs_checked,
            "all_preserve": pairs_checked.map(|_| true),
        })));
    }
    let mut out = String::new();
    let _ = writeln!(out, "p: {}", a.modulus());
    let _ = writeln!(out, "n: {}", a.rows());
    let _ = writeln!(out, "|Aut(G_A)| = {}", aut_a.len());
    for g in &aut_a {
        let _ = writeln!(out, "  {}", g.one_line());
    }
    if let Some(group_ad) = &aut_ad {
        let _ = writeln!(out, "|Aut(G_AD)| = {}", group_ad.len());
        for g in group_ad {
            let _ = writeln!(out, "  {}", g.one_line());
        }
        let _ = writeln!(out, "pairs checked: {}", pairs_checked.unwrap_or(0));
        let _ = writeln!(out, "all pairs preserve the code: yes");
    }
    Ok(out)
}
