use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use braid3::{
    classify_top4genus, defect_and_g4top_bounds, garside_normalize, link_relation, positivity_class, seifert_genus_sqp,
    seifert_matrix, sigma_hat_and_profile, signature_from_xu, xu_normalize, BraidWord, Error, G4Report, LinkRelation,
    ParseError, PositivityClass, SignatureProfile, Top4GenusClass,
};
use clap::{Parser, Subcommand};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "braid3", version, about = "Normal forms and 4-genus bounds for closures of 3-braids")]
struct Cli {
    /// Fail with exit code 3 when an invariant's precondition does not hold.
    #[arg(long, global = true)]
    strict: bool,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normal forms and every invariant whose precondition holds, as JSON.
    Report {
        word: String,
        #[arg(long)]
        nf_only: bool,
    },
    /// Band-generator and classical normal forms.
    Nf { word: String },
    /// Compare the closures of two braids.
    SameLink { first: String, second: String },
    /// Decide whether the topological 4-genus equals the Seifert genus.
    Classify { word: String },
    /// Levine–Tristram signature profile on (0, 1/2].
    Profile {
        word: String,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long = "json-out", value_name = "PATH")]
        json_out: Option<PathBuf>,
        /// Number of evenly spaced sample points in the CSV.
        #[arg(long, default_value_t = 100)]
        grid: usize,
    },
    /// Defect and topological 4-genus bounds.
    Defect { word: String },
}

enum Failure {
    Parse(String),
    Precondition(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Io(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Precondition(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Parse(m) | Failure::Precondition(m) | Failure::Io(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Precondition(e.to_string())
    }
}

fn parse(text: &str) -> Result<BraidWord, Failure> {
    text.parse().map_err(|e: ParseError| {
        let mut msg = format!("cannot parse {text:?}: {e}");
        if let ParseError::Syntax { offset, .. } = e {
            let _ = write!(msg, "\n  {text}\n  {}^", " ".repeat(offset));
        }
        Failure::Parse(msg)
    })
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("reports serialize"));
}

#[derive(Serialize)]
struct Classification {
    class: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    family: Option<String>,
}

impl From<Top4GenusClass> for Classification {
    fn from(c: Top4GenusClass) -> Self {
        match c {
            Top4GenusClass::Equal(tag) => Classification { class: "Equal", family: Some(tag.to_string()) },
            Top4GenusClass::Strict => Classification { class: "Strict", family: None },
            Top4GenusClass::FigureEight => Classification { class: "FigureEight", family: None },
        }
    }
}

#[derive(Serialize)]
struct Report {
    input: String,
    xu: String,
    garside: String,
    writhe: i64,
    components: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    positivity: Option<PositivityClass>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sigma: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    genus: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    classification: Option<Classification>,
    #[serde(skip_serializing_if = "Option::is_none")]
    g4: Option<G4Report>,
    /// Reason code for each omitted invariant.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    unavailable: BTreeMap<&'static str, &'static str>,
}

fn record<T>(
    result: braid3::Result<T>,
    field: &'static str,
    unavailable: &mut BTreeMap<&'static str, &'static str>,
) -> Option<T> {
    result.map_err(|e| unavailable.insert(field, e.code())).ok()
}

fn report(word: &BraidWord, nf_only: bool, strict: bool) -> Result<ExitCode, Failure> {
    let xu = xu_normalize(word);
    let mut r = Report {
        input: word.to_string(),
        xu: xu.to_string(),
        garside: garside_normalize(word).to_string(),
        writhe: word.writhe(),
        components: word.closure_components(),
        positivity: None,
        sigma: None,
        genus: None,
        classification: None,
        g4: None,
        unavailable: BTreeMap::new(),
    };
    if !nf_only {
        r.positivity = Some(positivity_class(&xu));
        let u = &mut r.unavailable;
        r.sigma = record(signature_from_xu(&xu), "sigma", u);
        r.genus = record(seifert_genus_sqp(&xu), "genus", u);
        r.classification = record(classify_top4genus(word), "classification", u).map(Classification::from);
        r.g4 = record(defect_and_g4top_bounds(&xu), "g4", u);
    }
    print_json(&r);
    if strict && !r.unavailable.is_empty() {
        let fields: Vec<String> = r.unavailable.iter().map(|(k, v)| format!("{k} ({v})")).collect();
        return Err(Failure::Precondition(format!("unavailable: {}", fields.join(", "))));
    }
    Ok(ExitCode::SUCCESS)
}

fn normal_forms(word: &BraidWord, json: bool) {
    let xu = xu_normalize(word).to_string();
    let garside = garside_normalize(word).to_string();
    if json {
        print_json(&BTreeMap::from([("xu", xu), ("garside", garside)]));
    } else {
        println!("xu: {xu}\ngarside: {garside}");
    }
}

fn same_link(u: &BraidWord, v: &BraidWord, json: bool) -> ExitCode {
    let relation = link_relation(u, v);
    if json {
        print_json(&BTreeMap::from([("relation", relation)]));
    } else {
        println!("{relation}");
    }
    if relation == LinkRelation::Different {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn classify(word: &BraidWord, json: bool) -> Result<(), Failure> {
    let c = classify_top4genus(word)?;
    if json {
        print_json(&Classification::from(c));
    } else {
        println!("{c}");
    }
    Ok(())
}

fn profile_csv(profile: &SignatureProfile, grid: usize) -> String {
    let mut points: Vec<f64> = (1..=grid).map(|j| 0.5 * j as f64 / grid as f64).collect();
    points.extend(profile.arcs.iter().map(|a| 0.5 * (a.start + a.end)));
    points.sort_by(f64::total_cmp);
    let mut out = String::from("t,sigma\n");
    for t in points {
        if let Some(sigma) = profile.value_at(t) {
            let _ = writeln!(out, "{t:.6},{sigma}");
        }
    }
    out
}

fn profile(
    word: &BraidWord,
    csv: Option<PathBuf>,
    json_out: Option<PathBuf>,
    grid: usize,
    json: bool,
) -> Result<(), Failure> {
    let components = word.closure_components();
    if components != 1 {
        return Err(Error::NotAKnot { components }.into());
    }
    let p = sigma_hat_and_profile(&seifert_matrix(word)?)?;
    let write = |path: &PathBuf, text: String| {
        fs::write(path, text).map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))
    };
    if let Some(path) = &csv {
        write(path, profile_csv(&p, grid.max(1)))?;
    }
    if let Some(path) = &json_out {
        write(path, serde_json::to_string_pretty(&p).expect("profiles serialize") + "\n")?;
    }
    let sigma = p.signature().expect("a knot has no jump at -1");
    if json {
        #[derive(Serialize)]
        struct Summary<'a> {
            sigma: i64,
            sigma_hat: i64,
            maximizing_arcs: &'a [braid3::seifert::ProfileArc],
        }
        print_json(&Summary { sigma, sigma_hat: p.sigma_hat, maximizing_arcs: &p.maximizing_arcs });
    } else {
        println!("sigma={sigma} sigma_hat={}", p.sigma_hat);
        for arc in &p.maximizing_arcs {
            println!("maximizing arc ({:.6}, {:.6}) value {}", arc.start, arc.end, arc.value);
        }
    }
    Ok(())
}

fn defect(word: &BraidWord, json: bool) -> Result<(), Failure> {
    let r = defect_and_g4top_bounds(&xu_normalize(word))?;
    if json {
        print_json(&r);
        return Ok(());
    }
    println!(
        "genus={} sigma={} sigma_hat={} defect=[{},{}] g4top=[{},{}] exact={}",
        r.genus.unwrap_or_default(),
        r.sigma,
        r.sigma_hat,
        r.defect_lower,
        r.defect_upper,
        r.g4top_lower,
        r.g4top_upper,
        r.exact
    );
    if let Some(family) = &r.family {
        println!("untwisting family {family}");
        for line in &r.certificates {
            println!("  {line}");
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let json = cli.json;
    match cli.command {
        Command::Report { word, nf_only } => report(&parse(&word)?, nf_only, cli.strict),
        Command::Nf { word } => {
            normal_forms(&parse(&word)?, json);
            Ok(ExitCode::SUCCESS)
        }
        Command::SameLink { first, second } => Ok(same_link(&parse(&first)?, &parse(&second)?, json)),
        Command::Classify { word } => classify(&parse(&word)?, json).map(|_| ExitCode::SUCCESS),
        Command::Profile { word, csv, json_out, grid } => {
            profile(&parse(&word)?, csv, json_out, grid, json).map(|_| ExitCode::SUCCESS)
        }
        Command::Defect { word } => defect(&parse(&word)?, json).map(|_| ExitCode::SUCCESS),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
