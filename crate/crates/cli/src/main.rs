use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};

use superelliptic_core::classify::{classify, classify_genus, Classification};
use superelliptic_core::dataset::{load_embedded, Dataset};
use superelliptic_core::family::{
    branch_count, enumerate_levels, genus_of_family, parameter_count, probe_separable, template_degree, FamilyRecord,
};
use superelliptic_core::signature::{complete_signature, RepairStatus};
use superelliptic_core::verify::verify;

/// Superelliptic curve families of genus 3 to 10: tables, verification and
/// field-of-moduli classification.
#[derive(Parser)]
#[command(name = "superelliptic", version)]
struct Cli {
    /// Load a JSON dataset instead of the built-in tables.
    #[arg(long, global = true, value_name = "PATH")]
    data: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print all rows of one genus.
    List {
        #[arg(long)]
        genus: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check every column against derived values.
    Verify {
        #[arg(long)]
        genus: Option<u32>,
        /// Count repaired signatures as failures.
        #[arg(long)]
        strict: bool,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        /// Print start and finish times around the report.
        #[arg(long)]
        timestamps: bool,
    },
    /// Classify every row of one genus.
    Classify {
        #[arg(long)]
        genus: u32,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// List the (level, branch count) pairs possible in a genus.
    Levels {
        #[arg(long)]
        genus: u32,
    },
    /// Show one row with derived quantities and its verdict.
    Row {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        nr: u32,
    },
    /// Write the dataset to a file.
    Export {
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = ExportFormat::Json)]
        format: ExportFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Json,
    Csv,
}

enum Failure {
    Verification,
    Input(anyhow::Error),
    Io(anyhow::Error),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification => 1,
            Failure::Input(_) => 2,
            Failure::Io(_) => 3,
        }
    }
}

type Outcome = Result<String, Failure>;

fn input(msg: String) -> Failure {
    Failure::Input(anyhow!(msg))
}

fn load(path: Option<&PathBuf>) -> Result<Dataset, Failure> {
    let Some(path) = path else {
        return Ok(load_embedded());
    };
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(Failure::Io)?;
    Dataset::from_json(&text)
        .with_context(|| format!("loading {}", path.display()))
        .map_err(Failure::Input)
}

fn table_genus(ds: &Dataset, genus: u32) -> Result<(), Failure> {
    if !(3..=10).contains(&genus) {
        return Err(input(format!(
            "genus {genus} is out of range; tables cover genus 3 to 10"
        )));
    }
    if ds.count(genus) == 0 {
        return Err(input(format!("the dataset has no rows for genus {genus}")));
    }
    Ok(())
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn group_text(r: &FamilyRecord) -> String {
    r.group.as_ref().map_or_else(|| "-".to_string(), |g| g.text.clone())
}

fn cmd_list(ds: &Dataset, genus: u32, format: Format) -> Outcome {
    table_genus(ds, genus)?;
    let rows: Vec<&FamilyRecord> = ds.genus(genus).collect();
    Ok(match format {
        Format::Json => json(&rows),
        Format::Csv => ds.export_csv(Some(genus)),
        Format::Text => {
            let mut out = format!(
                "{:<4} {:<5} {:<12} {:>4} {:>3} {:>3}  {:<16} {:>3}  equation\n",
                "Nr.", "Ḡ", "G", "|G|", "n", "m", "signature", "δ"
            );
            for r in rows {
                let nr = format!("{}{}", if r.blue { "*" } else { "" }, r.nr);
                let m = r.m().map_or_else(|| "-".to_string(), |m| m.to_string());
                let _ = writeln!(
                    out,
                    "{nr:<4} {:<5} {:<12} {:>4} {:>3} {m:>3}  {:<16} {:>3}  y^{} = {}",
                    r.reduced.to_string(),
                    group_text(r),
                    r.group_order(),
                    r.n,
                    r.signature.to_compact_string(),
                    r.delta,
                    r.n,
                    r.template
                );
            }
            out
        }
    })
}

fn unix_time() -> String {
    let t = SystemTime::now().duration_since(UNIX_EPOCH).unwrap_or_default();
    format!("{}.{:03}", t.as_secs(), t.subsec_millis())
}

fn cmd_verify(ds: &Dataset, genus: Option<u32>, strict: bool, format: ReportFormat, timestamps: bool) -> Outcome {
    if let Some(g) = genus {
        if ds.count(g) == 0 {
            return Err(input(format!("the dataset has no rows for genus {g}")));
        }
    }
    let started = unix_time();
    let report = verify(ds, genus, strict);
    let mut out = String::new();
    if timestamps {
        let _ = writeln!(out, "started: {started}");
    }
    out.push_str(&match format {
        ReportFormat::Text => report.render_text(),
        ReportFormat::Json => json(&report),
    });
    if timestamps {
        let _ = writeln!(out, "finished: {}", unix_time());
    }
    if report.exit_code() == 0 {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Verification)
    }
}

fn cmd_classify(ds: &Dataset, genus: u32, format: ReportFormat) -> Outcome {
    table_genus(ds, genus)?;
    let report = classify_genus(genus, ds);
    if let ReportFormat::Json = format {
        let rows: Vec<serde_json::Value> = report
            .rows
            .iter()
            .map(|r| match &r.verdict {
                Ok(c) => serde_json::json!({"nr": r.nr, "classification": c}),
                Err(e) => serde_json::json!({"nr": r.nr, "classification": null, "error": e.to_string()}),
            })
            .collect();
        return Ok(json(&rows));
    }
    let mut out = String::new();
    for r in &report.rows {
        match &r.verdict {
            Ok(c) => {
                let _ = writeln!(out, "Nr. {:<3} {:<40} {}", r.nr, c.to_string(), c.theorem());
            }
            Err(e) => {
                let _ = writeln!(out, "Nr. {:<3} {:<40} {e}", r.nr, "unclassified");
            }
        }
    }
    let _ = write!(
        out,
        "definable: {}, possibly not: {}",
        report.definable_count(),
        report.possibly_not().len()
    );
    let unclassified = report.unclassified();
    if !unclassified.is_empty() {
        let _ = write!(out, ", unclassified: {}", unclassified.len());
    }
    out.push('\n');
    Ok(out)
}

fn cmd_levels(ds: &Dataset, genus: u32) -> Outcome {
    if genus < 2 {
        return Err(input(format!("genus must be at least 2 (got {genus})")));
    }
    let have_rows = ds.count(genus) > 0;
    let mut out = format!("{:>4} {:>4}  {}\n", "n", "B", if have_rows { "rows" } else { "" });
    for (n, b) in enumerate_levels(genus) {
        let realized: Vec<String> = ds
            .genus(genus)
            .filter(|r| r.n == n && branch_count(r.n, &r.template) == Ok(b))
            .map(|r| r.nr.to_string())
            .collect();
        let rows = if !have_rows {
            String::new()
        } else if realized.is_empty() {
            "-".to_string()
        } else {
            realized.join(", ")
        };
        let _ = writeln!(out, "{n:>4} {b:>4}  {rows}");
    }
    Ok(out.lines().map(str::trim_end).collect::<Vec<_>>().join("\n") + "\n")
}

fn cmd_row(ds: &Dataset, genus: u32, nr: u32) -> Outcome {
    let r = ds
        .get(genus, nr)
        .ok_or_else(|| input(format!("no row genus {genus}, Nr. {nr}")))?;
    let mut out = String::new();
    let w = &mut out;
    let _ = writeln!(
        w,
        "genus {} Nr. {}{}",
        r.genus,
        r.nr,
        if r.blue { " (marked blue)" } else { "" }
    );
    let _ = writeln!(w, "equation        y^{} = {}", r.n, r.template);
    if r.template.to_string().contains("f_1(x)") {
        let _ = writeln!(
            w,
            "                f_1(x) = {}",
            superelliptic_core::family::f1_factor()
        );
    }
    let _ = writeln!(w, "reduced group   {} ({} block)", r.reduced, r.reduced.block());
    let _ = writeln!(w, "full group      {} of order {}", group_text(r), r.group_order());
    let _ = writeln!(w, "level n         {}", r.n);
    if let Some(m) = r.m() {
        let _ = writeln!(w, "m               {m}");
    }
    let _ = writeln!(w, "signature       {}", r.signature.to_compact_string());
    let _ = writeln!(w, "delta           {}", r.delta);
    let _ = writeln!(w, "parameters      {}", parameter_count(&r.template));
    if let Ok(d) = template_degree(&r.template) {
        let _ = writeln!(w, "degree of f     {d}");
    }
    match branch_count(r.n, &r.template) {
        Ok(b) => {
            let _ = writeln!(w, "branch points   {b}");
        }
        Err(e) => {
            let _ = writeln!(w, "branch points   error: {e}");
        }
    }
    match genus_of_family(r) {
        Ok(g) => {
            let _ = writeln!(
                w,
                "genus from eq.  {g}{}",
                if g == r.genus { "" } else { " (mismatch)" }
            );
        }
        Err(e) => {
            let _ = writeln!(w, "genus from eq.  error: {e}");
        }
    }
    match probe_separable(&r.template) {
        Ok(s) => {
            let _ = writeln!(w, "separable probe {}", if s { "separable" } else { "NOT separable" });
        }
        Err(e) => {
            let _ = writeln!(w, "separable probe error: {e}");
        }
    }
    let repair = complete_signature(r.genus, r.group_order(), &r.signature);
    let note = match repair.status {
        RepairStatus::Consistent => "consistent with Riemann–Hurwitz".to_string(),
        RepairStatus::Unrepairable => "fails Riemann–Hurwitz; no single-entry repair".to_string(),
        RepairStatus::Completed | RepairStatus::Corrected => {
            let mut s = format!(
                "printed ({}) {} to ({}) by {}",
                r.signature.to_compact_string(),
                if repair.status == RepairStatus::Completed {
                    "completed"
                } else {
                    "corrected"
                },
                repair
                    .repaired
                    .as_ref()
                    .map(|s| s.to_compact_string())
                    .unwrap_or_default(),
                repair.change.map(|c| c.to_string()).unwrap_or_default()
            );
            if repair.is_ambiguous() {
                s.push_str(&format!("; {} candidates, ambiguous", repair.candidates.len()));
            }
            s
        }
    };
    let _ = writeln!(w, "repair          {note}");
    match classify(r) {
        Ok(c) => {
            let _ = writeln!(w, "verdict         {c}");
            let _ = writeln!(w, "justification   {}", c.theorem());
            if c == Classification::PossiblyNotDefinable {
                let _ = writeln!(w, "                (this does not mean the family is not definable)");
            }
        }
        Err(e) => {
            let _ = writeln!(w, "verdict         unclassified: {e}");
        }
    }
    Ok(out)
}

fn cmd_export(ds: &Dataset, path: &PathBuf, format: ExportFormat) -> Outcome {
    let text = match format {
        ExportFormat::Json => ds.to_json(),
        ExportFormat::Csv => ds.export_csv(None),
    };
    std::fs::write(path, text)
        .with_context(|| format!("writing {}", path.display()))
        .map_err(Failure::Io)?;
    Ok(String::new())
}

fn run(cli: Cli) -> Outcome {
    let ds = load(cli.data.as_ref())?;
    match cli.command {
        Command::List { genus, format } => cmd_list(&ds, genus, format),
        Command::Verify {
            genus,
            strict,
            format,
            timestamps,
        } => cmd_verify(&ds, genus, strict, format, timestamps),
        Command::Classify { genus, format } => cmd_classify(&ds, genus, format),
        Command::Levels { genus } => cmd_levels(&ds, genus),
        Command::Row { genus, nr } => cmd_row(&ds, genus, nr),
        Command::Export { out, format } => cmd_export(&ds, &out, format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            match &f {
                Failure::Verification => {}
                Failure::Input(e) | Failure::Io(e) => eprintln!("error: {e:#}"),
            }
            ExitCode::from(f.code())
        }
    }
}
