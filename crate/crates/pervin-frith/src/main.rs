//! Thin command-line front end over the library: instance validation,
//! predicate checks, functor application, duality round trips,
//! completeness characterization reports, enumeration, the verification
//! suite, and DOT emission.
//!
//! Inputs are JSON instance files or `catalog:NAME` references (for example
//! `catalog:C3`, `catalog:SIER`, `catalog:FULL-B4`).  Exit codes: 0 when
//! every checked law passes, 1 when a law fails, 2 on input errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use pervin_frith::error::{Error, Result};
use pervin_frith::family::family_lattice;
use pervin_frith::files::{self, Payload};
use pervin_frith::frith::FrithPair;
use pervin_frith::report::LawReport;
use pervin_frith::suite::{run_suite, SuiteConfig};
use pervin_frith::{bitop, catalog, dot, duality, enumerate, frith, lattice, pervin};

#[derive(Parser)]
#[command(
    name = "pervin-frith",
    version,
    about = "Finite Pervin spaces, Frith frames, and their dualities",
    long_about = "Checks the laws of the finite Pervin/Frith toolkit from the command \
                  line.  Instances are JSON files or catalog references such as \
                  catalog:C3, catalog:B4, catalog:SIER, catalog:P3, \
                  catalog:SIER-BISPACE, catalog:BIFRAME-332, or catalog:FULL-C3 \
                  (the fully designated pair over a catalog lattice)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Md,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an instance, validate its laws, and emit the canonical form.
    Validate {
        /// Instance file or catalog:NAME reference.
        input: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate a named predicate on an instance.
    ///
    /// Lattices: distributive, boolean.  Pervin spaces: t0, td, symmetric,
    /// complete, spectral, sober.  Pairs: frith, symmetric, complete,
    /// locale-based, strongly-exact.  Bispaces: pairwise-stone.
    Check {
        property: String,
        input: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Apply a named functor and emit the image instance.
    ///
    /// omega, pt, psym, fsym, lperv, pff, idl, completion, skula, clplus,
    /// fsk, bbplus, clopen.
    Apply {
        functor: String,
        input: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a duality round trip on an instance and report the witness.
    ///
    /// omega-pt, birkhoff, stone, priestley, skula, fsk.
    Roundtrip {
        duality: String,
        input: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Evaluate the seven-way completeness characterization of a T0 space.
    CharReport {
        input: String,
        /// Extension-search bound (extra points allowed on candidate codomains).
        #[arg(long, default_value_t = 4)]
        bound: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Enumerate instances of a kind up to isomorphism.
    ///
    /// Kinds: lattices, pervin, frith, bispaces, biframes.
    Enumerate {
        kind: String,
        /// Ground-set bound for point-based instances.
        #[arg(long, default_value_t = 3)]
        max_points: usize,
        /// Size bound for lattices, designated families, and carriers.
        #[arg(long, default_value_t = 6)]
        bound: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run the full verification suite and report per-criterion outcomes.
    Suite {
        #[arg(long, default_value_t = 4)]
        max_points: usize,
        /// Search bound for the bounded characterizations.
        #[arg(long, default_value_t = 4)]
        bound: usize,
        #[arg(long, default_value_t = 8)]
        max_family: usize,
        #[arg(long, default_value_t = 8)]
        max_lattice: usize,
        /// Worker threads for the instance sweeps; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        parallelism: usize,
        /// Inject a corrupted adjunction and require the suite to catch it.
        #[arg(long)]
        negative_control: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Emit a DOT rendering of a lattice or of a Pervin family under inclusion.
    Dot {
        input: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Validate { input, out } => {
            let payload = load(&input)?;
            write_out(&out, &files::emit(&payload))?;
            Ok(0)
        }
        Command::Check { property, input, out, format } => {
            let payload = load(&input)?;
            let report = check_property(&property, &payload)?;
            write_out(&out, &law_text(&report, format))?;
            Ok(if report.pass { 0 } else { 1 })
        }
        Command::Apply { functor, input, out } => {
            let payload = load(&input)?;
            let image = apply_functor(&functor, &payload)?;
            write_out(&out, &files::emit(&image))?;
            Ok(0)
        }
        Command::Roundtrip { duality, input, out, format } => {
            let payload = load(&input)?;
            let report = roundtrip(&duality, &payload)?;
            write_out(&out, &law_text(&report, format))?;
            Ok(if report.pass { 0 } else { 1 })
        }
        Command::CharReport { input, bound, out, format } => {
            let Payload::Pervin(p) = load(&input)? else {
                return Err(Error::Schema("char-report takes a pervin instance".into()));
            };
            let report = pervin::theorem_char_report(&p, bound)?;
            let text = match format {
                Format::Json => to_pretty(&report),
                Format::Md => char_markdown(&report),
            };
            write_out(&out, &text)?;
            Ok(if report.all() { 0 } else { 1 })
        }
        Command::Enumerate { kind, max_points, bound, out, format } => {
            let items = enumerate_kind(&kind, max_points, bound)?;
            let text = match format {
                Format::Json => {
                    let values: Vec<serde_json::Value> = items.iter().map(files::value_of).collect();
                    to_pretty(&serde_json::json!({
                        "kind": kind,
                        "count": items.len(),
                        "items": values,
                    }))
                }
                Format::Md => {
                    let mut s = format!("# {kind}: {} instances\n\n", items.len());
                    for (i, p) in items.iter().enumerate() {
                        s.push_str(&format!("{}. {}\n", i + 1, label(p)));
                    }
                    s
                }
            };
            write_out(&out, &text)?;
            Ok(0)
        }
        Command::Suite {
            max_points,
            bound,
            max_family,
            max_lattice,
            parallelism,
            negative_control,
            out,
            format,
        } => {
            let cfg = SuiteConfig {
                max_points,
                max_family,
                max_lattice,
                search_bound: bound,
                parallelism,
            };
            let report = run_suite(&cfg, negative_control)?;
            let text = match format {
                Format::Json => report.to_json(),
                Format::Md => report.to_markdown(),
            };
            write_out(&out, &text)?;
            eprintln!("{}", report.summary());
            Ok(if report.pass { 0 } else { 1 })
        }
        Command::Dot { input, out } => {
            let text = match load(&input)? {
                Payload::Lattice(l) => dot::lattice_dot(&l),
                Payload::Pervin(p) => dot::pervin_dot(&p)?,
                other => {
                    return Err(Error::Schema(format!(
                        "dot renders lattice and pervin instances, not {}",
                        other.kind()
                    )))
                }
            };
            write_out(&out, &text)?;
            Ok(0)
        }
    }
}

/// Resolve an instance argument: a `catalog:` reference or a file path.
fn load(input: &str) -> Result<Payload> {
    if let Some(name) = input.strip_prefix("catalog:") {
        return catalog_payload(name).ok_or_else(|| {
            Error::Schema(format!(
                "unknown catalog name '{name}' (lattices C1..C4, B4, B8, N5, M3; \
                 spaces SIER, INDISC, P3, DISC2; SIER-BISPACE; BIFRAME-332; FULL-<lattice>)"
            ))
        });
    }
    let text = std::fs::read_to_string(input)
        .map_err(|e| Error::Schema(format!("cannot read {input}: {e}")))?;
    files::parse(&text)
}

fn catalog_payload(name: &str) -> Option<Payload> {
    let upper = name.to_ascii_uppercase();
    if let Some(l) = catalog::lattice_by_name(&upper) {
        return Some(Payload::Lattice(l));
    }
    if let Some(p) = catalog::pervin_by_name(&upper) {
        return Some(Payload::Pervin(p));
    }
    if let Some(rest) = upper.strip_prefix("FULL-") {
        let l = catalog::lattice_by_name(rest)?;
        return FrithPair::full(l).ok().map(Payload::Frith);
    }
    match upper.as_str() {
        "SIER-BISPACE" => Some(Payload::Bispace(catalog::sier_bispace())),
        "BIFRAME-332" => Some(Payload::Biframe(catalog::biframe_332())),
        _ => None,
    }
}

fn label(p: &Payload) -> String {
    match p {
        Payload::Lattice(l) => format!("lattice ({} elements)", l.size()),
        Payload::Pervin(s) => {
            format!("pervin ({} points, {} sets)", s.points(), s.family().len())
        }
        Payload::Frith(f) => format!(
            "frith ({} elements, {} designated)",
            f.lattice().size(),
            f.sub_elements().len()
        ),
        Payload::Bispace(x) => format!(
            "bispace ({} points, {}+ opens, {}- opens)",
            x.points(),
            x.pos().len(),
            x.neg().len()
        ),
        Payload::Biframe(b) => format!("biframe ({} elements)", b.main().size()),
        _ => p.kind().to_string(),
    }
}

fn check_property(property: &str, payload: &Payload) -> Result<LawReport> {
    let (pass, witness): (bool, Option<String>) = match (property, payload) {
        ("distributive", Payload::Lattice(l)) => match l.distributivity_witness() {
            None => (true, None),
            Some((a, b, c)) => (false, Some(format!("violating triple ({a}, {b}, {c})"))),
        },
        ("boolean", Payload::Lattice(l)) => (l.is_boolean(), None),
        ("t0", Payload::Pervin(p)) => (p.is_t0(), None),
        ("td", Payload::Pervin(p)) => (p.is_td(), None),
        ("symmetric", Payload::Pervin(p)) => (p.is_symmetric(), None),
        ("complete", Payload::Pervin(p)) => (p.is_cauchy_complete(), None),
        ("spectral", Payload::Pervin(p)) => (duality::is_spectral(&p.omega_topology())?, None),
        ("sober", Payload::Pervin(p)) => (duality::is_sober(&p.omega_topology())?, None),
        ("frith", Payload::Frith(f)) => (f.is_frith(), None),
        ("symmetric", Payload::Frith(f)) => (f.is_symmetric(), None),
        ("complete", Payload::Frith(f)) => (frith::is_complete(f)?, None),
        ("locale-based", Payload::Frith(f)) => (frith::is_locale_based(f)?, None),
        ("strongly-exact", Payload::Frith(f)) => (frith::is_strongly_exact(f)?, None),
        ("pairwise-stone", Payload::Bispace(x)) => (duality::pairwise_stone_check(x), None),
        _ => {
            return Err(Error::Schema(format!(
                "no property '{property}' for {} instances",
                payload.kind()
            )))
        }
    };
    Ok(LawReport {
        law: format!("check:{property}"),
        instances: vec![label(payload)],
        pass,
        witness,
    })
}

fn apply_functor(functor: &str, payload: &Payload) -> Result<Payload> {
    match (functor, payload) {
        ("omega", Payload::Pervin(p)) => Ok(Payload::Frith(frith::omega_functor(p)?)),
        ("pt", Payload::Frith(f)) => Ok(Payload::Pervin(frith::pt_functor(f)?)),
        ("psym", Payload::Pervin(p)) => Ok(Payload::Pervin(p.symmetrize())),
        ("fsym", Payload::Frith(f)) => Ok(Payload::Frith(frith::fsym(f)?.pair)),
        ("lperv", Payload::Pervin(p)) => {
            Ok(Payload::Lattice(family_lattice(p.family(), p.names())?))
        }
        ("pff", Payload::Lattice(l)) => Ok(Payload::Pervin(pervin::pf_space(l)?)),
        ("idl", Payload::Lattice(l)) => Ok(Payload::Lattice(lattice::ideal_lattice(l)?.lattice)),
        ("completion", Payload::Frith(f)) => Ok(Payload::Frith(frith::completion(f)?.pair)),
        ("skula", Payload::Pervin(p)) => Ok(Payload::Bispace(bitop::skula_space(p)?)),
        ("clplus", Payload::Bispace(x)) => Ok(Payload::Pervin(bitop::clplus(x)?)),
        ("fsk", Payload::Frith(f)) => Ok(Payload::Biframe(bitop::skula_biframe(f)?.biframe)),
        ("bbplus", Payload::Biframe(b)) => Ok(Payload::Frith(bitop::bbplus(b)?.0)),
        ("clopen", Payload::Pervin(p)) => Ok(Payload::Pervin(bitop::clopen_space(p)?)),
        _ => Err(Error::Schema(format!(
            "no functor '{functor}' for {} instances",
            payload.kind()
        ))),
    }
}

fn roundtrip(duality: &str, payload: &Payload) -> Result<LawReport> {
    let name = format!("roundtrip:{duality}");
    let instance = label(payload);
    let (pass, witness) = match (duality, payload) {
        ("omega-pt", Payload::Pervin(p)) => {
            let back = frith::pt_functor(&frith::omega_functor(p)?)?;
            iso_witness(pervin::find_pervin_isomorphism(p, &back).map(|m| format!("{m:?}")))
        }
        ("omega-pt", Payload::Frith(f)) => {
            let back = frith::omega_functor(&frith::pt_functor(f)?)?;
            iso_witness(frith::find_pair_isomorphism(f, &back).map(|h| format!("{:?}", h.hom.map)))
        }
        ("birkhoff", Payload::Lattice(l)) => {
            let iso = lattice::birkhoff_roundtrip(l)?;
            (true, Some(format!("{:?}", iso.map)))
        }
        ("stone", Payload::Pervin(p)) => {
            let topology = duality::u(p);
            let back = duality::ko(p.names().to_vec(), &topology)?;
            iso_witness(pervin::find_pervin_isomorphism(p, &back).map(|m| format!("{m:?}")))
        }
        ("priestley", Payload::Pervin(p)) => {
            let back = duality::cup(&duality::pp(p)?)?;
            iso_witness(pervin::find_pervin_isomorphism(p, &back).map(|m| format!("{m:?}")))
        }
        ("skula", Payload::Pervin(p)) => {
            let back = bitop::clplus(&bitop::skula_space(p)?)?;
            (back == *p, Some("positive clopens recover the family".into()))
        }
        ("fsk", Payload::Frith(f)) => {
            let back = bitop::bbplus(&bitop::skula_biframe(f)?.biframe)?.0;
            iso_witness(frith::find_pair_isomorphism(f, &back).map(|h| format!("{:?}", h.hom.map)))
        }
        _ => {
            return Err(Error::Schema(format!(
                "no duality '{duality}' for {} instances",
                payload.kind()
            )))
        }
    };
    Ok(LawReport { law: name, instances: vec![instance], pass, witness })
}

fn iso_witness(found: Option<String>) -> (bool, Option<String>) {
    match found {
        Some(map) => (true, Some(format!("isomorphism {map}"))),
        None => (false, Some("no isomorphism between instance and round trip".into())),
    }
}

fn enumerate_kind(kind: &str, max_points: usize, bound: usize) -> Result<Vec<Payload>> {
    if !(1..=4).contains(&max_points) {
        return Err(Error::Schema("--max-points must be between 1 and 4".into()));
    }
    if !(1..=8).contains(&bound) {
        return Err(Error::Schema("--bound must be between 1 and 8".into()));
    }
    Ok(match kind {
        "lattices" => enumerate::distributive_lattices_upto(bound)
            .into_iter()
            .map(Payload::Lattice)
            .collect(),
        "pervin" => enumerate::pervin_spaces(max_points, bound)
            .into_iter()
            .map(Payload::Pervin)
            .collect(),
        "frith" => enumerate::frith_pairs(bound).into_iter().map(Payload::Frith).collect(),
        "bispaces" => enumerate::bispaces(max_points, bound)
            .into_iter()
            .map(Payload::Bispace)
            .collect(),
        "biframes" => enumerate::biframes(bound).into_iter().map(Payload::Biframe).collect(),
        _ => {
            return Err(Error::Schema(format!(
                "unknown kind '{kind}' (expected lattices, pervin, frith, bispaces, biframes)"
            )))
        }
    })
}

fn law_text(report: &LawReport, format: Format) -> String {
    match format {
        Format::Json => to_pretty(report),
        Format::Md => {
            let mut s = format!(
                "- {} on {}: {}\n",
                report.law,
                report.instances.join(", "),
                if report.pass { "PASS" } else { "FAIL" }
            );
            if let Some(w) = &report.witness {
                s.push_str(&format!("  - {w}\n"));
            }
            s
        }
    }
}

fn char_markdown(report: &pervin::CharReport) -> String {
    let row = |name: &str, v: bool| format!("| {name} | {v} |\n");
    let mut s = format!(
        "# Completeness characterization (search bound {})\n\n| condition | holds |\n|---|---|\n",
        report.bound
    );
    s.push_str(&row("cauchy complete", report.cauchy_complete));
    s.push_str(&row("complete", report.complete));
    s.push_str(&row("maximal among extensions", report.maximal_among_extensions));
    s.push_str(&row("iso to pf of family", report.iso_to_pf_of_family));
    s.push_str(&row("iso to pf of ideals", report.iso_to_pf_of_ideals));
    s.push_str(&row("witnessed by some ideal spectrum", report.witnessed_by_some_ideal_spectrum));
    s.push_str(&row("witnessed by some spectrum", report.witnessed_by_some_spectrum));
    s
}

fn to_pretty<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn write_out(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::Schema(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
