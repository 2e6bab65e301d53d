//! The verification suite: ten numbered criteria covering the concrete
//! golden numbers, the seven-way characterization, both dualities, the
//! adjunction battery, the oracle cross-checks, and determinism.  The same
//! criteria back the `suite` command and the acceptance tests.

use rayon::prelude::*;
use serde::Serialize;

use crate::adjunction;
use crate::bitop;
use crate::bits::{self, Bits};
use crate::catalog;
use crate::congruence;
use crate::duality;
use crate::enumerate;
use crate::error::{Error, Result};
use crate::frith::{self, FrithPair};
use crate::lattice::{birkhoff_roundtrip, find_isomorphism, FinLattice};
use crate::pervin::{self, PervinSpace};
use crate::report::LawReport;

/// Bounds for every enumeration the suite performs.  Enumeration is
/// deterministic and seed-free; two runs with equal bounds produce
/// byte-identical reports.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteConfig {
    pub max_points: usize,
    pub max_family: usize,
    pub max_lattice: usize,
    pub search_bound: usize,
    /// Worker threads; 0 keeps the library default.
    pub parallelism: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_points: 4,
            max_family: 8,
            max_lattice: 8,
            search_bound: 4,
            parallelism: 0,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CriterionOutcome {
    pub id: String,
    pub title: String,
    pub pass: bool,
    pub laws: Vec<LawReport>,
}

fn outcome(id: &str, title: &str, laws: Vec<LawReport>) -> CriterionOutcome {
    CriterionOutcome {
        id: id.into(),
        title: title.into(),
        pass: laws.iter().all(|l| l.pass),
        laws,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub criteria: Vec<CriterionOutcome>,
    pub pass: bool,
}

impl SuiteReport {
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("reports serialize");
        text.push('\n');
        text
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        out.push_str("# Verification suite\n\n");
        out.push_str(&format!(
            "Bounds: max_points={} max_family={} max_lattice={} search_bound={}\n\n",
            self.config.max_points,
            self.config.max_family,
            self.config.max_lattice,
            self.config.search_bound
        ));
        out.push_str("| id | criterion | laws | result |\n|----|-----------|------|--------|\n");
        for c in &self.criteria {
            out.push_str(&format!(
                "| {} | {} | {} | {} |\n",
                c.id,
                c.title,
                c.laws.len(),
                if c.pass { "pass" } else { "FAIL" }
            ));
        }
        let failures: Vec<&LawReport> = self
            .criteria
            .iter()
            .flat_map(|c| c.laws.iter())
            .filter(|l| !l.pass)
            .collect();
        if !failures.is_empty() {
            out.push_str("\n## Failures\n\n");
            for l in failures {
                out.push_str(&format!(
                    "- `{}`: {}\n",
                    l.law,
                    l.witness.as_deref().unwrap_or("no witness recorded")
                ));
            }
        }
        out.push_str(&format!(
            "\nOverall: {}\n",
            if self.pass { "pass" } else { "FAIL" }
        ));
        out
    }

    /// One line per criterion plus a verdict, for terminal output.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for c in &self.criteria {
            out.push_str(&format!(
                "{} {}: {}\n",
                c.id,
                c.title,
                if c.pass { "PASS" } else { "FAIL" }
            ));
        }
        out.push_str(&format!(
            "suite: {}\n",
            if self.pass { "PASS" } else { "FAIL" }
        ));
        out
    }
}

fn t0_spaces(cfg: &SuiteConfig) -> Vec<PervinSpace> {
    enumerate::pervin_spaces(cfg.max_points, cfg.max_family)
        .into_iter()
        .filter(|p| p.is_t0())
        .collect()
}

fn space_id(i: usize, p: &PervinSpace) -> String {
    format!("pervin#{i}({}pts,{}sets)", p.points(), p.family().len())
}

fn pair_id(i: usize, f: &FrithPair) -> String {
    format!("pair#{i}({}elts)", f.lattice().size())
}

fn lattice_id(i: usize, l: &FinLattice) -> String {
    format!("lattice#{i}({}elts)", l.size())
}

/// Criterion 1: the (3,3,2) biframe separates the two spectra: one point
/// through the bicomplemented part, two through the positive clopens.
fn c1_biframe_spectra() -> Result<CriterionOutcome> {
    let mut rep = LawReport::new("biframe-3-3-2-spectra");
    let sq = bitop::spectra_square_check(&catalog::biframe_332())?;
    rep.instance("biframe(3,3,2)");
    rep.require(sq.points_via_bicomplemented == 1, || {
        format!("expected 1 point via the pair route, got {}", sq.points_via_bicomplemented)
    });
    rep.require(sq.points_via_clopens == 2, || {
        format!("expected 2 points via the clopen route, got {}", sq.points_via_clopens)
    });
    rep.require(!sq.isomorphic, || {
        "the two spectra must not be isomorphic for this instance".to_string()
    });
    Ok(outcome("c1", "biframe (3,3,2) spectra counts", vec![rep]))
}

/// Criterion 2: the seven-way completeness characterization holds with all
/// computable conditions true and the bounded searches finding no
/// counterexample.
fn c2_characterization(cfg: &SuiteConfig) -> Result<CriterionOutcome> {
    let spaces = t0_spaces(cfg);
    let bound = cfg.search_bound;
    let rows: Vec<(String, pervin::CharReport)> = spaces
        .par_iter()
        .enumerate()
        .map(|(i, p)| Ok((space_id(i, p), pervin::theorem_char_report(p, bound)?)))
        .collect::<Result<_>>()?;
    let mut rep = LawReport::new("seven-way-characterization");
    for (id, r) in rows {
        rep.instance(id.clone());
        let exact = [
            ("cauchy-complete", r.cauchy_complete),
            ("iso-to-spectrum-of-family", r.iso_to_pf_of_family),
            ("iso-to-spectrum-of-ideals", r.iso_to_pf_of_ideals),
            ("witnessed-by-ideal-spectrum", r.witnessed_by_some_ideal_spectrum),
            ("witnessed-by-spectrum", r.witnessed_by_some_spectrum),
        ];
        for (name, flag) in exact {
            rep.require(flag, || format!("{id}: condition {name} is false"));
        }
        rep.require(r.complete, || {
            format!("{id}: a proper dense extremal extension exists at bound {bound}")
        });
        rep.require(r.maximal_among_extensions, || {
            format!("{id}: a proper extension with dense symmetrization exists at bound {bound}")
        });
    }
    Ok(outcome("c2", "seven-way completeness characterization", vec![rep]))
}

/// Criterion 3: the opens/spectrum round trips are isomorphisms on T0
/// spaces and complete pairs.
fn c3_duality_roundtrips(cfg: &SuiteConfig) -> Result<CriterionOutcome> {
    let rep = duality::completeness_duality_check(cfg.max_points, cfg.max_family, cfg.max_lattice)?;
    Ok(outcome("c3", "opens/spectrum round trips are isomorphisms", vec![rep]))
}

/// Criterion 4: the compact opens of the induced topology are exactly the
/// designated family.
fn c4_compact_opens(cfg: &SuiteConfig) -> Result<CriterionOutcome> {
    let mut rep = LawReport::new("compact-opens-equal-family");
    for (i, p) in t0_spaces(cfg).iter().enumerate() {
        let id = space_id(i, p);
        rep.instance(id.clone());
        let co = duality::compact_opens(&p.omega_topology());
        rep.require(co == *p.family(), || {
            format!("{id}: compact opens differ from the designated family")
        });
    }
    Ok(outcome("c4", "compact opens equal the designated family", vec![rep]))
}

/// Criterion 5: Stone and Priestley round trips are identities, and the
/// composite and classical Priestley constructions agree.
fn c5_stone_priestley(cfg: &SuiteConfig) -> Result<CriterionOutcome> {
    let stone = duality::stone_iso_check(cfg.max_points, cfg.max_family)?;
    let priestley = duality::priestley_iso_check(cfg.max_points, cfg.max_family)?;
    Ok(outcome("c5", "Stone and Priestley round trips", vec![stone, priestley]))
}

/// Criterion 6: every adjunction in the diagram passes its full law
/// battery, and the corrupted counit is caught.
fn c6_adjunction_battery(cfg: &SuiteConfig) -> Result<CriterionOutcome> {
    let families =
        adjunction::standard_families(cfg.max_points, cfg.max_family, cfg.max_lattice)?;
    let mut laws: Vec<LawReport> = families
        .par_iter()
        .map(adjunction::verify)
        .collect::<Result<_>>()?;
    let corrupted = adjunction::verify(&adjunction::corrupted_counit_family()?)?;
    let mut control = LawReport::new("adjunction:negative-control");
    control.instance("psym-corrupted");
    control.require(!corrupted.pass && corrupted.witness.is_some(), || {
        "the corrupted counit was not detected".to_string()
    });
    laws.push(control);
    Ok(outcome("c6", "adjunction law battery", laws))
}

fn prime_filters_brute(l: &FinLattice) -> Vec<Bits> {
    let mut out = Vec::new();
    for m in 1..=bits::full(l.size()) {
        if bits::has(m, l.bottom()) {
            continue;
        }
        let up_closed = bits::iter(m)
            .all(|a| (0..l.size()).all(|b| !l.leq(a, b) || bits::has(m, b)));
        let meet_closed =
            bits::iter(m).all(|a| bits::iter(m).all(|b| bits::has(m, l.meet(a, b))));
        let prime = (0..l.size()).all(|a| {
            (0..l.size()).all(|b| !bits::has(m, l.join(a, b)) || bits::has(m, a) || bits::has(m, b))
        });
        if up_closed && meet_closed && prime {
            out.push(m);
        }
    }
    out
}

/// Criterion 7: the independent oracles agree: brute-force prime filters
/// match the join-irreducible route, Birkhoff round trips are isomorphisms,
/// the congruence lattice of the 3-chain is the diamond, and the generated
/// congruence subframe over everything is the whole congruence lattice.
fn c7_oracles(cfg: &SuiteConfig) -> Result<CriterionOutcome> {
    let lattices = enumerate::distributive_lattices_upto(cfg.max_lattice.min(8));
    let mut filters = LawReport::new("prime-filter-routes");
    let mut birkhoff = LawReport::new("birkhoff-roundtrip");
    for (i, l) in lattices.iter().enumerate() {
        let id = lattice_id(i, l);
        filters.instance(id.clone());
        let brute = prime_filters_brute(l);
        let mut via_ji: Vec<Bits> = l
            .join_irreducibles()
            .into_iter()
            .map(|j| l.poset().up_set(j))
            .collect();
        via_ji.sort_unstable();
        filters.require(brute == via_ji, || {
            format!("{id}: brute-force prime filters differ from the up-sets of join-irreducibles")
        });
        filters.require(brute == l.prime_filters().unwrap_or_default(), || {
            format!("{id}: the library's prime filters differ from brute force")
        });
        birkhoff.instance(id.clone());
        let iso = birkhoff_roundtrip(l);
        birkhoff.require(iso.map(|h| h.is_iso()).unwrap_or(false), || {
            format!("{id}: Birkhoff round trip is not an isomorphism")
        });
    }

    let mut con = LawReport::new("congruence-frame-goldens");
    con.instance("C3");
    let c3_con = congruence::all_congruences(&catalog::c3())?;
    con.require(c3_con.members.len() == 4, || {
        format!("Con(C3) has {} members, expected 4", c3_con.members.len())
    });
    con.require(find_isomorphism(&c3_con.lattice, &catalog::b4()).is_some(), || {
        "Con(C3) is not the diamond".to_string()
    });
    for (i, l) in enumerate::distributive_lattices_upto(6).iter().enumerate() {
        let id = lattice_id(i, l);
        con.instance(format!("subframe:{id}"));
        let generated = congruence::generated_congruence_subframe(l, l.all())?;
        let all = congruence::all_congruences(l)?;
        con.require(generated.members == all.members, || {
            format!("{id}: the generated congruence subframe misses congruences")
        });
    }
    Ok(outcome("c7", "oracle equivalences", vec![filters, birkhoff, con]))
}

/// Criterion 8: the point-deletion characterizations: the three `TD`
/// routes coincide, both bounded recognition checks agree with the direct
/// predicates, and the generated sublocale matches the division-meet
/// formula.
fn c8_td_recognition(cfg: &SuiteConfig) -> Result<CriterionOutcome> {
    let all_spaces = enumerate::pervin_spaces(cfg.max_points, cfg.max_family);
    let mut td = LawReport::new("td-three-routes");
    for (i, p) in all_spaces.iter().enumerate() {
        let id = space_id(i, p);
        td.instance(id.clone());
        // Evaluating is_td asserts the three routes agree; at finite scale
        // the verdict must coincide with T0.
        let verdict = p.is_td();
        td.require(verdict == p.is_t0(), || {
            format!("{id}: TD disagrees with T0 on a finite carrier")
        });
    }

    let bound = cfg.search_bound;
    let mut recog = LawReport::new("recognition-vs-direct");
    let spaces = t0_spaces(cfg);
    let rows: Vec<(String, pervin::RecognitionReport, bool)> = spaces
        .par_iter()
        .enumerate()
        .map(|(i, p)| {
            Ok((space_id(i, p), pervin::banaschewski_pultr_check(p, bound)?, p.is_td()))
        })
        .collect::<Result<_>>()?;
    for (id, r, is_td) in rows {
        recog.instance(id.clone());
        recog.require(r.complete_side, || {
            format!("{id}: recognition denies completeness of a finite space")
        });
        recog.require(r.td_side == is_td, || {
            format!("{id}: TD recognition disagrees with the direct predicate")
        });
    }
    for (i, f) in enumerate::frith_pairs(cfg.max_lattice).iter().enumerate() {
        let id = pair_id(i, f);
        recog.instance(format!("frith:{id}"));
        let r = frith::frith_banaschewski_check(f, bound)?;
        recog.require(r.complete_side == frith::is_complete(f)?, || {
            format!("{id}: completeness recognition disagrees with the structural notion")
        });
        recog.require(r.locale_based_side == frith::is_locale_based(f)?, || {
            format!("{id}: locale-based recognition disagrees with the structural notion")
        });
    }

    let mut subloc = LawReport::new("generated-sublocale-formula");
    for (i, l) in enumerate::distributive_lattices_upto(cfg.max_lattice.min(6))
        .iter()
        .enumerate()
    {
        let id = lattice_id(i, l);
        subloc.instance(id.clone());
        for gens in bits::subsets(l.all()) {
            // Direct formula: all meets of divisions into the generators.
            let mut divisions: Vec<usize> = Vec::new();
            for g in bits::iter(gens) {
                for a in 0..l.size() {
                    divisions.push(l.heyting_arrow(a, g)?);
                }
            }
            divisions.sort_unstable();
            divisions.dedup();
            let division_mask = divisions.iter().fold(0 as Bits, |m, &d| m | bits::bit(d));
            let mut by_formula: Bits = 0;
            for sub in bits::subsets(division_mask) {
                by_formula |= bits::bit(l.meet_set(sub));
            }
            let by_closure = frith::generated_sublocale(l, gens)?;
            subloc.require(by_formula == by_closure, || {
                format!(
                    "{id}: sublocale of {:?} differs between closure and meet formula",
                    bits::to_vec(gens)
                )
            });
        }
    }
    Ok(outcome("c8", "TD and recognition characterizations", vec![td, recog, subloc]))
}

/// Criterion 9: the finite-scale degeneracy theorems hold across the whole
/// enumeration: Cauchy completeness, strongly exact meets landing on the
/// designated part, and compactness.
fn c9_degeneracies(cfg: &SuiteConfig) -> Result<CriterionOutcome> {
    let mut rep = LawReport::new("finite-degeneracies");
    for (i, p) in enumerate::pervin_spaces(cfg.max_points, cfg.max_family)
        .iter()
        .enumerate()
    {
        let id = space_id(i, p);
        rep.instance(format!("cauchy:{id}"));
        rep.require(p.is_cauchy_complete(), || {
            format!("{id}: a Cauchy filter fails to converge")
        });
    }
    for (i, f) in enumerate::frith_pairs(cfg.max_lattice).iter().enumerate() {
        let id = pair_id(i, f);
        rep.instance(format!("sem:{id}"));
        let sem = frith::strongly_exact_meets(f)?;
        rep.require(sem == f.sub_elements(), || {
            format!("{id}: strongly exact meets differ from the designated part")
        });
    }
    for (i, x) in enumerate::bispaces(cfg.max_points, cfg.max_family).iter().enumerate() {
        rep.instance(format!("bispace#{i}"));
        rep.require(x.is_compact(), || format!("bispace#{i} is not compact"));
    }
    for (i, l) in enumerate::biframes(cfg.max_lattice.min(6)).iter().enumerate() {
        rep.instance(format!("biframe#{i}"));
        rep.require(l.is_compact(), || format!("biframe#{i} is not compact"));
    }
    Ok(outcome("c9", "finite-scale degeneracy theorems", vec![rep]))
}

/// Criterion 10: determinism: recomputing representative criteria yields
/// byte-identical serialized reports.
fn c10_determinism(cfg: &SuiteConfig) -> Result<CriterionOutcome> {
    let first = (c1_biframe_spectra()?, c5_stone_priestley(cfg)?);
    let second = (c1_biframe_spectra()?, c5_stone_priestley(cfg)?);
    let render = |pair: &(CriterionOutcome, CriterionOutcome)| -> Result<String> {
        Ok(format!(
            "{}\n{}",
            serde_json::to_string(&pair.0).map_err(|e| Error::Schema(e.to_string()))?,
            serde_json::to_string(&pair.1).map_err(|e| Error::Schema(e.to_string()))?
        ))
    };
    let a = render(&first)?;
    let b = render(&second)?;
    let mut rep = LawReport::new("rerun-byte-identical");
    rep.instance("c1+c5 recomputation");
    rep.require(a == b, || "two runs produced different bytes".to_string());
    Ok(outcome("c10", "deterministic reruns", vec![rep]))
}

/// Identifiers of the ten criteria, in report order.
pub const CRITERIA: [&str; 10] =
    ["c1", "c2", "c3", "c4", "c5", "c6", "c7", "c8", "c9", "c10"];

/// Run a single criterion by identifier.
pub fn run_criterion(id: &str, cfg: &SuiteConfig) -> Result<CriterionOutcome> {
    match id {
        "c1" => c1_biframe_spectra(),
        "c2" => c2_characterization(cfg),
        "c3" => c3_duality_roundtrips(cfg),
        "c4" => c4_compact_opens(cfg),
        "c5" => c5_stone_priestley(cfg),
        "c6" => c6_adjunction_battery(cfg),
        "c7" => c7_oracles(cfg),
        "c8" => c8_td_recognition(cfg),
        "c9" => c9_degeneracies(cfg),
        "c10" => c10_determinism(cfg),
        _ => Err(Error::Schema(format!("unknown criterion '{id}'"))),
    }
}

/// Run every criterion.  With `negative_control` set, an eleventh entry
/// records the corrupted-counit battery as if it were a genuine law, so a
/// working detector makes the suite fail (exit 1 at the CLI).
pub fn run_suite(cfg: &SuiteConfig, negative_control: bool) -> Result<SuiteReport> {
    let body = || -> Result<SuiteReport> {
        let mut criteria = CRITERIA
            .iter()
            .map(|id| run_criterion(id, cfg))
            .collect::<Result<Vec<_>>>()?;
        if negative_control {
            let corrupted = adjunction::verify(&adjunction::corrupted_counit_family()?)?;
            criteria.push(outcome(
                "negative-control",
                "injected corrupted counit (must fail)",
                vec![corrupted],
            ));
        }
        let pass = criteria.iter().all(|c| c.pass);
        Ok(SuiteReport {
            config: cfg.clone(),
            criteria,
            pass,
        })
    };
    if cfg.parallelism > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.parallelism)
            .build()
            .map_err(|e| Error::Invariant(format!("thread pool: {e}")))?
            .install(body)
    } else {
        body()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SuiteConfig {
        SuiteConfig {
            max_points: 2,
            max_family: 4,
            max_lattice: 4,
            search_bound: 3,
            parallelism: 0,
        }
    }

    #[test]
    fn small_suite_passes() {
        let report = run_suite(&small(), false).unwrap();
        assert!(report.pass, "{}", report.summary());
        assert_eq!(report.criteria.len(), 10);
    }

    #[test]
    fn negative_control_fails_the_suite() {
        let mut cfg = small();
        cfg.max_points = 1;
        cfg.max_family = 2;
        cfg.max_lattice = 3;
        let report = run_suite(&cfg, true).unwrap();
        assert!(!report.pass);
        assert_eq!(report.criteria.len(), 11);
        assert!(report.criteria[..10].iter().all(|c| c.pass));
        assert!(!report.criteria[10].pass);
    }

    #[test]
    fn degenerate_single_point_bounds_pass() {
        let cfg = SuiteConfig {
            max_points: 1,
            max_family: 2,
            max_lattice: 2,
            search_bound: 2,
            parallelism: 1,
        };
        let report = run_suite(&cfg, false).unwrap();
        assert!(report.pass, "{}", report.summary());
    }

    #[test]
    fn reruns_are_byte_identical() {
        let cfg = small();
        let a = run_suite(&cfg, false).unwrap().to_json();
        let b = run_suite(&cfg, false).unwrap().to_json();
        assert_eq!(a, b);
    }
}
