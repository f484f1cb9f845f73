//! One function per subcommand, each producing the JSON value and the
//! document rendered for text and Markdown output.

use std::collections::BTreeMap;

use framed_core::catalog;
use framed_core::extension::{
    build_delta, certify_main_theorem, chain_witness, Certificate, Stage, StructureCodes,
};
use framed_core::gf2::{build_chain, ChainLink};
use framed_core::induction::{beta_report, full_report, BetaReport};
use framed_core::ising::SixteenthWeight;
use framed_core::pointed::{discriminate, AbelianGroup, Discrimination};
use framed_core::{BinaryCode, BitWord};
use serde::Serialize;
use serde_json::Value;

use crate::render::{Doc, Table};
use crate::CliError;

pub struct Outcome {
    pub json: Value,
    pub doc: Doc,
    /// Name of the failing stage for a negative mathematical outcome.
    pub failure: Option<String>,
}

fn to_json<T: Serialize>(command: &str, report: &T) -> Result<Value, CliError> {
    #[derive(Serialize)]
    struct Envelope<'a, T> {
        command: &'a str,
        report: &'a T,
    }
    serde_json::to_value(Envelope { command, report }).map_err(|e| CliError::Internal(e.to_string()))
}

fn spin_text(exponent: u8) -> String {
    SixteenthWeight(exponent as i64).to_string()
}

fn spin_census(spins: impl IntoIterator<Item = u8>) -> String {
    let mut counts: BTreeMap<u8, usize> = BTreeMap::new();
    for s in spins {
        *counts.entry(s).or_default() += 1;
    }
    let parts: Vec<String> = counts
        .iter()
        .map(|(s, k)| format!("{} x{k}", spin_text(*s)))
        .collect();
    parts.join(", ")
}

fn code_summary(c: &BinaryCode) -> String {
    format!("length {}, rank {}", c.length(), c.rank())
}

fn status(ok: bool) -> String {
    if ok { "pass" } else { "FAIL" }.to_string()
}

pub fn verify(s: &StructureCodes) -> Result<Outcome, CliError> {
    let cert = certify_main_theorem(s)?;
    let mut doc = Doc::new("Holomorphic extension certificate");
    doc.line(cert.headline());
    if let Some(detail) = &cert.failure_detail {
        doc.line(detail.clone());
    }
    doc.field("C", code_summary(&s.c_code));
    doc.field("D", code_summary(&s.d_code));
    if let Some(ly) = &cert.ly {
        doc.field("D divisibility", ly.divisibility.label());
    }
    if let Some(r) = &cert.report {
        doc.field("sectors of the crossed product", &r.total_sectors);
        doc.field("total μ-index", &r.total_mu);
    }
    if let Some(mu) = &cert.holomorphic_mu {
        doc.field("μ-index of the extension", mu);
    }
    if let Some(delta) = &cert.delta {
        doc.field("|Δ|", delta.len());
        doc.field("generated Δ mismatches", delta.mismatches());
    }
    if cert.failed_stage.is_none() || cert.failed_stage == Some(Stage::ChainWitnesses) {
        doc.field("chains checked", cert.chains.len());
    }
    doc.table(stage_table(&cert));
    Ok(Outcome {
        json: to_json("verify", &cert)?,
        failure: cert.failed_stage.map(|st| st.label().to_string()),
        doc,
    })
}

fn stage_table(cert: &Certificate) -> Table {
    let mut t = Table::new("Stages", &["stage", "status"]);
    let mut reached = true;
    for st in Stage::ALL {
        let cell = if !reached {
            "not run".to_string()
        } else if cert.failed_stage == Some(st) {
            reached = false;
            "FAIL".to_string()
        } else {
            "pass".to_string()
        };
        t.row(vec![st.label().to_string(), cell]);
    }
    t
}

fn beta_row(r: &BetaReport) -> Vec<String> {
    vec![
        r.beta.to_string(),
        r.weight.to_string(),
        r.c_beta_size.to_string(),
        r.num_classes.to_string(),
        r.multiplicity_m.to_string(),
        r.split_t.to_string(),
        r.irreducible_dim_d.to_string(),
        spin_census(r.sector_spins()),
    ]
}

const BETA_HEADERS: [&str; 8] = ["beta", "wt", "|C_beta|", "classes", "m", "t", "d", "spins"];

pub fn sectors(c: &BinaryCode) -> Result<Outcome, CliError> {
    let report = full_report(c)?;
    let weights: Vec<String> = report.sector_weights().iter().map(|w| w.to_string()).collect();
    let mut doc = Doc::new("Sectors of the code net");
    let weight_text = if weights.len() <= 64 {
        weights.join(", ")
    } else {
        format!("{} values", weights.len())
    };
    doc.line(format!(
        "{} sectors; weights {weight_text}; μ = {}",
        report.total_sectors, report.total_mu
    ));
    doc.field("C", code_summary(c));
    doc.field("C-dual", code_summary(&report.dual));
    doc.field("total μ-index", &report.total_mu);
    doc.field("4^n / |C|^2", &report.target_mu);
    doc.field("consistent", report.consistent);
    let mut t = Table::new("Per tau-word", &BETA_HEADERS);
    for r in &report.beta_reports {
        t.row(beta_row(r));
    }
    doc.table(t);
    let failure = (!report.consistent).then(|| "sector accounting".to_string());
    Ok(Outcome {
        json: to_json("sectors", &report)?,
        doc,
        failure,
    })
}

pub fn beta(c: &BinaryCode, beta: &BitWord) -> Result<Outcome, CliError> {
    let r = beta_report(c, beta)?;
    let mut doc = Doc::new(format!("Induced sectors with tau-word {beta}"));
    doc.line(format!("{} classes, {} irreducible sectors", r.num_classes, r.num_sectors()));
    for (h, v) in BETA_HEADERS.iter().zip(beta_row(&r)) {
        doc.field(h, v);
    }
    doc.field("<alpha, alpha>", &r.alpha_dim);
    doc.field("μ contribution", &r.mu_contribution);
    let mut t = Table::new("Classes", &["representative", "weight", "spin"]);
    for cl in &r.class_list {
        t.row(vec![cl.rep.to_string(), cl.weight.to_string(), spin_text(cl.spin_exponent)]);
    }
    doc.table(t);
    Ok(Outcome {
        json: to_json("beta", &r)?,
        doc,
        failure: None,
    })
}

#[derive(Serialize)]
struct ChainOutput {
    beta: BitWord,
    links: Vec<ChainLink>,
    valid: bool,
}

pub fn chain(d: &BinaryCode, beta: &BitWord) -> Result<Outcome, CliError> {
    let links = build_chain(d, beta)?;
    let witness = chain_witness(d, beta)?;
    let mut doc = Doc::new(format!("Chain of triply even codes through {beta}"));
    doc.line(format!(
        "{} codes; {}",
        links.len(),
        if witness.valid { "all checks pass" } else { "checks FAIL" }
    ));
    let mut t = Table::new("Steps", &["r", "rank D_r", "rank C_r", "triply even", "contains (1)"]);
    for (r, st) in witness.steps.iter().enumerate() {
        t.row(vec![
            (r + 1).to_string(),
            st.d_rank.to_string(),
            st.c_rank.to_string(),
            status(st.triply_even),
            status(st.contains_all_one),
        ]);
    }
    doc.table(t);
    let out = ChainOutput {
        beta: *beta,
        links,
        valid: witness.valid,
    };
    Ok(Outcome {
        json: to_json("chain", &out)?,
        doc,
        failure: (!witness.valid).then(|| "chain witnesses".to_string()),
    })
}

pub fn delta(s: &StructureCodes) -> Result<Outcome, CliError> {
    let table = build_delta(s)?;
    let mut doc = Doc::new("Extending sectors");
    doc.line(format!(
        "{} sectors; {} differ from the table generated by a basis of D",
        table.len(),
        table.mismatches()
    ));
    let mut gens = Table::new("Basis choices", &["beta", "representative"]);
    for (b, rep) in &table.generator_choices {
        gens.row(vec![b.to_string(), rep.to_string()]);
    }
    doc.table(gens);
    let mut t = Table::new("Table", &["beta", "representative", "weight", "generated", "match"]);
    for (e, g) in table.entries.iter().zip(&table.generated) {
        t.row(vec![
            e.beta.to_string(),
            e.class.rep.to_string(),
            e.class.weight.to_string(),
            g.generated.as_ref().map(|x| x.to_string()).unwrap_or_else(|| "-".into()),
            if g.matches_independent { "yes" } else { "no" }.to_string(),
        ]);
    }
    doc.table(t);
    Ok(Outcome {
        json: to_json("delta", &table)?,
        doc,
        failure: None,
    })
}

#[derive(Serialize)]
struct DiscriminateOutput {
    spins: Vec<u8>,
    candidates: Vec<Discrimination>,
}

pub fn discriminate_groups(spins: &[u8], groups: &[AbelianGroup]) -> Result<Outcome, CliError> {
    let candidates = groups
        .iter()
        .map(|g| discriminate(g, spins))
        .collect::<Result<Vec<_>, _>>()?;
    let mut doc = Doc::new("Pointed modular data");
    let spin_list: Vec<String> = spins.iter().map(|s| spin_text(*s)).collect();
    doc.line(format!("spins (mod 1): {}", spin_list.join(", ")));
    let mut t = Table::new(
        "Candidate groups",
        &["group", "admissible", "witness", "tried", "not quadratic", "degenerate"],
    );
    for d in &candidates {
        t.row(vec![
            d.group.clone(),
            if d.admissible { "yes" } else { "no" }.to_string(),
            d.witness
                .as_ref()
                .map(|w| w.iter().map(|s| spin_text(*s)).collect::<Vec<_>>().join(" "))
                .unwrap_or_else(|| "-".into()),
            d.assignments_tried.to_string(),
            d.invalid_quadratic_form.to_string(),
            d.degenerate.to_string(),
        ]);
    }
    doc.table(t);
    let out = DiscriminateOutput {
        spins: spins.to_vec(),
        candidates,
    };
    Ok(Outcome {
        json: to_json("discriminate", &out)?,
        doc,
        failure: None,
    })
}

#[derive(Serialize)]
struct CatalogOutput {
    codes: Vec<catalog::CatalogEntry>,
    pairs: Vec<catalog::CatalogPair>,
}

pub fn catalog_listing() -> Result<Outcome, CliError> {
    let codes = catalog::entries()?;
    let pairs = catalog::pairs();
    let mut doc = Doc::new("Built-in codes");
    doc.line("Use `@name` in place of a code file, or `--catalog pair` for (C, D).");
    let mut t = Table::new("Codes", &["name", "length", "rank", "divisibility", "description"]);
    for e in &codes {
        t.row(vec![
            e.name.clone(),
            e.code.length().to_string(),
            e.code.rank().to_string(),
            e.code.divisibility_class().label().to_string(),
            e.description.clone(),
        ]);
    }
    doc.table(t);
    let mut p = Table::new("Pairs", &["pair", "C", "D", "description"]);
    for e in &pairs {
        p.row(vec![e.name.clone(), e.c_name.clone(), e.d_name.clone(), e.description.clone()]);
    }
    doc.table(p);
    Ok(Outcome {
        json: to_json("catalog", &CatalogOutput { codes, pairs })?,
        doc,
        failure: None,
    })
}
