//! Text rendering of results.
//!
//! Two formats: an aligned table for people, and a machine format with one
//! tab-separated record per line where every rational is written `p/q`.

use std::fmt::Write as _;

use crate::error::Error;
use crate::fibration::{IdentityCheck, LocalizationReport};
use crate::germ::LocalProfile;
use crate::picard::DivisorRep;
use crate::rational::Rational;
use crate::scenarios::Comparison;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Machine,
}

fn mq(r: &Rational) -> String {
    r.to_fraction_string()
}

fn opt_mq(r: Option<&Rational>) -> String {
    r.map_or_else(|| "-".to_string(), mq)
}

fn opt_q(r: Option<&Rational>) -> String {
    r.map_or_else(|| "-".to_string(), Rational::to_string)
}

/// A germ row of the machine format:
/// `germ NAME MULT LAMBDA_D DELTA SIGMA_D HORIKAWA LSD`, with `-` for an
/// absent Horikawa index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GermRecord {
    pub name: String,
    pub multiplicity: u64,
    pub lambda_d: Rational,
    pub delta: Rational,
    pub sigma_d: Rational,
    pub horikawa: Option<Rational>,
    pub lsd: Rational,
}

impl GermRecord {
    pub fn new(name: &str, multiplicity: u64, p: &LocalProfile) -> Self {
        GermRecord {
            name: name.to_string(),
            multiplicity,
            lambda_d: p.lambda_d.clone(),
            delta: p.delta.clone(),
            sigma_d: p.sigma_d.clone(),
            horikawa: p.horikawa.clone(),
            lsd: p.lsd.clone(),
        }
    }

    pub fn to_line(&self) -> String {
        format!(
            "germ\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.name,
            self.multiplicity,
            mq(&self.lambda_d),
            mq(&self.delta),
            mq(&self.sigma_d),
            opt_mq(self.horikawa.as_ref()),
            mq(&self.lsd)
        )
    }

    pub fn parse(line: &str) -> Result<Self, Error> {
        let fields: Vec<&str> = line.split('\t').collect();
        let bad = || Error::Input(format!("malformed germ record {line:?}"));
        if fields.len() != 8 || fields[0] != "germ" {
            return Err(bad());
        }
        let multiplicity = fields[2].parse().map_err(|_| bad())?;
        let horikawa = match fields[6] {
            "-" => None,
            s => Some(s.parse()?),
        };
        Ok(GermRecord {
            name: fields[1].to_string(),
            multiplicity,
            lambda_d: fields[3].parse()?,
            delta: fields[4].parse()?,
            sigma_d: fields[5].parse()?,
            horikawa,
            lsd: fields[7].parse()?,
        })
    }
}

fn check_line(c: &IdentityCheck) -> String {
    format!(
        "check\t{}\t{}\t{}\t{}\t{}",
        c.name,
        mq(&c.lhs),
        mq(&c.rhs),
        mq(&c.residual),
        if c.passed() { "pass" } else { "fail" }
    )
}

fn rep_line(name: &str, rep: &DivisorRep) -> String {
    let b: Vec<String> = rep.b().iter().map(mq).collect();
    format!(
        "rep\t{}\t{}\t{}\t{}",
        name,
        mq(rep.a()),
        b.join(" "),
        rep.degree_key().unwrap_or("-")
    )
}

/// Renders a grid with left-aligned columns separated by two spaces.
pub fn grid(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i > 0 {
                s.push_str("  ");
            }
            s.push_str(cell);
            if i + 1 < cells.len() {
                s.extend(std::iter::repeat_n(' ', w - cell.chars().count()));
            }
        }
        out.push_str(s.trim_end());
        out.push('\n');
    };
    line(header.to_vec());
    for row in rows {
        line(row.iter().map(String::as_str).collect());
    }
    out
}

pub fn render_localization(
    rep_name: &str,
    rep: &DivisorRep,
    report: &LocalizationReport,
    format: Format,
) -> String {
    let mut out = String::new();
    match format {
        Format::Machine => {
            out.push_str(&rep_line(rep_name, rep));
            out.push('\n');
            for row in &report.rows {
                out.push_str(&GermRecord::new(&row.name, row.multiplicity, &row.profile).to_line());
                out.push('\n');
            }
            let g = &report.globals;
            for (k, v) in [
                ("chi_f", &g.chi_f),
                ("e_f", &g.e_f),
                ("K_f^2", &g.k_f_sq),
                ("Sign", &g.signature),
            ] {
                let _ = writeln!(out, "global\t{k}\t{}", mq(v));
            }
            for c in &report.checks {
                out.push_str(&check_line(c));
                out.push('\n');
            }
            let _ = writeln!(out, "status\t{}", if report.passed() { "pass" } else { "fail" });
        }
        Format::Table => {
            let _ = writeln!(out, "representative {rep_name}: {}", rep.to_class());
            let rows: Vec<Vec<String>> = report
                .rows
                .iter()
                .map(|r| {
                    let p = &r.profile;
                    vec![
                        r.name.clone(),
                        r.multiplicity.to_string(),
                        p.lambda_d.to_string(),
                        p.delta.to_string(),
                        p.sigma_d.to_string(),
                        opt_q(p.horikawa.as_ref()),
                        p.lsd.to_string(),
                    ]
                })
                .collect();
            out.push('\n');
            out.push_str(&grid(
                &["germ", "mult", "lambda_D", "delta", "sigma_D", "Ind", "Lsd"],
                &rows,
            ));
            let g = &report.globals;
            let _ = writeln!(
                out,
                "\nchi_f = {}, e_f = {}, K_f^2 = {}, Sign = {}\n",
                g.chi_f, g.e_f, g.k_f_sq, g.signature
            );
            for c in &report.checks {
                let _ = writeln!(out, "{c}");
            }
            let _ = writeln!(
                out,
                "\n{}",
                if report.passed() {
                    "all identities hold"
                } else {
                    "IDENTITY FAILURE"
                }
            );
        }
    }
    out
}

pub fn render_comparisons(comparisons: &[Comparison], format: Format) -> String {
    match format {
        Format::Machine => comparisons
            .iter()
            .map(|c| {
                format!(
                    "compare\t{}\t{}\t{}\t{}\n",
                    c.key,
                    mq(&c.expected),
                    mq(&c.computed),
                    if c.matches() { "match" } else { "mismatch" }
                )
            })
            .collect(),
        Format::Table => {
            let rows: Vec<Vec<String>> = comparisons
                .iter()
                .map(|c| {
                    vec![
                        c.key.clone(),
                        c.expected.to_string(),
                        c.computed.to_string(),
                        if c.matches() { "ok" } else { "MISMATCH" }.to_string(),
                    ]
                })
                .collect();
            grid(&["quantity", "expected", "computed", ""], &rows)
        }
    }
}
