//! Reproductions of the three result tables. Values come from the formula
//! engine except the rows carried as published literals.

use std::fmt::Write as _;

use clap::ValueEnum;

use crate::exactgeom::Rational;
use crate::formulas::{
    asymptotic_limit, binom, closed_form, evaluate, internal_limit, jen, BaseCrossings, StrategyId,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableName {
    Table1,
    Table2,
    Table3,
}

const REFERENCE: &str = include_str!("../../data/reference.tsv");

/// `(row, value, tag, note)` literals for one table.
fn references(table: &str) -> Vec<[&'static str; 4]> {
    REFERENCE
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .filter_map(|l| {
            let f: Vec<&str> = l.split('\t').collect();
            (f.len() == 5 && f[0] == table).then(|| [f[1], f[2], f[3], f[4]])
        })
        .collect()
}

fn limit(s: StrategyId) -> Rational {
    asymptotic_limit(s).expect("strategy has a closed form")
}

/// `a_0 = alpha n + beta`, written with fractions.
fn minimizer_text(s: StrategyId) -> String {
    let (alpha, beta) = closed_form(s).and_then(|f| f.linear_minimizer_in_a()).expect("quadratic in a");
    let sign = if beta.is_negative() { '-' } else { '+' };
    format!("a0 = {alpha} n {sign} {}", beta.abs())
}

struct Table {
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
    notes: Vec<String>,
}

impl Table {
    fn render(&self, porcelain: bool) -> String {
        let mut out = String::new();
        if porcelain {
            writeln!(out, "{}", self.header.join("\t")).unwrap();
            for row in &self.rows {
                writeln!(out, "{}", row.join("\t")).unwrap();
            }
            return out;
        }
        let widths: Vec<usize> = (0..self.header.len())
            .map(|c| self.rows.iter().map(|r| r[c].chars().count()).chain([self.header[c].len()]).max().unwrap())
            .collect();
        let line = |cells: Vec<&str>| {
            let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
            padded.join("  ").trim_end().to_string()
        };
        writeln!(out, "{}", line(self.header.clone())).unwrap();
        writeln!(out, "{}", widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>().join("  ")).unwrap();
        for row in &self.rows {
            writeln!(out, "{}", line(row.iter().map(String::as_str).collect())).unwrap();
        }
        for note in &self.notes {
            writeln!(out, "note: {note}").unwrap();
        }
        out
    }
}

fn table1() -> Table {
    let mut rows = Vec::new();
    for (s, a) in [(StrategyId::C3, 3u64), (StrategyId::C4, 4), (StrategyId::C5, 5), (StrategyId::C7, 7), (StrategyId::C9, 9)] {
        let q = limit(s);
        let base = BaseCrossings::get(a).expect("known base");
        rows.push(vec![
            s.to_string(),
            a.to_string(),
            q.to_decimal(4),
            q.to_string(),
            format!("n = {a}^j, C{a}({a}) = {base}"),
        ]);
    }
    for [row, value, tag, note] in references("table1") {
        rows.push(vec![row.into(), "-".into(), value.into(), "-".into(), format!("{note} {tag}")]);
    }
    Table {
        header: vec!["strategy", "a", "limit", "exact", "comment"],
        rows,
        notes: vec![
            "the C5 limit is 61/155; a printed 227/155 exceeds 1 and cannot be a crossing ratio".into(),
        ],
    }
}

fn table2() -> Table {
    let rows = [StrategyId::C3, StrategyId::Cm, StrategyId::Cs1, StrategyId::Cs2, StrategyId::Cs3]
        .into_iter()
        .map(|s| {
            let total = limit(s);
            let internal = internal_limit(s).expect("internal share");
            let top = &total - &internal;
            let a0 = if s.takes_a() { minimizer_text(s) } else { String::new() };
            vec![s.to_string(), internal.to_decimal(4), top.to_decimal(4), total.to_decimal(4), total.to_string(), a0]
        })
        .collect();
    Table {
        header: vec!["strategy", "internal", "top-level", "total", "exact", "minimizing a0"],
        rows,
        notes: Vec::new(),
    }
}

fn table3() -> Table {
    let at = |s: StrategyId, a: Option<u64>| evaluate(s, 81, a).expect("closed form at n = 81");
    let mut entries = vec![
        ("Cs3(81,26)".to_string(), at(StrategyId::Cs3, Some(26)).to_string(), String::new()),
        ("Cs2(81,26)".to_string(), at(StrategyId::Cs2, Some(26)).to_string(), String::new()),
        ("Cs1(81,26)".to_string(), at(StrategyId::Cs1, Some(26)).to_string(), String::new()),
        ("C3(81)".to_string(), at(StrategyId::C3, None).to_string(), String::new()),
        ("Jensen".to_string(), jen(81).to_string(), String::new()),
    ];
    for [row, value, tag, _] in references("table3") {
        entries.push((row.to_string(), value.to_string(), tag.to_string()));
    }
    entries.push(("C(81,4)".to_string(), binom(81, 4).to_string(), String::new()));
    let rows = entries.into_iter().map(|(name, value, tag)| vec![name, group(&value), tag]).collect();
    Table { header: vec!["strategy", "count", "source"], rows, notes: Vec::new() }
}

fn group(digits: &str) -> String {
    crate::counter::group_thousands(digits)
}

/// Deterministic text for one table. Porcelain output is tab-separated with
/// bare integers.
pub fn render_table(name: TableName, porcelain: bool) -> String {
    let mut t = match name {
        TableName::Table1 => table1(),
        TableName::Table2 => table2(),
        TableName::Table3 => table3(),
    };
    if porcelain {
        for row in &mut t.rows {
            for cell in row.iter_mut() {
                if cell.chars().all(|c| c.is_ascii_digit() || c == ',') && cell.contains(',') {
                    *cell = cell.replace(',', "");
                }
            }
        }
    }
    t.render(porcelain)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_literals_load() {
        assert_eq!(references("table1").len(), 4);
        assert_eq!(references("table3")[0][1], "659178");
    }

    #[test]
    fn table3_rows() {
        let text = render_table(TableName::Table3, false);
        assert!(text.contains("623,916"));
        assert!(text.contains("1,663,740"));
        let bare = render_table(TableName::Table3, true);
        assert!(bare.contains("Cs3(81,26)\t623916\t"));
    }

    #[test]
    fn table2_minimizer() {
        let text = render_table(TableName::Table2, false);
        assert!(text.contains("a0 = 23/72 n - 1/24"));
        assert!(text.contains("0.3838"));
    }
}
