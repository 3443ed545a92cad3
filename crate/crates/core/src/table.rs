//! Value tables over `(n, a)` grids and their CSV, JSON and text renderings.

use std::fmt::{self, Write as _};
use std::ops::RangeInclusive;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lifting;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Function {
    Alpha,
    Beta,
    Order,
    ProjOrder,
}

impl Function {
    pub fn name(&self) -> &'static str {
        match self {
            Function::Alpha => "alpha",
            Function::Beta => "beta",
            Function::Order => "order",
            Function::ProjOrder => "proj-order",
        }
    }

    /// Evaluates through the canonical-base fast path. `order` and
    /// `proj-order` fail with `NotCoprime` off the unit group.
    pub fn eval(&self, a: i64, n: u64) -> Result<u64> {
        match self {
            Function::Alpha => lifting::alpha_fast(a, n),
            Function::Beta => lifting::beta_fast(a, n),
            Function::Order => lifting::order_fast(a, n),
            Function::ProjOrder => lifting::proj_order_fast(a, n),
        }
    }

    /// Like [`Function::eval`] but total: non-coprime cells are 0.
    pub fn cell(&self, a: i64, n: u64) -> Result<u64> {
        match self.eval(a, n) {
            Err(Error::NotCoprime { .. }) => Ok(0),
            other => other,
        }
    }
}

impl fmt::Display for Function {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Function {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "alpha" => Ok(Function::Alpha),
            "beta" => Ok(Function::Beta),
            "order" => Ok(Function::Order),
            "proj-order" | "proj_order" => Ok(Function::ProjOrder),
            other => Err(format!("unknown function `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Format {
    Csv,
    Json,
    #[default]
    Text,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            "text" | "aligned-text" => Ok(Format::Text),
            other => Err(format!("unknown format `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableSpec {
    pub function: Function,
    pub n_range: RangeInclusive<u64>,
    pub a_range: RangeInclusive<i64>,
    pub format: Format,
}

impl TableSpec {
    pub fn new(
        function: Function,
        n_range: RangeInclusive<u64>,
        a_range: RangeInclusive<i64>,
        format: Format,
    ) -> std::result::Result<Self, String> {
        if n_range.is_empty() {
            return Err(format!("empty n range {n_range:?}"));
        }
        if *n_range.start() == 0 {
            return Err("n range must start at 1 or above".into());
        }
        if a_range.is_empty() {
            return Err(format!("empty a range {a_range:?}"));
        }
        Ok(Self {
            function,
            n_range,
            a_range,
            format,
        })
    }
}

/// A computed grid: one row per `n`, one column per `a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub function: Function,
    pub n_range: (u64, u64),
    pub a_range: (i64, i64),
    pub rows: Vec<Vec<u64>>,
}

impl Table {
    pub fn compute(spec: &TableSpec) -> Result<Self> {
        let a_values: Vec<i64> = spec.a_range.clone().collect();
        let rows = spec
            .n_range
            .clone()
            .into_par_iter()
            .map(|n| a_values.iter().map(|&a| spec.function.cell(a, n)).collect())
            .collect::<Result<Vec<Vec<u64>>>>()?;
        Ok(Self {
            function: spec.function,
            n_range: (*spec.n_range.start(), *spec.n_range.end()),
            a_range: (*spec.a_range.start(), *spec.a_range.end()),
            rows,
        })
    }

    pub fn get(&self, n: u64, a: i64) -> Option<u64> {
        let row = n.checked_sub(self.n_range.0)? as usize;
        let col = usize::try_from(a.checked_sub(self.a_range.0)?).ok()?;
        self.rows.get(row)?.get(col).copied()
    }

    fn a_values(&self) -> RangeInclusive<i64> {
        self.a_range.0..=self.a_range.1
    }

    fn n_values(&self) -> RangeInclusive<u64> {
        self.n_range.0..=self.n_range.1
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
            Format::Text => self.to_text(),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n\\a");
        for a in self.a_values() {
            write!(out, ",{a}").unwrap();
        }
        out.push('\n');
        for (n, row) in self.n_values().zip(&self.rows) {
            write!(out, "{n}").unwrap();
            for v in row {
                write!(out, ",{v}").unwrap();
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("table serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let header: Vec<String> = std::iter::once("n\\a".to_string())
            .chain(self.a_values().map(|a| a.to_string()))
            .collect();
        let body: Vec<Vec<String>> = self
            .n_values()
            .zip(&self.rows)
            .map(|(n, row)| {
                std::iter::once(n.to_string())
                    .chain(row.iter().map(u64::to_string))
                    .collect()
            })
            .collect();
        let mut widths: Vec<usize> = header.iter().map(String::len).collect();
        for line in &body {
            for (w, cell) in widths.iter_mut().zip(line) {
                *w = (*w).max(cell.len());
            }
        }
        let mut out = String::new();
        for line in std::iter::once(&header).chain(&body) {
            let cells: Vec<String> = line
                .iter()
                .zip(&widths)
                .map(|(cell, &w)| format!("{cell:>w$}"))
                .collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses the output of [`Table::to_csv`].
    pub fn from_csv(function: Function, text: &str) -> std::result::Result<Self, String> {
        let mut lines = text.lines().filter(|l| !l.is_empty());
        let header = lines.next().ok_or("missing header")?;
        let mut cells = header.split(',');
        if cells.next() != Some("n\\a") {
            return Err("header must start with `n\\a`".into());
        }
        let a_values = cells
            .map(|c| {
                c.parse::<i64>()
                    .map_err(|e| format!("bad column `{c}`: {e}"))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        let mut n_values = Vec::new();
        let mut rows = Vec::new();
        for line in lines {
            let mut cells = line.split(',');
            let n = cells
                .next()
                .unwrap_or_default()
                .parse::<u64>()
                .map_err(|e| format!("bad row label in `{line}`: {e}"))?;
            let row = cells
                .map(|c| c.parse::<u64>().map_err(|e| format!("bad cell `{c}`: {e}")))
                .collect::<std::result::Result<Vec<_>, _>>()?;
            if row.len() != a_values.len() {
                return Err(format!(
                    "row {n} has {} cells, expected {}",
                    row.len(),
                    a_values.len()
                ));
            }
            n_values.push(n);
            rows.push(row);
        }
        let contiguous = |v: &[i64]| v.windows(2).all(|w| w[1] == w[0] + 1);
        let ns: Vec<i64> = n_values.iter().map(|&n| n as i64).collect();
        if a_values.is_empty() || ns.is_empty() || !contiguous(&a_values) || !contiguous(&ns) {
            return Err("rows and columns must be non-empty consecutive ranges".into());
        }
        Ok(Self {
            function,
            n_range: (n_values[0], *n_values.last().unwrap()),
            a_range: (a_values[0], *a_values.last().unwrap()),
            rows,
        })
    }
}
