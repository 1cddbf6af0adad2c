//! Tab-separated output. Every rational is printed as an exact `num/den`;
//! with `--decimal` a rounded column follows each exact one.

use toricap::rational::{format_decimal, format_exact};
use toricap::{Rational, TorusDivisor};

const DECIMAL_PLACES: u32 = 6;

pub struct Table {
    decimal: bool,
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(decimal: bool) -> Self {
        Table {
            decimal,
            header: Vec::new(),
            rows: Vec::new(),
        }
    }

    pub fn header(&mut self, names: &[&str]) -> &mut Self {
        self.header.extend(names.iter().map(|s| s.to_string()));
        self
    }

    pub fn rat_header(&mut self, name: &str) -> &mut Self {
        self.header.push(name.to_string());
        if self.decimal {
            self.header.push(format!("{name}_decimal"));
        }
        self
    }

    pub fn row(&mut self) -> &mut Self {
        self.rows.push(Vec::new());
        self
    }

    fn cell(&mut self, s: String) -> &mut Self {
        self.rows.last_mut().expect("row() first").push(s);
        self
    }

    pub fn text(&mut self, s: &str) -> &mut Self {
        self.cell(s.to_string())
    }

    pub fn int(&mut self, n: impl ToString) -> &mut Self {
        self.cell(n.to_string())
    }

    pub fn flag(&mut self, b: bool) -> &mut Self {
        self.cell(b.to_string())
    }

    pub fn rat(&mut self, r: &Rational) -> &mut Self {
        self.cell(format_exact(r));
        if self.decimal {
            self.cell(format_decimal(r, DECIMAL_PLACES));
        }
        self
    }

    /// Placeholder for a rational column with no value.
    pub fn blank_rat(&mut self) -> &mut Self {
        self.cell("-".to_string());
        if self.decimal {
            self.cell("-".to_string());
        }
        self
    }

    pub fn render(&self) -> String {
        let mut out = self.header.join("\t");
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join("\t"));
            out.push('\n');
        }
        out
    }
}

/// A divisor as comma-separated exact coefficients.
pub fn divisor(d: &TorusDivisor) -> String {
    let parts: Vec<String> = d.coefficients().iter().map(format_exact).collect();
    parts.join(",")
}
