//! Output models for the command line, and their table / ASCII renderings.
//!
//! Every command first builds one of the serializable models below; the
//! table and ASCII renderings are computed from the model alone, and JSON is
//! emitted with sorted keys.

use std::fmt::Write as _;

use serde::Serialize;

use crate::atlas::{Classification, MountainRange, Shape, Width};
use crate::error::{Error, Hypothesis};
use crate::presentation::{Generator, Identification, NonIdentification, TransverseClassification};
use crate::slope::Slope;

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WidthModel {
    Exact(String),
    Interval([i64; 2]),
}

#[derive(Debug, Clone, Serialize)]
pub struct SimpleShape {
    pub peaks: Vec<i64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BranchedShape {
    pub generators: Vec<Generator>,
    pub identifications: Vec<RelationModel<Identification>>,
    pub non_identifications: Vec<RelationModel<NonIdentification>>,
}

/// A relation together with its human-readable form.
#[derive(Debug, Clone, Serialize)]
pub struct RelationModel<T> {
    #[serde(flatten)]
    pub relation: T,
    pub text: String,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ShapeModel {
    Simple(SimpleShape),
    Branched(BranchedShape),
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationModel {
    pub status: &'static str,
    pub expr: String,
    pub tb_bar: i64,
    pub width: WidthModel,
    pub utp: String,
    pub shape: ShapeModel,
    pub parity: u8,
    pub peaks_source: &'static str,
}

impl ClassificationModel {
    pub fn new(expr: String, c: &Classification) -> Self {
        let width = match &c.width {
            Width::Exact(w) => WidthModel::Exact(w.to_string()),
            Width::Interval { lo, hi } => WidthModel::Interval([*lo, *hi]),
        };
        let shape = match &c.shape {
            Shape::Simple { peaks } => ShapeModel::Simple(SimpleShape {
                peaks: peaks.clone(),
            }),
            Shape::Branched(p) => ShapeModel::Branched(BranchedShape {
                generators: p.generators.clone(),
                identifications: p
                    .identifications
                    .iter()
                    .map(|r| RelationModel {
                        relation: r.clone(),
                        text: r.to_string(),
                    })
                    .collect(),
                non_identifications: p
                    .non_identifications
                    .iter()
                    .map(|r| RelationModel {
                        relation: r.clone(),
                        text: r.to_string(),
                    })
                    .collect(),
            }),
        };
        ClassificationModel {
            status: "ok",
            expr,
            tb_bar: c.tb_bar,
            width,
            utp: c.utp.to_string(),
            shape,
            parity: c.parity,
            peaks_source: c.peaks_source.code(),
        }
    }

    pub fn table(&self) -> String {
        let mut out = String::new();
        let width = match &self.width {
            WidthModel::Exact(w) => w.clone(),
            WidthModel::Interval([lo, hi]) => format!("[{lo}, {hi}]"),
        };
        row(&mut out, "expr", &self.expr);
        row(&mut out, "tb_bar", &self.tb_bar.to_string());
        row(&mut out, "width", &width);
        row(&mut out, "utp", &self.utp);
        row(&mut out, "parity", &self.parity.to_string());
        row(&mut out, "peaks_source", self.peaks_source);
        match &self.shape {
            ShapeModel::Simple(s) => {
                row(&mut out, "shape", "simple");
                row(&mut out, "peaks", &join(&s.peaks));
            }
            ShapeModel::Branched(b) => {
                row(&mut out, "shape", "branched");
                for g in &b.generators {
                    row(
                        &mut out,
                        "generator",
                        &format!("{} tb={} r={}", g.name, g.tb, g.r),
                    );
                }
                for r in &b.identifications {
                    row(&mut out, "identify", &r.text);
                }
                for r in &b.non_identifications {
                    row(&mut out, "distinct", &r.text);
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct NotCoveredModel {
    pub status: &'static str,
    pub expr: String,
    pub hypothesis: Hypothesis,
    pub detail: String,
}

impl NotCoveredModel {
    pub fn from_error(expr: String, e: &Error) -> Option<Self> {
        match e {
            Error::NotCovered { hypothesis, detail } => Some(NotCoveredModel {
                status: "not_covered",
                expr,
                hypothesis: *hypothesis,
                detail: detail.clone(),
            }),
            _ => None,
        }
    }

    pub fn table(&self) -> String {
        let mut out = String::new();
        row(&mut out, "expr", &self.expr);
        row(&mut out, "status", self.status);
        row(&mut out, "hypothesis", self.hypothesis.code());
        row(&mut out, "detail", &self.detail);
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub r: i64,
    pub tb: i64,
    pub mult: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct RangeModel {
    pub expr: String,
    pub tb_bar: i64,
    pub floor: i64,
    pub cells: Vec<Cell>,
}

impl RangeModel {
    pub fn new(expr: String, m: &MountainRange) -> Self {
        let cells = m
            .cells()
            .into_iter()
            .map(|(r, tb, mult)| Cell { r, tb, mult })
            .collect();
        RangeModel {
            expr,
            tb_bar: m.tb_bar(),
            floor: m.floor(),
            cells,
        }
    }

    pub fn table(&self) -> String {
        let mut out = String::new();
        row(&mut out, "expr", &self.expr);
        row(&mut out, "tb_bar", &self.tb_bar.to_string());
        row(&mut out, "floor", &self.floor.to_string());
        let _ = writeln!(out, "{:>6} {:>6} {:>4}", "tb", "r", "mult");
        for c in &self.cells {
            let _ = writeln!(out, "{:>6} {:>6} {:>4}", c.tb, c.r, c.mult);
        }
        out
    }

    /// tb runs downward, r across; each cell shows its multiplicity.
    pub fn ascii(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}  (r across, tb down)", self.expr);
        let (Some(lo), Some(hi)) = (
            self.cells.iter().map(|c| c.r).min(),
            self.cells.iter().map(|c| c.r).max(),
        ) else {
            return out;
        };
        let label = |v: i64| v.to_string().len();
        let w = (lo..=hi).map(label).max().unwrap_or(1).max(1);
        let tb_w = [self.tb_bar, self.floor]
            .iter()
            .map(|&v| label(v))
            .max()
            .unwrap_or(1)
            .max(2);
        let _ = write!(out, "{:>tb_w$} |", "tb");
        for r in lo..=hi {
            let _ = write!(out, " {r:>w$}");
        }
        out.push('\n');
        let _ = writeln!(
            out,
            "{}-+{}",
            "-".repeat(tb_w),
            "-".repeat((w + 1) * (hi - lo + 1) as usize)
        );
        let mut cells = self.cells.iter().peekable();
        let mut tb = self.tb_bar;
        while tb >= self.floor {
            let _ = write!(out, "{tb:>tb_w$} |");
            for r in lo..=hi {
                let mult = match cells.peek() {
                    Some(c) if c.tb == tb && c.r == r => cells.next().map_or(0, |c| c.mult),
                    _ => 0,
                };
                let glyph = match mult {
                    0 => ".".to_string(),
                    1..=9 => mult.to_string(),
                    _ => "+".to_string(),
                };
                let _ = write!(out, " {glyph:>w$}");
            }
            out.push('\n');
            tb -= 1;
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TransverseClass {
    pub sl: i64,
    pub count: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct TransverseModel {
    pub expr: String,
    pub floor: i64,
    /// Sorted by descending self-linking number.
    pub classes: Vec<TransverseClass>,
}

impl TransverseModel {
    pub fn new(expr: String, t: &TransverseClassification) -> Self {
        let classes = t
            .counts
            .iter()
            .rev()
            .map(|(&sl, &count)| TransverseClass { sl, count })
            .collect();
        TransverseModel {
            expr,
            floor: t.floor,
            classes,
        }
    }

    pub fn table(&self) -> String {
        let mut out = String::new();
        row(&mut out, "expr", &self.expr);
        row(&mut out, "floor", &self.floor.to_string());
        let _ = writeln!(out, "{:>6} {:>5}", "sl", "count");
        for c in &self.classes {
            let _ = writeln!(out, "{:>6} {:>5}", c.sl, c.count);
        }
        out
    }

    pub fn ascii(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{}  transverse classes by self-linking number",
            self.expr
        );
        for c in &self.classes {
            let _ = writeln!(out, "{:>6} | {}", c.sl, "#".repeat(c.count as usize));
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FareyModel {
    pub from: Slope,
    pub to: Slope,
    pub det: String,
    pub neighbors: bool,
    pub length: usize,
    pub path: Vec<Slope>,
}

impl FareyModel {
    pub fn table(&self) -> String {
        let mut out = String::new();
        row(&mut out, "from", &self.from.to_string());
        row(&mut out, "to", &self.to.to_string());
        row(&mut out, "det", &self.det);
        row(&mut out, "neighbors", &self.neighbors.to_string());
        row(&mut out, "length", &self.length.to_string());
        row(
            &mut out,
            "path",
            &self
                .path
                .iter()
                .map(Slope::to_string)
                .collect::<Vec<_>>()
                .join(" -> "),
        );
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct NonThickTorus {
    pub k: i64,
    pub slope: Slope,
    pub m1: i64,
    pub m2: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct NonThickModel {
    pub max_k: i64,
    pub tori: Vec<NonThickTorus>,
}

impl NonThickModel {
    pub fn table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{:>4} {:>12} {:>6} {:>6}", "k", "slope", "m1", "m2");
        for t in &self.tori {
            let _ = writeln!(
                out,
                "{:>4} {:>12} {:>6} {:>6}",
                t.k,
                t.slope.to_string(),
                t.m1,
                t.m2
            );
        }
        out
    }

    pub fn ascii(&self) -> String {
        let slopes: Vec<String> = self.tori.iter().map(|t| t.slope.to_string()).collect();
        format!("{} < ... < -1/6\n", slopes.join(" < "))
    }
}

/// Pretty JSON with object keys in sorted order.
pub fn to_json<T: Serialize>(model: &T) -> String {
    let value = serde_json::to_value(model).expect("models serialize");
    let mut s = serde_json::to_string_pretty(&value).expect("values serialize");
    s.push('\n');
    s
}

fn row(out: &mut String, key: &str, value: &str) {
    let _ = writeln!(out, "{key:<13} {value}");
}

fn join(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::{classify, mountain_range};
    use crate::parse::parse;

    #[test]
    fn json_keys_are_sorted() {
        let c = classify(&parse("T(-9,4)").unwrap()).unwrap();
        let json = to_json(&ClassificationModel::new("T(-9,4)".into(), &c));
        let keys: Vec<&str> = json
            .lines()
            .filter(|l| l.starts_with("  \""))
            .map(|l| l.trim().split('"').nth(1).unwrap())
            .collect();
        let mut sorted = keys.clone();
        sorted.sort_unstable();
        assert_eq!(keys, sorted);
        assert!(json.contains("\"exact\": \"-36\""));
    }

    #[test]
    fn ascii_plot_of_unknot() {
        let m = mountain_range(&classify(&parse("U").unwrap()).unwrap(), -3).unwrap();
        let plot = RangeModel::new("U".into(), &m).ascii();
        let expected = "\
U  (r across, tb down)
tb | -2 -1  0  1  2
---+---------------
-1 |  .  .  1  .  .
-2 |  .  1  .  1  .
-3 |  1  .  1  .  1
";
        assert_eq!(plot, expected);
    }
}
