//! Table rendering in markdown, CSV, JSON and LaTeX.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;
use vogan_core::{OrbitReport, Rational, VoganDiagram};

#[derive(Debug, thiserror::Error)]
pub enum ReportError {
    #[error("unknown column {0:?}")]
    UnknownColumn(String),
    #[error("unknown format {0:?} (expected markdown, csv, json or latex)")]
    UnknownFormat(String),
    #[error("at least one column is required")]
    NoColumns,
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Markdown,
    Csv,
    Json,
    Latex,
}

impl FromStr for Format {
    type Err = ReportError;

    fn from_str(s: &str) -> Result<Self, ReportError> {
        match s.to_ascii_lowercase().as_str() {
            "markdown" | "md" => Ok(Format::Markdown),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            "latex" | "tex" => Ok(Format::Latex),
            _ => Err(ReportError::UnknownFormat(s.into())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Column {
    Diagram,
    Phi,
    PhiInDelta,
    Type,
    S,
    DimV,
    DimM,
    RealForm,
    Stabilizer,
    Lambda,
    Support,
    Cone,
    Integrable,
    NijenhuisSq,
    CenterRank,
}

impl Column {
    pub const ALL: [Column; 15] = [
        Column::Diagram,
        Column::Phi,
        Column::PhiInDelta,
        Column::Type,
        Column::S,
        Column::DimV,
        Column::DimM,
        Column::RealForm,
        Column::Stabilizer,
        Column::Lambda,
        Column::Support,
        Column::Cone,
        Column::Integrable,
        Column::NijenhuisSq,
        Column::CenterRank,
    ];

    /// The column layout of the reference tables.
    pub const DEFAULT: [Column; 9] = [
        Column::Diagram,
        Column::Phi,
        Column::PhiInDelta,
        Column::Type,
        Column::S,
        Column::DimV,
        Column::DimM,
        Column::RealForm,
        Column::Stabilizer,
    ];

    pub fn key(self) -> &'static str {
        match self {
            Column::Diagram => "diagram",
            Column::Phi => "phi",
            Column::PhiInDelta => "phi_in_delta",
            Column::Type => "type",
            Column::S => "s",
            Column::DimV => "dim_v",
            Column::DimM => "dim_m",
            Column::RealForm => "real_form",
            Column::Stabilizer => "stabilizer",
            Column::Lambda => "lambda",
            Column::Support => "support",
            Column::Cone => "cone",
            Column::Integrable => "integrable",
            Column::NijenhuisSq => "nijenhuis_sq",
            Column::CenterRank => "center_rank",
        }
    }

    fn title(self) -> &'static str {
        match self {
            Column::Diagram => "Diagram",
            Column::Phi => "φ",
            Column::PhiInDelta => "φ ∈ Δ",
            Column::Type => "Type",
            Column::S => "s",
            Column::DimV => "dim V",
            Column::DimM => "dim G/V",
            Column::RealForm => "𝔤",
            Column::Stabilizer => "𝔳",
            Column::Lambda => "λ",
            Column::Support => "support",
            Column::Cone => "cone",
            Column::Integrable => "integrable",
            Column::NijenhuisSq => "|N|²",
            Column::CenterRank => "m",
        }
    }

    fn latex_title(self) -> &'static str {
        match self {
            Column::Diagram => "Diagram",
            Column::Phi => "$\\varphi$",
            Column::PhiInDelta => "$\\varphi\\in\\Delta$",
            Column::Type => "Type",
            Column::S => "$s$",
            Column::DimV => "$\\dim V$",
            Column::DimM => "$\\dim G/V$",
            Column::RealForm => "$\\mathfrak{g}$",
            Column::Stabilizer => "$\\mathfrak{v}$",
            Column::Lambda => "$\\lambda$",
            Column::Support => "support",
            Column::Cone => "cone",
            Column::Integrable => "integrable",
            Column::NijenhuisSq => "$|N|^2$",
            Column::CenterRank => "$m$",
        }
    }
}

impl FromStr for Column {
    type Err = ReportError;

    fn from_str(s: &str) -> Result<Self, ReportError> {
        Column::ALL.into_iter().find(|c| c.key() == s.trim()).ok_or_else(|| ReportError::UnknownColumn(s.into()))
    }
}

/// All solutions found for one diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramResult {
    pub diagram: VoganDiagram,
    pub reports: Vec<OrbitReport>,
}

#[derive(Debug, Clone)]
pub struct TableConfig {
    pub format: Format,
    pub columns: Vec<Column>,
    /// Keep only these diagrams when set.
    pub diagram_filter: Option<Vec<VoganDiagram>>,
}

impl TableConfig {
    pub fn new(format: Format) -> Self {
        TableConfig { format, columns: Column::DEFAULT.to_vec(), diagram_filter: None }
    }

    /// Parses a comma-separated column list.
    pub fn with_columns(mut self, keys: &str) -> Result<Self, ReportError> {
        self.columns = keys.split(',').filter(|s| !s.trim().is_empty()).map(str::parse).collect::<Result<_, _>>()?;
        if self.columns.is_empty() {
            return Err(ReportError::NoColumns);
        }
        Ok(self)
    }
}

/// Integers bare, everything else as `p/q`.
pub fn rational(q: &Rational) -> String {
    q.to_string()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

enum Style {
    Plain,
    Latex,
}

fn phi_text(r: &OrbitReport, style: Style) -> String {
    let sym = match style {
        Style::Plain => "φ",
        Style::Latex => "\\varphi_",
    };
    let multi_cone = r.cone && r.support.len() > 1;
    let mut out = String::new();
    for (i, c) in r.phi.iter().enumerate() {
        if c == &Rational::from_integer(0.into()) {
            continue;
        }
        if !out.is_empty() {
            out.push('+');
        }
        if multi_cone {
            match style {
                Style::Plain => write!(out, "t{}", i + 1).unwrap(),
                Style::Latex => write!(out, "t_{}", i + 1).unwrap(),
            }
        } else if c != &Rational::from_integer(1.into()) {
            out.push_str(&rational(c));
        }
        write!(out, "{sym}{}", i + 1).unwrap();
    }
    if multi_cone {
        match style {
            Style::Plain => out.push_str(" for all t_i>0"),
            Style::Latex => out.push_str(",\\ \\forall t_i>0"),
        }
    }
    match style {
        Style::Plain => out,
        Style::Latex => format!("${out}$"),
    }
}

fn latex_algebra(name: &str) -> String {
    if name == "R" {
        return "\\mathbf{R}".into();
    }
    let (head, tail) = match name.find('(') {
        Some(k) => name.split_at(k),
        None => (name, ""),
    };
    let tail = tail.replace(",R)", ",\\mathbf{R})");
    match head.as_bytes() {
        [b'e' | b'f' | b'g', d] => {
            let sub = if tail.is_empty() { String::new() } else { tail.clone() };
            format!("\\mathfrak{{{}}}_{{{}{}}}", &head[..1], *d as char, sub)
        }
        _ => {
            let star = head.ends_with('*');
            let base = head.trim_end_matches('*');
            format!("\\mathfrak{{{base}}}{}{tail}", if star { "^*" } else { "" })
        }
    }
}

fn cell(r: &OrbitReport, c: Column, latex: bool) -> String {
    match c {
        Column::Diagram => {
            if latex {
                let d = r.diagram;
                let labels: Vec<String> = d.painted().labels().iter().map(ToString::to_string).collect();
                format!("${}_{{{}}}\\ \\{{{}\\}}$", d.dtype().letter(), d.dtype().rank(), labels.join(","))
            } else {
                r.diagram.to_string()
            }
        }
        Column::Phi => phi_text(r, if latex { Style::Latex } else { Style::Plain }),
        Column::PhiInDelta => yes_no(r.phi_is_root).into(),
        Column::Type => r.sclass.map(|c| c.label().to_string()).unwrap_or_else(|| "-".into()),
        Column::S => rational(&r.herm_scal),
        Column::DimV => r.dim_v.to_string(),
        Column::DimM => r.dim_m.to_string(),
        Column::RealForm => {
            if latex {
                format!("${}$", latex_algebra(&r.real_form))
            } else {
                r.real_form.clone()
            }
        }
        Column::Stabilizer => {
            if latex {
                let parts: Vec<String> = r
                    .stabilizer
                    .names()
                    .iter()
                    .map(|n| latex_algebra(n))
                    .chain(std::iter::repeat_n("\\mathbf{R}".to_string(), r.stabilizer.center_rank))
                    .collect();
                format!("${}$", parts.join("\\oplus "))
            } else {
                r.stabilizer.to_string()
            }
        }
        Column::Lambda => r.lambda.as_ref().map(rational).unwrap_or_else(|| "-".into()),
        Column::Support => r.support.to_string(),
        Column::Cone => yes_no(r.cone).into(),
        Column::Integrable => yes_no(r.integrable).into(),
        Column::NijenhuisSq => rational(&r.nijenhuis_sq),
        Column::CenterRank => r.stabilizer.center_rank.to_string(),
    }
}

#[derive(Serialize)]
struct JsonDiagram<'a> {
    #[serde(rename = "type")]
    dtype: String,
    rank: usize,
    painted: Vec<usize>,
    solutions: Vec<JsonSolution<'a>>,
}

#[derive(Serialize)]
struct JsonSolution<'a> {
    phi: Vec<serde_json::Value>,
    support: Vec<usize>,
    cone: bool,
    lambda: Option<String>,
    type_label: Option<&'static str>,
    s: String,
    dim_v: usize,
    dim_m: usize,
    real_form: &'a str,
    stabilizer: Vec<String>,
    center_rank: usize,
    integrable: bool,
    phi_is_root: bool,
}

/// Integers as JSON numbers; other rationals (only possible from `analyze`) as `"p/q"`.
fn json_number(q: &Rational) -> serde_json::Value {
    match vogan_core::rational::to_i64(q) {
        Some(n) => n.into(),
        None => rational(q).into(),
    }
}

fn json_value<'a>(results: &[&'a DiagramResult]) -> Vec<JsonDiagram<'a>> {
    results
        .iter()
        .map(|d| JsonDiagram {
            dtype: d.diagram.dtype().to_string(),
            rank: d.diagram.dtype().rank(),
            painted: d.diagram.painted().labels(),
            solutions: d
                .reports
                .iter()
                .map(|r| JsonSolution {
                    phi: r.phi.iter().map(json_number).collect(),
                    support: r.support.labels(),
                    cone: r.cone,
                    lambda: r.lambda.as_ref().map(rational),
                    type_label: r.sclass.map(|c| c.label()),
                    s: rational(&r.herm_scal),
                    dim_v: r.dim_v,
                    dim_m: r.dim_m,
                    real_form: &r.real_form,
                    stabilizer: r.stabilizer.names(),
                    center_rank: r.stabilizer.center_rank,
                    integrable: r.integrable,
                    phi_is_root: r.phi_is_root,
                })
                .collect(),
        })
        .collect()
}

/// Renders the results. JSON always carries the full schema and ignores `columns`.
pub fn render(results: &[DiagramResult], cfg: &TableConfig) -> Result<String, ReportError> {
    if cfg.columns.is_empty() {
        return Err(ReportError::NoColumns);
    }
    let kept: Vec<&DiagramResult> =
        results.iter().filter(|d| cfg.diagram_filter.as_ref().is_none_or(|f| f.contains(&d.diagram))).collect();
    let rows = || kept.iter().flat_map(|d| d.reports.iter());
    let cols = &cfg.columns;
    let mut out = String::new();
    match cfg.format {
        Format::Markdown => {
            let header: Vec<&str> = cols.iter().map(|c| c.title()).collect();
            writeln!(out, "| {} |", header.join(" | ")).unwrap();
            writeln!(out, "|{}", "---|".repeat(cols.len())).unwrap();
            for r in rows() {
                let cells: Vec<String> = cols.iter().map(|&c| cell(r, c, false).replace('|', "\\|")).collect();
                writeln!(out, "| {} |", cells.join(" | ")).unwrap();
            }
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
            w.write_record(cols.iter().map(|c| c.key()))?;
            for r in rows() {
                w.write_record(cols.iter().map(|&c| cell(r, c, false)))?;
            }
            let bytes = w.into_inner().map_err(|e| ReportError::Csv(csv::Error::from(e.into_error())))?;
            out = String::from_utf8(bytes).expect("csv output is UTF-8");
        }
        Format::Json => {
            out = serde_json::to_string_pretty(&json_value(&kept))?;
            out.push('\n');
        }
        Format::Latex => {
            writeln!(out, "\\begin{{tabular}}{{{}}}", "l".repeat(cols.len())).unwrap();
            writeln!(out, "\\hline").unwrap();
            let header: Vec<&str> = cols.iter().map(|c| c.latex_title()).collect();
            writeln!(out, "{} \\\\", header.join(" & ")).unwrap();
            writeln!(out, "\\hline").unwrap();
            for r in rows() {
                let cells: Vec<String> = cols.iter().map(|&c| cell(r, c, true)).collect();
                writeln!(out, "{} \\\\", cells.join(" & ")).unwrap();
            }
            writeln!(out, "\\hline").unwrap();
            writeln!(out, "\\end{{tabular}}").unwrap();
        }
    }
    Ok(out)
}
