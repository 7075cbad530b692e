//! Edge-list graph files, JSON report documents, and the command
//! implementations behind the `wordrep` binary.
//!
//! Graph file format (ASCII, LF line endings):
//!
//! ```text
//! # comments start with '#'
//! n m
//! u v        (m lines, 0-based endpoints)
//! ```

use std::time::Duration;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::characterizer::{classify, verify_reduction, verify_witness, Status, Verdict};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::modular::{lex_product, maximal_modular_partition, quotient, substitute};
use crate::representation::{
    lex_prn, lex_rep_number, prn, prn_composed, rep_number, rep_number_composed, Caps, Composed,
};
use crate::word::Word;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_UNDECIDED: i32 = 2;
pub const EXIT_INPUT: i32 = 64;

/// Parses a graph file. Errors name the offending line.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        last_line = lineno;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        let pair = match fields.as_slice() {
            [a, b] => match (a.parse::<usize>(), b.parse::<usize>()) {
                (Ok(a), Ok(b)) => (a, b),
                _ => return Err(line_error(lineno, "expected two nonnegative integers")),
            },
            _ => return Err(line_error(lineno, "expected exactly two fields")),
        };
        match header {
            None => header = Some(pair),
            Some((n, m)) => {
                if edges.len() == m {
                    return Err(line_error(lineno, &format!("more than the {m} declared edges")));
                }
                let (u, v) = pair;
                if u >= n || v >= n {
                    return Err(line_error(lineno, &format!("endpoint out of range 0..{n}")));
                }
                if u == v {
                    return Err(line_error(lineno, "loops are not allowed"));
                }
                edges.push(pair);
            }
        }
    }
    let Some((n, m)) = header else {
        return Err(line_error(last_line.max(1), "missing \"n m\" header"));
    };
    if edges.len() != m {
        return Err(line_error(last_line.max(1), &format!("declared {m} edges, found {}", edges.len())));
    }
    Graph::new(n, &edges)
}

fn line_error(line: usize, msg: &str) -> Error {
    Error::Input(format!("line {line}: {msg}"))
}

/// Renders a graph file with edges in lexicographic order.
pub fn format_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportNumbers {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prn: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub block_prn: Vec<Option<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quotient_r: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientDoc {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    /// Vertices of the input graph behind each quotient vertex.
    pub blocks: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub block_map: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub command: String,
    pub input_digest: String,
    pub n: usize,
    pub m: usize,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    /// Representing word in text form.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<String>,
    /// Concatenation of permutations representing the graph.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub permutational_certificate: Option<String>,
    pub numbers: ReportNumbers,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub blocks: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quotient: Option<QuotientDoc>,
    pub caps: Caps,
    /// Graph file produced by `product`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl ReportDocument {
    fn new(command: &str, digest: String, g: &Graph, status: &str, caps: Caps) -> Self {
        Self {
            command: command.to_string(),
            input_digest: digest,
            n: g.n(),
            m: g.edge_count(),
            status: status.to_string(),
            witness: None,
            certificate: None,
            permutational_certificate: None,
            numbers: ReportNumbers::default(),
            blocks: None,
            quotient: None,
            caps,
            graph: None,
            note: None,
            timing_ms: None,
        }
    }

    pub fn exit_code(&self) -> i32 {
        exit_code(&self.status)
    }

    pub fn with_timing(mut self, elapsed: Duration) -> Self {
        self.timing_ms = Some(elapsed.as_millis() as u64);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Input(format!("bad report: {e}")))
    }
}

/// Exit code for a report status.
pub fn exit_code(status: &str) -> i32 {
    match status {
        "WordRepresentable" | "Comparability" | "found" | "decomposed" | "product" => EXIT_OK,
        "NotWordRepresentable" | "not-comparability" => EXIT_NEGATIVE,
        _ => EXIT_UNDECIDED,
    }
}

fn sets(v: &[VertexSet]) -> Vec<Vec<usize>> {
    v.iter().map(VertexSet::to_vec).collect()
}

fn verdict_report(command: &str, digest: String, g: &Graph, v: &Verdict) -> ReportDocument {
    let status = format!("{:?}", v.status);
    let mut doc = ReportDocument::new(command, digest, g, &status, v.caps);
    doc.witness = v.witness.as_ref().map(VertexSet::to_vec);
    doc.certificate = v.certificate.as_ref().map(|c| c.word().to_string());
    doc.permutational_certificate = v.permutational.as_ref().map(|c| c.word().to_string());
    doc.numbers = ReportNumbers {
        r: v.numbers.r,
        prn: v.numbers.prn,
        block_prn: v.numbers.block_prn.clone(),
        quotient_r: v.numbers.quotient_r,
    };
    if !v.blocks.is_empty() {
        doc.blocks = Some(sets(&v.blocks));
    }
    doc.quotient = v.quotient.as_ref().map(|q| QuotientDoc {
        n: q.graph.n(),
        edges: q.graph.edges(),
        blocks: sets(&q.blocks),
        block_map: None,
        oracle: q.oracle,
    });
    doc
}

/// `check`: full classification.
pub fn cmd_check(text: &str, caps: Caps) -> Result<ReportDocument> {
    let g = parse_graph(text)?;
    let v = classify(&g, caps)?;
    Ok(verdict_report("check", digest(text.as_bytes()), &g, &v))
}

/// `repnum`: representation number by word search.
pub fn cmd_repnum(text: &str, cap: usize) -> Result<ReportDocument> {
    let g = parse_graph(text)?;
    if !g.is_connected() {
        return Err(Error::Input("graph is not connected".into()));
    }
    let caps = Caps { word: cap, ..Caps::default() };
    let found = rep_number(&g, cap)?;
    let status = if found.is_some() { "found" } else { "cap-exceeded" };
    let mut doc = ReportDocument::new("repnum", digest(text.as_bytes()), &g, status, caps);
    if let Some(rep) = found {
        doc.numbers.r = rep.k();
        doc.certificate = Some(rep.word().to_string());
    }
    Ok(doc)
}

/// `prn`: permutation-representation number by realizer search.
pub fn cmd_prn(text: &str, cap: usize) -> Result<ReportDocument> {
    let g = parse_graph(text)?;
    if !g.is_connected() {
        return Err(Error::Input("graph is not connected".into()));
    }
    let caps = Caps { word: cap, ..Caps::default() };
    let comparable = crate::orientation::is_comparability(&g);
    let found = if comparable { prn(&g, cap)? } else { None };
    let status = match (&found, comparable) {
        (Some(_), _) => "found",
        (None, true) => "cap-exceeded",
        (None, false) => "not-comparability",
    };
    let mut doc = ReportDocument::new("prn", digest(text.as_bytes()), &g, status, caps);
    if let Some(rep) = found {
        doc.numbers.prn = rep.k();
        doc.permutational_certificate = Some(rep.word().to_string());
    }
    Ok(doc)
}

/// `decompose`: maximal modular partition and quotient.
pub fn cmd_decompose(text: &str) -> Result<ReportDocument> {
    let g = parse_graph(text)?;
    let p = maximal_modular_partition(&g)?;
    let mut doc = ReportDocument::new("decompose", digest(text.as_bytes()), &g, "decomposed", Caps::default());
    doc.blocks = Some(sets(&p.blocks));
    doc.quotient = Some(QuotientDoc {
        n: p.quotient.n(),
        edges: p.quotient.edges(),
        blocks: sets(&p.blocks),
        block_map: Some(p.block_map.clone()),
        oracle: None,
    });
    Ok(doc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductOp {
    Lex,
    Substitute { at: usize },
}

/// `product`: lexicographic product or vertex substitution, optionally with
/// composed numbers and certificates.
pub fn cmd_product(text_g: &str, text_h: &str, op: ProductOp, numbers: bool, caps: Caps) -> Result<ReportDocument> {
    let g = parse_graph(text_g)?;
    let h = parse_graph(text_h)?;
    let product = match op {
        ProductOp::Lex => lex_product(&g, &h).0,
        ProductOp::Substitute { at } => substitute(&g, at, &h)?.graph,
    };
    let digest = format!("{}+{}", digest(text_g.as_bytes()), digest(text_h.as_bytes()));
    let command = match op {
        ProductOp::Lex => "product-lex".to_string(),
        ProductOp::Substitute { at } => format!("product-substitute-{at}"),
    };
    let mut doc = ReportDocument::new(&command, digest, &product, "product", caps);
    doc.graph = Some(format_graph(&product));
    if !numbers {
        return Ok(doc);
    }
    let composed_r = match op {
        ProductOp::Lex => lex_rep_number(&g, &h, caps),
        ProductOp::Substitute { at } => rep_number_composed(&g, at, &h, caps),
    };
    match composed_r {
        Ok(Composed { k, outer_k, inner_k, certificate }) => {
            doc.status = "WordRepresentable".into();
            doc.numbers.r = Some(k);
            doc.numbers.quotient_r = Some(outer_k);
            doc.numbers.block_prn = vec![Some(inner_k)];
            doc.certificate = Some(certificate.word().to_string());
        }
        Err(Error::Domain(msg)) => {
            // name a concrete non-comparability set
            let v = classify(&product, caps)?;
            doc.status = format!("{:?}", v.status);
            doc.witness = v.witness.as_ref().map(VertexSet::to_vec);
            doc.note = Some(msg);
            return Ok(doc);
        }
        Err(e) => return Err(e),
    }
    let composed_prn = match op {
        ProductOp::Lex => lex_prn(&g, &h, caps),
        ProductOp::Substitute { at } => prn_composed(&g, at, &h, caps),
    };
    if let Ok(c) = composed_prn {
        doc.status = "Comparability".into();
        doc.numbers.prn = Some(c.k);
        doc.permutational_certificate = Some(c.certificate.word().to_string());
    }
    Ok(doc)
}

/// Replays every certificate in a report against the graph it describes:
/// `graph_text` for most commands, the embedded graph for `product`.
pub fn verify_report(doc: &ReportDocument, graph_text: &str) -> Result<bool> {
    let g = match &doc.graph {
        Some(text) => parse_graph(text)?,
        None => parse_graph(graph_text)?,
    };
    if doc.n != g.n() || doc.m != g.edge_count() {
        return Ok(false);
    }
    if let Some(text) = &doc.certificate {
        let word: Word = text.parse()?;
        if !word.represents(&g)? {
            return Ok(false);
        }
        if doc.numbers.r.is_some() && word.uniformity().uniform_k != doc.numbers.r {
            return Ok(false);
        }
    }
    if let Some(text) = &doc.permutational_certificate {
        let word: Word = text.parse()?;
        let Some(perms) = word.split_permutations() else {
            return Ok(false);
        };
        if !word.represents(&g)? {
            return Ok(false);
        }
        if doc.numbers.prn.is_some() && Some(perms.len()) != doc.numbers.prn {
            return Ok(false);
        }
    }
    let status_ok = match doc.status.as_str() {
        "WordRepresentable" | "Comparability" => doc.certificate.is_some(),
        "NotWordRepresentable" => match &doc.witness {
            Some(w) => verify_witness(&g, &w.iter().copied().collect())?,
            None => false,
        },
        "ReducedToQuotient" => match &doc.quotient {
            Some(q) => {
                let blocks: Vec<VertexSet> = q.blocks.iter().map(|b| b.iter().copied().collect()).collect();
                let qg = Graph::new(q.n, &q.edges)?;
                verify_reduction(&g, &blocks, &qg)?
            }
            None => false,
        },
        "decomposed" => match &doc.quotient {
            Some(q) => {
                let blocks: Vec<VertexSet> = q.blocks.iter().map(|b| b.iter().copied().collect()).collect();
                let qg = Graph::new(q.n, &q.edges)?;
                let (got, map) = quotient(&g, &blocks)?;
                got == qg && q.block_map.as_ref().is_none_or(|m| *m == map)
            }
            None => false,
        },
        "found" => doc.certificate.is_some() || doc.permutational_certificate.is_some(),
        "not-comparability" => crate::orientation::find_transitive_orientation(&g).is_none(),
        _ => true,
    };
    Ok(status_ok)
}

/// Verdict status, when the report came from a classification.
pub fn report_status(doc: &ReportDocument) -> Option<Status> {
    match doc.status.as_str() {
        "NotWordRepresentable" => Some(Status::NotWordRepresentable),
        "WordRepresentable" => Some(Status::WordRepresentable),
        "Comparability" => Some(Status::Comparability),
        "ReducedToQuotient" => Some(Status::ReducedToQuotient),
        _ => None,
    }
}
