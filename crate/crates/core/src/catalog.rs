//! Append-only catalog of classified gluings.
//!
//! ```text
//! # curvedist catalog v1
//! # template-sha256 <hex digest of the template text>
//! 12	[2, 2, 2, 2, 2, 2]	3	12	4+
//! ```
//!
//! Record fields are tab separated: objective, weights, offset, k, distance.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::distance::Verdict;
use crate::error::{Error, Result};
use crate::ilp::format_weights;

const MAGIC: &str = "# curvedist catalog v1";
const CHECKSUM_PREFIX: &str = "# template-sha256 ";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRecord {
    pub objective: u64,
    pub weights: Vec<u64>,
    pub offset: usize,
    pub k: usize,
    pub verdict: Verdict,
}

impl CatalogRecord {
    pub fn to_line(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}",
            self.objective,
            format_weights(&self.weights),
            self.offset,
            self.k,
            self.verdict
        )
    }

    pub fn parse_line(line: &str, number: usize) -> Result<CatalogRecord> {
        let syntax = |message: &str| Error::Syntax {
            line: number,
            message: message.to_string(),
        };
        let fields: Vec<&str> = line.split('\t').collect();
        let [objective, weights, offset, k, verdict] = fields[..] else {
            return Err(syntax("expected 5 tab-separated fields"));
        };
        let number_field = |s: &str| s.trim().parse::<u64>().map_err(|_| syntax("bad number"));
        let weights = weights
            .trim()
            .strip_prefix('[')
            .and_then(|w| w.strip_suffix(']'))
            .ok_or_else(|| syntax("weights must be bracketed"))?
            .split(',')
            .map(number_field)
            .collect::<Result<Vec<u64>>>()?;
        let verdict = match verdict.trim() {
            "2" => Verdict::Distance2,
            "3" => Verdict::Distance3,
            "4+" => Verdict::Distance4Plus,
            _ => return Err(syntax("distance must be 2, 3 or 4+")),
        };
        Ok(CatalogRecord {
            objective: number_field(objective)?,
            weights,
            offset: number_field(offset)? as usize,
            k: number_field(k)? as usize,
            verdict,
        })
    }
}

pub fn template_checksum(template_text: &str) -> String {
    hex::encode(Sha256::digest(template_text.as_bytes()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Catalog {
    pub template_sha256: String,
    pub records: Vec<CatalogRecord>,
}

impl Catalog {
    pub fn new(template_text: &str) -> Catalog {
        Catalog {
            template_sha256: template_checksum(template_text),
            records: Vec::new(),
        }
    }

    pub fn header(&self) -> String {
        format!("{MAGIC}\n{CHECKSUM_PREFIX}{}\n", self.template_sha256)
    }

    pub fn to_text(&self) -> String {
        let mut out = self.header();
        for r in &self.records {
            out.push_str(&r.to_line());
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Catalog> {
        let mut lines = text.lines().enumerate();
        let header_error = |line: usize, message: &str| Error::Syntax {
            line,
            message: message.to_string(),
        };
        match lines.next() {
            Some((_, l)) if l.trim_end() == MAGIC => {}
            _ => return Err(header_error(1, "not a curvedist catalog")),
        }
        let template_sha256 = match lines.next() {
            Some((_, l)) => l
                .trim_end()
                .strip_prefix(CHECKSUM_PREFIX)
                .filter(|h| h.len() == 64 && h.bytes().all(|b| b.is_ascii_hexdigit()))
                .ok_or_else(|| header_error(2, "missing template checksum"))?
                .to_string(),
            None => return Err(header_error(2, "missing template checksum")),
        };
        let records = lines
            .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'))
            .map(|(n, l)| CatalogRecord::parse_line(l, n + 1))
            .collect::<Result<Vec<_>>>()?;
        Ok(Catalog {
            template_sha256,
            records,
        })
    }

    /// Confirm the catalog was produced from `template_text`.
    pub fn verify(&self, template_text: &str) -> Result<()> {
        let actual = template_checksum(template_text);
        if actual != self.template_sha256 {
            return Err(Error::ChecksumMismatch {
                expected: self.template_sha256.clone(),
                actual,
            });
        }
        Ok(())
    }
}

/// Filters for [`query`]; `None` matches everything.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CatalogQuery {
    pub objective: Option<u64>,
    pub verdict: Option<Verdict>,
    pub weights: Option<Vec<u64>>,
}

pub fn query<'a>(records: &'a [CatalogRecord], q: &CatalogQuery) -> Vec<&'a CatalogRecord> {
    records
        .iter()
        .filter(|r| q.objective.is_none_or(|p| r.objective == p))
        .filter(|r| q.verdict.is_none_or(|v| r.verdict == v))
        .filter(|r| q.weights.as_ref().is_none_or(|w| &r.weights == w))
        .collect()
}

/// Weight vectors with at least one distance 4 gluing, with the number of
/// such gluings.
pub fn distance_four_vectors(records: &[CatalogRecord]) -> BTreeMap<Vec<u64>, usize> {
    let mut out = BTreeMap::new();
    for r in records.iter().filter(|r| r.verdict == Verdict::Distance4Plus) {
        *out.entry(r.weights.clone()).or_insert(0) += 1;
    }
    out
}
