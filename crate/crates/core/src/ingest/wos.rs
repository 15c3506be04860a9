//! Reader for Web of Science plain-text ("field tagged") exports.
//!
//! ```text
//! FN Clarivate Analytics Web of Science
//! VR 1.0
//! PT J
//! AU Kim, J
//!    Lee, H
//! C1 [Kim, J; Lee, H] Seoul Natl Univ, Seoul, South Korea.
//! PY 2014
//! UT WOS:000330000000001
//! ER
//!
//! EF
//! ```

use std::collections::{HashMap, HashSet};

use super::address::parse_address;
use super::record::{DocumentRecord, ParseWarning, ParsedCorpus};
use crate::error::ParseError;

#[derive(Default)]
struct Block {
    start: usize,
    fields: HashMap<String, Vec<String>>,
    current: Option<String>,
}

impl Block {
    fn values(&self, tag: &str) -> &[String] {
        self.fields.get(tag).map(Vec::as_slice).unwrap_or(&[])
    }
}

enum State {
    Header,
    Record(Block),
    Done,
}

fn tag_of(line: &str) -> Option<&str> {
    let bytes = line.as_bytes();
    if bytes.len() < 2 {
        return None;
    }
    let ok = bytes[0].is_ascii_uppercase()
        && (bytes[1].is_ascii_uppercase() || bytes[1].is_ascii_digit())
        && (bytes.len() == 2 || bytes[2] == b' ');
    ok.then(|| &line[..2])
}

fn framing(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Framing {
        line,
        message: message.into(),
    }
}

/// Parses a complete export. Framing problems abort with the offending line
/// number; problems inside a record become warnings on that record.
pub fn parse_wos_export(text: &str) -> Result<ParsedCorpus, ParseError> {
    let mut corpus = ParsedCorpus::default();
    let mut seen = HashSet::new();
    let mut state = State::Header;
    let mut last_line = 0;

    for (idx, raw_line) in text.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let line = if idx == 0 {
            raw_line.trim_start_matches('\u{feff}')
        } else {
            raw_line
        };
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() {
            continue;
        }

        match &mut state {
            State::Done => return Err(framing(lineno, "content after EF terminator")),
            State::Header => {
                if line.starts_with("   ") {
                    return Err(framing(lineno, "continuation line outside a record"));
                }
                let tag = tag_of(line).ok_or_else(|| framing(lineno, "unrecognized field tag"))?;
                match tag {
                    "FN" | "VR" => {}
                    "EF" => state = State::Done,
                    "ER" => return Err(framing(lineno, "ER without an open record")),
                    _ => {
                        let mut block = Block {
                            start: lineno,
                            ..Block::default()
                        };
                        push_field(&mut block, tag, line);
                        state = State::Record(block);
                    }
                }
            }
            State::Record(block) => {
                if line.starts_with("   ") {
                    let Some(tag) = block.current.clone() else {
                        return Err(framing(lineno, "continuation line without a field"));
                    };
                    block
                        .fields
                        .entry(tag)
                        .or_default()
                        .push(line.trim().to_string());
                    continue;
                }
                let tag = tag_of(line).ok_or_else(|| framing(lineno, "unrecognized field tag"))?;
                match tag {
                    "ER" => {
                        let block = std::mem::take(block);
                        let record = assemble(block, corpus.records.len() + 1, &mut corpus.warnings);
                        if !seen.insert(record.id.clone()) {
                            return Err(ParseError::DuplicateId {
                                line: lineno,
                                id: record.id,
                            });
                        }
                        corpus.records.push(record);
                        state = State::Header;
                    }
                    "EF" => return Err(framing(lineno, "EF reached inside an unterminated record (missing ER)")),
                    _ => push_field(block, tag, line),
                }
            }
        }
    }

    match state {
        State::Done => Ok(corpus),
        State::Record(block) => Err(framing(
            block.start,
            "record not terminated by ER before end of input",
        )),
        State::Header => Err(framing(last_line.max(1), "missing EF terminator")),
    }
}

fn push_field(block: &mut Block, tag: &str, line: &str) {
    let value = line.get(3..).unwrap_or("").trim().to_string();
    block.current = Some(tag.to_string());
    block.fields.entry(tag.to_string()).or_default().push(value);
}

fn assemble(block: Block, ordinal: usize, warnings: &mut Vec<ParseWarning>) -> DocumentRecord {
    let id = block
        .values("UT")
        .first()
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty());
    let missing_id = id.is_none();
    let id = id.unwrap_or_else(|| format!("record-{ordinal}"));
    let mut warn = |message: String| {
        warnings.push(ParseWarning {
            record: id.clone(),
            line: block.start,
            message,
        })
    };
    if missing_id {
        warn("no UT accession; synthetic id assigned".into());
    }

    let year = match block.values("PY").first() {
        Some(py) => match py.trim().parse::<i32>() {
            Ok(y) => Some(y),
            Err(_) => {
                warn(format!("unparsable PY `{py}`"));
                None
            }
        },
        None => {
            warn("no PY field".into());
            None
        }
    };

    let full = block.values("AF");
    let short = block.values("AU");
    let (authors, alternates): (Vec<String>, &[String]) = if full.is_empty() {
        (short.to_vec(), &[])
    } else if full.len() == short.len() {
        (full.to_vec(), short)
    } else {
        (full.to_vec(), &[])
    };

    let c1 = block.values("C1");
    if c1.is_empty() {
        warn("no C1 addresses".into());
    }
    let mut addresses = Vec::with_capacity(c1.len());
    for raw in c1 {
        let parsed = parse_address(raw, &authors, alternates);
        if !parsed.address.usable {
            warn(format!("unusable address `{raw}`"));
        }
        if !parsed.unmatched.is_empty() {
            warn(format!(
                "bracketed names not in author list: {}",
                parsed.unmatched.join("; ")
            ));
        }
        addresses.push(parsed.address);
    }

    DocumentRecord {
        id,
        year,
        authors,
        addresses,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    const ONE: &str = "FN Clarivate Analytics Web of Science\n\
VR 1.0\n\
PT J\n\
AU Kim, J.\n   Lee, H.\n\
AF Kim, J.\n   Lee, H.\n\
TI Something about physics\n   continued title\n\
C1 [Kim, J.; Lee, H.] Seoul Natl Univ, Dept Phys, Seoul, South Korea.\n\
PY 2014\n\
UT WOS:000000000000001\n\
ER\n\
\n\
EF\n";

    #[test]
    fn single_record() {
        let corpus = parse_wos_export(ONE).unwrap();
        assert_eq!(corpus.len(), 1);
        let r = &corpus.records[0];
        assert_eq!(r.id, "WOS:000000000000001");
        assert_eq!(r.year, Some(2014));
        assert_eq!(r.authors, vec!["Kim, J.", "Lee, H."]);
        assert_eq!(r.addresses.len(), 1);
        assert_eq!(r.addresses[0].author_indices, Some(BTreeSet::from([0, 1])));
        assert!(corpus.warnings.is_empty());
    }

    #[test]
    fn header_only_is_empty() {
        let corpus = parse_wos_export("FN Clarivate\nVR 1.0\nEF\n").unwrap();
        assert!(corpus.is_empty());
    }

    #[test]
    fn missing_c1_warns() {
        let text = "FN x\nVR 1.0\nPT J\nAU Park, S\nPY 2013\nUT WOS:9\nER\nEF\n";
        let corpus = parse_wos_export(text).unwrap();
        assert_eq!(corpus.records[0].addresses.len(), 0);
        assert_eq!(corpus.warnings.len(), 1);
        assert!(corpus.warnings[0].message.contains("C1"));
    }

    #[test]
    fn bad_c1_is_a_warning() {
        let text = "FN x\nVR 1.0\nPT J\nAU Park, S\nC1 Nowhere\nPY 2013\nUT WOS:9\nER\nEF\n";
        let corpus = parse_wos_export(text).unwrap();
        assert_eq!(corpus.records[0].addresses.len(), 1);
        assert!(!corpus.records[0].addresses[0].usable);
        assert!(!corpus.warnings.is_empty());
    }

    #[test]
    fn framing_errors() {
        let cases = [
            ("FN x\nPT J\nUT a\nEF\n", 4),
            ("FN x\nPT J\nUT a\n", 2),
            ("FN x\nPT J\nUT a\nER\n", 4),
            ("FN x\nER\nEF\n", 2),
            ("FN x\nPT J\nfoo bar\nER\nEF\n", 3),
            ("FN x\n   stray\nEF\n", 2),
            ("FN x\nEF\nPT J\n", 3),
            ("FN x\nPT J\nUT a\nER\nPT J\nUT a\nER\nEF\n", 7),
        ];
        for (text, line) in cases {
            let err = parse_wos_export(text).unwrap_err();
            assert_eq!(err.line(), line, "{text:?}: {err}");
        }
    }

    #[test]
    fn crlf_and_bom() {
        let text = "\u{feff}FN x\r\nVR 1.0\r\nPT J\r\nAU A, B\r\nUT u1\r\nER\r\nEF\r\n";
        let corpus = parse_wos_export(text).unwrap();
        assert_eq!(corpus.records[0].id, "u1");
    }

    fn render(blocks: &[(String, u16)]) -> String {
        let mut out = String::from("FN Clarivate Analytics Web of Science\nVR 1.0\n");
        for (id, year) in blocks {
            out.push_str(&format!(
                "PT J\nAU A, B\nC1 Inst, City, Country\nPY {year}\nUT {id}\nER\n\n"
            ));
        }
        out.push_str("EF\n");
        out
    }

    proptest! {
        #[test]
        fn record_count_and_order(years in proptest::collection::vec(1990u16..2030, 0..20)) {
            let blocks: Vec<(String, u16)> = years
                .iter()
                .enumerate()
                .map(|(i, y)| (format!("WOS:{i:06}"), *y))
                .collect();
            let text = render(&blocks);
            let corpus = parse_wos_export(&text).unwrap();
            let er_lines = text.lines().filter(|l| *l == "ER").count();
            prop_assert_eq!(corpus.len(), er_lines);
            for (record, (id, year)) in corpus.records.iter().zip(&blocks) {
                prop_assert_eq!(&record.id, id);
                prop_assert_eq!(record.year, Some(i32::from(*year)));
            }
        }
    }
}
