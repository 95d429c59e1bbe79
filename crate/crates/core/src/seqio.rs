//! Sequence ingestion: alphabets, validation, FASTA parsing and writing.
//!
//! Symbols outside the declared alphabet are hard errors. Nothing is
//! silently dropped or replaced, since that would change LCS values.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::genes;

/// Width of sequence lines produced by [`write_fasta`].
pub const FASTA_LINE_WIDTH: usize = 70;

/// Ordered set of distinct single-byte symbols, size >= 2.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Alphabet {
    symbols: Vec<u8>,
    #[serde(skip)]
    index: [u8; 256],
}

const NOT_IN_ALPHABET: u8 = u8::MAX;

impl Alphabet {
    pub fn new(symbols: &str) -> Result<Self> {
        let bytes: Vec<u8> = symbols.bytes().collect();
        if !symbols.is_ascii() {
            return Err(Error::InvalidAlphabet(format!(
                "'{symbols}' contains non-ASCII symbols"
            )));
        }
        if bytes.len() < 2 {
            return Err(Error::InvalidAlphabet(format!(
                "'{symbols}' has fewer than 2 symbols"
            )));
        }
        if bytes.len() >= NOT_IN_ALPHABET as usize {
            return Err(Error::InvalidAlphabet("too many symbols".into()));
        }
        let mut index = [NOT_IN_ALPHABET; 256];
        for (k, &b) in bytes.iter().enumerate() {
            if b.is_ascii_whitespace() || b.is_ascii_lowercase() {
                return Err(Error::InvalidAlphabet(format!(
                    "symbol {:?} must be an uppercase or non-letter printable character",
                    b as char
                )));
            }
            if index[b as usize] != NOT_IN_ALPHABET {
                return Err(Error::InvalidAlphabet(format!(
                    "duplicate symbol '{}'",
                    b as char
                )));
            }
            index[b as usize] = k as u8;
        }
        Ok(Alphabet {
            symbols: bytes,
            index,
        })
    }

    /// The DNA alphabet `ACGT`.
    pub fn dna() -> Self {
        Alphabet::new("ACGT").expect("static alphabet")
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn symbol(&self, index: usize) -> u8 {
        self.symbols[index]
    }

    /// Position of `symbol` in the alphabet, if present.
    pub fn index_of(&self, symbol: u8) -> Option<usize> {
        match self.index[symbol as usize] {
            NOT_IN_ALPHABET => None,
            k => Some(k as usize),
        }
    }

    pub fn contains(&self, symbol: u8) -> bool {
        self.index_of(symbol).is_some()
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.symbols).expect("ASCII by construction")
    }
}

impl Default for Alphabet {
    fn default() -> Self {
        Alphabet::dna()
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet({:?})", self.as_str())
    }
}

impl TryFrom<String> for Alphabet {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        Alphabet::new(&s)
    }
}

impl From<Alphabet> for String {
    fn from(a: Alphabet) -> String {
        a.as_str().to_owned()
    }
}

/// A validated, non-empty sequence over an [`Alphabet`].
#[derive(Clone, PartialEq, Eq)]
pub struct NucleotideSequence {
    id: String,
    letters: Vec<u8>,
    alphabet: Alphabet,
}

impl NucleotideSequence {
    /// Validates `raw` (case-insensitive, whitespace ignored) under `alphabet`.
    ///
    /// Positions in `InvalidSymbol` errors are the 1-based line and column in `raw`.
    pub fn parse(id: impl Into<String>, raw: &str, alphabet: &Alphabet) -> Result<Self> {
        let id = id.into();
        let mut letters = Vec::with_capacity(raw.len());
        for (line_no, line) in raw.lines().enumerate() {
            push_symbols(&mut letters, &id, line, line_no + 1, alphabet)?;
        }
        if letters.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(NucleotideSequence {
            id,
            letters,
            alphabet: alphabet.clone(),
        })
    }

    /// Builds a sequence from already-validated symbols.
    ///
    /// Panics if `letters` is empty or contains a symbol outside `alphabet`.
    pub fn from_symbols(id: impl Into<String>, letters: Vec<u8>, alphabet: &Alphabet) -> Self {
        assert!(!letters.is_empty(), "sequence must be non-empty");
        assert!(
            letters.iter().all(|&b| alphabet.contains(b)),
            "symbol outside alphabet"
        );
        NucleotideSequence {
            id: id.into(),
            letters,
            alphabet: alphabet.clone(),
        }
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.letters).expect("ASCII by construction")
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Always false; kept for the `len`/`is_empty` pairing.
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.id = id.into();
        self
    }
}

impl fmt::Debug for NucleotideSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.as_str();
        if s.len() <= 40 {
            write!(f, "{}:{}", self.id, s)
        } else {
            write!(f, "{}:{}...({} nt)", self.id, &s[..40], s.len())
        }
    }
}

fn push_symbols(
    out: &mut Vec<u8>,
    id: &str,
    line: &str,
    line_no: usize,
    alphabet: &Alphabet,
) -> Result<()> {
    for (col, ch) in line.chars().enumerate() {
        if ch.is_whitespace() {
            continue;
        }
        let up = ch.to_ascii_uppercase();
        if !up.is_ascii() || !alphabet.contains(up as u8) {
            return Err(Error::InvalidSymbol {
                id: id.to_owned(),
                symbol: ch,
                line: line_no,
                column: col + 1,
            });
        }
        out.push(up as u8);
    }
    Ok(())
}

/// Validates a raw sequence string. The resulting sequence has id `"seq"`.
pub fn validate_sequence(raw: &str, alphabet: &Alphabet) -> Result<NucleotideSequence> {
    NucleotideSequence::parse("seq", raw, alphabet)
}

/// Parses a FASTA document into sequences, one per `>` record.
///
/// The header up to its first whitespace becomes the id. Lowercase is
/// normalized to uppercase and all whitespace inside sequence lines is
/// dropped. Blank lines are allowed anywhere.
pub fn parse_fasta(text: &str, alphabet: &Alphabet) -> Result<Vec<NucleotideSequence>> {
    let mut records = Vec::new();
    let mut current: Option<(String, Vec<u8>)> = None;

    for (line_no, line) in text.lines().enumerate() {
        let line_no = line_no + 1;
        if let Some(header) = line.strip_prefix('>') {
            if let Some((id, letters)) = current.take() {
                records.push(finish_record(id, letters, alphabet)?);
            }
            let id = header.split_whitespace().next().unwrap_or("").to_owned();
            current = Some((id, Vec::new()));
            continue;
        }
        match current.as_mut() {
            Some((id, letters)) => push_symbols(letters, id, line, line_no, alphabet)?,
            None => {
                if let Some((col, ch)) = line.chars().enumerate().find(|(_, c)| !c.is_whitespace())
                {
                    if !text.contains('>') {
                        return Err(Error::NoRecords);
                    }
                    // sequence data before the first header
                    return Err(Error::InvalidSymbol {
                        id: String::new(),
                        symbol: ch,
                        line: line_no,
                        column: col + 1,
                    });
                }
            }
        }
    }

    match current {
        Some((id, letters)) => records.push(finish_record(id, letters, alphabet)?),
        None => return Err(Error::NoRecords),
    }
    Ok(records)
}

fn finish_record(id: String, letters: Vec<u8>, alphabet: &Alphabet) -> Result<NucleotideSequence> {
    if letters.is_empty() {
        return Err(Error::EmptyRecord { id });
    }
    Ok(NucleotideSequence {
        id,
        letters,
        alphabet: alphabet.clone(),
    })
}

/// Serializes sequences as FASTA with [`FASTA_LINE_WIDTH`]-column lines.
pub fn write_fasta(seqs: &[NucleotideSequence]) -> String {
    let mut out = String::new();
    for seq in seqs {
        out.push('>');
        out.push_str(seq.id());
        out.push('\n');
        for chunk in seq.letters().chunks(FASTA_LINE_WIDTH) {
            out.push_str(std::str::from_utf8(chunk).expect("ASCII"));
            out.push('\n');
        }
    }
    out
}

/// The four dnaA genes of the case study, ids `gene1`..`gene4`.
pub fn embedded_case_study_genes() -> Vec<NucleotideSequence> {
    let dna = Alphabet::dna();
    genes::GENES
        .iter()
        .enumerate()
        .map(|(k, raw)| {
            NucleotideSequence::parse(format!("gene{}", k + 1), raw, &dna)
                .expect("embedded genes are valid DNA")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dna() -> Alphabet {
        Alphabet::dna()
    }

    #[test]
    fn fasta_concatenates_lines() {
        let recs = parse_fasta(">g1\nACGT\nAC\n", &dna()).unwrap();
        assert_eq!(recs.len(), 1);
        assert_eq!(recs[0].id(), "g1");
        assert_eq!(recs[0].as_str(), "ACGTAC");
        assert_eq!(recs[0].len(), 6);
    }

    #[test]
    fn fasta_normalizes_case() {
        let recs = parse_fasta(">a\nacgt\n>b\nTTTT\n", &dna()).unwrap();
        assert_eq!(recs.len(), 2);
        assert_eq!(recs[0].as_str(), "ACGT");
        assert_eq!(recs[1].as_str(), "TTTT");
    }

    #[test]
    fn fasta_rejects_symbol_outside_alphabet() {
        let err = parse_fasta(">x\nACGU\n", &dna()).unwrap_err();
        assert_eq!(
            err,
            Error::InvalidSymbol {
                id: "x".into(),
                symbol: 'U',
                line: 2,
                column: 4
            }
        );
    }

    #[test]
    fn fasta_header_id_stops_at_whitespace() {
        let recs = parse_fasta(">chr1 some description\r\nAC GT\r\n\n", &dna()).unwrap();
        assert_eq!(recs[0].id(), "chr1");
        assert_eq!(recs[0].as_str(), "ACGT");
    }

    #[test]
    fn fasta_error_paths() {
        assert_eq!(parse_fasta("", &dna()).unwrap_err(), Error::NoRecords);
        assert_eq!(parse_fasta("ACGT\n", &dna()).unwrap_err(), Error::NoRecords);
        assert_eq!(
            parse_fasta(">a\n>b\nAC\n", &dna()).unwrap_err(),
            Error::EmptyRecord { id: "a".into() }
        );
        assert_eq!(
            parse_fasta(">a\nAC\n>b\n  \n", &dna()).unwrap_err(),
            Error::EmptyRecord { id: "b".into() }
        );
        assert!(matches!(
            parse_fasta("AC\n>a\nAC\n", &dna()).unwrap_err(),
            Error::InvalidSymbol { line: 1, .. }
        ));
    }

    #[test]
    fn validate_raw() {
        assert_eq!(validate_sequence("ac gt", &dna()).unwrap().as_str(), "ACGT");
        assert_eq!(
            validate_sequence("", &dna()).unwrap_err(),
            Error::EmptySequence
        );
        assert_eq!(
            validate_sequence(" \n\t", &dna()).unwrap_err(),
            Error::EmptySequence
        );
        match validate_sequence("ACGN", &dna()).unwrap_err() {
            Error::InvalidSymbol { symbol, column, .. } => {
                assert_eq!(symbol, 'N');
                assert_eq!(column, 4);
            }
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn alphabet_rules() {
        assert!(Alphabet::new("A").is_err());
        assert!(Alphabet::new("AA").is_err());
        assert!(Alphabet::new("ab").is_err());
        let ab = Alphabet::new("AB").unwrap();
        assert_eq!(ab.index_of(b'B'), Some(1));
        assert_eq!(ab.index_of(b'C'), None);
        assert!(validate_sequence("abba", &ab).is_ok());
        let json = serde_json::to_string(&ab).unwrap();
        assert_eq!(json, "\"AB\"");
        assert_eq!(serde_json::from_str::<Alphabet>(&json).unwrap(), ab);
        assert!(serde_json::from_str::<Alphabet>("\"AA\"").is_err());
    }

    #[test]
    fn embedded_genes_match_appendix() {
        let genes = embedded_case_study_genes();
        let lens: Vec<usize> = genes.iter().map(|g| g.len()).collect();
        assert_eq!(lens, [1518, 1536, 1404, 1398]);
        assert_eq!(&genes[0].as_str()[..10], "GTGTCAGTGG");
        let ids: Vec<&str> = genes.iter().map(|g| g.id()).collect();
        assert_eq!(ids, ["gene1", "gene2", "gene3", "gene4"]);
    }

    #[test]
    fn embedded_genes_agree_with_shipped_fasta() {
        let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/data");
        for (k, gene) in embedded_case_study_genes().iter().enumerate() {
            let text = std::fs::read_to_string(format!("{dir}/gene{}.fa", k + 1)).unwrap();
            let recs = parse_fasta(&text, &dna()).unwrap();
            assert_eq!(recs.len(), 1);
            assert_eq!(recs[0].id(), gene.id());
            assert_eq!(recs[0].letters(), gene.letters());
        }
    }

    proptest! {
        #[test]
        fn fasta_round_trip(
            recs in prop::collection::vec(("[a-zA-Z0-9_.|-]{1,12}", "[ACGT]{1,200}"), 1..5)
        ) {
            let seqs: Vec<_> = recs
                .iter()
                .map(|(id, s)| NucleotideSequence::parse(id.clone(), s, &dna()).unwrap())
                .collect();
            let back = parse_fasta(&write_fasta(&seqs), &dna()).unwrap();
            prop_assert_eq!(back, seqs);
        }
    }
}
