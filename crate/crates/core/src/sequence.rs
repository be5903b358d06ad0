use std::sync::Arc;

use crate::alphabet::{Alphabet, SymbolId};
use crate::error::CoreError;

/// A finite list of symbol ids over a declared alphabet. Immutable after
/// construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sequence {
    alphabet: Arc<Alphabet>,
    symbols: Vec<SymbolId>,
}

impl Sequence {
    pub fn new(alphabet: Arc<Alphabet>, symbols: Vec<SymbolId>) -> Result<Sequence, CoreError> {
        for &id in &symbols {
            if !alphabet.contains(id) {
                return Err(CoreError::UnknownSymbol { id: id.0, size: alphabet.len() });
            }
        }
        Ok(Sequence { alphabet, symbols })
    }

    pub fn empty(alphabet: Arc<Alphabet>) -> Sequence {
        Sequence { alphabet, symbols: Vec::new() }
    }

    /// Parses a glyph string. Single-character alphabets read one symbol per
    /// character; otherwise glyphs are whitespace-separated.
    pub fn parse(alphabet: &Arc<Alphabet>, text: &str) -> Result<Sequence, CoreError> {
        let mut symbols = Vec::new();
        if alphabet.single_char() {
            for c in text.chars() {
                if c.is_whitespace() {
                    continue;
                }
                symbols.push(alphabet.id(&c.to_string())?);
            }
        } else {
            for token in text.split_whitespace() {
                symbols.push(alphabet.id(token)?);
            }
        }
        Ok(Sequence { alphabet: Arc::clone(alphabet), symbols })
    }

    pub fn render(&self) -> String {
        let sep = if self.alphabet.single_char() { "" } else { " " };
        self.symbols
            .iter()
            .map(|&id| self.alphabet.glyph(id))
            .collect::<Vec<_>>()
            .join(sep)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn symbols(&self) -> &[SymbolId] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn get(&self, i: usize) -> SymbolId {
        self.symbols[i]
    }

    /// Contiguous substring `[start, start + len)` as a new sequence.
    pub fn window(&self, start: usize, len: usize) -> Sequence {
        Sequence {
            alphabet: Arc::clone(&self.alphabet),
            symbols: self.symbols[start..start + len].to_vec(),
        }
    }

    /// Distinct symbol ids actually used, in id order.
    pub fn used_symbols(&self) -> Vec<SymbolId> {
        let mut seen = vec![false; self.alphabet.len()];
        for &id in &self.symbols {
            seen[id.index()] = true;
        }
        seen.iter()
            .enumerate()
            .filter(|(_, &s)| s)
            .map(|(i, _)| SymbolId(i as u32))
            .collect()
    }
}

/// Concatenates parts that all share an alphabet.
pub fn concat(alphabet: &Arc<Alphabet>, parts: &[&Sequence]) -> Result<Sequence, CoreError> {
    let mut symbols = Vec::new();
    for part in parts {
        if !crate::alphabet::same_alphabet(part.alphabet(), alphabet) {
            return Err(CoreError::AlphabetMismatch);
        }
        symbols.extend_from_slice(part.symbols());
    }
    Sequence::new(Arc::clone(alphabet), symbols)
}
