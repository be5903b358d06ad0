use std::collections::HashMap;
use std::sync::Arc;

use crate::error::CoreError;

/// Index of a symbol within its owning [`Alphabet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymbolId(pub u32);

impl SymbolId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A symbol: a dense small id plus a short display glyph such as `"5"` or
/// `"3_2"`. Solvers work on ids; textual I/O uses glyphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Symbol {
    pub id: SymbolId,
    pub glyph: String,
}

/// An explicit finite alphabet. Ids are dense (`0..len`), glyphs are
/// nonempty and unique.
#[derive(Debug, Clone)]
pub struct Alphabet {
    glyphs: Vec<String>,
    by_glyph: HashMap<String, SymbolId>,
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.glyphs == other.glyphs
    }
}

impl Eq for Alphabet {}

impl Alphabet {
    pub fn new<I, S>(glyphs: I) -> Result<Arc<Alphabet>, CoreError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let glyphs: Vec<String> = glyphs.into_iter().map(Into::into).collect();
        let mut by_glyph = HashMap::with_capacity(glyphs.len());
        for (i, glyph) in glyphs.iter().enumerate() {
            if glyph.is_empty() {
                return Err(CoreError::InvalidAlphabet {
                    reason: format!("glyph at index {i} is empty"),
                });
            }
            if by_glyph.insert(glyph.clone(), SymbolId(i as u32)).is_some() {
                return Err(CoreError::InvalidAlphabet {
                    reason: format!("duplicate glyph {glyph:?}"),
                });
            }
        }
        Ok(Arc::new(Alphabet { glyphs, by_glyph }))
    }

    /// Alphabet of single-character glyphs, e.g. `Alphabet::of_chars("0123456")`.
    pub fn of_chars(chars: &str) -> Result<Arc<Alphabet>, CoreError> {
        Alphabet::new(chars.chars().map(|c| c.to_string()))
    }

    pub fn len(&self) -> usize {
        self.glyphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.glyphs.is_empty()
    }

    pub fn contains(&self, id: SymbolId) -> bool {
        id.index() < self.glyphs.len()
    }

    pub fn id(&self, glyph: &str) -> Result<SymbolId, CoreError> {
        self.by_glyph
            .get(glyph)
            .copied()
            .ok_or_else(|| CoreError::UnknownGlyph { glyph: glyph.to_string() })
    }

    pub fn glyph(&self, id: SymbolId) -> &str {
        &self.glyphs[id.index()]
    }

    pub fn glyphs(&self) -> &[String] {
        &self.glyphs
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.glyphs.iter().enumerate().map(|(i, g)| Symbol {
            id: SymbolId(i as u32),
            glyph: g.clone(),
        })
    }

    /// True when every glyph is a single character, in which case sequences
    /// render as plain strings with no separator.
    pub fn single_char(&self) -> bool {
        self.glyphs.iter().all(|g| g.chars().count() == 1)
    }
}

/// Two sequence arguments must share an alphabet; compares cheaply by
/// pointer first.
pub fn same_alphabet(a: &Arc<Alphabet>, b: &Arc<Alphabet>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}
