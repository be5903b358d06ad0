use gapkit_core::Matching;

/// Optional evidence attached to a solver score. Matchings witness
/// (weighted) common subsequences; traversals witness DTWD/Frechet costs as
/// the visited index pairs, starting at `(0, 0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Matching(Matching),
    Traversal(Vec<(usize, usize)>),
}

/// A solver score (integer, or integer half-units for distance measures)
/// with an optional witness. When a witness is present, recomputing its
/// score reproduces `score` exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub score: i64,
    pub witness: Option<Witness>,
}
