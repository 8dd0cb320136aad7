use thiserror::Error;

use crate::subset::Subset;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unknown element label {0:?}")]
    UnknownLabel(String),

    #[error("ground set of {n} elements exceeds the limit of {max}")]
    GroundSetTooLarge { n: usize, max: usize },

    #[error("{what} is limited to ground sets of at most {max} elements (got {n}); set CONNSYS_MAX_N to override")]
    SizeLimit { what: &'static str, n: usize, max: usize },

    #[error("table has no value for subset {0:?} or its complement")]
    MissingValue(Subset),

    #[error("symmetry violated: f({0:?}) != f(complement)")]
    SymmetryViolation(Subset),

    #[error("submodularity violated by the pair {0:?}, {1:?}")]
    SubmodularityViolation(Subset, Subset),

    #[error("normalization violated: f(empty set) = {0}, expected 0")]
    NormalizationViolation(u32),

    #[error("graph is not simple: {0}")]
    NotSimpleGraph(String),

    #[error("family is over a ground set of {found} elements, expected {expected}")]
    GroundSetMismatch { expected: usize, found: usize },

    #[error("family is not a filter (violates {axiom})")]
    NotAFilter { axiom: String },

    #[error("family is not a filter subbase (violates {axiom})")]
    NotASubbase { axiom: String },

    #[error("new efficiency bound {new} exceeds the family's bound {old}")]
    BoundIncrease { old: u32, new: u32 },

    #[error("the filter has no extension to an ultrafilter")]
    NoUltrafilterExtension,

    #[error("finite intersection of subbase members is empty: {0:?}")]
    EmptyIntersection(Vec<Subset>),

    #[error("generated family is not intersection-closed: {a:?} and {b:?} meet in a k-efficient non-member")]
    EfficiencyEscape { a: Subset, b: Subset },

    #[error("malformed branch decomposition: {0}")]
    MalformedTree(String),

    #[error("ordering is not a permutation of the ground set")]
    NotAPermutation,

    #[error("not a sequence chain: {0}")]
    NotASequenceChain(String),

    #[error("sequence chain step {0} adds more or fewer than one element")]
    NotSingleElement(usize),

    #[error("element {0} is already in the last chain set")]
    ElementAlreadyPresent(usize),

    #[error("element {0} is not in the chain set")]
    ElementAbsent(usize),

    #[error("chain sets are not strictly increasing at position {0}")]
    ChainOrderBroken(usize),

    #[error("subset {0:?} has f = {1}, above the bound")]
    EfficiencyViolation(Subset, u32),

    #[error("family member {0:?} is not k-efficient")]
    NotKEfficient(Subset),

    #[error("subsets are not pairwise incomparable: {0:?}, {1:?}")]
    NotAnAntichain(Subset, Subset),

    #[error("chain cover is limited to {max} sets (got {n})")]
    FamilyTooLarge { n: usize, max: usize },
}
