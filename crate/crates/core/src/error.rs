use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors raised by the constructions and checkers in this crate.
///
/// Axiom *violations* found by the checkers are reported in verdict values,
/// not through this type. An `Error` means an operation could not be
/// carried out at all.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what}: size {size} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("vertex {vertex} out of range for an object with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}: graphs are simple")]
    Loop(usize),
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
    #[error("span legs must be monomorphisms")]
    LegsNotMono,
    #[error("span legs start at different spine objects")]
    ApexMismatch,
    #[error("span apex is not the spine object it claims to be (index {0})")]
    SpineMismatch(usize),
    #[error("extension does not start at the corresponding span object")]
    ExtensionMismatch,
    #[error("not a permutation of 0..{0}")]
    InvalidPermutation(usize),
    #[error("graph is not chordal")]
    NotChordal,
    #[error("no spine object up to index {cap} receives a morphism")]
    NoSpineMorphism { cap: usize },
    #[error("SC2 violated: no mediating morphism between the proxy pushouts")]
    NoMediator,
    #[error("SC2 violated: {count} distinct mediating morphisms")]
    NonUniqueMediator { count: usize },
    #[error("legs are not reflexive monomorphisms out of a discrete graph")]
    LegsInvalid,
    #[error("morphism is not a reflexive monomorphism")]
    NotReflexiveMono,
    #[error("surjection has no preimage for spine object {0}")]
    SurjectionMissesSpine(usize),
    #[error("no distinguished preimage for the proxy pushout")]
    NoDistinguishedPreimage,
    #[error("pushout is only a preorder: elements {0} and {1} collapse")]
    AntisymmetryViolated(usize, usize),
    #[error("relation is not a partial order: {0}")]
    NotAPoset(String),
    #[error("labels must be total and contiguous from 0: {0}")]
    InvalidLabeling(String),
    #[error("the empty graph has no tree-width")]
    EmptyGraph,
    #[error("value must be a positive integer")]
    NonPositive,
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    pub(crate) fn cap(what: &'static str, size: usize, cap: usize) -> Result<()> {
        if size > cap {
            Err(Error::CapExceeded { what, size, cap })
        } else {
            Ok(())
        }
    }
}
