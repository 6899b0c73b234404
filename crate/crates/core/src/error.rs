use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {0} out of range (n = {1})")]
    VertexOutOfRange(usize, usize),
    #[error("unknown edge index {0}")]
    UnknownEdgeIndex(usize),
    #[error("vertex {0} has odd degree")]
    OddDegreeVertex(usize),
    #[error("graph is not regular")]
    NotRegular,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph is not 2k-regular for any k >= 1")]
    NotEvenRegular,
    #[error("graph is not (2k+1)-regular for any k >= 1")]
    NotOddRegular,
    #[error("piece degrees sum to {0} but the graph is {1}-regular")]
    DegreeSumMismatch(usize, usize),
    #[error("unsupported split: odd piece degree on a non-bipartite graph without a supplied 1-factorization")]
    UnsupportedSplit,
    #[error("supplied matchings are not a 1-factorization of the graph")]
    InvalidSuppliedFactorization,
    #[error("invalid double-star shape for this construction")]
    BadShape,
    #[error("divisibility hypothesis violated")]
    DivisibilityViolated,
    #[error("no q >= 1 with r = s*q + t")]
    NoValidSplit,
    #[error("degree of vertex {0} is not divisible by r")]
    DegreeNotDivisible(usize),
    #[error("pendant-assignment search budget exceeded on cycle starting at vertex {0}")]
    SearchBudgetExceeded(usize),
    #[error("inputs are not two disjoint perfect matchings")]
    MatchingsNotDisjointPerfect,
    #[error("pendant repair loop exceeded its safety cap")]
    RepairLoopExceeded,
    #[error("matching is not a perfect matching")]
    NotPerfectMatching,
    #[error("common-neighbor bound violated on 2-factor edge ({0}, {1})")]
    CommonNeighborBoundViolated(usize, usize),
    #[error("graph contains a triangle")]
    NotTriangleFree,
    #[error("no perfect matching found")]
    NoPerfectMatching,
    #[error("no 2-factor found")]
    No2FactorFound,
    #[error("n * r must be even")]
    ParityViolated,
    #[error("random generation failed after the retry cap")]
    GenerationFailed,
    #[error("bad circulant offsets")]
    BadOffsets,
    #[error("parse error: {0}")]
    Parse(String),
}
