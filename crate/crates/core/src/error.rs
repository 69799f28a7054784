use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {label} is out of range for a graph of order {order}")]
    LabelOutOfRange { label: usize, order: usize },

    #[error("edge {0}-{1} is not present in the graph")]
    NoSuchEdge(usize, usize),

    #[error("loop at vertex {0}; only simple graphs are supported")]
    SelfLoop(usize),

    #[error("order {0} exceeds the supported maximum of {max}", max = crate::MAX_ORDER)]
    OrderTooLarge(usize),

    #[error("vertex set belongs to a graph of order {found}, expected order {expected}")]
    OrderMismatch { expected: usize, found: usize },

    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("edge list parse error at line {line}: {message}")]
    EdgeList { line: usize, message: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("graph must be connected")]
    Disconnected,

    #[error("graph has odd order {0}")]
    OddOrder(usize),

    #[error("graph has no edge")]
    Edgeless,

    #[error("k = {k} is outside the admissible range {min}..={max}")]
    KOutOfRange { k: usize, min: usize, max: usize },

    #[error("vertex {0} is not a member of the set")]
    NotAMember(usize),

    #[error("graph order {order} is below the required minimum {min}")]
    OrderBelowMinimum { order: usize, min: usize },

    #[error("no-initial-cost product throttling is undefined for the full vertex set")]
    FullSetWithoutInitialCost,

    #[error("certificate invariant violated: {0}")]
    CertificateInvariant(String),
}
