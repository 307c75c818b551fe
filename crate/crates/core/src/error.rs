use thiserror::Error;

use crate::graph::Part;
use crate::state::Axis;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed graph document: {0}")]
    Malformed(String),

    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),

    #[error("intra-set arc {from} -> {to}: both endpoints lie in {part}")]
    IntraSetArc {
        from: String,
        to: String,
        part: Part,
    },

    #[error("non-finite weight on arc {from} -> {to}")]
    NonFiniteWeight { from: String, to: String },

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error(
        "same-set neighborhood undefined for tripartite graph (vertex `{vertex}` is in {part})"
    )]
    SameSetNeighborhood { vertex: String, part: Part },

    #[error("pair statistics defined for same-set pairs only (`{first}` and `{second}`)")]
    MixedPair { first: String, second: String },

    #[error("vertices `{first}` and `{second}` are the same vertex")]
    RepeatedVertex { first: String, second: String },

    #[error("`{first}` and `{second}` lie in the same set; no coupling is possible")]
    SameSetCoupling { first: String, second: String },

    #[error("missing initial parameters for vertex `{0}`")]
    MissingParams(String),

    #[error("non-finite initial parameter for vertex `{0}`")]
    NonFiniteParams(String),

    #[error("qubit {qubit} out of range for {n} qubits")]
    QubitOutOfRange { qubit: usize, n: usize },

    #[error("qubit {0} appears more than once")]
    RepeatedQubit(usize),

    #[error("{0} qubits exceeds the supported maximum of {max}", max = crate::state::MAX_QUBITS)]
    TooManyQubits(usize),

    #[error("non-finite angle {0}")]
    NonFiniteAngle(f64),

    #[error("no closed form for {first}{second} on a {part} pair; use the simulator")]
    NoClosedForm {
        part: Part,
        first: Axis,
        second: Axis,
    },

    #[error("inconsistent neighborhood counts: {0}")]
    InconsistentCounts(String),

    #[error("probability `{name}` = {value} is outside [0, 1]")]
    InvalidProbability { name: &'static str, value: f64 },

    #[error("shot count must be at least 1")]
    ZeroShots,

    #[error("circuit text line {line}: {message}")]
    CircuitSyntax { line: usize, message: String },

    #[error("invalid sweep: {0}")]
    InvalidSweep(String),

    #[error("invalid noise configuration: {0}")]
    InvalidNoise(String),

    #[error("invalid setting: {0}")]
    InvalidSetting(String),

    #[error("{}: {source}", path.display())]
    File {
        path: std::path::PathBuf,
        source: std::io::Error,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    /// Process exit status for this error: 2 for I/O failures, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io(_) | Error::File { .. } => 2,
            Error::Csv(e) if matches!(e.kind(), csv::ErrorKind::Io(_)) => 2,
            _ => 1,
        }
    }

    pub(crate) fn file(path: &std::path::Path) -> impl FnOnce(std::io::Error) -> Error + '_ {
        move |source| Error::File {
            path: path.to_path_buf(),
            source,
        }
    }
}
