use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    // order kernel
    #[error("relation is not antisymmetric: {0} and {1} lie on a cycle")]
    Cycle(usize, usize),
    #[error("element {index} out of range for ground set of size {n}")]
    Index { index: usize, n: usize },
    #[error("listed pair ({0}, {1}) is not a covering pair of the generated order")]
    NotACover(usize, usize),

    // lattice kernel
    #[error("poset is not bounded")]
    NotBounded,
    #[error("poset is not a lattice")]
    NotALattice,
    #[error("({0}, {1}) is not a covering pair")]
    NotAnEdge(usize, usize),
    #[error("forbidden-shape catalogue unavailable: {0}")]
    CatalogueMissing(String),
    #[error("invalid shape parameters L({m}, {n}); need m >= 3 and n >= 4")]
    ShapeParameters { m: usize, n: usize },

    // tolerance kernel
    #[error("relation has {rows} rows but the host has {n} elements")]
    Dimension { rows: usize, n: usize },
    #[error("relation is not reflexive at {0}")]
    NotReflexive(usize),
    #[error("relation is not symmetric: ({0}, {1}) present without its reverse")]
    NotSymmetric(usize, usize),
    #[error("relation is not compatible: ({}, {}) and ({}, {}) fail under {op}", .witness[0], .witness[1], .witness[2], .witness[3])]
    NotCompatible { witness: [usize; 4], op: &'static str },
    #[error("maximal clique around {0} is not an interval")]
    BlockNotInterval(usize),
    #[error("the host lattice is not modular")]
    HostNotModular,
    #[error("tolerance has a block with more than two elements")]
    NotDoubling,
    #[error("relation is not an equivalence")]
    NotEquivalence,
    #[error("equivalence class containing {0} is not an interval")]
    BlocksNotIntervals(usize),

    // doubling
    #[error("internal consistency failure: {0}")]
    Internal(String),

    // coalitions
    #[error("no extensive map exists between the given coalitions")]
    NotComparable,
    #[error("poset is not a chain")]
    NotAChain,
    #[error("ground set of size {n} exceeds the size cap {cap}")]
    SizeCap { n: usize, cap: usize },
    #[error("first coalition is not strictly below the second")]
    NotStrictlyBelow,
    #[error("chain must have at least two elements")]
    ChainTooShort,
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Cycle(..) => "cycle",
            Error::Index { .. } => "index",
            Error::NotACover(..) => "not_a_cover",
            Error::NotBounded => "not_bounded",
            Error::NotALattice => "not_a_lattice",
            Error::NotAnEdge(..) => "not_an_edge",
            Error::CatalogueMissing(_) => "catalogue_missing",
            Error::ShapeParameters { .. } => "shape_parameters",
            Error::Dimension { .. } => "dimension",
            Error::NotReflexive(_) => "not_reflexive",
            Error::NotSymmetric(..) => "not_symmetric",
            Error::NotCompatible { .. } => "not_compatible",
            Error::BlockNotInterval(_) => "block_not_interval",
            Error::HostNotModular => "host_not_modular",
            Error::NotDoubling => "not_doubling",
            Error::NotEquivalence => "not_equivalence",
            Error::BlocksNotIntervals(_) => "blocks_not_intervals",
            Error::Internal(_) => "internal",
            Error::NotComparable => "not_comparable",
            Error::NotAChain => "not_a_chain",
            Error::SizeCap { .. } => "size_cap",
            Error::NotStrictlyBelow => "not_strictly_below",
            Error::ChainTooShort => "chain_too_short",
        }
    }
}
