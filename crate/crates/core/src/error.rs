use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("polygon needs at least 3 vertices, got {count}")]
    TooFewVertices { count: usize },

    #[error("polygon is not strictly convex{}", at_line(*.line))]
    NotConvex { line: Option<usize> },

    #[error("polygon has zero area")]
    ZeroArea,

    #[error("vertex index {index} out of range for a polygon with {len} vertices")]
    VertexOutOfRange { index: usize, len: usize },

    #[error("polygon has no smooth vertex")]
    NoSmoothVertex,

    #[error("corner chop of size {eps} does not fit inside the edges at vertex {vertex}")]
    ChopTooLarge { vertex: usize, eps: String },

    #[error("scale factor must be positive, got {0}")]
    NonPositiveScale(String),

    #[error("matrix has determinant {0}, expected 1 or -1")]
    NotUnimodular(String),

    #[error("rays do not form a complete two-dimensional fan: {0}")]
    InvalidFan(String),

    #[error("divisor has {got} coefficients but the surface has {expected} rays")]
    DivisorLength { expected: usize, got: usize },

    #[error("divisor has non-integral coefficients")]
    NotIntegral,

    #[error("surface is singular")]
    SingularSurface,

    #[error("euler characteristic of a non-nef divisor on a singular surface is not provided")]
    SingularSurfaceChi,

    #[error("divisor is not effective")]
    NotEffective,

    #[error("divisor is not in SW(Y): effective with non-negative index required")]
    NotInSW,

    #[error("ray {index} is not a contractible (-1)-curve")]
    NotContractible { index: usize },

    #[error("isoparametric transform did not stabilise after {0} iterations")]
    IpDidNotConverge(usize),

    #[error("support polytope contains no lattice point")]
    EmptyLatticeSet,

    #[error("polygon is not a convex domain polygon or free polygon")]
    NotDomainPolygon,

    #[error("region is not a concave domain: {0}")]
    NotConcave(String),

    #[error("truncation horizon must be at least 1")]
    EmptyHorizon,

    #[error("search box {0} is too small for the optimum")]
    BoxTooSmall(u32),

    #[error("integer {0} does not fit the machine-word fast path")]
    Overflow(String),
}

fn at_line(line: Option<usize>) -> String {
    match line {
        Some(l) => format!(" (line {l})"),
        None => String::new(),
    }
}
