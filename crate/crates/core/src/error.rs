//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    // ---- algebra ----
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus of degree {degree} over GF({p}) is reducible")]
    ReducibleModulus { p: u64, degree: usize },
    #[error("no stored modulus for GF({p}^{f})")]
    NoModulus { p: u64, f: u32 },
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("division by zero in GF({0})")]
    DivisionByZero(u64),
    #[error("vector length {got} does not match dimension {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("gaussian binomial needs 0 <= k <= n and q >= 2 (n={n}, k={k}, q={q})")]
    BadGaussianArgs { n: u32, k: u32, q: u64 },
    #[error("form kind {kind} is not defined in dimension {n}")]
    UnsupportedForm { kind: &'static str, n: usize },
    #[error("k = {k} exceeds the Witt index {witt}")]
    WittIndexExceeded { k: usize, witt: usize },
    #[error("hermitian forms need a field of square order, got GF({0})")]
    NonSquareField(u64),
    #[error("form matrix fails its structural invariant: {0}")]
    DegenerateForm(&'static str),
    #[error("enumeration of {predicted} subspaces exceeds the cap of {cap}")]
    EnumerationCap { predicted: String, cap: u64 },

    // ---- permutation groups ----
    #[error("image sequence of length {len} is not a bijection")]
    NotAPermutation { len: usize },
    #[error("generators have inconsistent degrees ({0} vs {1})")]
    DegreeMismatch(usize, usize),
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("operation requires a transitive group")]
    NotTransitive,
    #[error("permutation group of degree {0} exceeds the engine cap of {1}")]
    DegreeCap(usize, usize),
    #[error("not a subgroup: generator {index} lies outside the ambient group")]
    NotASubgroup { index: usize },
    #[error("subgroup must be proper")]
    NotProper,
    #[error("coset count would exceed the cap of {0}")]
    CosetCap(u64),

    // ---- geometry ----
    #[error("incidence structure is empty")]
    EmptyStructure,
    #[error("line {0} is repeated")]
    DuplicateLine(usize),
    #[error("line {line} has {got} points, expected {expected}")]
    NonUniformLineSize { line: usize, got: usize, expected: usize },
    #[error("point {point} lies on {got} lines, expected {expected}")]
    NonUniformPointDegree { point: usize, got: usize, expected: usize },
    #[error("points {p1} and {p2} lie on lines {l1} and {l2}")]
    TwoPointsOnTwoLines { p1: u32, p2: u32, l1: u32, l2: u32 },
    #[error("antiflag ({point}, {line}) has {collinear} collinear points on the line, expected 1")]
    AntiflagViolation { point: u32, line: u32, collinear: usize },
    #[error("structure is thin: order ({s},{t}) needs s,t >= 2")]
    Thin { s: u32, t: u32 },
    #[error("point/line totals contradict the order: {0}")]
    CountMismatch(String),
    #[error("graph has no cycle, girth undefined")]
    NoCycle,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("points must be distinct and noncollinear")]
    CollinearPair,

    // ---- constructions ----
    #[error("parameter q = {q} is outside the resource cap for {what} (max {max})")]
    ResourceCap { what: &'static str, q: u64, max: u64 },
    #[error("{0} requires an even prime power q, got {1}")]
    OddCharacteristic(&'static str, u64),
    #[error("point set is not a hyperoval: {0}")]
    NotAHyperoval(String),
    #[error("construction self-check failed: {0}")]
    ConstructionDefect(String),
    #[error("no collineation generators shipped for {0}")]
    UnsupportedGroup(String),

    // ---- symmetry ----
    #[error("group degree {got} does not match points + lines = {expected}")]
    ActionDegreeMismatch { expected: usize, got: usize },
    #[error("generator {index} does not map line {line} to a line")]
    NotACollineation { index: usize, line: usize },
    #[error("antiflag ({point}, {line}) has {count} 3-arcs, expected exactly 1")]
    ThreeArcCount { point: u32, line: u32, count: usize },
    #[error("pair ({0}, {1}) is not an antiflag")]
    NotAnAntiflag(u32, u32),
    #[error("pair ({0}, {1}) is not a flag")]
    NotAFlag(u32, u32),

    // ---- sieve ----
    #[error("unsupported group order spec: {0}")]
    UnsupportedOrderSpec(String),
    #[error("{0} is not a prime power")]
    NotAPrimePower(u64),
    #[error("unknown sieve table `{0}`")]
    UnknownTable(String),
}
