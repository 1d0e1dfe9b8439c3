use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("table must be non-empty and square: {0}")]
    Shape(String),
    #[error("entry {value} at row {row}, column {col} is out of range for order {order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("element 0 is not the identity: {a}*0 or 0*{a} differs from {a}")]
    IdentityNotZero { a: usize },
    #[error("not a Latin square: {line} {index} repeats entry {value}")]
    NotLatinSquare {
        line: &'static str,
        index: usize,
        value: usize,
    },
    #[error("not associative: ({a}*{b})*{c} = {left} but {a}*({b}*{c}) = {right}")]
    NotAssociative {
        a: usize,
        b: usize,
        c: usize,
        left: usize,
        right: usize,
    },
    #[error("order {order} exceeds the {what} cap of {cap}")]
    OrderCapExceeded {
        what: &'static str,
        order: usize,
        cap: usize,
    },
    #[error("subgroup is not normal in the ambient group")]
    NotNormal,
    #[error("subgroup is not a {p}-group")]
    NotPGroup { p: usize },
    #[error("x -> x^{k} is not an automorphism of order dividing {n} on C{m}")]
    InvalidAction { m: usize, n: usize, k: usize },
    #[error("invalid subset: {0}")]
    NotASubgroup(String),
    #[error("line {line}, column {col}: {msg}")]
    FileFormat {
        line: usize,
        col: usize,
        msg: String,
    },
    #[error("group spec parse error at position {pos}: {msg}")]
    SpecParse { pos: usize, msg: String },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
