use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error("cannot parse cycle notation: {0}")]
    Parse(String),

    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    /// A computation would exceed a configured resource limit. `required` is the
    /// exact size that was refused.
    #[error("cap exceeded: {required} {resource} needed, cap is {cap}")]
    CapExceeded {
        resource: &'static str,
        required: BigUint,
        cap: usize,
    },

    #[error("graph is not regular (degree multiset {0:?})")]
    Irregular(Vec<usize>),

    #[error("invalid coset graph data: {0}")]
    InvalidSpec(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("malformed graph data: {0}")]
    Format(String),

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("not a normal subgroup: {0}")]
    NotNormal(String),
}

impl Error {
    pub(crate) fn cap(resource: &'static str, required: impl Into<BigUint>, cap: usize) -> Self {
        Error::CapExceeded {
            resource,
            required: required.into(),
            cap,
        }
    }

    /// Whether this error is a refusal caused by a resource cap.
    pub fn is_cap_exceeded(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
