//! Certified search for free subgroups of rational matrix groups.
//!
//! Given a finite symmetric set `F` of invertible matrices over `Q`, the
//! crate looks for two short words in `F` that freely generate a non-abelian
//! free group and emits a machine-checkable certificate: every inequality
//! that enters the ping-pong argument is evaluated with exact rational
//! arithmetic at finite places and with directed interval arithmetic at the
//! real place, so a verified certificate is a proof.
//!
//! The supporting machinery is exposed as well: absolute values of `Q` and
//! certified local scalars ([`places`]), the Fubini-Study metric on
//! projective space ([`projmetric`]), eigenvalue moduli and proximality
//! profiles ([`spectral`]), arithmetic heights ([`heights`]), invariant
//! subspace detection ([`reducibility`]), and positive-characteristic
//! experiments on girth, growth and expansion ([`modp`]).

pub mod arith;
pub mod dyadic;
pub mod exec;
pub mod factor;
pub mod heights;
pub mod mag;
pub mod matrix;
pub mod matset;
pub mod modp;
pub mod nf;
pub mod padic;
pub mod pingpong;
pub mod places;
pub mod projmetric;
pub mod qpoly;
pub mod reducibility;
pub mod rootloc;
pub mod spectral;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("zero input where a nonzero value is required")]
    ZeroInput,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("constant polynomial has no roots")]
    ConstantPolynomial,
    #[error("reducible minimal polynomial")]
    ReducibleMinpoly,
    #[error("scalar carries no defining data, cannot refine")]
    RefineOpaque,
    #[error("place mismatch: {0} vs {1}")]
    PlaceMismatch(String, String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("singular matrix")]
    Singular,
    #[error("bad prime {p}: {why}")]
    BadPrime { p: u64, why: String },
    #[error("precision exhausted while deciding: {0}")]
    PrecisionExhausted(String),
    #[error("enumeration budget exceeded: {0}")]
    Budget(String),
    #[error("arithmetic in an unsupported field extension: {0}")]
    UnsupportedExtension(String),
    #[error("no eigenvalue modulus gap found: {0}")]
    NoGap(String),
    #[error("search exhausted at depth {depth}: {what}")]
    NotFound { what: String, depth: usize },
    #[error("condition {condition} failed: {detail}")]
    ConditionFailed { condition: String, detail: String },
    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Evaluation context threaded through certified computations.
#[derive(Debug, Clone)]
pub struct Ctx {
    /// Working precision in bits for real-place interval arithmetic.
    pub prec: u32,
    /// How many times a comparison may double the precision before giving up.
    pub max_escalations: u32,
    /// Cap on the size of enumerated product sets.
    pub word_budget: usize,
    /// Sequential or rayon-parallel sweeps.
    pub mode: exec::ExecMode,
}

impl Default for Ctx {
    fn default() -> Self {
        Ctx {
            prec: 128,
            max_escalations: 6,
            word_budget: 200_000,
            mode: exec::ExecMode::default_mode(),
        }
    }
}

impl Ctx {
    pub fn with_prec(prec: u32) -> Self {
        Ctx { prec, ..Ctx::default() }
    }

    /// Same context at doubled precision.
    pub fn escalated(&self) -> Self {
        let mut c = self.clone();
        c.prec *= 2;
        c
    }
}
