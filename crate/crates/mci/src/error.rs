use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// A grid is too small to hold a spectrum without frequency collisions.
    #[error("grid of size {grid} aliases a spectrum of width {width}")]
    Alias { grid: usize, width: usize },

    /// Mismatched lengths or dimensions.
    #[error("size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },

    /// The channel matrix at a frequency has no usable inverse.
    #[error("channel matrix is numerically singular at frequency {0} (add it to the null band if the signal vanishes there)")]
    SingularMatrix(i64),

    /// Samples and kernel were built for different bands.
    #[error("band mismatch: samples on {samples}, kernel on {kernel}")]
    BandMismatch { samples: String, kernel: String },

    /// The requested DC-estimation mode needs channel rows that are absent.
    #[error("a(0) estimation mode {0} requires channel rows that are not present")]
    ModeMismatch(&'static str),

    /// RMSE against a reference with zero energy.
    #[error("reference signal has zero energy")]
    ZeroReference,

    /// A printed closed form was evaluated too close to a removable
    /// singularity.
    #[error("evaluation point is within {guard:e} of a removable singularity at t = {at}")]
    NearSingularity { at: f64, guard: f64 },

    /// Image dimensions incompatible with the downsampling factor.
    #[error("image {width}x{height} is not divisible by factor {factor}")]
    DimensionNotDivisible {
        width: usize,
        height: usize,
        factor: usize,
    },

    /// A line or sample list is shorter than an operation requires.
    #[error("input of length {got} is too short (need at least {need})")]
    TooShort { need: usize, got: usize },

    /// Correlation of a constant image.
    #[error("zero variance in correlation input")]
    ZeroVariance,

    /// Band construction violated an invariant.
    #[error("invalid band: {0}")]
    InvalidBand(String),

    /// Malformed configuration (channel bank JSON, benchmark rows, ...).
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// Malformed PNM image data.
    #[error("invalid PNM data: {0}")]
    Pnm(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
