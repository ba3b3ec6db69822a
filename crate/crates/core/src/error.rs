use std::io;

/// Errors produced by the library.
///
/// Every variant except [`Error::Io`] is an input error: the caller handed
/// over something malformed. Locations are 1-based.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("matrix dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),
    #[error("matrix must be square, got {rows} rows and {cols} columns")]
    NotSquare { rows: usize, cols: usize },
    #[error("entry ({row}, {col}) is not finite")]
    NonFinite { row: usize, col: usize },
    #[error("index {index} is out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("indices must be distinct, got {0} twice")]
    RepeatedIndex(usize),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("index {index} is not in the {side} set")]
    WrongSide { index: usize, side: &'static str },
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("raster grids differ in extent or resolution")]
    GridMismatch,
    #[error("invalid raster: {0}")]
    InvalidRaster(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    /// True for anything that is not an I/O failure.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::Io(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
