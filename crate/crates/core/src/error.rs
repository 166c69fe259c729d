use std::path::PathBuf;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("directory not found: {0}")]
    MissingDirectory(PathBuf),

    #[error("no frames in {0}")]
    NoFrames(PathBuf),

    #[error("cannot decode {path}: {source}")]
    Decode {
        path: PathBuf,
        #[source]
        source: image::ImageError,
    },

    #[error("mixed frame dimensions in {path}: expected {expected_w}x{expected_h}, got {got_w}x{got_h}")]
    MixedDimensions {
        path: PathBuf,
        expected_w: u32,
        expected_h: u32,
        got_w: u32,
        got_h: u32,
    },

    #[error("frame dimensions differ: {0}x{1} vs {2}x{3}")]
    DimensionMismatch(u32, u32, u32, u32),

    #[error("frame {0}x{1} smaller than one {2}x{2} patch")]
    FrameTooSmall(u32, u32, u32),

    #[error("invalid grid config: {0}")]
    InvalidGridConfig(String),

    #[error("locus ({0},{1}) puts the patch outside the frame")]
    LocusOutOfBounds(u32, u32),

    #[error("k-means needs at least {k} distinct descriptors, found {distinct}")]
    TooFewDistinct { k: usize, distinct: usize },

    #[error("descriptor dimension {got} does not match codebook dimension {expected}")]
    DescriptorDimMismatch { expected: usize, got: usize },

    #[error("word index {word} out of range for table of {k} words")]
    WordOutOfRange { word: usize, k: usize },

    #[error("word grids in a sequence must share dimensions")]
    GridShapeMismatch,

    #[error("empty word grid")]
    EmptyGrid,

    #[error("tracks must all have the same length")]
    TrackLengthMismatch,

    #[error("feature sets have mismatched dimensions: {0} vs {1}")]
    FeatureDimMismatch(usize, usize),

    #[error("empty feature set")]
    EmptyFeatureSet,

    #[error("empty gallery")]
    EmptyGallery,

    #[error("query uses {got} words but the gallery table has {expected}")]
    ModelKMismatch { expected: usize, got: usize },

    #[error("missing view {view} for object {object}")]
    MissingView { object: String, view: usize },

    #[error("bad model file {path}: {reason}")]
    BadModelFile { path: PathBuf, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
