//! Frame loading and image-space distances.
//!
//! Sequences live on disk as directories of equally sized PNG or PGM files;
//! frame order is the lexicographic file-name order (zero-padded numbering,
//! e.g. `frame_0004.png`). Color input is reduced to luminance with the
//! BT.601 weights.

use std::path::Path;

use image::ImageReader;
use rayon::prelude::*;

use crate::error::{Error, Result};

/// A single luminance frame, row-major, intensities in `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Frame {
    width: u32,
    height: u32,
    luma: Vec<f32>,
}

impl Frame {
    pub fn new(width: u32, height: u32, luma: Vec<f32>) -> Self {
        assert_eq!(luma.len(), width as usize * height as usize);
        debug_assert!(luma.iter().all(|v| (0.0..=1.0).contains(v)));
        Frame { width, height, luma }
    }

    pub fn filled(width: u32, height: u32, value: f32) -> Self {
        Frame::new(width, height, vec![value; width as usize * height as usize])
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn luma(&self) -> &[f32] {
        &self.luma
    }

    #[inline]
    pub fn at(&self, x: u32, y: u32) -> f32 {
        self.luma[y as usize * self.width as usize + x as usize]
    }

    /// Sample with coordinates clamped to the frame (replicated edges).
    #[inline]
    pub fn at_clamped(&self, x: i64, y: i64) -> f32 {
        let x = x.clamp(0, self.width as i64 - 1) as u32;
        let y = y.clamp(0, self.height as i64 - 1) as u32;
        self.at(x, y)
    }

    pub fn same_dims(&self, other: &Frame) -> bool {
        self.width == other.width && self.height == other.height
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    Gallery,
    Query,
}

/// An ordered list of equally sized frames with an identity label.
#[derive(Debug, Clone)]
pub struct VideoSequence {
    pub id: String,
    pub frames: Vec<Frame>,
    pub role: Role,
}

impl VideoSequence {
    pub fn new(id: impl Into<String>, frames: Vec<Frame>, role: Role) -> Self {
        assert!(!frames.is_empty(), "a sequence needs at least one frame");
        assert!(
            frames.windows(2).all(|w| w[0].same_dims(&w[1])),
            "all frames must share dimensions"
        );
        VideoSequence { id: id.into(), frames, role }
    }

    pub fn width(&self) -> u32 {
        self.frames[0].width()
    }

    pub fn height(&self) -> u32 {
        self.frames[0].height()
    }
}

/// Per-pixel boolean raster, same shape as the frame it belongs to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mask {
    width: u32,
    height: u32,
    data: Vec<bool>,
}

impl Mask {
    pub fn new(width: u32, height: u32, data: Vec<bool>) -> Self {
        assert_eq!(data.len(), width as usize * height as usize);
        Mask { width, height, data }
    }

    pub fn filled(width: u32, height: u32, value: bool) -> Self {
        Mask::new(width, height, vec![value; width as usize * height as usize])
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    #[inline]
    pub fn get(&self, x: u32, y: u32) -> bool {
        self.data[y as usize * self.width as usize + x as usize]
    }

    #[inline]
    pub fn set(&mut self, x: u32, y: u32, value: bool) {
        self.data[y as usize * self.width as usize + x as usize] = value;
    }

    pub fn data(&self) -> &[bool] {
        &self.data
    }

    pub fn count_true(&self) -> usize {
        self.data.iter().filter(|&&b| b).count()
    }

    /// Intersection-over-union against another mask of the same shape.
    pub fn iou(&self, other: &Mask) -> f64 {
        assert!(self.width == other.width && self.height == other.height);
        let mut inter = 0usize;
        let mut union = 0usize;
        for (a, b) in self.data.iter().zip(&other.data) {
            inter += (*a && *b) as usize;
            union += (*a || *b) as usize;
        }
        if union == 0 {
            1.0
        } else {
            inter as f64 / union as f64
        }
    }

    /// Write as a binary PGM (255 = inside).
    pub fn save_pgm(&self, path: &Path) -> Result<()> {
        let bytes: Vec<u8> = self.data.iter().map(|&b| if b { 255 } else { 0 }).collect();
        image::save_buffer(
            path,
            &bytes,
            self.width,
            self.height,
            image::ColorType::L8,
        )
        .map_err(|source| Error::Decode { path: path.to_path_buf(), source })?;
        Ok(())
    }
}

/// BT.601 luminance of an 8-bit RGB pixel, exact 1.0 for pure white.
#[inline]
pub fn luma_of_rgb(r: u8, g: u8, b: u8) -> f32 {
    (299u32 * r as u32 + 587 * g as u32 + 114 * b as u32) as f32 / 255_000.0
}

fn decode_frame(path: &Path) -> Result<Frame> {
    let img = ImageReader::open(path)
        .map_err(|e| Error::Decode { path: path.to_path_buf(), source: image::ImageError::IoError(e) })?
        .decode()
        .map_err(|source| Error::Decode { path: path.to_path_buf(), source })?;
    let rgb = img.to_rgb8();
    let (width, height) = rgb.dimensions();
    let luma = rgb
        .pixels()
        .map(|p| luma_of_rgb(p.0[0], p.0[1], p.0[2]))
        .collect();
    Ok(Frame::new(width, height, luma))
}

fn is_image_file(path: &Path) -> bool {
    matches!(
        path.extension().and_then(|e| e.to_str()).map(|e| e.to_ascii_lowercase()),
        Some(ref e) if e == "png" || e == "pgm" || e == "pnm" || e == "ppm"
    )
}

/// Load a sequence from a directory of image files, in file-name order.
pub fn load_sequence(dir: &Path, role: Role) -> Result<VideoSequence> {
    if !dir.is_dir() {
        return Err(Error::MissingDirectory(dir.to_path_buf()));
    }
    let mut paths: Vec<_> = std::fs::read_dir(dir)?
        .collect::<std::io::Result<Vec<_>>>()?
        .into_iter()
        .map(|e| e.path())
        .filter(|p| p.is_file() && is_image_file(p))
        .collect();
    paths.sort();
    if paths.is_empty() {
        return Err(Error::NoFrames(dir.to_path_buf()));
    }

    // Decoding is pure per file; results are merged back in path order.
    let frames = paths
        .par_iter()
        .map(|p| decode_frame(p))
        .collect::<Result<Vec<_>>>()?;

    let (w, h) = (frames[0].width(), frames[0].height());
    for (frame, path) in frames.iter().zip(&paths) {
        if frame.width() != w || frame.height() != h {
            return Err(Error::MixedDimensions {
                path: path.clone(),
                expected_w: w,
                expected_h: h,
                got_w: frame.width(),
                got_h: frame.height(),
            });
        }
    }

    let id = dir
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| dir.display().to_string());
    Ok(VideoSequence::new(id, frames, role))
}

/// Normalized image-space distance `‖a − b‖ / ‖a‖` (L2 over intensities).
///
/// Asymmetric in its arguments. An all-zero `a` yields `+inf` unless `b`
/// is also all-zero, in which case the distance is 0.
pub fn frame_distance(a: &Frame, b: &Frame) -> Result<f64> {
    if !a.same_dims(b) {
        return Err(Error::DimensionMismatch(a.width(), a.height(), b.width(), b.height()));
    }
    let mut diff_sq = 0.0f64;
    let mut norm_sq = 0.0f64;
    for (&va, &vb) in a.luma().iter().zip(b.luma()) {
        let d = va as f64 - vb as f64;
        diff_sq += d * d;
        norm_sq += va as f64 * va as f64;
    }
    if norm_sq == 0.0 {
        return Ok(if diff_sq == 0.0 { 0.0 } else { f64::INFINITY });
    }
    Ok((diff_sq / norm_sq).sqrt())
}
