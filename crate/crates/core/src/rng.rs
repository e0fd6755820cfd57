//! Deterministic random streams.
//!
//! Every stream is a ChaCha8 generator keyed by a 64-bit seed and a 64-bit
//! stream id. Unit draws are built from the top 53 bits of one `u64`, so the
//! sequence is identical on every platform.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

const UNIT_SCALE: f64 = 1.0 / (1u64 << 53) as f64;

#[derive(Debug, Clone)]
pub struct RngStream {
    seed: u64,
    stream: u64,
    inner: ChaCha8Rng,
}

impl RngStream {
    pub fn new(seed: u64) -> Self {
        Self::with_stream(seed, 0)
    }

    pub fn with_stream(seed: u64, stream: u64) -> Self {
        let mut inner = ChaCha8Rng::seed_from_u64(seed);
        inner.set_stream(stream);
        Self { seed, stream, inner }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn stream(&self) -> u64 {
        self.stream
    }

    /// Independent stream sharing this stream's seed, addressed by `label`.
    /// Forking does not advance `self`.
    pub fn fork(&self, label: u64) -> Self {
        Self::with_stream(self.seed, splitmix64(self.stream ^ splitmix64(label)))
    }

    /// Uniform draw from `[0, 1)`.
    pub fn unit(&mut self) -> f64 {
        (self.inner.next_u64() >> 11) as f64 * UNIT_SCALE
    }

    /// Uniform draw from `[a, b)`.
    pub fn uniform(&mut self, a: f64, b: f64) -> Result<f64> {
        if !(a < b) {
            return Err(Error::InvalidRange { lower: a, upper: b });
        }
        Ok(scale_unit(self.unit(), a, b))
    }
}

/// Maps `u` in `[0, 1)` onto `[a, b)`; `a < b` is assumed.
pub(crate) fn scale_unit(u: f64, a: f64, b: f64) -> f64 {
    let v = a + (b - a) * u;
    // rounding can land exactly on `b` when |a| dwarfs the width
    if v >= b {
        b.next_down()
    } else {
        v
    }
}

/// SplitMix64 finalizer.
pub fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
