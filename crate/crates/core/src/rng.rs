//! Reproducible random streams.
//!
//! A stream is identified by `(master_seed, stream_id)`. The master seed keys a
//! ChaCha8 generator and the stream id selects one of its 2^64 independent
//! streams, so distinct ids never share output and the mapping does not depend
//! on thread scheduling.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone)]
pub struct RngStream {
    master_seed: u64,
    stream_id: u64,
    rng: ChaCha8Rng,
}

/// Derive the substream `stream_id` of `master`.
pub fn derive_stream(master: u64, stream_id: u64) -> RngStream {
    let mut rng = ChaCha8Rng::seed_from_u64(master);
    rng.set_stream(stream_id);
    RngStream {
        master_seed: master,
        stream_id,
        rng,
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

impl RngStream {
    pub fn new(master: u64) -> Self {
        derive_stream(master, 0)
    }

    pub fn master_seed(&self) -> u64 {
        self.master_seed
    }

    pub fn stream_id(&self) -> u64 {
        self.stream_id
    }

    /// Substream `id` of a family keyed by this stream's identity (not its
    /// current position). Used to hand one stream per replicate to workers.
    pub fn substream(&self, id: u64) -> RngStream {
        let key = splitmix64(self.master_seed ^ splitmix64(self.stream_id.wrapping_add(1)));
        derive_stream(key, id)
    }
}

impl RngCore for RngStream {
    fn next_u32(&mut self) -> u32 {
        self.rng.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    fn fill_bytes(&mut self, dst: &mut [u8]) {
        self.rng.fill_bytes(dst)
    }
}
