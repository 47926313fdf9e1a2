use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seedable random source for generators and sampling.
///
/// Backed by ChaCha8 so that streams are identical across platforms and
/// releases. [`Rng::for_case`] derives an independent stream per case index,
/// which lets any single case be regenerated from `(seed, index)` alone.
#[derive(Clone, Debug)]
pub struct Rng {
    seed: u64,
    inner: ChaCha8Rng,
}

impl Rng {
    pub fn seed_from(seed: u64) -> Self {
        Rng {
            seed,
            inner: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn for_case(seed: u64, index: u64) -> Self {
        let mut inner = ChaCha8Rng::seed_from_u64(seed);
        // stream 0 is the root stream
        inner.set_stream(index.wrapping_add(1));
        Rng { seed, inner }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

impl RngCore for Rng {
    fn next_u32(&mut self) -> u32 {
        self.inner.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    fn fill_bytes(&mut self, dst: &mut [u8]) {
        self.inner.fill_bytes(dst)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng as _;

    #[test]
    fn same_seed_same_stream() {
        let mut a = Rng::seed_from(137);
        let mut b = Rng::seed_from(137);
        let xs: Vec<u64> = (0..100).map(|_| a.next_u64()).collect();
        let ys: Vec<u64> = (0..100).map(|_| b.next_u64()).collect();
        assert_eq!(xs, ys);
    }

    #[test]
    fn case_streams_are_distinct_and_reproducible() {
        let a: f64 = Rng::for_case(1, 0).random();
        let b: f64 = Rng::for_case(1, 1).random();
        let c: f64 = Rng::for_case(1, 0).random();
        assert_ne!(a, b);
        assert_eq!(a, c);
        let root: f64 = Rng::seed_from(1).random();
        assert_ne!(root, a);
    }
}
