/// Largest `x ≥ 0` with `x^e · den ≤ num`, computed exactly.
pub(crate) fn floor_root(num: u128, den: u128, e: u32) -> usize {
    let fits = |x: u128| {
        x.checked_pow(e)
            .and_then(|p| p.checked_mul(den))
            .is_some_and(|v| v <= num)
    };
    let (mut lo, mut hi) = (0u128, 1u128);
    while fits(hi) {
        lo = hi;
        hi *= 2;
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if fits(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo as usize
}

/// Generation-stamped membership marks; clearing is O(1).
#[derive(Debug, Default)]
pub(crate) struct Marks {
    stamp: Vec<u32>,
    generation: u32,
}

impl Marks {
    pub(crate) fn new(n: usize) -> Self {
        Marks {
            stamp: vec![0; n],
            generation: 1,
        }
    }

    pub(crate) fn clear(&mut self) {
        self.generation = self.generation.wrapping_add(1);
        if self.generation == 0 {
            self.stamp.fill(0);
            self.generation = 1;
        }
    }

    #[inline]
    pub(crate) fn mark(&mut self, v: usize) {
        self.stamp[v] = self.generation;
    }

    #[inline]
    pub(crate) fn is_marked(&self, v: usize) -> bool {
        self.stamp[v] == self.generation
    }
}
