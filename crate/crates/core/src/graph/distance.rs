use std::fmt;

/// Shortest-path length, or `INFINITE` when no path exists.
///
/// Addition saturates to `INFINITE`, so sums of distances can be compared
/// without special-casing unreachable vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Distance(u64);

impl Distance {
    pub const ZERO: Distance = Distance(0);
    pub const INFINITE: Distance = Distance(u64::MAX);

    /// Panics if `value` collides with the infinity sentinel.
    pub fn finite(value: u64) -> Distance {
        assert!(value != u64::MAX, "u64::MAX is reserved for Distance::INFINITE");
        Distance(value)
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.0 != u64::MAX
    }

    #[inline]
    pub fn is_infinite(self) -> bool {
        self.0 == u64::MAX
    }

    /// The finite value, or `None` for infinity.
    #[inline]
    pub fn value(self) -> Option<u64> {
        self.is_finite().then_some(self.0)
    }

    /// Raw representation with `u64::MAX` for infinity.
    #[inline]
    pub fn raw(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn plus(self, w: u64) -> Distance {
        if self.is_infinite() {
            return self;
        }
        match self.0.checked_add(w) {
            Some(s) => Distance(s),
            None => Distance::INFINITE,
        }
    }

    #[inline]
    pub fn add(self, other: Distance) -> Distance {
        if other.is_infinite() {
            Distance::INFINITE
        } else {
            self.plus(other.0)
        }
    }

    /// True when the distance is finite and at most `bound`.
    #[inline]
    pub fn within(self, bound: u64) -> bool {
        self.is_finite() && self.0 <= bound
    }
}

impl From<u64> for Distance {
    fn from(value: u64) -> Self {
        Distance(value)
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            Some(v) => write!(f, "{v}"),
            None => f.write_str("inf"),
        }
    }
}
