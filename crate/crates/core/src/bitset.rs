//! Small helpers for vertex sets packed into a `u64`.

pub type VertexSet = u64;

/// Iterates the members of `set` in increasing order.
pub fn members(mut set: VertexSet) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let v = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(v)
        }
    })
}

pub fn from_members<I: IntoIterator<Item = usize>>(items: I) -> VertexSet {
    items.into_iter().fold(0, |acc, v| acc | (1 << v))
}

#[inline]
pub fn bit(v: usize) -> VertexSet {
    1u64 << v
}

/// The set `{0, .., n-1}`.
#[inline]
pub fn full(n: usize) -> VertexSet {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub fn len(set: VertexSet) -> usize {
    set.count_ones() as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn members_round_trip() {
        let s = from_members([0, 3, 5, 63]);
        assert_eq!(members(s).collect::<Vec<_>>(), vec![0, 3, 5, 63]);
        assert_eq!(len(s), 4);
        assert_eq!(full(0), 0);
        assert_eq!(full(64), u64::MAX);
    }
}
