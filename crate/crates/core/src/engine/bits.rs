/// Fixed-width vertex mask; `W` words cover `64 * W` vertices.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) struct Bits<const W: usize>([u64; W]);

impl<const W: usize> Bits<W> {
    pub const EMPTY: Self = Bits([0; W]);

    pub fn first_n(n: usize) -> Self {
        let mut b = Self::EMPTY;
        for v in 0..n {
            b.insert(v);
        }
        b
    }

    pub fn from_row(row: &[u64]) -> Self {
        let mut b = Self::EMPTY;
        b.0[..row.len()].copy_from_slice(row);
        b
    }

    pub fn single(v: usize) -> Self {
        let mut b = Self::EMPTY;
        b.insert(v);
        b
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0[v / 64] |= 1 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0[v / 64] &= !(1 << (v % 64));
    }

    #[cfg(test)]
    pub fn contains(&self, v: usize) -> bool {
        self.0[v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn and(self, o: Self) -> Self {
        let mut r = self;
        for i in 0..W {
            r.0[i] &= o.0[i];
        }
        r
    }

    #[inline]
    pub fn or(self, o: Self) -> Self {
        let mut r = self;
        for i in 0..W {
            r.0[i] |= o.0[i];
        }
        r
    }

    #[inline]
    pub fn and_not(self, o: Self) -> Self {
        let mut r = self;
        for i in 0..W {
            r.0[i] &= !o.0[i];
        }
        r
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self;
        std::iter::from_fn(move || {
            let v = rest.first()?;
            rest.remove(v);
            Some(v)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut a = Bits::<2>::first_n(70);
        assert_eq!(a.count(), 70);
        a.remove(0);
        assert_eq!(a.first(), Some(1));
        let b = Bits::<2>::single(69);
        assert!(a.and(b).contains(69));
        assert_eq!(a.and_not(b).count(), 68);
        assert_eq!(
            b.or(Bits::single(3)).iter().collect::<Vec<_>>(),
            vec![3, 69]
        );
        assert!(Bits::<1>::EMPTY.is_empty());
    }
}
