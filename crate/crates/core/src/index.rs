use std::fmt;

/// Exponent vector in `Z₀ⁿ`.
///
/// Ordering is lexicographic on the entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(entries: Vec<u32>) -> Self {
        MultiIndex(entries)
    }

    pub fn zeros(n: usize) -> Self {
        MultiIndex(vec![0; n])
    }

    /// `ε_i`, the unit vector with a one in slot `i`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        MultiIndex(v)
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    /// `||α|| = Σ α_i`.
    pub fn total(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        debug_assert_eq!(self.arity(), other.arity());
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self − other`, or `None` if some entry would go negative.
    pub fn checked_sub(&self, other: &MultiIndex) -> Option<MultiIndex> {
        debug_assert_eq!(self.arity(), other.arity());
        self.0.iter().zip(&other.0).map(|(a, b)| a.checked_sub(*b)).collect::<Option<Vec<_>>>().map(MultiIndex)
    }

    /// Componentwise `≤`.
    pub fn divides(&self, other: &MultiIndex) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn min(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    /// Signed difference `self − other ∈ Zⁿ`.
    pub fn diff(&self, other: &MultiIndex) -> Vec<i64> {
        self.0.iter().zip(&other.0).map(|(a, b)| i64::from(*a) - i64::from(*b)).collect()
    }

    /// Every `γ` with `0 ≤ γ ≤ self` componentwise, in lexicographic order.
    pub fn box_below(&self) -> BoxIter {
        BoxIter { bound: self.0.clone(), cur: Some(vec![0; self.0.len()]) }
    }
}

impl From<Vec<u32>> for MultiIndex {
    fn from(v: Vec<u32>) -> Self {
        MultiIndex(v)
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

pub struct BoxIter {
    bound: Vec<u32>,
    cur: Option<Vec<u32>>,
}

impl Iterator for BoxIter {
    type Item = MultiIndex;

    fn next(&mut self) -> Option<MultiIndex> {
        let out = self.cur.clone()?;
        let mut next = out.clone();
        let mut i = next.len();
        loop {
            if i == 0 {
                self.cur = None;
                break;
            }
            i -= 1;
            if next[i] < self.bound[i] {
                next[i] += 1;
                self.cur = Some(next);
                break;
            }
            next[i] = 0;
        }
        Some(MultiIndex(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn box_enumeration() {
        let b: Vec<_> = MultiIndex::new(vec![1, 2]).box_below().collect();
        assert_eq!(b.len(), 6);
        assert_eq!(b[0], MultiIndex::new(vec![0, 0]));
        assert_eq!(b[5], MultiIndex::new(vec![1, 2]));
        assert_eq!(MultiIndex::zeros(3).box_below().count(), 1);
        assert_eq!(MultiIndex::zeros(0).box_below().count(), 1);
    }

    #[test]
    fn sub_and_diff() {
        let a = MultiIndex::new(vec![2, 1]);
        let b = MultiIndex::new(vec![1, 3]);
        assert_eq!(a.checked_sub(&b), None);
        assert_eq!(a.diff(&b), vec![1, -2]);
        assert_eq!(a.add(&b), MultiIndex::new(vec![3, 4]));
        assert!(MultiIndex::new(vec![1, 1]).divides(&a));
    }
}
