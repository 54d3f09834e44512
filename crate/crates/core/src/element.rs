use std::fmt::Debug;
use std::hash::Hash;

/// An element of a concrete finite group (permutation, invertible matrix).
///
/// `Ord` is the canonical element order used for element ids and class
/// representatives.
pub trait GroupElement: Clone + Eq + Ord + Hash + Debug + Send + Sync {
    /// The product `self * other`.
    fn mul(&self, other: &Self) -> Self;

    fn inverse(&self) -> Self;

    /// The identity of the ambient group `self` lives in.
    fn identity_like(&self) -> Self;

    /// Degree, dimension or field descriptor. Generators of one group must agree.
    fn shape(&self) -> String;

    /// Human-readable rendering: cycle notation or bracketed rows.
    fn render(&self) -> String;

    fn commutes_with(&self, other: &Self) -> bool {
        self.mul(other) == other.mul(self)
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut acc = self.identity_like();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}
