use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::field::{FieldElem, GaloisField};
use crate::element::GroupElement;
use crate::error::{Error, Result};

/// A square matrix over `GF(q)`. Ordering is row-major lexicographic on the
/// entry encodings; the field is assumed shared by all compared matrices.
#[derive(Clone)]
pub struct MatrixElem {
    dim: usize,
    entries: Vec<FieldElem>,
    field: Arc<GaloisField>,
}

impl MatrixElem {
    pub fn new(field: &Arc<GaloisField>, dim: usize, entries: Vec<FieldElem>) -> Result<Self> {
        if entries.len() != dim * dim || entries.iter().any(|e| e.0 >= field.order()) {
            return Err(Error::Invalid(format!("bad {dim}x{dim} matrix entries {entries:?}")));
        }
        Ok(MatrixElem {
            dim,
            entries,
            field: field.clone(),
        })
    }

    /// Builds from rows of integer encodings.
    pub fn from_rows(field: &Arc<GaloisField>, rows: &[&[u32]]) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Invalid("matrix is not square".into()));
        }
        let entries = rows.iter().flat_map(|r| r.iter().map(|&x| FieldElem(x))).collect();
        MatrixElem::new(field, dim, entries)
    }

    pub fn identity(field: &Arc<GaloisField>, dim: usize) -> Self {
        MatrixElem::scalar(field, dim, field.one())
    }

    pub fn scalar(field: &Arc<GaloisField>, dim: usize, a: FieldElem) -> Self {
        let mut entries = vec![field.zero(); dim * dim];
        (0..dim).for_each(|i| entries[i * dim + i] = a);
        MatrixElem {
            dim,
            entries,
            field: field.clone(),
        }
    }

    pub fn diag(field: &Arc<GaloisField>, a: FieldElem, b: FieldElem) -> Self {
        MatrixElem {
            dim: 2,
            entries: vec![a, field.zero(), field.zero(), b],
            field: field.clone(),
        }
    }

    /// Companion matrix `[[0, -e], [1, -c]]` of `t² + c t + e`.
    pub fn companion(field: &Arc<GaloisField>, c: FieldElem, e: FieldElem) -> Self {
        MatrixElem {
            dim: 2,
            entries: vec![field.zero(), field.neg(e), field.one(), field.neg(c)],
            field: field.clone(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> &Arc<GaloisField> {
        &self.field
    }

    pub fn entries(&self) -> &[FieldElem] {
        &self.entries
    }

    pub fn at(&self, i: usize, j: usize) -> FieldElem {
        self.entries[i * self.dim + j]
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = &self.field;
        MatrixElem {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
            field: f.clone(),
        }
    }

    pub fn scale(&self, a: FieldElem) -> Self {
        let f = &self.field;
        MatrixElem {
            dim: self.dim,
            entries: self.entries.iter().map(|&x| f.mul(a, x)).collect(),
            field: f.clone(),
        }
    }

    pub fn trace(&self) -> FieldElem {
        (0..self.dim).fold(self.field.zero(), |acc, i| self.field.add(acc, self.at(i, i)))
    }

    pub fn is_scalar(&self) -> bool {
        let a = self.at(0, 0);
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.at(i, j) == if i == j { a } else { self.field.zero() }))
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> FieldElem {
        let f = &self.field;
        let n = self.dim;
        let mut a = self.entries.clone();
        let mut det = f.one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| a[r * n + col].0 != 0) else {
                return f.zero();
            };
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                }
                det = f.neg(det);
            }
            let pv = a[col * n + col];
            det = f.mul(det, pv);
            let pinv = f.inv(pv).expect("nonzero pivot");
            for r in col + 1..n {
                let factor = f.mul(a[r * n + col], pinv);
                if factor.0 == 0 {
                    continue;
                }
                for j in col..n {
                    let v = f.mul(factor, a[col * n + j]);
                    a[r * n + j] = f.sub(a[r * n + j], v);
                }
            }
        }
        det
    }

    fn try_inverse(&self) -> Option<Self> {
        let f = &self.field;
        let n = self.dim;
        let mut a = self.entries.clone();
        let mut inv = MatrixElem::identity(f, n).entries;
        for col in 0..n {
            let pivot = (col..n).find(|&r| a[r * n + col].0 != 0)?;
            for j in 0..n {
                a.swap(pivot * n + j, col * n + j);
                inv.swap(pivot * n + j, col * n + j);
            }
            let pinv = f.inv(a[col * n + col])?;
            for j in 0..n {
                a[col * n + j] = f.mul(a[col * n + j], pinv);
                inv[col * n + j] = f.mul(inv[col * n + j], pinv);
            }
            for r in 0..n {
                if r == col || a[r * n + col].0 == 0 {
                    continue;
                }
                let factor = a[r * n + col];
                for j in 0..n {
                    a[r * n + j] = f.sub(a[r * n + j], f.mul(factor, a[col * n + j]));
                    inv[r * n + j] = f.sub(inv[r * n + j], f.mul(factor, inv[col * n + j]));
                }
            }
        }
        Some(MatrixElem {
            dim: n,
            entries: inv,
            field: f.clone(),
        })
    }
}

impl PartialEq for MatrixElem {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.entries == other.entries
    }
}

impl Eq for MatrixElem {}

impl PartialOrd for MatrixElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MatrixElem {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.dim, &self.entries).cmp(&(other.dim, &other.entries))
    }
}

impl Hash for MatrixElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.dim.hash(state);
        self.entries.hash(state);
    }
}

impl GroupElement for MatrixElem {
    fn mul(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.dim;
        let mut entries = vec![f.zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = f.zero();
                for k in 0..n {
                    acc = f.add(acc, f.mul(self.entries[i * n + k], other.entries[k * n + j]));
                }
                entries[i * n + j] = acc;
            }
        }
        MatrixElem {
            dim: n,
            entries,
            field: f.clone(),
        }
    }

    fn inverse(&self) -> Self {
        self.try_inverse().expect("group elements are invertible")
    }

    fn identity_like(&self) -> Self {
        MatrixElem::identity(&self.field, self.dim)
    }

    fn shape(&self) -> String {
        format!("GL{}({})", self.dim, self.field.order())
    }

    fn render(&self) -> String {
        let rows: Vec<String> = (0..self.dim)
            .map(|i| {
                let r: Vec<String> = (0..self.dim).map(|j| self.at(i, j).to_string()).collect();
                format!("[{}]", r.join(","))
            })
            .collect();
        format!("[{}]", rows.join(","))
    }
}

impl fmt::Debug for MatrixElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_inverse_render() {
        let f = Arc::new(GaloisField::new(5, 1).unwrap());
        let m = MatrixElem::from_rows(&f, &[&[1, 2], &[3, 4]]).unwrap();
        // 4 - 6 = -2 = 3 mod 5
        assert_eq!(m.det(), FieldElem(3));
        assert_eq!(m.mul(&m.inverse()), MatrixElem::identity(&f, 2));
        assert_eq!(m.render(), "[[1,2],[3,4]]");
        let c = MatrixElem::companion(&f, FieldElem(1), FieldElem(2));
        assert_eq!(c.det(), FieldElem(2));
        assert_eq!(c.trace(), FieldElem(4));
        assert!(MatrixElem::scalar(&f, 2, FieldElem(3)).is_scalar());
        assert!(!m.is_scalar());
    }

    #[test]
    fn det_multiplicative_gf9() {
        let f = Arc::new(GaloisField::of_order(9).unwrap());
        let mats: Vec<MatrixElem> = (0..9u32.pow(4))
            .step_by(37)
            .map(|x| {
                let e = (0..4).map(|i| FieldElem(x / 9u32.pow(i) % 9)).collect();
                MatrixElem::new(&f, 2, e).unwrap()
            })
            .collect();
        for a in &mats {
            for b in &mats {
                assert_eq!(a.mul(b).det(), f.mul(a.det(), b.det()));
            }
        }
    }

    #[test]
    fn rejects_bad_shapes() {
        let f = Arc::new(GaloisField::new(3, 1).unwrap());
        assert!(MatrixElem::from_rows(&f, &[&[1, 2], &[0]]).is_err());
        assert!(MatrixElem::from_rows(&f, &[&[3]]).is_err());
    }
}
