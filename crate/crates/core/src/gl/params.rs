//! The rational-canonical-form parametrization of `GL_d(q)` classes.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::field::{FieldElem, GaloisField};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::quotient::is_prime;

/// Monic polynomial over `GF(q)`, coefficients low to high with leading 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonicPoly {
    coeffs: Vec<FieldElem>,
}

impl MonicPoly {
    pub fn new(mut coeffs: Vec<FieldElem>) -> Result<Self> {
        while coeffs.len() > 1 && coeffs.last() == Some(&FieldElem(0)) {
            coeffs.pop();
        }
        if coeffs.last() != Some(&FieldElem(1)) {
            return Err(Error::Invalid(format!("{coeffs:?} is not monic")));
        }
        Ok(MonicPoly { coeffs })
    }

    /// `t - a`.
    pub fn linear(field: &GaloisField, a: FieldElem) -> Self {
        MonicPoly {
            coeffs: vec![field.neg(a), FieldElem(1)],
        }
    }

    /// `t² + c t + e`.
    pub fn quadratic(c: FieldElem, e: FieldElem) -> Self {
        MonicPoly {
            coeffs: vec![e, c, FieldElem(1)],
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    /// `f(0)`.
    pub fn constant_term(&self) -> FieldElem {
        self.coeffs[0]
    }

    pub fn is_t(&self) -> bool {
        self.degree() == 1 && self.coeffs[0].0 == 0
    }
}

impl fmt::Display for MonicPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coeffs.iter().map(|x| x.0.to_string()).collect();
        write!(f, "[{}]", c.join(","))
    }
}

/// A partition `λ_f` for each monic irreducible `f ≠ t`, with
/// `Σ |λ_f| · deg f = d`. Irreducibility of the keys is the caller's
/// responsibility; degree one and two keys produced here are always checked.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GLClassParams {
    dim: usize,
    q: u32,
    assignment: BTreeMap<MonicPoly, Partition>,
}

impl GLClassParams {
    pub fn new(dim: usize, q: u32, assignment: BTreeMap<MonicPoly, Partition>) -> Result<Self> {
        if assignment.keys().any(MonicPoly::is_t) {
            return Err(Error::Invalid("f(t) = t cannot carry a partition".into()));
        }
        let total: usize = assignment
            .iter()
            .map(|(f, l)| l.size() as usize * f.degree())
            .sum();
        if total != dim {
            return Err(Error::Invalid(format!("Σ|λ_f|·deg f = {total}, expected {dim}")));
        }
        let assignment = assignment.into_iter().filter(|(_, l)| !l.is_empty()).collect();
        Ok(GLClassParams { dim, q, assignment })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn assignment(&self) -> &BTreeMap<MonicPoly, Partition> {
        &self.assignment
    }
}

impl Serialize for GLClassParams {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(self.assignment.len()))?;
        for (f, l) in &self.assignment {
            map.serialize_entry(&f.to_string(), &l.to_string())?;
        }
        map.end()
    }
}

/// `(-1)^d ∏_f f(0)^{|λ_f|}`.
pub fn class_determinant(field: &GaloisField, params: &GLClassParams) -> FieldElem {
    let sign = if params.dim.is_multiple_of(2) {
        field.one()
    } else {
        field.neg(field.one())
    };
    params.assignment.iter().fold(sign, |acc, (f, l)| {
        field.mul(acc, field.pow(f.constant_term(), l.size() as u64))
    })
}

/// Whether some prime `r | q - 1` divides every part of every `λ_f`, i.e.
/// whether the class splits on restriction to `SL_d(q)`.
pub fn gl_split_predicate(params: &GLClassParams) -> bool {
    let q1 = params.q as usize - 1;
    (2..=q1)
        .filter(|&r| q1.is_multiple_of(r) && is_prime(r))
        .any(|r| {
            params
                .assignment
                .values()
                .all(|l| l.parts().iter().all(|&a| (a as usize).is_multiple_of(r)))
        })
}
