//! Unipotent classes `(3,1)` and `(2²)` of `GL₄(2)`: they commute, yet no
//! cyclic subalgebra of `Mat₄(2)` meets both.

use serde::Serialize;

use crate::error::Result;
#[allow(unused_imports)]
use crate::par::prelude::*;
use crate::par::into_iter_of;
use crate::partitions::Partition;

/// A `4×4` matrix over `GF(2)`; bit `4i + j` holds entry `(i, j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gf2Mat4(pub u16);

impl Gf2Mat4 {
    pub const IDENTITY: Gf2Mat4 = Gf2Mat4(0b1000_0100_0010_0001);
    pub const ZERO: Gf2Mat4 = Gf2Mat4(0);

    pub fn from_rows(rows: [[u8; 4]; 4]) -> Self {
        let mut bits = 0u16;
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v & 1 == 1 {
                    bits |= 1 << (4 * i + j);
                }
            }
        }
        Gf2Mat4(bits)
    }

    fn row(self, i: usize) -> u16 {
        (self.0 >> (4 * i)) & 0xF
    }

    pub fn rank(self) -> u32 {
        let mut rows: Vec<u16> = (0..4).map(|i| self.row(i)).collect();
        let mut rank = 0;
        for bit in 0..4 {
            if let Some(p) = (rank..4).find(|&r| rows[r] >> bit & 1 == 1) {
                rows.swap(rank, p);
                for r in 0..4 {
                    if r != rank && rows[r] >> bit & 1 == 1 {
                        rows[r] ^= rows[rank];
                    }
                }
                rank += 1;
            }
        }
        rank as u32
    }

    /// Jordan type of a unipotent matrix; `None` when `self - I` is not nilpotent.
    pub fn unipotent_type(self) -> Option<Partition> {
        let n = self + Gf2Mat4::IDENTITY;
        let mut ranks = vec![4u32];
        let mut power = Gf2Mat4::IDENTITY;
        for _ in 0..4 {
            power = power * n;
            ranks.push(power.rank());
        }
        if ranks[4] != 0 {
            return None;
        }
        // blocks of size ≥ k: ranks[k-1] - ranks[k]
        let at_least: Vec<u32> = (1..=4).map(|k| ranks[k - 1] - ranks[k]).collect();
        let mut parts = Vec::new();
        for k in (1..=4).rev() {
            let exact = at_least[k - 1] - at_least.get(k).copied().unwrap_or(0);
            parts.extend(std::iter::repeat_n(k as u32, exact as usize));
        }
        Some(Partition::new(parts).expect("block sizes are decreasing"))
    }

    /// `{a₀ I + a₁ Z + a₂ Z² + a₃ Z³}`, the subalgebra generated by `self`.
    pub fn cyclic_algebra(self) -> Vec<Gf2Mat4> {
        let powers = [Gf2Mat4::IDENTITY, self, self * self, self * self * self];
        let mut out: Vec<Gf2Mat4> = (0u8..16)
            .map(|mask| {
                (0..4)
                    .filter(|i| mask >> i & 1 == 1)
                    .fold(Gf2Mat4::ZERO, |acc, i| acc + powers[i])
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn render(self) -> String {
        let rows: Vec<String> = (0..4)
            .map(|i| {
                let r: Vec<String> = (0..4).map(|j| (self.0 >> (4 * i + j) & 1).to_string()).collect();
                format!("[{}]", r.join(","))
            })
            .collect();
        format!("[{}]", rows.join(","))
    }
}

/// Jordan form `J₃ ⊕ J₁`.
impl std::ops::Mul for Gf2Mat4 {
    type Output = Gf2Mat4;

    fn mul(self, other: Gf2Mat4) -> Gf2Mat4 {
        let mut out = 0u16;
        for i in 0..4 {
            let mut r = 0u16;
            for k in 0..4 {
                if self.0 >> (4 * i + k) & 1 == 1 {
                    r ^= other.row(k);
                }
            }
            out |= r << (4 * i);
        }
        Gf2Mat4(out)
    }
}

impl std::ops::Add for Gf2Mat4 {
    type Output = Gf2Mat4;

    // entrywise addition mod 2
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, other: Gf2Mat4) -> Gf2Mat4 {
        Gf2Mat4(self.0 ^ other.0)
    }
}

pub fn jordan_31() -> Gf2Mat4 {
    Gf2Mat4::from_rows([[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
}

/// Jordan form `J₂ ⊕ J₂`.
pub fn jordan_22() -> Gf2Mat4 {
    Gf2Mat4::from_rows([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 1], [0, 0, 0, 1]])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclicScan {
    pub z_checked: usize,
    pub algebras_meeting_both: usize,
    pub first_witness: Option<String>,
}

/// Scans every `Z ∈ Mat₄(2)` for a cyclic algebra `GF(2)[Z]` containing
/// elements of both unipotent classes.
pub fn cyclic_algebra_scan(a: &Partition, b: &Partition) -> CyclicScan {
    let types: Vec<Option<Partition>> = (0..=u16::MAX).map(|m| Gf2Mat4(m).unipotent_type()).collect();
    let hits: Vec<u16> = into_iter_of!(0..=u16::MAX)
        .filter(|&z| {
            let alg = Gf2Mat4(z).cyclic_algebra();
            let has = |t: &Partition| alg.iter().any(|m| types[m.0 as usize].as_ref() == Some(t));
            has(a) && has(b)
        })
        .collect();
    CyclicScan {
        z_checked: 1 << 16,
        algebras_meeting_both: hits.len(),
        first_witness: hits.iter().min().map(|&z| Gf2Mat4(z).render()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Gl4Report {
    pub x: String,
    /// Smallest `Y` of type `(2²)` commuting with `x = J₃ ⊕ J₁`.
    pub commuting_y: Option<String>,
    pub scan: CyclicScan,
    /// The same scan for `(3,1)` against itself.
    pub control: CyclicScan,
}

pub fn gl4_counterexample() -> Result<Gl4Report> {
    let x = jordan_31();
    let t31: Partition = "3+1".parse()?;
    let t22: Partition = "2+2".parse()?;
    let commuting_y = (0..=u16::MAX)
        .map(Gf2Mat4)
        .find(|&y| y.unipotent_type().as_ref() == Some(&t22) && x * y == y * x)
        .map(Gf2Mat4::render);
    Ok(Gl4Report {
        x: x.render(),
        commuting_y,
        scan: cyclic_algebra_scan(&t31, &t22),
        control: cyclic_algebra_scan(&t31, &t31),
    })
}
