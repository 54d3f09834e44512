use std::fmt;

use crate::element::GroupElement;
use crate::error::{Error, Result};

/// A permutation of `{0, .., n-1}` stored as its image sequence.
///
/// Products act on the right: `(a * b)(x) = b(a(x))`, i.e. apply `a` first.
/// The derived ordering is lexicographic on the image sequence.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::Invalid(format!("{images:?} is not a bijection")));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of degree `n` from disjoint (or not) cycles,
    /// composed left to right.
    pub fn from_cycles(n: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut acc = Permutation::identity(n);
        for cycle in cycles {
            let mut seen = std::collections::HashSet::new();
            if !cycle.iter().all(|p| seen.insert(p)) {
                return Err(Error::Invalid(format!("repeated point in cycle {cycle:?}")));
            }
            let mut images: Vec<u32> = (0..n as u32).collect();
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a as usize >= n || b as usize >= n {
                    return Err(Error::Invalid(format!("point out of range in cycle {cycle:?}")));
                }
                images[a as usize] = b;
            }
            let c = Permutation::from_images(images)
                .map_err(|_| Error::Invalid(format!("repeated point in cycle {cycle:?}")))?;
            acc = acc.mul(&c);
        }
        Ok(acc)
    }

    /// Parses disjoint-cycle notation such as `(0 1)(2 3 4)` or `(0,1)`.
    /// `()` is the identity.
    pub fn parse_cycles(n: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        let mut cycles = Vec::new();
        let mut rest = text;
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {text:?}")))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in {text:?}")))?;
            let body = &open[..close];
            let points = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad point {s:?} in {text:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if !points.is_empty() {
                cycles.push(points);
            }
            rest = open[close + 1..].trim_start();
        }
        Permutation::from_cycles(n, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Orbits of `<self>` on the points, each listed in cycle order starting
    /// from its smallest point. Fixed points are length-one cycles.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x as u32);
                x = self.image(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths in weakly decreasing order (including fixed points).
    pub fn cycle_type(&self) -> Vec<u32> {
        let mut t: Vec<u32> = self.cycles().iter().map(|c| c.len() as u32).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().filter(|c| c.len() % 2 == 0).count() % 2 == 0
    }
}

impl GroupElement for Permutation {
    fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    fn inverse(&self) -> Self {
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u32;
        }
        Permutation { images }
    }

    fn identity_like(&self) -> Self {
        Permutation::identity(self.degree())
    }

    fn shape(&self) -> String {
        format!("Sym({})", self.degree())
    }

    fn render(&self) -> String {
        let s: String = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| {
                let pts: Vec<String> = c.iter().map(u32::to_string).collect();
                format!("({})", pts.join(" "))
            })
            .collect();
        if s.is_empty() {
            "()".to_string()
        } else {
            s
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
