use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition of `n`, used as the label of a conjugacy class of `S_n`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct CycleType {
    parts: Vec<usize>,
    n: usize,
}

impl CycleType {
    /// Validates that `parts` is weakly decreasing and positive.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        let n = parts.iter().sum();
        Ok(CycleType { parts, n })
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_parts_unsorted(mut parts: Vec<usize>) -> Self {
        debug_assert!(!parts.contains(&0));
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let n = parts.iter().sum();
        CycleType { parts, n }
    }

    /// The class of `n`-cycles.
    pub fn full_cycle(n: usize) -> Self {
        if n == 0 {
            return CycleType::identity(0);
        }
        CycleType { parts: vec![n], n }
    }

    /// The identity class `(1^n)`.
    pub fn identity(n: usize) -> Self {
        CycleType {
            parts: vec![1; n],
            n,
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `ℓ`, the number of parts equal to one.
    pub fn fixed_points(&self) -> usize {
        self.parts.iter().rev().take_while(|&&p| p == 1).count()
    }

    /// `0` for even classes, `1` for odd.
    pub fn parity(&self) -> usize {
        (self.n - self.parts.len()) % 2
    }

    pub fn is_odd(&self) -> bool {
        self.parity() == 1
    }

    /// `(i, m_i)` pairs for each distinct part `i`, largest first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }
}

impl Ord for CycleType {
    /// Size first, then reverse lexicographic on parts, so `(n)` comes first and `(1^n)` last.
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for CycleType {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<usize>> for CycleType {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        CycleType::new(parts)
    }
}

impl From<CycleType> for Vec<usize> {
    fn from(c: CycleType) -> Self {
        c.parts
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycleType{self}")
    }
}

/// Accepts `"3,1,1"`, `"(3,1,1)"`, `"3 1 1"` and exponent forms like `"3,1^2"`.
/// Parts may come in any order.
impl FromStr for CycleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut parts = Vec::new();
        for token in trimmed.split(|c: char| c == ',' || c.is_whitespace()) {
            if token.is_empty() {
                continue;
            }
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => (b, e),
                None => (token, "1"),
            };
            let part: usize = base
                .parse()
                .map_err(|_| Error::InvalidPartition(format!("bad part '{token}'")))?;
            let count: usize = exp
                .parse()
                .map_err(|_| Error::InvalidPartition(format!("bad exponent '{token}'")))?;
            if part == 0 {
                return Err(Error::InvalidPartition("parts must be positive".into()));
            }
            parts.extend(std::iter::repeat_n(part, count));
        }
        Ok(CycleType::from_parts_unsorted(parts))
    }
}

/// All partitions of `n`, in the same order as `CycleType`'s `Ord`: `(n)` first, `(1^n)` last.
pub fn partitions(n: usize) -> Vec<CycleType> {
    fn rec(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<CycleType>) {
        if remaining == 0 {
            out.push(CycleType::from_parts_unsorted(current.clone()));
            return;
        }
        for part in (1..=max.min(remaining)).rev() {
            current.push(part);
            rec(remaining - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariants() {
        let c = CycleType::new(vec![3, 2, 1, 1]).unwrap();
        assert_eq!(c.n(), 7);
        assert_eq!(c.fixed_points(), 2);
        assert_eq!(c.parity(), 1);
        assert_eq!(c.multiplicities(), vec![(3, 1), (2, 1), (1, 2)]);
        assert!(CycleType::new(vec![1, 2]).is_err());
        assert!(CycleType::new(vec![2, 0]).is_err());
    }

    #[test]
    fn parsing() {
        let c: CycleType = "1^3, 2".parse().unwrap();
        assert_eq!(c.parts(), &[2, 1, 1, 1]);
        assert_eq!("(3,3)".parse::<CycleType>().unwrap().to_string(), "(3,3)");
        assert!("3,x".parse::<CycleType>().is_err());
        assert!("0".parse::<CycleType>().is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=12).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
        let p4 = partitions(4);
        let mut sorted = p4.clone();
        sorted.sort();
        assert_eq!(p4, sorted);
        assert_eq!(p4[0].parts(), &[4]);
        assert_eq!(p4[4].parts(), &[1, 1, 1, 1]);
    }
}
