use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::permcore::CycleType;

/// A bijection on the dart set `{0, …, n-1}`.
///
/// Products are read left to right: `p.compose(&q)` sends `x` to `q(p(x))`.
/// Cycle notation uses 1-based symbols, matching how maps are written by hand.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    /// Builds a permutation from its image array, checking bijectivity.
    pub fn from_image(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for (x, &y) in image.iter().enumerate() {
            if y >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image of {x} is {y}, outside 0..{n}"
                )));
            }
            if seen[y] {
                return Err(Error::InvalidPermutation(format!("{y} is hit twice")));
            }
            seen[y] = true;
        }
        Ok(Permutation { image })
    }

    /// Trusted constructor for internal callers that build bijections by construction.
    pub(crate) fn from_image_unchecked(image: Vec<usize>) -> Self {
        debug_assert!(Permutation::from_image(image.clone()).is_ok());
        Permutation { image }
    }

    /// Builds a permutation from 0-based cycles; symbols not mentioned are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut image: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= n {
                    return Err(Error::NotASubset {
                        dart: x,
                        domain_size: n,
                    });
                }
                if seen[x] {
                    return Err(Error::InvalidPermutation(format!(
                        "symbol {} appears twice",
                        x + 1
                    )));
                }
                seen[x] = true;
                image[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { image })
    }

    /// Parses 1-based cycle notation such as `"(1 3 2)(4 6)"` on `n` symbols.
    pub fn parse_cycles(s: &str, n: usize) -> Result<Self> {
        let cycles = parse_cycle_list(s)?;
        Permutation::from_cycles(n, &cycles)
    }

    #[inline]
    pub fn domain_size(&self) -> usize {
        self.image.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn into_image(self) -> Vec<usize> {
        self.image
    }

    /// Left-to-right product: `(self · other)(x) = other(self(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.domain_size() != other.domain_size() {
            return Err(Error::DomainMismatch {
                left: self.domain_size(),
                right: other.domain_size(),
            });
        }
        Ok(Permutation {
            image: self.image.iter().map(|&y| other.image[y]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.image.len()];
        for (x, &y) in self.image.iter().enumerate() {
            inv[y] = x;
        }
        Permutation { image: inv }
    }

    /// `τ p τ⁻¹` in left-to-right convention, i.e. the permutation sending `τ(x)` to `τ(p(x))`.
    ///
    /// With left-to-right products, `τ⁻¹ · p · τ` is the relabelling of `p` by `τ`.
    pub fn relabel(&self, tau: &Permutation) -> Result<Permutation> {
        if self.domain_size() != tau.domain_size() {
            return Err(Error::DomainMismatch {
                left: self.domain_size(),
                right: tau.domain_size(),
            });
        }
        let mut image = vec![0; self.image.len()];
        for (x, &y) in self.image.iter().enumerate() {
            image[tau.image[x]] = tau.image[y];
        }
        Ok(Permutation { image })
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(x, &y)| x == y)
    }

    pub fn is_involution(&self) -> bool {
        self.image
            .iter()
            .enumerate()
            .all(|(x, &y)| self.image[y] == x)
    }

    /// Disjoint cycles, each starting at its smallest symbol, ordered by that symbol.
    /// Fixed points appear as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.image.len();
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
                cycle.push(x);
                x = self.image[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Lengths of all cycles, in order of their smallest symbol.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.image.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.image[x];
            }
            out.push(len);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        let n = self.image.len();
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.image[x];
            }
        }
        count
    }

    pub fn cycle_type(&self) -> CycleType {
        CycleType::from_parts_unsorted(self.cycle_lengths())
    }

    pub fn fixed_points(&self) -> usize {
        self.image
            .iter()
            .enumerate()
            .filter(|(x, &y)| *x == y)
            .count()
    }

    /// `+1` for even, `-1` for odd.
    pub fn sign(&self) -> i8 {
        if (self.domain_size() - self.cycle_count()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn is_odd(&self) -> bool {
        self.sign() < 0
    }

    /// Restricts to `subset` by skipping along each orbit until it re-enters the subset.
    ///
    /// The subset may be given in any order and must not repeat darts. The result
    /// is stored on the sorted subset.
    pub fn induced(&self, subset: &[usize]) -> Result<InducedPermutation> {
        let n = self.domain_size();
        let mut local = vec![usize::MAX; n];
        let mut support: Vec<usize> = subset.to_vec();
        support.sort_unstable();
        for (i, &y) in support.iter().enumerate() {
            if y >= n {
                return Err(Error::NotASubset {
                    dart: y,
                    domain_size: n,
                });
            }
            if local[y] != usize::MAX {
                return Err(Error::InvalidArgument(format!(
                    "dart {} repeated in subset",
                    y + 1
                )));
            }
            local[y] = i;
        }
        let image = support
            .iter()
            .map(|&y| {
                let mut z = self.image[y];
                while local[z] == usize::MAX {
                    z = self.image[z];
                }
                local[z]
            })
            .collect();
        Ok(InducedPermutation {
            support,
            local: Permutation { image },
        })
    }

    /// 1-based cycle notation with fixed points shown, e.g. `(1 2)(3)`.
    pub fn to_cycle_string(&self) -> String {
        format_cycles(&self.cycles(), |x| x + 1)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.domain_size(), self)
    }
}

/// Parses cycle notation with the domain inferred from the largest symbol.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let cycles = parse_cycle_list(s)?;
        let n = cycles.iter().flatten().map(|&x| x + 1).max().unwrap_or(0);
        Permutation::from_cycles(n, &cycles)
    }
}

/// A permutation of a dart subset, kept with its (sorted) support so cycles
/// print with the original dart labels.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct InducedPermutation {
    support: Vec<usize>,
    local: Permutation,
}

impl InducedPermutation {
    /// Builds from a sorted support and a permutation given on global darts.
    pub fn from_global_cycles(support: Vec<usize>, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut sorted = support.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != support.len() {
            return Err(Error::InvalidArgument("support repeats a dart".into()));
        }
        let local_cycles = cycles
            .iter()
            .map(|c| {
                c.iter()
                    .map(|d| {
                        sorted.binary_search(d).map_err(|_| Error::NotASubset {
                            dart: *d,
                            domain_size: sorted.len(),
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let local = Permutation::from_cycles(sorted.len(), &local_cycles)?;
        Ok(InducedPermutation {
            support: sorted,
            local,
        })
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    /// The permutation in local coordinates `0..support.len()`.
    pub fn local(&self) -> &Permutation {
        &self.local
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    /// Image of a global dart; `None` when the dart is outside the support.
    pub fn apply(&self, dart: usize) -> Option<usize> {
        let i = self.support.binary_search(&dart).ok()?;
        Some(self.support[self.local.apply(i)])
    }

    /// Left-to-right product of two permutations on the same support.
    pub fn compose(&self, other: &InducedPermutation) -> Result<InducedPermutation> {
        if self.support != other.support {
            return Err(Error::InvalidArgument(
                "induced permutations live on different supports".into(),
            ));
        }
        Ok(InducedPermutation {
            support: self.support.clone(),
            local: self.local.compose(&other.local)?,
        })
    }

    pub fn cycle_type(&self) -> CycleType {
        self.local.cycle_type()
    }

    pub fn cycle_count(&self) -> usize {
        self.local.cycle_count()
    }

    pub fn sign(&self) -> i8 {
        self.local.sign()
    }

    pub fn is_odd(&self) -> bool {
        self.local.is_odd()
    }

    pub fn fixed_points(&self) -> usize {
        self.local.fixed_points()
    }

    /// Cycles on global darts.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        self.local
            .cycles()
            .into_iter()
            .map(|c| c.into_iter().map(|i| self.support[i]).collect())
            .collect()
    }

    pub fn to_cycle_string(&self) -> String {
        format_cycles(&self.cycles(), |x| x + 1)
    }
}

impl fmt::Display for InducedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl fmt::Debug for InducedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Induced{:?}{}", self.support, self)
    }
}

fn format_cycles(cycles: &[Vec<usize>], label: impl Fn(usize) -> usize) -> String {
    let mut s = String::new();
    for cycle in cycles {
        s.push('(');
        for (i, &x) in cycle.iter().enumerate() {
            if i > 0 {
                s.push(' ');
            }
            s.push_str(&label(x).to_string());
        }
        s.push(')');
    }
    s
}

/// Parses `"(1 3 2)(4 6)"` into 0-based cycles. Whitespace (and commas) inside
/// and between cycles is ignored.
pub fn parse_cycle_list(s: &str) -> Result<Vec<Vec<usize>>> {
    let mut cycles = Vec::new();
    let mut current: Option<Vec<usize>> = None;
    let mut number = String::new();

    fn flush(number: &mut String, current: &mut Option<Vec<usize>>) -> Result<()> {
        if number.is_empty() {
            return Ok(());
        }
        let value: usize = number
            .parse()
            .map_err(|_| Error::Parse(format!("bad symbol '{number}'")))?;
        if value == 0 {
            return Err(Error::Parse("symbols are 1-based; got 0".into()));
        }
        match current {
            Some(c) => c.push(value - 1),
            None => return Err(Error::Parse(format!("symbol {value} outside a cycle"))),
        }
        number.clear();
        Ok(())
    }

    for ch in s.chars() {
        match ch {
            '(' => {
                if current.is_some() {
                    return Err(Error::Parse("nested '('".into()));
                }
                current = Some(Vec::new());
            }
            ')' => {
                flush(&mut number, &mut current)?;
                match current.take() {
                    Some(c) if c.is_empty() => return Err(Error::Parse("empty cycle".into())),
                    Some(c) => cycles.push(c),
                    None => return Err(Error::Parse("unmatched ')'".into())),
                }
            }
            c if c.is_ascii_digit() => number.push(c),
            c if c.is_whitespace() || c == ',' => flush(&mut number, &mut current)?,
            c => return Err(Error::Parse(format!("unexpected character '{c}'"))),
        }
    }
    if current.is_some() {
        return Err(Error::Parse("unclosed '('".into()));
    }
    Ok(cycles)
}
