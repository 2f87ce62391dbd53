//! Partition arithmetic: transpose, dominance, union/join, elementary moves,
//! parity classes for the classical types and their collapses.
//!
//! Partitions are kept in canonical form throughout: weakly decreasing parts,
//! no zero parts, the empty sequence standing for the partition of 0. Every
//! operation re-canonicalizes its result.

use std::fmt;
use std::str::FromStr;

use crate::error::{domain, parse_err, Result};

/// A partition of a nonnegative integer.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from arbitrary part values; zeros are dropped and
    /// the parts are sorted into weakly decreasing order.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// |λ|, the sum of the parts.
    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    /// #λ, the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The i-th part (0-indexed), 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// r_λ(a): the multiplicity of `a` as a part.
    pub fn multiplicity(&self, a: usize) -> usize {
        self.parts.iter().filter(|&&p| p == a).count()
    }

    /// Generalized height: the number of parts ≥ `a`. Defined for any a ≥ 1,
    /// whether or not `a` occurs as a part; values exceeding the largest part
    /// have height 0.
    pub fn height(&self, a: usize) -> usize {
        self.parts.iter().filter(|&&p| p >= a).count()
    }

    /// σ_j(λ): the sum of the first `j` parts (the total once j ≥ #λ).
    pub fn partial_sum(&self, j: usize) -> usize {
        self.parts.iter().take(j).sum()
    }

    /// Distinct part values in decreasing order.
    pub fn distinct_parts(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for &p in &self.parts {
            if out.last() != Some(&p) {
                out.push(p);
            }
        }
        out
    }

    pub fn max_part(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn min_part(&self) -> usize {
        self.parts.last().copied().unwrap_or(0)
    }

    /// λ*: the transpose (conjugate) partition.
    pub fn transpose(&self) -> Partition {
        let mut parts = Vec::with_capacity(self.max_part());
        for j in 1..=self.max_part() {
            parts.push(self.height(j));
        }
        Partition { parts }
    }

    /// λ ∪ μ: combines the rows, r_{λ∪μ}(a) = r_λ(a) + r_μ(a).
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::new(parts)
    }

    /// λ ∨ μ = (λ* ∪ μ*)*: combines the columns.
    pub fn join(&self, other: &Partition) -> Partition {
        let rows = self.len().max(other.len());
        let mut parts = Vec::with_capacity(rows);
        for i in 0..rows {
            parts.push(self.part(i) + other.part(i));
        }
        Partition { parts }
    }

    /// λ⁺: adds 1 to the largest part (`[1]` when λ is empty).
    pub fn plus_top(&self) -> Partition {
        let mut parts = self.parts.clone();
        if parts.is_empty() {
            parts.push(1);
        } else {
            parts[0] += 1;
        }
        Partition { parts }
    }

    /// λ⁻: subtracts 1 from the smallest part, dropping a resulting zero.
    pub fn minus_bottom(&self) -> Result<Partition> {
        if self.is_empty() {
            return Err(domain("minus_bottom on the empty partition"));
        }
        let mut parts = self.parts.clone();
        *parts.last_mut().unwrap() -= 1;
        if parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// λ₊: appends a part equal to 1.
    pub fn plus_row(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.push(1);
        Partition { parts }
    }

    /// λ₋ = λ*⁻*: removes one box from the last column, i.e. decrements the
    /// last copy of the largest part.
    pub fn minus_column(&self) -> Result<Partition> {
        if self.is_empty() {
            return Err(domain("minus_column on the empty partition"));
        }
        Ok(self.transpose().minus_bottom()?.transpose())
    }

    /// (χ⁺_j(λ), χ⁻_j(λ)): the first j parts and the rest.
    pub fn chi_split(&self, j: usize) -> Result<(Partition, Partition)> {
        if j > self.len() {
            return Err(domain(format!(
                "chi_split index {} out of range for a partition with {} parts",
                j,
                self.len()
            )));
        }
        Ok((
            Partition {
                parts: self.parts[..j].to_vec(),
            },
            Partition {
                parts: self.parts[j..].to_vec(),
            },
        ))
    }

    /// Dominance order: true iff σ_j(self) ≤ σ_j(other) for every j.
    /// Partitions of different integers are a domain error, not incomparable.
    pub fn dominated_by(&self, other: &Partition) -> Result<bool> {
        if self.sum() != other.sum() {
            return Err(domain(format!(
                "dominance comparison of partitions of {} and {}",
                self.sum(),
                other.sum()
            )));
        }
        let k = self.len().max(other.len());
        let mut sa = 0;
        let mut sb = 0;
        for j in 0..k {
            sa += self.part(j);
            sb += other.part(j);
            if sa > sb {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Subtracts `a` from every part (dropping zeros). Errors unless every
    /// part is ≥ a, i.e. unless λ = [a^#λ] ∨ result.
    pub fn shift_down(&self, a: usize) -> Result<Partition> {
        if self.min_part() < a && !self.is_empty() {
            return Err(domain("shift_down below the smallest part"));
        }
        Ok(Partition::new(self.parts.iter().map(|&p| p - a).collect()))
    }
}

/// All partitions of `n` in lexicographically decreasing order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: acc.clone() });
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            acc.push(p);
            rec(remaining - p, p, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n.max(1), &mut Vec::new(), &mut out);
    out
}

/// The partitions of `n` lying in P_X(n).
pub fn class_partitions_of(n: usize, ty: GroupType) -> Vec<Partition> {
    partitions_of(n)
        .into_iter()
        .filter(|p| ty.contains(p))
        .collect()
}

/// Superiority of one partition over another: `p` is
/// superior to `q` when min(p) ≥ max(q), and evenly (oddly) superior when an
/// even (odd) number m fits between them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Superiority {
    pub superior: bool,
    pub evenly: bool,
    pub oddly: bool,
}

/// Computes the superiority relation of `p` over `q`. `p` must be nonempty;
/// an empty `q` is below everything (all three flags true).
pub fn superiority(p: &Partition, q: &Partition) -> Result<Superiority> {
    if p.is_empty() {
        return Err(domain("superiority of the empty partition is undefined"));
    }
    let a = p.min_part();
    let b = q.max_part();
    let has_parity = |parity: usize| -> bool {
        // smallest m ≥ b with m ≡ parity (mod 2)
        let m = if b % 2 == parity { b } else { b + 1 };
        m <= a
    };
    Ok(Superiority {
        superior: a >= b,
        evenly: has_parity(0),
        oddly: has_parity(1),
    })
}

/// The classical group types whose nilpotent orbits are indexed by
/// parity-constrained partitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupType {
    B,
    C,
    D,
}

impl GroupType {
    /// ε: 0 for B and D, 1 for C.
    pub fn epsilon(self) -> usize {
        match self {
            GroupType::C => 1,
            _ => 0,
        }
    }

    /// Langlands dual at the label level: B ↔ C, D ↔ D.
    pub fn dual(self) -> GroupType {
        match self {
            GroupType::B => GroupType::C,
            GroupType::C => GroupType::B,
            GroupType::D => GroupType::D,
        }
    }

    /// Whether P_X(n) is nonempty, i.e. n has the parity of the type.
    pub fn parity_ok(self, n: usize) -> bool {
        match self {
            GroupType::B => n % 2 == 1,
            GroupType::C | GroupType::D => n % 2 == 0,
        }
    }

    /// Membership in P_X(|p|): B and D require even parts to occur with even
    /// multiplicity, C requires the same of odd parts; the parity of the
    /// total is part of the condition.
    pub fn contains(self, p: &Partition) -> bool {
        if !self.parity_ok(p.sum()) {
            return false;
        }
        let bad_parity = match self {
            GroupType::B | GroupType::D => 0,
            GroupType::C => 1,
        };
        p.distinct_parts()
            .iter()
            .all(|&a| a % 2 != bad_parity || p.multiplicity(a) % 2 == 0)
    }

    /// The X-collapse: the unique largest partition ≤ p lying in P_X(|p|).
    ///
    /// Implemented as the iterative box-moving procedure: take the largest
    /// part of the offending parity with odd multiplicity, shrink its last
    /// copy by one, and drop the box onto the first later row that can absorb
    /// it. Correctness is certified against the brute-force definition by the
    /// collapse oracle suite rather than assumed.
    pub fn collapse(self, p: &Partition) -> Result<Partition> {
        if !self.parity_ok(p.sum()) {
            return Err(domain(format!(
                "{self:?}-collapse undefined for a partition of {}",
                p.sum()
            )));
        }
        let bad_parity = match self {
            GroupType::B | GroupType::D => 0,
            GroupType::C => 1,
        };
        let mut parts = p.parts().to_vec();
        let fuel = p.sum() * p.sum() + p.len() + 1;
        for _ in 0..fuel {
            let offender = parts
                .iter()
                .filter(|&&v| v % 2 == bad_parity)
                .find(|&&v| parts.iter().filter(|&&w| w == v).count() % 2 == 1)
                .copied();
            let Some(v) = offender else {
                return Ok(Partition::new(parts));
            };
            let i = parts.iter().rposition(|&w| w == v).unwrap();
            parts[i] -= 1;
            let mut placed = false;
            for j in i + 1..parts.len() {
                if parts[j] + 1 <= parts[j - 1] {
                    parts[j] += 1;
                    placed = true;
                    break;
                }
            }
            if !placed {
                parts.push(1);
            }
            if parts[i] == 0 {
                parts.remove(i);
            }
        }
        Err(crate::error::integrity("collapse failed to terminate"))
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupType::B => write!(f, "B"),
            GroupType::C => write!(f, "C"),
            GroupType::D => write!(f, "D"),
        }
    }
}

impl FromStr for GroupType {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "B" | "b" => Ok(GroupType::B),
            "C" | "c" => Ok(GroupType::C),
            "D" | "d" => Ok(GroupType::D),
            other => Err(parse_err(format!("unknown group type {other:?}"))),
        }
    }
}

/// Renders in the shared text grammar with exponents, e.g. `[7,5,4^2,1^2]`;
/// the empty partition renders as `[]`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        let mut first = true;
        let distinct = self.distinct_parts();
        for a in distinct {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            let m = self.multiplicity(a);
            if m == 1 {
                write!(f, "{a}")?;
            } else {
                write!(f, "{a}^{m}")?;
            }
        }
        write!(f, "]")
    }
}

/// Parses the partition text grammar: comma-separated parts with optional
/// `^exponent`, whitespace ignored, optional surrounding brackets. The parts
/// must be non-increasing after expansion.
impl FromStr for Partition {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.starts_with('[') && t.ends_with(']') {
            t = t[1..t.len() - 1].to_string();
        }
        if t.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for token in t.split(',') {
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => (b, e),
                None => (token, "1"),
            };
            let base: usize = base
                .parse()
                .map_err(|_| parse_err(format!("bad part {token:?} in partition {s:?}")))?;
            let exp: usize = exp
                .parse()
                .map_err(|_| parse_err(format!("bad exponent {token:?} in partition {s:?}")))?;
            if base == 0 {
                return Err(parse_err(format!("zero part in partition {s:?}")));
            }
            for _ in 0..exp {
                parts.push(base);
            }
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(parse_err(format!(
                "partition {s:?} is not non-increasing after expansion"
            )));
        }
        Ok(Partition { parts })
    }
}

/// Convenience constructor used pervasively in tests.
#[macro_export]
macro_rules! ptn {
    () => { $crate::partition::Partition::empty() };
    ($($p:expr),+ $(,)?) => { $crate::partition::Partition::new(vec![$($p),+]) };
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn transpose_examples() {
        // column counts of [7,5,4,4,2,2,1]
        assert_eq!(p("7,5,4^2,2^2,1").transpose(), p("7,6,4^2,2,1^2"));
        assert_eq!(ptn![1, 1, 1].transpose(), ptn![3]);
        assert_eq!(ptn![3, 1].transpose(), ptn![2, 1, 1]);
        assert_eq!(Partition::empty().transpose(), Partition::empty());
    }

    #[test]
    fn dominance_examples() {
        assert!(ptn![2, 2].dominated_by(&ptn![3, 1]).unwrap());
        assert!(ptn![2, 2, 1].dominated_by(&ptn![3, 1, 1]).unwrap());
        assert!(!ptn![4, 1, 1].dominated_by(&ptn![3, 3]).unwrap());
        assert!(!ptn![3, 3].dominated_by(&ptn![4, 1, 1]).unwrap());
        assert!(ptn![2, 2].dominated_by(&ptn![3]).is_err());
    }

    #[test]
    fn union_and_join() {
        assert_eq!(ptn![3, 1].union(&ptn![2, 1]), ptn![3, 2, 1, 1]);
        assert_eq!(ptn![2, 2].join(&ptn![1]), ptn![3, 2]);
        assert_eq!(ptn![3, 1].join(&Partition::empty()), ptn![3, 1]);
        // join really is transpose-union-transpose
        let a = p("4,2,1");
        let b = p("3,3");
        assert_eq!(a.join(&b), a.transpose().union(&b.transpose()).transpose());
    }

    #[test]
    fn elementary_moves() {
        assert_eq!(ptn![3, 1].plus_top(), ptn![4, 1]);
        assert_eq!(ptn![3, 1].minus_bottom().unwrap(), ptn![3]);
        assert_eq!(ptn![3, 1].plus_row(), ptn![3, 1, 1]);
        assert_eq!(ptn![3, 1].minus_column().unwrap(), ptn![2, 1]);
        assert_eq!(ptn![1].minus_bottom().unwrap(), Partition::empty());
        assert!(Partition::empty().minus_bottom().is_err());
        assert!(Partition::empty().minus_column().is_err());
        assert_eq!(Partition::empty().plus_top(), ptn![1]);
        // λ₊ = λ*⁺*
        let a = p("4,2,2");
        assert_eq!(a.plus_row(), a.transpose().plus_top().transpose());
    }

    #[test]
    fn chi_split_examples() {
        let a = ptn![3, 2, 2, 1];
        assert_eq!(a.chi_split(2).unwrap(), (ptn![3, 2], ptn![2, 1]));
        assert_eq!(a.chi_split(0).unwrap(), (Partition::empty(), a.clone()));
        assert_eq!(a.chi_split(4).unwrap(), (a.clone(), Partition::empty()));
        assert!(a.chi_split(5).is_err());
        let (top, bot) = a.chi_split(3).unwrap();
        assert_eq!(top.union(&bot), a);
    }

    #[test]
    fn class_membership() {
        assert!(GroupType::B.contains(&ptn![3, 1, 1]));
        assert!(GroupType::C.contains(&ptn![4, 2]));
        assert!(!GroupType::C.contains(&ptn![2, 1]));
        assert!(!GroupType::B.contains(&ptn![4, 2, 1])); // even part 4 with odd multiplicity
        assert!(!GroupType::D.contains(&ptn![4, 2]));
        assert!(GroupType::D.contains(&ptn![3, 3]));
        assert!(GroupType::C.contains(&Partition::empty()));
        assert!(GroupType::D.contains(&Partition::empty()));
        assert!(!GroupType::B.contains(&Partition::empty()));
    }

    #[test]
    fn collapse_examples() {
        assert_eq!(
            GroupType::C.collapse(&p("7,5,4^2,2^2")).unwrap(),
            p("6^2,4^2,2^2")
        );
        assert_eq!(GroupType::D.collapse(&ptn![4, 2]).unwrap(), ptn![3, 3]);
        // fixed point on class members
        assert_eq!(GroupType::B.collapse(&ptn![3, 1, 1]).unwrap(), ptn![3, 1, 1]);
        assert!(GroupType::B.collapse(&ptn![4, 2]).is_err());
        // a collapse that must append a row
        assert_eq!(GroupType::B.collapse(&ptn![2, 1, 1, 1]).unwrap(), ptn![1, 1, 1, 1, 1]);
        assert_eq!(GroupType::D.collapse(&ptn![4, 1, 1]).unwrap(), ptn![3, 1, 1, 1]);
    }

    #[test]
    fn superiority_examples() {
        let s = superiority(&ptn![4, 3], &ptn![3, 1]).unwrap();
        assert!(s.superior && s.oddly && !s.evenly);
        let s = superiority(&ptn![4, 4], &ptn![2]).unwrap();
        assert!(s.superior && s.evenly && s.oddly);
        let s = superiority(&ptn![2, 2], &ptn![3]).unwrap();
        assert!(!s.superior && !s.evenly && !s.oddly);
        let s = superiority(&ptn![1], &Partition::empty()).unwrap();
        assert!(s.superior && s.evenly && s.oddly);
        assert!(superiority(&Partition::empty(), &ptn![1]).is_err());
    }

    #[test]
    fn grammar_round_trip() {
        for s in ["[]", "[5]", "[3,1^2]", "[7,5,4^2,3,2^2,1^2]", "[2^4]"] {
            let v: Partition = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
            let w: Partition = v.to_string().parse().unwrap();
            assert_eq!(v, w);
        }
        assert_eq!(p(" 3 , 1 "), ptn![3, 1]);
        assert!("1,3".parse::<Partition>().is_err());
        assert!("0".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
    }

    #[test]
    fn accessors() {
        let a = p("7,5,4^2,3,2^2,1^2");
        assert_eq!(a.sum(), 29);
        assert_eq!(a.len(), 9);
        assert_eq!(a.height(1), 9);
        assert_eq!(a.height(3), 5);
        assert_eq!(a.height(8), 0);
        assert_eq!(a.multiplicity(4), 2);
        assert_eq!(a.multiplicity(6), 0);
        assert_eq!(a.partial_sum(a.len()), a.sum());
        assert_eq!(a.height(a.max_part() + 1), 0);
    }
}
