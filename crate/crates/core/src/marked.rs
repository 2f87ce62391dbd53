//! Marked partitions: partitions with a set of marked parts encoding a
//! conjugacy class in the canonical quotient of the orbit's component group.
//!
//! A marked partition `<lambda|nu>` of type X is a partition lambda in
//! P_X(n) together with a marking partition nu whose parts are distinct parts
//! of lambda of the type's marking parity (odd for B and D, even for C); in
//! types B and D the number of marks must be even. Reduced labels are the
//! canonical representatives whose marks are all markable parts; they are in
//! bijection with the pairs (orbit, class in the canonical quotient).

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{domain, Result};
use crate::partition::{superiority, GroupType, Partition};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MarkedPartition {
    group_type: GroupType,
    lambda: Partition,
    nu: Partition,
    zero_mark: bool,
}

/// Classification of a marked partition for the block calculus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockKind {
    Trivial,
    Basic,
    Ultrabasic,
    Neither,
}

impl BlockKind {
    pub fn is_basic(self) -> bool {
        matches!(self, BlockKind::Basic | BlockKind::Ultrabasic)
    }
}

/// The interval bookkeeping of the reduction machinery: the elements of
/// S_1(lambda) listed as j_l > ... > j_1 (with j_1 = 0 appended in type C
/// when needed to make l even), the sets T_0^(m) of marks falling strictly
/// between consecutive j's, and the indicators T_1^(m) = T_1 ∩ {j_m}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalData {
    /// j_1 <= ... <= j_l, stored ascending (index m-1 holds j_m).
    pub s1: Vec<usize>,
    /// `t0[m]` = T_0^(m) for m = 0..=l, ascending part values.
    pub t0_by_interval: Vec<Vec<usize>>,
    /// `t1[m-1]` = whether T_1^(m) = {j_m}, for m = 1..=l.
    pub t1_by_point: Vec<bool>,
}

/// The markable parts of `lam` in the context of type `ty`: odd parts of odd
/// height (B), even parts of even height (C), odd parts of even height (D).
/// Defined for arbitrary partitions, returned in decreasing order.
pub fn markable_parts(lam: &Partition, ty: GroupType) -> Vec<usize> {
    let (part_parity, height_parity) = match ty {
        GroupType::B => (1, 1),
        GroupType::C => (0, 0),
        GroupType::D => (1, 0),
    };
    lam.distinct_parts()
        .into_iter()
        .filter(|&a| a % 2 == part_parity && lam.height(a) % 2 == height_parity)
        .collect()
}

/// Generalized reduction: sends an arbitrary pair (lambda, nu) in a type
/// context to the unique reduced label of its class. nu need not consist of
/// parts of lambda (generalized heights are used), but in types B and D it
/// must have an even number of parts.
pub fn reduce_parts(ty: GroupType, lambda: &Partition, nu: &Partition) -> Result<MarkedPartition> {
    if matches!(ty, GroupType::B | GroupType::D) && nu.len() % 2 == 1 {
        return Err(domain(format!(
            "reduction in type {ty} requires an even number of marks, got {}",
            nu.len()
        )));
    }
    let markable = markable_parts(lambda, ty);
    let mut marks = Vec::new();
    let mut height_above = 0usize;
    for &m in &markable {
        let h = nu.height(m);
        if (h - height_above) % 2 == 1 {
            marks.push(m);
        }
        height_above = h;
    }
    Ok(MarkedPartition {
        group_type: ty,
        lambda: lambda.clone(),
        nu: Partition::new(marks),
        zero_mark: false,
    })
}

impl MarkedPartition {
    pub fn new(group_type: GroupType, lambda: Partition, nu: Partition) -> Self {
        MarkedPartition {
            group_type,
            lambda,
            nu,
            zero_mark: false,
        }
    }

    pub fn with_zero_mark(group_type: GroupType, lambda: Partition, nu: Partition) -> Self {
        MarkedPartition {
            group_type,
            lambda,
            nu,
            zero_mark: true,
        }
    }

    pub fn trivial(group_type: GroupType, lambda: Partition) -> Self {
        Self::new(group_type, lambda, Partition::empty())
    }

    pub fn group_type(&self) -> GroupType {
        self.group_type
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn nu(&self) -> &Partition {
        &self.nu
    }

    pub fn zero_mark(&self) -> bool {
        self.zero_mark
    }

    pub fn is_trivially_marked(&self) -> bool {
        self.nu.is_empty()
    }

    /// eta, the unmarked parts: lambda with one copy of each mark removed.
    pub fn eta(&self) -> Result<Partition> {
        let mut parts = self.lambda.parts().to_vec();
        for &m in self.nu.parts() {
            match parts.iter().position(|&p| p == m) {
                Some(i) => {
                    parts.remove(i);
                }
                None => {
                    return Err(domain(format!(
                        "mark {m} is not a part of the underlying partition {}",
                        self.lambda
                    )))
                }
            }
        }
        Ok(Partition::new(parts))
    }

    /// The defining conditions of the set of marked partitions of this type.
    pub fn validate(&self) -> bool {
        self.check().is_ok()
    }

    pub fn check(&self) -> Result<()> {
        let ty = self.group_type;
        if !ty.contains(&self.lambda) {
            return Err(domain(format!(
                "{} is not a partition of type {ty}",
                self.lambda
            )));
        }
        let mark_parity = match ty {
            GroupType::B | GroupType::D => 1,
            GroupType::C => 0,
        };
        let mut seen = BTreeSet::new();
        for &m in self.nu.parts() {
            if m % 2 != mark_parity {
                return Err(domain(format!("mark {m} has the wrong parity for type {ty}")));
            }
            if !seen.insert(m) {
                return Err(domain(format!("mark {m} occurs more than once")));
            }
            if self.lambda.multiplicity(m) == 0 {
                return Err(domain(format!(
                    "mark {m} is not a part of {}",
                    self.lambda
                )));
            }
        }
        if matches!(ty, GroupType::B | GroupType::D) {
            if self.nu.len() % 2 == 1 {
                return Err(domain(format!(
                    "type {ty} requires an even number of marks"
                )));
            }
            if self.zero_mark {
                return Err(domain("the zero mark is a type-C convention"));
            }
        }
        Ok(())
    }

    /// Passes to the reduced label of the equivalence class. Also clears the
    /// zero mark: a type-C zero mark never changes the class.
    pub fn reduce(&self) -> Result<MarkedPartition> {
        reduce_parts(self.group_type, &self.lambda, &self.nu)
    }

    /// True iff this is a reduced label: valid, every mark markable, no zero
    /// mark.
    pub fn is_reduced(&self) -> bool {
        if !self.validate() || self.zero_mark {
            return false;
        }
        let markable = markable_parts(&self.lambda, self.group_type);
        self.nu.parts().iter().all(|m| markable.contains(m))
    }

    /// Accepts reduced labels, with or without the (vacuous) explicit zero
    /// mark: the marks themselves must be canonical.
    pub(crate) fn require_reduced(&self, what: &str) -> Result<()> {
        self.check()?;
        let r = self.reduce()?;
        if r.lambda() != &self.lambda || r.nu() != &self.nu {
            return Err(domain(format!("{what} requires a reduced label, got {self}")));
        }
        Ok(())
    }

    /// The mark list used by the formulas that want an even number of marks:
    /// in type C a virtual smallest mark 0 is appended when the count is odd.
    pub(crate) fn padded_marks(&self) -> Vec<usize> {
        let mut marks = self.nu.parts().to_vec();
        if self.group_type == GroupType::C && marks.len() % 2 == 1 {
            marks.push(0);
        }
        marks
    }

    /// The S/T interval data of the reduction machinery.
    pub fn interval_data(&self) -> Result<IntervalData> {
        self.check()?;
        let eps = self.group_type.epsilon();
        let s_delta = |delta: usize| -> Vec<usize> {
            // ascending part values a with a !≡ eps and r(a) ≡ delta (mod 2)
            let mut v: Vec<usize> = self
                .lambda
                .distinct_parts()
                .into_iter()
                .filter(|&a| a % 2 != eps && self.lambda.multiplicity(a) % 2 == delta)
                .collect();
            v.sort_unstable();
            v
        };
        let s0 = s_delta(0);
        let mut s1 = s_delta(1);
        if self.group_type == GroupType::C && s1.len() % 2 == 1 {
            s1.insert(0, 0);
        }
        let l = s1.len();
        let marks: BTreeSet<usize> = self.nu.parts().iter().copied().collect();
        let t0: BTreeSet<usize> = s0.iter().copied().filter(|a| marks.contains(a)).collect();
        let mut t0_by_interval = vec![Vec::new(); l + 1];
        for &a in &t0 {
            // interval index m with j_m < a < j_{m+1}; j_0 = 0, j_{l+1} = infinity
            let m = s1.iter().filter(|&&j| j < a).count();
            t0_by_interval[m].push(a);
        }
        let t1_by_point = s1.iter().map(|j| marks.contains(j)).collect();
        Ok(IntervalData {
            s1,
            t0_by_interval,
            t1_by_point,
        })
    }

    /// The equivalence relation whose classes are the elements of the label
    /// set: T_0 data agrees on even intervals and the three-set cardinality
    /// sums agree mod 2 on odd ones.
    pub fn equivalent(&self, other: &MarkedPartition) -> Result<bool> {
        if self.group_type != other.group_type || self.lambda != other.lambda {
            return Err(domain(
                "equivalence is defined for marked partitions with the same type and underlying partition",
            ));
        }
        let a = self.interval_data()?;
        let b = other.interval_data()?;
        let l = a.s1.len();
        let odd_sum = |d: &IntervalData, m: usize| -> usize {
            // |T_1^(m+1) ∪ T_0^(m) ∪ T_1^(m)| with T_1^(l+1) = empty (type B)
            let t1 = |k: usize| -> usize {
                if k >= 1 && k <= l && d.t1_by_point[k - 1] {
                    1
                } else {
                    0
                }
            };
            t1(m + 1) + d.t0_by_interval[m].len() + t1(m)
        };
        // With a padded j_1 = 0 (type C, odd-cardinality S_1) the bottom
        // condition is vacuous: the virtual point absorbs one parity flip.
        // This is the two-to-one collapse onto the canonical quotient.
        let skip_bottom = a.s1.first() == Some(&0);
        for m in 0..=l {
            if m % 2 == 0 {
                if a.t0_by_interval[m] != b.t0_by_interval[m] {
                    return Ok(false);
                }
            } else if m == 1 && skip_bottom {
                continue;
            } else if odd_sum(&a, m) % 2 != odd_sum(&b, m) % 2 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The complement construction: an equivalent marked partition obtained
    /// by replacing T_1 with its complement in S_1 (sparing j_l in type B).
    pub fn complement_equivalent(&self) -> Result<MarkedPartition> {
        let d = self.interval_data()?;
        let l = d.s1.len();
        let mut marks: Vec<usize> = d.t0_by_interval.iter().flatten().copied().collect();
        match self.group_type {
            GroupType::C | GroupType::D => {
                for (i, &j) in d.s1.iter().enumerate() {
                    if !d.t1_by_point[i] && j > 0 {
                        marks.push(j);
                    }
                }
            }
            GroupType::B => {
                for (i, &j) in d.s1.iter().enumerate() {
                    let is_top = i + 1 == l;
                    let in_t1 = d.t1_by_point[i];
                    // complement within S_1 minus {j_l}; keep T_1 ∩ {j_l}
                    if (is_top && in_t1) || (!is_top && !in_t1) {
                        marks.push(j);
                    }
                }
            }
        }
        Ok(MarkedPartition::new(
            self.group_type,
            self.lambda.clone(),
            Partition::new(marks),
        ))
    }

    /// Componentwise union of underlying and marking partitions, silently
    /// reduced. The result takes the left operand's group type.
    pub fn union_marked(&self, other: &MarkedPartition) -> Result<MarkedPartition> {
        let lambda = self.lambda.union(&other.lambda);
        let nu = self.nu.union(&other.nu);
        reduce_parts(self.group_type, &lambda, &nu)
    }

    /// Join of marked partitions: the underlying partitions are joined and
    /// the marks are transported so that their heights are preserved, then
    /// the result is reduced. Takes the left operand's group type.
    pub fn join_marked(&self, other: &MarkedPartition) -> Result<MarkedPartition> {
        let joined = self.lambda.join(&other.lambda);
        let mut marks = Vec::new();
        for (lam, nu) in [(&self.lambda, &self.nu), (&other.lambda, &other.nu)] {
            for &m in nu.parts() {
                let h = lam.height(m);
                if h == 0 || h > joined.len() {
                    return Err(domain(format!(
                        "mark {m} has no height in {lam} compatible with the join {joined}"
                    )));
                }
                marks.push(joined.part(h - 1));
            }
        }
        reduce_parts(self.group_type, &joined, &Partition::new(marks))
    }

    /// Part values of lambda in the type's forbidden class (even of odd
    /// height for B, odd of even height for C, even of even height for D)
    /// whose generalized height in nu is odd. Empty iff the label is special.
    pub(crate) fn special_violators(&self) -> Vec<usize> {
        let (part_parity, height_parity) = match self.group_type {
            GroupType::B => (0, 1),
            GroupType::C => (1, 0),
            GroupType::D => (0, 0),
        };
        let mut v: Vec<usize> = self
            .lambda
            .distinct_parts()
            .into_iter()
            .filter(|&a| {
                a % 2 == part_parity
                    && self.lambda.height(a) % 2 == height_parity
                    && self.nu.height(a) % 2 == 1
            })
            .collect();
        v.sort_unstable();
        v
    }

    /// Whether this reduced label is a special marked partition.
    pub fn is_special(&self) -> Result<bool> {
        self.require_reduced("is_special")?;
        Ok(self.special_violators().is_empty())
    }

    fn block_kind_unchecked(&self) -> BlockKind {
        if self.nu.is_empty() && !self.zero_mark {
            return BlockKind::Trivial;
        }
        let marks = self.padded_marks();
        let (n2, n1) = match marks.len() {
            1 => (marks[0], 0), // bare zero mark has no n2; caught below
            2 => (marks[0], marks[1]),
            _ => return BlockKind::Neither,
        };
        if marks.len() == 1 && self.group_type != GroupType::C {
            return BlockKind::Neither;
        }
        if n2 == 0 {
            return BlockKind::Neither;
        }
        let height_parity = match self.group_type {
            GroupType::B => 1,
            GroupType::C | GroupType::D => 0,
        };
        let top = self
            .lambda
            .distinct_parts()
            .into_iter()
            .find(|&a| self.lambda.height(a) % 2 == height_parity);
        if top != Some(n2) {
            return BlockKind::Neither;
        }
        if n1 != 0 && n1 != self.lambda.min_part() {
            return BlockKind::Neither;
        }
        if n1 <= 1 {
            BlockKind::Ultrabasic
        } else {
            BlockKind::Basic
        }
    }

    /// Classifies a reduced label as trivial, basic, ultrabasic or neither.
    pub fn block_kind(&self) -> Result<BlockKind> {
        self.require_reduced("block_kind")?;
        Ok(self.block_kind_unchecked())
    }

    /// The canonical division into blocks: a deterministic decomposition into
    /// trivial or basic blocks satisfying the per-type constraints (block
    /// types, even/odd superiority between consecutive blocks, type-C parity
    /// conditions). The input is reduced first.
    pub fn divide_into_blocks(&self) -> Result<Vec<MarkedPartition>> {
        self.check()?;
        let mp = self.reduce()?;
        if mp.lambda.is_empty() {
            return Ok(Vec::new());
        }
        let marks: BTreeSet<usize> = mp.nu.parts().iter().copied().collect();
        divide_rec(mp.lambda.parts(), &marks, mp.group_type, true).ok_or_else(|| {
            crate::error::integrity(format!("no division into trivial or basic blocks for {mp}"))
        })
    }

    /// Every division into blocks permitted by the definition (any block
    /// contents, not only trivial or basic ones), for exhaustive testing of
    /// the block calculus. The input must be a valid marked partition.
    pub fn enumerate_divisions(&self) -> Result<Vec<Vec<MarkedPartition>>> {
        self.check()?;
        if self.lambda.is_empty() {
            return Ok(vec![Vec::new()]);
        }
        let marks: BTreeSet<usize> = self.nu.parts().iter().copied().collect();
        let mut out = Vec::new();
        let mut prefix = Vec::new();
        enumerate_rec(
            self.lambda.parts(),
            &marks,
            self.group_type,
            true,
            &mut prefix,
            &mut out,
        );
        Ok(out)
    }
}

fn block_position_type(division: GroupType, first: bool) -> GroupType {
    match division {
        GroupType::B => {
            if first {
                GroupType::B
            } else {
                GroupType::D
            }
        }
        GroupType::C => GroupType::C,
        GroupType::D => GroupType::D,
    }
}

fn block_constraints_ok(
    division: GroupType,
    block: &MarkedPartition,
    suffix: &[usize],
) -> bool {
    if !block.validate() {
        return false;
    }
    if division == GroupType::C
        && !suffix.is_empty()
        && (block.lambda.len() % 2 == 1 || block.nu.len() % 2 == 1)
    {
        return false;
    }
    if !suffix.is_empty() {
        let next = Partition::new(suffix.to_vec());
        match superiority(&block.lambda, &next) {
            Ok(s) => {
                let ok = match division {
                    GroupType::B | GroupType::D => s.evenly,
                    GroupType::C => s.oddly,
                };
                if !ok {
                    return false;
                }
            }
            Err(_) => return false,
        }
    }
    true
}

fn divide_rec(
    parts: &[usize],
    marks: &BTreeSet<usize>,
    division: GroupType,
    first: bool,
) -> Option<Vec<MarkedPartition>> {
    if parts.is_empty() {
        return marks.is_empty().then(Vec::new);
    }
    let bt = block_position_type(division, first);
    // cuts at value boundaries keep the mark assignment unambiguous
    let mut cuts = Vec::new();
    let mut i = 0;
    while i < parts.len() {
        let v = parts[i];
        while i < parts.len() && parts[i] == v {
            i += 1;
        }
        cuts.push(i);
    }
    for &cut in &cuts {
        let (pre, suf) = parts.split_at(cut);
        let pre_marks: Vec<usize> = marks.iter().copied().filter(|m| pre.contains(m)).collect();
        let suf_marks: BTreeSet<usize> = marks
            .iter()
            .copied()
            .filter(|m| !pre.contains(m))
            .collect();
        let block = MarkedPartition::new(
            bt,
            Partition::new(pre.to_vec()),
            Partition::new(pre_marks),
        );
        if !block_constraints_ok(division, &block, suf) {
            continue;
        }
        if block.block_kind_unchecked() == BlockKind::Neither {
            continue;
        }
        if let Some(mut rest) = divide_rec(suf, &suf_marks, division, false) {
            rest.insert(0, block);
            return Some(rest);
        }
    }
    None
}

fn enumerate_rec(
    parts: &[usize],
    marks: &BTreeSet<usize>,
    division: GroupType,
    first: bool,
    acc: &mut Vec<MarkedPartition>,
    out: &mut Vec<Vec<MarkedPartition>>,
) {
    if parts.is_empty() {
        if marks.is_empty() {
            out.push(acc.clone());
        }
        return;
    }
    let bt = block_position_type(division, first);
    for cut in 1..=parts.len() {
        let (pre, suf) = parts.split_at(cut);
        // a mark whose value appears on both sides of the cut may go either way
        let boundary = pre[cut - 1];
        let split_choice = suf.first() == Some(&boundary) && marks.contains(&boundary);
        let assignments: &[bool] = if split_choice { &[true, false] } else { &[true] };
        for &boundary_in_prefix in assignments {
            let mut pre_marks = Vec::new();
            let mut suf_marks = BTreeSet::new();
            for &m in marks {
                let in_pre = if m == boundary && split_choice {
                    boundary_in_prefix
                } else {
                    pre.contains(&m)
                };
                if in_pre {
                    pre_marks.push(m);
                } else {
                    suf_marks.insert(m);
                }
            }
            let block = MarkedPartition::new(
                bt,
                Partition::new(pre.to_vec()),
                Partition::new(pre_marks),
            );
            if !block_constraints_ok(division, &block, suf) {
                continue;
            }
            acc.push(block);
            enumerate_rec(suf, &suf_marks, division, false, acc, out);
            acc.pop();
        }
    }
}

/// Renders as `<lambda>|<nu>` in the shared grammar, e.g. `[3,1^2]|[3,1]`;
/// a type-C zero mark shows as a trailing `,0` inside the mark list.
impl fmt::Display for MarkedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|", self.lambda)?;
        if self.zero_mark {
            let nu = self.nu.to_string();
            if self.nu.is_empty() {
                write!(f, "[0]")
            } else {
                write!(f, "{},0]", &nu[..nu.len() - 1])
            }
        } else {
            write!(f, "{}", self.nu)
        }
    }
}

/// Parses `<partition>|<partition>` where an empty right side is the trivial
/// marking and a trailing `,0` (or bare `0`) sets the type-C zero mark. The
/// group type is supplied separately by the caller.
pub fn parse_marked(ty: GroupType, s: &str) -> Result<MarkedPartition> {
    let (lam_s, nu_s) = match s.split_once('|') {
        Some(pair) => pair,
        None => (s, ""),
    };
    let lambda: Partition = lam_s.parse()?;
    let mut nu_t: String = nu_s.chars().filter(|c| !c.is_whitespace()).collect();
    if nu_t.starts_with('[') && nu_t.ends_with(']') {
        nu_t = nu_t[1..nu_t.len() - 1].to_string();
    }
    let mut zero_mark = false;
    if nu_t == "0" {
        zero_mark = true;
        nu_t.clear();
    } else if let Some(rest) = nu_t.strip_suffix(",0") {
        zero_mark = true;
        nu_t = rest.to_string();
    }
    // any remaining zero entry is rejected by the partition grammar itself
    let nu: Partition = nu_t.parse()?;
    Ok(MarkedPartition {
        group_type: ty,
        lambda,
        nu,
        zero_mark,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ptn;

    fn mp(ty: GroupType, s: &str) -> MarkedPartition {
        parse_marked(ty, s).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(mp(GroupType::B, "7,5,4^2,3,2^2,1^2|3,1").validate());
        // odd number of marks in type B
        assert!(!mp(GroupType::B, "3,1,1|3").validate());
        assert!(mp(GroupType::C, "2,2|2").validate());
        // mark of the wrong parity
        assert!(!mp(GroupType::C, "2,2,1,1|1").validate());
        // mark not a part
        assert!(!mp(GroupType::B, "3,1,1|5,1").validate());
        // underlying partition not in the class
        assert!(!mp(GroupType::B, "4,2,1|").validate());
        assert!(!MarkedPartition::with_zero_mark(GroupType::B, ptn![3, 1, 1], Partition::empty()).validate());
        assert!(MarkedPartition::with_zero_mark(GroupType::C, ptn![2, 2], ptn![2]).validate());
    }

    #[test]
    fn markable_examples() {
        assert_eq!(
            markable_parts(&"7,5,4^2,3,2^2,1^2".parse().unwrap(), GroupType::B),
            vec![7, 3, 1]
        );
        assert_eq!(markable_parts(&ptn![2, 2], GroupType::C), vec![2]);
        assert_eq!(markable_parts(&ptn![3, 3], GroupType::D), vec![3]);
        assert_eq!(markable_parts(&ptn![4, 2], GroupType::C), vec![2]);
    }

    #[test]
    fn reduce_worked_example_steps() {
        // the two reductions appearing in the worked duality computation
        let r = reduce_parts(
            GroupType::C,
            &"8,7,5,4,2^2".parse().unwrap(),
            &ptn![7, 2],
        )
        .unwrap();
        assert_eq!(r.nu(), &ptn![4, 2]);
        let r = reduce_parts(
            GroupType::C,
            &"8,6^2,4,2^2".parse().unwrap(),
            &ptn![8, 4, 4, 2],
        )
        .unwrap();
        assert_eq!(r.nu(), &ptn![4, 2]);
    }

    #[test]
    fn reduce_is_idempotent_and_equivalent() {
        let a = mp(GroupType::B, "3,1,1|3,1");
        let r = a.reduce().unwrap();
        assert_eq!(r, a); // already reduced
        assert_eq!(r.reduce().unwrap(), r);
        assert!(a.equivalent(&r).unwrap());
        assert!(reduce_parts(GroupType::B, &ptn![3, 1, 1], &ptn![3]).is_err());
    }

    #[test]
    fn zero_mark_is_notation() {
        let z = MarkedPartition::with_zero_mark(GroupType::C, ptn![2, 2], ptn![2]);
        let r = z.reduce().unwrap();
        assert!(!r.zero_mark());
        assert_eq!(r, mp(GroupType::C, "2,2|2"));
    }

    #[test]
    fn interval_data_examples() {
        let d = mp(GroupType::B, "3,1,1|3,1").interval_data().unwrap();
        assert_eq!(d.s1, vec![3]);
        assert_eq!(d.t1_by_point, vec![true]);
        assert_eq!(d.t0_by_interval, vec![vec![1], vec![]]);

        let d = mp(GroupType::C, "2,2|2").interval_data().unwrap();
        assert!(d.s1.is_empty());
        assert_eq!(d.t0_by_interval, vec![vec![2]]);

        let d = mp(GroupType::B, "7,5,4^2,3,2^2,1^2|").interval_data().unwrap();
        assert_eq!(d.s1, vec![3, 5, 7]);
        assert!(d.t0_by_interval.iter().all(|v| v.is_empty()));

        // type C pads the j-list with 0 when S_1 has odd cardinality
        let d = mp(GroupType::C, "2|").interval_data().unwrap();
        assert_eq!(d.s1, vec![0, 2]);
    }

    #[test]
    fn equivalence_examples() {
        let a = mp(GroupType::B, "3,1,1|3,1");
        assert!(a.equivalent(&a).unwrap());
        assert!(a.equivalent(&a.reduce().unwrap()).unwrap());
        let b = mp(GroupType::B, "3,1,1|");
        assert!(!a.equivalent(&b).unwrap());
        assert!(a.equivalent(&mp(GroupType::C, "2,2|")).is_err());
        let c = a.complement_equivalent().unwrap();
        assert!(a.equivalent(&c).unwrap());
    }

    #[test]
    fn union_and_join_marked() {
        let a = mp(GroupType::B, "3,1,1|");
        let b = mp(GroupType::D, "2,2|");
        assert_eq!(
            a.union_marked(&b).unwrap(),
            mp(GroupType::B, "3,2,2,1,1|")
        );
        // join with the trivially marked square preserves mark heights:
        // the worked example's final join
        let left = mp(GroupType::C, "2,1,1|");
        let right = MarkedPartition::new(
            GroupType::C,
            "6^2,4^2,2^2".parse().unwrap(),
            ptn![6, 2],
        );
        let j = left.join_marked(&right).unwrap();
        assert_eq!(j.lambda(), &"8,7,5,4,2^2".parse().unwrap());
        assert_eq!(j.nu(), &ptn![4, 2]);
        // identity on empty
        let e = MarkedPartition::trivial(GroupType::B, Partition::empty());
        assert_eq!(a.union_marked(&e).unwrap(), a);
    }

    #[test]
    fn special_examples() {
        assert!(!mp(GroupType::C, "2^2,1^2|2").is_special().unwrap());
        assert!(mp(GroupType::C, "2^2,1^2|").is_special().unwrap());
        assert!(!mp(GroupType::B, "3,2^2,1^2|3,1").is_special().unwrap());
        assert!(mp(GroupType::B, "7,5,4^2,3,2^2,1^2|").is_special().unwrap());
        // non-reduced input is a domain error
        assert!(mp(GroupType::B, "3,3,1|1,1").is_special().is_err());
    }

    #[test]
    fn block_kind_examples() {
        assert_eq!(
            mp(GroupType::B, "3,1,1|3,1").block_kind().unwrap(),
            BlockKind::Ultrabasic
        );
        assert_eq!(
            mp(GroupType::B, "3,1,1|").block_kind().unwrap(),
            BlockKind::Trivial
        );
        assert_eq!(
            mp(GroupType::B, "7,5,4^2,3,2^2,1^2|3,1").block_kind().unwrap(),
            BlockKind::Neither
        );
        // type-C basic block with a single mark (implicit zero lower mark)
        assert_eq!(
            mp(GroupType::C, "4,2|2").block_kind().unwrap(),
            BlockKind::Ultrabasic
        );
        // a basic block that is not ultrabasic
        let b = MarkedPartition::new(
            GroupType::C,
            "6^2,4^2,2^2".parse().unwrap(),
            ptn![6, 2],
        );
        assert_eq!(b.block_kind().unwrap(), BlockKind::Basic);
    }

    #[test]
    fn divide_example() {
        let m = mp(GroupType::B, "7,5,4^2,3,2^2,1^2|3,1");
        let blocks = m.divide_into_blocks().unwrap();
        assert_eq!(blocks.len(), 2);
        assert_eq!(blocks[0], mp(GroupType::B, "7|"));
        assert_eq!(blocks[1], mp(GroupType::D, "5,4^2,3,2^2,1^2|3,1"));
        // union of blocks gives back the input
        let mut u = blocks[0].clone();
        for b in &blocks[1..] {
            let lambda = u.lambda().union(b.lambda());
            let nu = u.nu().union(b.nu());
            u = MarkedPartition::new(GroupType::B, lambda, nu);
        }
        assert_eq!(u.lambda(), m.lambda());
        assert_eq!(u.nu(), m.nu());

        // basic blocks and trivially marked staircases are their own single
        // block
        let b = mp(GroupType::B, "3,1,1|3,1");
        assert_eq!(b.divide_into_blocks().unwrap(), vec![b.clone()]);
        let t = mp(GroupType::C, "2^3|");
        assert_eq!(t.divide_into_blocks().unwrap(), vec![t.clone()]);
    }

    #[test]
    fn enumerate_divisions_includes_mid_run_cuts() {
        let m = mp(GroupType::C, "3,3,3,3|");
        let divs = m.enumerate_divisions().unwrap();
        assert!(divs.iter().any(|d| d.len() == 2));
        assert!(divs.iter().any(|d| d.len() == 1));
        for d in &divs {
            let total: usize = d.iter().map(|b| b.lambda().sum()).sum();
            assert_eq!(total, 12);
        }
    }

    #[test]
    fn display_round_trip() {
        for (ty, s) in [
            (GroupType::B, "[7,5,4^2,3,2^2,1^2]|[3,1]"),
            (GroupType::B, "[1^5]|[]"),
            (GroupType::C, "[2^2]|[2,0]"),
            (GroupType::C, "[2^2]|[0]"),
        ] {
            let v = parse_marked(ty, s).unwrap();
            assert_eq!(v.to_string(), s);
            assert_eq!(parse_marked(ty, &v.to_string()).unwrap(), v);
        }
    }
}
