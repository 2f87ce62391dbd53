//! The duality maps: same-side duality, the Langlands-dual-side duality, its
//! extension to marked partitions, the extended duality map on reduced
//! labels, the canonical inverse, and the specialization maps.

use crate::error::{domain, integrity, Result};
use crate::marked::{reduce_parts, MarkedPartition};
use crate::partition::{GroupType, Partition};

fn require_member(lam: &Partition, ty: GroupType) -> Result<()> {
    if !ty.contains(lam) {
        return Err(domain(format!("{lam} is not a partition of type {ty}")));
    }
    Ok(())
}

/// Same-side duality: transpose followed by the collapse of the same type.
/// The image is exactly the set of special partitions of the type.
pub fn d_ls(lam: &Partition, ty: GroupType) -> Result<Partition> {
    require_member(lam, ty)?;
    ty.collapse(&lam.transpose())
}

/// Dual-side duality on orbits: lands in the Langlands dual type.
pub fn d_bv(lam: &Partition, ty: GroupType) -> Result<Partition> {
    require_member(lam, ty)?;
    if lam.is_empty() {
        return Ok(Partition::empty());
    }
    match ty {
        GroupType::B => Ok(GroupType::C.collapse(&lam.minus_bottom()?)?.transpose()),
        GroupType::C => Ok(GroupType::B.collapse(&lam.plus_top())?.transpose()),
        GroupType::D => GroupType::D.collapse(&lam.transpose()),
    }
}

/// Whether `lam` is a special partition of its type: even parts of odd
/// height only (B), odd parts of even height only (C), even parts of even
/// height only (D).
pub fn is_special_partition(lam: &Partition, ty: GroupType) -> bool {
    if !ty.contains(lam) {
        return false;
    }
    let (part_parity, height_parity) = match ty {
        GroupType::B => (0, 1),
        GroupType::C => (1, 0),
        GroupType::D => (0, 0),
    };
    lam.distinct_parts()
        .into_iter()
        .filter(|&a| a % 2 == part_parity)
        .all(|a| lam.height(a) % 2 == height_parity)
}

/// The duality map on marked partitions, valued in plain partitions of the
/// dual type. Does not require a reduced label: the value only depends on
/// the equivalence class.
pub fn d_s(mp: &MarkedPartition) -> Result<Partition> {
    mp.check()?;
    let nu = mp.nu();
    let eta = mp.eta()?;
    let processed = match mp.group_type() {
        GroupType::B => GroupType::C.collapse(&eta.minus_bottom()?)?,
        GroupType::C => GroupType::B.collapse(&eta.plus_top())?,
        GroupType::D => GroupType::D.collapse(&eta.transpose())?.transpose(),
    };
    let t = nu.union(&processed).transpose();
    mp.group_type().dual().collapse(&t)
}

/// The marking partition of the dual label before reduction: the heights of
/// the marks, each less one. In type C the mark list is padded with a
/// virtual 0 whose height is the smallest even number larger than the part
/// count.
pub fn nu_hat(mp: &MarkedPartition) -> Result<Partition> {
    mp.require_reduced("nu_hat")?;
    let lam = mp.lambda();
    let mut marks = Vec::new();
    for m in mp.padded_marks() {
        let h = if m == 0 {
            let k = lam.len();
            if k % 2 == 0 {
                k + 2
            } else {
                k + 1
            }
        } else {
            lam.height(m)
        };
        marks.push(h - 1);
    }
    Ok(Partition::new(marks))
}

/// The mark set extracted from the transpose of the unmarked parts: even
/// parts with odd multiplicity in type B, odd parts with odd multiplicity in
/// types C and D.
pub fn pi_marking(eta: &Partition, ty: GroupType) -> Partition {
    let parity = match ty {
        GroupType::B => 0,
        GroupType::C | GroupType::D => 1,
    };
    let star = eta.transpose();
    Partition::new(
        star.distinct_parts()
            .into_iter()
            .filter(|&a| a % 2 == parity && star.multiplicity(a) % 2 == 1)
            .collect(),
    )
}

/// All intermediates of the extended duality computation, in the order the
/// recipe produces them.
#[derive(Debug, Clone)]
pub struct DbarTrace {
    pub input: MarkedPartition,
    pub eta: Partition,
    pub eta_star: Partition,
    pub pi: Partition,
    /// The dual-side partition carrying the transported marks.
    pub eta_tilde: Partition,
    /// Marking of the reduction of <eta_tilde|pi>.
    pub pi_reduced: Partition,
    pub tau: Partition,
    /// Marks moved through the join by height, before reduction.
    pub rho_transported: Partition,
    pub rho: Partition,
    /// The collapse of tau; equals the marked duality value of the input.
    pub tau_collapsed: Partition,
    pub nu_hat: Partition,
    pub result: MarkedPartition,
}

/// The extended duality map, with every intermediate exposed.
pub fn dbar_trace(mp: &MarkedPartition) -> Result<DbarTrace> {
    mp.check()?;
    let mp = mp.reduce()?;
    let ty = mp.group_type();
    let dual = ty.dual();
    let eta = mp.eta()?;
    let eta_star = eta.transpose();
    let pi = pi_marking(&eta, ty);
    let eta_tilde = match ty {
        GroupType::B => GroupType::C.collapse(&eta.minus_bottom()?)?.transpose(),
        GroupType::C => GroupType::B.collapse(&eta.plus_top())?.transpose(),
        GroupType::D => GroupType::D.collapse(&eta.transpose())?,
    };
    let step = reduce_parts(dual, &eta_tilde, &pi)?;
    let pi_reduced = step.nu().clone();
    let nu_star = mp.nu().transpose();
    let tau = nu_star.join(&eta_tilde);
    let mut transported = Vec::new();
    for &m in pi_reduced.parts() {
        let h = eta_tilde.height(m);
        if h == 0 || h > tau.len() {
            return Err(integrity(format!(
                "mark {m} of {eta_tilde} has no image in the join {tau}"
            )));
        }
        transported.push(tau.part(h - 1));
    }
    let rho_transported = Partition::new(transported);
    let step = reduce_parts(dual, &tau, &rho_transported)?;
    let rho = step.nu().clone();
    let tau_collapsed = dual.collapse(&tau)?;
    let hat = nu_hat(&mp)?;
    let result = reduce_parts(dual, &tau_collapsed, &hat.union(&rho))?;
    Ok(DbarTrace {
        input: mp,
        eta,
        eta_star,
        pi,
        eta_tilde,
        pi_reduced,
        tau,
        rho_transported,
        rho,
        tau_collapsed,
        nu_hat: hat,
        result,
    })
}

/// The extended duality map on reduced labels. Valid non-reduced input is
/// reduced first.
pub fn dbar(mp: &MarkedPartition) -> Result<MarkedPartition> {
    Ok(dbar_trace(mp)?.result)
}

/// The canonical inverse: the unique right inverse of the marked duality map
/// landing over the dual-side duality value. Equals the extended duality of
/// the trivially marked partition.
pub fn canonical_inverse(lam: &Partition, ty: GroupType) -> Result<MarkedPartition> {
    require_member(lam, ty)?;
    let target = d_bv(lam, ty)?;
    let pi = pi_marking(lam, ty);
    reduce_parts(ty.dual(), &target, &pi)
}

/// One step of specialization: if the label is special it is fixed;
/// otherwise the run of the smallest offending part [a^l] is replaced by
/// [a+1, a^(l-2), a-1] and the result reduced. The marked duality value and
/// the extended duality value are unchanged.
pub fn partial_specialize(mp: &MarkedPartition) -> Result<MarkedPartition> {
    mp.check()?;
    let mp = mp.reduce()?;
    let violators = mp.special_violators();
    let Some(&a) = violators.first() else {
        return Ok(mp);
    };
    let l = mp.lambda().multiplicity(a);
    if l % 2 != 0 {
        return Err(integrity(format!(
            "offending part {a} of {mp} has odd multiplicity {l}"
        )));
    }
    let mut parts: Vec<usize> = mp
        .lambda()
        .parts()
        .iter()
        .copied()
        .filter(|&p| p != a)
        .collect();
    parts.push(a + 1);
    for _ in 0..l - 2 {
        parts.push(a);
    }
    if a > 1 {
        parts.push(a - 1);
    }
    reduce_parts(mp.group_type(), &Partition::new(parts), mp.nu())
}

/// The specialization map: the least special label above the input, computed
/// as the fixed point of partial specialization. Coincides with the square
/// of the extended duality map.
pub fn specialize(mp: &MarkedPartition) -> Result<MarkedPartition> {
    let mut cur = mp.reduce()?;
    let cap = mp.lambda().sum() + 1;
    for _ in 0..=cap {
        let next = partial_specialize(&cur)?;
        if next == cur {
            return Ok(cur);
        }
        cur = next;
    }
    Err(integrity(format!(
        "specialization of {mp} did not stabilize within {cap} steps"
    )))
}
