//! Enumeration of the reduced labels of a classical type at a given size,
//! the partial order on them, Hasse diagrams, and the order-theoretic
//! characterization of the extended duality map used as an independent
//! oracle for it.

use std::collections::BTreeMap;

use crate::duality::{d_s, dbar};
use crate::error::{domain, integrity, Result};
use crate::marked::{markable_parts, MarkedPartition};
use crate::partition::{class_partitions_of, GroupType, Partition};

/// The partial order on pairs: smaller orbit and larger marked duality
/// value. Both labels must be reduced, of the same type and size.
pub fn pair_leq(a: &MarkedPartition, b: &MarkedPartition) -> Result<bool> {
    if a.group_type() != b.group_type() {
        return Err(domain("pair order compares labels of the same group type"));
    }
    if a.lambda().sum() != b.lambda().sum() {
        return Err(domain("pair order compares labels of the same size"));
    }
    Ok(a.lambda().dominated_by(b.lambda())? && d_s(b)?.dominated_by(&d_s(a)?)?)
}

/// All reduced labels of type `ty` and size `n`: for each partition in the
/// class, every set of markable parts subject to the type's parity
/// constraint on the number of marks. Very even type-D partitions carry a
/// single (trivially marked) label.
pub fn enumerate_labels(ty: GroupType, n: usize) -> Result<Vec<MarkedPartition>> {
    if !ty.parity_ok(n) {
        return Err(domain(format!("no type-{ty} partitions of {n}")));
    }
    let mut out = Vec::new();
    for lam in class_partitions_of(n, ty) {
        let markable = markable_parts(&lam, ty);
        let k = markable.len();
        for mask in 0..1usize << k {
            if matches!(ty, GroupType::B | GroupType::D) && mask.count_ones() % 2 == 1 {
                continue;
            }
            let marks: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| markable[i]).collect();
            out.push(MarkedPartition::new(ty, lam.clone(), Partition::new(marks)));
        }
    }
    out.sort();
    Ok(out)
}

/// Shared scaffolding for the per-size computations: the labels with their
/// duality values memoized, and the special set computed from its defining
/// condition (some class over the dual-side value maps back).
pub(crate) struct LabelContext {
    pub labels: Vec<MarkedPartition>,
    pub ds: Vec<Partition>,
    pub special: Vec<bool>,
    index: BTreeMap<MarkedPartition, usize>,
}

impl LabelContext {
    pub fn new(ty: GroupType, n: usize) -> Result<LabelContext> {
        let labels = enumerate_labels(ty, n)?;
        let ds: Vec<Partition> = labels.iter().map(d_s).collect::<Result<_>>()?;
        let mut special = Vec::with_capacity(labels.len());
        for (mp, mu) in labels.iter().zip(&ds) {
            special.push(in_special_set(mp.lambda(), mu, ty.dual())?.is_some());
        }
        let index = labels
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, l)| (l, i))
            .collect();
        Ok(LabelContext { labels, ds, special, index })
    }

    pub fn position(&self, mp: &MarkedPartition) -> Result<usize> {
        self.index
            .get(mp)
            .copied()
            .ok_or_else(|| domain(format!("{mp} is not a reduced label of this poset")))
    }

    pub fn leq(&self, i: usize, j: usize) -> Result<bool> {
        Ok(self.labels[i].lambda().dominated_by(self.labels[j].lambda())?
            && self.ds[j].dominated_by(&self.ds[i])?)
    }
}

/// Looks for a marking of `mu` (in type `dual`) whose duality value is
/// `lam`; returns it if there is one.
fn in_special_set(
    lam: &Partition,
    mu: &Partition,
    dual: GroupType,
) -> Result<Option<MarkedPartition>> {
    let markable = markable_parts(mu, dual);
    let k = markable.len();
    let mut found = None;
    for mask in 0..1usize << k {
        if matches!(dual, GroupType::B | GroupType::D) && mask.count_ones() % 2 == 1 {
            continue;
        }
        let marks: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| markable[i]).collect();
        let cand = MarkedPartition::new(dual, mu.clone(), Partition::new(marks));
        if &d_s(&cand)? == lam {
            if let Some(prev) = &found {
                return Err(integrity(format!(
                    "two classes over {mu} map back to {lam}: {prev} and {cand}"
                )));
            }
            found = Some(cand);
        }
    }
    Ok(found)
}

/// The labels of (ty, n) belonging to the special set: those whose duality
/// value admits a class mapping back to the underlying partition. Computed
/// directly from duality values, independently of the special-label
/// characterization.
pub fn special_set(ty: GroupType, n: usize) -> Result<Vec<MarkedPartition>> {
    let ctx = LabelContext::new(ty, n)?;
    Ok(ctx
        .labels
        .into_iter()
        .zip(ctx.special)
        .filter_map(|(l, s)| s.then_some(l))
        .collect())
}

/// A finite poset of reduced labels with covering relations, special flags
/// and the duality pairing.
#[derive(Debug, Clone)]
pub struct LabeledPoset {
    pub group_type: GroupType,
    pub n: usize,
    pub labels: Vec<MarkedPartition>,
    /// (upper, lower) index pairs; the transitive reduction of the order.
    pub covers: Vec<(usize, usize)>,
    pub special: Vec<bool>,
    /// The extended duality value of each label (a dual-side label).
    pub duals: Vec<MarkedPartition>,
}

impl LabeledPoset {
    pub fn position(&self, mp: &MarkedPartition) -> Option<usize> {
        self.labels.iter().position(|l| l == mp)
    }
}

/// Builds the full labeled poset of (ty, n): covering relations by
/// transitive reduction of the pair order, special flags from the special
/// set, duality from the extended duality map.
pub fn hasse(ty: GroupType, n: usize) -> Result<LabeledPoset> {
    let ctx = LabelContext::new(ty, n)?;
    let m = ctx.labels.len();
    let mut leq = vec![vec![false; m]; m];
    for i in 0..m {
        for j in 0..m {
            leq[i][j] = ctx.leq(i, j)?;
        }
    }
    let mut covers = Vec::new();
    for upper in 0..m {
        for lower in 0..m {
            if upper == lower || !leq[lower][upper] {
                continue;
            }
            let direct = !(0..m).any(|k| {
                k != upper && k != lower && leq[lower][k] && leq[k][upper]
            });
            if direct {
                covers.push((upper, lower));
            }
        }
    }
    covers.sort_unstable();
    let duals = ctx.labels.iter().map(dbar).collect::<Result<_>>()?;
    Ok(LabeledPoset {
        group_type: ty,
        n,
        labels: ctx.labels,
        covers,
        special: ctx.special,
        duals,
    })
}

/// The extended duality map computed from its order-theoretic
/// characterization, with no reference to the constructive recipe: a special
/// label maps to the unique class over its duality value that maps back; a
/// nonspecial label maps through the unique smallest special label above it.
pub fn dbar_via_characterization(mp: &MarkedPartition) -> Result<MarkedPartition> {
    if !mp.is_reduced() {
        return Err(domain(format!(
            "the characterization applies to reduced labels, got {mp}"
        )));
    }
    let ctx = LabelContext::new(mp.group_type(), mp.lambda().sum())?;
    dbar_via_characterization_ctx(&ctx, mp)
}

pub(crate) fn dbar_via_characterization_ctx(
    ctx: &LabelContext,
    mp: &MarkedPartition,
) -> Result<MarkedPartition> {
    let i = ctx.position(mp)?;
    let target = if ctx.special[i] {
        i
    } else {
        // the unique minimal special label above mp
        let mut above = Vec::new();
        for j in 0..ctx.labels.len() {
            if ctx.special[j] && ctx.leq(i, j)? {
                above.push(j);
            }
        }
        let mut minimal = Vec::new();
        for &j in &above {
            let mut is_min = true;
            for &k in &above {
                if k != j && ctx.leq(k, j)? {
                    is_min = false;
                    break;
                }
            }
            if is_min {
                minimal.push(j);
            }
        }
        match minimal.as_slice() {
            [j] => *j,
            other => {
                return Err(integrity(format!(
                    "{mp} has {} minimal special labels above it",
                    other.len()
                )))
            }
        }
    };
    let lam = ctx.labels[target].lambda();
    let mu = &ctx.ds[target];
    in_special_set(lam, mu, ctx.labels[target].group_type().dual())?.ok_or_else(|| {
        integrity(format!(
            "special label {} has no class mapping back over {mu}",
            ctx.labels[target]
        ))
    })
}
