//! d-partitions of the cyclic group of odd prime order p. Subsets of Z_p
//! live in single machine words here, which keeps the sumset sweeps
//! exact and fast: the census of partitions with constant pair counts,
//! the enumeration and five-way classification of three-part
//! d-partitions, the avoiding-set machinery, and the solution sweeps for
//! the three sumset equations behind the classification.
//!
//! Throughout, a three-part d-partition is written {π₀, π₁, π₂} with
//! π₀ = {0} and |π₁| ≤ |π₂|, ties broken toward the part with the
//! smaller least element.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::comb::{binomial, divisors, is_prime, mod_pow};
use crate::dioid::structure_constants;
use crate::group::{Family, FiniteGroup};
use crate::limits::{GORDON_PRIME_CAP, SWEEP_PRIME_CAP};
use crate::partition::{as_d_partition, is_s_partition, DPartition, Partition, PartitionError};
use crate::set::ElementSet;

#[derive(Debug, Error, PartialEq)]
pub enum ZpError {
    #[error("{n} is not an odd prime")]
    NotPrime { n: u32 },
    #[error("prime {p} exceeds the cap {cap} for this sweep")]
    PrimeTooLarge { p: u32, cap: u32 },
    #[error("set cardinality must be even, got {s}")]
    OddSetSize { s: u32 },
    #[error("set cardinality {s} does not fit among the nonzero elements of Z_{p}")]
    SetSizeOutOfRange { s: u32, p: u32 },
    #[error("{0:?} is not a subgroup of the units")]
    NotAUnitSubgroup(Vec<u32>),
    #[error("expected a three-part d-partition of Z_p for an odd prime p")]
    NotThreePartPrime,
    #[error("no extremal symmetric complete sum-free set exists for p = {p}")]
    NoExtremalSet { p: u32 },
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

fn checked_prime(p: u32, cap: u32) -> Result<(), ZpError> {
    if p < 3 || !is_prime(p as u64) {
        return Err(ZpError::NotPrime { n: p });
    }
    if p > cap {
        return Err(ZpError::PrimeTooLarge { p, cap });
    }
    Ok(())
}

/// Subset of Z_p as the low p bits of one word, for odd primes up to
/// [`SWEEP_PRIME_CAP`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AdditiveSet {
    p: u32,
    mask: u64,
}

impl fmt::Debug for AdditiveSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} (mod {})", self.to_vec(), self.p)
    }
}

impl Serialize for AdditiveSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len() as usize))?;
        for x in self.iter() {
            seq.serialize_element(&x)?;
        }
        seq.end()
    }
}

impl AdditiveSet {
    pub fn empty(p: u32) -> Self {
        debug_assert!((3..=SWEEP_PRIME_CAP).contains(&p) && is_prime(p as u64));
        AdditiveSet { p, mask: 0 }
    }

    pub fn full(p: u32) -> Self {
        let mut s = Self::empty(p);
        s.mask = (1u64 << p) - 1;
        s
    }

    pub fn from_elems(p: u32, elems: &[u32]) -> Self {
        let mut s = Self::empty(p);
        for &x in elems {
            s.insert(x);
        }
        s
    }

    pub fn from_element_set(set: &ElementSet) -> Self {
        let mut s = Self::empty(set.universe() as u32);
        for x in set.iter() {
            s.insert(x as u32);
        }
        s
    }

    pub fn to_element_set(&self) -> ElementSet {
        let elems: Vec<usize> = self.iter().map(|x| x as usize).collect();
        ElementSet::from_indices(self.p as usize, &elems).expect("members are below p")
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn len(&self) -> u32 {
        self.mask.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, x: u32) -> bool {
        debug_assert!(x < self.p);
        self.mask >> x & 1 == 1
    }

    pub fn insert(&mut self, x: u32) {
        assert!(x < self.p);
        self.mask |= 1 << x;
    }

    pub fn remove(&mut self, x: u32) {
        assert!(x < self.p);
        self.mask &= !(1 << x);
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> {
        let mut m = self.mask;
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let x = m.trailing_zeros();
                m &= m - 1;
                Some(x)
            }
        })
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.iter().collect()
    }

    pub fn union(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        AdditiveSet {
            p: self.p,
            mask: self.mask | other.mask,
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        AdditiveSet {
            p: self.p,
            mask: self.mask & other.mask,
        }
    }

    /// All of Z_p minus this set; holds 0 whenever the set does not.
    pub fn complement(&self) -> Self {
        AdditiveSet {
            p: self.p,
            mask: Self::full(self.p).mask & !self.mask,
        }
    }

    /// Complement among the nonzero elements.
    pub fn nonzero_complement(&self) -> Self {
        let mut out = self.complement();
        out.mask &= !1;
        out
    }

    /// {a + b : a ∈ self, b ∈ other}, as rotate-and-or over the members
    /// of the smaller operand. Nonempty operands obey the sumset lower
    /// bound |A+B| ≥ min(|A|+|B|-1, p).
    pub fn sumset(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        let p = self.p;
        let (walk, word) = if self.len() <= other.len() {
            (self, other.mask as u128)
        } else {
            (other, self.mask as u128)
        };
        let full = Self::full(p).mask;
        let mut acc = 0u64;
        for a in walk.iter() {
            acc |= ((word << a | word >> (p - a)) as u64) & full;
        }
        let out = AdditiveSet { p, mask: acc };
        debug_assert!(
            self.is_empty()
                || other.is_empty()
                || out.len() >= (self.len() + other.len() - 1).min(p)
        );
        out
    }

    /// {-x : x ∈ self}.
    pub fn neg(&self) -> Self {
        let mut out = Self::empty(self.p);
        for x in self.iter() {
            out.mask |= 1 << (if x == 0 { 0 } else { self.p - x });
        }
        out
    }

    /// {u * x : x ∈ self}.
    pub fn scale(&self, u: u32) -> Self {
        let mut out = Self::empty(self.p);
        for x in self.iter() {
            out.mask |= 1 << (u as u64 * x as u64 % self.p as u64);
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.neg()
    }
}

/// {i, p-i} for 1 ≤ i ≤ (p-1)/2.
fn pair(p: u32, i: u32) -> AdditiveSet {
    debug_assert!(i >= 1 && i <= (p - 1) / 2);
    let mut s = AdditiveSet::empty(p);
    s.insert(i);
    s.insert(p - i);
    s
}

/// Symmetric subset of the nonzero elements from a choice of ± pairs:
/// bit i-1 of `pairs` selects {i, p-i}.
fn symmetric_from_pairs(p: u32, pairs: u64) -> AdditiveSet {
    let mut s = AdditiveSet::empty(p);
    for i in 1..=(p - 1) / 2 {
        if pairs >> (i - 1) & 1 == 1 {
            s.mask |= pair(p, i).mask;
        }
    }
    s
}

/// S written as {start, start+step, ..., start+(len-1)·step} mod p, with
/// the lexicographically least (start, step) among all such readings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ApDescriptor {
    pub start: u32,
    pub step: u32,
    pub len: u32,
}

/// Decides whether the set is an arithmetic progression mod p by trying
/// every step: a step works when exactly one member has no predecessor
/// and walking from it stays inside the set.
pub fn detect_arithmetic_progression(set: &AdditiveSet) -> Option<ApDescriptor> {
    let p = set.p();
    let len = set.len();
    if len == 0 {
        return None;
    }
    if len == 1 {
        let start = set.iter().next().expect("nonempty");
        return Some(ApDescriptor { start, step: 1, len });
    }
    if len == p {
        return Some(ApDescriptor { start: 0, step: 1, len });
    }
    let mut best: Option<(u32, u32)> = None;
    for step in 1..p {
        let mut head = None;
        let mut heads = 0;
        for x in set.iter() {
            if !set.contains((x + p - step) % p) {
                heads += 1;
                head = Some(x);
            }
        }
        if heads != 1 {
            continue;
        }
        let start = head.expect("counted one head");
        let mut x = start;
        let mut inside = true;
        for _ in 0..len {
            if !set.contains(x) {
                inside = false;
                break;
            }
            x = (x + step) % p;
        }
        // len distinct steps from the head cover the whole set
        if inside && best.is_none_or(|b| (start, step) < b) {
            best = Some((start, step));
        }
    }
    best.map(|(start, step)| ApDescriptor { start, step, len })
}

/// The subgroup {x : x^d = 1} of the units for each divisor d of p-1,
/// ascending in d, from the trivial subgroup up to all units.
pub fn multiplicative_subgroups(p: u32) -> Result<Vec<AdditiveSet>, ZpError> {
    checked_prime(p, SWEEP_PRIME_CAP)?;
    Ok(divisors(p as u64 - 1)
        .into_iter()
        .map(|d| {
            let mut s = AdditiveSet::empty(p);
            for x in 1..p {
                if mod_pow(x as u64, d, p as u64) == 1 {
                    s.insert(x);
                }
            }
            debug_assert_eq!(s.len() as u64, d);
            s
        })
        .collect())
}

/// The partition of Z_p into {0} and the multiplicative cosets of a
/// subgroup of the units, over a fresh cyclic group of order p.
pub fn pi_multiplicative(p: u32, subgroup: &AdditiveSet) -> Result<DPartition, ZpError> {
    checked_prime(p, SWEEP_PRIME_CAP)?;
    let bad = || ZpError::NotAUnitSubgroup(subgroup.to_vec());
    if subgroup.p() != p || subgroup.contains(0) || !subgroup.contains(1) {
        return Err(bad());
    }
    for a in subgroup.iter() {
        for b in subgroup.iter() {
            if !subgroup.contains((a as u64 * b as u64 % p as u64) as u32) {
                return Err(bad());
            }
        }
    }
    let group = Arc::new(FiniteGroup::cyclic(p as usize).expect("odd prime order"));
    let mut parts = vec![ElementSet::singleton(p as usize, 0)];
    let mut assigned = AdditiveSet::empty(p);
    for x in 1..p {
        if assigned.contains(x) {
            continue;
        }
        let coset = subgroup.scale(x);
        assigned = assigned.union(&coset);
        parts.push(coset.to_element_set());
    }
    let partition = Partition::new(Arc::clone(&group), parts)?;
    Ok(as_d_partition(&partition).expect("coset partitions of the units satisfy the axioms"))
}

/// Outcome of the exhaustive sweep for partitions of Z_p with constant
/// pair counts, against the coset partitions of the unit subgroups.
#[derive(Debug, Clone, Serialize)]
pub struct GordonCensus {
    pub p: u32,
    pub count: usize,
    pub subgroup_orders: Vec<u64>,
    pub partitions: Vec<DPartition>,
    pub matches_subgroup_construction: bool,
}

/// Walks every partition of Z_p \ {0} (with {0} pinned as its own part),
/// keeps the inverse-closed ones whose pair counts are constant, and
/// compares the census against {Π(A) : A a subgroup of the units}.
pub fn gordon_census(p: u32) -> Result<GordonCensus, ZpError> {
    checked_prime(p, GORDON_PRIME_CAP)?;
    let group = Arc::new(FiniteGroup::cyclic(p as usize).expect("odd prime order"));
    let n = p as usize;
    let mut found: Vec<DPartition> = Vec::new();
    crate::comb::for_each_set_partition(n - 1, |rgs| {
        // Nonzero element x sits in block rgs[x-1]; part 0 is {0}.
        let blocks = rgs.iter().copied().max().map_or(0, |b| b as usize + 1);
        let mut parts = vec![ElementSet::empty(n); blocks + 1];
        parts[0].insert(0);
        for (i, &b) in rgs.iter().enumerate() {
            parts[b as usize + 1].insert(i + 1);
        }
        // Inverse-closedness: the negation of a block is a block.
        for part in &parts {
            let neg = group.set_inverse(part);
            if !parts.contains(&neg) {
                return;
            }
        }
        let partition =
            Partition::new(Arc::clone(&group), parts).expect("blocks partition the group");
        if is_s_partition(&partition)
            .expect("preconditions were filtered")
            .is_yes()
        {
            found.push(as_d_partition(&partition).expect("constant pair counts imply the axioms"));
        }
    });
    found.sort_by(|a, b| a.partition().cmp(b.partition()));

    let subgroup_orders = divisors(p as u64 - 1);
    let mut constructed: Vec<DPartition> = multiplicative_subgroups(p)?
        .iter()
        .map(|a| pi_multiplicative(p, a).expect("verified subgroup"))
        .collect();
    constructed.sort_by(|a, b| a.partition().cmp(b.partition()));
    let matches_subgroup_construction = found.len() == constructed.len()
        && found
            .iter()
            .zip(&constructed)
            .all(|(a, b)| a.partition().parts() == b.partition().parts());

    Ok(GordonCensus {
        p,
        count: found.len(),
        subgroup_orders,
        partitions: found,
        matches_subgroup_construction,
    })
}

/// Every three-part d-partition of Z_p. The identity part is {0} since
/// the only proper subgroup is trivial, and the inverse axiom leaves two
/// shapes: both nonzero parts symmetric, or each the negation of the
/// other. Candidates are swept in parallel and checked for closure on
/// masks, then every survivor is rebuilt and re-verified.
pub fn enumerate_three_part(p: u32) -> Result<Vec<DPartition>, ZpError> {
    checked_prime(p, SWEEP_PRIME_CAP)?;
    let m = (p - 1) / 2;
    let group = Arc::new(FiniteGroup::cyclic(p as usize).expect("odd prime order"));
    let half = 1u64 << (m - 1);
    // Index idx < half: symmetric shape, idx bits pick pairs {i, p-i} for
    // i = 2..=m and pair 1 is always in π₁. Index idx >= half: transversal
    // shape containing 1, bit i-2 sends i to p-i.
    let candidates: Vec<(AdditiveSet, AdditiveSet)> = (0..2 * half)
        .into_par_iter()
        .filter_map(|idx| {
            let pi1 = if idx < half {
                if idx == half - 1 {
                    return None; // all pairs in π₁ leaves π₂ empty
                }
                symmetric_from_pairs(p, 1 | (idx << 1))
            } else {
                let choice = idx - half;
                let mut s = AdditiveSet::empty(p);
                s.insert(1);
                for i in 2..=m {
                    s.insert(if choice >> (i - 2) & 1 == 1 { p - i } else { i });
                }
                s
            };
            let pi2 = pi1.nonzero_complement();
            let parts = [
                AdditiveSet::from_elems(p, &[0]),
                pi1,
                pi2,
            ];
            // Closure for the pairs not involving {0}; products with the
            // identity part are exact by construction.
            for (i, j) in [(1, 1), (1, 2), (2, 2)] {
                let s = parts[i].sumset(&parts[j]);
                let mut union = AdditiveSet::empty(p);
                for part in &parts {
                    if !s.intersection(part).is_empty() {
                        union = union.union(part);
                    }
                }
                if s != union {
                    return None;
                }
            }
            Some((pi1, pi2))
        })
        .collect();

    let mut out = Vec::with_capacity(candidates.len());
    for (pi1, pi2) in candidates {
        let parts = vec![
            ElementSet::singleton(p as usize, 0),
            pi1.to_element_set(),
            pi2.to_element_set(),
        ];
        let partition = Partition::new(Arc::clone(&group), parts)?;
        out.push(as_d_partition(&partition).expect("mask closure agrees with the axioms"));
    }
    out.sort_by(|a, b| a.partition().cmp(b.partition()));
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ThreePartTag {
    #[serde(rename = "T1_singleton_p3")]
    T1SingletonP3,
    #[serde(rename = "T2_p5")]
    T2P5,
    #[serde(rename = "T3_sym_complete_sumfree")]
    T3SymCompleteSumfree,
    #[serde(rename = "T4_sym_full_sumset")]
    T4SymFullSumset,
    #[serde(rename = "T5_antisym")]
    T5Antisym,
}

#[derive(Debug, Clone, Serialize)]
pub struct ThreePartClass {
    pub tag: ThreePartTag,
    pub p: u32,
    pub pi1: Vec<u32>,
    pub pi2: Vec<u32>,
    /// Whether π₁ ⊆ π₁ + π₁: the one entry of the symmetric-shape tensor
    /// pattern that varies; fixed at false for p ≤ 5 and true for the
    /// antisymmetric shape.
    pub d111: bool,
}

/// Sorts a three-part d-partition of Z_p into its shape: the singleton
/// partition of Z_3, the halving of Z_5, and for p > 5 either symmetric
/// π₁ with π₁+π₁ = {0} ∪ π₂ (complete sum-free), symmetric π₁ with
/// π₁+π₁ = Z_p, or π₂ = -π₁ with π₁+π₁ = π₁ ∪ π₂. Exactly one shape
/// applies; the defining equations and the fixed tensor pattern of the
/// shape are re-derived and asserted on every call.
pub fn classify_three_part(dp: &DPartition) -> Result<ThreePartClass, ZpError> {
    let group = dp.group();
    let p = group.order() as u32;
    let prime_cyclic = (3..=SWEEP_PRIME_CAP).contains(&p)
        && is_prime(p as u64)
        && matches!(group.family(), Some(Family::Cyclic(n)) if n == p as usize);
    if !prime_cyclic || dp.len() != 3 {
        return Err(ZpError::NotThreePartPrime);
    }
    let sets: Vec<AdditiveSet> = dp.parts().iter().map(AdditiveSet::from_element_set).collect();
    debug_assert_eq!(sets[0].to_vec(), [0]);
    // |π₁| ≤ |π₂|; parts are sorted by least element, settling ties.
    let (i1, i2) = if sets[2].len() < sets[1].len() {
        (2, 1)
    } else {
        (1, 2)
    };
    let pi1 = sets[i1];
    let pi2 = sets[i2];
    let s11 = pi1.sumset(&pi1);
    let full = AdditiveSet::full(p);

    let tag = if p == 3 {
        assert_eq!(pi1.to_vec(), [1]);
        ThreePartTag::T1SingletonP3
    } else if p == 5 {
        assert_eq!(pi1.to_vec(), [1, 4]);
        assert_eq!(pi2.to_vec(), [2, 3]);
        ThreePartTag::T2P5
    } else if pi1.is_symmetric() {
        if s11 == pi1.complement() {
            ThreePartTag::T3SymCompleteSumfree
        } else {
            assert_eq!(s11, full, "closure forces the sumset of a symmetric part");
            let half = (p - 1) / 2;
            assert!(
                !(pi2.len() == half && detect_arithmetic_progression(&pi2).is_some()),
                "a full sumset never pairs with a half-length progression"
            );
            ThreePartTag::T4SymFullSumset
        }
    } else {
        assert_eq!(pi2, pi1.neg(), "the inverse axiom pairs the nonzero parts");
        assert_eq!(
            s11,
            pi1.union(&pi2),
            "a transversal part sums onto the nonzero elements"
        );
        ThreePartTag::T5Antisym
    };

    let sc = structure_constants(dp);
    let map = [0, i1, i2];
    let d = |i: usize, j: usize, k: usize| sc.get(map[i], map[j], map[k]);
    let d111 = d(1, 1, 1);
    if p > 5 {
        match tag {
            ThreePartTag::T3SymCompleteSumfree | ThreePartTag::T4SymFullSumset => {
                assert!(
                    d(1, 1, 0)
                        && d(1, 1, 2)
                        && !d(1, 2, 0)
                        && d(1, 2, 1)
                        && d(1, 2, 2)
                        && d(2, 2, 0)
                        && d(2, 2, 1)
                        && d(2, 2, 2),
                    "fixed entries of the symmetric tensor pattern"
                );
                assert_eq!(d111, tag == ThreePartTag::T4SymFullSumset);
            }
            ThreePartTag::T5Antisym => {
                assert!(
                    !d(1, 1, 0)
                        && d(1, 1, 1)
                        && d(1, 1, 2)
                        && d(1, 2, 0)
                        && d(1, 2, 1)
                        && d(1, 2, 2)
                        && !d(2, 2, 0)
                        && d(2, 2, 1)
                        && d(2, 2, 2),
                    "fixed entries of the antisymmetric tensor pattern"
                );
            }
            _ => unreachable!("p > 5 shapes"),
        }
    }

    Ok(ThreePartClass {
        tag,
        p,
        pi1: pi1.to_vec(),
        pi2: pi2.to_vec(),
        d111,
    })
}

/// Symmetric S of nonzero elements with S+S exactly the complement of S
/// (which holds 0). Swept over all 2^((p-1)/2) symmetric sets; results
/// ascend in the set order.
pub fn solve_eq1(p: u32) -> Result<Vec<AdditiveSet>, ZpError> {
    checked_prime(p, SWEEP_PRIME_CAP)?;
    let m = (p - 1) / 2;
    let mut out = Vec::new();
    for q in 1..1u64 << m {
        let s = symmetric_from_pairs(p, q);
        if s.sumset(&s) == s.complement() {
            out.push(s);
        }
    }
    out.sort();
    Ok(out)
}

/// Symmetric S of nonzero elements with S+S all of Z_p, at most half
/// the nonzero elements (S stands for the smaller part), excluding S
/// whose nonzero complement is an arithmetic progression of length
/// (p-1)/2. The progression clause only bites at |S| = (p-1)/2, so only
/// for p ≡ 1 mod 4 where that size is even.
pub fn solve_eq2(p: u32) -> Result<Vec<AdditiveSet>, ZpError> {
    checked_prime(p, SWEEP_PRIME_CAP)?;
    let m = (p - 1) / 2;
    let full = AdditiveSet::full(p);
    let mut out = Vec::new();
    for q in 1..1u64 << m {
        let s = symmetric_from_pairs(p, q);
        if s.len() > m || s.sumset(&s) != full {
            continue;
        }
        let rest = s.nonzero_complement();
        if rest.len() == m && detect_arithmetic_progression(&rest).is_some() {
            continue;
        }
        out.push(s);
    }
    out.sort();
    Ok(out)
}

/// Transversals S of the ± pairs (one of i, p-i each, so S ∩ -S = ∅ and
/// |S| = (p-1)/2) with S+S exactly the nonzero elements and S not an
/// arithmetic progression. S and -S solve together, giving each
/// partition twice.
pub fn solve_eq3(p: u32) -> Result<Vec<AdditiveSet>, ZpError> {
    checked_prime(p, SWEEP_PRIME_CAP)?;
    let m = (p - 1) / 2;
    let mut target = AdditiveSet::full(p);
    target.remove(0);
    let mut out = Vec::new();
    for c in 0..1u64 << m {
        let mut s = AdditiveSet::empty(p);
        for i in 1..=m {
            s.insert(if c >> (i - 1) & 1 == 1 { p - i } else { i });
        }
        if s.sumset(&s) == target && detect_arithmetic_progression(&s).is_none() {
            out.push(s);
        }
    }
    out.sort();
    Ok(out)
}

/// An avoiding set: symmetric, no 0, and its positive representatives
/// i₁ < … < i_k pairwise at least 2 apart including the wrap gap
/// p - i_k ≥ i_k + 2. The empty set counts vacuously.
pub fn is_avoiding(set: &AdditiveSet) -> bool {
    if set.contains(0) || !set.is_symmetric() {
        return false;
    }
    let p = set.p();
    let reps: Vec<u32> = set.iter().filter(|&x| x <= (p - 1) / 2).collect();
    for w in reps.windows(2) {
        if w[1] < w[0] + 2 {
            return false;
        }
    }
    match reps.last() {
        Some(&last) => p - last >= last + 2,
        None => true,
    }
}

/// Number of avoiding sets of size s: choosing s/2 representatives with
/// gaps of at least 2 from the cyclic range leaves C((p-1)/2 - s/2, s/2).
pub fn count_avoiding(p: u32, s: u32) -> Result<u64, ZpError> {
    checked_prime(p, SWEEP_PRIME_CAP)?;
    if !s.is_multiple_of(2) {
        return Err(ZpError::OddSetSize { s });
    }
    if s >= p {
        return Err(ZpError::SetSizeOutOfRange { s, p });
    }
    let m = (p as u64 - 1) / 2;
    let k = s as u64 / 2;
    Ok(binomial(m - k, k))
}

#[derive(Debug, Clone, Serialize)]
pub struct AvoidingCheck {
    pub p: u32,
    pub sets_checked: u64,
    pub holds: bool,
    pub counterexample: Option<Vec<u32>>,
}

/// For every nonempty symmetric set S of nonzero elements: some unit
/// multiple of S is avoiding exactly when S+S misses part of Z_p.
pub fn avoiding_characterization_check(p: u32) -> Result<AvoidingCheck, ZpError> {
    checked_prime(p, SWEEP_PRIME_CAP)?;
    let m = (p - 1) / 2;
    let full = AdditiveSet::full(p);
    let mut sets_checked = 0;
    for q in 1..1u64 << m {
        let s = symmetric_from_pairs(p, q);
        sets_checked += 1;
        let misses = s.sumset(&s) != full;
        let scalable = (1..p).any(|u| is_avoiding(&s.scale(u)));
        if misses != scalable {
            return Ok(AvoidingCheck {
                p,
                sets_checked,
                holds: false,
                counterexample: Some(s.to_vec()),
            });
        }
    }
    Ok(AvoidingCheck {
        p,
        sets_checked,
        holds: true,
        counterexample: None,
    })
}

/// The symmetric complete sum-free set of maximal size: the interval
/// [k+1, 2k+1] for p = 3k+2, and {k} ∪ [k+2, 2k-1] ∪ {2k+1} for
/// p = 3k+1 with k ≥ 4. Nothing of this shape exists for p = 7.
pub fn extremal_symmetric_complete_sumfree(p: u32) -> Result<AdditiveSet, ZpError> {
    checked_prime(p, SWEEP_PRIME_CAP)?;
    let mut s = AdditiveSet::empty(p);
    match p % 3 {
        2 => {
            let k = (p - 2) / 3;
            for x in k + 1..=2 * k + 1 {
                s.insert(x);
            }
        }
        1 => {
            let k = (p - 1) / 3;
            if k < 4 {
                return Err(ZpError::NoExtremalSet { p });
            }
            s.insert(k);
            for x in k + 2..=2 * k - 1 {
                s.insert(x);
            }
            s.insert(2 * k + 1);
        }
        _ => return Err(ZpError::NoExtremalSet { p }),
    }
    debug_assert!(s.is_symmetric());
    debug_assert_eq!(s.sumset(&s), s.complement());
    Ok(s)
}

/// Tallies and cross-checks for the three-part classification of Z_p.
#[derive(Debug, Clone, Serialize)]
pub struct CensusReport {
    pub p: u32,
    pub total: usize,
    pub t1: usize,
    pub t2: usize,
    pub t3: usize,
    pub t4: usize,
    pub t5: usize,
    pub eq1_sets: usize,
    pub eq2_sets: usize,
    pub eq2_partitions: usize,
    pub eq3_sets: usize,
    pub eq3_partitions: usize,
    pub eq3_sets_formula: u64,
    pub eq3_partitions_formula: u64,
    pub s_partition_members: usize,
    pub s_partition_tags: Vec<ThreePartTag>,
    pub agrees: bool,
}

/// Enumerates and classifies every three-part d-partition of Z_p, then
/// cross-checks the tallies against the independent equation sweeps: for
/// p > 5, symmetric complete sum-free solutions match the count of the
/// first symmetric shape, deduplicated full-sumset solutions the second,
/// halved transversal solutions the antisymmetric shape, the transversal
/// count matches its closed form, and exactly one member has constant
/// pair counts (the coset partition of the half-index unit subgroup,
/// symmetric shape for p ≡ 1 mod 4 and transversal shape for
/// p ≡ 3 mod 4).
pub fn classification_census(p: u32) -> Result<CensusReport, ZpError> {
    checked_prime(p, SWEEP_PRIME_CAP)?;
    let members = enumerate_three_part(p)?;
    let mut tally = [0usize; 5];
    let mut s_partition_tags = Vec::new();
    for dp in &members {
        let class = classify_three_part(dp)?;
        let slot = match class.tag {
            ThreePartTag::T1SingletonP3 => 0,
            ThreePartTag::T2P5 => 1,
            ThreePartTag::T3SymCompleteSumfree => 2,
            ThreePartTag::T4SymFullSumset => 3,
            ThreePartTag::T5Antisym => 4,
        };
        tally[slot] += 1;
        if is_s_partition(dp.partition())?.is_yes() {
            s_partition_tags.push(class.tag);
        }
    }

    let eq1 = solve_eq1(p)?;
    let eq2 = solve_eq2(p)?;
    let eq3 = solve_eq3(p)?;
    let eq2_partitions = eq2
        .iter()
        .map(|s| s.mask().min(s.nonzero_complement().mask()))
        .collect::<BTreeSet<u64>>()
        .len();
    let eq3_partitions = eq3
        .iter()
        .map(|s| s.mask().min(s.neg().mask()))
        .collect::<BTreeSet<u64>>()
        .len();
    let m = (p - 1) / 2;
    let eq3_sets_formula = (1u64 << m).saturating_sub(p as u64 - 1);
    let eq3_partitions_formula = (1u64 << (m - 1)).saturating_sub((p as u64 - 1) / 2);

    let total = members.len();
    let mut agrees = total == tally.iter().sum::<usize>();
    let s_partition_members = s_partition_tags.len();
    match p {
        3 => agrees &= tally == [1, 0, 0, 0, 0] && s_partition_members == 1,
        5 => agrees &= tally == [0, 1, 0, 0, 0] && s_partition_members == 1,
        _ => {
            agrees &= tally[0] == 0 && tally[1] == 0;
            agrees &= tally[2] == eq1.len();
            agrees &= tally[3] == eq2_partitions;
            agrees &= tally[4] == eq3_partitions;
            agrees &= eq3.len() as u64 == eq3_sets_formula;
            agrees &= eq3_partitions as u64 == eq3_partitions_formula;
            let expected = if p % 4 == 1 {
                ThreePartTag::T4SymFullSumset
            } else {
                ThreePartTag::T5Antisym
            };
            agrees &= s_partition_tags == [expected];
            if p >= 11 {
                agrees &= tally[2] >= 1;
            }
        }
    }

    Ok(CensusReport {
        p,
        total,
        t1: tally[0],
        t2: tally[1],
        t3: tally[2],
        t4: tally[3],
        t5: tally[4],
        eq1_sets: eq1.len(),
        eq2_sets: eq2.len(),
        eq2_partitions,
        eq3_sets: eq3.len(),
        eq3_partitions,
        eq3_sets_formula,
        eq3_partitions_formula,
        s_partition_members,
        s_partition_tags,
        agrees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn aset(p: u32, elems: &[u32]) -> AdditiveSet {
        AdditiveSet::from_elems(p, elems)
    }

    #[test]
    fn additive_set_arithmetic() {
        let s = aset(7, &[1, 2, 4]);
        assert_eq!(s.sumset(&s).to_vec(), [1, 2, 3, 4, 5, 6]);
        assert_eq!(s.neg().to_vec(), [3, 5, 6]);
        assert_eq!(s.scale(2).to_vec(), [1, 2, 4]);
        assert!(!s.is_symmetric());
        assert!(aset(7, &[1, 6]).is_symmetric());
        assert_eq!(aset(7, &[1, 6]).complement().to_vec(), [0, 2, 3, 4, 5]);
        assert_eq!(aset(7, &[1, 6]).nonzero_complement().to_vec(), [2, 3, 4, 5]);
        // Wrap-around sums.
        assert_eq!(aset(5, &[3, 4]).sumset(&aset(5, &[3])).to_vec(), [1, 2]);
        assert_eq!(aset(5, &[0]).sumset(&aset(5, &[2, 3])).to_vec(), [2, 3]);
        assert!(aset(5, &[]).sumset(&aset(5, &[1])).is_empty());
    }

    #[test]
    fn arithmetic_progressions_are_detected() {
        let ap = detect_arithmetic_progression(&aset(11, &[4, 5, 6, 7])).unwrap();
        assert_eq!((ap.start, ap.step, ap.len), (4, 1, 4));
        let ap = detect_arithmetic_progression(&aset(7, &[2, 4, 6])).unwrap();
        assert_eq!((ap.start, ap.step, ap.len), (2, 2, 3));
        assert_eq!(detect_arithmetic_progression(&aset(7, &[1, 2, 4])), None);
        // Wrapping progression; the reversed reading (1, 0, 6) wins the
        // lexicographic tie-break over (6, 7-6=1).
        let ap = detect_arithmetic_progression(&aset(7, &[6, 0, 1])).unwrap();
        assert_eq!((ap.start, ap.step, ap.len), (1, 6, 3));
        // Degenerate sizes.
        assert_eq!(detect_arithmetic_progression(&aset(7, &[])), None);
        let ap = detect_arithmetic_progression(&aset(7, &[3])).unwrap();
        assert_eq!((ap.start, ap.step, ap.len), (3, 1, 1));
        let ap = detect_arithmetic_progression(&AdditiveSet::full(7)).unwrap();
        assert_eq!((ap.start, ap.step, ap.len), (0, 1, 7));
    }

    #[test]
    fn unit_subgroups_and_their_partitions() {
        let subs = multiplicative_subgroups(7).unwrap();
        let views: Vec<Vec<u32>> = subs.iter().map(|s| s.to_vec()).collect();
        assert_eq!(
            views,
            [vec![1], vec![1, 6], vec![1, 2, 4], vec![1, 2, 3, 4, 5, 6]]
        );
        assert_eq!(multiplicative_subgroups(13).unwrap().len(), 6);

        let qr = pi_multiplicative(7, &subs[2]).unwrap();
        let sizes = qr.partition().part_sizes();
        assert_eq!(sizes, [1, 3, 3]);
        assert_eq!(qr.parts()[1].to_vec(), [1, 2, 4]);

        let singletons = pi_multiplicative(7, &subs[0]).unwrap();
        assert_eq!(singletons.len(), 7);
        let two_part = pi_multiplicative(7, &subs[3]).unwrap();
        assert_eq!(two_part.len(), 2);

        assert_eq!(
            pi_multiplicative(7, &aset(7, &[1, 2])).unwrap_err(),
            ZpError::NotAUnitSubgroup(vec![1, 2])
        );
    }

    #[test]
    fn census_of_constant_pair_counts() {
        // Counts are the divisor counts of p-1.
        for (p, expect) in [(3, 2), (5, 3), (7, 4)] {
            let census = gordon_census(p).unwrap();
            assert_eq!(census.count, expect, "p = {p}");
            assert!(census.matches_subgroup_construction);
            assert_eq!(census.subgroup_orders.len(), expect);
        }
        assert_eq!(
            gordon_census(13).unwrap_err(),
            ZpError::PrimeTooLarge { p: 13, cap: 11 }
        );
    }

    #[test]
    fn three_part_enumeration_small() {
        assert_eq!(enumerate_three_part(3).unwrap().len(), 1);
        assert_eq!(enumerate_three_part(5).unwrap().len(), 1);
        let sevens = enumerate_three_part(7).unwrap();
        assert_eq!(sevens.len(), 1);
        assert_eq!(sevens[0].parts()[1].to_vec(), [1, 2, 4]);
        assert_eq!(enumerate_three_part(4).unwrap_err(), ZpError::NotPrime { n: 4 });
    }

    #[test]
    fn classification_of_known_shapes() {
        let t1 = classify_three_part(&enumerate_three_part(3).unwrap()[0]).unwrap();
        assert_eq!(t1.tag, ThreePartTag::T1SingletonP3);
        assert!(!t1.d111);

        let t2 = classify_three_part(&enumerate_three_part(5).unwrap()[0]).unwrap();
        assert_eq!(t2.tag, ThreePartTag::T2P5);
        assert!(!t2.d111);

        let qr7 = pi_multiplicative(7, &aset(7, &[1, 2, 4])).unwrap();
        let t5 = classify_three_part(&qr7).unwrap();
        assert_eq!(t5.tag, ThreePartTag::T5Antisym);
        assert!(t5.d111);
        assert_eq!(t5.pi1, [1, 2, 4]);

        // Quadratic residues mod 13 are symmetric with full sumset.
        let qr13 = pi_multiplicative(13, &aset(13, &[1, 3, 4, 9, 10, 12])).unwrap();
        let t4 = classify_three_part(&qr13).unwrap();
        assert_eq!(t4.tag, ThreePartTag::T4SymFullSumset);
        assert!(t4.d111);

        // The extremal interval for p = 11.
        let g11 = Arc::new(FiniteGroup::cyclic(11).unwrap());
        let lists = vec![vec![0], vec![4, 5, 6, 7], vec![1, 2, 3, 8, 9, 10]];
        let partition = Partition::from_index_lists(&g11, &lists).unwrap();
        let t3 = classify_three_part(&as_d_partition(&partition).unwrap()).unwrap();
        assert_eq!(t3.tag, ThreePartTag::T3SymCompleteSumfree);
        assert!(!t3.d111);
        assert_eq!(t3.pi1, [4, 5, 6, 7]);

        let improper = as_d_partition(&Partition::one_part(&g11)).unwrap();
        assert_eq!(
            classify_three_part(&improper).unwrap_err(),
            ZpError::NotThreePartPrime
        );
    }

    #[test]
    fn equation_sweeps_match_known_solutions() {
        assert!(solve_eq1(7).unwrap().is_empty());
        assert!(solve_eq2(7).unwrap().is_empty());
        let eq3 = solve_eq3(7).unwrap();
        let views: Vec<Vec<u32>> = eq3.iter().map(|s| s.to_vec()).collect();
        assert_eq!(views, [vec![1, 2, 4], vec![3, 5, 6]]);

        let eq1 = solve_eq1(11).unwrap();
        assert!(eq1.contains(&aset(11, &[4, 5, 6, 7])));
        let eq1 = solve_eq1(13).unwrap();
        assert!(eq1.contains(&aset(13, &[4, 6, 7, 9])));

        // Quadratic residues and non-residues mod 13 both solve the full
        // sumset equation and induce the same partition.
        let eq2 = solve_eq2(13).unwrap();
        assert!(eq2.contains(&aset(13, &[1, 3, 4, 9, 10, 12])));
        assert!(eq2.contains(&aset(13, &[2, 5, 6, 7, 8, 11])));
        // The excluded family: complement is a half-length progression.
        assert!(!eq2.contains(&aset(13, &[1, 2, 3, 10, 11, 12])));
        let s = aset(13, &[1, 2, 3, 10, 11, 12]);
        assert_eq!(s.sumset(&s), AdditiveSet::full(13));
    }

    #[test]
    fn avoiding_sets() {
        assert!(is_avoiding(&aset(11, &[1, 3, 8, 10])));
        assert!(!is_avoiding(&aset(5, &[2, 3])));
        assert!(is_avoiding(&aset(5, &[2, 3]).scale(3)));
        assert!(!is_avoiding(&aset(7, &[1, 2, 5, 6])));
        assert!(!is_avoiding(&aset(7, &[1, 2, 4])));
        assert!(is_avoiding(&aset(7, &[])));

        assert_eq!(count_avoiding(5, 2).unwrap(), 1);
        assert_eq!(count_avoiding(11, 2).unwrap(), 4);
        assert_eq!(count_avoiding(11, 4).unwrap(), 3);
        assert_eq!(count_avoiding(11, 0).unwrap(), 1);
        assert_eq!(count_avoiding(11, 3).unwrap_err(), ZpError::OddSetSize { s: 3 });
        assert_eq!(
            count_avoiding(11, 12).unwrap_err(),
            ZpError::SetSizeOutOfRange { s: 12, p: 11 }
        );

        let check = avoiding_characterization_check(7).unwrap();
        assert!(check.holds);
        assert_eq!(check.sets_checked, 7);
    }

    #[test]
    fn extremal_sets() {
        assert_eq!(
            extremal_symmetric_complete_sumfree(11).unwrap().to_vec(),
            [4, 5, 6, 7]
        );
        assert_eq!(
            extremal_symmetric_complete_sumfree(13).unwrap().to_vec(),
            [4, 6, 7, 9]
        );
        assert_eq!(
            extremal_symmetric_complete_sumfree(17).unwrap().to_vec(),
            [6, 7, 8, 9, 10, 11]
        );
        assert_eq!(
            extremal_symmetric_complete_sumfree(19).unwrap().to_vec(),
            [6, 8, 9, 10, 11, 13]
        );
        assert_eq!(
            extremal_symmetric_complete_sumfree(23).unwrap().to_vec(),
            [8, 9, 10, 11, 12, 13, 14, 15]
        );
        assert_eq!(
            extremal_symmetric_complete_sumfree(7).unwrap_err(),
            ZpError::NoExtremalSet { p: 7 }
        );
        // Membership in the full sweep.
        assert!(solve_eq1(13)
            .unwrap()
            .contains(&extremal_symmetric_complete_sumfree(13).unwrap()));
    }

    #[test]
    fn census_cross_checks() {
        let c7 = classification_census(7).unwrap();
        assert!(c7.agrees);
        assert_eq!(c7.total, 1);
        assert_eq!((c7.t3, c7.t4, c7.t5), (0, 0, 1));
        assert_eq!(c7.eq3_sets, 2);
        assert_eq!(c7.eq3_partitions, 1);
        assert_eq!(c7.s_partition_tags, [ThreePartTag::T5Antisym]);

        let c11 = classification_census(11).unwrap();
        assert!(c11.agrees);
        assert_eq!(c11.t5, 11);
        assert!(c11.t3 >= 1);
        assert_eq!(c11.total, c11.t3 + c11.t4 + c11.t5);
        assert_eq!(c11.s_partition_tags, [ThreePartTag::T5Antisym]);

        let c13 = classification_census(13).unwrap();
        assert!(c13.agrees);
        assert_eq!(c13.t5, 26);
        assert_eq!(c13.s_partition_tags, [ThreePartTag::T4SymFullSumset]);
        // Residues and non-residues collapse to one partition.
        assert!(c13.eq2_partitions < c13.eq2_sets);

        let c3 = classification_census(3).unwrap();
        assert!(c3.agrees && c3.t1 == 1);
        let c5 = classification_census(5).unwrap();
        assert!(c5.agrees && c5.t2 == 1);
    }
}
