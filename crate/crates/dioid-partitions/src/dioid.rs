//! The algebra a d-partition induces, and checks of its axioms.
//!
//! A d-partition Π of G yields the carrier D_Π = {unions of parts} ∪ {∅}
//! with a ⊕ b = a ∪ b and a ⊗ b = the setwise product. Closure makes ⊗
//! well defined, ∅ is ⊕-neutral and ⊗-absorbing, the identity part is
//! ⊗-neutral, and ⊕ is idempotent, so the canonical preorder
//! a ≤ b ⟺ ∃c a ⊕ c = b coincides with set inclusion and is a genuine
//! order: D_Π is a dioid.
//!
//! The whole structure is encoded by the 0/1 structure constants
//! d^k_{i,j} = [π_k ⊆ π_i π_j]. Isomorphism of d-partitions is a part
//! bijection preserving the constants; part sizes are allowed to differ.
//!
//! When pair counts are constant (for every z the number of pairs
//! (x, y) ∈ π_i × π_j with xy = z depends only on the part of z) the
//! partition also spans a Schur-like subring of the group algebra, and
//! the 0/1 constants are exactly the support of the integer ones.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::comb;
use crate::limits;
use crate::partition::{
    as_d_partition, is_s_partition, DPartition, PairCountWitness, Partition, PartitionError,
    SPartitionOutcome,
};
use crate::set::ElementSet;
use crate::group::FiniteGroup;

#[derive(Debug, Error)]
pub enum DioidError {
    #[error("{parts} parts exceed the 128-part mask limit")]
    TooManyParts { parts: usize },
    #[error("order {order} exceeds the cap {cap} for this sweep")]
    OrderTooLarge { order: usize, cap: usize },
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// The 0/1 tensor d^k_{i,j} = [π_k ⊆ π_i π_j] of a d-partition, plus the
/// identity part index and the inversion pairing. Rows are bit-packed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants {
    h: usize,
    identity: usize,
    pairing: Vec<usize>,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl StructureConstants {
    pub fn parts(&self) -> usize {
        self.h
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn pairing(&self) -> &[usize] {
        &self.pairing
    }

    /// d^k_{i,j}: whether part k lies inside the product of parts i and j.
    pub fn get(&self, i: usize, j: usize, k: usize) -> bool {
        let row = (i * self.h + j) * self.words_per_row;
        self.bits[row + k / 64] >> (k % 64) & 1 == 1
    }

    fn product_mask(&self, i: usize, j: usize) -> u128 {
        debug_assert!(self.h <= 128);
        let row = (i * self.h + j) * self.words_per_row;
        let mut mask = self.bits[row] as u128;
        if self.words_per_row == 2 {
            mask |= (self.bits[row + 1] as u128) << 64;
        }
        mask
    }
}

impl Serialize for StructureConstants {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let h = self.h;
        let d: Vec<Vec<Vec<u8>>> = (0..h)
            .map(|i| {
                (0..h)
                    .map(|j| (0..h).map(|k| u8::from(self.get(i, j, k))).collect())
                    .collect()
            })
            .collect();
        let mut st = serializer.serialize_struct("StructureConstants", 4)?;
        st.serialize_field("h", &h)?;
        st.serialize_field("identity", &self.identity)?;
        st.serialize_field("pairing", &self.pairing)?;
        st.serialize_field("d", &d)?;
        st.end()
    }
}

/// Computes the structure constants of a verified d-partition and
/// asserts the laws they must obey: products decompose exactly into the
/// flagged parts, the identity part multiplies neutrally, every product
/// is non-empty, and the identity part appears in π_i π_j exactly when
/// π_j is the inverse part of π_i.
pub fn structure_constants(dp: &DPartition) -> StructureConstants {
    let parts = dp.parts();
    let h = parts.len();
    let group = dp.group();
    let words_per_row = h.div_ceil(64);
    let mut bits = vec![0u64; h * h * words_per_row];
    for i in 0..h {
        for j in 0..h {
            let prod = group.setwise_product(&parts[i], &parts[j]);
            let row = (i * h + j) * words_per_row;
            let mut union = ElementSet::empty(group.order());
            for (k, part) in parts.iter().enumerate() {
                if part.is_subset(&prod) {
                    bits[row + k / 64] |= 1 << (k % 64);
                    union.union_with(part);
                }
            }
            assert_eq!(union, prod, "closure: each product is a union of parts");
        }
    }
    let sc = StructureConstants {
        h,
        identity: dp.identity_part(),
        pairing: dp.pairing().to_vec(),
        words_per_row,
        bits,
    };
    let e = sc.identity;
    for i in 0..h {
        for k in 0..h {
            assert_eq!(sc.get(e, i, k), k == i, "identity part is left neutral");
            assert_eq!(sc.get(i, e, k), k == i, "identity part is right neutral");
        }
        for j in 0..h {
            assert_eq!(
                sc.get(i, j, e),
                sc.pairing[i] == j,
                "identity part arises exactly from inverse pairs"
            );
        }
    }
    sc
}

/// How a verification phase covered its space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum Coverage {
    Exhaustive { checked: u64 },
    Sampled { checked: u64, seed: u64 },
}

#[derive(Debug, Clone, Serialize)]
pub struct DioidViolation {
    pub law: &'static str,
    /// Each operand is a union of parts, listed by part index.
    pub operands: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DioidReport {
    pub parts: usize,
    pub epsilon_distinct_from_identity: bool,
    /// Associativity of ⊗ over all h^3 single-part triples; the general
    /// law follows from these by distributivity, so this pass always runs
    /// in full.
    pub part_triples_checked: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elements: Option<Coverage>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pairs: Option<Coverage>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub triples: Option<Coverage>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<DioidViolation>,
    pub ok: bool,
}

#[derive(Debug, Clone)]
pub struct DioidCheckOptions {
    pub element_cap: u64,
    pub pair_budget: u64,
    pub triple_budget: u64,
    pub samples: u32,
    pub seed: u64,
}

impl Default for DioidCheckOptions {
    fn default() -> Self {
        DioidCheckOptions {
            element_cap: limits::DIOID_EXHAUSTIVE_CAP as u64,
            pair_budget: limits::DIOID_PAIR_BUDGET,
            triple_budget: limits::DIOID_TRIPLE_BUDGET,
            samples: limits::DIOID_SAMPLES,
            seed: limits::DIOID_SEED,
        }
    }
}

fn mask_to_parts(mask: u128) -> Vec<usize> {
    let mut out = Vec::new();
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

/// Verifies the dioid axioms of D_Π on the carrier of part-index masks.
/// Elements of D_Π are unions of parts (∅ included), so each axiom is a
/// mask identity. Single-part ⊗-associativity is always exhausted;
/// element, pair and triple sweeps over the full carrier are exhaustive
/// within the budgets and seeded-sampled beyond them.
pub fn verify_dioid_axioms(
    sc: &StructureConstants,
    opts: &DioidCheckOptions,
) -> Result<DioidReport, DioidError> {
    let h = sc.parts();
    if h > 128 {
        return Err(DioidError::TooManyParts { parts: h });
    }
    let full: u128 = if h == 128 {
        u128::MAX
    } else {
        (1u128 << h) - 1
    };
    let e_mask: u128 = 1u128 << sc.identity();
    let table: Vec<u128> = (0..h * h)
        .map(|idx| sc.product_mask(idx / h, idx % h))
        .collect();
    let prod = |a: u128, b: u128| -> u128 {
        let mut acc = 0u128;
        let mut x = a;
        while x != 0 {
            let i = x.trailing_zeros() as usize;
            x &= x - 1;
            let row = i * h;
            let mut y = b;
            while y != 0 {
                let j = y.trailing_zeros() as usize;
                y &= y - 1;
                acc |= table[row + j];
            }
        }
        acc
    };
    // Named so the laws below exercise the operation rather than facts
    // the mask representation grants for free.
    let add = |a: u128, b: u128| -> u128 { a | b };

    let mut report = DioidReport {
        parts: h,
        epsilon_distinct_from_identity: e_mask != 0,
        part_triples_checked: 0,
        elements: None,
        pairs: None,
        triples: None,
        violation: None,
        ok: false,
    };

    for i in 0..h {
        for j in 0..h {
            for k in 0..h {
                report.part_triples_checked += 1;
                let left = prod(table[i * h + j], 1u128 << k);
                let right = prod(1u128 << i, table[j * h + k]);
                if left != right {
                    report.violation = Some(DioidViolation {
                        law: "multiplication associative",
                        operands: vec![vec![i], vec![j], vec![k]],
                    });
                    return Ok(report);
                }
            }
        }
    }

    let check_element = |a: u128| -> Option<DioidViolation> {
        let fail = |law| {
            Some(DioidViolation {
                law,
                operands: vec![mask_to_parts(a)],
            })
        };
        if add(0, a) != a || add(a, 0) != a {
            return fail("empty set add neutral");
        }
        if add(a, a) != a {
            return fail("addition idempotent");
        }
        if prod(0, a) != 0 || prod(a, 0) != 0 {
            return fail("empty set absorbing");
        }
        if prod(e_mask, a) != a {
            return fail("identity part left neutral");
        }
        if prod(a, e_mask) != a {
            return fail("identity part right neutral");
        }
        None
    };
    let check_pair = |a: u128, b: u128| -> Option<DioidViolation> {
        let fail = |law| {
            Some(DioidViolation {
                law,
                operands: vec![mask_to_parts(a), mask_to_parts(b)],
            })
        };
        if add(a, b) != add(b, a) {
            return fail("addition commutative");
        }
        // a ≤ b means ∃c: a ⊕ c = b, i.e. a ⊕ b == b.
        if add(a, b) == b && add(b, a) == a && a != b {
            return fail("canonical order antisymmetric");
        }
        None
    };
    let check_triple = |a: u128, b: u128, c: u128| -> Option<DioidViolation> {
        let fail = |law| {
            Some(DioidViolation {
                law,
                operands: vec![mask_to_parts(a), mask_to_parts(b), mask_to_parts(c)],
            })
        };
        if add(add(a, b), c) != add(a, add(b, c)) {
            return fail("addition associative");
        }
        if prod(prod(a, b), c) != prod(a, prod(b, c)) {
            return fail("multiplication associative");
        }
        if prod(a, add(b, c)) != add(prod(a, b), prod(a, c)) {
            return fail("left distributive");
        }
        if prod(add(b, c), a) != add(prod(b, a), prod(c, a)) {
            return fail("right distributive");
        }
        None
    };

    let count_within = |arity: u32, budget: u64| -> Option<u64> {
        let bits = (h as u32).checked_mul(arity)?;
        if bits >= 64 {
            return None;
        }
        let count = 1u64 << bits;
        (count <= budget).then_some(count)
    };
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let sample = |rng: &mut ChaCha8Rng| rng.gen::<u128>() & full;

    // Element phase.
    if let Some(count) = count_within(1, opts.element_cap) {
        for a in 0..count {
            if let Some(v) = check_element(a as u128) {
                report.elements = Some(Coverage::Exhaustive { checked: a + 1 });
                report.violation = Some(v);
                return Ok(report);
            }
        }
        report.elements = Some(Coverage::Exhaustive { checked: count });
    } else {
        for i in 0..opts.samples {
            let a = sample(&mut rng);
            if let Some(v) = check_element(a) {
                report.elements = Some(Coverage::Sampled {
                    checked: (i + 1) as u64,
                    seed: opts.seed,
                });
                report.violation = Some(v);
                return Ok(report);
            }
        }
        report.elements = Some(Coverage::Sampled {
            checked: opts.samples as u64,
            seed: opts.seed,
        });
    }

    // Pair phase.
    if let Some(count) = count_within(2, opts.pair_budget) {
        let side = 1u128 << h;
        let mut checked = 0u64;
        for a in 0..side {
            for b in 0..side {
                checked += 1;
                if let Some(v) = check_pair(a, b) {
                    report.pairs = Some(Coverage::Exhaustive { checked });
                    report.violation = Some(v);
                    return Ok(report);
                }
            }
        }
        debug_assert_eq!(checked, count);
        report.pairs = Some(Coverage::Exhaustive { checked });
    } else {
        for i in 0..opts.samples {
            let (a, b) = (sample(&mut rng), sample(&mut rng));
            if let Some(v) = check_pair(a, b) {
                report.pairs = Some(Coverage::Sampled {
                    checked: (i + 1) as u64,
                    seed: opts.seed,
                });
                report.violation = Some(v);
                return Ok(report);
            }
        }
        report.pairs = Some(Coverage::Sampled {
            checked: opts.samples as u64,
            seed: opts.seed,
        });
    }

    // Triple phase.
    if let Some(count) = count_within(3, opts.triple_budget) {
        let side = 1u128 << h;
        let mut checked = 0u64;
        for a in 0..side {
            for b in 0..side {
                for c in 0..side {
                    checked += 1;
                    if let Some(v) = check_triple(a, b, c) {
                        report.triples = Some(Coverage::Exhaustive { checked });
                        report.violation = Some(v);
                        return Ok(report);
                    }
                }
            }
        }
        debug_assert_eq!(checked, count);
        report.triples = Some(Coverage::Exhaustive { checked });
    } else {
        for i in 0..opts.samples {
            let (a, b, c) = (sample(&mut rng), sample(&mut rng), sample(&mut rng));
            if let Some(v) = check_triple(a, b, c) {
                report.triples = Some(Coverage::Sampled {
                    checked: (i + 1) as u64,
                    seed: opts.seed,
                });
                report.violation = Some(v);
                return Ok(report);
            }
        }
        report.triples = Some(Coverage::Sampled {
            checked: opts.samples as u64,
            seed: opts.seed,
        });
    }

    report.ok = report.epsilon_distinct_from_identity && report.violation.is_none();
    Ok(report)
}

/// Integer pair-count constants s^k_{i,j}: for z in π_k, the number of
/// pairs (x, y) ∈ π_i × π_j with xy = z. Carries the counting identity
/// Σ_k s^k_{i,j} |π_k| = |π_i| |π_j|, checked at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurRingConstants {
    h: usize,
    identity: usize,
    pairing: Vec<usize>,
    s: Vec<u32>,
}

impl SchurRingConstants {
    pub(crate) fn new(
        h: usize,
        identity: usize,
        pairing: Vec<usize>,
        s: Vec<u32>,
        part_sizes: &[usize],
    ) -> Self {
        assert_eq!(s.len(), h * h * h);
        assert_eq!(part_sizes.len(), h);
        for i in 0..h {
            for j in 0..h {
                let weighted: u64 = (0..h)
                    .map(|k| s[(i * h + j) * h + k] as u64 * part_sizes[k] as u64)
                    .sum();
                assert_eq!(
                    weighted,
                    (part_sizes[i] * part_sizes[j]) as u64,
                    "pair counts weighted by part sizes recover |π_i| |π_j|"
                );
            }
        }
        SchurRingConstants {
            h,
            identity,
            pairing,
            s,
        }
    }

    pub fn parts(&self) -> usize {
        self.h
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn pairing(&self) -> &[usize] {
        &self.pairing
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> u32 {
        self.s[(i * self.h + j) * self.h + k]
    }
}

impl Serialize for SchurRingConstants {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let h = self.h;
        let s: Vec<Vec<Vec<u32>>> = (0..h)
            .map(|i| {
                (0..h)
                    .map(|j| (0..h).map(|k| self.get(i, j, k)).collect())
                    .collect()
            })
            .collect();
        let mut st = serializer.serialize_struct("SchurRingConstants", 4)?;
        st.serialize_field("h", &h)?;
        st.serialize_field("identity", &self.identity)?;
        st.serialize_field("pairing", &self.pairing)?;
        st.serialize_field("s", &s)?;
        st.end()
    }
}

#[derive(Debug, Error)]
pub enum SchurError {
    #[error(transparent)]
    Precondition(#[from] PartitionError),
    #[error("pair counts are not constant: parts {} and {} reach {} by {} pairs but {} by {} pairs inside part {}", .0.left, .0.right, .0.z1, .0.count1, .0.z2, .0.count2, .0.part)]
    NotConstant(PairCountWitness),
}

/// Pair-count constants of a d-partition, or why they do not exist.
pub fn schur_ring_constants(dp: &DPartition) -> Result<SchurRingConstants, SchurError> {
    match is_s_partition(dp.partition())? {
        SPartitionOutcome::Yes(sc) => Ok(sc),
        SPartitionOutcome::No(witness) => Err(SchurError::NotConstant(witness)),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SdCorrespondence {
    pub constants: StructureConstants,
    pub schur: SchurRingConstants,
    /// Whether d^k_{i,j} = [s^k_{i,j} > 0] throughout.
    pub agrees: bool,
}

/// Computes both constant families on a d-partition with constant pair
/// counts and compares their supports.
pub fn sd_correspondence(dp: &DPartition) -> Result<SdCorrespondence, SchurError> {
    let constants = structure_constants(dp);
    let schur = schur_ring_constants(dp)?;
    let h = constants.parts();
    let agrees = (0..h).all(|i| {
        (0..h).all(|j| (0..h).all(|k| constants.get(i, j, k) == (schur.get(i, j, k) > 0)))
    });
    Ok(SdCorrespondence {
        constants,
        schur,
        agrees,
    })
}

struct IsoSearch<'a> {
    a: &'a StructureConstants,
    b: &'a StructureConstants,
    f: Vec<usize>,
    used: Vec<bool>,
    assigned: Vec<usize>,
    queue: Vec<usize>,
}

impl IsoSearch<'_> {
    /// All structure-constant triples over assigned parts that involve
    /// the newly assigned part v must agree under f.
    fn compatible(&self, v: usize) -> bool {
        let f = &self.f;
        for &i in &self.assigned {
            for &j in &self.assigned {
                for &k in &self.assigned {
                    if i != v && j != v && k != v {
                        continue;
                    }
                    if self.a.get(i, j, k) != self.b.get(f[i], f[j], f[k]) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn solve(&mut self, depth: usize) -> bool {
        let Some(&v) = self.queue.get(depth) else {
            return true;
        };
        let pv = self.a.pairing()[v];
        for w in 0..self.b.parts() {
            if self.used[w] {
                continue;
            }
            // Inversion pairing must transport: f(v^{-1}) = f(v)^{-1}.
            let pw = self.b.pairing()[w];
            if pv == v && pw != w {
                continue;
            }
            if self.f[pv] != usize::MAX && self.f[pv] != pw {
                continue;
            }
            self.f[v] = w;
            self.used[w] = true;
            self.assigned.push(v);
            if self.compatible(v) && self.solve(depth + 1) {
                return true;
            }
            self.assigned.pop();
            self.used[w] = false;
            self.f[v] = usize::MAX;
        }
        false
    }
}

/// Searches for a part bijection turning one structure-constant tensor
/// into the other. The identity parts must correspond; part sizes are
/// irrelevant.
pub fn tensor_isomorphism(
    a: &StructureConstants,
    b: &StructureConstants,
) -> Option<Vec<usize>> {
    if a.parts() != b.parts() {
        return None;
    }
    let h = a.parts();
    let mut search = IsoSearch {
        a,
        b,
        f: vec![usize::MAX; h],
        used: vec![false; h],
        assigned: vec![a.identity()],
        queue: (0..h).filter(|&i| i != a.identity()).collect(),
    };
    search.f[a.identity()] = b.identity();
    search.used[b.identity()] = true;
    if !search.compatible(a.identity()) {
        return None;
    }
    search.solve(0).then_some(search.f)
}

/// Isomorphism of d-partitions, possibly over different groups.
pub fn are_isomorphic(a: &DPartition, b: &DPartition) -> Option<Vec<usize>> {
    tensor_isomorphism(&structure_constants(a), &structure_constants(b))
}

#[derive(Debug, Clone, Serialize)]
pub struct BooleanSemiringReport {
    pub order: usize,
    /// Subset pairs whose setwise product was recomputed by Boolean
    /// convolution (c_g = OR over xy = g of a_x b_y) and compared.
    pub convolution_pairs_checked: u64,
    pub convolution_matches: bool,
    /// Dioid axiom report for the full subset algebra, realized as the
    /// algebra of the singleton partition.
    pub dioid: DioidReport,
    /// Over every set partition of the group (small orders only):
    /// whether [closure + {1} a part + inverse-closed] coincides with
    /// [d-partition with identity part {1}].
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coincidence_partitions_checked: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coincidence_holds: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coincidence_counterexample: Option<Vec<Vec<usize>>>,
}

/// Checks that subsets of G under union and setwise product form the
/// expected dioid, with the product independently recomputed as a
/// Boolean convolution, and (at small orders) that the partitions whose
/// pair counts are constant over the Boolean dioid are exactly the
/// d-partitions with trivial identity part.
pub fn boolean_group_semiring_check(
    group: &Arc<FiniteGroup>,
) -> Result<BooleanSemiringReport, DioidError> {
    let n = group.order();
    if n > limits::CONVOLUTION_ORDER_CAP {
        return Err(DioidError::OrderTooLarge {
            order: n,
            cap: limits::CONVOLUTION_ORDER_CAP,
        });
    }
    let subsets: Vec<ElementSet> = (0u64..1 << n)
        .map(|mask| {
            let mut set = ElementSet::empty(n);
            for x in 0..n {
                if mask >> x & 1 == 1 {
                    set.insert(x);
                }
            }
            set
        })
        .collect();
    let mut convolution_pairs_checked = 0u64;
    let mut convolution_matches = true;
    'pairs: for a in &subsets {
        for b in &subsets {
            convolution_pairs_checked += 1;
            let mut conv = ElementSet::empty(n);
            for g in 0..n {
                let reached = a
                    .iter()
                    .any(|x| b.contains(group.mul(group.inv(x), g)));
                if reached {
                    conv.insert(g);
                }
            }
            if conv != group.setwise_product(a, b) {
                convolution_matches = false;
                break 'pairs;
            }
        }
    }

    let singletons = as_d_partition(&Partition::singletons(group))
        .expect("singletons always form a d-partition");
    let dioid = verify_dioid_axioms(&structure_constants(&singletons), &Default::default())?;

    let mut coincidence_partitions_checked = None;
    let mut coincidence_holds = None;
    let mut coincidence_counterexample = None;
    if n <= limits::COINCIDENCE_ORDER_CAP {
        let mut checked = 0u64;
        let mut holds = true;
        comb::for_each_set_partition(n, |rgs| {
            checked += 1;
            let blocks = comb::rgs_block_count(rgs);
            let mut parts = vec![ElementSet::empty(n); blocks];
            for (x, &block) in rgs.iter().enumerate() {
                parts[block as usize].insert(x);
            }
            let partition = Partition::new(Arc::clone(group), parts)
                .expect("growth strings encode partitions");
            let identity_singleton =
                partition.parts()[partition.part_of(group.identity())].len() == 1;
            let boolean_constant = identity_singleton
                && partition.check_inverse_property().is_ok()
                && partition.check_closure().is_none();
            let trivial_d = match as_d_partition(&partition) {
                Ok(dp) => dp.identity_set().len() == 1,
                Err(_) => false,
            };
            if boolean_constant != trivial_d && holds {
                holds = false;
                coincidence_counterexample =
                    Some(partition.parts().iter().map(|p| p.to_vec()).collect());
            }
        });
        coincidence_partitions_checked = Some(checked);
        coincidence_holds = Some(holds);
    }

    Ok(BooleanSemiringReport {
        order: n,
        convolution_pairs_checked,
        convolution_matches,
        dioid,
        coincidence_partitions_checked,
        coincidence_holds,
        coincidence_counterexample,
    })
}

/// An explicit dioid given by addition and multiplication tables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DioidTable {
    pub order: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub epsilon: usize,
    pub unit: usize,
}

/// The Boolean dioid {ε, e} with e ⊕ e = e.
pub fn boolean_dioid() -> DioidTable {
    DioidTable {
        order: 2,
        add: vec![vec![0, 1], vec![1, 1]],
        mul: vec![vec![0, 0], vec![0, 1]],
        epsilon: 0,
        unit: 1,
    }
}

/// Exhaustive search for commutative dioids in which every element other
/// than ε is ⊗-invertible, at toy orders. ε is pinned to 0 and the unit
/// to 1, which canonicalizes the tables at these orders; neutral and
/// absorbing rows are forced and the remaining entries are swept. With
/// `idempotent_only`, a ⊕ a = a is imposed.
pub fn dfield_search(order: usize, idempotent_only: bool) -> Result<Vec<DioidTable>, DioidError> {
    if order > limits::DFIELD_ORDER_CAP {
        return Err(DioidError::OrderTooLarge {
            order,
            cap: limits::DFIELD_ORDER_CAP,
        });
    }
    // ε and the unit must differ, so nothing below order 2 qualifies.
    if order < 2 {
        return Ok(Vec::new());
    }
    let n = order;
    // Symmetric free positions above the forced ε and unit rows.
    let add_free: Vec<(usize, usize)> = (1..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .collect();
    let mul_free: Vec<(usize, usize)> = (2..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .collect();
    let free = add_free.len() + mul_free.len();
    let mut found = Vec::new();
    let mut choice = vec![0usize; free];
    loop {
        let mut add = vec![vec![0usize; n]; n];
        let mut mul = vec![vec![0usize; n]; n];
        for a in 0..n {
            add[0][a] = a;
            add[a][0] = a;
            mul[1][a] = a;
            mul[a][1] = a;
        }
        for (slot, &(i, j)) in add_free.iter().enumerate() {
            add[i][j] = choice[slot];
            add[j][i] = choice[slot];
        }
        for (slot, &(i, j)) in mul_free.iter().enumerate() {
            mul[i][j] = choice[add_free.len() + slot];
            mul[j][i] = choice[add_free.len() + slot];
        }
        if dfield_axioms_hold(n, &add, &mul, idempotent_only) {
            found.push(DioidTable {
                order: n,
                add,
                mul,
                epsilon: 0,
                unit: 1,
            });
        }
        // Advance the mixed-radix counter over free entries.
        let mut slot = 0;
        loop {
            if slot == free {
                return Ok(found);
            }
            choice[slot] += 1;
            if choice[slot] < n {
                break;
            }
            choice[slot] = 0;
            slot += 1;
        }
    }
}

fn dfield_axioms_hold(
    n: usize,
    add: &[Vec<usize>],
    mul: &[Vec<usize>],
    idempotent_only: bool,
) -> bool {
    if idempotent_only && (0..n).any(|a| add[a][a] != a) {
        return false;
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if add[add[a][b]][c] != add[a][add[b][c]] {
                    return false;
                }
                if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                    return false;
                }
                if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]] {
                    return false;
                }
                if mul[add[b][c]][a] != add[mul[b][a]][mul[c][a]] {
                    return false;
                }
            }
        }
    }
    // ε must absorb multiplicatively.
    if (0..n).any(|a| mul[0][a] != 0 || mul[a][0] != 0) {
        return false;
    }
    // Canonical preorder a ≤ b ⟺ ∃c a ⊕ c = b must be antisymmetric.
    let le = |a: usize, b: usize| (0..n).any(|c| add[a][c] == b);
    for a in 0..n {
        for b in 0..n {
            if a != b && le(a, b) && le(b, a) {
                return false;
            }
        }
    }
    // Every non-ε element needs a ⊗-inverse.
    (1..n).all(|a| (1..n).any(|b| mul[a][b] == 1))
}
