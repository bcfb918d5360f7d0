//! Finite groups as explicit multiplication tables.
//!
//! Elements are the indices 0..order. A table is valid when
//!   ∀ a,b,c  (ab)c = a(bc),
//!   ∃ e ∀ a  ea = ae = a,
//!   ∀ a ∃ b  ab = ba = e.
//! Family tables (cyclic, dihedral, symmetric) come from function
//! composition and satisfy the axioms by construction; they are still
//! re-validated exhaustively up to [`limits::FULL_VALIDATION_ORDER`].
//! Explicit tables are always validated in full and are rejected above
//! the order cap. Subgroup claims are never trusted: every operation
//! that takes a subgroup verifies closure itself.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::limits;
use crate::partition::Partition;
use crate::set::{ElementSet, SetError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("multiplication table is empty")]
    EmptyTable,
    #[error("row {row} has {len} entries, expected {order}")]
    NotSquare { row: usize, len: usize, order: usize },
    #[error("table entry [{row}][{col}] = {value} is outside 0..{order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("group order {order} exceeds the cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("{family} parameter n={n} rejected: {reason}")]
    BadFamilyParameter {
        family: &'static str,
        n: usize,
        reason: &'static str,
    },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {element} has no inverse")]
    NoInverse { element: usize },
    #[error("associativity fails at ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("{what} {index} is not a permutation of the elements")]
    NotLatin { what: &'static str, index: usize },
    #[error("set is not a subgroup: {reason}")]
    NotASubgroup { reason: SubgroupDefect },
    #[error("subgroup is not normal: conjugating {n} by {g} leaves the set")]
    NotNormal { g: usize, n: usize },
    #[error("set universe {got} does not match group order {expected}")]
    MismatchedUniverse { expected: usize, got: usize },
    #[error("map is not a bijection: {0} has two preimages or none")]
    NotBijective(usize),
    #[error("map is not a homomorphism: f({a}*{b}) != f({a})*f({b})")]
    NotHomomorphism { a: usize, b: usize },
    #[error(transparent)]
    BadSet(#[from] SetError),
}

#[derive(Debug, PartialEq, Eq)]
pub enum SubgroupDefect {
    Empty,
    NotClosed { a: usize, b: usize },
}

impl fmt::Display for SubgroupDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubgroupDefect::Empty => write!(f, "it is empty"),
            SubgroupDefect::NotClosed { a, b } => {
                write!(f, "{a}*{b} lands outside the set")
            }
        }
    }
}

/// Which construction a table came from. Cyclic groups additionally fix
/// the element<->residue correspondence (element k is the residue k),
/// which the Z_p machinery relies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "family", content = "n", rename_all = "lowercase")]
pub enum Family {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
}

/// Wire-format group descriptor.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum GroupSpec {
    Cyclic { n: usize },
    Dihedral { n: usize },
    Symmetric { n: usize },
    Cayley { table: Vec<Vec<usize>> },
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup, GroupError> {
        self.build_with_cap(limits::DEFAULT_ORDER_CAP)
    }

    /// `cap` bounds the order of cyclic, dihedral and explicit groups.
    /// Symmetric groups are instead bounded by degree (n <= 6).
    pub fn build_with_cap(&self, cap: usize) -> Result<FiniteGroup, GroupError> {
        match self {
            GroupSpec::Cyclic { n } => FiniteGroup::cyclic_capped(*n, cap),
            GroupSpec::Dihedral { n } => FiniteGroup::dihedral_capped(*n, cap),
            GroupSpec::Symmetric { n } => FiniteGroup::symmetric(*n),
            GroupSpec::Cayley { table } => FiniteGroup::from_table_capped(table, cap),
        }
    }
}

#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    identity: usize,
    family: Option<Family>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Some(fam) => write!(f, "FiniteGroup({fam:?}, order {})", self.order),
            None => write!(f, "FiniteGroup(cayley, order {})", self.order),
        }
    }
}

impl FiniteGroup {
    pub fn cyclic(n: usize) -> Result<Self, GroupError> {
        Self::cyclic_capped(n, limits::DEFAULT_ORDER_CAP)
    }

    fn cyclic_capped(n: usize, cap: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::BadFamilyParameter {
                family: "cyclic",
                n,
                reason: "order must be at least 1",
            });
        }
        if n > cap {
            return Err(GroupError::OrderCapExceeded { order: n, cap });
        }
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = ((a + b) % n) as u32;
            }
        }
        Self::assemble(n, mul, Some(Family::Cyclic(n)))
    }

    pub fn dihedral(n: usize) -> Result<Self, GroupError> {
        Self::dihedral_capped(n, limits::DEFAULT_ORDER_CAP)
    }

    /// Order 2n. Element k*n + i acts on Z_n as x -> (-1)^k x + i;
    /// indices 0..n are the rotations, n..2n the reflections.
    fn dihedral_capped(n: usize, cap: usize) -> Result<Self, GroupError> {
        if n < 3 {
            return Err(GroupError::BadFamilyParameter {
                family: "dihedral",
                n,
                reason: "degree must be at least 3",
            });
        }
        let order = 2 * n;
        if order > cap {
            return Err(GroupError::OrderCapExceeded { order, cap });
        }
        let encode = |k: usize, i: usize| k * n + i;
        let mut mul = vec![0u32; order * order];
        for k1 in 0..2 {
            for i1 in 0..n {
                for k2 in 0..2 {
                    for i2 in 0..n {
                        // (k1,i1)·(k2,i2): apply (k2,i2) first.
                        let k = (k1 + k2) % 2;
                        let signed_i2 = if k1 == 0 { i2 } else { n - i2 };
                        let i = (signed_i2 + i1) % n;
                        mul[encode(k1, i1) * order + encode(k2, i2)] = encode(k, i % n) as u32;
                    }
                }
            }
        }
        Self::assemble(order, mul, Some(Family::Dihedral(n)))
    }

    /// Permutations of n points, indexed by lexicographic rank of their
    /// one-line notation; rank 0 is the identity. Product p*q applies q
    /// first, then p.
    pub fn symmetric(n: usize) -> Result<Self, GroupError> {
        if n == 0 || n > limits::SYMMETRIC_DEGREE_CAP {
            return Err(GroupError::BadFamilyParameter {
                family: "symmetric",
                n,
                reason: "degree must be between 1 and 6",
            });
        }
        let perms = all_permutations(n);
        let order = perms.len();
        let rank = |p: &[u8]| -> usize {
            perms
                .binary_search_by(|q| q.as_slice().cmp(p))
                .expect("composition of permutations is a permutation")
        };
        let mut mul = vec![0u32; order * order];
        let mut composed = vec![0u8; n];
        for (a, p) in perms.iter().enumerate() {
            for (b, q) in perms.iter().enumerate() {
                for x in 0..n {
                    composed[x] = p[q[x] as usize];
                }
                mul[a * order + b] = rank(&composed) as u32;
            }
        }
        Self::assemble(order, mul, Some(Family::Symmetric(n)))
    }

    pub fn from_table(table: &[Vec<usize>]) -> Result<Self, GroupError> {
        Self::from_table_capped(table, limits::DEFAULT_ORDER_CAP)
    }

    fn from_table_capped(table: &[Vec<usize>], cap: usize) -> Result<Self, GroupError> {
        let order = table.len();
        if order == 0 {
            return Err(GroupError::EmptyTable);
        }
        if order > cap {
            return Err(GroupError::OrderCapExceeded { order, cap });
        }
        let mut mul = vec![0u32; order * order];
        for (r, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(GroupError::NotSquare {
                    row: r,
                    len: row.len(),
                    order,
                });
            }
            for (c, &value) in row.iter().enumerate() {
                if value >= order {
                    return Err(GroupError::EntryOutOfRange {
                        row: r,
                        col: c,
                        value,
                        order,
                    });
                }
                mul[r * order + c] = value as u32;
            }
        }
        let group = Self::assemble(order, mul, None)?;
        // Explicit tables get the full cubic check no matter the size.
        group.validate(true)?;
        Ok(group)
    }

    /// Finds identity and inverses, then validates. Family tables above
    /// the full-validation bound skip only the cubic associativity pass.
    fn assemble(order: usize, mul: Vec<u32>, family: Option<Family>) -> Result<Self, GroupError> {
        let mut identity = None;
        for e in 0..order {
            let left_ok = (0..order).all(|a| mul[e * order + a] == a as u32);
            let right_ok = (0..order).all(|a| mul[a * order + e] == a as u32);
            if left_ok && right_ok {
                identity = Some(e);
                break;
            }
        }
        let identity = identity.ok_or(GroupError::NoIdentity)?;
        let mut inv = vec![u32::MAX; order];
        for a in 0..order {
            let found = (0..order).find(|&b| {
                mul[a * order + b] == identity as u32 && mul[b * order + a] == identity as u32
            });
            inv[a] = found.ok_or(GroupError::NoInverse { element: a })? as u32;
        }
        let group = FiniteGroup {
            order,
            mul,
            inv,
            identity,
            family,
        };
        group.validate(order <= limits::FULL_VALIDATION_ORDER)?;
        Ok(group)
    }

    /// Re-checks the group axioms on the stored table. The latin-square
    /// pass is quadratic and always runs; the associativity pass is cubic
    /// and runs when `full_associativity` is set.
    pub fn validate(&self, full_associativity: bool) -> Result<(), GroupError> {
        let n = self.order;
        let mut seen = vec![false; n];
        for r in 0..n {
            seen.fill(false);
            for c in 0..n {
                seen[self.mul(r, c)] = true;
            }
            if !seen.iter().all(|&s| s) {
                return Err(GroupError::NotLatin {
                    what: "row",
                    index: r,
                });
            }
        }
        for c in 0..n {
            seen.fill(false);
            for r in 0..n {
                seen[self.mul(r, c)] = true;
            }
            if !seen.iter().all(|&s| s) {
                return Err(GroupError::NotLatin {
                    what: "column",
                    index: c,
                });
            }
        }
        if full_associativity {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return Err(GroupError::NotAssociative { a, b, c });
                        }
                    }
                }
            }
        } else {
            // Strided spot check; family tables are associative by
            // construction, this guards against assembly bugs.
            let stride = (n / 17).max(1);
            for a in (0..n).step_by(stride) {
                for b in (0..n).step_by(stride) {
                    let ab = self.mul(a, b);
                    for c in (0..n).step_by(stride) {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return Err(GroupError::NotAssociative { a, b, c });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn family(&self) -> Option<Family> {
        self.family
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.order)
    }

    pub fn identity_set(&self) -> ElementSet {
        ElementSet::singleton(self.order, self.identity)
    }

    /// Setwise product XY = {xy : x in X, y in Y}.
    pub fn setwise_product(&self, x: &ElementSet, y: &ElementSet) -> ElementSet {
        debug_assert_eq!(x.universe(), self.order);
        debug_assert_eq!(y.universe(), self.order);
        let mut out = ElementSet::empty(self.order);
        for a in x.iter() {
            for b in y.iter() {
                out.insert(self.mul(a, b));
            }
        }
        out
    }

    /// X^{-1} = {x^{-1} : x in X}.
    pub fn set_inverse(&self, x: &ElementSet) -> ElementSet {
        debug_assert_eq!(x.universe(), self.order);
        let mut out = ElementSet::empty(self.order);
        for a in x.iter() {
            out.insert(self.inv(a));
        }
        out
    }

    fn check_universe(&self, set: &ElementSet) -> Result<(), GroupError> {
        if set.universe() != self.order {
            return Err(GroupError::MismatchedUniverse {
                expected: self.order,
                got: set.universe(),
            });
        }
        Ok(())
    }

    /// Explicit subgroup verification: non-empty and closed under the
    /// product. In a finite group that forces the identity and inverses,
    /// which is double-checked here.
    pub fn verify_subgroup(&self, h: &ElementSet) -> Result<(), GroupError> {
        self.check_universe(h)?;
        if h.is_empty() {
            return Err(GroupError::NotASubgroup {
                reason: SubgroupDefect::Empty,
            });
        }
        for a in h.iter() {
            for b in h.iter() {
                if !h.contains(self.mul(a, b)) {
                    return Err(GroupError::NotASubgroup {
                        reason: SubgroupDefect::NotClosed { a, b },
                    });
                }
            }
        }
        debug_assert!(h.contains(self.identity));
        debug_assert!(h.iter().all(|a| h.contains(self.inv(a))));
        Ok(())
    }

    pub fn is_subgroup(&self, h: &ElementSet) -> bool {
        self.verify_subgroup(h).is_ok()
    }

    /// Whether a verified subgroup is normal: gH = Hg for all g.
    pub fn is_normal(&self, h: &ElementSet) -> Result<bool, GroupError> {
        self.verify_subgroup(h)?;
        for g in 0..self.order {
            for x in h.iter() {
                if !h.contains(self.conjugate(g, x)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Smallest subgroup containing the generators.
    pub fn generated_subgroup(&self, generators: &ElementSet) -> ElementSet {
        debug_assert_eq!(generators.universe(), self.order);
        let mut sub = ElementSet::singleton(self.order, self.identity);
        let mut frontier: Vec<usize> = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for g in generators.iter() {
                for y in [self.mul(x, g), self.mul(g, x)] {
                    if !sub.contains(y) {
                        sub.insert(y);
                        frontier.push(y);
                    }
                }
            }
        }
        sub
    }

    /// All subgroups, in canonical set order. Every subgroup is reachable
    /// from a smaller one by adjoining a single generator, so breadth
    /// first closure over single extensions is exhaustive.
    pub fn subgroups(&self) -> Vec<ElementSet> {
        let mut found = std::collections::BTreeSet::new();
        let trivial = self.identity_set();
        let mut queue = vec![trivial.clone()];
        found.insert(trivial);
        while let Some(h) = queue.pop() {
            for g in 0..self.order {
                if h.contains(g) {
                    continue;
                }
                let mut gens = h.clone();
                gens.insert(g);
                let k = self.generated_subgroup(&gens);
                if found.insert(k.clone()) {
                    queue.push(k);
                }
            }
        }
        found.into_iter().collect()
    }
}

/// Partition of G into double cosets AxA of a verified subgroup A.
/// Sweeping representatives in ascending order makes each part's minimum
/// its discovery representative, so parts come out canonically ordered.
pub fn double_coset_partition(
    group: &Arc<FiniteGroup>,
    a: &ElementSet,
) -> Result<Partition, GroupError> {
    group.verify_subgroup(a)?;
    let n = group.order();
    let mut assigned = ElementSet::empty(n);
    let mut parts = Vec::new();
    for x in 0..n {
        if assigned.contains(x) {
            continue;
        }
        let ax = group.setwise_product(a, &ElementSet::singleton(n, x));
        let axa = group.setwise_product(&ax, a);
        assigned.union_with(&axa);
        parts.push(axa);
    }
    Ok(Partition::new(Arc::clone(group), parts).expect("double cosets partition the group"))
}

/// Partition of G into conjugacy classes.
pub fn conjugacy_partition(group: &Arc<FiniteGroup>) -> Partition {
    let n = group.order();
    let mut assigned = ElementSet::empty(n);
    let mut parts = Vec::new();
    for x in 0..n {
        if assigned.contains(x) {
            continue;
        }
        let mut class = ElementSet::empty(n);
        for g in 0..n {
            class.insert(group.conjugate(g, x));
        }
        assigned.union_with(&class);
        parts.push(class);
    }
    Partition::new(Arc::clone(group), parts).expect("conjugacy classes partition the group")
}

/// Canonical projection G -> G/N for a verified normal subgroup.
/// Cosets are indexed in ascending order of their minimal representative.
#[derive(Clone)]
pub struct QuotientMap {
    source: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    /// Element -> coset index, length |G|.
    proj: Vec<u32>,
    /// Coset index -> minimal representative, length |G/N|.
    reps: Vec<u32>,
}

impl QuotientMap {
    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    pub fn project(&self, x: usize) -> usize {
        self.proj[x] as usize
    }

    pub fn representative(&self, coset: usize) -> usize {
        self.reps[coset] as usize
    }

    /// Full preimage of a set of cosets.
    pub fn preimage(&self, cosets: &ElementSet) -> ElementSet {
        debug_assert_eq!(cosets.universe(), self.target.order());
        let mut out = ElementSet::empty(self.source.order());
        for (x, &c) in self.proj.iter().enumerate() {
            if cosets.contains(c as usize) {
                out.insert(x);
            }
        }
        out
    }
}

pub fn quotient_group(
    group: &Arc<FiniteGroup>,
    normal: &ElementSet,
) -> Result<QuotientMap, GroupError> {
    if !group.is_normal(normal)? {
        let g = (0..group.order())
            .find(|&g| {
                normal
                    .iter()
                    .any(|x| !normal.contains(group.conjugate(g, x)))
            })
            .expect("non-normal subgroup has a conjugation witness");
        let n = normal
            .iter()
            .find(|&x| !normal.contains(group.conjugate(g, x)))
            .expect("witness element");
        return Err(GroupError::NotNormal { g, n });
    }
    let n = group.order();
    let mut proj = vec![u32::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if proj[x] != u32::MAX {
            continue;
        }
        let coset = group.setwise_product(&ElementSet::singleton(n, x), normal);
        let index = reps.len() as u32;
        for y in coset.iter() {
            proj[y] = index;
        }
        reps.push(x as u32);
    }
    let m = reps.len();
    let mut mul = vec![0u32; m * m];
    for a in 0..m {
        for b in 0..m {
            mul[a * m + b] = proj[group.mul(reps[a] as usize, reps[b] as usize)];
        }
    }
    // The quotient of a cyclic group indexed by minimal representatives
    // is exactly addition of residues, so the family tag carries over.
    let family = match group.family() {
        Some(Family::Cyclic(_)) => Some(Family::Cyclic(m)),
        _ => None,
    };
    let target = FiniteGroup::assemble(m, mul, family)?;
    Ok(QuotientMap {
        source: Arc::clone(group),
        target: Arc::new(target),
        proj,
        reps,
    })
}

/// Permutation of the elements that respects the product.
#[derive(Clone, PartialEq, Eq)]
pub struct Automorphism {
    perm: Vec<u32>,
}

impl fmt::Debug for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Automorphism({:?})", self.perm)
    }
}

impl Automorphism {
    /// Verifies bijectivity and the homomorphism law before accepting.
    pub fn verify(group: &FiniteGroup, perm: Vec<usize>) -> Result<Self, GroupError> {
        let n = group.order();
        if perm.len() != n {
            return Err(GroupError::NotBijective(perm.len()));
        }
        let mut seen = vec![false; n];
        for &y in &perm {
            if y >= n || seen[y] {
                return Err(GroupError::NotBijective(y.min(n)));
            }
            seen[y] = true;
        }
        for a in 0..n {
            for b in 0..n {
                if perm[group.mul(a, b)] != group.mul(perm[a], perm[b]) {
                    return Err(GroupError::NotHomomorphism { a, b });
                }
            }
        }
        Ok(Automorphism {
            perm: perm.into_iter().map(|x| x as u32).collect(),
        })
    }

    pub fn identity(order: usize) -> Self {
        Automorphism {
            perm: (0..order as u32).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.perm.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.perm[x] as usize
    }

    pub fn apply_set(&self, set: &ElementSet) -> ElementSet {
        debug_assert_eq!(set.universe(), self.perm.len());
        let mut out = ElementSet::empty(set.universe());
        for x in set.iter() {
            out.insert(self.apply(x));
        }
        out
    }

    /// self ∘ other: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.perm.len(), other.perm.len());
        Automorphism {
            perm: other.perm.iter().map(|&x| self.perm[x as usize]).collect(),
        }
    }
}

/// The automorphisms x -> a*x of the cyclic group of order n, one per
/// unit a, in ascending order of a. For prime n this is all of Aut(Z_n).
pub fn units_automorphisms(n: usize) -> Vec<Automorphism> {
    assert!(n >= 1);
    let gcd = |mut a: usize, mut b: usize| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    (1..n.max(2))
        .filter(|&a| gcd(a, n) == 1)
        .map(|a| Automorphism {
            perm: (0..n).map(|x| (a * x % n) as u32).collect(),
        })
        .collect()
}

/// A verified subgroup re-indexed as a standalone group. Local element i
/// is the i-th smallest member of the subgroup, so the embedding table
/// `to_parent` is ascending.
#[derive(Clone)]
pub struct EmbeddedSubgroup {
    group: Arc<FiniteGroup>,
    set: ElementSet,
    to_parent: Vec<u32>,
    from_parent: Vec<u32>,
}

impl fmt::Debug for EmbeddedSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EmbeddedSubgroup({:?})", self.set)
    }
}

impl EmbeddedSubgroup {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// The subgroup as a subset of the parent.
    pub fn set(&self) -> &ElementSet {
        &self.set
    }

    pub fn to_parent(&self, local: usize) -> usize {
        self.to_parent[local] as usize
    }

    pub fn to_parent_table(&self) -> &[u32] {
        &self.to_parent
    }

    pub fn to_parent_set(&self, local: &ElementSet) -> ElementSet {
        debug_assert_eq!(local.universe(), self.group.order());
        let mut out = ElementSet::empty(self.set.universe());
        for x in local.iter() {
            out.insert(self.to_parent(x));
        }
        out
    }

    /// Re-indexes a parent-side subset; fails if it leaves the subgroup.
    pub fn to_local_set(&self, parent: &ElementSet) -> Result<ElementSet, GroupError> {
        if parent.universe() != self.set.universe() {
            return Err(GroupError::MismatchedUniverse {
                expected: self.set.universe(),
                got: parent.universe(),
            });
        }
        let mut out = ElementSet::empty(self.group.order());
        for x in parent.iter() {
            if !self.set.contains(x) {
                return Err(GroupError::NotASubgroup {
                    reason: SubgroupDefect::NotClosed { a: x, b: x },
                });
            }
            out.insert(self.from_parent[x] as usize);
        }
        Ok(out)
    }
}

/// Re-indexes a verified subgroup A <= G as a standalone group on
/// 0..|A| with the inherited product.
pub fn embed_subgroup(
    group: &Arc<FiniteGroup>,
    a: &ElementSet,
) -> Result<EmbeddedSubgroup, GroupError> {
    group.verify_subgroup(a)?;
    let members: Vec<usize> = a.iter().collect();
    let m = members.len();
    let mut from_parent = vec![u32::MAX; group.order()];
    for (i, &x) in members.iter().enumerate() {
        from_parent[x] = i as u32;
    }
    let mut mul = vec![0u32; m * m];
    for i in 0..m {
        for j in 0..m {
            mul[i * m + j] = from_parent[group.mul(members[i], members[j])];
        }
    }
    let sub = FiniteGroup::assemble(m, mul, None)?;
    Ok(EmbeddedSubgroup {
        group: Arc::new(sub),
        set: a.clone(),
        to_parent: members.into_iter().map(|x| x as u32).collect(),
        from_parent,
    })
}

/// Structural equality of multiplication tables; used where two API
/// inputs must describe the same group.
pub fn same_group(a: &FiniteGroup, b: &FiniteGroup) -> bool {
    a.order == b.order && a.mul == b.mul
}

fn all_permutations(n: usize) -> Vec<Vec<u8>> {
    // Lexicographic order; first entry is the identity.
    let mut perms = Vec::new();
    let mut current: Vec<u8> = (0..n as u8).collect();
    loop {
        perms.push(current.clone());
        // Next lexicographic permutation.
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
    }
    perms
}
