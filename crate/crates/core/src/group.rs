//! Finite groups stored as complete multiplication tables.
//!
//! Elements are the indices `0..n`; element `0` is always the identity.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::subgroup::Subgroup;

/// Order limits. Every operation that would exceed one of these fails with
/// [`Error::OrderCapExceeded`] instead of running.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest group accepted by constructors (and verified for associativity).
    pub order: usize,
    /// Largest group whose full subgroup lattice will be enumerated.
    pub lattice: usize,
    /// Largest order handed to the isomorphism search.
    pub isomorphism: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            order: 512,
            lattice: 384,
            isomorphism: 256,
        }
    }
}

impl Caps {
    pub(crate) fn check(what: &'static str, order: usize, cap: usize) -> Result<()> {
        if order > cap {
            Err(Error::OrderCapExceeded { what, order, cap })
        } else {
            Ok(())
        }
    }
}

struct Inner {
    n: usize,
    table: Vec<u32>,
    inv: Vec<u32>,
    name: String,
    labels: Option<Vec<String>>,
}

/// A finite group. Cloning is cheap; the table is shared.
#[derive(Clone)]
pub struct Group(Arc<Inner>);

impl core::fmt::Debug for Group {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Group({}, order {})", self.0.name, self.0.n)
    }
}

impl PartialEq for Group {
    /// Equal tables (names and labels are ignored).
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.table == other.0.table
    }
}

impl Eq for Group {}

impl Group {
    /// Validates a Cayley table with the default caps.
    pub fn from_cayley_table(table: &[Vec<usize>], name: impl Into<String>) -> Result<Group> {
        Self::from_cayley_table_with(table, name, &Caps::default())
    }

    /// Validates a Cayley table: square shape, entries in range, 0 the
    /// identity, Latin square, then exhaustive associativity. The first
    /// offending cell or triple (in row-major / lexicographic order) is
    /// reported.
    pub fn from_cayley_table_with(
        table: &[Vec<usize>],
        name: impl Into<String>,
        caps: &Caps,
    ) -> Result<Group> {
        let n = table.len();
        if n == 0 {
            return Err(Error::Shape("empty table".into()));
        }
        Caps::check("construction", n, caps.order)?;
        for (r, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Shape(alloc::format!(
                    "row {r} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (c, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::EntryOutOfRange {
                        row: r,
                        col: c,
                        value: v,
                        order: n,
                    });
                }
            }
        }
        let flat: Vec<u32> = table.iter().flatten().map(|&v| v as u32).collect();
        validate_flat(n, &flat)?;
        Ok(Self::from_valid_flat(n, flat, name.into()))
    }

    /// Builds a group from `n` abstract elements and a product closure,
    /// moving `identity` to index 0 (it swaps places with element 0).
    /// The result is validated like a Cayley table.
    pub fn from_operation(
        n: usize,
        identity: usize,
        name: impl Into<String>,
        caps: &Caps,
        mut op: impl FnMut(usize, usize) -> usize,
    ) -> Result<Group> {
        if n == 0 || identity >= n {
            return Err(Error::Shape("empty group or identity out of range".into()));
        }
        Caps::check("construction", n, caps.order)?;
        let relabel = |x: usize| {
            if x == identity {
                0
            } else if x == 0 {
                identity
            } else {
                x
            }
        };
        let mut flat = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                let v = op(relabel(a), relabel(b));
                if v >= n {
                    return Err(Error::EntryOutOfRange {
                        row: a,
                        col: b,
                        value: v,
                        order: n,
                    });
                }
                flat[a * n + b] = relabel(v) as u32;
            }
        }
        validate_flat(n, &flat)?;
        Ok(Self::from_valid_flat(n, flat, name.into()))
    }

    /// Internal constructor for tables that are groups by construction
    /// (quotients, subgroups, products).
    pub(crate) fn from_valid_flat(n: usize, table: Vec<u32>, name: String) -> Group {
        debug_assert_eq!(table.len(), n * n);
        let mut inv = vec![0u32; n];
        for a in 0..n {
            let row = &table[a * n..(a + 1) * n];
            let b = row.iter().position(|&v| v == 0).expect("Latin row");
            inv[a] = b as u32;
        }
        Group(Arc::new(Inner {
            n,
            table,
            inv,
            name,
            labels: None,
        }))
    }

    pub fn trivial() -> Group {
        Self::from_valid_flat(1, vec![0], "C1".into())
    }

    /// Returns a copy carrying a different display name.
    pub fn renamed(&self, name: impl Into<String>) -> Group {
        Group(Arc::new(Inner {
            n: self.0.n,
            table: self.0.table.clone(),
            inv: self.0.inv.clone(),
            name: name.into(),
            labels: self.0.labels.clone(),
        }))
    }

    pub fn with_labels(&self, labels: Vec<String>) -> Result<Group> {
        if labels.len() != self.0.n {
            return Err(Error::InvalidParameter(alloc::format!(
                "{} labels for a group of order {}",
                labels.len(),
                self.0.n
            )));
        }
        Ok(Group(Arc::new(Inner {
            n: self.0.n,
            table: self.0.table.clone(),
            inv: self.0.inv.clone(),
            name: self.0.name.clone(),
            labels: Some(labels),
        })))
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.0.n
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn label(&self, x: usize) -> Option<&str> {
        self.0.labels.as_ref().map(|l| l[x].as_str())
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.0.labels.as_deref()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.0.table[a * self.0.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.0.inv[a] as usize
    }

    /// `g⁻¹ x g`.
    #[inline]
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`.
    #[inline]
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn pow(&self, x: usize, mut k: usize) -> usize {
        let mut base = x;
        let mut acc = 0;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Rows of the table as index slices, e.g. for serialization.
    pub fn row(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.0.table[a * self.0.n..(a + 1) * self.0.n]
            .iter()
            .map(|&v| v as usize)
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.order()).map(|x| self.element_order(x)).collect()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a + 1..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Largest power of `p` dividing the order.
    pub fn p_part(&self, p: usize) -> usize {
        crate::arith::p_part(self.order(), p)
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_bits_unchecked(BitSet::from_indices(self.order(), [0]))
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_bits_unchecked(BitSet::full(self.order()))
    }

    /// Smallest subgroup containing `seed`, by breadth-first closure under
    /// right multiplication by the seed elements.
    pub fn generated_subgroup(&self, seed: &[usize]) -> Subgroup {
        Subgroup::from_bits_unchecked(self.closure_bits(seed))
    }

    pub(crate) fn closure_bits(&self, seed: &[usize]) -> BitSet {
        let n = self.order();
        let mut gens: Vec<usize> = seed.iter().copied().filter(|&g| g != 0).collect();
        gens.sort_unstable();
        gens.dedup();
        let mut bits = BitSet::new(n);
        bits.insert(0);
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &g in &gens {
                let y = self.mul(x, g);
                if bits.insert(y) {
                    queue.push(y);
                }
            }
        }
        bits
    }

    /// The subgroup generated by two subgroups.
    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        if a.is_subgroup_of(b) {
            return b.clone();
        }
        if b.is_subgroup_of(a) {
            return a.clone();
        }
        let mut seed = a.members_vec();
        seed.extend(b.members());
        self.generated_subgroup(&seed)
    }

    /// Checks that an element set is a subgroup and wraps it.
    pub fn subgroup_from_elements(&self, elements: &[usize]) -> Result<Subgroup> {
        let n = self.order();
        if let Some(&bad) = elements.iter().find(|&&x| x >= n) {
            return Err(Error::NotASubgroup(alloc::format!(
                "element {bad} out of range"
            )));
        }
        let bits = BitSet::from_indices(n, elements.iter().copied());
        if !bits.contains(0) {
            return Err(Error::NotASubgroup("identity missing".into()));
        }
        for a in bits.iter() {
            for b in bits.iter() {
                if !bits.contains(self.mul(a, b)) {
                    return Err(Error::NotASubgroup(alloc::format!(
                        "{a}*{b} escapes the set"
                    )));
                }
            }
        }
        let h = Subgroup::from_bits_unchecked(bits);
        debug_assert_eq!(n % h.size(), 0);
        Ok(h)
    }

    /// `H^g = { g⁻¹ h g : h ∈ H }`.
    pub fn conjugate_subgroup(&self, h: &Subgroup, g: usize) -> Subgroup {
        if g == 0 {
            return h.clone();
        }
        let gi = self.inv(g);
        let mut bits = BitSet::new(self.order());
        for x in h.members() {
            bits.insert(self.mul(self.mul(gi, x), g));
        }
        Subgroup::from_bits_unchecked(bits)
    }

    /// Whether `g` normalizes `h`.
    pub fn normalizes(&self, g: usize, h: &Subgroup) -> bool {
        let gi = self.inv(g);
        h.members()
            .all(|x| h.contains(self.mul(self.mul(gi, x), g)))
    }

    /// Whether `h` is normalized by every element of `k`.
    pub fn is_normalized_by(&self, h: &Subgroup, k: &Subgroup) -> bool {
        k.members().all(|g| self.normalizes(g, h))
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        (0..self.order()).all(|g| self.normalizes(g, h))
    }

    /// The element set `AB`.
    pub fn product_set(&self, a: &Subgroup, b: &Subgroup) -> BitSet {
        let mut out = BitSet::new(self.order());
        for x in a.members() {
            for y in b.members() {
                out.insert(self.mul(x, y));
            }
        }
        out
    }

    /// `|AB| = |A||B| / |A ∩ B|`.
    pub fn product_size(a: &Subgroup, b: &Subgroup) -> usize {
        a.size() * b.size() / a.intersection_size(b)
    }

    /// Centralizer of an element set.
    pub fn centralizer_of_set(&self, xs: impl IntoIterator<Item = usize> + Clone) -> Subgroup {
        let n = self.order();
        let mut bits = BitSet::new(n);
        for g in 0..n {
            if xs.clone().into_iter().all(|x| self.mul(g, x) == self.mul(x, g)) {
                bits.insert(g);
            }
        }
        Subgroup::from_bits_unchecked(bits)
    }

    /// Subgroup generated by all `[a, b]` with `a ∈ A`, `b ∈ B`.
    pub fn commutator_subgroup(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut comms = BitSet::new(self.order());
        for x in a.members() {
            for y in b.members() {
                comms.insert(self.commutator(x, y));
            }
        }
        self.generated_subgroup(&comms.to_vec())
    }

    /// Smallest subgroup containing `h` and normalized by `k`, i.e. the
    /// normal closure of `h` in `⟨h, k⟩` when `h ≤ k`.
    pub fn normal_closure_in(&self, k: &Subgroup, h: &Subgroup) -> Subgroup {
        let mut seed = BitSet::new(self.order());
        for g in k.members() {
            for x in h.members() {
                seed.insert(self.conj(x, g));
            }
        }
        self.generated_subgroup(&seed.to_vec())
    }

    pub fn normal_closure(&self, h: &Subgroup) -> Subgroup {
        self.normal_closure_in(&self.whole(), h)
    }

    /// Intersection of `H^k` over `k ∈ K`.
    pub fn core_in(&self, k: &Subgroup, h: &Subgroup) -> Subgroup {
        let mut bits = h.bits().clone();
        for g in k.members() {
            if bits.count() == 1 {
                break;
            }
            bits.intersect_with(self.conjugate_subgroup(h, g).bits());
        }
        Subgroup::from_bits_unchecked(bits)
    }

    pub fn normal_core(&self, h: &Subgroup) -> Subgroup {
        self.core_in(&self.whole(), h)
    }

    /// `N_K(H) = { k ∈ K : H^k = H }`.
    pub fn normalizer_in(&self, k: &Subgroup, h: &Subgroup) -> Subgroup {
        let mut bits = BitSet::new(self.order());
        for g in k.members() {
            if self.normalizes(g, h) {
                bits.insert(g);
            }
        }
        Subgroup::from_bits_unchecked(bits)
    }

    /// Least common multiple of the element orders of `h`.
    pub fn exponent_of(&self, h: &Subgroup) -> usize {
        h.members()
            .map(|x| self.element_order(x))
            .fold(1, crate::arith::lcm)
    }

    /// Whether `h` is a `p`-group (the trivial group counts for every `p`).
    pub fn is_p_subgroup(h: &Subgroup, p: usize) -> bool {
        crate::arith::is_power_of(h.size(), p)
    }
}

fn validate_flat(n: usize, t: &[u32]) -> Result<()> {
    for a in 0..n {
        if t[a] as usize != a || t[a * n] as usize != a {
            return Err(Error::IdentityNotZero { a });
        }
    }
    let mut seen = vec![usize::MAX; n];
    for r in 0..n {
        for c in 0..n {
            let v = t[r * n + c] as usize;
            if seen[v] == r {
                return Err(Error::NotLatinSquare {
                    line: "row",
                    index: r,
                    value: v,
                });
            }
            seen[v] = r;
        }
    }
    seen.iter_mut().for_each(|s| *s = usize::MAX);
    for c in 0..n {
        for r in 0..n {
            let v = t[r * n + c] as usize;
            if seen[v] == c {
                return Err(Error::NotLatinSquare {
                    line: "column",
                    index: c,
                    value: v,
                });
            }
            seen[v] = c;
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab = t[a * n + b] as usize;
            for c in 0..n {
                let left = t[ab * n + c] as usize;
                let right = t[a * n + t[b * n + c] as usize] as usize;
                if left != right {
                    return Err(Error::NotAssociative {
                        a,
                        b,
                        c,
                        left,
                        right,
                    });
                }
            }
        }
    }
    Ok(())
}
