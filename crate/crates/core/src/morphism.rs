//! Homomorphisms, quotients, direct products and subgroups realized as groups.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::group::{Caps, Group};
use crate::subgroup::Subgroup;

#[derive(Clone, Debug)]
pub struct Morphism {
    source: Group,
    target: Group,
    map: Vec<u32>,
}

impl Morphism {
    /// Checks `map[ab] = map[a]map[b]` on every pair.
    pub fn new(source: Group, target: Group, map: Vec<usize>) -> Result<Morphism> {
        let n = source.order();
        if map.len() != n || map.iter().any(|&y| y >= target.order()) {
            return Err(Error::InvalidParameter(
                "map has the wrong length or leaves the target".into(),
            ));
        }
        for a in 0..n {
            for b in 0..n {
                if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                    return Err(Error::InvalidParameter(format!(
                        "map is not multiplicative at ({a}, {b})"
                    )));
                }
            }
        }
        Ok(Self::from_parts(source, target, map))
    }

    pub(crate) fn from_parts(source: Group, target: Group, map: Vec<usize>) -> Morphism {
        Morphism {
            source,
            target,
            map: map.into_iter().map(|y| y as u32).collect(),
        }
    }

    pub fn source(&self) -> &Group {
        &self.source
    }

    pub fn target(&self) -> &Group {
        &self.target
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x] as usize
    }

    pub fn map(&self) -> Vec<usize> {
        self.map.iter().map(|&y| y as usize).collect()
    }

    pub fn kernel(&self) -> Subgroup {
        let bits = BitSet::from_indices(
            self.source.order(),
            (0..self.source.order()).filter(|&x| self.map[x] == 0),
        );
        Subgroup::from_bits_unchecked(bits)
    }

    pub fn image(&self) -> Subgroup {
        self.image_of(&self.source.whole())
    }

    pub fn image_of(&self, h: &Subgroup) -> Subgroup {
        let bits = BitSet::from_indices(self.target.order(), h.members().map(|x| self.apply(x)));
        Subgroup::from_bits_unchecked(bits)
    }

    /// Full preimage of a subgroup of the target.
    pub fn preimage_of(&self, h: &Subgroup) -> Subgroup {
        let bits = BitSet::from_indices(
            self.source.order(),
            (0..self.source.order()).filter(|&x| h.contains(self.apply(x))),
        );
        Subgroup::from_bits_unchecked(bits)
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_trivial()
    }
}

/// `G/N` on cosets labeled by their least member; the coset of the identity
/// is element 0 and cosets are numbered by increasing least member.
pub fn quotient(g: &Group, n: &Subgroup) -> Result<(Group, Morphism)> {
    if !g.is_normal(n) {
        return Err(Error::NotNormal);
    }
    let order = g.order();
    let mut coset_of = vec![usize::MAX; order];
    let mut reps = Vec::new();
    for x in 0..order {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for m in n.members() {
            coset_of[g.mul(x, m)] = id;
        }
    }
    let q = reps.len();
    let mut table = vec![0u32; q * q];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            table[i * q + j] = coset_of[g.mul(a, b)] as u32;
        }
    }
    let name = if n.is_trivial() {
        g.name().into()
    } else {
        format!("{}/N{}", g.name(), n.size())
    };
    let qg = Group::from_valid_flat(q, table, name);
    let proj = Morphism::from_parts(g.clone(), qg.clone(), coset_of);
    Ok((qg, proj))
}

/// `A × B` with pair `(a, b)` at index `a·|B| + b`.
pub fn direct_product(a: &Group, b: &Group, caps: &Caps) -> Result<Group> {
    let (na, nb) = (a.order(), b.order());
    let n = na
        .checked_mul(nb)
        .ok_or(Error::OrderCapExceeded {
            what: "construction",
            order: usize::MAX,
            cap: caps.order,
        })?;
    Caps::check("construction", n, caps.order)?;
    let mut table = vec![0u32; n * n];
    for x in 0..n {
        let (xa, xb) = (x / nb, x % nb);
        for y in 0..n {
            let (ya, yb) = (y / nb, y % nb);
            table[x * n + y] = (a.mul(xa, ya) * nb + b.mul(xb, yb)) as u32;
        }
    }
    Ok(Group::from_valid_flat(
        n,
        table,
        format!("{} x {}", a.name(), b.name()),
    ))
}

/// Realizes `h ≤ g` as a group in its own right. Members keep their relative
/// order (so the identity stays at 0); the returned morphism is the inclusion.
pub fn subgroup_as_group(g: &Group, h: &Subgroup, name: impl Into<alloc::string::String>) -> (Group, Morphism) {
    let members = h.members_vec();
    let k = members.len();
    let mut local = vec![u32::MAX; g.order()];
    for (i, &x) in members.iter().enumerate() {
        local[x] = i as u32;
    }
    let mut table = vec![0u32; k * k];
    for (i, &a) in members.iter().enumerate() {
        for (j, &b) in members.iter().enumerate() {
            table[i * k + j] = local[g.mul(a, b)];
        }
    }
    let sub = Group::from_valid_flat(k, table, name.into());
    let incl = Morphism::from_parts(sub.clone(), g.clone(), members);
    (sub, incl)
}
