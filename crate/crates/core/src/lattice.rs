//! The complete subgroup lattice of a group, with conjugacy classes,
//! normalizers and the local subgroups built from them.
//!
//! Enumeration starts from the cyclic subgroups and repeatedly joins every
//! known subgroup with every cyclic subgroup it does not contain, until no
//! new subgroup appears. Every subgroup is a join of cyclic subgroups, so the
//! fixpoint is the whole lattice (including perfect subgroups such as `A5`,
//! which normalizer-only extension would miss).

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith;
use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::group::{Caps, Group};
use crate::subgroup::Subgroup;

pub struct SubgroupLattice {
    group: Group,
    subgroups: Vec<Subgroup>,
    gens: Vec<Vec<usize>>,
    index: BTreeMap<BitSet, usize>,
    normalizer: Vec<usize>,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

impl core::fmt::Debug for SubgroupLattice {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("SubgroupLattice")
            .field("group", &self.group)
            .field("subgroups", &self.subgroups.len())
            .field("classes", &self.classes.len())
            .finish()
    }
}

impl SubgroupLattice {
    pub fn new(group: &Group) -> Result<SubgroupLattice> {
        Self::with_caps(group, &Caps::default())
    }

    pub fn with_caps(group: &Group, caps: &Caps) -> Result<SubgroupLattice> {
        Caps::check("lattice", group.order(), caps.lattice)?;
        let g = group;
        let n = g.order();

        // Distinct cyclic subgroups, each with its least generator.
        let mut cyclic: BTreeMap<BitSet, usize> = BTreeMap::new();
        for x in 0..n {
            cyclic.entry(g.closure_bits(&[x])).or_insert(x);
        }
        let cyclic_gens: Vec<usize> = cyclic.values().copied().filter(|&x| x != 0).collect();

        let mut found: BTreeMap<BitSet, Vec<usize>> = BTreeMap::new();
        let mut queue: Vec<BitSet> = Vec::new();
        for (bits, &x) in &cyclic {
            let gens = if x == 0 { vec![] } else { vec![x] };
            found.insert(bits.clone(), gens);
            queue.push(bits.clone());
        }
        let mut head = 0;
        while head < queue.len() {
            let h = queue[head].clone();
            head += 1;
            if h.count() == n {
                continue;
            }
            let h_gens = found[&h].clone();
            for &x in &cyclic_gens {
                if h.contains(x) {
                    continue;
                }
                let mut gens = h_gens.clone();
                gens.push(x);
                let k = g.closure_bits(&gens);
                if !found.contains_key(&k) {
                    found.insert(k.clone(), gens);
                    queue.push(k);
                }
            }
        }

        let mut entries: Vec<(Subgroup, Vec<usize>)> = found
            .into_iter()
            .map(|(bits, gens)| (Subgroup::from_bits_unchecked(bits), gens))
            .collect();
        entries.sort_by(|a, b| a.0.cmp(&b.0));
        let (subgroups, gens): (Vec<_>, Vec<_>) = entries.into_iter().unzip();
        let index: BTreeMap<BitSet, usize> = subgroups
            .iter()
            .enumerate()
            .map(|(i, s)| (s.bits().clone(), i))
            .collect();

        let normalizer: Vec<usize> = subgroups
            .iter()
            .zip(&gens)
            .map(|(h, hg)| {
                let bits = BitSet::from_indices(
                    n,
                    (0..n).filter(|&x| hg.iter().all(|&s| h.contains(g.conj(s, x)))),
                );
                index[&bits]
            })
            .collect();

        let mut class_of = vec![usize::MAX; subgroups.len()];
        let mut classes = Vec::new();
        for i in 0..subgroups.len() {
            if class_of[i] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let want = n / subgroups[normalizer[i]].size();
            let mut members = vec![i];
            class_of[i] = id;
            for x in 0..n {
                if members.len() == want {
                    break;
                }
                let c = g.conjugate_subgroup(&subgroups[i], x);
                let j = index[c.bits()];
                if class_of[j] == usize::MAX {
                    class_of[j] = id;
                    members.push(j);
                }
            }
            members.sort_unstable();
            classes.push(members);
        }

        Ok(SubgroupLattice {
            group: g.clone(),
            subgroups,
            gens,
            index,
            normalizer,
            class_of,
            classes,
        })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    /// All subgroups in (size, member list) order.
    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn get(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }

    pub fn index_of(&self, h: &Subgroup) -> Option<usize> {
        self.index.get(h.bits()).copied()
    }

    /// Small generating set recorded during enumeration.
    pub fn generators(&self, i: usize) -> &[usize] {
        &self.gens[i]
    }

    pub fn whole(&self) -> &Subgroup {
        self.subgroups.last().expect("lattice contains G")
    }

    pub fn trivial(&self) -> &Subgroup {
        &self.subgroups[0]
    }

    fn idx(&self, h: &Subgroup) -> usize {
        self.index_of(h).expect("subgroup belongs to this lattice's group")
    }

    /// `N_G(H)`.
    pub fn normalizer(&self, h: &Subgroup) -> &Subgroup {
        &self.subgroups[self.normalizer[self.idx(h)]]
    }

    /// `N_K(H) = N_G(H) ∩ K`.
    pub fn normalizer_in(&self, k: &Subgroup, h: &Subgroup) -> Subgroup {
        self.normalizer(h).intersection(k)
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.normalizer(h).is_whole()
    }

    /// Whether `h` is normal in the subgroup `k` (`h ≤ k` assumed).
    pub fn is_normal_in(&self, k: &Subgroup, h: &Subgroup) -> bool {
        k.is_subgroup_of(self.normalizer(h))
    }

    pub fn is_self_normalizing(&self, h: &Subgroup) -> bool {
        self.normalizer(h) == h
    }

    pub fn normal_subgroups(&self) -> impl Iterator<Item = &Subgroup> + '_ {
        self.subgroups.iter().filter(|h| self.is_normal(h))
    }

    /// Subgroups of `k` that are normal in `k`, ascending.
    pub fn normal_subgroups_of<'a>(&'a self, k: &'a Subgroup) -> impl Iterator<Item = &'a Subgroup> + 'a {
        self.subgroups_of(k).filter(move |h| self.is_normal_in(k, h))
    }

    /// Lattice members contained in `k`, ascending.
    pub fn subgroups_of<'a>(&'a self, k: &'a Subgroup) -> impl Iterator<Item = &'a Subgroup> + 'a {
        self.subgroups.iter().filter(move |h| h.is_subgroup_of(k))
    }

    pub fn subgroups_of_order<'a>(&'a self, k: &'a Subgroup, order: usize) -> impl Iterator<Item = &'a Subgroup> + 'a {
        self.subgroups
            .iter()
            .filter(move |h| h.size() == order && h.is_subgroup_of(k))
    }

    /// The conjugacy class of `h` under `G`, ascending.
    pub fn conjugates(&self, h: &Subgroup) -> impl Iterator<Item = &Subgroup> + '_ {
        self.classes[self.class_of[self.idx(h)]]
            .iter()
            .map(|&i| &self.subgroups[i])
    }

    pub fn conjugacy_classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_id(&self, h: &Subgroup) -> usize {
        self.class_of[self.idx(h)]
    }

    /// `C_G(X)` for a subgroup `X`.
    pub fn centralizer(&self, x: &Subgroup) -> Subgroup {
        let gens = match self.index_of(x) {
            Some(i) => self.gens[i].clone(),
            None => x.members_vec(),
        };
        self.group.centralizer_of_set(gens)
    }

    pub fn center(&self) -> Subgroup {
        self.centralizer(self.whole())
    }

    pub fn normal_core(&self, h: &Subgroup) -> Subgroup {
        let mut bits = h.bits().clone();
        for c in self.conjugates(h) {
            bits.intersect_with(c.bits());
        }
        Subgroup::from_bits_unchecked(bits)
    }

    pub fn normal_closure(&self, h: &Subgroup) -> Subgroup {
        let mut seed = BitSet::new(self.group.order());
        for c in self.conjugates(h) {
            seed.union_with(c.bits());
        }
        self.group.generated_subgroup(&seed.to_vec())
    }

    /// One Sylow `p`-subgroup of `G`: the least one in lattice order.
    pub fn sylow_subgroup(&self, p: usize) -> &Subgroup {
        self.sylow_subgroup_of(self.whole(), p)
    }

    /// All Sylow `p`-subgroups of `G`.
    pub fn sylow_subgroups(&self, p: usize) -> Vec<&Subgroup> {
        self.sylow_subgroups_of(self.whole(), p)
    }

    pub fn sylow_subgroup_of<'a>(&'a self, k: &'a Subgroup, p: usize) -> &'a Subgroup {
        let order = arith::p_part(k.size(), p);
        self.subgroups_of_order(k, order)
            .next()
            .expect("Sylow subgroups exist")
    }

    pub fn sylow_subgroups_of<'a>(&'a self, k: &'a Subgroup, p: usize) -> Vec<&'a Subgroup> {
        let order = arith::p_part(k.size(), p);
        self.subgroups_of_order(k, order).collect()
    }

    /// Maximal subgroups of `k` (for `k` trivial there are none).
    pub fn maximal_subgroups_of(&self, k: &Subgroup) -> Vec<&Subgroup> {
        let below: Vec<&Subgroup> = self
            .subgroups
            .iter()
            .filter(|h| h.is_proper_subgroup_of(k))
            .collect();
        below
            .iter()
            .filter(|h| !below.iter().any(|y| h.is_proper_subgroup_of(y)))
            .copied()
            .collect()
    }

    pub fn maximal_subgroups(&self) -> Vec<&Subgroup> {
        self.maximal_subgroups_of(self.whole())
    }

    pub fn is_maximal(&self, h: &Subgroup) -> bool {
        !h.is_whole()
            && !self
                .subgroups
                .iter()
                .any(|y| h.is_proper_subgroup_of(y) && !y.is_whole())
    }

    /// `Φ(K)`: intersection of the maximal subgroups of `k`, or `k` itself
    /// when it has none.
    pub fn frattini_of(&self, k: &Subgroup) -> Subgroup {
        let mut bits = k.bits().clone();
        for m in self.maximal_subgroups_of(k) {
            bits.intersect_with(m.bits());
        }
        Subgroup::from_bits_unchecked(bits)
    }

    pub fn frattini(&self) -> Subgroup {
        self.frattini_of(self.whole())
    }

    pub fn minimal_normal_subgroups(&self) -> Vec<&Subgroup> {
        let normals: Vec<&Subgroup> = self.normal_subgroups().filter(|h| !h.is_trivial()).collect();
        normals
            .iter()
            .filter(|h| !normals.iter().any(|m| m.is_proper_subgroup_of(h)))
            .copied()
            .collect()
    }

    pub fn socle(&self) -> Subgroup {
        let mut seed = BitSet::new(self.group.order());
        for m in self.minimal_normal_subgroups() {
            seed.union_with(m.bits());
        }
        self.group.generated_subgroup(&seed.to_vec())
    }

    /// Largest normal `p`-subgroup.
    pub fn o_p(&self, p: usize) -> &Subgroup {
        self.normal_subgroups()
            .filter(|h| arith::is_power_of(h.size(), p))
            .last()
            .expect("trivial subgroup is a normal p-subgroup")
    }

    /// Largest normal subgroup of order prime to `p`.
    pub fn o_p_prime(&self, p: usize) -> &Subgroup {
        self.normal_subgroups()
            .filter(|h| h.size() % p != 0)
            .last()
            .expect("trivial subgroup qualifies")
    }

    /// Smallest normal subgroup with `p`-group quotient: the intersection of
    /// all normal subgroups of `p`-power index.
    pub fn o_upper_p(&self, p: usize) -> Subgroup {
        let mut bits = self.whole().bits().clone();
        for h in self.normal_subgroups() {
            if arith::is_power_of(h.index(), p) {
                bits.intersect_with(h.bits());
            }
        }
        Subgroup::from_bits_unchecked(bits)
    }

    pub fn p_radicals(&self, p: usize) -> PRadicals {
        PRadicals {
            o_p: self.o_p(p).clone(),
            o_p_prime: self.o_p_prime(p).clone(),
            o_upper_p: self.o_upper_p(p),
        }
    }

    /// `Ω_i(P)` of a `p`-subgroup: generated by elements of order dividing `p^i`.
    pub fn omega(&self, pg: &Subgroup, p: usize, i: u32) -> Result<Subgroup> {
        omega(&self.group, pg, p, i)
    }

    /// Whether a subgroup is nilpotent: for each prime, its `p`-elements
    /// number exactly its `p`-part (i.e. each Sylow subgroup is unique).
    pub fn is_nilpotent_subgroup(&self, k: &Subgroup) -> bool {
        is_nilpotent_subgroup(&self.group, k)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PRadicals {
    pub o_p: Subgroup,
    pub o_p_prime: Subgroup,
    pub o_upper_p: Subgroup,
}

pub fn omega(g: &Group, pg: &Subgroup, p: usize, i: u32) -> Result<Subgroup> {
    if !arith::is_power_of(pg.size(), p) {
        return Err(Error::NotPGroup { p });
    }
    let bound = p.pow(i);
    let seed: Vec<usize> = pg
        .members()
        .filter(|&x| bound.is_multiple_of(g.element_order(x)))
        .collect();
    Ok(g.generated_subgroup(&seed))
}

pub fn is_nilpotent_subgroup(g: &Group, k: &Subgroup) -> bool {
    let orders: Vec<usize> = k.members().map(|x| g.element_order(x)).collect();
    arith::prime_divisors(k.size()).into_iter().all(|p| {
        let count = orders.iter().filter(|&&o| arith::is_power_of(o, p)).count();
        count == arith::p_part(k.size(), p)
    })
}
