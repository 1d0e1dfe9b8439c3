//! Subgroup embedding properties: 𝓗-subgroups, 𝓗C-subgroups, c-normality,
//! weakly 𝓗-subgroups, quasinormality and subnormality.
//!
//! Every predicate is evaluated relative to an ambient subgroup `K` of the
//! lattice's group, so "H is an 𝓗C-subgroup of K" needs no re-indexing; the
//! plain forms use `K = G`. Existential predicates scan the normal subgroups
//! of `K` from the largest down and report the first witness, so `T = K` is
//! preferred whenever it works. When they fail, the verdict lists each
//! candidate with the reason it was rejected.

use alloc::vec::Vec;

use crate::bits::BitSet;
use crate::group::Group;
use crate::lattice::SubgroupLattice;
use crate::subgroup::Subgroup;

/// Why a candidate (or a universal condition) fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Obstruction {
    /// `HT ≠ K` for the candidate `T`.
    NotSupplement,
    /// `element ∈ H^conjugator ∩ N`, `element ∉ H`, where `N` is the relevant
    /// normalizer (or, for weakly 𝓗, the condition failed for `H ∩ T`).
    Escapes { conjugator: usize, element: usize },
    /// `element ∈ H ∩ K` lies outside the normal core of `H`.
    OutsideCore { element: usize },
    /// `element ∈ HX \ XH`.
    NotPermutable { partner: Subgroup, element: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingVerdict {
    pub holds: bool,
    /// The `T` or `K` of an existential definition.
    pub witness: Option<Subgroup>,
    /// Violation of a universal condition.
    pub counterexample: Option<Obstruction>,
    /// For failed existential predicates: every candidate with its obstruction.
    pub refutation: Vec<(Subgroup, Obstruction)>,
}

impl EmbeddingVerdict {
    fn universal(violation: Option<Obstruction>) -> Self {
        EmbeddingVerdict {
            holds: violation.is_none(),
            witness: None,
            counterexample: violation,
            refutation: Vec::new(),
        }
    }
}

/// Variants of the 𝓗C condition. Only [`HcRule::Standard`] is the real
/// definition; the others exist so mutation runs can show the theorem
/// checks are sensitive to the normalizer term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum HcRule {
    /// `H^g ∩ N_T(H) ≤ H`.
    #[default]
    Standard,
    /// `H^g ≤ H` (the intersection with `N_T(H)` deleted).
    WithoutNormalizer,
    /// `H^g ∩ N_K(H) ≤ H` (ambient normalizer in place of `N_T(H)`).
    AmbientNormalizer,
}

/// First `g ∈ K` (ascending) and least `x ∈ (H^g ∩ N) \ H`, if any.
fn escape(g: &Group, k: &Subgroup, n: &Subgroup, h: &Subgroup) -> Option<(usize, usize)> {
    if n.is_subgroup_of(h) {
        return None;
    }
    for c in k.members() {
        let conj = g.conjugate_subgroup(h, c);
        if let Some(x) = conj.bits().intersection(n.bits()).first_outside(h.bits()) {
            return Some((c, x));
        }
    }
    None
}

pub fn is_h_subgroup(lat: &SubgroupLattice, h: &Subgroup) -> EmbeddingVerdict {
    is_h_subgroup_in(lat, lat.whole(), h)
}

/// `H^g ∩ N_K(H) ≤ H` for all `g ∈ K`.
pub fn is_h_subgroup_in(lat: &SubgroupLattice, k: &Subgroup, h: &Subgroup) -> EmbeddingVerdict {
    let n = lat.normalizer_in(k, h);
    EmbeddingVerdict::universal(
        escape(lat.group(), k, &n, h).map(|(conjugator, element)| Obstruction::Escapes {
            conjugator,
            element,
        }),
    )
}

fn supplements(k: &Subgroup, h: &Subgroup, t: &Subgroup) -> bool {
    Group::product_size(h, t) == k.size()
}

fn existential(
    lat: &SubgroupLattice,
    k: &Subgroup,
    h: &Subgroup,
    mut test: impl FnMut(&Subgroup) -> Option<Obstruction>,
) -> EmbeddingVerdict {
    let mut refutation = Vec::new();
    let candidates: Vec<&Subgroup> = lat.normal_subgroups_of(k).collect();
    for t in candidates.into_iter().rev() {
        if !supplements(k, h, t) {
            refutation.push((t.clone(), Obstruction::NotSupplement));
            continue;
        }
        match test(t) {
            None => {
                return EmbeddingVerdict {
                    holds: true,
                    witness: Some(t.clone()),
                    counterexample: None,
                    refutation: Vec::new(),
                }
            }
            Some(ob) => refutation.push((t.clone(), ob)),
        }
    }
    EmbeddingVerdict {
        holds: false,
        witness: None,
        counterexample: refutation
            .iter()
            .find(|(_, ob)| *ob != Obstruction::NotSupplement)
            .map(|(_, ob)| ob.clone()),
        refutation,
    }
}

pub fn is_hc_subgroup(lat: &SubgroupLattice, h: &Subgroup) -> EmbeddingVerdict {
    is_hc_subgroup_in(lat, lat.whole(), h, HcRule::Standard)
}

/// Some `T ⊴ K` with `HT = K` and `H^g ∩ N_T(H) ≤ H` for all `g ∈ K`.
pub fn is_hc_subgroup_in(lat: &SubgroupLattice, k: &Subgroup, h: &Subgroup, rule: HcRule) -> EmbeddingVerdict {
    let g = lat.group();
    let n_k = lat.normalizer_in(k, h);
    existential(lat, k, h, |t| {
        let n = match rule {
            HcRule::Standard => n_k.intersection(t),
            HcRule::WithoutNormalizer => k.clone(),
            HcRule::AmbientNormalizer => n_k.clone(),
        };
        escape(g, k, &n, h).map(|(conjugator, element)| Obstruction::Escapes { conjugator, element })
    })
}

pub fn is_c_normal(lat: &SubgroupLattice, h: &Subgroup) -> EmbeddingVerdict {
    is_c_normal_in(lat, lat.whole(), h)
}

/// Some `T ⊴ K` with `HT = K` and `H ∩ T ≤ H_K`.
pub fn is_c_normal_in(lat: &SubgroupLattice, k: &Subgroup, h: &Subgroup) -> EmbeddingVerdict {
    let core = lat.group().core_in(k, h);
    existential(lat, k, h, |t| {
        h.bits()
            .intersection(t.bits())
            .first_outside(core.bits())
            .map(|element| Obstruction::OutsideCore { element })
    })
}

pub fn is_weakly_h_subgroup(lat: &SubgroupLattice, h: &Subgroup) -> EmbeddingVerdict {
    is_weakly_h_subgroup_in(lat, lat.whole(), h)
}

/// Some `T ⊴ K` with `HT = K` and `H ∩ T` an 𝓗-subgroup of `K`.
pub fn is_weakly_h_subgroup_in(lat: &SubgroupLattice, k: &Subgroup, h: &Subgroup) -> EmbeddingVerdict {
    existential(lat, k, h, |t| {
        let ht = h.intersection(t);
        is_h_subgroup_in(lat, k, &ht).counterexample
    })
}

pub fn is_quasinormal(lat: &SubgroupLattice, h: &Subgroup) -> EmbeddingVerdict {
    is_quasinormal_in(lat, lat.whole(), h)
}

/// `HX = XH` for every subgroup `X ≤ K`.
pub fn is_quasinormal_in(lat: &SubgroupLattice, k: &Subgroup, h: &Subgroup) -> EmbeddingVerdict {
    let g = lat.group();
    let normal_in_k = lat.is_normal_in(k, h);
    if normal_in_k {
        return EmbeddingVerdict::universal(None);
    }
    for x in lat.subgroups_of(k) {
        let hx = g.product_set(h, x);
        let xh = g.product_set(x, h);
        if let Some(element) = hx.first_outside(&xh) {
            return EmbeddingVerdict::universal(Some(Obstruction::NotPermutable {
                partner: x.clone(),
                element,
            }));
        }
    }
    EmbeddingVerdict::universal(None)
}

pub fn is_subnormal(lat: &SubgroupLattice, h: &Subgroup) -> bool {
    is_subnormal_in(lat.group(), lat.whole(), h)
}

/// Follows `K ⊵ H^K ⊵ H^{H^K} ⊵ …` until it reaches `H` or stalls.
pub fn is_subnormal_in(g: &Group, k: &Subgroup, h: &Subgroup) -> bool {
    subnormal_chain(g, k, h).last() == Some(h)
}

/// The descending normal-closure chain starting at `K`.
pub fn subnormal_chain(g: &Group, k: &Subgroup, h: &Subgroup) -> Vec<Subgroup> {
    let mut chain = alloc::vec![k.clone()];
    loop {
        let cur = chain.last().unwrap();
        if cur == h {
            break;
        }
        let next = g.normal_closure_in(cur, h);
        if &next == cur {
            break;
        }
        chain.push(next);
    }
    chain
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Predicate {
    H,
    Hc,
    CNormal,
    WeaklyH,
    Quasinormal,
}

/// Re-checks a verdict using only group multiplication: normality by
/// conjugating every element, normalizers by scanning, and, for failed
/// existential predicates, the candidate list against the normal subgroups
/// of `K` rebuilt as joins of normal closures of elements.
pub fn replay(g: &Group, k: &Subgroup, h: &Subgroup, pred: Predicate, v: &EmbeddingVerdict) -> bool {
    let normal_in_k = |t: &Subgroup| g.is_normalized_by(t, k) && t.is_subgroup_of(k);
    let supplement = |t: &Subgroup| g.product_set(h, t).count() == k.size();
    let n_k = g.normalizer_in(k, h);
    let escape_ok = |c: usize, x: usize, n: &Subgroup, hh: &Subgroup| {
        k.contains(c) && g.conjugate_subgroup(hh, c).contains(x) && n.contains(x) && !hh.contains(x)
    };
    let raw_h = |hh: &Subgroup| {
        let n = g.normalizer_in(k, hh);
        k.members().all(|c| {
            g.conjugate_subgroup(hh, c)
                .members()
                .all(|x| !n.contains(x) || hh.contains(x))
        })
    };
    let core = g.core_in(k, h);
    let candidate_ok = |t: &Subgroup| -> bool {
        match pred {
            Predicate::Hc => {
                let n = n_k.intersection(t);
                k.members().all(|c| {
                    g.conjugate_subgroup(h, c)
                        .members()
                        .all(|x| !n.contains(x) || h.contains(x))
                })
            }
            Predicate::CNormal => h.intersection(t).is_subgroup_of(&core),
            Predicate::WeaklyH => raw_h(&h.intersection(t)),
            _ => unreachable!(),
        }
    };
    match pred {
        Predicate::H => match &v.counterexample {
            None => v.holds && raw_h(h),
            Some(Obstruction::Escapes { conjugator, element }) => {
                !v.holds && escape_ok(*conjugator, *element, &n_k, h)
            }
            Some(_) => false,
        },
        Predicate::Quasinormal => match &v.counterexample {
            None => {
                v.holds
                    && enumerate_subgroups_raw(g, k)
                        .iter()
                        .all(|x| g.product_set(h, x) == g.product_set(x, h))
            }
            Some(Obstruction::NotPermutable { partner, element }) => {
                !v.holds
                    && partner.is_subgroup_of(k)
                    && g.product_set(h, partner).contains(*element)
                    && !g.product_set(partner, h).contains(*element)
            }
            Some(_) => false,
        },
        Predicate::Hc | Predicate::CNormal | Predicate::WeaklyH => {
            if v.holds {
                let Some(t) = &v.witness else { return false };
                normal_in_k(t) && supplement(t) && candidate_ok(t)
            } else {
                let normals = normal_subgroups_raw(g, k);
                if normals.len() != v.refutation.len() {
                    return false;
                }
                v.refutation.iter().all(|(t, ob)| {
                    normals.contains(t)
                        && match ob {
                            Obstruction::NotSupplement => !supplement(t),
                            Obstruction::Escapes { conjugator, element } => {
                                supplement(t)
                                    && match pred {
                                        Predicate::Hc => {
                                            escape_ok(*conjugator, *element, &n_k.intersection(t), h)
                                        }
                                        Predicate::WeaklyH => {
                                            let ht = h.intersection(t);
                                            let n = g.normalizer_in(k, &ht);
                                            escape_ok(*conjugator, *element, &n, &ht)
                                        }
                                        _ => false,
                                    }
                            }
                            Obstruction::OutsideCore { element } => {
                                pred == Predicate::CNormal
                                    && supplement(t)
                                    && h.contains(*element)
                                    && t.contains(*element)
                                    && !core.contains(*element)
                            }
                            Obstruction::NotPermutable { .. } => false,
                        }
                })
            }
        }
    }
}

/// Normal subgroups of `K`: joins of `K`-normal closures of single elements.
pub fn normal_subgroups_raw(g: &Group, k: &Subgroup) -> Vec<Subgroup> {
    let closures: Vec<Subgroup> = k
        .members()
        .map(|x| g.normal_closure_in(k, &g.generated_subgroup(&[x])))
        .collect();
    join_closure(g, closures)
}

/// All subgroups of `K` as joins of cyclic subgroups (no lattice involved).
pub fn enumerate_subgroups_raw(g: &Group, k: &Subgroup) -> Vec<Subgroup> {
    let cyclic: Vec<Subgroup> = k.members().map(|x| g.generated_subgroup(&[x])).collect();
    join_closure(g, cyclic)
}

fn join_closure(g: &Group, atoms: Vec<Subgroup>) -> Vec<Subgroup> {
    let mut seen: alloc::collections::BTreeSet<BitSet> = alloc::collections::BTreeSet::new();
    let mut atoms_dedup: Vec<Subgroup> = Vec::new();
    for a in atoms {
        if seen.insert(a.bits().clone()) {
            atoms_dedup.push(a);
        }
    }
    let mut all = atoms_dedup.clone();
    let mut i = 0;
    while i < all.len() {
        let cur = all[i].clone();
        for a in &atoms_dedup {
            if a.is_subgroup_of(&cur) {
                continue;
            }
            let j = g.join(&cur, a);
            if seen.insert(j.bits().clone()) {
                all.push(j);
            }
        }
        i += 1;
    }
    all.sort();
    all
}
