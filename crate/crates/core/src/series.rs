//! Characteristic series and radicals: centers, central and derived series,
//! nilpotent residual, Fitting and generalized Fitting subgroups, chief series.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith;
use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::group::{Caps, Group};
use crate::lattice::SubgroupLattice;
use crate::morphism::{quotient, subgroup_as_group};
use crate::subgroup::Subgroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    UpperCentral,
    LowerCentral,
    Derived,
    Chief,
}

/// A chain of normal subgroups. Ascending kinds (upper central, chief) start
/// at the trivial subgroup; descending kinds start at `G`. Iteration stops at
/// the first repeated term, which is recorded once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalSeries {
    pub kind: SeriesKind,
    pub terms: Vec<Subgroup>,
}

impl NormalSeries {
    pub fn last(&self) -> &Subgroup {
        self.terms.last().expect("series is non-empty")
    }

    /// Orders `|terms[i+1] : terms[i]|` (or the reverse for descending series).
    pub fn factor_orders(&self) -> Vec<usize> {
        self.terms
            .windows(2)
            .map(|w| {
                let (a, b) = (w[0].size(), w[1].size());
                a.max(b) / a.min(b)
            })
            .collect()
    }
}

pub fn center(g: &Group) -> Subgroup {
    g.centralizer_of_set(0..g.order())
}

/// `Z_0 = 1`, `Z_{i+1}/Z_i = Z(G/Z_i)`, computed through quotients.
pub fn upper_central_series(g: &Group) -> NormalSeries {
    let mut terms = vec![g.trivial_subgroup()];
    loop {
        let z = terms.last().unwrap();
        let (q, proj) = quotient(g, z).expect("upper central terms are normal");
        let next = proj.preimage_of(&center(&q));
        if &next == z {
            break;
        }
        terms.push(next);
    }
    NormalSeries {
        kind: SeriesKind::UpperCentral,
        terms,
    }
}

pub fn hypercenter(g: &Group) -> Subgroup {
    upper_central_series(g).last().clone()
}

fn descending(kind: SeriesKind, g: &Group, mut step: impl FnMut(&Subgroup) -> Subgroup) -> NormalSeries {
    let mut terms = vec![g.whole()];
    loop {
        let next = step(terms.last().unwrap());
        if &next == terms.last().unwrap() {
            break;
        }
        terms.push(next);
    }
    NormalSeries { kind, terms }
}

pub fn derived_subgroup(g: &Group) -> Subgroup {
    let w = g.whole();
    g.commutator_subgroup(&w, &w)
}

pub fn derived_series(g: &Group) -> NormalSeries {
    descending(SeriesKind::Derived, g, |h| g.commutator_subgroup(h, h))
}

/// `γ_1 = G`, `γ_{i+1} = [γ_i, G]`.
pub fn lower_central_series(g: &Group) -> NormalSeries {
    let w = g.whole();
    descending(SeriesKind::LowerCentral, g, |h| g.commutator_subgroup(h, &w))
}

/// `γ_∞(G)`, the limit of the lower central series.
pub fn nilpotent_residual(g: &Group) -> Subgroup {
    lower_central_series(g).last().clone()
}

/// `F(G)`: the product of `O_p(G)` over the primes dividing `|G|`.
pub fn fitting(lat: &SubgroupLattice) -> Subgroup {
    let g = lat.group();
    let mut seed = BitSet::new(g.order());
    for p in arith::prime_divisors(g.order()) {
        seed.union_with(lat.o_p(p).bits());
    }
    g.generated_subgroup(&seed.to_vec())
}

/// `F*(G)` from `F*(G)/F(G) = soc(F(G)C_G(F(G))/F(G))`.
pub fn generalized_fitting(lat: &SubgroupLattice, caps: &Caps) -> Result<Subgroup> {
    let g = lat.group();
    let f = fitting(lat);
    let fc = g.join(&f, &lat.centralizer(&f));
    let (q, proj) = quotient(g, &f)?;
    let image = proj.image_of(&fc);
    let (section, incl) = subgroup_as_group(&q, &image, "FC/F");
    let section_lat = SubgroupLattice::with_caps(&section, caps)?;
    let soc = incl.image_of(&section_lat.socle());
    Ok(proj.preimage_of(&soc))
}

/// `C_G(H/K) = { g : [g, h] ∈ K for all h ∈ H }`.
pub fn centralizer_of_section(g: &Group, h: &Subgroup, k: &Subgroup) -> Subgroup {
    let bits = BitSet::from_indices(
        g.order(),
        (0..g.order()).filter(|&x| h.members().all(|y| k.contains(g.commutator(x, y)))),
    );
    g.subgroup_from_elements(&bits.to_vec())
        .expect("section centralizers are subgroups")
}

/// Quasinilpotency through the chief-factor criterion: every element of `G`
/// acts on every chief factor `H/K` as an inner automorphism, i.e.
/// `G = H·C_G(H/K)`. Independent of the socle formula.
pub fn is_quasinilpotent_by_chief_factors(lat: &SubgroupLattice) -> bool {
    let g = lat.group();
    let series = chief_series(lat);
    series.terms.windows(2).all(|w| {
        let (k, h) = (&w[0], &w[1]);
        let c = centralizer_of_section(g, h, k);
        Group::product_size(h, &c) == g.order()
    })
}

/// The largest normal subgroup that is quasinilpotent by the chief-factor
/// criterion, found by scanning normal subgroups from the top.
pub fn largest_normal_quasinilpotent(lat: &SubgroupLattice, caps: &Caps) -> Result<Subgroup> {
    let g = lat.group();
    let normals: Vec<&Subgroup> = lat.normal_subgroups().collect();
    for n in normals.iter().rev() {
        let (ng, incl) = subgroup_as_group(g, n, "N");
        let nl = SubgroupLattice::with_caps(&ng, caps)?;
        if is_quasinilpotent_by_chief_factors(&nl) {
            debug_assert!(incl.image().size() == n.size());
            return Ok((*n).clone());
        }
    }
    unreachable!("the trivial subgroup is quasinilpotent")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TieBreak {
    /// Least pulled-back subgroup in lattice order.
    Least,
    /// Greatest; used to check that factor orders do not depend on the choice.
    Greatest,
}

/// Ascending chief series `1 = K_0 < K_1 < … < K_r = G`, each step a minimal
/// normal subgroup of `G/K_i` pulled back to `G`.
pub fn chief_series(lat: &SubgroupLattice) -> NormalSeries {
    chief_series_by(lat, TieBreak::Least)
}

pub fn chief_series_by(lat: &SubgroupLattice, tie: TieBreak) -> NormalSeries {
    let normals: Vec<&Subgroup> = lat.normal_subgroups().collect();
    let mut terms = vec![lat.trivial().clone()];
    loop {
        let k = terms.last().unwrap();
        if k.is_whole() {
            break;
        }
        let above: Vec<&Subgroup> = normals
            .iter()
            .copied()
            .filter(|h| k.is_proper_subgroup_of(h))
            .collect();
        let mut minimal = above
            .iter()
            .copied()
            .filter(|h| !above.iter().any(|m| m.is_proper_subgroup_of(h)));
        let next = match tie {
            TieBreak::Least => minimal.next(),
            TieBreak::Greatest => minimal.next_back(),
        }
        .expect("G lies above every proper normal subgroup");
        terms.push(next.clone());
    }
    NormalSeries {
        kind: SeriesKind::Chief,
        terms,
    }
}

/// Whether `H/K` is a chief factor of `G` (`K ≤ H`, both normal).
pub fn is_chief_factor(lat: &SubgroupLattice, k: &Subgroup, h: &Subgroup) -> Result<bool> {
    if !lat.is_normal(k) || !lat.is_normal(h) {
        return Err(Error::NotNormal);
    }
    if !k.is_proper_subgroup_of(h) {
        return Ok(false);
    }
    Ok(!lat
        .normal_subgroups()
        .any(|m| k.is_proper_subgroup_of(m) && m.is_proper_subgroup_of(h)))
}
