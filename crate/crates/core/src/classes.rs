//! Group-class membership: nilpotent, p-nilpotent, solvable, supersolvable,
//! Sylow towers, quasinilpotent, minimal nonnilpotent, and the two
//! formations instantiated for the formation-parametrized statements.

use alloc::vec::Vec;

use crate::arith;
use crate::error::Result;
use crate::group::{Caps, Group};
use crate::lattice::{self, SubgroupLattice};
use crate::morphism::quotient;
use crate::series;
use crate::subgroup::Subgroup;

/// A saturated formation containing every supersolvable group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formation {
    Supersolvable,
    Solvable,
}

impl Formation {
    pub const ALL: [Formation; 2] = [Formation::Supersolvable, Formation::Solvable];

    pub fn name(self) -> &'static str {
        match self {
            Formation::Supersolvable => "supersolvable",
            Formation::Solvable => "solvable",
        }
    }
}

pub fn is_abelian(g: &Group) -> bool {
    g.is_abelian()
}

/// Lower central series reaches the trivial subgroup.
pub fn is_nilpotent(g: &Group) -> bool {
    series::nilpotent_residual(g).is_trivial()
}

/// Every Sylow subgroup is normal (second route, used for cross-checks).
pub fn is_nilpotent_by_sylows(g: &Group) -> bool {
    lattice::is_nilpotent_subgroup(g, &g.whole())
}

/// `G` has a normal subgroup of order `|G| / |G|_p`.
pub fn is_p_nilpotent(lat: &SubgroupLattice, p: usize) -> bool {
    let g = lat.group();
    let want = g.order() / g.p_part(p);
    lat.normal_subgroups().any(|h| h.size() == want)
}

pub fn is_solvable(g: &Group) -> bool {
    series::derived_series(g).last().is_trivial()
}

/// Every factor of the computed chief series has prime order.
pub fn is_supersolvable(lat: &SubgroupLattice) -> bool {
    series::chief_series(lat)
        .factor_orders()
        .into_iter()
        .all(arith::is_prime)
}

/// For the primes `p_1 > p_2 > …` dividing `|G|`, each product of the first
/// `i` Sylow subgroups is a normal (Hall) subgroup.
pub fn has_sylow_tower_supersolvable_type(lat: &SubgroupLattice) -> bool {
    let g = lat.group();
    let mut primes = arith::prime_divisors(g.order());
    primes.reverse();
    let mut order = 1;
    primes.into_iter().all(|p| {
        order *= g.p_part(p);
        lat.normal_subgroups().any(|h| h.size() == order)
    })
}

/// Same property by the iterated construction: the Sylow subgroup for the
/// largest remaining prime is normal; pass to the quotient and repeat.
pub fn has_sylow_tower_by_quotients(g: &Group, caps: &Caps) -> Result<bool> {
    let mut cur = g.clone();
    let mut primes = arith::prime_divisors(g.order());
    primes.reverse();
    for p in primes {
        let lat = SubgroupLattice::with_caps(&cur, caps)?;
        let sylows = lat.sylow_subgroups(p);
        if sylows.len() != 1 {
            return Ok(false);
        }
        let (q, _) = quotient(&cur, sylows[0])?;
        cur = q;
    }
    Ok(cur.order() == 1)
}

/// `F*(G) = G`.
pub fn is_quasinilpotent(lat: &SubgroupLattice, caps: &Caps) -> Result<bool> {
    Ok(series::generalized_fitting(lat, caps)?.is_whole())
}

pub fn in_formation(lat: &SubgroupLattice, f: Formation) -> bool {
    match f {
        Formation::Supersolvable => is_supersolvable(lat),
        Formation::Solvable => is_solvable(lat.group()),
    }
}

/// Structure of a minimal nonnilpotent group `G = P ⋊ Q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchmidtDecomposition {
    pub p: usize,
    pub q: usize,
    pub prime_count: usize,
    pub p_normal: bool,
    /// The normal Sylow `p`-subgroup.
    pub sylow_p: Subgroup,
    /// A (nonnormal, cyclic) Sylow `q`-subgroup.
    pub sylow_q: Subgroup,
    pub q_cyclic: bool,
    pub q_normal: bool,
    /// `P/Φ(P)` is a chief factor of `G`.
    pub frattini_factor_is_chief: bool,
    pub exponent: usize,
}

impl SchmidtDecomposition {
    /// Two primes, `P` normal, `Q` cyclic and not normal, `P/Φ(P)` chief, `exp(P) = p` for odd `p`
    /// and `exp(P) ≤ 4` for `p = 2`.
    pub fn is_verified(&self) -> bool {
        let exp_ok = if self.p == 2 {
            self.exponent <= 4
        } else {
            self.exponent == self.p
        };
        self.prime_count == 2 && self.p_normal && self.q_cyclic && !self.q_normal && self.frattini_factor_is_chief && exp_ok
    }
}

/// `Some` iff `G` is not nilpotent but every proper subgroup is. The
/// decomposition records each structural claim separately so callers can
/// see which one failed.
pub fn minimal_nonnilpotent(lat: &SubgroupLattice) -> Option<SchmidtDecomposition> {
    let g = lat.group();
    if is_nilpotent(g) {
        return None;
    }
    if !lat
        .maximal_subgroups()
        .into_iter()
        .all(|m| lat.is_nilpotent_subgroup(m))
    {
        return None;
    }
    let primes = arith::prime_divisors(g.order());
    let p = primes
        .iter()
        .copied()
        .find(|&p| lat.sylow_subgroups(p).len() == 1)
        .unwrap_or(primes[0]);
    let q = primes.iter().copied().find(|&q| q != p)?;
    let sylow_p = lat.sylow_subgroup(p).clone();
    let sylow_q = lat.sylow_subgroup(q).clone();
    let q_cyclic = sylow_q
        .members()
        .any(|x| g.element_order(x) == sylow_q.size());
    let phi = lat.frattini_of(&sylow_p);
    let frattini_factor_is_chief = series::is_chief_factor(lat, &phi, &sylow_p).unwrap_or(false);
    Some(SchmidtDecomposition {
        p,
        q,
        prime_count: primes.len(),
        p_normal: lat.is_normal(&sylow_p),
        q_cyclic,
        q_normal: lat.is_normal(&sylow_q),
        frattini_factor_is_chief,
        exponent: g.exponent_of(&sylow_p),
        sylow_p,
        sylow_q,
    })
}

pub fn is_minimal_nonnilpotent(lat: &SubgroupLattice) -> bool {
    minimal_nonnilpotent(lat).is_some()
}

/// Primes dividing `|G|`, ascending.
pub fn primes(g: &Group) -> Vec<usize> {
    arith::prime_divisors(g.order())
}
