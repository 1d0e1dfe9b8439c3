//! Per-group evaluation context: the lattice plus lazily computed, cached
//! facts (embedding verdicts, characteristic subgroups, quotient and
//! subgroup contexts) shared by all statements evaluated on one group.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::cell::OnceCell;

use crate::classes::{self, Formation};
use crate::embedding::{self, HcRule};
use crate::error::Result;
use crate::group::{Caps, Group};
use crate::lattice::SubgroupLattice;
use crate::morphism::{quotient, subgroup_as_group, Morphism};
use crate::series;
use crate::subgroup::Subgroup;

pub struct GroupContext {
    pub lat: SubgroupLattice,
    pub caps: Caps,
    pub rule: HcRule,
    h: Vec<OnceCell<bool>>,
    hc: Vec<OnceCell<bool>>,
    fitting: OnceCell<Subgroup>,
    fstar: OnceCell<Subgroup>,
    hypercenter: OnceCell<Subgroup>,
    nilpotent: OnceCell<bool>,
    formation: [OnceCell<bool>; 2],
    /// `G/N` for normal `N`, keyed by lattice index, with the projection.
    quotients: Vec<OnceCell<Box<(GroupContext, Morphism)>>>,
    /// `K` realized as a group, keyed by lattice index, with the inclusion.
    subgroups: Vec<OnceCell<Box<(GroupContext, Morphism)>>>,
}

impl GroupContext {
    pub fn new(g: &Group, caps: &Caps, rule: HcRule) -> Result<GroupContext> {
        let lat = SubgroupLattice::with_caps(g, caps)?;
        let n = lat.len();
        let cells = || (0..n).map(|_| OnceCell::new()).collect::<Vec<_>>();
        Ok(GroupContext {
            caps: *caps,
            rule,
            h: cells(),
            hc: cells(),
            fitting: OnceCell::new(),
            fstar: OnceCell::new(),
            hypercenter: OnceCell::new(),
            nilpotent: OnceCell::new(),
            formation: [OnceCell::new(), OnceCell::new()],
            quotients: (0..n).map(|_| OnceCell::new()).collect(),
            subgroups: (0..n).map(|_| OnceCell::new()).collect(),
            lat,
        })
    }

    pub fn group(&self) -> &Group {
        self.lat.group()
    }

    pub fn whole(&self) -> &Subgroup {
        self.lat.whole()
    }

    pub fn idx(&self, h: &Subgroup) -> usize {
        self.lat.index_of(h).expect("lattice member")
    }

    /// Compact, deterministic rendering: lattice index and order.
    pub fn show(&self, h: &Subgroup) -> String {
        alloc::format!("#{}/{}", self.idx(h), h.size())
    }

    /// 𝓗-subgroup of `G`.
    pub fn h(&self, h: &Subgroup) -> bool {
        *self.h[self.idx(h)].get_or_init(|| embedding::is_h_subgroup(&self.lat, h).holds)
    }

    /// 𝓗C-subgroup of `G`, under the configured rule.
    pub fn hc(&self, h: &Subgroup) -> bool {
        *self.hc[self.idx(h)].get_or_init(|| {
            embedding::is_hc_subgroup_in(&self.lat, self.lat.whole(), h, self.rule).holds
        })
    }

    pub fn hc_in(&self, k: &Subgroup, h: &Subgroup) -> bool {
        if k.is_whole() {
            return self.hc(h);
        }
        embedding::is_hc_subgroup_in(&self.lat, k, h, self.rule).holds
    }

    pub fn h_in(&self, k: &Subgroup, h: &Subgroup) -> bool {
        if k.is_whole() {
            return self.h(h);
        }
        embedding::is_h_subgroup_in(&self.lat, k, h).holds
    }

    pub fn fitting(&self) -> &Subgroup {
        self.fitting.get_or_init(|| series::fitting(&self.lat))
    }

    pub fn fstar(&self) -> Result<&Subgroup> {
        if let Some(f) = self.fstar.get() {
            return Ok(f);
        }
        let f = series::generalized_fitting(&self.lat, &self.caps)?;
        Ok(self.fstar.get_or_init(|| f))
    }

    pub fn hypercenter(&self) -> &Subgroup {
        self.hypercenter
            .get_or_init(|| series::hypercenter(self.group()))
    }

    pub fn is_nilpotent(&self) -> bool {
        *self
            .nilpotent
            .get_or_init(|| classes::is_nilpotent(self.group()))
    }

    pub fn in_formation(&self, f: Formation) -> bool {
        let slot = match f {
            Formation::Supersolvable => 0,
            Formation::Solvable => 1,
        };
        *self.formation[slot].get_or_init(|| classes::in_formation(&self.lat, f))
    }

    /// Context of `G/N` and the projection `G → G/N`.
    pub fn quotient(&self, n: &Subgroup) -> Result<&(GroupContext, Morphism)> {
        let cell = &self.quotients[self.idx(n)];
        if let Some(q) = cell.get() {
            return Ok(q);
        }
        let (qg, proj) = quotient(self.group(), n)?;
        let ctx = GroupContext::new(&qg, &self.caps, self.rule)?;
        Ok(cell.get_or_init(|| Box::new((ctx, proj))))
    }

    /// Context of `K` as a group in its own right and the inclusion `K → G`.
    pub fn subgroup(&self, k: &Subgroup) -> Result<&(GroupContext, Morphism)> {
        let cell = &self.subgroups[self.idx(k)];
        if let Some(s) = cell.get() {
            return Ok(s);
        }
        let name = alloc::format!("{}#{}", self.group().name(), self.idx(k));
        let (sg, incl) = subgroup_as_group(self.group(), k, name);
        let ctx = GroupContext::new(&sg, &self.caps, self.rule)?;
        Ok(cell.get_or_init(|| Box::new((ctx, incl))))
    }

    /// `F*(K)` for a subgroup `K`, as a subgroup of `G`.
    pub fn fstar_of(&self, k: &Subgroup) -> Result<Subgroup> {
        if k.is_whole() {
            return self.fstar().cloned();
        }
        let (sub, incl) = self.subgroup(k)?;
        Ok(incl.image_of(sub.fstar()?))
    }

    /// Whether `K ∈ 𝔉` (as an abstract group).
    pub fn subgroup_in_formation(&self, k: &Subgroup, f: Formation) -> Result<bool> {
        if k.is_whole() {
            return Ok(self.in_formation(f));
        }
        Ok(self.subgroup(k)?.0.in_formation(f))
    }

    pub fn is_cyclic(&self, k: &Subgroup) -> bool {
        k.members()
            .any(|x| self.group().element_order(x) == k.size())
    }
}
