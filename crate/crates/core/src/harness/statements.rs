use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{Coverage, GroupContext, Sink, Statement};
use crate::arith;
use crate::classes::{self, Formation};
use crate::embedding;
use crate::error::Result;
use crate::group::Group;
use crate::series;
use crate::subgroup::Subgroup;

use Coverage::{Optional, Required};

macro_rules! stmt {
    ($id:expr, $cov:expr, $summary:expr, $f:ident) => {
        Statement {
            id: $id,
            summary: $summary,
            coverage: $cov,
            eval: $f,
        }
    };
}

pub(super) static REGISTRY: &[Statement] = &[
    stmt!("L2.1.1", Required, "H in 𝓗, H subnormal => H normal", l2_1_1),
    stmt!("L2.1.2", Required, "H in 𝓗, H <= K => H is an 𝓗-subgroup of K", l2_1_2),
    stmt!("L2.1.3", Required, "N <= H, N normal: H in 𝓗 <=> H/N in 𝓗(G/N)", l2_1_3),
    stmt!("L2.1.4", Required, "H in 𝓗, N normal, N <= N_G(H) => N_G(HN) = N_G(H), HN in 𝓗", l2_1_4),
    stmt!("L2.2.1", Required, "H in 𝓗C, H <= K => H is an 𝓗C-subgroup of K", l2_2_1),
    stmt!("L2.2.2", Required, "N <= H, N normal: H in 𝓗C <=> H/N in 𝓗C(G/N)", l2_2_2),
    stmt!("L2.2.3", Required, "H p-group in 𝓗C, N normal p'-group => HN, HN/N in 𝓗C", l2_2_3),
    stmt!("L2.3", Optional, "maximal subgroups of P (p smallest) in 𝓗C => p-nilpotent", l2_3),
    stmt!("L2.4", Optional, "S 2-group in 𝓗, N_G(S)/C_G(S) 2-group => S Sylow in S^G", l2_4),
    stmt!("L2.5.1", Required, "p odd, minimal subgroups of P in Z(N_G(P)) => p-nilpotent", l2_5_1),
    stmt!("L2.5.2", Required, "cyclic 2- and 4-subgroups of P quasinormal in N_G(P) => 2-nilpotent", l2_5_2),
    stmt!("L2.6.1", Required, "F*(N) = N ∩ F*(G) for N normal", l2_6_1),
    stmt!("L2.6.2", Required, "F <= F* = F*(F*); F* solvable => F* = F", l2_6_2),
    stmt!("L2.6.3", Required, "C_G(F*) <= F", l2_6_3),
    stmt!("L2.6.4", Required, "G > 1 => F* > 1, and the socle formula gives the largest normal quasinilpotent subgroup", l2_6_4),
    stmt!("L2.7", Required, "H normal in K normal in G, H in 𝓗C => H c-normal", l2_7),
    stmt!("L2.8", Required, "p-subgroup in 𝓗C but not 𝓗 => normal M of index p with HM = G", l2_8),
    stmt!("L2.9", Required, "E normal cyclic, G/E in F => G in F", l2_9),
    stmt!("L2.10", Required, "|G:M| = p, F(G) not in M, M in F => G in F", l2_10),
    stmt!("L2.11", Required, "H in 𝓗C, H <= L, L/Φ(L) chief => H in 𝓗", l2_11),
    stmt!("L2.12", Required, "P normal p-subgroup in Z∞ => O^p(G) <= C_G(P)", l2_12),
    stmt!("L2.13", Optional, "p'-element centralizing Ω_1 (or Ω_2) of P centralizes P", l2_13),
    stmt!("T3.1", Required, "P (p smallest) cyclic or D-condition => p-nilpotent", t3_1),
    stmt!("C3.2", Required, "D-condition on noncyclic Sylows => Sylow tower of supersolvable type", c3_2),
    stmt!("T3.3", Required, "G/E in F, D-condition on noncyclic Sylows of F*(E) => G in F", t3_3),
    stmt!("T3.4", Required, "G/E in F, D-condition on noncyclic Sylows of E => G in F", t3_4),
    stmt!("T3.5", Required, "G/E nilpotent, E's minimal subgroups in Z∞, cyclic 4-subgroups in 𝓗C => nilpotent", t3_5),
    stmt!("T3.6", Required, "as T3.5 with F*(E) in place of E", t3_6),
];

/// Containments among the embedding properties, run alongside the registry.
pub(super) static HIERARCHY: &[Statement] = &[
    stmt!("HIER.normal", Required, "normal => 𝓗", hier_normal),
    stmt!("HIER.sylow", Required, "Sylow => 𝓗", hier_sylow),
    stmt!("HIER.selfnorm", Required, "self-normalizing => 𝓗", hier_selfnorm),
    stmt!("HIER.h-hc", Required, "𝓗 => 𝓗C", hier_h_hc),
    stmt!("HIER.weakly-hc", Required, "weakly 𝓗 => 𝓗C", hier_weakly_hc),
];

fn yes(b: bool) -> Result<(bool, String)> {
    Ok((b, String::new()))
}

fn hyp(b: bool) -> (bool, String) {
    (b, String::new())
}

fn subs(ctx: &GroupContext) -> &[Subgroup] {
    ctx.lat.subgroups()
}

fn primes(n: usize) -> Vec<usize> {
    arith::prime_divisors(n)
}

/// The prime of a nontrivial `p`-subgroup.
fn prime_of(h: &Subgroup) -> Option<usize> {
    if h.is_trivial() {
        None
    } else {
        arith::prime_of_power(h.size())
    }
}

fn normals(ctx: &GroupContext) -> Vec<&Subgroup> {
    ctx.lat.normal_subgroups().collect()
}

// -- hierarchy --

fn hier_normal(ctx: &GroupContext, sink: &mut Sink<'_>) -> Result<()> {
    for h in subs(ctx) {
        sink.record(format!("H={}", ctx.show(h)), hyp(ctx.lat.is_normal(h)), || yes(ctx.h(h)))?;
    }
    Ok(())
}

fn hier_sylow(ctx: &GroupContext, sink: &mut Sink<'_>) -> Result<()> {
    let g = ctx.group();
    for h in subs(ctx) {
        let sylow = prime_of(h).is_some_and(|p| g.p_part(p) == h.size());
        sink.record(format!("H={}", ctx.show(h)), hyp(sylow), || yes(ctx.h(h)))?;
    }
    Ok(())
}

fn hier_selfnorm(ctx: &GroupContext, sink: &mut Sink<'_>) -> Result<()> {
    for h in subs(ctx) {
        sink.record(format!("H={}", ctx.show(h)), hyp(ctx.lat.is_self_normalizing(h)), || yes(ctx.h(h)))?;
    }
    Ok(())
}

fn hier_h_hc(ctx: &GroupContext, sink: &mut Sink<'_>) -> Result<()> {
    for h in subs(ctx) {
        sink.record(format!("H={}", ctx.show(h)), hyp(ctx.h(h)), || yes(ctx.hc(h)))?;
    }
    Ok(())
}

fn hier_weakly_hc(ctx: &GroupContext, sink: &mut Sink<'_>) -> Result<()> {
    for h in subs(ctx) {
        let v = embedding::is_weakly_h_subgroup(&ctx.lat, h);
        let w = v.witness.as_ref().map_or(String::new(), |t| format!("T={}", ctx.show(t)));
        sink.record(format!("H={}", ctx.show(h)), (v.holds, w), || yes(ctx.hc(h)))?;
    }
    Ok(())
}

// -- L2.1 --

fn l2_1_1(ctx: &GroupContext, sink: &mut Sink<'_>) -> Result<()> {
    for h in subs(ctx) {
        let hy = ctx.h(h) && embedding::is_subnormal(&ctx.lat, h);
        sink.record(format!("H={}", ctx.show(h)), hyp(hy), || yes(ctx.lat.is_normal(h)))?;
    }
    Ok(())
}

fn l2_1_2(ctx: &GroupContext, sink: &mut Sink<'_>) -> Result<()> {
    for h in subs(ctx) {
        let hy = ctx.h(h);
        for k in subs(ctx).iter().filter(|k| h.is_subgroup_of(k)) {
            let params = format!("H={} K={}", ctx.show(h), ctx.show(k));
            sink.record(params, hyp(hy), || yes(ctx.h_in(k, h)))?;
        }
    }
    Ok(())
}

fn l2_1_3(ctx: &GroupContext, sink: &mut Sink<'_>) -> Result<()> {
    for n in normals(ctx).into_iter().filter(|n| !n.is_trivial()) {
        for h in subs(ctx).iter().filter(|h| n.is_subgroup_of(h)) {
            let params = format!("N={} H={}", ctx.show(n), ctx.show(h));
            sink.fact(params, || {
                let (q, proj) = ctx.quotient(n)?;
                let (a, b) = (ctx.h(h), q.h(&proj.image_of(h)));
                Ok((a == b, format!("in G: {a}, in G/N: {b}")))
            })?;
        }
    }
    Ok(())
}

fn l2_1_4(ctx: &GroupContext, sink: &mut Sink<'_>) -> Result<()> {
    let g = ctx.group();
    for h in subs(ctx) {
        let nh = ctx.lat.normalizer(h);
        let hy = ctx.h(h);
        for n in normals(ctx).into_iter().filter(|n| n.is_subgroup_of(nh)) {
            let params = format!("H={} N={}", ctx.show(h), ctx.show(n));
            sink.record(params, hyp(hy), || {
                let hn = g.join(h, n);
                let same = ctx.lat.normalizer(&hn) == nh;
                Ok((same && ctx.h(&hn), format!("HN={} same normalizer: {same}", ctx.show(&hn))))
            })?;
        }
    }
    Ok(())
}

// -- L2.2 --

fn l2_2_1(ctx: &GroupContext, sink: &mut Sink<'_>) -> Result<()> {
    for h in subs(ctx) {
        let hy = ctx.hc(h);
        for k in subs(ctx).iter().filter(|k| h.is_subgroup_of(k)) {
            let params = format!("H={} K={}", ctx.show(h), ctx.show(k));
            sink.record(params, hyp(hy), || yes(ctx.hc_in(k, h)))?;
        }
    }
    Ok(())
}

fn l2_2_2(ctx: &GroupContext, sink: &mut Sink<'_>) -> Result<()> {
    for n in normals(ctx).into_iter().filter(|n| !n.is_trivial()) {
        for h in subs(ctx).iter().filter(|h| n.is_subgroup_of(h)) {
            let params = format!("N={} H={}", ctx.show(n), ctx.show(h));
            sink.fact(params, || {
                let (q, proj) = ctx.quotient(n)?;
                let (a, b) = (ctx.hc(h), q.hc(&proj.image_of(h)));
                Ok((a == b, format!("in G: {a}, in G/N: {b}")))
            })?;
        }
    }
    Ok(())
}

fn l2_2_3(ctx: &GroupContext, sink: &mut Sink<'_>) -> Result<()> {
    let g = ctx.group();
    for h in subs(ctx) {
        let Some(p) = prime_of(h) else { continue };
        let hy = ctx.hc(h);
        for n in normals(ctx)
            .into_iter()
            .filter(|n| !n.is_trivial() && n.size() % p != 0)
        {
            let params = format!("p={p} H={} N={}", ctx.show(h), ctx.show(n));
            sink.record(params, hyp(hy), || {
                let hn = g.join(h, n);
                let (q, proj) = ctx.quotient(n)?;
                let (a, b) = (ctx.hc(&hn), q.hc(&proj.image_of(&hn)));
                Ok((a && b, format!("HN={} in G: {a}, HN/N: {b}", ctx.show(&hn))))
            })?;
        }
    }
    Ok(())
}

// -- L2.3 to L2.5 --

fn l2_3(ctx: &GroupContext, sink: &mut Sink<'_>) -> Result<()> {
    let Some(&p) = primes(ctx.group().order()).first() else {
        return Ok(());
    };
    let pp = ctx.lat.sylow_subgroup(p);
    let bad = ctx
        .lat
        .maximal_subgroups_of(pp)
        .into_iter()
        .find(|m| !ctx.hc(m));
    let h = match bad {
        Some(m) => (false, format!("maximal {} not 𝓗C", ctx.show(m))),
        None => (true, String::new()),
    };
    sink.record(format!("p={p} P={}", ctx.show(pp)), h, || yes(classes::is_p_nilpotent(&ctx.lat, p)))
}

fn l2_4(ctx: &GroupContext, sink: &mut Sink<'_>) -> Result<()> {
    for s in subs(ctx).iter().filter(|s| prime_of(s) == Some(2)) {
        let n = ctx.lat.normalizer(s).size();
        let c = ctx.lat.centralizer(s).size();
        let hy = ctx.h(s) && arith::is_power_of(n / c, 2);
        sink.record(format!("S={}", ctx.show(s)), hyp(hy), || {
            let closure = ctx.lat.normal_closure(s);
            let ok = arith::p_part(closure.size(), 2) == s.size();
            Ok((ok, format!("S^G={}", ctx.show(&closure))))
        })?;
    }
    Ok(())
}

fn l2_5_1(ctx: &GroupContext, sink: &mut Sink<'_>) -> Result<()> {
    for p in primes(ctx.group().order()).into_iter().filter(|&p| p != 2) {
        let pp = ctx.lat.sylow_subgroup(p);
        let np = ctx.lat.normalizer(pp);
        let z = np.intersection(&ctx.lat.centralizer(np));
        let bad = ctx.lat.subgroups_of_order(pp, p).find(|x| !x.is_subgroup_of(&z));
        let h = match bad {
            Some(x) => (false, format!("{} not in Z(N_G(P))", ctx.show(x))),
            None => (true, String::new()),
        };
        sink.record(format!("p={p} P={}", ctx.show(pp)), h, || {
            yes(classes::is_p_nilpotent(&ctx.lat, p))
        })?;
    }
    Ok(())
}

fn l2_5_2(ctx: &GroupContext, sink: &mut Sink<'_>) -> Result<()> {
    let g = ctx.group();
    if !g.order().is_multiple_of(2) {
        return Ok(());
    }
    let pp = ctx.lat.sylow_subgroup(2);
    let np = ctx.lat.normalizer(pp);
    let bad = ctx
        .lat
        .subgroups_of(pp)
        .filter(|x| (x.size() == 2 || x.size() == 4) && ctx.is_cyclic(x))
        .find(|x| !embedding::is_quasinormal_in(&ctx.lat, np, x).holds);
    let h = match bad {
        Some(x) => (false, format!("{} not quasinormal in N_G(P)", ctx.show(x))),
        None => (true, String::new()),
    };
    sink.record(format!("p=2 P={}", ctx.show(pp)), h, || yes(classes::is_p_nilpotent(&ctx.lat, 2)))
}

// -- L2.6 --

fn l2_6_1(ctx: &GroupContext, sink: &mut Sink<'_>) -> Result<()> {
    for n in normals(ctx) {
        sink.fact(format!("N={}", ctx.show(n)), || {
            let lhs = ctx.fstar_of(n)?;
            let rhs = n.intersection(ctx.fstar()?);
            Ok((lhs == rhs, format!("F*(N)={} N∩F*(G)={}", ctx.show(&lhs), ctx.show(&rhs))))
        })?;
    }
    Ok(())
}

fn l2_6_2(ctx: &GroupContext, sink: &mut Sink<'_>) -> Result<()> {
    sink.fact(String::new(), || {
        let f = ctx.fitting();
        let fs = ctx.fstar()?;
        let inner = ctx.fstar_of(fs)?;
        let solvable = ctx.subgroup_in_formation(fs, Formation::Solvable)?;
        let ok = f.is_subgroup_of(fs) && &inner == fs && (!solvable || f == fs);
        Ok((ok, format!("F={} F*={} F*(F*)={} solvable: {solvable}", ctx.show(f), ctx.show(fs), ctx.show(&inner))))
    })
}

fn l2_6_3(ctx: &GroupContext, sink: &mut Sink<'_>) -> Result<()> {
    sink.fact(String::new(), || {
        let c = ctx.lat.centralizer(ctx.fstar()?);
        Ok((c.is_subgroup_of(ctx.fitting()), format!("C_G(F*)={}", ctx.show(&c))))
    })
}

fn l2_6_4(ctx: &GroupContext, sink: &mut Sink<'_>) -> Result<()> {
    let nontrivial = ctx.group().order() > 1;
    sink.record(String::new(), hyp(nontrivial), || {
        let fs = ctx.fstar()?;
        let oracle = series::largest_normal_quasinilpotent(&ctx.lat, &ctx.caps)?;
        let ok = !fs.is_trivial() && fs == &oracle;
        Ok((ok, format!("F*={} largest quasinilpotent normal={}", ctx.show(fs), ctx.show(&oracle))))
    })
}

// -- L2.7 to L2.13 --

fn l2_7(ctx: &GroupContext, sink: &mut Sink<'_>) -> Result<()> {
    let mut cnormal: Vec<Option<bool>> = alloc::vec![None; ctx.lat.len()];
    for k in normals(ctx) {
        for h in ctx.lat.normal_subgroups_of(k) {
            let params = format!("K={} H={}", ctx.show(k), ctx.show(h));
            sink.record(params, hyp(ctx.hc(h)), || {
                let slot = &mut cnormal[ctx.idx(h)];
                let v = *slot.get_or_insert_with(|| embedding::is_c_normal(&ctx.lat, h).holds);
                yes(v)
            })?;
        }
    }
    Ok(())
}

fn l2_8(ctx: &GroupContext, sink: &mut Sink<'_>) -> Result<()> {
    let g = ctx.group();
    for h in subs(ctx) {
        let Some(p) = prime_of(h) else { continue };
        let hy = ctx.hc(h) && !ctx.h(h);
        sink.record(format!("p={p} H={}", ctx.show(h)), hyp(hy), || {
            let m = ctx
                .lat
                .normal_subgroups()
                .find(|m| m.index() == p && Group::product_size(h, m) == g.order());
            Ok(match m {
                Some(m) => (true, format!("M={}", ctx.show(m))),
                None => (false, String::new()),
            })
        })?;
    }
    Ok(())
}

fn l2_9(ctx: &GroupContext, sink: &mut Sink<'_>) -> Result<()> {
    for e in normals(ctx)
        .into_iter()
        .filter(|e| !e.is_trivial() && ctx.is_cyclic(e))
    {
        for f in Formation::ALL {
            let params = format!("E={} F={}", ctx.show(e), f.name());
            let q = &ctx.quotient(e)?.0;
            sink.record(params, hyp(q.in_formation(f)), || yes(ctx.in_formation(f)))?;
        }
    }
    Ok(())
}

fn l2_10(ctx: &GroupContext, sink: &mut Sink<'_>) -> Result<()> {
    let fit = ctx.fitting();
    for m in subs(ctx).iter().filter(|m| arith::is_prime(m.index())) {
        for f in Formation::ALL {
            let params = format!("M={} p={} F={}", ctx.show(m), m.index(), f.name());
            let hy = !fit.is_subgroup_of(m) && ctx.subgroup_in_formation(m, f)?;
            sink.record(params, hyp(hy), || yes(ctx.in_formation(f)))?;
        }
    }
    Ok(())
}

fn l2_11(ctx: &GroupContext, sink: &mut Sink<'_>) -> Result<()> {
    for l in normals(ctx).into_iter().filter(|l| !l.is_trivial()) {
        let phi = ctx.lat.frattini_of(l);
        if !series::is_chief_factor(&ctx.lat, &phi, l)? {
            continue;
        }
        for h in ctx.lat.subgroups_of(l) {
            let params = format!("L={} H={}", ctx.show(l), ctx.show(h));
            sink.record(params, hyp(ctx.hc(h)), || yes(ctx.h(h)))?;
        }
    }
    Ok(())
}

fn l2_12(ctx: &GroupContext, sink: &mut Sink<'_>) -> Result<()> {
    let z = ctx.hypercenter();
    for pp in normals(ctx) {
        let Some(p) = prime_of(pp) else { continue };
        let params = format!("p={p} P={}", ctx.show(pp));
        sink.record(params, hyp(pp.is_subgroup_of(z)), || {
            let op = ctx.lat.o_upper_p(p);
            let c = ctx.lat.centralizer(pp);
            Ok((op.is_subgroup_of(&c), format!("O^p={} C_G(P)={}", ctx.show(&op), ctx.show(&c))))
        })?;
    }
    Ok(())
}

fn l2_13(ctx: &GroupContext, sink: &mut Sink<'_>) -> Result<()> {
    let g = ctx.group();
    let centralizes = |x: usize, s: &Subgroup| s.members().all(|y| g.mul(x, y) == g.mul(y, x));
    for pp in subs(ctx) {
        let Some(p) = prime_of(pp) else { continue };
        let nonabelian_2 = p == 2 && !is_abelian_sub(g, pp);
        let omega1 = ctx.lat.omega(pp, p, 1)?;
        let omega2 = ctx.lat.omega(pp, p, 2)?;
        for x in ctx.lat.normalizer(pp).members() {
            if x == 0 || g.element_order(x).is_multiple_of(p) {
                continue;
            }
            for (i, om) in [(1, &omega1), (2, &omega2)] {
                let params = format!("p={p} P={} g={x} i={i}", ctx.show(pp));
                let hy = centralizes(x, om) && (i == 2 || !nonabelian_2);
                sink.record(params, hyp(hy), || yes(centralizes(x, pp)))?;
            }
        }
    }
    Ok(())
}

fn is_abelian_sub(g: &Group, h: &Subgroup) -> bool {
    h.members().all(|a| h.members().all(|b| g.mul(a, b) == g.mul(b, a)))
}

// -- main results --

/// Whether some D-order `d` (`1 < d < |P|`) works for the `p`-subgroup `P`:
/// every order-`d` subgroup of `P` is 𝓗C, and for `p = 2` with `|P:D| > 2`
/// every `H ≤ P` of order `2d` with a normal `D₁` of order `d/2` and
/// `H/D₁ ≅ C₄` is 𝓗C. On failure, names a failing subgroup per order.
fn d_order(ctx: &GroupContext, pp: &Subgroup, p: usize) -> core::result::Result<usize, String> {
    let lat = &ctx.lat;
    let mut why = Vec::new();
    let mut d = p;
    while d < pp.size() {
        let bad = lat
            .subgroups_of_order(pp, d)
            .find(|h| !ctx.hc(h))
            .or_else(|| {
                if p == 2 && pp.size() / d > 2 {
                    lat.subgroups_of_order(pp, 2 * d)
                        .find(|h| has_c4_quotient(ctx, h, d / 2) && !ctx.hc(h))
                } else {
                    None
                }
            });
        match bad {
            None => return Ok(d),
            Some(h) => why.push(format!("|D|={d}: {} not 𝓗C", ctx.show(h))),
        }
        d *= p;
    }
    if why.is_empty() {
        why.push("no admissible D-order".into());
    }
    Err(why.join(", "))
}

/// `H` has a normal subgroup `D₁` of order `d1` with `H/D₁` cyclic of order 4.
fn has_c4_quotient(ctx: &GroupContext, h: &Subgroup, d1: usize) -> bool {
    let g = ctx.group();
    h.size() == 4 * d1
        && ctx
            .lat
            .subgroups_of_order(h, d1)
            .any(|n| ctx.lat.is_normal_in(h, n) && h.members().any(|x| !n.contains(g.mul(x, x))))
}

/// Every noncyclic Sylow subgroup of `X` admits a D-order.
fn sylow_condition(ctx: &GroupContext, x: &Subgroup) -> (bool, String) {
    let mut notes = Vec::new();
    for p in primes(x.size()) {
        let pp = ctx.lat.sylow_subgroup_of(x, p);
        if ctx.is_cyclic(pp) {
            continue;
        }
        match d_order(ctx, pp, p) {
            Ok(d) => notes.push(format!("p={p}: |D|={d}")),
            Err(w) => return (false, format!("p={p} P={}: {w}", ctx.show(pp))),
        }
    }
    if notes.is_empty() {
        (true, "all Sylow subgroups cyclic".into())
    } else {
        (true, notes.join(", "))
    }
}

fn t3_1(ctx: &GroupContext, sink: &mut Sink<'_>) -> Result<()> {
    let Some(&p) = primes(ctx.group().order()).first() else {
        return Ok(());
    };
    let pp = ctx.lat.sylow_subgroup(p);
    let h = if ctx.is_cyclic(pp) {
        (true, "P cyclic".into())
    } else {
        match d_order(ctx, pp, p) {
            Ok(d) => (true, format!("|D|={d}")),
            Err(w) => (false, w),
        }
    };
    sink.record(format!("p={p} P={}", ctx.show(pp)), h, || yes(classes::is_p_nilpotent(&ctx.lat, p)))
}

fn c3_2(ctx: &GroupContext, sink: &mut Sink<'_>) -> Result<()> {
    let h = sylow_condition(ctx, ctx.whole());
    sink.record(String::new(), h, || yes(classes::has_sylow_tower_supersolvable_type(&ctx.lat)))
}

fn formation_theorem(ctx: &GroupContext, sink: &mut Sink<'_>, use_fstar: bool) -> Result<()> {
    for f in Formation::ALL {
        for e in normals(ctx) {
            if !ctx.quotient(e)?.0.in_formation(f) {
                continue;
            }
            let x = if use_fstar { ctx.fstar_of(e)? } else { e.clone() };
            let params = if use_fstar {
                format!("F={} E={} F*(E)={}", f.name(), ctx.show(e), ctx.show(&x))
            } else {
                format!("F={} E={}", f.name(), ctx.show(e))
            };
            sink.record(params, sylow_condition(ctx, &x), || yes(ctx.in_formation(f)))?;
        }
    }
    Ok(())
}

fn t3_3(ctx: &GroupContext, sink: &mut Sink<'_>) -> Result<()> {
    formation_theorem(ctx, sink, true)
}

fn t3_4(ctx: &GroupContext, sink: &mut Sink<'_>) -> Result<()> {
    formation_theorem(ctx, sink, false)
}

/// Minimal subgroups of `X` lie in `Z∞(G)` and cyclic subgroups of order 4
/// are 𝓗C.
fn nilpotency_condition(ctx: &GroupContext, x: &Subgroup) -> (bool, String) {
    let z = ctx.hypercenter();
    for h in ctx.lat.subgroups_of(x) {
        if arith::is_prime(h.size()) && !h.is_subgroup_of(z) {
            return (false, format!("minimal {} not in Z∞", ctx.show(h)));
        }
    }
    for h in ctx.lat.subgroups_of_order(x, 4) {
        if ctx.is_cyclic(h) && !ctx.hc(h) {
            return (false, format!("cyclic {} not 𝓗C", ctx.show(h)));
        }
    }
    (true, String::new())
}

fn nilpotency_theorem(ctx: &GroupContext, sink: &mut Sink<'_>, use_fstar: bool) -> Result<()> {
    for e in normals(ctx) {
        if !ctx.quotient(e)?.0.is_nilpotent() {
            continue;
        }
        let x = if use_fstar { ctx.fstar_of(e)? } else { e.clone() };
        let params = if use_fstar {
            format!("E={} F*(E)={}", ctx.show(e), ctx.show(&x))
        } else {
            format!("E={}", ctx.show(e))
        };
        sink.record(params, nilpotency_condition(ctx, &x), || yes(ctx.is_nilpotent()))?;
    }
    Ok(())
}

fn t3_5(ctx: &GroupContext, sink: &mut Sink<'_>) -> Result<()> {
    nilpotency_theorem(ctx, sink, false)
}

fn t3_6(ctx: &GroupContext, sink: &mut Sink<'_>) -> Result<()> {
    nilpotency_theorem(ctx, sink, true)
}
