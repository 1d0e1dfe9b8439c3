use std::fmt::Write;
use std::str::FromStr;

use hc_lab_core::embedding::{self, Obstruction};
use hc_lab_core::{arith, classes, series, Caps, EmbeddingVerdict, Group, Subgroup, SubgroupLattice};

use crate::LabError;

/// Subgroup selector for `check`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Selector {
    /// The `index`-th subgroup of order `order` in lattice order.
    Order { order: usize, index: usize },
    /// Subgroup generated by these element indices.
    Generators(Vec<usize>),
    Whole,
}

impl FromStr for Selector {
    type Err = LabError;

    fn from_str(s: &str) -> Result<Self, LabError> {
        let bad = || LabError::Usage(format!("bad selector `{s}`: use order=K,index=J, element indices like 3,7, or all"));
        let s = s.trim();
        if s == "all" {
            return Ok(Selector::Whole);
        }
        if s.starts_with("order=") || s.starts_with("index=") {
            let (mut order, mut index) = (None, None);
            for part in s.split(',') {
                let (k, v) = part.split_once('=').ok_or_else(bad)?;
                let v: usize = v.trim().parse().map_err(|_| bad())?;
                match k.trim() {
                    "order" => order = Some(v),
                    "index" => index = Some(v),
                    _ => return Err(bad()),
                }
            }
            return Ok(Selector::Order {
                order: order.ok_or_else(bad)?,
                index: index.unwrap_or(0),
            });
        }
        s.split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()
            .map(Selector::Generators)
    }
}

impl Selector {
    pub fn resolve(&self, lat: &SubgroupLattice) -> Result<Subgroup, LabError> {
        let g = lat.group();
        match self {
            Selector::Whole => Ok(g.whole()),
            Selector::Generators(xs) => {
                if let Some(x) = xs.iter().find(|&&x| x >= g.order()) {
                    return Err(LabError::Usage(format!("element {x} out of range for order {}", g.order())));
                }
                Ok(g.generated_subgroup(xs))
            }
            Selector::Order { order, index } => {
                let of_order: Vec<&Subgroup> = lat.subgroups_of_order(lat.whole(), *order).collect();
                of_order.get(*index).map(|h| (*h).clone()).ok_or_else(|| {
                    LabError::Usage(format!(
                        "index {index} out of range: {} subgroups of order {order}",
                        of_order.len()
                    ))
                })
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckPredicate {
    H,
    Hc,
    CNormal,
    WeaklyH,
    Quasinormal,
    Subnormal,
    Normal,
}

impl FromStr for CheckPredicate {
    type Err = LabError;

    fn from_str(s: &str) -> Result<Self, LabError> {
        Ok(match s {
            "h" => CheckPredicate::H,
            "hc" => CheckPredicate::Hc,
            "cnormal" => CheckPredicate::CNormal,
            "weaklyh" => CheckPredicate::WeaklyH,
            "quasinormal" => CheckPredicate::Quasinormal,
            "subnormal" => CheckPredicate::Subnormal,
            "normal" => CheckPredicate::Normal,
            _ => {
                return Err(LabError::Usage(format!(
                    "unknown predicate `{s}` (h, hc, cnormal, weaklyh, quasinormal, subnormal, normal)"
                )))
            }
        })
    }
}

fn element(g: &Group, x: usize) -> String {
    match g.label(x) {
        Some(l) => l.to_string(),
        None => x.to_string(),
    }
}

fn describe(lat: &SubgroupLattice, h: &Subgroup) -> String {
    let g = lat.group();
    let i = lat.index_of(h).expect("lattice is complete");
    let gens: Vec<String> = lat.generators(i).iter().map(|&x| element(g, x)).collect();
    format!("#{i} order {} <{}>", h.size(), gens.join(", "))
}

/// Order, characteristic subgroups, class flags and Sylow structure.
pub fn info(g: &Group, caps: &Caps) -> Result<String, LabError> {
    let lat = SubgroupLattice::with_caps(g, caps)?;
    let fstar = series::generalized_fitting(&lat, caps)?;
    let mut out = String::new();
    let rows: [(&str, String); 12] = [
        ("group", g.name().to_string()),
        ("order", g.order().to_string()),
        ("subgroups", lat.len().to_string()),
        ("center", series::center(g).size().to_string()),
        ("Phi", lat.frattini().size().to_string()),
        ("F", series::fitting(&lat).size().to_string()),
        ("F*", fstar.size().to_string()),
        ("Z_inf", series::hypercenter(g).size().to_string()),
        ("gamma_inf", series::nilpotent_residual(g).size().to_string()),
        ("nilpotent", classes::is_nilpotent(g).to_string()),
        ("supersolvable", classes::is_supersolvable(&lat).to_string()),
        ("solvable", classes::is_solvable(g).to_string()),
    ];
    for (k, v) in rows {
        writeln!(out, "{k:<14} {v}").unwrap();
    }
    for p in arith::prime_divisors(g.order()) {
        let sylows = lat.sylow_subgroups(p);
        let s = sylows[0];
        let cyclic = s.members().any(|x| g.element_order(x) == s.size());
        writeln!(
            out,
            "sylow {p:<8} order {} count {} normal {} cyclic {}",
            s.size(),
            sylows.len(),
            sylows.len() == 1,
            cyclic
        )
        .unwrap();
    }
    Ok(out)
}

fn obstruction(lat: &SubgroupLattice, o: &Obstruction) -> String {
    let g = lat.group();
    match o {
        Obstruction::NotSupplement => "H T is not the whole ambient group".into(),
        Obstruction::Escapes { conjugator, element: x } => format!(
            "g = {} : {} lies in H^g and the normalizer but not in H",
            element(g, *conjugator),
            element(g, *x)
        ),
        Obstruction::OutsideCore { element: x } => {
            format!("{} lies in the intersection but outside the core of H", element(g, *x))
        }
        Obstruction::NotPermutable { partner, element: x } => format!(
            "X = {} : {} lies in HX but not in XH",
            describe(lat, partner),
            element(g, *x)
        ),
    }
}

fn write_verdict(out: &mut String, lat: &SubgroupLattice, v: &EmbeddingVerdict) {
    writeln!(out, "verdict   {}", v.holds).unwrap();
    if let Some(t) = &v.witness {
        writeln!(out, "witness   {}", describe(lat, t)).unwrap();
    }
    if let Some(o) = &v.counterexample {
        writeln!(out, "counterexample {}", obstruction(lat, o)).unwrap();
    }
    for (t, o) in &v.refutation {
        writeln!(out, "  candidate {}: {}", describe(lat, t), obstruction(lat, o)).unwrap();
    }
}

/// Evaluates one embedding predicate on the selected subgroup.
pub fn check(pred: CheckPredicate, g: &Group, selector: &Selector, caps: &Caps) -> Result<String, LabError> {
    let lat = SubgroupLattice::with_caps(g, caps)?;
    let h = selector.resolve(&lat)?;
    let mut out = String::new();
    writeln!(out, "H         {}", describe(&lat, &h)).unwrap();
    match pred {
        CheckPredicate::H => write_verdict(&mut out, &lat, &embedding::is_h_subgroup(&lat, &h)),
        CheckPredicate::Hc => write_verdict(&mut out, &lat, &embedding::is_hc_subgroup(&lat, &h)),
        CheckPredicate::CNormal => write_verdict(&mut out, &lat, &embedding::is_c_normal(&lat, &h)),
        CheckPredicate::WeaklyH => write_verdict(&mut out, &lat, &embedding::is_weakly_h_subgroup(&lat, &h)),
        CheckPredicate::Quasinormal => write_verdict(&mut out, &lat, &embedding::is_quasinormal(&lat, &h)),
        CheckPredicate::Subnormal => {
            writeln!(out, "verdict   {}", embedding::is_subnormal(&lat, &h)).unwrap();
            let chain = embedding::subnormal_chain(g, lat.whole(), &h);
            let orders: Vec<String> = chain.iter().map(|c| c.size().to_string()).collect();
            writeln!(out, "chain     {}", orders.join(" < ")).unwrap();
        }
        CheckPredicate::Normal => {
            writeln!(out, "verdict   {}", lat.is_normal(&h)).unwrap();
            if let Some(x) = (0..g.order()).find(|&x| g.conjugate_subgroup(&h, x) != h) {
                writeln!(out, "counterexample g = {} moves H", element(g, x)).unwrap();
            }
        }
    }
    Ok(out)
}
