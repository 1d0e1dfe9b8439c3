//! Named group constructors, the group-spec grammar, the Cayley-table text
//! format and the default verification corpus.
//!
//! Grammar (also the canonical names):
//!
//! ```text
//! C12        cyclic of order 12
//! D8         dihedral of order 8 (Dihedral(4))
//! Q8, Dic3   dicyclic of order 4n (Q8 = Dicyclic(2))
//! S4, A5     symmetric / alternating
//! EA(3,2)    elementary abelian 3^2
//! SD(5,4,2)  C5 ⋊ C4, generator acting by x -> x^2
//! SL(2,3)    from the bundled table fixture
//! prod(C3,S3)
//! file:PATH
//! ```
//!
//! The text format is: line 1 the order `n`; then `n` lines of `n`
//! space-separated indices; then optional `name <string>` and
//! `label <i> <string>` lines.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::arith;
use crate::error::{Error, Result};
use crate::group::{Caps, Group};
use crate::morphism::direct_product;

/// The SL(2,3) table shipped with the repository.
pub const SL23_FIXTURE: &str = include_str!("../../../fixtures/sl23.cayley");

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Cyclic(usize),
    /// Dihedral group of order `2n`.
    Dihedral(usize),
    /// Dicyclic group of order `4n`.
    Dicyclic(usize),
    ElementaryAbelian { p: usize, k: usize },
    Symmetric(usize),
    Alternating(usize),
    Sl23,
    /// `C_m ⋊ C_n` with the generator of `C_n` acting by `x ↦ x^k`.
    SemidirectCyclic { m: usize, n: usize, k: usize },
    Product(Box<GroupSpec>, Box<GroupSpec>),
    FromFile(String),
}

impl GroupSpec {
    pub fn product(a: GroupSpec, b: GroupSpec) -> GroupSpec {
        GroupSpec::Product(Box::new(a), Box::new(b))
    }

    pub fn canonical_name(&self) -> String {
        match self {
            GroupSpec::Cyclic(n) => format!("C{n}"),
            GroupSpec::Dihedral(n) => format!("D{}", 2 * n),
            GroupSpec::Dicyclic(2) => "Q8".into(),
            GroupSpec::Dicyclic(n) => format!("Dic{n}"),
            GroupSpec::ElementaryAbelian { p, k } => format!("EA({p},{k})"),
            GroupSpec::Symmetric(n) => format!("S{n}"),
            GroupSpec::Alternating(n) => format!("A{n}"),
            GroupSpec::Sl23 => "SL(2,3)".into(),
            GroupSpec::SemidirectCyclic { m, n, k } => format!("SD({m},{n},{k})"),
            GroupSpec::Product(a, b) => {
                format!("prod({},{})", a.canonical_name(), b.canonical_name())
            }
            GroupSpec::FromFile(p) => format!("file:{p}"),
        }
    }

    /// Order implied by the parameters (`None` for files).
    pub fn expected_order(&self) -> Option<usize> {
        Some(match self {
            GroupSpec::Cyclic(n) => *n,
            GroupSpec::Dihedral(n) => 2 * n,
            GroupSpec::Dicyclic(n) => 4 * n,
            GroupSpec::ElementaryAbelian { p, k } => p.checked_pow(*k as u32)?,
            GroupSpec::Symmetric(n) => (1..=*n).product(),
            GroupSpec::Alternating(n) => ((1..=*n).product::<usize>() / 2).max(1),
            GroupSpec::Sl23 => 24,
            GroupSpec::SemidirectCyclic { m, n, .. } => m * n,
            GroupSpec::Product(a, b) => a.expected_order()? * b.expected_order()?,
            GroupSpec::FromFile(_) => return None,
        })
    }

    /// Realizes a spec; `FromFile` is rejected (see [`GroupSpec::realize_with`]).
    pub fn realize(&self, caps: &Caps) -> Result<Group> {
        self.realize_with(caps, &|path: &str| {
            Err(Error::InvalidParameter(format!(
                "no file loader available for {path}"
            )))
        })
    }

    /// Realizes a spec, delegating `FromFile` to `load`.
    pub fn realize_with(&self, caps: &Caps, load: &dyn Fn(&str) -> Result<Group>) -> Result<Group> {
        if let Some(order) = self.expected_order() {
            Caps::check("construction", order, caps.order)?;
        }
        let name = self.canonical_name();
        let g = match self {
            GroupSpec::Cyclic(n) => {
                positive(*n, "cyclic order")?;
                Group::from_operation(*n, 0, name, caps, |a, b| (a + b) % n)?
            }
            GroupSpec::Dihedral(n) => {
                positive(*n, "dihedral parameter")?;
                let n = *n;
                // r^i s^j at index i + n·j.
                Group::from_operation(2 * n, 0, name, caps, |a, b| {
                    let (i, j) = (a % n, a / n);
                    let (s, t) = (b % n, b / n);
                    let r = if j == 0 { (i + s) % n } else { (i + n - s) % n };
                    r + n * ((j + t) % 2)
                })?
            }
            GroupSpec::Dicyclic(n) => {
                positive(*n, "dicyclic parameter")?;
                let (n, m) = (*n, 2 * *n);
                // a^i x^j at index i + 2n·j, with x² = a^n and x a x⁻¹ = a⁻¹.
                Group::from_operation(2 * m, 0, name, caps, |a, b| {
                    let (i, j) = (a % m, a / m);
                    let (s, t) = (b % m, b / m);
                    match (j, t) {
                        (0, _) => (i + s) % m + m * t,
                        (1, 0) => (i + m - s) % m + m,
                        _ => (i + m - s + n) % m,
                    }
                })?
            }
            GroupSpec::ElementaryAbelian { p, k } => {
                if !arith::is_prime(*p) {
                    return Err(Error::InvalidParameter(format!("{p} is not prime")));
                }
                let c = GroupSpec::Cyclic(*p).realize(caps)?;
                let mut g = Group::trivial();
                for _ in 0..*k {
                    g = direct_product(&g, &c, caps)?;
                }
                g.renamed(name)
            }
            GroupSpec::Symmetric(n) => permutation_group(*n, false, name, caps)?,
            GroupSpec::Alternating(n) => permutation_group(*n, true, name, caps)?,
            GroupSpec::Sl23 => parse_cayley_text(SL23_FIXTURE, caps)?,
            GroupSpec::SemidirectCyclic { m, n, k } => {
                let (m, n, k) = (*m, *n, *k);
                positive(m, "semidirect m")?;
                positive(n, "semidirect n")?;
                if arith::gcd(k, m) != 1 || pow_mod(k, n, m) != 1 % m {
                    return Err(Error::InvalidAction { m, n, k });
                }
                let powers: Vec<usize> = (0..n).map(|j| pow_mod(k, j, m)).collect();
                // a^i b^j at index i + m·j, with b a b⁻¹ = a^k.
                Group::from_operation(m * n, 0, name, caps, |x, y| {
                    let (i, j) = (x % m, x / m);
                    let (s, t) = (y % m, y / m);
                    (i + s * powers[j]) % m + m * ((j + t) % n)
                })?
            }
            GroupSpec::Product(a, b) => {
                let ga = a.realize_with(caps, load)?;
                let gb = b.realize_with(caps, load)?;
                direct_product(&ga, &gb, caps)?.renamed(name)
            }
            GroupSpec::FromFile(path) => load(path)?,
        };
        if let Some(order) = self.expected_order() {
            debug_assert_eq!(g.order(), order);
        }
        Ok(g)
    }

    pub fn parse(input: &str) -> Result<GroupSpec> {
        let mut p = Parser { s: input, pos: 0, depth: 0 };
        let spec = p.spec()?;
        if p.pos != input.len() {
            return Err(p.err("trailing input"));
        }
        Ok(spec)
    }
}

impl core::fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.canonical_name())
    }
}

fn positive(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidParameter(format!("{what} must be positive")))
    } else {
        Ok(())
    }
}

fn pow_mod(base: usize, exp: usize, m: usize) -> usize {
    let mut acc = 1 % m;
    for _ in 0..exp {
        acc = acc * base % m;
    }
    acc
}

/// `S_n` or `A_n` on permutations of `0..n` in lexicographic order (identity
/// first). The product `a·b` applies `a` first, then `b`. Elements are
/// labeled in cycle notation on the points `1..n`.
fn permutation_group(n: usize, even_only: bool, name: String, caps: &Caps) -> Result<Group> {
    let order: usize = (1..=n).product();
    Caps::check("construction", order, caps.order)?;
    let mut perms = Vec::with_capacity(order);
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        if !even_only || is_even(&cur) {
            perms.push(cur.clone());
        }
        if !next_permutation(&mut cur) {
            break;
        }
    }
    let index: alloc::collections::BTreeMap<Vec<usize>, usize> =
        perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let g = Group::from_operation(perms.len(), 0, name, caps, |a, b| {
        let composed: Vec<usize> = (0..n).map(|i| perms[b][perms[a][i]]).collect();
        index[&composed]
    })?;
    g.with_labels(perms.iter().map(|p| cycle_notation(p)).collect())
}

fn is_even(p: &[usize]) -> bool {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    inversions % 2 == 0
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

pub fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        let mut first = true;
        while !seen[x] {
            seen[x] = true;
            if !first {
                out.push(' ');
            }
            out.push_str(&(x + 1).to_string());
            first = false;
            x = p[x];
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

struct Parser<'a> {
    s: &'a str,
    pos: usize,
    /// Open `prod(` count; inside one a path stops at `,` or `)`.
    depth: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::SpecParse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn rest(&self) -> &str {
        &self.s[self.pos..]
    }

    fn eat(&mut self, lit: &str) -> bool {
        if self.rest().starts_with(lit) {
            self.pos += lit.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, lit: &str) -> Result<()> {
        if self.eat(lit) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{lit}'")))
        }
    }

    fn number(&mut self) -> Result<usize> {
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.err("expected a number"));
        }
        let v = self.rest()[..digits]
            .parse()
            .map_err(|_| self.err("number too large"))?;
        self.pos += digits;
        Ok(v)
    }

    fn args<const N: usize>(&mut self) -> Result<[usize; N]> {
        self.expect("(")?;
        let mut out = [0; N];
        for (i, slot) in out.iter_mut().enumerate() {
            if i > 0 {
                self.expect(",")?;
            }
            *slot = self.number()?;
        }
        self.expect(")")?;
        Ok(out)
    }

    fn spec(&mut self) -> Result<GroupSpec> {
        if self.eat("file:") {
            let rest = self.rest();
            let len = if self.depth == 0 {
                rest.len()
            } else {
                rest.find([',', ')']).unwrap_or(rest.len())
            };
            if len == 0 {
                return Err(self.err("expected a path"));
            }
            let path = rest[..len].to_string();
            self.pos += len;
            return Ok(GroupSpec::FromFile(path));
        }
        if self.eat("prod(") {
            self.depth += 1;
            let a = self.spec()?;
            self.expect(",")?;
            let b = self.spec()?;
            self.expect(")")?;
            self.depth -= 1;
            return Ok(GroupSpec::product(a, b));
        }
        if self.eat("SL(2,3)") || self.eat("SL23") {
            return Ok(GroupSpec::Sl23);
        }
        if self.eat("EA") {
            let [p, k] = self.args()?;
            return Ok(GroupSpec::ElementaryAbelian { p, k });
        }
        if self.eat("SD") {
            let [m, n, k] = self.args()?;
            return Ok(GroupSpec::SemidirectCyclic { m, n, k });
        }
        if self.eat("Q8") {
            return Ok(GroupSpec::Dicyclic(2));
        }
        if self.eat("Dic") {
            return Ok(GroupSpec::Dicyclic(self.number()?));
        }
        let start = self.pos;
        let kind = self.rest().chars().next();
        match kind {
            Some('C') | Some('S') | Some('A') | Some('D') => {
                self.pos += 1;
                let n = self.number()?;
                Ok(match kind {
                    Some('C') => GroupSpec::Cyclic(n),
                    Some('S') => GroupSpec::Symmetric(n),
                    Some('A') => GroupSpec::Alternating(n),
                    _ => {
                        if n == 0 || n % 2 != 0 {
                            self.pos = start;
                            return Err(self.err("dihedral order must be even and positive"));
                        }
                        GroupSpec::Dihedral(n / 2)
                    }
                })
            }
            _ => Err(self.err("unknown group constructor")),
        }
    }
}

/// Parses the Cayley-table text format and validates the table.
pub fn parse_cayley_text(text: &str, caps: &Caps) -> Result<Group> {
    let ferr = |line: usize, col: usize, msg: String| Error::FileFormat { line, col, msg };
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (ln, first) = lines
        .next()
        .ok_or_else(|| ferr(1, 1, "empty input".into()))?;
    let n: usize = first
        .trim()
        .parse()
        .map_err(|_| ferr(ln, 1, format!("expected the order, found '{}'", first.trim())))?;
    if n == 0 {
        return Err(ferr(ln, 1, "order must be positive".into()));
    }
    Caps::check("construction", n, caps.order)?;
    let mut table = Vec::with_capacity(n);
    for r in 0..n {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| ferr(r + 2, 1, format!("missing table row {r}")))?;
        let mut row = Vec::with_capacity(n);
        let mut col = 1;
        for tok in line.split(' ') {
            if tok.is_empty() {
                col += 1;
                continue;
            }
            let v: usize = tok
                .parse()
                .map_err(|_| ferr(ln, col, format!("expected an index, found '{tok}'")))?;
            row.push(v);
            col += tok.len() + 1;
        }
        if row.len() != n {
            return Err(ferr(ln, 1, format!("expected {n} entries, found {}", row.len())));
        }
        table.push(row);
    }
    let mut name = String::from("table");
    let mut labels: Option<Vec<String>> = None;
    for (ln, line) in lines {
        let line = line.trim_end();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("name ") {
            name = rest.to_string();
        } else if let Some(rest) = line.strip_prefix("label ") {
            let (idx, label) = rest
                .split_once(' ')
                .ok_or_else(|| ferr(ln, 7, "expected 'label <i> <string>'".into()))?;
            let i: usize = idx
                .parse()
                .ok()
                .filter(|&i| i < n)
                .ok_or_else(|| ferr(ln, 7, format!("bad label index '{idx}'")))?;
            labels.get_or_insert_with(|| (0..n).map(|i| i.to_string()).collect())[i] = label.to_string();
        } else {
            return Err(ferr(ln, 1, format!("unrecognized line '{line}'")));
        }
    }
    let g = Group::from_cayley_table_with(&table, name, caps)?;
    match labels {
        Some(l) => g.with_labels(l),
        None => Ok(g),
    }
}

/// Renders a group in the text format.
pub fn to_cayley_text(g: &Group) -> String {
    let mut out = format!("{}\n", g.order());
    for a in 0..g.order() {
        let row: Vec<String> = g.row(a).map(|v| v.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out.push_str(&format!("name {}\n", g.name()));
    if let Some(labels) = g.labels() {
        for (i, l) in labels.iter().enumerate() {
            out.push_str(&format!("label {i} {l}\n"));
        }
    }
    out
}

/// The default corpus, in a fixed order. Append only.
pub fn standard_corpus_specs() -> Vec<GroupSpec> {
    use GroupSpec::*;
    let mut specs: Vec<GroupSpec> = (1..=12).map(Cyclic).collect();
    specs.extend([
        Cyclic(16),
        Cyclic(27),
        ElementaryAbelian { p: 2, k: 3 },
        ElementaryAbelian { p: 3, k: 2 },
        Dihedral(4),
        Dihedral(5),
        Dihedral(6),
        Dihedral(7),
        Dihedral(8),
        Dicyclic(2),
        Dicyclic(3),
        Symmetric(3),
        Symmetric(4),
        Symmetric(5),
        Alternating(4),
        Alternating(5),
        Sl23,
        GroupSpec::product(Cyclic(3), Symmetric(3)),
        GroupSpec::product(Cyclic(2), Alternating(4)),
        GroupSpec::product(Dihedral(4), Cyclic(3)),
        SemidirectCyclic { m: 5, n: 4, k: 2 },
        SemidirectCyclic { m: 7, n: 3, k: 2 },
        GroupSpec::product(Cyclic(4), Cyclic(2)),
    ]);
    specs
}

pub fn standard_corpus(caps: &Caps) -> Result<Vec<(GroupSpec, Group)>> {
    standard_corpus_specs()
        .into_iter()
        .map(|s| {
            let g = s.realize(caps)?;
            Ok((s, g))
        })
        .collect()
}

/// Finds an element by its label (e.g. a permutation in cycle notation).
pub fn element_by_label(g: &Group, label: &str) -> Option<usize> {
    g.labels()?.iter().position(|l| l == label)
}
