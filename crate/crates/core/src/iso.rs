//! Isomorphism testing by invariant screening and generator backtracking.

use alloc::vec;
use alloc::vec::Vec;

use crate::bits::BitSet;
use crate::error::Result;
use crate::group::{Caps, Group};
use crate::morphism::Morphism;

pub fn is_isomorphic(a: &Group, b: &Group, caps: &Caps) -> Result<bool> {
    Ok(find_isomorphism(a, b, caps)?.is_some())
}

/// Returns an isomorphism `a → b` if one exists.
pub fn find_isomorphism(a: &Group, b: &Group, caps: &Caps) -> Result<Option<Morphism>> {
    Caps::check("isomorphism", a.order(), caps.isomorphism)?;
    Caps::check("isomorphism", b.order(), caps.isomorphism)?;
    if a.order() != b.order() {
        return Ok(None);
    }
    let (oa, ob) = (a.element_orders(), b.element_orders());
    let mut sa = oa.clone();
    let mut sb = ob.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb || a.is_abelian() != b.is_abelian() || center_size(a) != center_size(b) {
        return Ok(None);
    }

    let gens = small_generating_set(a, &oa);
    let n = a.order();
    let mut images = Vec::with_capacity(gens.len());
    let mut map = vec![usize::MAX; n];
    if search(a, b, &gens, &oa, &ob, &mut images, &mut map) {
        return Ok(Some(Morphism::from_parts(a.clone(), b.clone(), map)));
    }
    Ok(None)
}

fn center_size(g: &Group) -> usize {
    (0..g.order())
        .filter(|&z| (0..g.order()).all(|x| g.mul(z, x) == g.mul(x, z)))
        .count()
}

/// Greedy: repeatedly add the highest-order element outside the current span.
fn small_generating_set(g: &Group, orders: &[usize]) -> Vec<usize> {
    let mut by_order: Vec<usize> = (1..g.order()).collect();
    by_order.sort_by(|&x, &y| orders[y].cmp(&orders[x]).then(x.cmp(&y)));
    let mut gens = Vec::new();
    let mut span = g.closure_bits(&[]);
    for x in by_order {
        if span.count() == g.order() {
            break;
        }
        if !span.contains(x) {
            gens.push(x);
            span = g.closure_bits(&gens);
        }
    }
    gens
}

fn search(
    a: &Group,
    b: &Group,
    gens: &[usize],
    oa: &[usize],
    ob: &[usize],
    images: &mut Vec<usize>,
    map: &mut Vec<usize>,
) -> bool {
    let k = images.len();
    if k == gens.len() {
        return extend(a, b, gens, images, map) == Some(a.order());
    }
    for y in 0..b.order() {
        if ob[y] != oa[gens[k]] {
            continue;
        }
        images.push(y);
        // Partial check on the span of the generators assigned so far.
        let ok = extend(a, b, &gens[..=k], images, map).is_some();
        if ok && search(a, b, gens, oa, ob, images, map) {
            return true;
        }
        images.pop();
    }
    false
}

/// Extends a generator assignment along the Cayley graph. Returns the size of
/// the span if the assignment defines an injective homomorphism on it.
fn extend(a: &Group, b: &Group, gens: &[usize], images: &[usize], map: &mut [usize]) -> Option<usize> {
    map.iter_mut().for_each(|m| *m = usize::MAX);
    let mut used = BitSet::new(b.order());
    map[0] = 0;
    used.insert(0);
    let mut queue = vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (&g, &img) in gens.iter().zip(images) {
            let y = a.mul(x, g);
            let fy = b.mul(map[x], img);
            if map[y] == usize::MAX {
                if !used.insert(fy) {
                    return None;
                }
                map[y] = fy;
                queue.push(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    Some(queue.len())
}
