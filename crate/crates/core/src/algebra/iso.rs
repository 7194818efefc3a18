//! Brute-force quandle isomorphism search for small tables.

use super::rack::{Element, RackTable};

// (#fixed points of S_a acting on a, #{b : a*b = a}, size of orbit)
fn profile(x: &RackTable) -> Vec<(usize, usize, usize)> {
    let orbit_size: Vec<usize> = {
        let mut s = vec![0; x.size()];
        for o in x.orbits() {
            for &a in &o {
                s[a] = o.len();
            }
        }
        s
    };
    (0..x.size())
        .map(|a| {
            let fixed = (0..x.size()).filter(|&b| x.op(b, a) == b).count();
            let stab = (0..x.size()).filter(|&b| x.op(a, b) == a).count();
            (fixed, stab, orbit_size[a])
        })
        .collect()
}

/// Returns `f` with `f(a*b) = f(a)*f(b)` for all `a, b`, if one exists.
///
/// Backtracking over bijections with element profiles as a filter; meant for
/// tables of order at most about 8.
pub fn find_isomorphism(from: &RackTable, to: &RackTable) -> Option<Vec<Element>> {
    let n = from.size();
    if n != to.size() {
        return None;
    }
    let (pf, pt) = (profile(from), profile(to));
    let mut sorted_f = pf.clone();
    let mut sorted_t = pt.clone();
    sorted_f.sort();
    sorted_t.sort();
    if sorted_f != sorted_t {
        return None;
    }

    fn consistent(from: &RackTable, to: &RackTable, map: &[Option<Element>], a: Element) -> bool {
        for b in 0..from.size() {
            let (Some(fa), Some(fb)) = (map[a], map[b]) else { continue };
            for (p, q, fp, fq) in [(a, b, fa, fb), (b, a, fb, fa)] {
                if let Some(fpq) = map[from.op(p, q)] {
                    if fpq != to.op(fp, fq) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn search(
        from: &RackTable,
        to: &RackTable,
        pf: &[(usize, usize, usize)],
        pt: &[(usize, usize, usize)],
        map: &mut Vec<Option<Element>>,
        used: &mut Vec<bool>,
        a: usize,
    ) -> bool {
        if a == from.size() {
            return true;
        }
        for t in 0..to.size() {
            if used[t] || pf[a] != pt[t] {
                continue;
            }
            map[a] = Some(t);
            used[t] = true;
            if consistent(from, to, map, a) && search(from, to, pf, pt, map, used, a + 1) {
                return true;
            }
            map[a] = None;
            used[t] = false;
        }
        false
    }

    let mut map = vec![None; n];
    let mut used = vec![false; n];
    if search(from, to, &pf, &pt, &mut map, &mut used, 0) {
        Some(map.into_iter().map(|m| m.unwrap()).collect())
    } else {
        None
    }
}

/// Checks that `f` is a bijective homomorphism.
pub fn is_isomorphism(from: &RackTable, to: &RackTable, f: &[Element]) -> bool {
    let n = from.size();
    if to.size() != n || f.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &y in f {
        if y >= n || seen[y] {
            return false;
        }
        seen[y] = true;
    }
    (0..n).all(|a| (0..n).all(|b| f[from.op(a, b)] == to.op(f[a], f[b])))
}
