//! Backtracking solver for systems `v[to] = v[from] * v[over]` over a rack.

use crate::algebra::{Element, RackTable};

const UNSET: usize = usize::MAX;

/// Relations `(from, to, over)` meaning `v[to] = v[from] * v[over]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationSystem {
    pub vars: usize,
    pub relations: Vec<(usize, usize, usize)>,
}

struct Search<'a> {
    x: &'a RackTable,
    sys: &'a RelationSystem,
    /// Allowed values per variable, ascending; `None` means all of `X`.
    domains: Option<&'a [Vec<Element>]>,
    allowed: Option<Vec<Vec<bool>>>,
    touching: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn new(x: &'a RackTable, sys: &'a RelationSystem, domains: Option<&'a [Vec<Element>]>) -> Self {
        let mut touching = vec![Vec::new(); sys.vars];
        for (r, &(i, j, k)) in sys.relations.iter().enumerate() {
            for v in [i, j, k] {
                if !touching[v].contains(&r) {
                    touching[v].push(r);
                }
            }
        }
        let allowed = domains.map(|ds| {
            ds.iter()
                .map(|d| {
                    let mut a = vec![false; x.size()];
                    for &e in d {
                        a[e] = true;
                    }
                    a
                })
                .collect()
        });
        Search { x, sys, domains, allowed, touching }
    }

    fn permits(&self, var: usize, val: Element) -> bool {
        self.allowed.as_ref().is_none_or(|a| a[var][val])
    }

    fn candidates(&self, var: usize) -> Vec<Element> {
        match self.domains {
            Some(d) => d[var].clone(),
            None => (0..self.x.size()).collect(),
        }
    }

    // Sets `var` and propagates; records every assignment in `trail`.
    fn assign(&self, vals: &mut [usize], trail: &mut Vec<usize>, var: usize, val: Element) -> bool {
        if vals[var] != UNSET {
            return vals[var] == val;
        }
        if !self.permits(var, val) {
            return false;
        }
        vals[var] = val;
        trail.push(var);
        let mut queue = vec![var];
        while let Some(v) = queue.pop() {
            for &r in &self.touching[v] {
                let (i, j, k) = self.sys.relations[r];
                let (vi, vj, vk) = (vals[i], vals[j], vals[k]);
                if vk == UNSET {
                    continue;
                }
                let (target, want) = if vi != UNSET {
                    (j, self.x.op(vi, vk))
                } else if vj != UNSET {
                    (i, self.x.op_inv(vj, vk))
                } else {
                    continue;
                };
                if vals[target] == UNSET {
                    if !self.permits(target, want) {
                        return false;
                    }
                    vals[target] = want;
                    trail.push(target);
                    queue.push(target);
                } else if vals[target] != want {
                    return false;
                }
            }
        }
        true
    }

    fn undo(vals: &mut [usize], trail: &mut Vec<usize>, mark: usize) {
        for v in trail.drain(mark..) {
            vals[v] = UNSET;
        }
    }

    fn run(&self, vals: &mut [usize], trail: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        let Some(var) = vals.iter().position(|&v| v == UNSET) else {
            visit(vals);
            return;
        };
        for val in self.candidates(var) {
            let mark = trail.len();
            if self.assign(vals, trail, var, val) {
                self.run(vals, trail, visit);
            }
            Self::undo(vals, trail, mark);
        }
    }
}

/// Solutions grouped by the value of variable 0; with `jobs > 1` the groups
/// are solved on separate threads.
fn partitioned(
    x: &RackTable,
    sys: &RelationSystem,
    domains: Option<&[Vec<Element>]>,
    jobs: usize,
) -> Vec<Vec<Vec<Element>>> {
    let search = Search::new(x, sys, domains);
    if sys.vars == 0 {
        return vec![vec![Vec::new()]];
    }
    let seeds = search.candidates(0);
    let solve_seed = |val: Element| {
        let mut out = Vec::new();
        let mut vals = vec![UNSET; sys.vars];
        let mut trail = Vec::new();
        if search.assign(&mut vals, &mut trail, 0, val) {
            search.run(&mut vals, &mut trail, &mut |s| out.push(s.to_vec()));
        }
        out
    };
    let jobs = jobs.clamp(1, seeds.len().max(1));
    if jobs == 1 {
        return seeds.into_iter().map(solve_seed).collect();
    }
    let mut parts: Vec<Vec<Vec<Element>>> = vec![Vec::new(); seeds.len()];
    std::thread::scope(|s| {
        let handles: Vec<_> = (0..jobs)
            .map(|w| {
                let seeds = &seeds;
                let solve_seed = &solve_seed;
                s.spawn(move || (w..seeds.len()).step_by(jobs).map(|i| (i, solve_seed(seeds[i]))).collect::<Vec<_>>())
            })
            .collect();
        for h in handles {
            for (i, sols) in h.join().expect("solver thread panicked") {
                parts[i] = sols;
            }
        }
    });
    parts
}

/// All solutions in lexicographic order.
pub fn solve(x: &RackTable, sys: &RelationSystem, domains: Option<&[Vec<Element>]>, jobs: usize) -> Vec<Vec<Element>> {
    let mut all: Vec<Vec<Element>> = partitioned(x, sys, domains, jobs).into_iter().flatten().collect();
    all.sort();
    all
}

/// Number of solutions, without keeping them.
pub fn count(x: &RackTable, sys: &RelationSystem, jobs: usize) -> usize {
    let search = Search::new(x, sys, None);
    if sys.vars == 0 {
        return 1;
    }
    let count_seed = |val: Element| {
        let mut n = 0usize;
        let mut vals = vec![UNSET; sys.vars];
        let mut trail = Vec::new();
        if search.assign(&mut vals, &mut trail, 0, val) {
            search.run(&mut vals, &mut trail, &mut |_| n += 1);
        }
        n
    };
    let size = x.size();
    let jobs = jobs.clamp(1, size);
    if jobs == 1 {
        return (0..size).map(count_seed).sum();
    }
    std::thread::scope(|s| {
        let handles: Vec<_> = (0..jobs)
            .map(|w| {
                let count_seed = &count_seed;
                s.spawn(move || (w..size).step_by(jobs).map(count_seed).sum::<usize>())
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("solver thread panicked")).sum()
    })
}
