//! Slow reference implementations used as oracles. They work on plain
//! `Vec<bool>` sets and re-read the graph through `has_edge` only.

#![allow(dead_code)]

use throttle_core::{Graph, RuleKind};

fn neighbours(g: &Graph, v: usize) -> Vec<usize> {
    (0..g.order()).filter(|&u| u != v && g.has_edge(u, v)).collect()
}

fn unfilled_component(g: &Graph, filled: &[bool], start: usize) -> Vec<bool> {
    let mut seen = vec![false; g.order()];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(v) = stack.pop() {
        for u in neighbours(g, v) {
            if !filled[u] && !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    seen
}

/// One simultaneous step, straight from the rule definitions.
pub fn oracle_step(rule: RuleKind, g: &Graph, filled: &[bool], time: u32) -> Vec<usize> {
    let n = g.order();
    let mut out = vec![false; n];
    match rule {
        RuleKind::PowerDomination if time == 1 => {
            for v in (0..n).filter(|&v| filled[v]) {
                for u in neighbours(g, v) {
                    if !filled[u] {
                        out[u] = true;
                    }
                }
            }
        }
        RuleKind::PsdForcing => {
            for w0 in (0..n).filter(|&w| !filled[w]) {
                let comp = unfilled_component(g, filled, w0);
                for v in (0..n).filter(|&v| filled[v]) {
                    let inside: Vec<usize> = neighbours(g, v).into_iter().filter(|&u| comp[u]).collect();
                    if inside.len() == 1 {
                        out[inside[0]] = true;
                    }
                }
            }
        }
        _ => {
            for v in (0..n).filter(|&v| filled[v]) {
                let open: Vec<usize> = neighbours(g, v).into_iter().filter(|&u| !filled[u]).collect();
                if open.len() == 1 {
                    out[open[0]] = true;
                }
            }
        }
    }
    (0..n).filter(|&v| out[v]).collect()
}

/// Propagation time of the set given by `mask`, `None` for infinity.
pub fn oracle_pt(rule: RuleKind, g: &Graph, mask: u64) -> Option<u32> {
    let n = g.order();
    let mut filled: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
    let mut t = 0;
    while filled.iter().any(|&f| !f) {
        let new = oracle_step(rule, g, &filled, t + 1);
        if new.is_empty() {
            return None;
        }
        for v in new {
            filled[v] = true;
        }
        t += 1;
    }
    Some(t)
}

/// `(Y(G), th, th×, th*)` by scanning every subset; `th*` is `None` without edges.
pub fn oracle_throttling(rule: RuleKind, g: &Graph) -> (usize, u64, u64, Option<u64>) {
    let n = g.order();
    let (mut y, mut sum, mut prodx, mut prodstar) = (n, u64::MAX, u64::MAX, None::<u64>);
    for mask in 0u64..1 << n {
        if let Some(t) = oracle_pt(rule, g, mask) {
            let k = mask.count_ones() as u64;
            y = y.min(k as usize);
            sum = sum.min(k + u64::from(t));
            prodx = prodx.min(k * (1 + u64::from(t)));
            if (k as usize) < n && g.size() > 0 {
                let v = k * u64::from(t);
                prodstar = Some(prodstar.map_or(v, |p| p.min(v)));
            }
        }
    }
    (y, sum, prodx, prodstar)
}

/// Least `|D|` over dominating sets, by direct definition.
pub fn oracle_gamma(g: &Graph) -> usize {
    let n = g.order();
    (0u64..1 << n)
        .filter(|&s| (0..n).all(|v| s >> v & 1 == 1 || neighbours(g, v).iter().any(|&u| s >> u & 1 == 1)))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

/// Every permutation of `0..n`, for isomorphism checks on small graphs.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.size() != b.size() {
        return false;
    }
    let n = a.order();
    permutations(n).iter().any(|p| a.edges().iter().all(|&(u, v)| b.has_edge(p[u], p[v])))
}
