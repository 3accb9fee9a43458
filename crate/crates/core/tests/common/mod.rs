//! Brute-force oracles written straight from the definitions. They share no
//! code with the library beyond the `Coloring` container.

#![allow(dead_code)]

use std::collections::BTreeMap;

use homrecon::Coloring;

pub fn num_pairs(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Every coloring on `n` vertices, with bit `p` of the counter as pair `p`.
pub fn all_colorings(n: usize) -> Vec<Coloring> {
    let m = num_pairs(n);
    (0u64..1 << m)
        .map(|c| Coloring::from_bits(n, (0..m).map(|p| (c >> p) & 1 == 1)).unwrap())
        .collect()
}

/// Homogeneous triples as a sorted list.
pub fn triples(phi: &Coloring) -> Vec<[usize; 3]> {
    let n = phi.n();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let x = phi.get(a, b);
                if phi.get(a, c) == x && phi.get(b, c) == x {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// Every subset of size at least three on which `phi` is constant, as masks.
pub fn homogeneous_masks(phi: &Coloring) -> Vec<u32> {
    let n = phi.n();
    (0u32..1 << n)
        .filter(|m| m.count_ones() >= 3)
        .filter(|&m| {
            let vs: Vec<usize> = (0..n).filter(|v| (m >> v) & 1 == 1).collect();
            let c = phi.get(vs[0], vs[1]);
            vs.iter()
                .enumerate()
                .all(|(k, &x)| vs[k + 1..].iter().all(|&y| phi.get(x, y) == c))
        })
        .collect()
}

/// Maximal members of the homogeneous family, as sorted vertex lists.
pub fn maximal_sets(phi: &Coloring) -> Vec<Vec<usize>> {
    let fam = homogeneous_masks(phi);
    let mut out: Vec<Vec<usize>> = fam
        .iter()
        .filter(|&&m| !fam.iter().any(|&o| o != m && o & m == m))
        .map(|&m| (0..phi.n()).filter(|v| (m >> v) & 1 == 1).collect())
        .collect();
    out.sort();
    out
}

/// `{x, y}` is critical when every other vertex sees `x` and `y` in different colors.
pub fn critical(phi: &Coloring) -> Vec<(usize, usize)> {
    let n = phi.n();
    let mut out = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            if (0..n)
                .filter(|&z| z != x && z != y)
                .all(|z| phi.get(x.min(z), x.max(z)) != phi.get(y.min(z), y.max(z)))
            {
                out.push((x, y));
            }
        }
    }
    out
}

/// All colorings on `n` vertices grouped by their homogeneous triples.
pub fn classes_by_triples(n: usize) -> BTreeMap<Vec<[usize; 3]>, Vec<Coloring>> {
    let mut map: BTreeMap<Vec<[usize; 3]>, Vec<Coloring>> = BTreeMap::new();
    for phi in all_colorings(n) {
        map.entry(triples(&phi)).or_default().push(phi);
    }
    for v in map.values_mut() {
        v.sort();
    }
    map
}

/// Least Hamming distance from `phi` to a same-triples coloring other than `phi` and `1 - phi`.
pub fn r_brute(phi: &Coloring, class: &[Coloring]) -> usize {
    let comp = phi.complement();
    class
        .iter()
        .filter(|psi| **psi != *phi && **psi != comp)
        .map(|psi| {
            (0..phi.num_pairs())
                .filter(|&p| psi.bit(p) != phi.bit(p))
                .count()
        })
        .min()
        .unwrap_or(0)
}

/// All set partitions of `0..n` as block lists (restricted growth strings).
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    fn rec(v: usize, n: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if v == n {
            out.push(cur.clone());
            return;
        }
        for b in 0..cur.len() {
            cur[b].push(v);
            rec(v + 1, n, cur, out);
            cur[b].pop();
        }
        cur.push(vec![v]);
        rec(v + 1, n, cur, out);
        cur.pop();
    }
    let mut out = Vec::new();
    rec(0, n, &mut Vec::new(), &mut out);
    out
}

/// Coloring of a partition written without the library's generator.
pub fn partition(n: usize, blocks: &[Vec<usize>]) -> Coloring {
    let mut block_of = vec![0; n];
    for (b, members) in blocks.iter().enumerate() {
        for &v in members {
            block_of[v] = b;
        }
    }
    Coloring::from_fn(n, |i, j| block_of[i] == block_of[j])
}
