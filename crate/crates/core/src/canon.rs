//! Exact canonical forms under vertex relabeling (and, for colorings,
//! complementation).
//!
//! The canonical form is the lexicographically least edge bit-vector over
//! all relabelings. It is built position by position: placing a vertex at
//! position `j` fixes the pairs `{0, j}, ..., {j-1, j}`, which are exactly the
//! next `j` bits of the vector, so only candidates producing the least block
//! can lead to the minimum. Partial labelings are kept as a frontier keyed by
//! the used set plus each free vertex's adjacency to the placed positions;
//! two partial labelings with equal keys have identical futures and are
//! merged.

use std::collections::HashSet;

use crate::coloring::{num_pairs, Coloring};
use crate::error::{Error, Result};

/// Largest ground set accepted by the exact canonical form.
pub const CANON_GUARD: usize = 9;

const MAX: usize = CANON_GUARD;

#[derive(Clone, PartialEq, Eq, Hash)]
struct Partial {
    graph: u8,
    used: u16,
    sig: [u16; MAX],
}

fn adjacency(phi: &Coloring) -> [u16; MAX] {
    let mut adj = [0u16; MAX];
    for j in 1..phi.n() {
        for i in 0..j {
            if phi.get(i, j) == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    adj
}

/// `a < b` for `width`-bit blocks read from bit 0 with 0 before 1.
#[inline]
fn block_less(a: u16, b: u16) -> bool {
    let d = a ^ b;
    d != 0 && (a >> d.trailing_zeros()) & 1 == 0
}

fn lex_min(n: usize, graphs: &[[u16; MAX]]) -> Coloring {
    let mut frontier: Vec<Partial> = (0..graphs.len())
        .map(|g| Partial {
            graph: g as u8,
            used: 0,
            sig: [0; MAX],
        })
        .collect();
    let mut out = Coloring::zeros(n);
    for j in 0..n {
        let mut best: Option<u16> = None;
        for st in &frontier {
            for v in 0..n {
                if st.used & (1 << v) == 0 && best.is_none_or(|b| block_less(st.sig[v], b)) {
                    best = Some(st.sig[v]);
                }
            }
        }
        let best = best.expect("free vertex exists");
        for i in 0..j {
            if (best >> i) & 1 == 1 {
                out.set_bit(num_pairs(j) + i, true);
            }
        }
        let mut next = HashSet::new();
        for st in &frontier {
            let adj = &graphs[st.graph as usize];
            for v in 0..n {
                if st.used & (1 << v) != 0 || st.sig[v] != best {
                    continue;
                }
                let mut child = st.clone();
                child.used |= 1 << v;
                child.sig[v] = 0;
                for u in 0..n {
                    if child.used & (1 << u) == 0 && (adj[u] >> v) & 1 == 1 {
                        child.sig[u] |= 1 << j;
                    }
                }
                next.insert(child);
            }
        }
        frontier = next.into_iter().collect();
    }
    out
}

fn guard(phi: &Coloring) -> Result<()> {
    if phi.n() > CANON_GUARD {
        return Err(Error::Resource(format!(
            "exact canonical form is capped at n = {CANON_GUARD}, got {}",
            phi.n()
        )));
    }
    Ok(())
}

/// Least edge bit-vector over all relabelings of `phi` and of `1 - phi`.
pub fn canonical_form(phi: &Coloring) -> Result<Coloring> {
    guard(phi)?;
    let a = adjacency(phi);
    let b = adjacency(&phi.complement());
    Ok(lex_min(phi.n(), &[a, b]))
}

/// Least edge bit-vector over relabelings of `phi` alone (graph isomorphism class).
pub fn canonical_graph(phi: &Coloring) -> Result<Coloring> {
    guard(phi)?;
    Ok(lex_min(phi.n(), &[adjacency(phi)]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        fn rec(cur: &mut Vec<usize>, left: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if left.is_empty() {
                out.push(cur.clone());
                return;
            }
            for k in 0..left.len() {
                let v = left.remove(k);
                cur.push(v);
                rec(cur, left, out);
                cur.pop();
                left.insert(k, v);
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut (0..n).collect(), &mut out);
        out
    }

    /// Brute force: minimum over every permutation of phi and its complement.
    fn oracle(phi: &Coloring) -> Coloring {
        let comp = phi.complement();
        permutations(phi.n())
            .iter()
            .flat_map(|p| [phi.permute(p), comp.permute(p)])
            .min()
            .unwrap()
    }

    fn all(n: usize) -> impl Iterator<Item = Coloring> {
        let m = num_pairs(n);
        (0u64..(1 << m))
            .map(move |c| Coloring::from_bits(n, (0..m).map(|p| (c >> p) & 1 == 1)).unwrap())
    }

    #[test]
    fn all_ones_canonicalizes_to_all_zeros() {
        assert_eq!(
            canonical_form(&Coloring::ones(4)).unwrap(),
            Coloring::zeros(4)
        );
        assert_eq!(
            canonical_form(&Coloring::zeros(0)).unwrap(),
            Coloring::zeros(0)
        );
        assert_eq!(
            canonical_form(&Coloring::ones(1)).unwrap(),
            Coloring::zeros(1)
        );
    }

    #[test]
    fn matches_brute_force_up_to_five_vertices() {
        for n in 2..=5 {
            for phi in all(n) {
                assert_eq!(canonical_form(&phi).unwrap(), oracle(&phi), "{phi:?}");
            }
        }
    }

    #[test]
    fn orbit_counts_up_to_five_vertices() {
        // graphs up to isomorphism and complementation: 1, 2, 6, 18
        let counts: Vec<usize> = (2..=5)
            .map(|n| {
                all(n)
                    .map(|c| canonical_form(&c).unwrap())
                    .collect::<BTreeSet<_>>()
                    .len()
            })
            .collect();
        assert_eq!(counts, vec![1, 2, 6, 18]);
        let graphs4 = all(4)
            .map(|c| canonical_graph(&c).unwrap())
            .collect::<BTreeSet<_>>();
        assert_eq!(graphs4.len(), 11);
    }

    #[test]
    fn invariant_under_relabeling_and_idempotent() {
        let phi = Coloring::from_fn(8, |i, j| (i * 7 + j * 3) % 5 < 2);
        let c = canonical_form(&phi).unwrap();
        assert_eq!(canonical_form(&c).unwrap(), c);
        assert_eq!(canonical_form(&phi.complement()).unwrap(), c);
        let perm = [3, 7, 0, 5, 1, 6, 2, 4];
        assert_eq!(canonical_form(&phi.permute(&perm)).unwrap(), c);
    }

    #[test]
    fn guard_rejects_ten_vertices() {
        assert!(matches!(
            canonical_form(&Coloring::zeros(10)),
            Err(Error::Resource(_))
        ));
    }
}
