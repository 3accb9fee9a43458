//! Exact reconstruction from homogeneous triples.
//!
//! A coloring `ψ` has the same homogeneous family as `φ` exactly when it
//! has the same homogeneous triples. Each homogeneous triple forces its three
//! pairs to one color (the pairs are merged into one class), and each
//! non-homogeneous triple forbids its three pairs from sharing a color (a
//! not-all-equal constraint over classes). The solutions of that system are
//! precisely the reconstructions of `φ`.

use std::collections::HashMap;
use std::ops::ControlFlow;

use crate::coloring::{num_pairs, pair_index, Color, Coloring, TripleFamily, VertexSet};
use crate::error::{domain, Error, Result};

/// Class counts above this only solve with a small limit.
pub const CLASS_GUARD: usize = 40;
/// Largest limit accepted by [`solve_all`] once [`CLASS_GUARD`] is exceeded.
pub const SMALL_LIMIT: usize = 4096;
/// Most models [`r_value`] will enumerate.
pub const MODEL_GUARD: usize = 1 << 22;

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(len: usize) -> Self {
        UnionFind {
            parent: (0..len).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Keeps the smaller index as representative.
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Equality classes of pair variables plus not-all-equal constraints.
///
/// Class ids are dense and ascend with the smallest pair index of each class.
#[derive(Debug, Clone)]
pub struct ConstraintSystem {
    n: usize,
    class_of: Vec<u32>,
    class_count: usize,
    nae: Vec<[u32; 3]>,
    collapsed: Option<(usize, usize, usize)>,
}

impl ConstraintSystem {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn class_count(&self) -> usize {
        self.class_count
    }

    /// Class id of every pair, indexed by pair index.
    pub fn class_of(&self) -> &[u32] {
        &self.class_of
    }

    /// Members of each class as pair indices.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.class_count];
        for (p, &c) in self.class_of.iter().enumerate() {
            out[c as usize].push(p);
        }
        out
    }

    /// Not-all-equal constraints over class ids (sorted, deduplicated).
    pub fn nae(&self) -> &[[u32; 3]] {
        &self.nae
    }

    pub fn is_feasible(&self) -> bool {
        self.collapsed.is_none()
    }

    /// First non-homogeneous triple (triple-index order) whose pairs all fell
    /// into one class.
    pub fn infeasibility_witness(&self) -> Option<(usize, usize, usize)> {
        self.collapsed
    }

    fn expand(&self, values: &[i8]) -> Coloring {
        let mut c = Coloring::zeros(self.n);
        for (p, &cl) in self.class_of.iter().enumerate() {
            if values[cl as usize] == 1 {
                c.set_bit(p, true);
            }
        }
        c
    }
}

/// Builds the constraint system whose solutions have homogeneous triples exactly `t`.
pub fn build_constraints(t: &TripleFamily) -> Result<ConstraintSystem> {
    let n = t.n();
    if n < 3 {
        return domain(format!("build_constraints needs n >= 3, got {n}"));
    }
    let mut uf = UnionFind::new(num_pairs(n));
    for (i, j, k) in t.triples() {
        uf.union(pair_index(i, j), pair_index(i, k));
        uf.union(pair_index(i, j), pair_index(j, k));
    }
    let mut dense = HashMap::new();
    let class_of: Vec<u32> = (0..num_pairs(n))
        .map(|p| {
            let root = uf.find(p);
            let next = dense.len() as u32;
            *dense.entry(root).or_insert(next)
        })
        .collect();
    let class_count = dense.len();
    let mut nae = Vec::new();
    let mut collapsed = None;
    for k in 2..n {
        for j in 1..k {
            for i in 0..j {
                if t.contains(i, j, k) {
                    continue;
                }
                let mut c = [
                    class_of[pair_index(i, j)],
                    class_of[pair_index(i, k)],
                    class_of[pair_index(j, k)],
                ];
                if c[0] == c[1] && c[1] == c[2] && collapsed.is_none() {
                    collapsed = Some((i, j, k));
                }
                c.sort_unstable();
                nae.push(c);
            }
        }
    }
    nae.sort_unstable();
    nae.dedup();
    Ok(ConstraintSystem {
        n,
        class_of,
        class_count,
        nae,
        collapsed,
    })
}

/// Backtracking over classes in ascending id, value 0 before 1, with
/// not-all-equal unit propagation. Solutions come out in increasing
/// coloring order.
struct Solver<'a> {
    cs: &'a ConstraintSystem,
    values: Vec<i8>,
    trail: Vec<u32>,
    watches: Vec<Vec<u32>>,
    queue: Vec<u32>,
}

impl<'a> Solver<'a> {
    fn new(cs: &'a ConstraintSystem) -> Self {
        let mut watches = vec![Vec::new(); cs.class_count];
        for (id, c) in cs.nae.iter().enumerate() {
            watches[c[0] as usize].push(id as u32);
            if c[1] != c[0] {
                watches[c[1] as usize].push(id as u32);
            }
            if c[2] != c[1] {
                watches[c[2] as usize].push(id as u32);
            }
        }
        Solver {
            cs,
            values: vec![-1; cs.class_count],
            trail: Vec::new(),
            watches,
            queue: Vec::new(),
        }
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let c = self.trail.pop().unwrap();
            self.values[c as usize] = -1;
        }
    }

    fn set(&mut self, class: u32, value: i8) {
        self.values[class as usize] = value;
        self.trail.push(class);
        self.queue.push(class);
    }

    /// Assigns and propagates; false on conflict (caller undoes).
    fn assign(&mut self, class: u32, value: i8) -> bool {
        self.queue.clear();
        self.set(class, value);
        while let Some(c) = self.queue.pop() {
            for w in 0..self.watches[c as usize].len() {
                let id = self.watches[c as usize][w];
                let con = self.cs.nae[id as usize];
                let mut assigned_value = -1i8;
                let mut mixed = false;
                let mut free: Option<u32> = None;
                let mut two_free = false;
                for &cl in &con {
                    let v = self.values[cl as usize];
                    if v < 0 {
                        match free {
                            None => free = Some(cl),
                            Some(f) if f != cl => two_free = true,
                            _ => {}
                        }
                    } else if assigned_value < 0 {
                        assigned_value = v;
                    } else if assigned_value != v {
                        mixed = true;
                    }
                }
                if mixed || two_free {
                    continue;
                }
                match free {
                    None => return false,
                    Some(f) => self.set(f, 1 - assigned_value),
                }
            }
        }
        true
    }

    fn search(
        &mut self,
        idx: usize,
        visit: &mut dyn FnMut(&[i8]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if idx == self.cs.class_count {
            return visit(&self.values);
        }
        if self.values[idx] >= 0 {
            return self.search(idx + 1, visit);
        }
        for v in 0..2 {
            let mark = self.trail.len();
            if self.assign(idx as u32, v) {
                let flow = self.search(idx + 1, visit);
                if flow.is_break() {
                    self.undo(mark);
                    return flow;
                }
            }
            self.undo(mark);
        }
        ControlFlow::Continue(())
    }
}

/// Visits every solution in increasing order until `visit` breaks.
pub fn for_each_solution(
    cs: &ConstraintSystem,
    mut visit: impl FnMut(&Coloring) -> ControlFlow<()>,
) {
    if !cs.is_feasible() {
        return;
    }
    let mut solver = Solver::new(cs);
    let _ = solver.search(0, &mut |values| visit(&cs.expand(values)));
}

/// Result of a bounded enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solutions {
    pub colorings: Vec<Coloring>,
    /// True when enumeration stopped at the limit with solutions left.
    pub truncated: bool,
}

/// All solutions up to `limit`, in increasing order.
pub fn solve_all(cs: &ConstraintSystem, limit: usize) -> Result<Solutions> {
    if limit < 2 {
        return domain("solve_all needs limit >= 2");
    }
    if cs.class_count > CLASS_GUARD && limit > SMALL_LIMIT {
        return Err(Error::Resource(format!(
            "{} classes exceed {CLASS_GUARD}; use limit <= {SMALL_LIMIT}",
            cs.class_count
        )));
    }
    let mut colorings = Vec::new();
    let mut truncated = false;
    for_each_solution(cs, |c| {
        if colorings.len() == limit {
            truncated = true;
            return ControlFlow::Break(());
        }
        colorings.push(c.clone());
        ControlFlow::Continue(())
    });
    Ok(Solutions {
        colorings,
        truncated,
    })
}

fn require_three(phi: &Coloring, op: &str) -> Result<()> {
    if phi.n() < 3 {
        return domain(format!("{op} needs n >= 3, got {}", phi.n()));
    }
    Ok(())
}

/// The constraint system of `phi`'s own homogeneous triples.
pub fn constraints_of(phi: &Coloring) -> Result<ConstraintSystem> {
    require_three(phi, "reconstruction")?;
    build_constraints(&phi.hom_triples()?)
}

/// Every `ψ` with the same homogeneous family as `phi`, up to `limit`.
pub fn reconstructions(phi: &Coloring, limit: usize) -> Result<Solutions> {
    solve_all(&constraints_of(phi)?, limit)
}

/// Number of solutions of `phi`'s system, stopping once `cap` are seen.
fn count_solutions(cs: &ConstraintSystem, cap: usize) -> usize {
    let mut count = 0;
    for_each_solution(cs, |_| {
        count += 1;
        if count >= cap {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    count
}

/// True when only `phi` and `1 - phi` share its homogeneous family.
pub fn is_reconstructible(phi: &Coloring) -> Result<bool> {
    let cs = constraints_of(phi)?;
    Ok(count_solutions(&cs, 3) == 2)
}

/// Pairs `{x, y}` that every other vertex sees in opposite colors.
pub fn critical_pairs(phi: &Coloring) -> Result<Vec<(usize, usize)>> {
    require_three(phi, "critical_pairs")?;
    let n = phi.n();
    let rows = phi.rows();
    let mut out = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            let mut others = VertexSet::full(n);
            others.remove(x);
            others.remove(y);
            let mut diff = rows[x].symmetric_difference(&rows[y]);
            diff.remove(x);
            diff.remove(y);
            if diff == others {
                out.push((x, y));
            }
        }
    }
    Ok(out)
}

/// `r(φ)`: 0 when reconstructible, else the least number of pairs on which
/// `φ` differs from a nontrivial reconstruction.
pub fn r_value(phi: &Coloring) -> Result<usize> {
    Ok(classify(phi)?.r_value)
}

/// Classification of a single coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReconstructionReport {
    pub reconstructible: bool,
    pub solution_count: usize,
    pub r_value: usize,
    pub critical_pairs: Vec<(usize, usize)>,
    /// Least nontrivial reconstruction, if any.
    pub witness: Option<Coloring>,
}

/// Full classification: enumerates every reconstruction (up to [`MODEL_GUARD`]).
pub fn classify(phi: &Coloring) -> Result<ReconstructionReport> {
    let cs = constraints_of(phi)?;
    let comp = phi.complement();
    let mut count = 0usize;
    let mut best: Option<usize> = None;
    let mut witness: Option<Coloring> = None;
    let mut overflow = false;
    for_each_solution(&cs, |psi| {
        count += 1;
        if count > MODEL_GUARD {
            overflow = true;
            return ControlFlow::Break(());
        }
        if *psi != *phi && *psi != comp {
            let d = psi.distance(phi);
            if best.is_none_or(|b| d < b) {
                best = Some(d);
            }
            if witness.is_none() {
                witness = Some(psi.clone());
            }
        }
        ControlFlow::Continue(())
    });
    if overflow {
        return Err(Error::Resource(format!(
            "more than {MODEL_GUARD} reconstructions"
        )));
    }
    if count < 2 {
        return Err(Error::Invariant(format!(
            "{phi:?} is not a solution of its own system"
        )));
    }
    let r = best.unwrap_or(0);
    if r == 2 {
        return Err(Error::Invariant(format!("r = 2 observed for {phi:?}")));
    }
    let critical = critical_pairs(phi)?;
    if (r == 1) != !critical.is_empty() {
        return Err(Error::Invariant(format!(
            "r = {r} but {} critical pairs for {phi:?}",
            critical.len()
        )));
    }
    Ok(ReconstructionReport {
        reconstructible: count == 2,
        solution_count: count,
        r_value: r,
        critical_pairs: critical,
        witness,
    })
}

/// Whether some reconstruction `ψ ≠ φ` agrees with `φ` off a single vertex.
pub fn differs_at_one_vertex(phi: &Coloring) -> Result<bool> {
    let cs = constraints_of(phi)?;
    let mut found = false;
    for_each_solution(&cs, |psi| {
        if psi != phi && star_center(&phi.diff_pairs(psi)).is_some() {
            found = true;
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    Ok(found)
}

/// A vertex lying in every listed pair.
fn star_center(pairs: &[(usize, usize)]) -> Option<usize> {
    let (a, b) = *pairs.first()?;
    [a, b]
        .into_iter()
        .find(|&v| pairs.iter().all(|&(x, y)| x == v || y == v))
}

/// Both sides of the single-vertex characterization agree on `phi`: a
/// reconstruction differing only at pairs through one vertex exists exactly
/// when `phi` has a critical pair.
pub fn check_criterio_equiv(phi: &Coloring) -> Result<bool> {
    Ok(differs_at_one_vertex(phi)? == !critical_pairs(phi)?.is_empty())
}

/// Per 4-set certificate: the least reconstructible superset, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourSufficesCertificate {
    pub entries: Vec<(VertexSet, Option<VertexSet>)>,
}

impl FourSufficesCertificate {
    pub fn is_total(&self) -> bool {
        self.entries.iter().all(|(_, y)| y.is_some())
    }

    pub fn witness(&self, f: &VertexSet) -> Option<&VertexSet> {
        self.entries
            .iter()
            .find(|(g, _)| g == f)
            .and_then(|(_, y)| y.as_ref())
    }
}

/// Largest ground set for [`four_suffices_certificate`].
pub const CERTIFICATE_GUARD: usize = 12;

/// For each 4-subset `F`, the smallest `Y ⊇ F` (by size, then set order) with
/// `phi|Y` reconstructible. A total certificate forces `phi` reconstructible;
/// a violation of that is reported as an invariant error.
pub fn four_suffices_certificate(phi: &Coloring) -> Result<FourSufficesCertificate> {
    let n = phi.n();
    if n < 4 {
        return domain(format!("four_suffices_certificate needs n >= 4, got {n}"));
    }
    if n > CERTIFICATE_GUARD {
        return Err(Error::Resource(format!(
            "certificate search is exponential; n = {n} exceeds {CERTIFICATE_GUARD}"
        )));
    }
    let mut memo: HashMap<u64, bool> = HashMap::new();
    let mut supersets: Vec<u64> = (0u64..1 << n).filter(|m| m.count_ones() >= 4).collect();
    supersets.sort_by_key(|&m| (m.count_ones(), m));
    let mut entries = Vec::new();
    let mut fours: Vec<u64> = (0u64..1 << n).filter(|m| m.count_ones() == 4).collect();
    fours.sort_unstable();
    for f in fours {
        let mut found = None;
        for &y in supersets.iter().filter(|&&y| y & f == f) {
            let ok = match memo.get(&y) {
                Some(&ok) => ok,
                None => {
                    let ok = is_reconstructible(&phi.restrict(&VertexSet::from_mask(n, y)))?;
                    memo.insert(y, ok);
                    ok
                }
            };
            if ok {
                found = Some(VertexSet::from_mask(n, y));
                break;
            }
        }
        entries.push((VertexSet::from_mask(n, f), found));
    }
    let cert = FourSufficesCertificate { entries };
    if cert.is_total() && !is_reconstructible(phi)? {
        return Err(Error::Invariant(format!(
            "total four-set certificate but {phi:?} is not reconstructible"
        )));
    }
    Ok(cert)
}

/// Smallest `z ∉ F` joined to every member of `F` in color `color`.
pub fn e_witness(phi: &Coloring, color: Color, f: &VertexSet) -> Option<usize> {
    (0..phi.n()).find(|&z| !f.contains(z) && f.iter().all(|x| phi.get(z, x) == color))
}

/// Outcome of the finite extension-property check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EPropertyOutcome {
    pub holds: bool,
    /// First set (by size, then set order) without a witness.
    pub first_failing: Option<VertexSet>,
}

/// Every `F` with `|F| <= max_f` has a witness inside the ground set.
pub fn e_property(phi: &Coloring, color: Color, max_f: usize) -> Result<EPropertyOutcome> {
    let n = phi.n();
    if max_f >= n.max(1) {
        return domain(format!(
            "e_property needs max_f <= n - 1, got {max_f} for n = {n}"
        ));
    }
    if n > 30 {
        return Err(Error::Resource(format!(
            "e_property scan capped at n = 30, got {n}"
        )));
    }
    let mut sets: Vec<u64> = Vec::new();
    for size in 0..=max_f {
        combinations_of(n, size, &mut |m| sets.push(m));
    }
    for m in sets {
        let f = VertexSet::from_mask(n, m);
        if e_witness(phi, color, &f).is_none() {
            return Ok(EPropertyOutcome {
                holds: false,
                first_failing: Some(f),
            });
        }
    }
    Ok(EPropertyOutcome {
        holds: true,
        first_failing: None,
    })
}

/// Calls `emit` with every `size`-subset of `0..n` as a mask, in increasing order.
pub fn combinations_of(n: usize, size: usize, emit: &mut dyn FnMut(u64)) {
    if size > n {
        return;
    }
    if size == 0 {
        emit(0);
        return;
    }
    // Gosper's hack walks same-popcount masks in increasing order
    let mut m: u64 = (1u64 << size) - 1;
    let limit = 1u64 << n;
    while m < limit {
        emit(m);
        let c = m & m.wrapping_neg();
        let r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
}

/// Adds two vertices `n` and `n + 1` joined to everything (and each other) in color 1.
pub fn extend_reconstructible(phi: &Coloring) -> Coloring {
    let n = phi.n();
    Coloring::from_fn(n + 2, |i, j| j >= n || phi.get(i, j) == 1)
}

/// Adds vertex `n` so that `{x0, n}` becomes a critical pair.
pub fn extend_unreconstructible(phi: &Coloring, x0: usize) -> Result<Coloring> {
    let n = phi.n();
    if n < 2 {
        return domain(format!("extend_unreconstructible needs n >= 2, got {n}"));
    }
    if x0 >= n {
        return domain(format!("x0 = {x0} outside ground set of size {n}"));
    }
    Ok(Coloring::from_fn(n + 1, |i, j| {
        if j < n {
            phi.get(i, j) == 1
        } else if i == x0 {
            true
        } else {
            phi.get(x0, i) == 0
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn even_odd(n: usize) -> Coloring {
        Coloring::from_fn(n, |i, j| i % 2 == j % 2)
    }

    fn particion() -> Coloring {
        let block = |v: usize| match v {
            0..=2 => 0,
            3 | 4 => 1,
            _ => 2,
        };
        Coloring::from_fn(6, |i, j| block(i) == block(j))
    }

    #[test]
    fn build_constraints_examples() {
        let cs = build_constraints(&TripleFamily::all(4)).unwrap();
        assert_eq!(cs.class_count(), 1);
        assert!(cs.nae().is_empty());
        assert!(cs.is_feasible());

        let cs = build_constraints(&TripleFamily::empty(4)).unwrap();
        assert_eq!(cs.class_count(), 6);
        assert_eq!(cs.nae().len(), 4);

        let t = TripleFamily::from_triples(4, [(0, 1, 2), (0, 1, 3), (0, 2, 3)]).unwrap();
        let cs = build_constraints(&t).unwrap();
        assert_eq!(cs.class_count(), 1);
        assert!(!cs.is_feasible());
        assert_eq!(cs.infeasibility_witness(), Some((1, 2, 3)));
        assert!(solve_all(&cs, 10).unwrap().colorings.is_empty());

        assert!(build_constraints(&TripleFamily::empty(2)).is_err());
    }

    #[test]
    fn solve_all_examples() {
        let sols = reconstructions(&Coloring::ones(3), 10).unwrap();
        assert_eq!(sols.colorings, vec![Coloring::zeros(3), Coloring::ones(3)]);
        assert!(!sols.truncated);

        let eo = even_odd(6);
        let sols = reconstructions(&eo, 1000).unwrap();
        assert!(sols.colorings.len() > 2);
        assert!(sols
            .colorings
            .contains(&eo.finite_change(&[(0, 1)]).unwrap()));
        assert!(sols.colorings.windows(2).all(|w| w[0] < w[1]));

        let p = particion();
        let mut expect = vec![p.clone(), p.complement()];
        expect.sort();
        assert_eq!(reconstructions(&p, 100).unwrap().colorings, expect);

        let sols = reconstructions(&eo, 2).unwrap();
        assert_eq!(sols.colorings.len(), 2);
        assert!(sols.truncated);
        assert!(reconstructions(&eo, 1).is_err());
    }

    #[test]
    fn degenerate_three_vertices() {
        // a non-homogeneous triple is shared by all six non-constant colorings
        let phi = Coloring::from_ones(3, [(0, 1)]).unwrap();
        assert_eq!(reconstructions(&phi, 100).unwrap().colorings.len(), 6);
        assert!(!is_reconstructible(&phi).unwrap());
        assert!(is_reconstructible(&Coloring::zeros(3)).unwrap());
    }

    #[test]
    fn reconstructibility_examples() {
        assert!(is_reconstructible(&Coloring::ones(5)).unwrap());
        assert!(is_reconstructible(&particion()).unwrap());
        assert!(!is_reconstructible(&even_odd(6)).unwrap());
        assert!(is_reconstructible(&Coloring::ones(2)).is_err());
    }

    #[test]
    fn critical_pair_examples() {
        assert!(critical_pairs(&Coloring::ones(5)).unwrap().is_empty());
        let cp = critical_pairs(&even_odd(6)).unwrap();
        assert!(cp.contains(&(0, 1)));
        // every even/odd cross pair, found by direct scan
        let cross: Vec<_> = (0..6)
            .flat_map(|x| (x + 1..6).map(move |y| (x, y)))
            .filter(|(x, y)| x % 2 != y % 2)
            .collect();
        assert_eq!(cp, cross);
        assert_eq!(cp.len(), 9);
    }

    #[test]
    fn r_value_examples() {
        assert_eq!(r_value(&Coloring::ones(5)).unwrap(), 0);
        assert_eq!(r_value(&even_odd(6)).unwrap(), 1);
        let report = classify(&even_odd(6)).unwrap();
        assert!(!report.reconstructible);
        assert!(report.solution_count > 2 && report.solution_count.is_multiple_of(2));
        assert!(report.witness.is_some());
    }

    #[test]
    fn criterio_equivalence_examples() {
        assert!(check_criterio_equiv(&even_odd(6)).unwrap());
        assert!(differs_at_one_vertex(&even_odd(6)).unwrap());
        assert!(check_criterio_equiv(&Coloring::ones(5)).unwrap());
        assert!(!differs_at_one_vertex(&Coloring::ones(5)).unwrap());
    }

    #[test]
    fn four_suffices_on_constant_is_identity() {
        let cert = four_suffices_certificate(&Coloring::ones(6)).unwrap();
        assert_eq!(cert.entries.len(), 15);
        for (f, y) in &cert.entries {
            assert_eq!(y.as_ref(), Some(f));
        }
    }

    #[test]
    fn four_suffices_on_three_blocks() {
        // blocks {0,1,2}, {3,4}, {5}; F = {0,1,3,4} is two pairs in two blocks
        let p = particion();
        let f = VertexSet::from_members(6, [0, 1, 3, 4]).unwrap();
        assert!(!is_reconstructible(&p.restrict(&f)).unwrap());
        assert!(critical_pairs(&p.restrict(&f)).unwrap().contains(&(0, 2)));
        let cert = four_suffices_certificate(&p).unwrap();
        let y = cert.witness(&f).expect("witness exists");
        assert!(f.is_subset(y));
        assert!(is_reconstructible(&p.restrict(y)).unwrap());
        assert!(cert.is_total());
    }

    #[test]
    fn e_property_examples() {
        let bits = Coloring::from_fn(8, |i, j| (j >> i) & 1 == 1);
        let f = VertexSet::from_members(8, [0, 1]).unwrap();
        assert_eq!(e_witness(&bits, 1, &f), Some(3));
        assert_eq!(e_witness(&bits, 0, &f), Some(4));
        let ones = Coloring::ones(6);
        let out = e_property(&ones, 0, 2).unwrap();
        assert!(!out.holds);
        assert_eq!(out.first_failing.unwrap().to_vec(), vec![0]);
        assert!(e_property(&ones, 1, 5).unwrap().holds);
        assert!(e_property(&ones, 1, 6).is_err());
    }

    #[test]
    fn extension_examples() {
        let ext = extend_reconstructible(&even_odd(4));
        assert_eq!(ext.n(), 6);
        assert!(is_reconstructible(&ext).unwrap());
        assert_eq!(
            extend_reconstructible(&Coloring::zeros(0)),
            Coloring::ones(2)
        );

        let ext = extend_unreconstructible(&Coloring::ones(3), 0).unwrap();
        assert_eq!(ext.n(), 4);
        assert!(critical_pairs(&ext).unwrap().contains(&(0, 3)));
        assert!(extend_unreconstructible(&Coloring::ones(3), 3).is_err());
        assert!(extend_unreconstructible(&Coloring::ones(1), 0).is_err());
    }

    #[test]
    fn combinations_walk_in_order() {
        let mut v = Vec::new();
        combinations_of(4, 2, &mut |m| v.push(m));
        assert_eq!(v, vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
        let mut count = 0;
        combinations_of(5, 0, &mut |_| count += 1);
        assert_eq!(count, 1);
    }
}
