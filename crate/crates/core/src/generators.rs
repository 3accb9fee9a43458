//! Constructors for the named coloring families.
//!
//! Every generator maps its vertices onto `0..n` in a fixed order:
//! partition blocks are listed as given, tree vertices go by length and then
//! lexicographically, gadget vertices follow the inner coloring, and block
//! families list their blocks one after another.
//!
//! Each spec has a one-line text form, e.g. `partition(0,1,2|3,4|5)` or
//! `three-max(3,3,4)`; see [`GeneratorSpec`]'s `FromStr` and `Display`.

use std::fmt;
use std::str::FromStr;

use crate::coloring::{Color, Coloring};
use crate::error::{domain, Error, Result};
use crate::rng::SplitMix64;

/// Which finite change to apply in the three-block family with a two-element block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum A0Change {
    /// The partition coloring itself.
    None,
    /// Flip `{0,4}`, `{1,5}` and `{4,5}`.
    A,
    /// Flip `{4,5}` only.
    B,
}

/// Declarative description of a coloring family instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorSpec {
    /// Color 1 exactly within blocks.
    Partition { blocks: Vec<Vec<usize>> },
    /// `perm[v]` is the rank of the rational attached to `v`; `{u < v}` gets 1
    /// iff the ranks increase.
    Sierpinski { perm: Vec<usize> },
    /// `{u < v}` gets 1 iff `u` precedes `v` in the order whose rank map is `perm`.
    LinearOrder { perm: Vec<usize> },
    /// Binary strings of length at most `depth`; 1 iff one extends the other.
    BinaryTree { depth: usize },
    /// Independent pairs, each 1 with probability `num / den`.
    RandomGraph {
        n: usize,
        seed: u64,
        num: u64,
        den: u64,
    },
    /// `{i < j}` gets 1 iff bit `i` of `j` is set.
    BitPredicate { n: usize },
    /// Any coloring on four vertices plus two vertices joined to all in color 1.
    PropertyEGadget { inner: Coloring },
    /// Any coloring on five vertices `a..e` plus `x, y, z` with cross 1-pairs
    /// `ax, bx, cy, dz`.
    Particion2Gadget { inner: Coloring },
    /// Two maximal homogeneous sets whose union misses vertex 0.
    ExAnonempty { n: usize },
    /// Three 1-blocks of the given sizes with `{a0,b0}`, `{a0,c_even}`,
    /// `{b0,c_odd}` also colored 1.
    ThreeMax { a: usize, b: usize, c: usize },
    /// Evens 0-homogeneous, odds 1-homogeneous, `{2i, 2j+1}` colored 1 iff `i > j`.
    InterleavedTwoMax { n: usize },
    /// Partition `{0,1}`, odds `>= 3`, evens `>= 2`, optionally changed.
    A0Finite { n: usize, change: A0Change },
    /// Repeated one-vertex extension keeping the newest pair critical.
    RecursiveExtension {
        base: Coloring,
        x0: usize,
        steps: usize,
        diag: Vec<Color>,
    },
    /// The recursion `φ{0,m} = 1 - φ{0,m-1}`, `φ{k,m} = 1 - φ{0,k}`.
    FinalRecursion { n: usize },
}

/// Builds the coloring described by `spec`.
pub fn generate(spec: &GeneratorSpec) -> Result<Coloring> {
    use GeneratorSpec::*;
    match spec {
        Partition { blocks } => partition_coloring(blocks),
        Sierpinski { perm } | LinearOrder { perm } => {
            check_perm(perm)?;
            Ok(Coloring::from_fn(perm.len(), |i, j| perm[i] < perm[j]))
        }
        BinaryTree { depth } => binary_tree(*depth),
        RandomGraph { n, seed, num, den } => {
            if *den == 0 || num > den {
                return domain(format!("density {num}/{den} is not a probability"));
            }
            let mut rng = SplitMix64::new(*seed);
            Ok(Coloring::from_fn(*n, |_, _| rng.bernoulli(*num, *den)))
        }
        BitPredicate { n } => {
            if *n > 64 {
                return domain("bit-predicate coloring needs n <= 64");
            }
            Ok(Coloring::from_fn(*n, |i, j| (j >> i) & 1 == 1))
        }
        PropertyEGadget { inner } => {
            if inner.n() != 4 {
                return domain(format!(
                    "property-E gadget needs a 4-vertex inner coloring, got {}",
                    inner.n()
                ));
            }
            Ok(Coloring::from_fn(6, |i, j| j >= 4 || inner.get(i, j) == 1))
        }
        Particion2Gadget { inner } => {
            if inner.n() != 5 {
                return domain(format!(
                    "particion2 gadget needs a 5-vertex inner coloring, got {}",
                    inner.n()
                ));
            }
            // x = 5, y = 6, z = 7; cross 1-pairs ax, bx, cy, dz; x, y, z pairwise 0
            Ok(Coloring::from_fn(8, |i, j| match j {
                0..=4 => inner.get(i, j) == 1,
                5 => i == 0 || i == 1,
                6 => i == 2,
                _ => i == 3,
            }))
        }
        ExAnonempty { n } => Ok(Coloring::from_fn(*n, |i, j| match i {
            0 => j == 1,
            1 => j % 2 == 1,
            _ => true,
        })),
        ThreeMax { a, b, c } => three_max(*a, *b, *c),
        InterleavedTwoMax { n } => Ok(Coloring::from_fn(*n, |i, j| match (i % 2, j % 2) {
            (0, 0) => false,
            (1, 1) => true,
            _ => {
                let (even, odd) = if i % 2 == 0 { (i, j) } else { (j, i) };
                even / 2 > odd / 2
            }
        })),
        A0Finite { n, change } => a0_finite(*n, *change),
        RecursiveExtension {
            base,
            x0,
            steps,
            diag,
        } => recursive_extension(base, *x0, *steps, diag),
        FinalRecursion { n } => Ok(final_recursion(*n)),
    }
}

/// Coloring associated to a partition of `0..n` (blocks must be nonempty,
/// disjoint and cover `0..n` where `n` is the total number of members).
pub fn partition_coloring(blocks: &[Vec<usize>]) -> Result<Coloring> {
    let n: usize = blocks.iter().map(Vec::len).sum();
    let mut block_of = vec![usize::MAX; n];
    for (b, members) in blocks.iter().enumerate() {
        if members.is_empty() {
            return domain(format!("block {b} is empty"));
        }
        for &v in members {
            if v >= n {
                return domain(format!("vertex {v} outside ground set of size {n}"));
            }
            if block_of[v] != usize::MAX {
                return domain(format!("vertex {v} appears in two blocks"));
            }
            block_of[v] = b;
        }
    }
    Ok(Coloring::from_fn(n, |i, j| block_of[i] == block_of[j]))
}

/// Seeded random coloring with density 1/2.
pub fn random_coloring(n: usize, seed: u64) -> Coloring {
    let mut rng = SplitMix64::new(seed);
    Coloring::from_fn(n, |_, _| rng.bernoulli(1, 2))
}

/// Extends `base` by `steps` vertices. Vertex `base.n() + k` is `x_{k+1}`;
/// it sees every earlier vertex other than `x_k` in the color opposite to
/// what `x_k` sees, and sees `x_k` in `diag[k]`.
pub fn recursive_extension(
    base: &Coloring,
    x0: usize,
    steps: usize,
    diag: &[Color],
) -> Result<Coloring> {
    if x0 >= base.n() {
        return domain(format!("x0 = {x0} outside ground set of size {}", base.n()));
    }
    if diag.len() != steps {
        return domain(format!("{} diagonal colors for {steps} steps", diag.len()));
    }
    let b = base.n();
    let mut out = Coloring::zeros(b + steps);
    for j in 1..b {
        for i in 0..j {
            out.set(i, j, base.get(i, j));
        }
    }
    let mut prev = x0;
    for (k, &d) in diag.iter().enumerate() {
        let v = b + k;
        for z in 0..v {
            let c = if z == prev { d } else { 1 - out.get(z, prev) };
            out.set(z, v, c);
        }
        prev = v;
    }
    Ok(out)
}

/// The recursively defined coloring where `{0, m-1}` is critical in every prefix of size `m`.
pub fn final_recursion(n: usize) -> Coloring {
    let mut out = Coloring::zeros(n);
    for m in 1..n {
        match m {
            1 => out.set(0, 1, 1),
            2 => {
                out.set(0, 2, 1);
                out.set(1, 2, 0);
            }
            _ => {
                let prev = out.get(0, m - 1);
                out.set(0, m, 1 - prev);
                for k in 1..m {
                    let c = 1 - out.get(0, k);
                    out.set(k, m, c);
                }
            }
        }
    }
    out
}

fn check_perm(perm: &[usize]) -> Result<()> {
    let mut seen = vec![false; perm.len()];
    for &p in perm {
        if p >= perm.len() || seen[p] {
            return domain(format!(
                "{perm:?} is not a permutation of 0..{}",
                perm.len()
            ));
        }
        seen[p] = true;
    }
    Ok(())
}

fn binary_tree(depth: usize) -> Result<Coloring> {
    if depth > 10 {
        return domain(format!("binary tree depth {depth} exceeds 10"));
    }
    // vertex (len, bits) sits at index 2^len - 1 + bits
    let verts: Vec<(usize, usize)> = (0..=depth)
        .flat_map(|len| (0..1usize << len).map(move |bits| (len, bits)))
        .collect();
    Ok(Coloring::from_fn(verts.len(), |i, j| {
        let (a, b) = (verts[i], verts[j]);
        let (short, long) = if a.0 <= b.0 { (a, b) } else { (b, a) };
        long.1 >> (long.0 - short.0) == short.1
    }))
}

fn three_max(a: usize, b: usize, c: usize) -> Result<Coloring> {
    if a == 0 || b == 0 || c == 0 {
        return domain("three-max blocks must be nonempty");
    }
    let block = |v: usize| {
        if v < a {
            0
        } else if v < a + b {
            1
        } else {
            2
        }
    };
    let (a0, b0) = (0, a);
    Ok(Coloring::from_fn(a + b + c, |i, j| {
        if block(i) == block(j) || (i == a0 && j == b0) {
            return true;
        }
        if block(j) == 2 {
            let ci = j - a - b;
            return (i == a0 && ci.is_multiple_of(2)) || (i == b0 && !ci.is_multiple_of(2));
        }
        false
    }))
}

fn a0_finite(n: usize, change: A0Change) -> Result<Coloring> {
    let block = |v: usize| match v {
        0 | 1 => 0,
        v if v % 2 == 1 => 1,
        _ => 2,
    };
    let base = Coloring::from_fn(n, |i, j| block(i) == block(j));
    let flips: &[(usize, usize)] = match change {
        A0Change::None => &[],
        A0Change::A => &[(0, 4), (1, 5), (4, 5)],
        A0Change::B => &[(4, 5)],
    };
    if !flips.is_empty() && n < 6 {
        return domain(format!("a0-finite changes need n >= 6, got {n}"));
    }
    base.finite_change(flips)
}

fn bits_of(diag: &[Color]) -> String {
    diag.iter()
        .map(|&c| if c == 1 { '1' } else { '0' })
        .collect()
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GeneratorSpec::*;
        match self {
            Partition { blocks } => {
                let parts: Vec<String> = blocks.iter().map(|b| join(b)).collect();
                write!(f, "partition({})", parts.join("|"))
            }
            Sierpinski { perm } => write!(f, "sierpinski({})", join(perm)),
            LinearOrder { perm } => write!(f, "linear-order({})", join(perm)),
            BinaryTree { depth } => write!(f, "binary-tree({depth})"),
            RandomGraph { n, seed, num, den } => write!(f, "random({n},{seed},{num}/{den})"),
            BitPredicate { n } => write!(f, "bit-predicate({n})"),
            PropertyEGadget { inner } => write!(f, "property-e({})", inner.to_bit_string()),
            Particion2Gadget { inner } => write!(f, "particion2({})", inner.to_bit_string()),
            ExAnonempty { n } => write!(f, "ex-a-nonempty({n})"),
            ThreeMax { a, b, c } => write!(f, "three-max({a},{b},{c})"),
            InterleavedTwoMax { n } => write!(f, "interleaved-two-max({n})"),
            A0Finite { n, change } => match change {
                A0Change::None => write!(f, "a0-finite({n})"),
                A0Change::A => write!(f, "a0-finite({n},a)"),
                A0Change::B => write!(f, "a0-finite({n},b)"),
            },
            RecursiveExtension {
                base,
                x0,
                steps,
                diag,
            } => write!(
                f,
                "recursive-extension({},{x0},{steps},{})",
                base.to_bit_string(),
                bits_of(diag)
            ),
            FinalRecursion { n } => write!(f, "final-recursion({n})"),
        }
    }
}

fn bad(text: &str, why: impl fmt::Display) -> Error {
    Error::Validation(format!("bad generator spec `{text}`: {why}"))
}

fn num<T: FromStr>(text: &str, arg: &str) -> Result<T> {
    arg.trim()
        .parse()
        .map_err(|_| bad(text, format!("`{arg}` is not a number")))
}

fn nums(text: &str, args: &[&str]) -> Result<Vec<usize>> {
    args.iter().map(|a| num(text, a)).collect()
}

impl FromStr for GeneratorSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        use GeneratorSpec::*;
        let t = text.trim();
        let (name, rest) = t.split_once('(').ok_or_else(|| bad(t, "missing `(`"))?;
        let body = rest
            .strip_suffix(')')
            .ok_or_else(|| bad(t, "missing `)`"))?;
        let args: Vec<&str> = if body.trim().is_empty() {
            Vec::new()
        } else {
            body.split(',').map(str::trim).collect()
        };
        let arity = |k: usize| -> Result<()> {
            if args.len() == k {
                Ok(())
            } else {
                Err(bad(
                    t,
                    format!("expected {k} arguments, got {}", args.len()),
                ))
            }
        };
        let spec = match name.trim() {
            "partition" => {
                let blocks = body
                    .split('|')
                    .map(|b| nums(t, &b.split(',').collect::<Vec<_>>()))
                    .collect::<Result<Vec<_>>>()?;
                Partition { blocks }
            }
            "sierpinski" => Sierpinski {
                perm: nums(t, &args)?,
            },
            "linear-order" => LinearOrder {
                perm: nums(t, &args)?,
            },
            "binary-tree" => {
                arity(1)?;
                BinaryTree {
                    depth: num(t, args[0])?,
                }
            }
            "random" => {
                arity(3)?;
                let (a, b) = args[2]
                    .split_once('/')
                    .ok_or_else(|| bad(t, "density must be num/den"))?;
                RandomGraph {
                    n: num(t, args[0])?,
                    seed: num(t, args[1])?,
                    num: num(t, a)?,
                    den: num(t, b)?,
                }
            }
            "bit-predicate" => {
                arity(1)?;
                BitPredicate {
                    n: num(t, args[0])?,
                }
            }
            "property-e" => {
                arity(1)?;
                PropertyEGadget {
                    inner: Coloring::from_bit_string(args[0])?,
                }
            }
            "particion2" => {
                arity(1)?;
                Particion2Gadget {
                    inner: Coloring::from_bit_string(args[0])?,
                }
            }
            "ex-a-nonempty" => {
                arity(1)?;
                ExAnonempty {
                    n: num(t, args[0])?,
                }
            }
            "three-max" => {
                arity(3)?;
                let v = nums(t, &args)?;
                ThreeMax {
                    a: v[0],
                    b: v[1],
                    c: v[2],
                }
            }
            "interleaved-two-max" => {
                arity(1)?;
                InterleavedTwoMax {
                    n: num(t, args[0])?,
                }
            }
            "a0-finite" => {
                let change = match args.get(1).copied() {
                    None => A0Change::None,
                    Some("a") => A0Change::A,
                    Some("b") => A0Change::B,
                    Some(other) => return Err(bad(t, format!("unknown change `{other}`"))),
                };
                if args.is_empty() || args.len() > 2 {
                    return Err(bad(t, "expected 1 or 2 arguments"));
                }
                A0Finite {
                    n: num(t, args[0])?,
                    change,
                }
            }
            "recursive-extension" => {
                if args.len() != 3 && args.len() != 4 {
                    return Err(bad(t, "expected base, x0, steps[, diag]"));
                }
                let steps: usize = num(t, args[2])?;
                let diag = match args.get(3) {
                    Some(d) => d
                        .chars()
                        .map(|c| match c {
                            '0' => Ok(0),
                            '1' => Ok(1),
                            _ => Err(bad(t, "diagonal colors are 0/1")),
                        })
                        .collect::<Result<Vec<_>>>()?,
                    None => Vec::new(),
                };
                RecursiveExtension {
                    base: Coloring::from_bit_string(args[0])?,
                    x0: num(t, args[1])?,
                    steps,
                    diag,
                }
            }
            "final-recursion" => {
                arity(1)?;
                FinalRecursion {
                    n: num(t, args[0])?,
                }
            }
            other => return Err(bad(t, format!("unknown family `{other}`"))),
        };
        Ok(spec)
    }
}
