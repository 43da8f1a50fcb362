//! Enumeration of pseudo-triangulations up to the x3-shift, the tilting graph, and explicit
//! flip paths between any two pseudo-triangulations.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap, HashMap};
use std::fmt::Write as _;

use crate::compat::compatible;
use crate::curves::Cross;
use crate::error::{Error, Result};
use crate::flip::{first_iota_zero, flip, mu_hat, neighbors, FlipLabel, FlipResult};
use crate::lattice::LElement;
use crate::skewcurves::SkewCurve;
use crate::triang::{bridge_candidates, extension, fv_arrow, fv_under, torsion_candidates, PseudoTri};

/// Representative of the x3-shift orbit whose smallest bridge bottom is 0, and the shift used.
pub fn canonical_form(tri: &PseudoTri) -> Result<(PseudoTri, i64)> {
    let n = tri.n();
    let s = tri
        .arcs()
        .iter()
        .flat_map(|g| g.bridge_bottoms(n))
        .min()
        .ok_or_else(|| Error::IllFormed("no bridge to anchor".into()))?;
    Ok((tri.shift(LElement::x3(n).scale(s))?, s))
}

struct Bits(Vec<u64>);

impl Bits {
    fn empty(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }
    fn and_not(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & !b).collect())
    }
    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }
    fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }
    fn ones(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (k, &w) in self.0.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                out.push(k * 64 + w.trailing_zeros() as usize);
                w &= w - 1;
            }
        }
        out
    }
}

/// Maximal cliques by Bron-Kerbosch with pivoting.
fn maximal_cliques(adj: &[Bits], len: usize, mut emit: impl FnMut(&[usize])) {
    fn rec(adj: &[Bits], r: &mut Vec<usize>, p: Bits, x: Bits, emit: &mut dyn FnMut(&[usize])) {
        if p.is_empty() {
            if x.is_empty() {
                emit(r);
            }
            return;
        }
        let pivot = p
            .ones()
            .into_iter()
            .chain(x.ones())
            .max_by_key(|&u| p.and(&adj[u]).count())
            .unwrap();
        let mut p = p;
        let mut x = x;
        for v in p.and_not(&adj[pivot]).ones() {
            r.push(v);
            rec(adj, r, p.and(&adj[v]), x.and(&adj[v]), emit);
            r.pop();
            p.0[v / 64] &= !(1 << (v % 64));
            x.set(v);
        }
    }
    let mut p = Bits::empty(len);
    for i in 0..len {
        p.set(i);
    }
    rec(adj, &mut Vec::new(), p, Bits::empty(len), &mut emit);
}

#[derive(Debug, Clone)]
pub struct Enumeration {
    pub n: i64,
    pub window: i64,
    pub nodes: BTreeSet<PseudoTri>,
    /// Largest compatible set found among the window candidates.
    pub max_clique: usize,
    /// Maximal cliques of the window that extend outside it.
    pub truncated: usize,
}

/// All pseudo-triangulations whose bridge bottoms lie in [0, window] and touch 0.
pub fn enumerate(n: i64, window: i64) -> Result<Enumeration> {
    if n < 2 {
        return Err(Error::BadWeight(n));
    }
    let cands: Vec<SkewCurve> = bridge_candidates(n, 0, window)
        .into_iter()
        .chain(torsion_candidates(n))
        .collect();
    let len = cands.len();
    let mut adj: Vec<Bits> = (0..len).map(|_| Bits::empty(len)).collect();
    for a in 0..len {
        for b in a + 1..len {
            if compatible(n, &cands[a], &cands[b])? {
                adj[a].set(b);
                adj[b].set(a);
            }
        }
    }
    let anchored: Vec<bool> = cands.iter().map(|g| g.bridge_bottoms(n).contains(&0)).collect();
    let mut cliques = Vec::new();
    let mut max_clique = 0;
    maximal_cliques(&adj, len, |c| {
        max_clique = max_clique.max(c.len());
        if c.iter().any(|&v| anchored[v]) {
            cliques.push(c.iter().map(|&v| cands[v]).collect::<BTreeSet<_>>());
        }
    });
    let mut nodes = BTreeSet::new();
    let mut truncated = 0;
    for set in cliques {
        if extension(n, &set).is_some() {
            truncated += 1;
            continue;
        }
        if set.len() as i64 != n + 3 {
            return Err(Error::IllFormed(format!("maximal compatible set of size {}", set.len())));
        }
        nodes.insert(PseudoTri::from_trusted(n, set));
    }
    Ok(Enumeration { n, window, nodes, max_clique, truncated })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    /// Label of the flip from a to b, then from b to a.
    pub labels: (FlipLabel, FlipLabel),
}

#[derive(Debug, Clone)]
pub struct TiltingGraph {
    pub n: i64,
    pub window: i64,
    pub nodes: Vec<PseudoTri>,
    pub edges: Vec<Edge>,
    /// Flips leading to pseudo-triangulations outside the enumerated window.
    pub dangling: usize,
}

pub fn build_graph(n: i64, window: i64) -> Result<TiltingGraph> {
    let nodes: Vec<PseudoTri> = enumerate(n, window)?.nodes.into_iter().collect();
    let index: HashMap<&PseudoTri, usize> = nodes.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut directed: BTreeMap<(usize, usize), FlipLabel> = BTreeMap::new();
    let mut dangling = 0;
    for (i, t) in nodes.iter().enumerate() {
        for r in neighbors(t)? {
            let (c, _) = canonical_form(&r.new_tri)?;
            match index.get(&c) {
                Some(&j) => {
                    directed.insert((i, j), r.case_label);
                }
                None => dangling += 1,
            }
        }
    }
    let mut edges = Vec::new();
    for (&(i, j), &l) in &directed {
        if i < j {
            let back = directed
                .get(&(j, i))
                .ok_or_else(|| Error::IllFormed(format!("flip from node {i} to {j} has no inverse")))?;
            edges.push(Edge { a: i, b: j, labels: (l, *back) });
        } else if i == j {
            edges.push(Edge { a: i, b: j, labels: (l, l) });
        }
    }
    Ok(TiltingGraph { n, window, nodes, edges, dangling })
}

fn node_label(t: &PseudoTri) -> String {
    let mut names: Vec<String> = t.tilting_sheaf().iter().map(|s| s.to_string()).collect();
    names.sort();
    names.join(" ")
}

pub fn export_dot(g: &TiltingGraph) -> String {
    let mut s = format!("graph tilting_n{} {{\n", g.n);
    for (i, t) in g.nodes.iter().enumerate() {
        let _ = writeln!(s, "  {i} [label=\"{}\"];", node_label(t).replace('"', "\\\""));
    }
    for e in &g.edges {
        let _ = writeln!(s, "  {} -- {} [label=\"{}/{}\"];", e.a, e.b, e.labels.0, e.labels.1);
    }
    s.push_str("}\n");
    s
}

pub fn export_csv(g: &TiltingGraph) -> String {
    let mut s = String::from("kind,id,other,label\n");
    for (i, t) in g.nodes.iter().enumerate() {
        let _ = writeln!(s, "node,{i},,\"{}\"", node_label(t));
    }
    for e in &g.edges {
        let _ = writeln!(s, "edge,{},{},{}/{}", e.a, e.b, e.labels.0, e.labels.1);
    }
    s
}

/// One legal flip: remove an arc and add its unique replacement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Step {
    pub removed: SkewCurve,
    pub added: SkewCurve,
}

impl From<&FlipResult> for Step {
    fn from(r: &FlipResult) -> Self {
        Step { removed: r.removed, added: r.added }
    }
}

/// How far a pseudo-triangulation is from the FV shape: arcs that are not bundles, crosses
/// without a +/- pair of halves, and missing endpoint sums among the sigma-pairs of bridges.
fn fv_distance(t: &PseudoTri) -> usize {
    let n = t.n();
    let non_bundle = t.arcs().iter().filter(|g| !g.is_bundle()).count();
    let unpaired = [Cross::One, Cross::Two]
        .iter()
        .filter(|&&c| {
            let hs = t.halves_at(c);
            !(hs.len() == 2 && matches!((hs[0], hs[1]), (SkewCurve::Half { idx: a, .. }, SkewCurve::Half { idx: b, .. }) if a == b))
        })
        .count();
    let sums: BTreeSet<i64> = t
        .arcs()
        .iter()
        .filter_map(|g| match g {
            SkewCurve::Pair { k, .. } => Some(*k),
            _ => None,
        })
        .collect();
    2 * non_bundle + unpaired + (n as usize - 1 - sums.len())
}

/// Best-first search over flips until the goal holds, with states identified up to x3-shift.
/// Paths longer than the cap are not extended.
fn search(start: &PseudoTri, depth_cap: usize, goal: impl Fn(&PseudoTri) -> bool) -> Result<(PseudoTri, Vec<Step>)> {
    if goal(start) {
        return Ok((start.clone(), Vec::new()));
    }
    let mut seen = BTreeSet::new();
    seen.insert(canonical_form(start)?.0);
    let mut states = vec![(start.clone(), Vec::<Step>::new())];
    let mut queue = BinaryHeap::new();
    queue.push(Reverse((fv_distance(start), 0usize, 0usize)));
    while let Some(Reverse((_, len, at))) = queue.pop() {
        if len >= depth_cap {
            continue;
        }
        let (t, path) = states[at].clone();
        for r in neighbors(&t)? {
            if !seen.insert(canonical_form(&r.new_tri)?.0) {
                continue;
            }
            let mut p = path.clone();
            p.push(Step::from(&r));
            if goal(&r.new_tri) {
                return Ok((r.new_tri, p));
            }
            queue.push(Reverse((fv_distance(&r.new_tri), p.len(), states.len())));
            states.push((r.new_tri, p));
        }
    }
    Err(Error::SearchExhausted(format!("depth cap {depth_cap} reached from {start}")))
}

/// Flip sequence from `tri` to some FV pseudo-triangulation: first reach one containing a
/// sigma-pair of bridges, then one of FV shape.
pub fn to_fv(tri: &PseudoTri) -> Result<(PseudoTri, Vec<Step>)> {
    let cap = 4 * (tri.n() as usize + 3);
    let (mid, mut steps) = search(tri, cap, |t| t.arcs().iter().any(SkewCurve::is_sigma_pair))?;
    let (fv, more) = search(&mid, cap, PseudoTri::is_fv)?;
    steps.extend(more);
    Ok((fv, steps))
}

fn sweep(tri: &PseudoTri, start: i64, steps: &mut Vec<Step>) -> Result<PseudoTri> {
    let mut t = tri.clone();
    let mut i = start;
    while i <= tri.n() {
        let (next, flips) = mu_hat(&t, i)?;
        steps.extend(flips.iter().map(Step::from));
        t = next;
        i += 2;
    }
    Ok(t)
}

/// Mutations taking an FV pseudo-triangulation to the arrow family member with a = b = 0.
pub fn fv_to_canonical(tri: &PseudoTri) -> Result<(PseudoTri, Vec<Step>)> {
    let n = tri.n();
    let mut t = tri.clone();
    let mut steps = Vec::new();
    let mut rounds = 0;
    loop {
        let Some(j) = first_iota_zero(&t)? else { break };
        let i = match j {
            1 => 0,
            2 => 1,
            j => j as i64 - 1,
        };
        let (next, flips) = mu_hat(&t, i as i64)?;
        steps.extend(flips.iter().map(Step::from));
        t = next;
        rounds += 1;
        if rounds > (n * n + 4 * n) as usize {
            return Err(Error::SearchExhausted("iota normalization does not terminate".into()));
        }
    }
    let chains = t.fv_chains().ok_or(Error::NotFv)?;
    let a = chains.a[0];
    if t == fv_under(n, a, -a)? {
        t = sweep(&t, 1, &mut steps)?;
    }
    if t != fv_arrow(n, a, -a)? {
        return Err(Error::IllFormed(format!("all-ones iota outside the generator family: {t}")));
    }
    let mut a = a;
    while a != 0 {
        if a > 0 {
            t = sweep(&t, 1, &mut steps)?;
            t = sweep(&t, 0, &mut steps)?;
            a -= 1;
        } else {
            t = sweep(&t, 0, &mut steps)?;
            t = sweep(&t, 1, &mut steps)?;
            a += 1;
        }
        if t != fv_arrow(n, a, -a)? {
            return Err(Error::IllFormed(format!("sweep left the generator family at a = {a}")));
        }
    }
    Ok((t, steps))
}

/// A sequence of flips from one pseudo-triangulation to another, through the arrow generator
/// with a = b = 0.
pub fn flip_path(from: &PseudoTri, to: &PseudoTri) -> Result<Vec<Step>> {
    if from.n() != to.n() {
        return Err(Error::MismatchedN(from.n(), to.n()));
    }
    if from == to {
        return Ok(Vec::new());
    }
    let half = |t: &PseudoTri| -> Result<Vec<Step>> {
        let (fv, mut s) = to_fv(t)?;
        let (_, more) = fv_to_canonical(&fv)?;
        s.extend(more);
        Ok(s)
    };
    let mut path = half(from)?;
    let back = half(to)?;
    path.extend(back.iter().rev().map(|s| Step { removed: s.added, added: s.removed }));
    Ok(path)
}

/// Replays a path, checking that every step is a legal flip, and returns the flip results.
pub fn replay(start: &PseudoTri, path: &[Step]) -> Result<Vec<FlipResult>> {
    let mut t = start.clone();
    let mut out = Vec::with_capacity(path.len());
    for s in path {
        let r = flip(&t, &s.removed)?;
        if r.added != s.added {
            return Err(Error::IllFormed(format!("flip of {} gives {}, not {}", s.removed, r.added, s.added)));
        }
        t = r.new_tri.clone();
        out.push(r);
    }
    Ok(out)
}
