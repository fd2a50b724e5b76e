//! Bitset clique search on Cayley graphs of `Z_n`.

use crate::groupring::affine::AffineTables;
use crate::groupring::bits::Bits;

/// The node budget ran out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Exhausted;

#[derive(Debug, Clone)]
pub(crate) struct NodeCounter {
    pub used: u64,
    pub limit: u64,
}

impl NodeCounter {
    pub fn new(limit: u64) -> Self {
        NodeCounter { used: 0, limit }
    }

    #[inline]
    pub fn tick(&mut self) -> Result<(), Exhausted> {
        if self.used >= self.limit {
            return Err(Exhausted);
        }
        self.used += 1;
        Ok(())
    }
}

/// Adjacency rows of a graph on `0..n`.
#[derive(Clone)]
pub(crate) struct Graph<const W: usize> {
    pub n: usize,
    pub adj: Vec<Bits<W>>,
}

impl<const W: usize> Graph<W> {
    /// Cayley graph: `x ~ y` iff `x - y ∈ connection`. The connection set
    /// must be symmetric and avoid 0.
    pub fn cayley(n: usize, connection: &Bits<W>) -> Self {
        let adj = (0..n).map(|x| connection.rotate_up(x, n)).collect();
        Graph { n, adj }
    }

    /// Induced subgraph on `verts`, relabelled `0..verts.len()` in the given order.
    pub fn induced(&self, verts: &[usize]) -> Self {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let adj = verts
            .iter()
            .map(|&v| Bits::from_iter(self.adj[v].iter().map(|u| pos[u]).filter(|&p| p != usize::MAX)))
            .collect();
        Graph { n: verts.len(), adj }
    }

    /// Vertices of `within` ordered for coloring: repeatedly peel a
    /// minimum-degree vertex, and list the peel order reversed.
    pub fn degeneracy_order(&self, within: &Bits<W>) -> Vec<usize> {
        let mut left = *within;
        let mut peeled = Vec::with_capacity(within.count());
        while !left.is_empty() {
            let v = left
                .iter()
                .min_by_key(|&v| (self.adj[v].and(&left).count(), v))
                .expect("nonempty");
            peeled.push(v);
            left.remove(v);
        }
        peeled.reverse();
        peeled
    }

    /// Greedy sequential coloring of `cand` in index order. Returns the
    /// vertices sorted by nondecreasing color together with their colors.
    #[inline]
    pub fn color_sort(&self, cand: &Bits<W>, verts: &mut Vec<usize>, colors: &mut Vec<usize>) {
        verts.clear();
        colors.clear();
        let mut uncolored = *cand;
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut q = uncolored;
            while let Some(v) = q.first() {
                q.remove(v);
                q = q.and_not(&self.adj[v]);
                uncolored.remove(v);
                verts.push(v);
                colors.push(color);
            }
        }
    }

    /// Number of colors used by the greedy coloring: an upper bound on the
    /// clique number of the subgraph induced by `cand`.
    pub fn color_bound(&self, cand: &Bits<W>) -> usize {
        let mut uncolored = *cand;
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut q = uncolored;
            while let Some(v) = q.first() {
                q.remove(v);
                q = q.and_not(&self.adj[v]);
                uncolored.remove(v);
            }
        }
        color
    }

    /// Extends `clique` (all of whose members are adjacent to every vertex
    /// of `cand`) to `target` vertices using vertices of `cand`. Branch and
    /// bound with the greedy coloring bound.
    pub fn extend_to(
        &self,
        clique: &mut Vec<usize>,
        cand: Bits<W>,
        target: usize,
        counter: &mut NodeCounter,
    ) -> Result<bool, Exhausted> {
        counter.tick()?;
        if clique.len() >= target {
            return Ok(true);
        }
        let mut verts = Vec::new();
        let mut colors = Vec::new();
        self.color_sort(&cand, &mut verts, &mut colors);
        let mut cand = cand;
        for i in (0..verts.len()).rev() {
            if clique.len() + colors[i] < target {
                return Ok(false);
            }
            let v = verts[i];
            clique.push(v);
            if self.extend_to(clique, cand.and(&self.adj[v]), target, counter)? {
                return Ok(true);
            }
            clique.pop();
            cand.remove(v);
        }
        Ok(false)
    }
}

/// Which sizes to report from an orderly enumeration.
#[derive(Debug, Clone)]
pub(crate) struct SizeFilter {
    wanted: Vec<bool>,
    max: usize,
}

impl SizeFilter {
    pub fn new(sizes: impl IntoIterator<Item = usize>) -> Self {
        let sizes: Vec<usize> = sizes.into_iter().collect();
        let max = sizes.iter().copied().max().unwrap_or(0);
        let mut wanted = vec![false; max + 1];
        for s in sizes {
            wanted[s] = true;
        }
        SizeFilter { wanted, max }
    }

    pub fn single(k: usize) -> Self {
        SizeFilter::new([k])
    }

    pub fn wants(&self, k: usize) -> bool {
        self.wanted.get(k).copied().unwrap_or(false)
    }

    /// Smallest wanted size strictly above `k`.
    pub fn next_above(&self, k: usize) -> Option<usize> {
        (k + 1..=self.max).find(|&s| self.wanted[s])
    }
}

/// Depth-first enumeration of the cliques containing `prefix` whose
/// remaining elements exceed `max(prefix)`, in lexicographic order of their
/// sorted element lists. With `tables`, only affine-canonical cliques are
/// visited (prefixes of canonical sets are canonical, so non-canonical
/// prefixes are cut). `emit` sees every clique whose size passes `sizes`.
pub(crate) struct OrderlyWalk<'a, const W: usize, F> {
    pub graph: &'a Graph<W>,
    pub tables: Option<&'a AffineTables>,
    pub sizes: &'a SizeFilter,
    pub coloring_bound: bool,
    pub counter: &'a mut NodeCounter,
    pub emit: F,
}

impl<'a, const W: usize, F> OrderlyWalk<'a, W, F>
where
    F: FnMut(&[usize], &Bits<W>, &mut NodeCounter) -> Result<(), Exhausted>,
{
    /// `prefix` must be a clique, increasing; `cand` its common neighbours
    /// above `max(prefix)`.
    pub fn run(&mut self, prefix: &mut Vec<usize>, set: Bits<W>, cand: Bits<W>) -> Result<(), Exhausted> {
        self.counter.tick()?;
        if let Some(t) = self.tables {
            if !t.is_canonical(prefix, &set) {
                return Ok(());
            }
        }
        let len = prefix.len();
        if self.sizes.wants(len) {
            (self.emit)(prefix, &set, self.counter)?;
        }
        let Some(next) = self.sizes.next_above(len) else {
            return Ok(());
        };
        let need = next - len;
        if cand.count() < need {
            return Ok(());
        }
        if self.coloring_bound && self.graph.color_bound(&cand) < need {
            return Ok(());
        }
        let mut rest = cand;
        while let Some(v) = rest.first() {
            rest.remove(v);
            if rest.count() + 1 < need {
                break;
            }
            let mut s = set;
            s.insert(v);
            prefix.push(v);
            let r = self.run(prefix, s, rest.and(&self.graph.adj[v]));
            prefix.pop();
            r?;
        }
        Ok(())
    }
}
