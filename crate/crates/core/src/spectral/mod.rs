//! Spectral sets: verification of spectral pairs and spectrum search as a
//! clique problem in divisor-class Cayley graphs.
//!
//! `(S, Λ)` is a spectral pair when `|Λ| = |S|` and the characters indexed
//! by `Λ` are pairwise orthogonal on `S`. The characters `χ_λ` and `χ_λ'`
//! are orthogonal exactly when the class of `λ - λ'` lies in the zero set
//! of `m_S`, so a spectrum through 0 is a clique of size `|S|` in the Cayley
//! graph whose connection set is that zero set.

pub(crate) mod clique;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groupring::affine::AffineTables;
use crate::groupring::bits::Bits;
use crate::groupring::{zero_set_unchecked, CyclicGroupCtx, CyclicMultiset, DivisorClassSet};
use crate::{with_width, Budget, SearchOutcome, SearchReport};

use clique::{Exhausted, Graph, NodeCounter, OrderlyWalk, SizeFilter};

/// Cayley graph of `Z_n` with a union of divisor classes as connection set.
#[derive(Clone, Debug)]
pub struct CayleyGraph {
    connection: DivisorClassSet,
    elements: Vec<bool>,
}

impl CayleyGraph {
    pub fn new(connection: DivisorClassSet) -> Self {
        let ctx = connection.ctx();
        let elements = (0..ctx.n()).map(|x| x != 0 && connection.contains_element(x)).collect();
        CayleyGraph { connection, elements }
    }

    pub fn ctx(&self) -> &CyclicGroupCtx {
        self.connection.ctx()
    }

    pub fn n(&self) -> usize {
        self.ctx().n()
    }

    pub fn connection(&self) -> &DivisorClassSet {
        &self.connection
    }

    /// The connection set `E`, expanded. Never contains 0.
    pub fn connection_elements(&self) -> Vec<usize> {
        (0..self.n()).filter(|&x| self.elements[x]).collect()
    }

    pub fn adjacent(&self, x: usize, y: usize) -> bool {
        let n = self.n();
        self.elements[(x % n + n - y % n) % n]
    }

    pub fn neighbors(&self, x: usize) -> Vec<usize> {
        (0..self.n()).filter(|&y| self.adjacent(x, y)).collect()
    }

    pub fn is_clique(&self, set: &CyclicMultiset) -> bool {
        let elems: Vec<usize> = set.support().collect();
        elems
            .iter()
            .enumerate()
            .all(|(i, &x)| elems[i + 1..].iter().all(|&y| self.adjacent(x, y)))
    }

    pub(crate) fn bits<const W: usize>(&self) -> Bits<W> {
        Bits::from_iter(self.connection_elements())
    }

    pub(crate) fn graph<const W: usize>(&self) -> Graph<W> {
        Graph::cayley(self.n(), &self.bits())
    }
}

/// A set together with a spectrum and the zero set used to certify it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectralCertificate {
    pub set: CyclicMultiset,
    pub spectrum: CyclicMultiset,
    pub zero_set: DivisorClassSet,
}

impl SpectralCertificate {
    /// Re-checks the pair from scratch.
    pub fn verify(&self) -> bool {
        verify_spectral_pair(&self.set, &self.spectrum).unwrap_or(false) && self.spectrum.contains(0)
    }
}

fn check_pair_inputs(s: &CyclicMultiset, lambda: &CyclicMultiset) -> Result<()> {
    if s.n() != lambda.n() {
        return Err(Error::MismatchedOrders(s.n(), lambda.n()));
    }
    s.require_nonempty_set()?;
    lambda.require_nonempty_set()
}

/// Whether `(S, Λ)` is a spectral pair: equal sizes, and every nonzero
/// difference of `Λ` lies in a divisor class of the zero set of `m_S`.
pub fn verify_spectral_pair(s: &CyclicMultiset, lambda: &CyclicMultiset) -> Result<bool> {
    check_pair_inputs(s, lambda)?;
    if s.total() != lambda.total() {
        return Ok(false);
    }
    let zero = zero_set_unchecked(s);
    let n = s.n();
    let elems: Vec<usize> = lambda.support().collect();
    Ok(elems
        .iter()
        .enumerate()
        .all(|(i, &a)| elems[i + 1..].iter().all(|&b| zero.contains_element((b + n - a) % n))))
}

/// Whether the transposed pair `(Λ, S)` of a certificate is spectral too.
pub fn spectra_are_dual(cert: &SpectralCertificate) -> bool {
    verify_spectral_pair(&cert.spectrum, &cert.set).unwrap_or(false)
}

/// Searches for a spectrum of `S` containing 0.
///
/// `NotFound` is returned only once the search has proved that the Cayley
/// graph of the zero set has no clique of size `|S|` through 0.
pub fn find_spectrum(s: &CyclicMultiset, budget: Budget) -> Result<SearchReport<SpectralCertificate>> {
    s.require_nonempty_set()?;
    let mut counter = NodeCounter::new(budget.nodes());
    let found = with_width!(s.n(), W => spectrum_search::<W>(s, &mut counter))?;
    let outcome = match found {
        Ok(Some(lambda)) => SearchOutcome::Found(SpectralCertificate {
            set: s.clone(),
            spectrum: CyclicMultiset::set(s.ctx(), lambda).expect("clique elements are distinct"),
            zero_set: zero_set_unchecked(s),
        }),
        Ok(None) => SearchOutcome::NotFound,
        Err(Exhausted) => SearchOutcome::BudgetExhausted,
    };
    Ok(SearchReport {
        outcome,
        nodes: counter.used,
    })
}

/// Spectrum search against a shared node counter. Returns the spectrum
/// elements, increasing.
pub(crate) fn spectrum_search<const W: usize>(
    s: &CyclicMultiset,
    counter: &mut NodeCounter,
) -> Result<Option<Vec<usize>>, Exhausted> {
    spectrum_search_in::<W>(s.ctx(), s.total() as usize, &zero_set_unchecked(s), counter)
}

/// Spectrum search for a `k`-element set whose zero set is `zero`.
pub(crate) fn spectrum_search_in<const W: usize>(
    ctx: &CyclicGroupCtx,
    k: usize,
    zero: &DivisorClassSet,
    counter: &mut NodeCounter,
) -> Result<Option<Vec<usize>>, Exhausted> {
    counter.tick()?;
    let n = ctx.n();
    if k == 1 {
        return Ok(Some(vec![0]));
    }
    let graph = CayleyGraph::new(zero.clone());
    let conn: Bits<W> = graph.bits();
    if conn.count() + 1 < k {
        return Ok(None);
    }
    let full: Graph<W> = Graph::cayley(n, &conn);
    // Relabel the neighbourhood of 0 in degeneracy order so that index-order
    // coloring follows it.
    let order = full.degeneracy_order(&conn);
    let local = full.induced(&order);
    // Units fix 0 and permute each divisor class transitively, so the second
    // vertex can be taken as the class representative n/d. Cliques meeting an
    // earlier class were already covered by that class's branch.
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut allowed = Bits::<W>::full(order.len());
    for &d in zero.members() {
        let rep = n / d;
        let r = pos[rep];
        let mut clique = vec![r];
        let cand = allowed.and(&local.adj[r]);
        if local.extend_to(&mut clique, cand, k - 1, counter)? {
            let mut lambda: Vec<usize> = std::iter::once(0).chain(clique.iter().map(|&i| order[i])).collect();
            lambda.sort_unstable();
            return Ok(Some(lambda));
        }
        for x in (1..n).filter(|&x| ctx.order_of(x) == d) {
            allowed.remove(pos[x]);
        }
    }
    Ok(None)
}

/// How [`enumerate_cliques`] reports cliques.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CliqueMode {
    /// Every clique of the requested size containing 0.
    AllThroughZero,
    /// One affine-canonical representative per class.
    CanonicalOnly,
}

/// How an enumeration stream ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StreamEnd {
    Complete,
    BudgetExhausted,
}

#[derive(Debug, Clone)]
pub struct CliqueStream {
    /// Cliques in lexicographic order of their sorted element lists.
    pub cliques: Vec<CyclicMultiset>,
    pub end: StreamEnd,
    pub nodes: u64,
}

/// All `k`-cliques through 0 of a Cayley graph, or one canonical
/// representative per affine class.
pub fn enumerate_cliques(graph: &CayleyGraph, k: usize, mode: CliqueMode, budget: Budget) -> Result<CliqueStream> {
    if k == 0 {
        return Err(Error::Config("clique size must be at least 1".into()));
    }
    let ctx = graph.ctx().clone();
    let tables = (mode == CliqueMode::CanonicalOnly).then(|| AffineTables::new(&ctx));
    let mut counter = NodeCounter::new(budget.nodes());
    let mut cliques = Vec::new();
    let sizes = SizeFilter::single(k);
    let end = with_width!(ctx.n(), W => {
        let g: Graph<W> = graph.graph();
        let mut walk = OrderlyWalk {
            graph: &g,
            tables: tables.as_ref(),
            sizes: &sizes,
            coloring_bound: true,
            counter: &mut counter,
            emit: |elems: &[usize], _: &Bits<W>, _: &mut NodeCounter| {
                cliques.push(CyclicMultiset::set(&ctx, elems.iter().copied()).expect("distinct"));
                Ok(())
            },
        };
        let root = Bits::<W>::singleton(0);
        match walk.run(&mut vec![0], root, g.adj[0].above(0)) {
            Ok(()) => StreamEnd::Complete,
            Err(Exhausted) => StreamEnd::BudgetExhausted,
        }
    })?;
    Ok(CliqueStream {
        cliques,
        end,
        nodes: counter.used,
    })
}
