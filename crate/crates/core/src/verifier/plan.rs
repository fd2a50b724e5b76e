//! Splitting a campaign into deterministic work units.

use crate::groupring::affine::AffineTables;
use crate::groupring::bits::Bits;
use crate::groupring::ctx::prime_power_base;
use crate::groupring::{CyclicGroupCtx, DivisorClassSet};
use crate::spectral::clique::{Graph, NodeCounter, OrderlyWalk, SizeFilter};
use crate::spectral::CayleyGraph;
use crate::verifier::config::{CampaignConfig, Strategy};

/// Units below the root are the canonical cliques of this many elements.
pub(crate) const PREFIX_DEPTH: usize = 3;

/// One graph to enumerate, with the sizes wanted from it.
#[derive(Debug, Clone)]
pub(crate) struct Region {
    pub label: String,
    pub sizes: Vec<usize>,
    /// Connection set; `None` is the complete graph.
    pub connection: Option<DivisorClassSet>,
    /// Connection sets enumerated before this one for the same size. A
    /// clique of any of them was already examined there.
    pub earlier: Vec<DivisorClassSet>,
}

impl Region {
    pub fn connection_bits<const W: usize>(&self, n: usize) -> Bits<W> {
        match &self.connection {
            Some(d) => class_bits(d),
            None => Bits::from_iter(1..n),
        }
    }

    pub fn graph<const W: usize>(&self, n: usize) -> Graph<W> {
        Graph::cayley(n, &self.connection_bits(n))
    }
}

/// The nonzero elements of the divisor classes in `d`.
pub(crate) fn class_bits<const W: usize>(d: &DivisorClassSet) -> Bits<W> {
    Bits::from_iter(CayleyGraph::new(d.clone()).connection_elements())
}

#[derive(Debug, Clone)]
pub(crate) struct UnitSpec {
    pub key: String,
    pub region: usize,
    /// Canonical clique the unit extends; `[0]` for the root unit.
    pub prefix: Vec<usize>,
    /// Sizes this unit is responsible for.
    pub sizes: Vec<usize>,
}

pub(crate) struct Plan {
    pub regions: Vec<Region>,
    pub units: Vec<UnitSpec>,
}

/// Exponent of `p` in `k`.
fn valuation(mut k: usize, p: usize) -> usize {
    let mut e = 0;
    while k.is_multiple_of(p) {
        k /= p;
        e += 1;
    }
    e
}

/// All `c`-element subsets of `items`, in lexicographic order.
fn combinations(items: &[usize], c: usize) -> Vec<Vec<usize>> {
    if c == 0 {
        return vec![vec![]];
    }
    if items.len() < c {
        return vec![];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        for mut rest in combinations(&items[i + 1..], c - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

/// The inclusion-maximal divisor sets `D` that can be the zero set of a
/// `k`-element spectrum.
///
/// The distinct cyclotomic factors `Φ_d`, `d ∈ D`, all divide `m_Λ`, so
/// their product divides it and `Π Φ_d(1)` divides `m_Λ(1) = k`. Since
/// `Φ_{p^a}(1) = p` and `Φ_d(1) = 1` otherwise, at most `v_p(k)` powers of
/// each prime `p` can be members. Every admissible set lies inside one of
/// the returned ones, which are sorted by decreasing size of `E_D`.
pub(crate) fn maximal_admissible(ctx: &CyclicGroupCtx, k: usize) -> Vec<DivisorClassSet> {
    let base: Vec<usize> = ctx
        .nontrivial_divisors()
        .filter(|&d| prime_power_base(d).is_none())
        .collect();
    let mut choices: Vec<Vec<usize>> = vec![base];
    for &(p, e) in ctx.prime_factorization() {
        let powers: Vec<usize> = (1..=e).map(|a| p.pow(a)).collect();
        let c = valuation(k, p).min(e as usize);
        let picks = combinations(&powers, c);
        choices = choices
            .into_iter()
            .flat_map(|acc| {
                picks.iter().map(move |pick| {
                    let mut v = acc.clone();
                    v.extend(pick);
                    v
                })
            })
            .collect();
    }
    let mut sets: Vec<DivisorClassSet> = choices
        .into_iter()
        .map(|m| DivisorClassSet::new(ctx, m).expect("divisors of n"))
        .collect();
    sets.sort_by(|a, b| {
        let ea = CayleyGraph::new(a.clone()).connection_elements().len();
        let eb = CayleyGraph::new(b.clone()).connection_elements().len();
        eb.cmp(&ea).then_with(|| a.members().cmp(b.members()))
    });
    sets
}

fn join(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

pub(crate) fn build_plan(cfg: &CampaignConfig, ctx: &CyclicGroupCtx, tables: &AffineTables) -> Plan {
    let sizes = cfg.size_list();
    let mut regions = Vec::new();
    match cfg.strategy {
        Strategy::ExhaustiveSubsets => regions.push(Region {
            label: "all".into(),
            sizes,
            connection: None,
            earlier: vec![],
        }),
        Strategy::CliquePerDivisorSet => {
            for k in sizes {
                let sets = maximal_admissible(ctx, k);
                for (i, d) in sets.iter().enumerate() {
                    regions.push(Region {
                        label: format!("k={k};D={}", join(d.members())),
                        sizes: vec![k],
                        connection: Some(d.clone()),
                        earlier: sets[..i].to_vec(),
                    });
                }
            }
        }
    }
    let n = ctx.n();
    let mut units = Vec::new();
    for (ri, region) in regions.iter().enumerate() {
        let (small, large): (Vec<usize>, Vec<usize>) = region.sizes.iter().partition(|&&k| k < PREFIX_DEPTH);
        if !small.is_empty() {
            units.push(UnitSpec {
                key: format!("{};root", region.label),
                region: ri,
                prefix: vec![0],
                sizes: small,
            });
        }
        if large.is_empty() {
            continue;
        }
        let prefixes =
            crate::with_width!(n, W => canonical_prefixes::<W>(region, n, tables, large[0])).expect("order validated");
        for p in prefixes {
            units.push(UnitSpec {
                key: format!("{};P={}", region.label, join(&p)),
                region: ri,
                prefix: p,
                sizes: large.clone(),
            });
        }
    }
    Plan { regions, units }
}

/// Canonical cliques of `PREFIX_DEPTH` elements through 0 that could still
/// grow to `min_size` elements.
fn canonical_prefixes<const W: usize>(
    region: &Region,
    n: usize,
    tables: &AffineTables,
    min_size: usize,
) -> Vec<Vec<usize>> {
    let g: Graph<W> = region.graph(n);
    let sizes = SizeFilter::single(PREFIX_DEPTH);
    let mut counter = NodeCounter::new(u64::MAX);
    let mut out = Vec::new();
    let mut walk = OrderlyWalk {
        graph: &g,
        tables: Some(tables),
        sizes: &sizes,
        coloring_bound: true,
        counter: &mut counter,
        emit: |elems: &[usize], set: &Bits<W>, _: &mut NodeCounter| {
            let mut cand = Bits::<W>::full(n).above(elems[elems.len() - 1]);
            for x in set.iter() {
                cand = cand.and(&g.adj[x]);
            }
            if cand.count() + PREFIX_DEPTH >= min_size {
                out.push(elems.to_vec());
            }
            Ok(())
        },
    };
    walk.run(&mut vec![0], Bits::singleton(0), g.adj[0].above(0))
        .expect("unlimited counter");
    out
}
