//! Batch verification suites.
//!
//! Each poset runs through every check that fits the scope; results come back
//! in input order whatever the thread count. [`Mutation`] deliberately breaks
//! one operator in one check, so a test can confirm the suite notices.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use crate::chain::{
    dilworth_min, enumerate_chain_decompositions, is_chain_decomposition, max_antichain,
    DecompositionFilter,
};
use crate::cut::{self, admissible_cuts, make_cut, random_admissible_cuts, Cut, Part};
use crate::error::{Error, Result};
use crate::hcd::{self, lipschitz_check, mhcd, mhcd_with_order, Hcd, MergeOrder};
use crate::matrix::IntMatrix;
use crate::nccd::{
    build_plane_tree, canonical_linear_extension_b, concat_permutation, count_nccds, derive_e,
    is_132_avoiding, is_132e_avoiding, is_noncrossing, min_nccd, p_descents,
    segments_to_decomposition, verify_inequality_chain,
};
use crate::poset::{
    enumerate_posets, generate, is_linear_extension, linear_extensions, mobius, Family, Poset,
    PosetPermutation,
};
use crate::report::{compact, CheckOutcome, Finding, PosetOutcome, SuiteSummary, Tally};
use crate::scope::Scope;

/// One flipped operator in one check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mutation {
    /// `|chains| != |antichain|` instead of `==`.
    Dilworth,
    /// `Min_h < oracle minimum` instead of `==`.
    Mhcd,
    /// Upper bound `2m` instead of `2m + 1`.
    Lipschitz,
    /// `+` instead of `−` on the product term.
    CutIdentity,
    /// `!=` instead of `==` in the subgroup-order divisibility test.
    Embedding,
    /// `<` instead of `≤` between consecutive quantities.
    Inequality,
    /// `!=` instead of `==` between segment count and p-descents.
    Segments,
    /// `!=` instead of `==` against the Catalan recurrence.
    Catalan,
    /// `!=` instead of `==` in `Min_nc = 1 ⟺ total order`.
    TotalOrder,
}

impl Mutation {
    pub const ALL: [Mutation; 9] = [
        Mutation::Dilworth,
        Mutation::Mhcd,
        Mutation::Lipschitz,
        Mutation::CutIdentity,
        Mutation::Embedding,
        Mutation::Inequality,
        Mutation::Segments,
        Mutation::Catalan,
        Mutation::TotalOrder,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Mutation::Dilworth => "dilworth",
            Mutation::Mhcd => "mhcd",
            Mutation::Lipschitz => "lipschitz",
            Mutation::CutIdentity => "cut-identity",
            Mutation::Embedding => "embedding",
            Mutation::Inequality => "inequality",
            Mutation::Segments => "segments",
            Mutation::Catalan => "catalan",
            Mutation::TotalOrder => "total-order",
        }
    }
}

impl fmt::Display for Mutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Mutation::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidParams(format!("unknown mutation `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Suite {
    /// Every labeled poset with `n <= nmax`; admissible cuts enumerated.
    Exhaustive { nmax: usize },
    /// `count` posets on `n` elements, alternating between random DAG closures
    /// and nested-chain posets; admissible cuts sampled.
    Random {
        n: usize,
        count: usize,
        seed: u64,
        density: f64,
    },
}

impl Suite {
    pub fn name(&self) -> String {
        match self {
            Suite::Exhaustive { nmax } => format!("exhaustive nmax={nmax}"),
            Suite::Random { n, count, seed, density } => {
                format!("random n={n} count={count} seed={seed} density={density}")
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub scope: Scope,
    pub mutation: Option<Mutation>,
    /// Sampled admissible cuts per poset in the random suite.
    pub cuts_per_poset: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            scope: Scope::default(),
            mutation: None,
            cuts_per_poset: 100,
        }
    }
}

impl VerifyOptions {
    fn mutated(&self, m: Mutation) -> bool {
        self.mutation == Some(m)
    }
}

/// The posets of a suite with their family names, in suite order.
pub fn suite_posets(suite: &Suite, scope: &Scope) -> Result<Vec<(String, Poset)>> {
    match *suite {
        Suite::Exhaustive { nmax } => {
            // refuse before doing any work
            Scope::check(
                "exhaustive verification",
                nmax,
                scope.exhaustive_posets,
                "use `verify random` for larger posets",
            )?;
            let mut out = Vec::new();
            for n in 0..=nmax {
                out.extend(enumerate_posets(n, scope)?.into_iter().map(|p| ("labeled".to_string(), p)));
            }
            Ok(out)
        }
        Suite::Random { n, count, seed, density } => {
            if !(0.0..=1.0).contains(&density) {
                return Err(Error::InvalidParams(format!("density {density} outside [0, 1]")));
            }
            (0..count)
                .map(|i| {
                    let family = if i % 2 == 0 {
                        Family::Random { n, density }
                    } else {
                        Family::Nested { n }
                    };
                    let p = generate(&family, seed.wrapping_add(i as u64))?;
                    Ok((family.name().to_string(), p))
                })
                .collect()
        }
    }
}

/// Checks, findings, skips and timings for one poset.
#[derive(Debug, Default)]
struct Collector {
    checks: Vec<CheckOutcome>,
    findings: Vec<Finding>,
    skipped: Vec<String>,
    timings: BTreeMap<String, u64>,
}

impl Collector {
    fn run(&mut self, name: &str, f: impl FnOnce(&mut Vec<Finding>) -> std::result::Result<(), String>) {
        let start = Instant::now();
        let outcome = CheckOutcome::from_result(name, f(&mut self.findings));
        *self.timings.entry(name.to_string()).or_default() += start.elapsed().as_micros() as u64;
        self.checks.push(outcome);
    }

    fn skip(&mut self, name: &str) {
        self.skipped.push(name.to_string());
    }
}

fn ensure(cond: bool, witness: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(witness())
    }
}

fn labels(p: &Poset, xs: &[usize]) -> String {
    xs.iter().map(|&x| p.label(x)).collect::<Vec<_>>().join(" ")
}

fn chains_text(p: &Poset, chains: &[Vec<usize>]) -> String {
    chains
        .iter()
        .map(|c| format!("{{{}}}", labels(p, c)))
        .collect::<Vec<_>>()
        .join(" ")
}

fn check_dilworth(p: &Poset, opts: &VerifyOptions) -> std::result::Result<(), String> {
    let d = dilworth_min(p);
    let a = max_antichain(p);
    ensure(is_chain_decomposition(p, d.chains()), || format!("invalid decomposition {}", chains_text(p, d.chains())))?;
    ensure(p.is_antichain(&a), || format!("{{{}}} is not an antichain", labels(p, &a)))?;
    let same = if opts.mutated(Mutation::Dilworth) {
        d.len() != a.len()
    } else {
        d.len() == a.len()
    };
    ensure(same, || format!("{} chains but antichain {{{}}} of size {}", d.len(), labels(p, &a), a.len()))?;
    if p.len() <= 6 {
        let brute = enumerate_chain_decompositions(p, DecompositionFilter::Any, &Scope::unlimited())
            .map_err(|e| e.to_string())?
            .iter()
            .map(|c| c.len())
            .min()
            .unwrap_or(0);
        ensure(brute == d.len(), || format!("brute-force minimum {brute}, matching gives {}", d.len()))?;
    }
    Ok(())
}

fn check_mhcd(p: &Poset, h: &Hcd, opts: &VerifyOptions) -> std::result::Result<(), String> {
    for s in 0..20u64 {
        let other = mhcd_with_order(p, MergeOrder::Shuffled(s));
        ensure(&other == h, || {
            format!(
                "merge order {s} gives {} instead of {}",
                chains_text(p, other.chains()),
                chains_text(p, h.chains())
            )
        })?;
    }
    let min = dilworth_min(p).len();
    ensure(min <= h.len() && h.len() <= p.len(), || format!("Min {min}, Min_h {}, n {}", h.len(), p.len()))?;
    if p.len() <= 7 {
        let all = enumerate_chain_decompositions(p, DecompositionFilter::Homogeneous, &Scope::unlimited())
            .map_err(|e| e.to_string())?;
        let best = all.iter().map(|c| c.len()).min().unwrap_or(0);
        let attaining: Vec<_> = all.iter().filter(|c| c.len() == best).collect();
        let matches = if opts.mutated(Mutation::Mhcd) {
            h.len() < best
        } else {
            h.len() == best
        };
        ensure(matches, || format!("oracle minimum {best}, merging gives {}", h.len()))?;
        ensure(attaining.len() == 1, || {
            format!("{} homogeneous decompositions with {best} chains", attaining.len())
        })?;
        ensure(attaining[0].chains() == h.chains(), || {
            format!(
                "oracle {} differs from {}",
                chains_text(p, attaining[0].chains()),
                chains_text(p, h.chains())
            )
        })?;
    }
    Ok(())
}

fn check_lipschitz(p: &Poset, opts: &VerifyOptions) -> std::result::Result<(), String> {
    for z in 0..p.len() {
        let c = lipschitz_check(p, z).map_err(|e| e.to_string())?;
        let upper = if opts.mutated(Mutation::Lipschitz) {
            c.min_h <= 2 * c.min_h_without
        } else {
            c.upper_ok
        };
        ensure(c.lower_ok && upper, || {
            format!(
                "z = {}: Min_h(P) = {}, Min_h(P - z) = {}",
                p.label(z),
                c.min_h,
                c.min_h_without
            )
        })?;
    }
    Ok(())
}

/// `D` from Möbius values of the scoped sub-poset (the chain-sum oracle).
pub fn d_matrix_by_mobius(p: &Poset, h: &Hcd, part: Part, c: Option<&Cut>) -> Result<IntMatrix> {
    let elems: Vec<usize> = match part {
        Part::Whole => (0..p.len()).collect(),
        _ => c.ok_or(Error::MissingCut)?.elements(part),
    };
    let q = p.induced(&elems);
    let mu = mobius(&q);
    let mut local = vec![usize::MAX; p.len()];
    for (i, &x) in elems.iter().enumerate() {
        local[x] = i;
    }
    let k = h.len();
    let mut d = IntMatrix::zeros(k);
    for i in 0..k {
        for j in 0..k {
            let mut acc = 0i128;
            for &x in h.chain(i) {
                for &y in h.chain(j) {
                    if local[x] != usize::MAX && local[y] != usize::MAX {
                        acc += mu.get(local[x], local[y]) as i128;
                    }
                }
            }
            d.set(i, j, acc);
        }
    }
    Ok(d)
}

fn compare_d(p: &Poset, h: &Hcd, part: Part, c: Option<&Cut>) -> std::result::Result<(), String> {
    let dp = cut::d_matrix(p, h, part, c).map_err(|e| e.to_string())?;
    let mo = d_matrix_by_mobius(p, h, part, c).map_err(|e| e.to_string())?;
    ensure(dp == mo, || format!("{part:?} D {:?} but Möbius sums {:?}", dp.rows(), mo.rows()))
}

fn check_cuts(
    p: &Poset,
    h: &Hcd,
    exhaustive: bool,
    seed: u64,
    opts: &VerifyOptions,
    findings: &mut Vec<Finding>,
) -> std::result::Result<(), String> {
    compare_d(p, h, Part::Whole, None)?;
    let cuts = if exhaustive {
        admissible_cuts(p, h)
    } else {
        random_admissible_cuts(p, h, opts.cuts_per_poset, seed)
    };
    for (i, c) in cuts.iter().enumerate() {
        if i < 4 {
            compare_d(p, h, Part::Lower, Some(c))?;
            compare_d(p, h, Part::Upper, Some(c))?;
        }
        let r = cut::identity_report(p, h, c, opts.mutated(Mutation::CutIdentity)).map_err(|e| e.to_string())?;
        ensure(r.hypothesis_met, || format!("sampled cut {:?} is not admissible", c.heights()))?;
        ensure(r.equal, || {
            format!(
                "heights {:?}: DJ = {:?}, right side = {:?}",
                c.heights(),
                r.lhs.rows(),
                r.rhs.rows()
            )
        })?;
    }
    if !cuts.is_empty() && cut::j_matrix(h).determinant().map_err(|e| e.to_string())? == 0 {
        findings.push(Finding::new("j_singular", format!("{} admissible cuts", cuts.len())));
    }
    if exhaustive && h.chains().iter().all(|c| c.len() >= 2) {
        // proper but inadmissible cuts: the identity is not claimed there
        let mut hs = vec![1usize; h.len()];
        'outer: loop {
            let c = make_cut(h, &hs).map_err(|e| e.to_string())?;
            if !c.is_admissible(p, h) {
                let r = cut::verify_cut_identity(p, h, &c).map_err(|e| e.to_string())?;
                if !r.equal {
                    findings.push(Finding::new(
                        "identity_fails_without_hypothesis",
                        format!("heights {hs:?}, discrepancy {}", r.max_discrepancy),
                    ));
                }
            }
            for i in (0..hs.len()).rev() {
                if hs[i] + 1 < h.chain(i).len() {
                    hs[i] += 1;
                    continue 'outer;
                }
                hs[i] = 1;
            }
            break;
        }
    }
    Ok(())
}

fn check_embedding(p: &Poset, opts: &VerifyOptions, findings: &mut Vec<Finding>) -> std::result::Result<(), String> {
    let r = hcd::verify_embedding(p, &opts.scope).map_err(|e| e.to_string())?;
    ensure(r.passed(), || r.witness.clone().unwrap_or_else(|| format!("{r:?}")))?;
    // the image is a subgroup of order |Aut(P)|
    for (name, target) in [("oriented", r.aut_oriented_in_op), ("graph", r.aut_graph_in_op)] {
        let divides = if opts.mutated(Mutation::Embedding) {
            target % r.aut_poset != 0
        } else {
            target % r.aut_poset == 0
        };
        ensure(divides, || format!("|Aut(P)| = {} does not divide the {name} target order {target}", r.aut_poset))?;
    }
    if !r.onto_oriented {
        findings.push(Finding::new(
            "embedding_not_onto",
            format!("|Aut(P)| = {}, target {}", r.aut_poset, r.aut_oriented_in_op),
        ));
    }
    Ok(())
}

fn relation(a: usize, b: usize) -> &'static str {
    if a == b {
        "="
    } else if a < b {
        "<"
    } else {
        ">"
    }
}

fn check_inequalities(p: &Poset, opts: &VerifyOptions, findings: &mut Vec<Finding>) -> std::result::Result<(), String> {
    let r = verify_inequality_chain(p, &opts.scope).map_err(|e| e.to_string())?;
    let v = r.values();
    let holds = (0..4).all(|i| {
        if opts.mutated(Mutation::Inequality) {
            v[i] < v[i + 1]
        } else {
            v[i] <= v[i + 1]
        }
    });
    ensure(holds, || format!("Min, Min_nc, Min_d, Min_d^e, Min_h = {v:?} with e = {}", r.e.join(" ")))?;
    ensure(r.passed(), || {
        format!(
            "pipeline: e = {} (extension {}), π = {} (132-avoiding {}, 132^e-avoiding {}, {} p-descents)",
            r.e.join(" "),
            r.e_is_linear_extension,
            r.pi.join(" "),
            r.pi_132_avoiding,
            r.pi_132e_avoiding,
            r.pi_descents
        )
    })?;
    let pattern: Vec<&str> = (0..4).map(|i| relation(v[i], v[i + 1])).collect();
    findings.push(Finding::new(
        &format!("pattern Min {} Min_nc {} Min_d {} Min_d^e {} Min_h", pattern[0], pattern[1], pattern[2], pattern[3]),
        format!("{v:?}"),
    ));
    for f in &r.case_order_findings {
        findings.push(Finding::new("case_order_clause", format!("{f:?}")));
    }
    Ok(())
}

/// The constructive half when the permutation searches are out of scope.
fn check_inequalities_partial(p: &Poset, opts: &VerifyOptions) -> std::result::Result<(), String> {
    let h = mhcd(p);
    let min = dilworth_min(p).len();
    let min_nc = min_nccd(p, &opts.scope).map_err(|e| e.to_string())?.0;
    let ok = if opts.mutated(Mutation::Inequality) {
        min < min_nc && min_nc < h.len()
    } else {
        min <= min_nc && min_nc <= h.len()
    };
    ensure(ok, || format!("Min {min}, Min_nc {min_nc}, Min_h {}", h.len()))?;
    let canon = canonical_linear_extension_b(p, &h).map_err(|e| e.to_string())?;
    let pi = concat_permutation(p, &h, &canon.order).map_err(|e| e.to_string())?;
    let tree = build_plane_tree(p, &h, &canon.order).map_err(|e| e.to_string())?;
    let e = derive_e(p, &tree).map_err(|e| e.to_string())?;
    ensure(is_linear_extension(p, &e), || format!("e = {} is not a linear extension", e.display(p)))?;
    let avoids = is_132e_avoiding(p, &e, &pi).map_err(|e| e.to_string())?;
    ensure(avoids, || format!("π = {} contains 132 relative to e = {}", pi.display(p), e.display(p)))
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for m in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<usize>| {
                (0..=v.len()).map(move |i| {
                    let mut w = v.clone();
                    w.insert(i, m);
                    w
                })
            })
            .collect();
    }
    out
}

fn check_segments(p: &Poset, opts: &VerifyOptions) -> std::result::Result<(), String> {
    for o in all_permutations(p.len()) {
        let pi = PosetPermutation::new(p, o).map_err(|e| e.to_string())?;
        if !is_132_avoiding(p, &pi).map_err(|e| e.to_string())? {
            continue;
        }
        let d = p_descents(p, &pi).map_err(|e| e.to_string())?.count();
        let seg = segments_to_decomposition(p, &pi).map_err(|e| e.to_string())?;
        let nc = is_noncrossing(p, &seg).map_err(|e| e.to_string())?;
        let size_ok = if opts.mutated(Mutation::Segments) {
            seg.len() != d
        } else {
            seg.len() == d
        };
        ensure(nc && size_ok, || {
            format!(
                "π = {}: segments {} ({} chains, noncrossing {nc}), d = {d}",
                pi.display(p),
                chains_text(p, seg.chains()),
                seg.len()
            )
        })?;
    }
    Ok(())
}

fn check_avoidance_nesting(p: &Poset, opts: &VerifyOptions) -> std::result::Result<(), String> {
    let exts = linear_extensions(p, &opts.scope).map_err(|e| e.to_string())?;
    for o in all_permutations(p.len()) {
        let pi = PosetPermutation::new(p, o).map_err(|e| e.to_string())?;
        if is_132_avoiding(p, &pi).map_err(|e| e.to_string())? {
            continue;
        }
        for e in &exts {
            let bad = is_132e_avoiding(p, e, &pi).map_err(|e| e.to_string())?;
            ensure(!bad, || {
                format!("π = {} avoids 132 relative to e = {} but not in P", pi.display(p), e.display(p))
            })?;
        }
    }
    Ok(())
}

fn check_total_order(p: &Poset, opts: &VerifyOptions) -> std::result::Result<(), String> {
    let m = min_nccd(p, &opts.scope).map_err(|e| e.to_string())?.0;
    let agree = if opts.mutated(Mutation::TotalOrder) {
        (m == 1) != p.is_total_order()
    } else {
        (m == 1) == p.is_total_order()
    };
    ensure(agree, || format!("Min_nc = {m}, total order {}", p.is_total_order()))
}

fn verify_poset(p: &Poset, exhaustive: bool, seed: u64, opts: &VerifyOptions) -> Collector {
    let s = &opts.scope;
    let n = p.len();
    let mut c = Collector::default();
    c.run("dilworth", |_| check_dilworth(p, opts));
    let h = mhcd(p);
    c.run("mhcd", |_| check_mhcd(p, &h, opts));
    c.run("lipschitz", |_| check_lipschitz(p, opts));
    c.run("cut_identity", |f| check_cuts(p, &h, exhaustive, seed, opts, f));
    if n <= s.automorphisms && h.len() <= s.graph_automorphisms {
        c.run("embedding", |f| check_embedding(p, opts, f));
    } else {
        c.skip("embedding");
    }
    if n <= s.noncrossing && n <= s.permutations {
        c.run("inequality", |f| check_inequalities(p, opts, f));
    } else if n <= s.noncrossing {
        c.run("inequality", |_| check_inequalities_partial(p, opts));
        c.skip("inequality:min_d");
    } else {
        c.skip("inequality");
    }
    if n <= 6 && n <= s.permutations {
        c.run("segments", |_| check_segments(p, opts));
    } else {
        c.skip("segments");
    }
    if n <= 5 && n <= s.linear_extensions {
        c.run("avoidance_nesting", |_| check_avoidance_nesting(p, opts));
    } else {
        c.skip("avoidance_nesting");
    }
    if n >= 1 && n <= s.noncrossing {
        c.run("total_order", |_| check_total_order(p, opts));
    }
    c
}

fn catalan_by_recurrence(m: usize) -> Vec<u64> {
    let mut c = vec![1u64];
    for k in 1..=m {
        c.push((0..k).map(|i| c[i] * c[k - 1 - i]).sum());
    }
    c
}

/// Checks that do not depend on the suite's posets.
pub fn global_checks(opts: &VerifyOptions) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    let catalan = catalan_by_recurrence(8);
    let res: std::result::Result<(), String> = (|| {
        for n in 1..=8 {
            let chain = generate(&Family::Chain { n }, 0).map_err(|e| e.to_string())?;
            let count = count_nccds(&chain, &opts.scope).map_err(|e| e.to_string())?;
            let ok = if opts.mutated(Mutation::Catalan) {
                count != catalan[n]
            } else {
                count == catalan[n]
            };
            ensure(ok, || format!("chain({n}) has {count} noncrossing decompositions, Catalan {}", catalan[n]))?;
        }
        Ok(())
    })();
    out.push(CheckOutcome::from_result("catalan", res));

    let res: std::result::Result<(), String> = (|| {
        for k in 1..=5 {
            let f = generate(&Family::Fig2 { k }, 0).map_err(|e| e.to_string())?;
            let z = f.index_of("z").map_err(|e| e.to_string())?;
            let c = lipschitz_check(&f, z).map_err(|e| e.to_string())?;
            let upper = if opts.mutated(Mutation::Lipschitz) {
                c.min_h <= 2 * c.min_h_without
            } else {
                c.upper_ok
            };
            ensure(c.lower_ok && upper && c.min_h == 2 * k + 1 && c.min_h_without == k, || {
                format!("fig2({k}): Min_h = {}, Min_h(P - z) = {}", c.min_h, c.min_h_without)
            })?;
        }
        Ok(())
    })();
    out.push(CheckOutcome::from_result("fig2_sharpness", res));
    out
}

fn thread_pool() -> rayon::ThreadPool {
    let threads = std::env::var("POSET_DECOMP_THREADS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(0);
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool")
}

/// Runs a suite, handing each poset's outcome to `emit` in suite order, and
/// returns the summary. Scope refusals surface as errors before any work.
pub fn run_suite(
    suite: &Suite,
    opts: &VerifyOptions,
    mut emit: impl FnMut(&PosetOutcome),
) -> Result<SuiteSummary> {
    let posets = suite_posets(suite, &opts.scope)?;
    let (exhaustive, seed) = match suite {
        Suite::Exhaustive { .. } => (true, 0),
        Suite::Random { seed, .. } => (false, *seed),
    };
    let results: Vec<Collector> = thread_pool().install(|| {
        posets
            .par_iter()
            .enumerate()
            .map(|(i, (_, p))| verify_poset(p, exhaustive, seed.wrapping_add(i as u64), opts))
            .collect()
    });

    let mut checks: BTreeMap<String, Tally> = BTreeMap::new();
    let mut findings: BTreeMap<String, u64> = BTreeMap::new();
    let mut timings: BTreeMap<String, u64> = BTreeMap::new();
    let mut passed = true;
    for (i, ((family, p), c)) in posets.iter().zip(results).enumerate() {
        for o in &c.checks {
            let t = checks.entry(o.name.clone()).or_default();
            if o.passed {
                t.passed += 1;
            } else {
                t.failed += 1;
            }
        }
        for s in &c.skipped {
            checks.entry(s.clone()).or_default().skipped += 1;
        }
        for f in &c.findings {
            *findings.entry(f.kind.clone()).or_default() += 1;
        }
        for (k, v) in &c.timings {
            *timings.entry(k.clone()).or_default() += v;
        }
        let failures: Vec<CheckOutcome> = c.checks.into_iter().filter(|o| !o.passed).collect();
        passed &= failures.is_empty();
        emit(&PosetOutcome {
            index: i,
            family: family.clone(),
            poset: crate::report::PosetSummary {
                n: p.len(),
                covers: p.covers().len(),
                text: compact(p),
            },
            passed: failures.is_empty(),
            failures,
            findings: c.findings,
            skipped: c.skipped,
        });
    }
    let start = Instant::now();
    let global = global_checks(opts);
    timings.insert("global".into(), start.elapsed().as_micros() as u64);
    for o in global {
        let t = checks.entry(o.name.clone()).or_default();
        if o.passed {
            t.passed += 1;
        } else {
            t.failed += 1;
            passed = false;
            emit(&PosetOutcome {
                index: posets.len(),
                family: "global".into(),
                poset: crate::report::PosetSummary {
                    n: 0,
                    covers: 0,
                    text: String::new(),
                },
                passed: false,
                failures: vec![o],
                findings: Vec::new(),
                skipped: Vec::new(),
            });
        }
    }
    Ok(SuiteSummary {
        suite: suite.name(),
        posets: posets.len(),
        passed,
        checks,
        findings,
        timings_us: timings,
    })
}
