//! Cross-solver invariants on seeded random graph pools: certificate
//! soundness, the star and kept-block upper bounds, the subset
//! minimization identity, and the sparse-regime equality.

use biclab::alpha::alpha;
use biclab::beta::beta;
use biclab::blocks::validate_decomposition;
use biclab::builders::{beta_decomposition, cover_decomposition, star_decomposition};
use biclab::graph::{gnp_sample, GnpParams, Graph};
use biclab::rng::stream_seed;
use biclab::sparse::{gamma_max, structural_condition};
use biclab::tau::{exact_tau, exact_tau_prime, tau_subset_min, TauPrime};

fn pool(n: usize, p: f64, count: u64, base: u64) -> impl Iterator<Item = Graph> {
    (0..count).map(move |t| {
        gnp_sample(&GnpParams {
            n,
            p,
            seed: stream_seed(base, t),
        })
    })
}

#[test]
fn tau_respects_both_upper_bounds() {
    for (idx, g) in pool(9, 0.5, 200, 0xA11CE).enumerate() {
        let (a, ind) = alpha(&g);
        let (b, hopt) = beta(&g);
        let (tau, cert) = exact_tau(&g, u64::MAX).unwrap();
        assert!(validate_decomposition(&g, &cert).passed, "sample {idx}");
        assert!(tau as usize <= 9 - a, "sample {idx}: tau > n - alpha");
        if b >= 1 {
            assert!(
                tau as usize <= 9 - b + 1,
                "sample {idx}: tau > n - beta + 1"
            );
        }

        let stars = star_decomposition(&g, &ind).unwrap();
        assert!(validate_decomposition(&g, &stars).passed);
        assert!(stars.len() <= 9 - a);
        // every non-witness vertex has positive degree -> exact count
        if ind.complement().iter().all(|v| g.degree(v) > 0) {
            assert_eq!(stars.len(), 9 - a, "sample {idx}");
        }

        if let Some(h) = hopt {
            let kept = beta_decomposition(&g, &h).unwrap();
            assert!(validate_decomposition(&g, &kept).passed);
            assert!(kept.len() <= 9 - b + 1);
        }
    }
}

#[test]
fn subset_minimization_equals_tau_on_eight_vertices() {
    for (idx, g) in pool(8, 0.5, 40, 0xBEE).enumerate() {
        let (tau, _) = exact_tau(&g, u64::MAX).unwrap();
        let (via_subsets, best_u) = tau_subset_min(&g, u64::MAX).unwrap();
        assert_eq!(tau, via_subsets, "sample {idx}");
        // and the minimizer really achieves the value
        let outside = 8 - best_u.len() as u32;
        let masked: Vec<(usize, usize)> = g
            .edges()
            .into_iter()
            .filter(|&(u, v)| best_u.contains(u) && best_u.contains(v))
            .collect();
        let sub = Graph::from_edges(8, &masked).unwrap();
        let achieved = exact_tau_prime(&sub, u64::MAX).unwrap().0.plus(outside);
        assert_eq!(achieved, TauPrime::Finite(tau), "sample {idx}");
    }
}

#[test]
fn tau_prime_infinite_when_an_edge_has_no_nontrivial_block() {
    // host-level check that some edge lies in no K_{2,2} of g
    fn edge_without_k22(g: &Graph) -> bool {
        g.edges().into_iter().any(|(u, v)| {
            !g.neighbors(v).iter().any(|w| {
                w != u
                    && g.neighbors(w)
                        .intersection(g.neighbors(u))
                        .iter()
                        .any(|z| z != v && z != w)
            })
        })
    }
    let mut hit = 0;
    for g in pool(7, 0.3, 120, 0xD06) {
        if g.edge_count() == 0 {
            continue;
        }
        if edge_without_k22(&g) {
            hit += 1;
            let (tp, _) = exact_tau_prime(&g, u64::MAX).unwrap();
            assert_eq!(tp, TauPrime::Infinite);
        }
    }
    assert!(hit > 20, "pool too tame to exercise the condition ({hit})");
}

#[test]
fn tau_prime_certificates_validate_and_match_kind() {
    // structured instances with known values
    let k26 = Graph::from_edges(
        8,
        &[
            (0, 2),
            (0, 3),
            (0, 4),
            (0, 5),
            (0, 6),
            (0, 7),
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 5),
            (1, 6),
            (1, 7),
        ],
    )
    .unwrap();
    let k33 = Graph::from_edges(
        6,
        &[
            (0, 3),
            (0, 4),
            (0, 5),
            (1, 3),
            (1, 4),
            (1, 5),
            (2, 3),
            (2, 4),
            (2, 5),
        ],
    )
    .unwrap();
    let two_c4 = Graph::from_edges(
        8,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (0, 3),
            (4, 5),
            (5, 6),
            (6, 7),
            (4, 7),
        ],
    )
    .unwrap();
    for (g, want) in [(Graph::cycle(4), 1), (k26, 1), (k33, 1), (two_c4, 2)] {
        let (tp, cert) = exact_tau_prime(&g, u64::MAX).unwrap();
        assert_eq!(tp, TauPrime::Finite(want));
        let cert = cert.unwrap();
        assert_eq!(cert.len() as u32, want);
        assert!(validate_decomposition(&g, &cert).passed);
        assert!(cert.blocks.iter().all(|b| b.is_nontrivial()));
    }

    // 3-cube: a block through a vertex covers 2 of its 3 edges (no two
    // vertices share three neighbors), and 3 = 2 + 1 would leave a star
    let cube = Graph::from_edges(
        8,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (0, 3),
            (4, 5),
            (5, 6),
            (6, 7),
            (4, 7),
            (0, 4),
            (1, 5),
            (2, 6),
            (3, 7),
        ],
    )
    .unwrap();
    assert_eq!(
        exact_tau_prime(&cube, u64::MAX).unwrap().0,
        TauPrime::Infinite
    );
    // C6 contains no 4-cycle at all
    assert_eq!(
        exact_tau_prime(&Graph::cycle(6), u64::MAX).unwrap().0,
        TauPrime::Infinite
    );

    // random pool: whenever tau' is finite, the certificate must check out
    for g in pool(8, 0.6, 80, 0xF1) {
        if let (TauPrime::Finite(tp), Some(cert)) = exact_tau_prime(&g, u64::MAX).unwrap() {
            assert_eq!(cert.len() as u32, tp);
            assert!(validate_decomposition(&g, &cert).passed);
            assert!(cert.blocks.iter().all(|b| b.is_nontrivial()));
        }
    }
}

#[test]
fn sparse_equality_on_structurally_clean_samples() {
    let mut checked = 0;
    for (idx, g) in pool(12, 0.1, 120, 0x5AB).enumerate() {
        if !structural_condition(&g).satisfied() {
            continue;
        }
        checked += 1;
        let (gamma, cover) = gamma_max(&g, u64::MAX).unwrap();
        assert!(cover.validate(&g).is_ok());
        let (tau, _) = exact_tau(&g, u64::MAX).unwrap();
        assert_eq!(12 - gamma as usize, tau as usize, "sample {idx}");
        let cert = cover_decomposition(&g, &cover).unwrap();
        assert!(validate_decomposition(&g, &cert).passed);
        assert_eq!(cert.len(), 12 - gamma as usize, "sample {idx}");
    }
    assert!(
        checked > 40,
        "too few structurally clean samples ({checked})"
    );
}

/// Is this edge set exactly a complete bipartite subgraph? Build its own
/// little graph, 2-color it, and demand |A| * |B| edges all present.
fn edge_group_is_biclique(edges: &[(usize, usize)]) -> bool {
    use std::collections::{HashMap, HashSet, VecDeque};
    let mut adj: HashMap<usize, HashSet<usize>> = HashMap::new();
    for &(u, v) in edges {
        adj.entry(u).or_default().insert(v);
        adj.entry(v).or_default().insert(u);
    }
    let verts: Vec<usize> = adj.keys().copied().collect();
    let start = verts[0];
    let mut color: HashMap<usize, bool> = HashMap::new();
    let mut queue = VecDeque::from([start]);
    color.insert(start, false);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[&v] {
            let want = !color[&v];
            match color.get(&w) {
                None => {
                    color.insert(w, want);
                    queue.push_back(w);
                }
                Some(&c) if c != want => return false, // odd cycle
                _ => {}
            }
        }
    }
    if color.len() != verts.len() {
        return false; // disconnected
    }
    let a = color.values().filter(|&&c| c).count();
    let b = verts.len() - a;
    a >= 1 && b >= 1 && edges.len() == a * b
}

/// Independent tau oracle for tiny graphs: enumerate every partition of
/// the edge list into groups and keep the best one whose groups are all
/// complete bipartite.
fn tau_brute(g: &Graph) -> u32 {
    let edges = g.edges();
    let m = edges.len();
    if m == 0 {
        return 0;
    }
    fn rec(
        edges: &[(usize, usize)],
        idx: usize,
        groups: &mut Vec<Vec<(usize, usize)>>,
        best: &mut u32,
    ) {
        if groups.len() as u32 >= *best {
            return;
        }
        if idx == edges.len() {
            if groups.iter().all(|grp| edge_group_is_biclique(grp)) {
                *best = groups.len() as u32;
            }
            return;
        }
        let open = groups.len();
        for i in 0..open {
            groups[i].push(edges[idx]);
            rec(edges, idx + 1, groups, best);
            groups[i].pop();
        }
        groups.push(vec![edges[idx]]);
        rec(edges, idx + 1, groups, best);
        groups.pop();
    }
    let mut best = m as u32; // singleton edges are always a valid partition
    rec(&edges, 0, &mut Vec::new(), &mut best);
    best
}

#[test]
fn tau_matches_partition_enumeration_oracle() {
    // fixed graphs
    for (g, want) in [
        (Graph::complete(4), 3),
        (Graph::cycle(4), 1),
        (Graph::cycle(5), 3),
        (Graph::path(4), 2),
    ] {
        assert_eq!(exact_tau(&g, u64::MAX).unwrap().0, want);
        assert_eq!(tau_brute(&g), want);
    }
    // random pool kept tiny so the Bell-number enumeration stays sane
    let mut compared = 0;
    for g in pool(6, 0.4, 60, 0x7A0) {
        if g.edge_count() > 8 {
            continue;
        }
        compared += 1;
        let (tau, cert) = exact_tau(&g, u64::MAX).unwrap();
        assert_eq!(tau, tau_brute(&g), "edges: {:?}", g.edges());
        assert!(validate_decomposition(&g, &cert).passed);
    }
    assert!(compared > 20, "pool too dense ({compared} compared)");
}

/// Independent gamma oracle: scan all vertex subsets and test the
/// component condition directly.
fn gamma_brute(g: &Graph) -> u32 {
    use biclab::bitset::VertexSet;
    use biclab::graph::induced_subgraph;
    let n = g.n();
    let mut best = 0u32;
    for mask in 0u32..(1 << n) {
        let s = VertexSet::from_iter(n, (0..n).filter(|&v| mask >> v & 1 == 1));
        let (h, _) = induced_subgraph(g, &s).unwrap();
        // every component must be a single vertex or a 4-cycle
        let hn = h.n();
        let mut seen = vec![false; hn];
        let mut ok = true;
        let mut cycles = 0u32;
        for start in 0..hn {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for w in h.neighbors(v).iter() {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            let comp_edges: usize = comp.iter().map(|&v| h.degree(v)).sum::<usize>() / 2;
            match (comp.len(), comp_edges) {
                (1, 0) => {}
                (4, 4) if comp.iter().all(|&v| h.degree(v) == 2) => cycles += 1,
                _ => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            best = best.max(s.len() as u32 - cycles);
        }
    }
    best
}

#[test]
fn gamma_matches_subset_enumeration_oracle() {
    for g in pool(10, 0.12, 40, 0x6B1) {
        let (gamma, cover) = gamma_max(&g, u64::MAX).unwrap();
        assert_eq!(gamma, gamma_brute(&g), "edges: {:?}", g.edges());
        assert!(cover.validate(&g).is_ok());
        assert_eq!(cover.gamma() as u32, gamma);
    }
    // denser pool where C4 pieces actually conflict
    for g in pool(9, 0.3, 25, 0x6B2) {
        let (gamma, _) = gamma_max(&g, u64::MAX).unwrap();
        assert_eq!(gamma, gamma_brute(&g), "edges: {:?}", g.edges());
    }
}

#[test]
fn gamma_never_exceeds_what_tau_allows() {
    // n - gamma is always an upper bound certificate size, so tau <= n - gamma
    for g in pool(10, 0.15, 60, 0x9A) {
        let (gamma, cover) = gamma_max(&g, u64::MAX).unwrap();
        let cert = cover_decomposition(&g, &cover).unwrap();
        assert!(validate_decomposition(&g, &cert).passed);
        let (tau, _) = exact_tau(&g, u64::MAX).unwrap();
        assert!(tau as usize <= 10 - gamma as usize);
    }
}
