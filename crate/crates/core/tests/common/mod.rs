#![allow(dead_code)]

use lamclust::graph::{gen_complete, gen_cycle, gen_gnp, gen_path, gen_ring, gen_star, Graph};

pub struct Named {
    pub name: String,
    pub graph: Graph,
}

fn named(name: impl Into<String>, graph: Graph) -> Named {
    Named {
        name: name.into(),
        graph,
    }
}

/// First connected `G(n, p)` draw at or after `seed`.
pub fn connected_gnp(n: usize, p: f64, seed: u64) -> (Graph, u64) {
    (seed..)
        .map(|s| (gen_gnp(n, p, s).unwrap(), s))
        .find(|(g, _)| g.is_connected())
        .unwrap()
}

/// 32 connected graphs on at most 10 nodes.
pub fn corpus() -> Vec<Named> {
    let mut out = Vec::new();
    for k in 2..=3 {
        out.push(named(format!("ring{k}"), gen_ring(k).unwrap()));
    }
    for n in 4..=9 {
        out.push(named(format!("star{n}"), gen_star(n).unwrap()));
    }
    for n in 4..=10 {
        out.push(named(format!("path{n}"), gen_path(n).unwrap()));
    }
    for n in [4, 5] {
        out.push(named(format!("K{n}"), gen_complete(n).unwrap()));
    }
    for n in [5, 7] {
        out.push(named(format!("cycle{n}"), gen_cycle(n).unwrap()));
    }
    out.push(named(
        "barbell",
        Graph::new(6, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)]).unwrap(),
    ));
    for n in 6..=9 {
        for (i, p) in [0.3, 0.5, 0.8].into_iter().enumerate() {
            let (g, seed) = connected_gnp(n, p, 1000 * n as u64 + 10 * i as u64);
            out.push(named(format!("gnp{n}-{p}-s{seed}"), g));
        }
    }
    out
}

/// The corpus restricted to graphs with at most `n` nodes.
pub fn corpus_up_to(n: usize) -> Vec<Named> {
    corpus().into_iter().filter(|g| g.graph.n() <= n).collect()
}
