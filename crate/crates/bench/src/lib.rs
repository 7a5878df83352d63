//! Fixed inputs shared by the criterion benches, so every run measures the
//! same instances.

use polychrome::gallery;
use polychrome::graph::Graph;
use polychrome::matroid::Matroid;
use polychrome::polymatroid::Polymatroid;

/// Polymatroids for the decomposition search, smallest first.
pub fn search_fixtures() -> Vec<(&'static str, Polymatroid)> {
    vec![
        ("boolean-cycle-5", gallery::boolean_cycle(5).unwrap().polymatroid),
        ("three-poly", gallery::three_poly_example().polymatroid),
        ("tree-2-2", gallery::tree_example(2, 2).unwrap().polymatroid),
        ("boolean-cycle-7", gallery::boolean_cycle(7).unwrap().polymatroid),
    ]
}

/// Rank tables at the top of the supported size, for axiom checking.
pub fn validation_fixtures() -> Vec<(&'static str, Vec<i64>, usize)> {
    let wide = |p: Polymatroid| {
        let n = p.n();
        (p.table().iter().map(|&r| i64::from(r)).collect(), n)
    };
    let (uniform, n_uniform) = wide(Matroid::uniform(4, (1 << 14) - 1, 14).unwrap().polymatroid().clone());
    let (affine, n_affine) = wide(gallery::affine_plane(3).unwrap().polymatroid);
    vec![("uniform-4-14", uniform, n_uniform), ("affine-3", affine, n_affine)]
}

pub fn graph_fixtures() -> Vec<(&'static str, Graph)> {
    vec![
        ("cycle-10", Graph::cycle(10)),
        ("complete-8", Graph::complete(8)),
        ("petersen", petersen()),
    ]
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::new(10, &edges).unwrap()
}

/// The pair `(U_{1,4}, U_{3,4})`, whose mixing graph touches every proper
/// nonempty subset.
pub fn mixing_fixture() -> (Matroid, Matroid) {
    let full = 0b1111;
    (Matroid::uniform(1, full, 4).unwrap(), Matroid::uniform(3, full, 4).unwrap())
}
