use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};

/// Decomposes `K_n` (`n` even) into `n/2` Hamiltonian paths, one per color.
///
/// Path `j` is the zig-zag `j, j+1, j-1, j+2, j-2, …, j+n/2` taken mod `n`.
/// Its edges realize every difference `1..n-1` once, and shifting `j` over
/// `0..n/2` covers each pair exactly once.
pub fn forest_partition_coloring(n: usize) -> Result<EdgeColoring> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::OddVertexCount(n));
    }
    let half = n / 2;
    let mut colors = vec![usize::MAX; crate::coloring::pair_count(n)];
    for j in 0..half {
        let path = zigzag(n, j);
        for w in path.windows(2) {
            let (u, v) = (w[0].min(w[1]), w[0].max(w[1]));
            let slot = &mut colors[crate::coloring::pair_index(n, u, v)];
            if *slot != usize::MAX {
                return Err(Error::Internal(format!("pair {{{u}, {v}}} covered twice")));
            }
            *slot = j;
        }
    }
    EdgeColoring::from_colors(n, half, colors)
}

fn zigzag(n: usize, start: usize) -> Vec<usize> {
    let mut path = Vec::with_capacity(n);
    path.push(start);
    for t in 1..=n / 2 {
        path.push((start + t) % n);
        if path.len() < n {
            path.push((start + n - t) % n);
        }
    }
    path
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_connected, is_forest};

    fn check_classes(n: usize) {
        let c = forest_partition_coloring(n).unwrap();
        assert_eq!(c.k(), n / 2);
        let mut total = 0;
        for xi in 0..c.k() {
            let class = c.color_class(xi);
            assert_eq!(class.edge_count(), n - 1, "class {xi} of K_{n}");
            assert!(is_forest(&class));
            assert!(is_connected(&class));
            total += class.edge_count();
        }
        assert_eq!(total, n * (n - 1) / 2);
    }

    #[test]
    fn classes_are_spanning_paths() {
        for n in [2, 4, 6, 8, 10, 16] {
            check_classes(n);
        }
    }

    #[test]
    fn class_degrees_at_most_two() {
        let c = forest_partition_coloring(8).unwrap();
        for xi in 0..4 {
            let class = c.color_class(xi);
            assert!((0..8).all(|v| class.degree(v) <= 2));
        }
    }

    #[test]
    fn odd_rejected() {
        assert_eq!(forest_partition_coloring(5), Err(Error::OddVertexCount(5)));
        assert_eq!(forest_partition_coloring(0), Err(Error::OddVertexCount(0)));
    }

    #[test]
    fn two_vertices() {
        let c = forest_partition_coloring(2).unwrap();
        assert_eq!(c.k(), 1);
        assert_eq!(c.colors(), &[0]);
    }
}
