use std::collections::{HashMap, VecDeque};
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// A vertex of the Farey graph: a coprime pair up to simultaneous sign,
/// stored with `p > 0`, or `p = 0, q = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PrimitiveClass {
    pub p: i64,
    pub q: i64,
}

impl PrimitiveClass {
    pub fn new(p: i64, q: i64) -> Result<PrimitiveClass> {
        if p.gcd(&q) != 1 {
            return Err(Error::Config(format!("slope ({p},{q}) is not coprime")));
        }
        Ok(if p < 0 || (p == 0 && q < 0) {
            PrimitiveClass { p: -p, q: -q }
        } else {
            PrimitiveClass { p, q }
        })
    }

    pub fn is_adjacent(self, other: PrimitiveClass) -> bool {
        (self.p * other.q - self.q * other.p).abs() == 1
    }
}

impl fmt::Display for PrimitiveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// `u·a + v·b = 1` for coprime `a`, `b`.
fn bezout(a: i64, b: i64) -> (i64, i64) {
    let e = a.extended_gcd(&b);
    if e.gcd == 1 {
        (e.x, e.y)
    } else {
        (-e.x, -e.y)
    }
}

/// Vertices of the triangles crossed by the hyperbolic geodesic from `∞` to
/// `a/b` (`b > 1`), as pairs `(numerator, denominator)`.
fn ladder(a: i64, b: i64) -> Vec<(i64, i64)> {
    let mut out = vec![(1, 0)];
    let (mut h2, mut k2, mut h1, mut k1) = (0i64, 1i64, 1i64, 0i64);
    let (mut n, mut d) = (a, b);
    let mut first = true;
    while d != 0 {
        let (q, r) = n.div_mod_floor(&d);
        if first {
            out.push((q, 1));
            out.push((q + 1, 1));
            first = false;
        } else {
            for j in 1..=q + 1 {
                out.push((j * h1 + h2, j * k1 + k2));
            }
        }
        (h2, k2, h1, k1) = (h1, k1, q * h1 + h2, q * k1 + k2);
        (n, d) = (d, r);
    }
    out
}

/// Distance in the Farey graph. One endpoint is moved to `∞` by an
/// element of SL₂(ℤ); a shortest path then stays among the vertices of the
/// triangles crossed by the geodesic, which are read off the continued
/// fraction of the image of the other endpoint.
pub fn farey_distance(x: PrimitiveClass, y: PrimitiveClass) -> usize {
    let (u, v) = bezout(x.p, x.q);
    // [[u, v], [-q, p]] sends (p, q) to (1, 0).
    let (mut a, mut b) = (u * y.p + v * y.q, -x.q * y.p + x.p * y.q);
    if b < 0 {
        (a, b) = (-a, -b);
    }
    match b {
        0 => return 0,
        1 => return 1,
        _ => {}
    }
    let verts = ladder(a, b);
    let target = verts.len();
    let adj = |i: (i64, i64), j: (i64, i64)| (i.0 * j.1 - i.1 * j.0).abs() == 1;
    let mut dist: HashMap<usize, usize> = HashMap::from([(0, 0)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let d = dist[&i];
        if adj(verts[i], (a, b)) {
            return d + 1;
        }
        for j in 0..target {
            if !dist.contains_key(&j) && adj(verts[i], verts[j]) {
                dist.insert(j, d + 1);
                queue.push_back(j);
            }
        }
    }
    unreachable!("ladder is connected")
}

/// The Farey graph restricted to classes with entries bounded by `n`.
#[derive(Clone, Debug)]
pub struct FareyBall {
    pub vertices: Vec<PrimitiveClass>,
    adjacent: Vec<Vec<usize>>,
}

impl FareyBall {
    pub fn new(n: i64) -> FareyBall {
        let mut vertices: Vec<PrimitiveClass> = (0..=n)
            .flat_map(|p| (-n..=n).map(move |q| (p, q)))
            .filter_map(|(p, q)| PrimitiveClass::new(p, q).ok())
            .collect();
        vertices.sort();
        vertices.dedup();
        let adjacent = vertices
            .iter()
            .map(|&x| {
                (0..vertices.len())
                    .filter(|&j| x.is_adjacent(vertices[j]))
                    .collect()
            })
            .collect();
        FareyBall { vertices, adjacent }
    }

    /// Plain BFS inside the ball; an upper bound for the true distance that
    /// is exact once the ball is large enough.
    pub fn distances(&self, source: PrimitiveClass) -> HashMap<PrimitiveClass, usize> {
        let Ok(s) = self.vertices.binary_search(&source) else {
            return HashMap::new();
        };
        let mut dist = vec![usize::MAX; self.vertices.len()];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(i) = queue.pop_front() {
            for &j in &self.adjacent[i] {
                if dist[j] == usize::MAX {
                    dist[j] = dist[i] + 1;
                    queue.push_back(j);
                }
            }
        }
        self.vertices
            .iter()
            .zip(dist)
            .filter(|(_, d)| *d != usize::MAX)
            .map(|(&v, d)| (v, d))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalisation() {
        assert_eq!(
            PrimitiveClass::new(-2, -3).unwrap(),
            PrimitiveClass::new(2, 3).unwrap()
        );
        assert_eq!(
            PrimitiveClass::new(0, -1).unwrap(),
            PrimitiveClass { p: 0, q: 1 }
        );
        assert!(PrimitiveClass::new(2, 4).is_err());
        assert!(PrimitiveClass::new(0, 0).is_err());
    }

    #[test]
    fn small_examples() {
        let c = |p, q| PrimitiveClass::new(p, q).unwrap();
        assert_eq!(farey_distance(c(1, 0), c(0, 1)), 1);
        assert_eq!(farey_distance(c(3, 5), c(3, 5)), 0);
        assert_eq!(farey_distance(c(1, 2), c(3, 5)), 1);
        assert_eq!(farey_distance(c(1, 0), c(7, 12)), 4);
        assert_eq!(farey_distance(c(1, 0), c(5, 2)), 2);
        assert_eq!(farey_distance(c(1, 0), c(1, 5)), 2);
    }

    #[test]
    fn matches_bfs_exhaustively() {
        let small = FareyBall::new(12).vertices;
        let region = FareyBall::new(30);
        for &x in &small {
            let dist = region.distances(x);
            for &y in &small {
                assert_eq!(farey_distance(x, y), dist[&y], "{x} {y}");
            }
        }
    }
}
