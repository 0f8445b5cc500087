//! Small-graph isomorphism machinery: canonical forms by permutation search,
//! automorphism counting, and induced / ordinary subgraph matchers.

use super::{BitIter, Graph, GraphError};

/// Canonicalization and automorphism counting scan vertex permutations.
pub const CANONICAL_MAX_N: usize = 10;

/// Packs the upper triangle of `g` column-major into an integer, most
/// significant bit first, so integer order equals lexicographic bit order.
#[cfg(test)]
fn triangle_code(g: &Graph) -> u64 {
    let n = g.n();
    let mut code = 0u64;
    for j in 1..n {
        for i in 0..j {
            code = (code << 1) | g.has_edge(i, j) as u64;
        }
    }
    code
}

fn decode_triangle(n: usize, code: u64) -> Graph {
    let m = n * n.saturating_sub(1) / 2;
    let mut g = Graph::edgeless(n).expect("small order");
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (m - 1 - pos) & 1 == 1 {
                g.add_edge(i, j);
            }
            pos += 1;
        }
    }
    g
}

/// Minimal triangle code over all vertex permutations.
///
/// Vertices are placed one at a time; placing the k-th vertex appends the k
/// adjacency bits to the already-placed ones, which is exactly the next
/// column of the code. Branches whose prefix already exceeds the best known
/// code are cut.
pub(crate) fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    debug_assert!(n <= CANONICAL_MAX_N);
    if n <= 1 {
        return 0;
    }
    let m = n * (n - 1) / 2;
    let mut best = (1u64 << m) - 1;

    fn place(
        g: &Graph,
        order: &mut [usize],
        used: u64,
        k: usize,
        prefix: u64,
        filled: usize,
        best: &mut u64,
        m: usize,
    ) {
        let n = g.n();
        if k == n {
            *best = prefix;
            return;
        }
        for w in 0..n {
            if used & (1u64 << w) != 0 {
                continue;
            }
            let mut column = 0u64;
            for &placed in order[..k].iter() {
                column = (column << 1) | g.has_edge(placed, w) as u64;
            }
            let new_prefix = (prefix << k) | column;
            let new_filled = filled + k;
            if new_prefix > *best >> (m - new_filled) {
                continue;
            }
            order[k] = w;
            place(g, order, used | (1u64 << w), k + 1, new_prefix, new_filled, best, m);
        }
    }

    let mut order = [0usize; CANONICAL_MAX_N];
    place(g, &mut order, 0, 0, 0, 0, &mut best, m);
    best
}

/// Canonical byte string; equal iff the graphs are isomorphic.
///
/// Layout: the order `n`, then the minimal upper-triangle code packed
/// most-significant-bit first.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>, GraphError> {
    let n = g.n();
    if n > CANONICAL_MAX_N {
        return Err(GraphError::OrderCeiling {
            operation: "canonical_form",
            ceiling: CANONICAL_MAX_N,
            n,
        });
    }
    let code = canonical_code(g);
    let m = n * n.saturating_sub(1) / 2;
    let mut bytes = vec![n as u8];
    let mut pos = 0;
    while pos < m {
        let take = (m - pos).min(8);
        let chunk = (code >> (m - pos - take)) & ((1u64 << take) - 1);
        bytes.push((chunk << (8 - take)) as u8);
        pos += take;
    }
    Ok(bytes)
}

/// The canonical representative itself (the relabelled graph whose triangle
/// code is minimal).
pub(crate) fn canonical_graph(g: &Graph) -> Graph {
    decode_triangle(g.n(), canonical_code(g))
}

/// Number of vertex permutations mapping `g` onto itself.
pub fn automorphism_count(g: &Graph) -> Result<u64, GraphError> {
    let n = g.n();
    if n > CANONICAL_MAX_N {
        return Err(GraphError::OrderCeiling {
            operation: "automorphism_count",
            ceiling: CANONICAL_MAX_N,
            n,
        });
    }

    fn assign(g: &Graph, image: &mut [usize], used: u64, k: usize) -> u64 {
        let n = g.n();
        if k == n {
            return 1;
        }
        let mut total = 0;
        'candidates: for w in 0..n {
            if used & (1u64 << w) != 0 {
                continue;
            }
            for i in 0..k {
                if g.has_edge(i, k) != g.has_edge(image[i], w) {
                    continue 'candidates;
                }
            }
            image[k] = w;
            total += assign(g, image, used | (1u64 << w), k + 1);
        }
        total
    }

    let mut image = [0usize; CANONICAL_MAX_N];
    Ok(assign(g, &mut image, 0, 0))
}

/// Backtracking matcher for induced embeddings of `h` into `g`, restricted to
/// the vertices of `allowed`; when `required` is set, the image must contain
/// that vertex. Adjacency must match exactly on the image.
pub(crate) fn induced_embedding_exists(
    g: &Graph,
    allowed: u64,
    h: &Graph,
    required: Option<usize>,
) -> bool {
    let hn = h.n();
    if hn > allowed.count_ones() as usize {
        return false;
    }
    if hn == 0 {
        return required.is_none();
    }
    // degree within `allowed` prunes candidates: an embedded vertex keeps at
    // least its h-degree among allowed vertices
    let mut image = [0usize; 64];
    let mut used = 0u64;

    fn extend(
        g: &Graph,
        allowed: u64,
        h: &Graph,
        required: Option<usize>,
        image: &mut [usize; 64],
        used: &mut u64,
        k: usize,
    ) -> bool {
        let hn = h.n();
        if k == hn {
            return match required {
                Some(v) => *used & (1u64 << v) != 0,
                None => true,
            };
        }
        let h_deg = h.degree(k);
        for w in BitIter(allowed & !*used) {
            if ((g.neighbors(w) & allowed).count_ones() as usize) < h_deg {
                continue;
            }
            let mut ok = true;
            for i in 0..k {
                if h.has_edge(i, k) != g.has_edge(image[i], w) {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
            image[k] = w;
            *used |= 1u64 << w;
            if extend(g, allowed, h, required, image, used, k + 1) {
                return true;
            }
            *used &= !(1u64 << w);
        }
        false
    }

    extend(g, allowed, h, required, &mut image, &mut used, 0)
}

/// Does some vertex subset of `g` induce a copy of `h`?
pub fn contains_induced(g: &Graph, h: &Graph) -> bool {
    induced_embedding_exists(g, g.vertex_mask(), h, None)
}

/// Counts injective maps `V(h) -> V(g)` carrying edges to edges (extra edges
/// of `g` inside the image are allowed).
fn monomorphism_count(h: &Graph, g: &Graph) -> u64 {
    let hn = h.n();
    if hn > g.n() {
        return 0;
    }

    fn extend(h: &Graph, g: &Graph, image: &mut [usize; 64], used: &mut u64, k: usize) -> u64 {
        if k == h.n() {
            return 1;
        }
        let mut total = 0;
        'candidates: for w in 0..g.n() {
            if *used & (1u64 << w) != 0 {
                continue;
            }
            if g.degree(w) < h.degree(k) {
                continue;
            }
            for i in 0..k {
                if h.has_edge(i, k) && !g.has_edge(image[i], w) {
                    continue 'candidates;
                }
            }
            image[k] = w;
            *used |= 1u64 << w;
            total += extend(h, g, image, used, k + 1);
            *used &= !(1u64 << w);
        }
        total
    }

    let mut image = [0usize; 64];
    let mut used = 0u64;
    extend(h, g, &mut image, &mut used, 0)
}

/// Number of subgraphs of `g` (vertex subset plus edge subset) isomorphic to
/// `h`: the monomorphism count divided by `|Aut(h)|`.
pub fn count_subgraph_copies(h: &Graph, g: &Graph) -> Result<u64, GraphError> {
    if h.n() > g.n() {
        return Ok(0);
    }
    let monos = monomorphism_count(h, g);
    let aut = automorphism_count(h)?;
    debug_assert_eq!(monos % aut, 0);
    Ok(monos / aut)
}

/// Does `g` contain `h` as a (not necessarily induced) subgraph?
pub fn contains_subgraph(g: &Graph, h: &Graph) -> bool {
    fn extend(h: &Graph, g: &Graph, image: &mut [usize; 64], used: &mut u64, k: usize) -> bool {
        if k == h.n() {
            return true;
        }
        'candidates: for w in 0..g.n() {
            if *used & (1u64 << w) != 0 {
                continue;
            }
            if g.degree(w) < h.degree(k) {
                continue;
            }
            for i in 0..k {
                if h.has_edge(i, k) && !g.has_edge(image[i], w) {
                    continue 'candidates;
                }
            }
            image[k] = w;
            *used |= 1u64 << w;
            if extend(h, g, image, used, k + 1) {
                return true;
            }
            *used &= !(1u64 << w);
        }
        false
    }

    if h.n() > g.n() {
        return false;
    }
    let mut image = [0usize; 64];
    let mut used = 0u64;
    extend(h, g, &mut image, &mut used, 0)
}
