//! Two-colored Temperley–Lieb diagrams as noncrossing perfect matchings.
//!
//! A diagram on `n` strands matches `2n` boundary points. Labels run
//! circularly: bottom points are `1..n` left to right, top points are
//! `n+1..2n` right to left (so the top-right point is `n+1` and the top-left
//! point is `2n`). In this order "planar" is a single condition: no two
//! pairs `{a,b}`, `{c,d}` interleave as `a < c < b < d`.
//!
//! Diagrams store no colors. The planar regions of a diagram are colored
//! alternately starting from the leftmost region, whose color is fixed by
//! the ambient algebra; operations that depend on region colors (closed
//! loops, the colors of deleted caps) report them for the convention that
//! the leftmost region is `s`-colored, and the algebra layer swaps the
//! answer when its leading color is `t`.

use std::fmt;

use serde_json::{json, Value};
use thiserror::Error;

use crate::qnum::Color;

/// Errors from diagram construction and composition.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    /// A generator index outside `1..=n-1`.
    #[error("generator index out of range: {0}")]
    IndexOutOfRange(String),
    /// Composition of diagrams with different strand counts.
    #[error("strand count mismatch: {0}")]
    StrandMismatch(String),
    /// A matching that is not a noncrossing perfect matching, or malformed
    /// input data.
    #[error("invalid diagram: {0}")]
    Invalid(String),
}

/// A closed loop produced while gluing diagrams, recording the color of the
/// region it sits in. A loop contributes the scalar `-[2]_ambient` to the
/// product (with the leftmost region `s`-colored; see the module docs).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LoopRecord {
    pub ambient_color: Color,
}

/// A two-colored Temperley–Lieb diagram: a noncrossing perfect matching on
/// `2n` circularly ordered boundary points.
///
/// Stored canonically — each pair as `(min, max)`, pairs sorted by first
/// coordinate — so derived equality and ordering are value equality and a
/// deterministic diagram order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TLDiagram {
    n: usize,
    matching: Vec<(usize, usize)>,
}

impl TLDiagram {
    /// Builds a diagram from unordered point pairs, validating that they
    /// form a noncrossing perfect matching of `1..=2n`.
    pub fn from_pairs(
        n: usize,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<TLDiagram, DiagramError> {
        let mut matching: Vec<(usize, usize)> = pairs
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        matching.sort();
        if matching.len() != n {
            return Err(DiagramError::Invalid(format!(
                "expected {n} pairs, got {}",
                matching.len()
            )));
        }
        let mut seen = vec![false; 2 * n + 1];
        for &(a, b) in &matching {
            for p in [a, b] {
                if p < 1 || p > 2 * n {
                    return Err(DiagramError::Invalid(format!(
                        "label {p} outside 1..={}",
                        2 * n
                    )));
                }
                if seen[p] {
                    return Err(DiagramError::Invalid(format!("label {p} used twice")));
                }
                seen[p] = true;
            }
            if a == b {
                return Err(DiagramError::Invalid(format!("label {a} paired with itself")));
            }
        }
        for (idx, &(a, b)) in matching.iter().enumerate() {
            for &(c, d) in &matching[idx + 1..] {
                if a < c && c < b && b < d {
                    return Err(DiagramError::Invalid(format!(
                        "pairs ({a},{b}) and ({c},{d}) cross"
                    )));
                }
            }
        }
        Ok(TLDiagram { n, matching })
    }

    fn from_pairs_unchecked(n: usize, pairs: Vec<(usize, usize)>) -> TLDiagram {
        TLDiagram::from_pairs(n, pairs).expect("operation preserves planarity")
    }

    /// The identity diagram: every bottom point joined straight up.
    pub fn identity(n: usize) -> TLDiagram {
        TLDiagram {
            n,
            matching: (1..=n).map(|i| (i, 2 * n + 1 - i)).collect(),
        }
    }

    /// The generator `e_i`: a cap joining bottom points `i, i+1`, a cup
    /// joining the top points directly above, all other strands through.
    pub fn generator(i: usize, n: usize) -> Result<TLDiagram, DiagramError> {
        if i < 1 || i + 1 > n {
            return Err(DiagramError::IndexOutOfRange(format!(
                "generator {i} needs 1 <= {i} <= {}",
                n.saturating_sub(1)
            )));
        }
        let mut pairs = vec![(i, i + 1), (2 * n - i, 2 * n - i + 1)];
        for j in 1..=n {
            if j != i && j != i + 1 {
                pairs.push((j, 2 * n + 1 - j));
            }
        }
        Ok(TLDiagram::from_pairs_unchecked(n, pairs))
    }

    /// All diagrams on `n` strands in ascending diagram order; there are
    /// Catalan(n) of them.
    pub fn enumerate(n: usize) -> Vec<TLDiagram> {
        fn matchings(points: &[usize]) -> Vec<Vec<(usize, usize)>> {
            if points.is_empty() {
                return vec![Vec::new()];
            }
            let mut out = Vec::new();
            let first = points[0];
            // The first point pairs with an odd-offset partner so both
            // sides of the chord have even size.
            for k in (1..points.len()).step_by(2) {
                let partner = points[k];
                for inner in matchings(&points[1..k]) {
                    for outer in matchings(&points[k + 1..]) {
                        let mut m = vec![(first, partner)];
                        m.extend(&inner);
                        m.extend(outer);
                        out.push(m);
                    }
                }
            }
            out
        }
        let points: Vec<usize> = (1..=2 * n).collect();
        let mut diagrams: Vec<TLDiagram> = matchings(&points)
            .into_iter()
            .map(|pairs| TLDiagram::from_pairs_unchecked(n, pairs))
            .collect();
        diagrams.sort();
        diagrams
    }

    /// Strand count.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The canonical matching: pairs `(min, max)` sorted by first element.
    pub fn matching(&self) -> &[(usize, usize)] {
        &self.matching
    }

    /// The partner of a boundary point.
    pub fn partner(&self, p: usize) -> usize {
        for &(a, b) in &self.matching {
            if a == p {
                return b;
            }
            if b == p {
                return a;
            }
        }
        panic!("label {p} outside 1..={}", 2 * self.n)
    }

    /// Closes off the rightmost strand: top position `n` is bent around the
    /// right side and joined to bottom point `n`, giving a diagram on `n-1`
    /// strands. A closed loop appears exactly when bottom `n` was already
    /// joined to top position `n`; it sits in the rightmost region, which is
    /// `s`-colored when `n` is odd and `t`-colored when `n` is even.
    pub fn partial_trace(&self) -> (TLDiagram, Option<LoopRecord>) {
        assert!(self.n >= 1, "partial trace needs at least one strand");
        let n = self.n;
        // Top position n is the top-right point, label n+1.
        let relabel = |p: usize| -> usize {
            if p <= n {
                p
            } else {
                p - 2
            }
        };
        let ambient_color = if n % 2 == 1 { Color::S } else { Color::T };
        if self.partner(n) == n + 1 {
            let pairs = self
                .matching
                .iter()
                .filter(|&&(a, _)| a != n)
                .map(|&(a, b)| (relabel(a), relabel(b)))
                .collect();
            return (
                TLDiagram::from_pairs_unchecked(n - 1, pairs),
                Some(LoopRecord { ambient_color }),
            );
        }
        let a = self.partner(n);
        let b = self.partner(n + 1);
        let mut pairs = vec![(relabel(a), relabel(b))];
        for &(x, y) in &self.matching {
            if x == n || y == n || x == n + 1 || y == n + 1 {
                continue;
            }
            pairs.push((relabel(x), relabel(y)));
        }
        (TLDiagram::from_pairs_unchecked(n - 1, pairs), None)
    }

    /// Rotates one step counterclockwise: every label moves one step down
    /// the circular order, so bottom point 1 becomes the top-left point.
    pub fn rotate_ccw(&self) -> TLDiagram {
        let m = 2 * self.n;
        if m == 0 {
            return self.clone();
        }
        let pairs = self
            .matching
            .iter()
            .map(|&(a, b)| (if a == 1 { m } else { a - 1 }, if b == 1 { m } else { b - 1 }))
            .collect();
        TLDiagram::from_pairs_unchecked(self.n, pairs)
    }

    /// Rotates one step clockwise; inverse of [`TLDiagram::rotate_ccw`].
    pub fn rotate_cw(&self) -> TLDiagram {
        let m = 2 * self.n;
        if m == 0 {
            return self.clone();
        }
        let pairs = self
            .matching
            .iter()
            .map(|&(a, b)| (if a == m { 1 } else { a + 1 }, if b == m { 1 } else { b + 1 }))
            .collect();
        TLDiagram::from_pairs_unchecked(self.n, pairs)
    }

    /// Reflects about the vertical axis: bottom position `i` maps to
    /// `n+1-i` and likewise on top. The reflected diagram is read in the
    /// opposite-color algebra (the reflection swaps region colors).
    pub fn tau_involute(&self) -> TLDiagram {
        let n = self.n;
        let flip = |p: usize| -> usize {
            if p <= n {
                n + 1 - p
            } else {
                3 * n + 1 - p
            }
        };
        let pairs = self.matching.iter().map(|&(a, b)| (flip(a), flip(b))).collect();
        TLDiagram::from_pairs_unchecked(n, pairs)
    }

    /// JSON form: `{"n": 3, "matching": [[1,6],[2,5],[3,4]]}`.
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "matching": self.matching.iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>(),
        })
    }

    /// Parses the JSON form produced by [`TLDiagram::to_json`].
    pub fn from_json(value: &Value) -> Result<TLDiagram, DiagramError> {
        let n = value
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| DiagramError::Invalid("missing strand count \"n\"".to_string()))?;
        let pairs = value
            .get("matching")
            .and_then(Value::as_array)
            .ok_or_else(|| DiagramError::Invalid("missing \"matching\" array".to_string()))?;
        let mut out = Vec::with_capacity(pairs.len());
        for pair in pairs {
            let coords: Option<(usize, usize)> = pair.as_array().and_then(|p| {
                if p.len() != 2 {
                    return None;
                }
                Some((p[0].as_u64()? as usize, p[1].as_u64()? as usize))
            });
            let Some((a, b)) = coords else {
                return Err(DiagramError::Invalid(format!(
                    "matching entries must be pairs of labels, got {pair}"
                )));
            };
            out.push((a, b));
        }
        TLDiagram::from_pairs(n as usize, out)
    }
}

impl fmt::Display for TLDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (idx, (a, b)) in self.matching.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{{{a},{b}}}")?;
        }
        f.write_str("}")
    }
}

// ---------------------------------------------------------------------------
// Composition
// ---------------------------------------------------------------------------

/// A point in the three-layer gluing diagram: outer bottom, glued middle,
/// or outer top, with positions 1..=n each.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum GluePoint {
    Bottom(usize),
    Middle(usize),
    Top(usize),
}

/// Stacks `top` onto `bottom` (gluing the top boundary of `bottom` to the
/// bottom boundary of `top`) and collects the closed loops that form.
///
/// Each loop's `ambient_color` follows the leftmost-region-is-`s`
/// convention: `s` when the loop's leftmost middle position is odd, `t`
/// when it is even.
pub fn compose(
    top: &TLDiagram,
    bottom: &TLDiagram,
) -> Result<(TLDiagram, Vec<LoopRecord>), DiagramError> {
    if top.n != bottom.n {
        return Err(DiagramError::StrandMismatch(format!(
            "cannot glue {} strands onto {}",
            top.n, bottom.n
        )));
    }
    let n = top.n;
    // Node ids: 0..n outer bottom, n..2n middle, 2n..3n outer top
    // (positions 1..=n each).
    let id = |p: GluePoint| -> usize {
        match p {
            GluePoint::Bottom(i) => i - 1,
            GluePoint::Middle(i) => n + i - 1,
            GluePoint::Top(i) => 2 * n + i - 1,
        }
    };
    let decode_bottom = |label: usize| -> GluePoint {
        // In the bottom diagram, top labels sit on the gluing seam.
        if label <= n {
            GluePoint::Bottom(label)
        } else {
            GluePoint::Middle(2 * n + 1 - label)
        }
    };
    let decode_top = |label: usize| -> GluePoint {
        // In the top diagram, bottom labels sit on the gluing seam.
        if label <= n {
            GluePoint::Middle(label)
        } else {
            GluePoint::Top(2 * n + 1 - label)
        }
    };
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); 3 * n];
    for &(a, b) in &bottom.matching {
        let (a, b) = (id(decode_bottom(a)), id(decode_bottom(b)));
        adjacency[a].push(b);
        adjacency[b].push(a);
    }
    for &(a, b) in &top.matching {
        let (a, b) = (id(decode_top(a)), id(decode_top(b)));
        adjacency[a].push(b);
        adjacency[b].push(a);
    }

    // Every outer node has one edge and every middle node two, so walking
    // from an outer node and never immediately backtracking traces the
    // strand to its other outer endpoint; edges left over form loops.
    let mut visited = vec![false; 3 * n];
    let as_result_label = |node: usize| -> Option<usize> {
        if node < n {
            Some(node + 1)
        } else if node >= 2 * n {
            let position = node - 2 * n + 1;
            Some(2 * n + 1 - position)
        } else {
            None
        }
    };
    let mut pairs = Vec::with_capacity(n);
    for start in (0..3 * n).filter(|&v| as_result_label(v).is_some()) {
        if visited[start] {
            continue;
        }
        visited[start] = true;
        let mut prev = start;
        let mut cur = adjacency[start][0];
        while as_result_label(cur).is_none() {
            visited[cur] = true;
            let next = if adjacency[cur][0] == prev {
                adjacency[cur][1]
            } else {
                adjacency[cur][0]
            };
            prev = cur;
            cur = next;
        }
        visited[cur] = true;
        pairs.push((
            as_result_label(start).expect("outer start"),
            as_result_label(cur).expect("outer end"),
        ));
    }
    let mut loops = Vec::new();
    for start in n..2 * n {
        if visited[start] {
            continue;
        }
        // Trace the cycle, recording its leftmost middle position.
        let mut leftmost = start;
        visited[start] = true;
        let mut prev = start;
        let mut cur = adjacency[start][0];
        while cur != start {
            visited[cur] = true;
            leftmost = leftmost.min(cur);
            let next = if adjacency[cur][0] == prev {
                adjacency[cur][1]
            } else {
                adjacency[cur][0]
            };
            prev = cur;
            cur = next;
        }
        let position = leftmost - n + 1;
        loops.push(LoopRecord {
            ambient_color: if position % 2 == 1 { Color::S } else { Color::T },
        });
    }
    Ok((TLDiagram::from_pairs_unchecked(n, pairs), loops))
}

// ---------------------------------------------------------------------------
// Folding
// ---------------------------------------------------------------------------

/// A diagram with unequal boundaries: `bottom` points below, `top` points
/// above, labeled circularly (bottom left-to-right from 1, then top
/// right-to-left). Produced by [`fold_and_caps`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfDiagram {
    pub bottom: usize,
    pub top: usize,
    pub matching: Vec<(usize, usize)>,
}

/// One bottom cap of a folded diagram: the cap joins bottom points
/// `position, position + 1`, sits in a region of color `cap_color` (for the
/// leftmost-region-is-`s` convention), and deleting it leaves `deleted`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CapRecord {
    pub position: usize,
    pub cap_color: Color,
    pub deleted: TLDiagram,
}

/// Folds the strand at the top-right point of a diagram on `n+1` strands
/// down to the bottom, giving a half-diagram with `n+2` bottom and `n` top
/// points, and enumerates its bottom caps in ascending position order.
///
/// The fold moves the top-right label `n+2` to the new rightmost bottom
/// position without disturbing the circular order, so the matching is
/// reinterpreted rather than relabeled. The region between bottom points
/// `i` and `i+1` is `s`-colored exactly when `i` is even, so a cap at odd
/// `i` has `cap_color` `t` and vice versa.
pub fn fold_and_caps(d: &TLDiagram) -> (HalfDiagram, Vec<CapRecord>) {
    let m = d.n; // m = n + 1 strands
    assert!(m >= 1, "folding needs at least one strand");
    let n = m - 1;
    let dhat = HalfDiagram {
        bottom: m + 1,
        top: n,
        matching: d.matching.clone(),
    };
    let mut caps = Vec::new();
    for i in 1..=m {
        if !dhat.matching.contains(&(i, i + 1)) {
            continue;
        }
        let relabel = |p: usize| -> usize {
            if p < i {
                p
            } else {
                p - 2
            }
        };
        let pairs = dhat
            .matching
            .iter()
            .filter(|&&pair| pair != (i, i + 1))
            .map(|&(a, b)| (relabel(a), relabel(b)))
            .collect();
        caps.push(CapRecord {
            position: i,
            cap_color: if i % 2 == 1 { Color::T } else { Color::S },
            deleted: TLDiagram::from_pairs_unchecked(n, pairs),
        });
    }
    (dhat, caps)
}
