//! Concave piecewise-linear curves as lower envelopes of cost lines.

use crate::error::{Error, Result};
use crate::objectives::CostLine;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq)]
pub struct Piece {
    pub line: CostLine,
    pub lo: Rational,
    pub hi: Rational,
    /// Index of the line in the input list.
    pub source: usize,
}

/// Pieces tile `[domain.0, domain.1]` left to right.
#[derive(Debug, Clone, PartialEq)]
pub struct PwlCurve {
    pub pieces: Vec<Piece>,
}

impl PwlCurve {
    /// Interior breakpoints in increasing order.
    pub fn breakpoints(&self) -> Vec<Rational> {
        self.pieces.iter().skip(1).map(|p| p.lo.clone()).collect()
    }

    /// Envelope value: the minimum over the pieces' lines.
    pub fn value_at(&self, lambda: &Rational) -> Rational {
        self.pieces
            .iter()
            .map(|p| p.line.at(lambda))
            .min()
            .expect("curve has at least one piece")
    }

    /// Piece whose closed interval holds `λ`; at a breakpoint, the left one.
    pub fn piece_at(&self, lambda: &Rational) -> Option<&Piece> {
        self.pieces
            .iter()
            .find(|p| p.lo <= *lambda && *lambda <= p.hi)
    }

    /// Tiling, strict concavity (slopes fall, intercepts rise) and continuity.
    pub fn check(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Verification(msg));
        for (i, p) in self.pieces.iter().enumerate() {
            if p.lo > p.hi {
                return fail(format!("piece {i} has an empty interval"));
            }
        }
        for (i, w) in self.pieces.windows(2).enumerate() {
            let (a, b) = (&w[0], &w[1]);
            if a.hi != b.lo {
                return fail(format!("gap or overlap between pieces {i} and {}", i + 1));
            }
            if a.line.n <= b.line.n || a.line.p >= b.line.p {
                return fail(format!("pieces {i} and {} break concavity", i + 1));
            }
            if a.line.at(&a.hi) != b.line.at(&b.lo) {
                return fail(format!("discontinuity at piece {}", i + 1));
            }
        }
        Ok(())
    }
}

/// Lower envelope of `P + λN` over `[lo, hi]`. Lines that are minimal only
/// at a single interior point are left out; among lines identical on a
/// piece, the first in the input wins.
pub fn envelope_of(lines: &[CostLine], lo: &Rational, hi: &Rational) -> Result<PwlCurve> {
    if lines.is_empty() {
        return Err(Error::precondition("envelope of no lines"));
    }
    if lo > hi {
        return Err(Error::precondition(format!("empty domain [{lo}, {hi}]")));
    }
    // smallest value at `at`, then smallest slope (lowest just to the right), then first
    let best_at = |at: &Rational, candidates: &mut dyn Iterator<Item = usize>| -> usize {
        candidates
            .min_by(|&i, &j| {
                lines[i]
                    .at(at)
                    .cmp(&lines[j].at(at))
                    .then(lines[i].n.cmp(&lines[j].n))
                    .then(i.cmp(&j))
            })
            .expect("nonempty candidate set")
    };
    let mut current = best_at(lo, &mut (0..lines.len()));
    let mut start = lo.clone();
    let mut pieces = Vec::new();
    loop {
        let cur = &lines[current];
        // first point right of `start` where a flatter line drops to `cur`
        let mut next: Option<Rational> = None;
        for other in lines.iter().filter(|l| l.n < cur.n) {
            let cross = (&other.p - &cur.p) / (&cur.n - &other.n);
            if cross <= start || cross >= *hi {
                continue;
            }
            if next.as_ref().is_none_or(|n| cross < *n) {
                next = Some(cross);
            }
        }
        let Some(cross) = next else {
            pieces.push(Piece {
                line: cur.clone(),
                lo: start,
                hi: hi.clone(),
                source: current,
            });
            break;
        };
        pieces.push(Piece {
            line: cur.clone(),
            lo: start.clone(),
            hi: cross.clone(),
            source: current,
        });
        let cur_n = cur.n.clone();
        let tied = lines
            .iter()
            .enumerate()
            .filter(|(_, l)| l.n < cur_n && l.at(&cross) == lines[current].at(&cross));
        current = best_at(&cross, &mut tied.map(|(i, _)| i));
        start = cross;
    }
    Ok(PwlCurve { pieces })
}
