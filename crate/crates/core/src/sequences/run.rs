use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::laufer::LauferOperator;
use crate::error::{ensure_internal, Error, Result};
use crate::graph::Cycle;
use crate::lattice::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RatioTestKind {
    /// Targets `Z_K` on the minimal model.
    I,
    /// Targets `wt(f)` and continues past it.
    II,
    /// Targets `x(Z_K - E)`.
    III,
}

/// Order among nodes that tie on both the fraction and `(Z, E_n)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum TieBreak {
    #[default]
    SmallestId,
    Reversed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stop {
    Target,
    /// Stop before the first step with ratio above the bound.
    MaxRatio(Rational),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeqStep {
    /// `Z_i` before the step.
    pub z: Cycle,
    pub v: usize,
    /// `(Z_i, E_v)`.
    pub pairing: BigInt,
    pub a: BigInt,
    /// `None` when the denominator of the fraction is not positive.
    pub r: Option<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceResult {
    pub kind: RatioTestKind,
    pub steps: Vec<SeqStep>,
    pub target: Cycle,
    /// Final cycle reached.
    pub end: Cycle,
    /// `sum_n max(0, m_n(target))`.
    pub k: BigInt,
}

impl SequenceResult {
    pub fn a_sum(&self) -> BigInt {
        self.steps.iter().map(|s| &s.a).sum()
    }

    pub fn ratios_nondecreasing(&self) -> bool {
        self.steps.windows(2).all(|w| ratio_cmp(&w[0].r, &w[1].r) != Ordering::Greater)
    }
}

/// Compares ratios with `None` as infinity.
pub fn ratio_cmp(a: &Option<Rational>, b: &Option<Rational>) -> Ordering {
    match (a, b) {
        (Some(x), Some(y)) => x.cmp(y),
        (Some(_), None) => Ordering::Less,
        (None, Some(_)) => Ordering::Greater,
        (None, None) => Ordering::Equal,
    }
}

/// A ratio test: per node, fraction `(m_n(Z) + offset_n) / denominator_n`.
#[derive(Clone, Debug)]
pub struct RatioTest {
    pub kind: RatioTestKind,
    pub offsets: Vec<BigInt>,
    pub denominators: Vec<BigInt>,
    pub target: Cycle,
}

impl RatioTest {
    fn ratio(&self, op: &LauferOperator, z: &Cycle, i: usize) -> Option<Rational> {
        let n = op.nodes()[i];
        let d = &self.denominators[i];
        d.is_positive()
            .then(|| Rational::new(z.get(n) + &self.offsets[i], d.clone()))
    }
}

/// Runs a computation sequence from `0`.
pub fn run_sequence(
    op: &LauferOperator,
    test: &RatioTest,
    stop: &Stop,
    tie: TieBreak,
) -> Result<SequenceResult> {
    let nodes = op.nodes();
    if test.offsets.len() != nodes.len() || test.denominators.len() != nodes.len() {
        return Err(Error::Precondition("ratio test does not match the node set".into()));
    }
    let bounded = matches!(stop, Stop::Target);
    if bounded && test.kind == RatioTestKind::II {
        return Err(Error::Precondition("kind II needs a ratio bound".into()));
    }
    let g = op.graph();
    let mut z = Cycle::zero(g.len());
    let mut steps = Vec::new();
    // a target with negative node coefficients is clamped at zero there
    let reachable = nodes.iter().all(|&n| !test.target.get(n).is_negative());
    loop {
        if bounded && z == test.target {
            break;
        }
        let mut best: Option<(usize, Option<Rational>, BigInt)> = None;
        for (i, &n) in nodes.iter().enumerate() {
            if bounded && z.get(n) >= test.target.get(n) {
                continue;
            }
            let r = test.ratio(op, &z, i);
            let p = g.pairing(&z, n);
            let better = match &best {
                None => true,
                Some((j, br, bp)) => match ratio_cmp(&r, br) {
                    Ordering::Less => true,
                    Ordering::Greater => false,
                    Ordering::Equal => match p.cmp(bp) {
                        Ordering::Greater => true,
                        Ordering::Less => false,
                        Ordering::Equal => tie == TieBreak::Reversed && n > nodes[*j],
                    },
                },
            };
            if better {
                best = Some((i, r, p));
            }
        }
        let Some((i, r, pairing)) = best else {
            break;
        };
        if let Stop::MaxRatio(max) = stop {
            if r.as_ref().is_none_or(|r| r > max) {
                break;
            }
        }
        let v = nodes[i];
        let a = (BigInt::from(1) - &pairing).max(BigInt::zero());
        let mut next = z.clone();
        next.add_e(v);
        let next = op.x_from(&next);
        if bounded && reachable {
            ensure_internal!(next.le(&test.target), "sequence passes its target");
        }
        steps.push(SeqStep { z, v, pairing, a, r });
        z = next;
    }
    let k = nodes.iter().map(|&n| test.target.get(n).clone().max(BigInt::zero())).sum();
    if bounded {
        ensure_internal!(
            BigInt::from(steps.len()) == k,
            "step count differs from the node sum of the target"
        );
        if reachable {
            ensure_internal!(z == test.target, "sequence of kind {:?} misses its target", test.kind);
        }
    }
    Ok(SequenceResult { kind: test.kind, steps, target: test.target.clone(), end: z, k })
}
