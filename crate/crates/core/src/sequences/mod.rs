//! The Laufer operator, the ratio-test computation sequences and the
//! invariants read off from them.

mod laufer;
mod run;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{ensure_internal, Error, Result};
use crate::graph::{
    canonical_cycle, merle_teissier_zk, minimal_model_with_map, oka_graph, wt_cycle, Cycle,
    OkaGraph, PlumbingGraph, RatCycle,
};
use crate::lattice::{rat_int, IntVec3, Rational};
use crate::newton::{
    is_convenient, is_isolated, is_rhs_link, make_convenient, newton_polyhedron, SpectrumPart,
    Support,
};
use crate::puiseux::PuiseuxPoly;

pub use laufer::{laufer_x, LauferOperator};
pub use run::{ratio_cmp, run_sequence, RatioTest, RatioTestKind, SeqStep, SequenceResult, Stop, TieBreak};

/// `chi(l) = -(l, l - Z_K) / 2`.
pub fn chi(g: &PlumbingGraph, zk: &RatCycle, l: &Cycle) -> Rational {
    let l = l.to_rat();
    let diff = RatCycle::new(l.coeffs().iter().zip(zk.coeffs()).map(|(a, b)| a - b).collect());
    -g.rat_form(&l, &diff) / Rational::from_integer(BigInt::from(2))
}

/// `Z - E`.
pub fn minus_reduced(z: &Cycle) -> Cycle {
    &z.clone() - &Cycle::reduced(z.len())
}

/// Rejects inputs outside the scope of the sequence algorithms.
pub fn validate(s: &Support) -> Result<()> {
    if !is_isolated(s) {
        return Err(Error::NotIsolated);
    }
    newton_polyhedron(s)?.require_compact()?;
    if !is_rhs_link(s)? {
        return Err(Error::NotRationalHomologySphere);
    }
    Ok(())
}

/// Kind I on the minimal model of a graph, with the vertices of degree at
/// least three as nodes (vertex `0` when there are none).
pub fn sequence_i(minimal: &PlumbingGraph, tie: TieBreak) -> Result<(SequenceResult, Cycle)> {
    let zk = canonical_cycle(minimal)?
        .to_integral()
        .ok_or_else(|| Error::Precondition("anticanonical cycle is not integral".into()))?;
    let mut nodes = minimal.nodes();
    if nodes.is_empty() && !minimal.is_empty() {
        nodes.push(0);
    }
    let op = LauferOperator::new(minimal, &nodes)?;
    let shifted = minus_reduced(&zk);
    let test = RatioTest {
        kind: RatioTestKind::I,
        offsets: vec![BigInt::zero(); nodes.len()],
        denominators: op.nodes().iter().map(|&n| shifted.get(n).clone()).collect(),
        target: zk.clone(),
    };
    ensure_internal!(op.x(&zk)? == zk, "Z_K is not fixed by the Laufer operator");
    Ok((run_sequence(&op, &test, &Stop::Target, tie)?, zk))
}

/// Oka graph of a convenient support with its sequence data.
#[derive(Clone, Debug)]
pub struct ConvenientData {
    pub support: Support,
    pub oka: OkaGraph,
    pub laufer: LauferOperator,
    pub zk: Cycle,
    pub wt_f: Cycle,
    pub wt_xyz: Cycle,
}

impl ConvenientData {
    pub fn new(s: &Support) -> Result<Self> {
        if !is_convenient(s) {
            return Err(Error::Precondition("diagram is not convenient".into()));
        }
        let oka = oka_graph(s)?;
        let zk = merle_teissier_zk(&oka, s);
        let adj = canonical_cycle(&oka.graph)?;
        ensure_internal!(adj == zk.to_rat(), "Z_K differs from E + wt(f) - wt(x1 x2 x3)");
        let laufer = LauferOperator::for_oka(&oka)?;
        let wt_f = wt_cycle(&oka, s);
        let xyz = Support::new(vec![IntVec3::new(1, 1, 1)])?;
        let wt_xyz = wt_cycle(&oka, &xyz);
        Ok(ConvenientData { support: s.clone(), oka, laufer, zk, wt_f, wt_xyz })
    }

    fn node_values(&self, c: &Cycle) -> Vec<BigInt> {
        self.oka.nodes().map(|n| c.get(n).clone()).collect()
    }

    pub fn ratio_test(&self, kind: RatioTestKind) -> Result<RatioTest> {
        let n = self.oka.num_nodes();
        let (offsets, denominators, target) = match kind {
            RatioTestKind::I => {
                let shifted = minus_reduced(&self.zk);
                (vec![BigInt::zero(); n], self.node_values(&shifted), self.zk.clone())
            }
            RatioTestKind::II => (vec![BigInt::zero(); n], self.node_values(&self.wt_f), self.wt_f.clone()),
            RatioTestKind::III => (
                self.node_values(&self.wt_xyz),
                self.node_values(&self.wt_f),
                self.laufer.x(&minus_reduced(&self.zk))?,
            ),
        };
        Ok(RatioTest { kind, offsets, denominators, target })
    }

    pub fn run(&self, kind: RatioTestKind, stop: &Stop, tie: TieBreak) -> Result<SequenceResult> {
        run_sequence(&self.laufer, &self.ratio_test(kind)?, stop, tie)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwInvariant {
    /// `sw^0_M(sigma_can) - (Z_K^2 + |V|) / 8`.
    pub value: BigInt,
    pub zk_sq: BigInt,
    pub vertex_count: usize,
}

/// Everything needed for the headline invariants of one input.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub support: Support,
    pub convenient: ConvenientData,
    pub oka: OkaGraph,
    pub minimal: PlumbingGraph,
    /// Old vertex id in `oka.graph` of each vertex of `minimal`.
    pub minimal_map: Vec<usize>,
    pub minimal_zk: Cycle,
    pub seq_i: SequenceResult,
    pub seq_iii: SequenceResult,
    pub tie: TieBreak,
}

impl Analysis {
    pub fn new(s: &Support) -> Result<Self> {
        Analysis::with_tie_break(s, TieBreak::default())
    }

    pub fn with_tie_break(s: &Support, tie: TieBreak) -> Result<Self> {
        validate(s)?;
        let conv = make_convenient(s)?;
        let convenient = ConvenientData::new(&conv)?;
        let oka = if conv == *s { convenient.oka.clone() } else { oka_graph(s)? };
        let (minimal, minimal_map) = minimal_model_with_map(&oka.graph)?;
        let (seq_i, minimal_zk) = sequence_i(&minimal, tie)?;
        let seq_iii = convenient.run(RatioTestKind::III, &Stop::Target, tie)?;
        let (a1, a3) = (seq_i.a_sum(), seq_iii.a_sum());
        ensure_internal!(a1 == a3, "sequences I and III give {a1} and {a3}");
        Ok(Analysis {
            support: s.clone(),
            convenient,
            oka,
            minimal,
            minimal_map,
            minimal_zk,
            seq_i,
            seq_iii,
            tie,
        })
    }

    pub fn geometric_genus(&self) -> BigInt {
        self.seq_iii.a_sum()
    }

    /// Sums over sequences I and III; equal by construction of [`Analysis`].
    pub fn genus_pair(&self) -> (BigInt, BigInt) {
        (self.seq_i.a_sum(), self.seq_iii.a_sum())
    }

    pub fn spectrum_leq0(&self) -> Result<SpectrumPart> {
        let mut out = Vec::new();
        for st in &self.seq_iii.steps {
            let r = st
                .r
                .as_ref()
                .ok_or_else(|| Error::Internal("infinite ratio in sequence III".into()))?;
            let mut k = BigInt::zero();
            while k < st.a {
                out.push(r - Rational::one());
                k += 1;
            }
        }
        SpectrumPart::new(out)
    }

    pub fn sequence_ii(&self, max: &Rational) -> Result<SequenceResult> {
        self.convenient.run(RatioTestKind::II, &Stop::MaxRatio(max.clone()), self.tie)
    }

    /// `sum a_i t^{r_i}` over sequence II, exponents up to `max`.
    pub fn poincare_via_sequence(&self, max: &Rational) -> Result<PuiseuxPoly> {
        if !max.is_positive() {
            return Err(Error::OutOfRange("maximal exponent must be positive".into()));
        }
        let mut out = PuiseuxPoly::zero();
        for st in self.sequence_ii(max)?.steps {
            let r = st.r.ok_or_else(|| Error::Internal("infinite ratio in sequence II".into()))?;
            out.add_term(r, st.a);
        }
        Ok(out)
    }

    pub fn sw_invariant(&self) -> SwInvariant {
        SwInvariant {
            value: self.seq_i.a_sum(),
            zk_sq: self.minimal.form(&self.minimal_zk, &self.minimal_zk),
            vertex_count: self.minimal.len(),
        }
    }

    /// `sw^0_M(sigma_can)` itself: `value + (Z_K^2 + |V|) / 8`.
    pub fn sw_canonical(&self) -> Rational {
        let sw = self.sw_invariant();
        rat_int(&sw.value)
            + Rational::new(sw.zk_sq + BigInt::from(sw.vertex_count), BigInt::from(8))
    }
}
