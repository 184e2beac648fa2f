//! Brute-force evaluation of zeta function and counting function
//! coefficients, and of the lattice point sets cut out by a computation
//! sequence.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{ensure_internal, Error, Result};
use crate::graph::{Cycle, IntersectionData, OkaGraph, PlumbingGraph};
use crate::lattice::{ceil_rat, IntVec3, Rational};
use crate::sequences::{LauferOperator, RatioTestKind, SequenceResult};

pub type PointSet = BTreeSet<IntVec3>;

/// Coefficient of `x^a` in `(1 - x)^{delta - 2}`.
fn factor_coeff(delta: usize, a: u64) -> BigInt {
    match delta {
        0 => BigInt::from(a + 1),
        1 => BigInt::one(),
        2 => {
            if a == 0 {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        }
        d => {
            let e = (d - 2) as u64;
            if a > e {
                return BigInt::zero();
            }
            let c = BigInt::from(binomial(e, a));
            if a.is_multiple_of(2) {
                c
            } else {
                -c
            }
        }
    }
}

fn small_coeff(delta: usize, a: u64) -> i128 {
    factor_coeff(delta, a).to_i128().expect("binomial of a vertex degree fits")
}

fn max_exponent(delta: usize) -> Option<u64> {
    match delta {
        0 | 1 => None,
        d => Some((d - 2) as u64),
    }
}

/// Exponent assignments over the vertices of degree other than two, with
/// all cycles scaled by `|H|` so that they become integral.
struct Enumerator<'a> {
    g: &'a PlumbingGraph,
    scale: BigInt,
    duals: Vec<Vec<i128>>,
    order: Vec<usize>,
}

fn to_i128(x: &BigInt) -> Result<i128> {
    x.to_i128().ok_or_else(|| Error::OutOfRange("enumeration exceeds 128-bit range".into()))
}

impl<'a> Enumerator<'a> {
    fn new(data: &'a IntersectionData, g: &'a PlumbingGraph) -> Result<Self> {
        if !g.is_tree() || !g.all_genera_zero() {
            return Err(Error::NotTree);
        }
        let scale = data.group_order.clone();
        let duals = data
            .dual_cycles
            .iter()
            .map(|c| {
                c.coeffs()
                    .iter()
                    .map(|x| {
                        let y = x * Rational::from_integer(scale.clone());
                        ensure_internal!(y.is_integer(), "|H| does not clear a denominator");
                        to_i128(&y.to_integer())
                    })
                    .collect::<Result<Vec<i128>>>()
            })
            .collect::<Result<_>>()?;
        // bounded factors first so that pruning acts early on the long ranges
        let mut order: Vec<usize> = (0..g.len()).filter(|&v| g.degree(v) != 2).collect();
        order.sort_by_key(|&v| (max_exponent(g.degree(v)).is_none(), v));
        Ok(Enumerator { g, scale, duals, order })
    }

    fn scaled(&self, l: &Cycle) -> Result<Vec<i128>> {
        l.coeffs().iter().map(|x| to_i128(&(x * &self.scale))).collect()
    }

    /// Calls `visit(sum, coefficient)` for every exponent assignment with
    /// nonzero coefficient whose partial sums satisfy `keep`. `keep` must be
    /// monotone: once false it stays false when more is added.
    fn walk(&self, keep: &dyn Fn(&[i128]) -> bool, visit: &mut dyn FnMut(&[i128], i128)) {
        self.walk_first(self.order.len(), keep, visit);
    }

    /// Like [`Enumerator::walk`] over the first `depth` vertices of `order`.
    fn walk_first(
        &self,
        depth: usize,
        keep: &dyn Fn(&[i128]) -> bool,
        visit: &mut dyn FnMut(&[i128], i128),
    ) {
        let mut sum = vec![0i128; self.g.len()];
        self.rec(0, depth, &mut sum, 1, keep, visit);
    }

    #[allow(clippy::too_many_arguments)]
    fn rec(
        &self,
        i: usize,
        depth: usize,
        sum: &mut [i128],
        coeff: i128,
        keep: &dyn Fn(&[i128]) -> bool,
        visit: &mut dyn FnMut(&[i128], i128),
    ) {
        if !keep(sum) {
            return;
        }
        if i == depth {
            visit(sum, coeff);
            return;
        }
        let v = self.order[i];
        let delta = self.g.degree(v);
        let cap = max_exponent(delta);
        let dual = &self.duals[v];
        let mut a = 0u64;
        while !cap.is_some_and(|c| a > c) && keep(sum) {
            let c = small_coeff(delta, a);
            if c != 0 {
                self.rec(i + 1, depth, sum, coeff * c, keep, visit);
            }
            for (s, d) in sum.iter_mut().zip(dual) {
                *s += d;
            }
            a += 1;
        }
        let a = a as i128;
        for (s, d) in sum.iter_mut().zip(dual) {
            *s -= a * d;
        }
    }
}

fn le_cycle(sum: &[Rational], l: &Cycle) -> bool {
    sum.iter().enumerate().all(|(v, s)| s <= &Rational::from_integer(l.get(v).clone()))
}

/// `z_l`: coefficient of `t^l` in `prod_v (1 - t^{E_v^*})^{delta_v - 2}`.
pub fn zeta_coefficient(data: &IntersectionData, g: &PlumbingGraph, l: &Cycle) -> Result<BigInt> {
    let e = Enumerator::new(data, g)?;
    let target = e.scaled(l)?;
    let mut total = BigInt::zero();
    e.walk(&|s| s.iter().zip(&target).all(|(x, y)| x <= y), &mut |s, c| {
        if s == target.as_slice() {
            total += c;
        }
    });
    Ok(total)
}

/// `z_l` by multiplying out the factors, each truncated to the box below `l`.
pub fn zeta_coefficient_by_product(
    data: &IntersectionData,
    g: &PlumbingGraph,
    l: &Cycle,
) -> Result<BigInt> {
    if !g.is_tree() || !g.all_genera_zero() {
        return Err(Error::NotTree);
    }
    let n = g.len();
    let mut poly: BTreeMap<Vec<Rational>, BigInt> = BTreeMap::new();
    poly.insert(vec![Rational::zero(); n], BigInt::one());
    for v in 0..n {
        let delta = g.degree(v);
        let dual = data.dual_cycles[v].coeffs();
        let mut factor: Vec<(Vec<Rational>, BigInt)> = Vec::new();
        let mut exp = vec![Rational::zero(); n];
        let mut a = 0u64;
        while le_cycle(&exp, l) && max_exponent(delta).is_none_or(|c| a <= c) {
            factor.push((exp.clone(), factor_coeff(delta, a)));
            for (x, d) in exp.iter_mut().zip(dual) {
                *x += d;
            }
            a += 1;
        }
        let mut next: BTreeMap<Vec<Rational>, BigInt> = BTreeMap::new();
        for (e1, c1) in &poly {
            for (e2, c2) in &factor {
                let e: Vec<Rational> = e1.iter().zip(e2).map(|(x, y)| x + y).collect();
                if le_cycle(&e, l) {
                    *next.entry(e).or_insert_with(BigInt::zero) += c1 * c2;
                }
            }
        }
        next.retain(|_, c| !c.is_zero());
        poly = next;
    }
    let key: Vec<Rational> = l.coeffs().iter().map(|x| Rational::from_integer(x.clone())).collect();
    Ok(poly.get(&key).cloned().unwrap_or_default())
}

/// Bound on `sum_v a_v` for the assignments that can contribute to `q_l`.
/// Every entry of every `E_v^*` is at least `min_entry`, so an assignment
/// with `sum a_v > max_v m_v(l) / min_entry` gives a cycle `>= l`.
pub fn counting_bound(data: &IntersectionData, l: &Cycle) -> Result<BigInt> {
    let min = data
        .min_dual_entry()
        .ok_or_else(|| Error::Precondition("empty graph".into()))?;
    let max = l.coeffs().iter().max().cloned().unwrap_or_default();
    Ok(ceil_rat(&(Rational::from_integer(max) / min)) + BigInt::one())
}

/// `q_l = sum { z_{l + l''} : l'' in L, l'' not >= 0 }` for `l` in `L`.
pub fn counting_q(data: &IntersectionData, g: &PlumbingGraph, l: &Cycle) -> Result<BigInt> {
    let e = Enumerator::new(data, g)?;
    let target = e.scaled(l)?;
    let d = to_i128(&e.scale)?;
    let mut total = BigInt::zero();
    // partial sums only grow, so a branch stays alive while some coordinate
    // is below l; this also keeps sum a_v within counting_bound
    let not_above = |s: &[i128]| s.iter().zip(&target).any(|(x, y)| x < y);
    let last = e.order.last().copied().filter(|&v| g.degree(v) == 1);
    match last {
        None => e.walk(&not_above, &mut |s, c| {
            if s.iter().all(|x| x % d == 0) {
                total += c;
            }
        }),
        Some(end) => {
            let tail = EndTail::new(&e.duals[end], d);
            e.walk_first(e.order.len() - 1, &not_above, &mut |s, c| {
                total += c * i128::from(tail.count(s, &target));
            });
        }
    }
    Ok(total)
}

/// Closed form for the last factor `(1 - t^{E_e^*})^{-1}` of an end `e`:
/// counts `a >= 0` with `s + a E_e^*` integral and not `>= l`.
struct EndTail {
    dual: Vec<i128>,
    scale: i128,
    order: u64,
    /// Residues of `k E_e^*` modulo `scale` for `k < order`.
    residues: HashMap<Vec<i128>, u64>,
}

impl EndTail {
    fn new(dual: &[i128], scale: i128) -> Self {
        let mut residues = HashMap::new();
        let mut cur = vec![0i128; dual.len()];
        let mut k = 0u64;
        loop {
            residues.insert(cur.clone(), k);
            k += 1;
            for (c, x) in cur.iter_mut().zip(dual) {
                *c = (*c + x).rem_euclid(scale);
            }
            if cur.iter().all(|&c| c == 0) {
                break;
            }
        }
        EndTail { dual: dual.to_vec(), scale, order: k, residues }
    }

    fn count(&self, s: &[i128], target: &[i128]) -> u64 {
        // a stays admissible while some coordinate is below the target
        let limit = s
            .iter()
            .zip(&self.dual)
            .zip(target)
            .map(|((x, d), t)| if x < t { (t - x + d - 1) / d } else { 0 })
            .max()
            .unwrap_or(0) as u64;
        let need: Vec<i128> = s.iter().map(|x| (-x).rem_euclid(self.scale)).collect();
        match self.residues.get(&need) {
            Some(&k0) if k0 < limit => (limit - 1 - k0) / self.order + 1,
            _ => 0,
        }
    }
}

/// `q_l` by enumerating every assignment, without the closed form for the
/// last end.
pub fn counting_q_plain(data: &IntersectionData, g: &PlumbingGraph, l: &Cycle) -> Result<BigInt> {
    let e = Enumerator::new(data, g)?;
    let target = e.scaled(l)?;
    let d = to_i128(&e.scale)?;
    let mut total = BigInt::zero();
    e.walk(&|s| s.iter().zip(&target).any(|(x, y)| x < y), &mut |s, c| {
        if s.iter().all(|x| x % d == 0) {
            total += c;
        }
    });
    Ok(total)
}

/// Partial products keyed by `(m_n for n in S, class of the cycle in H)`.
type NodeStates = BTreeMap<(Vec<i128>, Vec<i128>), i128>;

/// `q_l` for a cycle fixed by the Laufer operator of `nodes`.
///
/// Every exponent of the zeta function is a nonnegative combination of the
/// `E_v^*`, and such an integral cycle is `>= l` as soon as it is `>= l` on
/// the nodes. The count is then a sum over nonempty node subsets `S`, with
/// sign `(-1)^{|S|+1}`, of the terms lying below `l` on every node of `S`,
/// each evaluated by a dynamic program over node values and classes in `H`.
pub fn counting_q_on_nodes(
    data: &IntersectionData,
    g: &PlumbingGraph,
    nodes: &[usize],
    l: &Cycle,
) -> Result<BigInt> {
    if nodes.is_empty() {
        return Err(Error::Precondition("empty node set".into()));
    }
    if LauferOperator::new(g, nodes)?.x(l)? != *l {
        return Err(Error::Precondition("cycle is not fixed by the Laufer operator".into()));
    }
    let e = Enumerator::new(data, g)?;
    let target = e.scaled(l)?;
    let d = to_i128(&e.scale)?;
    let mut nodes = nodes.to_vec();
    nodes.sort();
    nodes.dedup();
    let mut total = BigInt::zero();
    for mask in 1u32..(1 << nodes.len()) {
        let subset: Vec<usize> = (0..nodes.len()).filter(|i| mask >> i & 1 == 1).map(|i| nodes[i]).collect();
        let below = e.count_below(&subset, &target, d);
        if mask.count_ones() % 2 == 1 {
            total += below;
        } else {
            total -= below;
        }
    }
    Ok(total)
}

impl Enumerator<'_> {
    /// Sum of the coefficients of integral exponents below `target` on
    /// every vertex of `subset`.
    fn count_below(&self, subset: &[usize], target: &[i128], d: i128) -> i128 {
        let n = self.g.len();
        let fits = |vals: &[i128]| vals.iter().zip(subset).all(|(x, &v)| *x < target[v]);
        let shift = |key: &(Vec<i128>, Vec<i128>), dual: &[i128], a: i128| {
            let vals: Vec<i128> = key.0.iter().zip(subset).map(|(x, &v)| x + a * dual[v]).collect();
            let class: Vec<i128> = key.1.iter().zip(dual).map(|(c, x)| (c + a * x).rem_euclid(d)).collect();
            (vals, class)
        };
        let mut states = NodeStates::new();
        let start = (vec![0i128; subset.len()], vec![0i128; n]);
        if fits(&start.0) {
            states.insert(start, 1);
        }
        for &v in &self.order {
            let delta = self.g.degree(v);
            let dual = &self.duals[v];
            match max_exponent(delta) {
                Some(cap) => {
                    let mut next = NodeStates::new();
                    for (key, c) in &states {
                        for a in 0..=cap {
                            let k = shift(key, dual, a as i128);
                            if !fits(&k.0) {
                                break;
                            }
                            *next.entry(k).or_insert(0) += c * small_coeff(delta, a);
                        }
                    }
                    next.retain(|_, c| *c != 0);
                    states = next;
                }
                None => {
                    // (1 - t^E*)^{-1}, applied twice for an isolated vertex
                    for _ in 0..(2 - delta) {
                        let mut cursor = states.keys().next().cloned();
                        while let Some(key) = cursor {
                            let c = states[&key];
                            let k = shift(&key, dual, 1);
                            if fits(&k.0) {
                                *states.entry(k).or_insert(0) += c;
                            }
                            cursor = states
                                .range((std::ops::Bound::Excluded(&key), std::ops::Bound::Unbounded))
                                .next()
                                .map(|(k, _)| k.clone());
                        }
                    }
                }
            }
        }
        states
            .iter()
            .filter(|((_, class), _)| class.iter().all(|&c| c == 0))
            .map(|(_, c)| c)
            .sum()
    }
}

/// `q_l` by whichever exact method suits the graph: full enumeration for few
/// ends, the star reduction or the node program otherwise.
pub fn counting_q_auto(data: &IntersectionData, g: &PlumbingGraph, l: &Cycle) -> Result<BigInt> {
    const ENUMERATION_MAX_ENDS: usize = 6;
    let nodes = g.nodes();
    if g.ends().len() <= ENUMERATION_MAX_ENDS || nodes.is_empty() {
        counting_q(data, g, l)
    } else if nodes.len() == 1 {
        counting_q_star(data, g, l)
    } else {
        counting_q_on_nodes(data, g, &nodes, l)
    }
}

/// `q_l` on a star-shaped graph, for a cycle fixed by the Laufer operator
/// of the central vertex.
///
/// An exponent `l' = n E_0^* + sum_i a_i E_{e_i}^*` is fixed by its node
/// coefficient `m_0 = m_0(l')` and the `a_i`: along leg `i` the coefficients
/// are affine in `(m_0, a_i)`, and `n` follows from `(l', E_0) = -n`. The sum
/// runs over integers `0 <= m_0 < m_0(l)` and integral leg coefficients.
pub fn counting_q_star(data: &IntersectionData, g: &PlumbingGraph, l: &Cycle) -> Result<BigInt> {
    if !g.is_tree() || !g.all_genera_zero() {
        return Err(Error::NotTree);
    }
    let not_star = || Error::Precondition("graph is not star shaped".into());
    let nodes = g.nodes();
    let &[center] = nodes.as_slice() else {
        return Err(not_star());
    };
    if LauferOperator::new(g, &nodes)?.x(l)? != *l {
        return Err(Error::Precondition("cycle is not fixed by the Laufer operator".into()));
    }
    ensure_internal!(data.matrix.len() == g.len(), "intersection data of another graph");
    let legs: Vec<Leg> = g.neighbors(center).iter().map(|&v| Leg::new(g, center, v)).collect::<Result<_>>()?;
    let scale = legs.iter().fold(1i128, |acc, leg| num_integer::lcm(acc, leg.det));
    let k = legs.len() as u64;
    let b0 = to_i128(&g.vertex(center).b)?;
    let top = to_i128(l.get(center))?;
    let mut total = BigInt::zero();
    for m0 in 0..top {
        // sum over legs of the coefficient next to the center, times `scale`
        let budget = b0 * m0 * scale;
        let mut conv: BTreeMap<i128, i128> = BTreeMap::from([(0, 1)]);
        for leg in &legs {
            let options = leg.first_coefficients(m0, budget / scale * leg.det);
            let mut next = BTreeMap::new();
            for (s, c) in &conv {
                for y in &options {
                    let t = s + y * (scale / leg.det);
                    if t > budget {
                        break;
                    }
                    *next.entry(t).or_insert(0) += c;
                }
            }
            conv = next;
        }
        for n in 0..=k - 2 {
            if let Some(c) = conv.get(&(budget - n as i128 * scale)) {
                total += small_coeff(k as usize, n) * c;
            }
        }
    }
    Ok(total)
}

/// A chain hanging off the center, first vertex adjacent to it.
struct Leg {
    det: i128,
    /// Columns of the adjugate of the leg matrix for the first and last
    /// vertex, signs chosen so that `det * m = m_0 * from_center + a * from_end`.
    from_center: Vec<i128>,
    from_end: Vec<i128>,
}

impl Leg {
    fn new(g: &PlumbingGraph, center: usize, first: usize) -> Result<Self> {
        let mut chain = vec![first];
        let mut prev = center;
        while g.degree(*chain.last().unwrap()) == 2 {
            let cur = *chain.last().unwrap();
            let next = g.neighbors(cur).iter().copied().find(|&w| w != prev).unwrap();
            prev = cur;
            chain.push(next);
        }
        ensure_internal!(g.degree(*chain.last().unwrap()) == 1, "leg does not end in an end vertex");
        let full = g.intersection_matrix();
        let m: Vec<Vec<BigInt>> = chain.iter().map(|&u| chain.iter().map(|&w| full[u][w].clone()).collect()).collect();
        let det = crate::linalg::determinant(&m);
        let inv = crate::linalg::inverse(&m).ok_or(Error::NotNegativeDefinite)?;
        let s = chain.len();
        let column = |j: usize| -> Result<Vec<i128>> {
            (0..s)
                .map(|i| {
                    let y = -(&inv[i][j]) * Rational::from_integer(det.clone());
                    ensure_internal!(y.is_integer(), "adjugate entry is not integral");
                    to_i128(&y.to_integer())
                })
                .collect()
        };
        let (from_center, from_end) = (column(0)?, column(s - 1)?);
        let det = to_i128(&det)?;
        let sign = if det < 0 { -1 } else { 1 };
        Ok(Leg {
            det: det * sign,
            from_center: from_center.into_iter().map(|x| x * sign).collect(),
            from_end: from_end.into_iter().map(|x| x * sign).collect(),
        })
    }

    /// `det * m_1` over the `a >= 0` giving integral leg coefficients, in
    /// increasing order up to `bound`.
    fn first_coefficients(&self, m0: i128, bound: i128) -> Vec<i128> {
        let mut out = Vec::new();
        let mut a = 0i128;
        loop {
            let y = m0 * self.from_center[0] + a * self.from_end[0];
            if y > bound {
                break;
            }
            let integral = self
                .from_center
                .iter()
                .zip(&self.from_end)
                .all(|(p, q)| (m0 * p + a * q) % self.det == 0);
            if integral {
                out.push(y);
            }
            a += 1;
        }
        out
    }
}

/// `min_v (ell_v(p) - m_v(Z))`; `p` lies in `Gamma_+(Z)` iff this is `>= 0`.
fn slack(og: &OkaGraph, z: &Cycle, p: &IntVec3) -> BigInt {
    og.ell
        .iter()
        .enumerate()
        .map(|(v, l)| l.dot(p) - z.get(v))
        .min()
        .unwrap_or_default()
}

pub fn in_gamma_plus(og: &OkaGraph, z: &Cycle, p: &IntVec3) -> bool {
    p.is_nonneg() && !slack(og, z, p).is_negative()
}

/// Points of `Z^3_{>=0}` with `ell(p) = m`, for a positive functional `ell`.
fn points_on(ell: &IntVec3, m: &BigInt) -> Vec<IntVec3> {
    let mut out = Vec::new();
    if m.is_negative() {
        return out;
    }
    let [a, b, c] = ell.coords();
    let mut x = BigInt::zero();
    while &(a * &x) <= m {
        let mut y = BigInt::zero();
        while &(a * &x + b * &y) <= m {
            let rest = m - a * &x - b * &y;
            if (&rest % c).is_zero() {
                out.push(IntVec3::from_big(x.clone(), y.clone(), rest / c));
            }
            y += 1;
        }
        x += 1;
    }
    out
}

/// `Z^3_{>=0} \ Gamma_+(Z)`.
pub fn complement_of_gamma_plus(og: &OkaGraph, z: &Cycle) -> PointSet {
    let mut out = PointSet::new();
    for (v, l) in og.ell.iter().enumerate() {
        let m = z.get(v);
        let mut k = BigInt::zero();
        while &k < m {
            for p in points_on(l, &k) {
                out.insert(p);
            }
            k += 1;
        }
    }
    out
}

/// `P_i = Gamma_+(Z_i) \ Gamma_+(Z_i + E_{v(i)})` for every step.
pub fn point_sets(og: &OkaGraph, seq: &SequenceResult) -> Result<Vec<PointSet>> {
    let mut out = Vec::with_capacity(seq.steps.len());
    for st in &seq.steps {
        if st.z.len() != og.len() {
            return Err(Error::InvalidGraph("sequence lives on another graph".into()));
        }
        let set: PointSet = points_on(&og.ell[st.v], st.z.get(st.v))
            .into_iter()
            .filter(|p| in_gamma_plus(og, &st.z, p))
            .collect();
        out.push(set);
    }
    Ok(out)
}

/// Per-step point sets of a sequence of kind I or III, checking that they
/// are disjoint, cover `Z^3_{>=0} \ Gamma_+(target)` and have `a_i` elements.
pub fn enumerate_p(og: &OkaGraph, seq: &SequenceResult) -> Result<Vec<PointSet>> {
    if seq.kind == RatioTestKind::II {
        return Err(Error::KindMismatch("use enumerate_p_prefix for kind II".into()));
    }
    let sets = point_sets(og, seq)?;
    check_partition(&sets, &complement_of_gamma_plus(og, &seq.target))?;
    for (i, (s, st)) in sets.iter().zip(&seq.steps).enumerate() {
        ensure_internal!(BigInt::from(s.len()) == st.a, "step {i}: {} points, a = {}", s.len(), st.a);
    }
    Ok(sets)
}

/// The first `k` point sets of a kind II sequence, checked against
/// `Z^3_{>=0} \ Gamma_+(wt(f))`.
pub fn enumerate_p_prefix(og: &OkaGraph, seq: &SequenceResult) -> Result<Vec<PointSet>> {
    if seq.kind != RatioTestKind::II {
        return Err(Error::KindMismatch("prefix sets are defined for kind II".into()));
    }
    let k: usize = seq
        .k
        .clone()
        .try_into()
        .map_err(|_| Error::OutOfRange("sequence too long".into()))?;
    ensure_internal!(seq.steps.len() >= k, "sequence II shorter than one period");
    let mut prefix = seq.clone();
    prefix.steps.truncate(k);
    let sets = point_sets(og, &prefix)?;
    check_partition(&sets, &complement_of_gamma_plus(og, &seq.target))?;
    for (i, (s, st)) in sets.iter().zip(&prefix.steps).enumerate() {
        ensure_internal!(BigInt::from(s.len()) == st.a, "step {i}: {} points, a = {}", s.len(), st.a);
    }
    Ok(sets)
}

fn check_partition(sets: &[PointSet], whole: &PointSet) -> Result<()> {
    let mut seen = PointSet::new();
    for (i, s) in sets.iter().enumerate() {
        for p in s {
            ensure_internal!(seen.insert(p.clone()), "point {p} appears twice, again at step {i}");
        }
    }
    ensure_internal!(&seen == whole, "point sets do not cover the complement");
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::intersection_data;
    use crate::graph::tests::{e8, star};
    use crate::graph::Vertex;
    use crate::lattice::int;
    use crate::sequences::Analysis;
    use crate::Support;

    fn boxed(n: usize, max: i64) -> Vec<Cycle> {
        let mut out = vec![Cycle::zero(n)];
        for v in 0..n {
            let mut next = Vec::new();
            for c in &out {
                for x in 0..=max {
                    let mut d = c.clone();
                    d.set(v, int(x));
                    next.push(d);
                }
            }
            out = next;
        }
        out
    }

    #[test]
    fn single_vertex_zeta() {
        let g = PlumbingGraph::new(vec![Vertex::new(2, 0)], vec![]).unwrap();
        let d = intersection_data(&g).unwrap();
        for m in 0..5 {
            let l = Cycle::from_i64(&[m]);
            assert_eq!(zeta_coefficient(&d, &g, &l).unwrap(), int(2 * m + 1));
            assert_eq!(zeta_coefficient_by_product(&d, &g, &l).unwrap(), int(2 * m + 1));
        }
    }

    #[test]
    fn zeta_paths_agree_and_live_on_lipman_cone() {
        for g in [star(2, &[1, 1, 2]), star(3, &[1, 1, 1])] {
            let d = intersection_data(&g).unwrap();
            assert_eq!(zeta_coefficient(&d, &g, &Cycle::zero(g.len())).unwrap(), int(1));
            for l in boxed(g.len(), 3) {
                let z = zeta_coefficient(&d, &g, &l).unwrap();
                assert_eq!(z, zeta_coefficient_by_product(&d, &g, &l).unwrap());
                if !z.is_zero() {
                    assert!((0..g.len()).all(|v| !g.pairing(&l, v).is_positive()), "{l}");
                }
            }
        }
    }

    #[test]
    fn counting_paths_agree() {
        let g = e8();
        let d = intersection_data(&g).unwrap();
        assert_eq!(counting_q(&d, &g, &Cycle::zero(8)).unwrap(), int(0));
        for l in [Cycle::reduced(8), Cycle::from_i64(&[6, 3, 4, 2, 5, 4, 3, 2])] {
            assert_eq!(counting_q(&d, &g, &l).unwrap(), counting_q_plain(&d, &g, &l).unwrap());
        }
        assert!(counting_bound(&d, &Cycle::reduced(8)).unwrap() >= int(1));
    }

    #[test]
    fn stepwise_identity() {
        for s in [Support::brieskorn(2, 3, 7), Support::brieskorn(2, 5, 7), Support::brieskorn(3, 4, 5)] {
            let a = Analysis::new(&s).unwrap();
            let d = intersection_data(&a.minimal).unwrap();
            let mut prev = int(0);
            for (i, st) in a.seq_i.steps.iter().enumerate() {
                let q = counting_q(&d, &a.minimal, &st.z).unwrap();
                assert_eq!(q, counting_q_plain(&d, &a.minimal, &st.z).unwrap());
                if i > 0 {
                    assert_eq!(&q - &prev, a.seq_i.steps[i - 1].a);
                }
                prev = q;
            }
            let q = counting_q(&d, &a.minimal, &a.minimal_zk).unwrap();
            assert_eq!(&q - &prev, a.seq_i.steps.last().unwrap().a);
            assert_eq!(q, a.geometric_genus());
        }
    }

    #[test]
    fn node_and_star_paths() {
        for s in [Support::brieskorn(2, 3, 7), Support::brieskorn(3, 4, 5), Support::brieskorn(2, 5, 7), Support::brieskorn(3, 3, 4)] {
            let a = Analysis::new(&s).unwrap();
            let g = &a.minimal;
            let d = intersection_data(g).unwrap();
            let nodes = g.nodes();
            let mut cycles: Vec<&Cycle> = a.seq_i.steps.iter().map(|st| &st.z).collect();
            cycles.push(&a.minimal_zk);
            for z in cycles {
                let q = counting_q(&d, g, z).unwrap();
                assert_eq!(counting_q_on_nodes(&d, g, &nodes, z).unwrap(), q);
                assert_eq!(counting_q_star(&d, g, z).unwrap(), q);
            }
        }
        let g = e8();
        let d = intersection_data(&g).unwrap();
        let not_fixed = Cycle::basis(g.len(), 1);
        assert!(matches!(counting_q_star(&d, &g, &not_fixed), Err(Error::Precondition(_))));
    }

    #[test]
    fn kind_checks() {
        let a = Analysis::new(&Support::brieskorn(2, 3, 7)).unwrap();
        assert!(matches!(
            enumerate_p_prefix(&a.convenient.oka, &a.seq_iii),
            Err(Error::KindMismatch(_))
        ));
        let sets = enumerate_p(&a.convenient.oka, &a.seq_iii).unwrap();
        let all: Vec<&IntVec3> = sets.iter().flatten().collect();
        assert_eq!(all, vec![&IntVec3::new(0, 0, 0)]);
    }
}
