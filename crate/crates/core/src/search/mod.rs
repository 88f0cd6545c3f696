//! Exhaustive searches over small signed graphs: spectral radius order k(λ),
//! the ratio k_p(λ), the multiplicity maximum M_{p,H}(λ, N), and verification
//! of linear multiplicity bounds.

mod cubic;
mod engine;

use std::cmp::{Ordering, Reverse};
use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::algebra::{format_rational, AlgebraicNumber};
use crate::constructions::verify_named;
use crate::graph::{canonical_form, chromatic_number, SignedGraph};
use crate::io::{number_from_json, number_to_json, parse_graph_value, signed_to_json, GraphFile};
use crate::spectral::{compare_top_eigenvalue, multiplicity_direct, tail_check, ShiftKernel};

pub use cubic::{cubic_graphs, reduce_order, OrderReduction};
pub use engine::{classes_of_order, enumerate_signed, with_jobs, Class, Constraints, Counters, LevelCount, Limits};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SearchError {
    #[error("order {requested} exceeds the enumeration cap {cap}")]
    LimitExceeded { requested: usize, cap: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("malformed report: {0}")]
    BadReport(String),
}

const WITNESS_CAP: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Mode {
    KOrder,
    KpRatio,
    MValue,
    BoundVerify,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::KOrder => "K_ORDER",
            Mode::KpRatio => "KP_RATIO",
            Mode::MValue => "M_VALUE",
            Mode::BoundVerify => "BOUND_VERIFY",
        }
    }

    fn parse(s: &str) -> Option<Self> {
        [Mode::KOrder, Mode::KpRatio, Mode::MValue, Mode::BoundVerify]
            .into_iter()
            .find(|m| m.as_str() == s)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchReport {
    pub mode: Mode,
    pub lambda: AlgebraicNumber,
    pub p: Option<usize>,
    pub n_max: usize,
    /// Best value found; `None` when nothing qualifies within `n_max`.
    pub value: Option<BigRational>,
    /// Verdict of a bound verification.
    pub pass: Option<bool>,
    /// Extremal graphs, smallest canonical keys first.
    pub witnesses: Vec<SignedGraph>,
    pub counters: Counters,
    pub bounds: Map<String, Value>,
    pub details: Map<String, Value>,
    pub notes: Vec<String>,
}

impl SearchReport {
    fn new(mode: Mode, lambda: &AlgebraicNumber, p: Option<usize>, n_max: usize) -> Self {
        SearchReport {
            mode,
            lambda: lambda.clone(),
            p,
            n_max,
            value: None,
            pass: None,
            witnesses: Vec::new(),
            counters: Counters::default(),
            bounds: Map::new(),
            details: Map::new(),
            notes: Vec::new(),
        }
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("mode".into(), json!(self.mode.as_str()));
        m.insert("lambda".into(), number_to_json(&self.lambda));
        m.insert("p".into(), json!(self.p));
        m.insert("n_max".into(), json!(self.n_max));
        m.insert("value".into(), json!(self.value.as_ref().map(format_rational)));
        if let Some(pass) = self.pass {
            m.insert("verdict".into(), json!(if pass { "PASS" } else { "FAIL" }));
        }
        m.insert(
            "witnesses".into(),
            Value::Array(self.witnesses.iter().map(signed_to_json).collect()),
        );
        m.insert("enumerated".into(), json!(self.counters.enumerated()));
        m.insert("pruned".into(), json!(self.counters.pruned));
        m.insert("generated".into(), json!(self.counters.generated));
        m.insert("levels".into(), json!(self.counters.levels));
        m.insert("bounds".into(), Value::Object(self.bounds.clone()));
        if !self.details.is_empty() {
            m.insert("details".into(), Value::Object(self.details.clone()));
        }
        if !self.notes.is_empty() {
            m.insert("notes".into(), json!(self.notes));
        }
        Value::Object(m)
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SearchOptions {
    pub jobs: Option<usize>,
    pub limits: Limits,
    /// Restrict the optimization to connected classes.
    pub connected: bool,
}

/// Smallest key seen, with the first few classes attaining it.
#[derive(Clone, Debug)]
struct Best<K> {
    key: Option<K>,
    items: Vec<Class>,
}

impl<K: Ord + Clone> Best<K> {
    fn new() -> Self {
        Best {
            key: None,
            items: Vec::new(),
        }
    }

    fn offer(&mut self, key: K, c: &Class) {
        match self.key.as_ref().map(|k| key.cmp(k)) {
            None | Some(Ordering::Less) => {
                self.key = Some(key);
                self.items = vec![c.clone()];
            }
            Some(Ordering::Equal) => {
                self.items.push(c.clone());
                self.tidy();
            }
            Some(Ordering::Greater) => {}
        }
    }

    fn tidy(&mut self) {
        self.items.sort_by(|a, b| a.code.cmp(&b.code));
        self.items.dedup_by(|a, b| a.code == b.code);
        self.items.truncate(WITNESS_CAP);
    }

    fn merge(mut self, other: Self) -> Self {
        match (&self.key, &other.key) {
            (_, None) => self,
            (None, _) => other,
            (Some(a), Some(b)) => match a.cmp(b) {
                Ordering::Less => self,
                Ordering::Greater => other,
                Ordering::Equal => {
                    self.items.extend(other.items);
                    self.tidy();
                    self
                }
            },
        }
    }
}

fn ratio(a: usize, b: usize) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

fn kernel(lambda: &AlgebraicNumber) -> Result<ShiftKernel, SearchError> {
    ShiftKernel::new(lambda).ok_or_else(|| SearchError::InvalidArgument(format!("λ = {lambda} has oversized coefficients")))
}

fn floor_square(lambda: &AlgebraicNumber) -> usize {
    lambda.square().floor().to_usize().unwrap_or(usize::MAX)
}

/// Signed graphs on at most `h` vertices with λ₁ > λ, stored by canonical key.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForbiddenFamily {
    pub lambda: AlgebraicNumber,
    pub h: usize,
    members: BTreeMap<Vec<u8>, SignedGraph>,
    codes: HashSet<Vec<u8>>,
    /// Holds every class on at most `h` vertices with λ₁ > λ.
    complete: bool,
}

impl ForbiddenFamily {
    pub fn empty(lambda: &AlgebraicNumber) -> Self {
        ForbiddenFamily {
            lambda: lambda.clone(),
            h: 0,
            members: BTreeMap::new(),
            codes: HashSet::new(),
            complete: false,
        }
    }

    /// A family from explicit members; each must have λ₁ > λ.
    pub fn from_members(lambda: &AlgebraicNumber, graphs: &[SignedGraph]) -> Result<Self, SearchError> {
        let mut f = ForbiddenFamily::empty(lambda);
        for g in graphs {
            if compare_top_eigenvalue(g, lambda).ordering != Ordering::Greater {
                return Err(SearchError::InvalidArgument(format!(
                    "family member on {} vertices does not have λ₁ > {lambda}",
                    g.n()
                )));
            }
            f.h = f.h.max(g.n());
            let code = canonical_form(g);
            f.codes.insert(code.clone());
            f.members.insert(code, g.clone());
        }
        Ok(f)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> impl Iterator<Item = &SignedGraph> {
        self.members.values()
    }

    pub fn codes(&self) -> &HashSet<Vec<u8>> {
        &self.codes
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Whether some induced subgraph of `g` is a member.
    pub fn occurs_in(&self, g: &SignedGraph) -> bool {
        let n = g.n();
        (1u32..1 << n).any(|mask| {
            let size = mask.count_ones() as usize;
            if size > self.h {
                return false;
            }
            let verts: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
            self.codes.contains(&canonical_form(&g.induced_subgraph(&verts).expect("distinct")))
        })
    }

    /// Degree bound implied for graphs with χ ≤ p that avoid the family:
    /// `max(1, p − 1)·⌊λ²⌋`, available once every graph on `⌊λ²⌋ + 2` vertices
    /// with λ₁ > λ is a member.
    pub fn degree_cap(&self, p: usize) -> Option<usize> {
        let d = floor_square(&self.lambda);
        (self.complete && self.h >= d.saturating_add(2)).then(|| p.saturating_sub(1).max(1) * d)
    }
}

pub fn forbidden_family(lambda: &AlgebraicNumber, h: usize) -> Result<ForbiddenFamily, SearchError> {
    if h > 6 {
        return Err(SearchError::LimitExceeded { requested: h, cap: 6 });
    }
    let k = kernel(lambda)?;
    let (members, _) = enumerate_signed(
        h,
        &Constraints::default(),
        Limits::default(),
        Vec::new,
        |acc: &mut Vec<Class>, c| {
            if k.psd_nullity(c.graph.n(), c.graph.adjacency()).is_none() {
                acc.push(c.clone());
            }
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    )?;
    let mut f = ForbiddenFamily::empty(lambda);
    f.h = h;
    f.complete = true;
    for c in members {
        f.codes.insert(c.code.clone());
        f.members.insert(c.code, c.graph);
    }
    Ok(f)
}

/// k(λ): fewest vertices of an unsigned graph with λ₁ exactly λ.
pub fn spectral_radius_order(lambda: &AlgebraicNumber, n_max: usize, opts: &SearchOptions) -> Result<SearchReport, SearchError> {
    if !lambda.is_positive() {
        return Err(SearchError::InvalidArgument("λ must be positive".into()));
    }
    let k = kernel(lambda)?;
    let constraints = Constraints {
        positive_only: true,
        top_cap: Some(lambda.clone()),
        connected: opts.connected,
        ..Default::default()
    };
    let (best, counters) = with_jobs(opts.jobs, || {
        enumerate_signed(
            n_max,
            &constraints,
            opts.limits,
            Best::<usize>::new,
            |b, c| {
                if k.psd_nullity(c.graph.n(), c.graph.adjacency()).unwrap_or(0) > 0 {
                    b.offer(c.graph.n(), c);
                }
            },
            Best::merge,
        )
    })?;
    let mut r = SearchReport::new(Mode::KOrder, lambda, None, n_max);
    r.counters = counters;
    r.value = best.key.map(|n| ratio(n, 1));
    r.witnesses = best.items.into_iter().map(|c| c.graph).collect();
    if r.value.is_none() {
        r.notes.push(format!("k(λ) > {n_max}"));
    }
    Ok(r)
}

/// `p·k/(p·k − 2λ)`.
pub fn kp_lower_bound(lambda: &AlgebraicNumber, p: usize, k: usize) -> AlgebraicNumber {
    let pk = AlgebraicNumber::from_int((p * k) as i64);
    let two_lambda = lambda.clone() * AlgebraicNumber::from_int(2);
    pk.clone() / (pk - two_lambda)
}

/// Minimum of `|G±| / mult(λ, G±)` over classes with χ ≤ p and λ₁ = λ.
pub fn kp_search(lambda: &AlgebraicNumber, p: usize, n_max: usize, opts: &SearchOptions) -> Result<SearchReport, SearchError> {
    if p == 0 {
        return Err(SearchError::InvalidArgument("p must be at least 1".into()));
    }
    if !lambda.is_positive() {
        return Err(SearchError::InvalidArgument("λ must be positive".into()));
    }
    let k = kernel(lambda)?;
    let constraints = Constraints {
        chi_max: Some(p),
        top_cap: Some(lambda.clone()),
        connected: opts.connected,
        ..Default::default()
    };
    let (best, counters) = with_jobs(opts.jobs, || {
        enumerate_signed(
            n_max,
            &constraints,
            opts.limits,
            Best::<BigRational>::new,
            |b, c| {
                let m = k.psd_nullity(c.graph.n(), c.graph.adjacency()).unwrap_or(0);
                if m > 0 {
                    b.offer(ratio(c.graph.n(), m), c);
                }
            },
            Best::merge,
        )
    })?;
    let mut r = SearchReport::new(Mode::KpRatio, lambda, Some(p), n_max);
    r.counters = counters;
    r.value = best.key;
    r.witnesses = best.items.into_iter().map(|c| c.graph).collect();
    r.notes.push(format!("minimum over classes on at most {n_max} vertices"));
    if r.value.is_none() {
        r.notes.push(format!("no graph on at most {n_max} vertices qualifies"));
    }
    let order = spectral_radius_order(lambda, n_max, &SearchOptions { connected: false, ..*opts })?;
    if let Some(kv) = order.value.as_ref().and_then(|v| v.to_integer().to_usize()) {
        r.bounds.insert("k".into(), json!(kv.to_string()));
        if p >= 2 {
            r.bounds.insert("kp_lower".into(), number_to_json(&kp_lower_bound(lambda, p, kv)));
        }
    }
    if *lambda == AlgebraicNumber::sqrt(3) && p >= 4 && r.value.as_ref().is_none_or(|v| *v > ratio(2, 1)) {
        let verified = verify_named("signed_hypercube", &[3]).is_ok();
        let mut b = Map::new();
        if let Some(lower) = r.bounds.get("kp_lower") {
            b.insert("lower".into(), lower.clone());
        }
        b.insert("upper".into(), json!("2"));
        b.insert("upper_witness".into(), json!("signed_hypercube(3)"));
        b.insert("upper_witness_verified".into(), json!(verified));
        r.bounds.insert("bracket".into(), Value::Object(b));
        r.notes.push("the 8-vertex witness attaining 2 lies beyond n_max".into());
    }
    if *lambda == AlgebraicNumber::from_int(2) && (p == 3 || p == 4) {
        let (lower, upper, witness) = if p == 3 { ("9/5", "9/4", "paley9") } else { ("3/2", "8/5", "clebsch") };
        let verified = verify_named(witness, &[]).is_ok();
        r.bounds.insert(
            "bracket".into(),
            json!({"lower": lower, "upper": upper, "upper_witness": witness, "upper_witness_verified": verified}),
        );
        if !verified {
            r.notes.push(format!("the {witness} witness for the upper end of the bracket fails verification"));
        }
    }
    Ok(r)
}

#[derive(Clone, Debug, Default)]
struct BoundTally {
    worst: Best<Reverse<BigRational>>,
    violations: u64,
    counterexamples: Vec<Class>,
    /// Classes on orders 4, 6, 8 whose multiplicity is half the order.
    half: BTreeMap<usize, BTreeSet<Vec<u8>>>,
    classes: u64,
}

impl Default for Best<Reverse<BigRational>> {
    fn default() -> Self {
        Best::new()
    }
}

impl BoundTally {
    fn merge(mut self, o: Self) -> Self {
        self.worst = self.worst.merge(o.worst);
        self.violations += o.violations;
        self.counterexamples.extend(o.counterexamples);
        self.counterexamples.sort_by(|a, b| a.code.cmp(&b.code));
        self.counterexamples.truncate(WITNESS_CAP);
        for (n, s) in o.half {
            self.half.entry(n).or_default().extend(s);
        }
        self.classes += o.classes;
        self
    }
}

fn tally_bound(
    lambda: &AlgebraicNumber,
    n_max: usize,
    c: &BigRational,
    constraints: &Constraints,
    opts: &SearchOptions,
) -> Result<(BoundTally, Counters), SearchError> {
    let k = kernel(lambda)?;
    with_jobs(opts.jobs, || {
        enumerate_signed(
            n_max,
            constraints,
            opts.limits,
            BoundTally::default,
            |t, cl| {
                let n = cl.graph.n();
                let m = k.nullity(n, cl.graph.adjacency());
                t.classes += 1;
                t.worst.offer(Reverse(ratio(m, n)), cl);
                if BigRational::from_integer(BigInt::from(m)) > c * BigInt::from(n) {
                    t.violations += 1;
                    t.counterexamples.push(cl.clone());
                    t.counterexamples.sort_by(|a, b| a.code.cmp(&b.code));
                    t.counterexamples.truncate(WITNESS_CAP);
                }
                if matches!(n, 4 | 6 | 8) && 2 * m == n {
                    t.half.entry(n).or_default().insert(cl.code.clone());
                }
            },
            BoundTally::merge,
        )
    })
}

fn reading_json(name: &str, t: &BoundTally, extra: &[(&str, Value)]) -> Value {
    let mut m = Map::new();
    m.insert("reading".into(), json!(name));
    for (k, v) in extra {
        m.insert((*k).into(), v.clone());
    }
    m.insert("classes".into(), json!(t.classes));
    m.insert(
        "max_ratio".into(),
        json!(t.worst.key.as_ref().map(|Reverse(r)| format_rational(r))),
    );
    m.insert("violations".into(), json!(t.violations));
    m.insert("verdict".into(), json!(if t.violations == 0 { "PASS" } else { "FAIL" }));
    Value::Object(m)
}

fn is_sqrt3_p3_three_sevenths(lambda: &AlgebraicNumber, p: usize, c: &BigRational) -> bool {
    *lambda == AlgebraicNumber::sqrt(3) && p == 3 && *c == ratio(3, 7)
}

/// Checks `mult(λ, G±) ≤ c·|G±|` for every class on at most `n_max` vertices
/// with χ ≤ p. A second pass restricts to classes avoiding the forbidden
/// family at `h = ⌊λ²⌋ + 2` with λ_{p+1} ≤ λ. For λ = √3, p = 3, c = 3/7 the
/// cubic `A² = 3I` reduction on orders 4, 6, 8 is attached and compared with
/// the enumeration where both apply.
pub fn verify_mult_bound(
    lambda: &AlgebraicNumber,
    p: usize,
    n_max: usize,
    c: &BigRational,
    opts: &SearchOptions,
) -> Result<SearchReport, SearchError> {
    if p == 0 {
        return Err(SearchError::InvalidArgument("p must be at least 1".into()));
    }
    let strong = Constraints {
        chi_max: Some(p),
        connected: opts.connected,
        ..Default::default()
    };
    let (t, counters) = tally_bound(lambda, n_max, c, &strong, opts)?;
    let mut r = SearchReport::new(Mode::BoundVerify, lambda, Some(p), n_max);
    r.counters = counters;
    r.value = t.worst.key.clone().map(|Reverse(x)| x);
    r.bounds.insert("c".into(), json!(format_rational(c)));
    let mut pass = t.violations == 0;
    r.witnesses = if pass {
        t.worst.items.iter().map(|x| x.graph.clone()).collect()
    } else {
        t.counterexamples.iter().map(|x| x.graph.clone()).collect()
    };
    let mut readings = vec![reading_json(
        if opts.connected { "chi_only_connected" } else { "chi_only" },
        &t,
        &[],
    )];
    let h = floor_square(lambda).saturating_add(2);
    if lambda.is_positive() && h <= 6 {
        let family = forbidden_family(lambda, h)?;
        let weak = Constraints {
            chi_max: Some(p),
            degree_cap: family.degree_cap(p),
            forbidden: Some(family),
            tail_cap: Some((p + 1, lambda.clone())),
            connected: opts.connected,
            ..Default::default()
        };
        let (tw, _) = tally_bound(lambda, n_max, c, &weak, opts)?;
        readings.push(reading_json("family_avoiding", &tw, &[("h", json!(h))]));
    }
    r.details.insert("readings".into(), Value::Array(readings));
    if is_sqrt3_p3_three_sevenths(lambda, p, c) {
        let mut orders = Vec::new();
        let mut agree_on = Vec::new();
        for n in [4, 6, 8] {
            let red = reduce_order(n);
            pass &= red.chi_at_most_3 == 0;
            if n <= n_max && !opts.connected {
                let from_enum = t.half.get(&n).cloned().unwrap_or_default();
                if from_enum == red.violating_classes {
                    agree_on.push(n);
                } else {
                    pass = false;
                    r.notes.push(format!("enumeration and cubic reduction disagree on order {n}"));
                }
            }
            orders.push(serde_json::to_value(&red).expect("serializable"));
        }
        r.details.insert(
            "cubic_reduction".into(),
            json!({"orders": orders, "agrees_on": agree_on}),
        );
    }
    r.pass = Some(pass);
    Ok(r)
}

/// M_{p,H}(λ, N): largest `mult(λ)` over classes on at most N vertices with
/// χ ≤ p and λ_{p+1} ≤ λ containing no induced member of `family`.
pub fn compute_m(
    lambda: &AlgebraicNumber,
    p: usize,
    n: usize,
    family: &ForbiddenFamily,
    opts: &SearchOptions,
) -> Result<SearchReport, SearchError> {
    if p == 0 {
        return Err(SearchError::InvalidArgument("p must be at least 1".into()));
    }
    let k = kernel(lambda)?;
    let constraints = Constraints {
        chi_max: Some(p),
        degree_cap: family.degree_cap(p),
        forbidden: (!family.is_empty()).then(|| family.clone()),
        tail_cap: Some((p + 1, lambda.clone())),
        connected: opts.connected,
        ..Default::default()
    };
    type Acc = (Best<Reverse<usize>>, BTreeMap<usize, usize>);
    let (acc, counters): (Acc, Counters) = with_jobs(opts.jobs, || {
        enumerate_signed(
            n,
            &constraints,
            opts.limits,
            || (Best::new(), BTreeMap::new()),
            |(b, per), c| {
                let size = c.graph.n();
                let m = k.nullity(size, c.graph.adjacency());
                b.offer(Reverse(m), c);
                let e = per.entry(size).or_insert(0);
                *e = (*e).max(m);
            },
            |(b1, mut p1), (b2, p2)| {
                for (s, m) in p2 {
                    let e = p1.entry(s).or_insert(0);
                    *e = (*e).max(m);
                }
                (b1.merge(b2), p1)
            },
        )
    })?;
    let (best, per) = acc;
    let mut r = SearchReport::new(Mode::MValue, lambda, Some(p), n);
    r.counters = counters;
    r.value = Some(ratio(best.key.map_or(0, |Reverse(m)| m), 1));
    r.witnesses = best.items.into_iter().map(|c| c.graph).collect();
    let mut running = 0;
    let by_n: Vec<Value> = (1..=n)
        .map(|s| {
            let here = per.get(&s).copied().unwrap_or(0);
            running = running.max(here);
            json!({"n": s, "max_mult": here, "m": running})
        })
        .collect();
    r.details.insert("by_order".into(), Value::Array(by_n));
    r.details.insert("family_h".into(), json!(family.h));
    r.details.insert("family_size".into(), json!(family.len()));
    r.details.insert("family_complete".into(), json!(family.is_complete()));
    if let Some(cap) = family.degree_cap(p) {
        r.bounds.insert("degree_cap".into(), json!(cap));
    }
    Ok(r)
}

/// One re-checked predicate of a replayed report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReplayCheck {
    pub witness: usize,
    pub check: String,
    pub pass: bool,
}

/// Re-verifies every witness of a report against its defining predicate.
pub fn replay_report(v: &Value) -> Result<Vec<ReplayCheck>, SearchError> {
    let bad = |s: &str| SearchError::BadReport(s.to_string());
    let mode = v
        .get("mode")
        .and_then(Value::as_str)
        .and_then(Mode::parse)
        .ok_or_else(|| bad("unknown mode"))?;
    let lambda = number_from_json(v.get("lambda").ok_or_else(|| bad("missing lambda"))?).map_err(|e| bad(&e.to_string()))?;
    let p = v.get("p").and_then(Value::as_u64).map(|p| p as usize);
    let value = match v.get("value").and_then(Value::as_str) {
        Some(s) => Some(crate::algebra::parse_rational(s).map_err(|e| bad(&e.to_string()))?),
        None => None,
    };
    let witnesses = v.get("witnesses").and_then(Value::as_array).ok_or_else(|| bad("missing witnesses"))?;
    let family = match (mode, v.pointer("/details/family_h").and_then(Value::as_u64)) {
        (Mode::MValue, Some(h)) if h > 0 && v.pointer("/details/family_complete") == Some(&json!(true)) => {
            Some(forbidden_family(&lambda, h as usize)?)
        }
        _ => None,
    };
    let mut out = Vec::new();
    for (i, w) in witnesses.iter().enumerate() {
        let g = match parse_graph_value(w).map_err(|e| bad(&e.to_string()))? {
            GraphFile::Signed(g) => g,
            GraphFile::Plain(g) => g.with_sign(1),
        };
        let mut push = |check: &str, pass: bool| {
            out.push(ReplayCheck {
                witness: i,
                check: check.to_string(),
                pass,
            })
        };
        let n = g.n();
        let mult = multiplicity_direct(&g, &lambda);
        let chi_ok = p.is_none_or(|p| chromatic_number(&g).chi().is_some_and(|c| c <= p));
        match mode {
            Mode::KOrder => {
                push("top eigenvalue equals λ", compare_top_eigenvalue(&g, &lambda).ordering == Ordering::Equal);
                push("order equals value", value.as_ref() == Some(&ratio(n, 1)));
            }
            Mode::KpRatio => {
                push("chromatic number at most p", chi_ok);
                push("top eigenvalue equals λ", compare_top_eigenvalue(&g, &lambda).ordering == Ordering::Equal);
                push("order over multiplicity equals value", mult > 0 && value.as_ref() == Some(&ratio(n, mult)));
            }
            Mode::MValue => {
                push("chromatic number at most p", chi_ok);
                push("tail eigenvalue at most λ", p.is_some_and(|p| tail_check(&g, p + 1, &lambda)));
                push("multiplicity equals value", value.as_ref() == Some(&ratio(mult, 1)));
                if let Some(f) = &family {
                    push("no induced family member", !f.occurs_in(&g));
                }
            }
            Mode::BoundVerify => {
                push("chromatic number at most p", chi_ok);
                let c = v
                    .pointer("/bounds/c")
                    .and_then(Value::as_str)
                    .and_then(|s| crate::algebra::parse_rational(s).ok());
                let passing = v.get("verdict").and_then(Value::as_str) == Some("PASS");
                if passing {
                    push("multiplicity ratio equals value", value.as_ref() == Some(&ratio(mult, n.max(1))));
                } else if let Some(c) = c {
                    push("violates the bound", BigRational::from_integer(mult.into()) > c * BigInt::from(n));
                }
            }
        }
    }
    if witnesses.is_empty() && value.as_ref().is_some_and(|x| !x.is_zero()) && mode != Mode::BoundVerify {
        out.push(ReplayCheck {
            witness: 0,
            check: "value without witness".into(),
            pass: false,
        });
    }
    Ok(out)
}
