//! From lattices to graded algebras: join-meet ideal presentations, algebra
//! retract verification, and scripted verification suites for the diamond
//! and crossbar-chain families plus distributive cross-checks.
//!
//! The join-meet ideal of a finite lattice L lives in a polynomial ring with
//! one variable per lattice element and is generated, one binomial per
//! unordered incomparable pair {a, b}, by x_a x_b − x_{a∧b} x_{a∨b}. The
//! verification suites compute Gröbner bases, Hilbert series, and graded
//! Betti numbers of these quotients and compare them against closed forms
//! and reference generator lists, emitting one [`ClaimReport`] per checked
//! statement.

use std::cmp::Reverse;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::betti::{
    betti_cells, betti_from_linear_quotients, betti_table, find_linear_quotients_order,
    has_linear_resolution, is_linearly_related, linear_quotients_check, monomial_betti_table,
    quotient_regularity, report_from_gb, standard_monomials, BettiError, LinearQuotients,
};
use crate::groebner::{
    buchberger, colon, colon_by_last_var_revlex, eliminate, ideal_equal, GroebnerBasis,
    GroebnerError, Ideal, MonomialIdeal,
};
use crate::hilbert::HilbertSeries;
use crate::lattice::families::{birkhoff, boolean, chain_plus_point, diamond, lk};
use crate::lattice::{Lattice, LatticeError};
use crate::polyring::{Monomial, MonomialOrder, Polynomial, Ring, VarSet};
use crate::{Caps, Rat, Scalar};

/// Errors from presentation construction and the verification operations.
#[derive(Debug, Error)]
pub enum JoinMeetError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Betti(#[from] BettiError),
    /// The subset is not an induced sublattice (it may fail to be a
    /// sublattice at all, or be one without the induced property).
    #[error("subset is not an induced sublattice")]
    NotInduced,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

// ---------------------------------------------------------------------------
// Monomial order specification.
// ---------------------------------------------------------------------------

/// Monomial order kind for a presentation ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OrderKind {
    #[default]
    DegRevLex,
    DegLex,
    Lex,
}

impl OrderKind {
    fn order(self) -> MonomialOrder {
        match self {
            OrderKind::DegRevLex => MonomialOrder::DegRevLex,
            OrderKind::DegLex => MonomialOrder::DegLex,
            OrderKind::Lex => MonomialOrder::Lex,
        }
    }
}

/// Which lattice element receives the largest ring variable, and so on down.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum Precedence {
    /// Decreasing lattice height, ties broken by element input order. For
    /// the diamond family this realizes x > y_1 > … > y_n > z.
    #[default]
    ByHeightDesc,
    /// The lattice's element input order, largest first.
    InputOrder,
    /// Explicit element names, largest first; must list every element once.
    Explicit(Vec<String>),
}

impl Precedence {
    /// Lattice element index for each ring variable, position 0 largest.
    fn resolve(&self, l: &Lattice) -> Result<Vec<usize>, JoinMeetError> {
        match self {
            Precedence::ByHeightDesc => {
                let mut idx: Vec<usize> = (0..l.len()).collect();
                idx.sort_by_key(|&e| (Reverse(l.height(e)), e));
                Ok(idx)
            }
            Precedence::InputOrder => Ok((0..l.len()).collect()),
            Precedence::Explicit(names) => {
                if names.len() != l.len() {
                    return Err(JoinMeetError::InvalidParameter(format!(
                        "precedence lists {} names for a lattice with {} elements",
                        names.len(),
                        l.len()
                    )));
                }
                let mut seen = vec![false; l.len()];
                let mut idx = Vec::with_capacity(names.len());
                for name in names {
                    let e = l.index_of(name).ok_or_else(|| {
                        JoinMeetError::InvalidParameter(format!("unknown element {name:?}"))
                    })?;
                    if seen[e] {
                        return Err(JoinMeetError::InvalidParameter(format!(
                            "element {name:?} listed twice"
                        )));
                    }
                    seen[e] = true;
                    idx.push(e);
                }
                Ok(idx)
            }
        }
    }
}

/// A monomial order kind together with a variable precedence.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OrderSpec {
    pub kind: OrderKind,
    pub precedence: Precedence,
}

impl OrderSpec {
    /// Lexicographic order with variables in lattice input order — the
    /// convention the crossbar-chain suite verifies under.
    pub fn lex_input_order() -> Self {
        OrderSpec { kind: OrderKind::Lex, precedence: Precedence::InputOrder }
    }

    /// Degrevlex with an explicit largest-first list of element names.
    pub fn degrevlex_names<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        OrderSpec {
            kind: OrderKind::DegRevLex,
            precedence: Precedence::Explicit(names.into_iter().map(Into::into).collect()),
        }
    }
}

// ---------------------------------------------------------------------------
// Presentation.
// ---------------------------------------------------------------------------

/// A lattice together with its join-meet ideal: one ring variable per
/// element (named after it), one homogeneous quadratic binomial
/// x_a x_b − x_{a∧b} x_{a∨b} per unordered incomparable pair {a, b}. Every
/// generator is nonzero since an incomparable pair never equals its
/// meet/join pair.
#[derive(Debug, Clone)]
pub struct JoinMeetPresentation<C: Scalar> {
    lattice: Lattice,
    ring: Ring,
    ideal: Ideal<C>,
    var_of_elem: Vec<usize>,
    elem_of_var: Vec<usize>,
}

impl<C: Scalar> JoinMeetPresentation<C> {
    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn ideal(&self) -> &Ideal<C> {
        &self.ideal
    }

    /// Ring variable index carrying the given lattice element.
    pub fn var_of_element(&self, e: usize) -> usize {
        self.var_of_elem[e]
    }

    /// Lattice element carried by the given ring variable.
    pub fn element_of_var(&self, v: usize) -> usize {
        self.elem_of_var[v]
    }

    /// Reduced Gröbner basis of the ideal under the presentation's order.
    pub fn groebner(&self, caps: &Caps) -> Result<GroebnerBasis<C>, GroebnerError> {
        buchberger(&self.ideal, caps)
    }
}

/// Builds the join-meet ideal of a lattice in a ring ordered by `spec`.
pub fn join_meet_ideal<C: Scalar>(
    l: &Lattice,
    spec: &OrderSpec,
) -> Result<JoinMeetPresentation<C>, JoinMeetError> {
    let elem_of_var = spec.precedence.resolve(l)?;
    let mut var_of_elem = vec![0usize; l.len()];
    for (v, &e) in elem_of_var.iter().enumerate() {
        var_of_elem[e] = v;
    }
    let names: Vec<String> = elem_of_var.iter().map(|&e| l.name(e).to_string()).collect();
    let ring = Ring::new(VarSet::new(names), spec.kind.order());

    let n = l.len();
    let mut gens = Vec::new();
    for (a, b) in l.incomparable_pairs() {
        let lhs = Monomial::var(var_of_elem[a], n).mul(&Monomial::var(var_of_elem[b], n));
        let rhs = Monomial::var(var_of_elem[l.meet(a, b)], n)
            .mul(&Monomial::var(var_of_elem[l.join(a, b)], n));
        debug_assert_ne!(lhs, rhs, "incomparable pair equal to its bound pair");
        let p = &Polynomial::monomial(&ring, C::one(), lhs)
            - &Polynomial::monomial(&ring, C::one(), rhs);
        gens.push(p);
    }
    let ideal = Ideal::new(&ring, gens);
    Ok(JoinMeetPresentation { lattice: l.clone(), ring, ideal, var_of_elem, elem_of_var })
}

// ---------------------------------------------------------------------------
// Claim reports.
// ---------------------------------------------------------------------------

/// One verified statement: a description, a stable reference token naming
/// the source claim, and the expected/computed values.
#[derive(Debug, Clone, Serialize)]
pub struct ClaimReport {
    pub claim: String,
    #[serde(rename = "paper_ref")]
    pub reference: String,
    pub expected: Value,
    pub computed: Value,
    pub pass: bool,
}

impl ClaimReport {
    /// Claim that passes exactly when the two values are equal.
    pub fn equality(
        claim: impl Into<String>,
        reference: impl Into<String>,
        expected: impl Into<Value>,
        computed: impl Into<Value>,
    ) -> Self {
        let expected = expected.into();
        let computed = computed.into();
        let pass = expected == computed;
        ClaimReport { claim: claim.into(), reference: reference.into(), expected, computed, pass }
    }

    /// Claim with an externally determined verdict (e.g. "> 0" checks).
    pub fn with_pass(
        claim: impl Into<String>,
        reference: impl Into<String>,
        expected: impl Into<Value>,
        computed: impl Into<Value>,
        pass: bool,
    ) -> Self {
        ClaimReport {
            claim: claim.into(),
            reference: reference.into(),
            expected: expected.into(),
            computed: computed.into(),
            pass,
        }
    }
}

impl fmt::Display for ClaimReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "[{verdict}] {} :: {}", self.reference, self.claim)?;
        if !self.pass {
            write!(f, "\n    expected: {}\n    computed: {}", self.expected, self.computed)?;
        }
        Ok(())
    }
}

/// Outcome of a scripted verification suite. `claims` decide `pass`;
/// `notes` carry cross-checks against recorded reference data — reported in
/// full, discrepancies included, but not gating the verdict; `skipped`
/// names stages not run at this size.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub claims: Vec<ClaimReport>,
    pub notes: Vec<ClaimReport>,
    pub skipped: Vec<String>,
    pub pass: bool,
}

impl SuiteReport {
    fn new(name: impl Into<String>) -> Self {
        SuiteReport {
            name: name.into(),
            claims: Vec::new(),
            notes: Vec::new(),
            skipped: Vec::new(),
            pass: true,
        }
    }

    fn claim(&mut self, c: ClaimReport) {
        self.claims.push(c);
    }

    fn note(&mut self, c: ClaimReport) {
        self.notes.push(c);
    }

    fn skip(&mut self, stage: impl Into<String>) {
        self.skipped.push(stage.into());
    }

    fn finish(mut self) -> Self {
        self.pass = self.claims.iter().all(|c| c.pass);
        self
    }

    pub fn failed_claims(&self) -> impl Iterator<Item = &ClaimReport> {
        self.claims.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("suite report serializes")
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.name, if self.pass { "PASS" } else { "FAIL" })?;
        for c in &self.claims {
            writeln!(f, "  {c}")?;
        }
        for c in &self.notes {
            let verdict = if c.pass { "note/match" } else { "note/DIFFERS" };
            writeln!(f, "  [{verdict}] {} :: {}", c.reference, c.claim)?;
            if !c.pass {
                writeln!(f, "    expected: {}", c.expected)?;
                writeln!(f, "    computed: {}", c.computed)?;
            }
        }
        for s in &self.skipped {
            writeln!(f, "  [skipped] {s}")?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Retract verification.
// ---------------------------------------------------------------------------

/// One Betti-number dominance comparison: the sublattice quotient's value
/// must not exceed the ambient quotient's value in the same position.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct DominanceCell {
    pub i: usize,
    pub j: u32,
    pub sublattice: u64,
    pub ambient: u64,
}

/// Result of verifying that the quotient by an induced sublattice's ideal
/// behaves as an algebra retract of the ambient quotient: the ambient ideal
/// intersected with the sublattice's subring equals the sublattice's own
/// join-meet ideal, and every graded Betti number of the sublattice quotient
/// is dominated by the ambient one.
#[derive(Debug, Clone, Serialize)]
pub struct RetractReport {
    pub subset: Vec<String>,
    pub elimination_equal: bool,
    pub dominance_cells: Vec<DominanceCell>,
    pub dominance_ok: bool,
    pub pass: bool,
}

/// Verifies the retract behaviour of an induced sublattice. Errors with
/// [`JoinMeetError::NotInduced`] when `subset` is not an induced sublattice.
pub fn retract_check(
    l: &Lattice,
    subset: &[usize],
    caps: &Caps,
) -> Result<RetractReport, JoinMeetError> {
    let ambient: JoinMeetPresentation<Rat> = join_meet_ideal(l, &OrderSpec::default())?;
    let ambient_gb = buchberger(ambient.ideal(), caps)?;
    retract_check_with(&ambient, &ambient_gb, subset, caps)
}

/// Retract verification against a pre-built ambient presentation, so callers
/// that need the ambient basis for other checks can share the work.
fn retract_check_with(
    ambient: &JoinMeetPresentation<Rat>,
    ambient_gb: &GroebnerBasis<Rat>,
    subset: &[usize],
    caps: &Caps,
) -> Result<RetractReport, JoinMeetError> {
    let l = ambient.lattice();
    let induced = match l.is_induced_sublattice(subset) {
        Ok(v) => v,
        Err(LatticeError::NotASublattice) => false,
        Err(e) => return Err(e.into()),
    };
    if !induced {
        return Err(JoinMeetError::NotInduced);
    }

    let mut members = vec![false; l.len()];
    for &e in subset {
        members[e] = true;
    }

    // (a) Elimination: dropping the variables outside the subset from the
    // ambient ideal must yield the sublattice's own ideal. The eliminated
    // ideal lands in a degrevlex ring on the kept names in ambient variable
    // order; presenting the sublattice with that exact precedence makes the
    // two ideals directly comparable.
    let drop_vars: Vec<usize> =
        (0..l.len()).filter(|&v| !members[ambient.element_of_var(v)]).collect();
    let eliminated = eliminate(ambient.ideal(), &drop_vars, caps)?;

    let kept_names: Vec<String> = (0..l.len())
        .filter(|&v| members[ambient.element_of_var(v)])
        .map(|v| ambient.ring().vars().name(v).to_string())
        .collect();
    let sub_lattice = l.sublattice(subset)?;
    let sub: JoinMeetPresentation<Rat> =
        join_meet_ideal(&sub_lattice, &OrderSpec::degrevlex_names(kept_names.clone()))?;
    let elimination_equal = ideal_equal(&eliminated, sub.ideal(), caps)?;

    // (b) Betti dominance over the sublattice table's full support.
    let sub_gb = buchberger(sub.ideal(), caps)?;
    let sub_table = betti_table(&sub_gb, u32::MAX)?;
    let cells: Vec<(usize, u32)> =
        sub_table.entries().filter(|&(i, _, _)| i > 0).map(|(i, j, _)| (i, j)).collect();
    let ambient_values = betti_cells(ambient_gb, &cells)?;
    let dominance_cells: Vec<DominanceCell> = cells
        .iter()
        .zip(&ambient_values)
        .map(|(&(i, j), &ambient)| DominanceCell {
            i,
            j,
            sublattice: sub_table.get(i, j),
            ambient,
        })
        .collect();
    let dominance_ok = dominance_cells.iter().all(|c| c.sublattice <= c.ambient);

    Ok(RetractReport {
        subset: subset.iter().map(|&e| l.name(e).to_string()).collect(),
        elimination_equal,
        dominance_cells,
        dominance_ok,
        pass: elimination_equal && dominance_ok,
    })
}

// ---------------------------------------------------------------------------
// Main structural verifier.
// ---------------------------------------------------------------------------

/// Witnesses for the structural lower bounds on a modular non-distributive
/// lattice: a height-2 diamond interval, its retract verification, and the
/// ambient Betti cells forcing reg(S/I_L) ≥ 3 and β_{2,4}(S/I_L) > 0.
#[derive(Debug, Clone, Serialize)]
pub struct MainTheoremReport {
    pub diamond_bottom: String,
    pub diamond_top: String,
    pub diamond_middles: Vec<String>,
    pub retract: RetractReport,
    /// Ambient value at the sublattice table's final corner (m, m+3) for m
    /// middles; any nonzero entry on the third diagonal forces reg ≥ 3.
    pub corner: DominanceCell,
    pub beta_2_4: u64,
    pub reg_at_least_3: bool,
    pub beta_2_4_positive: bool,
    pub pass: bool,
}

impl MainTheoremReport {
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

/// Verifies reg(S/I_L) ≥ 3 and β_{2,4}(S/I_L) > 0 for a modular
/// non-distributive lattice, by locating a height-2 diamond interval and
/// checking Betti dominance of its quotient inside the ambient quotient.
pub fn main_theorem_verifier(l: &Lattice, caps: &Caps) -> Result<MainTheoremReport, JoinMeetError> {
    if !l.is_modular() {
        return Err(JoinMeetError::PreconditionFailed("lattice is not modular".into()));
    }
    if l.is_distributive() {
        return Err(JoinMeetError::PreconditionFailed("lattice is distributive".into()));
    }
    let (bottom, top, middles) = l.find_diamond_interval().ok_or_else(|| {
        JoinMeetError::PreconditionFailed(
            "no height-2 diamond interval found (unexpected for a modular \
             non-distributive lattice)"
                .into(),
        )
    })?;
    let subset = l.interval(bottom, top);

    let ambient: JoinMeetPresentation<Rat> = join_meet_ideal(l, &OrderSpec::default())?;
    let ambient_gb = buchberger(ambient.ideal(), caps)?;
    let retract = retract_check_with(&ambient, &ambient_gb, &subset, caps)?;

    let m = middles.len();
    let corner_pos = (m, m as u32 + 3);
    let find = |i: usize, j: u32| {
        retract.dominance_cells.iter().find(|c| c.i == i && c.j == j).copied()
    };
    let corner = match find(corner_pos.0, corner_pos.1) {
        Some(c) => c,
        None => {
            let v = betti_cells(&ambient_gb, &[corner_pos])?[0];
            DominanceCell { i: corner_pos.0, j: corner_pos.1, sublattice: 0, ambient: v }
        }
    };
    let beta_2_4 = match find(2, 4) {
        Some(c) => c.ambient,
        None => betti_cells(&ambient_gb, &[(2, 4)])?[0],
    };

    let reg_at_least_3 = corner.ambient > 0;
    let beta_2_4_positive = beta_2_4 > 0;
    let pass = retract.pass && reg_at_least_3 && beta_2_4_positive;
    Ok(MainTheoremReport {
        diamond_bottom: l.name(bottom).to_string(),
        diamond_top: l.name(top).to_string(),
        diamond_middles: middles.iter().map(|&e| l.name(e).to_string()).collect(),
        retract,
        corner,
        beta_2_4,
        reg_at_least_3,
        beta_2_4_positive,
        pass,
    })
}

// ---------------------------------------------------------------------------
// Shared helpers for the suites.
// ---------------------------------------------------------------------------

fn mono(nvars: usize, factors: &[usize]) -> Monomial {
    let mut exps = vec![0u32; nvars];
    for &v in factors {
        exps[v] += 1;
    }
    Monomial::from_exps(exps)
}

fn sorted_poly_strings<C: Scalar>(polys: &[Polynomial<C>]) -> Vec<String> {
    let mut v: Vec<String> = polys.iter().map(|p| p.to_string()).collect();
    v.sort();
    v
}

fn gens_strings(ideal: &MonomialIdeal, vars: &VarSet) -> Vec<String> {
    ideal.gens().iter().map(|m| m.display(vars)).collect()
}

/// Sorts polynomials by increasing leading monomial — the normal form of a
/// reduced Gröbner basis — so expected sets compare against computed bases.
fn sort_as_basis<C: Scalar>(ring: &Ring, polys: &mut [Polynomial<C>]) {
    polys.sort_by(|a, b| {
        ring.cmp(
            a.leading_monomial().expect("nonzero"),
            b.leading_monomial().expect("nonzero"),
        )
    });
}

fn basis_equals<C: Scalar>(gb: &GroebnerBasis<C>, expected: &[Polynomial<C>]) -> bool {
    let mut want = expected.to_vec();
    sort_as_basis(gb.ring(), &mut want);
    gb.basis() == want.as_slice()
}

/// Equality-of-minimal-generators note comparing a computed monomial ideal
/// with a recorded reference list, spelling out both one-sided differences.
fn reference_diff_note(
    claim: impl Into<String>,
    reference: impl Into<String>,
    computed: &MonomialIdeal,
    recorded: &MonomialIdeal,
    vars: &VarSet,
) -> ClaimReport {
    let computed_gens = gens_strings(computed, vars);
    let recorded_gens = gens_strings(recorded, vars);
    let reference_only: Vec<String> = recorded
        .gens()
        .iter()
        .filter(|m| !computed.gens().contains(m))
        .map(|m| m.display(vars))
        .collect();
    let computed_only: Vec<String> = computed
        .gens()
        .iter()
        .filter(|m| !recorded.gens().contains(m))
        .map(|m| m.display(vars))
        .collect();
    let pass = reference_only.is_empty() && computed_only.is_empty();
    ClaimReport::with_pass(
        claim,
        reference,
        Value::from(recorded_gens),
        json!({
            "generators": computed_gens,
            "reference_only": reference_only,
            "computed_only": computed_only,
        }),
        pass,
    )
}

// ---------------------------------------------------------------------------
// Diamond family suite.
// ---------------------------------------------------------------------------

/// End-to-end verification of the diamond family D_{n+2} (n ≥ 3 middle
/// elements): presentation, reduced Gröbner basis and initial ideal in
/// closed form, Hilbert series, homological invariants, linear quotients of
/// the initial ideal, colon-ideal structure, and non-linear-relatedness.
/// Betti-table stages run for n ≤ 5 and are reported as skipped above that.
pub fn diamond_suite(n: usize, caps: &Caps) -> Result<SuiteReport, JoinMeetError> {
    if n < 3 {
        return Err(JoinMeetError::InvalidParameter(format!(
            "diamond suite needs at least 3 middle elements, got {n}"
        )));
    }
    let l = diamond(n)?;
    let p: JoinMeetPresentation<Rat> = join_meet_ideal(&l, &OrderSpec::default())?;
    let ring = p.ring().clone();
    let nv = ring.nvars();
    let xv = ring.vars().index_of("x").expect("x variable");
    let zv = ring.vars().index_of("z").expect("z variable");
    let yv: Vec<usize> =
        (1..=n).map(|i| ring.vars().index_of(&format!("y{i}")).expect("y variable")).collect();
    let y = |i: usize| yv[i - 1];

    let mut suite = SuiteReport::new(format!("diamond(n={n})"));

    // Presentation: exactly the binomials y_i y_j − x z over 1 ≤ i < j ≤ n.
    let mut expected_gens: Vec<Polynomial<Rat>> = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let lhs = Polynomial::monomial(&ring, Rat::one(), mono(nv, &[y(i), y(j)]));
            let rhs = Polynomial::monomial(&ring, Rat::one(), mono(nv, &[xv, zv]));
            expected_gens.push(&lhs - &rhs);
        }
    }
    suite.claim(ClaimReport::equality(
        "the ideal is generated by the binomials y_i*y_j - x*z over i < j",
        "diamond.presentation",
        Value::from(sorted_poly_strings(&expected_gens)),
        Value::from(sorted_poly_strings(p.ideal().gens())),
    ));

    // Reduced Gröbner basis in closed form.
    let gb = buchberger(p.ideal(), caps)?;
    let poly_of = |ms: &[(i64, Vec<usize>)]| -> Polynomial<Rat> {
        let terms: Vec<(Rat, Monomial)> =
            ms.iter().map(|(c, f)| (Rat::from_integer((*c).into()), mono(nv, f))).collect();
        Polynomial::from_terms(&ring, terms)
    };
    let mut expected_gb: Vec<Polynomial<Rat>> = expected_gens.clone();
    for k in 1..n {
        expected_gb.push(poly_of(&[(1, vec![xv, y(k), zv]), (-1, vec![xv, y(n), zv])]));
    }
    expected_gb.push(poly_of(&[(1, vec![xv, y(n), y(n), zv]), (-1, vec![xv, xv, zv, zv])]));
    suite.claim(ClaimReport::equality(
        "the reduced basis is {y_i*y_j - x*z} + {x*y_k*z - x*y_n*z : k < n} + {x*y_n^2*z - x^2*z^2}",
        "diamond.gb.closed-form",
        Value::from(sorted_poly_strings(&expected_gb)),
        Value::from(sorted_poly_strings(gb.basis())),
    ));
    debug_assert_eq!(
        basis_equals(&gb, &expected_gb),
        suite.claims.last().expect("just pushed").pass
    );

    // Initial ideal in closed form.
    let ini = gb.leading_ideal();
    let mut expected_ini: Vec<Monomial> = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            expected_ini.push(mono(nv, &[y(i), y(j)]));
        }
    }
    for k in 1..n {
        expected_ini.push(mono(nv, &[xv, y(k), zv]));
    }
    expected_ini.push(mono(nv, &[xv, y(n), y(n), zv]));
    let expected_ini = MonomialIdeal::new(nv, expected_ini);
    suite.claim(ClaimReport::equality(
        "the initial ideal is (y_i*y_j, x*y_k*z for k < n, x*y_n^2*z)",
        "diamond.initial-ideal.closed-form",
        Value::from(gens_strings(&expected_ini, ring.vars())),
        Value::from(gens_strings(&ini, ring.vars())),
    ));

    // Hilbert series: (1 + n t + n t² + t³) / (1 − t)², by two routes, plus
    // a standard-monomial count cross-check and the multiplicity value.
    let closed_numerator: Vec<BigInt> =
        [1usize, n, n, 1].iter().map(|&c| BigInt::from(c)).collect();
    let reduced_json = |s: &HilbertSeries| -> Value {
        match s.reduced() {
            Some((h, d)) => json!({
                "numerator": h.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "denominator_exponent": d,
            }),
            None => json!("zero"),
        }
    };
    let expected_series = json!({
        "numerator": closed_numerator.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "denominator_exponent": 2,
    });
    let series = HilbertSeries::of_ideal_quotient(&gb);
    suite.claim(ClaimReport::equality(
        "the Hilbert series of S/I is (1 + n*t + n*t^2 + t^3)/(1 - t)^2",
        "diamond.hilbert.series",
        expected_series.clone(),
        reduced_json(&series),
    ));
    let series_ini = HilbertSeries::of_quotient(&ini);
    suite.claim(ClaimReport::equality(
        "the Hilbert series of S/in(I) equals the same closed form",
        "diamond.hilbert.series-of-initial",
        expected_series,
        reduced_json(&series_ini),
    ));
    let hf_counts: Vec<u64> =
        (0..=4u32).map(|d| standard_monomials(&gb, d).len() as u64).collect();
    let hf_series: Vec<String> = (0..=4u32).map(|d| series.hilbert_function(d).to_string()).collect();
    suite.claim(ClaimReport::equality(
        "standard-monomial counts match the Hilbert function in degrees 0..=4",
        "diamond.hilbert.function-cross-check",
        Value::from(hf_series),
        Value::from(hf_counts.iter().map(|c| c.to_string()).collect::<Vec<_>>()),
    ));
    suite.claim(ClaimReport::equality(
        "the multiplicity of S/I is 2n + 2",
        "diamond.hilbert.multiplicity",
        Value::from((2 * n + 2).to_string()),
        Value::from(series.multiplicity().map_or("zero".into(), |m| m.to_string())),
    ));

    // Homological invariants need the full Betti table; bounded size.
    const BETTI_STAGE_MAX_N: usize = 5;
    if n <= BETTI_STAGE_MAX_N {
        let report = report_from_gb(&gb)?;
        suite.claim(ClaimReport::equality(
            "dim S/I = depth S/I = 2",
            "diamond.invariants.dimension-depth",
            json!([2, 2]),
            json!([report.dim, report.depth]),
        ));
        suite.claim(ClaimReport::equality(
            "the projective dimension of S/I is n",
            "diamond.invariants.projective-dimension",
            json!(n),
            json!(report.pd),
        ));
        suite.claim(ClaimReport::equality(
            "the regularity of S/I is 3",
            "diamond.invariants.regularity",
            json!(3),
            json!(report.reg),
        ));
        suite.claim(ClaimReport::equality(
            "S/I is Cohen-Macaulay",
            "diamond.invariants.cohen-macaulay",
            json!(true),
            json!(report.is_cm),
        ));
        suite.claim(ClaimReport::equality(
            "the final column is beta_{n,n+1} = beta_{n,n+2} = 0, beta_{n,n+3} = 1",
            "diamond.invariants.final-betti-column",
            json!([0, 0, 1]),
            json!([
                report.betti.get(n, n as u32 + 1),
                report.betti.get(n, n as u32 + 2),
                report.betti.get(n, n as u32 + 3),
            ]),
        ));
        suite.claim(ClaimReport::equality(
            "S/I is Gorenstein",
            "diamond.invariants.gorenstein",
            json!(true),
            json!(report.is_gorenstein),
        ));
        suite.claim(ClaimReport::equality(
            "S/I is a nearly extremal Gorenstein algebra",
            "diamond.invariants.nearly-extremal",
            json!(true),
            json!(report.nearly_extremal_gorenstein),
        ));
        suite.claim(ClaimReport::equality(
            "I is not linearly related",
            "diamond.invariants.not-linearly-related",
            json!(Some(false)),
            json!(report.is_linearly_related),
        ));
        let beta24 = report.betti.get(2, 4);
        suite.claim(ClaimReport::with_pass(
            "beta_{2,4}(S/I) > 0",
            "diamond.beta-2-4",
            json!("> 0"),
            json!(beta24),
            beta24 > 0,
        ));
    } else {
        suite.skip(format!("Betti-table invariants (n = {n} exceeds {BETTI_STAGE_MAX_N})"));
    }

    // Linear quotients of the initial ideal in the quadrics-then-cubics
    // order, and the resulting Betti table against the Koszul computation.
    let mut order_monos: Vec<Monomial> = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            order_monos.push(mono(nv, &[y(i), y(j)]));
        }
    }
    for k in 1..n {
        order_monos.push(mono(nv, &[xv, y(k), zv]));
    }
    order_monos.push(mono(nv, &[xv, y(n), y(n), zv]));
    let ordering: Option<Vec<usize>> = order_monos
        .iter()
        .map(|m| ini.gens().iter().position(|g| g == m))
        .collect();
    match ordering {
        None => suite.claim(ClaimReport::with_pass(
            "the quadrics-then-cubics ordering addresses actual minimal generators",
            "diamond.initial.linear-quotients",
            json!("ordering resolves"),
            json!("initial ideal lacks an expected generator"),
            false,
        )),
        Some(ordering) => match linear_quotients_check(&ini, &ordering) {
            LinearQuotients::FailsAt { k } => suite.claim(ClaimReport::with_pass(
                "in(I) has linear quotients in the quadrics-then-cubics order",
                "diamond.initial.linear-quotients",
                json!("linear quotients"),
                json!(format!("colon at position {k} is not variable-generated")),
                false,
            )),
            LinearQuotients::Linear { r } => {
                suite.claim(ClaimReport::with_pass(
                    "in(I) has linear quotients in the quadrics-then-cubics order",
                    "diamond.initial.linear-quotients",
                    json!("linear quotients"),
                    json!({"r": r.clone()}),
                    true,
                ));
                let quadrics = n * (n - 1) / 2;
                let max_quadric_r = r[..quadrics].iter().copied().max().unwrap_or(0);
                suite.claim(ClaimReport::with_pass(
                    "each quadric colon is generated by at most n - 2 variables",
                    "diamond.initial.quadric-colon-bound",
                    json!(format!("<= {}", n - 2)),
                    json!(max_quadric_r),
                    max_quadric_r <= n - 2,
                ));
                let degrees: Vec<u32> =
                    ordering.iter().map(|&k| ini.gens()[k].degree()).collect();
                let lq_table = betti_from_linear_quotients(&r, &degrees, nv);
                suite.claim(ClaimReport::equality(
                    "the linear-quotients table gives beta_{n,n+1} = 0 and beta_{n,n+2} = n - 1",
                    "diamond.initial.betti-pd-row",
                    json!([0, n as u64 - 1]),
                    json!([lq_table.get(n, n as u32 + 1), lq_table.get(n, n as u32 + 2)]),
                ));
                let koszul_table = monomial_betti_table(&ini, None)?;
                let lq_entries: Vec<(usize, u32, u64)> = lq_table.entries().collect();
                let koszul_entries: Vec<(usize, u32, u64)> = koszul_table.entries().collect();
                suite.claim(ClaimReport::equality(
                    "the linear-quotients table equals the Koszul-homology table entry-for-entry",
                    "diamond.initial.table-cross-check",
                    json!(koszul_entries
                        .iter()
                        .map(|&(i, j, b)| json!([i, j, b]))
                        .collect::<Vec<_>>()),
                    json!(lq_entries
                        .iter()
                        .map(|&(i, j, b)| json!([i, j, b]))
                        .collect::<Vec<_>>()),
                ));
            }
        },
    }

    // Colon structure: J = I : z by two routes, its closed-form basis, basis
    // stability under reordering the variables to z > y_1 > … > y_n > x, and
    // J : x as a regular-sequence ideal.
    let z_poly = Polynomial::<Rat>::var(&ring, zv);
    let x_poly = Polynomial::<Rat>::var(&ring, xv);
    let j_trick = colon_by_last_var_revlex(&gb)?;
    let j_ideal = Ideal::new(&ring, j_trick.basis().to_vec());
    let j_generic = colon(p.ideal(), &z_poly, caps)?;
    suite.claim(ClaimReport::equality(
        "the last-variable colon shortcut agrees with the elimination-based colon",
        "diamond.colon.routes-agree",
        json!(true),
        json!(ideal_equal(&j_ideal, &j_generic, caps)?),
    ));

    let mut expected_j: Vec<Polynomial<Rat>> = expected_gens.clone();
    for k in 1..n {
        expected_j.push(poly_of(&[(1, vec![xv, y(k)]), (-1, vec![xv, y(n)])]));
    }
    expected_j.push(poly_of(&[(1, vec![xv, y(n), y(n)]), (-1, vec![xv, xv, zv])]));
    suite.claim(ClaimReport::equality(
        "the reduced basis of I : z is {y_i*y_j - x*z} + {x*y_k - x*y_n} + {x*y_n^2 - x^2*z}",
        "diamond.colon.gb-closed-form",
        Value::from(sorted_poly_strings(&expected_j)),
        Value::from(sorted_poly_strings(j_trick.basis())),
    ));

    // The same polynomial set stays a reduced basis after moving z to the
    // front and x to the back of the precedence.
    let mut swapped_names: Vec<String> = vec!["z".into()];
    swapped_names.extend((1..=n).map(|i| format!("y{i}")));
    swapped_names.push("x".into());
    let swapped_ring = Ring::new(VarSet::new(swapped_names), MonomialOrder::DegRevLex);
    let swapped_gens: Vec<Polynomial<Rat>> = expected_j
        .iter()
        .map(|q| q.project_to(&swapped_ring).expect("same variable names"))
        .collect();
    let swapped_gb = buchberger(&Ideal::new(&swapped_ring, swapped_gens.clone()), caps)?;
    suite.claim(ClaimReport::equality(
        "the basis of I : z is unchanged under the precedence z > y_1 > ... > y_n > x",
        "diamond.colon.order-invariance",
        Value::from(sorted_poly_strings(&swapped_gens)),
        Value::from(sorted_poly_strings(swapped_gb.basis())),
    ));

    let jx = colon(&j_ideal, &x_poly, caps)?;
    let mut regular_sequence: Vec<Polynomial<Rat>> = (1..n)
        .map(|i| poly_of(&[(1, vec![y(i)]), (-1, vec![y(n)])]))
        .collect();
    regular_sequence.push(poly_of(&[(1, vec![y(n), y(n)]), (-1, vec![xv, zv])]));
    let regseq_ideal = Ideal::new(&ring, regular_sequence);
    suite.claim(ClaimReport::equality(
        "(I : z) : x is generated by the regular sequence y_1 - y_n, ..., y_{n-1} - y_n, y_n^2 - x*z",
        "diamond.colon.regular-sequence",
        json!(true),
        json!(ideal_equal(&jx, &regseq_ideal, caps)?),
    ));
    let xz_poly = &x_poly * &z_poly;
    let i_colon_xz = colon(p.ideal(), &xz_poly, caps)?;
    suite.claim(ClaimReport::equality(
        "I : (x*z) equals (I : z) : x",
        "diamond.colon.composite",
        json!(true),
        json!(ideal_equal(&i_colon_xz, &jx, caps)?),
    ));

    // Non-linear-relatedness: β_{2,4}(S/(I, x*z)) counts the quadric pairs.
    if n <= BETTI_STAGE_MAX_N {
        let mut augmented_gens = p.ideal().gens().to_vec();
        augmented_gens.push(xz_poly.clone());
        let augmented_gb = buchberger(&Ideal::new(&ring, augmented_gens), caps)?;
        let cell = betti_cells(&augmented_gb, &[(2, 4)])?[0];
        suite.claim(ClaimReport::equality(
            "beta_{2,4}(S/(I, x*z)) = C(n, 2)",
            "diamond.augmented.beta-2-4",
            json!((n * (n - 1) / 2) as u64),
            json!(cell),
        ));
    } else {
        suite.skip(format!("augmented beta_{{2,4}} stage (n = {n} exceeds {BETTI_STAGE_MAX_N})"));
    }

    Ok(suite.finish())
}

// ---------------------------------------------------------------------------
// Crossbar-chain (lk) family suite.
// ---------------------------------------------------------------------------

/// Variable handles for the lk presentation ring: x_i, y_i (1-based), z.
struct LkVars {
    n: usize,
    nv: usize,
}

impl LkVars {
    fn x(&self, i: usize) -> usize {
        debug_assert!((1..=self.n).contains(&i));
        i - 1
    }
    fn y(&self, i: usize) -> usize {
        debug_assert!((1..=self.n).contains(&i));
        self.n + i - 1
    }
    fn z(&self) -> usize {
        2 * self.n
    }
    fn m(&self, factors: &[usize]) -> Monomial {
        mono(self.nv, factors)
    }
}

/// Reference generator list recorded for the lex initial ideal of the lk
/// family; the suite diffs the computed initial ideal against it.
fn lk_reference_initial(v: &LkVars, k: usize) -> MonomialIdeal {
    let n = v.n;
    let mut gens: Vec<Monomial> = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            gens.push(v.m(&[v.x(j), v.y(i)]));
        }
    }
    for i in 1..k {
        gens.push(v.m(&[v.x(i), v.y(k + 1)]));
    }
    for j in k + 1..=n {
        gens.push(v.m(&[v.x(k), v.y(j)]));
    }
    for i in 1..k {
        for j in k + 2..=n {
            gens.push(v.m(&[v.x(i), v.x(k + 1), v.y(j)]));
            gens.push(v.m(&[v.x(i), v.y(k), v.y(j)]));
        }
    }
    for i in 1..=k {
        gens.push(v.m(&[v.y(i), v.y(k), v.z()]));
    }
    gens.push(v.m(&[v.x(k + 1), v.z()]));
    MonomialIdeal::new(v.nv, gens)
}

/// Reference list for J : y_{k+1}.
fn lk_reference_colon_1(v: &LkVars, k: usize) -> MonomialIdeal {
    let n = v.n;
    let mut gens: Vec<Monomial> = Vec::new();
    for i in (1..=n).filter(|&i| i != k + 1) {
        gens.push(v.m(&[v.x(i)]));
    }
    for t in 1..=k {
        gens.push(v.m(&[v.x(k + 1), v.y(t)]));
    }
    gens.push(v.m(&[v.x(k + 1), v.z()]));
    for i in 1..=k {
        gens.push(v.m(&[v.y(i), v.y(k), v.z()]));
    }
    MonomialIdeal::new(v.nv, gens)
}

/// Reference list for (J, y_{k+1}) : y_k.
fn lk_reference_colon_2(v: &LkVars, k: usize) -> MonomialIdeal {
    let n = v.n;
    let mut gens: Vec<Monomial> = vec![v.m(&[v.y(k + 1)])];
    for i in k + 1..=n {
        gens.push(v.m(&[v.x(i)]));
    }
    for j in 1..=k {
        for t in k + 2..=n {
            gens.push(v.m(&[v.x(j), v.y(t)]));
        }
    }
    for j in 2..=k {
        for t in 1..j {
            gens.push(v.m(&[v.x(j), v.y(t)]));
        }
    }
    for i in 1..=k {
        gens.push(v.m(&[v.y(i), v.z()]));
    }
    MonomialIdeal::new(v.nv, gens)
}

/// Reference list for (J, y_{k+1}, y_k). The final block's upper endpoint is
/// transcribed exactly as recorded (y_t through y_n for the last chain
/// variable), so any overshoot shows up in the diff rather than being
/// corrected silently.
fn lk_reference_colon_3(v: &LkVars, k: usize) -> MonomialIdeal {
    let n = v.n;
    let mut gens: Vec<Monomial> = vec![v.m(&[v.y(k + 1)]), v.m(&[v.y(k)])];
    for m in 2..=k {
        for t in 1..m {
            gens.push(v.m(&[v.x(m), v.y(t)]));
        }
    }
    for t in 1..k {
        gens.push(v.m(&[v.x(k + 1), v.y(t)]));
    }
    gens.push(v.m(&[v.x(k + 1), v.z()]));
    if k + 2 <= n {
        for t in 1..k {
            gens.push(v.m(&[v.x(k + 2), v.y(t)]));
        }
    }
    for m in k + 3..=n {
        for t in 1..k {
            gens.push(v.m(&[v.x(m), v.y(t)]));
        }
        let upper = if m == n { n } else { m - 1 };
        for t in k + 2..=upper {
            gens.push(v.m(&[v.x(m), v.y(t)]));
        }
    }
    MonomialIdeal::new(v.nv, gens)
}

/// Linear-quotients claim (by search) for a monomial ideal.
fn linear_quotients_claim(
    ideal: &MonomialIdeal,
    claim: impl Into<String>,
    reference: impl Into<String>,
) -> ClaimReport {
    if ideal.gens().len() > 24 {
        return ClaimReport::with_pass(
            claim,
            reference,
            json!("an ordering with linear quotients exists"),
            json!(format!("{} generators exceed the search bound of 24", ideal.gens().len())),
            false,
        );
    }
    match find_linear_quotients_order(ideal) {
        Some(order) => ClaimReport::with_pass(
            claim,
            reference,
            json!("an ordering with linear quotients exists"),
            json!({"ordering": order}),
            true,
        ),
        None => ClaimReport::with_pass(
            claim,
            reference,
            json!("an ordering with linear quotients exists"),
            json!("no ordering admits linear quotients"),
            false,
        ),
    }
}

/// End-to-end verification of the crossbar-chain family lk(n, k).
///
/// The independent computation is the ground truth; the recorded reference
/// lists are cross-checks whose differences are reported explicitly. Binding
/// claims (all verified computationally):
///
/// * reg(S/I) = 3, and reg(S/in(I)) = 3 for the initial ideal under the
///   stated lexicographic order x_1 > … > x_n > y_1 > … > y_n > z;
/// * the reference generator list is *exactly* the initial ideal under the
///   degree-reverse-lexicographic order with the same precedence (which
///   resolves the reference list's divergence from the lex computation),
///   and reg(S/J) = 3 for it;
/// * the first colon ideal J : y_{k+1} admits linear quotients (found by
///   search) and its quotient has regularity 2;
/// * the two short exact sequences in y_{k+1} and y_k bound reg(S/J) by 3
///   using the computed colon regularities;
/// * the diamond-interval retract verifier agrees (reg ≥ 3, β_{2,4} > 0).
///
/// Reported as notes: the lex-vs-reference generator diff, linear quotients
/// and regularity of the remaining two colon ideals (the recorded values
/// hold exactly when k = n − 1 and are contradicted computationally for
/// k < n − 1), and self-consistency of the recorded colon lists against
/// colons recomputed from the reference initial ideal.
pub fn lk_suite(n: usize, k: usize, caps: &Caps) -> Result<SuiteReport, JoinMeetError> {
    if !(2..=5).contains(&n) {
        return Err(JoinMeetError::InvalidParameter(format!(
            "lk suite supports 2 <= n <= 5, got {n}"
        )));
    }
    if !(1..n).contains(&k) {
        return Err(JoinMeetError::InvalidParameter(format!(
            "lk suite needs 1 <= k <= n - 1, got k = {k}"
        )));
    }
    let l = lk(n, k)?;
    let p: JoinMeetPresentation<Rat> = join_meet_ideal(&l, &OrderSpec::lex_input_order())?;
    let ring = p.ring().clone();
    let v = LkVars { n, nv: ring.nvars() };
    debug_assert_eq!(ring.vars().name(v.x(1)), "x1");
    debug_assert_eq!(ring.vars().name(v.y(1)), "y1");
    debug_assert_eq!(ring.vars().name(v.z()), "z");

    let mut suite = SuiteReport::new(format!("lk(n={n},k={k})"));

    // Ground truth, stated order: lex Gröbner basis and initial ideal.
    let gb = buchberger(p.ideal(), caps)?;
    let computed_j = gb.leading_ideal();
    let reference_j = lk_reference_initial(&v, k);
    suite.note(reference_diff_note(
        "the lex initial ideal compared against the reference generator list",
        "lk.initial-ideal.reference-list",
        &computed_j,
        &reference_j,
        ring.vars(),
    ));

    suite.claim(ClaimReport::equality(
        "reg(S/I) = 3",
        "lk.regularity",
        json!(3),
        json!(quotient_regularity(&gb)?),
    ));
    suite.claim(ClaimReport::equality(
        "reg(S/in(I)) = 3 under the stated lex order",
        "lk.initial.regularity",
        json!(3),
        json!(monomial_betti_table(&computed_j, None)?.reg()),
    ));

    // The reference list is the degrevlex initial ideal for the same
    // precedence — the identification that explains the lex diff above.
    let degrevlex_spec =
        OrderSpec { kind: OrderKind::DegRevLex, precedence: Precedence::InputOrder };
    let p_drl: JoinMeetPresentation<Rat> = join_meet_ideal(&l, &degrevlex_spec)?;
    let j_drl = buchberger(p_drl.ideal(), caps)?.leading_ideal();
    suite.claim(reference_diff_note(
        "the reference list is exactly the degrevlex initial ideal (same precedence)",
        "lk.initial-ideal.reference-list-degrevlex",
        &j_drl,
        &reference_j,
        ring.vars(),
    ));
    let reg_j_ref = monomial_betti_table(&reference_j, None)?.reg();
    suite.claim(ClaimReport::equality(
        "reg(S/J) = 3 for the reference initial ideal",
        "lk.reference.regularity",
        json!(3),
        json!(reg_j_ref),
    ));

    // The three colon ideals of J (reference initial ideal): J : y_{k+1},
    // (J, y_{k+1}) : y_k, and (J, y_{k+1}, y_k).
    let y_next = v.m(&[v.y(k + 1)]);
    let y_k = v.m(&[v.y(k)]);
    let colon_1 = reference_j.colon_monomial(&y_next);
    let with_next = reference_j.plus_monomial(&y_next);
    let colon_2 = with_next.colon_monomial(&y_k);
    let colon_3 = with_next.plus_monomial(&y_k);
    let r1 = monomial_betti_table(&colon_1, None)?.reg();
    let r2 = monomial_betti_table(&colon_2, None)?.reg();
    let r3 = monomial_betti_table(&colon_3, None)?.reg();
    let r12 = monomial_betti_table(&with_next, None)?.reg();

    suite.claim(linear_quotients_claim(
        &colon_1,
        "J : y_{k+1} admits linear quotients (found by search)",
        "lk.colon-1.linear-quotients",
    ));
    suite.claim(ClaimReport::equality(
        "reg(S/(J : y_{k+1})) = 2",
        "lk.colon-1.regularity",
        json!(2),
        json!(r1),
    ));

    // The recorded statements about the remaining two colon ideals hold
    // exactly when k = n − 1; the computed values are reported either way.
    suite.note(linear_quotients_claim(
        &colon_2,
        "(J, y_{k+1}) : y_k admits linear quotients (found by search)",
        "lk.colon-2.linear-quotients",
    ));
    suite.note(ClaimReport::equality(
        "reg(S/((J, y_{k+1}) : y_k)) = 1",
        "lk.colon-2.regularity",
        json!(1),
        json!(r2),
    ));
    suite.note(linear_quotients_claim(
        &colon_3,
        "(J, y_{k+1}, y_k) admits linear quotients (found by search)",
        "lk.colon-3.linear-quotients",
    ));
    suite.note(ClaimReport::equality(
        "reg(S/(J, y_{k+1}, y_k)) = 1",
        "lk.colon-3.regularity",
        json!(1),
        json!(r3),
    ));
    suite.note(ClaimReport::equality(
        "reg(S/(J, y_{k+1})) = 2",
        "lk.colon.intermediate-regularity",
        json!(2),
        json!(r12),
    ));

    // The two short exact sequences chain the computed colon regularities
    // into the bound reg(S/J) <= 3, which is the argument's conclusion.
    let seq2_bound = (r2 + 1).max(r3);
    suite.claim(ClaimReport::with_pass(
        "the y_k exact sequence bounds reg(S/(J, y_{k+1})) by max(reg(S/c2) + 1, reg(S/c3))",
        "lk.exact-sequence.second",
        json!(format!("<= {seq2_bound}")),
        json!(r12),
        r12 <= seq2_bound,
    ));
    let chain_bound = (r1 + 1).max(seq2_bound);
    suite.claim(ClaimReport::with_pass(
        "the y_{k+1} exact sequence chains to reg(S/J) <= 3 from the computed colon regularities",
        "lk.exact-sequence.first",
        json!("reg(S/J) <= chain bound <= 3"),
        json!({
            "reg": reg_j_ref,
            "chain_bound": chain_bound,
        }),
        reg_j_ref <= chain_bound && chain_bound <= 3,
    ));

    // Self-consistency of the recorded colon lists against colons recomputed
    // from the reference initial ideal; differences are transcription gaps.
    let recorded_colons =
        [lk_reference_colon_1(&v, k), lk_reference_colon_2(&v, k), lk_reference_colon_3(&v, k)];
    for ((recomputed, recorded), tag) in
        [&colon_1, &colon_2, &colon_3].into_iter().zip(&recorded_colons).zip(["1", "2", "3"])
    {
        suite.note(reference_diff_note(
            format!(
                "colon ideal {tag} recomputed from the reference initial ideal \
                 matches the recorded list"
            ),
            format!("lk.reference.colon-{tag}.self-consistency"),
            recomputed,
            recorded,
            ring.vars(),
        ));
    }

    // The structural lower bound from the diamond-interval retract agrees
    // with the exact regularity computed above.
    let verifier = main_theorem_verifier(&l, caps)?;
    suite.claim(ClaimReport::equality(
        "the diamond-interval verifier confirms reg >= 3 and beta_{2,4} > 0",
        "lk.main-theorem.consistency",
        json!([true, true, true]),
        json!([verifier.pass, verifier.reg_at_least_3, verifier.beta_2_4_positive]),
    ));

    Ok(suite.finish())
}

// ---------------------------------------------------------------------------
// Fixture lattices (loaded from files).
// ---------------------------------------------------------------------------

/// Exact-regularity verification for an arbitrary graded, modular,
/// non-distributive lattice (typically loaded from a fixture file).
///
/// Binding claims: exact reg(S/I_L) equals `expected_reg` (the certified
/// value for the lattice), and the diamond-interval retract verifier passes
/// (induced-sublattice check, Betti dominance, β_{2,4} > 0). The
/// `recorded_reg` is the regularity value recorded alongside the fixture and
/// is compared as a note — where the recorded value disagrees with the
/// computation, the note reports the difference without gating the verdict.
pub fn fixture_suite(
    l: &Lattice,
    name: impl Into<String>,
    expected_reg: u32,
    recorded_reg: u32,
    caps: &Caps,
) -> Result<SuiteReport, JoinMeetError> {
    if !l.is_modular() || l.is_distributive() || !l.is_graded() {
        return Err(JoinMeetError::PreconditionFailed(
            "fixture suite expects a graded, modular, non-distributive lattice".into(),
        ));
    }
    let mut suite = SuiteReport::new(name);

    let p: JoinMeetPresentation<Rat> = join_meet_ideal(l, &OrderSpec::default())?;
    let gb = buchberger(p.ideal(), caps)?;
    let reg = quotient_regularity(&gb)?;
    suite.claim(ClaimReport::equality(
        format!("reg(S/I_L) = {expected_reg}"),
        "fixture.regularity",
        json!(expected_reg),
        json!(reg),
    ));
    suite.note(ClaimReport::equality(
        "the recorded regularity value for this lattice matches the computation",
        "fixture.recorded-regularity",
        json!(recorded_reg),
        json!(reg),
    ));

    let verifier = main_theorem_verifier(l, caps)?;
    suite.claim(ClaimReport::equality(
        "the diamond-interval verifier confirms reg >= 3 and beta_{2,4} > 0",
        "fixture.main-theorem.consistency",
        json!([true, true, true]),
        json!([verifier.pass, verifier.reg_at_least_3, verifier.beta_2_4_positive]),
    ));

    Ok(suite.finish())
}

// ---------------------------------------------------------------------------
// Distributive cross-checks.
// ---------------------------------------------------------------------------

/// Cross-checks on distributive lattices: the Boolean lattices B_2 and B_3
/// have linearly related join-meet ideals, and the lattices of down-sets of
/// a chain of length m plus one extra point (m = 2, 3, 4) have ideals with
/// linear resolution and reg(I) = |P| − rank(P) = 2, where P is the
/// underlying poset. For a quadratic ideal, linear resolution is equivalent
/// to reg(S/I) = 1, which is how the m = 4 case is decided; the smaller
/// cases also verify it against the full Betti table.
pub fn distributive_suite(caps: &Caps) -> Result<SuiteReport, JoinMeetError> {
    let mut suite = SuiteReport::new("distributive-cross-checks");

    for n in [2usize, 3] {
        let l = boolean(n)?;
        let p: JoinMeetPresentation<Rat> = join_meet_ideal(&l, &OrderSpec::default())?;
        suite.claim(ClaimReport::equality(
            format!("the join-meet ideal of the Boolean lattice on {n} atoms is linearly related"),
            format!("distributive.boolean-{n}.linearly-related"),
            json!(true),
            json!(is_linearly_related(p.ideal(), caps)?),
        ));
    }

    for m in [2usize, 3, 4] {
        let poset = chain_plus_point(m)?;
        let poset_size = poset.len();
        let poset_rank = poset.height() - 1;
        let l = birkhoff(&poset)?;
        let p: JoinMeetPresentation<Rat> = join_meet_ideal(&l, &OrderSpec::default())?;
        let gb = buchberger(p.ideal(), caps)?;
        let reg = quotient_regularity(&gb)?;
        suite.claim(ClaimReport::equality(
            format!("the ideal of down-sets of a {m}-chain plus a point has a linear resolution"),
            format!("distributive.birkhoff.m{m}.linear-resolution"),
            json!(1),
            json!(reg),
        ));
        suite.claim(ClaimReport::equality(
            format!("reg(I) = |P| - rank(P) for the {m}-chain plus a point"),
            format!("distributive.birkhoff.m{m}.regularity-formula"),
            json!((poset_size - poset_rank) as u64),
            json!(u64::from(reg) + 1),
        ));
        if m <= 3 {
            suite.claim(ClaimReport::equality(
                format!("the full Betti table confirms the linear resolution at m = {m}"),
                format!("distributive.birkhoff.m{m}.linear-resolution-table"),
                json!(true),
                json!(has_linear_resolution(p.ideal(), caps)?),
            ));
        }
    }

    Ok(suite.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::families::chain;

    fn caps() -> Caps {
        Caps::default()
    }

    fn pentagon() -> Lattice {
        Lattice::from_covers(
            &["o", "z", "x", "y", "i"],
            &[("o", "z"), ("z", "x"), ("x", "i"), ("o", "y"), ("y", "i")],
        )
        .unwrap()
    }

    #[test]
    fn chain_has_zero_ideal() {
        let l = chain(4).unwrap();
        let p: JoinMeetPresentation<Rat> = join_meet_ideal(&l, &OrderSpec::default()).unwrap();
        assert!(p.ideal().gens().is_empty());
    }

    #[test]
    fn boolean_square_has_one_binomial() {
        let l = boolean(2).unwrap();
        let p: JoinMeetPresentation<Rat> = join_meet_ideal(&l, &OrderSpec::default()).unwrap();
        assert_eq!(p.ideal().gens().len(), 1);
        let g = &p.ideal().gens()[0];
        assert_eq!(g.num_terms(), 2);
        assert!(g.is_homogeneous());
        assert_eq!(g.degree(), 2);
    }

    #[test]
    fn diamond_presentation_matches_closed_form() {
        let l = diamond(4).unwrap();
        let p: JoinMeetPresentation<Rat> = join_meet_ideal(&l, &OrderSpec::default()).unwrap();
        // Default precedence: x (height 2), then y_1..y_4, then z.
        let names = p.ring().vars().names().to_vec();
        assert_eq!(names, ["x", "y1", "y2", "y3", "y4", "z"]);
        assert_eq!(p.ideal().gens().len(), 6);
        for g in p.ideal().gens() {
            let s = g.to_string();
            assert!(s.contains("x*z"), "generator {s} lacks the meet-join term");
        }
    }

    #[test]
    fn explicit_precedence_validation() {
        let l = diamond(3).unwrap();
        let too_short = OrderSpec::degrevlex_names(["x", "z"]);
        assert!(matches!(
            join_meet_ideal::<Rat>(&l, &too_short),
            Err(JoinMeetError::InvalidParameter(_))
        ));
        let unknown = OrderSpec::degrevlex_names(["x", "y1", "y2", "y3", "w"]);
        assert!(matches!(
            join_meet_ideal::<Rat>(&l, &unknown),
            Err(JoinMeetError::InvalidParameter(_))
        ));
        let duplicated = OrderSpec::degrevlex_names(["x", "y1", "y2", "y3", "y3"]);
        assert!(matches!(
            join_meet_ideal::<Rat>(&l, &duplicated),
            Err(JoinMeetError::InvalidParameter(_))
        ));
    }

    #[test]
    fn retract_check_on_whole_lattice_is_trivially_true() {
        let l = diamond(3).unwrap();
        let all: Vec<usize> = (0..l.len()).collect();
        let report = retract_check(&l, &all, &caps()).unwrap();
        assert!(report.pass);
        assert!(report.elimination_equal);
        assert!(report.dominance_ok);
        assert!(report.dominance_cells.iter().all(|c| c.sublattice == c.ambient));
    }

    #[test]
    fn retract_check_of_chain_in_pentagon() {
        let l = pentagon();
        let z = l.index_of("z").unwrap();
        let x = l.index_of("x").unwrap();
        let i = l.index_of("i").unwrap();
        // {z, x, i} is an induced 3-chain; both join-meet ideals are zero, so
        // the elimination ideals agree trivially and there is nothing to
        // dominate.
        let report = retract_check(&l, &[z, x, i], &caps()).unwrap();
        assert!(report.pass);
        assert!(report.elimination_equal);
        assert!(report.dominance_cells.is_empty());
    }

    #[test]
    fn retract_check_rejects_non_induced_subsets() {
        let l = pentagon();
        let o = l.index_of("o").unwrap();
        let x = l.index_of("x").unwrap();
        let y = l.index_of("y").unwrap();
        let i = l.index_of("i").unwrap();
        // {o, i} is a sublattice, but x ∧ y = o and x ∨ y = i force x, y in:
        // closed yet not induced.
        assert!(matches!(retract_check(&l, &[o, i], &caps()), Err(JoinMeetError::NotInduced)));
        // {o, x, i} is a chain (closed) but the pair {x, y} again breaks
        // inducedness.
        assert!(matches!(
            retract_check(&l, &[o, x, i], &caps()),
            Err(JoinMeetError::NotInduced)
        ));
        // {x, y, i} is not even meet-closed (x ∧ y = o missing); the failure
        // surfaces through the same error.
        assert!(matches!(
            retract_check(&l, &[x, y, i], &caps()),
            Err(JoinMeetError::NotInduced)
        ));
    }

    #[test]
    fn main_theorem_verifier_on_smallest_diamond() {
        let l = diamond(3).unwrap();
        let report = main_theorem_verifier(&l, &caps()).unwrap();
        assert!(report.pass);
        assert!(report.reg_at_least_3);
        assert_eq!(report.beta_2_4, 3);
        assert_eq!(report.corner.i, 3);
        assert_eq!(report.corner.j, 6);
        assert_eq!(report.corner.ambient, 1);
        assert_eq!(report.diamond_middles.len(), 3);
        assert!(report.retract.pass);
    }

    #[test]
    fn main_theorem_verifier_gates_preconditions() {
        let distributive = boolean(3).unwrap();
        assert!(matches!(
            main_theorem_verifier(&distributive, &caps()),
            Err(JoinMeetError::PreconditionFailed(_))
        ));
        let nonmodular = pentagon();
        assert!(matches!(
            main_theorem_verifier(&nonmodular, &caps()),
            Err(JoinMeetError::PreconditionFailed(_))
        ));
    }

    #[test]
    fn diamond_suite_smallest_case_passes() {
        let suite = diamond_suite(3, &caps()).unwrap();
        assert!(suite.pass, "failures: {suite}");
        assert!(suite.skipped.is_empty());
        let find = |token: &str| {
            suite
                .claims
                .iter()
                .find(|c| c.reference == token)
                .unwrap_or_else(|| panic!("missing claim {token}"))
        };
        assert!(find("diamond.gb.closed-form").pass);
        assert!(find("diamond.invariants.gorenstein").pass);
        assert!(find("diamond.colon.regular-sequence").pass);
        assert!(find("diamond.augmented.beta-2-4").pass);
        // JSON wire format carries the mandated field names.
        let json = suite.to_json();
        let first = &json["claims"][0];
        for key in ["claim", "paper_ref", "expected", "computed", "pass"] {
            assert!(first.get(key).is_some(), "missing key {key}");
        }
    }

    #[test]
    fn diamond_suite_rejects_small_n() {
        assert!(matches!(diamond_suite(2, &caps()), Err(JoinMeetError::InvalidParameter(_))));
    }

    #[test]
    fn lk_suite_smallest_case() {
        let suite = lk_suite(3, 1, &caps()).unwrap();
        assert!(suite.pass, "failures: {suite}");
        // Binding: the degrevlex identification of the reference list and the
        // first colon ideal's linear quotients hold.
        assert!(suite
            .claims
            .iter()
            .any(|c| c.reference == "lk.initial-ideal.reference-list-degrevlex" && c.pass));
        assert!(suite.claims.iter().any(|c| c.reference == "lk.colon-1.linear-quotients" && c.pass));
        // The lex-vs-reference comparison is present and reports a difference.
        let lex_note = suite
            .notes
            .iter()
            .find(|c| c.reference == "lk.initial-ideal.reference-list")
            .expect("lex reference note");
        assert!(!lex_note.pass, "lex initial ideal should differ from the reference list at (3,1)");
        // At k < n - 1 the recorded second-colon statements are contradicted
        // computationally; the notes must surface that, not hide it.
        let c2_lq = suite
            .notes
            .iter()
            .find(|c| c.reference == "lk.colon-2.linear-quotients")
            .expect("colon-2 note");
        assert!(!c2_lq.pass, "colon-2 of the reference initial ideal has no linear quotients at (3,1)");
        let c2_reg = suite
            .notes
            .iter()
            .find(|c| c.reference == "lk.colon-2.regularity")
            .expect("colon-2 reg note");
        assert_eq!(c2_reg.computed, json!(2));
        assert!(!c2_reg.pass);
    }

    #[test]
    fn lk_suite_boundary_case_matches_recorded_statements() {
        // At k = n - 1 every recorded statement is reproduced exactly: all
        // three colon ideals admit linear quotients with regularities 2, 1, 1
        // and the recorded colon lists are self-consistent.
        let suite = lk_suite(3, 2, &caps()).unwrap();
        assert!(suite.pass, "failures: {suite}");
        for note in &suite.notes {
            if note.reference == "lk.initial-ideal.reference-list" {
                continue; // lex differs from degrevlex here too
            }
            assert!(note.pass, "expected note to match at the k = n - 1 boundary: {note}");
        }
    }

    #[test]
    fn lk_suite_gates_parameters() {
        assert!(matches!(lk_suite(6, 1, &caps()), Err(JoinMeetError::InvalidParameter(_))));
        assert!(matches!(lk_suite(3, 3, &caps()), Err(JoinMeetError::InvalidParameter(_))));
    }

    #[test]
    fn distributive_suite_passes() {
        let suite = distributive_suite(&caps()).unwrap();
        assert!(suite.pass, "failures: {suite}");
    }
}
