//! Acceptance gate for the toolkit: ten numbered criteria covering the
//! closed-form Gröbner bases and Hilbert series of the diamond family, its
//! homological invariants and colon structure, the bundled lattice fixtures,
//! the two-chain family, distributive cross-checks, and exhaustive
//! small-lattice validation. Each criterion is one test that prints a single
//! `criterion NN: PASS` line (plus explicit `note` lines wherever a recorded
//! reference value disagrees with the computed one); a failed assertion
//! carries the criterion number in its panic message.

use std::time::Instant;

use latmeet::betti::{
    betti_cells, betti_from_linear_quotients, has_linear_resolution, is_linearly_related,
    linear_quotients_check, monomial_betti_table, quotient_regularity, report_from_gb,
    LinearQuotients,
};
use latmeet::groebner::{buchberger, colon, colon_by_last_var_revlex, ideal_equal, Ideal};
use latmeet::hilbert::{binomial, HilbertSeries};
use latmeet::joinmeet::{
    join_meet_ideal, lk_suite, main_theorem_verifier, JoinMeetPresentation, OrderSpec,
};
use latmeet::lattice::families::{birkhoff, boolean, chain_plus_point, diamond, lk};
use latmeet::lattice::{enumerate_lattices, lattice_from_json};
use latmeet::polyring::{Monomial, Polynomial, Ring};
use latmeet::{Caps, Rat};
use num_bigint::BigInt;
use std::collections::BTreeMap;

fn caps() -> Caps {
    Caps::default()
}

/// Diamond presentation in K[x, y1..yn, z] under degrevlex with the
/// height-descending precedence x > y_1 > ... > y_n > z.
fn diamond_presentation(n: usize) -> JoinMeetPresentation<Rat> {
    let l = diamond(n).expect("diamond lattice builds");
    join_meet_ideal(&l, &OrderSpec::default()).expect("presentation builds")
}

fn parse(ring: &Ring, text: &str) -> Polynomial<Rat> {
    ring.parse_poly(text).unwrap_or_else(|e| panic!("`{text}` parses: {e}"))
}

fn sorted_strings(polys: &[Polynomial<Rat>]) -> Vec<String> {
    let mut v: Vec<String> = polys.iter().map(|p| p.to_string()).collect();
    v.sort();
    v
}

fn entry_map(table: &latmeet::betti::BettiTable) -> BTreeMap<(usize, u32), u64> {
    table.entries().map(|(i, j, b)| ((i, j), b)).collect()
}

/// Closed-form reduced degrevlex basis of the diamond ideal: the quadrics
/// y_i y_j - x z for i < j, the cubics x y_k z - x y_n z for k < n, and the
/// quartic x y_n^2 z - x^2 z^2.
fn diamond_closed_form(ring: &Ring, n: usize) -> Vec<Polynomial<Rat>> {
    let mut expected = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            expected.push(parse(ring, &format!("y{i}*y{j} - x*z")));
        }
    }
    for k in 1..n {
        expected.push(parse(ring, &format!("x*y{k}*z - x*y{n}*z")));
    }
    expected.push(parse(ring, &format!("x*y{n}^2*z - x^2*z^2")));
    expected
}

#[test]
fn criterion_01_diamond_groebner_closed_form() {
    for n in 3..=7 {
        let t0 = Instant::now();
        let p = diamond_presentation(n);
        let gb = p.groebner(&caps()).expect("basis terminates");
        let expected = diamond_closed_form(p.ring(), n);
        assert_eq!(
            sorted_strings(gb.basis()),
            sorted_strings(&expected),
            "criterion 01: FAIL at n = {n}: reduced basis differs from the closed form"
        );
        let dt = t0.elapsed();
        assert!(
            dt.as_secs_f64() < 5.0,
            "criterion 01: FAIL at n = {n}: took {dt:?}, budget 5 s"
        );
    }
    println!(
        "criterion 01: PASS - reduced degrevlex bases of the diamond ideals for n = 3..=7 \
         equal the closed form, each within 5 s"
    );
}

#[test]
fn criterion_02_diamond_hilbert_series() {
    for n in 3..=7 {
        let p = diamond_presentation(n);
        let gb = p.groebner(&caps()).expect("basis terminates");
        let expected_numer: Vec<BigInt> =
            [1, n as i64, n as i64, 1].iter().map(|&c| BigInt::from(c)).collect();

        let series = HilbertSeries::of_ideal_quotient(&gb);
        let (numer, dim) = series.reduced().expect("nonzero quotient");
        assert_eq!(
            (numer, dim),
            (expected_numer.clone(), 2),
            "criterion 02: FAIL at n = {n}: Hilbert series of S/I differs from \
             (1 + {n}t + {n}t^2 + t^3)/(1 - t)^2"
        );

        let ini_series = HilbertSeries::of_quotient(&gb.leading_ideal());
        let (ini_numer, ini_dim) = ini_series.reduced().expect("nonzero quotient");
        assert_eq!(
            (ini_numer, ini_dim),
            (expected_numer, 2),
            "criterion 02: FAIL at n = {n}: Hilbert series of S/in(I) differs from the closed form"
        );

        // Spot check of the Hilbert function: HF(2) = 3n + 3.
        assert_eq!(
            series.hilbert_function(2),
            BigInt::from(3 * n + 3),
            "criterion 02: FAIL at n = {n}: HF(2) should be 3n + 3"
        );
    }
    println!(
        "criterion 02: PASS - Hilbert series of S/I and S/in(I) for n = 3..=7 both equal \
         (1 + n*t + n*t^2 + t^3)/(1 - t)^2"
    );
}

#[test]
fn criterion_03_diamond_invariants() {
    for n in 3..=5 {
        let t0 = Instant::now();
        let p = diamond_presentation(n);
        let gb = p.groebner(&caps()).expect("basis terminates");
        let report = report_from_gb(&gb).expect("invariants computable");
        assert_eq!(report.dim, 2, "criterion 03: FAIL at n = {n}: dim");
        assert_eq!(report.depth, 2, "criterion 03: FAIL at n = {n}: depth");
        assert_eq!(report.pd, n, "criterion 03: FAIL at n = {n}: projective dimension");
        assert_eq!(report.reg, 3, "criterion 03: FAIL at n = {n}: regularity");
        let j = (n + 1) as u32;
        assert_eq!(report.betti.get(n, j), 0, "criterion 03: FAIL at n = {n}: beta_{{n,n+1}}");
        assert_eq!(report.betti.get(n, j + 1), 0, "criterion 03: FAIL at n = {n}: beta_{{n,n+2}}");
        assert_eq!(report.betti.get(n, j + 2), 1, "criterion 03: FAIL at n = {n}: beta_{{n,n+3}}");
        assert!(report.is_cm, "criterion 03: FAIL at n = {n}: Cohen-Macaulay");
        assert!(report.is_gorenstein, "criterion 03: FAIL at n = {n}: Gorenstein");
        let dt = t0.elapsed();
        assert!(
            dt.as_secs_f64() < 60.0,
            "criterion 03: FAIL at n = {n}: took {dt:?}, budget 60 s"
        );
    }
    println!(
        "criterion 03: PASS - diamond quotients for n = 3, 4, 5 have dim = depth = 2, pd = n, \
         reg = 3, final Betti column (0, 0, 1), and are Gorenstein, each within 60 s"
    );
}

#[test]
fn criterion_04_beta_2_4_and_augmented_ideal() {
    for n in 3..=5 {
        let p = diamond_presentation(n);
        let gb = p.groebner(&caps()).expect("basis terminates");
        let b24 = betti_cells(&gb, &[(2, 4)]).expect("cell computable")[0];
        assert!(b24 > 0, "criterion 04: FAIL at n = {n}: beta_{{2,4}}(S/I) = 0");

        let xz = parse(p.ring(), "x*z");
        let mut augmented = p.ideal().gens().to_vec();
        augmented.push(xz);
        let aug_gb =
            buchberger(&Ideal::new(p.ring(), augmented), &caps()).expect("basis terminates");
        let aug_b24 = betti_cells(&aug_gb, &[(2, 4)]).expect("cell computable")[0];
        assert_eq!(
            BigInt::from(aug_b24),
            binomial(n as u64, 2),
            "criterion 04: FAIL at n = {n}: beta_{{2,4}}(S/(I, x*z)) should be C(n, 2)"
        );
    }
    println!(
        "criterion 04: PASS - beta_{{2,4}}(S/I) > 0 and beta_{{2,4}}(S/(I, x*z)) = C(n, 2) \
         for n = 3, 4, 5"
    );
}

#[test]
fn criterion_05_initial_ideal_linear_quotients() {
    for n in 3..=5 {
        let p = diamond_presentation(n);
        let gb = p.groebner(&caps()).expect("basis terminates");
        let ini = gb.leading_ideal();
        let nvars = p.ring().nvars();

        // Variable indices under the height-descending precedence:
        // x = 0, y_i = i, z = n + 1.
        let var_mono = |pairs: &[(usize, u32)]| {
            let mut exps = vec![0u32; nvars];
            for &(v, e) in pairs {
                exps[v] = e;
            }
            Monomial::from_exps(exps)
        };
        let mut targets: Vec<(Monomial, u32)> = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                targets.push((var_mono(&[(i, 1), (j, 1)]), 2));
            }
        }
        for k in 1..n {
            targets.push((var_mono(&[(0, 1), (k, 1), (n + 1, 1)]), 3));
        }
        targets.push((var_mono(&[(0, 1), (n, 2), (n + 1, 1)]), 4));

        let ordering: Vec<usize> = targets
            .iter()
            .map(|(m, _)| {
                ini.gens()
                    .iter()
                    .position(|g| g == m)
                    .unwrap_or_else(|| panic!("criterion 05: FAIL at n = {n}: {m:?} not minimal"))
            })
            .collect();
        let degrees: Vec<u32> = targets.iter().map(|&(_, d)| d).collect();

        let r = match linear_quotients_check(&ini, &ordering) {
            LinearQuotients::Linear { r } => r,
            LinearQuotients::FailsAt { k } => panic!(
                "criterion 05: FAIL at n = {n}: the quadrics-then-cubics ordering loses \
                 linear quotients at position {k}"
            ),
        };
        let lq_table = betti_from_linear_quotients(&r, &degrees, nvars);
        let j = (n + 1) as u32;
        assert_eq!(lq_table.get(n, j), 0, "criterion 05: FAIL at n = {n}: beta_{{n,n+1}}");
        assert_eq!(
            lq_table.get(n, j + 1),
            (n - 1) as u64,
            "criterion 05: FAIL at n = {n}: beta_{{n,n+2}} should be n - 1"
        );

        let koszul = monomial_betti_table(&ini, None).expect("table computable");
        assert_eq!(
            entry_map(&lq_table),
            entry_map(&koszul),
            "criterion 05: FAIL at n = {n}: linear-quotients table differs from the \
             Koszul-homology table"
        );
    }
    println!(
        "criterion 05: PASS - in(I) has linear quotients in the quadrics-then-cubics order for \
         n = 3, 4, 5; the induced table gives beta_{{n,n+1}} = 0 and beta_{{n,n+2}} = n - 1 and \
         matches the Koszul-homology table entry for entry"
    );
}

#[test]
fn criterion_06_colon_ideals() {
    for n in 3..=7 {
        let p = diamond_presentation(n);
        let ring = p.ring();
        let gb = p.groebner(&caps()).expect("basis terminates");

        // Route one: in degrevlex, I : z for the smallest variable z comes
        // from dividing z out of the basis elements it divides.
        let trick = colon_by_last_var_revlex(&gb).expect("degrevlex shortcut applies");
        let mut expected: Vec<Polynomial<Rat>> = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                expected.push(parse(ring, &format!("y{i}*y{j} - x*z")));
            }
        }
        for k in 1..n {
            expected.push(parse(ring, &format!("x*y{k} - x*y{n}")));
        }
        expected.push(parse(ring, &format!("x*y{n}^2 - x^2*z")));
        assert_eq!(
            sorted_strings(trick.basis()),
            sorted_strings(&expected),
            "criterion 06: FAIL at n = {n}: reduced basis of I : z differs from the closed form"
        );

        // Route two: elimination-based colon agrees with route one.
        let z_poly = parse(ring, "z");
        let generic = colon(p.ideal(), &z_poly, &caps()).expect("colon computable");
        let trick_ideal = Ideal::new(ring, trick.basis().to_vec());
        assert!(
            ideal_equal(&trick_ideal, &generic, &caps()).expect("comparison computable"),
            "criterion 06: FAIL at n = {n}: the two colon routes disagree"
        );

        // (I : z) : x is the regular-sequence ideal
        // (y_1 - y_n, ..., y_{n-1} - y_n, y_n^2 - x*z).
        let x_poly = parse(ring, "x");
        let jx = colon(&trick_ideal, &x_poly, &caps()).expect("colon computable");
        let mut seq: Vec<Polynomial<Rat>> = Vec::new();
        for i in 1..n {
            seq.push(parse(ring, &format!("y{i} - y{n}")));
        }
        seq.push(parse(ring, &format!("y{n}^2 - x*z")));
        assert!(
            ideal_equal(&jx, &Ideal::new(ring, seq), &caps()).expect("comparison computable"),
            "criterion 06: FAIL at n = {n}: (I : z) : x differs from the regular-sequence ideal"
        );
    }
    println!(
        "criterion 06: PASS - for n = 3..=7 the reduced basis of I : z equals the closed form, \
         the degrevlex shortcut agrees with the elimination-based colon, and (I : z) : x is the \
         regular-sequence ideal (y_1 - y_n, ..., y_{{n-1}} - y_n, y_n^2 - x*z)"
    );
}

#[test]
fn criterion_07_fixture_regularities() {
    // (file, regularity certified by computation, regularity recorded with
    // the fixture source). The third fixture's recorded value 3 disagrees
    // with the computed value 4; the computation is cross-checked by
    // independent degrevlex and lex resolutions, the Euler identity against
    // the Hilbert series, and semicontinuity under four orders, so the
    // certified value is asserted and the disagreement reported.
    const FIXTURES: [(&str, u32, u32); 5] = [
        ("reg3_a.json", 3, 3),
        ("reg3_b.json", 3, 3),
        ("reg4_c.json", 4, 3),
        ("reg5_a.json", 5, 5),
        ("reg5_b.json", 5, 5),
    ];
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures");
    let t0 = Instant::now();
    let mut regs = Vec::new();
    for (file, certified, recorded) in FIXTURES {
        let text = std::fs::read_to_string(format!("{dir}/{file}"))
            .unwrap_or_else(|e| panic!("criterion 07: FAIL - cannot read {file}: {e}"));
        let l = lattice_from_json(&text)
            .unwrap_or_else(|e| panic!("criterion 07: FAIL - {file} is not a lattice: {e}"));
        let p: JoinMeetPresentation<Rat> =
            join_meet_ideal(&l, &OrderSpec::default()).expect("presentation builds");
        let gb = p.groebner(&caps()).expect("basis terminates");
        let reg = quotient_regularity(&gb).expect("regularity computable");
        if recorded != certified {
            println!(
                "criterion 07: note - {file}: recorded regularity {recorded} disagrees with the \
                 computed value {reg}; the computed value is certified by matching degrevlex and \
                 lex resolutions, the Euler identity, and order semicontinuity, and is the value \
                 asserted here"
            );
        }
        assert_eq!(
            reg, certified,
            "criterion 07: FAIL - {file}: computed regularity {reg}, certified {certified}"
        );
        let mt = main_theorem_verifier(&l, &caps()).expect("verifier runs");
        assert!(
            mt.retract.elimination_equal,
            "criterion 07: FAIL - {file}: eliminating down to the diamond interval does not \
             reproduce its join-meet ideal"
        );
        assert!(
            mt.retract.dominance_ok,
            "criterion 07: FAIL - {file}: Betti dominance fails for the diamond interval"
        );
        assert!(mt.beta_2_4 > 0, "criterion 07: FAIL - {file}: beta_{{2,4}} = 0");
        regs.push(reg);
    }
    let dt = t0.elapsed();
    assert!(
        dt.as_secs_f64() < 300.0,
        "criterion 07: FAIL - fixtures took {dt:?}, budget 300 s"
    );
    println!(
        "criterion 07: PASS - fixture regularities {:?} (one recorded value disagrees, see note), \
         all with beta_{{2,4}} > 0 and passing retract checks, in {:.1} s (budget 300 s)",
        regs,
        dt.as_secs_f64()
    );
}

#[test]
fn criterion_08_two_chain_family() {
    for (n, k) in [(3usize, 1usize), (3, 2), (4, 2)] {
        // Route one: regularity from a lex basis of the ideal itself.
        let l = lk(n, k).expect("lattice builds");
        let p: JoinMeetPresentation<Rat> =
            join_meet_ideal(&l, &OrderSpec::lex_input_order()).expect("presentation builds");
        let gb = p.groebner(&caps()).expect("basis terminates");
        let reg_direct = quotient_regularity(&gb).expect("regularity computable");
        assert_eq!(
            reg_direct, 3,
            "criterion 08: FAIL at (n, k) = ({n}, {k}): regularity via the lex basis"
        );

        // Route two: regularity of the computed initial ideal.
        let ini_table =
            monomial_betti_table(&gb.leading_ideal(), None).expect("table computable");
        assert_eq!(
            ini_table.reg(),
            3,
            "criterion 08: FAIL at (n, k) = ({n}, {k}): regularity of S/in(I)"
        );

        // Scripted suite: binding claims must pass; reference notes surface
        // every disagreement with the recorded statements.
        let suite = lk_suite(n, k, &caps()).expect("suite runs");
        assert!(
            suite.pass,
            "criterion 08: FAIL at (n, k) = ({n}, {k}): {:?}",
            suite.failed_claims().map(|c| c.reference.clone()).collect::<Vec<_>>()
        );
        let claim = |r: &str| {
            suite
                .claims
                .iter()
                .find(|c| c.reference == r)
                .unwrap_or_else(|| panic!("claim {r} present"))
        };
        let note = |r: &str| {
            suite
                .notes
                .iter()
                .find(|c| c.reference == r)
                .unwrap_or_else(|| panic!("note {r} present"))
        };
        assert!(
            claim("lk.initial-ideal.reference-list-degrevlex").pass,
            "criterion 08: FAIL at (n, k) = ({n}, {k}): the recorded generator list is not the \
             degrevlex initial ideal"
        );
        assert!(
            claim("lk.colon-1.linear-quotients").pass,
            "criterion 08: FAIL at (n, k) = ({n}, {k}): J : y_{{k+1}} has no linear quotients"
        );

        let lex_note = note("lk.initial-ideal.reference-list");
        assert!(
            !lex_note.pass,
            "criterion 08: expected the recorded list to differ from the lex initial ideal \
             at (n, k) = ({n}, {k})"
        );
        println!(
            "criterion 08: note - lk(n = {n}, k = {k}): the recorded generator list does not \
             match the lex initial ideal for the stated order, but is exactly the degrevlex \
             initial ideal; lex diff: {}",
            lex_note.computed
        );

        for reference in ["lk.colon-2.linear-quotients", "lk.colon-3.linear-quotients"] {
            let c = note(reference);
            if k == n - 1 {
                assert!(
                    c.pass,
                    "criterion 08: FAIL at (n, k) = ({n}, {k}): {reference} should hold at \
                     k = n - 1"
                );
            } else {
                assert!(
                    !c.pass,
                    "criterion 08: expected {reference} to fail at (n, k) = ({n}, {k})"
                );
                println!(
                    "criterion 08: note - lk(n = {n}, k = {k}): {reference} - recorded as \
                     having linear quotients, but no generator ordering admits them; the \
                     regularity of that colon quotient is 2, not 1 (the final bound \
                     reg(S/J) <= 3 still holds, as the exact-sequence claims verify)"
                );
            }
        }
    }
    println!(
        "criterion 08: PASS - two-chain quotients at (3, 1), (3, 2), (4, 2) have regularity 3 \
         by both routes; the first colon ideal always has linear quotients, the recorded \
         colon statements hold exactly at k = n - 1, and every disagreement with recorded \
         lists is reported above"
    );
}

#[test]
fn criterion_09_distributive_lattices() {
    for n in [2usize, 3] {
        let l = boolean(n).expect("lattice builds");
        let p: JoinMeetPresentation<Rat> =
            join_meet_ideal(&l, &OrderSpec::default()).expect("presentation builds");
        assert!(
            is_linearly_related(p.ideal(), &caps()).expect("computable"),
            "criterion 09: FAIL - the Boolean lattice on {n} atoms is not linearly related"
        );
    }
    for m in [2usize, 3, 4] {
        let poset = chain_plus_point(m).expect("poset builds");
        let l = birkhoff(&poset).expect("lattice builds");
        let p: JoinMeetPresentation<Rat> =
            join_meet_ideal(&l, &OrderSpec::default()).expect("presentation builds");
        assert!(
            has_linear_resolution(p.ideal(), &caps()).expect("computable"),
            "criterion 09: FAIL - down-set lattice of the {m}-chain plus a point: no linear \
             resolution"
        );
        let gb = p.groebner(&caps()).expect("basis terminates");
        let reg_ideal = quotient_regularity(&gb).expect("regularity computable") + 1;
        let poset_rank = (poset.height() - 1) as u32;
        assert_eq!(
            reg_ideal,
            poset.len() as u32 - poset_rank,
            "criterion 09: FAIL - down-set lattice of the {m}-chain plus a point: \
             reg(I) != |P| - rank(P)"
        );
    }
    println!(
        "criterion 09: PASS - Boolean join-meet ideals on 2 and 3 atoms are linearly related; \
         down-set lattices of an m-chain plus a point (m = 2, 3, 4) have linear resolutions \
         with reg(I) = |P| - rank(P)"
    );
}

#[test]
fn criterion_10_exhaustive_small_lattices() {
    let t0 = Instant::now();
    let classes = enumerate_lattices(6).expect("enumeration within limits");
    let mut modular_nondistributive = 0usize;
    for l in &classes {
        assert_eq!(
            l.is_modular(),
            l.find_pentagon().is_none(),
            "criterion 10: FAIL - modularity disagrees with pentagon-freeness on a class of \
             size {}",
            l.len()
        );
        assert_eq!(
            l.is_distributive(),
            l.find_pentagon().is_none() && l.find_diamond().is_none(),
            "criterion 10: FAIL - distributivity disagrees with pentagon- and diamond-freeness \
             on a class of size {}",
            l.len()
        );

        let p: JoinMeetPresentation<Rat> =
            join_meet_ideal(l, &OrderSpec::default()).expect("presentation builds");
        let gb = p.groebner(&caps()).expect("basis terminates");
        let report = report_from_gb(&gb).expect("invariants computable");
        assert!(
            report.betti.is_complete(),
            "criterion 10: FAIL - truncated Betti table on a class of size {}",
            l.len()
        );
        assert!(
            report.betti.euler_matches(&report.hilbert),
            "criterion 10: FAIL - Euler characteristics of the resolution do not match the \
             Hilbert numerator on a class of size {}",
            l.len()
        );
        assert_eq!(
            report.depth + report.pd,
            report.nvars,
            "criterion 10: FAIL - depth + pd != number of variables on a class of size {}",
            l.len()
        );
        assert!(
            report.depth <= report.dim,
            "criterion 10: FAIL - depth exceeds Krull dimension on a class of size {}",
            l.len()
        );

        if l.is_modular() && !l.is_distributive() {
            modular_nondistributive += 1;
            assert!(
                report.reg >= 3,
                "criterion 10: FAIL - a modular non-distributive class of size {} has \
                 regularity {} < 3",
                l.len(),
                report.reg
            );
            assert!(
                report.betti.get(2, 4) > 0,
                "criterion 10: FAIL - a modular non-distributive class of size {} has \
                 beta_{{2,4}} = 0",
                l.len()
            );
        }
    }
    let dt = t0.elapsed();
    assert!(
        dt.as_secs_f64() < 600.0,
        "criterion 10: FAIL - enumeration sweep took {dt:?}, budget 600 s"
    );
    println!(
        "criterion 10: PASS - {} isomorphism classes with at most 6 elements: modularity \
         coincides with pentagon-freeness, Euler characteristics match the Hilbert data, \
         depth + pd equals the variable count, and all {} modular non-distributive classes \
         have reg >= 3 and beta_{{2,4}} > 0 ({:.1} s, budget 600 s)",
        classes.len(),
        modular_nondistributive,
        dt.as_secs_f64()
    );
}
