//! Acceptance run: one PASS/FAIL line per criterion, each with a pinned
//! wall-clock limit. Criterion 10 is a benchmark and is reported but never
//! fails the run.
//!
//! Values are compared exactly (BigRational coefficients, zero tolerance).
//! Reference values come from small oracles in this file, mostly literal
//! tables and brute-force subword enumeration.

use std::collections::HashMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stab_core::group_algebra::{rmatrix_minus, rmatrix_plus};
use stab_core::parabolic::{parabolic_duality, parabolic_table, ParabolicRestrictionTable, RepresentativePolicy, Route};
use stab_core::poly_ring::{FixedPointFunction, LinearForm, Poly, RatFunc, Scalar};
use stab_core::root_system::{CartanType, CosetSpace, RootSystem, WeylElement, WeylGroup, DEFAULT_MAX_GROUP_ORDER};
use stab_core::schubert_limit::{billey_from_limit, billey_restriction, schubert_p_restriction};
use stab_core::stable_basis::{
    apply_a0, closed_form_column, duality_pairing, stab_minus_restriction, stab_plus_restriction, stab_table, Chamber, Method,
};
use stab_core::{Integer, MPoly, MRestrictionTable, Rational};

type Check = Result<String, String>;

const A: CartanType = CartanType::A;
const B: CartanType = CartanType::B;
const G: CartanType = CartanType::G;
const F: CartanType = CartanType::F;

/// Exact comparisons only; kept as a named constant so the output says so.
const TOLERANCE: &str = "exact";

fn group(t: CartanType, n: usize) -> WeylGroup {
    WeylGroup::new(RootSystem::new(t, n).unwrap(), DEFAULT_MAX_GROUP_ORDER).unwrap()
}

fn label(g: &WeylGroup) -> String {
    format!("{}{}", g.root_system().cartan_type(), g.rank())
}

fn p(rank: usize, s: &str) -> MPoly {
    MPoly::parse(rank, s).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn table(g: &WeylGroup, c: Chamber, m: Method) -> Result<MRestrictionTable, String> {
    stab_table(g, c, m).map_err(|e| format!("{} {c} {m}: {e}", label(g)))
}

struct Outcome {
    id: usize,
    gating: bool,
    passed: bool,
}

fn criterion(id: usize, title: &str, limit: Duration, gating: bool, f: impl FnOnce() -> Check) -> Outcome {
    let start = Instant::now();
    let result = f();
    let took = start.elapsed();
    let (passed, detail) = match result {
        Ok(d) if took <= limit => (true, d),
        Ok(d) => (false, format!("{d}; over the {}s limit", limit.as_secs())),
        Err(e) => (false, e),
    };
    let status = if passed { "PASS" } else { "FAIL" };
    let note = if gating { "" } else { " (non-gating)" };
    println!(
        "criterion {id:>2} {status} {:>8.2}s / {:>4}s  {title}{note} [{TOLERANCE}]: {detail}",
        took.as_secs_f64(),
        limit.as_secs()
    );
    Outcome { id, gating, passed }
}

// Oracles.

fn product_of<C: Scalar>(rank: usize, forms: impl IntoIterator<Item = LinearForm>) -> Poly<C> {
    forms.into_iter().fold(Poly::one(rank), |acc, f| &acc * &f.to_poly())
}

/// Diagonal entries straight from the root action: minus
/// `∏_{wα>0}(wα−ℏ)·∏_{wα<0}wα`, plus with the shift on the negative side.
fn diagonal_oracle<C: Scalar>(g: &WeylGroup, chamber: Chamber, w: WeylElement) -> Poly<C> {
    let forms = g.root_system().positive_roots().iter().map(|a| {
        let wa = g.act_root(w, a);
        let pos = RootSystem::is_positive(&wa);
        let shift = match chamber {
            Chamber::Minus => pos,
            Chamber::Plus => !pos,
        };
        LinearForm::root_shifted(&wa, if shift { -1 } else { 0 })
    });
    product_of(g.rank(), forms)
}

/// Entry mod ℏ² from the degenerate formula, computed by scanning the
/// reflections.
fn mod_h2_oracle(g: &WeylGroup, chamber: Chamber, w: WeylElement, y: WeylElement) -> MPoly {
    let rank = g.rank();
    if w == y {
        return diagonal_oracle(g, chamber, w).truncate_hbar(2);
    }
    let pos = g.root_system().positive_roots();
    for (k, beta) in pos.iter().enumerate() {
        if g.mul(y, g.reflection(k)) == w && g.length(w) < g.length(y) {
            let top = &MPoly::hbar(rank) * &product_of(rank, pos.iter().map(|a| LinearForm::from_root(a)));
            let q = top.exact_divide(&LinearForm::from_root(&g.act_root(y, beta))).unwrap();
            let sign = if (g.length(y) + 1).is_multiple_of(2) { Rational::one() } else { -Rational::one() };
            return q.scale(&sign);
        }
    }
    MPoly::zero(rank)
}

/// Billey restrictions by enumerating every index subset of the canonical
/// word of each `y`; keyed by `(w, y)`.
fn billey_oracle(g: &WeylGroup) -> HashMap<(WeylElement, WeylElement), MPoly> {
    let rank = g.rank();
    let mut out = HashMap::new();
    for y in g.elements() {
        let word = g.word(y);
        let betas = g.inversion_set(word).unwrap();
        for mask in 0u32..(1 << word.len()) {
            let picked: Vec<usize> = (0..word.len()).filter(|&i| mask >> i & 1 == 1).collect();
            let letters: Vec<usize> = picked.iter().map(|&i| word[i]).collect();
            let w = g.word_product(&letters).unwrap();
            if g.length(w) != picked.len() {
                continue;
            }
            let term = product_of(rank, picked.iter().map(|&i| LinearForm::from_root(&betas[i])));
            *out.entry((w, y)).or_insert_with(|| MPoly::zero(rank)) += &term;
        }
    }
    out
}

fn maximal_parabolics(g: &WeylGroup) -> Vec<CosetSpace> {
    let n = g.rank();
    (0..n).map(|j| g.coset_space(&(0..n).filter(|&i| i != j).collect::<Vec<_>>()).unwrap()).collect()
}

// Criteria.

fn c1_golden() -> Check {
    let g = group(A, 1);
    let minus = [p(1, "a1 - h"), p(1, "-h"), p(1, "0"), p(1, "-a1")];
    let plus = [p(1, "a1"), p(1, "-h"), p(1, "0"), p(1, "-a1 - h")];
    for m in Method::ALL {
        let t = table(&g, Chamber::Minus, m)?;
        ensure(t.entries() == minus, || format!("minus by {m}: {:?}", t.entries().iter().map(ToString::to_string).collect::<Vec<_>>()))?;
        let t = table(&g, Chamber::Plus, m)?;
        ensure(t.entries() == plus, || format!("plus by {m}: {:?}", t.entries().iter().map(ToString::to_string).collect::<Vec<_>>()))?;
    }
    Ok("both chambers, all three methods".into())
}

fn c2_methods() -> Check {
    let mut cells = 0;
    for (t, n) in [(A, 2), (A, 3), (B, 2), (B, 3), (G, 2)] {
        let g = group(t, n);
        for c in [Chamber::Minus, Chamber::Plus] {
            let closed = table(&g, c, Method::ClosedForm)?;
            for m in [Method::Recursion, Method::RMatrix] {
                let other = table(&g, c, m)?;
                if let Some((w, y)) = closed.first_difference(&other) {
                    return Err(format!("{} {c}: closed_form vs {m} differ at ({w}, {y})", label(&g)));
                }
            }
            cells += closed.entries().len();
        }
    }
    Ok(format!("{cells} cells identical across closed_form/recursion/rmatrix"))
}

fn braid_words(g: &WeylGroup, i: usize, j: usize) -> (Vec<usize>, Vec<usize>, usize) {
    let c = g.root_system().cartan_matrix();
    let m = match c[i][j] * c[j][i] {
        0 => 2,
        1 => 3,
        2 => 4,
        _ => 6,
    };
    let alt = |a: usize, b: usize| (0..m).map(|k| if k % 2 == 0 { a } else { b }).collect::<Vec<_>>();
    (alt(i, j), alt(j, i), m)
}

fn c3_words() -> Check {
    let mut words_checked = 0;
    let mut braids = Vec::new();
    for (t, n) in [(A, 3), (B, 3), (G, 2)] {
        let g = group(t, n);
        let minus = table(&g, Chamber::Minus, Method::Recursion)?;
        let plus = table(&g, Chamber::Plus, Method::Recursion)?;
        for y in g.elements() {
            let words = g.reduced_words(y);
            if words.len() < 2 {
                continue;
            }
            for word in &words {
                words_checked += 1;
                let column = closed_form_column::<Rational>(&g, Chamber::Minus, word).map_err(|e| e.to_string())?;
                for w in g.elements() {
                    let here = || format!("{} w={} via {word:?}", label(&g), g.format_element(w));
                    ensure(&column[w.index()] == minus.get(w, y), || format!("minus {}", here()))?;
                    let v = stab_plus_restriction::<Rational>(&g, word, w).map_err(|e| e.to_string())?;
                    ensure(&v == plus.get(w, y), || format!("plus {}", here()))?;
                }
            }
        }
        // Reduced words of the longest element, counted independently.
        let expect = match t {
            A => 16,
            B => 42,
            _ => 2,
        };
        let got = g.reduced_words(g.longest()).len();
        ensure(got == expect, || format!("{}: {got} reduced words of the longest element, expected {expect}", label(&g)))?;
    }
    // Braid relations of every order m ∈ {2, 3, 4, 6} at the R-matrix level.
    for (t, n, i, j) in [(A, 3, 0, 2), (A, 2, 0, 1), (B, 2, 0, 1), (G, 2, 0, 1)] {
        let g = group(t, n);
        let (l, r, m) = braid_words(&g, i, j);
        let minus_ok = rmatrix_minus::<Rational>(&g, &l).unwrap() == rmatrix_minus::<Rational>(&g, &r).unwrap();
        let plus_ok = rmatrix_plus::<Rational>(&g, &l).unwrap() == rmatrix_plus::<Rational>(&g, &r).unwrap();
        ensure(minus_ok && plus_ok, || format!("braid m={m} in {}", label(&g)))?;
        braids.push(m);
    }
    ensure(braids == [2, 3, 4, 6], || format!("braid orders covered: {braids:?}"))?;
    Ok(format!("{words_checked} reduced words in A3/B3/G2, braid m=2,3,4,6"))
}

fn c4_duality() -> Check {
    let mut pairs = 0;
    for (t, n) in [(A, 2), (A, 3), (B, 2), (G, 2)] {
        let g = group(t, n);
        let plus = table(&g, Chamber::Plus, Method::Recursion)?;
        let minus = table(&g, Chamber::Minus, Method::Recursion)?;
        for y in g.elements() {
            for w in g.elements() {
                let c = duality_pairing(&g, &plus, &minus, y, w).map_err(|e| e.to_string())?;
                let expect = if y == w { Rational::one() } else { Rational::zero() };
                ensure(c == expect, || format!("{} y={}, w={}: {c}", label(&g), g.format_element(y), g.format_element(w)))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs give the identity matrix"))
}

fn c5_a0() -> Check {
    let mut cases = 0;
    for (t, n) in [(A, 2), (B, 2)] {
        let g = group(t, n);
        for c in [Chamber::Minus, Chamber::Plus] {
            let tab = table(&g, c, Method::Recursion)?;
            for y in g.elements() {
                for i in 0..n {
                    let lhs = apply_a0(&g, i, &tab.label_function(y)).map_err(|e| e.to_string())?;
                    let ys = g.mul_simple(y, i);
                    let rhs = FixedPointFunction::new(
                        g.elements().map(|z| RatFunc::from_poly(-(tab.restriction(y, z) + tab.restriction(ys, z)))).collect(),
                    );
                    ensure(lhs == rhs, || format!("{} {c} y={} alpha{}", label(&g), g.format_element(y), i + 1))?;
                    cases += 1;
                }
            }
        }
    }
    Ok(format!("{cases} (chamber, y, alpha) cases"))
}

fn c6_mod_h2() -> Check {
    let mut cells = 0;
    for (t, n) in [(A, 2), (A, 3), (B, 2)] {
        let g = group(t, n);
        for c in [Chamber::Minus, Chamber::Plus] {
            let tab = table(&g, c, Method::ClosedForm)?;
            for w in g.elements() {
                for y in g.elements() {
                    let got = tab.get(w, y).truncate_hbar(2);
                    let want = mod_h2_oracle(&g, c, w, y);
                    ensure(got == want, || format!("{} {c} w={}, y={}: {got} vs {want}", label(&g), g.format_element(w), g.format_element(y)))?;
                    cells += 1;
                }
            }
        }
    }
    Ok(format!("{cells} cells"))
}

fn audit_parabolic(g: &WeylGroup, cs: &CosetSpace, t: &ParabolicRestrictionTable<Rational>) -> Result<(), String> {
    let degree = cs.complement_roots().len() as u32;
    for wb in 0..cs.len() {
        for yb in 0..cs.len() {
            let e = t.get(wb, yb);
            let here = || format!("{} I={:?} {} ({wb}, {yb}): {e}", label(g), cs.subset(), t.chamber());
            if !cs.bruhat_leq(g, wb, yb) {
                ensure(e.is_zero(), || format!("support {}", here()))?;
            }
            if wb == yb {
                ensure(!e.is_zero(), || format!("diagonal {}", here()))?;
            } else {
                ensure(e.divisible_by_hbar(), || format!("divisibility {}", here()))?;
            }
            if !e.is_zero() {
                ensure(e.homogeneous_degree() == Some(degree), || format!("degree {}", here()))?;
            }
        }
    }
    Ok(())
}

fn c7_parabolic() -> Check {
    let mut spaces = 0;
    for (t, n) in [(A, 2), (A, 3), (B, 2)] {
        let g = group(t, n);
        let mut all = maximal_parabolics(&g);
        all.push(g.coset_space(&[]).unwrap());
        all.push(g.coset_space(&(0..n).collect::<Vec<_>>()).unwrap());
        let borel_plus = table(&g, Chamber::Plus, Method::Recursion)?;
        let borel_minus = table(&g, Chamber::Minus, Method::Recursion)?;
        for cs in &all {
            let mut pair = Vec::new();
            for borel in [&borel_plus, &borel_minus] {
                let a1 = parabolic_table(&g, cs, borel, Route::A1, &RepresentativePolicy::Minimal).map_err(|e| e.to_string())?;
                let a2 = parabolic_table(&g, cs, borel, Route::A2, &RepresentativePolicy::Minimal).map_err(|e| e.to_string())?;
                if let Some(cell) = a1.first_difference(&a2) {
                    return Err(format!("{} I={:?} {}: routes differ at {cell:?}", label(&g), cs.subset(), borel.chamber()));
                }
                audit_parabolic(&g, cs, &a1)?;
                pair.push(a1);
            }
            for yb in 0..cs.len() {
                for wb in 0..cs.len() {
                    let c = parabolic_duality(&g, cs, &pair[0], &pair[1], yb, wb).map_err(|e| e.to_string())?;
                    let expect = if yb == wb { Rational::one() } else { Rational::zero() };
                    ensure(c == expect, || format!("{} I={:?} duality ({yb}, {wb}) = {c}", label(&g), cs.subset()))?;
                }
            }
            if cs.subset().is_empty() {
                ensure(pair[1].entries() == borel_minus.entries(), || "I=∅ differs from the Borel table".into())?;
            }
            if cs.len() == 1 {
                ensure(pair[1].entries() == [MPoly::one(n)], || "I=Δ is not the 1x1 identity".into())?;
            }
            spaces += 1;
        }
    }
    Ok(format!("{spaces} coset spaces, both routes and both chambers"))
}

fn c8_billey() -> Check {
    let mut cells = 0;
    for (t, n) in [(A, 2), (A, 3), (B, 2), (B, 3), (G, 2)] {
        let g = group(t, n);
        let minus = table(&g, Chamber::Minus, Method::Recursion)?;
        let oracle = billey_oracle(&g);
        for w in g.elements() {
            for y in g.elements() {
                let direct = billey_restriction::<Rational>(&g, w, g.word(y)).map_err(|e| e.to_string())?;
                let limit = billey_from_limit(&g, w, y, &minus).map_err(|e| e.to_string())?;
                let want = oracle.get(&(w, y)).cloned().unwrap_or_else(|| MPoly::zero(n));
                let here = || format!("{} w={}, y={}", label(&g), g.format_element(w), g.format_element(y));
                ensure(direct == want, || format!("{}: subword sum {direct}, enumeration {want}", here()))?;
                ensure(limit == want, || format!("{}: limit {limit}, enumeration {want}", here()))?;
                ensure(direct.has_nonnegative_integer_coefficients(), || format!("{}: negative or fractional coefficient", here()))?;
                cells += 1;
            }
        }
    }
    let g = group(A, 2);
    let v = billey_restriction::<Rational>(&g, g.reduced_product(&[0]).unwrap(), &[0, 1, 0]).unwrap();
    ensure(v == p(2, "a1 + a2"), || format!("A2 (s1, s1s2s1) = {v}"))?;
    Ok(format!("{cells} cells; A2 (s1, s1s2s1) = a1 + a2"))
}

fn c9_cosets() -> Check {
    let mut cells = 0;
    for (t, n) in [(A, 2), (A, 3), (B, 2)] {
        let g = group(t, n);
        for cs in maximal_parabolics(&g) {
            for wb in 0..cs.len() {
                for yb in 0..cs.len() {
                    schubert_p_restriction::<Rational>(&g, &cs, wb, yb).map_err(|e| format!("{} I={:?}: {e}", label(&g), cs.subset()))?;
                    cells += 1;
                }
            }
        }
    }
    Ok(format!("{cells} coset pairs constant over representatives"))
}

fn c10_bench() -> Check {
    let b3 = group(B, 3);
    let start = Instant::now();
    table(&b3, Chamber::Minus, Method::ClosedForm)?;
    let b3_time = start.elapsed();
    if b3_time > Duration::from_secs(60) {
        return Err(format!("B3 minus closed-form table took {:.1}s", b3_time.as_secs_f64()));
    }
    let f4 = group(F, 4);
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let n = f4.order();
    let mut cells = Vec::new();
    while cells.len() < 1000 {
        let (w, y) = (f4.element(rng.gen_range(0..n)), f4.element(rng.gen_range(0..n)));
        if w != y && f4.bruhat_leq(w, y) {
            cells.push((w, y));
        }
    }
    let start = Instant::now();
    for w in f4.elements() {
        let v = stab_minus_restriction::<Integer>(&f4, w, f4.word(w)).map_err(|e| e.to_string())?;
        ensure(v == diagonal_oracle(&f4, Chamber::Minus, w), || format!("F4 diagonal at {}", f4.format_element(w)))?;
    }
    for &(w, y) in &cells {
        stab_minus_restriction::<Integer>(&f4, w, f4.word(y)).map_err(|e| e.to_string())?;
    }
    let f4_time = start.elapsed();
    let detail = format!("B3 table {:.2}s; F4 {n} diagonal + 1000 random cells {:.1}s", b3_time.as_secs_f64(), f4_time.as_secs_f64());
    if f4_time > Duration::from_secs(600) {
        return Err(detail);
    }
    Ok(detail)
}

// Runs without the libtest harness so the report is printed even when
// everything passes.
fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let outcomes = [
        criterion(1, "A1 golden tables", secs(1), true, c1_golden),
        criterion(2, "method agreement A2 A3 B2 B3 G2", secs(60), true, c2_methods),
        criterion(3, "reduced-word independence A3 B3 G2", secs(120), true, c3_words),
        criterion(4, "duality A2 A3 B2 G2", secs(60), true, c4_duality),
        criterion(5, "A0 image of stable rows A2 B2", secs(30), true, c5_a0),
        criterion(6, "mod h^2 degeneration A2 A3 B2", secs(30), true, c6_mod_h2),
        criterion(7, "parabolic routes, audit and duality", secs(60), true, c7_parabolic),
        criterion(8, "Billey restriction and h -> infinity limit", secs(60), true, c8_billey),
        criterion(9, "G/P Schubert coset constancy", secs(30), true, c9_cosets),
        criterion(10, "B3 table and F4 sampled entries", secs(660), false, c10_bench),
    ];
    let failed: Vec<usize> = outcomes.iter().filter(|o| o.gating && !o.passed).map(|o| o.id).collect();
    if failed.is_empty() {
        println!("acceptance: all gating criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: gating criteria failed: {failed:?}");
        ExitCode::FAILURE
    }
}
