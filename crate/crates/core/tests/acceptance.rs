//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Exits 0 after printing every line; set `QASA_STRICT_ACCEPTANCE=1` to exit 1
//! when any criterion fails.

mod common;

use std::collections::BTreeMap;
use std::time::Instant;

use proptest::prelude::*;
use serde_json::Value;

use qasa::cartan::{build_datum, dual_family, Family};
use qasa::morphisms::{phi_inverse, phi_map, psi_agreement, psi_map, solve_c, CSolution};
use qasa::presentations::{chevalley_relations, drinfeld_relations, kappa_hat};
use qasa::scalars::{o_sign_power, q_binomial, u_coeff, u_prime_coeff, GaussRational, Scalar, UnitMonomial};
use qasa::superalg::{format_element, parse_element, Algebra, Element, Gen, Kind, Style};
use qasa::verify::{check_morphism, check_zero, recombine, Budget, RelationFilter, RelationIndex, Verdict};

use common::{algebras, element, golden, monomial, nonzero_scalar, runner, scalar};

struct Line {
    pass: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Line {
    Line { pass: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Line {
    Line { pass: false, detail: detail.into() }
}

// ---------------------------------------------------------------- oracles

fn fixture(family: Family, n: usize) -> (Vec<Vec<i32>>, Vec<Vec<i32>>) {
    let text = std::fs::read_to_string(golden(&format!("cartan/{}-{n}.json", family.short_name()))).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    let m = |key: &str| serde_json::from_value::<Vec<Vec<i32>>>(v[key].clone()).unwrap();
    (m("gram"), m("cartan"))
}

/// `base^h` with `base = q^{1/2}`, or `t^{1/2} = i q^{1/2}` when `dual`.
fn base_pow(dual: bool, h: i32) -> Scalar {
    let q = Scalar::q_half_pow(h);
    if dual {
        q.scale_gauss(&GaussRational::i_pow(h as i64))
    } else {
        q
    }
}

fn sign(r: i32) -> Scalar {
    Scalar::from_int(if r.rem_euclid(2) == 0 { 1 } else { -1 })
}

/// `u_{i,j,r}` (or `u'_{i,j,r}` for a dual family) straight from the displayed
/// case tables, with `q_i^x = base^{x (α_i, α_i)}`.
fn u_oracle(family: Family, n: usize, i: usize, j: usize, r: i32) -> Scalar {
    let (gram, cartan) = fixture(family, n);
    let dual = !family.is_super();
    // x ↦ q_i^x - q_i^{-x} for x = e / 2
    let diff = |node: usize, twice_x: i32| {
        let h = gram[node][node] * twice_x;
        assert_eq!(h % 2, 0);
        &base_pow(dual, h / 2) - &base_pow(dual, -h / 2)
    };
    let top = i == n && j == n;
    let a = cartan[i][j];
    let generic = || diff(i, 2 * r * a);
    let halved = || &(&Scalar::one() + &sign(r)) * &diff(i, r * a);
    match family {
        Family::Osp1 if top => &diff(n, 8 * r) - &diff(n, 4 * r),
        Family::Osp22 | Family::Sl2 if top => &sign(r) * &diff(n, 4 * r),
        Family::Osp1 | Family::Sl2 | Family::Bn1 => generic(),
        Family::Osp22 | Family::Dn12 => if top { diff(n, 4 * r) } else { halved() },
        Family::A2n2 if top => {
            let plus = &base_pow(true, 2 * r * gram[n][n]) + &base_pow(true, -2 * r * gram[n][n]);
            &diff(n, 4 * r) * &(&plus + &sign(r - 1))
        }
        Family::A2n2 => generic(),
    }
}

fn in_index_set(family: Family, n: usize, i: usize, r: i32) -> bool {
    !(matches!(family, Family::Osp22 | Family::Dn12) && i < n && r.rem_euclid(2) == 1)
}

/// `o(i)^{c r}` with `o(i) = (-1)^{n-i}` and `c = 1/2` only for osp(2|2n)^(2).
fn o_oracle(family: Family, n: usize, i: usize, r: i32) -> Scalar {
    if (n - i) % 2 == 0 {
        return Scalar::one();
    }
    let cr = if family == Family::Osp22 { r / 2 } else { r };
    sign(cr)
}

/// Commutative image of a κ̂ expansion: sorted κ loop indices plus the trailing
/// group-like, mapped to the coefficient.
type Series = BTreeMap<(Vec<i32>, bool), Scalar>;

fn as_series(x: &Element) -> Series {
    let mut out = Series::new();
    for (m, c) in x.terms() {
        let mut idx: Vec<i32> = m.word.iter().filter(|g| g.kind == Kind::Kappa).map(|g| g.loop_index as i32).collect();
        idx.sort();
        let plus = m.word.iter().any(|g| g.kind == Kind::Gamma);
        let e = out.entry((idx, plus)).or_insert_with(Scalar::zero);
        *e = &*e + c;
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Brute-force `γ_i^{±1} exp(±(q_b - q_b^{-1}) Σ_{p>0} κ_{i,±p} u^{∓p})` by
/// summing powers of the exponent, truncated at `order`.
fn kappa_series_oracle(family: Family, n: usize, sgn: i32, i: usize, order: i32) -> Vec<Series> {
    let q = Scalar::q();
    let qq = &q - &q.inv().unwrap();
    // t - t^{-1} = -(q - q^{-1})
    let eps = if family.is_super() { 1 } else { -1 };
    let c = &Scalar::from_int((eps * sgn) as i64) * &qq;
    // polynomials in commuting κ, keyed by sorted index lists
    type Poly = BTreeMap<Vec<i32>, Scalar>;
    let degree = |k: &Vec<i32>| k.iter().map(|r| r.abs()).sum::<i32>();
    let x: Poly = (1..=order)
        .filter(|&p| in_index_set(family, n, i, p))
        .map(|p| (vec![sgn * p], c.clone()))
        .collect();
    let mul = |a: &Poly, b: &Poly| {
        let mut out = Poly::new();
        for (ka, ca) in a {
            for (kb, cb) in b {
                let mut k = [ka.clone(), kb.clone()].concat();
                k.sort();
                if degree(&k) > order {
                    continue;
                }
                let e = out.entry(k).or_insert_with(Scalar::zero);
                *e = &*e + &(ca * cb);
            }
        }
        out
    };
    let mut total: Poly = [(Vec::new(), Scalar::one())].into();
    let mut power: Poly = [(Vec::new(), Scalar::one())].into();
    let mut fact = Scalar::one();
    for k in 1..=order {
        power = mul(&power, &x);
        fact = &fact * &Scalar::from_int(k as i64);
        for (key, v) in &power {
            let e = total.entry(key.clone()).or_insert_with(Scalar::zero);
            *e = &*e + &(v / &fact);
        }
    }
    let mut by_degree = vec![Series::new(); order as usize + 1];
    for (k, v) in total {
        if !v.is_zero() {
            by_degree[degree(&k) as usize].insert((k, sgn > 0), v);
        }
    }
    by_degree
}

// ---------------------------------------------------------------- criteria

fn c1_u_compatibility() -> Line {
    let mut checked = 0;
    for fam in Family::SUPER {
        let dual = dual_family(fam).unwrap();
        for n in 1..=3 {
            let d = build_datum(fam, n).unwrap();
            let dd = build_datum(dual, n).unwrap();
            for i in 1..=n {
                for j in 1..=n {
                    for r in (-6..=6).filter(|&r| r != 0) {
                        if !in_index_set(fam, n, i, r) || !in_index_set(fam, n, j, r) {
                            continue;
                        }
                        let u = u_coeff(&d, i, j, r);
                        let up = u_prime_coeff(&dd, i, j, r);
                        if u != u_oracle(fam, n, i, j, r) || up != u_oracle(dual, n, i, j, r) {
                            return fail(format!("{fam:?} n={n} ({i},{j},{r}): table disagrees with the displayed formula"));
                        }
                        let o = |k| Scalar::from_gauss(o_sign_power(n, fam, k, r).unwrap());
                        let rhs = &(&o(i) * &o(j)) * &up;
                        let rhs_oracle = &(&o_oracle(fam, n, i, r) * &o_oracle(fam, n, j, r)) * &up;
                        if u != rhs || u != rhs_oracle {
                            return fail(format!("{fam:?} n={n} ({i},{j},{r}): u = {u}, o o u' = {rhs}"));
                        }
                        checked += 1;
                    }
                }
            }
        }
    }
    pass(format!("{checked} exact equalities"))
}

fn c2_sign_identity() -> Line {
    let mut checked = 0;
    for fam in Family::SUPER {
        let dual = dual_family(fam).unwrap();
        for n in 1..=3 {
            let d = build_datum(fam, n).unwrap();
            let dd = build_datum(dual, n).unwrap();
            for i in 1..=n {
                for j in 1..=n {
                    for s in [1, -1] {
                        let a = s * dd.cartan[i][j];
                        let lhs = UnitMonomial::sign(dd.gram[i][j].rem_euclid(2) == 1) * dd.q_node(i).pow(a);
                        if lhs != d.q_node(i).pow(a) {
                            return fail(format!("{dual:?} n={n} ({i},{j})"));
                        }
                        checked += 1;
                    }
                }
            }
        }
    }
    pass(format!("{checked} unit-monomial equalities"))
}

fn c3_kappa_oracle() -> Line {
    let order = 5;
    let mut checked = 0;
    for fam in Family::ALL {
        for n in 1..=2 {
            let alg = Algebra::new(fam, n, Style::Drinfeld, false).unwrap();
            for i in 1..=n {
                for sgn in [1, -1] {
                    let oracle = kappa_series_oracle(fam, n, sgn, i, order);
                    for m in -order..=order {
                        let got = as_series(&kappa_hat(&alg, sgn, i, m, order).unwrap());
                        let want = if m * sgn < 0 { Series::new() } else { oracle[m.unsigned_abs() as usize].clone() };
                        if got != want {
                            return fail(format!("{fam:?} n={n} i={i} sign={sgn} m={m}"));
                        }
                        checked += 1;
                    }
                }
            }
        }
    }
    pass(format!("{checked} coefficients to order {order}, q and t conventions"))
}

fn c4_psi() -> Line {
    let budget = Budget { max_len: 12, ..Budget::default() };
    let mut total = 0;
    for fam in Family::SUPER {
        for n in 1..=2 {
            let psi = psi_map(fam, n).unwrap();
            let src = chevalley_relations(fam, n, true).unwrap();
            let tgt = chevalley_relations(fam.partner(), n, true).unwrap();
            let r = check_morphism(&psi, &src, &tgt, &RelationFilter::default(), &budget).unwrap();
            if !r.all_verified {
                let bad: Vec<_> = r.instances.iter().filter(|i| i.verdict != "verified").map(|i| i.relation.clone()).collect();
                return fail(format!("{fam:?} n={n}: {bad:?}"));
            }
            total += r.instances.len();
        }
    }
    pass(format!("{total} instances Verified at L = 12"))
}

fn c5_phi() -> Line {
    let budget = Budget { max_len: 12, ..Budget::default() };
    let mut total = 0;
    for fam in Family::SUPER {
        for n in 1..=2 {
            let phi = phi_map(fam, n).unwrap();
            let src = drinfeld_relations(fam, n, 3, true).unwrap();
            let tgt = drinfeld_relations(fam.partner(), n, 3, true).unwrap();
            let r = check_morphism(&phi, &src, &tgt, &RelationFilter::default(), &budget).unwrap();
            if !r.all_verified {
                let bad: Vec<_> = r.instances.iter().filter(|i| i.verdict != "verified").map(|i| i.relation.clone()).collect();
                return fail(format!("{fam:?} n={n}: {bad:?}"));
            }
            total += r.instances.len();
        }
    }
    pass(format!("{total} instances Verified at W = 3, L = 12"))
}

fn c6_round_trips() -> Line {
    for fam in Family::SUPER {
        for n in 1..=3 {
            let phi = phi_map(fam, n).unwrap();
            let back = phi_inverse(fam, n).unwrap().compose(&phi, "id");
            for g in common::alphabet(&phi.source, 2) {
                if back.image(&g).unwrap() != phi.source.gen(g) {
                    return fail(format!("φ⁻¹∘φ moves {g} ({fam:?} n={n})"));
                }
            }
        }
    }
    let mut mismatches = Vec::new();
    for fam in Family::SUPER {
        for n in 1..=2 {
            for a in psi_agreement(fam, n).unwrap() {
                // f_0 carries the symbolic constant, so proportional is enough there
                let ok = if a.gen == Gen::f(0) { a.ratio.is_some() } else { a.exact() };
                if !ok {
                    let ratio = a.ratio.map(|r| r.to_string()).unwrap_or_else(|| "none".into());
                    mismatches.push(format!("{} n={n} {} ratio {ratio}", fam.short_name(), a.gen));
                }
            }
        }
    }
    if mismatches.is_empty() {
        pass("φ⁻¹∘φ = id; both Ψ constructions agree")
    } else {
        fail(format!(
            "φ⁻¹∘φ = id holds; the two Ψ constructions differ by the sign of e_0 (node-0 automorphism): {}",
            mismatches.join("; ")
        ))
    }
}

fn c7_solve_c() -> Line {
    let budget = Budget::default();
    let frozen = Scalar::from_int(-1);
    let mut values = Vec::new();
    for w in [2, 3] {
        match solve_c(Family::Osp22, 1, w, &budget) {
            Ok(CSolution::Solved { c, .. }) => values.push(c),
            Ok(CSolution::Inconclusive) => return fail(format!("osp2-2 n=1 W={w}: inconclusive at the default budget")),
            Err(e) => return fail(format!("osp2-2 n=1 W={w}: {e}")),
        }
    }
    if values.iter().all(|c| *c == frozen) {
        pass("osp(2|2)^(2): c = -1 at W = 2 and W = 3 (L = 12)")
    } else {
        fail(format!("values {:?}", values.iter().map(ToString::to_string).collect::<Vec<_>>()))
    }
}

fn c8_infrastructure() -> Line {
    let run = |name: &str, r: Result<(), String>| r.map_err(|e| format!("{name}: {e}"));
    let prop = |cases, f: &dyn Fn(&mut proptest::test_runner::TestRunner) -> Result<(), String>| f(&mut runner(cases));
    let result = (|| -> Result<(usize, usize), String> {
        run("field axioms", prop(48, &|r| {
            r.run(&(scalar(), scalar(), nonzero_scalar()), |(a, b, c)| {
                prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
                prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                prop_assert!((&c * &c.inv().unwrap()).is_one());
                prop_assert_eq!(&(&a * &c) / &c, a);
                Ok(())
            })
            .map_err(|e| e.to_string())
        }))?;
        for z in [UnitMonomial::q(), UnitMonomial::t_half()] {
            for big in 1..=8u32 {
                for k in 1..big as i64 {
                    let a = &Scalar::from(z.pow(-(k as i32))) * &q_binomial(big - 1, k, z).unwrap();
                    let b = &Scalar::from(z.pow(big as i32 - k as i32)) * &q_binomial(big - 1, k - 1, z).unwrap();
                    if q_binomial(big, k, z).unwrap() != &a + &b {
                        return Err(format!("q-Pascal fails at N={big}, k={k}"));
                    }
                }
            }
        }
        for alg in algebras().into_iter().step_by(3) {
            run("associativity", prop(4, &|r| {
                r.run(&(element(&alg, 2, 3), element(&alg, 2, 3), element(&alg, 2, 3)), |(a, b, c)| {
                    prop_assert_eq!(alg.mul(&alg.mul(&a, &b), &c), alg.mul(&a, &alg.mul(&b, &c)));
                    let s = alg.sigma(0b10);
                    prop_assert_eq!(alg.product([&s, &s, &a]), a.clone());
                    Ok(())
                })
                .map_err(|e| e.to_string())
            }))?;
            run("parity/weight", prop(8, &|r| {
                r.run(&(monomial(&alg, 4), monomial(&alg, 4)), |(a, b)| {
                    let (_, ab) = alg.mul_monomials(&a, &b);
                    prop_assert_eq!(alg.monomial_parity(&ab), alg.monomial_parity(&a) ^ alg.monomial_parity(&b));
                    let w: Vec<i32> = alg.monomial_weight(&a).iter().zip(alg.monomial_weight(&b)).map(|(x, y)| x + y).collect();
                    prop_assert_eq!(alg.monomial_weight(&ab), w);
                    Ok(())
                })
                .map_err(|e: proptest::test_runner::TestError<_>| e.to_string())
            }))?;
        }
        let phi = phi_map(Family::Sl2, 1).unwrap();
        let src = drinfeld_relations(Family::Sl2, 1, 2, true).unwrap();
        let tgt = drinfeld_relations(Family::Bn1, 1, 2, true).unwrap();
        let tidx = RelationIndex::new(&tgt);
        let mut certs = 0;
        for rel in src.working() {
            let img = phi.apply(&rel.element).unwrap();
            if let Verdict::Verified { certificate } = check_zero(&img, &tidx, &Budget::default()) {
                if recombine(&tidx, &certificate) != tidx.algebra.reduce(&img) {
                    return Err(format!("certificate for {rel} does not recombine"));
                }
                certs += 1;
            }
        }
        let text = std::fs::read_to_string(golden("expressions.txt")).unwrap();
        let mut corpus = 0;
        for line in text.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()) {
            let (head, expr) = line.split_once(" | ").unwrap();
            let f: Vec<&str> = head.split_whitespace().collect();
            let style = if f[2] == "chevalley" { Style::Chevalley } else { Style::Drinfeld };
            let alg = Algebra::new(f[0].parse().unwrap(), f[1].parse().unwrap(), style, true).unwrap();
            let x = parse_element(&alg, expr).map_err(|e| format!("{line}: {e}"))?;
            if format_element(&x) != expr {
                return Err(format!("round trip changed {expr}"));
            }
            corpus += 1;
        }
        Ok((certs, corpus))
    })();
    match result {
        Ok((certs, corpus)) => pass(format!("{certs} certificates self-checked, {corpus} corpus lines round-trip")),
        Err(e) => fail(e),
    }
}

fn main() {
    let criteria: [(&str, fn() -> Line); 8] = [
        ("u-compatibility", c1_u_compatibility),
        ("sign identity", c2_sign_identity),
        ("κ̂ series oracle", c3_kappa_oracle),
        ("ψ relation preservation", c4_psi),
        ("φ relation preservation", c5_phi),
        ("round trips", c6_round_trips),
        ("solve_c", c7_solve_c),
        ("infrastructure", c8_infrastructure),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let line = f();
        let verdict = if line.pass { "PASS" } else { "FAIL" };
        if !line.pass {
            failed += 1;
        }
        println!("criterion {} {verdict} {name} [{:.1}s] {}", k + 1, t.elapsed().as_secs_f64(), line.detail);
    }
    println!("acceptance: {}/{} criteria pass", criteria.len() - failed, criteria.len());
    let strict = std::env::var("QASA_STRICT_ACCEPTANCE").is_ok_and(|v| v == "1");
    if failed > 0 && strict {
        std::process::exit(1);
    }
}
