use crate::cartan::Family;
use crate::scalars::{q_binomial, structure_coeff, Scalar, UnitMonomial};
use crate::superalg::{sym_over, Algebra, Element, Gen, Style};

use super::kappa::kappa_hat;
use super::{Presentation, PresentationError, Relation};

/// Loop indices `r` in `[-w, w]` with `(i, r)` in the index set.
pub fn loop_values(alg: &Algebra, i: usize, w: i32) -> Vec<i32> {
    let loops = alg.datum().loop_set();
    (-w..=w).filter(|&r| loops.contains(i, r)).collect()
}

/// Nondecreasing tuples of length `len` drawn from `values`.
fn multisets(values: &[i32], len: usize) -> Vec<Vec<i32>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (k, &v) in values.iter().enumerate() {
        for mut rest in multisets(&values[k..], len - 1) {
            rest.insert(0, v);
            out.push(rest);
        }
    }
    out
}

struct Ctx<'a> {
    alg: &'a Algebra,
    w: i32,
}

impl Ctx<'_> {
    fn xi(&self, sign: i32, i: usize, r: i32) -> Element {
        self.alg.gen(Gen::xi(sign, i, r))
    }

    fn ok(&self, i: usize, r: i32) -> bool {
        r.abs() <= self.w && self.alg.datum().loop_set().contains(i, r)
    }

    fn unit(&self, u: UnitMonomial) -> Scalar {
        Scalar::from(u)
    }

    /// `[x, y]_a` for parity-homogeneous generators (cannot fail).
    fn br(&self, x: &Element, y: &Element, a: UnitMonomial) -> Element {
        self.alg.super_bracket(x, y, &self.unit(a)).expect("homogeneous operands")
    }

    /// `sym_{r_1..r_l} Σ_k (±1)^k [l k]_z ξ_{i,r_1}…ξ_{i,r_k} ξ_{j,s} ξ_{i,r_{k+1}}…ξ_{i,r_l}`.
    #[allow(clippy::too_many_arguments)]
    fn serre_sum(&self, sign: i32, i: usize, j: usize, s: i32, rs: &[i32], z: UnitMonomial, alternating: bool) -> Element {
        let l = rs.len();
        let alg = self.alg;
        let coeffs: Vec<Scalar> = (0..=l)
            .map(|k| {
                let c = q_binomial(l as u32, k as i64, z).expect("valid Serre base");
                if alternating && k % 2 == 1 {
                    -c
                } else {
                    c
                }
            })
            .collect();
        sym_over(alg.zero(), rs, |perm| {
            let mut acc = alg.zero();
            for (k, c) in coeffs.iter().enumerate() {
                let mut factors: Vec<Element> = perm[..k].iter().map(|&r| self.xi(sign, i, r)).collect();
                factors.push(self.xi(sign, j, s));
                factors.extend(perm[k..].iter().map(|&r| self.xi(sign, i, r)));
                acc.add_scaled(&alg.product(factors.iter()), c);
            }
            acc
        })
    }
}

fn qq(alg: &Algebra) -> Scalar {
    let b = alg.base();
    &Scalar::from(b.pow(2)) - &Scalar::from(b.pow(-2))
}

/// The Drinfeld catalogue of `U^D_q(g)` or `U^D_t(g')` with every loop index
/// in `[-w, w]`.
pub fn drinfeld_relations(family: Family, n: usize, w: i32, smash: bool) -> Result<Presentation, PresentationError> {
    if w < 2 {
        return Err(PresentationError::WindowTooSmall(w));
    }
    let alg = Algebra::new(family, n, Style::Drinfeld, smash)?;
    let mut rels = Vec::new();
    let cx = Ctx { alg: &alg, w };
    structural(&cx, &mut rels)?;
    hx(&cx, &mut rels)?;
    hh(&cx, &mut rels)?;
    xx(&cx, &mut rels)?;
    xrs(&cx, &mut rels);
    serre(&cx, &mut rels);
    Ok(Presentation { algebra: alg, window: Some(w), relations: rels })
}

fn structural(cx: &Ctx, rels: &mut Vec<Relation>) -> Result<(), PresentationError> {
    let alg = cx.alg;
    let n = alg.rank();
    let d = alg.datum();
    let g = |x: Gen| alg.gen(x);
    let half = alg.mul(&g(Gen::gamma_half()), &g(Gen::gamma_half_inv())) - alg.one();
    rels.push(Relation::structural("gamma-inv", vec![], half));
    for i in 1..=n {
        let ii = i as i32;
        rels.push(Relation::structural("gamma-inv", vec![("i", ii)], alg.mul(&g(Gen::gamma(i)), &g(Gen::gamma_inv(i))) - alg.one()));
        rels.push(Relation::structural("gamma-central", vec![("i", ii)], alg.bracket(&g(Gen::gamma_half()), &g(Gen::gamma(i)))?));
        for j in 1..=n {
            if i < j {
                rels.push(Relation::structural("gamma-comm", vec![("i", ii), ("j", j as i32)], alg.bracket(&g(Gen::gamma(i)), &g(Gen::gamma(j)))?));
            }
            for s in loop_values(alg, j, cx.w) {
                for sign in [1, -1] {
                    let x = g(Gen::xi(sign, j, s));
                    let a = Scalar::from(d.q_pow_a(i, j).pow(sign));
                    let conj = alg.product([&g(Gen::gamma(i)), &x, &g(Gen::gamma_inv(i))]) - x.scale(&a);
                    rels.push(Relation::structural("gamma-conj", vec![("i", ii), ("j", j as i32), ("s", s), ("sign", sign)], conj));
                }
            }
        }
        for s in loop_values(alg, i, cx.w) {
            for sign in [1, -1] {
                let x = g(Gen::xi(sign, i, s));
                rels.push(Relation::structural("gamma-central", vec![("i", ii), ("s", s), ("sign", sign)], alg.bracket(&g(Gen::gamma_half()), &x)?));
            }
        }
    }
    if alg.is_smash() {
        for i in 1..=n {
            let s = alg.sigma(1 << i);
            rels.push(Relation::structural("sigma-sq", vec![("i", i as i32)], alg.mul(&s, &s) - alg.one()));
        }
    }
    Ok(())
}

fn hx(cx: &Ctx, rels: &mut Vec<Relation>) -> Result<(), PresentationError> {
    let alg = cx.alg;
    let n = alg.rank();
    let qq = qq(alg);
    for i in 1..=n {
        for r in loop_values(alg, i, cx.w).into_iter().filter(|&r| r != 0) {
            for j in 1..=n {
                let u = structure_coeff(alg.datum(), i, j, r);
                for s in loop_values(alg, j, cx.w) {
                    if !u.is_zero() && !cx.ok(j, s + r) {
                        continue;
                    }
                    for sign in [1, -1] {
                        let mut rel = alg.bracket(&alg.gen(Gen::kappa(i, r)), &cx.xi(sign, j, s))?;
                        if !u.is_zero() {
                            // ξ⁻ carries the opposite sign; without it γ_i = γ_i⁻¹ follows
                            let c = &u / &(&Scalar::from_int((sign * r) as i64) * &qq);
                            let rhs = alg.mul(&alg.gamma_half_pow(-sign * r.abs()), &cx.xi(sign, j, s + r));
                            rel.add_scaled(&rhs, &-c);
                        }
                        let params = vec![("i", i as i32), ("j", j as i32), ("r", r), ("s", s), ("sign", sign)];
                        rels.push(Relation::new("hx", params, alg.reduce(&rel)));
                    }
                }
            }
        }
    }
    Ok(())
}

fn hh(cx: &Ctx, rels: &mut Vec<Relation>) -> Result<(), PresentationError> {
    let alg = cx.alg;
    let n = alg.rank();
    let qq = qq(alg);
    let keys: Vec<(usize, i32)> = (1..=n)
        .flat_map(|i| loop_values(alg, i, cx.w).into_iter().filter(|&r| r != 0).map(move |r| (i, r)))
        .collect();
    for (a, &(i, r)) in keys.iter().enumerate() {
        for &(j, s) in &keys[a + 1..] {
            let mut rel = alg.bracket(&alg.gen(Gen::kappa(i, r)), &alg.gen(Gen::kappa(j, s)))?;
            if r + s == 0 {
                let u = structure_coeff(alg.datum(), i, j, r);
                let c = &u / &(&Scalar::from_int(r as i64) * &(&qq * &qq));
                let g = alg.gamma_half_pow(2 * r) - alg.gamma_half_pow(-2 * r);
                rel.add_scaled(&g, &-c);
            }
            let params = vec![("i", i as i32), ("j", j as i32), ("r", r), ("s", s)];
            rels.push(Relation::new("hh", params, alg.reduce(&rel)));
        }
    }
    Ok(())
}

fn xx(cx: &Ctx, rels: &mut Vec<Relation>) -> Result<(), PresentationError> {
    let alg = cx.alg;
    let n = alg.rank();
    let inv_qq = qq(alg).inv().expect("nonzero");
    for i in 1..=n {
        for j in 1..=n {
            for r in loop_values(alg, i, cx.w) {
                for s in loop_values(alg, j, cx.w) {
                    let m = r + s;
                    if i == j && m.abs() > cx.w {
                        continue;
                    }
                    let mut rel = alg.bracket(&cx.xi(1, i, r), &cx.xi(-1, j, s))?;
                    if i == j {
                        let plus = alg.mul(&alg.gamma_half_pow(r - s), &kappa_hat(alg, 1, i, m, cx.w)?);
                        let minus = alg.mul(&alg.gamma_half_pow(s - r), &kappa_hat(alg, -1, i, m, cx.w)?);
                        rel.add_scaled(&(plus - minus), &-inv_qq.clone());
                    }
                    let params = vec![("i", i as i32), ("j", j as i32), ("r", r), ("s", s)];
                    rels.push(Relation::new("xx", params, alg.reduce(&rel)));
                }
            }
        }
    }
    Ok(())
}

fn xrs(cx: &Ctx, rels: &mut Vec<Relation>) {
    let alg = cx.alg;
    let n = alg.rank();
    let d = alg.datum();
    let skip_top = matches!(alg.family(), Family::Osp1 | Family::A2n2);
    for i in 1..=n {
        for j in i..=n {
            if skip_top && i == n && j == n {
                continue;
            }
            let theta = d.theta(i, j);
            let a = d.q_pow_a(i, j);
            for r in loop_values(alg, i, cx.w) {
                for s in loop_values(alg, j, cx.w) {
                    if i == j && s < r {
                        continue;
                    }
                    for sign in [1, -1] {
                        let (r2, s2) = (r + sign * theta, s + sign * theta);
                        if !cx.ok(i, r2) || !cx.ok(j, s2) {
                            continue;
                        }
                        let t1 = cx.br(&cx.xi(sign, i, r2), &cx.xi(sign, j, s), a);
                        let t2 = cx.br(&cx.xi(sign, j, s2), &cx.xi(sign, i, r), a);
                        let params = vec![("i", i as i32), ("j", j as i32), ("r", r), ("s", s), ("sign", sign)];
                        rels.push(Relation::new("xrs", params, t1 + t2));
                    }
                }
            }
        }
    }
}

fn serre(cx: &Ctx, rels: &mut Vec<Relation>) {
    let alg = cx.alg;
    let n = alg.rank();
    let d = alg.datum();
    let family = alg.family();
    let dual = !family.is_super();
    // pairs (i, j, ℓ, base, alternating, name)
    let mut sums: Vec<(usize, usize, usize, UnitMonomial, bool, &str)> = Vec::new();
    for i in 1..n {
        for j in 1..=n {
            if i != j {
                sums.push((i, j, (1 - d.cartan[i][j]) as usize, d.q_node(i), true, "serre-A"));
            }
        }
    }
    if dual {
        for j in 1..n.saturating_sub(1) {
            sums.push((n, j, (1 - d.cartan[n][j]) as usize, d.q_node(n), true, "serre-A"));
        }
        if family == Family::Bn1 && n >= 2 {
            sums.push((n, n - 1, 3, d.q_node(n), true, "serre-A"));
        }
    } else if family == Family::Sl2 && n >= 2 {
        sums.push((n, n - 1, 3, UnitMonomial::new(1, 0) * d.q_node(n), false, "serre-B"));
    }
    for (i, j, l, z, alternating, name) in sums {
        let ri = loop_values(alg, i, cx.w);
        for s in loop_values(alg, j, cx.w) {
            for rs in multisets(&ri, l) {
                for sign in [1, -1] {
                    let x = cx.serre_sum(sign, i, j, s, &rs, z, alternating);
                    let mut params = vec![("i", i as i32), ("j", j as i32), ("s", s), ("sign", sign)];
                    params.extend(["r1", "r2", "r3", "r4"].into_iter().zip(rs.iter().copied()));
                    rels.push(Relation::new(name, params, x));
                }
            }
        }
    }
    let qn = d.q_node(n);
    let top = loop_values(alg, n, cx.w);
    let xi = |sign, i, r| cx.xi(sign, i, r);
    let names = if dual { ["serre-B1", "serre-B2", "serre-B3"] } else { ["serre-C1", "serre-C2", "serre-C3"] };
    if matches!(family, Family::Osp1 | Family::A2n2) {
        for sign in [1, -1] {
            for rs in multisets(&top, 3) {
                let x = sym_over(alg.zero(), &rs, |p| {
                    if !cx.ok(n, p[0] + sign) {
                        return alg.zero();
                    }
                    let inner = cx.br(&xi(sign, n, p[0] + sign), &xi(sign, n, p[1]), qn.pow(2));
                    cx.br(&inner, &xi(sign, n, p[2]), qn.pow(4))
                });
                if rs.iter().all(|&r| cx.ok(n, r + sign)) {
                    let params = vec![("r1", rs[0]), ("r2", rs[1]), ("r3", rs[2]), ("sign", sign)];
                    rels.push(Relation::new(names[0], params, x));
                }
            }
            for rs in multisets(&top, 2) {
                if !rs.iter().all(|&r| cx.ok(n, r + 2 * sign)) {
                    continue;
                }
                let x = sym_over(alg.zero(), &rs, |p| {
                    let a = cx.br(&xi(sign, n, p[0] + 2 * sign), &xi(sign, n, p[1]), qn.pow(2));
                    let b = cx.br(&xi(sign, n, p[0] + sign), &xi(sign, n, p[1] + sign), qn.pow(-6));
                    a - b.scale(&Scalar::from(qn.pow(4)))
                });
                rels.push(Relation::new(names[1], vec![("r", rs[0]), ("s", rs[1]), ("sign", sign)], x));
            }
            if n >= 2 {
                for k in loop_values(alg, n - 1, cx.w) {
                    for rs in multisets(&top, 2) {
                        if !rs.iter().all(|&r| cx.ok(n, r + sign)) {
                            continue;
                        }
                        let x = sym_over(alg.zero(), &rs, |p| {
                            let a = cx.br(&xi(sign, n, p[0] + sign), &xi(sign, n, p[1]), qn.pow(2));
                            let a = cx.br(&a, &xi(sign, n - 1, k), qn.pow(4)).scale(&Scalar::from(qn.pow(2)));
                            let b = cx.br(&xi(sign, n - 1, k), &xi(sign, n, p[0] + sign), qn.pow(2));
                            let b = cx.br(&b, &xi(sign, n, p[1]), UnitMonomial::new(0, 0));
                            let c = &Scalar::from(qn.pow(2)) + &Scalar::from(qn.pow(-2));
                            a + b.scale(&c)
                        });
                        rels.push(Relation::new(names[2], vec![("k", k), ("r", rs[0]), ("s", rs[1]), ("sign", sign)], x));
                    }
                }
            }
        }
    }
    if matches!(family, Family::Osp22 | Family::Dn12) && n >= 2 {
        let name = if dual { "serre-C" } else { "serre-D" };
        for sign in [1, -1] {
            for k in loop_values(alg, n - 1, cx.w) {
                for rs in multisets(&top, 2) {
                    if !rs.iter().all(|&r| cx.ok(n, r + sign)) {
                        continue;
                    }
                    let x = sym_over(alg.zero(), &rs, |p| {
                        let a = cx.br(&xi(sign, n - 1, k), &xi(sign, n, p[0] + sign), qn.pow(2));
                        cx.br(&a, &xi(sign, n, p[1]), UnitMonomial::new(0, 0))
                    });
                    rels.push(Relation::new(name, vec![("k", k), ("r", rs[0]), ("s", rs[1]), ("sign", sign)], x));
                }
            }
        }
    }
}
