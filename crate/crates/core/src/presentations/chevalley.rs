use crate::cartan::Family;
use crate::scalars::Scalar;
use crate::superalg::{Algebra, Element, Gen, Style};

use super::{Presentation, PresentationError, Relation};

/// `(k_i - k_i^{-1}) / (q_i^{ζ_i} - q_i^{-ζ_i})`.
fn cartan_part(alg: &Algebra, i: usize) -> Element {
    let d = alg.datum();
    let z = d.q_node(i).pow(d.zeta[i] as i32);
    let den = &Scalar::from(z) - &Scalar::from(z.inv());
    let k = alg.gen(Gen::k(i)) - alg.gen(Gen::k_inv(i));
    k.scale(&den.inv().expect("q_i^ζ is not ±1"))
}

/// The Chevalley catalogue of `U_q(g)` or `U_t(g')`, optionally extended by
/// the sign group.
pub fn chevalley_relations(family: Family, n: usize, smash: bool) -> Result<Presentation, PresentationError> {
    let alg = Algebra::new(family, n, Style::Chevalley, smash)?;
    let d = alg.datum().clone();
    let mut rels = Vec::new();
    let g = |x: Gen| alg.gen(x);
    for i in 0..=n {
        let kk = alg.mul(&g(Gen::k(i)), &g(Gen::k_inv(i))) - alg.one();
        rels.push(Relation::structural("k-inv", vec![("i", i as i32)], kk));
        let kk = alg.mul(&g(Gen::k_inv(i)), &g(Gen::k(i))) - alg.one();
        rels.push(Relation::structural("k-inv", vec![("i", i as i32)], kk));
        for j in 0..=n {
            if i < j {
                let c = alg.bracket(&g(Gen::k(i)), &g(Gen::k(j)))?;
                rels.push(Relation::structural("kk", vec![("i", i as i32), ("j", j as i32)], c));
            }
            let a = Scalar::from(d.q_pow_a(i, j));
            let ke = alg.product([&g(Gen::k(i)), &g(Gen::e(j)), &g(Gen::k_inv(i))]) - g(Gen::e(j)).scale(&a);
            rels.push(Relation::structural("ke", vec![("i", i as i32), ("j", j as i32)], ke));
            let a_inv = a.inv().expect("unit");
            let kf = alg.product([&g(Gen::k(i)), &g(Gen::f(j)), &g(Gen::k_inv(i))]) - g(Gen::f(j)).scale(&a_inv);
            rels.push(Relation::structural("kf", vec![("i", i as i32), ("j", j as i32)], kf));
        }
    }
    for i in 0..=n {
        for j in 0..=n {
            let mut ef = alg.bracket(&g(Gen::e(i)), &g(Gen::f(j)))?;
            if i == j {
                ef = ef - cartan_part(&alg, i);
            }
            rels.push(Relation::new("ef", vec![("i", i as i32), ("j", j as i32)], alg.reduce(&ef)));
        }
    }
    for i in 0..=n {
        for j in 0..=n {
            if i == j {
                continue;
            }
            let l = 1 - d.cartan[i][j];
            let params = vec![("i", i as i32), ("j", j as i32)];
            let mut x = g(Gen::e(j));
            let mut y = g(Gen::f(j));
            for _ in 0..l {
                x = alg.ad_e(i, &x)?;
                y = alg.ad_f(i, &y)?;
            }
            rels.push(Relation::new("serre-e", params.clone(), x));
            rels.push(Relation::new("serre-f", params, y));
        }
    }
    if smash {
        for i in 1..=n {
            let s = alg.sigma(1 << i);
            rels.push(Relation::structural("sigma-sq", vec![("i", i as i32)], alg.mul(&s, &s) - alg.one()));
            for j in 0..=n {
                let sign = Scalar::from_int(if d.gram[i][j].rem_euclid(2) == 0 { 1 } else { -1 });
                for x in [Gen::e(j), Gen::f(j)] {
                    let lhs = alg.product([&s, &g(x), &s]);
                    let rel = lhs - g(x).scale(&sign);
                    rels.push(Relation::structural("sigma-act", vec![("i", i as i32), ("j", j as i32)], rel));
                }
                let rel = alg.product([&s, &g(Gen::k(j)), &s]) - g(Gen::k(j));
                rels.push(Relation::structural("sigma-act", vec![("i", i as i32), ("j", j as i32)], rel));
            }
        }
    }
    Ok(Presentation { algebra: alg, window: None, relations: rels })
}
