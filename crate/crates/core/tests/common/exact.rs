//! Exhaustive checks of the simplex-category core against brute force.

use std::collections::HashMap;

use decomp::delta::{active_inert_pushout, enumerate_active, enumerate_inert, enumerate_maps, factor_active_inert, SimplexMap};

use super::{compose_values, monotone_maps};

pub fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn endpoints_fixed(f: &SimplexMap) -> bool {
    f.values()[0] == 0 && *f.values().last().unwrap() == f.target_rank()
}

pub fn consecutive(f: &SimplexMap) -> bool {
    f.values().windows(2).all(|w| w[1] == w[0] + 1)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Enumerations agree with brute force and with the closed-form counts.
pub fn enumeration(max_rank: usize) -> Result<(), String> {
    for n in 0..=max_rank {
        for m in 0..=max_rank {
            let all = monotone_maps(n, m);
            ensure(enumerate_maps(n, m) == all, || format!("maps [{n}]->[{m}]"))?;
            ensure(all.len() == binomial(n + m + 1, n + 1), || format!("count [{n}]->[{m}]"))?;
            let active: Vec<_> = all.iter().filter(|f| endpoints_fixed(f)).cloned().collect();
            let inert: Vec<_> = all.iter().filter(|f| consecutive(f)).cloned().collect();
            ensure(enumerate_active(n, m) == active, || format!("active [{n}]->[{m}]"))?;
            ensure(enumerate_inert(n, m) == inert, || format!("inert [{n}]->[{m}]"))?;
            let expected_inert = if m >= n { m - n + 1 } else { 0 };
            ensure(inert.len() == expected_inert, || format!("{} inert maps [{n}]->[{m}]", inert.len()))?;
            let expected_active = match n {
                0 => usize::from(m == 0),
                _ => binomial(m + n - 1, n - 1),
            };
            ensure(active.len() == expected_active, || format!("{} active maps [{n}]->[{m}]", active.len()))?;
        }
    }
    Ok(())
}

/// Every map has exactly one (active, inert) factorization through any middle rank.
pub fn factorization_uniqueness(max_rank: usize) -> Result<(), String> {
    for n in 0..=max_rank {
        for m in 0..=max_rank {
            for f in monotone_maps(n, m) {
                let (active, inert) = factor_active_inert(&f);
                ensure(endpoints_fixed(&active) && consecutive(&inert), || format!("factor classes of {f}"))?;
                ensure(compose_values(&inert, &active) == f, || format!("factors of {f} do not recompose"))?;
                let mut found = Vec::new();
                for p in 0..=m {
                    for a in monotone_maps(n, p).into_iter().filter(endpoints_fixed) {
                        for i in monotone_maps(p, m).into_iter().filter(consecutive) {
                            if compose_values(&i, &a) == f {
                                found.push((a.clone(), i));
                            }
                        }
                    }
                }
                ensure(found == vec![(active, inert)], || format!("{} factorizations of {f}", found.len()))?;
            }
        }
    }
    Ok(())
}

/// The mediating map out of the pushout, found pointwise, or `None` when the
/// constraints clash or are not monotone.
fn mediating(theta: &SimplexMap, phi: &SimplexMap, u: &SimplexMap, v: &SimplexMap) -> Option<SimplexMap> {
    let mut w: HashMap<usize, usize> = HashMap::new();
    for (leg, cone) in [(theta, u), (phi, v)] {
        for (t, &x) in leg.values().iter().enumerate() {
            if *w.entry(x).or_insert(cone.values()[t]) != cone.values()[t] {
                return None;
            }
        }
    }
    let values: Vec<usize> = (0..=theta.target_rank()).map(|x| w[&x]).collect();
    SimplexMap::new(values, u.target_rank()).ok()
}

/// Active-inert pushouts commute, have the right classes and rank, and every
/// cone into `[q]` (q up to the rank bound) factors uniquely through them.
pub fn pushout_universality(max_rank: usize) -> Result<(), String> {
    for n in 0..=max_rank {
        for m in 0..=max_rank {
            for k in n..=max_rank {
                for alpha in monotone_maps(n, m).into_iter().filter(endpoints_fixed) {
                    for iota in monotone_maps(n, k).into_iter().filter(consecutive) {
                        let (theta, phi) = active_inert_pushout(&alpha, &iota).map_err(|e| e.to_string())?;
                        let p = k + m - n;
                        let square = || format!("pushout of {alpha} along {iota}");
                        ensure(theta.target_rank() == p, square)?;
                        ensure(consecutive(&theta) && endpoints_fixed(&phi), square)?;
                        ensure(compose_values(&theta, &alpha) == compose_values(&phi, &iota), square)?;
                        // jointly surjective legs make mediating maps unique
                        let mut hit = vec![false; p + 1];
                        theta.values().iter().chain(phi.values()).for_each(|&x| hit[x] = true);
                        ensure(hit.iter().all(|&h| h), square)?;
                        for q in 0..=max_rank {
                            let vs = monotone_maps(k, q);
                            for u in monotone_maps(m, q) {
                                let ua = compose_values(&u, &alpha);
                                for v in vs.iter().filter(|v| compose_values(v, &iota) == ua) {
                                    let w = mediating(&theta, &phi, &u, v)
                                        .ok_or_else(|| format!("{}: no mediating map for {u}, {v}", square()))?;
                                    ensure(compose_values(&w, &theta) == u && compose_values(&w, &phi) == *v, square)?;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}
