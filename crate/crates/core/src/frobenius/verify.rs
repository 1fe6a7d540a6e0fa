use super::{build_vq_plus, omega_element, special_elements, AlgebraKind, FrobAlg};
use crate::arith::{int, Rational};
use crate::check::CheckReport;
use crate::riley::orth_polys;
use crate::twobridge::epsilon_seq;

/// Runs the structural checks on a structure-constant table.
///
/// Both kinds get commutativity, the unit axiom, associativity over all basis
/// triples, the diagonal pairing and symmetry of `eta(xy, z)`. The full
/// algebra additionally gets the `e_1` recursion, the special-element
/// identities, `e_n = P_n(e_1)`, and the expressions for `Omega`.
pub fn verify_algebra(v: &FrobAlg) -> CheckReport {
    let mut rep = CheckReport::new(format!("{} {:?}", v.params(), v.kind()));
    let d = v.dim();
    let c = |i, j, k| v.structure_constant(i, j, k);

    let commutative = first_failure(d, |i, j, k| c(i, j, k) == c(j, i, k));
    let is_comm = commutative.is_ok();
    rep.record("commutative", commutative);
    rep.record(
        "unit",
        first_failure(d, |_, j, k| c(0, j, k) == i8::from(j == k)),
    );
    rep.record("associative", associativity(v, is_comm));
    rep.record(
        "pairing_diagonal",
        first_failure(d, |i, j, _| {
            c(i, j, 0) == if i == j { v.eta_diag()[i] } else { 0 }
        }),
    );
    // eps(e_i e_j e_k) = sum_l c_ij^l c_lk^0
    let triple = |i: usize, j: usize, k: usize| -> i32 {
        v.basis_product(i, j)
            .iter()
            .map(|&(l, a)| a as i32 * c(l, k, 0) as i32)
            .sum()
    };
    rep.record(
        "frobenius_symmetric",
        first_failure(d, |i, j, k| {
            let t = triple(i, j, k);
            t == triple(j, k, i) && t == triple(j, i, k)
        }),
    );

    if v.kind() == AlgebraKind::Full {
        full_checks(v, &mut rep);
    }
    rep
}

fn first_failure(d: usize, ok: impl Fn(usize, usize, usize) -> bool) -> Result<(), String> {
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                if !ok(i, j, k) {
                    return Err(format!("at (i, j, k) = ({i}, {j}, {k})"));
                }
            }
        }
    }
    Ok(())
}

/// `(e_i e_j) e_k = e_i (e_j e_k)` with small-integer accumulators. Given
/// commutativity the triples with `i > k` mirror those with `i < k`.
fn associativity(v: &FrobAlg, commutative: bool) -> Result<(), String> {
    let d = v.dim();
    let mut lhs = vec![0i32; d];
    let mut rhs = vec![0i32; d];
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                if commutative && i > k {
                    continue;
                }
                lhs.iter_mut().for_each(|x| *x = 0);
                rhs.iter_mut().for_each(|x| *x = 0);
                for &(l, a) in v.basis_product(i, j) {
                    for &(m, b) in v.basis_product(l, k) {
                        lhs[m] += (a * b) as i32;
                    }
                }
                for &(l, a) in v.basis_product(j, k) {
                    for &(m, b) in v.basis_product(i, l) {
                        rhs[m] += (a * b) as i32;
                    }
                }
                if lhs != rhs {
                    return Err(format!("(e_{i} e_{j}) e_{k} != e_{i} (e_{j} e_{k})"));
                }
            }
        }
    }
    Ok(())
}

fn full_checks(v: &FrobAlg, rep: &mut CheckReport) {
    let p = v.params();
    let seq = epsilon_seq(p);
    let r = p.r() as usize;
    let d = v.dim();

    // e_1 e_n = -eps_n eps_{n+1} e_{n-1} + e_{n+1}
    let recursion = (|| {
        for n in 0..d {
            let mut expect = vec![0i8; d];
            if n >= 1 {
                expect[n - 1] = -seq.eps(n as i64) * seq.eps(n as i64 + 1);
            }
            if n + 1 < d {
                expect[n + 1] = 1;
            }
            let got: Vec<i8> = (0..d).map(|k| v.structure_constant(1, n, k)).collect();
            if got != expect {
                return Err(format!("e_1 e_{n} = {got:?}, expected {expect:?}"));
            }
        }
        Ok(())
    })();
    rep.record("e1_recursion", recursion);

    let Ok(se) = special_elements(v) else {
        rep.push("special_elements", false, "could not form special elements");
        return;
    };
    let one = v.one();
    let minus_one = one.neg();
    let mul =
        |a: &super::AlgElement, b: &super::AlgElement| v.mult(a, b).unwrap_or_else(|_| v.zero());

    rep.record(
        "iota_squared",
        (mul(&se.iota, &se.iota) == minus_one)
            .then_some(())
            .ok_or_else(|| "iota^2 != -1".to_string()),
    );
    let iota_action = (0..d).try_for_each(|n| {
        let sign = if n % 2 == 0 { 1 } else { -1 } * seq.eps(n as i64 + 1);
        let expect = v.basis(r - 2 - n).scale(&int(sign as i64));
        if mul(&se.iota, &v.basis(n)) == expect {
            Ok(())
        } else {
            Err(format!("iota e_{n}"))
        }
    });
    rep.record("iota_action", iota_action);

    if let (Some(y), Some(w)) = (&se.y, &se.w) {
        let xx = mul(&se.x, &se.x);
        let eps2 = int(seq.eps(2) as i64);
        let y_minus = y.sub(&one.scale(&eps2)).unwrap_or_else(|_| v.zero());
        rep.record(
            "x_squared",
            (xx == y_minus)
                .then_some(())
                .ok_or_else(|| "x^2 != y - eps_2".to_string()),
        );
        rep.record(
            "w_squared",
            (mul(w, w) == xx.neg())
                .then_some(())
                .ok_or_else(|| "w^2 != -x^2".to_string()),
        );
    }

    let polys = orth_polys(p);
    let phi = (0..r).try_for_each(|n| {
        let got = v.eval_poly(&polys[n], &se.x).map_err(|e| e.to_string())?;
        let expect = if n < d { v.basis(n) } else { v.zero() };
        if got == expect {
            Ok(())
        } else {
            Err(format!("P_{n}(e_1) != e_{n}"))
        }
    });
    rep.record("phi_compatible", phi);

    let omega = omega_element(v);
    let dp = polys[r - 1].derivative();
    let dp_x = v.eval_poly(&dp, &se.x).unwrap_or_else(|_| v.zero());
    let p_prev = v
        .eval_poly(&polys[r - 2], &se.x)
        .unwrap_or_else(|_| v.zero());
    rep.record(
        "omega_christoffel_darboux",
        (mul(&dp_x, &p_prev).neg() == omega)
            .then_some(())
            .ok_or_else(|| "Omega != -P'(x) P_{r-2}(x)".into()),
    );
    rep.record(
        "omega_iota",
        (mul(&se.iota, &dp_x).neg() == omega)
            .then_some(())
            .ok_or_else(|| "Omega != -iota P'(x)".into()),
    );
    let twice_plus = build_vq_plus(v)
        .and_then(|plus| plus.embed_even(v, &omega_element(&plus)))
        .map(|om| om.scale(&Rational::from_integer(2.into())));
    rep.record(
        "omega_twice_even",
        match twice_plus {
            Ok(t) if t == omega => Ok(()),
            Ok(_) => Err("Omega != 2 Omega^+".into()),
            Err(e) => Err(e.to_string()),
        },
    );
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frobenius::build_vq;
    use crate::twobridge::Params;

    #[test]
    fn small_algebras_pass() {
        for (r, s) in [(3, 1), (5, 1), (5, 3), (7, 3), (9, 7)] {
            let v = build_vq(Params::new(r, s).unwrap());
            let rep = verify_algebra(&v);
            assert!(rep.passed(), "{rep}");
            let plus = build_vq_plus(&v).unwrap();
            assert!(verify_algebra(&plus).passed());
        }
    }

    #[test]
    fn corrupted_table_is_caught() {
        let v = build_vq(Params::new(7, 3).unwrap());
        let bad = v.with_structure_constant(2, 3, 1, -v.structure_constant(2, 3, 1));
        let rep = verify_algebra(&bad);
        assert!(!rep.passed());
        assert!(!rep.get("commutative").unwrap().passed);
        let c = v.structure_constant(2, 2, 2);
        let sym = v.with_structure_constant(2, 2, 2, -c);
        let rep = verify_algebra(&sym);
        assert!(
            !rep.get("associative").unwrap().passed
                || !rep.get("frobenius_symmetric").unwrap().passed
        );
    }
}
