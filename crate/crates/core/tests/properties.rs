use nalgebra::DMatrix;
use num_traits::ToPrimitive;
use proptest::prelude::*;

use vr_core::arith::{int, RatMatrix, RatPoly};
use vr_core::numberfield::{
    factor_over_q, factor_over_q_seeded, is_squarefree, routh_rhp_count, sturm_real_roots,
    symmetric_signature,
};
use vr_core::riley::{orth_polys, wirtinger_product};
use vr_core::tqft::{surface_signature, SurfaceSpec};
use vr_core::twobridge::{epsilon_seq, Params};

fn params() -> impl Strategy<Value = Params> {
    (1u32..16, 0u32..32).prop_filter_map("coprime", |(k, j)| {
        let r = 2 * k + 1;
        Params::new(r as i64, (2 * (j % k.max(1)) + 1) as i64).ok()
    })
}

fn int_poly(max_deg: usize) -> impl Strategy<Value = RatPoly> {
    (prop::collection::vec(-12i64..=12, 1..=max_deg), 1i64..=4).prop_map(|(mut c, lc)| {
        c.push(lc);
        RatPoly::from_ints(&c)
    })
}

/// `(real roots, roots with positive real part, roots near the imaginary axis)`
/// from the companion matrix.
fn eigen_counts(f: &RatPoly) -> (usize, usize, usize) {
    let n = f.degree().unwrap();
    let lc = f.lc().unwrap().to_f64().unwrap();
    let m = DMatrix::from_fn(n, n, |i, j| {
        if j == n - 1 {
            -f.coeff(i).to_f64().unwrap() / lc
        } else if i == j + 1 {
            1.0
        } else {
            0.0
        }
    });
    let eig = m.complex_eigenvalues();
    let real = eig
        .iter()
        .filter(|z| z.im.abs() < 1e-7 * z.norm().max(1.0))
        .count();
    let rhp = eig
        .iter()
        .filter(|z| z.re > 1e-7 * z.norm().max(1.0))
        .count();
    let axis = eig
        .iter()
        .filter(|z| z.re.abs() <= 1e-6 * z.norm().max(1.0))
        .count();
    (real, rhp, axis)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn factorization_expands_and_is_idempotent(fs in prop::collection::vec(int_poly(4), 1..4), seed in any::<u64>()) {
        let f = fs.iter().fold(RatPoly::one(), |acc, g| &acc * g);
        let fac = factor_over_q_seeded(&f, seed).unwrap();
        prop_assert_eq!(fac.expand(), f.clone());
        prop_assert_eq!(fac.degrees(), factor_over_q(&f).unwrap().degrees());
        for (g, _) in &fac.factors {
            let again = factor_over_q(g).unwrap();
            prop_assert!(again.is_irreducible());
        }
    }

    #[test]
    fn sturm_matches_eigenvalues(f in int_poly(10)) {
        prop_assume!(is_squarefree(&f));
        let (real, _, _) = eigen_counts(&f);
        prop_assert_eq!(sturm_real_roots(&f).unwrap(), real);
    }

    #[test]
    fn routh_matches_eigenvalues(f in int_poly(8)) {
        let (_, rhp, axis) = eigen_counts(&f);
        prop_assume!(axis == 0);
        // zero rows come from roots symmetric about the origin
        if let Some(n) = routh_rhp_count(&f) {
            prop_assert_eq!(n, rhp);
        }
    }

    #[test]
    fn planted_signature(diag in prop::collection::vec(prop_oneof![-5i64..=-1, 1i64..=5], 1..7),
                         mix in prop::collection::vec(-3i64..=3, 49)) {
        let n = diag.len();
        let mut u = RatMatrix::identity(n);
        for i in 0..n {
            for j in (i + 1)..n {
                u.set(i, j, int(mix[i * 7 + j]));
            }
        }
        let mut d = RatMatrix::zeros(n, n);
        for (i, &x) in diag.iter().enumerate() {
            d.set(i, i, int(x));
        }
        let m = u.transpose().mul(&d).unwrap().mul(&u).unwrap();
        let planted: i64 = diag.iter().map(|x| x.signum()).sum();
        prop_assert_eq!(symmetric_signature(&m).unwrap(), (planted, n));
    }

    #[test]
    fn orth_poly_parity(p in params()) {
        for (n, f) in orth_polys(p).iter().enumerate() {
            prop_assert_eq!(f.degree(), Some(n));
            prop_assert!(f.is_monic());
            let parity = if n % 2 == 0 { f.is_even_poly() } else { f.is_odd_poly() };
            prop_assert!(parity, "P_{} = {}", n, f);
        }
    }

    #[test]
    fn wirtinger_det_is_one(p in params()) {
        let det = wirtinger_product(p).det();
        prop_assert_eq!(det.to_rat(), RatPoly::one());
    }

    #[test]
    fn surface_signature_is_symmetric(p in params(), g in 0u32..3, picks in prop::collection::vec(0usize..64, 1..5)) {
        let top = p.r() as usize - 2;
        let colors: Vec<usize> = picks.iter().map(|c| c % (top + 1)).collect();
        let spec = |c: Vec<usize>| SurfaceSpec { genus: g, colors: c, so3: false };
        let base = surface_signature(p, &spec(colors.clone())).unwrap();
        let mut rev = colors.clone();
        rev.reverse();
        prop_assert_eq!(&surface_signature(p, &spec(rev)).unwrap(), &base);
        let mut rot = colors;
        rot.rotate_left(1);
        prop_assert_eq!(surface_signature(p, &spec(rot)).unwrap(), base);
    }

    #[test]
    fn sign_sequence_is_palindromic(p in params()) {
        let seq = epsilon_seq(p);
        for n in 1..p.r() as i64 {
            prop_assert_eq!(seq.eps(n), seq.eps(p.r() as i64 - n));
        }
    }
}
